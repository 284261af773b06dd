"""Abstract base for compact connected Lie group descriptors."""

from abc import ABC, abstractmethod
from functools import cached_property
from typing import Dict, List, Sequence, Tuple

from scripts.biquotient.algebra.element import Element
from scripts.biquotient.algebra.free_cga import FreeCGA, GeneratorDecl
from scripts.biquotient.errors import UnsupportedGroup


def elementary_symmetric(values: Sequence[Element], algebra: FreeCGA) -> List[Element]:
    """[σ_0, σ_1, ..., σ_r] of the given elements."""
    sigma = [Element.scalar(algebra, 1)] + [Element.zero(algebra)] * len(values)
    for x in values:
        for j in range(len(values), 0, -1):
            sigma[j] = sigma[j] + sigma[j - 1] * x
    return sigma


class BaseGroup(ABC):
    """Rational data of a group: H(BG), its primitives, and the map to the maximal torus.

    A descriptor may be decorated for use as a factor of a product: `primes`
    is appended to every classifying and primitive name, and the torus
    coordinates start at t{torus_offset + 1}.
    """

    def __init__(self, primes: int = 0, torus_offset: int = 0):
        self.primes = primes
        self.torus_offset = torus_offset

    @property
    @abstractmethod
    def family(self) -> str:
        """One of SO-even, SO-odd, Spin-even, Spin-odd, U, SU, Sp, Torus, Product."""

    @property
    @abstractmethod
    def code(self) -> str:
        """Catalog code, e.g. 'SO(4)'."""

    @property
    @abstractmethod
    def torus_rank(self) -> int:
        ...

    @property
    @abstractmethod
    def dimension(self) -> int:
        ...

    @abstractmethod
    def _generators(self) -> List[Tuple[str, int]]:
        """Undecorated (name, degree) of the classifying generators."""

    @abstractmethod
    def _torus_images(self, coords: List[Element]) -> Dict[str, Element]:
        """Undecorated generator name -> symmetric polynomial in the torus coordinates."""

    # ── Naming ──────────────────────────────────────────────────────────────

    def decorate(self, name: str) -> str:
        return name + "'" * self.primes

    @property
    def euler_names(self) -> Tuple[str, ...]:
        return ()

    def primitive_name(self, name: str, degree: int) -> str:
        stem = "eta" if self.decorate(name) in self.euler_names else "z"
        return self.decorate(f"{stem}{degree - 1}")

    # ── Rings ───────────────────────────────────────────────────────────────

    @cached_property
    def classifying_generators(self) -> Tuple[GeneratorDecl, ...]:
        return tuple(GeneratorDecl(self.decorate(name), deg) for name, deg in self._generators())

    @cached_property
    def classifying_ring(self) -> FreeCGA:
        return FreeCGA(self.classifying_generators)

    @property
    def torus_names(self) -> Tuple[str, ...]:
        return tuple(f"t{self.torus_offset + i + 1}" for i in range(self.torus_rank))

    @cached_property
    def torus_ring(self) -> FreeCGA:
        return FreeCGA.from_degrees((t, 2) for t in self.torus_names)

    def torus_coordinates(self) -> List[Element]:
        return [self.torus_ring.gen(t) for t in self.torus_names]

    @cached_property
    def torus_images(self) -> Dict[str, Element]:
        images = self._torus_images(self.torus_coordinates())
        return {self.decorate(name): value for name, value in images.items()}

    # ── Primitives and transgression ───────────────────────────────────────

    @cached_property
    def primitive_generators(self) -> Tuple[GeneratorDecl, ...]:
        return tuple(
            GeneratorDecl(self.primitive_name(g.name.rstrip("'"), g.degree), g.degree - 1)
            for g in self.classifying_generators
        )

    @property
    def primitive_degrees(self) -> List[int]:
        return [g.degree for g in self.primitive_generators]

    @cached_property
    def transgression(self) -> Dict[str, str]:
        """Primitive name -> the classifying generator it transgresses to."""
        return {
            z.name: g.name for z, g in zip(self.primitive_generators, self.classifying_generators)
        }

    # ── Characteristic classes ─────────────────────────────────────────────

    def total_class(self) -> Element:
        """1 + Σ generators of the Pontrjagin/Chern/symplectic family, as an inhomogeneous element."""
        raise UnsupportedGroup(f"{self.code} has no total characteristic class in the catalog")

    @property
    def factors(self) -> List["BaseGroup"]:
        return [self]

    def decorated(self, primes: int, torus_offset: int) -> "BaseGroup":
        clone = self.__class__.__new__(self.__class__)
        clone.__dict__.update({k: v for k, v in self.__dict__.items() if not _is_cached(self, k)})
        clone.primes = primes
        clone.torus_offset = torus_offset
        return clone

    # ── Identity ────────────────────────────────────────────────────────────

    def _key(self) -> Tuple:
        return (type(self).__name__, self.code, self.primes, self.torus_offset)

    def __eq__(self, other) -> bool:
        if not isinstance(other, BaseGroup):
            return NotImplemented
        return self._key() == other._key()

    def __hash__(self) -> int:
        return hash(self._key())

    def __str__(self) -> str:
        return self.code

    def __repr__(self) -> str:
        return f"<{type(self).__name__} {self.code}{chr(39) * self.primes}>"


def _is_cached(obj, attr: str) -> bool:
    return isinstance(getattr(type(obj), attr, None), cached_property)
