"""Free graded-commutative algebras: exterior on odd generators, polynomial on even ones.

A monomial is a tuple of exponents aligned with the algebra's generator order.
Odd exponents are 0 or 1, and the odd factors of a monomial are always read in
declaration order; any Koszul sign lives in the coefficient of the containing
Element.
"""

import re
from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from scripts.biquotient.config import CACHE_SIZE
from scripts.biquotient.errors import AlgebraError

Monomial = Tuple[int, ...]

_NAME_RE = re.compile(r"^[A-Za-z][A-Za-z0-9_']*$")


@dataclass(frozen=True)
class GeneratorDecl:
    name: str
    degree: int

    def __post_init__(self):
        if not _NAME_RE.match(self.name):
            raise AlgebraError(f"Invalid generator name: {self.name!r}")
        if self.degree < 1:
            raise AlgebraError(f"Generator {self.name} has degree {self.degree}; degrees must be >= 1")

    @property
    def is_odd(self) -> bool:
        return self.degree % 2 == 1


@dataclass(frozen=True)
class FreeCGA:
    generators: Tuple[GeneratorDecl, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "generators", tuple(self.generators))
        seen = set()
        for g in self.generators:
            if g.name in seen:
                raise AlgebraError(f"Duplicate generator name: {g.name}")
            seen.add(g.name)

    @classmethod
    def from_degrees(cls, pairs: Iterable[Tuple[str, int]]) -> "FreeCGA":
        return cls(tuple(GeneratorDecl(name, degree) for name, degree in pairs))

    # ── Lookup ──────────────────────────────────────────────────────────────

    @cached_property
    def names(self) -> Tuple[str, ...]:
        return tuple(g.name for g in self.generators)

    @cached_property
    def degrees(self) -> Tuple[int, ...]:
        return tuple(g.degree for g in self.generators)

    @cached_property
    def odd_indices(self) -> Tuple[int, ...]:
        return tuple(i for i, g in enumerate(self.generators) if g.is_odd)

    @cached_property
    def _index(self) -> Dict[str, int]:
        return {g.name: i for i, g in enumerate(self.generators)}

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise AlgebraError(f"Unknown generator {name!r} in algebra {self}") from None

    def has(self, name: str) -> bool:
        return name in self._index

    def __len__(self) -> int:
        return len(self.generators)

    def __str__(self) -> str:
        odd = [f"{g.name}({g.degree})" for g in self.generators if g.is_odd]
        even = [f"{g.name}({g.degree})" for g in self.generators if not g.is_odd]
        parts = []
        if odd:
            parts.append("Λ[" + ", ".join(odd) + "]")
        if even:
            parts.append("Q[" + ", ".join(even) + "]")
        return " ⊗ ".join(parts) if parts else "Q"

    # ── Construction ────────────────────────────────────────────────────────

    def tensor(self, other: "FreeCGA") -> "FreeCGA":
        """Disjoint union of generators; names must not collide."""
        clash = set(self.names) & set(other.names)
        if clash:
            raise AlgebraError(f"Cannot tensor algebras sharing generators {sorted(clash)}")
        return FreeCGA(self.generators + other.generators)

    def renamed(self, rename: Dict[str, str]) -> "FreeCGA":
        return FreeCGA(tuple(GeneratorDecl(rename.get(g.name, g.name), g.degree) for g in self.generators))

    def sub_algebra(self, names: Sequence[str]) -> "FreeCGA":
        wanted = set(names)
        return FreeCGA(tuple(g for g in self.generators if g.name in wanted))

    def gen(self, name: str):
        """The generator as an Element."""
        from scripts.biquotient.algebra.element import Element
        return Element.generator(self, name)

    def one(self):
        from scripts.biquotient.algebra.element import Element
        return Element.scalar(self, 1)

    def zero(self):
        from scripts.biquotient.algebra.element import Element
        return Element.zero(self)

    # ── Monomials ───────────────────────────────────────────────────────────

    def unit_monomial(self) -> Monomial:
        return (0,) * len(self.generators)

    def monomial_degree(self, m: Monomial) -> int:
        return sum(e * d for e, d in zip(m, self.degrees))

    def monomial(self, exponents: Optional[Dict[str, int]] = None) -> Monomial:
        exps = [0] * len(self.generators)
        for name, e in (exponents or {}).items():
            if e < 0:
                raise AlgebraError(f"Negative exponent for {name}")
            i = self.index(name)
            if self.generators[i].is_odd and e > 1:
                raise AlgebraError(f"Odd generator {name} cannot appear with exponent {e}")
            exps[i] = e
        return tuple(exps)

    def monomial_str(self, m: Monomial) -> str:
        factors = []
        for name, e in zip(self.names, m):
            if e == 1:
                factors.append(name)
            elif e > 1:
                factors.append(f"{name}^{e}")
        return "*".join(factors) if factors else "1"

    def monomial_basis(self, degree: int) -> Tuple[Monomial, ...]:
        return monomial_basis(self, degree)


def monomial_product(algebra: FreeCGA, a: Monomial, b: Monomial) -> Tuple[int, Optional[Monomial]]:
    """Product of two normalized monomials as (sign, monomial); (0, None) when an odd square appears."""
    sign = 1
    odd = algebra.odd_indices
    if odd:
        later_in_a = 0  # odd factors of a seen so far, scanning from the right
        for i in reversed(odd):
            if b[i]:
                if a[i]:
                    return 0, None
                # b's factor i must move left past every odd factor of a with index > i
                if later_in_a % 2:
                    sign = -sign
            if a[i]:
                later_in_a += 1
    return sign, tuple(x + y for x, y in zip(a, b))


@lru_cache(maxsize=CACHE_SIZE)
def monomial_basis(algebra: FreeCGA, degree: int) -> Tuple[Monomial, ...]:
    """All monomials of exactly the given degree, in canonical order.

    The order is lexicographic in declared generator order with larger
    exponents first, so Q[e, e'] in degree 4 gives e^2, e*e', e'^2.
    """
    if degree < 0:
        raise AlgebraError(f"Negative degree {degree}")
    gens = algebra.generators
    out: List[Monomial] = []
    prefix: List[int] = []

    def walk(i: int, remaining: int) -> None:
        if i == len(gens):
            if remaining == 0:
                out.append(tuple(prefix))
            return
        d = gens[i].degree
        top = min(remaining // d, 1) if gens[i].is_odd else remaining // d
        for e in range(top, -1, -1):
            prefix.append(e)
            walk(i + 1, remaining - e * d)
            prefix.pop()

    walk(0, degree)
    return tuple(out)
