"""Unitary and special unitary groups."""

from typing import Dict, List, Tuple

from scripts.biquotient.algebra.element import Element
from scripts.biquotient.errors import UnsupportedGroup
from scripts.biquotient.groups._base_group import BaseGroup, elementary_symmetric


class Unitary(BaseGroup):
    def __init__(self, n: int, primes: int = 0, torus_offset: int = 0):
        if n < 1:
            raise UnsupportedGroup(f"U({n}) is not in the catalog")
        super().__init__(primes, torus_offset)
        self.n = n

    @property
    def family(self) -> str:
        return "U"

    @property
    def code(self) -> str:
        return f"U({self.n})"

    @property
    def torus_rank(self) -> int:
        return self.n

    @property
    def dimension(self) -> int:
        return self.n * self.n

    def _generators(self) -> List[Tuple[str, int]]:
        return [(f"c{j}", 2 * j) for j in range(1, self.n + 1)]

    def _torus_images(self, coords: List[Element]) -> Dict[str, Element]:
        sigma = elementary_symmetric(coords, self.torus_ring)
        return {name: sigma[deg // 2] for name, deg in self._generators()}

    def total_class(self) -> Element:
        ring = self.classifying_ring
        total = ring.one()
        for g in self.classifying_generators:
            total = total + ring.gen(g.name)
        return total

    def conjugate_total_class(self) -> Element:
        """Σ (-1)^j c_j, the total Chern class of the conjugate representation."""
        ring = self.classifying_ring
        total = ring.one()
        for j, g in enumerate(self.classifying_generators, start=1):
            total = total + (-1) ** j * ring.gen(g.name)
        return total


class SpecialUnitary(BaseGroup):
    """Torus t_1..t_{n-1}; the last coordinate is -(t_1 + ... + t_{n-1})."""

    def __init__(self, n: int, primes: int = 0, torus_offset: int = 0):
        if n < 2:
            raise UnsupportedGroup(f"SU({n}) is not in the catalog (need n >= 2)")
        super().__init__(primes, torus_offset)
        self.n = n

    @property
    def family(self) -> str:
        return "SU"

    @property
    def code(self) -> str:
        return f"SU({self.n})"

    @property
    def torus_rank(self) -> int:
        return self.n - 1

    @property
    def dimension(self) -> int:
        return self.n * self.n - 1

    def _generators(self) -> List[Tuple[str, int]]:
        return [(f"c{j}", 2 * j) for j in range(2, self.n + 1)]

    def _torus_images(self, coords: List[Element]) -> Dict[str, Element]:
        last = Element.zero(self.torus_ring)
        for t in coords:
            last = last - t
        sigma = elementary_symmetric(coords + [last], self.torus_ring)
        return {name: sigma[deg // 2] for name, deg in self._generators()}

    def total_class(self) -> Element:
        """1 + c_2 + ... + c_n; c_1 vanishes on SU(n)."""
        ring = self.classifying_ring
        total = ring.one()
        for g in self.classifying_generators:
            total = total + ring.gen(g.name)
        return total
