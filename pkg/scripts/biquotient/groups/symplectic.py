"""Compact symplectic groups: H(BSp(n)) = Q[q_1..q_n], q_j of degree 4j, q ↦ ∏(1 + t_j^2)."""

from typing import Dict, List, Tuple

from scripts.biquotient.algebra.element import Element
from scripts.biquotient.errors import UnsupportedGroup
from scripts.biquotient.groups._base_group import BaseGroup, elementary_symmetric


class Symplectic(BaseGroup):
    def __init__(self, n: int, primes: int = 0, torus_offset: int = 0):
        if n < 1:
            raise UnsupportedGroup(f"Sp({n}) is not in the catalog")
        super().__init__(primes, torus_offset)
        self.n = n

    @property
    def family(self) -> str:
        return "Sp"

    @property
    def code(self) -> str:
        return f"Sp({self.n})"

    @property
    def torus_rank(self) -> int:
        return self.n

    @property
    def dimension(self) -> int:
        return self.n * (2 * self.n + 1)

    def _generators(self) -> List[Tuple[str, int]]:
        return [(f"q{j}", 4 * j) for j in range(1, self.n + 1)]

    def _torus_images(self, coords: List[Element]) -> Dict[str, Element]:
        sigma = elementary_symmetric([t * t for t in coords], self.torus_ring)
        return {name: sigma[deg // 4] for name, deg in self._generators()}

    def total_class(self) -> Element:
        ring = self.classifying_ring
        total = ring.one()
        for g in self.classifying_generators:
            total = total + ring.gen(g.name)
        return total
