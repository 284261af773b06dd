"""Special orthogonal and spin groups.

H(BSO(2n)) = Q[p_1..p_{n-1}, e] and H(BSO(2n+1)) = Q[p_1..p_n], with
p_j of degree 4j and e of degree 2n. On the maximal torus the total
Pontrjagin class is ∏(1 + t_j^2) and e ↦ t_1⋯t_n, so e^2 = p_n holds on
the nose.
"""

from typing import Dict, List, Tuple

from scripts.biquotient.algebra.element import Element
from scripts.biquotient.errors import UnsupportedGroup
from scripts.biquotient.groups._base_group import BaseGroup, elementary_symmetric


class SpecialOrthogonal(BaseGroup):
    min_size = 2
    stem = "SO"

    def __init__(self, size: int, primes: int = 0, torus_offset: int = 0):
        if size < self.min_size:
            raise UnsupportedGroup(f"{self.stem}({size}) is not in the catalog (need size >= {self.min_size})")
        super().__init__(primes, torus_offset)
        self.size = size

    @property
    def even(self) -> bool:
        return self.size % 2 == 0

    @property
    def family(self) -> str:
        return f"{self.stem}-{'even' if self.even else 'odd'}"

    @property
    def code(self) -> str:
        return f"{self.stem}({self.size})"

    @property
    def torus_rank(self) -> int:
        return self.size // 2

    @property
    def dimension(self) -> int:
        return self.size * (self.size - 1) // 2

    def _generators(self) -> List[Tuple[str, int]]:
        n = self.torus_rank
        if self.even:
            return [(f"p{j}", 4 * j) for j in range(1, n)] + [("e", 2 * n)]
        return [(f"p{j}", 4 * j) for j in range(1, n + 1)]

    @property
    def euler_names(self) -> Tuple[str, ...]:
        return (self.decorate("e"),) if self.even else ()

    def _torus_images(self, coords: List[Element]) -> Dict[str, Element]:
        sigma = elementary_symmetric([t * t for t in coords], self.torus_ring)
        images = {name: sigma[deg // 4] for name, deg in self._generators() if name != "e"}
        if self.even:
            euler = Element.scalar(self.torus_ring, 1)
            for t in coords:
                euler = euler * t
            images["e"] = euler
        return images

    def pontryagin_top(self) -> Element:
        """p_n of an even group, written as e^2."""
        return self.classifying_ring.gen(self.decorate("e")) ** 2

    def total_class(self) -> Element:
        ring = self.classifying_ring
        total = ring.one()
        for g in self.classifying_generators:
            if g.name not in self.euler_names:
                total = total + ring.gen(g.name)
        if self.even:
            total = total + self.pontryagin_top()
        return total


class Spin(SpecialOrthogonal):
    """Rationally identical to SO(m)."""

    min_size = 3
    stem = "Spin"
