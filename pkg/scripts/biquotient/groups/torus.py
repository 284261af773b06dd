"""Tori: H(BT^n) = Q[t_1..t_n], each primitive y_i transgressing to t_i."""

from typing import Dict, List, Tuple

from scripts.biquotient.algebra.element import Element
from scripts.biquotient.errors import UnsupportedGroup
from scripts.biquotient.groups._base_group import BaseGroup


class Torus(BaseGroup):
    def __init__(self, n: int, primes: int = 0, torus_offset: int = 0):
        if n < 1:
            raise UnsupportedGroup(f"T({n}) is not in the catalog")
        super().__init__(primes, torus_offset)
        self.n = n

    @property
    def family(self) -> str:
        return "Torus"

    @property
    def code(self) -> str:
        return f"T({self.n})"

    @property
    def torus_rank(self) -> int:
        return self.n

    @property
    def dimension(self) -> int:
        return self.n

    # torus coordinates are already unique across product factors
    def decorate(self, name: str) -> str:
        return name

    def _generators(self) -> List[Tuple[str, int]]:
        return [(t, 2) for t in self.torus_names]

    def _torus_images(self, coords: List[Element]) -> Dict[str, Element]:
        return dict(zip(self.torus_names, coords))

    def primitive_name(self, name: str, degree: int) -> str:
        return "y" + name[1:]
