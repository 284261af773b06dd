"""Products of catalog groups, e.g. SO(2)xSO(3).

Factor i decorates its names with i primes, so SO(2)xSO(2) has e and e',
and the torus coordinates run contiguously across factors.
"""

from functools import cached_property
from typing import Dict, List, Sequence, Tuple

from scripts.biquotient.algebra.element import Element
from scripts.biquotient.algebra.free_cga import GeneratorDecl
from scripts.biquotient.errors import UnsupportedGroup
from scripts.biquotient.groups._base_group import BaseGroup


class ProductGroup(BaseGroup):
    def __init__(self, factors: Sequence[BaseGroup]):
        if len(factors) < 2:
            raise UnsupportedGroup("A product needs at least two factors")
        super().__init__()
        placed: List[BaseGroup] = []
        offset = 0
        for i, factor in enumerate(factors):
            if isinstance(factor, ProductGroup):
                raise UnsupportedGroup("Nested products are not supported; list the factors flat")
            placed.append(factor.decorated(i, offset))
            offset += factor.torus_rank
        self._factors = placed

    @property
    def factors(self) -> List[BaseGroup]:
        return list(self._factors)

    @property
    def family(self) -> str:
        return "Product"

    @property
    def code(self) -> str:
        return "x".join(f.code for f in self._factors)

    @property
    def torus_rank(self) -> int:
        return sum(f.torus_rank for f in self._factors)

    @property
    def dimension(self) -> int:
        return sum(f.dimension for f in self._factors)

    def _generators(self) -> List[Tuple[str, int]]:
        return [(g.name, g.degree) for f in self._factors for g in f.classifying_generators]

    @cached_property
    def classifying_generators(self) -> Tuple[GeneratorDecl, ...]:
        return tuple(g for f in self._factors for g in f.classifying_generators)

    @cached_property
    def primitive_generators(self) -> Tuple[GeneratorDecl, ...]:
        return tuple(z for f in self._factors for z in f.primitive_generators)

    @property
    def euler_names(self) -> Tuple[str, ...]:
        return tuple(name for f in self._factors for name in f.euler_names)

    @cached_property
    def torus_images(self) -> Dict[str, Element]:
        ring = self.torus_ring
        images: Dict[str, Element] = {}
        for f in self._factors:
            for name, value in f.torus_images.items():
                images[name] = value.embed(ring)
        return images

    def _torus_images(self, coords: List[Element]) -> Dict[str, Element]:
        return self.torus_images

    def factor_index(self, name: str) -> int:
        """Which factor owns a classifying generator."""
        for i, f in enumerate(self._factors):
            if f.classifying_ring.has(name):
                return i
        raise UnsupportedGroup(f"{name} is not a classifying generator of {self.code}")
