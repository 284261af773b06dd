"""Biquotient cases outside the orthogonal family.

A code "K<G" is the two-sided quotient K\\G/K; "H<G>K" lets H act on G/K.

Sp(a) x Sp(b) ⊂ Sp(a+b) gives Q[q, q', θ, θ']/(qq' - θθ'),
U(a) x U(b) ⊂ U(a+b) gives Q[c, c', κ, κ']/(cc' - κκ'),
SU(a) x SU(b) ⊂ SU(a+b) gives the same with c_1 = 0, and
U(n) ⊂ Sp(n) gives Q[c, κ]/(c·c̄ - κ·κ̄) with c̄ the conjugate total class.
U(m) acting on U(2n)/Sp(n) gives
Q[c_2, c_4, ..., θ_1, ..., θ_n]/(c_2i - (-1)^i θ_i) ⊗ Λ(z_2j-1 : j odd, m < j ≤ 2n),
with c_2i = 0 once 2i > m.
"""

from dataclasses import dataclass
from typing import Dict, List, Tuple

from scripts.biquotient.algebra.element import Element
from scripts.biquotient.algebra.free_cga import FreeCGA, GeneratorDecl
from scripts.biquotient.config import default_cutoff
from scripts.biquotient.errors import UnsupportedCase, UnsupportedGroup
from scripts.biquotient.groups._base_group import BaseGroup
from scripts.biquotient.groups.catalog import parse_group
from scripts.biquotient.groups.product import ProductGroup
from scripts.biquotient.groups.restriction import (
    RestrictionMap, block_restriction, quaternionic_torus_map, restriction_via_torus,
)
from scripts.biquotient.groups.symplectic import Symplectic
from scripts.biquotient.groups.unitary import Unitary
from scripts.biquotient.presentations.quotient import QuotientPresentation
from scripts.biquotient.sullivan.biquotient import kapovitch_model, mirror_name, mirror_rename
from scripts.biquotient.sullivan.model import SullivanModel


def _two_sided_inclusion(G: BaseGroup, K: BaseGroup) -> RestrictionMap:
    if isinstance(K, ProductGroup):
        return block_restriction(G, K)
    if isinstance(G, Symplectic) and isinstance(K, Unitary) and G.n == K.n:
        return restriction_via_torus(G, K)
    raise UnsupportedGroup(f"{K.code} ⊂ {G.code} is neither a block inclusion nor U(n) ⊂ Sp(n)")


@dataclass(frozen=True)
class VersatilityCase:
    code: str                      # e.g. "Sp(1)xSp(1)<Sp(2)" or "U(2)<U(4)>Sp(2)"

    def __post_init__(self):
        if self.code.count("<") != 1 or self.code.count(">") > 1:
            raise UnsupportedCase(f"Expected 'K<G' or 'H<G>K', got {self.code!r}")
        self.restrictions()  # validates the pair

    def _parts(self) -> Tuple[str, str, str]:
        left, _, rest = self.code.partition("<")
        group, _, right = rest.partition(">")
        return left, group, right or left

    def group(self) -> BaseGroup:
        return parse_group(self._parts()[1])

    def left_subgroup(self) -> BaseGroup:
        return parse_group(self._parts()[0])

    def subgroup(self) -> BaseGroup:
        """The subgroup G is divided by on the right."""
        return parse_group(self._parts()[2])

    @property
    def two_sided(self) -> bool:
        return self.left_subgroup() == self.subgroup()

    @property
    def label(self) -> str:
        if self.two_sided:
            return f"{self.code} two-sided"
        return f"{self.left_subgroup().code} on {self.group().code}/{self.subgroup().code}"

    @property
    def dimension(self) -> int:
        return self.group().dimension - self.subgroup().dimension

    def default_cutoff(self) -> int:
        return default_cutoff(self.dimension)

    def as_dict(self) -> Dict[str, object]:
        return {"code": self.code}

    def restrictions(self) -> Tuple[RestrictionMap, RestrictionMap]:
        """(ρ_H, ρ_K) for the left and right subgroups."""
        G, H, K = self.group(), self.left_subgroup(), self.subgroup()
        if H == K:
            rho = _two_sided_inclusion(G, K)
            return rho, rho
        if isinstance(G, Unitary) and isinstance(H, Unitary) and isinstance(K, Symplectic):
            if H.n > G.n:
                raise UnsupportedGroup(f"{H.code} does not fit in {G.code}")
            return restriction_via_torus(G, H), restriction_via_torus(G, K, quaternionic_torus_map(G, K))
        raise UnsupportedGroup(f"{H.code} acting on {G.code}/{K.code} is not in the catalog")

    def restriction(self) -> RestrictionMap:
        return self.restrictions()[1]

    @property
    def regular(self) -> bool:
        """Whether the model's differentials form a regular sequence.

        Then the model's cohomology is the presented ring. A two-sided K\\G/K
        with rank K < rank G fails this: its model has extra classes in odd
        degrees, and only the even degrees match the presented ring.
        """
        if self.two_sided:
            return self.subgroup().torus_rank == self.group().torus_rank
        return True

    def free_exterior(self) -> List[GeneratorDecl]:
        """Primitives of G with d = 0; the pushout ring lacks them."""
        if self.two_sided:
            return []
        G, m = self.group(), self.left_subgroup().n
        out = []
        for z in G.primitive_generators:
            j = (z.degree + 1) // 2
            if j % 2 and j > m:
                out.append(z)
        return out

    def total_class(self) -> Element:
        """Image of the total class of G in H(BK), read off the subgroup's own classes."""
        K = self.subgroup()
        ring = K.classifying_ring
        if isinstance(K, ProductGroup):
            total = ring.one()
            for f in K.factors:
                total = total * f.total_class().embed(ring)
            return total
        return K.total_class() * K.conjugate_total_class()

    def presentation(self) -> QuotientPresentation:
        if not self.two_sided:
            return self._symplectic_presentation()
        ring = self.subgroup().classifying_ring
        rename = mirror_rename(ring)
        algebra = FreeCGA(ring.generators + ring.renamed(rename).generators)
        total = self.total_class()
        relation = total.embed(algebra) - total.embed(algebra, rename)
        return QuotientPresentation(algebra, (relation,), f"H({self.label})")

    def _symplectic_presentation(self) -> QuotientPresentation:
        H, K = self.left_subgroup(), self.subgroup()
        chern = [g for g in H.classifying_generators if g.degree % 4 == 0]
        theta = [GeneratorDecl(mirror_name(g.name), g.degree) for g in K.classifying_generators]
        algebra = FreeCGA(tuple(chern) + tuple(theta) + tuple(self.free_exterior()))
        relations = []
        for i, t in enumerate(theta, start=1):
            c = algebra.gen(f"c{2 * i}") if 2 * i <= H.n else algebra.zero()
            relations.append(c - (-1) ** i * algebra.gen(t.name))
        return QuotientPresentation(algebra, tuple(relations), f"H({self.label})")

    def model(self) -> SullivanModel:
        left, right = self.restrictions()
        return kapovitch_model(left.source, left, right, f"model {self.label}")
