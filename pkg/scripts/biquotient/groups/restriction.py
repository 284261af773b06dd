"""Maps between classifying rings induced by subgroup inclusions.

Everything factors through the maximal torus: a classifying generator of G
is a Weyl-invariant polynomial in G's torus coordinates, and a restriction
to K is read off by pulling those coordinates back to K's torus and solving
for the result among K's invariants.
"""

import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, List, Mapping, Optional, Tuple

from scripts.biquotient.algebra.element import Element, homogeneous_components
from scripts.biquotient.algebra.slices import Row, degree_slice, solve
from scripts.biquotient.config import CACHE_SIZE
from scripts.biquotient.errors import AlgebraError, NotExpressible, UnsupportedGroup
from scripts.biquotient.groups._base_group import BaseGroup
from scripts.biquotient.groups.orthogonal import SpecialOrthogonal
from scripts.biquotient.groups.product import ProductGroup
from scripts.biquotient.groups.symplectic import Symplectic
from scripts.biquotient.groups.torus import Torus
from scripts.biquotient.groups.unitary import SpecialUnitary, Unitary
from scripts.biquotient.presentations.sign_action import SignAction, SignMap

log = logging.getLogger(__name__)

BLOCK_FAMILIES = (SpecialOrthogonal, Unitary, SpecialUnitary, Symplectic)


@dataclass(frozen=True, eq=False)
class RestrictionMap:
    """ρ*: H(BG) -> H(BK), given on the classifying generators of G."""
    source: BaseGroup
    target: BaseGroup
    images: Dict[str, Element]

    def __post_init__(self):
        ring = self.target.classifying_ring
        for g in self.source.classifying_generators:
            img = self.images.get(g.name)
            if img is None:
                raise AlgebraError(f"No image for {g.name} under {self.source.code} -> {self.target.code}")
            if img.algebra != ring:
                raise AlgebraError(f"Image of {g.name} does not live in H(B{self.target.code})")
            if not img.is_zero() and img.degree != g.degree:
                raise AlgebraError(f"Image {img} of {g.name} is not homogeneous of degree {g.degree}")

    def apply(self, x: Element) -> Element:
        if x.algebra != self.source.classifying_ring:
            raise AlgebraError(f"Element {x} is not in H(B{self.source.code})")
        return x.substitute(self.images, self.target.classifying_ring)

    def compose(self, then: "RestrictionMap") -> "RestrictionMap":
        """First self (G -> K), then `then` (K -> H)."""
        if then.source != self.target:
            raise AlgebraError(f"Cannot compose {self} with {then}")
        return RestrictionMap(self.source, then.target, {g: then.apply(img) for g, img in self.images.items()})

    def __str__(self) -> str:
        return f"{self.source.code} -> {self.target.code}"


# ── Torus ───────────────────────────────────────────────────────────────────

def maximal_torus(g: BaseGroup) -> Torus:
    return Torus(g.torus_rank).decorated(0, g.torus_offset)


def torus_restriction(g: BaseGroup) -> RestrictionMap:
    return RestrictionMap(g, maximal_torus(g), dict(g.torus_images))


def torus_inclusion(G: BaseGroup, K: BaseGroup) -> Dict[str, Element]:
    """Coordinates of G's torus pulled back to K's: t_i ↦ t_i while K has them, then 0."""
    if K.torus_rank > G.torus_rank:
        raise UnsupportedGroup(f"{K.code} has larger rank than {G.code}")
    ring = K.torus_ring
    out: Dict[str, Element] = {}
    for i, t in enumerate(G.torus_names):
        out[t] = ring.gen(K.torus_names[i]) if i < K.torus_rank else ring.zero()
    return out


def quaternionic_torus_map(G: BaseGroup, K: BaseGroup) -> Dict[str, Element]:
    """Sp(n) ⊂ U(2n): G's torus pulls back to (t_1, ..., t_n, -t_1, ..., -t_n)."""
    if not (isinstance(G, Unitary) and isinstance(K, Symplectic) and G.n == 2 * K.n):
        raise UnsupportedGroup(f"{K.code} is not the symplectic subgroup of {G.code}")
    coords = K.torus_coordinates()
    return dict(zip(G.torus_names, coords + [-t for t in coords]))


@lru_cache(maxsize=CACHE_SIZE)
def _invariant_columns(g: BaseGroup, degree: int) -> Tuple[Tuple[Row, ...], int]:
    ring = g.classifying_ring
    torus = g.torus_ring
    target = degree_slice(torus, degree)
    columns = tuple(
        target.coordinates(Element.from_monomial(ring, m).substitute(g.torus_images, torus))
        for m in degree_slice(ring, degree).basis
    )
    return columns, len(target)


def express_in_invariants(x: Element, g: BaseGroup) -> Element:
    """Preimage of a torus polynomial under torus_restriction(g)."""
    ring = g.classifying_ring
    if x.algebra != g.torus_ring:
        raise AlgebraError(f"{x} is not a polynomial in the torus coordinates of {g.code}")
    if x.is_zero():
        return ring.zero()
    if not x.is_homogeneous():
        return sum((express_in_invariants(c, g) for c in homogeneous_components(x).values()), ring.zero())
    columns, nrows = _invariant_columns(g, x.degree)
    rhs = degree_slice(g.torus_ring, x.degree).coordinates(x)
    solution = solve(columns, rhs, nrows)
    if solution is None:
        raise NotExpressible(f"{x} over {g.code}")
    return degree_slice(ring, x.degree).element(solution)


def restriction_via_torus(
    G: BaseGroup, K: BaseGroup, torus_map: Optional[Mapping[str, Element]] = None,
) -> RestrictionMap:
    """ρ* computed through the tori; torus_map sends G's torus coordinates into K's torus ring."""
    torus_map = dict(torus_map) if torus_map is not None else torus_inclusion(G, K)
    images = {}
    for name, value in G.torus_images.items():
        images[name] = express_in_invariants(value.substitute(torus_map, K.torus_ring), K)
    log.debug("restriction %s -> %s via torus: %s", G.code, K.code, {k: str(v) for k, v in images.items()})
    return RestrictionMap(G, K, images)


# ── Block inclusions ────────────────────────────────────────────────────────

def _block_size(g: BaseGroup) -> int:
    return g.size if isinstance(g, SpecialOrthogonal) else g.n


def block_restriction(G: BaseGroup, K: BaseGroup) -> RestrictionMap:
    """Block-diagonal K = K_1 x ... x K_r inside G of the same family (SO, U, SU or Sp).

    The total class of G goes to the product of the factors' total classes.
    The Euler class of SO(even) goes to the product of the factors' Euler
    classes when every factor is even, and to 0 otherwise.
    """
    family = type(G)
    if family not in BLOCK_FAMILIES:
        raise UnsupportedGroup(f"Block inclusions are defined for SO, U, SU and Sp, not {G.code}")
    if not isinstance(K, ProductGroup) or any(type(f) is not family for f in K.factors):
        raise UnsupportedGroup(f"{K.code} is not a block subgroup of {G.code}")
    if sum(_block_size(f) for f in K.factors) != _block_size(G):
        raise UnsupportedGroup(f"Blocks of {K.code} do not fill {G.code}")

    ring = K.classifying_ring
    total = ring.one()
    for f in K.factors:
        total = total * f.total_class().embed(ring)
    components = homogeneous_components(total)

    images: Dict[str, Element] = {}
    for g in G.classifying_generators:
        if g.name in G.euler_names:
            if all(f.euler_names for f in K.factors):
                euler = ring.one()
                for f in K.factors:
                    euler = euler * ring.gen(f.euler_names[0])
                images[g.name] = euler
            else:
                images[g.name] = ring.zero()
        else:
            images[g.name] = components.get(g.degree, ring.zero())
    return RestrictionMap(G, K, images)


# ── Orientation-reversing involutions ──────────────────────────────────────

def determinant_involution(g: BaseGroup, factor: Optional[int] = None) -> SignAction:
    """Negate the Euler class of one factor; with no factor given, of every even orthogonal factor."""
    if factor is None:
        names = g.euler_names
    else:
        try:
            names = g.factors[factor].euler_names
        except IndexError:
            raise UnsupportedGroup(f"{g.code} has no factor {factor}") from None
    if not names:
        raise UnsupportedGroup(f"{g.code} has no Euler class to reverse")
    return SignAction.generated_by(g.classifying_ring, [{name: -1 for name in names}])


def determinant_involutions(g: BaseGroup) -> List[SignAction]:
    return [determinant_involution(g, i) for i, f in enumerate(g.factors) if f.euler_names]


def torus_reflection(g: BaseGroup, factor: Optional[int] = None) -> SignAction:
    """t ↦ -t on the first torus coordinate of a factor (of the whole group by default)."""
    owner = g if factor is None else g.factors[factor]
    return SignAction.generated_by(g.torus_ring, [{owner.torus_names[0]: -1}])


def involution_map(action: SignAction) -> SignMap:
    """The non-identity element of an order-2 action."""
    identity = (1,) * len(action.algebra)
    others = [e for e in action.elements if e != identity]
    if len(others) != 1:
        raise AlgebraError(f"Action of order {action.order} is not an involution")
    return others[0]
