"""Finite groups acting on a presented ring by signs on generators, and their invariants.

Each group element multiplies every generator by +1 or -1; on monomials the
action is the product of the signs. The group order is a power of two, so
averaging is exact over Q.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterable, List, Mapping, Sequence, Tuple

from sympy.polys.matrices import DomainMatrix

from scripts.biquotient.algebra.element import Element
from scripts.biquotient.algebra.free_cga import FreeCGA, Monomial, monomial_basis, monomial_product
from scripts.biquotient.algebra.slices import Row, degree_slice, to_domain_matrix
from scripts.biquotient.errors import ActionDoesNotDescend, AlgebraError
from scripts.biquotient.models.hilbert_table import HilbertTable, hilbert_table
from scripts.biquotient.presentations.quotient import QuotientPresentation, QuotientSlice, quotient_slice

log = logging.getLogger(__name__)

SignMap = Tuple[int, ...]


def _compose(a: SignMap, b: SignMap) -> SignMap:
    return tuple(x * y for x, y in zip(a, b))


@dataclass(frozen=True)
class SignAction:
    algebra: FreeCGA
    elements: Tuple[SignMap, ...]

    def __post_init__(self):
        n = len(self.algebra)
        elements = tuple(dict.fromkeys(tuple(g) for g in self.elements))
        for g in elements:
            if len(g) != n or any(s not in (1, -1) for s in g):
                raise AlgebraError(f"Sign map {g} is not a ±1 vector on {n} generators")
        identity = (1,) * n
        closed = set(elements)
        if identity not in closed or any(_compose(a, b) not in closed for a in elements for b in elements):
            raise AlgebraError("Sign maps do not form a group; use SignAction.generated_by")
        object.__setattr__(self, "elements", elements)

    # ── Constructors ────────────────────────────────────────────────────────

    @staticmethod
    def sign_map(algebra: FreeCGA, signs: Mapping[str, int]) -> SignMap:
        g = [1] * len(algebra)
        for name, s in signs.items():
            g[algebra.index(name)] = s
        return tuple(g)

    @classmethod
    def trivial(cls, algebra: FreeCGA) -> "SignAction":
        return cls(algebra, ((1,) * len(algebra),))

    @classmethod
    def generated_by(cls, algebra: FreeCGA, generators: Iterable[Mapping[str, int]]) -> "SignAction":
        """Close a list of sign maps {generator: ±1} (unlisted generators fixed) under composition."""
        group = {(1,) * len(algebra)}
        frontier = [cls.sign_map(algebra, g) for g in generators]
        while frontier:
            g = frontier.pop()
            if g in group:
                continue
            new = {_compose(g, h) for h in group}
            group.add(g)
            frontier.extend(x for x in new if x not in group)
        return cls(algebra, tuple(sorted(group, reverse=True)))

    # ── Action ──────────────────────────────────────────────────────────────

    @property
    def order(self) -> int:
        return len(self.elements)

    def monomial_sign(self, g: SignMap, m: Monomial) -> int:
        s = 1
        for sign, e in zip(g, m):
            if sign < 0 and e % 2:
                s = -s
        return s

    def apply(self, g: SignMap, x: Element) -> Element:
        return Element(x.algebra, {m: c * self.monomial_sign(g, m) for m, c in x.terms.items()})

    def is_fixed(self, m: Monomial) -> bool:
        return all(self.monomial_sign(g, m) == 1 for g in self.elements)


# ── Invariants of a quotient ───────────────────────────────────────────────

def check_descends(p: QuotientPresentation, action: SignAction) -> None:
    """Every group element must carry every relation component back into the ideal."""
    if action.algebra != p.algebra:
        raise AlgebraError("Action and presentation live on different algebras")
    for comp in p.relation_components:
        d = comp.degree
        qs = quotient_slice(p, d)
        ds = degree_slice(p.algebra, d)
        for g in action.elements:
            if qs.reduce(ds.coordinates(action.apply(g, comp))):
                raise ActionDoesNotDescend(f"image of {comp} under {g} leaves the ideal")


def induced_matrix(p: QuotientPresentation, action: SignAction, g: SignMap, qs: QuotientSlice) -> List[Row]:
    """Rows: image of each standard monomial, reduced into the quotient slice."""
    basis = degree_slice(p.algebra, qs.degree).basis
    rows: List[Row] = []
    for col in qs.standard:
        s = action.monomial_sign(g, basis[col])
        rows.append(qs.reduce({col: Fraction(s)}))
    return rows


def averaging_projector(p: QuotientPresentation, action: SignAction, degree: int) -> DomainMatrix:
    """(1/|G|) Σ_g g acting on the degree-d quotient slice."""
    qs = quotient_slice(p, degree)
    total: List[Row] = [{} for _ in qs.standard]
    weight = Fraction(1, action.order)
    for g in action.elements:
        for i, row in enumerate(induced_matrix(p, action, g, qs)):
            for j, c in row.items():
                v = total[i].get(j, Fraction(0)) + weight * c
                if v:
                    total[i][j] = v
                else:
                    total[i].pop(j, None)
    return to_domain_matrix(total, len(qs.standard))


def invariant_hilbert_function(p: QuotientPresentation, action: SignAction, max_degree: int) -> HilbertTable:
    """dims[d] = dimension of the fixed subspace of the degree-d quotient slice."""
    check_descends(p, action)
    dims: List[int] = []
    for d in range(max_degree + 1):
        qs = quotient_slice(p, d)
        dims.append(averaging_projector(p, action, d).rank() if len(qs) else 0)
        log.debug("invariants %s deg=%d: %d of %d", p.label, d, dims[-1], len(qs))
    return hilbert_table(dims)


def invariant_generators(action: SignAction, max_degree: int) -> List[Element]:
    """Minimal monomial generators of the invariant subring of the free algebra, up to a degree."""
    algebra = action.algebra
    fixed: Dict[int, List[Monomial]] = {}
    gens: List[Element] = []
    for d in range(1, max_degree + 1):
        fixed[d] = [m for m in monomial_basis(algebra, d) if action.is_fixed(m)]
        decomposable = set()
        for a in range(1, d // 2 + 1):
            for x in fixed.get(a, []):
                for y in fixed.get(d - a, []):
                    sign, m = monomial_product(algebra, x, y)
                    if sign:
                        decomposable.add(m)
        gens.extend(Element.from_monomial(algebra, m) for m in fixed[d] if m not in decomposable)
    return gens
