"""Quotients of a free CGA by ideals generated by homogeneous relation components.

An inhomogeneous relation x - y stands for all of its homogeneous components.
The degree-d ideal slice is span{m * r : r a component, m a monomial,
deg(m * r) = d}. With even generators central and odd generators
sign-commuting, this span is the two-sided graded ideal slice.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Dict, List, Sequence, Tuple

from scripts.biquotient.algebra.element import Element, homogeneous_components, multiply
from scripts.biquotient.algebra.free_cga import FreeCGA, monomial_basis
from scripts.biquotient.algebra.slices import (
    Row, degree_slice, rank_of, reduce_row, reduced_echelon,
)
from scripts.biquotient.config import CACHE_SIZE
from scripts.biquotient.errors import AlgebraError, InconsistentPresentation
from scripts.biquotient.models.hilbert_table import HilbertTable, hilbert_table

log = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class QuotientPresentation:
    algebra: FreeCGA
    relations: Tuple[Element, ...] = ()
    label: str = ""

    def __post_init__(self):
        object.__setattr__(self, "relations", tuple(self.relations))
        for r in self.relations:
            if r.algebra != self.algebra:
                raise AlgebraError(f"Relation {r} does not live in {self.algebra}")

    @property
    def relation_components(self) -> List[Element]:
        """Homogeneous components of all relations, in relation order, zeros dropped."""
        out: List[Element] = []
        for r in self.relations:
            for d, comp in homogeneous_components(r).items():
                if d == 0:
                    raise InconsistentPresentation(
                        f"relation {r} has nonzero constant term {comp} in {self.label or self.algebra}"
                    )
                out.append(comp)
        return out

    def with_relations(self, extra: Sequence[Element], label: str = "") -> "QuotientPresentation":
        return QuotientPresentation(self.algebra, self.relations + tuple(extra), label or self.label)

    def key(self) -> Tuple:
        """Hashable canonical form, used for caching slices."""
        return (self.algebra, tuple(tuple(r.terms.items()) for r in self.relations))

    def __eq__(self, other) -> bool:
        if not isinstance(other, QuotientPresentation):
            return NotImplemented
        return self.key() == other.key()

    def __hash__(self) -> int:
        return hash(self.key())

    def __str__(self) -> str:
        rels = ", ".join(str(r) for r in self.relations)
        return f"{self.algebra} / ({rels})"


# ── Ideal slices ────────────────────────────────────────────────────────────

def ideal_slice(p: QuotientPresentation, degree: int) -> List[Element]:
    """Spanning set {m * r_c} of the ideal in one degree."""
    out: List[Element] = []
    for comp in p.relation_components:
        c = comp.degree
        if c is None or c > degree:
            continue
        for m in monomial_basis(p.algebra, degree - c):
            prod = multiply(Element.from_monomial(p.algebra, m), comp)
            if not prod.is_zero():
                out.append(prod)
    return out


def ideal_rows(p: QuotientPresentation, degree: int) -> List[Row]:
    ds = degree_slice(p.algebra, degree)
    return [ds.coordinates(x) for x in ideal_slice(p, degree)]


@dataclass(frozen=True)
class QuotientSlice:
    """Degree-d quotient with the standard monomials (non-pivot columns) as basis."""
    degree: int
    ambient_dim: int
    echelon: Tuple[Dict[int, Fraction], ...]
    pivots: Tuple[int, ...]
    standard: Tuple[int, ...]

    def __len__(self) -> int:
        return len(self.standard)

    def reduce(self, row: Row) -> Row:
        """Coordinates in the standard basis (keys index into `standard`)."""
        rem = reduce_row(row, self.echelon, self.pivots)
        pos = {col: i for i, col in enumerate(self.standard)}
        return {pos[j]: c for j, c in rem.items()}


@lru_cache(maxsize=CACHE_SIZE)
def _quotient_slice_cached(p: QuotientPresentation, degree: int) -> QuotientSlice:
    ds = degree_slice(p.algebra, degree)
    echelon, pivots = reduced_echelon(ideal_rows(p, degree), len(ds))
    pivot_set = set(pivots)
    standard = tuple(j for j in range(len(ds)) if j not in pivot_set)
    return QuotientSlice(degree, len(ds), tuple(echelon), pivots, standard)


def quotient_slice(p: QuotientPresentation, degree: int) -> QuotientSlice:
    return _quotient_slice_cached(p, degree)


def contains(p: QuotientPresentation, x: Element) -> bool:
    """Whether a homogeneous element lies in the ideal."""
    if x.is_zero():
        return True
    d = x.degree
    if d is None:
        return all(contains(p, comp) for comp in homogeneous_components(x).values())
    qs = quotient_slice(p, d)
    return not qs.reduce(degree_slice(p.algebra, d).coordinates(x))


# ── Hilbert functions ──────────────────────────────────────────────────────

def hilbert_function(p: QuotientPresentation, max_degree: int) -> HilbertTable:
    """dims[d] = |monomial basis in degree d| - rank(ideal slice in degree d)."""
    if max_degree < 0:
        raise AlgebraError(f"Negative cutoff {max_degree}")
    p.relation_components  # raises on degree-0 components
    dims: List[int] = []
    for d in range(max_degree + 1):
        ds = degree_slice(p.algebra, d)
        rank = rank_of(ideal_rows(p, d), len(ds))
        dims.append(len(ds) - rank)
        log.debug("hilbert %s deg=%d: %d monomials, ideal rank %d", p.label, d, len(ds), rank)
    return hilbert_table(dims)


def tensor(left: QuotientPresentation, right: QuotientPresentation, label: str = "") -> QuotientPresentation:
    """Free tensor product of two presentations over Q."""
    algebra = left.algebra.tensor(right.algebra)
    rels = [r.embed(algebra) for r in left.relations] + [r.embed(algebra) for r in right.relations]
    return QuotientPresentation(algebra, tuple(rels), label or f"{left.label} ⊗ {right.label}")


def free_presentation(algebra: FreeCGA, label: str = "") -> QuotientPresentation:
    return QuotientPresentation(algebra, (), label or str(algebra))
