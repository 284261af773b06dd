"""Degree slices and exact linear algebra over QQ.

Rows are sparse dicts {column: Fraction}. All elimination goes through
sympy's sparse DomainMatrix over QQ; nothing here rounds.
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Dict, List, Optional, Sequence, Tuple

from sympy import QQ
from sympy.polys.matrices import DomainMatrix

from scripts.biquotient.algebra.element import Element
from scripts.biquotient.algebra.free_cga import FreeCGA, Monomial, monomial_basis
from scripts.biquotient.config import CACHE_SIZE
from scripts.biquotient.errors import AlgebraError

log = logging.getLogger(__name__)

Row = Dict[int, Fraction]


@dataclass(frozen=True)
class DegreeSlice:
    algebra: FreeCGA
    degree: int
    basis: Tuple[Monomial, ...]
    index: Dict[Monomial, int] = field(compare=False, hash=False, repr=False)

    def __len__(self) -> int:
        return len(self.basis)

    def coordinates(self, x: Element) -> Row:
        """Coordinates of a homogeneous element of this degree (zero is allowed)."""
        if x.algebra != self.algebra:
            raise AlgebraError(f"Element of {x.algebra} is not in {self.algebra}")
        row: Row = {}
        for m, c in x.terms.items():
            i = self.index.get(m)
            if i is None:
                raise AlgebraError(
                    f"Element {x} is not homogeneous of degree {self.degree}"
                )
            row[i] = c
        return row

    def element(self, row: Row) -> Element:
        return Element(self.algebra, {self.basis[i]: c for i, c in row.items()})


@lru_cache(maxsize=CACHE_SIZE)
def degree_slice(algebra: FreeCGA, degree: int) -> DegreeSlice:
    basis = monomial_basis(algebra, degree)
    return DegreeSlice(algebra, degree, basis, {m: i for i, m in enumerate(basis)})


# ── Conversion to and from sympy ────────────────────────────────────────────

def _to_qq(c: Fraction):
    return QQ(c.numerator, c.denominator)


def _from_qq(v) -> Fraction:
    return Fraction(int(v.numerator), int(v.denominator))


def to_domain_matrix(rows: Sequence[Row], ncols: int) -> DomainMatrix:
    data = {}
    for i, row in enumerate(rows):
        entries = {j: _to_qq(c) for j, c in row.items() if c != 0}
        if entries:
            data[i] = entries
    return DomainMatrix(data, (len(rows), ncols), QQ)


def from_domain_matrix(matrix: DomainMatrix) -> List[Row]:
    nrows, _ = matrix.shape
    rows: List[Row] = [{} for _ in range(nrows)]
    for (i, j), v in matrix.to_dok().items():
        if v:
            rows[i][j] = _from_qq(v)
    return rows


# ── Rank, echelon form, kernels ─────────────────────────────────────────────

def rank_of(rows: Sequence[Row], ncols: int) -> int:
    rows = [r for r in rows if r]
    if not rows or ncols == 0:
        return 0
    return to_domain_matrix(rows, ncols).rank()


def reduced_echelon(rows: Sequence[Row], ncols: int) -> Tuple[List[Row], Tuple[int, ...]]:
    """Nonzero RREF rows and their pivot columns."""
    rows = [r for r in rows if r]
    if not rows or ncols == 0:
        return [], ()
    rref, pivots = to_domain_matrix(rows, ncols).rref()
    out = from_domain_matrix(rref)[: len(pivots)]
    return out, tuple(pivots)


def kernel(images: Sequence[Row], target_dim: int) -> List[Row]:
    """Basis of {c : Σ c_i images[i] = 0}, in source coordinates."""
    source_dim = len(images)
    if source_dim == 0:
        return []
    if target_dim == 0 or not any(images):
        return [{i: Fraction(1)} for i in range(source_dim)]
    transposed: Dict[int, Row] = {}
    for i, row in enumerate(images):
        for j, c in row.items():
            if c:
                transposed.setdefault(j, {})[i] = c
    matrix = to_domain_matrix([transposed.get(j, {}) for j in range(target_dim)], source_dim)
    return [r for r in from_domain_matrix(matrix.nullspace()) if r]


def solve(columns: Sequence[Row], rhs: Row, nrows: int) -> Optional[Row]:
    """Some x with Σ x_j columns[j] = rhs, free variables set to zero; None if inconsistent."""
    ncols = len(columns)
    by_row: Dict[int, Row] = {}
    for j, col in enumerate(columns):
        for i, c in col.items():
            by_row.setdefault(i, {})[j] = c
    for i, c in rhs.items():
        by_row.setdefault(i, {})[ncols] = c
    rref, pivots = reduced_echelon([by_row.get(i, {}) for i in range(nrows)], ncols + 1)
    if ncols in pivots:
        return None
    solution: Row = {}
    for row, p in zip(rref, pivots):
        value = row.get(ncols, Fraction(0))
        if value:
            solution[p] = value
    return solution


def reduce_row(row: Row, rref: Sequence[Row], pivots: Sequence[int]) -> Row:
    """Remainder of a row modulo the span of a fully reduced echelon basis."""
    out = dict(row)
    for basis_row, p in zip(rref, pivots):
        c = out.get(p)
        if not c:
            continue
        for j, v in basis_row.items():
            nv = out.get(j, Fraction(0)) - c * v
            if nv:
                out[j] = nv
            else:
                out.pop(j, None)
    return out


# ── Element-level entry point ───────────────────────────────────────────────

def slice_rank(vectors: Sequence[Element], degree: int, algebra: Optional[FreeCGA] = None) -> int:
    """Exact rank of the span of homogeneous elements inside the degree slice."""
    if not vectors:
        return 0
    algebra = algebra or vectors[0].algebra
    ds = degree_slice(algebra, degree)
    rows = [ds.coordinates(v) for v in vectors]
    r = rank_of(rows, len(ds))
    log.debug("slice_rank deg=%d: %d vectors in %d-dim slice -> rank %d", degree, len(rows), len(ds), r)
    return r
