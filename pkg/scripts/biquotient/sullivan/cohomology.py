"""Cohomology of a pure Sullivan model, degree by degree, over Q."""

import logging
from typing import Dict, List

from scripts.biquotient.algebra.element import Element
from scripts.biquotient.algebra.slices import (
    Row, degree_slice, kernel, rank_of, reduce_row, reduced_echelon,
)
from scripts.biquotient.errors import AlgebraError
from scripts.biquotient.models.cohomology_report import CohomologyReport
from scripts.biquotient.sullivan.model import SullivanModel, apply_d

log = logging.getLogger(__name__)


def differential_rows(model: SullivanModel, degree: int) -> List[Row]:
    """Matrix of d: C^degree -> C^(degree+1), one row per basis monomial of the source."""
    source = degree_slice(model.algebra, degree)
    target = degree_slice(model.algebra, degree + 1)
    return [
        target.coordinates(apply_d(model, Element.from_monomial(model.algebra, m)))
        for m in source.basis
    ]


def cohomology(model: SullivanModel, max_degree: int, representatives: bool = False) -> CohomologyReport:
    """dims[d] = dim ker(d on C^d) - dim im(d from C^(d-1)), for 0 <= d <= max_degree."""
    if max_degree < 0:
        raise AlgebraError(f"Negative cutoff {max_degree}")
    algebra = model.algebra
    slice_dims = [len(degree_slice(algebra, d)) for d in range(max_degree + 2)]

    rows: Dict[int, List[Row]] = {}
    ranks: List[int] = []
    for d in range(max_degree + 1):
        rows[d] = differential_rows(model, d)
        ranks.append(rank_of(rows[d], slice_dims[d + 1]))
        log.debug("cohomology %s deg=%d: |C|=%d rank d=%d", model.label, d, slice_dims[d], ranks[-1])

    dims = [slice_dims[d] - ranks[d] - (ranks[d - 1] if d else 0) for d in range(max_degree + 1)]

    reps = None
    if representatives:
        reps = {d: _representatives(model, d, rows) for d in range(max_degree + 1) if dims[d]}

    return {
        "label": model.label,
        "max_degree": max_degree,
        "dims": dims,
        "slice_dims": slice_dims,
        "ranks": ranks,
        "representatives": reps,
    }


def _representatives(model: SullivanModel, degree: int, rows: Dict[int, List[Row]]) -> List[Element]:
    """First cocycles, in reduced echelon order, that are independent modulo coboundaries."""
    ds = degree_slice(model.algebra, degree)
    n = len(ds)
    cocycles, _ = reduced_echelon(kernel(rows[degree], len(degree_slice(model.algebra, degree + 1))), n)
    span = list(rows[degree - 1]) if degree else []
    echelon, pivots = reduced_echelon(span, n)
    chosen: List[Element] = []
    for z in cocycles:
        if not reduce_row(z, echelon, pivots):
            continue
        chosen.append(ds.element(z))
        span.append(z)
        echelon, pivots = reduced_echelon(span, n)
    return chosen


def euler_bookkeeping(report: CohomologyReport) -> bool:
    """Σ(-1)^d dim C^d = Σ(-1)^d dims[d] + (-1)^D rank(d_D), summed over 0..D."""
    D = report["max_degree"]
    lhs = sum((-1) ** d * report["slice_dims"][d] for d in range(D + 1))
    rhs = sum((-1) ** d * report["dims"][d] for d in range(D + 1)) + (-1) ** D * report["ranks"][D]
    return lhs == rhs


def is_cocycle(model: SullivanModel, x: Element) -> bool:
    return apply_d(model, x).is_zero()
