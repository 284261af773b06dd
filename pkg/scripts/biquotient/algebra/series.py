"""Truncated integer power series, used as independent oracles for Hilbert tables."""

from typing import Iterable, List, Sequence

from scripts.biquotient.algebra.free_cga import FreeCGA
from scripts.biquotient.errors import AlgebraError

Series = List[int]


def polynomial(coeffs: Sequence[int], max_degree: int) -> Series:
    out = [0] * (max_degree + 1)
    for d, c in enumerate(coeffs[: max_degree + 1]):
        out[d] = c
    return out


def monomial_series(degree: int, max_degree: int, coeff: int = 1) -> Series:
    out = [0] * (max_degree + 1)
    out[0] = 1
    if degree <= max_degree:
        out[degree] += coeff
    return out


def series_product(a: Sequence[int], b: Sequence[int], max_degree: int) -> Series:
    out = [0] * (max_degree + 1)
    for i, x in enumerate(a[: max_degree + 1]):
        if not x:
            continue
        for j, y in enumerate(b[: max_degree + 1 - i]):
            out[i + j] += x * y
    return out


def series_divide(a: Sequence[int], b: Sequence[int], max_degree: int) -> Series:
    """a / b as a power series; b must have constant term 1."""
    if not b or b[0] != 1:
        raise AlgebraError("Series division needs a divisor with constant term 1")
    a = list(a[: max_degree + 1]) + [0] * max(0, max_degree + 1 - len(a))
    out = [0] * (max_degree + 1)
    for d in range(max_degree + 1):
        acc = a[d]
        for j in range(1, min(d, len(b) - 1) + 1):
            acc -= b[j] * out[d - j]
        out[d] = acc
    return out


def geometric_inverse(degree: int, max_degree: int) -> Series:
    """1 / (1 - q^degree)."""
    return [1 if d % degree == 0 else 0 for d in range(max_degree + 1)]


def poincare_series(algebra: FreeCGA, max_degree: int) -> Series:
    """∏_{odd g}(1 + q^|g|) · ∏_{even g} 1/(1 - q^|g|), truncated."""
    out = polynomial([1], max_degree)
    for g in algebra.generators:
        if g.is_odd:
            out = series_product(out, monomial_series(g.degree, max_degree), max_degree)
        else:
            out = series_product(out, geometric_inverse(g.degree, max_degree), max_degree)
    return out


def complete_intersection_series(
    generator_degrees: Iterable[int],
    relation_degrees: Iterable[int],
    max_degree: int,
    exterior_degrees: Iterable[int] = (),
) -> Series:
    """∏(1 - q^{d_i}) / ∏(1 - q^{g_j}), times ∏(1 + q^{h}) for free exterior factors."""
    out = polynomial([1], max_degree)
    for g in generator_degrees:
        out = series_product(out, geometric_inverse(g, max_degree), max_degree)
    for d in relation_degrees:
        out = series_product(out, monomial_series(d, max_degree, coeff=-1), max_degree)
    for h in exterior_degrees:
        out = series_product(out, monomial_series(h, max_degree), max_degree)
    return out


def euler_characteristic(dims: Sequence[int]) -> int:
    return sum(-x if d % 2 else x for d, x in enumerate(dims))
