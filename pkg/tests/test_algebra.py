import random
from fractions import Fraction

import pytest

from scripts.biquotient.algebra.element import Element, homogeneous_components
from scripts.biquotient.algebra.free_cga import FreeCGA, GeneratorDecl, monomial_basis
from scripts.biquotient.algebra.series import poincare_series
from scripts.biquotient.errors import AlgebraError
from tests.conftest import random_element


# ── Generators and monomials ────────────────────────────────────────────────

def test_generator_names_are_validated():
    with pytest.raises(AlgebraError):
        GeneratorDecl("1x", 2)
    with pytest.raises(AlgebraError):
        GeneratorDecl("x", 0)


def test_duplicate_generators_rejected():
    with pytest.raises(AlgebraError):
        FreeCGA.from_degrees([("x", 2), ("x", 4)])


def test_monomial_basis_canonical_order():
    algebra = FreeCGA.from_degrees([("e", 2), ("e'", 2)])
    assert monomial_basis(algebra, 4) == ((2, 0), (1, 1), (0, 2))


def test_odd_generator_exponent_capped(mixed_algebra):
    with pytest.raises(AlgebraError):
        mixed_algebra.monomial({"a": 2})
    assert all(m[0] <= 1 and m[2] <= 1 for d in range(12) for m in mixed_algebra.monomial_basis(d))


@pytest.mark.parametrize("degrees", [
    [("x", 2)],
    [("z", 3)],
    [("a", 1), ("x", 2), ("b", 3), ("y", 4)],
    [("p1", 4), ("e", 4), ("z3", 3), ("eta3", 3)],
])
def test_basis_sizes_match_poincare_series(degrees):
    algebra = FreeCGA.from_degrees(degrees)
    series = poincare_series(algebra, 14)
    assert [len(monomial_basis(algebra, d)) for d in range(15)] == series


def test_tensor_refuses_shared_names():
    left = FreeCGA.from_degrees([("x", 2)])
    with pytest.raises(AlgebraError):
        left.tensor(left)


def test_str_shows_exterior_and_polynomial_parts(mixed_algebra):
    assert str(mixed_algebra) == "Λ[a(1), b(3)] ⊗ Q[x(2), y(4)]"


# ── Products ────────────────────────────────────────────────────────────────

def test_odd_generators_anticommute(mixed_algebra):
    a, b = mixed_algebra.gen("a"), mixed_algebra.gen("b")
    assert a * b == -(b * a)
    assert (a * a).is_zero()
    assert (b * b).is_zero()


def test_even_generators_are_central(mixed_algebra):
    a, x, y = mixed_algebra.gen("a"), mixed_algebra.gen("x"), mixed_algebra.gen("y")
    assert x * a == a * x
    assert x * y == y * x


@pytest.mark.parametrize("seed", range(8))
def test_graded_commutativity(mixed_algebra, seed):
    rng = random.Random(seed)
    for _ in range(5):
        u = random_element(mixed_algebra, rng)
        v = random_element(mixed_algebra, rng)
        for du, cu in homogeneous_components(u).items():
            for dv, cv in homogeneous_components(v).items():
                assert cu * cv == cv * cu * (-1) ** (du * dv)


@pytest.mark.parametrize("seed", range(8))
def test_associativity_and_distributivity(mixed_algebra, seed):
    rng = random.Random(100 + seed)
    u, v, w = (random_element(mixed_algebra, rng) for _ in range(3))
    assert (u * v) * w == u * (v * w)
    assert u * (v + w) == u * v + u * w


def test_mismatched_algebras_raise(mixed_algebra):
    other = FreeCGA.from_degrees([("x", 2)])
    with pytest.raises(AlgebraError):
        mixed_algebra.gen("x") * other.gen("x")


# ── Elements ────────────────────────────────────────────────────────────────

def test_zero_coefficients_dropped(mixed_algebra):
    x = mixed_algebra.gen("x")
    assert (x - x).is_zero()
    assert str(x - x) == "0"


def test_degree_and_homogeneity(mixed_algebra):
    x, y = mixed_algebra.gen("x"), mixed_algebra.gen("y")
    assert (x * x + y).degree == 4
    assert not (x + y).is_homogeneous()
    assert (x + y).degree is None


def test_homogeneous_components_sum_back(mixed_algebra):
    x, y = mixed_algebra.gen("x"), mixed_algebra.gen("y")
    total = 1 + x + y + x * y
    parts = homogeneous_components(total)
    assert sorted(parts) == [0, 2, 4, 6]
    assert sum(parts.values(), mixed_algebra.zero()) == total


def test_rational_coefficients_stay_exact(mixed_algebra):
    x = mixed_algebra.gen("x")
    half = x * Fraction(1, 3) + x * Fraction(2, 3)
    assert half == x


def test_string_form():
    algebra = FreeCGA.from_degrees([("e", 2), ("e'", 2)])
    e, f = algebra.gen("e"), algebra.gen("e'")
    assert str(e * e - 2 * e * f + f * f) == "e^2 - 2*e*e' + e'^2"


def test_substitute_carries_signs_between_odd_images():
    source = FreeCGA.from_degrees([("u", 1), ("v", 1)])
    target = FreeCGA.from_degrees([("a", 1), ("b", 1)])
    swap = {"u": target.gen("b"), "v": target.gen("a")}
    uv = source.gen("u") * source.gen("v")
    assert uv.substitute(swap, target) == -(target.gen("a") * target.gen("b"))


def test_substitute_requires_every_image(mixed_algebra):
    target = FreeCGA.from_degrees([("t", 2)])
    with pytest.raises(AlgebraError):
        mixed_algebra.gen("x").substitute({}, target)


def test_embed_with_rename():
    small = FreeCGA.from_degrees([("p1", 4)])
    big = FreeCGA.from_degrees([("p1", 4), ("pi1", 4)])
    assert small.gen("p1").embed(big, {"p1": "pi1"}) == big.gen("pi1")


def test_negative_power_rejected(mixed_algebra):
    with pytest.raises(AlgebraError):
        mixed_algebra.gen("x") ** -1


def test_from_terms_accumulates(mixed_algebra):
    x = Element.from_terms(mixed_algebra, [(1, {"x": 2}), (Fraction(1, 2), {"x": 2})])
    assert x.terms == {mixed_algebra.monomial({"x": 2}): Fraction(3, 2)}
