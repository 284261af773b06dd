import json

import pytest

from scripts.biquotient.algebra.free_cga import FreeCGA, GeneratorDecl
from scripts.biquotient.algebra.series import complete_intersection_series
from scripts.biquotient.errors import (
    ActionDoesNotDescend, AlgebraError, FormatError, InconsistentPresentation,
)
from scripts.biquotient.presentations.pushout import pushout
from scripts.biquotient.presentations.quotient import (
    QuotientPresentation, contains, free_presentation, hilbert_function, tensor,
)
from scripts.biquotient.presentations.serialization import (
    dumps_model, dumps_presentation, element_from_json, element_to_json, load_model, load_presentation,
    loads_presentation, model_from_dict, model_to_dict, parse_rational,
)
from scripts.biquotient.presentations.sign_action import (
    SignAction, averaging_projector, check_descends, invariant_generators,
    invariant_hilbert_function,
)
from scripts.biquotient.sullivan.cohomology import cohomology
from scripts.biquotient.sullivan.model import SullivanModel


def two_spheres() -> QuotientPresentation:
    algebra = FreeCGA.from_degrees([("e", 2), ("e'", 2)])
    e, f = algebra.gen("e"), algebra.gen("e'")
    return QuotientPresentation(algebra, (e * f, e * e + f * f), "S2xS2")


# ── Hilbert functions ──────────────────────────────────────────────────────

def test_two_spheres():
    assert hilbert_function(two_spheres(), 6)["dims"] == [1, 0, 2, 0, 1, 0, 0]


def test_matches_complete_intersection_series():
    assert hilbert_function(two_spheres(), 10)["dims"] == complete_intersection_series([2, 2], [4, 4], 10)


def test_free_polynomial_ring():
    algebra = FreeCGA.from_degrees([("p1", 4)])
    assert hilbert_function(free_presentation(algebra), 8)["dims"] == [1, 0, 0, 0, 1, 0, 0, 0, 1]


def test_free_exterior_ring():
    algebra = FreeCGA.from_degrees([("z", 3)])
    table = hilbert_function(free_presentation(algebra), 3)
    assert table == {"max_degree": 3, "dims": [1, 0, 0, 1]}


def test_exterior_relation():
    algebra = FreeCGA.from_degrees([("a", 1), ("b", 1)])
    p = QuotientPresentation(algebra, (algebra.gen("a") * algebra.gen("b"),))
    assert hilbert_function(p, 3)["dims"] == [1, 2, 0, 0]


def test_inhomogeneous_relation_splits_into_components():
    algebra = FreeCGA.from_degrees([("x", 2)])
    x = algebra.gen("x")
    p = QuotientPresentation(algebra, (x + x * x,))
    assert hilbert_function(p, 6)["dims"] == [1, 0, 0, 0, 0, 0, 0]


def test_constant_term_is_inconsistent():
    algebra = FreeCGA.from_degrees([("x", 2)])
    p = QuotientPresentation(algebra, (algebra.gen("x") - 1,))
    with pytest.raises(InconsistentPresentation):
        hilbert_function(p, 4)


def test_relation_must_live_in_algebra():
    other = FreeCGA.from_degrees([("y", 2)])
    with pytest.raises(AlgebraError):
        QuotientPresentation(FreeCGA.from_degrees([("x", 2)]), (other.gen("y"),))


def test_ideal_membership():
    p = two_spheres()
    e, f = p.algebra.gen("e"), p.algebra.gen("e'")
    assert contains(p, e ** 3)
    assert contains(p, e * e + f * f)
    assert not contains(p, e * e)


def test_tensor_multiplies_tables():
    sphere = QuotientPresentation(FreeCGA.from_degrees([("x", 2)]), ())
    sphere = sphere.with_relations([sphere.algebra.gen("x") ** 2], "S2")
    other = QuotientPresentation(FreeCGA.from_degrees([("y", 2)]), ())
    other = other.with_relations([other.algebra.gen("y") ** 2], "S2")
    assert hilbert_function(tensor(sphere, other), 6)["dims"] == [1, 0, 2, 0, 1, 0, 0]


# ── Sign actions ────────────────────────────────────────────────────────────

def truncated_euler() -> QuotientPresentation:
    algebra = FreeCGA.from_degrees([("e", 2)])
    return QuotientPresentation(algebra, (algebra.gen("e") ** 4,), "Q[e]/(e^4)")


def test_invariants_of_truncated_polynomial():
    p = truncated_euler()
    action = SignAction.generated_by(p.algebra, [{"e": -1}])
    assert invariant_hilbert_function(p, action, 6)["dims"] == [1, 0, 0, 0, 1, 0, 0]


def test_trivial_action_gives_hilbert_function():
    p = two_spheres()
    action = SignAction.trivial(p.algebra)
    assert invariant_hilbert_function(p, action, 8) == hilbert_function(p, 8)


def test_projector_is_idempotent():
    p = two_spheres()
    action = SignAction.generated_by(p.algebra, [{"e": -1, "e'": -1}])
    for degree in (2, 4):
        projector = averaging_projector(p, action, degree)
        assert projector.matmul(projector).to_Matrix() == projector.to_Matrix()


def test_swapping_signs_on_two_spheres():
    p = two_spheres()
    action = SignAction.generated_by(p.algebra, [{"e": -1, "e'": -1}])
    assert invariant_hilbert_function(p, action, 6)["dims"] == [1, 0, 0, 0, 1, 0, 0]


def test_group_closure():
    algebra = FreeCGA.from_degrees([("e", 2), ("e'", 2)])
    action = SignAction.generated_by(algebra, [{"e": -1}, {"e'": -1}])
    assert action.order == 4


def test_non_group_rejected():
    algebra = FreeCGA.from_degrees([("e", 2)])
    with pytest.raises(AlgebraError):
        SignAction(algebra, ((-1,),))


def test_action_must_descend():
    algebra = FreeCGA.from_degrees([("x", 2), ("y", 2)])
    p = QuotientPresentation(algebra, (algebra.gen("x") - algebra.gen("y"),))
    action = SignAction.generated_by(algebra, [{"x": -1}])
    with pytest.raises(ActionDoesNotDescend):
        check_descends(p, action)


def test_invariant_generators():
    algebra = FreeCGA.from_degrees([("p", 4), ("p'", 4), ("e", 2), ("e'", 2)])
    action = SignAction.generated_by(algebra, [{"e": -1, "e'": -1}])
    assert [str(g) for g in invariant_generators(action, 4)] == ["p", "p'", "e^2", "e*e'", "e'^2"]


# ── Pushouts ────────────────────────────────────────────────────────────────

def test_pushout_identifies_generators():
    left = free_presentation(FreeCGA.from_degrees([("x", 2)]))
    right = free_presentation(FreeCGA.from_degrees([("y", 2)]))
    glued = pushout(left, right, [(left.algebra.gen("x"), right.algebra.gen("y"))])
    assert glued.algebra.names == ("x", "y")
    assert hilbert_function(glued, 4)["dims"] == [1, 0, 1, 0, 1]


def test_pushout_renames_colliding_right_side():
    side = free_presentation(FreeCGA.from_degrees([("x", 2)]))
    glued = pushout(side, side, [(side.algebra.gen("x"), side.algebra.gen("x"))])
    assert glued.algebra.names == ("x", "x_r")


def test_pushout_is_symmetric():
    base = FreeCGA.from_degrees([("e", 2), ("e'", 2)])
    e, f = base.gen("e"), base.gen("e'")
    circle = free_presentation(FreeCGA.from_degrees([("u", 2)]))
    u = circle.algebra.gen("u")
    left = free_presentation(base)
    pairs = [(e * e + f * f, u * u), (e * f, u * u)]
    swapped = [(y, x) for x, y in pairs]
    assert (
        hilbert_function(pushout(left, circle, pairs), 8)
        == hilbert_function(pushout(circle, left, swapped), 8)
    )


def test_pushout_rejects_degree_mismatch():
    left = free_presentation(FreeCGA.from_degrees([("x", 2)]))
    right = free_presentation(FreeCGA.from_degrees([("y", 4)]))
    with pytest.raises(AlgebraError):
        pushout(left, right, [(left.algebra.gen("x"), right.algebra.gen("y"))])


# ── JSON ────────────────────────────────────────────────────────────────────

def test_load_fixture(fixture_path):
    p = load_presentation(fixture_path("s2xs2.json"))
    assert p.label == "H(S2 x S2)"
    assert p == two_spheres()
    assert hilbert_function(p, 6)["dims"] == [1, 0, 2, 0, 1, 0, 0]


def test_presentation_survives_dump_and_load():
    p = two_spheres()
    assert loads_presentation(dumps_presentation(p)) == p


def test_inconsistent_fixture_loads_but_fails_hilbert(fixture_path):
    p = load_presentation(fixture_path("inconsistent.json"))
    with pytest.raises(InconsistentPresentation):
        hilbert_function(p, 4)


@pytest.mark.parametrize("name", ["malformed.json", "missing.json"])
def test_unreadable_files(fixture_path, name):
    with pytest.raises(FormatError):
        load_presentation(fixture_path(name))


def test_element_json_uses_rational_strings():
    algebra = FreeCGA.from_degrees([("x", 2)])
    x = algebra.gen("x") * -2
    assert element_to_json(x) == [{"coeff": "-2/1", "exponents": {"x": 1}}]
    assert element_from_json(algebra, element_to_json(x)) == x


@pytest.mark.parametrize("text", ["abc", "1/0", 1.5, None])
def test_bad_rationals(text):
    with pytest.raises(FormatError):
        parse_rational(text)


def test_unknown_generator_in_relation():
    with pytest.raises(FormatError):
        loads_presentation('{"generators": [{"name": "x", "degree": 2}], '
                           '"relations": [[{"coeff": "1/1", "exponents": {"y": 1}}]]}')


def test_model_differential_on_even_generator_rejected():
    with pytest.raises(FormatError):
        model_from_dict({
            "generators": [{"name": "u", "degree": 4}],
            "differential": {"u": []},
        })


def test_load_model_fixture(fixture_path):
    model = load_model(fixture_path("koszul.json"))
    assert model.fiber_names == ("z",)
    assert model.base.names == ("u",)


def test_model_round_trip_keeps_closed_generators():
    base = FreeCGA.from_degrees([("u", 4)])
    model = SullivanModel(base, (GeneratorDecl("z", 3), GeneratorDecl("w", 5)), {"z": base.gen("u")}, "S5")
    data = model_to_dict(model)
    assert data["differential"]["w"] == []
    back = model_from_dict(json.loads(dumps_model(model)))
    assert back.fiber_names == ("z", "w")
    assert back.differential["w"].is_zero()
    assert model_to_dict(back) == data
    assert cohomology(back, 6)["dims"] == [1, 0, 0, 0, 0, 1, 0]
