import pytest

from scripts.biquotient.errors import AlgebraError, NotExpressible, UnsupportedGroup
from scripts.biquotient.groups.catalog import parse_group
from scripts.biquotient.groups.restriction import (
    RestrictionMap, block_restriction, determinant_involution, determinant_involutions,
    express_in_invariants, involution_map, maximal_torus, quaternionic_torus_map, restriction_via_torus,
    torus_reflection, torus_restriction,
)
from scripts.biquotient.presentations.sign_action import SignAction
from scripts.biquotient.sullivan.biquotient import universal_model
from scripts.biquotient.sullivan.cohomology import cohomology


# ── Catalog ─────────────────────────────────────────────────────────────────

@pytest.mark.parametrize("code, names, degrees", [
    ("SO(2)", ("e",), (2,)),
    ("SO(3)", ("p1",), (4,)),
    ("SO(4)", ("p1", "e"), (4, 4)),
    ("SO(5)", ("p1", "p2"), (4, 8)),
    ("SO(6)", ("p1", "p2", "e"), (4, 8, 6)),
    ("Spin(7)", ("p1", "p2", "p3"), (4, 8, 12)),
    ("U(2)", ("c1", "c2"), (2, 4)),
    ("SU(3)", ("c2", "c3"), (4, 6)),
    ("Sp(2)", ("q1", "q2"), (4, 8)),
    ("T(2)", ("t1", "t2"), (2, 2)),
    ("SO(2)xSO(2)", ("e", "e'"), (2, 2)),
    ("SO(2)xSO(3)", ("e", "p1'"), (2, 4)),
    ("SO(2)xSO(2)xSO(2)", ("e", "e'", "e''"), (2, 2, 2)),
])
def test_classifying_rings(code, names, degrees):
    ring = parse_group(code).classifying_ring
    assert ring.names == names
    assert ring.degrees == degrees


@pytest.mark.parametrize("code, degrees", [
    ("SO(3)", [3]),
    ("SO(4)", [3, 3]),
    ("SO(7)", [3, 7, 11]),
    ("SO(8)", [3, 7, 11, 7]),
    ("U(3)", [1, 3, 5]),
    ("SU(2)", [3]),
    ("Sp(3)", [3, 7, 11]),
    ("T(3)", [1, 1, 1]),
])
def test_primitive_degrees(code, degrees):
    assert parse_group(code).primitive_degrees == degrees


def test_primitive_names_and_transgression():
    G = parse_group("SO(4)")
    assert [z.name for z in G.primitive_generators] == ["z3", "eta3"]
    assert G.transgression == {"z3": "p1", "eta3": "e"}
    assert [z.name for z in parse_group("T(2)").primitive_generators] == ["y1", "y2"]


def test_product_torus_is_contiguous():
    K = parse_group("SO(4)xSO(3)")
    assert K.torus_names == ("t1", "t2", "t3")
    assert [f.torus_names for f in K.factors] == [("t1", "t2"), ("t3",)]
    assert K.factor_index("p1'") == 1


def test_dimensions():
    assert parse_group("SO(5)").dimension == 10
    assert parse_group("Sp(2)").dimension == 10
    assert parse_group("SU(3)").dimension == 8
    assert parse_group("SO(2)xSO(3)").dimension == 4


@pytest.mark.parametrize("code", ["G2", "E8", "SO(1)", "Spin(2)", "SU(1)", "Foo(3)", "SO(2)x", "U(0)"])
def test_unsupported_codes(code):
    with pytest.raises(UnsupportedGroup):
        parse_group(code)


def test_group_equality_follows_code_and_decoration():
    assert parse_group("SO(4)") == parse_group("SO(4)")
    assert parse_group("SO(4)") != parse_group("Spin(4)")
    assert parse_group("SO(3)xSO(3)").factors[1] != parse_group("SO(3)")


# ── Torus images ────────────────────────────────────────────────────────────

def test_orthogonal_torus_images():
    G = parse_group("SO(4)")
    T = G.torus_ring
    t1, t2 = T.gen("t1"), T.gen("t2")
    assert G.torus_images["p1"] == t1 * t1 + t2 * t2
    assert G.torus_images["e"] == t1 * t2


def test_euler_squares_to_top_pontryagin_on_torus():
    G = parse_group("SO(6)")
    rho = torus_restriction(G)
    ring = G.classifying_ring
    T = maximal_torus(G).classifying_ring
    t = [T.gen(n) for n in ("t1", "t2", "t3")]
    top = t[0] ** 2 * t[1] ** 2 * t[2] ** 2
    assert rho.apply(ring.gen("e") ** 2) == top


def test_special_unitary_last_coordinate():
    G = parse_group("SU(2)")
    t1 = G.torus_ring.gen("t1")
    assert G.torus_images["c2"] == -(t1 * t1)


# ── Restrictions ────────────────────────────────────────────────────────────

def test_block_restriction_of_so4():
    rho = block_restriction(parse_group("SO(4)"), parse_group("SO(2)xSO(2)"))
    ring = rho.target.classifying_ring
    e, f = ring.gen("e"), ring.gen("e'")
    assert rho.images["p1"] == e * e + f * f
    assert rho.images["e"] == e * f


def test_block_restriction_with_odd_block():
    rho = block_restriction(parse_group("SO(5)"), parse_group("SO(2)xSO(3)"))
    ring = rho.target.classifying_ring
    e, p = ring.gen("e"), ring.gen("p1'")
    assert rho.images["p1"] == e * e + p
    assert rho.images["p2"] == e * e * p


def test_euler_restricts_to_zero_with_odd_blocks():
    rho = block_restriction(parse_group("SO(6)"), parse_group("SO(3)xSO(3)"))
    assert rho.images["e"].is_zero()


def test_torus_and_block_restrictions_agree():
    G, K = parse_group("SO(6)"), parse_group("SO(4)xSO(2)")
    block = block_restriction(G, K)
    via_torus = restriction_via_torus(G, K)
    assert all(block.images[n] == via_torus.images[n] for n in G.classifying_ring.names)


def test_block_restriction_refuses_mismatches():
    with pytest.raises(UnsupportedGroup):
        block_restriction(parse_group("SO(5)"), parse_group("SO(2)xSO(2)"))
    with pytest.raises(UnsupportedGroup):
        block_restriction(parse_group("U(3)"), parse_group("SO(2)xU(1)"))
    with pytest.raises(UnsupportedGroup):
        block_restriction(parse_group("SU(3)"), parse_group("SU(2)xSU(2)"))


def test_unitary_inside_symplectic():
    rho = restriction_via_torus(parse_group("Sp(2)"), parse_group("U(2)"))
    ring = rho.target.classifying_ring
    c1, c2 = ring.gen("c1"), ring.gen("c2")
    assert rho.images["q1"] == c1 * c1 - 2 * c2
    assert rho.images["q2"] == c2 * c2


def test_special_unitary_blocks_agree_with_torus():
    G, K = parse_group("SU(6)"), parse_group("SU(3)xSU(3)")
    a1, a2, b1, b2 = K.torus_coordinates()
    torus_map = dict(zip(G.torus_names, [a1, a2, -a1 - a2, b1, b2]))
    block = block_restriction(G, K)
    via_torus = restriction_via_torus(G, K, torus_map)
    assert all(block.images[n] == via_torus.images[n] for n in G.classifying_ring.names)
    ring = K.classifying_ring
    assert block.images["c2"] == ring.gen("c2") + ring.gen("c2'")
    assert block.images["c6"] == ring.gen("c3") * ring.gen("c3'")


def test_symplectic_inside_unitary():
    G, K = parse_group("U(4)"), parse_group("Sp(2)")
    rho = restriction_via_torus(G, K, quaternionic_torus_map(G, K))
    ring = K.classifying_ring
    assert rho.images["c2"] == -ring.gen("q1")
    assert rho.images["c4"] == ring.gen("q2")
    assert rho.images["c1"].is_zero() and rho.images["c3"].is_zero()


def test_quaternionic_map_needs_twice_the_rank():
    with pytest.raises(UnsupportedGroup):
        quaternionic_torus_map(parse_group("U(3)"), parse_group("Sp(2)"))
    with pytest.raises(UnsupportedGroup):
        quaternionic_torus_map(parse_group("SO(4)"), parse_group("Sp(2)"))


def test_functoriality_through_the_torus():
    G, K = parse_group("SO(4)"), parse_group("SO(2)xSO(2)")
    composed = block_restriction(G, K).compose(torus_restriction(K))
    assert composed.images == torus_restriction(G).images


def test_compose_checks_endpoints():
    rho = block_restriction(parse_group("SO(4)"), parse_group("SO(2)xSO(2)"))
    with pytest.raises(AlgebraError):
        rho.compose(torus_restriction(parse_group("SO(4)")))


def test_restriction_is_multiplicative():
    G = parse_group("SO(5)")
    rho = restriction_via_torus(G, parse_group("SO(2)xSO(3)"))
    ring = G.classifying_ring
    x, y = ring.gen("p1") + 3, ring.gen("p2") * ring.gen("p1")
    assert rho.apply(x * y) == rho.apply(x) * rho.apply(y)


def test_restriction_map_validates_degrees():
    G, K = parse_group("SO(3)"), parse_group("SO(2)")
    with pytest.raises(AlgebraError):
        RestrictionMap(G, K, {"p1": K.classifying_ring.gen("e")})
    with pytest.raises(AlgebraError):
        RestrictionMap(G, K, {})


def test_express_in_invariants():
    G = parse_group("U(2)")
    T = G.torus_ring
    t1, t2 = T.gen("t1"), T.gen("t2")
    ring = G.classifying_ring
    assert express_in_invariants(t1 * t1 + t2 * t2, G) == ring.gen("c1") ** 2 - 2 * ring.gen("c2")


def test_non_invariant_polynomial_not_expressible():
    G = parse_group("U(2)")
    with pytest.raises(NotExpressible):
        express_in_invariants(G.torus_ring.gen("t1"), G)
    H = parse_group("SO(3)")
    with pytest.raises(NotExpressible):
        express_in_invariants(H.torus_ring.gen("t1"), H)


# ── Involutions ─────────────────────────────────────────────────────────────

@pytest.mark.parametrize("code", ["SO(2)", "SO(4)", "SO(6)"])
def test_determinant_involution_intertwines_torus_reflection(code):
    G = parse_group(code)
    rho = torus_restriction(G)
    on_ring = determinant_involution(G)
    on_torus = torus_reflection(G)
    g, h = involution_map(on_ring), involution_map(on_torus)
    ring = G.classifying_ring
    for name in ring.names:
        x = ring.gen(name) ** 3
        assert rho.apply(on_ring.apply(g, x)) == on_torus.apply(h, rho.apply(x))


def test_determinant_involutions_of_a_product():
    K = parse_group("SO(2)xSO(3)xSO(4)")
    actions = determinant_involutions(K)
    assert len(actions) == 2
    with pytest.raises(UnsupportedGroup):
        determinant_involution(K, 1)
    with pytest.raises(UnsupportedGroup):
        determinant_involution(parse_group("SO(3)"))


def test_involution_map_needs_order_two():
    K = parse_group("SO(2)xSO(2)")
    both = SignAction.generated_by(K.classifying_ring, [{"e": -1}, {"e'": -1}])
    with pytest.raises(AlgebraError):
        involution_map(both)


# ── Universal bundles ───────────────────────────────────────────────────────

@pytest.mark.slow
@pytest.mark.parametrize("code", ["SO(7)", "SO(8)", "Spin(7)", "U(4)", "Sp(3)", "SO(2)xSO(3)"])
def test_universal_bundle_oracle(code):
    assert cohomology(universal_model(parse_group(code)), 24)["dims"] == [1] + [0] * 24
