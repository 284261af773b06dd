"""Presented rings and Sullivan models for Grassmannian cases.

Two-sided rings are H(BK0) ⊗ H(BK0) modulo the homogeneous components of
pp' - ππ' (and ee' - εε' when both blocks are even), with the free factor
Λ[η] when both blocks are odd. Left generators keep their catalog names
(p1, e, p1', e'); right generators are mirrored (pi1, eps, pi1', eps').
"""

import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, List, Tuple

from scripts.biquotient.algebra.element import Element
from scripts.biquotient.algebra.free_cga import FreeCGA, GeneratorDecl
from scripts.biquotient.config import CACHE_SIZE
from scripts.biquotient.errors import UnsupportedCase
from scripts.biquotient.grassmann.cases import GrassmannCase
from scripts.biquotient.groups.orthogonal import SpecialOrthogonal
from scripts.biquotient.groups.restriction import RestrictionMap, block_restriction
from scripts.biquotient.presentations.pushout import pushout
from scripts.biquotient.presentations.quotient import QuotientPresentation, free_presentation
from scripts.biquotient.presentations.sign_action import SignAction
from scripts.biquotient.sullivan.biquotient import cartan_model, kapovitch_model, mirror_rename
from scripts.biquotient.sullivan.model import SullivanModel

log = logging.getLogger(__name__)

TACIT_MODES = ("eliminate", "materialize")


@dataclass(frozen=True)
class Side:
    """One copy of the block ring, with the pieces the relations are assembled from."""
    ring: FreeCGA
    total: Element               # pp' as an inhomogeneous element
    euler: Element               # ee' (or the single generator e_e'); zero when absent
    euler_names: Tuple[str, ...]
    tacit: Tuple[Element, ...]


def _oriented_side(case: GrassmannCase, tacit: str) -> Side:
    materialize = tacit == "materialize"
    factors: List[SpecialOrthogonal] = case.subgroup().factors
    gens: List[GeneratorDecl] = []
    for f in factors:
        for g in f.classifying_generators:
            if materialize and g.name in f.euler_names:
                gens.append(GeneratorDecl(f.decorate(f"p{f.torus_rank}"), 4 * f.torus_rank))
            gens.append(g)
    ring = FreeCGA(tuple(gens))

    total = ring.one()
    euler = ring.one()
    tacit_rels: List[Element] = []
    euler_names: List[str] = []
    for f in factors:
        part = ring.one()
        for g in f.classifying_generators:
            if g.name not in f.euler_names:
                part = part + ring.gen(g.name)
        if f.even:
            e = ring.gen(f.decorate("e"))
            euler_names.append(f.decorate("e"))
            if materialize:
                top = ring.gen(f.decorate(f"p{f.torus_rank}"))
                tacit_rels.append(e * e - top)
            else:
                top = e * e
            part = part + top
            euler = euler * e
        total = total * part
    if len(euler_names) < len(factors):
        euler = ring.zero()
    return Side(ring, total, euler, tuple(euler_names), tuple(tacit_rels))


def _unoriented_side(case: GrassmannCase) -> Side:
    """Generators p_1..p_r of each factor, plus the product Euler class e_e' when both blocks are even."""
    factors: List[SpecialOrthogonal] = case.subgroup().factors
    gens = [
        GeneratorDecl(f.decorate(f"p{j}"), 4 * j)
        for f in factors for j in range(1, f.torus_rank + 1)
    ]
    both_even = all(f.even for f in factors)
    if both_even:
        gens.append(GeneratorDecl("e_e'", case.ell + case.m))
    ring = FreeCGA(tuple(gens))

    total = ring.one()
    for f in factors:
        part = ring.one()
        for j in range(1, f.torus_rank + 1):
            part = part + ring.gen(f.decorate(f"p{j}"))
        total = total * part
    if not both_even:
        return Side(ring, total, ring.zero(), (), ())
    euler = ring.gen("e_e'")
    top = ring.one()
    for f in factors:
        top = top * ring.gen(f.decorate(f"p{f.torus_rank}"))
    return Side(ring, total, euler, ("e_e'",), (euler * euler - top,))


def _side(case: GrassmannCase, tacit: str) -> Side:
    if tacit not in TACIT_MODES:
        raise UnsupportedCase(f"Unknown tacit mode {tacit!r}; expected one of {TACIT_MODES}")
    if case.oriented or (case.alpha and case.beta):
        return _oriented_side(case, tacit)
    return _unoriented_side(case)


def _eta(case: GrassmannCase) -> Tuple[GeneratorDecl, ...]:
    if case.alpha and case.beta:
        return (GeneratorDecl(f"eta{case.eta_degree}", case.eta_degree),)
    return ()


# ── Presentations ───────────────────────────────────────────────────────────

def he_presentation(case: GrassmannCase, tacit: str = "eliminate") -> QuotientPresentation:
    """The two-sided equivariant cohomology ring of the case, as a presentation."""
    if case.equivariance == "ordinary":
        raise UnsupportedCase("Ordinary cohomology is presented by corollary_presentation")
    side = _side(case, tacit)
    rename = mirror_rename(side.ring)
    algebra = FreeCGA(side.ring.generators + side.ring.renamed(rename).generators + _eta(case))

    def left(x: Element) -> Element:
        return x.embed(algebra)

    def right(x: Element) -> Element:
        return x.embed(algebra, rename)

    relations = [left(side.total) - right(side.total)]
    if not side.euler.is_zero():
        relations.append(left(side.euler) - right(side.euler))
    relations += [left(r) for r in side.tacit] + [right(r) for r in side.tacit]

    label = f"H({case.label})"
    log.debug("presentation %s: %s", label, ", ".join(str(r) for r in relations))
    return QuotientPresentation(algebra, tuple(relations), label)


def right_generator_names(case: GrassmannCase, tacit: str = "eliminate") -> Tuple[str, ...]:
    side = _side(case, tacit)
    return tuple(mirror_rename(side.ring).values())


def corollary_presentation(case: GrassmannCase, tacit: str = "eliminate") -> QuotientPresentation:
    """Ordinary cohomology: the two-sided ring modulo the right-side generators (π - 1, π' - 1, ε, ε')."""
    two_sided = he_presentation(case.with_(equivariance="two-sided"), tacit)
    algebra = two_sided.algebra
    kill = [algebra.gen(name) for name in right_generator_names(case, tacit)]
    return two_sided.with_relations(kill, f"H({case.with_(equivariance='ordinary').label})")


def presentation_for(case: GrassmannCase, tacit: str = "eliminate") -> QuotientPresentation:
    if case.equivariance == "ordinary":
        return corollary_presentation(case, tacit)
    return he_presentation(case, tacit)


def orientation_action(case: GrassmannCase, presentation: QuotientPresentation) -> SignAction:
    """Z/2 x Z/2 reversing the left Euler classes together, and the right ones together."""
    side = _oriented_side(case, "eliminate")
    rename = mirror_rename(side.ring)
    algebra = presentation.algebra
    flips: List[Dict[str, int]] = []
    for names in (side.euler_names, tuple(rename[n] for n in side.euler_names)):
        present = [n for n in names if algebra.has(n)]
        if present:
            flips.append({n: -1 for n in present})
    return SignAction.generated_by(algebra, flips)


# ── Models ──────────────────────────────────────────────────────────────────

@lru_cache(maxsize=CACHE_SIZE)
def block_map(case: GrassmannCase) -> RestrictionMap:
    return block_restriction(case.group(), case.subgroup())


def build_model(case: GrassmannCase) -> SullivanModel:
    """Kapovitch model for two-sided/left-isotropy, Cartan algebra for ordinary."""
    if not case.oriented and not (case.alpha and case.beta):
        raise UnsupportedCase(
            "Unoriented cases have no model over the disconnected group; "
            "they are computed as invariants of the oriented presentation"
        )
    rho = block_map(case.with_(variant="oriented", equivariance="two-sided"))
    label = f"model {case.label}"
    if case.equivariance == "ordinary":
        return cartan_model(rho, label)
    return kapovitch_model(case.group(), rho, rho, label)


def pushout_presentation(case: GrassmannCase) -> QuotientPresentation:
    """H(BK0) ⊗_{H(BG)} H(BK0), both sides restricted along the block inclusion."""
    rho = block_map(case.with_(variant="oriented", equivariance="two-sided"))
    return two_sided_pushout(rho, f"pushout {case.label}")


def two_sided_pushout(rho: RestrictionMap, label: str) -> QuotientPresentation:
    """H(BK) ⊗_{H(BG)} H(BK) for one restriction map used on both sides."""
    return biquotient_pushout(rho, rho, label)


def biquotient_pushout(left: RestrictionMap, right: RestrictionMap, label: str) -> QuotientPresentation:
    """H(BH) ⊗_{H(BG)} H(BK); the right copy is mirrored."""
    if left.source != right.source:
        raise UnsupportedCase(f"{left} and {right} do not start at the same group")
    left_ring = left.target.classifying_ring
    rename = mirror_rename(right.target.classifying_ring)
    right_ring = right.target.classifying_ring.renamed(rename)
    pairs = []
    G_ring = left.source.classifying_ring
    for g in left.source.classifying_generators:
        tau = G_ring.gen(g.name)
        pairs.append((left.apply(tau), right.apply(tau).embed(right_ring, rename)))
    return pushout(
        free_presentation(left_ring, f"H(B{left.target.code})"),
        free_presentation(right_ring, f"H(B{right.target.code})"),
        pairs,
        label,
    )
