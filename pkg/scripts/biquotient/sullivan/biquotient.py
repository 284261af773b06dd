"""Pure models of homogeneous spaces and two-sided quotients H\\G/K.

For H, K ⊂ G the model is (H(BH) ⊗ H(BK) ⊗ Λ(P_G), d) with
d z = ρ_K*(τz) - ρ_H*(τz); the left (H) copy keeps its names and the right
(K) copy is mirrored, p -> pi, e -> eps, c -> kappa, q -> theta, t -> s.
Dropping the right copy leaves the Cartan algebra of G/H with
d z = -ρ_H*(τz).
"""

import logging
import re
from typing import Dict, Optional

from scripts.biquotient.algebra.element import Element
from scripts.biquotient.algebra.free_cga import FreeCGA
from scripts.biquotient.errors import InvalidModel
from scripts.biquotient.groups._base_group import BaseGroup
from scripts.biquotient.groups.restriction import RestrictionMap
from scripts.biquotient.sullivan.model import SullivanModel

log = logging.getLogger(__name__)

MIRROR = {"p": "pi", "e": "eps", "c": "kappa", "q": "theta", "t": "s"}

_PART_RE = re.compile(r"^(p|e|c|q|t)(\d*)('*)$")


def mirror_name(name: str) -> str:
    parts = []
    for part in name.split("_"):
        match = _PART_RE.match(part)
        if not match:
            return name + "_r"
        stem, index, primes = match.groups()
        parts.append(MIRROR[stem] + index + primes)
    return "_".join(parts)


def mirror_rename(ring: FreeCGA) -> Dict[str, str]:
    return {name: mirror_name(name) for name in ring.names}


def kapovitch_model(
    G: BaseGroup,
    left: Optional[RestrictionMap],
    right: Optional[RestrictionMap],
    label: str = "",
) -> SullivanModel:
    """Model of the two-sided quotient, or of G/H when one side is None."""
    if left is None and right is None:
        raise InvalidModel("At least one restriction map is required; use universal_model for EG")
    for rho in (left, right):
        if rho is not None and rho.source != G:
            raise InvalidModel(f"Restriction {rho} does not start at {G.code}")

    rename = mirror_rename(right.target.classifying_ring) if right else {}
    base = FreeCGA()
    if left:
        base = base.tensor(left.target.classifying_ring)
    if right:
        base = base.tensor(right.target.classifying_ring.renamed(rename))

    G_ring = G.classifying_ring
    differential: Dict[str, Element] = {}
    for z in G.primitive_generators:
        tau = G_ring.gen(G.transgression[z.name])
        value = Element.zero(base)
        if right:
            value = value + right.apply(tau).embed(base, rename)
        if left:
            value = value - left.apply(tau).embed(base)
        differential[z.name] = value

    if not label:
        lhs = left.target.code if left else "1"
        rhs = right.target.code if right else "1"
        label = f"{lhs}\\{G.code}/{rhs}"
    model = SullivanModel(base, G.primitive_generators, differential, label)
    log.debug("%s", model)
    return model


def cartan_model(rho: RestrictionMap, label: str = "") -> SullivanModel:
    """(H(BK) ⊗ Λ(P_G), d z = -ρ*(τz)), the Cartan algebra of G/K."""
    return kapovitch_model(rho.source, rho, None, label or f"{rho.source.code}/{rho.target.code}")


def universal_model(G: BaseGroup) -> SullivanModel:
    """(H(BG) ⊗ Λ(P_G), z ↦ τz): a model of EG, acyclic when the transgression data is right."""
    ring = G.classifying_ring
    differential = {z: ring.gen(g) for z, g in G.transgression.items()}
    return SullivanModel(ring, G.primitive_generators, differential, f"E{G.code}")
