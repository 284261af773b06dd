"""Tensor products over a common base: left ⊗_B right as a presentation."""

import logging
from typing import Dict, List, Optional, Sequence, Tuple

from scripts.biquotient.algebra.element import Element
from scripts.biquotient.algebra.free_cga import FreeCGA
from scripts.biquotient.errors import AlgebraError
from scripts.biquotient.presentations.quotient import QuotientPresentation

log = logging.getLogger(__name__)

RIGHT_SUFFIX = "_r"


def _right_rename(left: FreeCGA, right: FreeCGA) -> Dict[str, str]:
    """Rename the right side only when names collide; then every right name gets the suffix."""
    if not set(left.names) & set(right.names):
        return {}
    rename = {name: name + RIGHT_SUFFIX for name in right.names}
    clash = set(rename.values()) & set(left.names)
    if clash:
        raise AlgebraError(f"Cannot separate generator names {sorted(clash)}")
    return rename


def pushout(
    left: QuotientPresentation,
    right: QuotientPresentation,
    base_gens: Sequence[Tuple[Element, Element]],
    label: Optional[str] = None,
) -> QuotientPresentation:
    """Disjoint union of generators; relations are both sides' relations and x_left - x_right per pair."""
    rename = _right_rename(left.algebra, right.algebra)
    algebra = left.algebra.tensor(right.algebra.renamed(rename))

    relations: List[Element] = [r.embed(algebra) for r in left.relations]
    relations += [r.embed(algebra, rename) for r in right.relations]
    for x, y in base_gens:
        if x.algebra != left.algebra or y.algebra != right.algebra:
            raise AlgebraError(f"Pair ({x}, {y}) does not live in the left and right algebras")
        if not (x.is_homogeneous() and y.is_homogeneous()):
            raise AlgebraError(f"Pair ({x}, {y}) is not homogeneous")
        if x.degree is not None and y.degree is not None and x.degree != y.degree:
            raise AlgebraError(f"Degree mismatch in pair: {x} has degree {x.degree}, {y} has {y.degree}")
        diff = x.embed(algebra) - y.embed(algebra, rename)
        if not diff.is_zero():
            relations.append(diff)

    label = label or f"{left.label} ⊗ {right.label}"
    log.debug("pushout %s: %d generators, %d relations", label, len(algebra), len(relations))
    return QuotientPresentation(algebra, tuple(relations), label)
