"""Closed-world catalog: parse group codes such as 'SO(4)', 'Sp(2)', 'SO(2)xSO(3)'."""

import logging
import re
from typing import Dict, Type

from scripts.biquotient.errors import UnsupportedGroup
from scripts.biquotient.groups._base_group import BaseGroup
from scripts.biquotient.groups.orthogonal import SpecialOrthogonal, Spin
from scripts.biquotient.groups.product import ProductGroup
from scripts.biquotient.groups.symplectic import Symplectic
from scripts.biquotient.groups.torus import Torus
from scripts.biquotient.groups.unitary import SpecialUnitary, Unitary

log = logging.getLogger(__name__)

FAMILIES: Dict[str, Type[BaseGroup]] = {
    "SO": SpecialOrthogonal,
    "Spin": Spin,
    "U": Unitary,
    "SU": SpecialUnitary,
    "Sp": Symplectic,
    "T": Torus,
}

EXCEPTIONAL = ("G2", "F4", "E6", "E7", "E8")

_CODE_RE = re.compile(r"^(SO|Spin|SU|Sp|U|T)\((\d+)\)$")


def parse_factor(code: str) -> BaseGroup:
    code = code.strip()
    if code.upper().replace("_", "") in EXCEPTIONAL:
        raise UnsupportedGroup(f"Exceptional group {code} is not in the catalog")
    match = _CODE_RE.match(code)
    if not match:
        raise UnsupportedGroup(
            f"Unknown group code {code!r}; expected one of SO(m), Spin(m), U(n), SU(n), Sp(n), T(n)"
        )
    stem, size = match.group(1), int(match.group(2))
    return FAMILIES[stem](size)


def parse_group(code: str) -> BaseGroup:
    """A single catalog group, or a product of them joined by 'x'."""
    parts = [p for p in code.strip().split("x")]
    if any(not p.strip() for p in parts):
        raise UnsupportedGroup(f"Malformed group code {code!r}")
    if len(parts) == 1:
        return parse_factor(parts[0])
    return ProductGroup([parse_factor(p) for p in parts])
