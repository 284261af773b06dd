from ._base_group import BaseGroup, elementary_symmetric
from .orthogonal import SpecialOrthogonal, Spin
from .unitary import SpecialUnitary, Unitary
from .symplectic import Symplectic
from .torus import Torus
from .product import ProductGroup
from .catalog import parse_group
from .restriction import (
    RestrictionMap, block_restriction, determinant_involution, determinant_involutions,
    express_in_invariants, maximal_torus, restriction_via_torus, torus_inclusion,
    torus_reflection, torus_restriction,
)
