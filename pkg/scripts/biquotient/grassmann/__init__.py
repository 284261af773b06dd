from .cases import GrassmannCase, parse_case, small_cases
from .builders import (
    build_model, corollary_presentation, he_presentation, orientation_action,
    presentation_for, pushout_presentation,
)
from .versatility import VersatilityCase
from .verify import (
    plan_all_small, plan_case, run_batch, verify_case, verify_corollary,
    verify_formality_factorization, verify_homogeneous_formality, verify_pushout_equivalence,
    verify_universal_bundle, verify_versatility,
)
