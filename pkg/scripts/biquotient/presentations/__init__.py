from .quotient import (
    QuotientPresentation, contains, free_presentation, hilbert_function, ideal_slice,
    quotient_slice, tensor,
)
from .sign_action import SignAction, averaging_projector, invariant_generators, invariant_hilbert_function
from .pushout import pushout
