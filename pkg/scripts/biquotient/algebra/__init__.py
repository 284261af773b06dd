from .free_cga import FreeCGA, GeneratorDecl, Monomial, monomial_basis
from .element import Element, homogeneous_components, multiply
from .slices import DegreeSlice, degree_slice, slice_rank
