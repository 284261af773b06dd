"""Data contract for the cohomology of a pure Sullivan model."""

from typing import Dict, List, Optional, TypedDict

from scripts.biquotient.algebra.element import Element


class CohomologyReport(TypedDict):
    label: str
    max_degree: int
    dims: List[int]                 # Betti numbers 0..max_degree
    slice_dims: List[int]           # dim of the cochain slice, 0..max_degree+1
    ranks: List[int]                # rank of d leaving degree d, 0..max_degree
    representatives: Optional[Dict[int, List[Element]]]
