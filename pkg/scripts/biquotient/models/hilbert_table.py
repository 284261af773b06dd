"""Data contract for a Hilbert function truncated at a cutoff."""

from typing import List, TypedDict


class HilbertTable(TypedDict):
    max_degree: int
    dims: List[int]        # dims[d] for 0 <= d <= max_degree


def hilbert_table(dims: List[int]) -> HilbertTable:
    return {"max_degree": len(dims) - 1, "dims": list(dims)}
