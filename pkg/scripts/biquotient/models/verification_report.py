"""Data contract for a two-pipeline comparison."""

from typing import Dict, List, TypedDict


class DegreeVerdict(TypedDict):
    degree: int
    a: int
    b: int
    match: bool


class VerificationReport(TypedDict):
    check: str                     # case | corollary | pushout | formality | versatility | oracle
    label: str
    case: Dict[str, object]        # parameters of the case that was checked
    max_degree: int
    source_a: str                  # how table A was computed
    source_b: str                  # how table B was computed
    table_a: List[int]
    table_b: List[int]
    degrees: List[DegreeVerdict]
    passed: bool
    notes: List[str]
