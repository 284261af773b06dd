"""Data contract for one CLI invocation, validated before dispatch."""

from typing import Optional, TypedDict


class RunConfig(TypedDict):
    command: str                   # hilbert | model | verify
    case: Optional[str]            # e.g. "n=1,k=1,a=0,b=0,two-sided"
    file: Optional[str]
    max_degree: Optional[int]
    fmt: str                       # json | text
    out: Optional[str]
    representatives: bool
    all_small: bool
    workers: int
    verbose: bool
