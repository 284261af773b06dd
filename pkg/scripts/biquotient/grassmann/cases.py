"""Parameters of a real Grassmannian case.

K0 = SO(2n+α) x SO(2k+β) inside G = SO(2n+2k+α+β); ℓ = 2n+α, m = 2k+β and
dim G/K0 = ℓm. The unoriented variants use K = S(O(ℓ) x O(m)).
"""

import itertools
from dataclasses import asdict, dataclass, replace
from typing import Dict, Iterator, List

from scripts.biquotient.config import MAX_BLOCK_SUM, SMALL_RANKS, default_cutoff
from scripts.biquotient.errors import UnsupportedCase
from scripts.biquotient.groups.orthogonal import SpecialOrthogonal
from scripts.biquotient.groups.product import ProductGroup

VARIANTS = ("oriented", "unoriented")
EQUIVARIANCES = ("ordinary", "left-isotropy", "two-sided")


@dataclass(frozen=True)
class GrassmannCase:
    n: int
    k: int
    alpha: int = 0
    beta: int = 0
    variant: str = "oriented"
    equivariance: str = "two-sided"

    def __post_init__(self):
        if self.n < 1 or self.k < 1:
            raise UnsupportedCase(
                f"Degenerate block n={self.n}, k={self.k}: both blocks need n, k >= 1"
            )
        if self.alpha not in (0, 1) or self.beta not in (0, 1):
            raise UnsupportedCase(f"alpha and beta must be 0 or 1, got {self.alpha}, {self.beta}")
        if self.variant not in VARIANTS:
            raise UnsupportedCase(f"Unknown variant {self.variant!r}; expected one of {VARIANTS}")
        if self.equivariance not in EQUIVARIANCES:
            raise UnsupportedCase(f"Unknown equivariance {self.equivariance!r}; expected one of {EQUIVARIANCES}")
        if self.n + self.k > MAX_BLOCK_SUM:
            raise UnsupportedCase(f"n + k = {self.n + self.k} exceeds the configured bound {MAX_BLOCK_SUM}")

    @property
    def ell(self) -> int:
        return 2 * self.n + self.alpha

    @property
    def m(self) -> int:
        return 2 * self.k + self.beta

    @property
    def dimension(self) -> int:
        return self.ell * self.m

    @property
    def oriented(self) -> bool:
        return self.variant == "oriented"

    @property
    def eta_degree(self) -> int:
        """Degree of the free exterior generator when α = β = 1."""
        return 2 * self.n + 2 * self.k + 1

    def group(self) -> SpecialOrthogonal:
        return SpecialOrthogonal(self.ell + self.m)

    def subgroup(self) -> ProductGroup:
        return ProductGroup([SpecialOrthogonal(self.ell), SpecialOrthogonal(self.m)])

    def default_cutoff(self) -> int:
        return default_cutoff(self.dimension)

    def with_(self, **changes) -> "GrassmannCase":
        return replace(self, **changes)

    @property
    def label(self) -> str:
        tilde = "~" if self.oriented else ""
        return f"G{tilde}{self.ell}(R{self.ell + self.m}) {self.variant} {self.equivariance}"

    @property
    def key(self) -> str:
        return f"n={self.n},k={self.k},a={self.alpha},b={self.beta},{self.variant},{self.equivariance}"

    def as_dict(self) -> Dict[str, object]:
        return asdict(self)


_KEYS = {"n": "n", "k": "k", "a": "alpha", "alpha": "alpha", "b": "beta", "beta": "beta"}


def parse_case(text: str) -> GrassmannCase:
    """Parse 'n=1,k=1,a=0,b=0,two-sided' (variant and equivariance may appear in any order)."""
    fields: Dict[str, object] = {}
    for token in (t.strip() for t in text.split(",")):
        if not token:
            continue
        if "=" in token:
            key, value = (s.strip() for s in token.split("=", 1))
            if key not in _KEYS:
                raise UnsupportedCase(f"Unknown case parameter {key!r}")
            try:
                fields[_KEYS[key]] = int(value)
            except ValueError:
                raise UnsupportedCase(f"Parameter {key} must be an integer, got {value!r}") from None
        elif token in VARIANTS:
            fields["variant"] = token
        elif token in EQUIVARIANCES:
            fields["equivariance"] = token
        else:
            raise UnsupportedCase(f"Unrecognized case token {token!r}")
    if "n" not in fields or "k" not in fields:
        raise UnsupportedCase(f"Case {text!r} must give both n and k")
    return GrassmannCase(**fields)


# (variant, equivariance) combinations that carry distinct checks
BATCH_SHAPES = [
    ("oriented", "two-sided"),
    ("unoriented", "two-sided"),
    ("oriented", "ordinary"),
    ("unoriented", "ordinary"),
    ("oriented", "left-isotropy"),
]


def small_cases() -> Iterator[GrassmannCase]:
    for n, k, alpha, beta in itertools.product(SMALL_RANKS, SMALL_RANKS, (0, 1), (0, 1)):
        for variant, equivariance in BATCH_SHAPES:
            yield GrassmannCase(n, k, alpha, beta, variant, equivariance)


def parameter_grid() -> List[GrassmannCase]:
    """One oriented two-sided case per (n, k, α, β) with n, k small."""
    return [c for c in small_cases() if c.oriented and c.equivariance == "two-sided"]
