"""Sparse exact elements of a free graded-commutative algebra."""

from fractions import Fraction
from typing import Dict, Iterable, Mapping, Optional, Tuple, Union

from scripts.biquotient.algebra.free_cga import FreeCGA, Monomial, monomial_product
from scripts.biquotient.errors import AlgebraError

Scalar = Union[int, Fraction]


class Element:
    """Rational linear combination of normalized monomials.

    Immutable by convention: every operation returns a new Element. Terms are
    kept sorted in canonical monomial order and never store a zero coefficient.
    """

    __slots__ = ("algebra", "terms")

    def __init__(self, algebra: FreeCGA, terms: Optional[Mapping[Monomial, Scalar]] = None):
        self.algebra = algebra
        clean = {m: Fraction(c) for m, c in (terms or {}).items() if c != 0}
        self.terms: Dict[Monomial, Fraction] = dict(sorted(clean.items(), key=lambda kv: tuple(-e for e in kv[0])))

    # ── Constructors ────────────────────────────────────────────────────────

    @classmethod
    def zero(cls, algebra: FreeCGA) -> "Element":
        return cls(algebra)

    @classmethod
    def scalar(cls, algebra: FreeCGA, c: Scalar) -> "Element":
        return cls(algebra, {algebra.unit_monomial(): c})

    @classmethod
    def generator(cls, algebra: FreeCGA, name: str) -> "Element":
        return cls(algebra, {algebra.monomial({name: 1}): 1})

    @classmethod
    def from_monomial(cls, algebra: FreeCGA, m: Monomial, c: Scalar = 1) -> "Element":
        return cls(algebra, {m: c})

    @classmethod
    def from_terms(cls, algebra: FreeCGA, terms: Iterable[Tuple[Scalar, Dict[str, int]]]) -> "Element":
        """Build from (coefficient, {generator: exponent}) pairs, normalizing odd order."""
        total: Dict[Monomial, Fraction] = {}
        for c, exps in terms:
            m = algebra.monomial(exps)
            total[m] = total.get(m, Fraction(0)) + Fraction(c)
        return cls(algebra, total)

    # ── Queries ─────────────────────────────────────────────────────────────

    def is_zero(self) -> bool:
        return not self.terms

    def degrees(self) -> Tuple[int, ...]:
        return tuple(sorted({self.algebra.monomial_degree(m) for m in self.terms}))

    def is_homogeneous(self) -> bool:
        return len(self.degrees()) <= 1

    @property
    def degree(self) -> Optional[int]:
        """Degree of a nonzero homogeneous element; None for zero or mixed degree."""
        degs = self.degrees()
        return degs[0] if len(degs) == 1 else None

    def constant_term(self) -> Fraction:
        return self.terms.get(self.algebra.unit_monomial(), Fraction(0))

    def involves(self, names: Iterable[str]) -> bool:
        idx = [self.algebra.index(n) for n in names]
        return any(m[i] for m in self.terms for i in idx)

    # ── Arithmetic ──────────────────────────────────────────────────────────

    def _check(self, other: "Element") -> None:
        if other.algebra != self.algebra:
            raise AlgebraError(f"Mismatched algebras: {self.algebra} vs {other.algebra}")

    def _coerce(self, other) -> "Element":
        if isinstance(other, Element):
            self._check(other)
            return other
        if isinstance(other, (int, Fraction)):
            return Element.scalar(self.algebra, other)
        return NotImplemented

    def __add__(self, other) -> "Element":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, Fraction(0)) + c
        return Element(self.algebra, out)

    __radd__ = __add__

    def __neg__(self) -> "Element":
        return Element(self.algebra, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other) -> "Element":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other) -> "Element":
        return (-self) + other

    def __mul__(self, other) -> "Element":
        if isinstance(other, (int, Fraction)):
            return Element(self.algebra, {m: c * other for m, c in self.terms.items()})
        if isinstance(other, Element):
            return multiply(self, other)
        return NotImplemented

    def __rmul__(self, other) -> "Element":
        if isinstance(other, (int, Fraction)):
            return self * other
        return NotImplemented

    def __pow__(self, k: int) -> "Element":
        if k < 0:
            raise AlgebraError("Negative powers are not defined")
        result = Element.scalar(self.algebra, 1)
        for _ in range(k):
            result = multiply(result, self)
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = Element.scalar(self.algebra, other)
        if not isinstance(other, Element):
            return NotImplemented
        return self.algebra == other.algebra and self.terms == other.terms

    __hash__ = None

    # ── Structure ───────────────────────────────────────────────────────────

    def homogeneous_components(self) -> Dict[int, "Element"]:
        return homogeneous_components(self)

    def substitute(self, images: Mapping[str, "Element"], target: FreeCGA) -> "Element":
        """Multiplicative extension of generator images into the target algebra.

        Factors are multiplied in declaration order, so Koszul signs among odd
        images come out of `multiply`.
        """
        result = Element.zero(target)
        powers: Dict[Tuple[str, int], Element] = {}
        for m, c in self.terms.items():
            term = Element.scalar(target, c)
            for name, e in zip(self.algebra.names, m):
                if not e:
                    continue
                if name not in images:
                    raise AlgebraError(f"No image given for generator {name}")
                key = (name, e)
                if key not in powers:
                    img = images[name]
                    if img.algebra != target:
                        raise AlgebraError(f"Image of {name} lives in {img.algebra}, expected {target}")
                    powers[key] = img ** e
                term = multiply(term, powers[key])
                if term.is_zero():
                    break
            result = result + term
        return result

    def embed(self, target: FreeCGA, rename: Optional[Mapping[str, str]] = None) -> "Element":
        """Send each generator to the (possibly renamed) generator of a larger algebra."""
        rename = rename or {}
        images = {name: target.gen(rename.get(name, name)) for name in self.algebra.names}
        return self.substitute(images, target)

    # ── Display ─────────────────────────────────────────────────────────────

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for m, c in self.terms.items():
            mono = self.algebra.monomial_str(m)
            mag = abs(c)
            if mono == "1":
                body = str(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{mag}*{mono}"
            sign = "-" if c < 0 else "+"
            parts.append((sign, body))
        first_sign, first_body = parts[0]
        out = ("-" if first_sign == "-" else "") + first_body
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    def __repr__(self) -> str:
        return f"Element({self})"


def multiply(a: Element, b: Element) -> Element:
    """Bilinear product with Koszul signs; odd squares vanish."""
    if a.algebra != b.algebra:
        raise AlgebraError(f"Mismatched algebras: {a.algebra} vs {b.algebra}")
    algebra = a.algebra
    out: Dict[Monomial, Fraction] = {}
    for ma, ca in a.terms.items():
        for mb, cb in b.terms.items():
            sign, m = monomial_product(algebra, ma, mb)
            if not sign:
                continue
            out[m] = out.get(m, Fraction(0)) + sign * ca * cb
    return Element(algebra, out)


def homogeneous_components(x: Element) -> Dict[int, Element]:
    """Split by degree; zero components are omitted and the parts sum back to x."""
    split: Dict[int, Dict[Monomial, Fraction]] = {}
    for m, c in x.terms.items():
        split.setdefault(x.algebra.monomial_degree(m), {})[m] = c
    return {d: Element(x.algebra, split[d]) for d in sorted(split)}
