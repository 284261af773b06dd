"""Pure Sullivan algebras (Q[base] ⊗ Λ(fiber), d) with d(base) = 0 and d(fiber) ⊂ Q[base]."""

import logging
from dataclasses import dataclass, field
from functools import cached_property
from typing import Dict, Mapping, Sequence, Tuple

from scripts.biquotient.algebra.element import Element
from scripts.biquotient.algebra.free_cga import FreeCGA, GeneratorDecl
from scripts.biquotient.errors import AlgebraError, InvalidModel

log = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class SullivanModel:
    base: FreeCGA
    fiber: Tuple[GeneratorDecl, ...]
    differential: Dict[str, Element] = field(default_factory=dict)
    label: str = ""

    def __post_init__(self):
        object.__setattr__(self, "fiber", tuple(self.fiber))
        object.__setattr__(self, "differential", dict(self.differential))

    @classmethod
    def from_total(
        cls,
        base: FreeCGA,
        fiber: Sequence[GeneratorDecl],
        differential: Mapping[str, Element],
        label: str = "",
    ) -> "SullivanModel":
        """Build from differential values written over the total algebra (as read from JSON)."""
        return cls(base, tuple(fiber), dict(differential), label)

    @cached_property
    def algebra(self) -> FreeCGA:
        """The total algebra: base generators first, then the odd fiber generators."""
        try:
            return FreeCGA(self.base.generators + self.fiber)
        except AlgebraError as e:
            raise InvalidModel(str(e)) from None

    @property
    def fiber_names(self) -> Tuple[str, ...]:
        return tuple(g.name for g in self.fiber)

    def d_of(self, name: str) -> Element:
        """d of a fiber generator, as an element of the total algebra."""
        return self._d_total[self.algebra.index(name)]

    @cached_property
    def _d_total(self) -> Dict[int, Element]:
        validate(self)
        out: Dict[int, Element] = {}
        for g in self.fiber:
            value = self.differential.get(g.name)
            if value is None:
                out[self.algebra.index(g.name)] = Element.zero(self.algebra)
            elif value.algebra == self.algebra:
                out[self.algebra.index(g.name)] = value
            else:
                out[self.algebra.index(g.name)] = value.embed(self.algebra)
        return out

    def __str__(self) -> str:
        lines = [f"{self.label or 'model'}: {self.algebra}"]
        for name in self.fiber_names:
            lines.append(f"  d{name} = {self.differential.get(name, 0)}")
        return "\n".join(lines)


def validate(model: SullivanModel) -> None:
    """Confirm purity and homogeneity; raise InvalidModel with a descriptive message otherwise."""
    for g in model.base.generators:
        if g.is_odd:
            raise InvalidModel(f"Base generator {g.name} has odd degree {g.degree}; the base must be even")
    for g in model.fiber:
        if not g.is_odd:
            raise InvalidModel(f"Fiber generator {g.name} has even degree {g.degree}; fibers must be odd")
    total = model.algebra
    fiber_degrees = {g.name: g.degree for g in model.fiber}
    for name, value in model.differential.items():
        if name not in fiber_degrees:
            raise InvalidModel(f"Differential assigned to {name}, which is not an odd fiber generator")
        if value.algebra == total:
            if value.involves(model.fiber_names):
                raise InvalidModel(f"d({name}) = {value} involves odd generators; d must land in the base")
        elif value.algebra != model.base:
            raise InvalidModel(f"d({name}) lives in {value.algebra}, not in the base {model.base}")
        if value.is_zero():
            continue
        want = fiber_degrees[name] + 1
        if not value.is_homogeneous():
            raise InvalidModel(f"d({name}) = {value} is not homogeneous")
        if value.degree != want:
            raise InvalidModel(f"d({name}) = {value} has degree {value.degree} but must have degree {want}")


def apply_d(model: SullivanModel, x: Element) -> Element:
    """Extend d as a degree +1 derivation: d(ab) = (da)b + (-1)^|a| a(db)."""
    algebra = model.algebra
    if x.algebra == model.base:
        x = x.embed(algebra)
    elif x.algebra != algebra:
        raise AlgebraError(f"Element of {x.algebra} is not in the model {algebra}")
    d_total = model._d_total
    odd = [i for i in algebra.odd_indices if not d_total[i].is_zero()]
    total = Element.zero(algebra)
    for m, c in x.terms.items():
        # odd factors sit after the base part, in declaration order
        position = 0
        for i in algebra.odd_indices:
            if not m[i]:
                continue
            if i in odd:
                rest = list(m)
                rest[i] = 0
                sign = -1 if position % 2 else 1
                total = total + Element.from_monomial(algebra, tuple(rest), sign * c) * d_total[i]
            position += 1
    return total
