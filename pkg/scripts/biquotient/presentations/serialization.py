"""JSON format for presentations, elements and models.

Presentation:
    {"label": str, "generators": [{"name": str, "degree": int}],
     "relations": [[{"coeff": "a/b", "exponents": {gen: int}}]]}
Model: the same generator list (base and odd generators together) plus
    {"differential": {odd_gen: [terms]}}.
Rationals are written "num/den" with the sign on the numerator.
"""

import json
from fractions import Fraction
from pathlib import Path
from typing import Any, Dict, List, Union

from scripts.biquotient.algebra.element import Element
from scripts.biquotient.algebra.free_cga import FreeCGA, GeneratorDecl
from scripts.biquotient.errors import AlgebraError, FormatError
from scripts.biquotient.presentations.quotient import QuotientPresentation


def format_rational(c: Fraction) -> str:
    return f"{c.numerator}/{c.denominator}"


def parse_rational(text: Any) -> Fraction:
    if isinstance(text, int) and not isinstance(text, bool):
        return Fraction(text)
    if not isinstance(text, str):
        raise FormatError(f"Coefficient must be a string 'num/den', got {text!r}")
    try:
        return Fraction(text.strip().replace("−", "-"))
    except (ValueError, ZeroDivisionError):
        raise FormatError(f"Malformed rational {text!r}") from None


# ── Elements ────────────────────────────────────────────────────────────────

def element_to_json(x: Element) -> List[Dict[str, Any]]:
    out = []
    for m, c in x.terms.items():
        exps = {name: e for name, e in zip(x.algebra.names, m) if e}
        out.append({"coeff": format_rational(c), "exponents": exps})
    return out


def element_from_json(algebra: FreeCGA, data: Any) -> Element:
    if not isinstance(data, list):
        raise FormatError(f"Element must be a list of terms, got {type(data).__name__}")
    terms = []
    for term in data:
        if not isinstance(term, dict) or "coeff" not in term:
            raise FormatError(f"Malformed term {term!r}")
        exps = term.get("exponents", {})
        if not isinstance(exps, dict) or not all(isinstance(v, int) for v in exps.values()):
            raise FormatError(f"Malformed exponents {exps!r}")
        terms.append((parse_rational(term["coeff"]), exps))
    try:
        return Element.from_terms(algebra, terms)
    except AlgebraError as e:
        raise FormatError(str(e)) from None


def _generators_from_json(data: Any) -> FreeCGA:
    if not isinstance(data, list):
        raise FormatError("'generators' must be a list")
    try:
        return FreeCGA(tuple(GeneratorDecl(str(g["name"]), int(g["degree"])) for g in data))
    except (KeyError, TypeError, ValueError) as e:
        raise FormatError(f"Malformed generator list: {e}") from None


def _generators_to_json(algebra: FreeCGA) -> List[Dict[str, Any]]:
    return [{"name": g.name, "degree": g.degree} for g in algebra.generators]


# ── Presentations ───────────────────────────────────────────────────────────

def presentation_to_dict(p: QuotientPresentation) -> Dict[str, Any]:
    return {
        "label": p.label,
        "generators": _generators_to_json(p.algebra),
        "relations": [element_to_json(r) for r in p.relations],
    }


def presentation_from_dict(data: Any) -> QuotientPresentation:
    if not isinstance(data, dict) or "generators" not in data:
        raise FormatError("Presentation must be an object with 'generators'")
    algebra = _generators_from_json(data["generators"])
    relations = tuple(element_from_json(algebra, r) for r in data.get("relations", []))
    return QuotientPresentation(algebra, relations, str(data.get("label", "")))


def dumps_presentation(p: QuotientPresentation) -> str:
    return json.dumps(presentation_to_dict(p), indent=2, sort_keys=True, ensure_ascii=False)


def loads_presentation(text: str) -> QuotientPresentation:
    return presentation_from_dict(_loads(text))


def load_presentation(path: Union[str, Path]) -> QuotientPresentation:
    return loads_presentation(_read(path))


# ── Models ──────────────────────────────────────────────────────────────────

def model_to_dict(model) -> Dict[str, Any]:
    return {
        "label": model.label,
        "generators": _generators_to_json(model.algebra),
        "differential": {name: element_to_json(model.d_of(name)) for name in model.fiber_names},
    }


def model_from_dict(data: Any):
    from scripts.biquotient.sullivan.model import SullivanModel

    if not isinstance(data, dict) or "generators" not in data:
        raise FormatError("Model must be an object with 'generators'")
    total = _generators_from_json(data["generators"])
    base = FreeCGA(tuple(g for g in total.generators if not g.is_odd))
    fiber = tuple(g for g in total.generators if g.is_odd)
    raw = data.get("differential", {})
    if not isinstance(raw, dict):
        raise FormatError("'differential' must be an object")
    unknown = set(raw) - {g.name for g in fiber}
    if unknown:
        raise FormatError(f"Differential given on non-odd or unknown generators {sorted(unknown)}")
    ordered = FreeCGA(base.generators + fiber)
    differential = {name: element_from_json(ordered, value) for name, value in raw.items()}
    return SullivanModel.from_total(base, fiber, differential, str(data.get("label", "")))


def dumps_model(model) -> str:
    return json.dumps(model_to_dict(model), indent=2, sort_keys=True, ensure_ascii=False)


def load_model(path: Union[str, Path]):
    return model_from_dict(_loads(_read(path)))


def _read(path: Union[str, Path]) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as e:
        raise FormatError(f"Cannot read {path}: {e.strerror}") from None


def _loads(text: str) -> Any:
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise FormatError(f"Malformed JSON: {e}") from None
