"""Function spec files: JSON term lists with exact "p/q" coefficients.

Schema::

    {"dimension": d,
     "components": [{"terms": [{"coeff": "p/q", "powers": [e1, ..., ed]}, ...]}, ...],
     "builtins": [{"component": i, "fn": "sin", "coeff": "p/q",
                   "arg": {"terms": [...]}}, ...],          # optional
     "domain_margin": "p/q"}                                  # optional
"""

from __future__ import annotations

import json
import re
from pathlib import Path

from gmpy2 import mpq

from .c1name import (
    BUILTINS,
    DEFAULT_MARGIN,
    AnalyticComponent,
    AnalyticName,
    BuiltinTerm,
    C1Name,
    PolynomialName,
)
from .poly import Polynomial

_RATIONAL = re.compile(r"^\s*[+-]?\d+\s*(/\s*\d+\s*)?$")


class SpecError(ValueError):
    """A malformed function spec; the message starts with the offending field."""

    def __init__(self, field: str, message: str):
        super().__init__(f"{field}: {message}")
        self.field = field


def parse_rational(value, field: str) -> mpq:
    if isinstance(value, bool):
        raise SpecError(field, "expected a rational string 'p/q'")
    if isinstance(value, int):
        return mpq(value)
    if not isinstance(value, str) or not _RATIONAL.match(value):
        raise SpecError(field, f"{value!r} is not an exact rational literal 'p/q'")
    num, _, den = value.replace(" ", "").partition("/")
    if den and int(den) == 0:
        raise SpecError(field, "zero denominator")
    return mpq(int(num), int(den) if den else 1)


def _parse_terms(obj, d: int, field: str) -> Polynomial:
    if not isinstance(obj, dict) or "terms" not in obj:
        raise SpecError(field, "expected an object with a 'terms' list")
    terms = obj["terms"]
    if not isinstance(terms, list):
        raise SpecError(f"{field}.terms", "expected a list")
    items = []
    for t, term in enumerate(terms):
        tf = f"{field}.terms[{t}]"
        if not isinstance(term, dict):
            raise SpecError(tf, "expected an object")
        if "coeff" not in term or "powers" not in term:
            raise SpecError(tf, "needs 'coeff' and 'powers'")
        c = parse_rational(term["coeff"], f"{tf}.coeff")
        powers = term["powers"]
        if not isinstance(powers, list) or not all(isinstance(e, int) and not isinstance(e, bool) for e in powers):
            raise SpecError(f"{tf}.powers", "expected a list of integers")
        if len(powers) != d:
            raise SpecError(f"{tf}.powers", f"dimension mismatch: {len(powers)} exponents for d={d}")
        if any(e < 0 for e in powers):
            raise SpecError(f"{tf}.powers", "negative exponent")
        items.append((tuple(powers), c))
    return Polynomial(d, items)


def parse_spec(data) -> C1Name:
    """Build a C1-name from a decoded spec object."""
    if not isinstance(data, dict):
        raise SpecError("<root>", "expected a JSON object")
    d = data.get("dimension")
    if not isinstance(d, int) or isinstance(d, bool) or d < 1:
        raise SpecError("dimension", "expected a positive integer")
    comps = data.get("components")
    if not isinstance(comps, list):
        raise SpecError("components", "expected a list")
    if len(comps) != d:
        raise SpecError("components", f"dimension mismatch: {len(comps)} components for d={d}")
    polys = [_parse_terms(c, d, f"components[{i}]") for i, c in enumerate(comps)]
    margin = DEFAULT_MARGIN
    if "domain_margin" in data:
        margin = parse_rational(data["domain_margin"], "domain_margin")
        if margin <= 0:
            raise SpecError("domain_margin", "must be positive")
    builtins = data.get("builtins", [])
    if not isinstance(builtins, list):
        raise SpecError("builtins", "expected a list")
    unknown = set(data) - {"dimension", "components", "builtins", "domain_margin", "name"}
    if unknown:
        raise SpecError(sorted(unknown)[0], "unknown field")
    if not builtins:
        return PolynomialName(polys, margin)
    extra: list[list[BuiltinTerm]] = [[] for _ in range(d)]
    for b, entry in enumerate(builtins):
        bf = f"builtins[{b}]"
        if not isinstance(entry, dict):
            raise SpecError(bf, "expected an object")
        i = entry.get("component")
        if not isinstance(i, int) or isinstance(i, bool) or not 0 <= i < d:
            raise SpecError(f"{bf}.component", f"expected an index in [0, {d})")
        fn = entry.get("fn")
        if fn not in BUILTINS:
            raise SpecError(f"{bf}.fn", f"unknown builtin {fn!r}; expected one of {', '.join(BUILTINS)}")
        coeff = parse_rational(entry.get("coeff", "1"), f"{bf}.coeff")
        arg = _parse_terms(entry.get("arg"), d, f"{bf}.arg")
        extra[i].append(BuiltinTerm(fn, coeff, arg))
    return AnalyticName([AnalyticComponent(p, tuple(e)) for p, e in zip(polys, extra)], margin)


def load_spec_data(path) -> dict:
    p = Path(path)
    try:
        text = p.read_text()
    except OSError as e:
        raise SpecError("--spec", f"cannot read {p}: {e.strerror}") from None
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise SpecError("<root>", f"invalid JSON ({e.msg} at line {e.lineno})") from None


def validate_spec(path) -> C1Name:
    """Parse a spec file into a C1-name, raising SpecError on any defect."""
    return parse_spec(load_spec_data(path))
