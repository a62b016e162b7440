"""Multivariate polynomials with exact rational coefficients."""

from __future__ import annotations

from typing import Iterable, Mapping, Sequence

from gmpy2 import mpq

from .interval import ZERO, ONE, Q, RationalInterval, _mul, _pow, round_down, round_up

Powers = tuple[int, ...]


class Polynomial:
    """Sparse polynomial in ``nvars`` variables: ``{powers: coefficient}``.

    The nested Horner scheme used for interval evaluation is compiled once on
    construction.
    """

    __slots__ = ("nvars", "terms", "_horner")

    def __init__(self, nvars: int, terms: Mapping[Powers, object] | Iterable[tuple[Powers, object]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[Powers, mpq] = {}
        for powers, c in items:
            powers = tuple(int(e) for e in powers)
            if len(powers) != nvars:
                raise ValueError(f"monomial {powers} has {len(powers)} exponents, expected {nvars}")
            if any(e < 0 for e in powers):
                raise ValueError("negative exponent")
            acc[powers] = acc.get(powers, ZERO) + Q(c)
        self.nvars = nvars
        self.terms = {p: c for p, c in sorted(acc.items()) if c != 0}
        self._horner = _compile(sorted(self.terms.items()), 0, nvars)

    # -- constructors -------------------------------------------------------

    @classmethod
    def constant(cls, nvars: int, c) -> "Polynomial":
        return cls(nvars, {(0,) * nvars: c})

    @classmethod
    def variable(cls, nvars: int, i: int) -> "Polynomial":
        p = [0] * nvars
        p[i] = 1
        return cls(nvars, {tuple(p): 1})

    # -- algebra ------------------------------------------------------------

    def __add__(self, other: "Polynomial") -> "Polynomial":
        return Polynomial(self.nvars, list(self.terms.items()) + list(other.terms.items()))

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return self + other.scale(-1)

    def scale(self, c) -> "Polynomial":
        c = Q(c)
        return Polynomial(self.nvars, {p: c * v for p, v in self.terms.items()})

    def __mul__(self, other: "Polynomial") -> "Polynomial":
        out: dict[Powers, mpq] = {}
        for p1, c1 in self.terms.items():
            for p2, c2 in other.terms.items():
                key = tuple(a + b for a, b in zip(p1, p2))
                out[key] = out.get(key, ZERO) + c1 * c2
        return Polynomial(self.nvars, out)

    def compose_univariate(self, coeffs: Sequence[mpq]) -> "Polynomial":
        """Return sum_i coeffs[i] * self**i (Horner over polynomials)."""
        acc = Polynomial(self.nvars)
        for c in reversed(coeffs):
            acc = acc * self + Polynomial.constant(self.nvars, c)
        return acc

    def derivative(self, i: int) -> "Polynomial":
        out = {}
        for p, c in self.terms.items():
            if p[i]:
                q = list(p)
                q[i] -= 1
                out[tuple(q)] = c * p[i]
        return Polynomial(self.nvars, out)

    @property
    def degree(self) -> int:
        return max((sum(p) for p in self.terms), default=0)

    def sup_bound(self, radius: mpq) -> mpq:
        """Upper bound of |p| on the cube [-radius, radius]^nvars."""
        radius = Q(radius)
        return sum((abs(c) * radius ** sum(p) for p, c in self.terms.items()), ZERO)

    def __eq__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.nvars == other.nvars and self.terms == other.terms

    def __hash__(self):
        return hash((self.nvars, tuple(self.terms.items())))

    def __repr__(self):
        return f"Polynomial({self.nvars}, {{{', '.join(f'{p}: {c}' for p, c in self.terms.items())}}})"

    # -- evaluation ---------------------------------------------------------

    def __call__(self, x: Sequence) -> mpq:
        """Exact evaluation at a rational point."""
        return _eval_point(self._horner, [Q(v) for v in x], 0)

    def eval_point(self, x: Sequence[mpq]) -> mpq:
        return _eval_point(self._horner, x, 0)

    def eval_box(self, box: Sequence[RationalInterval], prec: int | None = None) -> RationalInterval:
        """Interval Horner evaluation over a box (sound enclosure of the range)."""
        bounds = [(c.lo, c.hi) for c in box]
        lo, hi = _eval_box(self._horner, bounds, 0, prec)
        return RationalInterval._raw(lo, hi)

    def eval_bounds(self, bounds: Sequence[tuple[mpq, mpq]], prec: int | None = None) -> tuple[mpq, mpq]:
        return _eval_box(self._horner, bounds, 0, prec)


def _compile(items: list[tuple[Powers, mpq]], var: int, nvars: int):
    """Nested Horner structure: a coefficient at depth nvars, else a list of
    (exponent, child) pairs with exponents in descending order."""
    if var == nvars:
        return sum((c for _, c in items), ZERO)
    groups: dict[int, list] = {}
    for p, c in items:
        groups.setdefault(p[var], []).append((p, c))
    return [(e, _compile(groups[e], var + 1, nvars)) for e in sorted(groups, reverse=True)]


def _eval_point(node, x, var):
    if not isinstance(node, list):
        return node
    if not node:
        return ZERO
    xv = x[var]
    e_prev, child = node[0]
    acc = _eval_point(child, x, var + 1)
    for e, child in node[1:]:
        acc = acc * xv ** (e_prev - e) + _eval_point(child, x, var + 1)
        e_prev = e
    if e_prev:
        acc = acc * xv**e_prev
    return acc


def _eval_box(node, bounds, var, prec):
    if not isinstance(node, list):
        return node, node
    if not node:
        return ZERO, ZERO
    a, b = bounds[var]
    e_prev, child = node[0]
    lo, hi = _eval_box(child, bounds, var + 1, prec)
    for e, child in node[1:]:
        plo, phi = _pow(a, b, e_prev - e)
        lo, hi = _mul(lo, hi, plo, phi)
        clo, chi = _eval_box(child, bounds, var + 1, prec)
        lo, hi = lo + clo, hi + chi
        if prec is not None:
            lo, hi = round_down(lo, prec), round_up(hi, prec)
        e_prev = e
    if e_prev:
        plo, phi = _pow(a, b, e_prev)
        lo, hi = _mul(lo, hi, plo, phi)
        if prec is not None:
            lo, hi = round_down(lo, prec), round_up(hi, prec)
    return lo, hi


# Taylor coefficients of the analytic builtins (exact rationals).

def taylor_coefficients(fn: str, degree: int) -> list[mpq]:
    coeffs = []
    fact = ONE
    for i in range(degree + 1):
        if i:
            fact *= i
        if fn == "exp":
            coeffs.append(1 / fact)
        elif fn == "sin":
            coeffs.append(ZERO if i % 2 == 0 else mpq((-1) ** ((i - 1) // 2)) / fact)
        elif fn == "cos":
            coeffs.append(ZERO if i % 2 == 1 else mpq((-1) ** (i // 2)) / fact)
        else:
            raise ValueError(f"unknown builtin {fn!r}")
    return coeffs
