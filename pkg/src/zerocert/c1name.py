"""C1-names: polynomial approximant oracles and the enclosures built on them.

A C1-name of f: R^d -> R^d is a procedure k -> P_k with rational coefficients
and ||f - P_k||_{1,inf} < 2**-k on the enlarged cube [-1-eps, 1+eps]^d. Every
enclosure below evaluates P_k with interval Horner and inflates by 2**-k, so
it encloses f itself, not just the approximant.
"""

from __future__ import annotations

import heapq
import itertools
import threading
from dataclasses import dataclass, field
from typing import Sequence

from gmpy2 import mpq

from .interval import (
    ONE,
    ZERO,
    IntervalMatrix,
    IntervalVector,
    Q,
    RationalInterval,
    mat_det,
    mat_inf_norm,
    pow2,
)
from .poly import Polynomial, taylor_coefficients

DEFAULT_MARGIN = mpq(1, 4)
BUILTINS = ("sin", "cos", "exp")


class DomainError(ValueError):
    """An enclosure was requested outside the cube where the name is valid."""


@dataclass(frozen=True)
class PolyApproximant:
    """P_k together with its symbolic Jacobian; ``error`` is exactly 2**-k."""

    k: int
    components: tuple[Polynomial, ...]
    jacobian: tuple[tuple[Polynomial, ...], ...]

    @property
    def error(self) -> mpq:
        return pow2(-self.k)

    @property
    def dimension(self) -> int:
        return len(self.components)

    @property
    def degree(self) -> int:
        return max(p.degree for p in self.components)


def _jacobian(components: Sequence[Polynomial]) -> tuple[tuple[Polynomial, ...], ...]:
    d = len(components)
    return tuple(tuple(p.derivative(j) for j in range(d)) for p in components)


class C1Name:
    """Base class. Subclasses implement ``_build(k)``; results are cached."""

    def __init__(self, dimension: int, margin=DEFAULT_MARGIN):
        if dimension < 1:
            raise ValueError("dimension must be >= 1")
        margin = Q(margin)
        if margin <= 0:
            raise ValueError("domain margin must be positive")
        self.dimension = dimension
        self.margin = margin
        self._cache: dict[int, PolyApproximant] = {}
        self._lock = threading.Lock()

    @property
    def radius(self) -> mpq:
        """Half-side of the enlarged cube on which the approximants are valid."""
        return 1 + self.margin

    def approximant(self, k: int) -> PolyApproximant:
        if k < 0:
            raise ValueError("k must be a natural number")
        app = self._cache.get(k)
        if app is None:
            app = self._build(k)
            with self._lock:
                self._cache.setdefault(k, app)
                app = self._cache[k]
        return app

    def _build(self, k: int) -> PolyApproximant:  # pragma: no cover - abstract
        raise NotImplementedError

    def check_domain(self, box: Sequence[RationalInterval]) -> None:
        if len(box) != self.dimension:
            raise DomainError(f"expected a {self.dimension}-dimensional argument, got {len(box)}")
        r = self.radius
        for c in box:
            if c.lo < -r or c.hi > r:
                raise DomainError(f"[{c.lo}, {c.hi}] leaves the domain [-{r}, {r}]")


class PolynomialName(C1Name):
    """The name of an exact polynomial map: P_k = f for every k."""

    def __init__(self, components: Sequence[Polynomial], margin=DEFAULT_MARGIN):
        super().__init__(len(components), margin)
        if any(p.nvars != self.dimension for p in components):
            raise ValueError("every component must be a polynomial in `dimension` variables")
        self.components = tuple(components)
        self._jac = _jacobian(self.components)

    def _build(self, k: int) -> PolyApproximant:
        return PolyApproximant(k, self.components, self._jac)


@dataclass(frozen=True)
class BuiltinTerm:
    """``coeff * fn(argument)`` with fn one of sin, cos, exp."""

    fn: str
    coeff: mpq
    argument: Polynomial

    def __post_init__(self):
        if self.fn not in BUILTINS:
            raise ValueError(f"unknown builtin {self.fn!r}")


@dataclass(frozen=True)
class AnalyticComponent:
    polynomial: Polynomial
    builtins: tuple[BuiltinTerm, ...] = field(default=())


def _factorial_bound_degree(fn: str, coeff: mpq, arg: Polynomial, radius: mpq, budget: mpq) -> int:
    """Smallest Taylor degree N whose Lagrange remainder keeps both the value
    error and the derivative (row-sum) error of coeff*fn(arg) below budget."""
    U = max(arg.sup_bound(radius), mpq(1, 1 << 20))
    G = sum((arg.derivative(j).sup_bound(radius) for j in range(arg.nvars)), ZERO)
    B = ONE if fn in ("sin", "cos") else mpq(3) ** int(-(-U // 1))
    c = abs(coeff)
    term = ONE  # U**N / N!
    N = 0
    while True:
        nxt = term * U / (N + 1)  # U**(N+1)/(N+1)!
        if c * B * nxt < budget and c * B * term * G < budget:
            return N
        term = nxt
        N += 1


class AnalyticName(C1Name):
    """Names for finite sums of polynomial and coeff*{sin,cos,exp}(poly) terms.

    P_k replaces each builtin by its Taylor polynomial, with the degree chosen
    from the explicit Lagrange remainder on the enlarged cube so that both the
    sup error and the Jacobian error of each component stay below 2**-(k+1).
    """

    def __init__(self, components: Sequence[AnalyticComponent], margin=DEFAULT_MARGIN):
        super().__init__(len(components), margin)
        for comp in components:
            if comp.polynomial.nvars != self.dimension or any(
                t.argument.nvars != self.dimension for t in comp.builtins
            ):
                raise ValueError("component polynomials must use `dimension` variables")
        self.components = tuple(components)

    def _build(self, k: int) -> PolyApproximant:
        polys = []
        for comp in self.components:
            p = comp.polynomial
            nterms = len(comp.builtins)
            if nterms:
                budget = pow2(-k - 1) / nterms
                for t in comp.builtins:
                    N = _factorial_bound_degree(t.fn, t.coeff, t.argument, self.radius, budget)
                    series = t.argument.compose_univariate(taylor_coefficients(t.fn, N))
                    p = p + series.scale(t.coeff)
            polys.append(p)
        return PolyApproximant(k, tuple(polys), _jacobian(polys))


# ---------------------------------------------------------------------------
# Enclosures
# ---------------------------------------------------------------------------


def _as_box(x) -> tuple[RationalInterval, ...]:
    if isinstance(x, IntervalVector):
        return x.components
    return tuple(c if isinstance(c, RationalInterval) else RationalInterval.point(c) for c in x)


def eval_bounds(f: C1Name, bounds, k: int, prec=None) -> list[tuple[mpq, mpq]]:
    """Fast path behind ``eval_enclosure``: raw (lo, hi) pairs, no domain check."""
    app = f.approximant(k)
    e = pow2(-k)
    out = []
    for p in app.components:
        lo, hi = p.eval_bounds(bounds, prec)
        out.append((lo - e, hi + e))
    return out


def jac_bounds(f: C1Name, bounds, k: int, prec=None) -> list[list[tuple[mpq, mpq]]]:
    app = f.approximant(k)
    e = pow2(-k)
    out = []
    for row in app.jacobian:
        r = []
        for p in row:
            lo, hi = p.eval_bounds(bounds, prec)
            r.append((lo - e, hi + e))
        out.append(r)
    return out


def eval_enclosure(f: C1Name, x, k: int, prec: int | None = None) -> IntervalVector:
    """Enclosure of f(y) for every y in the box x."""
    box = _as_box(x)
    f.check_domain(box)
    bounds = [(c.lo, c.hi) for c in box]
    return IntervalVector([RationalInterval._raw(lo, hi) for lo, hi in eval_bounds(f, bounds, k, prec)])


def jac_enclosure(f: C1Name, x, k: int, prec: int | None = None) -> IntervalMatrix:
    """Entrywise enclosure of Df(y) for every y in the box x."""
    box = _as_box(x)
    f.check_domain(box)
    bounds = [(c.lo, c.hi) for c in box]
    return IntervalMatrix(
        [[RationalInterval._raw(lo, hi) for lo, hi in row] for row in jac_bounds(f, bounds, k, prec)]
    )


def _matrix(rows) -> IntervalMatrix:
    return IntervalMatrix([[RationalInterval._raw(lo, hi) for lo, hi in row] for row in rows])


def jacobian_measures(f: C1Name, bounds, k: int, prec=None) -> tuple[RationalInterval, RationalInterval]:
    """Enclosures of ||Df||_inf and |det Df| over a box."""
    J = _matrix(jac_bounds(f, bounds, k, prec))
    return mat_inf_norm(J), abs(mat_det(J))


# ---------------------------------------------------------------------------
# Global bound M
# ---------------------------------------------------------------------------


def _cube(d: int, half=ONE) -> list[tuple[mpq, mpq]]:
    return [(-half, half)] * d


def _bisect_bounds(bounds):
    halves = []
    for lo, hi in bounds:
        m = (lo + hi) / 2
        halves.append(((lo, m), (m, hi)))
    return [list(c) for c in itertools.product(*halves)]


def _center(bounds):
    return [(lo + hi) / 2 for lo, hi in bounds]


def compute_M(f: C1Name, precision: int = 6, max_boxes: int = 200_000) -> mpq:
    """Rational M_hat with M <= M_hat <= M + 2**-precision, where
    M = max over K of max{||Df||_inf, |det Df|, 1}.

    Branch and bound over K: box upper bounds from interval Jacobians, lower
    bounds from point enclosures at box centres.
    """
    tol = pow2(-precision)
    k = precision + 8 + f.dimension.bit_length()

    def upper(b):
        nrm, det = jacobian_measures(f, b, k)
        return max(nrm.hi, det.hi, ONE)

    def lower_at(b):
        c = _center(b)
        nrm, det = jacobian_measures(f, [(x, x) for x in c], k)
        return max(nrm.lo, det.lo, ONE)

    root = _cube(f.dimension)
    counter = itertools.count()
    heap = [(-upper(root), next(counter), root)]
    best = lower_at(root)
    evaluated = 1
    while True:
        top = -heap[0][0]
        if top - best <= tol:
            return top
        _, _, b = heapq.heappop(heap)
        for child in _bisect_bounds(b):
            evaluated += 1
            u = upper(child)
            best = max(best, lower_at(child))
            if u > best:
                heapq.heappush(heap, (-u, next(counter), child))
        if not heap:
            return best
        if evaluated > max_boxes:
            raise RuntimeError("compute_M did not converge within the box budget")


# ---------------------------------------------------------------------------
# Modulus sequence
# ---------------------------------------------------------------------------


def second_derivative_bound(app: PolyApproximant, radius: mpq) -> mpq:
    """Row-wise Lipschitz constant of DP_k in the operator inf-norm on the
    cube of half-side ``radius``: max_i sum_{j,l} sup |d_j d_l P_i|."""
    best = ZERO
    for row in app.jacobian:
        s = ZERO
        for dp in row:
            for l in range(app.dimension):
                s += dp.derivative(l).sup_bound(radius)
        best = max(best, s)
    return best


class ModulusSequence:
    """m -> r_m with ||f(x+h) - f(x) - Df(x)h|| <= 2**(-m-1) ||h|| for ||h|| <= r_m.

    For each m take k = m + 3 (so that 2 * 2**-k <= 2**(-m-2)) and the
    Lipschitz bound L_k of DP_k on the enlarged cube; then
    r_m = min{1, margin, 2**(-m-2) / L_k, r_{m-1}}, the third term omitted
    when L_k = 0.
    """

    def __init__(self, f: C1Name):
        self.f = f
        self._radii: dict[int, mpq] = {}
        self.lipschitz: dict[int, mpq] = {}
        self._lock = threading.Lock()

    def k_for(self, m: int) -> int:
        return m + 3

    def __call__(self, m: int) -> mpq:
        if m < 1:
            raise ValueError("the modulus sequence is indexed from m = 1")
        with self._lock:
            return self._radius(m)

    def _radius(self, m: int) -> mpq:
        if m in self._radii:
            return self._radii[m]
        f = self.f
        app = f.approximant(self.k_for(m))
        L = second_derivative_bound(app, f.radius)
        self.lipschitz[m] = L
        r = min(ONE, f.margin)
        if L > 0:
            r = min(r, pow2(-m - 2) / L)
        if m > 1:
            r = min(r, self._radius(m - 1))
        self._radii[m] = r
        return r


def modulus_sequence(f: C1Name) -> ModulusSequence:
    return ModulusSequence(f)
