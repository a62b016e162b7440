"""Non-rigorous reference zeros for cross-checking certified reports.

Deliberately independent of the certifier's arithmetic: the closed form is
read straight from the function-spec JSON and evaluated in floats for seeding and in
mpmath for polishing. Nothing here certifies anything.
"""

from __future__ import annotations

import enum
import itertools
import json
import math
from dataclasses import dataclass, field
from fractions import Fraction
from importlib import resources

import mpmath

from .certifier import Outcome, ZeroReport

CLUSTER_RADIUS = 1e-6
RESIDUAL_TOL = mpmath.mpf("1e-12")
POLISH_DPS = 40


def _frac(s) -> Fraction:
    return Fraction(s) if isinstance(s, str) else Fraction(int(s))


class ClosedForm:
    """f and Df from a spec object.

    ``hp`` selects the backend: False for floats, True for mpmath at the
    current precision, "exact" for Fractions (polynomial specs only).
    """

    def __init__(self, spec: dict):
        self.dimension = d = spec["dimension"]
        self.polys = [[(_frac(t["coeff"]), tuple(t["powers"])) for t in c["terms"]] for c in spec["components"]]
        self.builtins = [[] for _ in range(d)]
        for b in spec.get("builtins", []):
            arg = [(_frac(t["coeff"]), tuple(t["powers"])) for t in b["arg"]["terms"]]
            self.builtins[b["component"]].append((b["fn"], _frac(b.get("coeff", "1")), arg))

    @staticmethod
    def _poly(terms, x, conv):
        s = conv(0)
        for c, p in terms:
            v = conv(c)
            for xi, e in zip(x, p):
                if e:
                    v = v * xi**e
            s = s + v
        return s

    @staticmethod
    def _dpoly(terms, x, j, conv):
        s = conv(0)
        for c, p in terms:
            if not p[j]:
                continue
            v = conv(c) * p[j]
            for i, (xi, e) in enumerate(zip(x, p)):
                e = e - 1 if i == j else e
                if e:
                    v = v * xi**e
            s = s + v
        return s

    def _backend(self, hp):
        if hp == "exact":
            if any(self.builtins):
                raise ValueError("exact evaluation needs a polynomial spec")
            return None, Fraction
        if hp:
            return mpmath, (lambda q: mpmath.mpf(q.numerator) / q.denominator if isinstance(q, Fraction) else mpmath.mpf(q))
        return math, float

    def value(self, x, hp=False):
        lib, conv = self._backend(hp)
        out = []
        for i in range(self.dimension):
            v = self._poly(self.polys[i], x, conv)
            for fn, c, arg in self.builtins[i]:
                v = v + conv(c) * getattr(lib, fn)(self._poly(arg, x, conv))
            out.append(v)
        return out

    def jacobian(self, x, hp=False):
        lib, conv = self._backend(hp)
        d = self.dimension
        J = [[self._dpoly(self.polys[i], x, j, conv) for j in range(d)] for i in range(d)]
        for i in range(d):
            for fn, c, arg in self.builtins[i]:
                a = self._poly(arg, x, conv)
                if fn == "sin":
                    outer = lib.cos(a)
                elif fn == "cos":
                    outer = -lib.sin(a)
                else:
                    outer = lib.exp(a)
                for j in range(d):
                    J[i][j] = J[i][j] + conv(c) * outer * self._dpoly(arg, x, j, conv)
        return J


def _solve_float(J, r):
    d = len(r)
    if d == 1:
        return [r[0] / J[0][0]]
    A = [list(row) + [b] for row, b in zip(J, r)]
    for c in range(d):
        p = max(range(c, d), key=lambda i: abs(A[i][c]))
        A[c], A[p] = A[p], A[c]
        if A[c][c] == 0:
            raise ZeroDivisionError
        for i in range(c + 1, d):
            m = A[i][c] / A[c][c]
            for j in range(c, d + 1):
                A[i][j] -= m * A[c][j]
    x = [0.0] * d
    for i in reversed(range(d)):
        x[i] = (A[i][d] - sum(A[i][j] * x[j] for j in range(i + 1, d))) / A[i][i]
    return x


def _newton_float(F: ClosedForm, x, iters):
    norm = lambda v: max(abs(t) for t in v)
    fx = F.value(x)
    for _ in range(iters):
        if norm(fx) < 1e-14:
            break
        try:
            step = _solve_float(F.jacobian(x), fx)
        except (ZeroDivisionError, OverflowError):
            return None
        t = 1.0
        while t > 1e-4:
            y = [a - t * s for a, s in zip(x, step)]
            fy = F.value(y)
            if norm(fy) < norm(fx):
                break
            t /= 2
        else:
            return None
        x, fx = y, fy
        if max(abs(v) for v in x) > 2:
            return None
    return x


@dataclass(frozen=True)
class RefZero:
    location: tuple
    residual: object
    det: object

    def exact(self) -> tuple[Fraction, ...]:
        out = []
        for v in self.location:
            man, exp = v.man_exp  # man is unsigned
            q = Fraction(int(man)) * Fraction(2) ** int(exp)
            out.append(-q if v < 0 else q)
        return tuple(out)


@dataclass(frozen=True)
class ReferenceZeros:
    zeros: tuple[RefZero, ...]

    def __len__(self):
        return len(self.zeros)


def _polish(F: ClosedForm, x, iters=30):
    with mpmath.workdps(POLISH_DPS):
        xm = mpmath.matrix([mpmath.mpf(v) for v in x])
        for _ in range(iters):
            fx = mpmath.matrix(F.value(list(xm), hp=True))
            if mpmath.norm(fx, mpmath.inf) < mpmath.mpf(10) ** (-POLISH_DPS + 5):
                break
            J = mpmath.matrix(F.jacobian(list(xm), hp=True))
            try:
                xm = xm - mpmath.lu_solve(J, fx)
            except ZeroDivisionError:
                return None
        loc = tuple(+v for v in xm)
        res = mpmath.norm(mpmath.matrix(F.value(list(loc), hp=True)), mpmath.inf)
        det = mpmath.det(mpmath.matrix(F.jacobian(list(loc), hp=True)))
        return RefZero(loc, res, det)


def default_samples(d: int) -> int:
    return {1: 400, 2: 60, 3: 16}.get(d, 8)


def brute_force_zeros(f, samples: int | None = None, newton_iters: int = 40) -> ReferenceZeros:
    """Zeros in [-1, 1]^d from a seed lattice, float Newton, mpmath polish and clustering."""
    F = f if isinstance(f, ClosedForm) else ClosedForm(f)
    d = F.dimension
    samples = samples or default_samples(d)
    axis = [-1 + (2 * i + 1) / samples for i in range(samples)]
    found: list[RefZero] = []
    for seed in itertools.product(axis, repeat=d):
        x = _newton_float(F, list(seed), newton_iters)
        if x is None or max(abs(v) for v in x) > 1 + 1e-9:
            continue
        if any(max(abs(a - float(b)) for a, b in zip(x, z.location)) < CLUSTER_RADIUS for z in found):
            continue
        z = _polish(F, x)
        if z is None or z.residual > RESIDUAL_TOL:
            continue
        if max(abs(v) for v in z.location) > 1 + mpmath.mpf(10) ** -30:
            continue
        if any(max(abs(a - b) for a, b in zip(z.location, w.location)) < CLUSTER_RADIUS for w in found):
            continue
        found.append(z)
    found.sort(key=lambda z: tuple(float(v) for v in z.location))
    return ReferenceZeros(tuple(found))


# ---------------------------------------------------------------------------
# Comparison
# ---------------------------------------------------------------------------


class Failure(enum.Enum):
    NOT_CERTIFIED = "NotCertified"
    COUNT_MISMATCH = "CountMismatch"
    EMPTY_REGION = "EmptyRegion"
    MULTIPLE_ZEROS = "MultipleZeros"
    MISSED_ZERO = "MissedZero"
    HAUSDORFF_EXCEEDED = "HausdorffExceeded"


@dataclass
class Verdict:
    failures: list[tuple[Failure, str]] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def kinds(self) -> set[Failure]:
        return {k for k, _ in self.failures}

    def __bool__(self):
        return self.passed


def _region_bounds(region) -> tuple[tuple[Fraction, ...], tuple[Fraction, ...]]:
    lo = tuple(Fraction(int(v.numerator), int(v.denominator)) for v in region.lo)
    hi = tuple(Fraction(int(v.numerator), int(v.denominator)) for v in region.hi)
    return lo, hi


def _inside(z, lo, hi) -> bool:
    return all(a <= v <= b for v, a, b in zip(z, lo, hi))


def compare_reports(ref: ReferenceZeros, report: ZeroReport) -> Verdict:
    """Check count, one zero per region, coverage and d_H <= 1/n (inf-norm, exact)."""
    v = Verdict()
    if report.outcome is not Outcome.CERTIFIED:
        v.failures.append((Failure.NOT_CERTIFIED, report.reason or "inconclusive"))
        return v
    zeros = [z.exact() for z in ref.zeros]
    if report.count != len(zeros):
        v.failures.append((Failure.COUNT_MISMATCH, f"report {report.count}, reference {len(zeros)}"))
    boxes = [_region_bounds(r) for r in report.regions]
    for i, (lo, hi) in enumerate(boxes):
        inside = [z for z in zeros if _inside(z, lo, hi)]
        if not inside:
            v.failures.append((Failure.EMPTY_REGION, f"region {i}"))
        elif len(inside) > 1:
            v.failures.append((Failure.MULTIPLE_ZEROS, f"region {i} holds {len(inside)} zeros"))
    for z in zeros:
        if not any(_inside(z, lo, hi) for lo, hi in boxes):
            v.failures.append((Failure.MISSED_ZERO, f"zero at {[float(t) for t in z]}"))
    h = hausdorff(zeros, boxes)
    if h is not None and h > Fraction(1, report.n):
        v.failures.append((Failure.HAUSDORFF_EXCEEDED, f"d_H = {float(h):.3g} > 1/{report.n}"))
    return v


def hausdorff(zeros, boxes) -> Fraction | None:
    """Upper bound (exact for one zero per box) of the inf-norm Hausdorff
    distance between a finite point set and a union of boxes."""
    if not zeros and not boxes:
        return Fraction(0)
    if not zeros or not boxes:
        return None
    # points to union: distance to the nearest box
    def to_box(z, lo, hi):
        return max(max(a - t, t - b, Fraction(0)) for t, a, b in zip(z, lo, hi))

    h = max(min(to_box(z, lo, hi) for lo, hi in boxes) for z in zeros)
    # union to points: the distance to one fixed zero is convex, so its sup
    # over a box sits at a corner; the min over zeros of those sups bounds the
    # sup of the distance to the nearest zero from above.
    for lo, hi in boxes:
        corners = list(itertools.product(*zip(lo, hi)))
        h = max(h, min(max(max(abs(c - t) for c, t in zip(corner, z)) for corner in corners) for z in zeros))
    return h


# ---------------------------------------------------------------------------
# Suite manifest
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SuiteEntry:
    name: str
    spec: dict
    expected_count: int | None
    promise: bool
    zeros: tuple[tuple[Fraction, ...], ...] = ()
    tags: tuple[str, ...] = ()


def load_suite() -> list[SuiteEntry]:
    raw = json.loads(resources.files("zerocert").joinpath("data/suite.json").read_text())
    out = []
    for e in raw["functions"]:
        out.append(
            SuiteEntry(
                e["name"],
                e["spec"],
                e.get("expected_count"),
                e.get("promise", True),
                tuple(tuple(_frac(c) for c in z) for z in e.get("zeros", [])),
                tuple(e.get("tags", [])),
            )
        )
    return out
