"""Exact-endpoint interval arithmetic.

Endpoints are ``gmpy2.mpq`` rationals, so every operation is exact and the
enclosure property (the true result lies inside the returned interval) holds
without any rounding analysis. Optional outward rounding to dyadics bounds the
bit-growth of endpoints during deep refinement.
"""

from __future__ import annotations

import enum
from fractions import Fraction
from typing import Callable, Iterable, Sequence, Union

import gmpy2
from gmpy2 import mpq

RationalLike = Union[int, str, Fraction, "mpq"]

ZERO = mpq(0)
ONE = mpq(1)


def Q(value: RationalLike) -> mpq:
    """Coerce an int, ``"p/q"`` string, Fraction or mpq to an exact mpq.

    Floats are rejected: a binary float silently carries representation error.
    """
    if isinstance(value, float):
        raise TypeError("floats are not exact rationals; pass 'p/q' strings")
    if isinstance(value, Fraction):
        return mpq(value.numerator, value.denominator)
    return mpq(value)


def pow2(e: int) -> mpq:
    """Exact 2**e for any integer e."""
    return mpq(1 << e) if e >= 0 else mpq(1, 1 << -e)


def floor_log2(q: mpq) -> int:
    """Largest e with 2**e <= q, for q > 0."""
    if q <= 0:
        raise ValueError("floor_log2 needs a positive argument")
    e = int(gmpy2.floor(gmpy2.log2(gmpy2.mpfr(q))))
    while pow2(e) > q:
        e -= 1
    while pow2(e + 1) <= q:
        e += 1
    return e


def round_down(q: mpq, p: int) -> mpq:
    return mpq((q.numerator << p) // q.denominator, 1 << p)


def round_up(q: mpq, p: int) -> mpq:
    return mpq(-((-q.numerator << p) // q.denominator), 1 << p)


class RationalInterval:
    """Closed interval [lo, hi] with exact rational endpoints.

    Instances are treated as immutable values.
    """

    __slots__ = ("lo", "hi")

    def __init__(self, lo: RationalLike, hi: RationalLike | None = None):
        lo = Q(lo)
        hi = lo if hi is None else Q(hi)
        if lo > hi:
            raise ValueError(f"empty interval [{lo}, {hi}]")
        self.lo = lo
        self.hi = hi

    @classmethod
    def _raw(cls, lo: mpq, hi: mpq) -> "RationalInterval":
        iv = object.__new__(cls)
        iv.lo = lo
        iv.hi = hi
        return iv

    @classmethod
    def point(cls, x: RationalLike) -> "RationalInterval":
        x = Q(x)
        return cls._raw(x, x)

    @classmethod
    def hull(cls, values: Iterable[RationalLike]) -> "RationalInterval":
        vals = [Q(v) for v in values]
        return cls._raw(min(vals), max(vals))

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other):
        o = _coerce(other)
        return RationalInterval._raw(self.lo + o.lo, self.hi + o.hi)

    __radd__ = __add__

    def __sub__(self, other):
        o = _coerce(other)
        return RationalInterval._raw(self.lo - o.hi, self.hi - o.lo)

    def __rsub__(self, other):
        return _coerce(other) - self

    def __neg__(self):
        return RationalInterval._raw(-self.hi, -self.lo)

    def __mul__(self, other):
        o = _coerce(other)
        lo, hi = _mul(self.lo, self.hi, o.lo, o.hi)
        return RationalInterval._raw(lo, hi)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative powers are not supported")
        lo, hi = _pow(self.lo, self.hi, k)
        return RationalInterval._raw(lo, hi)

    def __abs__(self):
        return RationalInterval._raw(self.mig(), self.mag())

    # -- queries ------------------------------------------------------------

    def mag(self) -> mpq:
        """max |x| over the interval."""
        return max(-self.lo, self.hi)

    def mig(self) -> mpq:
        """min |x| over the interval."""
        if self.lo > 0:
            return self.lo
        if self.hi < 0:
            return -self.hi
        return ZERO

    @property
    def width(self) -> mpq:
        return self.hi - self.lo

    @property
    def mid(self) -> mpq:
        return (self.lo + self.hi) / 2

    def contains(self, x) -> bool:
        if isinstance(x, RationalInterval):
            return self.lo <= x.lo and x.hi <= self.hi
        x = Q(x)
        return self.lo <= x <= self.hi

    __contains__ = contains

    def contains_zero(self) -> bool:
        return self.lo <= 0 <= self.hi

    def is_point(self) -> bool:
        return self.lo == self.hi

    def union(self, other: "RationalInterval") -> "RationalInterval":
        return RationalInterval._raw(min(self.lo, other.lo), max(self.hi, other.hi))

    def inflate(self, eps: mpq) -> "RationalInterval":
        return RationalInterval._raw(self.lo - eps, self.hi + eps)

    def round_out(self, p: int | None) -> "RationalInterval":
        """Outward rounding to dyadics with denominator 2**p (no-op if p is None)."""
        if p is None:
            return self
        return RationalInterval._raw(round_down(self.lo, p), round_up(self.hi, p))

    def __eq__(self, other):
        if not isinstance(other, RationalInterval):
            return NotImplemented
        return self.lo == other.lo and self.hi == other.hi

    def __hash__(self):
        return hash((self.lo, self.hi))

    def __repr__(self):
        return f"RationalInterval({self.lo}, {self.hi})"


def _coerce(x) -> RationalInterval:
    if isinstance(x, RationalInterval):
        return x
    return RationalInterval.point(x)


def _mul(a: mpq, b: mpq, c: mpq, d: mpq) -> tuple[mpq, mpq]:
    if a >= 0 and c >= 0:
        return a * c, b * d
    p1, p2, p3, p4 = a * c, a * d, b * c, b * d
    return min(p1, p2, p3, p4), max(p1, p2, p3, p4)


def _pow(a: mpq, b: mpq, k: int) -> tuple[mpq, mpq]:
    if k == 0:
        return ONE, ONE
    if k % 2 == 1 or a >= 0:
        return a**k, b**k
    if b <= 0:
        return b**k, a**k
    return ZERO, max(a**k, b**k)


# Named forms of the scalar operations.

def iv_add(a: RationalInterval, b: RationalInterval) -> RationalInterval:
    return a + b


def iv_sub(a: RationalInterval, b: RationalInterval) -> RationalInterval:
    return a - b


def iv_mul(a: RationalInterval, b: RationalInterval) -> RationalInterval:
    return a * b


def iv_neg(a: RationalInterval) -> RationalInterval:
    return -a


def iv_abs(a: RationalInterval) -> RationalInterval:
    return abs(a)


def iv_max(items: Iterable[RationalInterval]) -> RationalInterval:
    items = list(items)
    return RationalInterval._raw(max(i.lo for i in items), max(i.hi for i in items))


def iv_min(items: Iterable[RationalInterval]) -> RationalInterval:
    items = list(items)
    return RationalInterval._raw(min(i.lo for i in items), min(i.hi for i in items))


def sqrt_enclosure(a: RationalInterval, bits: int = 64) -> RationalInterval:
    """Rational enclosure of sqrt over a non-negative interval."""
    if a.lo < 0:
        raise ValueError("sqrt of an interval with negative values")
    scale = 1 << bits

    def lo_root(q: mpq) -> mpq:
        # floor(sqrt(q) * scale) / scale
        return mpq(gmpy2.isqrt((q.numerator * scale * scale) // q.denominator), scale)

    def hi_root(q: mpq) -> mpq:
        r = lo_root(q)
        return r if r * r == q else r + mpq(1, scale)

    return RationalInterval._raw(lo_root(a.lo), hi_root(a.hi))


# ---------------------------------------------------------------------------
# Vectors and matrices
# ---------------------------------------------------------------------------


class IntervalVector:
    """A d-vector of intervals, i.e. an axis-aligned box in R^d."""

    __slots__ = ("components",)

    def __init__(self, components: Sequence[RationalInterval]):
        comps = tuple(c if isinstance(c, RationalInterval) else RationalInterval(c) for c in components)
        if not comps:
            raise ValueError("IntervalVector needs at least one component")
        self.components = comps

    @classmethod
    def point(cls, xs: Sequence[RationalLike]) -> "IntervalVector":
        return cls([RationalInterval.point(x) for x in xs])

    @classmethod
    def from_bounds(cls, lo: Sequence[RationalLike], hi: Sequence[RationalLike]) -> "IntervalVector":
        return cls([RationalInterval(a, b) for a, b in zip(lo, hi, strict=True)])

    def __len__(self):
        return len(self.components)

    def __iter__(self):
        return iter(self.components)

    def __getitem__(self, i):
        return self.components[i]

    def __add__(self, other: "IntervalVector"):
        return IntervalVector([a + b for a, b in zip(self.components, other.components, strict=True)])

    def __sub__(self, other: "IntervalVector"):
        return IntervalVector([a - b for a, b in zip(self.components, other.components, strict=True)])

    def __eq__(self, other):
        if not isinstance(other, IntervalVector):
            return NotImplemented
        return self.components == other.components

    def __hash__(self):
        return hash(self.components)

    def __repr__(self):
        return f"IntervalVector({list(self.components)!r})"

    @property
    def lo(self) -> tuple[mpq, ...]:
        return tuple(c.lo for c in self.components)

    @property
    def hi(self) -> tuple[mpq, ...]:
        return tuple(c.hi for c in self.components)

    @property
    def mid(self) -> tuple[mpq, ...]:
        return tuple(c.mid for c in self.components)

    def width(self) -> mpq:
        return max(c.width for c in self.components)

    def contains(self, x) -> bool:
        if isinstance(x, IntervalVector):
            return all(a.contains(b) for a, b in zip(self.components, x.components, strict=True))
        return all(a.contains(v) for a, v in zip(self.components, x, strict=True))

    def inf_norm(self) -> RationalInterval:
        """Enclosure of ||x||_inf over every point x of the box."""
        return RationalInterval._raw(
            max(c.mig() for c in self.components), max(c.mag() for c in self.components)
        )

    def inflate(self, eps: mpq) -> "IntervalVector":
        return IntervalVector([c.inflate(eps) for c in self.components])

    def bisect(self) -> list["IntervalVector"]:
        """Split every axis at its midpoint (2**d children, lexicographic order)."""
        halves = []
        for c in self.components:
            m = c.mid
            halves.append((RationalInterval._raw(c.lo, m), RationalInterval._raw(m, c.hi)))
        out = [[]]
        for pair in halves:
            out = [prev + [h] for prev in out for h in pair]
        return [IntervalVector(parts) for parts in out]


class IntervalMatrix:
    """A d x d matrix of intervals."""

    __slots__ = ("rows",)

    def __init__(self, rows: Sequence[Sequence[RationalInterval]]):
        rs = tuple(
            tuple(e if isinstance(e, RationalInterval) else RationalInterval(e) for e in row) for row in rows
        )
        d = len(rs)
        if d == 0 or any(len(r) != d for r in rs):
            raise ValueError("IntervalMatrix must be square and non-empty")
        self.rows = rs

    @classmethod
    def point(cls, rows: Sequence[Sequence[RationalLike]]) -> "IntervalMatrix":
        return cls([[RationalInterval.point(x) for x in row] for row in rows])

    @classmethod
    def identity(cls, d: int) -> "IntervalMatrix":
        return cls.point([[1 if i == j else 0 for j in range(d)] for i in range(d)])

    @property
    def dim(self) -> int:
        return len(self.rows)

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def __eq__(self, other):
        if not isinstance(other, IntervalMatrix):
            return NotImplemented
        return self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self):
        return f"IntervalMatrix({[list(r) for r in self.rows]!r})"

    def contains(self, A) -> bool:
        return all(
            self.rows[i][j].contains(A[i][j]) for i in range(self.dim) for j in range(self.dim)
        )

    def inflate(self, eps: mpq) -> "IntervalMatrix":
        return IntervalMatrix([[e.inflate(eps) for e in row] for row in self.rows])

    def union(self, other: "IntervalMatrix") -> "IntervalMatrix":
        return IntervalMatrix(
            [[a.union(b) for a, b in zip(ra, rb)] for ra, rb in zip(self.rows, other.rows)]
        )

    def matvec(self, v: IntervalVector) -> IntervalVector:
        out = []
        for row in self.rows:
            acc = RationalInterval.point(0)
            for a, x in zip(row, v.components, strict=True):
                acc = acc + a * x
            out.append(acc)
        return IntervalVector(out)


def mat_inf_norm(A: IntervalMatrix) -> RationalInterval:
    """Enclosure of the operator inf-norm (max row sum of |a_ij|)."""
    lo = max(sum((e.mig() for e in row), ZERO) for row in A.rows)
    hi = max(sum((e.mag() for e in row), ZERO) for row in A.rows)
    return RationalInterval._raw(lo, hi)


def mat_hs_norm(A: IntervalMatrix, bits: int = 64) -> RationalInterval:
    """Enclosure of the Hilbert-Schmidt norm."""
    sq = RationalInterval._raw(
        sum((e.mig() ** 2 for row in A.rows for e in row), ZERO),
        sum((e.mag() ** 2 for row in A.rows for e in row), ZERO),
    )
    return sqrt_enclosure(sq, bits)


def mat_two_norm(A: IntervalMatrix, bits: int = 64) -> RationalInterval:
    """Enclosure of the spectral norm from |a_ij| <= ||A||_2 <= ||A||_HS."""
    lo = max(e.mig() for row in A.rows for e in row)
    hs = mat_hs_norm(A, bits)
    return RationalInterval._raw(min(lo, hs.hi), hs.hi)


def mat_det(A: IntervalMatrix) -> RationalInterval:
    """Enclosure of det(A0) over every point matrix A0 in A.

    Cofactor expansion up to d = 3; interval Gaussian elimination with
    mignitude pivoting beyond that, falling back to a Hadamard-type bound when
    every remaining pivot candidate straddles zero.
    """
    d = A.dim
    r = A.rows
    if d == 1:
        return r[0][0]
    if d == 2:
        return r[0][0] * r[1][1] - r[0][1] * r[1][0]
    if d == 3:
        return (
            r[0][0] * (r[1][1] * r[2][2] - r[1][2] * r[2][1])
            - r[0][1] * (r[1][0] * r[2][2] - r[1][2] * r[2][0])
            + r[0][2] * (r[1][0] * r[2][1] - r[1][1] * r[2][0])
        )
    return _det_elimination(A)


def _hadamard(rows) -> RationalInterval:
    bound = ONE
    for row in rows:
        bound *= sum((e.mag() for e in row), ZERO)
    return RationalInterval._raw(-bound, bound)


def _det_elimination(A: IntervalMatrix) -> RationalInterval:
    rows = [list(row) for row in A.rows]
    d = len(rows)
    det = RationalInterval.point(1)
    for col in range(d):
        piv = max(range(col, d), key=lambda i: (rows[i][col].mig(), -i))
        if rows[piv][col].contains_zero():
            rest = [row[col:] for row in rows[col:]]
            return det * _hadamard(rest)
        if piv != col:
            rows[col], rows[piv] = rows[piv], rows[col]
            det = -det
        p = rows[col][col]
        det = det * p
        inv = _reciprocal(p)
        for i in range(col + 1, d):
            factor = rows[i][col] * inv
            rows[i] = rows[i][:col + 1] + [
                rows[i][j] - factor * rows[col][j] for j in range(col + 1, d)
            ]
    return det


def _reciprocal(p: RationalInterval) -> RationalInterval:
    if p.contains_zero():
        raise ZeroDivisionError("reciprocal of an interval containing zero")
    return RationalInterval._raw(1 / p.hi, 1 / p.lo)


# ---------------------------------------------------------------------------
# Soft comparison
# ---------------------------------------------------------------------------


class Comparison(enum.Enum):
    ABOVE = "above"   # certifies q > threshold
    BELOW = "below"   # certifies q <= 2 * threshold


def soft_compare(
    approx: Callable[[mpq], RationalInterval] | Iterable[RationalInterval],
    threshold: RationalLike,
) -> Comparison:
    """Decide ``q > t`` or ``q <= 2t`` from enclosures of q.

    ``approx`` is either a callable returning an enclosure of width at most
    the requested width, or an iterable of successively refined enclosures.
    With an enclosure of width <= t/2 and midpoint r, ``r <= 3t/2`` gives
    BELOW and anything else gives ABOVE; a stream may stop earlier as soon as
    either certificate already holds.
    """
    t = Q(threshold)
    if t <= 0:
        raise ValueError("threshold must be positive")
    if callable(approx):
        enc = approx(t / 2)
        if enc.width > t / 2:
            raise ValueError("approximation did not reach the requested width")
        return Comparison.BELOW if enc.mid <= 3 * t / 2 else Comparison.ABOVE
    for enc in approx:
        if enc.lo > t:
            return Comparison.ABOVE
        if enc.hi <= 2 * t:
            return Comparison.BELOW
        if enc.width <= t / 2:
            return Comparison.BELOW if enc.mid <= 3 * t / 2 else Comparison.ABOVE
    raise RuntimeError("enclosure stream ended before a decision")
