"""Certified zero counting on K = [-1, 1]^d.

The driver follows the grid algorithm: scan C_n (n = 3 n0) with a soft
zero-exclusion test per cell, restart at n + 1 whenever a surviving cell is
too close to the boundary or its Jacobian floor is too small, then subdivide
the survivors into n~-cells and certify zeros cell by cell with inverse
function theorem balls, deduplicating in one fixed global order.

Every claim in a Certified report rests on exact interval enclosures:

* a cell is discarded only if ``d(0, f(cell)) > 2**-l`` is certified;
* a sub-cell is accepted only if a lattice point x_i satisfies
  ``||f(x_i)|| < d_i / 2`` with ``d_i`` a certified lower bound of
  ``||f - f(x_i)||`` on the sphere of radius theta_i, and the interval
  Jacobian over M(sub-cell) is regular, so f is injective there.
"""

from __future__ import annotations

import enum
import heapq
import itertools
import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Iterator, Sequence

from gmpy2 import mpq

from .c1name import (
    C1Name,
    ModulusSequence,
    _bisect_bounds,
    _center,
    compute_M,
    eval_bounds,
    jac_bounds,
    modulus_sequence,
)
from .grid import (
    Box,
    GridId,
    block,
    boundary_distance_index,
    chebyshev_distance,
    inflated_bounds,
    parent,
)
from .interval import (
    ZERO,
    Comparison,
    IntervalMatrix,
    RationalInterval,
    floor_log2,
    mat_det,
    mat_inf_norm,
    pow2,
    soft_compare,
)

log = logging.getLogger(__name__)

# Number of cells on either side that a True sub-cell claims for deduplication.
DEDUP_REACH = 2


class Outcome(enum.Enum):
    CERTIFIED = "certified"
    INCONCLUSIVE = "inconclusive"


class Result(enum.Enum):
    UNDEFINED = "undefined"
    TRUE = "true"
    FALSE = "false"


class Exclusion(enum.Enum):
    NO_ZERO = "no_zero"
    MAYBE = "maybe"


class FloorVerdict(enum.Enum):
    FLOOR = "floor"
    TOO_SMALL = "too_small"


class SubsquareVerdict(enum.Enum):
    FALSE = "false"
    CANDIDATE_ZERO = "candidate_zero"
    REFINE = "refine"


class BudgetExhausted(Exception):
    """A search ran past its budget; the run becomes Inconclusive."""


@dataclass(frozen=True)
class CertifierConfig:
    n0: int
    restart_budget: int = 32
    depth_budget: int = 48
    m_precision: int = 6
    threads: int = 1
    precision: int | None = None
    initial_depth: str = "termination"
    box_budget: int = 100_000

    def __post_init__(self):
        if self.n0 < 1:
            raise ValueError("n0 must be >= 1")
        if self.restart_budget < 1 or self.depth_budget < 1:
            raise ValueError("budgets must be >= 1")
        if self.threads < 1:
            raise ValueError("threads must be >= 1")
        if self.initial_depth not in ("literal", "termination"):
            raise ValueError("initial_depth must be 'literal' or 'termination'")


@dataclass(frozen=True)
class Witness:
    """The inverse function theorem data behind one CandidateZero verdict."""

    point: tuple[mpq, ...]
    theta: mpq
    d_lower: mpq
    residual_upper: mpq
    depth: int


@dataclass(frozen=True)
class Certificate:
    """Everything recorded for a sub-cell whose result is True."""

    cell: GridId
    witness: Witness
    floor: mpq
    floor_exponent: int
    radius: mpq
    jacobian_det: RationalInterval


@dataclass(frozen=True)
class Region:
    """N(s_j) for a True sub-cell, as its 3^d cells of C_n~."""

    cell: GridId
    boxes: tuple[Box, ...]

    @property
    def lo(self) -> tuple[mpq, ...]:
        return tuple(mpq(z - 1, self.cell.n) for z in self.cell.coords)

    @property
    def hi(self) -> tuple[mpq, ...]:
        return tuple(mpq(z + 2, self.cell.n) for z in self.cell.coords)


@dataclass
class SquareStatus:
    result: Result = Result.UNDEFINED
    counter: int = 0
    certified: list[tuple[GridId, list[Box]]] = field(default_factory=list)


@dataclass(frozen=True)
class ZeroReport:
    outcome: Outcome
    n: int
    count: int | None
    regions: tuple[Region, ...]
    n_tilde: int | None = None
    certificates: tuple[Certificate, ...] = ()
    trace: tuple[dict, ...] = ()
    reason: str | None = None


# ---------------------------------------------------------------------------
# Searches
# ---------------------------------------------------------------------------


def _bits(t: mpq) -> int:
    """An exponent b with 2**-b <= t."""
    return max(0, -floor_log2(t))


def _mig(lo, hi):
    if lo > 0:
        return lo
    if hi < 0:
        return -hi
    return ZERO


def _norm_lower(bounds) -> mpq:
    return max(_mig(lo, hi) for lo, hi in bounds)


def _norm_upper(bounds) -> mpq:
    return max(max(-lo, hi) for lo, hi in bounds)


def _point_bounds(x):
    return [(v, v) for v in x]


class DistanceSearch:
    """Branch and bound enclosure of d(0, f(box)) = min over the box of ||f||_inf.

    ``enclosures()`` yields successively tighter intervals; ``best_point``
    is the evaluated point with the smallest residual bound so far.
    """

    def __init__(self, f: C1Name, bounds, k: int, budget: int, prec=None):
        self.f = f
        self.k = k
        self.prec = prec
        self.budget = budget
        self.evaluations = 0
        self._seq = itertools.count()
        self.best_upper = None
        self.best_point = None
        self._heap = []
        self._push(list(bounds))

    def _residual(self, x) -> mpq:
        return _norm_upper(eval_bounds(self.f, _point_bounds(x), self.k, self.prec))

    def _push(self, b):
        self.evaluations += 1
        if self.evaluations > self.budget:
            raise BudgetExhausted("distance search exceeded its box budget")
        lo = _norm_lower(eval_bounds(self.f, b, self.k, self.prec))
        c = _center(b)
        up = self._residual(c)
        if self.best_upper is None or up < self.best_upper:
            self.best_upper, self.best_point = up, tuple(c)
        heapq.heappush(self._heap, (lo, up, next(self._seq), b))

    def enclosure(self) -> RationalInterval:
        lo = self._heap[0][0] if self._heap else self.best_upper
        return RationalInterval._raw(min(lo, self.best_upper), self.best_upper)

    def enclosures(self) -> Iterator[RationalInterval]:
        while True:
            yield self.enclosure()
            _, _, _, b = heapq.heappop(self._heap)
            for child in _bisect_bounds(b):
                self._push(child)


def _floor_value(f, b, k, prec):
    J = IntervalMatrix([[RationalInterval._raw(lo, hi) for lo, hi in row] for row in jac_bounds(f, b, k, prec)])
    nrm = mat_inf_norm(J)
    det = abs(mat_det(J))
    return min(nrm.lo, det.lo), min(nrm.hi, det.hi)


class FloorSearch:
    """Branch and bound enclosure of min over a box of min{||Df||_inf, |det Df|}."""

    def __init__(self, f: C1Name, bounds, k: int, budget: int, prec=None):
        self.f = f
        self.k = k
        self.prec = prec
        self.budget = budget
        self.evaluations = 0
        self._seq = itertools.count()
        self.best_upper = None
        self._heap = []
        self._push(list(bounds))

    def _push(self, b):
        self.evaluations += 1
        if self.evaluations > self.budget:
            raise BudgetExhausted("Jacobian floor search exceeded its box budget")
        lo, _ = _floor_value(self.f, b, self.k, self.prec)
        _, up = _floor_value(self.f, _point_bounds(_center(b)), self.k, self.prec)
        if self.best_upper is None or up < self.best_upper:
            self.best_upper = up
        # ties on the lower bound go to the smallest centre value, so the
        # search dives instead of sweeping a whole level set
        heapq.heappush(self._heap, (lo, up, next(self._seq), b))

    def enclosure(self) -> RationalInterval:
        return RationalInterval._raw(min(self._heap[0][0], self.best_upper), self.best_upper)

    def refine(self):
        _, _, _, b = heapq.heappop(self._heap)
        for child in _bisect_bounds(b):
            self._push(child)

    def enclosures(self) -> Iterator[RationalInterval]:
        while True:
            yield self.enclosure()
            self.refine()

    def tighten(self, steps: int) -> mpq:
        """Refine further until the lower bound is within a factor 2 of the
        upper bound or ``steps`` refinements were spent; returns the lower bound."""
        for _ in range(steps):
            enc = self.enclosure()
            if 2 * enc.lo >= enc.hi:
                break
            try:
                self.refine()
            except BudgetExhausted:
                break
        return self.enclosure().lo


# ---------------------------------------------------------------------------
# Per-cell tests
# ---------------------------------------------------------------------------


def _k_for(threshold: mpq) -> int:
    return _bits(threshold) + 8


def exclusion_test(f: C1Name, s: Box, n: int, budget: int = 100_000, prec=None) -> Exclusion:
    """Decide d(0, f(s)) > 2**-n (NoZero) or d(0, f(s)) <= 2**-(n-1) (Maybe)."""
    thr = pow2(-n)
    search = DistanceSearch(f, s.bounds(), _k_for(thr), budget, prec)
    verdict = soft_compare(search.enclosures(), thr)
    return Exclusion.NO_ZERO if verdict is Comparison.ABOVE else Exclusion.MAYBE


@dataclass(frozen=True)
class FloorResult:
    verdict: FloorVerdict
    lower: mpq
    upper: mpq


def jacobian_floor_test(f: C1Name, s: Box, n: int, budget: int = 100_000, prec=None) -> FloorResult:
    """Decide min over M(s) of min{||Df||, |det Df|} > 2**-n (Floor) or <= 2**-(n-1) (TooSmall)."""
    if boundary_distance_index(s.id) < 4:
        raise ValueError("the Jacobian floor test needs d(s, boundary) >= 4/n")
    thr = pow2(-n)
    search = FloorSearch(f, inflated_bounds(s.id, 3), _k_for(thr), budget, prec)
    verdict = soft_compare(search.enclosures(), thr)
    if verdict is Comparison.BELOW:
        enc = search.enclosure()
        return FloorResult(FloorVerdict.TOO_SMALL, enc.lo, enc.hi)
    lower = search.tighten(64)
    return FloorResult(FloorVerdict.FLOOR, lower, search.enclosure().hi)


def floor_exponent(lower: mpq) -> int:
    """Smallest m >= 1 with 2**-m <= lower."""
    return max(1, -floor_log2(lower))


def choose_subdivision(n: int, r: mpq, min_factor: int = 1) -> int:
    """Smallest n~ = j n (j >= min_factor) with 7/(2 n~) < r, i.e. M(s_j) inside B(center, r)."""
    if r <= 0:
        raise ValueError("radius must be positive")
    j = max(1, min_factor)
    # 7/(2 j n) < r  <=>  j > 7 / (2 n r)
    j = max(j, int(mpq(7) / (2 * n * r)) + 1)
    return j * n


def initial_depth(n: int, n_tilde: int, mode: str = "termination") -> int:
    """Starting l for the sub-cell loop: n~ as in the algorithm, or the first
    l with 2**(-l-1) < 2**(-n-2)/n~ used by the termination argument."""
    if mode == "literal":
        return n_tilde
    return n + 2 + floor_log2(mpq(n_tilde))


def lattice_size(side: mpq, l: int, M: mpq) -> int:
    """Points per axis so that the spacing is at most 2**(-l-1) / (4 M)."""
    rho = pow2(-l - 1) / (4 * M)
    q = side / rho
    return int(-(-q.numerator // q.denominator))


def lattice_point(lo: Sequence[mpq], side: mpq, N: int, index: Sequence[int]) -> tuple[mpq, ...]:
    return tuple(a + (2 * i + 1) * side / (2 * N) for a, i in zip(lo, index))


def theta(x: Sequence[mpq], cell: GridId) -> mpq:
    """Exact inf-distance from an interior point of the cell to the boundary of N(cell)."""
    return min(min(v - a, b - v) for v, (a, b) in zip(x, inflated_bounds(cell, 1)))


def sphere_lower_bound(
    f: C1Name, x, radius: mpq, goal: mpq, k: int, budget: int = 4096, prec=None
) -> mpq | None:
    """Certified lower bound of min over the inf-sphere of radius ``radius``
    about x of ||f(y) - f(x)||_inf, refined until it reaches ``goal``.

    The sphere is the union of 2d faces; each face is covered by boxes that
    are bisected best-first. Returns None when some point of the sphere
    already has ||f(y) - f(x)|| <= goal or the budget runs out.
    """
    d = len(x)
    fx = eval_bounds(f, _point_bounds(x), k, prec)
    seq = itertools.count()
    heap = []
    used = 0

    def lower(b):
        enc = eval_bounds(f, b, k, prec)
        return max(_mig(lo - fhi, hi - flo) for (lo, hi), (flo, fhi) in zip(enc, fx))

    def upper_at(b):
        enc = eval_bounds(f, _point_bounds(_center(b)), k, prec)
        return max(max(fhi - lo, hi - flo) for (lo, hi), (flo, fhi) in zip(enc, fx))

    for axis in range(d):
        for sign in (-1, 1):
            face = [(v - radius, v + radius) for v in x]
            c = x[axis] + sign * radius
            face[axis] = (c, c)
            heapq.heappush(heap, (lower(face), next(seq), face, axis))
            used += 1
    while True:
        lo, _, b, axis = heap[0]
        if lo > goal:
            return lo
        if upper_at(b) <= goal or used >= budget or d == 1:
            return None
        heapq.heappop(heap)
        free = [i for i in range(d) if i != axis]
        halves = []
        for i in range(d):
            a, e = b[i]
            if i in free:
                m = (a + e) / 2
                halves.append(((a, m), (m, e)))
            else:
                halves.append(((a, e),))
        for child in itertools.product(*halves):
            child = list(child)
            heapq.heappush(heap, (lower(child), next(seq), child, axis))
            used += 1


@dataclass(frozen=True)
class SubsquareResult:
    verdict: SubsquareVerdict
    witness: Witness | None = None


def subsquare_zero_test(
    f: C1Name,
    sj: Box,
    l: int,
    n: int,
    n_tilde: int,
    M: mpq,
    budget: int = 100_000,
    prec=None,
) -> SubsquareResult:
    """One pass of the sub-cell loop at depth l."""
    if sj.n != n_tilde:
        raise ValueError("sub-cell resolution does not match n~")
    thr = pow2(-l)
    search = DistanceSearch(f, sj.bounds(), _k_for(thr), budget, prec)
    if soft_compare(search.enclosures(), thr) is Comparison.ABOVE:
        return SubsquareResult(SubsquareVerdict.FALSE)

    side = mpq(1, n_tilde)
    N = lattice_size(side, l, M)
    lo = sj.lo
    p = search.best_point
    nearest = [min(N - 1, max(0, int((v - a) * N / side))) for v, a in zip(p, lo)]
    axes = [sorted({max(0, i - 1), i, min(N - 1, i + 1)}) for i in nearest]
    candidates = sorted(
        itertools.product(*axes),
        key=lambda idx: (max(abs(u - v) for u, v in zip(lattice_point(lo, side, N, idx), p)), idx),
    )
    k = n + 10 + n_tilde.bit_length()
    for idx in candidates:
        x = lattice_point(lo, side, N, idx)
        th = theta(x, sj.id)
        residual = _norm_upper(eval_bounds(f, _point_bounds(x), k, prec))
        floor_goal = pow2(-n - 1) * th
        if 2 * residual >= M * th:
            continue
        goal = max(2 * residual, floor_goal)
        di = sphere_lower_bound(f, x, th, goal, k, prec=prec)
        if di is not None and di >= floor_goal and 2 * residual < di:
            return SubsquareResult(SubsquareVerdict.CANDIDATE_ZERO, Witness(x, th, di, residual, l))
    return SubsquareResult(SubsquareVerdict.REFINE)


def jacobian_regularity(f: C1Name, cell: GridId, k: int, depth: int = 2, prec=None) -> RationalInterval:
    """Enclosure of det over the interval hull of Df on M(cell).

    If it excludes 0, every point matrix of the hull is nonsingular and f is
    injective on the convex box M(cell) (mean value theorem row by row). The
    hull is taken over up to ``depth`` uniform bisections for tightness.
    """
    pieces = [inflated_bounds(cell, 3)]
    det = None
    for level in range(depth + 1):
        hull = None
        for b in pieces:
            rows = jac_bounds(f, b, k, prec)
            if hull is None:
                hull = [list(r) for r in rows]
            else:
                hull = [
                    [(min(a[0], c[0]), max(a[1], c[1])) for a, c in zip(hr, r)]
                    for hr, r in zip(hull, rows)
                ]
        det = mat_det(IntervalMatrix([[RationalInterval._raw(a, b) for a, b in r] for r in hull]))
        if not det.contains_zero() or level == depth:
            return det
        pieces = [c for b in pieces for c in _bisect_bounds(b)]
    return det


def dedup_and_record(cell: GridId, true_cells: Sequence[GridId], reach: int = DEDUP_REACH) -> Result:
    """True unless an already-True sub-cell lies within Chebyshev distance ``reach``."""
    for other in true_cells:
        if chebyshev_distance(cell, other) <= reach:
            return Result.FALSE
    return Result.TRUE


def assemble(statuses: dict[GridId, SquareStatus]) -> tuple[int, list[Region]]:
    count = sum(s.counter for s in statuses.values())
    regions = []
    for g in sorted(statuses):
        st = statuses[g]
        if st.result is Result.TRUE:
            for cell, boxes in st.certified:
                regions.append(Region(cell, tuple(boxes)))
    regions.sort(key=lambda r: r.cell)
    return count, regions


# ---------------------------------------------------------------------------
# Driver
# ---------------------------------------------------------------------------


def _scan_blocks(f: C1Name, n: int, ranges, thr: mpq, k: int, prec) -> list[GridId]:
    """Cells of C_n inside ``ranges`` not excluded by a block enclosure.

    A block whose enclosure has ||f|| > thr everywhere settles every cell in
    it; the rest are returned (lexicographic) for the per-cell test.
    """
    out = []

    def visit(rng):
        bounds = [(mpq(a, n), mpq(b, n)) for a, b in rng]
        if _norm_lower(eval_bounds(f, bounds, k, prec)) > thr:
            return
        sizes = [b - a for a, b in rng]
        if max(sizes) == 1:
            out.append(GridId(n, tuple(a for a, _ in rng)))
            return
        axis = max(range(len(rng)), key=lambda i: (sizes[i], -i))
        a, b = rng[axis]
        m = (a + b) // 2
        for part in ((a, m), (m, b)):
            sub = list(rng)
            sub[axis] = part
            visit(sub)

    visit(list(ranges))
    out.sort()
    return out


class _Restart(Exception):
    def __init__(self, reason: str, cell: GridId):
        super().__init__(reason)
        self.reason = reason
        self.cell = cell


class Certifier:
    """One certify() call; holds the per-run caches (M, r_m) and the trace."""

    def __init__(self, f: C1Name, cfg: CertifierConfig):
        self.f = f
        self.cfg = cfg
        self.trace: list[dict] = []
        self.modulus: ModulusSequence = modulus_sequence(f)
        self.M: mpq | None = None

    def _map(self, fn, items):
        if self.cfg.threads == 1 or len(items) < 2:
            return [fn(x) for x in items]
        with ThreadPoolExecutor(max_workers=self.cfg.threads) as ex:
            return list(ex.map(fn, items))

    def run(self) -> ZeroReport:
        cfg = self.cfg
        n = 3 * cfg.n0
        try:
            self.M = compute_M(self.f, cfg.m_precision)
            self.trace.append({"event": "bound", "M": str(self.M)})
            restarts = 0
            while True:
                try:
                    return self._attempt(n)
                except _Restart as r:
                    if restarts == cfg.restart_budget:
                        reason = (
                            f"restart budget of {cfg.restart_budget} exhausted "
                            f"({r.reason} at {list(r.cell.coords)})"
                        )
                        break
                    self.trace.append(
                        {"event": "restart", "n": n, "reason": r.reason, "cell": list(r.cell.coords)}
                    )
                    log.debug("restart at n=%d (%s at %s)", n, r.reason, r.cell.coords)
                    restarts += 1
                    n += 1
        except BudgetExhausted as e:
            reason = str(e)
        self.trace.append({"event": "inconclusive", "n": n, "reason": reason})
        return ZeroReport(Outcome.INCONCLUSIVE, n, None, (), trace=tuple(self.trace), reason=reason)

    def _attempt(self, n: int) -> ZeroReport:
        f, cfg = self.f, self.cfg
        d = f.dimension
        prec = cfg.precision
        thr = pow2(-n)
        k = _k_for(thr)

        # Steps 2-3: exclusion scan in lexicographic order.
        survivors = _scan_blocks(f, n, [(-n, n)] * d, thr, k, prec)
        verdicts = self._map(lambda g: exclusion_test(f, Box(g), n, cfg.box_budget, prec), survivors)
        maybe = [g for g, v in zip(survivors, verdicts) if v is Exclusion.MAYBE]
        self.trace.append({"event": "scan", "n": n, "cells": (2 * n) ** d, "maybe": len(maybe)})

        floors: dict[GridId, FloorResult] = {}
        for g in maybe:
            if boundary_distance_index(g) < 5:
                raise _Restart("boundary", g)
            fr = jacobian_floor_test(f, Box(g), n, cfg.box_budget, prec)
            if fr.verdict is FloorVerdict.TOO_SMALL:
                raise _Restart("floor", g)
            floors[g] = fr
            self.trace.append(
                {"event": "floor", "n": n, "cell": list(g.coords), "lower": str(fr.lower), "m": floor_exponent(fr.lower)}
            )

        statuses = {g: SquareStatus() for g in maybe}
        if not maybe:
            return self._report(n, None, statuses, [])

        # Step 4: one global n~ from the worst certified floor.
        m = max(floor_exponent(fr.lower) for fr in floors.values())
        r = self.modulus(m)
        n_tilde = choose_subdivision(n, r, min_factor=3)
        j = n_tilde // n
        l0 = initial_depth(n, n_tilde, cfg.initial_depth)
        self.trace.append(
            {"event": "subdivide", "n": n, "n_tilde": n_tilde, "m": m, "radius": str(r), "l0": l0}
        )

        thr_l = pow2(-l0)
        k_l = _k_for(thr_l)
        cells: list[GridId] = []
        for g in maybe:
            cells.extend(_scan_blocks(f, n_tilde, [(j * z, j * z + j) for z in g.coords], thr_l, k_l, prec))
        cells.sort()
        self.trace.append({"event": "subcells", "total": len(maybe) * j**d, "survivors": len(cells)})

        M = self.M
        k_reg = _k_for(pow2(-n)) + n_tilde.bit_length()

        def resolve(cell: GridId):
            box = Box(cell)
            l = l0
            for _ in range(cfg.depth_budget + 1):
                res = subsquare_zero_test(f, box, l, n, n_tilde, M, cfg.box_budget, prec)
                if res.verdict is SubsquareVerdict.FALSE:
                    return res, None
                if res.verdict is SubsquareVerdict.CANDIDATE_ZERO:
                    return res, jacobian_regularity(f, cell, k_reg, prec=prec)
                l += 1
            raise BudgetExhausted(f"depth budget exhausted on sub-cell {cell.coords}")

        outcomes = self._map(resolve, cells)

        # Sequential commit in the fixed global order.
        true_cells: list[GridId] = []
        certificates: list[Certificate] = []
        for cell, (res, det) in zip(cells, outcomes):
            if res.verdict is SubsquareVerdict.FALSE:
                continue
            if det.contains_zero():
                raise _Restart("injectivity", cell)
            result = dedup_and_record(cell, true_cells)
            self.trace.append(
                {"event": "candidate", "cell": list(cell.coords), "depth": res.witness.depth, "result": result.value}
            )
            if result is Result.FALSE:
                continue
            true_cells.append(cell)
            owner = parent(cell, j)
            fr = floors[owner]
            certificates.append(Certificate(cell, res.witness, fr.lower, m, r, det))
            st = statuses[owner]
            st.result = Result.TRUE
            st.counter += 1
            st.certified.append((cell, [Box(g) for g in block(cell, 1)]))
        for st in statuses.values():
            if st.result is Result.UNDEFINED:
                st.result = Result.FALSE
        return self._report(n, n_tilde, statuses, certificates)

    def _report(self, n, n_tilde, statuses, certificates) -> ZeroReport:
        count, regions = assemble(statuses)
        self.trace.append({"event": "certified", "n": n, "count": count})
        return ZeroReport(
            Outcome.CERTIFIED,
            n,
            count,
            tuple(regions),
            n_tilde,
            tuple(certificates),
            tuple(self.trace),
        )


def certify(f: C1Name, cfg: CertifierConfig) -> ZeroReport:
    """Count and localise the zeros of f on [-1, 1]^d.

    Certified reports are exact; budget exhaustion yields Inconclusive.
    """
    return Certifier(f, cfg).run()
