import itertools
from fractions import Fraction

import pytest
from gmpy2 import mpq
from hypothesis import HealthCheck, given, settings
from hypothesis import strategies as st

from zerocert.c1name import PolynomialName, compute_M, modulus_sequence
from zerocert.certifier import (
    DEDUP_REACH,
    CertifierConfig,
    Exclusion,
    FloorVerdict,
    Outcome,
    Result,
    SquareStatus,
    SubsquareVerdict,
    assemble,
    certify,
    choose_subdivision,
    dedup_and_record,
    exclusion_test,
    initial_depth,
    jacobian_floor_test,
    jacobian_regularity,
    lattice_point,
    lattice_size,
    subsquare_zero_test,
    theta,
)
from zerocert.grid import Box, GridId, block
from zerocert.interval import Q, pow2
from zerocert.poly import Polynomial

X2, Y2 = Polynomial.variable(2, 0), Polynomial.variable(2, 1)
X1 = Polynomial.variable(1, 0)


def c(d, v):
    return Polynomial.constant(d, Q(v))


IDENTITY = PolynomialName([X2, Y2])
QUAD = PolynomialName([X1 * X1 - c(1, "1/4")])
CIRCLE = PolynomialName([X2 * X2 + Y2 * Y2 - c(2, "1/2"), Y2 - X2])
FAR = PolynomialName([X2 - c(2, 3), Y2])


# whole runs


def test_identity_single_region():
    r = certify(IDENTITY, CertifierConfig(n0=2))
    assert r.outcome is Outcome.CERTIFIED and r.count == 1
    (region,) = r.regions
    assert all(lo <= 0 <= hi for lo, hi in zip(region.lo, region.hi))
    assert r.n >= 6


def test_zero_free_far_field():
    r = certify(FAR, CertifierConfig(n0=1))
    assert r.outcome is Outcome.CERTIFIED and r.count == 0 and r.regions == ()
    assert r.n == 3


def test_quadratic_two_regions_near_roots():
    r = certify(QUAD, CertifierConfig(n0=4))
    assert r.outcome is Outcome.CERTIFIED and r.count == 2
    for region, root in zip(r.regions, (mpq(-1, 2), mpq(1, 2))):
        lo, hi = region.lo[0], region.hi[0]
        assert lo <= root <= hi
        assert max(root - lo, hi - root) <= mpq(1, 4)
    assert r.regions[0].hi[0] < r.regions[1].lo[0]


def test_square_is_inconclusive():
    r = certify(PolynomialName([X1 * X1]), CertifierConfig(n0=2, restart_budget=8))
    assert r.outcome is Outcome.INCONCLUSIVE and r.count is None and r.regions == ()
    assert "restart budget" in r.reason


def test_depth_budget_exhaustion_is_inconclusive():
    r = certify(QUAD, CertifierConfig(n0=4, depth_budget=1, initial_depth="termination", box_budget=3))
    assert r.outcome is Outcome.INCONCLUSIVE


def test_literal_depth_mode_agrees():
    a = certify(CIRCLE, CertifierConfig(n0=2, initial_depth="literal"))
    b = certify(CIRCLE, CertifierConfig(n0=2, initial_depth="termination"))
    assert a.count == b.count == 2
    assert [r.cell for r in a.regions] == [r.cell for r in b.regions]


def test_restart_trace_names_first_trigger():
    r = certify(CIRCLE, CertifierConfig(n0=2))
    first = next(e for e in r.trace if e["event"] == "restart")
    assert first == {"event": "restart", "n": 6, "reason": "boundary", "cell": [-4, -4]}
    ns = [e["n"] for e in r.trace if e["event"] == "scan"]
    assert ns == list(range(6, r.n + 1))


def test_threads_do_not_change_report():
    a = certify(CIRCLE, CertifierConfig(n0=3, threads=1))
    b = certify(CIRCLE, CertifierConfig(n0=3, threads=4))
    assert a == b


def test_config_validation():
    with pytest.raises(ValueError):
        CertifierConfig(n0=0)
    with pytest.raises(ValueError):
        CertifierConfig(n0=1, initial_depth="other")


# exclusion


def test_exclusion_examples():
    for b in [Box.at(4, -4, -4), Box.at(4, 3, 3), Box.at(4, 0, 0)]:
        assert exclusion_test(FAR, b, 4) is Exclusion.NO_ZERO
    assert exclusion_test(IDENTITY, Box.at(6, -1, 0), 6) is Exclusion.MAYBE
    assert exclusion_test(QUAD, Box.at(8, 3), 8) is Exclusion.MAYBE  # [3/8, 1/2]
    # min |x^2 - 1/4| on [0, 1/8] is 15/64
    for n in range(4, 12):
        assert exclusion_test(QUAD, Box.at(8, 0), n) is Exclusion.NO_ZERO


@settings(max_examples=60, deadline=None)
@given(st.integers(2, 10), st.data())
def test_exclusion_certificates_hold(n, data):
    z = data.draw(st.integers(-n, n - 1))
    b = Box.at(n, z)
    lo, hi = (Fraction(int(v.numerator), int(v.denominator)) for v in b.bounds()[0])
    # exact min of |x^2 - 1/4| on [lo, hi]
    cands = [lo, hi] + [r for r in (Fraction(-1, 2), Fraction(1, 2)) if lo <= r <= hi] + ([0] if lo <= 0 <= hi else [])
    dist = min(abs(x * x - Fraction(1, 4)) for x in cands)
    if any(lo <= r <= hi for r in (Fraction(-1, 2), Fraction(1, 2))):
        dist = Fraction(0)
    v = exclusion_test(QUAD, b, n)
    if v is Exclusion.NO_ZERO:
        assert dist > Fraction(1, 2**n)
    else:
        assert dist <= Fraction(2, 2**n)


# Jacobian floor


def test_floor_identity():
    for n in (1, 4, 9):
        s = Box.at(max(n, 4) + 4, 0, 0)
        assert jacobian_floor_test(IDENTITY, s, n).verdict is FloorVerdict.FLOOR


def test_floor_too_small_at_critical_point():
    for n in (8, 12, 20):
        assert jacobian_floor_test(QUAD, Box.at(n, 0), n).verdict is FloorVerdict.TOO_SMALL


def test_floor_circle_against_dense_grid():
    n = 12
    s = Box.at(n, 6, 6)  # [1/2, 7/12]^2
    res = jacobian_floor_test(CIRCLE, s, n)
    assert res.verdict is FloorVerdict.FLOOR
    lo_x, hi_x = Fraction(3, 12), Fraction(10, 12)
    N = 28
    grid_min = min(
        min(max(2 * abs(x) + 2 * abs(y), Fraction(2)), abs(2 * x + 2 * y))
        for x, y in itertools.product(
            [lo_x + (hi_x - lo_x) * i / N for i in range(N + 1)], repeat=2
        )
    )
    assert res.lower <= Q(grid_min)
    assert res.lower > pow2(-n)


def test_floor_requires_interior_square():
    with pytest.raises(ValueError):
        jacobian_floor_test(IDENTITY, Box.at(6, 3, 0), 6)


# subdivision and sub-cells


def test_choose_subdivision_examples():
    assert choose_subdivision(6, mpq(1)) == 6
    assert choose_subdivision(6, mpq(1, 8)) == 30
    assert choose_subdivision(6, mpq(1), min_factor=3) == 18


@given(st.integers(1, 40), st.fractions(Fraction(1, 1000), 1), st.fractions(Fraction(1, 1000), 1))
def test_choose_subdivision_monotone(n, r1, r2):
    r1, r2 = sorted((Q(r1), Q(r2)))
    a, b = choose_subdivision(n, r1), choose_subdivision(n, r2)
    assert a >= b and a % n == 0
    assert mpq(7, 2 * a) < r1


def test_initial_depth_termination_bound():
    for n, nt in [(6, 18), (11, 121), (24, 1704)]:
        l = initial_depth(n, nt, "termination")
        assert pow2(-l - 1) < pow2(-n - 2) / nt
        assert not pow2(-l) < pow2(-n - 2) / nt
        assert initial_depth(n, nt, "literal") == nt


def test_subsquare_identity_candidate_by_termination_depth():
    n, nt = 6, 18
    M = compute_M(IDENTITY)
    l = initial_depth(n, nt, "termination")
    for coords in [(0, 0), (-1, 0), (-1, -1), (0, -1)]:
        res = subsquare_zero_test(IDENTITY, Box(GridId(nt, coords)), l, n, nt, M)
        assert res.verdict is SubsquareVerdict.CANDIDATE_ZERO
        w = res.witness
        assert 2 * w.residual_upper < w.d_lower


def test_subsquare_identity_far_cell_false():
    n, nt = 6, 24
    M = compute_M(IDENTITY)
    s = Box(GridId(nt, (6, 0)))  # d(0, s) = 1/4 in the inf-norm
    for l in (3, 5, 9):
        assert subsquare_zero_test(IDENTITY, s, l, n, nt, M).verdict is SubsquareVerdict.FALSE


def test_theta_bounds_exhaustive():
    nt = 12
    f = PolynomialName([X2, Y2], margin=1)
    M = compute_M(f)
    r = modulus_sequence(f)(1)
    assert choose_subdivision(nt, r) == nt
    N = lattice_size(mpq(1, nt), 0, M)
    for g in [GridId(nt, (0, 0)), GridId(nt, (3, -5))]:
        lo = Box(g).lo
        for idx in itertools.product(range(N), repeat=2):
            th = theta(lattice_point(lo, mpq(1, nt), N, idx), g)
            assert mpq(1, nt) <= th <= mpq(3, 2 * nt) < r


def test_lattice_spacing():
    M = mpq(3)
    for l in (0, 4, 10):
        N = lattice_size(mpq(1, 30), l, M)
        assert mpq(1, 30) / N <= pow2(-l - 1) / (4 * M)
        assert N == 1 or mpq(1, 30) / (N - 1) > pow2(-l - 1) / (4 * M)


# dedup and assembly


def test_dedup_examples():
    a = GridId(18, (0, 0))
    assert dedup_and_record(a, []) is Result.TRUE
    assert dedup_and_record(GridId(18, (1, 0)), [a]) is Result.FALSE
    assert dedup_and_record(GridId(18, (DEDUP_REACH + 1, 0)), [a]) is Result.TRUE


def test_corner_zero_claims_one_of_four():
    # every sub-cell touching the origin is a candidate; only the first survives
    cells = sorted(GridId(18, c) for c in itertools.product((-1, 0), repeat=2))
    true_cells = []
    for g in cells:
        if dedup_and_record(g, true_cells) is Result.TRUE:
            true_cells.append(g)
    assert true_cells == [GridId(18, (-1, -1))]


def test_assemble_examples():
    assert assemble({GridId(6, (0,)): SquareStatus(Result.FALSE)}) == (0, [])
    g = GridId(18, (0, 0))
    st_ = SquareStatus(Result.TRUE, 1, [(g, [Box(h) for h in block(g, 1)])])
    count, regions = assemble({GridId(6, (0, 0)): st_})
    assert count == 1 and len(regions[0].boxes) == 9 and regions[0].cell == g


# injectivity


def test_floor_condition_does_not_bound_increment_from_below():
    # (x, 10x + y/8): min{||A||_inf, |det A|} = 1/8, yet ||A h|| / ||h|| = 1/88
    A = [[Fraction(1), Fraction(0)], [Fraction(10), Fraction(1, 8)]]
    h = (Fraction(1), Fraction(-88))
    Ah = [A[0][0] * h[0] + A[0][1] * h[1], A[1][0] * h[0] + A[1][1] * h[1]]
    ratio = max(abs(v) for v in Ah) / max(abs(v) for v in h)
    floor = min(max(sum(abs(v) for v in row) for row in A), abs(A[0][0] * A[1][1] - A[0][1] * A[1][0]))
    assert floor == Fraction(1, 8) and ratio == Fraction(1, 88) < Fraction(1, 16)

    f = PolynomialName([X2, X2.scale(10) + Y2.scale(Q("1/8"))])
    r = certify(f, CertifierConfig(n0=2))
    assert r.outcome is Outcome.CERTIFIED and r.count == 1
    assert all(not c.jacobian_det.contains_zero() for c in r.certificates)


def test_regularity_detects_singular_jacobian():
    f = PolynomialName([X2 * X2, Y2])
    assert jacobian_regularity(f, GridId(12, (0, 0)), 20).contains_zero()
    assert not jacobian_regularity(CIRCLE, GridId(24, (12, 12)), 20).contains_zero()


# soundness fuzzing on families with known zeros


rat = st.fractions(Fraction(-3, 5), Fraction(3, 5), max_denominator=12)
slope = st.sampled_from([Fraction(1), Fraction(-1), Fraction(2), Fraction(1, 2), Fraction(-3, 2)])


@settings(max_examples=15, deadline=None, suppress_health_check=[HealthCheck.too_slow])
@given(rat, rat, slope, slope, st.fractions(-1, 1, max_denominator=4))
def test_affine_maps_certify_their_zero(p, q, a, b, shear):
    P, Qv = c(2, Q(p)), c(2, Q(q))
    f = PolynomialName([(X2 - P).scale(Q(a)), (Y2 - Qv).scale(Q(b)) + (X2 - P).scale(Q(shear))])
    r = certify(f, CertifierConfig(n0=1, restart_budget=24))
    if r.outcome is Outcome.CERTIFIED:
        assert r.count == 1
        (region,) = r.regions
        assert all(lo <= v <= hi for v, lo, hi in zip((Q(p), Q(q)), region.lo, region.hi))


@settings(max_examples=15, deadline=None, suppress_health_check=[HealthCheck.too_slow])
@given(st.fractions(Fraction(1, 5), Fraction(3, 5), max_denominator=10), st.fractions(Fraction(-3, 5), Fraction(3, 5), max_denominator=10))
def test_separable_quadratics_count(a, b):
    f = PolynomialName([X2 * X2 - c(2, Q(a * a)), Y2 - c(2, Q(b))])
    r = certify(f, CertifierConfig(n0=1, restart_budget=24))
    if r.outcome is Outcome.CERTIFIED:
        assert r.count == 2
        zs = [(Q(-a), Q(b)), (Q(a), Q(b))]
        for z in zs:
            assert sum(all(lo <= v <= hi for v, lo, hi in zip(z, R.lo, R.hi)) for R in r.regions) == 1
