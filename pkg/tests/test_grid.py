import itertools

import pytest
from gmpy2 import mpq
from hypothesis import given
from hypothesis import strategies as st

from zerocert.grid import (
    Box,
    GridId,
    adjacent,
    block,
    boundary_distance,
    chebyshev_distance,
    cover,
    inflated_bounds,
    neighborhoods,
    parent,
    subdivide,
)


def test_cover_n1_d2_centres():
    centres = sorted(b.center for b in cover(1, 2))
    h = mpq(1, 2)
    assert centres == sorted(itertools.product((-h, h), repeat=2))


def test_cover_n2_d1_intervals():
    got = [tuple(b.bounds()[0]) for b in cover(2, 1)]
    assert got == [(-1, mpq(-1, 2)), (mpq(-1, 2), 0), (0, mpq(1, 2)), (mpq(1, 2), 1)]


def test_cover_n3_d2_tiles_square():
    boxes = cover(3, 2)
    assert len(boxes) == 36
    # every cell of the 1/6 refinement lies in exactly one cell
    for i, j in itertools.product(range(12), repeat=2):
        p = (mpq(2 * i + 1, 12) - 1, mpq(2 * j + 1, 12) - 1)
        inside = [b for b in boxes if all(lo < v < hi for v, (lo, hi) in zip(p, b.bounds()))]
        assert len(inside) == 1
    area = sum(b.half_side**2 * 4 for b in boxes)
    assert area == 4


def test_cover_is_lexicographic():
    ids = [b.id for b in cover(3, 2)]
    assert ids == sorted(ids)


def test_boundary_distance_examples():
    assert boundary_distance(Box.at(3, -3, -3)) == 0
    assert boundary_distance(Box.at(3, 0, 0)) == mpq(2, 3)
    assert all(boundary_distance(Box.at(3, 2, z)) == 0 for z in range(-3, 3))


def test_neighborhood_sizes():
    near, far = neighborhoods(Box.at(12, 0, 0))
    assert len(near) == 9 and len(far) == 49
    near1, far1 = neighborhoods(Box.at(12, 1))
    assert len(near1) == 3 and len(far1) == 7


def test_neighborhoods_need_boundary_distance():
    with pytest.raises(ValueError):
        neighborhoods(Box.at(8, 4, 0))


def test_containment_chain_at_n8():
    n = 8
    for b in cover(n, 2):
        try:
            near, far = neighborhoods(b)
        except ValueError:
            continue
        ids_near, ids_far = {x.id for x in near}, {x.id for x in far}
        assert b.id in ids_near <= ids_far
        for lo, hi in inflated_bounds(b.id, 3):
            assert -1 <= lo and hi <= 1


def test_subdivide_examples():
    s = Box.at(6, 1, -2)
    assert subdivide(s, 1) == [Box(GridId(6, (1, -2)))]
    parts = subdivide(s, 3)
    assert len(parts) == 9
    assert sum(p.half_side**2 * 4 for p in parts) == (2 * s.half_side) ** 2
    assert all(parent(p.id, 3) == s.id for p in parts)


@pytest.mark.parametrize("j,d", list(itertools.product(range(2, 5), range(1, 4))))
def test_subdivide_counts(j, d):
    assert len(subdivide(Box(GridId(4, (0,) * d)), j)) == j**d


def test_adjacency_examples():
    assert adjacent(GridId(4, (0, 0)), GridId(4, (1, 1)))
    assert not adjacent(GridId(4, (0, 0)), GridId(4, (2, 0)))
    assert not adjacent(GridId(4, (0, 0)), GridId(4, (0, 0)))


def test_interior_neighbour_count():
    n = 12
    ids = [b.id for b in cover(n, 2)]
    for g in ids:
        if all(-n < z < n - 1 for z in g.coords):
            assert sum(adjacent(g, h) for h in ids) == 8


def test_resolution_mismatch_rejected():
    with pytest.raises(ValueError):
        chebyshev_distance(GridId(4, (0,)), GridId(5, (0,)))


def test_gridid_validates_range():
    with pytest.raises(ValueError):
        GridId(2, (2,))


@given(st.integers(1, 20), st.integers(1, 4), st.data())
def test_block_and_parent_roundtrip(n, j, data):
    z = data.draw(st.integers(-n, n - 1))
    g = GridId(n, (z,))
    kids = [b.id for b in subdivide(Box(g), j)]
    assert all(parent(k, j) == g for k in kids)
    lo, hi = Box(g).bounds()[0]
    assert lo == min(Box(k).bounds()[0][0] for k in kids)
    assert hi == max(Box(k).bounds()[0][1] for k in kids)


def test_block_is_chebyshev_ball():
    g = GridId(10, (0, 0, 0))
    assert len(block(g, 2)) == 125
    assert all(chebyshev_distance(g, h) <= 2 for h in block(g, 2))
