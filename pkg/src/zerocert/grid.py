"""Uniform covers of K = [-1, 1]^d by n-cubes of side 1/n.

An n-cube is addressed by integer coordinates z with -n <= z_i < n; it is the
box prod [z_i/n, (z_i+1)/n] centred at (z + 1/2)/n. All geometry reduces to
exact integer or rational arithmetic on these coordinates.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property

from gmpy2 import mpq

from .interval import IntervalVector, RationalInterval


@dataclass(frozen=True, order=True)
class GridId:
    n: int
    coords: tuple[int, ...]

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("resolution n must be positive")
        if any(not -self.n <= z < self.n for z in self.coords):
            raise ValueError(f"coords {self.coords} fall outside the cover at n={self.n}")

    @property
    def dim(self) -> int:
        return len(self.coords)


@dataclass(frozen=True)
class Box:
    """B_inf(center, 1/(2n)) for a cell of the cover C_n."""

    id: GridId

    @classmethod
    def at(cls, n: int, *coords: int) -> "Box":
        return cls(GridId(n, tuple(coords)))

    @property
    def n(self) -> int:
        return self.id.n

    @property
    def dim(self) -> int:
        return self.id.dim

    @cached_property
    def center(self) -> tuple[mpq, ...]:
        return tuple(mpq(2 * z + 1, 2 * self.n) for z in self.id.coords)

    @property
    def half_side(self) -> mpq:
        return mpq(1, 2 * self.n)

    @property
    def lo(self) -> tuple[mpq, ...]:
        return tuple(mpq(z, self.n) for z in self.id.coords)

    @property
    def hi(self) -> tuple[mpq, ...]:
        return tuple(mpq(z + 1, self.n) for z in self.id.coords)

    def bounds(self) -> list[tuple[mpq, mpq]]:
        return list(zip(self.lo, self.hi))

    def as_intervals(self) -> IntervalVector:
        return IntervalVector([RationalInterval._raw(a, b) for a, b in zip(self.lo, self.hi)])


def cover(n: int, d: int) -> list[Box]:
    """The (2n)^d cells of C_n in lexicographic order."""
    if n < 1 or d < 1:
        raise ValueError("need n >= 1 and d >= 1")
    return [Box(GridId(n, c)) for c in itertools.product(range(-n, n), repeat=d)]


def boundary_distance_index(g: GridId) -> int:
    """d(s, boundary of K) * n, an exact integer."""
    return min(min(z + g.n, g.n - 1 - z) for z in g.coords)


def boundary_distance(s: Box) -> mpq:
    """Exact inf-distance from the cell to the boundary of [-1, 1]^d."""
    return mpq(boundary_distance_index(s.id), s.n)


def block(g: GridId, radius: int) -> list[GridId]:
    """The (2*radius+1)^d cells within Chebyshev index distance ``radius``."""
    ranges = [range(z - radius, z + radius + 1) for z in g.coords]
    return [GridId(g.n, c) for c in itertools.product(*ranges)]


def inflated_bounds(g: GridId, radius: int) -> list[tuple[mpq, mpq]]:
    """The cell inflated by radius/n in the inf-norm, as a box."""
    return [(mpq(z - radius, g.n), mpq(z + 1 + radius, g.n)) for z in g.coords]


def neighborhoods(s: Box) -> tuple[list[Box], list[Box]]:
    """(N(s), M(s)): the 3^d block (inflation by 1/n) and the 7^d block
    (inflation by 3/n). Requires d(s, boundary) >= 4/n."""
    if boundary_distance_index(s.id) < 4:
        raise ValueError(f"{s.id} is closer than 4/n to the boundary of K")
    near = [Box(g) for g in block(s.id, 1)]
    far = [Box(g) for g in block(s.id, 3)]
    return near, far


def subdivide(s: Box, j: int) -> list[Box]:
    """The j^d cells of C_{j n} tiling s, lexicographic order."""
    if j < 1:
        raise ValueError("subdivision factor must be >= 1")
    nt = j * s.n
    ranges = [range(j * z, j * z + j) for z in s.id.coords]
    return [Box(GridId(nt, c)) for c in itertools.product(*ranges)]


def parent(g: GridId, j: int) -> GridId:
    """The cell of C_{n/j} containing g."""
    if g.n % j:
        raise ValueError("resolution is not a multiple of j")
    return GridId(g.n // j, tuple(z // j for z in g.coords))


def chebyshev_distance(a: GridId, b: GridId) -> int:
    if a.n != b.n:
        raise ValueError(f"resolution mismatch: {a.n} vs {b.n}")
    return max(abs(x - y) for x, y in zip(a.coords, b.coords, strict=True))


def adjacent(a: GridId, b: GridId) -> bool:
    """True iff the closed cells touch (face, edge or corner) and differ."""
    return a != b and chebyshev_distance(a, b) <= 1
