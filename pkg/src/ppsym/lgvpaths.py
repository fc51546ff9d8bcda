"""North/east lattice paths from u_i = (i, 2n-2i) to v_j = (2j+1, 2n-j).

The east step entering any v_j has weight 1/2; every other step has
weight 1.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterator

from .exactnum import HALF
from .matrices import RationalMatrix, determinant

Point = tuple[int, int]

NONINTERSECTING_MAX_N = 3


class FamilyTooLarge(ValueError):
    pass


@dataclass(frozen=True)
class LatticePathSystem:
    n: int
    half_weights: bool = True

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 1:
            raise ValueError(f"n must be a positive integer, got {self.n!r}")

    @property
    def starts(self) -> tuple[Point, ...]:
        return tuple((i, 2 * self.n - 2 * i) for i in range(self.n))

    @property
    def ends(self) -> tuple[Point, ...]:
        return tuple((2 * i + 1, 2 * self.n - i) for i in range(self.n))

    def step_weight(self, a: Point, b: Point) -> Fraction:
        if b[0] - a[0] + b[1] - a[1] != 1 or b[0] < a[0] or b[1] < a[1]:
            raise ValueError(f"{a} -> {b} is not a unit north or east step")
        if self.half_weights and b[1] == a[1] and b in self.ends:
            return HALF
        return Fraction(1)

    def path_weight(self, path: tuple[Point, ...]) -> Fraction:
        w = Fraction(1)
        for a, b in zip(path, path[1:]):
            w *= self.step_weight(a, b)
        return w


def _system(n: int, half_weights: bool = True) -> LatticePathSystem:
    return LatticePathSystem(n, half_weights)


def path_gf(n: int, i: int, j: int, half_weights: bool = True) -> Fraction:
    """Weighted count of north/east paths u_i -> v_j, by dynamic programming."""
    sys_ = _system(n, half_weights)
    if not (0 <= i < n and 0 <= j < n):
        raise IndexError(f"endpoint indices must lie in [0, {n}), got {(i, j)}")
    (x0, y0), (x1, y1) = sys_.starts[i], sys_.ends[j]
    if x1 < x0 or y1 < y0:
        return Fraction(0)
    ends = set(sys_.ends) if half_weights else set()
    # table[dy][dx] = weighted count of paths from u_i to (x0 + dx, y0 + dy)
    width = x1 - x0 + 1
    prev = None
    for dy in range(y1 - y0 + 1):
        row = [Fraction(0)] * width
        for dx in range(width):
            if dx == 0 and dy == 0:
                row[0] = Fraction(1)
                continue
            total = Fraction(0)
            if dy:
                total += prev[dx]
            if dx:
                east = row[dx - 1]
                if (x0 + dx, y0 + dy) in ends:
                    east = east * HALF
                total += east
            row[dx] = total
        prev = row
    return prev[-1]


def lgv_matrix(n: int) -> RationalMatrix:
    return RationalMatrix.from_function(n, lambda i, j: path_gf(n, i, j))


def lstar(n: int) -> Fraction:
    """Determinant of the path generating-function matrix."""
    return determinant(lgv_matrix(n))


def paths(a: Point, b: Point) -> Iterator[tuple[Point, ...]]:
    """All north/east paths from a to b, in lexicographic order of their
    step strings ('E' < 'N')."""
    dx, dy = b[0] - a[0], b[1] - a[1]
    if dx < 0 or dy < 0:
        return
    for east_at in itertools.combinations(range(dx + dy), dx):
        east = set(east_at)
        p = [a]
        x, y = a
        for s in range(dx + dy):
            if s in east:
                x += 1
            else:
                y += 1
            p.append((x, y))
        yield tuple(p)


def _families(n: int, perm: tuple[int, ...]):
    """Vertex-disjoint path tuples with P_i running from u_i to v_perm(i)."""
    sys_ = _system(n)
    options = [list(paths(sys_.starts[i], sys_.ends[perm[i]])) for i in range(n)]
    used: set[Point] = set()
    chosen: list[tuple[Point, ...]] = []

    def rec(i: int):
        if i == n:
            yield tuple(chosen)
            return
        for p in options[i]:
            pts = set(p)
            if used.isdisjoint(pts):
                used.update(pts)
                chosen.append(p)
                yield from rec(i + 1)
                chosen.pop()
                used.difference_update(pts)

    yield from rec(0)


def _check_family_n(n: int) -> None:
    if not isinstance(n, int) or n < 1:
        raise ValueError(f"n must be a positive integer, got {n!r}")
    if n > NONINTERSECTING_MAX_N:
        raise FamilyTooLarge(f"family enumeration is limited to n <= {NONINTERSECTING_MAX_N}, got n={n}")


def nonintersecting_families(n: int) -> Iterator[tuple[tuple[Point, ...], ...]]:
    _check_family_n(n)
    for fam in _families(n, tuple(range(n))):
        pts = [pt for p in fam for pt in p]
        assert len(pts) == len(set(pts)), "paths share a lattice point"
        yield fam


def enumerate_nonintersecting(n: int) -> Fraction:
    """Weighted count of vertex-disjoint families P_i: u_i -> v_i, by brute force."""
    sys_ = _system(n)
    total = Fraction(0)
    for fam in nonintersecting_families(n):
        w = Fraction(1)
        for p in fam:
            w *= sys_.path_weight(p)
        total += w
    return total


@lru_cache(maxsize=None)
def family_permutations(n: int) -> frozenset[tuple[int, ...]]:
    """Permutations realised by at least one vertex-disjoint family."""
    _check_family_n(n)
    return frozenset(
        perm for perm in itertools.permutations(range(n)) if next(_families(n, perm), None) is not None
    )


def compatibility_check(n: int) -> bool:
    """True iff vertex-disjoint families only ever join u_i to v_i."""
    return family_permutations(n) == frozenset({tuple(range(n))})
