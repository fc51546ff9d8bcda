"""Plane partitions in a box, their symmetries, and brute-force class counts.

A plane partition in B(a, b, c) is stored as an a x b array of column
heights in [0, c], non-increasing along rows and columns. The cell
(i, j, k) belongs to the partition iff heights[i][j] > k.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Callable, Iterator

DEFAULT_ENUMERATION_CAP = 2_000_000

Cell = tuple[int, int, int]


class EnumerationTooLarge(ValueError):
    pass


@dataclass(frozen=True)
class Box:
    a: int
    b: int
    c: int

    def __post_init__(self):
        if min(self.a, self.b, self.c) < 1:
            raise ValueError(f"box sides must be >= 1, got {self}")

    @property
    def volume(self) -> int:
        return self.a * self.b * self.c

    @property
    def is_cube(self) -> bool:
        return self.a == self.b == self.c

    def cells(self) -> Iterator[Cell]:
        return itertools.product(range(self.a), range(self.b), range(self.c))


@dataclass(frozen=True)
class PlanePartition:
    box: Box
    heights: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        h = self.heights
        if len(h) != self.box.a or any(len(row) != self.box.b for row in h):
            raise ValueError("height array does not match box shape")
        for i, row in enumerate(h):
            for j, v in enumerate(row):
                if not 0 <= v <= self.box.c:
                    raise ValueError(f"height {v} at ({i},{j}) outside [0, {self.box.c}]")
                if i and v > h[i - 1][j] or j and v > row[j - 1]:
                    raise ValueError(f"heights increase at ({i},{j})")

    @classmethod
    def empty(cls, box: Box) -> "PlanePartition":
        return cls(box, tuple((0,) * box.b for _ in range(box.a)))

    @classmethod
    def full(cls, box: Box) -> "PlanePartition":
        return cls(box, tuple((box.c,) * box.b for _ in range(box.a)))

    @classmethod
    def from_cells(cls, box: Box, cells) -> "PlanePartition":
        """Build from a set of cells; raises ValueError if it is not an order ideal."""
        cells = set(cells)
        h = [[0] * box.b for _ in range(box.a)]
        for i, j, k in cells:
            if not (0 <= i < box.a and 0 <= j < box.b and 0 <= k < box.c):
                raise ValueError(f"cell {(i, j, k)} lies outside {box}")
            h[i][j] += 1
        pp = cls(box, tuple(map(tuple, h)))
        if pp.cells() != frozenset(cells):
            raise ValueError("cell set is not an order ideal")
        return pp

    def cells(self) -> frozenset[Cell]:
        return frozenset(
            (i, j, k)
            for i, row in enumerate(self.heights)
            for j, v in enumerate(row)
            for k in range(v)
        )

    def __contains__(self, cell: Cell) -> bool:
        i, j, k = cell
        return 0 <= i < self.box.a and 0 <= j < self.box.b and 0 <= k < self.heights[i][j]

    def __len__(self) -> int:
        return sum(map(sum, self.heights))

    def to_text(self) -> str:
        return "\n".join(" ".join(map(str, row)) for row in self.heights)

    @classmethod
    def from_text(cls, text: str, c: int) -> "PlanePartition":
        rows = [tuple(int(v) for v in ln.split()) for ln in text.strip().splitlines()]
        return cls(Box(len(rows), len(rows[0]), c), tuple(rows))


def transpose_t(pp: PlanePartition) -> PlanePartition:
    """Swap the x and y axes: (i, j, k) -> (j, i, k)."""
    box = pp.box
    if box.a != box.b:
        raise ValueError(f"transpose needs a == b, got {box}")
    h = pp.heights
    return PlanePartition(box, tuple(tuple(h[j][i] for j in range(box.a)) for i in range(box.b)))


def rotate_r(pp: PlanePartition) -> PlanePartition:
    """Cyclically permute the axes, sending cell (i, j, k) to (k, i, j)."""
    box = pp.box
    if not box.is_cube:
        raise ValueError(f"rotation needs a cube, got {box}")
    m = box.a
    h = pp.heights
    # (x, y, z) is in the image iff (y, z, x) is in pp, i.e. h[y][z] > x
    return PlanePartition(
        box, tuple(tuple(sum(1 for z in range(m) if h[y][z] > x) for y in range(m)) for x in range(m))
    )


def complement_c(pp: PlanePartition) -> PlanePartition:
    """(i, j, k) is in the complement iff (a-i-1, b-j-1, c-k-1) is not in pp."""
    a, b, c = pp.box.a, pp.box.b, pp.box.c
    h = pp.heights
    return PlanePartition(
        pp.box, tuple(tuple(c - h[a - 1 - i][b - 1 - j] for j in range(b)) for i in range(a))
    )


def _require_cube(pp: PlanePartition) -> None:
    if not pp.box.is_cube:
        raise ValueError(f"symmetry class predicates need a cube, got {pp.box}")


def is_cssc(pp: PlanePartition) -> bool:
    _require_cube(pp)
    if 2 * len(pp) != pp.box.volume:
        return False
    return complement_c(pp) == pp and rotate_r(pp) == pp


def is_tssc(pp: PlanePartition) -> bool:
    return is_cssc(pp) and transpose_t(pp) == pp


def macmahon_count(box: Box) -> int:
    """Number of plane partitions in the box, by MacMahon's product."""
    num = den = 1
    for i in range(1, box.a + 1):
        for j in range(1, box.b + 1):
            for k in range(1, box.c + 1):
                num *= i + j + k - 1
                den *= i + j + k - 2
    return num // den


def enumerate_box(box: Box, cap: int | None = DEFAULT_ENUMERATION_CAP) -> Iterator[PlanePartition]:
    """Every plane partition in the box, in lexicographic order of the
    row-major height sequence."""
    if cap is not None and macmahon_count(box) > cap:
        raise EnumerationTooLarge(
            f"{box} holds {macmahon_count(box)} plane partitions, above the cap of {cap}"
        )
    a, b, c = box.a, box.b, box.c
    flat = [0] * (a * b)

    def rec(pos: int):
        if pos == a * b:
            yield tuple(tuple(flat[i * b:(i + 1) * b]) for i in range(a))
            return
        i, j = divmod(pos, b)
        hi = c
        if i:
            hi = min(hi, flat[pos - b])
        if j:
            hi = min(hi, flat[pos - 1])
        for v in range(hi + 1):
            flat[pos] = v
            yield from rec(pos + 1)

    for heights in rec(0):
        # bypass __post_init__ validation: monotone by construction
        pp = object.__new__(PlanePartition)
        object.__setattr__(pp, "box", box)
        object.__setattr__(pp, "heights", heights)
        yield pp


# --- symmetry-pruned search -------------------------------------------------

CellMap = Callable[[Cell], Cell]


def _orbits(cells: list[Cell], generators: list[CellMap]) -> dict[Cell, int]:
    orbit_of: dict[Cell, int] = {}
    count = 0
    for cell in cells:
        if cell in orbit_of:
            continue
        stack = [cell]
        orbit_of[cell] = count
        while stack:
            x = stack.pop()
            for g in generators:
                y = g(x)
                if y not in orbit_of:
                    orbit_of[y] = count
                    stack.append(y)
        count += 1
    return orbit_of


def count_symmetric_self_complementary(side: int, generators: list[CellMap]) -> int:
    """Count plane partitions in the cube of the given side that are fixed by
    every generator and by complementation.

    The unknowns are the orbits of the group generated by ``generators``;
    complementation pairs them up, so exactly one orbit of each pair is
    chosen. A choice is propagated through the order-ideal implications
    (a chosen cell forces the cells below it, a rejected one rejects the
    cells above it) before branching further.
    """
    m = side
    cells = list(itertools.product(range(m), repeat=3))
    orbit_of = _orbits(cells, generators)
    n_orb = max(orbit_of.values()) + 1

    def comp(x: Cell) -> Cell:
        return (m - 1 - x[0], m - 1 - x[1], m - 1 - x[2])

    partner = [0] * n_orb
    below: list[set[int]] = [set() for _ in range(n_orb)]
    above: list[set[int]] = [set() for _ in range(n_orb)]
    for x in cells:
        o = orbit_of[x]
        partner[o] = orbit_of[comp(x)]
        for d in range(3):
            if x[d] > 0:
                y = list(x)
                y[d] -= 1
                p = orbit_of[tuple(y)]
                if p != o:
                    below[o].add(p)
                    above[p].add(o)
    if any(partner[o] == o for o in range(n_orb)):
        return 0

    state = [None] * n_orb  # True: orbit inside the partition

    def assign(o: int, val: bool, trail: list[int]) -> bool:
        stack = [(o, val)]
        while stack:
            o, val = stack.pop()
            if state[o] is not None:
                if state[o] != val:
                    return False
                continue
            state[o] = val
            trail.append(o)
            stack.append((partner[o], not val))
            for p in (below[o] if val else above[o]):
                stack.append((p, val))
        return True

    # branch in order of increasing coordinate sum so propagation bites early
    order = sorted(range(n_orb), key=lambda o: min(sum(x) for x in cells if orbit_of[x] == o))

    def search(idx: int) -> int:
        while idx < n_orb and state[order[idx]] is not None:
            idx += 1
        if idx == n_orb:
            return 1
        o = order[idx]
        total = 0
        for val in (True, False):
            trail: list[int] = []
            if assign(o, val, trail):
                total += search(idx + 1)
            for t in trail:
                state[t] = None
        return total

    return search(0)


def _r_map(x: Cell) -> Cell:
    return (x[2], x[0], x[1])


def _t_map(x: Cell) -> Cell:
    return (x[1], x[0], x[2])


PRUNED_MAX_N = 3
FILTER_MAX_N = 2


def _check_n(n: int, method: str) -> None:
    if not isinstance(n, int) or n < 1:
        raise ValueError(f"n must be a positive integer, got {n!r}")
    limit = PRUNED_MAX_N if method == "pruned" else FILTER_MAX_N
    if method not in ("pruned", "filter"):
        raise ValueError(f"unknown method {method!r}")
    if n > limit:
        raise EnumerationTooLarge(f"{method} search is limited to n <= {limit}, got n={n}")


def count_cssc_bruteforce(n: int, method: str = "pruned") -> int:
    """CSSC(2n) by exhaustive search.

    ``method="filter"`` tests every plane partition of B(2n, 2n, 2n);
    ``method="pruned"`` searches only over orbits of the cyclic rotation.
    """
    _check_n(n, method)
    if method == "filter":
        return sum(1 for pp in enumerate_box(Box(2 * n, 2 * n, 2 * n)) if is_cssc(pp))
    return count_symmetric_self_complementary(2 * n, [_r_map])


def count_tssc_bruteforce(n: int, method: str = "pruned") -> int:
    _check_n(n, method)
    if method == "filter":
        return sum(1 for pp in enumerate_box(Box(2 * n, 2 * n, 2 * n)) if is_tssc(pp))
    return count_symmetric_self_complementary(2 * n, [_r_map, _t_map])


def count_class_in_cube(side: int, cls: str) -> int:
    """CSSC/TSSC count for a cube of any side (odd sides give 0)."""
    gens = {"cssc": [_r_map], "tssc": [_r_map, _t_map]}[cls]
    return count_symmetric_self_complementary(side, gens)

