"""Lozenge tilings of hexagons as perfect matchings of dual graphs, and the
60-degree rotation quotient of the regular hexagon of side 2n.

Coordinates: a lattice point is (x, y) meaning x*e1 + y*e2 with e1 = (1, 0)
and e2 = (1/2, sqrt(3)/2). The up-triangle (x, y) has corners (x, y),
(x+1, y), (x, y+1); the down-triangle (x, y) has corners (x+1, y),
(x, y+1), (x+1, y+1). Three times the centroid of a cell is the integer
point (3x+1, 3y+1) or (3x+2, 3y+2); linear lattice maps act on that key
exactly, which is how rotations and reflections are applied to cells.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Hashable, Iterable, Iterator, NamedTuple, Sequence

from .exactnum import HALF, as_rational, format_rational

MATCHING_VERTEX_GUARD = 60
ORBIT_MAX_N = 3


class GraphTooLarge(ValueError):
    pass


class AxisNotFound(RuntimeError):
    pass


class TriCell(NamedTuple):
    x: int
    y: int
    down: bool = False

    def key(self) -> tuple[int, int]:
        o = 2 if self.down else 1
        return (3 * self.x + o, 3 * self.y + o)

    @classmethod
    def from_key(cls, X: int, Y: int) -> "TriCell":
        r = X % 3
        if r == 0 or Y % 3 != r:
            raise ValueError(f"{(X, Y)} is not the scaled centroid of a unit triangle")
        return cls((X - r) // 3, (Y - r) // 3, r == 2)

    def neighbours(self) -> tuple["TriCell", "TriCell", "TriCell"]:
        x, y = self.x, self.y
        if self.down:
            return (TriCell(x, y, False), TriCell(x + 1, y, False), TriCell(x, y + 1, False))
        return (TriCell(x, y, True), TriCell(x - 1, y, True), TriCell(x, y - 1, True))


def _linear(cell: TriCell, m: tuple[int, int, int, int]) -> TriCell:
    X, Y = cell.key()
    return TriCell.from_key(m[0] * X + m[1] * Y, m[2] * X + m[3] * Y)


# 60 degrees counterclockwise about the origin: e1 -> e2, e2 -> e2 - e1
_ROT60 = (0, -1, 1, 1)
# reflection in the line through the origin along e1 + e2
_SWAP = (0, 1, 1, 0)


Region = frozenset  # frozenset[TriCell]


def hexagon(a: int, b: int, c: int) -> Region:
    """Unit triangles inside the hexagon with sides a, b, c, a, b, c.

    The boundary walks a*e1, b*e2, c*(e2-e1), then back. When a == b == c
    the hexagon is centred on the origin, so rotating by 60 degrees about
    the origin permutes its cells.
    """
    if min(a, b, c) < 1:
        raise ValueError(f"hexagon sides must be >= 1, got {(a, b, c)}")
    shift = a if a == b == c else 0
    cells = set()
    for x in range(-c, a):
        for y in range(0, b + c):
            for down in (False, True):
                cell = TriCell(x, y, down)
                X, Y = cell.key()
                if -3 * c < X < 3 * a and 0 < Y < 3 * (b + c) and 0 < X + Y < 3 * (a + b):
                    cells.add(TriCell(x, y - shift, down))
    return frozenset(cells)


@dataclass
class DualGraph:
    """Undirected multigraph with exact edge weights.

    ``edges`` holds (u, v, weight) triples; parallel edges are allowed and
    kept distinct, since they are distinct choices in a matching.
    """

    vertices: list
    edges: list[tuple[Hashable, Hashable, Fraction]]
    meta: dict = field(default_factory=dict)

    def __post_init__(self):
        vset = set(self.vertices)
        if len(vset) != len(self.vertices):
            raise ValueError("duplicate vertices")
        for u, v, _ in self.edges:
            if u == v:
                raise ValueError(f"loop at {u!r}; loops must be removed before construction")
            if u not in vset or v not in vset:
                raise ValueError(f"edge {(u, v)} has an endpoint outside the graph")
        self.edges = [(u, v, as_rational(w)) for u, v, w in self.edges]

    def __len__(self) -> int:
        return len(self.vertices)

    def neighbours(self, v) -> list:
        return [b if a == v else a for a, b, _ in self.edges if v in (a, b)]

    def degree(self, v) -> int:
        return sum((a == v) + (b == v) for a, b, _ in self.edges)

    def is_bipartite(self) -> bool:
        colour: dict = {}
        adj: dict = {v: [] for v in self.vertices}
        for a, b, _ in self.edges:
            adj[a].append(b)
            adj[b].append(a)
        for s in self.vertices:
            if s in colour:
                continue
            colour[s] = 0
            stack = [s]
            while stack:
                v = stack.pop()
                for u in adj[v]:
                    if u not in colour:
                        colour[u] = 1 - colour[v]
                        stack.append(u)
                    elif colour[u] == colour[v]:
                        return False
        return True

    def without_edges(self, indices: Iterable[int]) -> "DualGraph":
        drop = set(indices)
        kept = [e for i, e in enumerate(self.edges) if i not in drop]
        return DualGraph(list(self.vertices), kept, dict(self.meta))

    def dump(self) -> str:
        """One "u v p/q" line per edge, vertices given by their index."""
        index = {v: i for i, v in enumerate(self.vertices)}
        return "\n".join(f"{index[u]} {index[v]} {format_rational(w)}" for u, v, w in self.edges)


def dual_graph(region: Iterable[TriCell]) -> DualGraph:
    cells = sorted(region)
    cellset = set(cells)
    edges = []
    for cell in cells:
        if cell.down:
            continue
        for nb in cell.neighbours():
            if nb in cellset:
                edges.append((cell, nb, Fraction(1)))
    return DualGraph(cells, edges)


# --- perfect matchings ------------------------------------------------------


def _indexed(g: DualGraph):
    index = {v: i for i, v in enumerate(g.vertices)}
    adj: list[list[tuple[int, Fraction, int]]] = [[] for _ in g.vertices]
    for k, (a, b, w) in enumerate(g.edges):
        i, j = index[a], index[b]
        adj[i].append((j, w, k))
        adj[j].append((i, w, k))
    return adj


def _guard(g: DualGraph, limit: int | None) -> None:
    if limit is not None and len(g) > limit:
        raise GraphTooLarge(f"graph has {len(g)} vertices, guard is {limit}")


def matching_gf(g: DualGraph, guard: int | None = MATCHING_VERTEX_GUARD) -> Fraction:
    """Sum over perfect matchings of the product of edge weights.

    Branches on a remaining vertex of least remaining degree and memoises
    on the set of unmatched vertices.
    """
    _guard(g, guard)
    if len(g) % 2:
        return Fraction(0)
    adj = _indexed(g)
    memo: dict[int, Fraction] = {}

    def rec(mask: int) -> Fraction:
        if mask == 0:
            return Fraction(1)
        hit = memo.get(mask)
        if hit is not None:
            return hit
        best, best_deg = -1, None
        m = mask
        while m:
            low = m & -m
            v = low.bit_length() - 1
            m ^= low
            d = sum(1 for u, _, _ in adj[v] if mask >> u & 1)
            if best_deg is None or d < best_deg:
                best, best_deg = v, d
                if d <= 1:
                    break
        total = Fraction(0)
        rest = mask & ~(1 << best)
        for u, w, _ in adj[best]:
            if rest >> u & 1:
                sub = rec(rest & ~(1 << u))
                if sub:
                    total += w * sub
        memo[mask] = total
        return total

    return rec((1 << len(g)) - 1)


def perfect_matchings(g: DualGraph, guard: int | None = MATCHING_VERTEX_GUARD) -> Iterator[tuple[int, ...]]:
    """Yield each perfect matching as a sorted tuple of edge indices."""
    _guard(g, guard)
    if len(g) % 2:
        return
    adj = _indexed(g)
    chosen: list[int] = []

    def rec(mask: int):
        if mask == 0:
            yield tuple(sorted(chosen))
            return
        v = (mask & -mask).bit_length() - 1
        rest = mask & ~(1 << v)
        for u, _, k in adj[v]:
            if rest >> u & 1:
                chosen.append(k)
                yield from rec(rest & ~(1 << u))
                chosen.pop()

    yield from rec((1 << len(g)) - 1)


def matching_weight(g: DualGraph, matching: Sequence[int]) -> Fraction:
    w = Fraction(1)
    for k in matching:
        w *= g.edges[k][2]
    return w


def count_tilings(a: int, b: int, c: int) -> int:
    value = matching_gf(dual_graph(hexagon(a, b, c)))
    if value.denominator != 1:
        raise ArithmeticError(f"unit-weight matching count is not an integer: {value}")
    return value.numerator


# --- the 60-degree quotient -------------------------------------------------


def _check_n(n: int, limit: int | None = ORBIT_MAX_N) -> None:
    if not isinstance(n, int) or n < 1:
        raise ValueError(f"n must be a positive integer, got {n!r}")
    if limit is not None and n > limit:
        raise GraphTooLarge(f"orbit-graph constructions are limited to n <= {limit}, got n={n}")


@lru_cache(maxsize=None)
def regular_hexagon(n: int) -> Region:
    """The hexagon of side 2n, centred on the origin."""
    return hexagon(2 * n, 2 * n, 2 * n)


def rotation60(cell: TriCell, n: int | None = None) -> TriCell:
    """Rotate a cell 60 degrees counterclockwise about the centre of H(2n,2n,2n)."""
    if n is not None and cell not in regular_hexagon(n):
        raise ValueError(f"{cell} is not a cell of the hexagon of side {2 * n}")
    return _linear(cell, _ROT60)


def reflect(cell: TriCell) -> TriCell:
    """Reflection of the centred hexagon in the bisector of its first sector."""
    return _linear(cell, _SWAP)


def in_first_sector(cell: TriCell) -> bool:
    """True for cells of the triangle with corners 0, 2n*e1, 2n*e2.

    That triangle meets every rotation orbit exactly once.
    """
    return cell.x >= 0 and cell.y >= 0


def rotation_orbit(cell: TriCell) -> tuple[TriCell, ...]:
    out = [cell]
    for _ in range(5):
        out.append(rotation60(out[-1]))
    if rotation60(out[-1]) != cell:
        raise AssertionError("sixth power of the rotation is not the identity")
    return tuple(out)


def _representative(cell: TriCell) -> TriCell:
    reps = [c for c in rotation_orbit(cell) if in_first_sector(c)]
    if len(reps) != 1:
        raise AssertionError(f"orbit of {cell} meets the first sector {len(reps)} times")
    return reps[0]


def _edge_orbit_key(u: TriCell, v: TriCell) -> tuple[TriCell, TriCell]:
    return min(tuple(sorted(pair)) for pair in zip(rotation_orbit(u), rotation_orbit(v)))


@lru_cache(maxsize=None)
def orbit_graph(n: int) -> DualGraph:
    """Quotient of the dual graph of H(2n,2n,2n) by the 60-degree rotation.

    Vertices are orbit representatives taken from the first sector. Every
    orbit of adjacencies becomes one edge, so parallel edges may occur; the
    canonical hexagon adjacency behind each edge is kept in
    ``meta["edge_orbits"]``. The one adjacency orbit joining the central
    orbit to itself would be a loop. It lies in no perfect matching and is
    dropped, counted in ``meta["loops_removed"]``.
    """
    _check_n(n)
    g = dual_graph(regular_hexagon(n))
    rep = {c: _representative(c) for c in g.vertices}
    found: dict[tuple, tuple] = {}
    loops = 0
    for u, v, _ in g.edges:
        key = _edge_orbit_key(u, v)
        if key in found:
            continue
        ru, rv = sorted((rep[u], rep[v]))
        if ru == rv:
            loops += 1
            found[key] = ()
            continue
        found[key] = (ru, rv)
    items = sorted((ends, key) for key, ends in found.items() if ends)
    edges = [(ru, rv, Fraction(1)) for (ru, rv), _ in items]
    meta = {"n": n, "loops_removed": loops, "edge_orbits": [key for _, key in items]}
    return DualGraph(sorted(set(rep.values())), edges, meta)


def count_cssc_via_orbit(n: int) -> int:
    """Rotation-invariant tilings of H(2n,2n,2n), i.e. matchings of the orbit graph."""
    value = matching_gf(orbit_graph(n))
    if value.denominator != 1:
        raise ArithmeticError(f"orbit-graph matching count is not an integer: {value}")
    return value.numerator


def induced_involution(n: int, reflection=reflect) -> tuple[dict, list[int]]:
    """Vertex map and edge permutation that a hexagon reflection induces on
    the orbit graph.

    Any reflection of the hexagon conjugates the rotation to its inverse and
    so permutes rotation orbits. Raises AxisNotFound if the induced map is
    not an automorphism.
    """
    g = orbit_graph(n)
    vmap = {v: _representative(reflection(v)) for v in g.vertices}
    if sorted(vmap.values()) != g.vertices:
        raise AxisNotFound("reflection does not permute the orbits")
    index = {key: k for k, key in enumerate(g.meta["edge_orbits"])}
    perm = []
    for k, (a, b) in enumerate(g.meta["edge_orbits"]):
        image = index.get(_edge_orbit_key(reflection(a), reflection(b)))
        if image is None:
            raise AxisNotFound(f"edge {k} has no image under the reflection")
        u, v, _ = g.edges[k]
        x, y, _ = g.edges[image]
        if {vmap[u], vmap[v]} != {x, y}:
            raise AxisNotFound(f"reflection image of edge {k} has the wrong endpoints")
        perm.append(image)
    return vmap, perm


def hexagon_reflections():
    """The six reflections of the centred hexagon, as cell maps."""
    def make(k):
        def f(cell):
            cell = reflect(cell)
            for _ in range(k):
                cell = rotation60(cell)
            return cell
        return f
    return [make(k) for k in range(6)]


@dataclass(frozen=True)
class Axis:
    """A validated symmetry axis of the orbit graph and the cut along it.

    ``deleted`` are the edge indices removed on the chosen side of each
    axis vertex; ``halved`` are the edges lying along the axis.
    """

    n: int
    vertices: tuple
    halved: tuple[int, ...]
    deleted: tuple[int, ...]
    pattern: tuple[str, ...]


def _side(v: TriCell) -> str:
    # first-sector cells with x > y lie clockwise of the bisector
    return "below" if v.x > v.y else "above"


def _axis_candidates(n: int):
    g = orbit_graph(n)
    maps = []
    for refl in hexagon_reflections():
        vmap, perm = induced_involution(n, refl)
        if (vmap, perm) not in maps:
            maps.append((vmap, perm))
    for vmap, perm in maps:
        if any(vmap[vmap[v]] != v for v in g.vertices):
            continue
        fixed = tuple(v for v in g.vertices if vmap[v] == v)
        if len(fixed) != 2 * n:
            continue
        fixed_set = set(fixed)
        halved = tuple(
            k for k, (u, v, _) in enumerate(g.edges)
            if perm[k] == k and u in fixed_set and v in fixed_set
        )
        if len(halved) != n:
            continue
        # axis vertices with edges leaving the axis on both sides
        cut_sites = []
        for v in fixed:
            sides: dict[str, list[int]] = {"below": [], "above": []}
            for k, (a, b, _) in enumerate(g.edges):
                if v in (a, b):
                    other = b if a == v else a
                    if other not in fixed_set:
                        sides[_side(other)].append(k)
            if sides["below"] or sides["above"]:
                if len(sides["below"]) != len(sides["above"]):
                    break
                cut_sites.append(sides)
        else:
            if len(cut_sites) != 2 * n - 1:
                continue
            # uniform cuts first: every edge immediately below, then above
            choices = [("below",) * len(cut_sites), ("above",) * len(cut_sites)]
            for pat in itertools.product(("below", "above"), repeat=len(cut_sites)):
                if pat not in choices:
                    choices.append(pat)
            for pat in choices:
                deleted = tuple(sorted(k for site, s in zip(cut_sites, pat) for k in site[s]))
                yield Axis(n, fixed, halved, deleted, pat)


def weighted_cut(n: int, axis: Axis) -> DualGraph:
    g = orbit_graph(n)
    halved = set(axis.halved)
    drop = set(axis.deleted)
    edges = [
        (u, v, w * HALF if k in halved else w)
        for k, (u, v, w) in enumerate(g.edges)
        if k not in drop
    ]
    meta = {"n": n, "axis_vertices": axis.vertices, "pattern": axis.pattern}
    return DualGraph(list(g.vertices), edges, meta)


@lru_cache(maxsize=None)
def find_axis(n: int) -> Axis:
    """First candidate axis cut for which 2^n * M(K) equals M(orbit graph)."""
    _check_n(n)
    target = matching_gf(orbit_graph(n))
    for axis in _axis_candidates(n):
        if len(axis.deleted) == 2 * n - 1 and 2**n * matching_gf(weighted_cut(n, axis)) == target:
            return axis
    raise AxisNotFound(f"no candidate axis validates the factorization for n={n}")


def build_K(n: int) -> DualGraph:
    """The orbit graph with the 2n-1 edges just below the axis removed and
    the n edges along the axis given weight 1/2."""
    return weighted_cut(n, find_axis(n))


def factorization_check(n: int) -> bool:
    return 2**n * matching_gf(build_K(n)) == matching_gf(orbit_graph(n))
