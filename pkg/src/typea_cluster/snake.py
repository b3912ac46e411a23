"""Snake graphs obtained by unfolding a triangulation, and their matchings.

Tile k is the quadrilateral formed by the two triangles Δ_{k-1}, Δ_k that
contain diagonal k.  Its vertices start out as ``(k, corner)`` pairs; tile k
is glued to tile k-1 along the third side of Δ_{k-1}, which fuses the two
pairs naming the same polygon corners of that side.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import NamedTuple

from .errors import VerificationFailed
from .geometry import Angle, Triangulation
from .laurent import LaurentPoly, product_of_vars


class EdgeKind(str, Enum):
    BOUNDARY_EDGE = "boundary"
    TILE_DIAGONAL = "diagonal"


class Edge(NamedTuple):
    id: int
    u: int
    v: int
    label: int
    kind: EdgeKind


@dataclass(frozen=True)
class Tile:
    diagonal: int
    boundary_edges: tuple[int, ...]
    diagonal_edge: int
    vertex_of_corner: dict = field(hash=False)


@dataclass(frozen=True)
class SnakeGraph:
    vertices: tuple[int, ...]
    edges: tuple[Edge, ...]
    tiles: tuple[Tile, ...]
    shared: tuple[int, ...]  # edge shared by tiles t and t+1, per t

    def boundary_edges(self) -> list[Edge]:
        return [e for e in self.edges if e.kind is EdgeKind.BOUNDARY_EDGE]

    def diagonal_edges(self) -> list[Edge]:
        return [e for e in self.edges if e.kind is EdgeKind.TILE_DIAGONAL]

    def edge(self, eid: int) -> Edge:
        return self.edges[eid]

    def shapes(self) -> dict[int, str]:
        """Straight/zigzag for each interior tile (keyed by its diagonal)."""
        out = {}
        for t in range(1, len(self.tiles) - 1):
            a, b = self.edge(self.shared[t - 1]), self.edge(self.shared[t])
            touch = {a.u, a.v} & {b.u, b.v}
            out[self.tiles[t].diagonal] = "zigzag" if touch else "straight"
        return out


class _UnionFind:
    def __init__(self):
        self.parent = {}

    def find(self, x):
        self.parent.setdefault(x, x)
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            # keep the earlier tile's name as representative
            lo, hi = sorted((ra, rb))
            self.parent[hi] = lo


def _tile_corners(T: Triangulation, k: int) -> list[int]:
    return sorted(set(T.triangles[k - 1]) | set(T.triangles[k]))


def _third_side(T: Triangulation, k: int) -> tuple[int, int]:
    """Corners of the side of Δ_k that is neither diagonal k nor k+1."""
    a, b, c = T.triangles[k]
    for x, y in ((a, b), (b, c), (a, c)):
        if T.label(x, y) not in (k, k + 1):
            return x, y
    raise AssertionError("triangle has no third side")


def build_snake_graph(T: Triangulation, i: int | None = None,
                      j: int | None = None) -> SnakeGraph:
    i = T.lo if i is None else i
    j = T.hi if j is None else j
    if not (T.lo <= i <= j <= T.hi):
        raise ValueError(f"interval [{i},{j}] outside [{T.lo},{T.hi}]")
    uf = _UnionFind()
    for k in range(i, j + 1):
        for c in _tile_corners(T, k):
            uf.find((k, c))
        if k > i:
            for c in _third_side(T, k - 1):
                uf.union((k - 1, c), (k, c))

    vid: dict = {}
    for k in range(i, j + 1):
        for c in _tile_corners(T, k):
            vid.setdefault(uf.find((k, c)), len(vid))

    def V(k, c):
        return vid[uf.find((k, c))]

    edges: list[Edge] = []
    by_ends: dict[frozenset, int] = {}
    tiles = []
    shared = []
    for k in range(i, j + 1):
        p, q = T.arcs[k]
        corners = _tile_corners(T, k)
        bd = []
        for x, y in ((corners[0], corners[1]), (corners[1], corners[2]),
                     (corners[2], corners[3]), (corners[0], corners[3])):
            ends = frozenset((V(k, x), V(k, y)))
            if ends not in by_ends:
                by_ends[ends] = len(edges)
                edges.append(Edge(len(edges), V(k, x), V(k, y), T.label(x, y),
                                  EdgeKind.BOUNDARY_EDGE))
            bd.append(by_ends[ends])
        diag = len(edges)
        edges.append(Edge(diag, V(k, p), V(k, q), k, EdgeKind.TILE_DIAGONAL))
        if k > i:
            x, y = _third_side(T, k - 1)
            shared.append(by_ends[frozenset((V(k, x), V(k, y)))])
        tiles.append(Tile(k, tuple(bd), diag, {c: V(k, c) for c in corners}))
    return SnakeGraph(tuple(range(len(vid))), tuple(edges), tuple(tiles), tuple(shared))


def enumerate_edge_matchings(G: SnakeGraph) -> list[frozenset[int]]:
    """Perfect matchings of the boundary-edge graph, as sets of edge ids."""
    incident: dict[int, list[Edge]] = {v: [] for v in G.vertices}
    for e in G.boundary_edges():
        incident[e.u].append(e)
        incident[e.v].append(e)
    order = sorted(G.vertices)
    covered: set[int] = set()
    chosen: list[int] = []
    out = []

    def walk() -> None:
        v = next((x for x in order if x not in covered), None)
        if v is None:
            out.append(frozenset(chosen))
            return
        for e in incident[v]:
            w = e.v if e.u == v else e.u
            if w in covered:
                continue
            covered.update((v, w))
            chosen.append(e.id)
            walk()
            chosen.pop()
            covered.difference_update((v, w))

    walk()
    return sorted(out, key=sorted)


def ms_formula(T: Triangulation, i: int, j: int, nvars: int | None = None) -> LaurentPoly:
    G = build_snake_graph(T, i, j)
    m = nvars or max(T.arcs)
    total = LaurentPoly.zero(m)
    for P in enumerate_edge_matchings(G):
        total = total + product_of_vars((G.edge(e).label for e in P), m)
    return total


def build_phi(T: Triangulation, G: SnakeGraph | None = None) -> dict[Angle, int]:
    """Angle -> edge id of G, tile by tile from the left.

    Inside tile k, an angle of Δ_{k-1} or Δ_k at an end of diagonal k goes to
    the tile side opposite that corner.  An angle seen in two tiles must land
    on the same (glued) edge.
    """
    if G is None:
        G = build_snake_graph(T)
    phi: dict[Angle, int] = {}
    by_ends = {frozenset((e.u, e.v)): e.id for e in G.boundary_edges()}
    for tile in G.tiles:
        k = tile.diagonal
        for t in (k - 1, k):
            tri = T.triangles[t]
            for corner in T.arcs[k]:
                x, y = (c for c in tri if c != corner)
                eid = by_ends[frozenset((tile.vertex_of_corner[x], tile.vertex_of_corner[y]))]
                angle = (t, T.vertex_index[corner])
                if phi.setdefault(angle, eid) != eid:
                    raise VerificationFailed(f"angle {angle} maps to two edges")
    if set(phi) != set(T.angles) or len(set(phi.values())) != len(G.boundary_edges()):
        raise VerificationFailed("φ is not a bijection from angles onto edges")
    return dict(sorted(phi.items()))
