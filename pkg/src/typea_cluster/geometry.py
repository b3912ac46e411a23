"""Triangulated polygons with the canonical triangle/vertex/angle labeling.

Corners of an ``(n+3)``-gon are integers increasing in clockwise order, so
sorting a set of corners lists them clockwise.  Arcs are identified by their
integer labels: diagonals ``1..n`` and boundary arcs ``n+1..2n+3``.  A
subpolygon keeps the corner ids and arc labels of its parent.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from enum import Enum
from functools import cached_property
from typing import Iterable, Iterator, Mapping, Sequence

from .errors import InvalidTriangulation

Pair = tuple[int, int]
Angle = tuple[int, int]  # (triangle index i, vertex index j)


class Orientation(str, Enum):
    FORWARD = "F"   # arrow k -> k+1
    BACKWARD = "B"  # arrow k+1 -> k


def parse_orientation(spec: str | Iterable) -> tuple[Orientation, ...]:
    """Accept ``"FFB"``, ``["F", "B"]`` or a sequence of :class:`Orientation`."""
    out = []
    for sym in spec:
        if isinstance(sym, Orientation):
            out.append(sym)
            continue
        s = str(sym).upper()
        if s in ("F", "FORWARD"):
            out.append(Orientation.FORWARD)
        elif s in ("B", "BACKWARD"):
            out.append(Orientation.BACKWARD)
        else:
            raise InvalidTriangulation(f"unknown orientation symbol {sym!r}", "SCHEMA")
    return tuple(out)


def all_orientations(n: int) -> Iterator[tuple[Orientation, ...]]:
    return itertools.product((Orientation.FORWARD, Orientation.BACKWARD), repeat=n - 1)


def _pair(a: int, b: int) -> Pair:
    return (a, b) if a < b else (b, a)


@dataclass(frozen=True)
class Triangulation:
    """A (sub)polygon triangulated by consecutively labeled diagonals.

    ``triangles`` maps the index ``i`` of Δ_i to its clockwise corner triple
    and ``marked`` maps ``j`` to the corner v_j.  For a subpolygon with
    diagonals ``[lo, hi]`` both index ranges are ``[lo-1, hi]``.
    """

    corners: tuple[int, ...]
    arcs: Mapping[int, Pair]
    diagonals: tuple[int, ...]
    triangles: Mapping[int, tuple[int, int, int]]
    marked: Mapping[int, int]

    @property
    def n(self) -> int:
        return len(self.diagonals)

    @property
    def polygon_size(self) -> int:
        return len(self.corners)

    @property
    def lo(self) -> int:
        return self.diagonals[0]

    @property
    def hi(self) -> int:
        return self.diagonals[-1]

    @cached_property
    def boundary(self) -> tuple[int, ...]:
        diag = set(self.diagonals)
        return tuple(sorted(lab for lab in self.arcs if lab not in diag))

    @cached_property
    def _label_of(self) -> dict[Pair, int]:
        return {pair: lab for lab, pair in self.arcs.items()}

    def label(self, a: int, b: int) -> int:
        return self._label_of[_pair(a, b)]

    def is_diagonal(self, label: int) -> bool:
        return self.lo <= label <= self.hi

    def sides(self, i: int) -> tuple[int, int, int]:
        """Side labels of Δ_i in clockwise order."""
        a, b, c = self.triangles[i]
        return (self.label(a, b), self.label(b, c), self.label(c, a))

    @cached_property
    def vertex_index(self) -> dict[int, int]:
        return {corner: j for j, corner in self.marked.items()}

    @cached_property
    def angles(self) -> frozenset[Angle]:
        out = set()
        for i, tri in self.triangles.items():
            for corner in tri:
                j = self.vertex_index.get(corner)
                if j is not None:
                    out.add((i, j))
        return frozenset(out)

    def sorted_angles(self) -> list[Angle]:
        return sorted(self.angles)

    def boundary_cycle(self) -> list[tuple[int, int, int]]:
        """Boundary arcs as ``(corner, next_corner, label)`` in clockwise order."""
        cs = self.corners
        return [(cs[t], cs[(t + 1) % len(cs)], self.label(cs[t], cs[(t + 1) % len(cs)]))
                for t in range(len(cs))]

    def triangles_at(self, corner: int) -> list[int]:
        return sorted(i for i, tri in self.triangles.items() if corner in tri)


# --------------------------------------------------------------------------
# construction
# --------------------------------------------------------------------------

def _crosses(p: Pair, q: Pair) -> bool:
    a, b = p
    c, d = q
    return (a < c < b < d) or (c < a < d < b)


def _find_triangles(corners: Sequence[int], pairs: set[Pair]) -> list[tuple[int, int, int]]:
    return [t for t in itertools.combinations(sorted(corners), 3)
            if _pair(t[0], t[1]) in pairs and _pair(t[1], t[2]) in pairs
            and _pair(t[0], t[2]) in pairs]


def _triangle_chain(corners, arcs, lo, hi) -> dict[int, tuple[int, int, int]]:
    label_of = {pair: lab for lab, pair in arcs.items()}
    tris = _find_triangles(corners, set(label_of))
    if len(tris) != hi - lo + 2:
        raise InvalidTriangulation("arcs do not triangulate the polygon", "NOT_MAXIMAL")

    def labels(t):
        a, b, c = t
        return {label_of[_pair(a, b)], label_of[_pair(b, c)], label_of[_pair(a, c)]}

    def diags(t):
        return {lab for lab in labels(t) if lo <= lab <= hi}

    for t in tris:
        d = sorted(diags(t))
        if len(d) == 3:
            raise InvalidTriangulation(f"internal triangle with diagonals {d}",
                                       "NON_ACYCLIC_QUIVER")
        if len(d) == 2 and d[1] - d[0] != 1:
            raise InvalidTriangulation(f"diagonals {d} share a triangle but are not "
                                       "consecutive", "NON_ACYCLIC_QUIVER")

    chain: dict[int, tuple[int, int, int]] = {}
    if hi > lo:
        for k in range(lo, hi):
            hits = [t for t in tris if {k, k + 1} <= diags(t)]
            if len(hits) != 1:
                raise InvalidTriangulation(f"diagonals {k} and {k + 1} do not share a "
                                           "triangle", "NON_ACYCLIC_QUIVER")
            chain[k] = hits[0]
        first = [t for t in tris if diags(t) == {lo}]
        last = [t for t in tris if diags(t) == {hi}]
        if len(first) != 1 or len(last) != 1:
            raise InvalidTriangulation("triangle chain is not a path", "NON_ACYCLIC_QUIVER")
        chain[lo - 1] = first[0]
        chain[hi] = last[0]
    else:
        # single diagonal: Δ_hi is the triangle holding the largest boundary label
        top = max(lab for lab in arcs if lab != lo)
        t_hi = [t for t in tris if top in labels(t)][0]
        chain[hi] = t_hi
        chain[lo - 1] = [t for t in tris if t != t_hi][0]
    if len(set(chain.values())) != len(chain):
        raise InvalidTriangulation("triangle chain is not a path", "NON_ACYCLIC_QUIVER")
    return chain


def _mark_vertices(arcs, triangles, lo, hi) -> dict[int, int]:
    ends = {k: set(arcs[k]) for k in range(lo, hi + 1)}
    marked: dict[int, int] = {}
    if hi > lo:
        (shared,) = ends[lo] & ends[lo + 1]
        (marked[lo - 1],) = ends[lo] - {shared}
        marked[lo] = shared
        for k in range(lo + 1, hi + 1):
            (marked[k],) = ends[k] - ends[k - 1]
    else:
        a, b, c = triangles[hi]
        label_of = {pair: lab for lab, pair in arcs.items()}
        others = [(label_of[p], p) for p in (_pair(a, b), _pair(b, c), _pair(a, c))
                  if label_of[p] != lo]
        _, top_pair = max(others)
        (marked[hi],) = ends[lo] & set(top_pair)
        (marked[lo - 1],) = ends[lo] - {marked[hi]}
    return marked


def label_canonically(corners: Sequence[int], arcs: Mapping[int, Pair],
                      diagonals: Sequence[int]) -> Triangulation:
    """Compute Δ_i, v_j and the angle set for a triangulation with labeled arcs.

    ``diagonals`` must be a run of consecutive labels; every other arc is a
    boundary arc.  Raises :class:`InvalidTriangulation` (NON_ACYCLIC_QUIVER)
    when the diagonals do not form the path 1-2-...-n through shared triangles.
    """
    diagonals = tuple(sorted(diagonals))
    lo, hi = diagonals[0], diagonals[-1]
    arcs = {lab: _pair(*p) for lab, p in arcs.items()}
    triangles = _triangle_chain(corners, arcs, lo, hi)
    marked = _mark_vertices(arcs, triangles, lo, hi)
    return Triangulation(
        corners=tuple(sorted(corners)),
        arcs=dict(sorted(arcs.items())),
        diagonals=diagonals,
        triangles=dict(sorted(triangles.items())),
        marked=dict(sorted(marked.items())),
    )


def triangulation_from_orientation(n: int, orientation) -> Triangulation:
    """Glue triangles along diagonals 1..n so that Q_T has the given arrows.

    The polygon grows as a cyclic list of corners; each new corner is
    inserted between the ends of the current open diagonal.  Boundary arcs are
    labeled n+1.. counterclockwise from the side of Δ_0 away from v_0.
    """
    if not isinstance(n, int) or n < 1:
        raise InvalidTriangulation("n must be a positive integer", "SCHEMA")
    orientation = parse_orientation(orientation)
    if len(orientation) != n - 1:
        raise InvalidTriangulation(f"orientation must have {n - 1} symbols, got "
                                   f"{len(orientation)}", "SCHEMA")
    apex, u, w = "A", "u", "w"
    cycle = [apex, u, w]
    diag_ends = {1: (u, w)}
    for k in range(1, n + 1):
        u, w = diag_ends[k]
        r = f"r{k}"
        cycle.insert(cycle.index(w), r)
        if k < n:
            # Δ_k = (u, r, w) clockwise; the side after diagonal k is (u, r)
            diag_ends[k + 1] = (u, r) if orientation[k - 1] is Orientation.FORWARD else (r, w)
    index = {name: t for t, name in enumerate(cycle)}
    size = n + 3
    arcs = {k: _pair(index[a], index[b]) for k, (a, b) in diag_ends.items()}

    if n >= 2:
        v0 = index["w"] if orientation[0] is Orientation.FORWARD else index["u"]
    else:
        v0 = index["w"]
    start = 0 if v0 == size - 1 else size - 1  # side (0,1) or (size-1,0) of Δ_0
    for t in range(size):
        c = (start - t) % size
        arcs[n + 1 + t] = _pair(c, (c + 1) % size)
    return label_canonically(range(size), arcs, range(1, n + 1))


def triangulation_from_json(doc: Mapping) -> Triangulation:
    """Parse either ``{"n", "orientation"}`` or explicit chords (see README)."""
    if not isinstance(doc, Mapping) or "n" not in doc:
        raise InvalidTriangulation("document must be an object with key 'n'", "SCHEMA")
    n = doc["n"]
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise InvalidTriangulation("'n' must be a positive integer", "SCHEMA")
    if "orientation" in doc:
        return triangulation_from_orientation(n, doc["orientation"])

    size = doc.get("corners", n + 3)
    if size != n + 3:
        raise InvalidTriangulation(f"'corners' must equal n+3 = {n + 3}", "SCHEMA")
    try:
        diag_items = [(int(d["label"]), tuple(int(e) for e in d["ends"]))
                      for d in doc["diagonals"]]
        bdry_items = [(int(d["label"]), tuple(int(e) for e in d["ends"]))
                      for d in doc["boundary"]]
    except (KeyError, TypeError, ValueError) as exc:
        raise InvalidTriangulation(f"malformed arc list: {exc}", "SCHEMA") from None

    for lab, ends in diag_items + bdry_items:
        if len(ends) != 2 or ends[0] == ends[1] or not all(0 <= e < size for e in ends):
            raise InvalidTriangulation(f"arc {lab} has invalid ends {list(ends)}", "SCHEMA")
    sides = {_pair(t, (t + 1) % size) for t in range(size)}
    chords = [_pair(*e) for _, e in diag_items]
    for ch in chords:
        if ch in sides:
            raise InvalidTriangulation(f"diagonal {list(ch)} joins adjacent corners", "SCHEMA")
    if len(set(chords)) != len(chords):
        raise InvalidTriangulation("repeated diagonal", "SCHEMA")
    for p, q in itertools.combinations(chords, 2):
        if _crosses(p, q):
            raise InvalidTriangulation(f"diagonals {list(p)} and {list(q)} cross",
                                       "CROSSING_DIAGONALS")
    if len(chords) < n:
        raise InvalidTriangulation(f"{len(chords)} diagonals given, a triangulation needs {n}",
                                   "NOT_MAXIMAL")
    if sorted(_pair(*e) for _, e in bdry_items) != sorted(sides):
        raise InvalidTriangulation("boundary must list every polygon side once", "SCHEMA")
    if sorted(lab for lab, _ in diag_items) != list(range(1, n + 1)):
        raise InvalidTriangulation(f"diagonal labels must be exactly 1..{n}", "BAD_LABELS")
    if sorted(lab for lab, _ in bdry_items) != list(range(n + 1, 2 * n + 4)):
        raise InvalidTriangulation(f"boundary labels must be exactly {n + 1}..{2 * n + 3}",
                                   "BAD_LABELS")
    arcs = {lab: _pair(*e) for lab, e in diag_items + bdry_items}
    return label_canonically(range(size), arcs, range(1, n + 1))


def triangulation_to_json(T: Triangulation) -> dict:
    diag = set(T.diagonals)
    return {
        "n": T.n,
        "corners": T.polygon_size,
        "diagonals": [{"label": lab, "ends": list(p)} for lab, p in T.arcs.items()
                      if lab in diag],
        "boundary": [{"label": lab, "ends": list(p)} for lab, p in T.arcs.items()
                     if lab not in diag],
    }


def subpolygon(T: Triangulation, i: int, j: int) -> Triangulation:
    """T^[i,j]: triangles Δ_{i-1}..Δ_j with diagonals [i, j]; labels kept."""
    if not (T.lo <= i <= j <= T.hi):
        raise ValueError(f"interval [{i},{j}] outside [{T.lo},{T.hi}]")
    triangles = {k: T.triangles[k] for k in range(i - 1, j + 1)}
    corners = sorted({c for tri in triangles.values() for c in tri})
    wanted = {_pair(a, b) for a, b, c in triangles.values()} \
        | {_pair(b, c) for a, b, c in triangles.values()} \
        | {_pair(a, c) for a, b, c in triangles.values()}
    arcs = {lab: p for lab, p in T.arcs.items() if p in wanted}
    return Triangulation(
        corners=tuple(corners),
        arcs=arcs,
        diagonals=tuple(range(i, j + 1)),
        triangles=triangles,
        marked=_mark_vertices(arcs, triangles, i, j),
    )


def opposite_arc(T: Triangulation, angle: Angle) -> int:
    if angle not in T.angles:
        raise ValueError(f"angle a_{angle} is not an angle of this triangulation")
    i, j = angle
    v = T.marked[j]
    a, b = (c for c in T.triangles[i] if c != v)
    return T.label(a, b)


def enumerate_triangulations(size: int) -> Iterator[frozenset[Pair]]:
    """All triangulations of a convex ``size``-gon as sets of chords.

    Independent of the labeled construction above: the triangle on the side
    (0, size-1) is chosen and both remaining regions are recursed into.
    """

    def rec(a: int, b: int) -> Iterator[frozenset[Pair]]:
        # triangulations of the polygon a, a+1, ..., b
        if b - a < 2:
            yield frozenset()
            return
        for c in range(a + 1, b):
            extra = {p for p in ((a, c), (c, b)) if p[1] - p[0] > 1}
            for left in rec(a, c):
                for right in rec(c, b):
                    yield left | right | extra

    return rec(0, size - 1)
