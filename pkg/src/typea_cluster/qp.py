"""The quiver with potential of a triangulated polygon, its cuts and minimal cuts.

Q̃ extends the ice quiver Q̄ by two kinds of boundary-to-boundary arrows:
internal ones (I) following the clockwise order inside a triangle, and
external ones (E) closing the fan of arrows around each polygon corner that
touches a diagonal.  Arrow ids of Q̄ are kept, so a minimal cut can be
compared with a discrete subset directly.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import NamedTuple, Optional

from . import kernels
from .errors import SizeLimit, VerificationFailed
from .geometry import Triangulation, subpolygon
from .laurent import LaurentPoly, product_of_vars
from .quiver import quiver_of_triangulation

Cut = frozenset  # of arrow ids

CUT_SEARCH_LIMIT = 200  # arrows; the exact-cover search itself is cheap


class ArrowClass(str, Enum):
    ICE = "ice"
    INTERNAL = "internal"
    EXTERNAL = "external"


class QPArrow(NamedTuple):
    source: int
    target: int
    id: int
    kind: ArrowClass
    weight: Optional[int]  # third side of the triangle; None for external arrows


class Cycle(NamedTuple):
    arrows: tuple[int, ...]
    sign: int  # +1 triangle cycle, -1 big cycle
    where: int  # triangle index, or the polygon corner a big cycle winds around


@dataclass(frozen=True)
class QuiverWithPotential:
    vertices: tuple[int, ...]
    frozen: frozenset[int]
    arrows: tuple[QPArrow, ...]
    potential: tuple[Cycle, ...]
    n: int

    def arrow(self, aid: int) -> QPArrow:
        return self.arrows[aid]

    def of_kind(self, kind: ArrowClass) -> list[QPArrow]:
        return [a for a in self.arrows if a.kind is kind]

    @property
    def triangle_cycles(self) -> list[Cycle]:
        return [c for c in self.potential if c.sign > 0]

    @property
    def big_cycles(self) -> list[Cycle]:
        return [c for c in self.potential if c.sign < 0]

    def is_cut(self, subset) -> bool:
        s = set(subset)
        return all(len(s.intersection(c.arrows)) == 1 for c in self.potential)


def build_qp(T: Triangulation) -> QuiverWithPotential:
    Qbar = quiver_of_triangulation(T)
    arrows: list[QPArrow] = []
    third_of = {}
    for i in T.triangles:
        s = T.sides(i)
        for a, b, c in ((s[0], s[1], s[2]), (s[1], s[2], s[0]), (s[2], s[0], s[1])):
            third_of[(a, b)] = (i, c)
    for a in Qbar.arrows:
        arrows.append(QPArrow(a.source, a.target, a.id, ArrowClass.ICE,
                              third_of[(a.source, a.target)][1]))
    by_pair = {(a.source, a.target): a.id for a in arrows}
    for (a, b), (i, c) in sorted(third_of.items(), key=lambda kv: (kv[1][0], kv[0])):
        if (a, b) not in by_pair:
            by_pair[(a, b)] = len(arrows)
            arrows.append(QPArrow(a, b, len(arrows), ArrowClass.INTERNAL, c))

    potential: list[Cycle] = []
    for i in sorted(T.triangles):
        s = T.sides(i)
        potential.append(Cycle(tuple(by_pair[p] for p in ((s[0], s[1]), (s[1], s[2]), (s[2], s[0]))),
                               +1, i))

    # one external arrow per corner that touches a diagonal
    cycle = T.boundary_cycle()
    size = len(cycle)
    for t, (c, nxt, after) in enumerate(cycle):
        _, _, before = cycle[(t - 1) % size]
        if len(T.triangles_at(c)) < 2:
            continue  # an ear: both boundary sides lie in one triangle
        eid = len(arrows)
        arrows.append(QPArrow(after, before, eid, ArrowClass.EXTERNAL, None))
        step = {}
        for i in T.triangles_at(c):
            x, y = (T.label(c, o) for o in T.triangles[i] if o != c)
            src, tgt = (x, y) if (x, y) in by_pair else (y, x)
            step[src] = by_pair[(src, tgt)]
        path = [eid]
        v = before
        while v != after:
            aid = step[v]
            path.append(aid)
            v = arrows[aid].target
        potential.append(Cycle(tuple(path), -1, c))

    return QuiverWithPotential(tuple(sorted(T.arcs)), frozenset(T.boundary),
                               tuple(arrows), tuple(potential), T.n)


# --------------------------------------------------------------------------
# cuts
# --------------------------------------------------------------------------

def _exact_cover(X: dict, Y: dict, partial: list):
    """Knuth's Algorithm X on a dict-of-sets column/row structure."""
    if not X:
        yield list(partial)
        return
    col = min(X, key=lambda c: len(X[c]))
    for row in list(X[col]):
        partial.append(row)
        removed = _select(X, Y, row)
        yield from _exact_cover(X, Y, partial)
        _deselect(X, Y, row, removed)
        partial.pop()


def _select(X, Y, row):
    removed = []
    for j in Y[row]:
        for other in X[j]:
            for k in Y[other]:
                if k != j:
                    X[k].remove(other)
        removed.append(X.pop(j))
    return removed


def _deselect(X, Y, row, removed):
    for j in reversed(Y[row]):
        X[j] = removed.pop()
        for other in X[j]:
            for k in Y[other]:
                if k != j:
                    X[k].add(other)


def enumerate_cuts(qp: QuiverWithPotential, limit: int = CUT_SEARCH_LIMIT) -> list[Cut]:
    """All cuts, found as exact covers of the potential's cycles by arrows.

    Arrows lying on no cycle are free: each cover extends by any subset of them.
    """
    if len(qp.arrows) > limit:
        raise SizeLimit(f"{len(qp.arrows)} arrows exceed the cut search bound {limit}")
    Y = {a.id: [k for k, c in enumerate(qp.potential) if a.id in c.arrows] for a in qp.arrows}
    free = [aid for aid, cols in Y.items() if not cols]
    Y = {aid: cols for aid, cols in Y.items() if cols}
    X = {k: set() for k in range(len(qp.potential))}
    for aid, cols in Y.items():
        for k in cols:
            X[k].add(aid)
    out = set()
    for cover in _exact_cover(X, Y, []):
        base = frozenset(cover)
        for mask in range(1 << len(free)):
            out.add(base | {free[b] for b in range(len(free)) if mask >> b & 1})
    return sorted(out, key=lambda c: (len(c), sorted(c)))


def brute_force_cuts(qp: QuiverWithPotential) -> list[Cut]:
    """Oracle: scan every arrow subset of Q̃."""
    nbits = len(qp.arrows)
    if nbits > kernels.MAX_SCAN_BITS:
        raise SizeLimit(f"{nbits} arrows exceed the scan bound {kernels.MAX_SCAN_BITS}")
    masks = [sum(1 << a for a in c.arrows) for c in qp.potential]
    found = kernels.exact_one_masks(masks, nbits)
    return sorted((frozenset(b for b in range(nbits) if s >> b & 1) for s in found),
                  key=lambda c: (len(c), sorted(c)))


def minimal_cuts(qp: QuiverWithPotential) -> list[Cut]:
    out = [c for c in enumerate_cuts(qp) if len(c) == qp.n + 1]
    for c in out:
        if any(qp.arrow(a).kind is not ArrowClass.ICE for a in c):
            raise VerificationFailed(f"minimal cut {sorted(c)} leaves Q̄")
    return out


def cut_weights(qp: QuiverWithPotential, cut) -> list[int]:
    return sorted(qp.arrow(a).weight for a in cut)


def cut_formula(T: Triangulation, i: int, j: int, nvars: int | None = None) -> LaurentPoly:
    qp = build_qp(subpolygon(T, i, j))
    m = nvars or max(T.arcs)
    total = LaurentPoly.zero(m)
    for C in minimal_cuts(qp):
        total = total + product_of_vars((qp.arrow(a).weight for a in C), m)
    return total
