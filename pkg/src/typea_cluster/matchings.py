"""Perfect matchings of angles and maximal discrete subsets of ice quivers."""

from __future__ import annotations

from enum import Enum

import networkx as nx

from . import kernels
from .errors import SizeLimit, VerificationFailed
from .geometry import Angle, Triangulation, opposite_arc, subpolygon
from .laurent import LaurentPoly, product_of_vars
from .quiver import IceQuiver, arrow_info, quiver_of_triangulation, rho

AngleMatching = frozenset  # of Angle
DiscreteSubset = frozenset  # of arrow ids

BRUTE_FORCE_LIMIT = 22


class Method(str, Enum):
    CLIQUES = "cliques"
    BRUTE_FORCE = "brute_force"
    VIA_RHO = "via_rho"


def enumerate_angle_matchings(T: Triangulation) -> list[AngleMatching]:
    """Subsets of A(T) with one angle per triangle and one per marked vertex."""
    by_triangle: dict[int, list[int]] = {}
    for i, j in T.sorted_angles():
        by_triangle.setdefault(i, []).append(j)
    order = sorted(T.triangles)
    out: list[AngleMatching] = []
    chosen: list[Angle] = []
    used: set[int] = set()

    def walk(pos: int) -> None:
        if pos == len(order):
            if len(used) == len(T.marked):
                out.append(frozenset(chosen))
            return
        i = order[pos]
        for j in by_triangle.get(i, ()):
            if j in used:
                continue
            used.add(j)
            chosen.append((i, j))
            walk(pos + 1)
            chosen.pop()
            used.discard(j)

    walk(0)
    return sorted(out, key=sorted)


def _nvars(T: Triangulation) -> int:
    return max(T.arcs)


def angle_formula(T: Triangulation, i: int, j: int, nvars: int | None = None) -> LaurentPoly:
    sub = subpolygon(T, i, j)
    m = nvars or _nvars(T)
    total = LaurentPoly.zero(m)
    for A in enumerate_angle_matchings(sub):
        total = total + product_of_vars((opposite_arc(sub, a) for a in A), m)
    return total


# --------------------------------------------------------------------------
# discrete subsets
# --------------------------------------------------------------------------

def reachability(Q: IceQuiver) -> dict[int, set[int]]:
    """Vertices reachable by paths of length >= 0 inside the unfrozen subquiver."""
    inner = Q.mutable
    succ: dict[int, list[int]] = {v: [] for v in inner}
    for a in Q.full_subquiver(inner):
        succ[a.source].append(a.target)
    reach = {}
    for v in inner:
        seen = {v}
        stack = [v]
        while stack:
            u = stack.pop()
            for w in succ[u]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        reach[v] = seen
    return reach


def conflict_pairs(Q: IceQuiver) -> tuple[list[int], set[frozenset]]:
    """Arrow ids in order, plus unordered pairs {α, β} (α may equal β) such
    that some path runs from t(α) to s(β) or from t(β) to s(α)."""
    reach = reachability(Q)
    ids = [a.id for a in Q.arrows]
    bad = set()
    for a in Q.arrows:
        ra = reach.get(a.target)
        if ra is None:
            continue
        for b in Q.arrows:
            if b.source in ra:
                bad.add(frozenset((a.id, b.id)))
    return ids, bad


def is_discrete(Q: IceQuiver, subset) -> bool:
    reach = reachability(Q)
    arrows = [Q.arrow(x) for x in subset]
    return not any(b.source in reach.get(a.target, ()) for a in arrows for b in arrows)


def is_maximal_discrete(Q: IceQuiver, subset) -> bool:
    subset = set(subset)
    if not is_discrete(Q, subset):
        return False
    return all(not is_discrete(Q, subset | {a.id}) for a in Q.arrows if a.id not in subset)


def _via_cliques(Q: IceQuiver) -> list[DiscreteSubset]:
    ids, bad = conflict_pairs(Q)
    usable = [x for x in ids if frozenset((x,)) not in bad]
    if not usable:
        return [frozenset()]
    compat = nx.Graph()
    compat.add_nodes_from(usable)
    for p, x in enumerate(usable):
        for y in usable[p + 1:]:
            if frozenset((x, y)) not in bad:
                compat.add_edge(x, y)
    return [frozenset(c) for c in nx.find_cliques(compat)]


def _via_brute_force(Q: IceQuiver, limit: int) -> list[DiscreteSubset]:
    ids, bad = conflict_pairs(Q)
    if len(ids) > limit:
        raise SizeLimit(f"{len(ids)} arrows exceed the brute-force bound {limit}")
    pos = {x: p for p, x in enumerate(ids)}
    conflicts = [0] * len(ids)
    allowed = 0
    for pair in bad:
        xs = list(pair)
        x, y = (xs[0], xs[0]) if len(xs) == 1 else xs
        conflicts[pos[x]] |= 1 << pos[y]
        conflicts[pos[y]] |= 1 << pos[x]
    for p in range(len(ids)):
        if not conflicts[p] >> p & 1:
            allowed |= 1 << p
    masks = kernels.maximal_independent_masks(conflicts, allowed)
    return [frozenset(ids[p] for p in range(len(ids)) if s >> p & 1) for s in masks]


def enumerate_discrete_subsets(Q: IceQuiver, method: Method | str = Method.CLIQUES,
                               T: Triangulation | None = None,
                               limit: int = BRUTE_FORCE_LIMIT) -> list[DiscreteSubset]:
    """All maximal discrete subsets of ``Q``, sorted.

    ``cliques`` finds maximal independent sets of the conflict graph,
    ``brute_force`` scans every arrow subset and ``via_rho`` pushes the angle
    matchings of ``T`` (the triangulation ``Q`` was built from) through ρ.
    """
    method = Method(method)
    if method is Method.CLIQUES:
        found = _via_cliques(Q)
    elif method is Method.BRUTE_FORCE:
        found = _via_brute_force(Q, limit)
    else:
        if T is None:
            raise ValueError("via_rho needs the triangulation")
        found = [rho_image(T, A, Q) for A in enumerate_angle_matchings(T)]
    return sorted(set(found), key=sorted)


def discrete_formula(T: Triangulation, i: int, j: int, nvars: int | None = None,
                     method: Method | str = Method.CLIQUES) -> LaurentPoly:
    sub = subpolygon(T, i, j)
    Q = quiver_of_triangulation(sub)
    info = arrow_info(sub, Q)
    m = nvars or _nvars(T)
    total = LaurentPoly.zero(m)
    for D in enumerate_discrete_subsets(Q, method, T=sub):
        total = total + product_of_vars((info[x].third_arc for x in D), m)
    return total


def rho_image(T: Triangulation, A, Qbar: IceQuiver | None = None) -> DiscreteSubset:
    """ρ(A), checked to be a maximal discrete subset of Q̄."""
    if Qbar is None:
        Qbar = quiver_of_triangulation(T)
    r = rho(T, Qbar)
    image = frozenset(r[a] for a in A)
    if not is_maximal_discrete(Qbar, image):
        raise VerificationFailed(f"ρ({sorted(A)}) is not a maximal discrete subset")
    return image
