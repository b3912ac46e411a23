"""Cross-method verification driver behind ``typea verify``.

For one triangulation every interval [i, j] is expanded by the four
combinatorial formulas and compared with the numerator found by mutation.
The certificates themselves (matchings, discrete subsets, cuts, edge
matchings) are also checked against each other through ρ and φ.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass, field
from functools import lru_cache

from . import kernels
from .cluster import exchange_graph, numerator_table
from .geometry import Triangulation, enumerate_triangulations, opposite_arc, subpolygon
from .laurent import LaurentPoly
from .matchings import (Method, angle_formula, discrete_formula, enumerate_angle_matchings,
                        enumerate_discrete_subsets, rho)
from .qp import ArrowClass, brute_force_cuts, build_qp, cut_formula, enumerate_cuts, minimal_cuts
from .quiver import quiver_of_triangulation
from .snake import build_phi, build_snake_graph, enumerate_edge_matchings, ms_formula

METHODS = ("angles", "discrete", "cuts", "snake", "oracle")


@dataclass
class IntervalReport:
    interval: tuple[int, int]
    polys: dict[str, str]
    counts: dict[str, int]
    agree: bool
    failures: list[str] = field(default_factory=list)
    seconds: float = 0.0

    def to_json(self, timing: bool = False) -> dict:
        doc = {"interval": list(self.interval), "polys": self.polys, "counts": self.counts,
               "agree": self.agree, "failures": self.failures}
        if timing:
            doc["seconds"] = round(self.seconds, 6)
        return doc


@dataclass
class RunReport:
    name: str
    triangulation: Triangulation
    intervals: list[IntervalReport]
    global_failures: list[str]

    @property
    def ok(self) -> bool:
        return not self.global_failures and all(r.agree and not r.failures for r in self.intervals)


@lru_cache(maxsize=None)
def triangulation_count(size: int) -> int:
    """Number of triangulations of a convex ``size``-gon, by enumeration."""
    return sum(1 for _ in enumerate_triangulations(size))


def _check_interval(T: Triangulation, i: int, j: int, oracle: LaurentPoly,
                    exhaustive: bool) -> IntervalReport:
    start = time.perf_counter()
    m = max(T.arcs)
    fails: list[str] = []
    sub = subpolygon(T, i, j)
    n_sub = j - i + 1

    polys = {
        "angles": angle_formula(T, i, j, m),
        "discrete": discrete_formula(T, i, j, m),
        "cuts": cut_formula(T, i, j, m),
        "snake": ms_formula(T, i, j, m),
        "oracle": oracle,
    }
    agree = len(set(polys.values())) == 1
    for name, p in polys.items():
        if not p.is_positive():
            fails.append(f"{name}: non-positive coefficient")

    A = enumerate_angle_matchings(sub)
    Qbar = quiver_of_triangulation(sub)
    D = enumerate_discrete_subsets(Qbar)
    r = rho(sub, Qbar)
    images = {frozenset(r[a] for a in M) for M in A}
    if len(images) != len(A) or images != set(D):
        fails.append("rho is not a bijection from angle matchings onto discrete subsets")
    if exhaustive:
        if set(enumerate_discrete_subsets(Qbar, Method.BRUTE_FORCE)) != set(D):
            fails.append("brute-force discrete subsets differ")

    qp = build_qp(sub)
    if len(qp.triangle_cycles) != n_sub + 1 or len(qp.big_cycles) != n_sub + 1:
        fails.append("cycle counts differ from n+1")
    cuts = enumerate_cuts(qp)
    for C in cuts:
        has_ext = any(qp.arrow(a).kind is ArrowClass.EXTERNAL for a in C)
        if len(C) < n_sub + 1 or (len(C) == n_sub + 1) == has_ext:
            fails.append(f"cut {sorted(C)} breaks the size bound")
            break
    mins = minimal_cuts(qp)
    if set(mins) != set(D):
        fails.append("minimal cuts differ from maximal discrete subsets")
    if exhaustive and len(qp.arrows) <= kernels.MAX_SCAN_BITS:
        if set(brute_force_cuts(qp)) != set(cuts):
            fails.append("brute-force cuts differ")

    G = build_snake_graph(sub)
    P = enumerate_edge_matchings(G)
    phi = build_phi(sub, G)
    for a, eid in phi.items():
        if G.edge(eid).label != opposite_arc(sub, a):
            fails.append(f"phi{a} has the wrong label")
            break
    phi_images = {frozenset(phi[a] for a in M) for M in A}
    if len(phi_images) != len(A) or phi_images != set(P):
        fails.append("phi is not a bijection from angle matchings onto edge matchings")
    if any(len(M) != n_sub + 1 for M in P):
        fails.append("edge matching of the wrong size")

    counts = {"matchings": len(A), "discrete": len(D), "minimal_cuts": len(mins),
              "edge_matchings": len(P)}
    return IntervalReport((i, j), {k: v.render() for k, v in polys.items()}, counts, agree,
                          fails, time.perf_counter() - start)


def verify_triangulation(T: Triangulation, name: str = "", seed_limit: int | None = None,
                         exhaustive: bool = False) -> RunReport:
    """Check every interval of ``T``; failures are collected, not raised."""
    Q = quiver_of_triangulation(T)
    graph = exchange_graph(Q, seed_limit)
    table = numerator_table(Q, graph)
    n = T.n
    glob = []
    expected = triangulation_count(n + 3)
    if len(graph.seeds) != expected:
        glob.append(f"{len(graph.seeds)} seeds, expected {expected}")
    if len(graph.non_initial()) != n * (n + 1) // 2:
        glob.append(f"{len(graph.non_initial())} non-initial variables")
    if expected != math.comb(2 * n + 2, n + 1) // (n + 2):
        glob.append("triangulation enumerator disagrees with the Catalan number")
    reports = [_check_interval(T, i, j, f, exhaustive) for (i, j), f in table.items()]
    return RunReport(name, T, reports, glob)
