"""Acceptance criteria, one test each.

Every test records a PASS/FAIL line; the lines are printed in the terminal
summary (see conftest) and when this file is run as a script.
"""

import subprocess
import sys
import time
from collections import Counter
from functools import lru_cache

from conftest import poly
from typea_cluster.cluster import exchange_graph, numerator_table
from typea_cluster.geometry import (all_orientations, enumerate_triangulations, opposite_arc,
                                    subpolygon, triangulation_from_orientation)
from typea_cluster.matchings import (angle_formula, discrete_formula, enumerate_angle_matchings,
                                     enumerate_discrete_subsets, rho)
from typea_cluster.qp import (ArrowClass, build_qp, cut_formula, cut_weights, enumerate_cuts,
                              minimal_cuts)
from typea_cluster.quiver import from_counts, quiver_of_triangulation
from typea_cluster.snake import (build_phi, build_snake_graph, enumerate_edge_matchings,
                                 ms_formula)

RESULTS: list[str] = []
_START = time.perf_counter()
MAX_N = 6


def record(num, name, ok, detail=""):
    line = f"criterion {num} {'PASS' if ok else 'FAIL'}: {name}" + (f" ({detail})" if detail else "")
    RESULTS.append(line)
    print(line)
    assert ok, line


def _orientations(max_n=MAX_N):
    for n in range(1, max_n + 1):
        for ori in all_orientations(n):
            yield n, ori, triangulation_from_orientation(n, ori)


@lru_cache(maxsize=None)
def _oracle_tables():
    """Oracle numerators for every orientation up to MAX_N (shared by 3, 4 and 7)."""
    out = {}
    for n, ori, T in _orientations():
        g = exchange_graph(quiver_of_triangulation(T))
        out[(n, ori)] = (T, g, numerator_table(quiver_of_triangulation(T), g))
    return out


def test_criterion_1_golden_values():
    T = triangulation_from_orientation(3, "FF")
    f12 = poly("x1*x4*x7 + x3*x4*x6 + x2*x3*x5", 9)
    f13 = poly("x1*x4*x7*x9 + x3*x4*x6*x9 + x1*x2*x4*x8 + x2*x3*x5*x9", 9)
    table = numerator_table(quiver_of_triangulation(T))
    ok = table[(1, 2)] == f12 and table[(1, 3)] == f13
    for method in (angle_formula, discrete_formula, cut_formula, ms_formula):
        ok = ok and method(T, 1, 2).monomials() == f12.monomials()
        ok = ok and method(T, 1, 3).monomials() == f13.monomials()
        ok = ok and method(T, 1, 2) == f12 and method(T, 1, 3) == f13
    record(1, "fan golden values from all five methods", ok)


def test_criterion_2_rank_two_example():
    Q = from_counts(range(1, 7), {3, 4, 5, 6},
                    Counter({(1, 2): 1, (3, 1): 1, (1, 4): 1, (2, 5): 1, (6, 2): 1}))
    g = exchange_graph(Q)
    mutable_vars = {v for v in g.variables if v not in {poly(f"x{k}", 6) for k in range(3, 7)}}
    table = numerator_table(Q, g)
    ok = (len(g.seeds) == 5 and len(mutable_vars) == 5
          and table == {(1, 1): poly("x3 + x2*x4", 6), (2, 2): poly("x5 + x1*x6", 6),
                        (1, 2): poly("x3*x5 + x1*x3*x6 + x2*x4*x5", 6)})
    record(2, "rank-two example: 5 variables, 5 seeds, numerator table", ok,
           f"{len(mutable_vars)} variables, {len(g.seeds)} seeds")


def test_criterion_3_all_orientations_agree():
    bad = []
    count = 0
    for (n, ori), (T, _, table) in _oracle_tables().items():
        count += 1
        for (i, j), f in table.items():
            got = [angle_formula(T, i, j), discrete_formula(T, i, j), cut_formula(T, i, j),
                   ms_formula(T, i, j)]
            if any(g != f for g in got):
                bad.append((ori, i, j))
    record(3, "four formulas equal the oracle on every interval, n <= 6", not bad and count == 63,
           f"{count} orientations, {len(bad)} mismatches")


def test_criterion_4_counts():
    fan = triangulation_from_orientation(3, "FF")
    ok = (len(enumerate_angle_matchings(fan)) == 4
          and len(enumerate_angle_matchings(subpolygon(fan, 1, 2))) == 3)
    sizes_ok = True
    seeds = {}
    for (n, ori), (T, g, _) in _oracle_tables().items():
        for i in range(1, n + 1):
            for j in range(i, n + 1):
                sub = subpolygon(T, i, j)
                sizes_ok &= all(len(A) == j - i + 2 for A in enumerate_angle_matchings(sub))
                G = build_snake_graph(T, i, j)
                sizes_ok &= all(len(P) == j - i + 2 for P in enumerate_edge_matchings(G))
        ok = ok and len(g.non_initial()) == n * (n + 1) // 2
        seeds.setdefault(n, set()).add(len(g.seeds))
    enumerated = [sum(1 for _ in enumerate_triangulations(n + 3)) for n in range(1, MAX_N + 1)]
    seed_ok = (enumerated == [2, 5, 14, 42, 132, 429]
               and all(seeds[n] == {enumerated[n - 1]} for n in seeds))
    record(4, "matching counts, matching sizes, variable and seed counts",
           ok and sizes_ok and seed_ok, f"seeds {[sorted(seeds[n])[0] for n in sorted(seeds)]}")


def test_criterion_5_qp():
    pent = build_qp(triangulation_from_orientation(2, "F"))
    fan = build_qp(triangulation_from_orientation(3, "FF"))
    fan_weights = {frozenset(cut_weights(fan, c)) for c in minimal_cuts(fan)}
    ok = (len(minimal_cuts(pent)) == 3 and len(minimal_cuts(fan)) == 4
          and fan_weights == {frozenset(s) for s in ({4, 1, 7, 9}, {4, 6, 3, 9},
                                                     {4, 1, 2, 8}, {5, 2, 3, 9})})
    for n, ori, T in _orientations():
        for i in range(1, n + 1):
            for j in range(i, n + 1):
                qp = build_qp(subpolygon(T, i, j))
                m = j - i + 1
                ok &= len(qp.triangle_cycles) == len(qp.big_cycles) == m + 1
                for C in enumerate_cuts(qp):
                    ext = any(qp.arrow(a).kind is ArrowClass.EXTERNAL for a in C)
                    ok &= len(C) >= m + 1 and (len(C) == m + 1) == (not ext)
    record(5, "minimal cuts, cut size bound, cycle counts", ok)


def test_criterion_6_bijections():
    ok = True
    for n, ori, T in _orientations():
        Q = quiver_of_triangulation(T)
        A = enumerate_angle_matchings(T)
        r = rho(T, Q)
        rho_imgs = {frozenset(r[a] for a in M) for M in A}
        ok &= len(rho_imgs) == len(A) and rho_imgs == set(enumerate_discrete_subsets(Q))
        G = build_snake_graph(T)
        phi = build_phi(T, G)
        ok &= all(G.edge(e).label == opposite_arc(T, a) for a, e in phi.items())
        phi_imgs = {frozenset(phi[a] for a in M) for M in A}
        ok &= len(phi_imgs) == len(A) and phi_imgs == set(enumerate_edge_matchings(G))
    record(6, "rho onto discrete subsets and phi onto edge matchings are bijections", ok)


def test_criterion_7_divisibility_and_positivity():
    # building the tables performs every exchange division; NotDivisible would raise
    tables = _oracle_tables()
    ok = all(f.is_positive() and f.is_polynomial()
             for _, _, table in tables.values() for f in table.values())
    ok &= all(v.is_positive() for _, g, _ in tables.values() for v in g.variables)
    record(7, "exact divisions succeed and all coefficients are positive", ok)


def test_criterion_8_cli_and_runtime():
    t0 = time.perf_counter()
    res = subprocess.run([sys.executable, "-m", "typea_cluster", "verify", "--all", "--max-n", "5"],
                         capture_output=True, text=True)
    elapsed = time.perf_counter() - _START
    record(8, "verify --all --max-n 5 exits 0 and criteria 1-8 finish within 5 minutes",
           res.returncode == 0 and elapsed < 300,
           f"exit {res.returncode}, verify {time.perf_counter() - t0:.1f}s, total {elapsed:.1f}s")


if __name__ == "__main__":
    failed = 0
    for name, fn in list(globals().items()):
        if name.startswith("test_criterion_"):
            try:
                fn()
            except AssertionError:
                failed += 1
    sys.exit(1 if failed else 0)
