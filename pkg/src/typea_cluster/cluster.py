"""Seeds, mutation and breadth-first exploration of the exchange graph.

This is the direct oracle for the combinatorial formulas: every numerator
is produced by iterating the exchange relation from the initial seed.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from typing import Optional

from .errors import LimitExceeded, MalformedDenominator
from .laurent import LaurentPoly, divide_exact, strip_monomial
from .quiver import IceQuiver, mutate_quiver


@dataclass(frozen=True)
class Seed:
    variables: tuple[LaurentPoly, ...]
    quiver: IceQuiver

    def variable(self, k: int) -> LaurentPoly:
        return self.variables[k - 1]

    def cluster(self) -> frozenset[LaurentPoly]:
        return frozenset(self.variable(k) for k in self.quiver.mutable)

    def key(self):
        """Permutation-invariant identity: the cluster plus the quiver written
        in terms of variable renderings."""
        name = {k: self.variable(k).render() for k in self.quiver.vertices}
        arrows = sorted((name[a.source], name[a.target]) for a in self.quiver.arrows)
        return (frozenset(name[k] for k in self.quiver.mutable), tuple(arrows))


def _check_vertices(Q: IceQuiver) -> int:
    m = len(Q.vertices)
    if Q.vertices != tuple(range(1, m + 1)):
        raise ValueError("seed quivers must have vertices 1..m")
    return m


def initial_seed(Q: IceQuiver) -> Seed:
    m = _check_vertices(Q)
    return Seed(tuple(LaurentPoly.var(i, m) for i in range(1, m + 1)), Q)


def mutate(seed: Seed, k: int) -> Seed:
    """μ_k: x_k x'_k = Π_{j→k} x_j + Π_{k→j} x_j, then mutate the quiver."""
    Q = seed.quiver
    if k not in Q.vertices or k in Q.frozen:
        raise ValueError(f"cannot mutate at vertex {k}")
    m = len(Q.vertices)
    into = LaurentPoly.one(m)
    out = LaurentPoly.one(m)
    for a in Q.arrows:
        if a.target == k:
            into = into * seed.variable(a.source)
        elif a.source == k:
            out = out * seed.variable(a.target)
    new_var = divide_exact(into + out, seed.variable(k))
    variables = list(seed.variables)
    variables[k - 1] = new_var
    return Seed(tuple(variables), mutate_quiver(Q, k))


@dataclass
class ExchangeGraph:
    seeds: list[Seed]
    variables: set[LaurentPoly]
    initial: Seed

    def non_initial(self) -> list[LaurentPoly]:
        init = set(self.initial.variables)
        return sorted((v for v in self.variables if v not in init), key=lambda p: p.render())


def default_seed_limit(n: int) -> int:
    return 10 * math.comb(2 * (n + 1), n + 1) // (n + 2)


def exchange_graph(Q: IceQuiver, max_seeds: Optional[int] = None) -> ExchangeGraph:
    """Breadth-first closure of the initial seed under all mutations."""
    n = len(Q.mutable)
    if max_seeds is None:
        max_seeds = default_seed_limit(n)
    start = initial_seed(Q)
    seen = {start.key()}
    seeds = [start]
    variables = set(start.variables)
    queue = deque([start])
    while queue:
        seed = queue.popleft()
        for k in Q.mutable:
            nxt = mutate(seed, k)
            key = nxt.key()
            if key in seen:
                continue
            if len(seeds) >= max_seeds:
                raise LimitExceeded(f"more than {max_seeds} seeds")
            seen.add(key)
            seeds.append(nxt)
            variables.add(nxt.variable(k))
            queue.append(nxt)
    return ExchangeGraph(seeds, variables, start)


def interval_of(d, n: int) -> tuple[int, int]:
    """(i, j) when d is the 0/1 indicator of [i, j] inside [1, n]."""
    support = [idx + 1 for idx, a in enumerate(d) if a]
    if (not support or any(a not in (0, 1) for a in d) or support[-1] > n
            or support != list(range(support[0], support[-1] + 1))):
        raise MalformedDenominator(f"denominator vector {list(d)} is not an interval in [1,{n}]")
    return support[0], support[-1]


def numerator_table(Q: IceQuiver, graph: Optional[ExchangeGraph] = None,
                    max_seeds: Optional[int] = None) -> dict[tuple[int, int], LaurentPoly]:
    """Map each interval (i, j) to the numerator f^[i,j] found by mutation."""
    n = len(Q.mutable)
    if graph is None:
        graph = exchange_graph(Q, max_seeds)
    table: dict[tuple[int, int], LaurentPoly] = {}
    for var in graph.non_initial():
        f, d = strip_monomial(var)
        ij = interval_of(d, n)
        if ij in table:
            raise MalformedDenominator(f"two cluster variables with denominator {ij}")
        table[ij] = f
    expected = {(i, j) for i in range(1, n + 1) for j in range(i, n + 1)}
    if set(table) != expected:
        raise MalformedDenominator(f"intervals {sorted(expected - set(table))} not found")
    return dict(sorted(table.items()))
