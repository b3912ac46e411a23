"""Ice quivers of triangulations, quiver mutation and per-arrow metadata."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import cached_property
from enum import Enum
from typing import Iterable, NamedTuple, Optional

from .geometry import Angle, Triangulation


class Mode(str, Enum):
    DIAGONALS_ONLY = "diagonals"
    ICE = "ice"


class Arrow(NamedTuple):
    source: int
    target: int
    id: int


@dataclass(frozen=True)
class IceQuiver:
    vertices: tuple[int, ...]
    frozen: frozenset[int]
    arrows: tuple[Arrow, ...]

    @property
    def mutable(self) -> tuple[int, ...]:
        return tuple(v for v in self.vertices if v not in self.frozen)

    def arrow(self, arrow_id: int) -> Arrow:
        return self._by_id[arrow_id]

    @cached_property
    def _by_id(self) -> dict[int, Arrow]:
        return {a.id: a for a in self.arrows}

    def counts(self) -> Counter:
        """Arrow multiset as a Counter of ``(source, target)``."""
        return Counter((a.source, a.target) for a in self.arrows)

    def same_arrows(self, other: "IceQuiver") -> bool:
        return (self.vertices == other.vertices and self.frozen == other.frozen
                and self.counts() == other.counts())

    def full_subquiver(self, keep: Iterable[int]) -> list[Arrow]:
        keep = set(keep)
        return [a for a in self.arrows if a.source in keep and a.target in keep]


def from_counts(vertices, frozen, counts) -> IceQuiver:
    arrows = []
    for (s, t), c in sorted(counts.items()):
        for _ in range(c):
            arrows.append(Arrow(s, t, len(arrows)))
    return IceQuiver(tuple(vertices), frozenset(frozen), tuple(arrows))


def quiver_of_triangulation(T: Triangulation, mode: Mode = Mode.ICE) -> IceQuiver:
    """Arrow i -> j whenever sides i, j of a triangle have j right after i clockwise."""
    mode = Mode(mode)
    arrows = []
    for i in sorted(T.triangles):
        s = T.sides(i)
        for a, b in ((s[0], s[1]), (s[1], s[2]), (s[2], s[0])):
            da, db = T.is_diagonal(a), T.is_diagonal(b)
            if (mode is Mode.DIAGONALS_ONLY and da and db) or (mode is Mode.ICE and (da or db)):
                arrows.append(Arrow(a, b, len(arrows)))
    if mode is Mode.DIAGONALS_ONLY:
        return IceQuiver(tuple(T.diagonals), frozenset(), tuple(arrows))
    return IceQuiver(tuple(sorted(T.arcs)), frozenset(T.boundary), tuple(arrows))


def mutate_quiver(Q: IceQuiver, k: int) -> IceQuiver:
    if k not in Q.vertices:
        raise ValueError(f"vertex {k} not in quiver")
    if k in Q.frozen:
        raise ValueError(f"cannot mutate at frozen vertex {k}")
    counts = Q.counts()
    ins = [(s, c) for (s, t), c in counts.items() if t == k]
    outs = [(t, c) for (s, t), c in counts.items() if s == k]
    new = Counter()
    for (s, t), c in counts.items():
        if s == k:
            new[(t, s)] += c
        elif t == k:
            new[(t, s)] += c
        else:
            new[(s, t)] += c
    for s, a in ins:
        for t, b in outs:
            new[(s, t)] += a * b
    # cancel 2-cycles pairwise, then drop frozen-frozen arrows
    for (s, t) in list(new):
        if s < t and (t, s) in new:
            m = min(new[(s, t)], new[(t, s)])
            new[(s, t)] -= m
            new[(t, s)] -= m
    out = Counter({(s, t): c for (s, t), c in new.items()
                   if c > 0 and not (s in Q.frozen and t in Q.frozen)})
    return from_counts(Q.vertices, Q.frozen, out)


def underlying_orientation(Q: IceQuiver) -> list[str]:
    """For a path quiver on 1..n, the arrow direction between k and k+1."""
    counts = Q.counts()
    out = []
    for k in Q.vertices[:-1]:
        if counts.get((k, k + 1)) == 1 and (k + 1, k) not in counts:
            out.append("F")
        elif counts.get((k + 1, k)) == 1 and (k, k + 1) not in counts:
            out.append("B")
        else:
            raise ValueError(f"no single arrow between {k} and {k + 1}")
    return out


@dataclass(frozen=True)
class ArrowInfo:
    id: int
    triangle: int
    third_arc: int
    angle: Angle
    plus: Optional[int]   # arrow leaving t(alpha) inside the same triangle
    minus: Optional[int]  # arrow entering s(alpha) inside the same triangle


def arrow_info(T: Triangulation, Qbar: IceQuiver) -> dict[int, ArrowInfo]:
    """Triangle, weight, companions and ρ-preimage of every arrow of Q̄."""
    triangle_of_pair = {}
    for i in T.triangles:
        s = T.sides(i)
        for a, b, c in ((s[0], s[1], s[2]), (s[1], s[2], s[0]), (s[2], s[0], s[1])):
            triangle_of_pair[(a, b)] = (i, c)
    by_pair = {(a.source, a.target): a.id for a in Qbar.arrows}
    if len(by_pair) != len(Qbar.arrows):
        raise ValueError("parallel arrows: quiver was not built from this triangulation")
    info = {}
    for a in Qbar.arrows:
        hit = triangle_of_pair.get((a.source, a.target))
        if hit is None:
            raise ValueError(f"arrow {a} is not a clockwise side pair of any triangle")
        i, third = hit
        shared = set(T.arcs[a.source]) & set(T.arcs[a.target])
        (corner,) = shared
        angle = (i, T.vertex_index[corner])
        info[a.id] = ArrowInfo(
            id=a.id, triangle=i, third_arc=third, angle=angle,
            plus=by_pair.get((a.target, third)),
            minus=by_pair.get((third, a.source)),
        )
    return info


def rho(T: Triangulation, Qbar: IceQuiver) -> dict[Angle, int]:
    """The map angle -> arrow id; raises if it is not a bijection A(T) -> Q̄₁."""
    info = arrow_info(T, Qbar)
    out = {inf.angle: aid for aid, inf in info.items()}
    if len(out) != len(info) or set(out) != set(T.angles):
        raise ValueError("angle-to-arrow map is not a bijection")
    return out
