"""``typea`` command line: expand, verify and export.

Exit codes: 0 ok, 1 verification failure, 2 input error, 3 internal
invariant breach.
"""

from __future__ import annotations

import functools
import json
import sys

import click

from .cluster import numerator_table
from .errors import InvalidTriangulation, LimitExceeded, SizeLimit, TypeAError
from .geometry import (Triangulation, all_orientations, subpolygon, triangulation_from_json,
                       triangulation_from_orientation, triangulation_to_json)
from .matchings import angle_formula, discrete_formula
from .qp import ArrowClass, build_qp, cut_formula
from .quiver import Mode, quiver_of_triangulation
from .snake import EdgeKind, build_snake_graph, ms_formula
from .verify import METHODS, verify_triangulation

EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_INTERNAL = 0, 1, 2, 3

_INPUT_ERRORS = (InvalidTriangulation, LimitExceeded, SizeLimit)


def _die(code: int, msg: str):
    click.echo(f"error: {msg}", err=True)
    sys.exit(code)


def _guarded(fn):
    """Map library exceptions onto exit codes."""
    @functools.wraps(fn)
    def wrapper(*args, **kwargs):
        try:
            return fn(*args, **kwargs)
        except _INPUT_ERRORS as exc:
            _die(EXIT_INPUT, f"{exc.code}: {exc}")
        except TypeAError as exc:
            _die(EXIT_INTERNAL, f"{exc.code}: {exc}")
    return wrapper


def _load(source, orientation, n) -> Triangulation:
    if source is not None:
        try:
            text = sys.stdin.read() if source == "-" else open(source).read()
            doc = json.loads(text)
        except OSError as exc:
            raise InvalidTriangulation(f"cannot read {source}: {exc}") from None
        except json.JSONDecodeError as exc:
            raise InvalidTriangulation(f"invalid JSON: {exc}") from None
        return triangulation_from_json(doc)
    if orientation is not None:
        if n is not None and n != len(orientation) + 1:
            raise InvalidTriangulation(f"--n {n} does not match orientation {orientation!r}")
        return triangulation_from_orientation(len(orientation) + 1, orientation)
    if n is not None:
        return triangulation_from_orientation(n, "F" * (n - 1))
    raise InvalidTriangulation("give --input, --orientation or --n")


def _interval(text, T: Triangulation) -> tuple[int, int]:
    try:
        i, j = (int(x) for x in text.split(","))
    except ValueError:
        raise InvalidTriangulation(f"interval must look like 'i,j', got {text!r}") from None
    if not (T.lo <= i <= j <= T.hi):
        raise InvalidTriangulation(f"interval [{i},{j}] outside [{T.lo},{T.hi}]")
    return i, j


def _orientation_arg(_ctx, _param, value):
    if value is None:
        return None
    value = value.strip().upper()
    if value == "-":
        return ""  # n = 1 has no arrows to orient
    if set(value) - {"F", "B"}:
        raise click.BadParameter("use letters F and B only")
    return value


source_options = [
    click.option("--input", "source", type=str, default=None,
                 help="Triangulation JSON file, or - for stdin."),
    click.option("--orientation", callback=_orientation_arg, default=None,
                 help="Arrow directions of the path quiver, e.g. FB ('-' for n=1)."),
    click.option("--n", "n", type=int, default=None, help="Rank (all arrows forward)."),
]


def with_source(fn):
    for opt in reversed(source_options):
        fn = opt(fn)
    return fn


@click.group()
def main():
    """Expansion formulas for type A cluster variables with boundary coefficients."""


# --------------------------------------------------------------------------
# expand
# --------------------------------------------------------------------------

@main.command()
@with_source
@click.option("--interval", required=True, help="i,j with 1 <= i <= j <= n.")
@click.option("--method", type=click.Choice(METHODS), default="angles", show_default=True)
@click.option("--json", "as_json", is_flag=True, help="Print the polynomial as JSON.")
@click.option("--seed-limit", type=int, default=None, help="Cap on seeds explored by oracle.")
@_guarded
def expand(source, orientation, n, interval, method, as_json, seed_limit):
    """Print the numerator f^[i,j] computed by one method."""
    T = _load(source, orientation, n)
    i, j = _interval(interval, T)
    m = max(T.arcs)
    if method == "angles":
        f = angle_formula(T, i, j, m)
    elif method == "discrete":
        f = discrete_formula(T, i, j, m)
    elif method == "cuts":
        f = cut_formula(T, i, j, m)
    elif method == "snake":
        f = ms_formula(T, i, j, m)
    else:
        f = numerator_table(quiver_of_triangulation(T), max_seeds=seed_limit)[(i, j)]
    click.echo(json.dumps(f.to_json()) if as_json else f.render())


# --------------------------------------------------------------------------
# verify
# --------------------------------------------------------------------------

@main.command()
@with_source
@click.option("--all", "run_all", is_flag=True, help="Every orientation for n = 1..max-n.")
@click.option("--max-n", type=int, default=5, show_default=True)
@click.option("--seed-limit", type=int, default=None)
@click.option("--exhaustive", is_flag=True, help="Also run the brute-force subset scans.")
@click.option("--json", "as_json", is_flag=True, help="One JSON record per triangulation.")
@click.option("--timing", is_flag=True, help="Include per-interval timings.")
@_guarded
def verify(source, orientation, n, run_all, max_n, seed_limit, exhaustive, as_json, timing):
    """Cross-check all methods on every interval; exit 1 on any disagreement."""
    if run_all:
        if max_n < 1:
            raise InvalidTriangulation("--max-n must be at least 1")
        jobs = [("".join(o.value for o in ori) or "-", triangulation_from_orientation(k, ori))
                for k in range(1, max_n + 1) for ori in all_orientations(k)]
    else:
        T = _load(source, orientation, n)
        jobs = [(orientation if orientation is not None else "input", T)]

    bad = 0
    total = 0
    for name, T in jobs:
        rep = verify_triangulation(T, name, seed_limit, exhaustive)
        total += len(rep.intervals)
        if as_json:
            click.echo(json.dumps({"name": name, "ok": rep.ok,
                                   "failures": rep.global_failures,
                                   "intervals": [r.to_json(timing) for r in rep.intervals]}))
        else:
            for msg in rep.global_failures:
                click.echo(f"{name} FAIL {msg}")
            for r in rep.intervals:
                status = "ok" if r.agree and not r.failures else "FAIL"
                counts = " ".join(f"{k}={v}" for k, v in r.counts.items())
                line = f"{name} [{r.interval[0]},{r.interval[1]}] {status} {counts}"
                if timing:
                    line += f" {r.seconds:.4f}s"
                click.echo(line)
        if not rep.ok:
            bad += 1
            for r in rep.intervals:
                if r.agree and not r.failures:
                    continue
                repro = {"triangulation": triangulation_to_json(T),
                         "interval": list(r.interval),
                         "failures": r.failures or ["methods disagree"], "polys": r.polys}
                click.echo(json.dumps(repro), err=True)
    click.echo(f"{len(jobs) - bad}/{len(jobs)} triangulations, {total} intervals verified",
               err=True)
    sys.exit(EXIT_FAIL if bad else EXIT_OK)


# --------------------------------------------------------------------------
# export
# --------------------------------------------------------------------------

def _quiver_doc(Q) -> dict:
    return {"vertices": list(Q.vertices), "frozen": sorted(Q.frozen),
            "arrows": [{"id": a.id, "source": a.source, "target": a.target} for a in Q.arrows]}


def _quiver_dot(Q, name="Q") -> str:
    lines = [f"digraph {name} {{"]
    for v in Q.vertices:
        style = ' [shape=box, style=filled, fillcolor="#dddddd"]' if v in Q.frozen else ""
        lines.append(f"  {v}{style};")
    for a in Q.arrows:
        lines.append(f"  {a.source} -> {a.target};")
    lines.append("}")
    return "\n".join(lines)


def _qp_doc(qp) -> dict:
    return {"vertices": list(qp.vertices), "frozen": sorted(qp.frozen),
            "arrows": [{"id": a.id, "source": a.source, "target": a.target,
                        "kind": a.kind.value, "weight": a.weight} for a in qp.arrows],
            "potential": [{"sign": c.sign, "arrows": list(c.arrows)} for c in qp.potential]}


def _qp_dot(qp) -> str:
    lines = ["digraph QP {"]
    for v in qp.vertices:
        style = ' [shape=box, style=filled, fillcolor="#dddddd"]' if v in qp.frozen else ""
        lines.append(f"  {v}{style};")
    for a in qp.arrows:
        attrs = [f'label="{a.id}"']
        if a.kind is ArrowClass.EXTERNAL:
            attrs.append("style=dashed")
        elif a.kind is ArrowClass.INTERNAL:
            attrs.append("color=gray40")
        lines.append(f"  {a.source} -> {a.target} [{', '.join(attrs)}];")
    lines.append("}")
    return "\n".join(lines)


def _snake_doc(G) -> dict:
    return {"vertices": list(G.vertices),
            "edges": [{"id": e.id, "ends": [e.u, e.v], "label": e.label, "kind": e.kind.value}
                      for e in G.edges],
            "tiles": [{"diagonal": t.diagonal, "edges": list(t.boundary_edges),
                       "diagonal_edge": t.diagonal_edge} for t in G.tiles],
            "shared": list(G.shared),
            "shapes": {str(k): v for k, v in G.shapes().items()}}


def _snake_dot(G) -> str:
    lines = ["graph G {"]
    for v in G.vertices:
        lines.append(f"  {v};")
    for e in G.edges:
        style = ", style=dotted" if e.kind is EdgeKind.TILE_DIAGONAL else ""
        lines.append(f'  {e.u} -- {e.v} [label="{e.label}"{style}];')
    lines.append("}")
    return "\n".join(lines)


@main.command()
@with_source
@click.option("--what", type=click.Choice(["quiver", "ice", "qp", "snake", "triangulation"]),
              required=True)
@click.option("--format", "fmt", type=click.Choice(["dot", "json"]), default="json",
              show_default=True)
@click.option("--interval", default=None, help="Restrict to the subpolygon for i,j.")
@_guarded
def export(source, orientation, n, what, fmt, interval):
    """Write a structure as DOT or JSON on stdout."""
    if source is None and orientation is None and n is None:
        source = "-"
    T = _load(source, orientation, n)
    if interval is not None:
        T = subpolygon(T, *_interval(interval, T))
    if what == "triangulation":
        if fmt == "dot":
            raise InvalidTriangulation("triangulations export as json only")
        out = json.dumps(triangulation_to_json(T), indent=2)
    elif what in ("quiver", "ice"):
        Q = quiver_of_triangulation(T, Mode.DIAGONALS_ONLY if what == "quiver" else Mode.ICE)
        out = _quiver_dot(Q) if fmt == "dot" else json.dumps(_quiver_doc(Q), indent=2)
    elif what == "qp":
        qp = build_qp(T)
        out = _qp_dot(qp) if fmt == "dot" else json.dumps(_qp_doc(qp), indent=2)
    else:
        G = build_snake_graph(T)
        out = _snake_dot(G) if fmt == "dot" else json.dumps(_snake_doc(G), indent=2)
    click.echo(out)


if __name__ == "__main__":
    main()
