"""Command-line driver.

Exit codes: 0 all asserted properties hold, 1 witnessed failure,
2 indeterminate within budget, 3 usage error.
"""

from __future__ import annotations

import json
import random
import sys
from fractions import Fraction
from pathlib import Path

import click

from .verdict import Verdict, combine

USAGE = 3


class Outcome(Exception):
    def __init__(self, code: int):
        self.code = code


def _finish(verdict: Verdict):
    raise Outcome(verdict.exit_code())


def _read(path: str) -> str:
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise click.UsageError(f"cannot read {path}: {exc.strerror}") from exc


def _emit(fmt: str, lines: list, data: dict):
    if fmt == "structured":
        click.echo(json.dumps(data, sort_keys=True, default=str))
    else:
        for line in lines:
            click.echo(line)


def _diagram(path: str):
    from .diagram import CoxeterDiagram

    try:
        return CoxeterDiagram.from_text(_read(path))
    except ValueError as exc:
        raise click.UsageError(f"{path}: {exc}") from exc


def _verdict_lines(verdicts: dict) -> list:
    out = []
    for k, v in verdicts.items():
        line = f"{k}: {v.status}"
        if v.witness is not None:
            line += f" witness={v.witness}"
        if v.note:
            line += f" ({v.note})"
        out.append(line)
    return out


fmt_option = click.option("--format", "fmt", type=click.Choice(["text", "structured"]), default="text")


@click.group()
def cli():
    """Coxeter, Artin, 353 and Bestvina checkers."""


# ---------------------------------------------------------------- coxeter


@cli.group()
def coxeter():
    """Coxeter group enumeration."""


@coxeter.command("enumerate")
@click.option("--diagram", "diagram_path", required=True)
@click.option("--cutoff", default=10_000, show_default=True, type=click.IntRange(min=1))
@fmt_option
def coxeter_enumerate(diagram_path, cutoff, fmt):
    from .coxeter import DivergedAtCutoff, enumerate_group, matrix_oracle

    d = _diagram(diagram_path)
    try:
        W = enumerate_group(d, cutoff)
    except DivergedAtCutoff as exc:
        click.echo(f"indeterminate: more than {exc.count} elements")
        raise Outcome(2)
    longest = W.length[W.longest]
    data = {"order": W.order, "reflections": len(W.reflections), "longest": longest}
    oracle = matrix_oracle(d, cutoff)
    agree = oracle.get("order") == W.order and oracle.get("reflections") == len(W.reflections)
    data["oracle"] = "agree" if agree else f"disagree {oracle}"
    _emit(fmt, [f"order={W.order} reflections={len(W.reflections)} longest={longest}",
                f"oracle={data['oracle']}"], data)
    _finish(Verdict.holds() if agree else Verdict.fails(oracle))


# ---------------------------------------------------------------- arrangement


@cli.group()
def arrangement():
    """Reflection arrangements, dual and Salvetti complexes."""


def _sigma(diagram_path):
    from .arrangement import reflection_arrangement
    from .coxeter import enumerate_group

    return reflection_arrangement(enumerate_group(_diagram(diagram_path)))


def _counts(sigma) -> list:
    top = max(sigma.dim.values())
    return [len(sigma.cells_of_dim(d)) for d in range(top + 1)]


@arrangement.command("build")
@click.option("--diagram", "diagram_path", required=True)
@fmt_option
def arrangement_build(diagram_path, fmt):
    arr, sigma = _sigma(diagram_path)
    counts = _counts(sigma)
    _emit(fmt, [f"hyperplanes={len(arr.hyperplanes)} cells={counts}"],
          {"hyperplanes": len(arr.hyperplanes), "cells": counts})
    _finish(Verdict.holds())


@arrangement.command("salvetti")
@click.option("--diagram", "diagram_path", required=True)
@fmt_option
def arrangement_salvetti(diagram_path, fmt):
    _, sigma = _sigma(diagram_path)
    counts = sigma.salvetti().counts()
    _emit(fmt, [f"salvetti cells={counts}"], {"cells": counts})
    _finish(Verdict.holds())


@arrangement.command("decone")
@click.option("--diagram", "diagram_path", required=True)
@click.option("--hyperplane", default=0, show_default=True, type=click.IntRange(min=0))
@fmt_option
def arrangement_decone(diagram_path, hyperplane, fmt):
    arr, _ = _sigma(diagram_path)
    if hyperplane >= len(arr.hyperplanes):
        raise click.UsageError(f"hyperplane index must be below {len(arr.hyperplanes)}")
    sub = arr.decone(hyperplane).face_complex()
    counts = _counts(sub)
    _emit(fmt, [f"deconed hyperplanes={len(sub.arrangement.hyperplanes)} cells={counts}"], {"cells": counts})
    _finish(Verdict.holds())


@arrangement.command("collapse")
@click.option("--diagram", "diagram_path", required=True)
@click.option("--keep", required=True, help="comma separated hyperplane indices")
@fmt_option
def arrangement_collapse(diagram_path, keep, fmt):
    arr, sigma = _sigma(diagram_path)
    try:
        idx = sorted({int(x) for x in keep.split(",")})
    except ValueError as exc:
        raise click.UsageError("--keep takes integers such as 0,2") from exc
    if not idx or idx[-1] >= len(arr.hyperplanes) or idx[0] < 0:
        raise click.UsageError(f"indices must lie in 0..{len(arr.hyperplanes) - 1}")
    sub, kappa = sigma.collapse(idx)
    images_ok = all(kappa(c) in sub.dim for c in sigma.cells)
    counts = _counts(sub)
    _emit(fmt, [f"collapsed cells={counts} cellular={'yes' if images_ok else 'no'}"],
          {"cells": counts, "cellular": images_ok})
    _finish(Verdict.holds() if images_ok else Verdict.fails(None))


# ---------------------------------------------------------------- artin


@cli.group()
def artin():
    """Artin groups and balls in Artin complexes."""


def _types(spec):
    return None if not spec else [t for t in spec.split(",") if t]


@artin.command("ball")
@click.option("--diagram", "diagram_path", required=True)
@click.option("--radius", default=2, show_default=True, type=click.IntRange(min=0))
@click.option("--types", "types_spec", default="", help="comma separated vertex types")
@click.option("--out", "out_path", default=None, help="write the ball in the exchange format")
@fmt_option
def artin_ball_cmd(diagram_path, radius, types_spec, out_path, fmt):
    from .artin_complex import artin_ball
    from .complexes import records_to_text

    ball = artin_ball(_diagram(diagram_path), _types(types_spec), radius)
    if out_path:
        Path(out_path).write_text(records_to_text(ball.exchange_records()))
    _emit(fmt, [f"vertices={len(ball.vertices)} edges={len(ball.edges)}"],
          {"vertices": len(ball.vertices), "edges": len(ball.edges)})
    _finish(Verdict.holds())


@artin.command("girth")
@click.option("--diagram", "diagram_path", required=True)
@click.option("--radius", default=3, show_default=True, type=click.IntRange(min=1))
@click.option("--types", "types_spec", default="")
@click.option("--at-least", "bound", default=None, type=int, help="assert girth >= this value")
@fmt_option
def artin_girth(diagram_path, radius, types_spec, bound, fmt):
    from .artin_complex import artin_ball

    ball = artin_ball(_diagram(diagram_path), _types(types_spec), radius)
    g = ball.girth()
    text = "inf" if g == float("inf") else str(g)
    _emit(fmt, [f"girth={text} radius={radius}"], {"girth": text, "radius": radius})
    if bound is None:
        _finish(Verdict.holds())
    _finish(Verdict.holds() if g >= bound else Verdict.fails(g))


@artin.command("nf")
@click.option("--diagram", "diagram_path", required=True)
@click.option("--word", required=True, help='letters separated by spaces; "a^-1" or "A" for inverses')
@fmt_option
def artin_nf(diagram_path, word, fmt):
    from .garside import NotSpherical, artin_group, parse_word

    d = _diagram(diagram_path)
    try:
        G = artin_group(d)
        g = G.from_word(parse_word(word, d))
    except NotSpherical as exc:
        raise click.UsageError(str(exc)) from exc
    except (ValueError, KeyError) as exc:
        raise click.UsageError(f"cannot parse word: {exc}") from exc
    _emit(fmt, [G.format(g)], {"delta_power": g.delta_power, "simples": [G.W.name(u) for u in g.simples]})
    _finish(Verdict.holds())


# ---------------------------------------------------------------- 353 checks


@cli.group()
def check353():
    """Axiom suites for 353 square and simplicial complexes."""


def _square(path):
    from .square353 import InvalidSquareComplex, SquareComplex

    try:
        return SquareComplex.from_text(_read(path))
    except (InvalidSquareComplex, IndexError) as exc:
        raise click.UsageError(f"{path}: {exc}") from exc


@check353.command("square")
@click.option("--in", "in_path", required=True)
@click.option("--budget", default=100_000, show_default=True, type=click.IntRange(min=1))
@fmt_option
def check_square(in_path, budget, fmt):
    from .square353 import check_axioms, simply_connected, thickening

    X = _square(in_path)
    verdicts = {"simply_connected": simply_connected(X)}
    verdicts.update({f"axiom{k}": v for k, v in check_axioms(X, budget).items()})
    th = thickening(X)
    info = {"wide": th.wide, "stable": th.stable}
    _emit(fmt, _verdict_lines(verdicts) + _verdict_lines(info),
          {k: v.status for k, v in {**verdicts, **info}.items()})
    _finish(combine(verdicts.values()))


@check353.command("simplicial")
@click.option("--in", "in_path", required=True)
@click.option("--budget", default=1_000_000, show_default=True, type=click.IntRange(min=1))
@fmt_option
def check_simplicial(in_path, budget, fmt):
    from .simplicial353 import check_353_simplicial, typed_complex_from_text

    try:
        cx = typed_complex_from_text(_read(in_path))
    except ValueError as exc:
        raise click.UsageError(f"{in_path}: {exc}") from exc
    rep = check_353_simplicial(cx, budget)
    _emit(fmt, _verdict_lines(rep), {k: v.status for k, v in rep.items()})
    _finish(combine(v for k, v in rep.items() if k not in ("wide", "non_degenerate")))


@check353.command("contract")
@click.option("--in", "in_path", required=True)
@click.option("--base", default=None)
@click.option("--allow-narrow", is_flag=True, help="do not require wideness")
@fmt_option
def check_contract(in_path, base, allow_narrow, fmt):
    from .square353 import FailureReport, contract_by_peeling, thickening

    X = _square(in_path)
    if base is not None and base not in X.vertices:
        raise click.UsageError(f"unknown base vertex {base}")
    try:
        trace = contract_by_peeling(X, base, require_wide=not allow_narrow)
    except FailureReport as exc:
        _emit(fmt, [f"failed at {exc.stage}: {exc.witness}"], {"stage": exc.stage, "witness": exc.witness})
        raise Outcome(1)
    replay = trace.replay(thickening(X).complex)
    collapses = sum(1 for s in trace.steps if s.kind == "collapse")
    stars = len(trace.steps) - collapses
    _emit(fmt, [f"base={trace.base} layers={len(trace.layers)} collapses={collapses} star_removals={stars}",
                f"homology point at every stage; replay={'ok' if replay else 'FAILED'}"],
          {"base": trace.base, "collapses": collapses, "stars": stars, "replay": replay})
    _finish(Verdict.holds() if replay else Verdict.fails("replay"))


# ---------------------------------------------------------------- bestvina


@cli.group()
def bestvina():
    """B-geodesics and B-convexity on the triangular lattice."""


def _window(radius, reverse):
    from .bestvina import a2_window

    X = a2_window(radius)
    return X.reversed() if reverse else X


@bestvina.command("geodesic")
@click.option("--window", "radius", default=6, show_default=True, type=click.IntRange(min=1))
@click.option("--from", "src", required=True, help="vertex name such as v0_0")
@click.option("--to", "dst", required=True)
@click.option("--fuel", default=10_000, show_default=True, type=click.IntRange(min=1))
@click.option("--reverse", is_flag=True, help="use the reversed cyclic order")
@fmt_option
def bestvina_geodesic(radius, src, dst, fuel, reverse, fmt):
    from .bestvina import FuelExhausted, WindowTooSmall, b_geodesic, local_criterion

    X = _window(radius, reverse)
    for v in (src, dst):
        if v not in X.complex.types:
            raise click.UsageError(f"unknown vertex {v}")
    try:
        path = b_geodesic(X, src, dst, fuel)
    except (FuelExhausted, WindowTooSmall) as exc:
        click.echo(f"indeterminate: {exc}")
        raise Outcome(2)
    ok = local_criterion(X, path)
    _emit(fmt, [" ".join(path), f"length={len(path) - 1} orientation={X.order} criterion={'ok' if ok else 'FAILED'}"],
          {"path": path, "orientation": X.order, "criterion": ok})
    _finish(Verdict.holds() if ok else Verdict.fails(path))


cli.add_command(bestvina_geodesic, "bgeodesic")


@bestvina.command("convexity")
@click.option("--window", "radius", default=6, show_default=True, type=click.IntRange(min=1))
@click.option("--subset", "subset_path", default=None, help="file with one vertex name per line")
@click.option("--half-plane", "half", default=None, help="DIRECTION:OFFSET, direction 0..5")
@click.option("--reverse", is_flag=True)
@fmt_option
def bestvina_convexity(radius, subset_path, half, reverse, fmt):
    from .bestvina import check_convexity_consequences, half_plane, locally_b_convex

    X = _window(radius, reverse)
    if (subset_path is None) == (half is None):
        raise click.UsageError("give exactly one of --subset and --half-plane")
    if half is not None:
        try:
            d, off = (int(x) for x in half.split(":"))
        except ValueError as exc:
            raise click.UsageError("--half-plane takes DIRECTION:OFFSET") from exc
        Y = half_plane(X, d, off)
    else:
        Y = {line.strip() for line in _read(subset_path).splitlines() if line.strip()}
        unknown = Y - set(X.complex.types)
        if unknown:
            raise click.UsageError(f"unknown vertices {sorted(unknown)[:3]}")
    v = locally_b_convex(X, Y)
    lines = [f"locally_b_convex: {v.status} orientation={X.order}" + (f" witness={v.witness}" if v.witness else "")]
    if v:
        rep = check_convexity_consequences(X, Y)
        lines.append(f"geodesics_in_Y: {rep.geodesics.status}")
        v = rep.geodesics
    _emit(fmt, lines, {"verdict": v.status, "witness": v.witness})
    _finish(v)


# ---------------------------------------------------------------- Gauss-Bonnet and graphs


@cli.group()
def gb():
    """Combinatorial Gauss-Bonnet audits."""


def _pi(x: Fraction) -> str:
    if x == 0:
        return "0"
    if x == 1:
        return "pi"
    if x == -1:
        return "-pi"
    return f"{x}pi"


@gb.command("audit")
@click.option("--diagram-file", "path", required=True)
@click.option("--angles", type=click.Choice(["right", "uniform", "random"]), default="uniform")
@click.option("--seed", default=0, show_default=True)
@click.option("--convention", type=click.Choice(["standard", "components"]), default="standard")
@fmt_option
def gb_audit(path, angles, seed, convention, fmt):
    from .discs import AngleSumViolation, DiscDiagram, InvalidDiagram, gauss_bonnet, random_angles, uniform_angles

    try:
        d = DiscDiagram.from_text(_read(path))
    except (InvalidDiagram, ValueError) as exc:
        raise click.UsageError(f"{path}: {exc}") from exc
    if angles == "right" and any(len(f) != 4 for f in d.faces):
        raise click.UsageError("--angles right needs every face to be a square")
    table = random_angles(d, random.Random(seed)) if angles == "random" else uniform_angles(d)
    try:
        rep = gauss_bonnet(d, table, convention)
    except AngleSumViolation as exc:
        click.echo(f"angle sum violated on face {exc.face}: {_pi(exc.total)}")
        raise Outcome(1)
    ok = rep.total == 2
    lines = [f"vertex {v}: {_pi(k)}" for v, k in sorted(rep.per_vertex.items(), key=lambda kv: repr(kv[0]))]
    lines.append(f"total={_pi(rep.total)} {'OK' if ok else 'MISMATCH'}")
    _emit(fmt, lines, {"total": str(rep.total), "ok": ok})
    _finish(Verdict.holds() if ok else Verdict.fails(rep.total))


@cli.group()
def graph():
    """Graph utilities."""


@graph.command("classify")
@click.option("--in", "in_path", required=True, help="edge list: one 'u v' per line")
@fmt_option
def graph_classify(in_path, fmt):
    from .diagram import PreconditionViolated, SimpleGraph, classify_triangle_free

    verts, edges = set(), []
    for raw in _read(in_path).splitlines():
        parts = raw.split("#", 1)[0].split()
        if not parts:
            continue
        if len(parts) == 1:
            verts.add(parts[0])
        elif len(parts) == 2:
            verts.update(parts)
            edges.append(tuple(parts))
        else:
            raise click.UsageError(f"cannot parse {raw!r}")
    g = SimpleGraph.from_edges(sorted(verts), edges)
    try:
        tag, phi = classify_triangle_free(g)
    except PreconditionViolated as exc:
        _emit(fmt, [f"hypothesis fails: {exc.hypothesis}"], {"hypothesis": exc.hypothesis})
        raise Outcome(1)
    _emit(fmt, [f"class={tag}", "map " + " ".join(f"{k}->{v}" for k, v in sorted(phi.items()))],
          {"class": tag, "map": phi})
    _finish(Verdict.holds())


def main(argv=None) -> int:
    try:
        cli.main(args=argv, prog_name="artin353", standalone_mode=False)
    except Outcome as out:
        return out.code
    except click.exceptions.Abort:
        return USAGE
    except click.UsageError as exc:
        exc.show()
        return USAGE
    except click.ClickException as exc:
        exc.show()
        return USAGE
    return 0


if __name__ == "__main__":
    sys.exit(main())
