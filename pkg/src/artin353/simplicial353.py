"""Simplicial complexes of type {a, b, c, d}: the four 353 conditions,
wideness, non-degeneracy, the associated square complex and subdivisions."""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import networkx as nx

from .complexes import (SimplicialComplex, TypedComplex, records_to_typed_complex, simplicial_presentation,
                        text_to_records)
from .poset import HypothesisFailed, TypedOrderView, flag_checks, is_bowtie_free, is_partial_order
from .square353 import SquareComplex, check_axioms
from .verdict import Verdict, combine

TYPES = ("a", "b", "c", "d")


class BudgetExceeded(RuntimeError):
    pass


def order_view(cx: TypedComplex, order=TYPES, certified=None) -> TypedOrderView:
    return TypedOrderView(cx, tuple(order), frozenset(certified) if certified is not None else None)


def complex_from_simplices(simplices, types=None) -> TypedComplex:
    """Vertex names carry their type as first letter unless ``types`` is given."""
    simplices = [tuple(s) for s in simplices]
    if types is None:
        types = {v: v[0] for s in simplices for v in s}
    return TypedComplex.from_simplices(types, simplices)


def typed_complex_from_text(text: str) -> TypedComplex:
    """Exchange-format cells, or lines ``simplex v1 v2 ...`` (type = first letter)
    with optional ``type v t`` overrides."""
    body = [ln.split("#", 1)[0].split() for ln in text.splitlines()]
    body = [p for p in body if p]
    if not body:
        raise ValueError("empty complex")
    if body[0][0] == "cell":
        cx = records_to_typed_complex(text_to_records(text))
        if any(t is None for t in cx.types.values()):
            raise ValueError("every vertex needs a type= attribute")
        return cx
    simplices, types = [], {}
    for parts in body:
        if parts[0] == "simplex" and len(parts) >= 2:
            simplices.append(tuple(parts[1:]))
        elif parts[0] == "type" and len(parts) == 3:
            types[parts[1]] = parts[2]
        else:
            raise ValueError(f"cannot parse {' '.join(parts)!r}")
    for s in simplices:
        for v in s:
            types.setdefault(v, v[0])
    return complex_from_simplices(simplices, types)


def _of_type(cx: TypedComplex, t) -> list:
    return sorted((v for v, s in cx.types.items() if s == t), key=repr)


# ---------------------------------------------------------------- cycles in links


def typed_induced_cycles(g: nx.Graph, types: dict, pattern, budget: list):
    """Induced (hence embedded) cycles x_0 .. x_{n-1} with type(x_i) = pattern[i].

    ``budget`` is a one-element list decremented per search node.
    """
    n = len(pattern)
    starts = sorted((v for v in g if types[v] == pattern[0]), key=repr)

    def dfs(path, used):
        budget[0] -= 1
        if budget[0] < 0:
            raise BudgetExceeded
        k = len(path)
        if k == n:
            if g.has_edge(path[-1], path[0]):
                yield tuple(path)
            return
        for w in sorted(g[path[-1]], key=repr):
            if w in used or types[w] != pattern[k]:
                continue
            inner = path[1:-1] if k == n - 1 else path[:-1]
            if any(g.has_edge(w, u) for u in inner):
                continue
            path.append(w)
            used.add(w)
            yield from dfs(path, used)
            path.pop()
            used.discard(w)

    for s in starts:
        yield from dfs([s], {s})


def _link_graph(cx: TypedComplex, v) -> nx.Graph:
    return cx.graph().subgraph(cx.neighbours(v))


def _condition3(cx: TypedComplex, budget: list) -> Verdict:
    for centre, pattern in (("d", "bcacacac"), ("a", "cbdbdbdb")):
        for v in _of_type(cx, centre):
            for cyc in typed_induced_cycles(_link_graph(cx, v), cx.types, pattern, budget):
                return Verdict.fails({"vertex": v, "cycle": cyc})
    return Verdict.holds()


def _condition4(cx: TypedComplex, budget: list) -> Verdict:
    # gamma = c1 b1 c2 a2 c3 b3 c4 b4 c5 a5, read from a5; the b-vertices need a common a
    for centre, pattern, hub in (("d", "acbcacbcbc", "b"), ("a", "dbcbdbcbcb", "c")):
        other = "a" if centre == "d" else "d"
        for v in _of_type(cx, centre):
            g = _link_graph(cx, v)
            for cyc in typed_induced_cycles(g, cx.types, pattern, budget):
                hubs = [x for x in cyc if cx.types[x] == hub]
                cands = set(g.nodes)
                for h in hubs:
                    cands &= set(g[h])
                if not any(cx.types[x] == other for x in cands):
                    return Verdict.fails({"vertex": v, "cycle": cyc})
    return Verdict.holds()


def check_353_simplicial(cx: TypedComplex, budget: int = 1_000_000) -> dict:
    out = {}
    pres = simplicial_presentation(cx).simplify()
    if not cx.is_connected():
        out["simply_connected"] = Verdict.fails(None, "not connected")
    elif pres.is_trivial():
        out["simply_connected"] = Verdict.holds()
    elif pres.abelian_invariants():
        out["simply_connected"] = Verdict.fails(pres.abelian_invariants(), "nontrivial abelianisation")
    else:
        out["simply_connected"] = Verdict.unknown(pres)
    out["1"] = is_partial_order(order_view(cx))
    checks = []
    for v in _of_type(cx, "d") + _of_type(cx, "a"):
        view = order_view(cx.typed_link(v))
        flag = "upward_flag" if cx.types[v] == "d" else "downward_flag"
        bf = is_bowtie_free(view)
        fl = flag_checks(view)[flag]
        for name, verdict in (("bowtie", bf), (flag, fl)):
            if verdict.failed:
                checks.append(Verdict.fails({"vertex": v, "property": name, "witness": verdict.witness}))
    out["2"] = combine(checks)
    box = [budget]
    for key, fn in (("3", _condition3), ("4", _condition4)):
        try:
            out[key] = fn(cx, box)
        except BudgetExceeded:
            out[key] = Verdict.unknown(note=f"cycle search exceeded {budget} steps")
    out["wide"] = wide(cx)
    out["non_degenerate"] = non_degenerate(cx)
    return out


def passes(report: dict) -> bool:
    return all(report[k] for k in ("simply_connected", "1", "2", "3", "4"))


def wide(cx: TypedComplex) -> Verdict:
    for v in _of_type(cx, "b") + _of_type(cx, "c"):
        nb = cx.neighbours(v)
        for t in ("a", "d"):
            if sum(1 for x in nb if cx.types[x] == t) < 2:
                return Verdict.fails({"vertex": v, "type": t})
    return Verdict.holds()


def non_degenerate(cx: TypedComplex) -> Verdict:
    for b in _of_type(cx, "b"):
        for c in sorted((x for x in cx.neighbours(b) if cx.types[x] == "c"), key=repr):
            nb, nc = cx.neighbours(b), cx.neighbours(c)
            if not any(cx.types[x] == "d" and x not in nc for x in nb):
                return Verdict.fails({"edge": (b, c), "missing": "d"})
            if not any(cx.types[x] == "a" and x not in nb for x in nc):
                return Verdict.fails({"edge": (b, c), "missing": "a"})
    return Verdict.holds()


# ---------------------------------------------------------------- square complex


def square_complex_of(cx: TypedComplex, require: bool = True) -> SquareComplex:
    """X^1 = subgraph induced on a- and d-vertices; squares = 4-cycles with an apex."""
    if require:
        report = check_353_simplicial(cx)
        bad = [k for k in ("simply_connected", "1", "2", "3", "4", "wide") if not report[k]]
        if bad:
            raise HypothesisFailed(f"conditions {bad} do not hold")
    A, D = _of_type(cx, "a"), _of_type(cx, "d")
    edges = [(a, d) for a in A for d in D if cx.adjacent(a, d)]
    squares = []
    for a1, a2 in itertools.combinations(A, 2):
        common = sorted(cx.neighbours(a1) & cx.neighbours(a2) & set(D), key=repr)
        for d1, d2 in itertools.combinations(common, 2):
            apex = cx.neighbours(a1) & cx.neighbours(a2) & cx.neighbours(d1) & cx.neighbours(d2)
            if apex:
                squares.append((a1, d1, a2, d2))
    return SquareComplex.build(A, D, edges, squares)


@dataclass
class PipelineReport:
    simplicial: dict
    square: SquareComplex | None
    axioms: dict | None

    @property
    def consistent(self) -> bool:
        """False exactly when a passing wide input produces a failing square complex."""
        if self.axioms is None:
            return True
        return all(v or v.indeterminate for v in self.axioms.values())


def pipeline(cx: TypedComplex) -> PipelineReport:
    rep = check_353_simplicial(cx)
    if not (passes(rep) and rep["wide"]):
        return PipelineReport(rep, None, None)
    X = square_complex_of(cx, require=False)
    return PipelineReport(rep, X, check_axioms(X))


# ---------------------------------------------------------------- subdivision


def subdivide(cx: TypedComplex, blocks) -> TypedComplex:
    """Cone every simplex whose type set is a whole block (of size >= 2) from its barycentre.

    Joins of such pieces are subdivided as joins.  The barycentre of a face
    of block B gets the type ``"".join(sorted(B))``.
    """
    blocks = [frozenset(b) for b in blocks]
    seen = set()
    for b in blocks:
        if not b or b & seen:
            raise ValueError(f"blocks must be nonempty and disjoint: {blocks}")
        seen |= b
    if seen != set(cx.types.values()):
        raise ValueError("blocks must cover the type set")
    big = [b for b in blocks if len(b) >= 2]
    types = dict(cx.types)
    out = []
    for m in cx.maximal():
        pieces = []
        for b in blocks:
            part = frozenset(v for v in m if cx.types[v] in b)
            if b in big and len(part) == len(b):
                bary = ("bary", tuple(sorted(part, key=repr)))
                types[bary] = "".join(sorted(b))
                pieces.append([(part - {v}) | {bary} for v in sorted(part, key=repr)])
            else:
                pieces.append([part])
        for combo in itertools.product(*pieces):
            out.append(frozenset().union(*combo))
    sub = SimplicialComplex(out)
    edges = [f for f in sub.faces if len(f) == 2]
    res = TypedComplex({v: types[v] for v in sub.vertices}, edges)
    if res.faces != sub.faces:
        # cones over boundaries of 3+ simplices are not flag; keep the explicit faces
        res.faces = sub.faces
    return res


# ---------------------------------------------------------------- fixtures


def four_tetrahedra() -> TypedComplex:
    return complex_from_simplices([("a1", "b", "c", "d1"), ("a1", "b", "c", "d2"),
                                   ("a2", "b", "c", "d1"), ("a2", "b", "c", "d2")])


def coned_grid(rows: int, cols: int) -> TypedComplex:
    """A grid of squares, each coned off by its own b-vertex."""
    name = {}
    for i in range(rows + 1):
        for j in range(cols + 1):
            name[(i, j)] = f"{'a' if (i + j) % 2 == 0 else 'd'}{i}_{j}"
    simplices = []
    for i in range(rows):
        for j in range(cols):
            b = f"b{i}_{j}"
            cyc = [name[(i, j)], name[(i, j + 1)], name[(i + 1, j + 1)], name[(i + 1, j)]]
            for u, v in zip(cyc, cyc[1:] + cyc[:1]):
                simplices.append((b, u, v))
    return complex_from_simplices(simplices)


def cone_over_cycle(apex: str, cycle) -> TypedComplex:
    cycle = list(cycle)
    return complex_from_simplices([(apex, u, v) for u, v in zip(cycle, cycle[1:] + cycle[:1])])


def condition3_violation() -> TypedComplex:
    return cone_over_cycle("d", ["a1", "c1", "a2", "c2", "a3", "c3", "b", "c4"])


def condition4_violation() -> TypedComplex:
    return cone_over_cycle("d", ["c1", "b1", "c2", "a2", "c3", "b3", "c4", "b4", "c5", "a5"])
