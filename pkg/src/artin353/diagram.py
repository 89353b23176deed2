"""Coxeter diagrams and small simple-graph utilities.

A diagram stores a label for every unordered pair of distinct generators.
Label 2 means the generators commute and there is no edge; ``INF`` is the
explicit infinite label.
"""

from __future__ import annotations

import hashlib
import itertools
import math
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Mapping

INF = math.inf


class PreconditionViolated(ValueError):
    """Raised when an input graph does not satisfy a stated hypothesis."""

    def __init__(self, hypothesis: str):
        super().__init__(hypothesis)
        self.hypothesis = hypothesis


# ---------------------------------------------------------------- graphs


@dataclass(frozen=True)
class SimpleGraph:
    vertices: tuple
    edges: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        vs = set(self.vertices)
        if len(vs) != len(self.vertices):
            raise ValueError("repeated vertex")
        clean = set()
        for e in self.edges:
            e = frozenset(e)
            if len(e) != 2:
                raise ValueError(f"loop or malformed edge {set(e)}")
            if not e <= vs:
                raise ValueError(f"edge {set(e)} leaves the vertex set")
            clean.add(e)
        object.__setattr__(self, "edges", frozenset(clean))

    @classmethod
    def from_edges(cls, vertices: Iterable, edges: Iterable) -> "SimpleGraph":
        return cls(tuple(vertices), frozenset(frozenset(e) for e in edges))

    def adjacency(self) -> dict:
        adj = {v: set() for v in self.vertices}
        for e in self.edges:
            u, v = tuple(e)
            adj[u].add(v)
            adj[v].add(u)
        return adj

    def has_edge(self, u, v) -> bool:
        return frozenset((u, v)) in self.edges

    def induced(self, subset: Iterable) -> "SimpleGraph":
        keep = [v for v in self.vertices if v in set(subset)]
        ks = set(keep)
        return SimpleGraph(tuple(keep), frozenset(e for e in self.edges if e <= ks))


def complement(g: SimpleGraph) -> SimpleGraph:
    pairs = (frozenset(p) for p in itertools.combinations(g.vertices, 2))
    return SimpleGraph(g.vertices, frozenset(p for p in pairs if p not in g.edges))


def cycle_graph(n: int) -> SimpleGraph:
    return SimpleGraph.from_edges(range(n), [(i, (i + 1) % n) for i in range(n)])


def complete_bipartite(k: int, l: int, minus: bool = False) -> SimpleGraph:
    """K_{k,l} on parts {0..k-1}, {k..k+l-1}; ``minus`` drops the edge (0, k)."""
    edges = [(i, k + j) for i in range(k) for j in range(l)]
    if minus:
        edges.remove((0, k))
    return SimpleGraph.from_edges(range(k + l), edges)


def shortest_cycle(g: SimpleGraph) -> list | None:
    """A shortest embedded cycle as a vertex list, or None for a forest."""
    adj = g.adjacency()
    best = None
    for root in g.vertices:
        parent = {root: None}
        depth = {root: 0}
        queue = deque([root])
        while queue:
            u = queue.popleft()
            if best is not None and 2 * depth[u] + 1 >= len(best):
                break
            for v in sorted(adj[u], key=g.vertices.index):
                if v not in depth:
                    depth[v] = depth[u] + 1
                    parent[v] = u
                    queue.append(v)
                elif parent[u] != v:
                    length = depth[u] + depth[v] + 1
                    if best is None or length < len(best):
                        cyc = _close_cycle(parent, u, v)
                        if cyc is not None:
                            best = cyc
    return best


def _close_cycle(parent, u, v):
    pu, pv = [u], [v]
    while parent[pu[-1]] is not None:
        pu.append(parent[pu[-1]])
    while parent[pv[-1]] is not None:
        pv.append(parent[pv[-1]])
    # strip the common tail towards the root
    while len(pu) > 1 and len(pv) > 1 and pu[-2] == pv[-2]:
        pu.pop()
        pv.pop()
    if pu[-1] != pv[-1]:
        return None
    cyc = pu + pv[-2::-1]
    return cyc if len(set(cyc)) == len(cyc) and len(cyc) >= 3 else None


def girth(g: SimpleGraph) -> float:
    """Length of a shortest embedded cycle; ``math.inf`` for forests."""
    cyc = shortest_cycle(g)
    return INF if cyc is None else len(cyc)


def has_triangle(g: SimpleGraph) -> bool:
    adj = g.adjacency()
    return any(adj[u] & adj[v] for u, v in map(tuple, g.edges))


def find_embedded_c4(g: SimpleGraph) -> tuple | None:
    """A 4-cycle subgraph (not necessarily induced) as (v0, v1, v2, v3)."""
    adj = g.adjacency()
    for u, w in itertools.combinations(g.vertices, 2):
        common = sorted(adj[u] & adj[w], key=g.vertices.index)
        if len(common) >= 2:
            return (u, common[0], w, common[1])
    return None


def is_isomorphism(g: SimpleGraph, h: SimpleGraph, phi: Mapping) -> bool:
    if len(g.vertices) != len(h.vertices) or len(g.edges) != len(h.edges):
        return False
    if sorted(map(repr, phi.values())) != sorted(map(repr, h.vertices)):
        return False
    return all(frozenset(phi[x] for x in e) in h.edges for e in g.edges)


def least_isomorphism(g: SimpleGraph, h: SimpleGraph) -> dict | None:
    """Lexicographically least relabelling g -> h (by images of g's vertices)."""
    if len(g.vertices) != len(h.vertices) or len(g.edges) != len(h.edges):
        return None
    gdeg = {v: len(n) for v, n in g.adjacency().items()}
    hdeg = {v: len(n) for v, n in h.adjacency().items()}
    if sorted(gdeg.values()) != sorted(hdeg.values()):
        return None
    for perm in itertools.permutations(h.vertices):
        phi = dict(zip(g.vertices, perm))
        if any(gdeg[x] != hdeg[phi[x]] for x in g.vertices):
            continue
        if is_isomorphism(g, h, phi):
            return phi
    return None


TEMPLATES = {
    "FiveCycle": cycle_graph(5),
    "K23": complete_bipartite(2, 3),
    "K23minus": complete_bipartite(2, 3, minus=True),
    "K33": complete_bipartite(3, 3),
    "K33minus": complete_bipartite(3, 3, minus=True),
}


def check_triangle_free_hypotheses(g: SimpleGraph) -> None:
    if len(g.vertices) < 5:
        raise PreconditionViolated("fewer than 5 vertices")
    adj = g.adjacency()
    if any(not n for n in adj.values()):
        raise PreconditionViolated("isolated vertex")
    if has_triangle(g):
        raise PreconditionViolated("embedded 3-cycle")
    if find_embedded_c4(complement(g)) is not None:
        raise PreconditionViolated("complement has embedded 4-cycle")


def classify_triangle_free(g: SimpleGraph) -> tuple[str, dict]:
    """Identify g among the five graphs allowed under the triangle-free hypotheses.

    Returns ``(tag, relabelling)`` where the relabelling maps g's vertices to
    the template's vertices.  If g satisfies the hypotheses but matches no
    template, a RuntimeError is raised (the classification would then be incomplete).
    """
    check_triangle_free_hypotheses(g)
    for tag, template in TEMPLATES.items():
        phi = least_isomorphism(g, template)
        if phi is not None:
            return tag, phi
    raise RuntimeError(f"graph satisfies the hypotheses but is unclassified: {sorted(map(sorted, g.edges))}")


# ---------------------------------------------------------------- diagrams


@dataclass(frozen=True)
class CoxeterDiagram:
    vertices: tuple
    labels: Mapping = field(default_factory=dict)

    def __post_init__(self):
        vs = tuple(self.vertices)
        if len(set(vs)) != len(vs):
            raise ValueError("repeated generator")
        full = {}
        for u, v in itertools.combinations(vs, 2):
            full[frozenset((u, v))] = 2
        for pair, m in dict(self.labels).items():
            pair = frozenset(pair)
            if len(pair) != 2 or not pair <= set(vs):
                raise ValueError(f"bad label pair {set(pair)}")
            if m != INF and (int(m) != m or m < 2):
                raise ValueError(f"label {m} must be an integer >= 2 or INF")
            full[pair] = INF if m == INF else int(m)
        object.__setattr__(self, "vertices", vs)
        object.__setattr__(self, "labels", full)

    @classmethod
    def linear(cls, names: Iterable[str], labels: Iterable) -> "CoxeterDiagram":
        names = tuple(names)
        return cls(names, {frozenset(p): m for p, m in zip(zip(names, names[1:]), labels)})

    def __hash__(self):
        return hash((self.vertices, tuple(sorted((tuple(sorted(p)), m) for p, m in self.labels.items()))))

    @property
    def rank(self) -> int:
        return len(self.vertices)

    def m(self, s, t) -> float:
        if s == t:
            return 1
        return self.labels[frozenset((s, t))]

    def index(self, s) -> int:
        return self.vertices.index(s)

    def graph(self) -> SimpleGraph:
        """The underlying graph: edges are the labels >= 3."""
        return SimpleGraph(self.vertices, frozenset(p for p, m in self.labels.items() if m >= 3))

    def restrict(self, subset: Iterable) -> "CoxeterDiagram":
        keep = tuple(v for v in self.vertices if v in set(subset))
        return CoxeterDiagram(keep, {p: m for p, m in self.labels.items() if p <= set(keep)})

    def components(self) -> list[tuple]:
        adj = self.graph().adjacency()
        seen, out = set(), []
        for v in self.vertices:
            if v in seen:
                continue
            comp, stack = [], [v]
            seen.add(v)
            while stack:
                x = stack.pop()
                comp.append(x)
                for y in adj[x]:
                    if y not in seen:
                        seen.add(y)
                        stack.append(y)
            out.append(tuple(sorted(comp, key=self.vertices.index)))
        return out

    def to_text(self) -> str:
        lines = [f"vertex {v}" for v in self.vertices]
        for u, v in itertools.combinations(self.vertices, 2):
            m = self.m(u, v)
            if m >= 3:
                lines.append(f"edge {u} {v} {'inf' if m == INF else m}")
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> "CoxeterDiagram":
        verts, labels = [], {}
        for lineno, raw in enumerate(text.splitlines(), 1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            parts = line.split()
            if parts[0] == "vertex" and len(parts) == 2:
                verts.append(parts[1])
            elif parts[0] == "edge" and len(parts) == 4:
                m = INF if parts[3] in ("inf", "∞") else int(parts[3])
                labels[frozenset(parts[1:3])] = m
            else:
                raise ValueError(f"line {lineno}: cannot parse {raw!r}")
        return cls(tuple(verts), labels)

    def digest(self) -> str:
        return hashlib.sha256(self.to_text().encode()).hexdigest()[:16]


def _separated_pairs(g: SimpleGraph, x) -> set:
    rest = [v for v in g.vertices if v != x]
    sub = g.induced(rest)
    adj = sub.adjacency()
    comp = {}
    for v in rest:
        if v in comp:
            continue
        comp[v] = v
        stack = [v]
        while stack:
            y = stack.pop()
            for z in adj[y]:
                if z not in comp:
                    comp[z] = v
                    stack.append(z)
    return {frozenset(p) for p in itertools.combinations(rest, 2) if comp[p[0]] != comp[p[1]]}


def is_admissible_subdiagram(diagram: CoxeterDiagram, subset: Iterable) -> bool:
    sub = set(subset)
    g = diagram.graph()
    gs = g.induced(sub)
    for x in gs.vertices:
        inside = _separated_pairs(gs, x)
        if not inside:
            continue
        outside = _separated_pairs(g, x)
        if not inside <= outside:
            return False
    return True


# ---------------------------------------------------------------- spherical types


def _path_order(comp: tuple, diagram: CoxeterDiagram) -> list | None:
    g = diagram.graph().induced(comp)
    adj = g.adjacency()
    if len(g.edges) != len(comp) - 1 or any(len(n) > 2 for n in adj.values()):
        return None
    ends = [v for v in comp if len(adj[v]) <= 1]
    start = ends[0]
    order, prev = [start], None
    while len(order) < len(comp):
        nxt = [y for y in adj[order[-1]] if y != prev]
        prev = order[-1]
        order.append(nxt[0])
    return order


def _component_type(comp: tuple, diagram: CoxeterDiagram) -> str | None:
    n = len(comp)
    if n == 1:
        return "A1"
    if n == 2:
        m = diagram.m(*comp)
        return None if m == INF else f"I2({m})"
    if any(diagram.m(u, v) == INF for u, v in itertools.combinations(comp, 2)):
        return None
    path = _path_order(comp, diagram)
    if path is not None:
        ms = [diagram.m(u, v) for u, v in zip(path, path[1:])]
        if all(m == 3 for m in ms):
            return f"A{n}"
        if ms[-1] != 3 and ms[0] == 3:
            ms = ms[::-1]
        big = [m for m in ms if m != 3]
        if len(big) == 1:
            m = big[0]
            at_end = ms[0] == m
            if m == 4 and at_end:
                return f"B{n}"
            if m == 5 and at_end and n in (3, 4):
                return f"H{n}"
            if m == 4 and n == 4 and ms[1] == 4:
                return "F4"
        return None
    # branched trees: D_n and E_6..8
    g = diagram.graph().induced(comp)
    adj = g.adjacency()
    if len(g.edges) != n - 1 or any(diagram.m(*tuple(e)) != 3 for e in g.edges):
        return None
    branch = [v for v in comp if len(adj[v]) >= 3]
    if len(branch) != 1 or len(adj[branch[0]]) != 3:
        return None
    arms = []
    for start in adj[branch[0]]:
        length, prev, cur = 1, branch[0], start
        while True:
            nxt = [y for y in adj[cur] if y != prev]
            if not nxt:
                break
            prev, cur = cur, nxt[0]
            length += 1
        arms.append(length)
    arms.sort()
    if arms[0] == 1 and arms[1] == 1:
        return f"D{n}"
    if arms[0] == 1 and arms[1] == 2 and arms[2] in (2, 3, 4):
        return f"E{n}"
    return None


def spherical_type(diagram: CoxeterDiagram) -> str | None:
    """Finite-type tag such as ``H3`` or ``A1xI2(5)``, or None if non-spherical."""
    tags = []
    for comp in diagram.components():
        t = _component_type(comp, diagram)
        if t is None:
            return None
        tags.append(t)
    return "x".join(tags) if tags else "trivial"


def is_spherical(diagram: CoxeterDiagram) -> bool:
    return spherical_type(diagram) is not None


def artin_dimension(diagram: CoxeterDiagram) -> int:
    """Largest size of a spherical subset of generators."""
    best = 0
    for k in range(1, diagram.rank + 1):
        if any(is_spherical(diagram.restrict(c)) for c in itertools.combinations(diagram.vertices, k)):
            best = k
    return best
