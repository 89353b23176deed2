"""Finite simplicial complexes: flag closure, homology, pi_1 and exchange format."""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Hashable, Iterable, Mapping

import networkx as nx


def _key(v):
    return (type(v).__name__, repr(v))


def sort_vertices(vs: Iterable) -> list:
    vs = list(vs)
    try:
        return sorted(vs)
    except TypeError:
        return sorted(vs, key=_key)


class SimplicialComplex:
    """A finite abstract simplicial complex stored as its full face set."""

    def __init__(self, simplices: Iterable[Iterable]):
        faces = set()
        for s in simplices:
            s = frozenset(s)
            if s in faces:
                continue
            stack = [s]
            while stack:
                t = stack.pop()
                if t in faces or not t:
                    continue
                faces.add(t)
                for v in t:
                    stack.append(t - {v})
        self.faces = frozenset(faces)

    @classmethod
    def flag(cls, vertices: Iterable, edges: Iterable) -> "SimplicialComplex":
        g = nx.Graph()
        g.add_nodes_from(vertices)
        g.add_edges_from(tuple(e) for e in edges)
        return cls(frozenset(c) for c in nx.find_cliques(g))

    @property
    def vertices(self) -> list:
        return sort_vertices(v for f in self.faces if len(f) == 1 for v in f)

    @property
    def dimension(self) -> int:
        return max((len(f) - 1 for f in self.faces), default=-1)

    def simplices(self, dim: int) -> list:
        out = [f for f in self.faces if len(f) == dim + 1]
        return sorted(out, key=lambda f: sort_vertices_key(f))

    def maximal(self) -> list:
        fs = self.faces
        out = [f for f in fs if not any(f < g for g in fs if len(g) == len(f) + 1)]
        return sorted(out, key=sort_vertices_key)

    def f_vector(self) -> list:
        return [len(self.simplices(d)) for d in range(self.dimension + 1)]

    def euler_characteristic(self) -> int:
        return sum((-1) ** d * n for d, n in enumerate(self.f_vector()))

    def graph(self) -> nx.Graph:
        g = nx.Graph()
        g.add_nodes_from(self.vertices)
        g.add_edges_from(tuple(f) for f in self.faces if len(f) == 2)
        return g

    def is_flag(self) -> bool:
        return all(frozenset(c) in self.faces for c in nx.find_cliques(self.graph()))

    def link(self, v) -> "SimplicialComplex":
        return SimplicialComplex(f - {v} for f in self.faces if v in f and len(f) > 1)

    def induced(self, subset: Iterable) -> "SimplicialComplex":
        keep = frozenset(subset)
        return SimplicialComplex(f for f in self.faces if f <= keep)

    def without(self, faces_to_drop: Iterable) -> "SimplicialComplex":
        drop = set(faces_to_drop)
        out = SimplicialComplex(())
        out.faces = frozenset(f for f in self.faces if f not in drop)
        return out

    def is_connected(self) -> bool:
        g = self.graph()
        return g.number_of_nodes() > 0 and nx.is_connected(g)

    # -- homology ---------------------------------------------------------

    def boundary_matrix(self, dim: int, rows=None, cols=None) -> list:
        rows = rows if rows is not None else self.simplices(dim - 1)
        cols = cols if cols is not None else self.simplices(dim)
        index = {f: i for i, f in enumerate(rows)}
        mat = [[0] * len(cols) for _ in rows]
        for j, f in enumerate(cols):
            ordered = sort_vertices(f)
            for k, v in enumerate(ordered):
                mat[index[f - {v}]][j] += -1 if k % 2 else 1
        return mat

    def homology(self, coefficients: str = "Z") -> "Homology":
        """Reduced-free reporting: betti[d] and torsion[d] for each degree."""
        top = self.dimension
        if top < 0:
            return Homology([], [])
        cells = [self.simplices(d) for d in range(top + 1)]
        ranks, torsion_of = [0] * (top + 2), [[] for _ in range(top + 2)]
        for d in range(1, top + 1):
            mat = self.boundary_matrix(d, cells[d - 1], cells[d])
            if coefficients == "Z":
                diag = smith_diagonal(mat)
                ranks[d] = len(diag)
                torsion_of[d - 1] = [x for x in diag if x > 1]
            elif coefficients in ("Z2", "GF2", "mod2"):
                ranks[d] = rank_mod2(mat)
            else:
                raise ValueError(f"unknown coefficients {coefficients!r}")
        betti = [len(cells[d]) - ranks[d] - ranks[d + 1] for d in range(top + 1)]
        return Homology(betti, [torsion_of[d] for d in range(top + 1)])


def sort_vertices_key(f):
    return tuple(_key(v) for v in sort_vertices(f))


@dataclass(frozen=True)
class Homology:
    betti: list
    torsion: list

    def is_point(self) -> bool:
        return self.betti[:1] == [1] and all(b == 0 for b in self.betti[1:]) and not any(self.torsion)

    def __str__(self):
        parts = []
        for d, b in enumerate(self.betti):
            t = "".join(f"+Z/{x}" for x in self.torsion[d])
            parts.append(f"H{d}=Z^{b}{t}")
        return " ".join(parts)


def smith_diagonal(matrix: list) -> list:
    """Non-zero invariant factors of an integer matrix (Smith normal form)."""
    a = [row[:] for row in matrix]
    m = len(a)
    n = len(a[0]) if m else 0
    diag = []
    r = 0
    for c in range(n):
        if r >= m:
            break
        while True:
            pivot = None
            for i in range(r, m):
                for j in range(c, n):
                    if a[i][j] and (pivot is None or abs(a[i][j]) < abs(a[pivot[0]][pivot[1]])):
                        pivot = (i, j)
                        if abs(a[i][j]) == 1:
                            break
                if pivot and abs(a[pivot[0]][pivot[1]]) == 1:
                    break
            if pivot is None:
                return diag
            i, j = pivot
            a[r], a[i] = a[i], a[r]
            for row in a:
                row[c], row[j] = row[j], row[c]
            p = a[r][c]
            clean = True
            for i in range(r + 1, m):
                if a[i][c]:
                    q = a[i][c] // p
                    if q:
                        ri, rr = a[i], a[r]
                        for j in range(c, n):
                            ri[j] -= q * rr[j]
                    if a[i][c]:
                        clean = False
            for j in range(c + 1, n):
                if a[r][j]:
                    q = a[r][j] // p
                    if q:
                        for i in range(r, m):
                            a[i][j] -= q * a[i][c]
                    if a[r][j]:
                        clean = False
            if not clean:
                continue
            # divisibility of the remaining block
            bad = None
            for i in range(r + 1, m):
                for j in range(c + 1, n):
                    if a[i][j] % p:
                        bad = i
                        break
                if bad is not None:
                    break
            if bad is not None:
                for j in range(c, n):
                    a[r][j] += a[bad][j]
                continue
            diag.append(abs(p))
            r += 1
            break
    return diag


def rank_mod2(matrix: list) -> int:
    rows = []
    for row in matrix:
        bits = 0
        for j, x in enumerate(row):
            if x % 2:
                bits |= 1 << j
        rows.append(bits)
    rank = 0
    for bit in range(len(matrix[0]) if matrix else 0):
        mask = 1 << bit
        pivot = next((k for k in range(rank, len(rows)) if rows[k] & mask), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        for k in range(len(rows)):
            if k != rank and rows[k] & mask:
                rows[k] ^= rows[rank]
        rank += 1
    return rank


# ---------------------------------------------------------------- pi_1


def _reduce(word: list) -> list:
    out = []
    for x in word:
        if out and out[-1] == -x:
            out.pop()
        else:
            out.append(x)
    while len(out) >= 2 and out[0] == -out[-1]:
        out = out[1:-1]
    return out


@dataclass
class Presentation:
    """Group presentation with generators 1..n; letters are +/- generator ids."""

    generators: set
    relators: list

    def simplify(self, max_length: int = 10_000) -> "Presentation":
        gens = set(self.generators)
        rels = [r for r in (_reduce(list(r)) for r in self.relators) if r]
        progress = True
        while progress and gens:
            progress = False
            rels.sort(key=len)
            for r in rels:
                counts = {}
                for x in r:
                    counts[abs(x)] = counts.get(abs(x), 0) + 1
                solo = [g for g, c in counts.items() if c == 1]
                if not solo:
                    continue
                g = min(solo, key=lambda y: (len(r), y))
                k = next(i for i, x in enumerate(r) if abs(x) == g)
                rot = r[k:] + r[:k]
                rest = rot[1:]
                # g * rest = 1 gives g = rest^-1; g^-1 * rest = 1 gives g = rest
                replacement = [-x for x in reversed(rest)] if rot[0] == g else rest
                new_rels = []
                too_long = False
                for other in rels:
                    if other is r:
                        continue
                    out = []
                    for x in other:
                        if x == g:
                            out.extend(replacement)
                        elif x == -g:
                            out.extend(-y for y in reversed(replacement))
                        else:
                            out.append(x)
                    out = _reduce(out)
                    if len(out) > max_length:
                        too_long = True
                        break
                    if out:
                        new_rels.append(out)
                if too_long:
                    continue
                gens.discard(g)
                rels = list({tuple(x) for x in new_rels})
                rels = [list(x) for x in rels]
                progress = True
                break
        return Presentation(gens, rels)

    def is_trivial(self) -> bool:
        return not self.simplify().generators

    def abelian_invariants(self) -> list:
        """Invariant factors of the abelianisation (0 entries denote Z)."""
        gens = sorted(self.generators)
        if not gens:
            return []
        idx = {g: i for i, g in enumerate(gens)}
        mat = []
        for r in self.relators:
            row = [0] * len(gens)
            for x in r:
                if abs(x) in idx:
                    row[idx[abs(x)]] += 1 if x > 0 else -1
            mat.append(row)
        diag = smith_diagonal(mat) if mat else []
        free = len(gens) - len(diag)
        return [d for d in diag if d > 1] + [0] * free


def edge_path_presentation(vertices: Iterable, edges: Iterable, two_cells: Iterable) -> Presentation:
    """pi_1 of a connected 2-complex given by oriented edges and boundary loops.

    ``two_cells`` are closed vertex sequences (v0, v1, ..., v0 omitted).
    """
    g = nx.Graph()
    vertices = sort_vertices(vertices)
    g.add_nodes_from(vertices)
    g.add_edges_from(tuple(e) for e in edges)
    if not vertices:
        return Presentation(set(), [])
    tree = set()
    for comp in nx.connected_components(g):
        root = sort_vertices(comp)[0]
        for u, v in nx.bfs_edges(g, root):
            tree.add(frozenset((u, v)))
    gen_of = {}
    for e in sorted((frozenset(e) for e in g.edges), key=sort_vertices_key):
        if e not in tree:
            gen_of[e] = len(gen_of) + 1
    order = {v: i for i, v in enumerate(vertices)}

    def letter(u, v):
        e = frozenset((u, v))
        if e in tree:
            return None
        k = gen_of[e]
        return k if order[u] < order[v] else -k

    rels = []
    for cyc in two_cells:
        cyc = list(cyc)
        word = []
        for u, v in zip(cyc, cyc[1:] + cyc[:1]):
            x = letter(u, v)
            if x is not None:
                word.append(x)
        rels.append(word)
    return Presentation(set(gen_of.values()), rels)


def simplicial_presentation(cx: SimplicialComplex) -> Presentation:
    return edge_path_presentation(
        cx.vertices,
        (tuple(f) for f in cx.faces if len(f) == 2),
        (sort_vertices(f) for f in cx.faces if len(f) == 3),
    )


# ---------------------------------------------------------------- typed complexes


class TypedComplex(SimplicialComplex):
    """Flag simplicial complex whose vertices carry types.

    Built from a 1-skeleton; simplices are the cliques.  Adjacent vertices
    must have distinct types.
    """

    def __init__(self, types: Mapping[Hashable, Hashable], edges: Iterable, check: bool = True):
        self.types = dict(types)
        g = nx.Graph()
        g.add_nodes_from(self.types)
        for e in edges:
            u, v = tuple(e)
            if check and self.types[u] == self.types[v]:
                raise ValueError(f"adjacent vertices {u!r}, {v!r} share type {self.types[u]!r}")
            g.add_edge(u, v)
        self._graph = g
        super().__init__(frozenset(c) for c in nx.find_cliques(g))

    @classmethod
    def from_simplices(cls, types: Mapping, simplices: Iterable[Iterable]) -> "TypedComplex":
        simplices = [frozenset(s) for s in simplices]
        edges = {frozenset((u, v)) for s in simplices for u in s for v in s if u != v}
        cx = cls(types, edges)
        given = SimplicialComplex(simplices)
        if given.faces != cx.faces:
            raise ValueError("simplices do not form a flag complex")
        return cx

    def graph(self) -> nx.Graph:
        return self._graph

    def adjacent(self, u, v) -> bool:
        return self._graph.has_edge(u, v)

    def neighbours(self, v) -> set:
        return set(self._graph[v])

    def typed_link(self, v) -> "TypedComplex":
        nb = self.neighbours(v)
        return self.typed_induced(nb)

    def typed_induced(self, subset: Iterable) -> "TypedComplex":
        keep = set(subset)
        sub = self._graph.subgraph(keep)
        return TypedComplex({x: self.types[x] for x in keep}, sub.edges, check=False)


# ---------------------------------------------------------------- exchange format


def exchange_records(cx: SimplicialComplex, attributes: Mapping | None = None) -> list:
    """Cells as dicts with ``dim``, ``id``, ``boundary`` and ``attrs``."""
    attributes = attributes or {}
    records, ids = [], {}
    for d in range(cx.dimension + 1):
        for f in cx.simplices(d):
            ids[f] = len(ids)
            boundary = [] if d == 0 else [ids[f - {v}] for v in sort_vertices(f)]
            rec = {"dim": d, "id": ids[f], "boundary": boundary, "attrs": {}}
            if d == 0:
                (v,) = f
                rec["attrs"]["name"] = str(v)
                for k, val in attributes.get(v, {}).items():
                    rec["attrs"][k] = val
            records.append(rec)
    return records


def records_to_text(records: list) -> str:
    lines = ["# cells: dim id boundary attrs"]
    for rec in sorted(records, key=lambda r: (r["dim"], r["id"])):
        bd = ",".join(map(str, rec["boundary"])) or "-"
        attrs = " ".join(f"{k}={_fmt(v)}" for k, v in sorted(rec["attrs"].items()))
        lines.append(f"cell {rec['dim']} {rec['id']} {bd} {attrs}".rstrip())
    return "\n".join(lines) + "\n"


def _fmt(v):
    if isinstance(v, (list, tuple)):
        return ",".join(map(str, v))
    return str(v).replace(" ", "_")


def records_to_json(records: list) -> str:
    return json.dumps({"cells": sorted(records, key=lambda r: (r["dim"], r["id"]))}, indent=1, sort_keys=True)


def text_to_records(text: str) -> list:
    out = []
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if parts[0] != "cell" or len(parts) < 4:
            raise ValueError(f"cannot parse {raw!r}")
        bd = [] if parts[3] == "-" else [int(x) for x in parts[3].split(",")]
        attrs = dict(p.split("=", 1) for p in parts[4:])
        out.append({"dim": int(parts[1]), "id": int(parts[2]), "boundary": bd, "attrs": attrs})
    return out


def records_to_typed_complex(records: list) -> TypedComplex:
    """Rebuild a typed flag complex from vertex ``name``/``type`` attributes and edges."""
    names, types = {}, {}
    for rec in records:
        if rec["dim"] == 0:
            name = rec["attrs"].get("name", str(rec["id"]))
            names[rec["id"]] = name
            types[name] = rec["attrs"].get("type")
    edges = [tuple(names[b] for b in rec["boundary"]) for rec in records if rec["dim"] == 1]
    return TypedComplex(types, edges)
