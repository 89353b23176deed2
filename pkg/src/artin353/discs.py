"""Disc diagrams: planar maps of polygons, Gauss–Bonnet, hyperplanes, filling search.

A diagram is given by its faces (vertex cycles, each read counterclockwise)
and its boundary walk (read with the disc on the left).  The pair is a valid
planar map exactly when every directed edge is used once by the faces and
the reversed boundary walk together, and the resulting surface is a sphere.
"""

from __future__ import annotations

import itertools
import random
from collections import defaultdict
from dataclasses import dataclass, field
from fractions import Fraction

import networkx as nx


class InvalidDiagram(ValueError):
    pass


class AngleSumViolation(ValueError):
    def __init__(self, face: int, total):
        super().__init__(f"angles of face {face} sum to {total}·π")
        self.face = face
        self.total = total


class Indeterminate(RuntimeError):
    pass


@dataclass
class DiscDiagram:
    faces: list  # tuples of vertices, counterclockwise
    boundary: list  # closed walk, disc on the left; [v] for a single vertex
    labels: dict = field(default_factory=dict)  # vertex -> target vertex

    @property
    def vertices(self) -> list:
        vs = set(self.boundary)
        for f in self.faces:
            vs.update(f)
        return sorted(vs, key=repr)

    @property
    def edges(self) -> set:
        es = set()
        for cyc in self.faces + [self.boundary]:
            if len(cyc) < 2:
                continue
            for u, v in zip(cyc, cyc[1:] + cyc[:1]):
                es.add(frozenset((u, v)))
        return es

    @property
    def area(self) -> int:
        return len(self.faces)

    def darts(self) -> list:
        out = []
        for f in self.faces:
            out.extend(zip(f, f[1:] + f[:1]))
        b = self.boundary
        if len(b) >= 2:
            rb = b[::-1]
            out.extend(zip(rb, rb[1:] + rb[:1]))
        return out

    def certify(self) -> None:
        """Raise InvalidDiagram unless faces + boundary form a planar disc."""
        if len(self.boundary) == 1 and not self.faces:
            return
        if any(len(f) < 3 for f in self.faces):
            raise InvalidDiagram("faces need at least 3 sides")
        darts = self.darts()
        if any(u == v for u, v in darts):
            raise InvalidDiagram("loop edge")
        if len(set(darts)) != len(darts):
            raise InvalidDiagram("a directed edge is used twice")
        dset = set(darts)
        if any((v, u) not in dset for u, v in darts):
            raise InvalidDiagram("an edge is not used from both sides")
        # face permutation phi: dart -> next dart of its face cycle
        nxt = {}
        for f in self.faces + [self.boundary[::-1]]:
            cyc = list(zip(f, f[1:] + f[:1]))
            for k, d in enumerate(cyc):
                nxt[d] = cyc[(k + 1) % len(cyc)]
        # vertex rotation: sigma(u->v) = phi(v->u), a dart leaving u again
        seen = set()
        vertex_cycles = 0
        for d in darts:
            if d in seen:
                continue
            vertex_cycles += 1
            x = d
            while x not in seen:
                seen.add(x)
                x = nxt[(x[1], x[0])]
        V, E, F = len(self.vertices), len(darts) // 2, len(self.faces) + 1
        if vertex_cycles != V:
            raise InvalidDiagram("a vertex has a disconnected neighbourhood")
        g = nx.Graph()
        g.add_edges_from(tuple(e) for e in self.edges)
        if not nx.is_connected(g):
            raise InvalidDiagram("not connected")
        if V - E + F != 2:
            raise InvalidDiagram(f"Euler characteristic {V - E + F} of the closed surface is not 2")

    def rotation_system(self) -> dict:
        """Per vertex, the cyclic order of neighbours."""
        self.certify()
        nxt = {}
        for f in self.faces + [self.boundary[::-1]]:
            cyc = list(zip(f, f[1:] + f[:1]))
            for k, d in enumerate(cyc):
                nxt[d] = cyc[(k + 1) % len(cyc)]
        out = {}
        for v in self.vertices:
            start = next((d for d in nxt if d[0] == v), None)
            if start is None:
                out[v] = []
                continue
            order, x = [], start
            while True:
                order.append(x[1])
                x = nxt[(x[1], x[0])]
                if x == start:
                    break
            out[v] = order
        return out

    def to_text(self) -> str:
        lines = []
        for v, nbrs in self.rotation_system().items():
            lines.append(f"vertex {v} : {' '.join(map(str, nbrs))}")
        for f in self.faces:
            lines.append("face " + " ".join(map(str, f)))
        lines.append("boundary " + " ".join(map(str, self.boundary)))
        for v, lab in sorted(self.labels.items(), key=lambda kv: repr(kv[0])):
            lines.append(f"label {v} {lab}")
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> "DiscDiagram":
        faces, boundary, labels = [], [], {}
        for raw in text.splitlines():
            parts = raw.split("#", 1)[0].split()
            if not parts:
                continue
            if parts[0] == "face":
                faces.append(tuple(parts[1:]))
            elif parts[0] == "boundary":
                boundary = parts[1:]
            elif parts[0] == "label":
                labels[parts[1]] = parts[2]
            elif parts[0] == "vertex":
                continue
            else:
                raise ValueError(f"unknown diagram line {raw!r}")
        d = cls(faces, boundary, labels)
        d.certify()
        return d

    def interior_edges(self) -> set:
        count = defaultdict(int)
        for f in self.faces:
            for u, v in zip(f, f[1:] + f[:1]):
                count[frozenset((u, v))] += 1
        return {e for e, c in count.items() if c == 2}

    def is_reduced(self) -> bool:
        """No two faces across an edge are mirror copies of one target cell."""
        if not self.labels:
            return True
        by_edge = defaultdict(list)
        for k, f in enumerate(self.faces):
            for i in range(len(f)):
                by_edge[frozenset((f[i], f[(i + 1) % len(f)]))].append((k, i))
        for occ in by_edge.values():
            if len(occ) != 2:
                continue
            (k1, i1), (k2, i2) = occ
            f1, f2 = self.faces[k1], self.faces[k2]
            n1, n2 = len(f1), len(f2)
            if n1 != n2:
                continue
            # f1 runs u->v at i1, f2 runs v->u at i2; mirror means f1 read
            # forward from u equals f2 read backward from u
            j2 = (i2 + 1) % n2  # position of u in f2
            a = [self.labels[f1[(i1 + t) % n1]] for t in range(n1)]
            b = [self.labels[f2[(j2 - t) % n2]] for t in range(n2)]
            if a == b:
                return False
        return True


# ---------------------------------------------------------------- Gauss–Bonnet


def uniform_angles(d: DiscDiagram) -> dict:
    """Every corner of a p-gon gets (p-2)/p (in units of π)."""
    return {(k, i): Fraction(len(f) - 2, len(f)) for k, f in enumerate(d.faces) for i in range(len(f))}


def random_angles(d: DiscDiagram, rng: random.Random, denominator: int = 12) -> dict:
    out = {}
    for k, f in enumerate(d.faces):
        p = len(f)
        total = (p - 2) * denominator
        cuts = sorted(rng.randint(0, total) for _ in range(p - 1))
        parts = [b - a for a, b in zip([0] + cuts, cuts + [total])]
        for i, x in enumerate(parts):
            out[(k, i)] = Fraction(x, denominator)
    return out


def check_angles(d: DiscDiagram, angles: dict) -> None:
    for k, f in enumerate(d.faces):
        total = sum((angles[(k, i)] for i in range(len(f))), Fraction(0))
        if total != len(f) - 2:
            raise AngleSumViolation(k, total)


@dataclass
class CurvatureReport:
    total: Fraction  # in units of π
    per_vertex: dict


def gauss_bonnet(d: DiscDiagram, angles: dict, convention: str = "standard") -> CurvatureReport:
    """Vertex curvatures in units of π and their sum.

    standard: interior 2 - Σ, boundary (2 - n_v) - Σ, with n_v the number of
    visits of the boundary walk to v.  ``convention="components"`` instead uses
    (2 - n_v) - Σ everywhere, counting the circle link of an interior vertex
    as one component.
    """
    check_angles(d, angles)
    if convention not in ("standard", "components"):
        raise ValueError(f"unknown convention {convention!r}")
    sums = defaultdict(Fraction)
    for k, f in enumerate(d.faces):
        for i, v in enumerate(f):
            sums[v] += angles[(k, i)]
    visits = defaultdict(int)
    if len(d.boundary) >= 2:
        for v in d.boundary:
            visits[v] += 1
    per = {}
    for v in d.vertices:
        if len(d.boundary) == 1 and not d.faces:
            per[v] = Fraction(2)
        elif visits[v] == 0:
            per[v] = (Fraction(2) if convention == "standard" else Fraction(1)) - sums[v]
        else:
            per[v] = 2 - visits[v] - sums[v]
    return CurvatureReport(sum(per.values(), Fraction(0)), per)


# ---------------------------------------------------------------- hyperplanes


@dataclass
class Hyperplane:
    edges: frozenset
    squares: tuple
    embedded: bool
    circle: bool


def diagram_hyperplanes(d: DiscDiagram) -> tuple:
    """Hyperplanes of a square diagram and the crossing counts between them."""
    if any(len(f) != 4 for f in d.faces):
        raise ValueError("all faces must be squares")
    g = nx.Graph()
    for f in d.faces:
        es = [frozenset((f[i], f[(i + 1) % 4])) for i in range(4)]
        g.add_edge(es[0], es[2])
        g.add_edge(es[1], es[3])
    comp_of = {}
    comps = sorted((frozenset(c) for c in nx.connected_components(g)), key=lambda c: sorted(map(sorted_repr, c)))
    for k, c in enumerate(comps):
        for e in c:
            comp_of[e] = k
    interior = d.interior_edges()
    hyps = []
    crossing = defaultdict(int)
    for k, c in enumerate(comps):
        sq = []
        embedded = True
        for j, f in enumerate(d.faces):
            es = [frozenset((f[i], f[(i + 1) % 4])) for i in range(4)]
            if comp_of[es[0]] == k or comp_of[es[1]] == k:
                sq.append(j)
            if comp_of[es[0]] == k and comp_of[es[1]] == k:
                embedded = False
        hyps.append(Hyperplane(c, tuple(sq), embedded, all(e in interior for e in c)))
    for f in d.faces:
        es = [frozenset((f[i], f[(i + 1) % 4])) for i in range(4)]
        h1, h2 = comp_of[es[0]], comp_of[es[1]]
        if h1 != h2:
            crossing[frozenset((h1, h2))] += 1
    return hyps, dict(crossing)


def sorted_repr(e) -> tuple:
    return tuple(sorted(map(repr, e)))


# ---------------------------------------------------------------- sample diagrams


def polygon(p: int) -> DiscDiagram:
    f = tuple(range(p))
    return DiscDiagram([f], list(f))


def square_grid(rows: int, cols: int) -> DiscDiagram:
    def v(i, j):
        return i * (cols + 1) + j

    faces = [(v(i, j), v(i, j + 1), v(i + 1, j + 1), v(i + 1, j)) for i in range(rows) for j in range(cols)]
    # faces above are clockwise in (row down, col right) coordinates; flip rows to read them counterclockwise
    faces = [f[::-1] for f in faces]
    top = [v(0, j) for j in range(cols + 1)]
    right = [v(i, cols) for i in range(1, rows + 1)]
    bottom = [v(rows, j) for j in range(cols - 1, -1, -1)]
    left = [v(i, 0) for i in range(rows - 1, 0, -1)]
    boundary = (top + right + bottom + left)[::-1]
    return DiscDiagram(faces, boundary)


def cube_corner_diagram() -> DiscDiagram:
    """Centre c, neighbours n1 n2 n3, far vertices m12 m23 m31."""
    faces = [("c", "n1", "m12", "n2"), ("c", "n2", "m23", "n3"), ("c", "n3", "m31", "n1")]
    boundary = ["n1", "m12", "n2", "m23", "n3", "m31"]
    return DiscDiagram(faces, boundary)


def random_disc_diagram(rng: random.Random, steps: int = 6, max_gon: int = 6) -> DiscDiagram:
    """Grow a disc by gluing polygons along boundary arcs or at a vertex, and by hanging edges."""
    counter = itertools.count()
    if rng.random() < 0.03:
        return DiscDiagram([], [next(counter)])
    f0 = tuple(next(counter) for _ in range(rng.randint(3, max_gon)))
    faces = [f0]
    boundary = list(f0)
    edges = {frozenset(e) for e in zip(f0, f0[1:] + f0[:1])}
    for _ in range(steps):
        n = len(boundary)
        s = rng.randrange(n)
        rotated = boundary[s:] + boundary[:s]
        move = rng.random()
        if move < 0.15:
            v, w = rotated[0], next(counter)
            boundary = [v, w] + rotated
            edges.add(frozenset((v, w)))
            continue
        p = rng.randint(3, max_gon)
        if move < 0.3:
            v = rotated[0]
            new = [next(counter) for _ in range(p - 1)]
            face = (v,) + tuple(new)
            boundary = [v] + new + rotated
        else:
            k = rng.randint(1, min(p - 1, n - 1))
            arc = rotated[:k + 1]
            arc_edges = {frozenset(e) for e in zip(arc, arc[1:])}
            if len(set(arc)) != len(arc) or len(arc_edges) != k:
                continue
            if k == p - 1 and frozenset((arc[0], arc[-1])) in edges:
                continue
            new = [next(counter) for _ in range(p - k - 1)]
            # the face sits outside the disc, so it runs along the arc backwards
            face = tuple(arc[::-1]) + tuple(new)
            boundary = [arc[0]] + new + rotated[k:]
        faces.append(face)
        edges.update(frozenset(e) for e in zip(face, face[1:] + face[:1]))
    d = DiscDiagram(faces, boundary)
    d.certify()
    return d


# ---------------------------------------------------------------- filling search


class SquareIndex:
    """For each labelled arc along a square, the way back around the square."""

    def __init__(self, squares):
        self.arcs = defaultdict(list)
        for sq in squares:
            for cyc in (tuple(sq), tuple(reversed(tuple(sq)))):
                for r in range(4):
                    c = cyc[r:] + cyc[:r] + (cyc[r],)
                    for k in range(1, 5):
                        self.arcs[c[:k + 1]].append(c[k:])


def _reduce(front: list, unions: list) -> list:
    """Cancel repeated vertices and backtracks of a cyclic frontier, recording identifications."""
    stack = []
    for item in front:
        if stack and stack[-1][1] == item[1]:
            unions.append((stack[-1][0], item[0]))
            continue
        if len(stack) >= 2 and stack[-2][1] == item[1]:
            unions.append((stack[-2][0], item[0]))
            stack.pop()
            continue
        stack.append(item)
    while True:
        if len(stack) >= 2 and stack[0][1] == stack[-1][1]:
            unions.append((stack[0][0], stack[-1][0]))
            stack.pop()
        elif len(stack) >= 3 and stack[-1][1] == stack[1][1]:
            stack.pop(0)
        elif len(stack) >= 3 and stack[-2][1] == stack[0][1]:
            stack.pop()
        elif len(stack) == 2:
            stack.pop()
        else:
            return stack


def _canon(front) -> tuple:
    labels = tuple(lab for _, lab in front)
    if not labels:
        return labels
    r = min(range(len(labels)), key=lambda i: labels[i:] + labels[:i])
    return labels[r:] + labels[:r]


def minimal_disc_diagram(squares, boundary, area_budget: int, max_states: int = 200_000) -> DiscDiagram:
    """A minimal-area square disc diagram with the given boundary loop.

    Breadth first in the area: a state is the frontier still to be filled,
    and a move glues a target square along 1 to 4 frontier edges.  Raises
    Indeterminate when nothing of area <= area_budget exists, which covers
    loops that are not null-homotopic.
    """
    index = SquareIndex(squares)
    boundary = list(boundary)
    unions0: list = []
    front0 = _reduce(list(enumerate(boundary)), unions0)
    layer = [(front0, (), tuple(unions0), len(boundary), ())]
    seen = {_canon(front0)}
    cap = len(boundary) + 2 * area_budget + 4
    for area in range(area_budget + 1):
        nxt = []
        for front, faces, unions, counter, extra in layer:
            if len(front) <= 1:
                return _build(boundary, faces, unions, extra)
            if area == area_budget:
                continue
            n = len(front)
            for i in range(n):
                for k in range(1, min(4, n) + 1):
                    arc = [front[(i + t) % n] for t in range(k + 1)]
                    for back in index.arcs.get(tuple(lab for _, lab in arc), ()):
                        c = counter
                        new = []
                        for lab in back[1:-1]:
                            new.append((c, lab))
                            c += 1
                        more = []
                        face = tuple(v for v, _ in arc[:min(k + 1, 4)]) + tuple(v for v, _ in new)
                        if k == 4 and arc[4][0] != arc[0][0]:
                            more.append((arc[0][0], arc[4][0]))
                        if k == n:
                            nf = [arc[0]]
                        else:
                            rest = [front[(i + k + t) % n] for t in range(1, n - k)]
                            nf = [arc[0]] + new[::-1] + [arc[k]] + rest
                        nf = _reduce(nf, more)
                        key = _canon(nf)
                        if key in seen or len(nf) > cap:
                            continue
                        seen.add(key)
                        if len(seen) > max_states:
                            raise Indeterminate(f"search exceeded {max_states} states")
                        nxt.append((nf, faces + (face,), unions + tuple(more), c, extra + tuple(new)))
        layer = nxt
        if not layer:
            break
    raise Indeterminate(f"no filling of area <= {area_budget}")


def _build(boundary, faces, unions, extra) -> DiscDiagram:
    parent = {}

    def find(x):
        while parent.get(x, x) != x:
            x = parent[x]
        return x

    labels = dict(enumerate(boundary))
    labels.update(extra)
    for a, b in unions:
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[max(ra, rb)] = min(ra, rb)
    faces = [tuple(find(v) for v in f) for f in faces]
    walk = []
    for v in (find(v) for v in range(len(boundary))):
        if not walk or walk[-1] != v:
            walk.append(v)
    while len(walk) > 1 and walk[0] == walk[-1]:
        walk.pop()
    d = DiscDiagram(faces, walk, {find(v): lab for v, lab in labels.items()})
    d.certify()
    return d
