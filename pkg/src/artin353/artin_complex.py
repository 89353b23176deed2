"""Finite balls in (relative) Artin complexes of spherical Artin groups.

A vertex of type ``s`` is a left coset ``g A_{S - s}``.  Vertices are adjacent
when their cosets meet.  Balls are grown from the group ball: every element
``g`` of word length at most ``r`` contributes the chamber
``{g A_{S - s} : s in types}``.  Edges are witnessed by a common element of
word length at most ``r + slack``; the witness is stored with the edge.
"""

from __future__ import annotations

import itertools
from collections import defaultdict, deque
from dataclasses import dataclass, field

import networkx as nx

from .complexes import TypedComplex
from .diagram import INF, CoxeterDiagram
from .garside import ArtinGroup, GarsideNormalForm, artin_group


class NotDentable(ValueError):
    pass


@dataclass(frozen=True)
class ArtinVertex:
    """The coset ``rep * A_{S - type}``; ``rep`` is one element of it."""

    type: str
    rep: GarsideNormalForm


def cotype(group: ArtinGroup, s: str) -> frozenset:
    return frozenset(i for i, v in enumerate(group.diagram.vertices) if v != s)


def same_vertex(group: ArtinGroup, u: ArtinVertex, v: ArtinVertex) -> bool:
    if u.type != v.type:
        return False
    return group.parabolic_membership(group.mul(group.inverse(u.rep), v.rep), cotype(group, u.type))


def contains(group: ArtinGroup, v: ArtinVertex, g: GarsideNormalForm) -> bool:
    return group.parabolic_membership(group.mul(group.inverse(v.rep), g), cotype(group, v.type))


def coset_key(group: ArtinGroup, v: ArtinVertex) -> tuple:
    """Image of the coset in W: (type, minimal coset representative)."""
    return v.type, group.W.min_coset_rep(group.image(v.rep), cotype(group, v.type))


@dataclass
class ArtinBall:
    group: ArtinGroup
    types: tuple
    radius: int
    slack: int
    vertices: list
    edges: dict  # frozenset({i, j}) -> witness element
    chambers: list  # (g, tuple of vertex ids), one per element of length <= radius + slack
    center: tuple = ()
    _complex: TypedComplex | None = field(default=None, repr=False)

    @property
    def complex(self) -> TypedComplex:
        if self._complex is None:
            types = {i: v.type for i, v in enumerate(self.vertices)}
            self._complex = TypedComplex(types, self.edges)
        return self._complex

    def graph(self) -> nx.Graph:
        g = nx.Graph()
        for i, v in enumerate(self.vertices):
            g.add_node(i, type=v.type)
        g.add_edges_from(tuple(e) for e in self.edges)
        return g

    def find(self, v: ArtinVertex):
        for i, u in enumerate(self.vertices):
            if same_vertex(self.group, u, v):
                return i
        return None

    def witness(self, i: int, j: int) -> GarsideNormalForm:
        return self.edges[frozenset((i, j))]

    def cycle(self, ids) -> "ArtinCycle":
        ids = list(ids)
        n = len(ids)
        verts = tuple(self.vertices[i] for i in ids)
        wits = tuple(self.witness(ids[k], ids[(k + 1) % n]) for k in range(n))
        return ArtinCycle(verts, wits)

    def girth(self):
        return graph_girth(self.graph())

    def exchange_records(self) -> list:
        """Cells for the shared exchange format, with ``type``/``coset-rep``."""
        recs = []
        for i, v in enumerate(self.vertices):
            word = self.group.to_word(v.rep)
            rep = " ".join(self.group.diagram.vertices[s] if e > 0 else self.group.diagram.vertices[s].upper()
                           for s, e in word) or "1"
            recs.append({"dim": 0, "id": f"v{i}", "boundary": [], "attrs": {"type": v.type, "coset-rep": rep}})
        for k, e in enumerate(sorted(tuple(sorted(e)) for e in self.edges)):
            recs.append({"dim": 1, "id": f"e{k}", "boundary": [f"v{e[0]}", f"v{e[1]}"], "attrs": {}})
        return recs


def artin_ball(diagram_or_group, types=None, radius: int = 2, slack: int = 0) -> ArtinBall:
    """Ball of the relative Artin complex spanned by vertices of the given types.

    Vertices come from elements of length <= ``radius``; elements of length
    up to ``radius + slack`` may add edges between those vertices.
    """
    group = diagram_or_group if isinstance(diagram_or_group, ArtinGroup) else artin_group(diagram_or_group)
    names = group.diagram.vertices
    types = tuple(names) if types is None else tuple(t for t in names if t in set(types))
    if not types:
        raise ValueError("need at least one vertex type")
    lengths = group.word_length_ball(radius + slack)
    elements = sorted(lengths, key=lambda g: (lengths[g], g))

    vertices: list = []
    buckets = defaultdict(list)

    def locate(v: ArtinVertex, create: bool):
        key = coset_key(group, v)
        for i in buckets[key]:
            if same_vertex(group, vertices[i], v):
                return i
        if not create:
            return None
        vertices.append(v)
        buckets[key].append(len(vertices) - 1)
        return len(vertices) - 1

    edges: dict = {}
    chambers = []
    for g in elements:
        inner = lengths[g] <= radius
        ids = tuple(locate(ArtinVertex(t, g), inner) for t in types)
        chambers.append((g, ids))
        for i, j in itertools.combinations(ids, 2):
            if i is not None and j is not None:
                edges.setdefault(frozenset((i, j)), g)
    center = tuple(range(len(types)))
    return ArtinBall(group, types, radius, slack, vertices, edges, chambers, center)


# ---------------------------------------------------------------- graph helpers


def graph_girth(g: nx.Graph):
    """Length of a shortest cycle (``math.inf`` for forests), by BFS from each vertex."""
    best = INF
    for root in g.nodes:
        dist = {root: 0}
        parent = {root: None}
        queue = deque([root])
        while queue:
            u = queue.popleft()
            if 2 * dist[u] + 1 >= best:
                break
            for w in g[u]:
                if w not in dist:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    queue.append(w)
                elif parent[u] != w:
                    best = min(best, dist[u] + dist[w] + 1)
    return best


def shortest_cycle_through(g: nx.Graph, length: int):
    """Some embedded cycle of exactly ``length`` vertices, or None (DFS)."""
    nodes = sorted(g.nodes)
    rank = {v: k for k, v in enumerate(nodes)}
    for root in nodes:
        stack = [(root, [root])]
        while stack:
            u, path = stack.pop()
            if len(path) == length:
                if g.has_edge(u, root):
                    return path
                continue
            for w in g[u]:
                if rank[w] > rank[root] and w not in path:
                    stack.append((w, path + [w]))
    return None


def link_in_ball(ball: ArtinBall, vertex_id: int) -> nx.Graph:
    """1-skeleton of the link, built from chambers of the ball through the vertex."""
    g = nx.Graph()
    for _, ids in ball.chambers:
        if vertex_id not in ids or None in ids:
            continue
        rest = [i for i in ids if i != vertex_id]
        for i in rest:
            g.add_node(i, type=ball.vertices[i].type)
        g.add_edges_from(itertools.combinations(rest, 2))
    return g


def link_matches_subball(diagram: CoxeterDiagram, s: str, radius: int) -> bool:
    """Link of the identity vertex of type s vs. a ball of the smaller complex.

    Both sides are built at the same radius; parabolic subgroups are convex,
    so word length in A_{S-s} agrees with word length in A_S.
    """
    big = artin_ball(diagram, radius=radius)
    centre = big.center[big.types.index(s)]
    link = link_in_ball(big, centre)
    sub_diagram = diagram.restrict([v for v in diagram.vertices if v != s])
    small = artin_ball(sub_diagram, radius=radius)
    other = small.graph()
    return nx.is_isomorphic(link, other, node_match=lambda a, b: a["type"] == b["type"])


# ---------------------------------------------------------------- cycles


@dataclass(frozen=True)
class ArtinCycle:
    """Vertices x_1..x_n with witnesses g_i in x_i ∩ x_{i+1} (indices mod n)."""

    vertices: tuple
    witnesses: tuple

    def __len__(self):
        return len(self.vertices)

    def types(self) -> tuple:
        return tuple(v.type for v in self.vertices)


def check_cycle(group: ArtinGroup, cycle: ArtinCycle, embedded: bool = True) -> bool:
    n = len(cycle)
    for k in range(n):
        u, v = cycle.vertices[k], cycle.vertices[(k + 1) % n]
        g = cycle.witnesses[k]
        if u.type == v.type or not contains(group, u, g) or not contains(group, v, g):
            return False
    if embedded:
        for a, b in itertools.combinations(cycle.vertices, 2):
            if same_vertex(group, a, b):
                return False
    return True


def cycle_to_words(group: ArtinGroup, cycle: ArtinCycle) -> list:
    """w_i = g_{i-1}^-1 g_i, an element of the parabolic subgroup of x_i."""
    n = len(cycle)
    return [group.mul(group.inverse(cycle.witnesses[k - 1]), cycle.witnesses[k]) for k in range(n)]


def words_product(group: ArtinGroup, words) -> GarsideNormalForm:
    out = group.identity
    for w in words:
        out = group.mul(out, w)
    return out


def reverse_cycle(cycle: ArtinCycle) -> ArtinCycle:
    n = len(cycle)
    verts = tuple(cycle.vertices[(-k) % n] for k in range(n))
    wits = tuple(cycle.witnesses[(-k - 1) % n] for k in range(n))
    return ArtinCycle(verts, wits)


@dataclass(frozen=True)
class FaceType:
    """The face of the Coxeter complex dual to ``rep * W_subset``."""

    rep: int
    subset: frozenset

    def chambers(self, group) -> frozenset:
        W = group.W if isinstance(group, ArtinGroup) else group
        return frozenset(W.mul(self.rep, x) for x in W.parabolic(self.subset))


def face_type(group: ArtinGroup, v: ArtinVertex) -> FaceType:
    sub = cotype(group, v.type)
    return FaceType(group.W.min_coset_rep(group.image(v.rep), sub), sub)


def translate(group: ArtinGroup, g: GarsideNormalForm, v: ArtinVertex) -> ArtinVertex:
    return ArtinVertex(v.type, group.mul(g, v.rep))


# ---------------------------------------------------------------- denting


def dent(group: ArtinGroup, cycle: ArtinCycle, i: int, budget: int = 3) -> ArtinCycle:
    """Dent x_i across the square spanned by the types of its neighbours.

    Needs rank 3, x_{i-1} and x_{i+1} of type p, x_i of type q with
    m_pq = 2, and witnesses g_{i-1}, g_i (moved within the edge stabilisers
    up to ``budget`` powers) with g_{i-1}^-1 g_i a power of p.  Then x_i is
    replaced by g_{i-1} q^e A_{S - q}, where e = +1 exactly when the image
    of g_{i-1} q in W is longer than that of g_{i-1}.
    """
    names = group.diagram.vertices
    n = len(cycle)
    if group.diagram.rank != 3:
        raise NotDentable("denting is defined for rank 3 diagrams")
    prev, cur, nxt = cycle.vertices[(i - 1) % n], cycle.vertices[i % n], cycle.vertices[(i + 1) % n]
    if prev.type != nxt.type or prev.type == cur.type:
        raise NotDentable(f"types {prev.type}, {cur.type}, {nxt.type} are not of the form p, q, p")
    p, q = prev.type, cur.type
    if group.diagram.m(p, q) != 2:
        raise NotDentable(f"{p} and {q} do not span a square")
    pi, qi = names.index(p), names.index(q)
    (ri,) = [k for k in range(3) if k not in (pi, qi)]
    f, h = cycle.witnesses[(i - 1) % n], cycle.witnesses[i % n]
    found = None
    for j, k in sorted(itertools.product(range(-budget, budget + 1), repeat=2), key=lambda t: (abs(t[0]) + abs(t[1]), t)):
        g1 = group.mul(f, group.generator(ri, j)) if j else f
        g2 = group.mul(h, group.generator(ri, k)) if k else h
        if group.parabolic_membership(group.mul(group.inverse(g1), g2), [pi]):
            found = g1, g2
            break
    if found is None:
        raise NotDentable("no witnesses put P_i inside the square's star")
    g1, g2 = found
    W = group.W
    bar = group.image(g1)
    eps = 1 if W.length[W.rmul[bar][qi]] > W.length[bar] else -1
    qe = group.generator(qi, eps)
    new = ArtinVertex(q, group.mul(g1, qe))
    verts = list(cycle.vertices)
    wits = list(cycle.witnesses)
    verts[i % n] = new
    wits[(i - 1) % n] = group.mul(g1, qe)
    wits[i % n] = group.mul(g2, qe)
    return ArtinCycle(tuple(verts), tuple(wits))


def dentable_configurations(group: ArtinGroup, radius: int = 2):
    """4-cycles x1 x2 x3 x4 with types p, q, p, r and x2 dentable.

    For each element g of length <= radius and each commuting pair (p, q):
    x1 = g A_{S-p}, x2 = g A_{S-q}, x3 = g p A_{S-p}, x4 = g A_{S-r}.
    """
    names = group.diagram.vertices
    if group.diagram.rank != 3:
        return
    lengths = group.word_length_ball(radius)
    for g in sorted(lengths, key=lambda x: (lengths[x], x)):
        for pi, qi in itertools.permutations(range(3), 2):
            if group.diagram.m(names[pi], names[qi]) != 2:
                continue
            (ri,) = [k for k in range(3) if k not in (pi, qi)]
            gp = group.mul(g, group.generator(pi))
            verts = (
                ArtinVertex(names[pi], g),
                ArtinVertex(names[qi], g),
                ArtinVertex(names[pi], gp),
                ArtinVertex(names[ri], g),
            )
            yield ArtinCycle(verts, (g, gp, gp, g))
