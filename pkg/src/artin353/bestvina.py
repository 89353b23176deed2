"""Ã_n-like complexes, the level-lifted complex X̂, Deligne normal forms and
B-geodesics, plus local B-convexity of full subcomplexes.

Levels: a vertex x of type s_k (k = 0..n-1 in the cyclic order) lifts to
(x, i) for every integer i ≡ k (mod n), where n is the number of types.
"""

from __future__ import annotations

import itertools
import random
from collections import deque
from dataclasses import dataclass, field

import networkx as nx

from .complexes import SimplicialComplex, TypedComplex
from .poset import FinitePoset, HypothesisFailed
from .verdict import Verdict, combine


class FuelExhausted(RuntimeError):
    pass


class WindowTooSmall(RuntimeError):
    pass


HEX_STEPS = ((1, 0), (0, 1), (-1, 1), (-1, 0), (0, -1), (1, -1))


def hex_norm(p: int, q: int) -> int:
    return max(abs(p), abs(q), abs(p + q))


@dataclass
class AnLikeComplex:
    complex: TypedComplex
    order: tuple
    core: frozenset
    coords: dict = field(default_factory=dict)

    def __post_init__(self):
        self.order = tuple(self.order)
        self._idx = {t: k for k, t in enumerate(self.order)}
        self.at = {c: v for v, c in self.coords.items()}

    @property
    def n(self) -> int:
        return len(self.order)

    def tau(self, x) -> int:
        return self._idx[self.complex.types[x]]

    def key(self, x, y) -> int:
        """Position of Type(y) in the order on S minus Type(x) that starts just after Type(x)."""
        return (self.tau(y) - self.tau(x)) % self.n

    def link(self, x) -> set:
        return self.complex.neighbours(x)

    def adjacent(self, x, y) -> bool:
        return self.complex.adjacent(x, y)

    def link_lt(self, x, y, z) -> bool:
        return self.adjacent(y, z) and self.key(x, y) < self.key(x, z)

    def link_le(self, x, y, z) -> bool:
        return y == z or self.link_lt(x, y, z)

    def link_poset(self, x) -> FinitePoset:
        lk = sorted(self.link(x), key=repr)
        rel = [(y, z) for y in lk for z in lk if self.link_lt(x, y, z)]
        return FinitePoset(lk, rel, {y: self.key(x, y) for y in lk}, close=False)

    def meet_in_link(self, x, y1, y2):
        """Meet in (lk(x)^0, <_x); None when there is no common lower bound."""
        lows = [z for z in self.link(x) if self.link_le(x, z, y1) and self.link_le(x, z, y2)]
        top = [z for z in lows if not any(w != z and self.link_le(x, z, w) for w in lows)]
        if not top:
            return None
        if len(top) > 1:
            raise HypothesisFailed(f"{y1!r}, {y2!r} have several maximal lower bounds in lk({x!r})")
        return top[0]

    def reversed(self) -> "AnLikeComplex":
        """The same complex with the cyclic order on types reversed."""
        return AnLikeComplex(self.complex, tuple(reversed(self.order)), self.core, dict(self.coords))

    def require_core(self, *xs):
        for x in xs:
            if x not in self.core:
                raise WindowTooSmall(f"{x!r} is outside the certified core")


def a2_window(radius: int) -> AnLikeComplex:
    """Triangular lattice ball of the given hex radius, 3-coloured by (p - q) mod 3."""
    if radius < 1:
        raise ValueError("radius must be at least 1")
    pts = [(p, q) for p in range(-radius, radius + 1) for q in range(-radius, radius + 1)
           if hex_norm(p, q) <= radius]
    name = {c: f"v{c[0]}_{c[1]}" for c in pts}
    types = {name[(p, q)]: (p - q) % 3 for p, q in pts}
    edges = []
    for p, q in pts:
        for dp, dq in HEX_STEPS[:3]:
            c = (p + dp, q + dq)
            if c in name:
                edges.append((name[(p, q)], name[c]))
    cx = TypedComplex(types, edges)
    core = frozenset(name[c] for c in pts if hex_norm(*c) <= radius - 1)
    return AnLikeComplex(cx, (0, 1, 2), core, {name[c]: c for c in pts})


def translate(X: AnLikeComplex, v, shift):
    p, q = X.coords[v]
    return X.at.get((p + shift[0], q + shift[1]))


def check_an_like(X: AnLikeComplex) -> Verdict:
    """Partial order and bowtie freeness of every core link."""
    from .poset import NotAPartialOrder, is_bowtie_free

    for x in sorted(X.core, key=repr):
        try:
            p = X.link_poset(x)
        except NotAPartialOrder as exc:
            return Verdict.fails({"vertex": x, "reason": str(exc)})
        bf = is_bowtie_free(p)
        if bf.failed:
            return Verdict.fails({"vertex": x, "bowtie": bf.witness})
    return Verdict.holds()


def induced_four_cycles_coned(X: AnLikeComplex) -> Verdict:
    g = X.complex.graph()
    for cyc in _induced_four_cycles(g, X.core):
        if not set.intersection(*(set(g[v]) for v in cyc)):
            return Verdict.fails(cyc)
    return Verdict.holds()


def _induced_four_cycles(g, pool):
    pool = sorted(pool, key=repr)
    for a, c in itertools.combinations(pool, 2):
        if g.has_edge(a, c):
            continue
        common = sorted(set(g[a]) & set(g[c]), key=repr)
        for b, d in itertools.combinations(common, 2):
            if not g.has_edge(b, d):
                yield (a, b, c, d)


# ---------------------------------------------------------------- the lifted complex


def phi(v, k: int = 1, n: int = 3):
    return (v[0], v[1] + k * n)


def lift(X: AnLikeComplex, x, near: int = 0):
    """The lift of x at the least level >= near."""
    i = near + (X.tau(x) - near) % X.n
    return (x, i)


def hat_adjacent(X: AnLikeComplex, u, v) -> bool:
    (x, i), (y, j) = u, v
    if u == v or abs(i - j) > X.n:
        return False
    return x == y or X.adjacent(x, y)


def hat_lt(X: AnLikeComplex, u, v) -> bool:
    return hat_adjacent(X, u, v) and u[1] < v[1]


def hat_complex(X: AnLikeComplex, levels: range) -> SimplicialComplex:
    verts = [(x, i) for x in X.complex.types for i in levels if i % X.n == X.tau(x) % X.n]
    g = nx.Graph()
    g.add_nodes_from(verts)
    by_level = {}
    for v in verts:
        by_level.setdefault(v[1], []).append(v)
    for u in verts:
        for j in range(u[1] + 1, u[1] + X.n + 1):
            for v in by_level.get(j, ()):
                if hat_adjacent(X, u, v):
                    g.add_edge(u, v)
    return SimplicialComplex(frozenset(c) for c in nx.find_cliques(g))


def interval(X: AnLikeComplex, u) -> FinitePoset:
    """[u, φ(u)] with its relation; isomorphic to the augmented link of u's base vertex."""
    x, i = u
    top = phi(u, 1, X.n)
    mid = [(y, i + X.key(x, y)) for y in sorted(X.link(x), key=repr)]
    elems = [u] + mid + [top]
    rel = [(a, b) for a in elems for b in elems if hat_lt(X, a, b)]
    return FinitePoset(elems, rel, {e: e[1] for e in elems}, close=False)


def is_lattice(p: FinitePoset) -> bool:
    for a, b in itertools.combinations(p.elements, 2):
        ups = [z for z in p.elements if p.le(a, z) and p.le(b, z)]
        lows = [z for z in p.elements if p.le(z, a) and p.le(z, b)]
        if not any(all(p.le(z, w) for w in ups) for z in ups):
            return False
        if not any(all(p.le(w, z) for w in lows) for z in lows):
            return False
    return True


def interval_meet(X: AnLikeComplex, base, v1, v2):
    """Meet of v1, v2 in [base, φ(base)]."""
    top = phi(base, 1, X.n)
    if v1 == top:
        return v2
    if v2 == top or v1 == v2:
        return v1
    if base in (v1, v2):
        return base
    x, i = base
    X.require_core(x)
    z = X.meet_in_link(x, v1[0], v2[0])
    if z is None:
        return base
    return (z, i + X.key(x, z))


# ---------------------------------------------------------------- Deligne normal form


@dataclass(frozen=True)
class NormalFormPath:
    vertices: tuple
    l: int  # 1-based index of the first tail vertex
    sign: int  # +1 ascending φ-tail, -1 descending, 0 no tail

    @property
    def head(self) -> tuple:
        return self.vertices[: self.l]


def ascending_path(X: AnLikeComplex, u, v, max_nodes: int = 200_000):
    """Some strictly ascending edge path u -> v in X̂ inside the window, or None."""
    if v[1] < u[1]:
        return None
    if u == v:
        return [u]
    prev = {u: None}
    queue = deque([u])
    while queue:
        w = queue.popleft()
        x, i = w
        for y in sorted(X.link(x) | {x}, key=repr):
            for j in range(i + 1, min(i + X.n, v[1]) + 1):
                if j % X.n != X.tau(y):
                    continue
                nxt = (y, j)
                if nxt in prev:
                    continue
                prev[nxt] = w
                if nxt == v:
                    path = [v]
                    while prev[path[-1]] is not None:
                        path.append(prev[path[-1]])
                    return path[::-1]
                if len(prev) > max_nodes:
                    raise FuelExhausted("ascending path search")
                queue.append(nxt)
    return None


def _push_deltas(X: AnLikeComplex, path: list) -> tuple:
    """Move every φ-step to the end; returns (path, head length)."""
    n = X.n
    path = list(path)
    tail = 0
    i = 0
    while i < len(path) - 1 - tail:
        if path[i + 1] == phi(path[i], 1, n):
            rest = [phi(w, -1, n) for w in path[i + 2:]]
            path = path[: i + 1] + rest + [path[-1]]
            tail += 1
        else:
            i += 1
    return path, len(path) - tail


def _first_violation(X: AnLikeComplex, path: list, l: int, rng=None):
    sites = list(range(1, l - 1))
    if rng is not None:
        rng.shuffle(sites)
    for i in sites:
        m = interval_meet(X, path[i], path[i + 1], phi(path[i - 1], 1, X.n))
        if m != path[i]:
            return i, m
    return None


def rectify(X: AnLikeComplex, path: list, fuel: int = 10_000, rng: random.Random | None = None) -> tuple:
    """Apply local sliding moves until the three normal-form conditions hold."""
    path, l = _push_deltas(X, path)
    while True:
        hit = _first_violation(X, path, l, rng)
        if hit is None:
            return path, l
        fuel -= 1
        if fuel < 0:
            raise FuelExhausted("rectification")
        i, m = hit
        if m == path[i + 1]:
            path = path[:i] + path[i + 1:]
        else:
            path = path[:i] + [m] + path[i + 1:]
        path, l = _push_deltas(X, path)


def deligne_normal_form(X: AnLikeComplex, source, target, fuel: int = 10_000,
                        rng: random.Random | None = None) -> NormalFormPath:
    n = X.n
    if source == target:
        return NormalFormPath((source,), 1, 0)
    k = -((target[1] - source[1]) // n)  # least k with level of φ^k(target) >= source level
    for _ in range(fuel):
        goal = phi(target, k, n)
        p = ascending_path(X, source, goal)
        if p is not None:
            break
        k += 1
    else:
        raise WindowTooSmall("no ascending path to any φ-translate of the target")
    path, l = rectify(X, p, fuel, rng)
    m = len(path) - l  # φ-steps already in the tail (0 by minimality of k)
    total = m - k
    head = path[:l]
    if total >= 0:
        tail = [phi(head[-1], s, n) for s in range(1, total + 1)]
        sign = 1 if total else 0
    else:
        tail = [phi(head[-1], -s, n) for s in range(1, -total + 1)]
        sign = -1
    verts = tuple(head + tail)
    assert verts[-1] == target
    return NormalFormPath(verts, l, sign)


def is_normal_form(X: AnLikeComplex, nf: NormalFormPath) -> bool:
    v, l, n = list(nf.vertices), nf.l, X.n
    for i in range(l - 1):
        if not hat_lt(X, v[i], v[i + 1]) or v[i + 1] == phi(v[i], 1, n):
            return False
    for i in range(1, l - 1):
        if interval_meet(X, v[i], v[i + 1], phi(v[i - 1], 1, n)) != v[i]:
            return False
    steps = {v[i + 1][1] - v[i][1] for i in range(l - 1, len(v) - 1)}
    return all(v[i + 1][0] == v[i][0] for i in range(l - 1, len(v) - 1)) and len(steps) <= 1 and steps <= {n, -n}


# ---------------------------------------------------------------- B-geodesics


def b_geodesic(X: AnLikeComplex, a, b, fuel: int = 10_000) -> list:
    """The B-geodesic from a to b as a vertex list (just [a] when a == b)."""
    X.require_core(a, b)
    if a == b:
        return [a]
    nf = deligne_normal_form(X, lift(X, a), lift(X, b), fuel)
    return [w[0] for w in nf.head]


def local_criterion(X: AnLikeComplex, path) -> bool:
    """No consecutive triple x_{i-1} x_i x_{i+1} has a common lower bound of the ends in lk(x_i)."""
    for i in range(1, len(path) - 1):
        x, y1, y2 = path[i], path[i - 1], path[i + 1]
        X.require_core(x)
        if y1 == y2 or any(X.link_le(x, z, y1) and X.link_le(x, z, y2) for z in X.link(x)):
            return False
    return True


def _window_model(X: AnLikeComplex):
    def link(x):
        return X.link(x) if x in X.core else None

    return link, X.link_le


def _lattice_model(X: AnLikeComplex):
    """Neighbours and link order of the full triangular lattice, in coordinates."""
    n = X.n

    def tau(c):
        return X._idx[(c[0] - c[1]) % 3]

    def link(c):
        return {(c[0] + dp, c[1] + dq) for dp, dq in HEX_STEPS}

    def le(x, y, z):
        if y == z:
            return True
        adj = hex_norm(y[0] - z[0], y[1] - z[1]) == 1
        return adj and (tau(y) - tau(x)) % n < (tau(z) - tau(x)) % n

    return link, le


def criterion_paths(X: AnLikeComplex, a, max_length: int, unbounded: bool = False) -> tuple:
    """All edge paths from a of length <= max_length passing the local criterion.

    Returns (paths by endpoint, list of (vertex, remaining length) where a
    branch reached a vertex outside the core and could not be continued).
    With ``unbounded`` the search runs on the whole triangular lattice (the
    window must come from a2_window); vertices inside the window are
    reported by name, others by coordinates.
    """
    if unbounded:
        link, le = _lattice_model(X)
        start = X.coords[a]
    else:
        link, le = _window_model(X)
        start = a
    found = {}
    unsure = []

    def ok_at(path):
        x, y1, y2 = path[-2], path[-3], path[-1]
        if y1 == y2:
            return False
        return not any(le(x, z, y1) and le(x, z, y2) for z in link(x))

    def record(path):
        if unbounded:
            path = [X.at.get(c, c) for c in path]
        found.setdefault(path[-1], []).append(path)

    def dfs(path):
        if len(path) - 1 == max_length:
            return
        nbrs = link(path[-1])
        if nbrs is None:
            unsure.append((path[-1], max_length - len(path) + 1))
            return
        for w in sorted(nbrs, key=repr):
            path.append(w)
            if len(path) < 3 or ok_at(path):
                record(list(path))
                dfs(path)
            path.pop()

    record([start])
    dfs([start])
    return found, unsure


# ---------------------------------------------------------------- convexity


def locally_b_convex(X: AnLikeComplex, Y) -> Verdict:
    Y = set(Y)
    pending = None
    for y in sorted(Y, key=repr):
        lk = sorted(X.link(y) & Y, key=repr)
        for y1, y2 in itertools.combinations(lk, 2):
            z = X.meet_in_link(y, y1, y2)
            if z is not None and z not in Y:
                if y in X.core:
                    return Verdict.fails((y, y1, y2), note=f"orientation {X.order}")
                pending = pending or (y, y1, y2)
    if pending is not None:
        return Verdict.unknown(pending, "meet outside Y at a window-boundary vertex")
    return Verdict.holds(note=f"orientation {X.order}")


def intersection_connected(X: AnLikeComplex, Y1, Y2) -> Verdict:
    common = set(Y1) & set(Y2)
    if not common:
        return Verdict.holds(note="empty intersection")
    g = X.complex.graph().subgraph(common)
    if nx.is_connected(g):
        return Verdict.holds()
    comps = sorted((sorted(c, key=repr) for c in nx.connected_components(g)), key=repr)
    return Verdict.fails([c[0] for c in comps])


@dataclass
class ConvexityReport:
    convex: Verdict
    geodesics: Verdict
    intersections: Verdict

    @property
    def verdict(self) -> Verdict:
        return combine([self.geodesics, self.intersections])


def check_convexity_consequences(X: AnLikeComplex, Y, others=(), fuel: int = 10_000) -> ConvexityReport:
    """Geodesics between core vertices of Y stay in Y; Y meets each other convex set connectedly."""
    convex = locally_b_convex(X, Y)
    if not convex:
        skip = Verdict.unknown(convex.witness, "Y is not certified locally B-convex")
        return ConvexityReport(convex, skip, skip)
    Y = set(Y)
    if not nx.is_connected(X.complex.graph().subgraph(Y)):
        bad = Verdict.unknown(None, "Y is not connected")
        return ConvexityReport(convex, bad, bad)
    pts = sorted(Y & X.core, key=repr)
    geo = Verdict.holds()
    for a, b in itertools.combinations(pts, 2):
        try:
            path = b_geodesic(X, a, b, fuel)
        except (WindowTooSmall, FuelExhausted) as exc:
            geo = geo if geo.failed else Verdict.unknown((a, b), str(exc))
            continue
        outside = [v for v in path if v not in Y]
        if outside:
            geo = Verdict.fails({"from": a, "to": b, "path": path, "outside": outside})
            break
    inter = combine(intersection_connected(X, Y, Z) for Z in others if locally_b_convex(X, Z))
    return ConvexityReport(convex, geo, inter)


def half_plane(X: AnLikeComplex, direction: int, offset: int) -> set:
    """Lattice half-plane: direction 0,1,2 picks the coordinate p, q or -(p+q); sign by offset side."""
    out = set()
    for v, (p, q) in X.coords.items():
        val = (p, q, -(p + q))[direction % 3]
        if (val >= offset) if direction < 3 else (val <= offset):
            out.add(v)
    return out
