"""Hyperplane arrangements, their dual complexes and Salvetti complexes.

Faces of an arrangement are stored as sign vectors (tuples over -1, 0, 1).
The dual complex has one cell per face; the cell of a face F has as
vertices the chambers that agree with F wherever F is non-zero.  So cell
containment is "obtained by zeroing entries", chambers are the total sign
vectors and edges are the sign vectors with a single zero.
"""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Sequence

from .coxeter import CoxeterGroup

Sign = tuple


class NotCentral(ValueError):
    pass


# ---------------------------------------------------------------- exact feasibility


def _solve_strict(gts: list, nvars: int):
    """Point with c.x > d for every (c, d) in gts, or None.  Fourier-Motzkin."""
    if nvars == 0:
        return [] if all(d < 0 for _, d in gts) else None
    j = nvars - 1
    pos, neg, rest = [], [], []
    for c, d in gts:
        if c[j] > 0:
            pos.append((c, d))
        elif c[j] < 0:
            neg.append((c, d))
        else:
            rest.append((c[:j], d))
    # pos: x_j > (d - c'.x') / c_j ; neg: x_j < (d - c'.x') / c_j
    combined = list(rest)
    for (cp, dp), (cn, dn) in itertools.product(pos, neg):
        # (d_n - c_n'.x')/c_nj > (d_p - c_p'.x')/c_pj
        ap, an = cp[j], cn[j]
        coeffs = [cp[k] / ap - cn[k] / an for k in range(j)]
        combined.append((coeffs, dp / ap - dn / an))
    sub = _solve_strict(combined, j)
    if sub is None:
        return None
    lows = [(d - sum(c[k] * sub[k] for k in range(j))) / c[j] for c, d in pos]
    highs = [(d - sum(c[k] * sub[k] for k in range(j))) / c[j] for c, d in neg]
    lo = max(lows) if lows else None
    hi = min(highs) if highs else None
    if lo is not None and hi is not None:
        if not lo < hi:
            return None
        val = (lo + hi) / 2
    elif lo is not None:
        val = lo + 1
    elif hi is not None:
        val = hi - 1
    else:
        val = Fraction(0)
    return sub + [val]


def feasible_point(eqs: list, gts: list, nvars: int):
    """Exact point with c.x = d for eqs and c.x > d for gts, or None."""
    eqs = [(list(map(Fraction, c)), Fraction(d)) for c, d in eqs]
    gts = [(list(map(Fraction, c)), Fraction(d)) for c, d in gts]
    for idx, (c, d) in enumerate(eqs):
        k = next((i for i in range(nvars) if c[i] != 0), None)
        if k is None:
            if d != 0:
                return None
            continue
        # x_k = (d - sum_{i != k} c_i x_i) / c_k ; substitute and drop x_k
        def subst(c2, d2):
            f = c2[k] / c[k]
            nc = [c2[i] - f * c[i] for i in range(nvars) if i != k]
            return nc, d2 - f * d

        rest_eqs = [subst(c2, d2) for c2, d2 in eqs[idx + 1:]]
        rest_gts = [subst(c2, d2) for c2, d2 in gts]
        sub = feasible_point(rest_eqs, rest_gts, nvars - 1)
        if sub is None:
            return None
        full = sub[:k] + [Fraction(0)] + sub[k:]
        full[k] = (d - sum(c[i] * full[i] for i in range(nvars) if i != k)) / c[k]
        return full
    return _solve_strict(gts, nvars)


def _rank(rows: list) -> int:
    rows = [list(map(Fraction, r)) for r in rows]
    rank, ncols = 0, len(rows[0]) if rows else 0
    for col in range(ncols):
        piv = next((i for i in range(rank, len(rows)) if rows[i][col] != 0), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        for i in range(len(rows)):
            if i != rank and rows[i][col] != 0:
                f = rows[i][col] / rows[rank][col]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[rank])]
        rank += 1
    return rank


# ---------------------------------------------------------------- arrangements


@dataclass
class Arrangement:
    """An arrangement described by its face poset.

    ``faces`` maps each realisable sign vector to the dimension of its dual
    cell (the codimension of the face).  Reflection arrangements also keep
    the group and the coset ``(w, T)`` of every face.
    """

    hyperplanes: tuple
    dimension: int
    central: bool
    faces: dict
    witnesses: dict = field(default_factory=dict)
    group: CoxeterGroup | None = None
    coset: dict = field(default_factory=dict)
    normals: tuple | None = None

    @classmethod
    def reflection(cls, group: CoxeterGroup) -> "Arrangement":
        refl = group.reflections
        faces, coset = {}, {}
        n = len(group.gens)
        for size in range(n + 1):
            for T in itertools.combinations(group.gens, size):
                par = group.parabolic(T)
                seen = set()
                for w in range(group.order):
                    rep = group.min_coset_rep(w, T)
                    if rep in seen:
                        continue
                    seen.add(rep)
                    conj = {group.mul(group.mul(rep, x), group.inv[rep]) for x in par}
                    lw = group.length[rep]
                    sign = tuple(
                        0 if t in conj else (1 if group.length[group.mul(t, rep)] > lw else -1) for t in refl
                    )
                    faces[sign] = size
                    coset[sign] = (rep, frozenset(T))
        return cls(
            hyperplanes=tuple(group.name(t) for t in refl),
            dimension=n,
            central=True,
            faces=faces,
            group=group,
            coset=coset,
        )

    @classmethod
    def explicit(cls, normals: Sequence[Sequence], offsets: Sequence | None = None) -> "Arrangement":
        """Arrangement of hyperplanes a.x = b with exact rational data (dim <= 3)."""
        normals = tuple(tuple(Fraction(x) for x in a) for a in normals)
        if not normals:
            raise ValueError("use an explicit dimension for the empty arrangement")
        n = len(normals[0])
        if n > 3:
            raise ValueError("explicit backend is limited to dimension <= 3")
        offsets = tuple(Fraction(b) for b in (offsets or [0] * len(normals)))
        seen = set()
        for a, b in zip(normals, offsets):
            if all(x == 0 for x in a):
                raise ValueError("zero normal")
            # normalise to detect duplicates
            k = next(i for i in range(n) if a[i] != 0)
            key = tuple(x / a[k] for x in a) + (b / a[k],)
            if key in seen:
                raise ValueError("repeated hyperplane")
            seen.add(key)
        partial = [((), [], [])]
        witnesses = {}
        for idx, (a, b) in enumerate(zip(normals, offsets)):
            nxt = []
            for sign, eqs, gts in partial:
                for s in (-1, 0, 1):
                    e2, g2 = list(eqs), list(gts)
                    if s == 0:
                        e2.append((a, b))
                    else:
                        g2.append((tuple(s * x for x in a), s * b))
                    pt = feasible_point(e2, g2, n)
                    if pt is not None:
                        nxt.append((sign + (s,), e2, g2))
                        if idx == len(normals) - 1:
                            witnesses[sign + (s,)] = tuple(pt)
            partial = nxt
        faces = {}
        for sign, eqs, _ in partial:
            zero_normals = [normals[i] for i, s in enumerate(sign) if s == 0]
            faces[sign] = _rank(zero_normals) if zero_normals else 0
        return cls(
            hyperplanes=tuple(f"H{i}" for i in range(len(normals))),
            dimension=n,
            central=all(b == 0 for b in offsets),
            faces=faces,
            witnesses=witnesses,
            normals=tuple(zip(normals, offsets)),
        )

    def verify_witnesses(self) -> bool:
        if not self.normals:
            return True
        for sign, pt in self.witnesses.items():
            for s, (a, b) in zip(sign, self.normals):
                val = sum(x * y for x, y in zip(a, pt)) - b
                if (val > 0) - (val < 0) != s:
                    return False
        return set(self.witnesses) == set(self.faces)

    def sub_arrangement(self, keep: Iterable[int]) -> "Arrangement":
        keep = sorted(set(keep))
        restricted = {tuple(sign[i] for i in keep) for sign in self.faces}
        complex_ = {}
        for r in restricted:
            zeros = [i for i, s in zip(keep, r) if s == 0]
            complex_[r] = self._zero_rank(zeros)
        return Arrangement(
            hyperplanes=tuple(self.hyperplanes[i] for i in keep),
            dimension=self.dimension,
            central=self.central,
            faces=complex_,
        )

    def _zero_rank(self, zero_idx: list) -> int:
        """Codimension of the intersection of the given hyperplanes."""
        if not zero_idx:
            return 0
        # the intersection of those hyperplanes is a union of faces; its
        # codimension is the smallest dual dimension of a face zero there
        zs = set(zero_idx)
        return min(d for s, d in self.faces.items() if all(s[i] == 0 for i in zs))

    def decone(self, h: int) -> "Arrangement":
        if not self.central:
            raise NotCentral("deconing needs a central arrangement")
        keep = [i for i in range(len(self.hyperplanes)) if i != h]
        faces = {}
        for sign, d in self.faces.items():
            if sign[h] == 1:
                faces[tuple(sign[i] for i in keep)] = d
        return Arrangement(
            hyperplanes=tuple(self.hyperplanes[i] for i in keep),
            dimension=self.dimension - 1,
            central=False,
            faces=faces,
        )

    def face_complex(self) -> "FaceComplex":
        return FaceComplex(self)


def reflection_arrangement(group: CoxeterGroup) -> tuple["Arrangement", "FaceComplex"]:
    arr = Arrangement.reflection(group)
    return arr, arr.face_complex()


# ---------------------------------------------------------------- dual complex


def compose(f: Sign, g: Sign) -> Sign:
    """Covector composition f o g: f where f is non-zero, else g."""
    return tuple(a if a != 0 else b for a, b in zip(f, g))


def is_subcell(small: Sign, big: Sign) -> bool:
    """Dual-cell containment: ``big`` arises from ``small`` by zeroing entries."""
    return all(b == 0 or a == b for a, b in zip(small, big))


class FaceComplex:
    """The dual complex Sigma of an arrangement."""

    def __init__(self, arrangement: Arrangement):
        self.arrangement = arrangement
        self.dim = dict(arrangement.faces)
        self.cells = sorted(self.dim, key=lambda s: (self.dim[s], s))
        self.chambers = [s for s in self.cells if self.dim[s] == 0]
        self.edges = [s for s in self.cells if self.dim[s] == 1]
        self._dist_cache = {}
        adj = {c: [] for c in self.chambers}
        for e in self.edges:
            a, b = self.vertices_of(e)
            adj[a].append(b)
            adj[b].append(a)
        self.adjacency = adj

    @property
    def nhyperplanes(self) -> int:
        return len(self.arrangement.hyperplanes)

    def cells_of_dim(self, d: int) -> list:
        return [s for s in self.cells if self.dim[s] == d]

    def vertices_of(self, cell: Sign) -> list:
        zeros = [i for i, s in enumerate(cell) if s == 0]
        out = []
        for fill in itertools.product((-1, 1), repeat=len(zeros)):
            c = list(cell)
            for i, s in zip(zeros, fill):
                c[i] = s
            c = tuple(c)
            if c in self.dim and self.dim[c] == 0:
                out.append(c)
        return sorted(out)

    @cached_property
    def _vertex_sets(self):
        return {c: frozenset(self.vertices_of(c)) for c in self.cells}

    def vertex_set(self, cell: Sign) -> frozenset:
        return self._vertex_sets[cell]

    def faces_of(self, cell: Sign, codim: int = 1) -> list:
        """Subcells of the given cell of dimension dim(cell) - codim."""
        target = self.dim[cell] - codim
        out = set()
        for c in self.cells:
            if self.dim[c] == target and is_subcell(c, cell):
                out.add(c)
        return sorted(out)

    def edge_hyperplane(self, edge: Sign) -> int:
        (i,) = [k for k, s in enumerate(edge) if s == 0]
        return i

    def distances_from(self, x: Sign) -> dict:
        if x not in self._dist_cache:
            dist = {x: 0}
            queue = deque([x])
            while queue:
                u = queue.popleft()
                for v in self.adjacency[u]:
                    if v not in dist:
                        dist[v] = dist[u] + 1
                        queue.append(v)
            self._dist_cache[x] = dist
        return self._dist_cache[x]

    def graph_distance(self, x: Sign, y: Sign) -> int:
        return self.distances_from(x)[y]

    @staticmethod
    def separating(x: Sign, y: Sign) -> int:
        return sum(1 for a, b in zip(x, y) if a != b)

    def gate(self, x: Sign, cell: Sign) -> Sign:
        g = compose(cell, x)
        assert self.dim.get(g) == 0
        return g

    def gate_face(self, e: Sign, f: Sign) -> Sign:
        g = compose(f, e)
        assert g in self.dim and is_subcell(g, f)
        return g

    def gate_by_distance(self, x: Sign, cell: Sign) -> list:
        """All distance minimisers over the cell's vertices (oracle)."""
        dist = self.distances_from(x)
        verts = self.vertex_set(cell)
        best = min(dist[v] for v in verts)
        return sorted(v for v in verts if dist[v] == best)

    def antipode(self, x: Sign, cell: Sign) -> Sign:
        return tuple(-a if c == 0 else a for a, c in zip(x, cell))

    def collapse(self, keep: Sequence[int]) -> tuple["FaceComplex", callable]:
        """Sigma of the sub-arrangement on ``keep`` and the restriction map."""
        keep = list(keep)
        sub = self.arrangement.sub_arrangement(keep)
        cx = FaceComplex(sub)

        def kappa(cell: Sign) -> Sign:
            return tuple(cell[i] for i in keep)

        return cx, kappa

    def salvetti(self) -> "SalvettiComplex":
        return SalvettiComplex(self)

    def chamber_element(self, x: Sign) -> int:
        """Group element of a chamber (reflection arrangements only)."""
        rep, _ = self.arrangement.coset[x]
        return rep


# ---------------------------------------------------------------- Salvetti complex


@dataclass(frozen=True)
class TwoCellData:
    source: Sign
    sink: Sign
    paths: tuple  # two vertex sequences source -> sink


class SalvettiComplex:
    """Cells are pairs (F, v) with v a chamber of F; (F, v) stands for [F, v]."""

    def __init__(self, sigma: FaceComplex):
        self.sigma = sigma
        cells = []
        for f in sigma.cells:
            for v in sigma.vertex_set(f):
                cells.append((f, v))
        self.cells = sorted(cells, key=lambda c: (sigma.dim[c[0]], c))
        self.cell_set = frozenset(self.cells)
        self.two_cells = {}
        for f in sigma.cells_of_dim(2):
            for v in sigma.vertex_set(f):
                self.two_cells[(f, v)] = self._two_cell_data(f, v)

    def dim(self, cell) -> int:
        return self.sigma.dim[cell[0]]

    def cells_of_dim(self, d: int) -> list:
        return [c for c in self.cells if self.dim(c) == d]

    def counts(self) -> list:
        top = max(self.sigma.dim.values())
        return [len(self.cells_of_dim(d)) for d in range(top + 1)]

    def boundary(self, cell) -> list:
        f, v = cell
        return [(g, self.sigma.gate(v, g)) for g in self.sigma.faces_of(f)]

    def edge_ends(self, edge) -> tuple:
        """Oriented edge [e, v]: from v to the other endpoint of e."""
        e, v = edge
        a, b = self.sigma.vertices_of(e)
        return (v, b if v == a else a)

    def step(self, edge, direction: int):
        src, dst = self.edge_ends(edge)
        return (src, dst) if direction > 0 else (dst, src)

    def positive_path(self, x: Sign, y: Sign, prefer=None) -> list:
        """Greedy minimal positive path as a list of (edge cell, +1)."""
        sigma = self.sigma
        path, cur = [], x
        dist = sigma.distances_from(y)
        while cur != y:
            options = [v for v in sigma.adjacency[cur] if dist[v] == dist[cur] - 1]
            nxt = min(options) if prefer is None else prefer(cur, options)
            e = tuple(0 if a != b else a for a, b in zip(cur, nxt))
            path.append(((e, cur), 1))
            cur = nxt
        return path

    def _two_cell_data(self, f: Sign, v: Sign) -> TwoCellData:
        sink = self.sigma.antipode(v, f)
        verts = self.sigma.vertex_set(f)
        # the two geodesics from v to its antipode around the polygon f
        nbrs = [u for u in self.sigma.adjacency[v] if u in verts]
        paths = []
        for first in sorted(nbrs):
            seq, prev, cur = [v, first], v, first
            while cur != sink:
                nxt = [u for u in self.sigma.adjacency[cur] if u in verts and u != prev]
                prev, cur = cur, nxt[0]
                seq.append(cur)
            paths.append(tuple(seq))
        return TwoCellData(v, sink, tuple(paths))

    def path_of_vertices(self, seq: Sequence[Sign], positive: bool = True) -> list:
        """Edge path along a vertex sequence using forward-oriented edges."""
        out = []
        for a, b in zip(seq, seq[1:]):
            e = tuple(0 if x != y else x for x, y in zip(a, b))
            out.append(((e, a), 1) if positive else ((e, b), -1))
        return out

    def two_cell_boundary(self, cell) -> list:
        """Boundary loop at the source: first positive path, then the second reversed."""
        data = self.two_cells[cell]
        p1 = self.path_of_vertices(data.paths[0])
        p2 = self.path_of_vertices(data.paths[1])
        back = [(edge, -d) for edge, d in reversed(p2)]
        return p1 + back

    def path_is_connected(self, path: list) -> bool:
        for (e1, d1), (e2, d2) in zip(path, path[1:]):
            if self.step(e1, d1)[1] != self.step(e2, d2)[0]:
                return False
        return True

    def delta_word(self, x: Sign) -> list:
        """Delta_x: minimal positive path to the antipode of x and back."""
        top = tuple(0 for _ in x)
        if top not in self.sigma.dim:
            raise NotCentral("delta_word needs a central arrangement")
        y = self.sigma.antipode(x, top)
        return self.positive_path(x, y) + self.positive_path(y, x)

    def retract(self, target: Sign, cell) -> tuple:
        """Image of a cell under the retraction onto the standard subcomplex of ``target``."""
        e, v = cell
        g = compose(target, e)
        return (g, self.sigma.gate(v, g))

    def retract_path(self, target: Sign, path: list) -> list:
        out = []
        for edge, d in path:
            img = self.retract(target, edge)
            if self.sigma.dim[img[0]] == 1:
                out.append((img, d))
        return out

    def winding(self, path: list) -> Fraction:
        """Signed number of turns of a loop inside the circle over one edge."""
        return Fraction(sum(d for _, d in path), 2)

    def ell_segments(self, path: list, ell: int, closed: bool = True) -> int:
        hits = [self.sigma.dim[e[0]] == 1 and e[0][ell] == 0 for e, _ in path]
        runs = sum(1 for i, h in enumerate(hits) if h and (i == 0 or not hits[i - 1]))
        if closed and len(hits) > 1 and hits[0] and hits[-1] and not all(hits):
            runs -= 1
        return runs

    def path_word(self, path: list) -> list:
        """Signed generator word of a path (reflection arrangements only)."""
        group = self.sigma.arrangement.group
        word = []
        for edge, d in path:
            src, dst = self.edge_ends(edge)
            u, w = self.sigma.chamber_element(src), self.sigma.chamber_element(dst)
            s = group.words[group.mul(group.inv[u], w)]
            assert len(s) == 1
            word.append((s[0], d))
        return word

    def kappa_hat(self, kappa, cell) -> tuple:
        f, v = cell
        return (kappa(f), kappa(v))

    def quotient_counts(self) -> list:
        """Cell counts of the quotient by the reflection group (left action)."""
        sigma = self.sigma
        arr = sigma.arrangement
        group = arr.group
        if group is None:
            raise ValueError("quotient needs a reflection arrangement")
        by_coset = {}
        for sign, (rep, T) in arr.coset.items():
            by_coset[(rep, T)] = sign

        def act(g: int, sign: Sign) -> Sign:
            rep, T = arr.coset[sign]
            return by_coset[(group.min_coset_rep(group.mul(g, rep), T), T)]

        orbits = set()
        for cell in self.cells:
            f, v = cell
            orbit = min((act(g, f), act(g, v)) for g in range(group.order))
            orbits.add((sigma.dim[f], orbit))
        top = max(sigma.dim.values())
        return [sum(1 for d, _ in orbits if d == k) for k in range(top + 1)]
