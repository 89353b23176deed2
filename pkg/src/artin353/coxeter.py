"""Finite Coxeter groups built from reduced words.

Enumeration grows the Cayley graph one length level at a time.  When a new
product ``w*s`` is formed, the only way it can coincide with a product
``w'*t`` of the same length is through the dihedral relation of ``s`` and
``t``; that relation is checked by reading off the alternating ``{s, t}``
suffix of ``w``.  No matrices are involved, so the exact matrix model in
``matrix_oracle`` stays an independent check.
"""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass
from functools import cached_property

from .complexes import TypedComplex
from .diagram import INF, CoxeterDiagram
from .exact import QuadraticNumber, four_cos_squared


class DivergedAtCutoff(RuntimeError):
    def __init__(self, count: int):
        super().__init__(f"more than {count} elements")
        self.count = count


class CoxeterGroup:
    """A finite Coxeter group with elements numbered in ShortLex order.

    Element 0 is the identity.  ``rmul[w][s]`` is the index of ``w*s``.
    """

    def __init__(self, diagram: CoxeterDiagram, words, rmul):
        self.diagram = diagram
        self.gens = tuple(range(diagram.rank))
        self.words = words
        self.rmul = rmul
        self.order = len(words)
        self.length = [len(w) for w in words]
        inv = [0] * self.order
        for w, word in enumerate(words):
            inv[w] = self.evaluate(reversed(word))
        self.inv = inv
        self.lmul = [[self.inv[self.rmul[self.inv[w]][s]] for w in range(self.order)] for s in self.gens]
        self.longest = max(range(self.order), key=lambda w: self.length[w])
        self._index = {word: i for i, word in enumerate(words)}

    # -- basic arithmetic -------------------------------------------------

    def evaluate(self, word) -> int:
        w = 0
        for s in word:
            w = self.rmul[w][s]
        return w

    def mul(self, u: int, v: int) -> int:
        for s in self.words[v]:
            u = self.rmul[u][s]
        return u

    def gen(self, s) -> int:
        if not isinstance(s, int):
            s = self.diagram.index(s)
        return self.rmul[0][s]

    def from_word(self, word) -> int:
        return self.evaluate(self._letters(word))

    def _letters(self, word):
        out = []
        for s in word:
            out.append(s if isinstance(s, int) else self.diagram.index(s))
        return out

    def right_descents(self, w: int) -> frozenset:
        lw = self.length[w]
        return frozenset(s for s in self.gens if self.length[self.rmul[w][s]] < lw)

    def left_descents(self, w: int) -> frozenset:
        lw = self.length[w]
        return frozenset(s for s in self.gens if self.length[self.lmul[s][w]] < lw)

    def name(self, w: int) -> str:
        if w == 0:
            return "e"
        return " ".join(self.diagram.vertices[s] for s in self.words[w])

    def element(self, word) -> "CoxeterElement":
        return CoxeterElement(self, self.from_word(word))

    # -- parabolic subgroups ---------------------------------------------

    def parabolic(self, subset) -> frozenset:
        gens = [s if isinstance(s, int) else self.diagram.index(s) for s in subset]
        seen = {0}
        queue = deque([0])
        while queue:
            w = queue.popleft()
            for s in gens:
                v = self.rmul[w][s]
                if v not in seen:
                    seen.add(v)
                    queue.append(v)
        return frozenset(seen)

    def in_parabolic(self, w: int, subset) -> bool:
        gens = {s if isinstance(s, int) else self.diagram.index(s) for s in subset}
        return set(self.words[w]) <= gens

    def longest_of(self, subset) -> int:
        return max(self.parabolic(subset), key=lambda w: self.length[w])

    def min_coset_rep(self, w: int, subset) -> int:
        """Minimal-length element of the left coset w*W_subset."""
        gens = [s if isinstance(s, int) else self.diagram.index(s) for s in subset]
        changed = True
        while changed:
            changed = False
            for s in gens:
                v = self.rmul[w][s]
                if self.length[v] < self.length[w]:
                    w, changed = v, True
        return w

    # -- weak order -------------------------------------------------------

    def prefix_le(self, u: int, v: int) -> bool:
        """Left weak order: u <= v iff l(u) + l(u^-1 v) = l(v)."""
        return self.length[u] + self.length[self.mul(self.inv[u], v)] == self.length[v]

    def down_set(self, v: int) -> frozenset:
        return self._down[v]

    @cached_property
    def _down(self):
        down = [None] * self.order
        for v in sorted(range(self.order), key=lambda w: self.length[w]):
            acc = {v}
            for s in self.right_descents(v):
                acc |= down[self.rmul[v][s]]
            down[v] = frozenset(acc)
        return down

    @cached_property
    def _up(self):
        up = [None] * self.order
        for v in sorted(range(self.order), key=lambda w: -self.length[w]):
            acc = {v}
            for s in self.gens:
                u = self.rmul[v][s]
                if self.length[u] > self.length[v]:
                    acc |= up[u]
            up[v] = frozenset(acc)
        return up

    def weak_meet(self, u: int, v: int) -> int:
        common = self._down[u] & self._down[v]
        top = max(self.length[w] for w in common)
        best = [w for w in common if self.length[w] == top]
        assert len(best) == 1, "weak order meet not unique"
        return best[0]

    def weak_join(self, u: int, v: int) -> int:
        common = self._up[u] & self._up[v]
        bottom = min(self.length[w] for w in common)
        best = [w for w in common if self.length[w] == bottom]
        assert len(best) == 1, "weak order join not unique"
        return best[0]

    # -- reflections and chambers ---------------------------------------

    @cached_property
    def reflections(self) -> tuple:
        refl = set()
        for w in range(self.order):
            for s in self.gens:
                refl.add(self.mul(self.rmul[w][s], self.inv[w]))
        return tuple(sorted(refl))

    def chamber_sign_vector(self, w: int) -> tuple:
        lw = self.length[w]
        return tuple(1 if self.length[self.mul(t, w)] > lw else -1 for t in self.reflections)

    # -- export -----------------------------------------------------------

    def table_dump(self) -> str:
        lines = [f"# coxeter-table diagram={self.diagram.digest()} order={self.order}"]
        for w in range(self.order):
            prods = " | ".join(self.name(self.rmul[w][s]) for s in self.gens)
            lines.append(f"{self.name(w)} : {prods}")
        return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class CoxeterElement:
    group: CoxeterGroup
    index: int

    @property
    def word(self) -> tuple:
        return tuple(self.group.diagram.vertices[s] for s in self.group.words[self.index])

    @property
    def length(self) -> int:
        return self.group.length[self.index]

    def __mul__(self, other: "CoxeterElement") -> "CoxeterElement":
        return CoxeterElement(self.group, self.group.mul(self.index, other.index))

    def inverse(self) -> "CoxeterElement":
        return CoxeterElement(self.group, self.group.inv[self.index])

    def __repr__(self):
        return f"CoxeterElement({self.group.name(self.index)!r})"


def enumerate_group(diagram: CoxeterDiagram, cutoff: int = 10_000) -> CoxeterGroup:
    if cutoff < 1:
        raise ValueError("cutoff must be >= 1")
    n = diagram.rank
    m = [[diagram.m(diagram.vertices[i], diagram.vertices[j]) for j in range(n)] for i in range(n)]
    words = [()]
    table = [dict()]
    down = [set()]
    level = [0]
    count = 1
    if count > cutoff:
        raise DivergedAtCutoff(cutoff)

    def go(x, letters):
        for a in letters:
            x = table[x][a]
        return x

    while level:
        new_level = []
        for w in level:
            for s in range(n):
                if s in down[w] or s in table[w]:
                    continue
                found = None
                for t in range(n):
                    if t == s or m[s][t] == INF:
                        continue
                    mst = int(m[s][t])
                    # alternating right tail of w: ... s t, read from the right
                    x, cur, k = w, t, 0
                    while cur in down[x]:
                        x = table[x][cur]
                        k += 1
                        cur = s if cur == t else t
                    if k != mst - 1:
                        continue
                    # w' = x * (alternating word of length m-1 ending in s)
                    alt = [s if (mst - 1 - i) % 2 == 1 else t for i in range(mst - 1)]
                    wp = go(x, alt)
                    if t in table[wp]:
                        found = table[wp][t]
                    else:
                        found = len(words)
                        words.append(None)
                        table.append({})
                        down.append(set())
                        new_level.append(found)
                        table[wp][t] = found
                        table[found][t] = wp
                        down[found].add(t)
                    break
                if found is None:
                    found = len(words)
                    words.append(None)
                    table.append({})
                    down.append(set())
                    new_level.append(found)
                table[w][s] = found
                table[found][s] = w
                down[found].add(s)
                if len(words) > cutoff:
                    raise DivergedAtCutoff(cutoff)
        for v in new_level:
            words[v] = min(words[table[v][d]] + (d,) for d in down[v])
        level = new_level

    order = sorted(range(len(words)), key=lambda i: (len(words[i]), words[i]))
    renum = {old: new for new, old in enumerate(order)}
    new_words = [words[old] for old in order]
    rmul = [[renum[table[old][s]] for s in range(n)] for old in order]
    return CoxeterGroup(diagram, new_words, rmul)


# ---------------------------------------------------------------- matrix oracle


def reflection_matrices(diagram: CoxeterDiagram) -> list:
    """Exact matrices of the generators in a geometric representation.

    Off-diagonal coefficients satisfy a_ij * a_ji = 4cos^2(pi/m_ij), with
    a_ij = -1 for i < j whenever m_ij >= 3.  For trees this is conjugate to
    the symmetric Tits form, and it keeps crystallographic groups over Q.
    """
    n = diagram.rank
    a = [[QuadraticNumber(2 if i == j else 0) for j in range(n)] for i in range(n)]
    for i, j in itertools.combinations(range(n), 2):
        mij = diagram.m(diagram.vertices[i], diagram.vertices[j])
        if mij == INF:
            raise ValueError("infinite labels have no finite matrix model here")
        if mij == 2:
            continue
        a[i][j] = QuadraticNumber(-1)
        a[j][i] = -four_cos_squared(int(mij))
    mats = []
    for i in range(n):
        # s_i(e_j) = e_j - a_ij e_i; column j of the matrix is the image of e_j
        rows = [[QuadraticNumber(1 if r == c else 0) for c in range(n)] for r in range(n)]
        for j in range(n):
            rows[i][j] = rows[i][j] - a[i][j]
        mats.append(tuple(tuple(r) for r in rows))
    return mats


def _matmul(x, y):
    n = len(x)
    return tuple(
        tuple(sum((x[i][k] * y[k][j] for k in range(n)), QuadraticNumber(0)) for j in range(n)) for i in range(n)
    )


def matrix_oracle(diagram: CoxeterDiagram, cutoff: int = 10_000) -> dict:
    """Order, reflection count and longest length by counting matrices."""
    gens = reflection_matrices(diagram)
    n = diagram.rank
    ident = tuple(tuple(QuadraticNumber(1 if i == j else 0) for j in range(n)) for i in range(n))
    depth = {ident: 0}
    word = {ident: ()}
    queue = deque([ident])
    while queue:
        x = queue.popleft()
        for k, g in enumerate(gens):
            y = _matmul(x, g)
            if y not in depth:
                depth[y] = depth[x] + 1
                word[y] = word[x] + (k,)
                if len(depth) > cutoff:
                    raise DivergedAtCutoff(cutoff)
                queue.append(y)
    reflections = set()
    for x, wx in word.items():
        inv = ident
        for k in reversed(wx):
            inv = _matmul(inv, gens[k])
        for g in gens:
            reflections.add(_matmul(_matmul(x, g), inv))
    return {"order": len(depth), "reflections": len(reflections), "longest": max(depth.values())}


def coxeter_complex(group: CoxeterGroup, types=None):
    """Complex of left cosets w W_{S - s}; a family spans a simplex when the cosets share an element.

    Vertices are ``(s, rep)`` with ``rep`` the ShortLex name of the minimal
    coset representative; the type of ``(s, rep)`` is ``s``.  ``types``
    restricts to cosets of the listed generators (the relative complex).
    """
    names = group.diagram.vertices
    chosen = [names.index(s) if not isinstance(s, int) else s for s in (types or names)]
    cotypes = {s: [t for t in group.gens if t != s] for s in chosen}
    vtypes, simplices = {}, set()
    for w in range(group.order):
        face = []
        for s in chosen:
            v = (names[s], group.name(group.min_coset_rep(w, cotypes[s])))
            vtypes[v] = names[s]
            face.append(v)
        simplices.add(frozenset(face))
    return TypedComplex.from_simplices(vtypes, simplices)
