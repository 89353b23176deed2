"""Garside normal forms for spherical Artin groups.

An element is stored as ``Delta^k * u_1 * ... * u_m`` where the ``u_i`` are
simple elements (elements of the Coxeter group, lifted along reduced words),
none equal to the identity or to the longest element, and every adjacent
pair is left-weighted: the left descents of ``u_{i+1}`` are right descents
of ``u_i``.
"""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass
from functools import lru_cache

from .coxeter import CoxeterGroup, DivergedAtCutoff, enumerate_group
from .diagram import CoxeterDiagram, is_spherical


class NotSpherical(ValueError):
    pass


class Indeterminate(RuntimeError):
    """A bounded search ran out of budget before reaching a verdict."""


@dataclass(frozen=True, order=True)
class GarsideNormalForm:
    delta_power: int
    simples: tuple

    def is_identity(self) -> bool:
        return self.delta_power == 0 and not self.simples


Letter = tuple  # (generator index, +1 or -1)


def parse_word(text: str, diagram: CoxeterDiagram) -> list:
    """Parse ``"a b A b"``: lower case is a generator, upper case its inverse."""
    out = []
    for tok in text.replace(",", " ").split():
        if tok in diagram.vertices:
            out.append((diagram.index(tok), 1))
        elif tok.lower() in diagram.vertices and tok != tok.lower():
            out.append((diagram.index(tok.lower()), -1))
        elif tok.endswith("^-1") and tok[:-3] in diagram.vertices:
            out.append((diagram.index(tok[:-3]), -1))
        else:
            raise ValueError(f"unknown generator {tok!r}")
    return out


def format_word(word, diagram: CoxeterDiagram) -> str:
    names = diagram.vertices
    return " ".join(names[s] if e > 0 else names[s].upper() for s, e in word) or "1"


class ArtinGroup:
    """A spherical Artin group with Garside arithmetic over its Coxeter group."""

    def __init__(self, diagram: CoxeterDiagram, cutoff: int = 200_000):
        if not is_spherical(diagram):
            raise NotSpherical(f"diagram {diagram.vertices} is not spherical")
        try:
            self.W = enumerate_group(diagram, cutoff)
        except DivergedAtCutoff as exc:
            raise NotSpherical(str(exc)) from exc
        self.diagram = diagram
        W = self.W
        self.delta = W.longest
        self.tau = [W.mul(W.mul(W.longest, x), W.longest) for x in range(W.order)]
        self._rdes = [W.right_descents(x) for x in range(W.order)]
        self._ldes = [W.left_descents(x) for x in range(W.order)]
        # Delta * x^-1 as a simple, for x simple: w0 * x^-1
        self.right_complement_inv = [W.mul(W.longest, W.inv[x]) for x in range(W.order)]

    @property
    def identity(self) -> GarsideNormalForm:
        return GarsideNormalForm(0, ())

    # -- core arithmetic --------------------------------------------------

    def _normalise(self, k: int, factors: list) -> GarsideNormalForm:
        W = self.W
        f = list(factors)
        changed = True
        while changed:
            changed = False
            for i in range(len(f) - 1, 0, -1):
                u, v = f[i - 1], f[i]
                while True:
                    extra = self._ldes[v] - self._rdes[u]
                    if not extra:
                        break
                    s = min(extra)
                    u = W.rmul[u][s]
                    v = W.lmul[s][v]
                    changed = True
                f[i - 1], f[i] = u, v
        while f and f[0] == self.delta:
            f.pop(0)
            k += 1
        f = [x for x in f if x != 0]
        return GarsideNormalForm(k, tuple(f))

    def mul_simple(self, g: GarsideNormalForm, x: int) -> GarsideNormalForm:
        if x == 0:
            return g
        return self._normalise(g.delta_power, list(g.simples) + [x])

    def mul_simple_inverse(self, g: GarsideNormalForm, x: int) -> GarsideNormalForm:
        """g * x^-1 = Delta^(k-1) tau(u_1) ... tau(u_m) * (w0 x^-1)."""
        if x == 0:
            return g
        shifted = [self.tau[u] for u in g.simples]
        return self._normalise(g.delta_power - 1, shifted + [self.right_complement_inv[x]])

    def mul_delta_power(self, g: GarsideNormalForm, j: int) -> GarsideNormalForm:
        simples = g.simples if j % 2 == 0 else tuple(self.tau[u] for u in g.simples)
        return GarsideNormalForm(g.delta_power + j, simples)

    def mul(self, g: GarsideNormalForm, h: GarsideNormalForm) -> GarsideNormalForm:
        out = self.mul_delta_power(g, h.delta_power)
        for x in h.simples:
            out = self.mul_simple(out, x)
        return out

    def inverse(self, g: GarsideNormalForm) -> GarsideNormalForm:
        out = self.identity
        for x in reversed(g.simples):
            out = self.mul_simple_inverse(out, x)
        return self.mul_delta_power(out, -g.delta_power)

    def from_word(self, word) -> GarsideNormalForm:
        g = self.identity
        for s, e in word:
            gen = self.W.rmul[0][s]
            g = self.mul_simple(g, gen) if e > 0 else self.mul_simple_inverse(g, gen)
        return g

    def parse(self, text: str) -> GarsideNormalForm:
        return self.from_word(parse_word(text, self.diagram))

    def generator(self, s, exponent: int = 1) -> GarsideNormalForm:
        idx = s if isinstance(s, int) else self.diagram.index(s)
        return self.from_word([(idx, 1 if exponent > 0 else -1)] * abs(exponent))

    def to_word(self, g: GarsideNormalForm) -> list:
        """A signed word evaluating to g (Delta powers spelled out)."""
        dw = list(self.W.words[self.delta])
        word = []
        if g.delta_power >= 0:
            for _ in range(g.delta_power):
                word.extend((s, 1) for s in dw)
        else:
            for _ in range(-g.delta_power):
                word.extend((s, -1) for s in reversed(dw))
        for x in g.simples:
            word.extend((s, 1) for s in self.W.words[x])
        return word

    def is_left_weighted(self, g: GarsideNormalForm) -> bool:
        if any(x in (0, self.delta) for x in g.simples):
            return False
        return all(self._ldes[v] <= self._rdes[u] for u, v in zip(g.simples, g.simples[1:]))

    def format(self, g: GarsideNormalForm) -> str:
        parts = [] if g.delta_power == 0 else [f"D^{g.delta_power}"]
        parts += ["(" + self.W.name(x).replace(" ", "") + ")" for x in g.simples]
        return " ".join(parts) or "1"

    # -- parabolic subgroups ---------------------------------------------

    def left_fraction(self, g: GarsideNormalForm) -> tuple:
        """Coprime positive (a, b) with g = a^-1 b."""
        if g.delta_power >= 0:
            return self.identity, g
        j = -g.delta_power
        d_factors = g.simples[:j]
        d = GarsideNormalForm(0, tuple(d_factors))
        b = GarsideNormalForm(0, tuple(g.simples[j:]))
        a = self.mul(self.inverse(d), GarsideNormalForm(j, ()))
        return a, b

    def _positive_in(self, p: GarsideNormalForm, letters: frozenset) -> bool:
        assert p.delta_power >= 0
        if p.delta_power > 0 and not set(self.W.words[self.delta]) <= letters:
            return False
        return all(set(self.W.words[x]) <= letters for x in p.simples)

    def parabolic_membership(self, g: GarsideNormalForm, subset) -> bool:
        letters = frozenset(s if isinstance(s, int) else self.diagram.index(s) for s in subset)
        a, b = self.left_fraction(g)
        return self._positive_in(a, letters) and self._positive_in(b, letters)

    def image(self, g: GarsideNormalForm) -> int:
        """Image in the Coxeter group."""
        W = self.W
        w = W.longest if g.delta_power % 2 else 0
        for x in g.simples:
            w = W.mul(w, x)
        return w

    def word_length_ball(self, radius: int) -> dict:
        """Elements of word length <= radius, mapped to their word length."""
        seen = {self.identity: 0}
        frontier = [self.identity]
        for r in range(1, radius + 1):
            nxt = []
            for g in frontier:
                for s in self.W.gens:
                    x = self.W.rmul[0][s]
                    for h in (self.mul_simple(g, x), self.mul_simple_inverse(g, x)):
                        if h not in seen:
                            seen[h] = r
                            nxt.append(h)
            frontier = nxt
        return seen


def normal_form(diagram: CoxeterDiagram, word) -> GarsideNormalForm:
    group = _cached_group(diagram)
    if isinstance(word, str):
        return group.parse(word)
    return group.from_word(word)


@lru_cache(maxsize=32)
def _cached_group(diagram: CoxeterDiagram) -> ArtinGroup:
    return ArtinGroup(diagram)


def artin_group(diagram: CoxeterDiagram) -> ArtinGroup:
    return _cached_group(diagram)


# ---------------------------------------------------------------- rewriting oracle


class RewritingOracle:
    """Word problem by braid-relation rewriting, independent of normal forms.

    A signed word is made positive by multiplying on the left by a power of
    Delta, moving Delta rightwards through letters with the diagram
    automorphism it induces.  Positive words are then compared by repeated
    left division by a single letter: ``s`` divides ``t.v`` with ``t != s``
    exactly when ``v`` is divisible by the alternating word ``s t s ...`` of
    length ``m_st - 1``.  Only the braid relations are used.
    """

    def __init__(self, diagram: CoxeterDiagram, max_steps: int = 1_000_000):
        self.diagram = diagram
        n = diagram.rank
        self.max_steps = max_steps
        self.m = [[diagram.m(diagram.vertices[i], diagram.vertices[j]) for j in range(n)] for i in range(n)]
        self._steps = 0
        self.delta_word = self._garside_word()
        self.sigma = {}
        for s in range(n):
            for t in range(n):
                if self.positive_equal((s,) + self.delta_word, self.delta_word + (t,)):
                    self.sigma[s] = t

    def _alt(self, s: int, t: int, k: int) -> tuple:
        return tuple(s if i % 2 == 0 else t for i in range(k))

    def divide_letter(self, v: tuple, s: int):
        """The quotient s^-1 v if s left-divides the positive word v, else None."""
        self._steps += 1
        if self._steps > self.max_steps:
            raise Indeterminate(f"word reversing exceeded {self.max_steps} steps")
        if not v:
            return None
        t = v[0]
        if t == s:
            return v[1:]
        m = self.m[s][t]
        if m == float("inf"):
            return None
        m = int(m)
        q = self.divide_word(v[1:], self._alt(s, t, m - 1))
        if q is None:
            return None
        # v = t (s t ...)_(m-1) q = s (t s ...)_(m-1) q
        return self._alt(t, s, m - 1) + q

    def divide_word(self, v: tuple, u) -> tuple | None:
        for s in u:
            v = self.divide_letter(v, s)
            if v is None:
                return None
        return v

    def right_divides(self, v: tuple, s: int) -> bool:
        # reversal is an anti-automorphism of the positive monoid
        return self.divide_letter(tuple(reversed(v)), s) is not None

    def _garside_word(self) -> tuple:
        n = self.diagram.rank
        word = ()
        while True:
            missing = [s for s in range(n) if not self.right_divides(word, s)]
            if not missing:
                return word
            word = word + (missing[0],)
            if len(word) > 10_000:
                raise NotSpherical("no Garside element found")

    def positive_equal(self, u, v) -> bool:
        u, v = tuple(u), tuple(v)
        if len(u) != len(v):
            return False
        self._steps = 0
        for s in u:
            v = self.divide_letter(v, s)
            if v is None:
                return False
        return not v

    @staticmethod
    def free_reduce(word) -> list:
        out = []
        for s, e in word:
            if out and out[-1] == (s, -e):
                out.pop()
            else:
                out.append((s, e))
        return out

    def positive_form(self, word, extra: int = 0) -> tuple:
        """Positive word for Delta^(N + extra) * word, N = number of inverse letters."""
        word = self.free_reduce(word)
        n_inv = sum(1 for _, e in word if e < 0)
        d = n_inv
        out = []
        for s, e in word:
            if e > 0:
                out.append(self._sigma_pow(s, d))
            else:
                # Delta s^-1 is Delta with a final letter s removed
                rest = self._delta_without_last(s)
                out.extend(self._sigma_pow(x, d - 1) for x in rest)
                d -= 1
        prefix = list(self.delta_word) * extra
        return tuple(prefix + out), n_inv + extra

    def _sigma_pow(self, s: int, d: int) -> int:
        return self.sigma[s] if d % 2 else s

    def _delta_without_last(self, s: int) -> tuple:
        q = self.divide_letter(tuple(reversed(self.delta_word)), s)
        return tuple(reversed(q))

    def equal(self, u, v) -> bool:
        """Decide u == v for signed words."""
        nu = sum(1 for _, e in self.free_reduce(u) if e < 0)
        nv = sum(1 for _, e in self.free_reduce(v) if e < 0)
        top = max(nu, nv)
        pu, _ = self.positive_form(u, top - nu)
        pv, _ = self.positive_form(v, top - nv)
        return self.positive_equal(pu, pv)
