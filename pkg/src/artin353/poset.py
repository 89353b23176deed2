"""Finite posets, typed order views on complexes, bowties, joins and flag tests."""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from typing import Hashable, Iterable

from .complexes import TypedComplex
from .verdict import Verdict


class NoBound(LookupError):
    pass


class HypothesisFailed(ValueError):
    pass


class NotAPartialOrder(ValueError):
    pass


class FinitePoset:
    """Strict order given by pairs; the transitive closure is taken on construction."""

    def __init__(self, elements: Iterable[Hashable], relations: Iterable[tuple], rank: dict | None = None,
                 close: bool = True):
        self.elements = tuple(elements)
        index = set(self.elements)
        lt = {x: set() for x in self.elements}
        for a, b in relations:
            if a not in index or b not in index:
                raise NotAPartialOrder(f"relation {a!r} < {b!r} mentions an unknown element")
            lt[a].add(b)
        if close:
            changed = True
            while changed:
                changed = False
                for a in self.elements:
                    extra = set().union(*(lt[b] for b in lt[a])) - lt[a] if lt[a] else set()
                    if extra:
                        lt[a] |= extra
                        changed = True
        for a in self.elements:
            if a in lt[a]:
                raise NotAPartialOrder(f"{a!r} < {a!r}")
            for b in lt[a]:
                if a in lt[b]:
                    raise NotAPartialOrder(f"{a!r} < {b!r} < {a!r}")
                if not lt[b] <= lt[a]:
                    raise NotAPartialOrder(f"not transitive at {a!r} < {b!r}")
        self.up = {x: frozenset(v) for x, v in lt.items()}
        down = {x: set() for x in self.elements}
        for a, bs in self.up.items():
            for b in bs:
                down[b].add(a)
        self.down = {x: frozenset(v) for x, v in down.items()}
        self.rank = dict(rank) if rank is not None else None
        if self.rank is not None:
            bad = self.rank_violation(self.rank)
            if bad:
                raise NotAPartialOrder(f"rank is not a poset map at {bad[0]!r} < {bad[1]!r}")

    def lt(self, a, b) -> bool:
        return b in self.up[a]

    def le(self, a, b) -> bool:
        return a == b or b in self.up[a]

    def upper_bounds(self, q: Iterable) -> set:
        q = list(q)
        out = set(self.elements)
        for x in q:
            out &= self.up[x] | {x}
        return out

    def lower_bounds(self, q: Iterable) -> set:
        q = list(q)
        out = set(self.elements)
        for x in q:
            out &= self.down[x] | {x}
        return out

    def minimal(self, subset: Iterable) -> list:
        s = set(subset)
        return [x for x in self.elements if x in s and not (self.down[x] & s)]

    def maximal(self, subset: Iterable | None = None) -> list:
        s = set(self.elements if subset is None else subset)
        return [x for x in self.elements if x in s and not (self.up[x] & s)]

    def covers(self) -> list:
        out = []
        for a in self.elements:
            for b in self.up[a]:
                if not (self.up[a] & self.down[b]):
                    out.append((a, b))
        return out

    def chain_rank(self) -> dict:
        """Length of the longest chain ending at each element."""
        rank = {}
        for x in sorted(self.elements, key=lambda e: len(self.down[e])):
            rank[x] = 1 + max((rank[y] for y in self.down[x]), default=-1)
        return rank

    def rank_violation(self, rank: dict):
        for a in self.elements:
            for b in self.up[a]:
                if not rank[a] < rank[b]:
                    return a, b
        return None

    def interval(self, a, b) -> set:
        return {x for x in self.elements if self.le(a, x) and self.le(x, b)}

    def relations(self) -> set:
        return {(a, b) for a in self.elements for b in self.up[a]}

    # -- text format ------------------------------------------------------

    def to_text(self) -> str:
        rank = self.rank if self.rank is not None else self.chain_rank()
        lines = [f"elem {x} rank {rank[x]}" for x in self.elements]
        lines += [f"lt {a} {b}" for a, b in sorted(self.covers(), key=lambda p: (str(p[0]), str(p[1])))]
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> "FinitePoset":
        elems, rank, rel = [], {}, []
        for raw in text.splitlines():
            line = raw.split("#", 1)[0].split()
            if not line:
                continue
            if line[0] == "elem":
                elems.append(line[1])
                if len(line) >= 4 and line[2] == "rank":
                    rank[line[1]] = int(line[3])
            elif line[0] == "lt":
                rel.append((line[1], line[2]))
            else:
                raise ValueError(f"unknown poset line {raw!r}")
        return cls(elems, rel, rank if len(rank) == len(elems) else None)


@dataclass
class TypedOrderView:
    """x < y iff x, y are adjacent and Type(x) precedes Type(y) in ``type_order``."""

    complex: TypedComplex
    type_order: tuple
    certified: frozenset | None = field(default=None)

    def __post_init__(self):
        self.type_order = tuple(self.type_order)
        self._pos = {t: k for k, t in enumerate(self.type_order)}

    @property
    def elements(self) -> tuple:
        return tuple(sorted(self.complex.types, key=repr))

    def lt(self, a, b) -> bool:
        tp = self.complex.types
        return self.complex.adjacent(a, b) and self._pos[tp[a]] < self._pos[tp[b]]

    def le(self, a, b) -> bool:
        return a == b or self.lt(a, b)

    def up_of(self, a) -> set:
        return {b for b in self.complex.neighbours(a) if self.lt(a, b)}

    def down_of(self, a) -> set:
        return {b for b in self.complex.neighbours(a) if self.lt(b, a)}

    def in_certified(self, *xs) -> bool:
        return self.certified is None or all(x in self.certified for x in xs)

    def to_poset(self) -> FinitePoset:
        rel = [(a, b) for a in self.elements for b in self.up_of(a)]
        rank = {x: self._pos[self.complex.types[x]] for x in self.elements}
        return FinitePoset(self.elements, rel, rank, close=False)


def _order(p):
    """(elements, up-map, down-map, le) for a poset or a typed view."""
    if isinstance(p, FinitePoset):
        return p.elements, p.up, p.down, p.le
    up = {x: frozenset(p.up_of(x)) for x in p.elements}
    down = {x: frozenset(p.down_of(x)) for x in p.elements}
    return p.elements, up, down, p.le


def is_partial_order(view: TypedOrderView) -> Verdict:
    """Transitivity of the typed relation; a failing triple (x, y, z) has x<y<z, not x<z."""
    pending = None
    for y in view.elements:
        for x in view.down_of(y):
            for z in view.up_of(y):
                if not view.lt(x, z):
                    if view.in_certified(x, y, z):
                        return Verdict.fails((x, y, z))
                    pending = pending or (x, y, z)
    if pending is not None:
        return Verdict.unknown(pending, "violation touches the window boundary")
    return Verdict.holds()


@dataclass(frozen=True)
class Bowtie:
    x1: Hashable
    y1: Hashable
    x2: Hashable
    y2: Hashable
    resolved: bool
    centre: Hashable = None


def bowties(p) -> list:
    """All bowties x1 y1 x2 y2 (as unordered pairs {x1,x2} below {y1,y2})."""
    elements, up, down, le = _order(p)
    key = {x: k for k, x in enumerate(elements)}
    out = []
    for x1, x2 in itertools.combinations(elements, 2):
        common = sorted(up[x1] & up[x2], key=key.get)
        for y1, y2 in itertools.combinations(common, 2):
            if len({x1, x2, y1, y2}) < 4:
                continue
            middle = [z for z in elements if le(x1, z) and le(x2, z) and le(z, y1) and le(z, y2)]
            out.append(Bowtie(x1, y1, x2, y2, bool(middle), middle[0] if middle else None))
    return out


def is_bowtie_free(p) -> Verdict:
    for b in bowties(p):
        if not b.resolved:
            if isinstance(p, TypedOrderView) and not p.in_certified(b.x1, b.y1, b.x2, b.y2):
                continue
            return Verdict.fails(b)
    return Verdict.holds()


def check_join_hypotheses(p: FinitePoset) -> dict:
    rank = p.rank if p.rank is not None else p.chain_rank()
    if p.rank_violation(rank):
        raise HypothesisFailed(f"not weakly graded: {p.rank_violation(rank)}")
    bt = is_bowtie_free(p)
    if not bt:
        raise HypothesisFailed(f"unresolved bowtie {bt.witness}")
    return rank


def _pair_join(p: FinitePoset, a, b):
    ub = p.upper_bounds((a, b))
    if not ub:
        raise NoBound(f"{a!r} and {b!r} have no upper bound")
    mins = p.minimal(ub)
    if len(mins) != 1:
        raise HypothesisFailed(f"upper bounds of {a!r}, {b!r} have minimal elements {mins}")
    return mins[0]


def _pair_meet(p: FinitePoset, a, b):
    lb = p.lower_bounds((a, b))
    if not lb:
        raise NoBound(f"{a!r} and {b!r} have no lower bound")
    maxs = p.maximal(lb)
    if len(maxs) != 1:
        raise HypothesisFailed(f"lower bounds of {a!r}, {b!r} have maximal elements {maxs}")
    return maxs[0]


def join(p: FinitePoset, q: Iterable):
    """Join of q, by growing the join of a subset until its rank stops rising."""
    q = list(q)
    if not q:
        raise ValueError("empty subset")
    rank = check_join_hypotheses(p)
    if not p.upper_bounds(q):
        raise NoBound("subset has no upper bound")
    u = q[0]
    changed = True
    while changed:
        changed = False
        for x in q:
            v = _pair_join(p, u, x)
            if rank[v] > rank[u]:
                u, changed = v, True
    return u


def meet(p: FinitePoset, q: Iterable):
    q = list(q)
    if not q:
        raise ValueError("empty subset")
    rank = check_join_hypotheses(p)
    if not p.lower_bounds(q):
        raise NoBound("subset has no lower bound")
    u = q[0]
    changed = True
    while changed:
        changed = False
        for x in q:
            v = _pair_meet(p, u, x)
            if rank[v] < rank[u]:
                u, changed = v, True
    return u


def brute_force_join(p: FinitePoset, q: Iterable):
    ub = p.upper_bounds(q)
    least = [u for u in ub if all(p.le(u, v) for v in ub)]
    return least[0] if least else None


# ---------------------------------------------------------------- flag conditions


def _flag(p, upward: bool, weak: bool) -> Verdict:
    elements, up, down, le = _order(p)
    above = up if upward else down
    maximal = {x for x in elements if not above[x]}

    def bounds(xs):
        out = None
        for x in xs:
            s = set(above[x]) | {x}
            out = s if out is None else out & s
        return out

    def paired(a, b):
        bs = bounds((a, b))
        if weak:
            bs -= maximal
        return bool(bs)

    for trip in itertools.combinations(elements, 3):
        if all(paired(a, b) for a, b in itertools.combinations(trip, 2)) and not bounds(trip):
            if isinstance(p, TypedOrderView) and not p.in_certified(*trip):
                continue
            return Verdict.fails(trip)
    return Verdict.holds()


def flag_checks(p) -> dict:
    return {
        "upward_flag": _flag(p, True, False),
        "downward_flag": _flag(p, False, False),
        "weakly_upward_flag": _flag(p, True, True),
        "weakly_downward_flag": _flag(p, False, True),
    }


# ---------------------------------------------------------------- generators


def random_graded_poset(rng: random.Random, max_elements: int = 12) -> FinitePoset:
    """A random poset ranked by levels; relations mostly join consecutive levels."""
    n = rng.randint(1, max_elements)
    levels = rng.randint(1, min(4, n))
    level = sorted(rng.randrange(levels) for _ in range(n))
    p_edge = rng.choice((0.25, 0.4, 0.6))
    rel = []
    for a in range(n):
        for b in range(n):
            gap = level[b] - level[a]
            if gap == 1 and rng.random() < p_edge or gap > 1 and rng.random() < p_edge / 4:
                rel.append((a, b))
    return FinitePoset(range(n), rel, {i: level[i] for i in range(n)})


def random_bowtie_free_poset(rng: random.Random, max_elements: int = 12, attempts: int = 10_000) -> FinitePoset:
    for _ in range(attempts):
        p = random_graded_poset(rng, max_elements)
        if is_bowtie_free(p):
            return p
    raise RuntimeError("no bowtie-free poset found")


def boolean_lattice(atoms: int) -> FinitePoset:
    elems = [frozenset(c) for k in range(atoms + 1) for c in itertools.combinations(range(atoms), k)]
    rel = [(a, b) for a in elems for b in elems if a < b]
    return FinitePoset(elems, rel, {e: len(e) for e in elems})
