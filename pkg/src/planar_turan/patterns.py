"""Forbidden configurations: cycles, linked cycle pairs, disjoint unions,
vertex-disjoint cycle packings and the theta graph on four vertices.

Everything works on bitmasks.  A *linked pair* ``C_k-C_l`` is two
vertex-disjoint cycles of lengths ``k`` and ``l`` joined by at least one edge;
a *union* ``C_k u C_l`` drops the connecting edge.  The relation is symmetric
in ``(k, l)``, so ``linked(3, 4)`` and ``linked(4, 3)`` describe the same
family.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator

from .graph import Graph, _bits

PACKING_MAX = 12


@dataclass(frozen=True)
class CycleWitness:
    vertices: tuple[int, ...]

    @property
    def length(self) -> int:
        return len(self.vertices)

    @property
    def mask(self) -> int:
        m = 0
        for v in self.vertices:
            m |= 1 << v
        return m

    def is_valid(self, g: Graph, k: int | None = None) -> bool:
        vs = self.vertices
        if len(vs) < 3 or len(set(vs)) != len(vs) or (k is not None and len(vs) != k):
            return False
        return all(g.has_edge(vs[i], vs[(i + 1) % len(vs)]) for i in range(len(vs)))

    def as_list(self) -> list[int]:
        return list(self.vertices)


@dataclass(frozen=True)
class LinkedPairWitness:
    cycle1: CycleWitness
    cycle2: CycleWitness
    bridge: tuple[int, int]

    def is_valid(self, g: Graph, k: int | None = None, l: int | None = None) -> bool:
        a, b = self.bridge
        return (
            self.cycle1.is_valid(g, k)
            and self.cycle2.is_valid(g, l)
            and not self.cycle1.mask & self.cycle2.mask
            and a in self.cycle1.vertices
            and b in self.cycle2.vertices
            and g.has_edge(a, b)
        )

    def as_dict(self) -> dict:
        return {"cycle1": self.cycle1.as_list(), "cycle2": self.cycle2.as_list(), "bridge": list(self.bridge)}


@dataclass(frozen=True)
class PatternSpec:
    """One of ``linked(k, l)``, ``union(k, l)``, ``t_cycles(t)``, ``theta4``."""

    kind: str
    k: int = 0
    l: int = 0

    def __post_init__(self) -> None:
        if self.kind in ("linked", "union"):
            if min(self.k, self.l) < 3:
                raise ValueError("cycle lengths must be at least 3")
            if self.k > self.l:  # canonical order; the relation is symmetric
                a, b = self.l, self.k
                object.__setattr__(self, "k", a)
                object.__setattr__(self, "l", b)
        elif self.kind == "t_cycles":
            if self.k < 1:
                raise ValueError("t must be positive")
        elif self.kind != "theta4":
            raise ValueError(f"unknown pattern kind {self.kind!r}")

    @property
    def name(self) -> str:
        if self.kind == "linked":
            return f"C{self.k}-C{self.l}"
        if self.kind == "union":
            return f"C{self.k}uC{self.l}" if self.k != self.l else f"2C{self.k}"
        if self.kind == "t_cycles":
            return f"{self.k}C"
        return "theta4"

    @property
    def min_vertices(self) -> int:
        if self.kind in ("linked", "union"):
            return self.k + self.l
        if self.kind == "t_cycles":
            return 3 * self.k
        return 4


def linked(k: int, l: int) -> PatternSpec:
    return PatternSpec("linked", k, l)


def union(k: int, l: int) -> PatternSpec:
    return PatternSpec("union", k, l)


def t_cycles(t: int) -> PatternSpec:
    return PatternSpec("t_cycles", t)


THETA4 = PatternSpec("theta4")

PATTERN_NAMES = {
    "c3c3": linked(3, 3),
    "c3c4": linked(3, 4),
    "2c3": union(3, 3),
    "c3uc4": union(3, 4),
    "theta4": THETA4,
}


def parse_pattern(name: str) -> PatternSpec:
    """``c3c3``, ``c3c4``, ``2c3``, ``c3uc4``, ``theta4``, ``linked:k,l``,
    ``union:k,l`` or ``tc:t``."""
    key = name.strip().lower()
    if key in PATTERN_NAMES:
        return PATTERN_NAMES[key]
    m = re.fullmatch(r"(linked|union):(\d+),(\d+)", key)
    if m:
        return PatternSpec(m.group(1), int(m.group(2)), int(m.group(3)))
    m = re.fullmatch(r"tc:(\d+)", key)
    if m:
        return t_cycles(int(m.group(1)))
    raise ValueError(f"unknown pattern {name!r}")


# ---------------------------------------------------------------------------
# Cycles
# ---------------------------------------------------------------------------


def _iter_cycles(adj: tuple[int, ...], k: int) -> Iterator[tuple[int, ...]]:
    # Each cycle once: smallest vertex first, second vertex < last vertex.
    n = len(adj)
    for s in range(n):
        higher = ((1 << n) - 1) >> (s + 1) << (s + 1)
        stack = [(s, (s,), 1 << s)]
        while stack:
            v, seq, used = stack.pop()
            if len(seq) == k:
                if adj[v] >> s & 1 and seq[1] < seq[-1]:
                    yield seq
                continue
            for w in sorted(_bits(adj[v] & higher & ~used), reverse=True):
                stack.append((w, seq + (w,), used | 1 << w))


def find_cycles(g: Graph, k: int) -> list[CycleWitness]:
    """All k-cycles, each once up to rotation and reflection, in lexicographic order."""
    if k < 3:
        raise ValueError("cycle length must be at least 3")
    if k > g.n:
        return []
    return [CycleWitness(c) for c in _iter_cycles(g.adj, k)]


@lru_cache(maxsize=1 << 16)
def _cycle_sets(adj: tuple[int, ...], k: int) -> dict[int, tuple[int, ...]]:
    """Vertex masks carrying a k-cycle, mapped to the first such cycle."""
    out: dict[int, tuple[int, ...]] = {}
    if k == 3:
        n = len(adj)
        for u in range(n):
            for v in _bits(adj[u] >> (u + 1) << (u + 1)):
                for w in _bits(adj[u] & adj[v] >> (v + 1) << (v + 1)):
                    out.setdefault(1 << u | 1 << v | 1 << w, (u, v, w))
        return out
    for c in _iter_cycles(adj, k):
        m = 0
        for v in c:
            m |= 1 << v
        out.setdefault(m, c)
    return out


def _neighborhood(adj: tuple[int, ...], mask: int) -> int:
    nb = 0
    for v in _bits(mask):
        nb |= adj[v]
    return nb


def _pair_search(g: Graph, k: int, l: int, need_bridge: bool) -> tuple[tuple[int, ...], tuple[int, ...]] | None:
    if g.n < k + l:
        return None
    adj = g.adj
    first = _cycle_sets(adj, k)
    if not first:
        return None
    second = first if l == k else _cycle_sets(adj, l)
    if not second:
        return None
    for a, ca in sorted(first.items(), key=lambda t: t[1]):
        nb = _neighborhood(adj, a) if need_bridge else -1
        for b, cb in sorted(second.items(), key=lambda t: t[1]):
            if not a & b and nb & b:
                return ca, cb
    return None


def find_linked_pair(g: Graph, k: int, l: int) -> LinkedPairWitness | None:
    """Vertex-disjoint ``C_k`` and ``C_l`` joined by an edge, or ``None``.

    Deterministic: the lexicographically first ``C_k`` that has a partner,
    then its first partner, then the smallest bridge edge.
    """
    hit = _pair_search(g, k, l, need_bridge=True)
    if hit is None and k != l:
        hit = _pair_search(g, l, k, need_bridge=True)
    if hit is None:
        return None
    ca, cb = hit
    mb = 0
    for v in cb:
        mb |= 1 << v
    bridge = next((a, b) for a in sorted(ca) for b in _bits(g.adj[a] & mb))
    return LinkedPairWitness(CycleWitness(ca), CycleWitness(cb), bridge)


def find_disjoint_union(g: Graph, k: int, l: int) -> tuple[CycleWitness, CycleWitness] | None:
    hit = _pair_search(g, k, l, need_bridge=False)
    if hit is None:
        return None
    return CycleWitness(hit[0]), CycleWitness(hit[1])


def _c4_through(adj: tuple[int, ...], x: int, allowed: int) -> bool:
    # A 4-cycle x-y-w-z inside `allowed` exists iff some w != x is adjacent
    # to two different neighbours of x.
    seen = twice = 0
    drop = ~(1 << x)
    for y in _bits(adj[x] & allowed):
        s = adj[y] & allowed & drop
        twice |= seen & s
        seen |= s
    return twice != 0


def _triangle_and_c4(g: Graph, need_bridge: bool) -> bool:
    """Existence-only test for ``C3-C4`` / ``C3uC4`` that avoids listing 4-cycles."""
    if g.n < 7:
        return False
    adj = g.adj
    full = (1 << g.n) - 1
    for a in _cycle_sets(adj, 3):
        rest = full & ~a
        starts = _neighborhood(adj, a) & rest if need_bridge else rest
        if any(_c4_through(adj, x, rest) for x in _bits(starts)):
            return True
    return False


def has_linked_pair(g: Graph, k: int, l: int) -> bool:
    if (k, l) in ((3, 4), (4, 3)):
        return _triangle_and_c4(g, True)
    return _pair_search(g, k, l, True) is not None or (k != l and _pair_search(g, l, k, True) is not None)


# ---------------------------------------------------------------------------
# Packings and theta
# ---------------------------------------------------------------------------


def _all_cycle_sets(g: Graph) -> dict[int, tuple[int, ...]]:
    out: dict[int, tuple[int, ...]] = {}
    for k in range(3, g.n + 1):
        for m, c in _cycle_sets(g.adj, k).items():
            out.setdefault(m, c)
    return out


def max_disjoint_cycles(g: Graph) -> tuple[int, list[CycleWitness]]:
    """Maximum number of pairwise vertex-disjoint cycles, with a packing."""
    if g.n > PACKING_MAX:
        raise ValueError(f"cycle packing limited to n <= {PACKING_MAX}, got {g.n}")
    sets = _all_cycle_sets(g)
    # Every cycle's vertex set contains a chordless cycle, so packing only
    # needs sets inducing exactly a cycle (every vertex has 2 neighbours inside).
    adj = g.adj
    minimal = [m for m in sets if all((adj[v] & m).bit_count() == 2 for v in _bits(m))]
    by_low: dict[int, list[int]] = {}
    for m in sorted(minimal):
        by_low.setdefault((m & -m).bit_length() - 1, []).append(m)

    @lru_cache(maxsize=None)
    def best(free: int) -> tuple[int, tuple[int, ...]]:
        if not free:
            return 0, ()
        low = (free & -free).bit_length() - 1
        result = best(free & ~(1 << low))
        for m in by_low.get(low, ()):
            if m & free == m:
                cnt, used = best(free & ~m)
                if cnt + 1 > result[0]:
                    result = (cnt + 1, (m,) + used)
        return result

    count, masks = best((1 << g.n) - 1)
    return count, [CycleWitness(sets[m]) for m in masks]


def find_theta4(g: Graph) -> tuple[int, int, int, int] | None:
    """An edge ``uv`` with two common neighbours ``a, b``: the 4-cycle
    ``u a v b`` plus chord ``uv``.  Returned as ``(u, v, a, b)``."""
    for u, v in g.edges():
        common = g.adj[u] & g.adj[v]
        if common.bit_count() >= 2:
            a, b = list(_bits(common))[:2]
            return u, v, a, b
    return None


def contains_theta4(g: Graph) -> bool:
    return find_theta4(g) is not None


# ---------------------------------------------------------------------------
# Dispatch
# ---------------------------------------------------------------------------


def find_pattern(g: Graph, pattern: PatternSpec):
    """Witness for ``pattern`` in ``g``, or ``None`` when ``g`` is free of it."""
    if pattern.kind == "linked":
        return find_linked_pair(g, pattern.k, pattern.l)
    if pattern.kind == "union":
        return find_disjoint_union(g, pattern.k, pattern.l)
    if pattern.kind == "t_cycles":
        if g.n < 3 * pattern.k:
            return None
        t, cycles = max_disjoint_cycles(g)
        return cycles[: pattern.k] if t >= pattern.k else None
    return find_theta4(g)


def is_free(g: Graph, pattern: PatternSpec) -> bool:
    if g.n < pattern.min_vertices:
        return True
    if pattern.kind == "linked":
        return not has_linked_pair(g, pattern.k, pattern.l)
    if pattern.kind == "union":
        if (pattern.k, pattern.l) == (3, 4):
            return not _triangle_and_c4(g, False)
        return _pair_search(g, pattern.k, pattern.l, False) is None
    return find_pattern(g, pattern) is None


def witness_as_dict(witness) -> object:
    if witness is None:
        return None
    if isinstance(witness, LinkedPairWitness):
        return witness.as_dict()
    if isinstance(witness, tuple) and witness and isinstance(witness[0], CycleWitness):
        return {"cycles": [c.as_list() for c in witness]}
    if isinstance(witness, list):
        return {"cycles": [c.as_list() for c in witness]}
    return {"theta4": list(witness)}
