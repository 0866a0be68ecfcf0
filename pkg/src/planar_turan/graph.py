"""Simple undirected graphs on vertices ``0..n-1`` with bitset adjacency.

A :class:`Graph` is an immutable value: adjacency is stored as one Python
``int`` per vertex, bit ``j`` of ``adj[i]`` set iff ``ij`` is an edge.  Labels are
0-based throughout; constructors that follow a 1-based drawing note the offset.

Also here: the plain-text edge-list format, graph6 (short form), the join
``G v H``, and canonical labelling used for isomorphism dedup.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Iterator, Sequence

MAX_VERTICES = 256
GRAPH6_MAX = 62
CANONICAL_MAX = 10

Edge = tuple[int, int]


class GraphFormatError(ValueError):
    """Malformed edge-list or graph6 input."""

    def __init__(self, message: str, lineno: int | None = None) -> None:
        self.lineno = lineno
        if lineno is not None:
            message = f"line {lineno}: {message}"
        super().__init__(message)


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True, eq=True)
class Graph:
    """Immutable simple graph.  ``adj[v]`` is the neighbour bitmask of ``v``."""

    n: int
    adj: tuple[int, ...] = field(repr=False)

    def __post_init__(self) -> None:
        if not 0 <= self.n <= MAX_VERTICES:
            raise ValueError(f"vertex count {self.n} outside 0..{MAX_VERTICES}")
        if len(self.adj) != self.n:
            raise ValueError("adjacency length does not match n")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.adj):
            if row & ~full:
                raise ValueError(f"vertex {v} has a neighbour index >= n")
            if row >> v & 1:
                raise ValueError(f"self-loop at vertex {v}")
            for u in _bits(row):
                if not self.adj[u] >> v & 1:
                    raise ValueError(f"adjacency not symmetric at ({v}, {u})")

    # -- construction ------------------------------------------------------

    @classmethod
    def empty(cls, n: int) -> Graph:
        return cls(n, (0,) * n)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Edge]) -> Graph:
        """Build from an edge iterable; duplicates and loops raise ``ValueError``."""
        adj = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            if adj[u] >> v & 1:
                raise ValueError(f"duplicate edge ({u}, {v})")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, tuple(adj))

    # -- queries -----------------------------------------------------------

    @cached_property
    def m(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def neighbors(self, v: int) -> list[int]:
        return list(_bits(self.adj[v]))

    def edges(self) -> list[Edge]:
        """Edge list ``(u, v)`` with ``u < v``, sorted lexicographically."""
        return [(u, v) for u in range(self.n) for v in _bits(self.adj[u] >> (u + 1) << (u + 1))]

    def degrees(self) -> list[int]:
        return [row.bit_count() for row in self.adj]

    def components(self) -> list[list[int]]:
        """Connected components, each sorted, ordered by smallest vertex."""
        seen = 0
        comps = []
        for s in range(self.n):
            if seen >> s & 1:
                continue
            comp = frontier = 1 << s
            while frontier:
                nxt = 0
                for v in _bits(frontier):
                    nxt |= self.adj[v]
                frontier = nxt & ~comp
                comp |= frontier
            seen |= comp
            comps.append(list(_bits(comp)))
        return comps

    # -- derived graphs ----------------------------------------------------

    def add_edge(self, u: int, v: int) -> Graph:
        if u == v or self.has_edge(u, v):
            raise ValueError(f"cannot add edge ({u}, {v})")
        adj = list(self.adj)
        adj[u] |= 1 << v
        adj[v] |= 1 << u
        return Graph(self.n, tuple(adj))

    def remove_edge(self, u: int, v: int) -> Graph:
        if not self.has_edge(u, v):
            raise ValueError(f"no edge ({u}, {v})")
        adj = list(self.adj)
        adj[u] &= ~(1 << v)
        adj[v] &= ~(1 << u)
        return Graph(self.n, tuple(adj))

    def relabel(self, perm: Sequence[int]) -> Graph:
        """Graph with vertex ``v`` renamed to ``perm[v]``."""
        adj = [0] * self.n
        for v in range(self.n):
            row = 0
            for u in _bits(self.adj[v]):
                row |= 1 << perm[u]
            adj[perm[v]] = row
        return Graph(self.n, tuple(adj))

    def induced(self, vertices: Iterable[int]) -> Graph:
        """Induced subgraph, vertices renumbered in increasing order."""
        vs = sorted(set(vertices))
        index = {v: i for i, v in enumerate(vs)}
        edges = [(index[u], index[v]) for u, v in self.edges() if u in index and v in index]
        return Graph.from_edges(len(vs), edges)

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m}, g6={to_graph6(self)!r})" if self.n <= GRAPH6_MAX else f"Graph(n={self.n}, m={self.m})"


# ---------------------------------------------------------------------------
# Small families
# ---------------------------------------------------------------------------


def complete(n: int) -> Graph:
    return Graph.from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def path(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycle needs at least 3 vertices")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete_bipartite(a: int, b: int) -> Graph:
    return Graph.from_edges(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def disjoint_union(g: Graph, h: Graph) -> Graph:
    edges = g.edges() + [(u + g.n, v + g.n) for u, v in h.edges()]
    return Graph.from_edges(g.n + h.n, edges)


def join(g: Graph, h: Graph) -> Graph:
    """``g v h``: disjoint union plus every edge between the two vertex sets.

    Vertices of ``g`` keep their labels; vertices of ``h`` are shifted by ``g.n``.
    """
    if g.n + h.n > MAX_VERTICES:
        raise ValueError(f"join would have {g.n + h.n} > {MAX_VERTICES} vertices")
    cross = [(u, g.n + v) for u in range(g.n) for v in range(h.n)]
    return Graph.from_edges(g.n + h.n, disjoint_union(g, h).edges() + cross)


# ---------------------------------------------------------------------------
# Edge-list text format
# ---------------------------------------------------------------------------


def parse_edge_list(text: str) -> Graph:
    """Parse ``"n m"`` followed by ``m`` lines ``"u v"``; ``#`` starts a comment.

    Errors carry the 1-based line number of the offending line.
    """
    header: tuple[int, int] | None = None
    adj: list[int] = []
    count = 0
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 2 or not all(p.lstrip("-").isdigit() for p in parts):
            what = "header 'n m'" if header is None else "edge 'u v'"
            raise GraphFormatError(f"expected {what}, got {raw.strip()!r}", lineno)
        a, b = int(parts[0]), int(parts[1])
        if header is None:
            if not 0 <= a <= MAX_VERTICES or b < 0:
                raise GraphFormatError(f"bad header values n={a} m={b}", lineno)
            header = (a, b)
            adj = [0] * a
            continue
        n = header[0]
        if not (0 <= a < n and 0 <= b < n):
            raise GraphFormatError(f"vertex out of range in edge ({a}, {b}) for n={n}", lineno)
        if a == b:
            raise GraphFormatError(f"loop at vertex {a}", lineno)
        if adj[a] >> b & 1:
            raise GraphFormatError(f"duplicate edge ({a}, {b})", lineno)
        count += 1
        if count > header[1]:
            raise GraphFormatError(f"more than the declared {header[1]} edges", lineno)
        adj[a] |= 1 << b
        adj[b] |= 1 << a
    if header is None:
        raise GraphFormatError("missing header 'n m'")
    if count != header[1]:
        raise GraphFormatError(f"header declares {header[1]} edges, found {count}")
    return Graph(header[0], tuple(adj))


def format_edge_list(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"] + [f"{u} {v}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# graph6 (short form, n <= 62)
# ---------------------------------------------------------------------------


def to_graph6(g: Graph) -> str:
    """Encode: byte ``n+63``, then upper-triangle bits in column order
    ``(0,1),(0,2),(1,2),(0,3),...`` packed six to a byte (``+63``), zero padded."""
    if g.n > GRAPH6_MAX:
        raise ValueError(f"graph6 short form supports n <= {GRAPH6_MAX}, got {g.n}")
    out = [chr(g.n + 63)]
    acc = nbits = 0
    for j in range(1, g.n):
        col = g.adj[j]
        for i in range(j):
            acc = acc << 1 | (col >> i & 1)
            nbits += 1
            if nbits == 6:
                out.append(chr(acc + 63))
                acc = nbits = 0
    if nbits:
        out.append(chr((acc << (6 - nbits)) + 63))
    return "".join(out)


def from_graph6(text: str) -> Graph:
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    if not s:
        raise GraphFormatError("empty graph6 string")
    for pos, ch in enumerate(s):
        if not 63 <= ord(ch) <= 126:
            raise GraphFormatError(f"byte {ord(ch)} at position {pos} outside printable range 63..126")
    n = ord(s[0]) - 63
    if n > GRAPH6_MAX:
        raise GraphFormatError(f"long-form graph6 (n > {GRAPH6_MAX}) not supported")
    nbits = n * (n - 1) // 2
    want = (nbits + 5) // 6
    if len(s) - 1 != want:
        kind = "trailing garbage" if len(s) - 1 > want else "truncated data"
        raise GraphFormatError(f"{kind}: expected {want} data bytes for n={n}, got {len(s) - 1}")
    data = 0
    for ch in s[1:]:
        data = data << 6 | (ord(ch) - 63)
    pad = want * 6 - nbits
    if data & ((1 << pad) - 1):
        raise GraphFormatError("nonzero padding bits")
    data >>= pad
    adj = [0] * n
    k = nbits
    for j in range(1, n):
        for i in range(j):
            k -= 1
            if data >> k & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
    return Graph(n, tuple(adj))


# ---------------------------------------------------------------------------
# Canonical labelling
# ---------------------------------------------------------------------------
#
# Individualisation-refinement: an equitable ordered partition is refined by
# neighbour counts per cell, the first non-singleton cell is branched on, and
# the leaf with the largest relabelled adjacency wins.  Cell order depends
# only on the graph, so the winning key is a labelling-independent invariant.
# Automorphisms found at equal leaves prune sibling branches (orbit pruning),
# twins are collapsed up front.


def _refine(adj: Sequence[int], cells: list[list[int]]) -> list[list[int]]:
    while True:
        masks = []
        for c in cells:
            m = 0
            for v in c:
                m |= 1 << v
            masks.append(m)
        out: list[list[int]] = []
        split = False
        for c in cells:
            if len(c) == 1:
                out.append(c)
                continue
            groups: dict[tuple[int, ...], list[int]] = {}
            for v in c:
                row = adj[v]
                key = tuple((row & m).bit_count() for m in masks)
                groups.setdefault(key, []).append(v)
            if len(groups) == 1:
                out.append(c)
            else:
                split = True
                for key in sorted(groups):
                    out.append(groups[key])
        cells = out
        if not split:
            return cells


def _leaf_key(adj: Sequence[int], order: Sequence[int]) -> tuple[int, ...]:
    pos = [0] * len(order)
    for p, v in enumerate(order):
        pos[v] = p
    key = []
    for v in order:
        row = 0
        for u in _bits(adj[v]):
            row |= 1 << pos[u]
        key.append(row)
    return tuple(key)


class _Canon:
    def __init__(self, adj: Sequence[int]) -> None:
        self.adj = adj
        self.n = len(adj)
        self.best: tuple[int, ...] | None = None
        self.best_order: list[int] = []
        self.autos: list[tuple[int, ...]] = []

    def run(self) -> None:
        self._search(_refine(self.adj, [list(range(self.n))]), [])

    def _orbit_find(self, prefix: list[int]):
        parent = list(range(self.n))

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for gamma in self.autos:
            if all(gamma[p] == p for p in prefix):
                for x in range(self.n):
                    a, b = find(x), find(gamma[x])
                    if a != b:
                        parent[max(a, b)] = min(a, b)
        return find

    def _search(self, cells: list[list[int]], prefix: list[int]) -> None:
        idx = next((i for i, c in enumerate(cells) if len(c) > 1), None)
        if idx is None:
            order = [c[0] for c in cells]
            key = _leaf_key(self.adj, order)
            if self.best is None or key > self.best:
                self.best, self.best_order = key, order
            elif key == self.best:
                gamma = [0] * self.n
                for a, b in zip(self.best_order, order):
                    gamma[a] = b
                self.autos.append(tuple(gamma))
            return
        cell = cells[idx]
        adj = self.adj
        reps: list[int] = []
        for v in cell:
            if any((adj[v] & ~(1 << r)) == (adj[r] & ~(1 << v)) for r in reps):
                continue  # twin of an earlier representative
            reps.append(v)
        tried: list[int] = []
        for v in reps:
            if tried and self.autos:
                find = self._orbit_find(prefix)
                fv = find(v)
                if any(find(t) == fv for t in tried):
                    continue
            tried.append(v)
            rest = [u for u in cell if u != v]
            sub = cells[:idx] + [[v], rest] + cells[idx + 1:]
            self._search(_refine(adj, sub), prefix + [v])


def canonical_labeling(g: Graph) -> tuple[list[int], list[tuple[int, ...]]]:
    """Return ``(order, automorphisms)``: ``order[p]`` is the vertex placed at
    canonical position ``p``; the automorphisms are those discovered during
    the search (they generate a subgroup of Aut(g), often all of it)."""
    if g.n > CANONICAL_MAX:
        raise ValueError(f"canonical labelling supported for n <= {CANONICAL_MAX}, got {g.n}")
    if g.n == 0:
        return [], []
    c = _Canon(g.adj)
    c.run()
    return c.best_order, c.autos


def canonical_graph(g: Graph) -> Graph:
    order, _ = canonical_labeling(g)
    perm = [0] * g.n
    for p, v in enumerate(order):
        perm[v] = p
    return g.relabel(perm)


def canonical_form(g: Graph) -> bytes:
    """Bytes equal for two graphs iff they are isomorphic (n <= 10)."""
    return to_graph6(canonical_graph(g)).encode("ascii")


def are_isomorphic(g: Graph, h: Graph) -> bool:
    if g.n != h.n or g.m != h.m or sorted(g.degrees()) != sorted(h.degrees()):
        return False
    return canonical_form(g) == canonical_form(h)
