from __future__ import annotations

import itertools
import random
from functools import lru_cache

import networkx as nx
import pytest

from planar_turan.constructions import named_graph
from planar_turan.embedding import is_planar
from planar_turan.graph import Graph
from planar_turan.search import exact_ex_p

# Lines printed by test_acceptance, shown again in the terminal summary.
ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


# ---------------------------------------------------------------------------
# Corpora
# ---------------------------------------------------------------------------


def from_nx(h: nx.Graph) -> Graph:
    h = nx.convert_node_labels_to_integers(h, ordering="sorted")
    return Graph.from_edges(h.number_of_nodes(), h.edges())


@lru_cache(maxsize=1)
def atlas() -> tuple[Graph, ...]:
    """All 1253 graphs on at most 7 vertices (one per isomorphism class)."""
    return tuple(from_nx(h) for h in nx.graph_atlas_g())


FIXTURE_NAMES = (
    "k3",
    "k4",
    "c4",
    "c5",
    "p4",
    "theta4",
    "prism",
    "bowtie",
    "paw",
    "octahedron",
    "k5_minus_edge",
    "two_triangles",
    "linked_triangles",
    "fan5",
    "wheel4",
    "wheel5",
    "k2,3",
    "double_wheel10",
    "B1_c33",
    "B2_c33",
    "B3_c33",
    "B2_c34",
    "B3_c34",
    "B4_c34",
)


def fixtures() -> list[Graph]:
    return [named_graph(n) for n in FIXTURE_NAMES]


def random_planar(rng: random.Random, n_max: int = 10) -> Graph:
    """Insert edges in random order, keeping each one that leaves the graph planar,
    and stop at a random target size (so sparse and disconnected graphs appear)."""
    n = rng.randint(1, n_max)
    pairs = list(itertools.combinations(range(n), 2))
    rng.shuffle(pairs)
    target = rng.randint(0, max(0, 3 * n - 6) if n >= 3 else len(pairs))
    g = Graph.empty(n)
    for u, v in pairs:
        if g.m >= target:
            break
        h = g.add_edge(u, v)
        if is_planar(h):
            g = h
    return g


# ---------------------------------------------------------------------------
# Naive oracles, written without the package's bitset machinery
# ---------------------------------------------------------------------------


@lru_cache(maxsize=None)
def naive_cycles(g: Graph, k: int) -> frozenset[frozenset[int]]:
    """Vertex sets of k-cycles, by trying every ordered k-tuple."""
    out = set()
    for seq in itertools.permutations(range(g.n), k):
        if all(g.has_edge(seq[i], seq[(i + 1) % k]) for i in range(k)):
            out.add(frozenset(seq))
    return frozenset(out)


def naive_pair(g: Graph, k: int, l: int, bridge: bool) -> bool:
    for a in naive_cycles(g, k):
        for b in naive_cycles(g, l):
            if a & b:
                continue
            if not bridge or any(g.has_edge(x, y) for x in a for y in b):
                return True
    return False


def naive_packing(g: Graph) -> int:
    cycles = [c for k in range(3, g.n + 1) for c in naive_cycles(g, k)]
    best = 0

    def grow(start: int, used: frozenset, count: int) -> None:
        nonlocal best
        best = max(best, count)
        for i in range(start, len(cycles)):
            if not cycles[i] & used:
                grow(i + 1, used | cycles[i], count + 1)

    grow(0, frozenset(), 0)
    return best


@lru_cache(maxsize=None)
def cached_search(n: int, pattern: str):
    return exact_ex_p(n, pattern)


@pytest.fixture(scope="session")
def search():
    return cached_search
