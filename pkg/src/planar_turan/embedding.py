"""Plane graphs as rotation systems: planarity, face tracing, face statistics.

Orientation convention, used everywhere in the package: ``rotation[v]`` lists
the neighbours of ``v`` in *clockwise* order.  The face successor of the dart
``(u, v)`` is ``(v, w)`` where ``w`` immediately precedes ``u`` in
``rotation[v]``.  Under this rule the wedge at ``v`` between ``rotation[v][j]``
and ``rotation[v][j+1]`` is the face containing the dart ``(v, rotation[v][j])``.

Face size counts darts, so a bridge contributes 2 to the single face on both
of its sides and the sizes always sum to ``2e``.

A disconnected graph is drawn with its components side by side: one face of
every component with edges (its "outer" face) is merged into a single shared
face.  ``RotationSystem.outer`` may name that face per component by one of its
darts; otherwise the largest face of the component is used.  An edgeless graph
has exactly one face, of size 0.  With ``c`` components the face count is
therefore ``e - n + 1 + c``.
"""

from __future__ import annotations

import itertools
import math
from collections import Counter
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterator, Sequence

import networkx as nx
import numpy as np

from .graph import Graph

Dart = tuple[int, int]

ALL_EMBEDDINGS_MAX = 7


def _normalize(seq: Sequence[int]) -> tuple[int, ...]:
    if not seq:
        return ()
    i = seq.index(min(seq))
    return tuple(seq[i:]) + tuple(seq[:i])


@dataclass(frozen=True)
class RotationSystem:
    """Clockwise cyclic neighbour order per vertex.

    Rotations are stored rotated to start at the smallest neighbour, so two
    systems that differ only by cyclic shifts compare equal.
    """

    rotation: tuple[tuple[int, ...], ...]
    outer: tuple[Dart, ...] = ()

    def __post_init__(self) -> None:
        rot = tuple(_normalize(tuple(r)) for r in self.rotation)
        object.__setattr__(self, "rotation", rot)
        object.__setattr__(self, "outer", tuple(sorted(tuple(d) for d in self.outer)))
        n = len(rot)
        for v, r in enumerate(rot):
            if len(set(r)) != len(r):
                raise ValueError(f"rotation at {v} repeats a neighbour")
            for u in r:
                if not 0 <= u < n or u == v:
                    raise ValueError(f"bad neighbour {u} in rotation at {v}")
                if v not in rot[u]:
                    raise ValueError(f"rotation not symmetric: {u} in rotation[{v}] but not vice versa")
        for u, v in self.outer:
            if not (0 <= u < n and v in rot[u]):
                raise ValueError(f"outer dart ({u}, {v}) is not a dart of the rotation system")

    @property
    def n(self) -> int:
        return len(self.rotation)

    @cached_property
    def graph(self) -> Graph:
        return Graph.from_edges(self.n, [(u, v) for u, r in enumerate(self.rotation) for v in r if u < v])

    @cached_property
    def _position(self) -> list[dict[int, int]]:
        return [{u: i for i, u in enumerate(r)} for r in self.rotation]

    def successor(self, dart: Dart) -> Dart:
        u, v = dart
        r = self.rotation[v]
        return (v, r[self._position[v][u] - 1])

    def darts(self) -> list[Dart]:
        return [(u, v) for u, r in enumerate(self.rotation) for v in sorted(r)]

    def reflected(self) -> RotationSystem:
        """Mirror image: every rotation reversed; faces become reversed walks."""
        rev = RotationSystem(tuple(tuple(reversed(r)) for r in self.rotation))
        outer = []
        for d in self.outer:
            orbit = _orbit(self, d)
            outer.append(min((b, a) for a, b in orbit))
        return RotationSystem(rev.rotation, tuple(outer))

    def orbits(self) -> list[tuple[Dart, ...]]:
        """Raw dart orbits of the successor rule, each starting at its smallest dart."""
        seen: set[Dart] = set()
        out = []
        for d in self.darts():
            if d in seen:
                continue
            orbit = _orbit(self, d)
            seen.update(orbit)
            out.append(orbit)
        return out


def _orbit(rs: RotationSystem, start: Dart) -> tuple[Dart, ...]:
    walk = [start]
    d = rs.successor(start)
    limit = 2 * sum(len(r) for r in rs.rotation)
    while d != start:
        walk.append(d)
        d = rs.successor(d)
        if len(walk) > limit:
            raise ValueError(f"successor rule does not close from dart {start}")
    return tuple(walk)


@dataclass(frozen=True)
class Face:
    """A face as one or more closed boundary walks of darts."""

    walks: tuple[tuple[Dart, ...], ...]

    @property
    def size(self) -> int:
        return sum(len(w) for w in self.walks)

    @property
    def darts(self) -> tuple[Dart, ...]:
        return tuple(d for w in self.walks for d in w)

    @cached_property
    def vertices(self) -> frozenset[int]:
        return frozenset(u for w in self.walks for u, _ in w)

    def __contains__(self, v: object) -> bool:
        return v in self.vertices

    def as_dict(self) -> dict:
        return {"size": self.size, "walks": [[list(d) for d in w] for w in self.walks]}


def trace_faces(rs: RotationSystem) -> list[Face]:
    """Faces of the plane graph described by ``rs`` (see module docstring)."""
    g = rs.graph
    if g.m == 0:
        return [Face(())]
    orbits = rs.orbits()
    comp_of = {}
    for i, comp in enumerate(g.components()):
        for v in comp:
            comp_of[v] = i
    by_comp: dict[int, list[tuple[Dart, ...]]] = {}
    for o in orbits:
        by_comp.setdefault(comp_of[o[0][0]], []).append(o)
    if len(by_comp) < 2:
        return [Face((o,)) for o in orbits]
    chosen = set()
    wanted = {comp_of[u]: (u, v) for u, v in rs.outer}
    for c, obs in by_comp.items():
        if c in wanted:
            pick = next(o for o in obs if wanted[c] in o)
        else:
            pick = max(obs, key=len)  # first largest: orbits are sorted by min dart
        chosen.add(pick)
    faces = [Face((o,)) for o in orbits if o not in chosen]
    faces.append(Face(tuple(sorted(chosen))))
    faces.sort(key=lambda f: f.walks[0][0])
    return faces


def dart_faces(faces: Sequence[Face]) -> dict[Dart, int]:
    """Map each dart to the index of its face in ``faces``."""
    return {d: i for i, f in enumerate(faces) for d in f.darts}


def euler_holds(rs: RotationSystem) -> bool:
    """Per component ``n_c - e_c + f_c = 2`` on raw orbits, and ``f = e - n + 1 + c`` overall."""
    g = rs.graph
    comps = g.components()
    orbits = rs.orbits()
    count = Counter()
    where = {}
    for i, comp in enumerate(comps):
        for v in comp:
            where[v] = i
    for o in orbits:
        count[where[o[0][0]]] += 1
    for i, comp in enumerate(comps):
        e_c = sum(g.degree(v) for v in comp) // 2
        f_c = count[i] if e_c else 1
        if len(comp) - e_c + f_c != 2:
            return False
    return len(trace_faces(rs)) == g.m - g.n + 1 + len(comps)


@dataclass
class FaceStats:
    """Face-size counts and edge/face incidences.

    ``e_single[i]`` counts edges with at least one side on an i-face;
    ``e_pair[(i, j)]`` (``i <= j``) counts edges with one side on an i-face and
    the other on a j-face.  A bridge has both sides on the same face, so it
    counts towards ``e_pair[(i, i)]``.
    """

    f: dict[int, int]
    e_single: dict[int, int]
    e_pair: dict[tuple[int, int], int]
    edges: int

    @property
    def total(self) -> int:
        return sum(self.f.values())

    def f_i(self, i: int) -> int:
        return self.f.get(i, 0)

    def e_i(self, i: int) -> int:
        return self.e_single.get(i, 0)

    def e_ij(self, i: int, j: int) -> int:
        return self.e_pair.get((min(i, j), max(i, j)), 0)

    def property1_violations(self) -> list[str]:
        bad = []
        for i in sorted(set(self.f) | set(self.e_single)):
            ei, eii = self.e_i(i), self.e_ij(i, i)
            if not eii <= ei <= self.edges:
                bad.append(f"e_{i},{i}={eii} <= e_{i}={ei} <= e={self.edges} fails")
            if i * self.f_i(i) != ei + eii:
                bad.append(f"{i}*f_{i}={i * self.f_i(i)} != e_{i}+e_{i},{i}={ei + eii}")
        if sum(i * c for i, c in self.f.items()) != 2 * self.edges:
            bad.append("sum of i*f_i differs from 2e")
        return bad

    @property
    def property1_ok(self) -> bool:
        return not self.property1_violations()

    def as_dict(self) -> dict:
        out: dict = {
            "f": {str(i): c for i, c in sorted(self.f.items())},
            "faces": self.total,
            "edges": self.edges,
            "property1_ok": self.property1_ok,
        }
        for i, c in sorted(self.e_single.items()):
            out[f"e{i}"] = c
        for (i, j), c in sorted(self.e_pair.items()):
            out[f"e{i}{j}" if i < 10 and j < 10 else f"e{i}_{j}"] = c
        return out


def face_stats(faces: Sequence[Face], g: Graph) -> FaceStats:
    where = dart_faces(faces)
    size = [f.size for f in faces]
    e_single: Counter = Counter()
    e_pair: Counter = Counter()
    for u, v in g.edges():
        a, b = size[where[(u, v)]], size[where[(v, u)]]
        e_pair[(min(a, b), max(a, b))] += 1
        e_single[a] += 1
        if b != a:
            e_single[b] += 1
    return FaceStats(dict(Counter(size)), dict(e_single), dict(e_pair), g.m)


# ---------------------------------------------------------------------------
# Planarity
# ---------------------------------------------------------------------------


def is_planar(g: Graph) -> bool:
    if g.n >= 3 and g.m > 3 * g.n - 6:
        return False
    return nx.check_planarity(_to_nx(g))[0]


def _to_nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


def planarity_embed(g: Graph) -> RotationSystem | None:
    """A planar rotation system for ``g``, or ``None`` if ``g`` is not planar."""
    if g.n >= 3 and g.m > 3 * g.n - 6:
        return None
    ok, emb = nx.check_planarity(_to_nx(g))
    if not ok:
        return None
    rs = RotationSystem(tuple(tuple(emb.neighbors_cw_order(v)) for v in range(g.n)))
    if not euler_holds(rs):
        raise RuntimeError("planarity backend returned a non-planar rotation system")
    return rs


def rotation_system(g: Graph, rotation: dict[int, Sequence[int]] | Sequence[Sequence[int]]) -> RotationSystem:
    """Build and check a rotation system for ``g`` from explicit clockwise orders."""
    rows = [tuple(rotation[v]) for v in range(g.n)] if isinstance(rotation, dict) else [tuple(r) for r in rotation]
    rs = RotationSystem(tuple(rows))
    if rs.graph != g:
        raise ValueError("rotation system does not describe the given graph")
    return rs


# ---------------------------------------------------------------------------
# Exhaustive embeddings
# ---------------------------------------------------------------------------

_CHUNK = 1 << 15


def _planar_rotations(g: Graph, comp: list[int]) -> list[dict[int, tuple[int, ...]]]:
    """All planar rotation choices on one connected component (mirror pairs included)."""
    darts = [(u, v) for u in comp for v in g.neighbors(u)]
    if not darts:
        return [{comp[0]: ()}]
    index = {d: i for i, d in enumerate(darts)}
    target = len(darts) // 2 - len(comp) + 2
    verts, incoming, tables, options = [], [], [], []
    for v in comp:
        nb = g.neighbors(v)
        rots = [(nb[0],) + p for p in itertools.permutations(nb[1:])]
        table = np.array(
            [[index[(v, r[(r.index(u) - 1) % len(r)])] for u in nb] for r in rots], dtype=np.int16
        )
        verts.append(v)
        incoming.append(np.array([index[(u, v)] for u in nb], dtype=np.intp))
        tables.append(table)
        options.append(rots)
    radices = [len(t) for t in tables]
    total = math.prod(radices)
    nd = len(darts)
    steps = max(1, math.ceil(math.log2(nd)))
    ident = np.arange(nd, dtype=np.int16)
    found = []
    for start in range(0, total, _CHUNK):
        idx = np.arange(start, min(total, start + _CHUNK), dtype=np.int64)
        succ = np.empty((len(idx), nd), dtype=np.int16)
        digits = []
        rest = idx
        for inc, table, radix in zip(incoming, tables, radices):
            choice = rest % radix
            rest = rest // radix
            digits.append(choice)
            succ[:, inc] = table[choice]
        low = np.broadcast_to(ident, succ.shape).copy()
        jump = succ.astype(np.intp)
        for _ in range(steps):
            low = np.minimum(low, np.take_along_axis(low, jump, axis=1))
            jump = np.take_along_axis(jump, jump, axis=1)
        faces = (low == ident).sum(axis=1)
        for row in np.nonzero(faces == target)[0]:
            found.append({v: options[k][digits[k][row]] for k, v in enumerate(verts)})
    return found


def all_rotation_systems(g: Graph) -> Iterator[RotationSystem]:
    """Every planar rotation system of ``g`` once up to global reflection.

    For two or more components with edges, each choice of shared outer face
    per component is a separate embedding.  Limited to ``n <= 7``.
    """
    if g.n > ALL_EMBEDDINGS_MAX:
        raise ValueError(f"exhaustive embeddings limited to n <= {ALL_EMBEDDINGS_MAX}, got {g.n}")
    comps = g.components()
    per_comp = [_planar_rotations(g, c) for c in comps]
    nontrivial = [i for i, c in enumerate(comps) if len(c) > 1]
    for combo in itertools.product(*per_comp):
        rot: dict[int, tuple[int, ...]] = {}
        for part in combo:
            rot.update(part)
        base = RotationSystem(tuple(rot[v] for v in range(g.n)))
        if len(nontrivial) < 2:
            candidates = [base]
        else:
            comp_of = {v: i for i, c in enumerate(comps) for v in c}
            faces_by_comp: dict[int, list[Dart]] = {}
            for o in base.orbits():
                faces_by_comp.setdefault(comp_of[o[0][0]], []).append(o[0])
            candidates = [
                RotationSystem(base.rotation, outer)
                for outer in itertools.product(*(faces_by_comp[i] for i in nontrivial))
            ]
        for rs in candidates:
            mirror = rs.reflected()
            if (rs.rotation, rs.outer) <= (mirror.rotation, mirror.outer):
                yield rs
