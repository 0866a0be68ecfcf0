"""Build the extremal families and check them the slow, honest way.

For every n the graph is re-embedded and the forbidden patterns are
searched for directly; the edge count is only compared against the
formula.  Face sizes of the largest graph are printed at the end.

    python demos/constructions_at_scale.py [n_max]
"""

import sys
import time

from planar_turan import (
    c3c3_extremal,
    c3c4_extremal,
    face_stats,
    is_free,
    planarity_embed,
    trace_faces,
    turan_formula,
)
from planar_turan.constructions import C3_U_C4, C3C3, C3C4, TWO_C3

n_max = int(sys.argv[1]) if len(sys.argv) > 1 else 200

builders = {"c3c3": (c3c3_extremal, 7, (C3C3, TWO_C3)), "c3c4": (c3c4_extremal, 8, (C3C4, C3_U_C4))}
for name, (build, n0, avoided) in builders.items():
    start = time.monotonic()
    for n in range(n0, n_max + 1):
        g = build(n)
        rs = planarity_embed(g)
        assert rs is not None, (name, n)
        assert g.m == turan_formula(n, name), (name, n, g.m)
        assert all(is_free(g, p) for p in avoided), (name, n)
    stats = face_stats(trace_faces(rs), g)
    print(f"{name}: n={n0}..{n_max} ok in {time.monotonic() - start:.1f}s")
    print(f"  at n={n_max}: {g.m} edges, faces by size {dict(sorted(stats.f.items()))}")
