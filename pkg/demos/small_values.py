"""Exact planar Turán numbers for small n, next to the closed forms.

Each row is a complete search: the value is the largest edge count reached
by a planar pattern-free graph, and no graph with one more edge exists.
The union pattern has two closed forms in circulation; both are shown.

    python demos/small_values.py [n_max]

n_max=8 takes about a minute; that is where the two union forms part.
"""

import sys

from planar_turan import exact_ex_p, to_graph6, turan_candidates

n_max = int(sys.argv[1]) if len(sys.argv) > 1 else 7

for pattern in ("c3c3", "c3c4", "2c3", "c3uc4"):
    print(f"\n{pattern}")
    print(f"{'n':>3} {'ex':>4}  {'closed forms':<24} {'examined':>8}  witness")
    for n in range(3, n_max + 1):
        r = exact_ex_p(n, pattern)
        forms = ", ".join(f"{k}={v}" for k, v in sorted(turan_candidates(n, pattern).items()))
        flag = "" if all(v == r.value for v in turan_candidates(n, pattern).values()) else "  <- disagrees"
        print(f"{n:>3} {r.value:>4}  {forms:<24} {r.graphs_examined:>8}  {to_graph6(r.witness)}{flag}")
