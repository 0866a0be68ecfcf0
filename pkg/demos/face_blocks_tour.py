"""A short tour of 3-face stars and 3-face blocks.

The octahedron is a single block whose star sum overshoots 3|B| by six,
which is why the block inequality needs a surrounding graph.  A fan and
a wheel are single blocks too; the prism splits into two triangles that
sit well under budget.

    python demos/face_blocks_tour.py
"""

from planar_turan import block_report, named_graph, planarity_embed, rv_partition

for name in ("octahedron", "fan6", "wheel5", "prism"):
    g = named_graph(name)
    rs = planarity_embed(g)
    print(f"\n{name}: n={g.n} m={g.m}")
    for v in range(min(g.n, 3)):
        rv = rv_partition(rs, v)
        shape = "wheel" if rv.wheel else f"fans {rv.parts}"
        print(f"  star of {v}: {len(rv.three_faces)} triangles, {shape}")
    for rep in block_report(rs):
        d = rep.as_dict()
        print(f"  block {d['vertices']}: sum {d['rv_sum']} vs {d['threshold']} ({d['classification']}, {d['excess']:+d})")
