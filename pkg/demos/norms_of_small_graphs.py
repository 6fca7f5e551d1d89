"""
CHS norms of small graphs
=========================

Exact d-th powers from closed walks next to the floating-point value from
the spectrum, for a handful of named graphs.
"""

from chsnorms import chs_norm, family
from chsnorms.graph import parse_family

for name in ["P5", "C5", "K5", "S5", "K2,3"]:
    g = family(parse_family(name))
    row = [name]
    for d in (2, 4, 6):
        rep = chs_norm(g, d)
        row.append(f"d={d}: {rep.exact_dth_power} (norm {rep.float_norm:.6f})")
    print("  ".join(row))

# the norm of a complete bipartite graph does not depend on d
for d in (2, 4, 6, 8, 10):
    print("K3,4", d, chs_norm(family(parse_family("K3,4")), d).float_norm)
