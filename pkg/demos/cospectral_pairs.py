"""
Telling singularly cospectral graphs apart
==========================================

F+F and F x K2 share their singular values whenever F is not bipartite,
so every unitarily invariant norm sees them as equal. Their CHS norms do
not agree at some even degree.
"""

from chsnorms import complete, cycle, energy, schatten
from chsnorms.analysis import distinguish, make_pair
from chsnorms.chs import chs_norm

for name, f in [("K3", complete(3)), ("K4", complete(4)), ("C5", cycle(5))]:
    g, h = make_pair(f)
    print(name, "energies", energy(g), energy(h), "Schatten-4", schatten(g, 4), schatten(h, 4))
    d = distinguish(g, h)
    print("   first separating degree", d,
          chs_norm(g, d).exact_dth_power, "vs", chs_norm(h, d).exact_dth_power)

# C5 has no triangles, so the odd traces first differ at length 5 and the
# separating degree moves up to 10
