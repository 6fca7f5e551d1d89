"""
Energy and spectral bounds, and graph6 interchange
==================================================

The norm sits between a multiple of the spectral radius and half the
energy. Graphs travel as graph6 strings.
"""

import numpy as np

from chsnorms import emit_graph6, from_edges, parse_graph6
from chsnorms.analysis import check_theorem3

rng = np.random.default_rng(0)
worst = None
for _ in range(200):
    n = int(rng.integers(2, 11))
    pairs = [(i + 1, j + 1) for j in range(n) for i in range(j) if rng.random() < 0.4]
    g = from_edges(n, pairs)
    check = check_theorem3(g, 6)
    slack = min(check.energy_slack, check.spectral_lower_slack, check.spectral_upper_slack)
    if worst is None or slack < worst[0]:
        worst = (slack, check.graph_id)
# a lone edge has zero slack: its norm is exactly half its energy
print("tightest of 200 random graphs at d=6:", worst)

# a perfect matching meets the upper bound exactly
matching = from_edges(6, [(1, 2), (3, 4), (5, 6)])
print(check_theorem3(matching, 4))

text = emit_graph6(matching)
print(text, parse_graph6(text) == matching)
