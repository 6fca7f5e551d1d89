"""
Closed walks and the partition expansion
========================================

h_d is a weighted sum over partitions of d of products of power sums.
On a graph the power sums are closed-walk counts, so the norm is an exact
rational built from integers.
"""

import math

from chsnorms import closed_walk_counts, complete, partitions_of, z_of
from chsnorms.chs import dth_power_from_walks

# the partitions of 6, and which ones survive once C_1 = 0
for pi in partitions_of(6):
    print(pi.parts, "z =", z_of(pi), "" if 1 in pi.parts else "<- contributes")

k4 = complete(4)
counts = closed_walk_counts(k4, 8)
print("closed walks of K4:", counts.tolist())

# d! * ||K4||_8^8 is an integer; dividing recovers the exact value
value = dth_power_from_walks(counts.counts, 8)
print("||K4||_8^8 =", value, "scaled:", value * math.factorial(8))
