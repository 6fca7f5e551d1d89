"""
Which connected graphs minimise and maximise the norm
=====================================================

Every labeled connected graph on 6 vertices is scanned. Paths sit at the
bottom and the complete graph at the top; among trees the star is on top.
"""

from chsnorms.analysis import verify_theorem2_multi

for mode in ("connected", "trees"):
    reports = verify_theorem2_multi(6, [2, 4, 6, 8], mode=mode, limit=3)
    for d, rep in reports.items():
        print(f"{mode:9s} d={d} scanned={rep.scanned} min={rep.min_value} "
              f"({rep.argmin_count} graphs, {rep.argmin_path_count} paths) "
              f"max={rep.max_value} ({rep.argmax_count} graphs) "
              f"bound violations={rep.bound_violations}")

# at d=2 the norm squared is the edge count, so every tree ties with the paths
