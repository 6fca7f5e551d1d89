"""CHS d-norms of simple graphs, computed exactly from closed walks and
numerically from adjacency spectra."""

from .chs import (
    NormReport,
    bipartite_norm_closed_form,
    chs_norm,
    chs_norm_246,
    complete_norm_closed_form,
    h_via_partitions,
    h_via_recurrence,
    h_via_series,
    star_norm,
)
from .graph import (
    FamilyId,
    Graph,
    complete,
    complete_bipartite,
    cycle,
    disjoint_union,
    family,
    from_edges,
    is_bipartite,
    is_connected,
    is_tree,
    path,
    star,
    tensor_with_k2,
)
from .graphio import emit_edge_list, emit_graph6, parse_edge_list, parse_graph6
from .partitions import Partition, partition_count, partitions_of, partitions_without_ones, z_of
from .spectra import Spectrum, eigenvalues, energy, family_spectrum, ky_fan, schatten, spectral_norm
from .walks import WalkCounts, closed_walk_count, closed_walk_counts, walk_count_matrix

__version__ = "0.1.0"
