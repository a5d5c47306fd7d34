"""Exact graph polynomials and matrix functions.

Fermionants, immanants, Tutte and circuit-partition polynomials, medial and
line-digraph constructions, bicycle-space dimension, Hamiltonian-cycle
counting, plus generators and a verification harness that checks the
identities tying them together on small instances.
"""

from .errors import CapacityError, ConsistencyError, FormatError
from .partitions import (
    Partition,
    all_partitions,
    class_size,
    count_ssyt,
    count_syt,
    cycle_type,
    partitions_with_depth_at_most,
    transpose,
)
from .characters import character, schur_weyl_expand
from .polynomials import BivarPolynomial, UniPolynomial
from .matrixfn import (
    Matrix,
    cycle_type_weight_sums,
    determinant,
    fermionant,
    fermionant_cycle_poly,
    fermionant_via_immanants,
    immanant,
    permanent,
)
from .graphs import (
    Digraph,
    Multigraph,
    PlaneGraph,
    adjacency_matrix,
    connected_components,
    faces,
)
from .graphio import read_graph, read_matrix, write_graph, write_matrix
from .graphpoly import (
    circuit_partition_poly,
    martin_rhs,
    tutte,
    tutte_diagonal,
    tutte_subgraph_sum,
)
from .transforms import (
    bicycle_dimension,
    ferm2_medial_closed_form,
    line_digraph,
    medial,
    medial_line_adjacency,
)
from .hamilton import count_hamiltonian_cycles, ham_parity_via_ferm2
from .generators import (
    disjoint_union,
    exhaustive_plane_graphs,
    generate_eulerian_digraph,
    generate_plane_graph,
)
from .verify import Limits, VerificationReport, verify_suite

__version__ = "0.1.0"

__all__ = [
    "BivarPolynomial",
    "CapacityError",
    "ConsistencyError",
    "Digraph",
    "FormatError",
    "Limits",
    "Matrix",
    "Multigraph",
    "Partition",
    "PlaneGraph",
    "UniPolynomial",
    "VerificationReport",
    "adjacency_matrix",
    "all_partitions",
    "bicycle_dimension",
    "character",
    "circuit_partition_poly",
    "class_size",
    "connected_components",
    "count_hamiltonian_cycles",
    "count_ssyt",
    "count_syt",
    "cycle_type",
    "cycle_type_weight_sums",
    "determinant",
    "disjoint_union",
    "exhaustive_plane_graphs",
    "faces",
    "ferm2_medial_closed_form",
    "fermionant",
    "fermionant_cycle_poly",
    "fermionant_via_immanants",
    "generate_eulerian_digraph",
    "generate_plane_graph",
    "ham_parity_via_ferm2",
    "immanant",
    "line_digraph",
    "martin_rhs",
    "medial",
    "medial_line_adjacency",
    "partitions_with_depth_at_most",
    "permanent",
    "read_graph",
    "read_matrix",
    "schur_weyl_expand",
    "transpose",
    "tutte",
    "tutte_diagonal",
    "tutte_subgraph_sum",
    "verify_suite",
    "write_graph",
    "write_matrix",
]
