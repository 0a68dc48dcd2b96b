"""Exact certification and numerical simulation of perfect (pair) state
transfer and periodicity in continuous quantum walks on graphs."""

from .certify import (
    FailureReason,
    PeriodicityCertificate,
    TransferCertificate,
    certify_pair_transfer,
    certify_periodic,
    certify_pst,
    pair_transfer_at,
    phase_at,
)
from .cospectral import CospectralReport, strong_cospectral, support
from .composite import (
    CompositeVerdict,
    TensorProblem,
    check_cor_double_cover,
    check_double_cover,
    check_tensor_swap,
    check_tensor_with_pairpst,
    check_tensor_with_pst,
    solve_tensor_time,
)
from .dynamics import EvolutionPlan, bounded_overlap_check, expm_oracle, fidelity, sweep, transition_matrix
from .exactnum import ExactScalar, ExactTime, PhaseFactor, squarefree_kernel
from .graphs import (
    Graph,
    PairState,
    VertexState,
    adjacency,
    build_named,
    circulant,
    complete,
    cycle,
    double_cover,
    empty,
    from_edge_list,
    laplacian,
    path,
    regularity,
    tensor_product,
)
from .spectral import SpectralDecomposition, char_poly, eigen_decompose, float_decompose, graph_decomposition
from .tolerances import DEFAULT, Tolerances

__version__ = "0.1.0"

__all__ = [
    "CompositeVerdict",
    "CospectralReport",
    "DEFAULT",
    "EvolutionPlan",
    "ExactScalar",
    "ExactTime",
    "FailureReason",
    "Graph",
    "PairState",
    "PeriodicityCertificate",
    "PhaseFactor",
    "SpectralDecomposition",
    "TensorProblem",
    "Tolerances",
    "TransferCertificate",
    "VertexState",
    "adjacency",
    "bounded_overlap_check",
    "build_named",
    "certify_pair_transfer",
    "certify_periodic",
    "certify_pst",
    "char_poly",
    "check_cor_double_cover",
    "check_double_cover",
    "check_tensor_swap",
    "check_tensor_with_pairpst",
    "check_tensor_with_pst",
    "circulant",
    "complete",
    "cycle",
    "double_cover",
    "eigen_decompose",
    "empty",
    "expm_oracle",
    "fidelity",
    "float_decompose",
    "from_edge_list",
    "graph_decomposition",
    "laplacian",
    "pair_transfer_at",
    "path",
    "phase_at",
    "regularity",
    "solve_tensor_time",
    "squarefree_kernel",
    "strong_cospectral",
    "support",
    "sweep",
    "tensor_product",
    "transition_matrix",
]
