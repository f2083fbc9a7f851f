"""Hamiltonian completion numbers of caterpillar graphs."""

from .caterpillar import CaterpillarSpec, ClassLabel, Family, build_graph, classify, decompose_segments
from .closed_form import lambda_closed_form, lambda_lower_bound, lambda_star
from .construct import AugmentationPlan, construct
from .graph import Edge, Graph
from .hamcheck import hamiltonian_cycle, hamiltonian_path, verify_cycle, verify_path
from .oracle import OracleResult, already_hamiltonian, min_cycle_augmentation, min_path_augmentation

__all__ = [
    "AugmentationPlan",
    "CaterpillarSpec",
    "ClassLabel",
    "Edge",
    "Family",
    "Graph",
    "OracleResult",
    "already_hamiltonian",
    "build_graph",
    "classify",
    "construct",
    "decompose_segments",
    "hamiltonian_cycle",
    "hamiltonian_path",
    "lambda_closed_form",
    "lambda_lower_bound",
    "lambda_star",
    "min_cycle_augmentation",
    "min_path_augmentation",
    "verify_cycle",
    "verify_path",
]
