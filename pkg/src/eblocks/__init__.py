"""Block decomposition of parabolic category O for E6, E7 and E8.

Systems (Phi, Phi_I, Phi_J) are enumerated exactly, their Jantzen
coefficients computed by the grouped-sign formula, and blocks read off as
connected components of the nonzero-coefficient graph.
"""
from __future__ import annotations

from .atlas import aggregate_by_class, duality_check, semisimple_table, sweep
from .blocks import (BlockDecomposition, adjacency_poset, compute_blocks, isolated_top_indices,
                     simple_gvm_indices, system_blocks, threshold_shortcut)
from .conjugacy import are_conjugate, cartan_type, classify_subsets
from .jantzen import JantzenMatrix, jantzen_matrix, linked_targets, psi_plus, psi_plus_plus
from .orbit import ParabolicSystem, dominant_representative, enumerate_system, omega_J, sort_to_I_dominant
from .reduction import reduction_chain, restrict_weight
from .rootdata import RootSystem, build_root_system

__version__ = "0.1.0"

__all__ = [
    "RootSystem", "build_root_system", "ParabolicSystem", "enumerate_system", "omega_J",
    "dominant_representative", "sort_to_I_dominant", "JantzenMatrix", "jantzen_matrix", "psi_plus",
    "psi_plus_plus", "linked_targets", "restrict_weight", "reduction_chain", "BlockDecomposition",
    "compute_blocks", "system_blocks", "adjacency_poset", "simple_gvm_indices", "isolated_top_indices",
    "threshold_shortcut", "cartan_type", "are_conjugate", "classify_subsets", "sweep",
    "aggregate_by_class", "semisimple_table", "duality_check",
]
