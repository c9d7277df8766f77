"""Polynomial-time SPR solvers for structured graph classes."""
from .arcs import circular_arc_solve
from .bounded import bounded_diameter_solve
from .circle import PathLabel, chord_label, chord_orientations, circle_solve
from .hypercube import hypercube_solve, kendall_tau, path_to_permutation, permutation_to_path
from .permutation import EdgeType, lr_edge_type, permutation_solve
from .reps import ArcRep, ChordRep, HypercubeRep, PermutationRep
from .weakly_modular import LookTable, build_look_table, weakly_modular_solve

__all__ = [
    "ArcRep",
    "ChordRep",
    "EdgeType",
    "HypercubeRep",
    "LookTable",
    "PathLabel",
    "PermutationRep",
    "bounded_diameter_solve",
    "build_look_table",
    "chord_label",
    "chord_orientations",
    "circle_solve",
    "circular_arc_solve",
    "hypercube_solve",
    "kendall_tau",
    "lr_edge_type",
    "path_to_permutation",
    "permutation_solve",
    "permutation_to_path",
    "weakly_modular_solve",
]
