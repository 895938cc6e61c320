"""Coxeter-sortable elements, Cambrian congruences and Cambrian lattices of finite Coxeter groups."""
from .congruence import (
    CongruencePartition,
    cambrian_congruence,
    cg,
    forcing_leq,
    forcing_poset,
    is_lattice_congruence,
    quotient_lattice,
    smallest_congruence,
)
from .coxeter import CoxeterError, CoxeterMatrix, CoxeterSystem, build_system
from .groups import catalan_formula, named_matrix, parse_group_spec
from .projections import cambrian_lattice, pi_down, pi_up, theta_congruence
from .sortable import (
    c_sorting_word,
    coxeter_elements,
    enumerate_sortables,
    is_sortable,
    make_coxeter_element,
)
from .weak_order import lattice_of

__all__ = [
    "CongruencePartition",
    "CoxeterError",
    "CoxeterMatrix",
    "CoxeterSystem",
    "build_system",
    "c_sorting_word",
    "cambrian_congruence",
    "cambrian_lattice",
    "catalan_formula",
    "cg",
    "coxeter_elements",
    "enumerate_sortables",
    "forcing_leq",
    "forcing_poset",
    "is_lattice_congruence",
    "is_sortable",
    "lattice_of",
    "make_coxeter_element",
    "named_matrix",
    "parse_group_spec",
    "pi_down",
    "pi_up",
    "quotient_lattice",
    "smallest_congruence",
    "theta_congruence",
]
