"""Set-homogeneous s-digraphs: data model, catalog, groups and homogeneity checks."""

from .catalog import build, parse_expr, theorem_list
from .core import PairState, SDigraph, complement, induced, weak_complement
from .homo import (check_homogeneous, check_k_homogeneous, check_k_set_homogeneous,
                   check_set_homogeneous, subset_orbit_reps)
from .iso import are_isomorphic, automorphism_group, canonical_form, find_isomorphism

__version__ = "0.1.0"
