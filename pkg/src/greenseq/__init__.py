"""Count maximal green sequences of Dynkin and extended Dynkin quivers by length.

The pipeline builds a finite catalog of candidate indecomposables, decides
tau-rigidity of pairs from dimension vectors alone, constructs the finite
part of the Hasse quiver of support tau-tilting modules by mutation, and
counts its maximal paths with exact integers.

>>> from greenseq import preset, mgs_distribution
>>> mgs_distribution(preset("A:2")).counts
{2: 1, 3: 1}
"""

__version__ = "0.1.0"

from .catalog import Catalog, build_catalog, build_catalog_repfinite, nonsincere_modules
from .count import LengthDistribution, count_paths, sci, summarize, topo_sort
from .errors import *  # noqa: F401,F403
from .hasse import HasseGraph, build_hasse, emit_dot, mutate, prune_to_finite
from .oracle import enumerate_mgs, framed, green_vertices, ice_mutate
from .pipeline import (
    mgs_distribution,
    run_all_orientations,
    run_count,
    run_oracle_check,
    run_pipeline,
)
from .prec import PrecTable, build_prec_table, case_regular_pair, comparison
from .quiver import (
    Quiver,
    QuiverClass,
    cartan_matrix,
    coxeter_matrix,
    opposite,
    preset,
    reflect,
    restricted_matrices,
    validate_and_classify,
)
