"""Exact verification and search for regular (von Neumann) braided structures."""

from __future__ import annotations

from .braiding import RegularBraiding, TripleContext, verify_component_ybe, verify_naturality, verify_star_regularity
from .bundle import load_bundle, save_bundle, verify_bundle
from .cocycle import RegularCocycle, obstructors, verify_obstructors, verify_regularity
from .exact_linalg import GF2, GF3, QQ, FieldSpec, Matrix, enumerate_ginverses, kron, reflexive_ginverse
from .hopf import (
    AntipodePair,
    ObstructedBialgebra,
    ObstructedModuleAction,
    convolution,
    verify_bialgebra,
    verify_module_action,
    verify_regular_antipode,
    verify_unit_counit_antipode,
)
from .report import Report
from .search import SearchSpec, SolutionCatalog, search_regular_antipodes, search_regular_ybe
from .ybop import (
    ObstructedAlgebra,
    ObstructedCoalgebra,
    RegularYBOperator,
    twist_comultiplication,
    twist_multiplication,
    verify_algebra,
    verify_coalgebra,
    verify_yb_operator,
)

__version__ = "0.1.0"

__all__ = [
    "GF2", "GF3", "QQ", "AntipodePair", "FieldSpec", "Matrix", "ObstructedAlgebra", "ObstructedBialgebra",
    "ObstructedCoalgebra", "ObstructedModuleAction", "RegularBraiding", "RegularCocycle", "RegularYBOperator",
    "Report", "SearchSpec", "SolutionCatalog", "TripleContext", "convolution", "enumerate_ginverses", "kron",
    "load_bundle", "obstructors", "reflexive_ginverse", "save_bundle", "search_regular_antipodes",
    "search_regular_ybe", "twist_comultiplication", "twist_multiplication", "verify_algebra", "verify_bialgebra",
    "verify_bundle", "verify_coalgebra", "verify_component_ybe", "verify_module_action", "verify_naturality",
    "verify_obstructors", "verify_regular_antipode", "verify_regularity", "verify_star_regularity",
    "verify_unit_counit_antipode", "verify_yb_operator",
]
