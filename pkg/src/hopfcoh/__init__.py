"""Exact non-abelian Hopf and descent cohomology of Hopf modules over prime fields."""
from ._backend import BACKEND
from .algebra import Algebra, HopfAlgebra, ValidationReport, check_hopf
from .cohomology import DEFAULT_CAP, Cochain, aut_s, c1, d0_set, d1, h0, h1, kappa, z1
from .comodule import ComoduleAlgebra, HopfModule, check_comodule_algebra, check_hopf_module, coinvariants
from .errors import (
    ContractError,
    EnumerationBudgetExceeded,
    HopfcohError,
    InternalConsistencyError,
    TheoremViolation,
    ValidationError,
)
from .groups import GroupTable, build_group_dual, cyclic_group, symmetric_group

__version__ = "0.1.0"
