"""Package initialization file"""

from .validator import class_sizes, is_proper, is_equitable, dominated_classes, undominated_vertices, validate_edc
from .solver import SolverBudget, SolverOptions, SolverResult, chromatic_number, edcn_decision, edcn_exact
from .constructive import Construction, Scheme, SchemeId, build_construction, construct, formula_edcn
from .theorems import TheoremVerdict, run_checks, run_table, sweep, verify_theorem

__all__ = [
    'class_sizes',
    'is_proper',
    'is_equitable',
    'dominated_classes',
    'undominated_vertices',
    'validate_edc',
    'SolverBudget',
    'SolverOptions',
    'SolverResult',
    'chromatic_number',
    'edcn_decision',
    'edcn_exact',
    'Construction',
    'Scheme',
    'SchemeId',
    'build_construction',
    'construct',
    'formula_edcn',
    'TheoremVerdict',
    'run_checks',
    'run_table',
    'sweep',
    'verify_theorem',
]
