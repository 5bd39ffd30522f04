"""Multivariate hypergeometric evaluation and a verified identity database.

Evaluates Gauss 2F1, Appell F1 and Lauricella FD functions (including their
analytic continuations), complete and incomplete elliptic integrals and the
Gamma function, and uses them to machine-check a catalog of closed-form
identities and hyperelliptic-integral reductions.
"""

from .core import (
    BranchSide,
    DEFAULT_SIDE,
    DomainError,
    GammaPoleError,
    gamma,
    pochhammer,
    principal_pow,
    roots_of_unity,
    unit_partition_roots,
)
from .elliptic import complete_e, complete_k, incomplete_f
from .hyperfun import (
    HyperSpec,
    appell_f1,
    eulerian_a,
    eulerian_b,
    fd_order_reduce,
    hyp2f1,
    hyp2f1_series,
    lauricella_fd,
    pfaff_f1,
)
from .identities import EvalReport, IdentityRecord, registry, verify, verify_all
from .quadrature import (
    IntegrandSpec,
    QuadratureError,
    QuadratureResult,
    integrate,
    integrate_semi_infinite,
)
from .reductions import (
    ReductionRecord,
    check_reduction,
    reduction_registry,
    representation_formulas_check,
)

__version__ = "0.1.0"

__all__ = [
    "BranchSide",
    "DEFAULT_SIDE",
    "DomainError",
    "EvalReport",
    "GammaPoleError",
    "HyperSpec",
    "IdentityRecord",
    "IntegrandSpec",
    "QuadratureError",
    "QuadratureResult",
    "ReductionRecord",
    "appell_f1",
    "check_reduction",
    "complete_e",
    "complete_k",
    "eulerian_a",
    "eulerian_b",
    "fd_order_reduce",
    "gamma",
    "hyp2f1",
    "hyp2f1_series",
    "incomplete_f",
    "integrate",
    "integrate_semi_infinite",
    "lauricella_fd",
    "pfaff_f1",
    "pochhammer",
    "principal_pow",
    "reduction_registry",
    "registry",
    "representation_formulas_check",
    "roots_of_unity",
    "unit_partition_roots",
    "verify",
    "verify_all",
]
