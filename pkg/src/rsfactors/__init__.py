"""Exact local Rankin-Selberg L-factors and verification of their test-vector identities."""

__version__ = "0.1.0"

from .scalars import CycScalar, QGraded, qgraded_mul, root_of_unity, to_complex  # noqa: E402
from .symmfunc import (  # noqa: E402
    Partition,
    complete_homogeneous,
    partitions_upto,
    schur_eval,
    schur_eval_tableaux,
)
from .lseries import (  # noqa: E402
    XPoly,
    XRational,
    XSeries,
    divide_exact,
    lfactor_from_params,
    naive_rs,
    series_of,
)

__all__ = [
    "__version__",
    "CycScalar",
    "QGraded",
    "qgraded_mul",
    "root_of_unity",
    "to_complex",
    "Partition",
    "complete_homogeneous",
    "partitions_upto",
    "schur_eval",
    "schur_eval_tableaux",
    "XPoly",
    "XRational",
    "XSeries",
    "divide_exact",
    "lfactor_from_params",
    "naive_rs",
    "series_of",
]
