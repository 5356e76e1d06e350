from ._qtoda import (
    Session,
    cartan_matrix,
    fundamental_degrees,
    gram_positive_definite,
    run_pipeline,
    supported,
    weyl_order,
)

__all__ = [
    "Session",
    "cartan_matrix",
    "fundamental_degrees",
    "gram_positive_definite",
    "run_pipeline",
    "supported",
    "weyl_order",
]
