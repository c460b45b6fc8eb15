"""MDS (extended) GRS codes with prescribed Euclidean hull dimension."""

from .code import LinearCode
from .eaqecc import EaqeccParams, TableRow, derive_pair, emit_table, singleton_defect
from .field import FieldSpec, field_of_order, make_field
from .grs import (
    FAMILIES,
    ConstructionRequest,
    ConstructionResult,
    GrsSpec,
    construct,
    dual_weights,
    grs_generator,
    hull_membership_witness,
)
from .linalg import MatrixGF

__version__ = "0.1.0"

__all__ = [
    "FAMILIES",
    "ConstructionRequest",
    "ConstructionResult",
    "EaqeccParams",
    "FieldSpec",
    "GrsSpec",
    "LinearCode",
    "MatrixGF",
    "TableRow",
    "construct",
    "derive_pair",
    "dual_weights",
    "emit_table",
    "field_of_order",
    "grs_generator",
    "hull_membership_witness",
    "make_field",
    "singleton_defect",
]
