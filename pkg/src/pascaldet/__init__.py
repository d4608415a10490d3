"""Exact Khayyam-Pascal determinantal arrays and machine checks of their identities."""

from pascaldet._backend import BACKEND
from pascaldet.core_arrays import (
    ExactSequence,
    PascalTable,
    Table,
    antidiagonal_sequence,
    binomial,
    build_pascal_table,
    column_sequence,
    pascal_entry,
    row_sequence,
)
from pascaldet.det_array import (
    DetArrayTable,
    Verdict,
    build_det_array,
    column_identity_first,
    column_identity_second,
    det_entry,
)
from pascaldet.determinant import ExactMatrix, MinorSpec, det_bareiss, det_condensation, minor
from pascaldet.errors import DomainError, PreconditionError, SizeLimitError
from pascaldet.lgv import count_nonintersecting_paths, count_paths

__version__ = "0.1.0"
