# matrix/__init__.py

from .dense import Matrix
from .ops import (
    SparsityReport,
    WitnessLine,
    dot,
    matmul,
    matvec,
    nnz,
    op_meter,
    sparse_line_witness,
    vecmat,
)

__all__ = [
    "Matrix",
    "SparsityReport",
    "WitnessLine",
    "dot",
    "matmul",
    "matvec",
    "nnz",
    "op_meter",
    "sparse_line_witness",
    "vecmat",
]
