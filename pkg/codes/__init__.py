# codes/__init__.py

from .cauchy import CauchySpec, batch_inverse, cauchy_column, cauchy_det_closed_form, cauchy_matrix
from .oracles import check_k_regular, check_mds_parity, cofactor_determinant, determinant
from .parity import ParityCheck, vandermonde_parity_check

__all__ = [
    "CauchySpec",
    "ParityCheck",
    "batch_inverse",
    "cauchy_column",
    "cauchy_det_closed_form",
    "cauchy_matrix",
    "check_k_regular",
    "check_mds_parity",
    "cofactor_determinant",
    "determinant",
    "vandermonde_parity_check",
]
