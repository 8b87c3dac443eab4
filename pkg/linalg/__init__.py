"""
Dense linear algebra for tuckerbound.

Tensor unfoldings and n-mode products, the deterministic eigensolver,
and Tucker model operations.
"""

from .tensor_ops import (
    fold,
    frobenius_norm_sq,
    inner_product,
    is_symmetric,
    mode_n_product,
    tensor_from_flat,
    unfold,
)
from .spectra import gram_left, symmetric_eig_desc, top_left_singular_vectors
from .tucker import (
    optimal_core,
    projector,
    reconstruct,
    reconstruction_error_sq,
    tucker_unfolding,
)

__all__ = [
    'fold',
    'frobenius_norm_sq',
    'inner_product',
    'is_symmetric',
    'mode_n_product',
    'tensor_from_flat',
    'unfold',
    'gram_left',
    'symmetric_eig_desc',
    'top_left_singular_vectors',
    'optimal_core',
    'projector',
    'reconstruct',
    'reconstruction_error_sq',
    'tucker_unfolding',
]
