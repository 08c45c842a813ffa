"""Exact scalar, polynomial and matrix kernels."""
from .poly import isolate_real_roots, count_real_roots
from .numberfield import (
    NumberField, FieldElement, GAUSSIAN, conj, re, im, is_real, sign,
    embed, demote, splitting_field, roots_in_field, scalar_str, scalar_key,
)
from .matrix import (
    mat, vec, identity, zeros, kernel_basis, rank, span_basis, min_poly,
    char_poly, all_eigenvalues_real, purely_imaginary_spectrum, is_zero,
    commutator, to_field, demote_matrix, matrix_field,
)
from .jordan import JordanParts, jordan_chevalley, split_real_imag, jordan_parts
