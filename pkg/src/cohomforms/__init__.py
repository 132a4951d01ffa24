"""Exact q-expansion bases of cusp forms on Gamma0(N) with character, via group cohomology.

Typical use::

    from cohomforms import make_context, compute_basis
    basis = compute_basis(make_context(25, 4))
    basis.forms[0]   # [1, 0, 0, 0, 0, 0, 0, 0, 1, 0]
"""

from .arith import CycloNum, Mat2Z
from .basis import QExpansionBasis, compute_basis, exact_kernel, probe_kernel_stream
from .chars import DirichletChar, char_kronecker, char_trivial, parse_char_spec
from .cohomology import ModularContext, h1_plus_basis, make_context, relations_matrix
from .cuspdim import PipelineError, build_cusp_data, cusp_form_dimension, plus_dimension
from .exactla import ExactMat
from .hecke import heilbronn_merel, merel_sets, sturm_bound
from .p1cosets import build_p1

__all__ = [
    "CycloNum", "Mat2Z", "QExpansionBasis", "compute_basis", "exact_kernel",
    "probe_kernel_stream", "DirichletChar", "char_kronecker", "char_trivial",
    "parse_char_spec", "ModularContext", "h1_plus_basis", "make_context",
    "relations_matrix", "PipelineError", "build_cusp_data", "cusp_form_dimension",
    "plus_dimension", "ExactMat", "heilbronn_merel", "merel_sets", "sturm_bound",
    "build_p1",
]
