"""Representation-theoretic operations gathered in one namespace.

The implementation is split by concern: exact fields (``fields``), linear
algebra (``linalg``), Specht modules (``specht``), matrix modules with the
hom solver and the MeatAxe (``modules``), cell modules (``cellmod``),
labelled matrices (``labeled``) and the brute-force decomposition oracle
(``oracle``).  This module re-exports the public entry points.
"""

from .cellmod import CellModule, cell_module, joint_kernel_dim, psi_annihilator_check, specht_module
from .fields import FieldSpec
from .labeled import LabeledMatrix
from .modules import MatrixModule, composition_factors, hom_basis, hom_dim, is_simple
from .oracle import decomposition_matrix_oracle, identify_factor, symmetric_group_oracle
from .specht import specht_gram_rank, standard_tableaux

__all__ = [
    "CellModule",
    "FieldSpec",
    "LabeledMatrix",
    "MatrixModule",
    "cell_module",
    "composition_factors",
    "decomposition_matrix_oracle",
    "hom_basis",
    "hom_dim",
    "identify_factor",
    "is_simple",
    "joint_kernel_dim",
    "psi_annihilator_check",
    "specht_gram_rank",
    "specht_module",
    "standard_tableaux",
    "symmetric_group_oracle",
]
