"""Exact lattice-model symmetric rational functions.

Two families of partition functions are built from integrable vertex
models: a spin-1 family J_{lam/mu} and a fused family G_{lam/mu}, both with
column parameters (u_i, v_i).  The package evaluates them exactly, checks
their structural identities, recovers the classical families by
specialization, and computes change-of-basis coefficients.
"""

from .algebra import ONE, Q, ZERO, RingElem, parse_expression, q_binomial, q_pochhammer, var
from .errors import (GridTooSmall, InvalidPartition, LatticePolyError, NotSeriesExpandable, NotTriangular,
                     UnknownIdentity, UnknownVariable, WidthTooSmall, ZeroDenominator)
from .expansions import ExpansionKind, ExpansionTable, Law, certify, coeff, expand
from .families import FamilyParams, FamilyTag, lattice_degeneration, multivar_oracle
from .identities import VerificationReport, run_suite
from .lattice import Columns, c_conjugate, c_lambda, partition_function, skew_g, skew_g_dual, skew_j, skew_j_dual
from .partitions import conjugate, parse_partition, partition

__all__ = [
    "ONE", "Q", "ZERO", "RingElem", "parse_expression", "q_binomial", "q_pochhammer", "var",
    "GridTooSmall", "InvalidPartition", "LatticePolyError", "NotSeriesExpandable", "NotTriangular",
    "UnknownIdentity", "UnknownVariable", "WidthTooSmall", "ZeroDenominator",
    "ExpansionKind", "ExpansionTable", "Law", "certify", "coeff", "expand",
    "FamilyParams", "FamilyTag", "lattice_degeneration", "multivar_oracle",
    "VerificationReport", "run_suite",
    "Columns", "c_conjugate", "c_lambda", "partition_function", "skew_g", "skew_g_dual", "skew_j", "skew_j_dual",
    "conjugate", "parse_partition", "partition",
]
