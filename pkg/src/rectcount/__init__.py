"""Exact counts of rectangle partitions p(m, n) and their restricted variants."""

from .partcore import Partition, SeqTable, euler_p, euler_p_table, nuclear_q
from .tile2 import p2, p2_table, p_tilde, p_tilde_table, s_count, t_count
from .restrict2 import closed_form_table1, p_k1, p_kl
from .mary2 import b_i0, b_ij, b_m
from .oracle import count_multisets, count_symmetric_multisets
from .qpfit import fit_min_start, fit_window, build_ansatz, evaluate_qp

__version__ = "0.1.0"

__all__ = [
    "Partition",
    "SeqTable",
    "euler_p",
    "euler_p_table",
    "nuclear_q",
    "p2",
    "p2_table",
    "p_tilde",
    "p_tilde_table",
    "s_count",
    "t_count",
    "p_k1",
    "p_kl",
    "closed_form_table1",
    "b_m",
    "b_i0",
    "b_ij",
    "count_multisets",
    "count_symmetric_multisets",
    "build_ansatz",
    "fit_window",
    "fit_min_start",
    "evaluate_qp",
    "__version__",
]
