"""Greedy shortest common superstring with controlled tie-breaking.

Core entry points are re-exported here; see the submodules for the rest.
"""
from .disturb import (DisturbParams, StepRoles, check_tie_free, choose_m_for_gap, disturb,
                      predicted_overlap_len, step_roles)
from .freq import SharpMetric, inflate_important, interleave_sentinel, sharp_length
from .gen import random_dataset, tie_rich_dataset, worst_case_family
from .greedy import (GreedyResult, MergeStep, MergeTrace, TieBreakPolicy, run_greedy,
                     run_greedy_sharp, verify_trace)
from .kernels import BACKEND
from .oracle import ExactResult, approx_ratio, brute_force_scs, exact_scs, exact_scs_sharp
from .strcore import (Dataset, count_symbol, merge, normalize, overlap, read_dataset,
                      superstring_length, superstring_of_permutation, write_dataset)

__version__ = "0.1.0"
