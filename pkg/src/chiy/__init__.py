"""Exact Hirzebruch chi_y-genus from Chern numbers, with a numerical check of
the mode-sum determinant product behind it."""
from .algebra import Rat, USeries, YPoly, exp_neg_x, useries_mul, useries_recip, ypoly_eval
from .catalog import ManifoldSpec, SpecError, hypersurface, parse_builtin, parse_spec, product, projective_space
from .genus import (
    ChernData, GenusPoly, HodgeTable, chi_factor, chi_from_hodge, chi_y, genus_class,
    serre_symmetry_defect, specialize,
)
from .symfunc import GradedPoly, Partition, brute_force_class, graded_exp, graded_log, graded_mul, power_sum_in_chern

__version__ = "0.1.0"
