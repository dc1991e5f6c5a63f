"""Exact engine for sine-power wall-crossing of genus-indexed curve counts."""

from .series import (
    RAT,
    ConstantTermNotOne,
    NonInvertibleLeading,
    NonzeroConstantTerm,
    USeries,
    ZeroSeries,
    exp,
    inv,
    log,
    pow_int,
    sinc_half,
)
from .partitions import (
    PartsMismatch,
    StablePartition,
    ThreefoldPartition,
    descending_partitions,
    enumerate_stable_partitions,
    enumerate_threefold_partitions,
    multinomial,
    multiplicities,
)
from .hodge import (
    CheckReport,
    GradedPoly,
    GradedPolyRing,
    MuValue,
    ZLaurent,
    i_function_expansion,
    mu_g0,
    mu_g1,
    verify_i_ratio,
    verify_mu_consistency,
)
from .wallcross import (
    GenusTable,
    GridCell,
    GridReport,
    Kind,
    MissingGenus,
    VertexData,
    correction_raw_sum,
    eq_sum,
    falling_factorial,
    gw_from_ugw,
    reduce_bracket,
    sine_factor,
    ugw_from_gw,
    verify_eq_sum,
    verify_raw_equals_closed,
)
from .gv import ClassNotCovered, GVReport, gate_check, gv_from_gw, gw_from_gv, report_on_gv

__all__ = [
    "RAT",
    "USeries",
    "inv",
    "exp",
    "log",
    "pow_int",
    "sinc_half",
    "ZeroSeries",
    "NonInvertibleLeading",
    "NonzeroConstantTerm",
    "ConstantTermNotOne",
    "PartsMismatch",
    "ThreefoldPartition",
    "StablePartition",
    "multinomial",
    "multiplicities",
    "descending_partitions",
    "enumerate_threefold_partitions",
    "enumerate_stable_partitions",
    "GradedPoly",
    "GradedPolyRing",
    "ZLaurent",
    "MuValue",
    "CheckReport",
    "mu_g0",
    "mu_g1",
    "i_function_expansion",
    "verify_mu_consistency",
    "verify_i_ratio",
    "Kind",
    "GenusTable",
    "MissingGenus",
    "VertexData",
    "GridCell",
    "GridReport",
    "sine_factor",
    "falling_factorial",
    "eq_sum",
    "reduce_bracket",
    "correction_raw_sum",
    "verify_raw_equals_closed",
    "verify_eq_sum",
    "gw_from_ugw",
    "ugw_from_gw",
    "ClassNotCovered",
    "GVReport",
    "gate_check",
    "gv_from_gw",
    "gw_from_gv",
    "report_on_gv",
]

__version__ = "0.1.0"
