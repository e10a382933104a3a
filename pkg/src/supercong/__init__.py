"""Exact verification of supercongruences for truncated hypergeometric series."""

from .apery import apery, c6_alt, c_ell, d_seq, sequence_table
from .exact_arith import (
    NonInvertible,
    NonInvertibleDenominator,
    PrimePowerModulus,
    ResidueClass,
    padic_valuation,
    reduce_rational,
)
from .gaussian import PrecisionFailure, fop_b, gauss_nFn, jacobi_sum
from .harmonic import check_expansion_congruence, harmonic, harmonic_table
from .hypergeom import (
    TruncatedHyperSpec,
    check_lemma51,
    check_lemma52,
    check_osmain,
    lhs_wt4,
    lhs_wt6,
    truncated_pFq,
    truncated_pFq_mod,
    xyz,
)
from .identities import (
    PartialFractionDecomp,
    ReconstructionFailure,
    check_BR,
    check_id1,
    check_res1_res3,
    pf_coeffs_R,
    pf_coeffs_Rhat,
    pf_coeffs_Rtilde,
)
from .qseries import EtaQuotient, QSeries, eta_power_series, fourier_a, fourier_b
from .report import CongruenceReport, Verdict

__version__ = "0.1.0"

__all__ = [
    "apery",
    "c6_alt",
    "c_ell",
    "d_seq",
    "sequence_table",
    "NonInvertible",
    "NonInvertibleDenominator",
    "PrimePowerModulus",
    "ResidueClass",
    "padic_valuation",
    "reduce_rational",
    "PrecisionFailure",
    "fop_b",
    "gauss_nFn",
    "jacobi_sum",
    "check_expansion_congruence",
    "harmonic",
    "harmonic_table",
    "TruncatedHyperSpec",
    "check_lemma51",
    "check_lemma52",
    "check_osmain",
    "lhs_wt4",
    "lhs_wt6",
    "truncated_pFq",
    "truncated_pFq_mod",
    "xyz",
    "PartialFractionDecomp",
    "ReconstructionFailure",
    "check_BR",
    "check_id1",
    "check_res1_res3",
    "pf_coeffs_R",
    "pf_coeffs_Rhat",
    "pf_coeffs_Rtilde",
    "EtaQuotient",
    "QSeries",
    "eta_power_series",
    "fourier_a",
    "fourier_b",
    "CongruenceReport",
    "Verdict",
]
