"""Exact quantum PSU(n) invariants of lens spaces and their perturbative series."""

from .characters import CharacterContext, psi_at_root, unknot_J, unknot_Q
from .cyclotomic import CycloNumber, ResidueSeries, reduce_p_r, xi_valuation, zeta_power
from .gauss import GaussContext, legendre_symbol, root_gauss_brute, root_gauss_closed
from .invariants import (
    EtaMonomial,
    SurgeryPresentation,
    congruence_check,
    tau_r_lens_closed,
    tau_r_surgery,
    tau_series_surgery,
)
from .rootsys import RootSystem, Weight, build_root_system
from .series import TruncSeries, binomial_series, series_p_r
from .verify import SuiteConfig, VerificationReport, run_suite

__all__ = [
    "CharacterContext",
    "CycloNumber",
    "EtaMonomial",
    "GaussContext",
    "ResidueSeries",
    "RootSystem",
    "SuiteConfig",
    "SurgeryPresentation",
    "TruncSeries",
    "VerificationReport",
    "Weight",
    "binomial_series",
    "build_root_system",
    "congruence_check",
    "legendre_symbol",
    "psi_at_root",
    "reduce_p_r",
    "root_gauss_brute",
    "root_gauss_closed",
    "run_suite",
    "series_p_r",
    "tau_r_lens_closed",
    "tau_r_surgery",
    "tau_series_surgery",
    "unknot_J",
    "unknot_Q",
    "xi_valuation",
    "zeta_power",
]
