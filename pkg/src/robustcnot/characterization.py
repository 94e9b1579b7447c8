"""Measurement budgets for exchange-coupling characterization.

Estimating the coupling experimentally shrinks the fractional error the
pulses must absorb.  The frequency-estimation bound gives a fractional
uncertainty of 4 / (N_t sqrt(N_e)) from N_t time points with N_e
phase-estimation repetitions each; characterizing the isotropic exchange
Hamiltonian needs three input states at two measurements per point, hence
N = 6 (N_t + N_e) total measurements and an exchange uncertainty of
4 sqrt(6) / (N_t sqrt(N - 6 N_t)).  All planners here evaluate the bounds
at equality, i.e. they assume best-case characterization.

The worst-case post-characterization fractional error is taken as
Delta_c = delta (the conventional rounding of J_c ~ (1 - delta) J); the
exact extremal value delta / (1 - delta) is carried alongside because the
two differ by ten percent relative at delta = 0.1.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

from . import pulses

#: States-per-coefficient times measurements-per-point for the isotropic case.
_MEASUREMENTS_PER_POINT = 6


@dataclass(frozen=True)
class CharacterizationPlan:
    """A measurement budget and the uncertainty it buys."""

    n_t: int
    n_e: int
    n_total: int
    frac_uncertainty: float

    @classmethod
    def from_counts(cls, n_t: int, n_e: int) -> "CharacterizationPlan":
        n = _MEASUREMENTS_PER_POINT * (n_t + n_e)
        return cls(n_t, n_e, n, freq_uncertainty(n_t, n_e))


@dataclass(frozen=True)
class DecoherenceModel:
    """First-order exponential dephasing penalty with time constant T2."""

    t2_ms: float = 60.0

    def __post_init__(self) -> None:
        if not (self.t2_ms > 0.0):
            raise ValueError("T2 must be positive")


def freq_uncertainty(n_t: int, n_e: int) -> float:
    """Fractional frequency uncertainty 4 / (N_t sqrt(N_e)), at the bound."""
    if n_t < 1 or n_e < 1:
        raise ValueError("time points and repetitions must both be at least 1")
    return 4.0 / (n_t * math.sqrt(n_e))


def exchange_uncertainty(n: int, n_t: int) -> float:
    """Fractional coupling uncertainty 4 sqrt(6) / (N_t sqrt(N - 6 N_t))."""
    if n_t < 1:
        raise ValueError("time points must be at least 1")
    if n <= _MEASUREMENTS_PER_POINT * n_t:
        raise ValueError(
            f"N={n} leaves no repetitions for phase estimation (need N > {6 * n_t})"
        )
    return 4.0 * math.sqrt(6.0) / (n_t * math.sqrt(n - _MEASUREMENTS_PER_POINT * n_t))


def min_measurements(target: float, n_t: int) -> int:
    """Smallest total N with exchange_uncertainty(N, N_t) <= target.

    Equals ceil(6 N_t + 96 / (N_t * target)^2); the closed form is refined by
    an integer walk so the round trip with exchange_uncertainty is exact.
    """
    if not (target > 0.0):
        raise ValueError("target uncertainty must be positive")
    if n_t < 1:
        raise ValueError("time points must be at least 1")
    n = max(_MEASUREMENTS_PER_POINT * n_t + 1, math.ceil(6 * n_t + 96.0 / (n_t * target) ** 2 - 1e-9))
    while exchange_uncertainty(n, n_t) > target:
        n += 1
    while n - 1 > _MEASUREMENTS_PER_POINT * n_t and exchange_uncertainty(n - 1, n_t) <= target:
        n -= 1
    return n


def delta_c(frac_uncertainty: float) -> float:
    """Worst-case fractional error after characterizing to ``frac_uncertainty``.

    Adopts the Delta_c = delta convention; see :func:`delta_c_exact` for the
    unrounded extremal bound.
    """
    if not (0.0 <= frac_uncertainty < 1.0):
        raise ValueError("fractional uncertainty must lie in [0, 1)")
    return frac_uncertainty


def delta_c_exact(frac_uncertainty: float) -> float:
    """Exact extremal bound delta / (1 - delta) for J_c = (1 - delta) J."""
    if not (0.0 <= frac_uncertainty < 1.0):
        raise ValueError("fractional uncertainty must lie in [0, 1)")
    return frac_uncertainty / (1.0 - frac_uncertainty)


@dataclass(frozen=True)
class MeasurementPoint:
    n: int
    frac_uncertainty: float
    delta_c: float
    delta_c_exact: float
    level: int
    error: float


def error_vs_measurements(
    level: int,
    n_grid: Sequence[int],
    n_t: int,
    n_r: int = pulses.DEFAULT_NR,
) -> list[MeasurementPoint]:
    """CNOT error after spending N measurements on characterization.

    Per grid point: uncertainty from the measurement budget, worst-case
    fractional error, then the simulated gate error at that error.  Budgets
    too small to beat delta = 1 are capped at Delta_c = 1 (the gate is then
    no better than fully uncharacterized).  Monotone non-increasing in N.
    """
    points = []
    for n in n_grid:
        delta = exchange_uncertainty(int(n), n_t)
        capped = min(delta, 1.0)
        d_c = delta_c(capped) if capped < 1.0 else 1.0
        d_c_exact = delta_c_exact(capped) if capped < 1.0 else math.inf
        err = pulses.cnot_error(level, d_c, n_r)
        points.append(MeasurementPoint(int(n), delta, d_c, d_c_exact, level, err))
    return points


def error_with_decoherence(
    eps_sys: float, t_gate_ns: float, dec: DecoherenceModel | None = None
) -> float:
    """Combine a systematic error with dephasing over the gate duration.

    Multiplicative survival model: 1 - (1 - eps_sys) * exp(-t / T2).
    """
    dec = dec or DecoherenceModel()
    if not (0.0 <= eps_sys <= 1.0):
        raise ValueError("systematic error must lie in [0, 1]")
    if t_gate_ns < 0.0:
        raise ValueError("gate time must be non-negative")
    return 1.0 - (1.0 - eps_sys) * math.exp(-(t_gate_ns * 1e-9) / (dec.t2_ms * 1e-3))
