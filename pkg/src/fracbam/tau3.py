"""Bifurcation analysis in the equal-delay parameter (leakage = communication).

With both delays equal, multiplying the characteristic function by the sixth
power of e^{lam*tau} turns it into a degree-6 polynomial in s = e^{lam*tau} *
lam^order whose coefficients are the zero-delay d1..d6.  Every imaginary-axis
characteristic root therefore comes from a polynomial root s_n: the frequency
is fixed by |s_n| and the delay by the phase condition.  The arccos branch of
the phase formula is sign-ambiguous, so both branches are generated and every
candidate is certified by back-substitution into the transcendental equation.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from .charpoly import CharCoeffs, char_value, compute_coeffs
from .errors import NumericalError
from .model import NetworkParams, linearize
from .roots import aberth_roots

RESIDUAL_TOL = 1e-6
_K_CAP = 50
_ROOT_DEDUP = 1e-7


@dataclass(frozen=True)
class Tau3Candidate:
    root_index: int
    branch: str          # "principal" (sin >= 0) or "mirror" (sin < 0)
    k: int
    omega: float
    tau: float
    residual: float


@dataclass(frozen=True)
class Tau3Report:
    roots: np.ndarray
    candidates: tuple[Tau3Candidate, ...]
    omega0: Optional[float]
    tau0: Optional[float]
    transversality: Optional[float]
    verdict: str         # "bifurcation" | "no_bifurcation"

    def verdict_string(self) -> str:
        if self.verdict == "no_bifurcation":
            return "no_bifurcation"
        return f"bifurcation_at({self.tau0:.9g})"


def aux_poly_roots(coeffs: CharCoeffs) -> np.ndarray:
    """Six roots of the monic auxiliary polynomial with coefficients d1..d6."""
    poly = np.concatenate(([1.0], coeffs.d))
    return aberth_roots(poly, rtol=1e-10)


def residual_tau3(coeffs: CharCoeffs, order: float, omega: float,
                  tau: float) -> float:
    """|characteristic function| at lam = i*omega with both delays equal."""
    return abs(char_value(coeffs, order, 1j * omega, tau, tau))


def arccos_ladder(s: complex, order: float, k_values: Sequence[int]
                  ) -> tuple[float, list[float], list[float]]:
    """Frequency and raw delay ladders (both arccos branches) for one root.

    Returns (omega, principal-branch taus, mirror-branch taus) before any
    admissibility filtering.
    """
    mod = abs(s)
    omega = mod ** (1.0 / order)
    half = order * math.pi / 2.0
    base = (s.real * math.cos(half) + s.imag * math.sin(half)) / mod
    base = min(1.0, max(-1.0, base))
    ang = math.acos(base)
    principal = [(ang + 2.0 * math.pi * k) / omega for k in k_values]
    mirror = [(2.0 * math.pi - ang + 2.0 * math.pi * k) / omega
              for k in k_values]
    return omega, principal, mirror


def _dedup_roots(roots: np.ndarray) -> list[tuple[int, complex]]:
    reps: list[tuple[int, complex]] = []
    for idx, s in enumerate(roots):
        if any(abs(s - r) < _ROOT_DEDUP for _, r in reps):
            continue
        reps.append((idx, complex(s)))
    return reps


def critical_points(roots: np.ndarray, order: float, coeffs: CharCoeffs
                    ) -> tuple[list[Tau3Candidate], Optional[float],
                               Optional[float]]:
    """Admissible (omega, tau) pairs and the minimum-delay critical point.

    A candidate is kept only when its delay is positive and the full
    transcendental equation residual at (i*omega, tau) is below RESIDUAL_TOL;
    that certification is what rejects wrong arccos branches.  Enumeration of
    the 2*pi ladder stops at the first admissible delay per root and branch
    (later rungs are larger, so they can never beat the minimum).
    """
    candidates: list[Tau3Candidate] = []
    for idx, s in _dedup_roots(roots):
        if abs(s) < 1e-12:
            continue
        omega, principal, mirror = arccos_ladder(s, order, range(_K_CAP + 1))
        for branch, taus in (("principal", principal), ("mirror", mirror)):
            for k, tau in enumerate(taus):
                if tau <= 0.0:
                    continue
                res = residual_tau3(coeffs, order, omega, tau)
                if res < RESIDUAL_TOL:
                    candidates.append(Tau3Candidate(
                        root_index=idx, branch=branch, k=k,
                        omega=omega, tau=tau, residual=res))
                    break
    candidates.sort(key=lambda c: c.tau)
    if not candidates:
        return candidates, None, None
    best = candidates[0]
    return candidates, best.omega, best.tau


def transversality_tau3(coeffs: CharCoeffs, order: float, omega0: float,
                        tau0: float) -> float:
    """Re[d lam / d tau] at the critical point, from the implicit derivative.

    The numerator is -dH/dtau and the denominator dH/dlam of the equal-delay
    characteristic function H, both evaluated in complex arithmetic at
    lam = i*omega0.  A nonzero value certifies transversal crossing.
    """
    num, den = _transversality_parts(coeffs, order, omega0, tau0)
    if abs(den) ** 2 < 1e-14:
        raise NumericalError("transversality denominator is degenerate")
    return (num / den).real


def _transversality_parts(coeffs: CharCoeffs, order: float, omega0: float,
                          tau0: float) -> tuple[complex, complex]:
    lam = 1j * omega0
    d = coeffs.d
    num = 0j
    for k in range(1, 7):
        num += k * d[k - 1] * lam ** ((6 - k) * order) * np.exp(-k * lam * tau0)
    num *= lam
    den = 6.0 * order * lam ** (6 * order - 1.0)
    for k in range(1, 7):
        den += d[k - 1] * ((6 - k) * order * lam ** ((6 - k) * order - 1.0)
                           - k * tau0 * lam ** ((6 - k) * order)) \
            * np.exp(-k * lam * tau0)
    return num, den


def analyze_tau3(params: NetworkParams, order: float) -> Tau3Report:
    """Full equal-delay pipeline: coefficients, roots, candidates, crossing rate."""
    coeffs = compute_coeffs(params.decay, linearize(params))
    roots = aux_poly_roots(coeffs)
    candidates, omega0, tau0 = critical_points(roots, order, coeffs)
    if omega0 is None:
        return Tau3Report(roots=roots, candidates=tuple(candidates),
                          omega0=None, tau0=None, transversality=None,
                          verdict="no_bifurcation")
    trans = transversality_tau3(coeffs, order, omega0, tau0)
    return Tau3Report(roots=roots, candidates=tuple(candidates),
                      omega0=omega0, tau0=tau0, transversality=trans,
                      verdict="bifurcation")


@dataclass(frozen=True)
class SweepRow:
    order: float
    omega0: Optional[float]
    tau0: Optional[float]
    error: str = ""


def order_sweep(params: NetworkParams, theta_grid: Sequence[float]
                ) -> list[SweepRow]:
    """Critical frequency and delay per fractional order.

    The auxiliary polynomial does not depend on the order, so its roots are
    computed once; rows are emitted in grid order with per-row error markers.
    """
    coeffs = compute_coeffs(params.decay, linearize(params))
    roots = aux_poly_roots(coeffs)
    rows: list[SweepRow] = []
    for theta in theta_grid:
        try:
            if not (0.0 < theta <= 1.0):
                raise NumericalError(f"order {theta} outside (0, 1]")
            _, omega0, tau0 = critical_points(roots, theta, coeffs)
            rows.append(SweepRow(order=theta, omega0=omega0, tau0=tau0))
        except NumericalError as exc:
            rows.append(SweepRow(order=theta, omega0=None, tau0=None,
                                 error=str(exc)))
    return rows


__all__ = ["Tau3Candidate", "Tau3Report", "SweepRow", "aux_poly_roots",
           "residual_tau3", "arccos_ladder", "critical_points",
           "transversality_tau3", "analyze_tau3", "order_sweep",
           "RESIDUAL_TOL"]
