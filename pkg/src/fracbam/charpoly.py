"""Characteristic-equation coefficients, zero-delay polynomial and Hurwitz test.

The transcendental characteristic function of the linearized 3+3 network is

    lam^{6t} + c11 e^{-lam tau1} lam^{5t}
             + (c21 e^{-2 lam tau1} - c22 e^{-2 lam tau2}) lam^{4t}
             + (c31 e^{-3 lam tau1} - c32 e^{-lam tau1 - 2 lam tau2}) lam^{3t}
             + (c41 e^{-4 lam tau1} - c42 e^{-2 lam tau1 - 2 lam tau2}
                + (c43 - c44) e^{-4 lam tau2}) lam^{2t}
             + (c51 e^{-5 lam tau1} - c52 e^{-3 lam tau1 - 2 lam tau2}
                + (c53 - c54) e^{-lam tau1 - 4 lam tau2}) lam^{t}
             + (c61 e^{-6 lam tau1} - c62 e^{-4 lam tau1 - 2 lam tau2}
                + (c63 - c64) e^{-2 lam tau1 - 4 lam tau2} - c65 e^{-6 lam tau2})

with t the fractional order.  Every c-coefficient is a sum of products of
decay rates (k1..k6) and linear gains (p.. for the J->I matrix, q.. for the
I->J matrix).  The sums are encoded literally, term by term, in TERM_TABLE so
each term can be checked in isolation; a symbolic-determinant oracle in the
test suite recomputes every coefficient independently.  Despite the symbol
names, the c's are signed reals: with mixed-sign gains several of them go
negative.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

import numpy as np

from .model import LinearGains

# Each entry: coefficient name -> tuple of (sign, "factor factor ...") terms.
# Factors: k1..k6 decay rates, pIJ = phi[I][J], qIJ = varphi[I][J].
# c65 collects the six-factor cross products, split by permutation parity:
# odd-parity products enter with a minus sign.
TERM_TABLE: dict[str, tuple[tuple[int, str], ...]] = {
    "c11": tuple((1, f"k{i}") for i in range(1, 7)),
    "c21": (
        (1, "k1 k2"), (1, "k1 k3"), (1, "k1 k4"), (1, "k1 k5"), (1, "k1 k6"),
        (1, "k2 k3"), (1, "k2 k4"), (1, "k2 k5"), (1, "k2 k6"),
        (1, "k3 k4"), (1, "k3 k5"), (1, "k3 k6"),
        (1, "k4 k5"), (1, "k4 k6"), (1, "k5 k6"),
    ),
    "c22": (
        (1, "p11 q11"), (1, "p12 q21"), (1, "p13 q31"),
        (1, "p21 q12"), (1, "p22 q22"), (1, "p23 q32"),
        (1, "p31 q13"), (1, "p32 q23"), (1, "p33 q33"),
    ),
    "c31": (
        (1, "k1 k2 k3"), (1, "k1 k2 k4"), (1, "k1 k2 k5"), (1, "k1 k2 k6"),
        (1, "k1 k3 k4"), (1, "k1 k3 k5"), (1, "k1 k3 k6"),
        (1, "k1 k4 k5"), (1, "k1 k4 k6"), (1, "k1 k5 k6"),
        (1, "k2 k3 k4"), (1, "k2 k3 k5"), (1, "k2 k3 k6"),
        (1, "k2 k4 k5"), (1, "k2 k4 k6"), (1, "k2 k5 k6"),
        (1, "k3 k4 k5"), (1, "k3 k4 k6"), (1, "k3 k5 k6"), (1, "k4 k5 k6"),
    ),
    "c32": (
        (1, "k1 p21 q12"), (1, "k1 p22 q22"), (1, "k1 p23 q32"),
        (1, "k1 p31 q13"), (1, "k1 p32 q23"), (1, "k1 p33 q33"),
        (1, "k2 p11 q11"), (1, "k2 p12 q21"), (1, "k2 p13 q31"),
        (1, "k2 p31 q13"), (1, "k2 p32 q23"), (1, "k2 p33 q33"),
        (1, "k3 p11 q11"), (1, "k3 p12 q21"), (1, "k3 p13 q31"),
        (1, "k3 p21 q12"), (1, "k3 p22 q22"), (1, "k3 p23 q32"),
        (1, "k4 p12 q21"), (1, "k4 p13 q31"), (1, "k4 p22 q22"),
        (1, "k4 p23 q32"), (1, "k4 p32 q23"), (1, "k4 p33 q33"),
        (1, "k5 p11 q11"), (1, "k5 p13 q31"), (1, "k5 p21 q12"),
        (1, "k5 p23 q32"), (1, "k5 p31 q13"), (1, "k5 p33 q33"),
        (1, "k6 p11 q11"), (1, "k6 p12 q21"), (1, "k6 p21 q12"),
        (1, "k6 p22 q22"), (1, "k6 p31 q13"), (1, "k6 p32 q23"),
    ),
    "c41": (
        (1, "k1 k2 k3 k4"), (1, "k1 k2 k3 k5"), (1, "k1 k2 k3 k6"),
        (1, "k1 k2 k4 k5"), (1, "k1 k2 k4 k6"), (1, "k1 k2 k5 k6"),
        (1, "k1 k3 k4 k5"), (1, "k1 k3 k4 k6"), (1, "k1 k3 k5 k6"),
        (1, "k1 k4 k5 k6"), (1, "k2 k3 k4 k5"), (1, "k2 k3 k4 k6"),
        (1, "k2 k3 k5 k6"), (1, "k2 k4 k5 k6"), (1, "k3 k4 k5 k6"),
    ),
    "c42": (
        (1, "k1 k2 p31 q13"), (1, "k1 k2 p32 q23"), (1, "k1 k2 p33 q33"),
        (1, "k1 k3 p21 q12"), (1, "k1 k3 p22 q22"), (1, "k1 k3 p23 q32"),
        (1, "k1 k4 p22 q22"), (1, "k1 k4 p23 q32"), (1, "k1 k4 p32 q23"),
        (1, "k1 k4 p33 q33"),
        (1, "k1 k5 p21 q12"), (1, "k1 k5 p23 q32"), (1, "k1 k5 p31 q13"),
        (1, "k1 k5 p33 q33"),
        (1, "k1 k6 p21 q12"), (1, "k1 k6 p22 q22"), (1, "k1 k6 p31 q13"),
        (1, "k1 k6 p32 q23"),
        (1, "k2 k3 p11 q11"), (1, "k2 k3 p12 q21"), (1, "k2 k3 p13 q31"),
        (1, "k2 k4 p12 q21"), (1, "k2 k4 p13 q31"), (1, "k2 k4 p32 q23"),
        (1, "k2 k4 p33 q33"),
        (1, "k2 k5 p11 q11"), (1, "k2 k5 p13 q31"), (1, "k2 k5 p31 q13"),
        (1, "k2 k5 p33 q33"),
        (1, "k2 k6 p11 q11"), (1, "k2 k6 p12 q21"), (1, "k2 k6 p31 q13"),
        (1, "k2 k6 p32 q23"),
        (1, "k3 k4 p12 q21"), (1, "k3 k4 p13 q31"), (1, "k3 k4 p22 q22"),
        (1, "k3 k4 p23 q32"),
        (1, "k3 k5 p11 q11"), (1, "k3 k5 p13 q31"), (1, "k3 k5 p21 q12"),
        (1, "k3 k5 p23 q32"),
        (1, "k3 k6 p11 q11"), (1, "k3 k6 p12 q21"), (1, "k3 k6 p21 q12"),
        (1, "k3 k6 p22 q22"),
        (1, "k4 k5 p13 q31"), (1, "k4 k5 p23 q32"), (1, "k4 k5 p33 q33"),
        (1, "k4 k6 p12 q21"), (1, "k4 k6 p22 q22"), (1, "k4 k6 p32 q23"),
        (1, "k5 k6 p11 q11"), (1, "k5 k6 p21 q12"), (1, "k5 k6 p31 q13"),
    ),
    "c43": (
        (1, "p11 p22 q11 q22"), (1, "p11 p23 q11 q32"), (1, "p11 p32 q11 q23"),
        (1, "p11 p33 q11 q33"), (1, "p12 p21 q12 q21"), (1, "p12 p23 q21 q32"),
        (1, "p12 p31 q13 q21"), (1, "p12 p33 q21 q33"), (1, "p13 p21 q12 q31"),
        (1, "p13 p22 q22 q31"), (1, "p13 p31 q13 q31"), (1, "p13 p32 q23 q31"),
        (1, "p21 p32 q12 q23"), (1, "p21 p33 q12 q33"), (1, "p22 p31 q13 q22"),
        (1, "p22 p33 q22 q33"), (1, "p23 p31 q13 q32"), (1, "p23 p32 q23 q32"),
    ),
    "c44": (
        (1, "p11 p22 q12 q21"), (1, "p11 p23 q12 q31"), (1, "p11 p32 q13 q21"),
        (1, "p11 p33 q13 q31"), (1, "p12 p21 q11 q22"), (1, "p12 p23 q22 q31"),
        (1, "p12 p31 q11 q23"), (1, "p12 p33 q23 q31"), (1, "p13 p21 q11 q32"),
        (1, "p13 p22 q21 q32"), (1, "p13 p31 q11 q33"), (1, "p13 p32 q21 q33"),
        (1, "p21 p32 q13 q22"), (1, "p21 p33 q13 q32"), (1, "p22 p31 q12 q23"),
        (1, "p22 p33 q23 q32"), (1, "p23 p31 q12 q33"), (1, "p23 p32 q22 q33"),
    ),
    "c51": (
        (1, "k1 k2 k3 k4 k5"), (1, "k1 k2 k3 k4 k6"), (1, "k1 k2 k3 k5 k6"),
        (1, "k1 k2 k4 k5 k6"), (1, "k1 k3 k4 k5 k6"), (1, "k2 k3 k4 k5 k6"),
    ),
    "c52": (
        (1, "k1 k2 k4 p32 q23"), (1, "k1 k2 k4 p33 q33"),
        (1, "k1 k2 k5 p31 q13"), (1, "k1 k2 k5 p33 q33"),
        (1, "k1 k2 k6 p31 q13"), (1, "k1 k2 k6 p32 q23"),
        (1, "k1 k3 k4 p22 q22"), (1, "k1 k3 k4 p23 q32"),
        (1, "k1 k3 k5 p21 q12"), (1, "k1 k3 k5 p23 q32"),
        (1, "k1 k3 k6 p21 q12"), (1, "k1 k3 k6 p22 q22"),
        (1, "k1 k4 k5 p23 q32"), (1, "k1 k4 k5 p33 q33"),
        (1, "k1 k4 k6 p22 q22"), (1, "k1 k4 k6 p32 q23"),
        (1, "k1 k5 k6 p21 q12"), (1, "k1 k5 k6 p31 q13"),
        (1, "k2 k3 k4 p12 q21"), (1, "k2 k3 k4 p13 q31"),
        (1, "k2 k3 k5 p11 q11"), (1, "k2 k3 k5 p13 q31"),
        (1, "k2 k3 k6 p11 q11"), (1, "k2 k3 k6 p12 q21"),
        (1, "k2 k4 k5 p13 q31"), (1, "k2 k4 k5 p33 q33"),
        (1, "k2 k4 k6 p12 q21"), (1, "k2 k4 k6 p32 q23"),
        (1, "k2 k5 k6 p11 q11"), (1, "k2 k5 k6 p31 q13"),
        (1, "k3 k4 k5 p13 q31"), (1, "k3 k4 k5 p23 q32"),
        (1, "k3 k4 k6 p12 q21"), (1, "k3 k4 k6 p22 q22"),
        (1, "k3 k5 k6 p11 q11"), (1, "k3 k5 k6 p21 q12"),
    ),
    "c53": (
        (1, "k1 p21 p32 q12 q23"), (1, "k1 p21 p33 q12 q33"),
        (1, "k1 p22 p31 q13 q22"), (1, "k1 p22 p33 q22 q33"),
        (1, "k1 p23 p31 q13 q32"), (1, "k1 p23 p32 q23 q32"),
        (1, "k2 p11 p32 q11 q23"), (1, "k2 p11 p33 q11 q33"),
        (1, "k2 p12 p31 q13 q21"), (1, "k2 p12 p33 q21 q33"),
        (1, "k2 p13 p31 q13 q31"), (1, "k2 p13 p32 q23 q31"),
        (1, "k3 p11 p22 q11 q22"), (1, "k3 p11 p23 q11 q32"),
        (1, "k3 p12 p21 q12 q21"), (1, "k3 p12 p23 q21 q32"),
        (1, "k3 p13 p21 q12 q31"), (1, "k3 p13 p22 q22 q31"),
        (1, "k4 p12 p23 q21 q32"), (1, "k4 p12 p33 q21 q33"),
        (1, "k4 p13 p22 q22 q31"), (1, "k4 p13 p32 q23 q31"),
        (1, "k4 p22 p33 q22 q33"), (1, "k4 p23 p32 q23 q32"),
        (1, "k5 p11 p23 q11 q32"), (1, "k5 p11 p33 q11 q33"),
        (1, "k5 p13 p21 q12 q31"), (1, "k5 p13 p31 q13 q31"),
        (1, "k5 p21 p33 q12 q33"), (1, "k5 p23 p31 q13 q32"),
        (1, "k6 p11 p22 q11 q22"), (1, "k6 p11 p32 q11 q23"),
        (1, "k6 p12 p21 q12 q21"), (1, "k6 p12 p31 q13 q21"),
        (1, "k6 p21 p32 q12 q23"), (1, "k6 p22 p31 q13 q22"),
    ),
    "c54": (
        (1, "k1 p21 p32 q13 q22"), (1, "k1 p21 p33 q13 q32"),
        (1, "k1 p22 p31 q12 q23"), (1, "k1 p22 p33 q23 q32"),
        (1, "k1 p23 p31 q12 q33"), (1, "k1 p23 p32 q22 q33"),
        (1, "k2 p11 p32 q13 q21"), (1, "k2 p11 p33 q13 q31"),
        (1, "k2 p12 p31 q11 q23"), (1, "k2 p12 p33 q23 q31"),
        (1, "k2 p13 p31 q11 q33"), (1, "k2 p13 p32 q21 q33"),
        (1, "k3 p11 p22 q12 q21"), (1, "k3 p11 p23 q12 q31"),
        (1, "k3 p12 p21 q11 q22"), (1, "k3 p12 p23 q22 q31"),
        (1, "k3 p13 p21 q11 q32"), (1, "k3 p13 p22 q21 q32"),
        (1, "k4 p12 p23 q22 q31"), (1, "k4 p12 p33 q23 q31"),
        (1, "k4 p13 p22 q21 q32"), (1, "k4 p13 p32 q21 q33"),
        (1, "k4 p22 p33 q23 q32"), (1, "k4 p23 p32 q22 q33"),
        (1, "k5 p11 p23 q12 q31"), (1, "k5 p11 p33 q13 q31"),
        (1, "k5 p13 p21 q11 q32"), (1, "k5 p13 p31 q11 q33"),
        (1, "k5 p21 p33 q13 q32"), (1, "k5 p23 p31 q12 q33"),
        (1, "k6 p11 p22 q12 q21"), (1, "k6 p11 p32 q13 q21"),
        (1, "k6 p12 p21 q11 q22"), (1, "k6 p12 p31 q11 q23"),
        (1, "k6 p21 p32 q13 q22"), (1, "k6 p22 p31 q12 q23"),
    ),
    "c61": (
        (1, "k1 k2 k3 k4 k5 k6"),
    ),
    "c62": (
        (1, "k1 k2 k4 k5 p33 q33"), (1, "k1 k2 k4 k6 p32 q23"),
        (1, "k1 k2 k5 k6 p31 q13"), (1, "k1 k3 k4 k5 p23 q32"),
        (1, "k1 k3 k4 k6 p22 q22"), (1, "k1 k3 k5 k6 p21 q12"),
        (1, "k2 k3 k4 k5 p13 q31"), (1, "k2 k3 k4 k6 p12 q21"),
        (1, "k2 k3 k5 k6 p11 q11"),
    ),
    "c63": (
        (1, "k1 k4 p22 p33 q22 q33"), (1, "k1 k4 p23 p32 q23 q32"),
        (1, "k1 k5 p21 p33 q12 q33"), (1, "k1 k5 p23 p31 q13 q32"),
        (1, "k1 k6 p21 p32 q12 q23"), (1, "k1 k6 p22 p31 q13 q22"),
        (1, "k2 k4 p12 p33 q21 q33"), (1, "k2 k4 p13 p32 q23 q31"),
        (1, "k2 k5 p11 p33 q11 q33"), (1, "k2 k5 p13 p31 q13 q31"),
        (1, "k2 k6 p11 p32 q11 q23"), (1, "k2 k6 p12 p31 q13 q21"),
        (1, "k3 k4 p12 p23 q21 q32"), (1, "k3 k4 p13 p22 q22 q31"),
        (1, "k3 k5 p11 p23 q11 q32"), (1, "k3 k5 p13 p21 q12 q31"),
        (1, "k3 k6 p11 p22 q11 q22"), (1, "k3 k6 p12 p21 q12 q21"),
    ),
    "c64": (
        (1, "k1 k4 p22 p33 q23 q32"), (1, "k1 k4 p23 p32 q22 q33"),
        (1, "k1 k5 p21 p33 q13 q32"), (1, "k1 k5 p23 p31 q12 q33"),
        (1, "k1 k6 p21 p32 q13 q22"), (1, "k1 k6 p22 p31 q12 q23"),
        (1, "k2 k4 p12 p33 q23 q31"), (1, "k2 k4 p13 p32 q21 q33"),
        (1, "k2 k5 p11 p33 q13 q31"), (1, "k2 k5 p13 p31 q11 q33"),
        (1, "k2 k6 p11 p32 q13 q21"), (1, "k2 k6 p12 p31 q11 q23"),
        (1, "k3 k4 p12 p23 q22 q31"), (1, "k3 k4 p13 p22 q21 q32"),
        (1, "k3 k5 p11 p23 q12 q31"), (1, "k3 k5 p13 p21 q11 q32"),
        (1, "k3 k6 p11 p22 q12 q21"), (1, "k3 k6 p12 p21 q11 q22"),
    ),
    "c65": (
        (1, "p11 p22 p33 q11 q22 q33"), (1, "p11 p22 p33 q12 q23 q31"),
        (1, "p11 p22 p33 q13 q21 q32"), (1, "p11 p23 p32 q11 q23 q32"),
        (1, "p11 p23 p32 q12 q21 q33"), (1, "p11 p23 p32 q13 q22 q31"),
        (1, "p12 p21 p33 q11 q23 q32"), (1, "p12 p21 p33 q12 q21 q33"),
        (1, "p12 p21 p33 q13 q22 q31"), (1, "p12 p23 p31 q11 q22 q33"),
        (1, "p12 p23 p31 q12 q23 q31"), (1, "p12 p23 p31 q13 q21 q32"),
        (1, "p13 p21 p32 q11 q22 q33"), (1, "p13 p21 p32 q12 q23 q31"),
        (1, "p13 p21 p32 q13 q21 q32"), (1, "p13 p22 p31 q11 q23 q32"),
        (1, "p13 p22 p31 q12 q21 q33"), (1, "p13 p22 p31 q13 q22 q31"),
        (-1, "p11 p22 p33 q11 q23 q32"), (-1, "p11 p22 p33 q12 q21 q33"),
        (-1, "p11 p22 p33 q13 q22 q31"), (-1, "p11 p23 p32 q11 q22 q33"),
        (-1, "p11 p23 p32 q12 q23 q31"), (-1, "p11 p23 p32 q13 q21 q32"),
        (-1, "p12 p21 p33 q11 q22 q33"), (-1, "p12 p21 p33 q12 q23 q31"),
        (-1, "p12 p21 p33 q13 q21 q32"), (-1, "p12 p23 p31 q11 q23 q32"),
        (-1, "p12 p23 p31 q12 q21 q33"), (-1, "p12 p23 p31 q13 q22 q31"),
        (-1, "p13 p21 p32 q11 q23 q32"), (-1, "p13 p21 p32 q12 q21 q33"),
        (-1, "p13 p21 p32 q13 q22 q31"), (-1, "p13 p22 p31 q11 q22 q33"),
        (-1, "p13 p22 p31 q12 q23 q31"), (-1, "p13 p22 p31 q13 q21 q32"),
    ),
}

COEFF_NAMES = ("c11", "c21", "c22", "c31", "c32", "c41", "c42", "c43", "c44",
               "c51", "c52", "c53", "c54", "c61", "c62", "c63", "c64", "c65")


def _parse_factor(tok: str, decay, phi, varphi) -> float:
    kind = tok[0]
    if kind == "k":
        return decay[int(tok[1]) - 1]
    i, j = int(tok[1]) - 1, int(tok[2]) - 1
    return phi[i, j] if kind == "p" else varphi[i, j]


def evaluate_term_table(name: str, decay, phi, varphi) -> float:
    total = 0.0
    for sign, factors in TERM_TABLE[name]:
        prod = float(sign)
        for tok in factors.split():
            prod *= _parse_factor(tok, decay, phi, varphi)
        total += prod
    return total


@dataclass(frozen=True)
class CharCoeffs:
    """The 18 characteristic coefficients plus the zero-delay data d, D."""

    c11: float
    c21: float
    c22: float
    c31: float
    c32: float
    c41: float
    c42: float
    c43: float
    c44: float
    c51: float
    c52: float
    c53: float
    c54: float
    c61: float
    c62: float
    c63: float
    c64: float
    c65: float
    d: np.ndarray
    D: np.ndarray

    def as_dict(self) -> dict:
        out = {name: getattr(self, name) for name in COEFF_NAMES}
        out["d"] = [float(v) for v in self.d]
        out["D"] = [float(v) for v in self.D]
        return out


def compute_coeffs(decay, gains: LinearGains) -> CharCoeffs:
    """Evaluate every coefficient of the term table, then d1..d6 and D1..D6."""
    decay = np.asarray(decay, dtype=float)
    phi = np.asarray(gains.phi, dtype=float)
    varphi = np.asarray(gains.varphi, dtype=float)
    c = {name: evaluate_term_table(name, decay, phi, varphi)
         for name in COEFF_NAMES}
    d = np.array([
        c["c11"],
        c["c21"] - c["c22"],
        c["c31"] - c["c32"],
        c["c41"] - c["c42"] + c["c43"] - c["c44"],
        c["c51"] - c["c52"] + c["c53"] - c["c54"],
        c["c61"] - c["c62"] + c["c63"] - c["c64"] - c["c65"],
    ])
    return CharCoeffs(d=d, D=hurwitz_minors(d), **c)


def hurwitz_matrix(d) -> np.ndarray:
    """6x6 Hurwitz arrangement of the monic degree-6 coefficients d1..d6."""
    a = np.zeros(13)
    a[0] = 1.0
    a[1:7] = np.asarray(d, dtype=float)
    H = np.zeros((6, 6))
    for i in range(6):
        for j in range(6):
            idx = 2 * (i + 1) - (j + 1)
            if 0 <= idx <= 6:
                H[i, j] = a[idx]
    return H


def hurwitz_minors(d) -> np.ndarray:
    """Leading principal minors D1..D5 of the arrangement, and D6 = d6 * D5."""
    H = hurwitz_matrix(d)
    D = np.empty(6)
    D[0] = H[0, 0]
    for i in range(1, 5):
        D[i] = np.linalg.det(H[:i + 1, :i + 1])
    D[5] = d[5] * D[4]
    return D


def hurwitz_stable(coeffs: CharCoeffs) -> tuple[bool, np.ndarray]:
    """True iff all six minors are strictly positive (zero-delay stability)."""
    D = coeffs.D
    return bool(np.all(D > 0.0)), D


# Structural decomposition of the characteristic function: each entry is
# (value, power multiplier p, tau1 exponent multiple a, tau2 exponent multiple b)
# for the term  value * lam^{p*order} * exp(-lam*(a*tau1 + b*tau2)).
def char_terms(coeffs: CharCoeffs) -> list[tuple[float, int, int, int]]:
    c = coeffs
    return [
        (1.0, 6, 0, 0),
        (c.c11, 5, 1, 0),
        (c.c21, 4, 2, 0), (-c.c22, 4, 0, 2),
        (c.c31, 3, 3, 0), (-c.c32, 3, 1, 2),
        (c.c41, 2, 4, 0), (-c.c42, 2, 2, 2), (c.c43 - c.c44, 2, 0, 4),
        (c.c51, 1, 5, 0), (-c.c52, 1, 3, 2), (c.c53 - c.c54, 1, 1, 4),
        (c.c61, 0, 6, 0), (-c.c62, 0, 4, 2), (c.c63 - c.c64, 0, 2, 4),
        (-c.c65, 0, 0, 6),
    ]


def char_value(coeffs: CharCoeffs, order: float, lam: complex,
               tau1: float, tau2: float) -> complex:
    """The transcendental characteristic function at lam (principal branch)."""
    lam = complex(lam)
    total = 0j
    for value, p, a, b in char_terms(coeffs):
        total += value * lam ** (p * order) * np.exp(-lam * (a * tau1 + b * tau2))
    return total


__all__ = ["TERM_TABLE", "COEFF_NAMES", "CharCoeffs", "compute_coeffs",
           "evaluate_term_table", "hurwitz_matrix", "hurwitz_minors",
           "hurwitz_stable", "char_terms", "char_value"]
