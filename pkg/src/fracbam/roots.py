"""Polynomial root finding: Aberth-Ehrlich simultaneous iteration and the
closed-form quartic.

The degree here is fixed and small (six for the auxiliary polynomial, four for
the cosine quartic), so the production path avoids eigenvalue machinery: the
Aberth iteration plus Newton polishing handles the sextic, and the quartic is
solved in closed form with complex-safe branch handling.  Companion-matrix
eigenvalues exist only in the test suite as an independent oracle.
"""

from __future__ import annotations

import cmath
import math
from typing import Sequence

import numpy as np

from .errors import NumericalError

_EPS = np.finfo(float).eps


def _polyval(coeffs: np.ndarray, z: complex) -> complex:
    acc = 0j
    for c in coeffs:
        acc = acc * z + c
    return acc


def _polyval_dp(coeffs: np.ndarray, z: complex) -> tuple[complex, complex]:
    p = 0j
    dp = 0j
    for c in coeffs:
        dp = dp * z + p
        p = p * z + c
    return p, dp


def _derivative(coeffs: np.ndarray) -> np.ndarray:
    n = len(coeffs) - 1
    if n == 0:
        return np.zeros(1, dtype=complex)
    return coeffs[:-1] * np.arange(n, 0, -1)


def _residual_ok(monic: np.ndarray, z: complex, rtol: float) -> bool:
    n = len(monic) - 1
    scale = max(1.0, float(np.max(np.abs(monic))))
    return abs(_polyval(monic, z)) <= rtol * (1.0 + abs(z) ** n) * scale


def _collapse_clusters(roots: list[complex], monic: np.ndarray) -> list[complex]:
    """Replace a numerically split multiple root by copies of its refined centre.

    Groups are accepted only when all derivatives below the group size vanish
    to rounding level at the centre; genuinely distinct close roots fail that
    test and are left untouched.
    """
    n = len(roots)
    if n < 2:
        return roots
    scale = 1.0 + max(abs(z) for z in roots)
    thr = 1e-2 * scale
    parent = list(range(n))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for i in range(n):
        for j in range(i + 1, n):
            if abs(roots[i] - roots[j]) < thr:
                parent[find(i)] = find(j)

    groups: dict[int, list[int]] = {}
    for i in range(n):
        groups.setdefault(find(i), []).append(i)

    coeff_scale = max(1.0, float(np.max(np.abs(monic))))
    out = list(roots)
    for idx in groups.values():
        m = len(idx)
        if m < 2:
            continue
        centre = sum(roots[i] for i in idx) / m
        # refine on the (m-1)-th derivative, where the multiple root is simple
        dcoeffs = monic
        for _ in range(m - 1):
            dcoeffs = _derivative(dcoeffs)
        z = centre
        for _ in range(8):
            p, dp = _polyval_dp(dcoeffs, z)
            if abs(dp) < 1e-300:
                break
            step = p / dp
            z -= step
            if abs(step) < 1e-15 * (1.0 + abs(z)):
                break
        ok = True
        dk = monic
        for j in range(m):
            bound = 1e-8 * coeff_scale * math.comb(n, j) * (1.0 + abs(z)) ** (n - j)
            if abs(_polyval(dk, z)) / math.factorial(j) > bound:
                ok = False
                break
            dk = _derivative(dk)
        if ok:
            for i in idx:
                out[i] = z
    return out


def aberth_roots(coeffs: Sequence[float | complex], rtol: float = 1e-10,
                 max_iter: int = 500) -> np.ndarray:
    """All roots of the polynomial with descending coefficients `coeffs`.

    Simultaneous Aberth-Ehrlich iteration from a deterministic circle of
    starting points, Newton polishing, then multiple-root cluster collapse.
    Each returned root satisfies |p(z)| <= rtol * (1 + |z|^n) * max(1, |a|_inf)
    on the monic-normalized polynomial, else NumericalError.
    """
    c = np.asarray(coeffs, dtype=complex)
    if c.ndim != 1 or len(c) == 0:
        raise NumericalError("empty coefficient vector")
    nz = np.flatnonzero(np.abs(c) > 0.0)
    if len(nz) == 0:
        raise NumericalError("identically zero polynomial has no defined roots")
    c = c[nz[0]:]
    n_zero_roots = 0
    while len(c) > 1 and c[-1] == 0:
        c = c[:-1]
        n_zero_roots += 1
    monic = c / c[0]
    n = len(monic) - 1
    if n == 0:
        roots: list[complex] = []
    else:
        radius = 1.0 + float(np.max(np.abs(monic[1:]))) if n >= 1 else 1.0
        z = np.array([0.7 * radius * cmath.exp(2j * math.pi * (k + 0.37) / n)
                      + 0.01 * radius * cmath.exp(1j * k)
                      for k in range(n)], dtype=complex)
        for _ in range(max_iter):
            moved = 0.0
            for i in range(n):
                p, dp = _polyval_dp(monic, z[i])
                if p == 0:
                    continue
                if abs(dp) < 1e-300:
                    z[i] += 1e-6 * radius * (1 + 1j)
                    moved = math.inf
                    continue
                newton = p / dp
                rep = sum(1.0 / (z[i] - z[j]) for j in range(n) if j != i)
                denom = 1.0 - newton * rep
                w = newton if abs(denom) < 1e-300 else newton / denom
                z[i] -= w
                moved = max(moved, abs(w) / (1.0 + abs(z[i])))
            if moved < 1e-15:
                break
        for i in range(n):
            for _ in range(3):
                p, dp = _polyval_dp(monic, z[i])
                if abs(dp) < 1e-300:
                    break
                step = p / dp
                if abs(step) > 0.1 * (1.0 + abs(z[i])):
                    break
                z[i] -= step
        roots = _collapse_clusters(list(z), monic)

    roots = [0j] * n_zero_roots + roots
    full_monic = np.concatenate([monic, np.zeros(n_zero_roots, dtype=complex)])
    for z0 in roots:
        if not _residual_ok(full_monic, z0, rtol):
            raise NumericalError(
                f"root residual check failed at z={z0!r}: "
                f"|p(z)|={abs(_polyval(full_monic, z0)):.3e}")
    return np.array(sorted(roots, key=lambda v: (round(v.real, 12),
                                                 round(v.imag, 12))),
                    dtype=complex)


def _cbrt_branches(w: complex) -> list[complex]:
    r = abs(w)
    if r == 0.0:
        return [0j, 0j, 0j]
    base = r ** (1.0 / 3.0) * cmath.exp(1j * cmath.phase(w) / 3.0)
    rot = cmath.exp(2j * math.pi / 3.0)
    return [base, base * rot, base * rot * rot]


def quadratic_roots(a: float, b: float, c: float) -> list[complex]:
    if a == 0.0:
        return [] if b == 0.0 else [complex(-c / b)]
    disc = cmath.sqrt(complex(b * b - 4.0 * a * c))
    # pick the sign that avoids cancellation in the larger root
    if (b.real if isinstance(b, complex) else b) >= 0:
        qv = -(b + disc) / 2.0
    else:
        qv = -(b - disc) / 2.0
    r1 = qv / a
    r2 = (c / qv) if qv != 0 else complex(0.0)
    return [r1, r2]


def cubic_roots(a: float, b: float, c: float, d: float) -> list[complex]:
    """Roots of a*z^3 + b*z^2 + c*z + d, complex-safe Cardano."""
    if abs(a) <= 1e-14 * max(abs(b), abs(c), abs(d), 1.0):
        return quadratic_roots(b, c, d)
    b, c, d = b / a, c / a, d / a
    shift = b / 3.0
    p = c - b * b / 3.0
    q = 2.0 * b ** 3 / 27.0 - b * c / 3.0 + d
    disc = cmath.sqrt(complex(q * q / 4.0 + p ** 3 / 27.0))
    u3 = -q / 2.0 + disc
    if abs(u3) < abs(-q / 2.0 - disc):
        u3 = -q / 2.0 - disc
    out = []
    if abs(u3) < 1e-300:
        for u in _cbrt_branches(complex(-q)):
            out.append(u - shift)
        return out
    for u in _cbrt_branches(u3):
        out.append(u - p / (3.0 * u) - shift)
    return out


def ferrari_roots(q: Sequence[float], rtol: float = 1e-8) -> np.ndarray:
    """Roots of q1 r^4 + q2 r^3 + q3 r^2 + q4 r + q5 by the closed-form chain.

    All intermediates are complex; the resolvent cube root is branch-switched
    when the principal choice collapses, and a vanishing odd depressed
    coefficient routes through the biquadratic formula.  Degenerate leading
    coefficients fall back to the cubic/quadratic solvers (fewer roots
    returned).  Every root is Newton-polished and residual-verified.
    """
    q1, q2, q3, q4, q5 = (float(v) for v in q)
    scale = max(abs(q1), abs(q2), abs(q3), abs(q4), abs(q5))
    if scale == 0.0:
        raise NumericalError("identically zero quartic")
    if abs(q1) <= 1e-12 * scale:
        roots = cubic_roots(q2, q3, q4, q5)
        monic_c = np.array([q2, q3, q4, q5], dtype=complex)
        monic_c = monic_c[np.flatnonzero(np.abs(monic_c) > 0)[0]:]
        monic_c = monic_c / monic_c[0]
        roots = [_newton_polish(monic_c, z) for z in roots]
        for z in roots:
            if not _residual_ok(monic_c, z, rtol):
                raise NumericalError("degenerate-quartic fallback root failed "
                                     f"verification at {z!r}")
        return np.array(roots, dtype=complex)

    a, b, c, d = q2 / q1, q3 / q1, q4 / q1, q5 / q1
    monic = np.array([1.0, a, b, c, d], dtype=complex)
    alpha = (8.0 * q1 * q3 - 3.0 * q2 ** 2) / (8.0 * q1 ** 2)
    beta = (q2 ** 3 - 4.0 * q1 * q2 * q3 + 8.0 * q1 ** 2 * q4) / (8.0 * q1 ** 3)
    shift = -q2 / (4.0 * q1)

    beta_scale = 1.0 + abs(a) ** 3 + abs(a) * abs(b) + abs(c)
    if abs(beta) <= 1e-12 * beta_scale:
        gamma = d - a * c / 4.0 + a * a * b / 16.0 - 3.0 * a ** 4 / 256.0
        y2 = quadratic_roots(1.0, alpha, gamma)
        roots = []
        for v in y2:
            s = cmath.sqrt(v)
            roots.extend([shift + s, shift - s])
    else:
        delta0 = q3 ** 2 - 3.0 * q2 * q4 + 12.0 * q1 * q5
        delta1 = (2.0 * q3 ** 3 - 9.0 * q2 * q3 * q4 + 27.0 * q2 ** 2 * q5
                  + 27.0 * q1 * q4 ** 2 - 72.0 * q1 * q3 * q5)
        inner_sqrt = cmath.sqrt(complex(delta1 ** 2 - 4.0 * delta0 ** 3))
        half = (delta1 + inner_sqrt) / 2.0
        if abs(half) < abs((delta1 - inner_sqrt) / 2.0):
            half = (delta1 - inner_sqrt) / 2.0
        s_tol = 1e-10 * (1.0 + abs(alpha)) ** 0.5
        S = 0j
        for Qb in _cbrt_branches(half):
            if abs(Qb) < 1e-300:
                continue
            S = 0.5 * cmath.sqrt(-2.0 * alpha / 3.0
                                 + (Qb + delta0 / Qb) / (3.0 * q1))
            if abs(S) > s_tol:
                break
        if abs(S) <= s_tol:
            raise NumericalError(
                "resolvent collapsed on every cube-root branch with a "
                "non-degenerate odd coefficient")
        t1 = cmath.sqrt(-4.0 * S * S - 2.0 * alpha + beta / S)
        t2 = cmath.sqrt(-4.0 * S * S - 2.0 * alpha - beta / S)
        roots = [shift - S + 0.5 * t1, shift - S - 0.5 * t1,
                 shift + S + 0.5 * t2, shift + S - 0.5 * t2]

    roots = [_newton_polish(monic, z) for z in roots]
    roots = _collapse_clusters(roots, monic)
    for z in roots:
        if not _residual_ok(monic, z, rtol):
            raise NumericalError(
                f"quartic root failed verification at {z!r}: "
                f"|p(z)|={abs(_polyval(monic, z)):.3e}")
    return np.array(roots, dtype=complex)


def _newton_polish(monic: np.ndarray, z: complex, steps: int = 3) -> complex:
    for _ in range(steps):
        p, dp = _polyval_dp(monic, z)
        if abs(dp) < 1e-300:
            break
        step = p / dp
        if abs(step) > 0.1 * (1.0 + abs(z)):
            break
        z -= step
    return z


__all__ = ["aberth_roots", "ferrari_roots", "cubic_roots", "quadratic_roots"]
