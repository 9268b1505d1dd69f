"""Forward differences, the Newton-to-monomial operator L, and the
shift-invariant spaces P_theta with their unimodular shift matrices G(y).

L rewrites the falling-factorial (Newton) coefficients of a polynomial as
monomial coefficients; it is the identity plus a strictly degree-lowering
part, so its inverse is obtained by a finite Neumann series.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Sequence, Tuple

import numpy as np

from .apolar import DInvariantSpace, ortho_homog_basis
from .linalg import coeff_matrix, from_coeff_vector, joint_support
from .mpoly import (Exponent, LaurentPoly, falling_factorial, grlex_key,
                    multi_factorial)

WITH_SIGMA_MINUS = "with_sigma_minus"
WITHOUT_SIGMA_MINUS = "without_sigma_minus"


def forward_difference(f: LaurentPoly, gamma: Sequence[int]) -> LaurentPoly:
    """Delta^gamma f via repeated f(. + e_j) - f."""
    gamma = tuple(int(g) for g in gamma)
    if min(gamma, default=0) < 0:
        raise ValueError("difference order must be nonnegative")
    f._require_poly()
    out = f
    for j, g in enumerate(gamma):
        step = [0.0] * f.dim
        step[j] = 1.0
        for _ in range(g):
            out = out.shift(step) - out
    return out


def newton_coeffs(f: LaurentPoly) -> Dict[Exponent, complex]:
    """Coefficients Delta^gamma f(0) / gamma! over |gamma| <= deg f.

    Reconstruction sum_gamma c_gamma (x)_gamma recovers f (Newton formula).
    """
    f._require_poly()
    out: Dict[Exponent, complex] = {}
    if f.is_zero:
        return out
    origin = [0.0] * f.dim
    deg = f.degree()
    from .linalg import monomials_upto
    for gamma in monomials_upto(f.dim, deg):
        val = forward_difference(f, gamma).evaluate(origin)
        if val != 0:
            out[gamma] = val / multi_factorial(gamma)
    return out


def L_op(f: LaurentPoly) -> LaurentPoly:
    """L f = sum_gamma Delta^gamma f(0)/gamma! x^gamma."""
    return LaurentPoly(f.dim, newton_coeffs(f))


def L_inv(f: LaurentPoly) -> LaurentPoly:
    """Unique g with L g = f, by the finite Neumann series of L - I.

    N = L - I strictly lowers total degree, so g = sum_k (-N)^k f
    terminates after deg f steps.
    """
    f._require_poly()
    g = f
    correction = f
    while not correction.is_zero:
        correction = -(L_op(correction) - correction)
        g = g + correction
    return g


@dataclass(frozen=True)
class PThetaBasis:
    """Basis of P_theta = sigma_- L^-1 sigma_theta Q_theta (or the variant
    without the final sign flip), tracking the exponential base theta."""

    theta: Tuple[complex, ...]
    elements: Tuple[LaurentPoly, ...]
    convention: str = WITH_SIGMA_MINUS

    @property
    def dim(self) -> int:
        return self.elements[0].dim

    @property
    def size(self) -> int:
        return len(self.elements)


def build_p_theta(Q: DInvariantSpace, theta: Sequence[complex],
                  convention: str = WITH_SIGMA_MINUS) -> PThetaBasis:
    """Image of the orthonormal basis of Q under sigma_theta, L^-1 and
    (depending on the convention) the sign flip sigma_-."""
    theta = tuple(complex(t) for t in theta)
    if len(theta) != Q.dim:
        raise ValueError("theta has wrong length")
    if any(t == 0 for t in theta):
        raise ValueError("theta must lie in C_x^s")
    if convention not in (WITH_SIGMA_MINUS, WITHOUT_SIGMA_MINUS):
        raise ValueError(f"unknown convention {convention!r}")
    elements = []
    for q in ortho_homog_basis(Q):
        p = L_inv(q.scale_vars(theta))
        if convention == WITH_SIGMA_MINUS:
            p = p.sigma_minus()
        elements.append(p)
    return PThetaBasis(theta, tuple(elements), convention)


def shift_matrix(P: PThetaBasis, y: Sequence[complex]) -> np.ndarray:
    """G(y) with P(. + y) = G(y) P, i.e. G[i, j] = coefficient of P_j in
    P_i(. + y).  Solved by column-pivoted least squares on the coefficient
    vectors; a rank-deficient basis raises."""
    polys = list(P.elements)
    shifted = [p.shift(y) for p in polys]
    support = joint_support(polys + shifted)
    A, _ = coeff_matrix(polys, support)
    B, _ = coeff_matrix(shifted, support)
    sv = np.linalg.svd(A, compute_uv=False)
    if sv.size == 0 or sv[-1] <= 1e-12 * sv[0]:
        raise ValueError("P_theta basis is numerically dependent")
    G, *_ = np.linalg.lstsq(A, B, rcond=None)
    return G.T
