"""Coefficient-vector plumbing shared by the analysis modules."""

from __future__ import annotations

from itertools import product
from typing import List, Sequence, Tuple

import numpy as np

from .mpoly import Exponent, LaurentPoly, grlex_key


def monomials_upto(dim: int, degree: int) -> List[Exponent]:
    """All exponents with |gamma| <= degree, in graded-lex order."""
    out = [exp for exp in product(range(degree + 1), repeat=dim) if sum(exp) <= degree]
    out.sort(key=grlex_key)
    return out


def joint_support(polys: Sequence[LaurentPoly]) -> List[Exponent]:
    support = set()
    for p in polys:
        support.update(p.terms)
    return sorted(support, key=grlex_key)


def coeff_matrix(polys: Sequence[LaurentPoly],
                 support: Sequence[Exponent] | None = None) -> Tuple[np.ndarray, List[Exponent]]:
    """Stack coefficient vectors as columns over a common monomial support."""
    if support is None:
        support = joint_support(polys)
    index = {exp: i for i, exp in enumerate(support)}
    A = np.zeros((len(support), len(polys)), dtype=complex)
    for k, p in enumerate(polys):
        for exp, c in p.terms.items():
            A[index[exp], k] = c
    return A, list(support)


def from_coeff_vector(dim: int, vec: np.ndarray, support: Sequence[Exponent]) -> LaurentPoly:
    return LaurentPoly(dim, {exp: complex(vec[i]) for i, exp in enumerate(support)})


def span_residual(f: LaurentPoly, basis: Sequence[LaurentPoly]) -> Tuple[float, np.ndarray]:
    """Relative least-squares residual of f against span(basis)."""
    support = joint_support(list(basis) + [f])
    A, _ = coeff_matrix(basis, support)
    b, _ = coeff_matrix([f], support)
    b = b[:, 0]
    coeffs, *_ = np.linalg.lstsq(A, b, rcond=None)
    res = np.linalg.norm(A @ coeffs - b)
    scale = np.linalg.norm(b)
    rel = res / scale if scale > 0 else res
    return float(rel), coeffs


def numerical_rank(A: np.ndarray, rel_threshold: float = 1e-10) -> int:
    if A.size == 0:
        return 0
    s = np.linalg.svd(A, compute_uv=False)
    if s.size == 0 or s[0] == 0:
        return 0
    return int(np.sum(s > rel_threshold * s[0]))


def nullspace(A: np.ndarray, rel_threshold: float = 1e-10) -> np.ndarray:
    """Orthonormal basis of the (numerical) nullspace, columns."""
    if A.shape[0] == 0:
        return np.eye(A.shape[1], dtype=complex)
    u, s, vh = np.linalg.svd(A)
    tol = rel_threshold * (s[0] if s.size else 1.0)
    rank = int(np.sum(s > tol))
    return vh[rank:].conj().T
