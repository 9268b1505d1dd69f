"""Stationary subdivision operators with expanding integer dilation matrices.

Coset membership is decided in exact integer arithmetic (adjugate over
determinant), so the half-open fundamental cell [0,1)^s never suffers from
floating boundary effects.  Kernel questions reduce to convolution kernels
of the subsymbols, one per coset.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass
from itertools import product
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from .filters import ExpPolySeq, Impulse, Window, kernel_residual, symbol
from .linalg import monomials_upto
from .mpoly import Exponent, LaurentPoly, grlex_key, laurent_normalize


def _int_matrix(rows) -> Tuple[Tuple[int, ...], ...]:
    out = tuple(tuple(int(v) for v in row) for row in rows)
    n = len(out)
    if any(len(row) != n for row in out):
        raise ValueError("dilation matrix must be square")
    return out


def int_det(M: Sequence[Sequence[int]]) -> int:
    n = len(M)
    if n == 1:
        return M[0][0]
    total = 0
    for j in range(n):
        if M[0][j] == 0:
            continue
        minor = [[M[i][k] for k in range(n) if k != j] for i in range(1, n)]
        total += (-1) ** j * M[0][j] * int_det(minor)
    return total


def int_adjugate(M: Sequence[Sequence[int]]) -> List[List[int]]:
    """adj(M) with M @ adj(M) = det(M) I, exact over the integers."""
    n = len(M)
    if n == 1:
        return [[1]]
    adj = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            minor = [[M[r][c] for c in range(n) if c != j]
                     for r in range(n) if r != i]
            adj[j][i] = (-1) ** (i + j) * int_det(minor)
    return adj


@dataclass(frozen=True)
class Dilation:
    """Integer dilation matrix; expanding means every eigenvalue has
    modulus > 1."""

    Xi: Tuple[Tuple[int, ...], ...]

    def __post_init__(self):
        M = _int_matrix(self.Xi)
        object.__setattr__(self, "Xi", M)
        if int_det(M) == 0:
            raise ValueError("dilation matrix is singular")

    @property
    def dim(self) -> int:
        return len(self.Xi)

    @property
    def det(self) -> int:
        return int_det(self.Xi)

    @property
    def coset_count(self) -> int:
        return abs(self.det)

    def transpose(self) -> Tuple[Tuple[int, ...], ...]:
        return tuple(zip(*self.Xi))

    def apply(self, alpha: Sequence[int]) -> Tuple[int, ...]:
        return tuple(sum(row[j] * alpha[j] for j in range(self.dim)) for row in self.Xi)


def is_expanding(Xi: Dilation, margin: float = 1e-9) -> bool:
    eigvals = np.linalg.eigvals(np.array(Xi.Xi, dtype=float))
    return bool(np.min(np.abs(eigvals)) > 1.0 + margin)


def _in_unit_cell(M: Sequence[Sequence[int]], alpha: Sequence[int]) -> bool:
    """Exact test for M^-1 alpha in [0,1)^s: componentwise 0 <= v_i/d < 1
    with v = adj(M) alpha and d = det M."""
    d = int_det(M)
    adj = int_adjugate(M)
    for row in adj:
        v = sum(row[j] * alpha[j] for j in range(len(alpha)))
        if d > 0:
            if not (0 <= v < d):
                return False
        else:
            if not (d < v <= 0):
                return False
    return True


def coset_reps(Xi: Dilation, transpose: bool = False) -> List[Tuple[int, ...]]:
    """E_Xi = Xi [0,1)^s cap Z^s (or the transpose variant), graded-lex sorted."""
    M = Xi.transpose() if transpose else Xi.Xi
    n = Xi.dim
    # Bounding box of the image parallelepiped: vertices M v, v in {0,1}^s.
    vertices = [tuple(sum(M[i][j] * v[j] for j in range(n)) for i in range(n))
                for v in product((0, 1), repeat=n)]
    lo = [min(v[i] for v in vertices) for i in range(n)]
    hi = [max(v[i] for v in vertices) for i in range(n)]
    reps = [alpha for alpha in product(*[range(l, h + 1) for l, h in zip(lo, hi)])
            if _in_unit_cell(M, alpha)]
    reps.sort(key=grlex_key)
    if len(reps) != Xi.coset_count:
        raise AssertionError(
            f"found {len(reps)} coset representatives, expected {Xi.coset_count}")
    return reps


def _coset_decompose(Xi: Dilation, alpha: Sequence[int],
                     reps: Sequence[Tuple[int, ...]]) -> Tuple[Tuple[int, ...], Tuple[int, ...]]:
    """Write alpha = xi + Xi beta with xi a representative; exact."""
    d = Xi.det
    adj = int_adjugate(Xi.Xi)
    for xi in reps:
        diff = [a - x for a, x in zip(alpha, xi)]
        v = [sum(row[j] * diff[j] for j in range(Xi.dim)) for row in adj]
        if all(val % d == 0 for val in v):
            beta = tuple(val // d for val in v)
            return tuple(xi), beta
    raise AssertionError(f"no coset representative matched {alpha}")


def subsymbols(a: Impulse, Xi: Dilation) -> Dict[Tuple[int, ...], LaurentPoly]:
    """a_xi*(z) = sum_alpha a(xi + Xi alpha) z^alpha for every representative xi."""
    if a.dim != Xi.dim:
        raise ValueError("mask / dilation dimension mismatch")
    reps = coset_reps(Xi)
    terms: Dict[Tuple[int, ...], Dict[Exponent, complex]] = {xi: {} for xi in reps}
    for tap, c in a.taps.items():
        xi, beta = _coset_decompose(Xi, tap, reps)
        terms[xi][beta] = terms[xi].get(beta, 0) + c
    return {xi: LaurentPoly(a.dim, t) for xi, t in terms.items()}


def z_pow_Xi(z: Sequence[complex], Xi: Dilation) -> Tuple[complex, ...]:
    """z^Xi = (z^{xi_1}, ..., z^{xi_s}) with the columns of Xi as exponents."""
    z = [complex(v) for v in z]
    if any(v == 0 for v in z):
        raise ValueError("point must lie in C_x^s")
    cols = Xi.transpose()  # row i of transpose = column i of Xi
    out = []
    for col in cols:
        val = 1 + 0j
        for v, e in zip(z, col):
            val *= v ** e
        out.append(val)
    return tuple(out)


def modulation_points(Xi: Dilation, zeta: Sequence[complex]) -> List[Tuple[complex, ...]]:
    """The points e^{-2 pi i Xi^-T xi'} zeta over xi' in E'_Xi; the first
    (xi' = 0) is zeta itself."""
    zeta = tuple(complex(v) for v in zeta)
    if any(v == 0 for v in zeta):
        raise ValueError("zeta must lie in C_x^s")
    d = int_det(Xi.transpose())
    adjT = int_adjugate(Xi.transpose())
    points = []
    for xi_p in coset_reps(Xi, transpose=True):
        # Xi^-T xi' as exact rationals adj(Xi^T) xi' / det
        w = [sum(row[j] * xi_p[j] for j in range(Xi.dim)) for row in adjT]
        mod = tuple(cmath.exp(-2j * cmath.pi * wi / d) for wi in w)
        points.append(tuple(m * zv for m, zv in zip(mod, zeta)))
    return points


def is_symmetric_zero(a: Impulse, Xi: Dilation, zeta: Sequence[complex],
                      order: int = 0, tol: float = 1e-9) -> Tuple[bool, float]:
    """True iff every derivative D^beta a*, |beta| <= order, vanishes at all
    modulation translates of zeta.  Returns the maximal normalized
    violation alongside."""
    if order < 0:
        raise ValueError("order must be nonnegative")
    g, _ = laurent_normalize(symbol(a))
    scale = max(1.0, a.l1())
    worst = 0.0
    for point in modulation_points(Xi, zeta):
        point_scale = scale * max(1.0, max(abs(v) for v in point) ** max(g.degree(), 0))
        for beta in monomials_upto(a.dim, order):
            val = abs(g.diff(beta).evaluate(point))
            worst = max(worst, val / point_scale)
    return worst <= tol, worst


def symmetric_zero_order(a: Impulse, Xi: Dilation, zeta: Sequence[complex],
                         max_order: int = 10, tol: float = 1e-9) -> int:
    """Largest k <= max_order such that zeta is a symmetric zero of order k;
    -1 if not even a symmetric zero of order 0."""
    best = -1
    for k in range(max_order + 1):
        ok, _ = is_symmetric_zero(a, Xi, zeta, order=k, tol=tol)
        if not ok:
            break
        best = k
    return best


def subdivide(a: Impulse, Xi: Dilation, c, w: Window) -> Dict[Exponent, complex]:
    """(S_a c)(alpha) = sum_beta a(alpha - Xi beta) c(beta) on the window."""
    if a.dim != Xi.dim:
        raise ValueError("mask / dilation dimension mismatch")
    d = Xi.det
    adj = int_adjugate(Xi.Xi)
    closed_form = isinstance(c, ExpPolySeq)
    out: Dict[Exponent, complex] = {}
    for alpha in w.points():
        total = 0j
        for tap, av in a.taps.items():
            diff = [x - t for x, t in zip(alpha, tap)]
            v = [sum(row[j] * diff[j] for j in range(Xi.dim)) for row in adj]
            if any(val % d != 0 for val in v):
                continue
            beta = tuple(val // d for val in v)
            if closed_form:
                total += av * c.value(beta)
            else:
                if beta not in c:
                    raise ValueError(f"sample coverage missing point {beta}")
                total += av * c[beta]
        out[alpha] = total
    return out


def canonical_zero_representative(Xi: Dilation, theta: Sequence[complex]) -> Tuple[complex, ...]:
    """The principal-branch zeta with zeta^Xi = theta^-1.

    All valid branches are modulation translates of each other, so symmetric
    zero tests do not depend on the choice.
    """
    theta = [complex(t) for t in theta]
    if any(t == 0 for t in theta):
        raise ValueError("theta must lie in C_x^s")
    d = int_det(Xi.transpose())
    adjT = int_adjugate(Xi.transpose())
    logs = [cmath.log(t) for t in theta]
    zeta = []
    for row in adjT:
        # -(Xi^-T log theta)_i with the exact rational inverse
        acc = -sum(row[j] * logs[j] for j in range(Xi.dim)) / d
        zeta.append(cmath.exp(acc))
    return tuple(zeta)


def subdivision_kernel_check(a: Impulse, Xi: Dilation,
                             candidates: Sequence[Tuple[Sequence[complex], int]],
                             tol: float = 1e-9,
                             oracle_tol: float = 1e-8) -> Dict:
    """Per candidate (theta, k): three equivalent tests of
    Pi_k e_theta <= ker S_a, reported side by side.

    (i) the canonical representative of theta is a symmetric zero of order k;
    (ii) all subsymbols have an order-k zero at theta^-1;
    (iii) the per-coset convolution oracle certifies every monomial of Pi_k
    times e_theta.  Disagreement above tolerance raises.
    """
    if not is_expanding(Xi):
        raise ValueError("dilation matrix is not expanding")
    subs = subsymbols(a, Xi)
    sub_impulses = [Impulse(a.dim, dict(p.terms)) for p in subs.values() if not p.is_zero]
    results = []
    overall = True
    for theta, k in candidates:
        theta = tuple(complex(t) for t in theta)
        point = tuple(1.0 / t for t in theta)
        zeta = canonical_zero_representative(Xi, theta)
        sym_ok, sym_violation = is_symmetric_zero(a, Xi, zeta, order=k, tol=tol)

        # a monomial factor is a unit away from the origin, so normalizing
        # each subsymbol leaves its vanishing order at theta^-1 unchanged
        normalized = [laurent_normalize(p)[0] for p in subs.values()
                      if not p.is_zero]
        scale = max(1.0, a.l1()) * max(1.0, max(abs(v) for v in point) **
                                       max((p.degree() for p in normalized),
                                           default=0))
        sub_worst = 0.0
        for p in normalized:
            for beta in monomials_upto(a.dim, k):
                sub_worst = max(sub_worst, abs(p.diff(beta).evaluate(point)) / scale)
        sub_ok = sub_worst <= tol

        oracle_worst = 0.0
        if sub_impulses:
            for exp in monomials_upto(a.dim, k):
                seq = ExpPolySeq.single(theta, LaurentPoly.monomial(a.dim, exp))
                res, _ = kernel_residual(sub_impulses, seq)
                oracle_worst = max(oracle_worst, res / max(1.0, a.l1()))
        oracle_ok = oracle_worst <= oracle_tol

        if len({sym_ok, sub_ok, oracle_ok}) != 1:
            raise ValueError(
                f"inconsistent kernel tests for theta={theta}, k={k}: "
                f"symmetric={sym_ok} ({sym_violation:.3e}), "
                f"subsymbols={sub_ok} ({sub_worst:.3e}), "
                f"oracle={oracle_ok} ({oracle_worst:.3e})")
        passed = sym_ok
        overall = overall and passed
        results.append({"theta": theta, "order": k, "pass": passed,
                        "symmetric_zero_violation": sym_violation,
                        "subsymbol_violation": sub_worst,
                        "oracle_residual": oracle_worst})
    return {"pass": overall, "candidates": results}
