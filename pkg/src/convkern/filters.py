"""Finitely supported impulses, discrete convolution, exponential-polynomial
sequences, and the certified-window annihilation oracle.

The oracle rests on the identity h * (p e_theta) = e_theta * r with r a
polynomial of degree <= deg p: a residual that vanishes on the tensor grid
{0..deg p}^s therefore vanishes everywhere, which turns kernel membership
into a finite check.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Dict, Iterable, List, Mapping, Sequence, Tuple

from .mpoly import Exponent, LaurentPoly, grlex_key


def _theta_pow(theta: Sequence[complex], alpha: Sequence[int]) -> complex:
    out = 1 + 0j
    for t, a in zip(theta, alpha):
        if a == 0:
            continue
        if t == 0:
            raise ZeroDivisionError("exponential base with zero component")
        out *= t ** a
    return out


@dataclass(frozen=True)
class Impulse:
    """Finitely supported sequence Z^s -> C (a FIR filter / mask)."""

    dim: int
    taps: Mapping[Exponent, complex]

    def __post_init__(self):
        clean: Dict[Exponent, complex] = {}
        for idx, c in dict(self.taps).items():
            idx = tuple(int(i) for i in idx)
            if len(idx) != self.dim:
                raise ValueError(f"tap index {idx} has wrong length")
            c = complex(c)
            if c != 0:
                clean[idx] = c
        object.__setattr__(self, "taps", clean)

    @classmethod
    def delta(cls, dim: int, at: Sequence[int] | None = None) -> "Impulse":
        at = tuple(at) if at is not None else (0,) * dim
        return cls(dim, {at: 1.0})

    @property
    def is_zero(self) -> bool:
        return not self.taps

    def l1(self) -> float:
        return sum(abs(c) for c in self.taps.values())

    def sorted_taps(self) -> List[Tuple[Exponent, complex]]:
        return [(idx, self.taps[idx]) for idx in sorted(self.taps, key=grlex_key)]

    def __eq__(self, other):
        if not isinstance(other, Impulse):
            return NotImplemented
        return self.dim == other.dim and dict(self.taps) == dict(other.taps)

    def __hash__(self):
        return hash((self.dim, frozenset(self.taps.items())))


def symbol(h: Impulse) -> LaurentPoly:
    """h*(z) = sum_alpha h(alpha) z^alpha."""
    return LaurentPoly(h.dim, dict(h.taps))


def impulse_from_symbol(f: LaurentPoly) -> Impulse:
    return Impulse(f.dim, dict(f.terms))


def convolve_impulses(g: Impulse, h: Impulse) -> Impulse:
    """(g * h) as an impulse; symbols multiply."""
    if g.dim != h.dim:
        raise ValueError("dimension mismatch")
    return impulse_from_symbol(symbol(g) * symbol(h))


@dataclass(frozen=True)
class ExpPolySeq:
    """Formal sum over terms (theta, p) of the sequence alpha -> p(alpha) theta^alpha."""

    terms: Tuple[Tuple[Tuple[complex, ...], LaurentPoly], ...]

    def __post_init__(self):
        norm = []
        for theta, p in self.terms:
            theta = tuple(complex(t) for t in theta)
            if any(t == 0 for t in theta):
                raise ValueError("theta must lie in C_x^s")
            p._require_poly()
            if len(theta) != p.dim:
                raise ValueError("theta / polynomial dimension mismatch")
            norm.append((theta, p))
        thetas = [t for t, _ in norm]
        if len(set(thetas)) != len(thetas):
            raise ValueError("duplicate theta in ExpPolySeq")
        object.__setattr__(self, "terms", tuple(norm))

    @classmethod
    def single(cls, theta: Sequence[complex], p: LaurentPoly) -> "ExpPolySeq":
        return cls(((tuple(theta), p),))

    @property
    def dim(self) -> int:
        return self.terms[0][1].dim

    def value(self, alpha: Sequence[int]) -> complex:
        alpha = tuple(int(a) for a in alpha)
        return sum(p.evaluate(alpha) * _theta_pow(theta, alpha)
                   for theta, p in self.terms)

    def max_degree(self) -> int:
        return max((p.degree() for _, p in self.terms), default=0)


@dataclass(frozen=True)
class Window:
    """Integer box [lower, upper] in Z^s, both corners inclusive."""

    lower: Exponent
    upper: Exponent

    def __post_init__(self):
        lower = tuple(int(v) for v in self.lower)
        upper = tuple(int(v) for v in self.upper)
        if len(lower) != len(upper):
            raise ValueError("corner dimension mismatch")
        if any(l > u for l, u in zip(lower, upper)):
            raise ValueError("lower corner exceeds upper corner")
        object.__setattr__(self, "lower", lower)
        object.__setattr__(self, "upper", upper)

    @property
    def dim(self) -> int:
        return len(self.lower)

    def points(self) -> Iterable[Exponent]:
        ranges = [range(l, u + 1) for l, u in zip(self.lower, self.upper)]
        return product(*ranges)

    def pad(self, amount: int) -> "Window":
        return Window(tuple(l - amount for l in self.lower),
                      tuple(u + amount for u in self.upper))


SequenceSamples = Mapping[Exponent, complex]


def convolve(h: Impulse, c: "ExpPolySeq | SequenceSamples", w: Window) -> Dict[Exponent, complex]:
    """(h * c)(alpha) = sum_beta h(beta) c(alpha - beta) on the window.

    A sampled input must cover the window dilated by the support of h.
    """
    out: Dict[Exponent, complex] = {}
    closed_form = isinstance(c, ExpPolySeq)
    for alpha in w.points():
        total = 0j
        for beta, hb in h.taps.items():
            arg = tuple(a - b for a, b in zip(alpha, beta))
            if closed_form:
                total += hb * c.value(arg)
            else:
                if arg not in c:
                    raise ValueError(f"sample coverage missing point {arg}")
                total += hb * c[arg]
        out[alpha] = total
    return out


def certified_window(H: Sequence[Impulse], seq: ExpPolySeq, pad: int = 0) -> Window:
    """{0..D}^s with D the maximal polynomial degree of the sequence.

    Per-theta residuals of h * seq are polynomials of degree <= D times
    e_theta, so vanishing on this tensor grid certifies global vanishing.
    """
    if not seq.terms:
        raise ValueError("empty sequence")
    D = max(seq.max_degree(), 0) + max(pad, 0)
    dim = seq.dim
    return Window((0,) * dim, (D,) * dim)


def kernel_residual(H: Sequence[Impulse], seq: ExpPolySeq,
                    pad: int = 0) -> Tuple[float, Dict[Tuple[complex, ...], float]]:
    """Normalized annihilation residual of the sequence under every h in H.

    Each theta-term is checked separately (convolution maps p e_theta into
    e_theta-multiples, so a summed check could hide failures by
    cancellation).  Pointwise values are normalized by 1 + |theta^alpha|.
    """
    per_theta: Dict[Tuple[complex, ...], float] = {}
    for theta, p in seq.terms:
        term = ExpPolySeq.single(theta, p)
        w = certified_window(H, term, pad=pad)
        worst = 0.0
        for h in H:
            vals = convolve(h, term, w)
            for alpha, v in vals.items():
                scale = 1.0 + abs(_theta_pow(theta, alpha))
                worst = max(worst, abs(v) / scale)
        per_theta[theta] = worst
    overall = max(per_theta.values(), default=0.0)
    return overall, per_theta


def eigen_conditions(h: Impulse, theta: Sequence[complex], Q,
                     lam: complex, alpha_h: Sequence[int],
                     tol: float = 1e-9) -> Dict:
    """Check q(D) h*(theta^-1) = lam (q(D) (.)^alpha_h)(theta^-1) for every
    orthonormal basis element q of Q; with alpha_h = 0 this is
    h*(theta^-1) = lam plus vanishing higher dual conditions."""
    from .apolar import ortho_homog_basis
    from .mpoly import apply_poly_diff

    theta = tuple(complex(t) for t in theta)
    if any(t == 0 for t in theta):
        raise ValueError("theta must lie in C_x^s")
    point = [1.0 / t for t in theta]
    hs = symbol(h)
    shift_mono = LaurentPoly.monomial(h.dim, tuple(int(a) for a in alpha_h))
    scale = max(1.0, h.l1())
    records = []
    ok = True
    for q in ortho_homog_basis(Q):
        lhs = apply_poly_diff(q, hs).evaluate(point)
        rhs = lam * apply_poly_diff(q, shift_mono).evaluate(point)
        res = abs(lhs - rhs)
        passed = res <= tol * scale
        ok = ok and passed
        records.append({"q_degree": q.degree(), "lhs": lhs, "rhs": rhs,
                        "residual": res, "pass": passed})
    return {"pass": ok, "conditions": records}


def eigen_residual(h: Impulse, lam: complex, alpha_h: Sequence[int],
                   seq: ExpPolySeq, pad: int = 0) -> float:
    """Max over the certified window of |h*seq - lam seq(. + alpha_h)|,
    normalized pointwise like kernel_residual."""
    alpha_h = tuple(int(a) for a in alpha_h)
    w = certified_window([h], seq, pad=pad)
    worst = 0.0
    vals = convolve(h, seq, w)
    for alpha, v in vals.items():
        shifted = seq.value(tuple(a + b for a, b in zip(alpha, alpha_h)))
        scale = 1.0 + sum(abs(_theta_pow(theta, alpha)) for theta, _ in seq.terms)
        worst = max(worst, abs(v - lam * shifted) / scale)
    return worst
