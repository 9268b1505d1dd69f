import cmath
from itertools import product

import numpy as np
import pytest

from convkern import (Dilation, ExpPolySeq, Impulse, LaurentPoly, Window,
                      canonical_zero_representative, convolve, coset_reps,
                      is_expanding, is_symmetric_zero, modulation_points,
                      subdivide, subdivision_kernel_check, subsymbols,
                      symbol, symmetric_zero_order, z_pow_Xi)
from convkern.subdivision import int_adjugate, int_det

from conftest import const, variables


def dil(*rows):
    return Dilation(tuple(tuple(row) for row in rows))


QUINCUNX = dil((1, 1), (1, -1))
TWO_I = dil((2, 0), (0, 2))
DIAG_23 = dil((2, 0), (0, 3))
TWO = dil((2,))


def mask_1d(*coeffs):
    """Mask with taps coeffs[k] at k."""
    return Impulse(1, {(k,): c for k, c in enumerate(coeffs) if c != 0})


def random_mask(rng, dim, max_taps=25, span=3):
    taps = {}
    for _ in range(int(rng.integers(3, max_taps + 1))):
        idx = tuple(int(v) for v in rng.integers(-span, span + 1, size=dim))
        taps[idx] = taps.get(idx, 0) + complex(rng.normal(), rng.normal())
    return Impulse(dim, taps)


def mask_from_subsymbols(Xi, subs):
    """Assemble the mask whose coset decimations have the given symbols."""
    taps = {}
    for xi, p in subs.items():
        for alpha, c in p.terms.items():
            tap = tuple(x + v for x, v in zip(xi, Xi.apply(alpha)))
            taps[tap] = taps.get(tap, 0) + c
    return Impulse(Xi.dim, taps)


def random_point(rng, dim):
    return tuple(rng.uniform(0.5, 2.0) * cmath.exp(2j * cmath.pi * rng.uniform())
                 for _ in range(dim))


class TestExpanding:
    def test_two_i(self):
        assert is_expanding(TWO_I)

    def test_quincunx(self):
        # eigenvalues are +/- sqrt(2)
        assert is_expanding(QUINCUNX)

    def test_unit_eigenvalue(self):
        assert not is_expanding(dil((1, 0), (0, 2)))

    def test_singular_rejected(self):
        with pytest.raises(ValueError):
            dil((1, 1), (1, 1))


class TestCosetReps:
    def test_two_i(self):
        reps = coset_reps(TWO_I)
        assert set(reps) == {(0, 0), (1, 0), (0, 1), (1, 1)}
        from convkern.mpoly import grlex_key
        assert reps == sorted(reps, key=grlex_key)

    def test_quincunx(self):
        assert coset_reps(QUINCUNX) == [(0, 0), (1, 0)]

    def test_univariate(self):
        assert coset_reps(TWO) == [(0,), (1,)]

    def test_diag_2_3(self):
        reps = coset_reps(DIAG_23)
        assert len(reps) == 6
        assert set(reps) == {(i, j) for i in range(2) for j in range(3)}

    def test_distinct_mod_lattice(self):
        for Xi in (TWO_I, QUINCUNX, DIAG_23, dil((2, 1), (0, 2))):
            reps = coset_reps(Xi)
            d = Xi.det
            adj = int_adjugate(Xi.Xi)
            for i, a in enumerate(reps):
                for b in reps[i + 1:]:
                    diff = [x - y for x, y in zip(a, b)]
                    v = [sum(row[j] * diff[j] for j in range(Xi.dim))
                         for row in adj]
                    assert any(val % d != 0 for val in v)

    def test_transpose_variant(self):
        reps = coset_reps(QUINCUNX, transpose=True)
        assert len(reps) == 2 and (0, 0) in reps


class TestSubsymbols:
    def test_even_odd_split(self):
        z = LaurentPoly.variable(1, 0)
        a = mask_1d(1, 0, -1)  # symbol 1 - z^2
        subs = subsymbols(a, TWO)
        assert subs[(0,)] == const(1, 1) - z
        assert subs[(1,)].is_zero

    def test_hat_mask(self):
        z = LaurentPoly.variable(1, 0)
        a = mask_1d(0.5, 1.0, 0.5)  # symbol (1+z)^2 / 2
        subs = subsymbols(a, TWO)
        assert (subs[(0,)] - (const(1, 0.5) + 0.5 * z)).norm() < 1e-15
        assert subs[(1,)] == const(1, 1)

    def test_delta_quincunx(self):
        a = Impulse(2, {(0, 0): 1.0})
        subs = subsymbols(a, QUINCUNX)
        assert subs[(0, 0)] == const(2, 1)
        assert subs[(1, 0)].is_zero

    def test_reconstruction_identity(self, rng):
        # a*(z) = sum_xi z^xi a_xi*(z^Xi)
        for Xi in (TWO, TWO_I, QUINCUNX, DIAG_23):
            a = random_mask(rng, Xi.dim)
            subs = subsymbols(a, Xi)
            sym = symbol(a)
            for _ in range(50):
                z = random_point(rng, Xi.dim)
                zXi = z_pow_Xi(z, Xi)
                lhs = sym.evaluate(z)
                rhs = sum(np.prod([zv ** e for zv, e in zip(z, xi)]) *
                          p.evaluate(zXi) for xi, p in subs.items())
                assert abs(lhs - rhs) <= 1e-10 * (1 + abs(lhs))

    def test_modulation_identity(self, rng):
        # z^xi a_xi*(z^Xi) = (1/m) sum_xi' e^{+2 pi i xi . Xi^-T xi'}
        #                              a*(e^{-2 pi i Xi^-T xi'} z)
        # (the conjugate phase is required once the modulation group has
        # elements of order > 2, e.g. diag(2,3))
        for Xi in (TWO, TWO_I, QUINCUNX, DIAG_23):
            a = random_mask(rng, Xi.dim)
            subs = subsymbols(a, Xi)
            sym = symbol(a)
            m = Xi.coset_count
            d = int_det(Xi.transpose())
            adjT = int_adjugate(Xi.transpose())
            primes = coset_reps(Xi, transpose=True)
            for _ in range(20):
                z = random_point(rng, Xi.dim)
                zXi = z_pow_Xi(z, Xi)
                for xi, p in subs.items():
                    zxi = np.prod([zv ** e for zv, e in zip(z, xi)])
                    lhs = zxi * p.evaluate(zXi)
                    rhs = 0j
                    for xi_p in primes:
                        w = [sum(row[j] * xi_p[j] for j in range(Xi.dim))
                             for row in adjT]
                        phase = cmath.exp(2j * cmath.pi *
                                          sum(x * wi for x, wi in zip(xi, w)) / d)
                        modz = tuple(cmath.exp(-2j * cmath.pi * wi / d) * zv
                                     for wi, zv in zip(w, z))
                        rhs += phase * sym.evaluate(modz)
                    rhs /= m
                    assert abs(lhs - rhs) <= 1e-10 * (1 + abs(lhs))


class TestZPowXi:
    def test_two_i(self):
        assert z_pow_Xi((2.0, 3.0), TWO_I) == (4.0, 9.0)

    def test_quincunx_columns(self):
        z1, z2 = 2.0 + 0j, 0.5 + 0j
        assert z_pow_Xi((z1, z2), QUINCUNX) == (z1 * z2, z1 / z2)

    def test_ones(self):
        assert z_pow_Xi((1.0, 1.0), QUINCUNX) == (1.0, 1.0)

    def test_zero_component_rejected(self):
        with pytest.raises(ValueError):
            z_pow_Xi((0.0, 1.0), TWO_I)

    def test_unit_root_identity(self):
        # z^Xi = 1 at every modulation vector e^{-2 pi i Xi^-T xi'}
        for Xi in (TWO, TWO_I, QUINCUNX, DIAG_23, dil((2, 1), (0, 2))):
            ones = tuple(1.0 for _ in range(Xi.dim))
            for point in modulation_points(Xi, ones):
                res = z_pow_Xi(point, Xi)
                assert max(abs(v - 1) for v in res) <= 1e-12


class TestModulationPoints:
    def test_univariate(self):
        pts = modulation_points(TWO, (1.0,))
        assert pts[0] == (1.0,)
        assert abs(pts[1][0] + 1.0) < 1e-15

    def test_two_i_sign_patterns(self):
        pts = modulation_points(TWO_I, (1.0, 1.0))
        got = {tuple(round(v.real) for v in p) for p in pts}
        assert got == set(product((1, -1), repeat=2))

    def test_quincunx(self):
        pts = modulation_points(QUINCUNX, (1.0, 1.0))
        assert len(pts) == 2
        assert max(abs(v - 1) for v in pts[0]) < 1e-15
        assert max(abs(v + 1) for v in pts[1]) < 1e-12

    def test_scales_by_zeta(self, rng):
        zeta = random_point(rng, 2)
        base = modulation_points(QUINCUNX, (1.0, 1.0))
        shifted = modulation_points(QUINCUNX, zeta)
        for b, s in zip(base, shifted):
            for bv, sv, zv in zip(b, s, zeta):
                assert abs(sv - bv * zv) <= 1e-12


class TestIsSymmetricZero:
    def test_difference_squared_symbol(self):
        a = mask_1d(1, 0, -1)  # 1 - z^2 vanishes at +/-1
        ok, _ = is_symmetric_zero(a, TWO, (1.0,), 0)
        assert ok

    def test_hat_mask_fails(self):
        a = mask_1d(0.5, 1.0, 0.5)  # (1+z)^2/2, a*(1) = 2
        ok, violation = is_symmetric_zero(a, TWO, (-1.0,), 0)
        assert not ok and violation > 1e-3

    def test_order_one(self):
        z = LaurentPoly.variable(1, 0)
        f = (const(1, 1) - z * z)
        a = Impulse(1, dict((f * f).terms))  # (1 - z^2)^2
        ok, _ = is_symmetric_zero(a, TWO, (1.0,), 1)
        assert ok
        ok2, _ = is_symmetric_zero(a, TWO, (1.0,), 2)
        assert not ok2

    def test_order_detection(self):
        z = LaurentPoly.variable(1, 0)
        f = const(1, 1) - z * z
        a = Impulse(1, dict((f * f * f).terms))
        assert symmetric_zero_order(a, TWO, (1.0,)) == 2
        b = mask_1d(0.5, 1.0, 0.5)
        assert symmetric_zero_order(b, TWO, (1.0,)) == -1

    def test_spurious_origin_factor_ignored(self):
        # z^3 (1 - z^2) carries the same zero data as 1 - z^2
        a = Impulse(1, {(3,): 1.0, (5,): -1.0})
        ok, _ = is_symmetric_zero(a, TWO, (1.0,), 0)
        assert ok


class TestSubdivide:
    def test_hat_reproduces_constants(self):
        a = mask_1d(0.5, 1.0, 0.5)
        seq = ExpPolySeq.single((1.0,), const(1, 1))
        vals = subdivide(a, TWO, seq, Window((-4,), (4,)))
        assert all(abs(v - 1) < 1e-14 for v in vals.values())

    def test_difference_kills_constants(self):
        a = mask_1d(1, 0, -1)
        seq = ExpPolySeq.single((1.0,), const(1, 1))
        vals = subdivide(a, TWO, seq, Window((-4,), (4,)))
        assert all(abs(v) < 1e-14 for v in vals.values())

    def test_delta_upsamples(self):
        a = Impulse(2, {(0, 0): 1.0})
        samples = {(i, j): complex(10 * i + j)
                   for i in range(-2, 3) for j in range(-2, 3)}
        vals = subdivide(a, TWO_I, samples, Window((-4, -4), (4, 4)))
        for alpha, v in vals.items():
            if all(x % 2 == 0 for x in alpha):
                assert v == samples[(alpha[0] // 2, alpha[1] // 2)]
            else:
                assert v == 0

    def test_coset_reduction(self, rng):
        # (S_a c)(xi + Xi alpha) = (a_xi * c)(alpha)
        for Xi in (TWO, QUINCUNX, DIAG_23):
            a = random_mask(rng, Xi.dim, max_taps=12, span=2)
            subs = subsymbols(a, Xi)
            theta = random_point(rng, Xi.dim)
            p = const(Xi.dim, 1.0)
            for j in range(Xi.dim):
                p = p + (j + 1.0) * LaurentPoly.variable(Xi.dim, j)
            seq = ExpPolySeq.single(theta, p)
            w = Window((-3,) * Xi.dim, (3,) * Xi.dim)
            full = subdivide(a, Xi, seq, w)
            inner = Window((-1,) * Xi.dim, (1,) * Xi.dim)
            for xi, sub in subs.items():
                if sub.is_zero:
                    continue
                a_xi = Impulse(Xi.dim, dict(sub.terms))
                decimated = convolve(a_xi, seq, inner)
                for alpha, v in decimated.items():
                    point = tuple(x + y for x, y in zip(xi, Xi.apply(alpha)))
                    if point in full:
                        assert abs(full[point] - v) <= 1e-10 * (1 + abs(v))

    def test_coverage_failure(self):
        a = mask_1d(1.0, 1.0)
        with pytest.raises(ValueError):
            subdivide(a, TWO, {(0,): 1.0}, Window((0,), (4,)))


class TestCanonicalRepresentative:
    def test_univariate(self):
        (zeta,) = canonical_zero_representative(TWO, (0.25,))
        assert abs(zeta - 2.0) < 1e-12  # zeta^2 = 4 = theta^-1

    def test_defining_equation(self, rng):
        for Xi in (TWO, TWO_I, QUINCUNX, DIAG_23):
            theta = random_point(rng, Xi.dim)
            zeta = canonical_zero_representative(Xi, theta)
            back = z_pow_Xi(zeta, Xi)
            for b, t in zip(back, theta):
                assert abs(b - 1.0 / t) <= 1e-10

    def test_zero_theta_rejected(self):
        with pytest.raises(ValueError):
            canonical_zero_representative(TWO, (0.0,))


class TestKernelCheck:
    def test_difference_constants(self):
        a = mask_1d(1, 0, -1)  # 1 - z^2
        report = subdivision_kernel_check(a, TWO, [((1.0,), 0)])
        assert report["pass"]

    def test_squared_difference_order_one(self):
        z = LaurentPoly.variable(1, 0)
        f = const(1, 1) - z * z
        a = Impulse(1, dict((f * f).terms))
        report = subdivision_kernel_check(a, TWO, [((1.0,), 1)])
        assert report["pass"]

    def test_hat_rejected(self):
        a = mask_1d(0.5, 1.0, 0.5)
        report = subdivision_kernel_check(a, TWO, [((1.0,), 0)])
        assert not report["pass"]
        assert not report["candidates"][0]["pass"]

    def test_scaled_exponential(self):
        # 1 - (z/2)^2 vanishes at z = +/-2, i.e. theta = 1/4
        a = Impulse(1, {(0,): 1.0, (2,): -0.25})
        report = subdivision_kernel_check(a, TWO, [((0.25,), 0), ((1.0,), 0)])
        cands = {c["theta"]: c["pass"] for c in report["candidates"]}
        assert cands[(0.25,)] and not cands[(1.0,)]

    def test_quincunx_tensor_difference(self):
        z1, z2 = variables(2)
        f = (const(2, 1) - z1 * z1) * (const(2, 1) - z2 * z2)
        a = Impulse(2, dict(f.terms))
        report = subdivision_kernel_check(a, QUINCUNX, [((1.0, 1.0), 0)])
        assert report["pass"]

    def test_diag_2_3(self):
        z1, z2 = variables(2)
        f = (const(2, 1) - z1 * z1) * (const(2, 1) + z2 + z2 * z2) * \
            (const(2, 1) - z2 * z2 * z2)
        # first factor kills the z1 modulations of Xi=diag(2,3); the z2
        # factors vanish at all cube roots of unity
        a = Impulse(2, dict(f.terms))
        report = subdivision_kernel_check(a, DIAG_23, [((1.0, 1.0), 0)])
        assert report["pass"]

    def test_nonexpanding_rejected(self):
        a = Impulse(2, {(0, 0): 1.0})
        with pytest.raises(ValueError):
            subdivision_kernel_check(a, dil((1, 0), (0, 2)), [((1.0, 1.0), 0)])


class TestCommonSymmetricZeroAgreement:
    """Symmetric zeros of the symbol coincide with common zeros of the
    subsymbols, checked both ways on synthesized masks."""

    def _corpus(self, rng):
        cases = []
        for i in range(50):
            Xi = (TWO, TWO_I, QUINCUNX)[i % 3]
            dim = Xi.dim
            zeta = random_point(rng, dim)
            target = z_pow_Xi(zeta, Xi)
            subs = {}
            vanish_all = i % 2 == 0
            reps = coset_reps(Xi)
            for j, xi in enumerate(reps):
                p = const(dim, 0)
                for exp in product(range(3), repeat=dim):
                    if sum(exp) > 2:
                        continue
                    p = p + complex(rng.normal(), rng.normal()) * \
                        LaurentPoly.monomial(dim, exp)
                make_zero = vanish_all or j != 0
                if make_zero:
                    p = p - const(dim, p.evaluate(target))
                else:
                    # narrowly miss: leave a small but resolvable value
                    p = p - const(dim, p.evaluate(target)) + const(dim, 1e-3)
                subs[xi] = p
            cases.append((Xi, zeta, subs, vanish_all))
        return cases

    def test_agreement(self, rng):
        disagreements = 0
        for Xi, zeta, subs, expect in self._corpus(rng):
            a = mask_from_subsymbols(Xi, subs)
            sym_ok, _ = is_symmetric_zero(a, Xi, zeta, 0)
            target = z_pow_Xi(zeta, Xi)
            scale = max(1.0, a.l1())
            sub_ok = all(abs(p.evaluate(target)) <= 1e-9 * scale
                         for p in subs.values())
            if sym_ok != sub_ok or sym_ok != expect:
                disagreements += 1
        assert disagreements == 0


class TestOrderEquivalence:
    """Order-k symmetric zeros versus the per-coset convolution oracle for
    polynomial-times-exponential spaces, k <= 2, dimensions 1 and 2."""

    def _check(self, a, Xi, theta, k, expect):
        report = subdivision_kernel_check(a, Xi, [(theta, k)])
        assert report["candidates"][0]["pass"] == expect

    def test_univariate_orders(self):
        z = LaurentPoly.variable(1, 0)
        f = const(1, 1) - z * z
        for k in range(3):
            power = const(1, 1)
            for _ in range(k + 1):
                power = power * f
            a = Impulse(1, dict(power.terms))
            self._check(a, TWO, (1.0,), k, True)
            self._check(a, TWO, (1.0,), k + 1, False)

    def test_bivariate_orders(self):
        # (1-z1^2)^(j+1) (1-z2^2)^(j+1): each modulation point is a zero of
        # total order 2(j+1), i.e. an order 2j+1 symmetric zero exactly
        z1, z2 = variables(2)
        f = (const(2, 1) - z1 * z1) * (const(2, 1) - z2 * z2)
        for j in range(2):
            power = const(2, 1)
            for _ in range(j + 1):
                power = power * f
            a = Impulse(2, dict(power.terms))
            self._check(a, TWO_I, (1.0, 1.0), 2 * j + 1, True)
            self._check(a, TWO_I, (1.0, 1.0), 2 * j + 2, False)

    def test_bivariate_anisotropic_order(self):
        # (1-z1^2)^2 (1-z2^2): mixed order; symmetric zero of order exactly 2
        z1, z2 = variables(2)
        f = (const(2, 1) - z1 * z1)
        g = (const(2, 1) - z2 * z2)
        a = Impulse(2, dict((f * f * g).terms))
        self._check(a, TWO_I, (1.0, 1.0), 2, True)
        self._check(a, TWO_I, (1.0, 1.0), 3, False)

    def test_oracle_matches_direct_application(self):
        # order-1 zero means S_a annihilates linears times e_theta;
        # verify by applying the operator
        z = LaurentPoly.variable(1, 0)
        f = const(1, 1) - z * z
        a = Impulse(1, dict((f * f).terms))
        x = LaurentPoly.variable(1, 0)
        for p in (const(1, 1), x):
            seq = ExpPolySeq.single((1.0,), p)
            vals = subdivide(a, TWO, seq, Window((-6,), (6,)))
            assert all(abs(v) <= 1e-12 for v in vals.values())
        probe = ExpPolySeq.single((1.0,), x * x)
        vals = subdivide(a, TWO, probe, Window((-6,), (6,)))
        assert max(abs(v) for v in vals.values()) > 1e-3
