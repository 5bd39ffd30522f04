import cmath
import math

import pytest

from lauricella import (
    BranchSide,
    DomainError,
    HyperSpec,
    appell_f1,
    complete_k,
    eulerian_a,
    eulerian_b,
    fd_order_reduce,
    hyp2f1,
    hyp2f1_series,
    lauricella_fd,
    pfaff_f1,
    unit_partition_roots,
)

import helpers_properties as props

S2 = math.sqrt(2.0)
S3 = math.sqrt(3.0)
K12 = 1.8540746773013719
EQ2 = 0.9270373386506859 * (1 - 1j)


class TestGaussSeries:
    def test_at_zero(self):
        assert hyp2f1_series(0.7, 1.3, 2.1, 0.0) == 1.0

    def test_binomial_collapse(self):
        assert hyp2f1_series(2.0, 1.0, 1.0, 0.5) == pytest.approx(4.0, rel=1e-14)

    def test_arctangent_point(self):
        # oracle: 2F1(1, 1/2; 3/2 | -z^2) = arctan(z)/z at z = sqrt(1/2)
        z = math.sqrt(0.5)
        want = math.atan(z) / z
        assert hyp2f1_series(1.0, 0.5, 1.5, -0.5) == pytest.approx(want, rel=1e-14)
        assert want == pytest.approx(0.8704197513671031, rel=1e-15)

    def test_radius_guard(self):
        with pytest.raises(DomainError):
            hyp2f1_series(1.0, 1.0, 2.0, 0.95)


class TestGaussContinuation:
    def test_kummer_point(self):
        assert hyp2f1(1.0, 0.5, 1.5, -1.0) == pytest.approx(math.pi / 4, rel=1e-12)

    def test_argument_two_below(self):
        got = hyp2f1(0.5, 0.75, 1.5, 2.0, BranchSide.BELOW)
        assert got == pytest.approx(EQ2, rel=1e-12)
        assert got.imag < 0

    def test_argument_two_above_conjugates(self):
        below = hyp2f1(0.5, 0.75, 1.5, 2.0, BranchSide.BELOW)
        above = hyp2f1(0.5, 0.75, 1.5, 2.0, BranchSide.ABOVE)
        assert above == pytest.approx(below.conjugate(), rel=1e-12)

    def test_quadratic_pattern_instance(self):
        # parameters (2b-a, b; 2b) at (a, b) = (1, 3/4): the closed form is
        # (-i)**(1/2) sqrt(pi) Gamma(5/4)/(Gamma(1) Gamma(3/4))
        from lauricella import gamma, principal_pow

        got = hyp2f1(0.5, 0.75, 1.5, 2.0)
        want = (
            principal_pow(-1j, 0.5)
            * math.sqrt(math.pi)
            * gamma(1.25)
            / (gamma(1.0) * gamma(0.75))
        )
        assert got == pytest.approx(want, rel=1e-12)

    def test_argument_one_rejected(self):
        with pytest.raises(DomainError):
            hyp2f1(0.5, 0.5, 1.5, 1.0)

    def test_parameter_order_fallback(self):
        # (1/2, 1; 2 | 2): only the swapped order gives an integrable split
        got = hyp2f1(0.5, 1.0, 2.0, 2.0)
        assert got == pytest.approx(1.0 - 1.0j, rel=1e-12)

    def test_series_integral_agreement_suite(self):
        assert props.run_series_integral_agreement() >= 50

    def test_complex_parameters_agree_across_paths(self):
        import random

        from lauricella.core import DEFAULT_SIDE
        from lauricella.hyperfun import _euler_fd

        rng = random.Random(11)
        for _ in range(20):
            a = complex(rng.uniform(0.3, 1.5), rng.uniform(-0.5, 0.5))
            c = a + complex(rng.uniform(0.4, 1.5), rng.uniform(-0.3, 0.3))
            b = complex(rng.uniform(0.2, 1.2), rng.uniform(-0.6, 0.6))
            x = complex(rng.uniform(-0.5, 0.5), rng.uniform(-0.5, 0.5))
            series = hyp2f1_series(a, b, c, x)
            euler = _euler_fd(a, [b], c, [x], DEFAULT_SIDE, 1e-12)
            assert abs(series - euler) <= 1e-11 * (1.0 + abs(series))

    def test_complex_b_on_cut(self):
        # frozen against a high-precision side-limit evaluation
        got = hyp2f1(0.5, complex(0.6, 0.3), 1.5, 2.0, BranchSide.BELOW)
        want = 1.5794661149447633 - 1.026065056007306j
        assert got == pytest.approx(want, rel=1e-12)

    def test_off_disk_against_mpmath(self):
        import random

        mpmath = pytest.importorskip("mpmath")
        mpmath.mp.dps = 25
        rng = random.Random(21)
        for _ in range(30):
            a = rng.uniform(0.3, 1.8)
            c = a + rng.uniform(0.4, 1.6)
            b = rng.uniform(0.2, 1.4)
            r = rng.uniform(1.1, 5.0)
            theta = rng.choice([1, -1]) * rng.uniform(0.15, math.pi - 0.15)
            x = r * cmath.exp(1j * theta)
            got = hyp2f1(a, b, c, x)
            want = complex(mpmath.hyp2f1(a, b, c, mpmath.mpc(x)))
            assert abs(got - want) <= 1e-11 * (1.0 + abs(want)), (a, b, c, x)

    def test_cut_side_limits_against_mpmath(self):
        mpmath = pytest.importorskip("mpmath")
        mpmath.mp.dps = 30
        eps = mpmath.mpf("1e-20")
        for a, b, c, x in ((0.5, 0.75, 1.5, 2.0), (1.0, 0.5, 2.0, 3.5), (0.7, 0.4, 1.9, 1.5)):
            below = complex(mpmath.hyp2f1(a, b, c, mpmath.mpc(x, -eps)))
            above = complex(mpmath.hyp2f1(a, b, c, mpmath.mpc(x, eps)))
            assert hyp2f1(a, b, c, x, BranchSide.BELOW) == pytest.approx(below, rel=1e-11)
            assert hyp2f1(a, b, c, x, BranchSide.ABOVE) == pytest.approx(above, rel=1e-11)


class TestAppell:
    def test_at_origin(self):
        assert appell_f1(0.7, 0.4, 0.6, 1.9, 0.0, 0.0) == pytest.approx(1.0, rel=1e-14)

    def test_zero_a(self):
        assert appell_f1(0.0, 1.0, 1.0, 2.0, 0.3, 0.4) == pytest.approx(1.0, rel=1e-14)

    def test_negative_pair_value(self):
        got = appell_f1(2 / 3, 0.5, 0.5, 5 / 3, -2.0, -8.0)
        assert got == pytest.approx(0.46739403510848476, rel=1e-11)

    def test_quartic_k_value(self):
        got = appell_f1(0.25, 0.5, 0.5, 1.25, 1 / 3, 0.25)
        assert got == pytest.approx(K12 / S3, rel=1e-11)

    def test_symmetry_suite(self):
        assert props.run_symmetry() >= 50

    def test_against_mpmath_appellf1(self):
        import random

        mpmath = pytest.importorskip("mpmath")
        mpmath.mp.dps = 25
        rng = random.Random(22)
        for _ in range(20):
            a = rng.uniform(0.3, 1.6)
            c = a + rng.uniform(0.4, 1.4)
            b1, b2 = rng.uniform(0.1, 0.9), rng.uniform(0.1, 0.9)
            x1 = complex(rng.uniform(-0.7, 0.7), rng.uniform(-0.5, 0.5))
            x2 = complex(rng.uniform(-0.7, 0.7), rng.uniform(-0.5, 0.5))
            got = appell_f1(a, b1, b2, c, x1, x2)
            want = complex(mpmath.appellf1(a, b1, b2, c, mpmath.mpc(x1), mpmath.mpc(x2)))
            assert abs(got - want) <= 1e-11 * (1.0 + abs(want)), (a, b1, b2, c, x1, x2)

    def test_degeneration_suite(self):
        assert props.run_degeneration() >= 50

    def test_conjugation_suite(self):
        assert props.run_conjugation() >= 50


class TestLauricella:
    def test_all_zero_arguments(self):
        spec = HyperSpec(1.0, (0.5, 0.5, 0.5), 2.0, (0.0, 0.0, 0.0))
        assert lauricella_fd(spec) == pytest.approx(1.0, rel=1e-12)

    def test_order_one_routes_to_gauss(self):
        spec = HyperSpec(1.0, (0.5,), 1.5, (-1.0,))
        assert lauricella_fd(spec) == pytest.approx(math.pi / 4, rel=1e-12)

    def test_on_cut_order_three(self):
        spec = HyperSpec(1.0, (0.5,) * 3, 2.0, (1 - 1j, 2.0, 1 + 1j))
        got = lauricella_fd(spec, BranchSide.BELOW)
        want = (1 - 1j) / S2 * K12
        assert got == pytest.approx(want, rel=1e-11)
        above = lauricella_fd(spec, BranchSide.ABOVE)
        assert above == pytest.approx(want.conjugate(), rel=1e-11)

    def test_quartic_root_family_value(self):
        spec = HyperSpec(1.0, (0.5,) * 4, 2.0, tuple(unit_partition_roots(4)))
        assert lauricella_fd(spec) == pytest.approx(K12, rel=1e-11)

    def test_quintic_radical_value(self):
        s21 = math.sqrt(21.0)
        spec = HyperSpec(
            0.5, (0.5,) * 4, 1.5,
            ((3 * s21 - 17) / 25, (3 - s21) / 12, (s21 - 3) / 3, (11 - s21) / 25),
        )
        assert lauricella_fd(spec) == pytest.approx(1.1251503843770281, rel=1e-11)

    def test_argument_one_rejected(self):
        with pytest.raises(DomainError):
            lauricella_fd(HyperSpec(1.0, (0.5,) * 3, 2.0, (0.3, 1.0, 0.4)))

    def test_collapse_suite(self):
        assert props.run_collapse() >= 50


class TestTransformations:
    def test_pfaff_identity_at_origin(self):
        spec, pref = pfaff_f1(0.7, 0.4, 0.6, 1.9, 0.0, 0.0)
        assert spec.xs == (0.0, 0.0)
        assert pref == pytest.approx(1.0, rel=1e-15)
        assert spec.a == pytest.approx(1.9 - 0.7)

    def test_pfaff_on_cube_roots(self):
        w = cmath.exp(2j * math.pi / 3)
        spec, pref = pfaff_f1(1.0, 0.5, 0.5, 1.5, w, w.conjugate())
        assert spec.xs[0] == pytest.approx((1 - 1j / S3) / 2, abs=1e-14)
        assert spec.xs[1] == pytest.approx((1 + 1j / S3) / 2, abs=1e-14)
        assert pref == pytest.approx(3.0 ** -0.5, rel=1e-13)

    def test_pfaff_minus_one(self):
        spec, pref = pfaff_f1(1.0, 0.5, 0.5, 1.5, -1.0, -1.0)
        assert spec.xs == (0.5, 0.5)
        assert pref == pytest.approx(0.5, rel=1e-14)

    def test_pfaff_pole(self):
        with pytest.raises(DomainError):
            pfaff_f1(1.0, 0.5, 0.5, 1.5, 1.0, 0.3)

    def test_order_reduce_zero_last_argument(self):
        spec = HyperSpec(0.8, (0.5, 0.7, 0.3), 1.5, (0.2, 0.1, 0.0))
        reduced, pref = fd_order_reduce(spec)
        assert reduced.xs == (0.2, 0.1)
        assert pref == pytest.approx(1.0, rel=1e-15)

    def test_order_reduce_quartic_family(self):
        spec = HyperSpec(1.0, (0.5,) * 4, 2.0, tuple(unit_partition_roots(4)))
        reduced, pref = fd_order_reduce(spec)
        want = {1 - 1j, 2.0 + 0j, 1 + 1j}
        for x in reduced.xs:
            assert min(abs(x - w) for w in want) < 1e-13
        # FD(full) = pref * FD(reduced): the factor is (1 - x4)**(-1)
        x4 = spec.xs[-1]
        assert pref == pytest.approx(1.0 / (1.0 - x4), rel=1e-13)

    def test_order_reduce_requires_matching_c(self):
        with pytest.raises(DomainError):
            fd_order_reduce(HyperSpec(1.0, (0.5, 0.5), 1.5, (0.2, 0.1)))

    def test_pfaff_and_order_reduction_suite(self):
        assert props.run_pfaff_and_order_reduction() >= 50


class TestEulerianClosedForms:
    def test_elementary_value(self):
        assert eulerian_a(2, 1.0, 0.5) == pytest.approx(math.pi / 2, rel=1e-13)

    def test_quartic_b(self):
        got = eulerian_b(4, 1.0, 0.5)
        assert got == pytest.approx(K12, rel=1e-13)
        assert got == pytest.approx(complete_k(1 / S2), rel=1e-13)

    def test_octic_a(self):
        want = math.pi / 8 * S2 / complete_k(S2 - 1.0)
        got = eulerian_a(8, 5.0, 0.5)
        assert got == pytest.approx(want, rel=1e-13)
        assert got == pytest.approx(0.3374884744129745, rel=1e-13)

    def test_domains(self):
        with pytest.raises(DomainError):
            eulerian_a(3, -1.0, 0.5)
        with pytest.raises(DomainError):
            eulerian_b(2, 3.0, 0.5)
