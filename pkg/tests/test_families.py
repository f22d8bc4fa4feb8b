"""Tests for every concrete kernel family and the generic solution patterns."""

import random
from fractions import Fraction
from itertools import product

import pytest

from invrel import (
    DegenerateParams,
    FactorSequences,
    IndexOutOfTable,
    ZeroBeta,
    ZeroDivisor,
    affine_sequence,
    bilinear_kernel,
    binomial_closed_entries,
    binomial_kernel,
    constant_sequence,
    eds_closed_entries,
    eds_generate,
    eds_kernel,
    eds_property_residual,
    elliptic_sum_closed_entries,
    elliptic_sum_kernel,
    f_entry,
    g_entry,
    gasper_kernel,
    max_anchored_tsi_residual,
    max_antisymmetry_residual,
    max_qsi_residual,
    max_tsi_residual,
    pair_from_kernel,
    partial_theta,
    partial_theta_kernel,
    product_ratio_kernel,
    prod_range,
    schlosser_closed_entries,
    schlosser_kernel,
    tsi_residual,
    verify_inversion,
    warnaar_kernel,
    weierstrass_addition_residual,
)


def rational_nonzero(rng, span=5):
    v = 0
    while v == 0:
        v = rng.randint(-span, span)
    return Fraction(v, rng.randint(1, 3))


class TestProductRatioKernel:
    def test_first_superdiagonal_is_the_seed(self):
        seqs = FactorSequences(
            x=lambda i: Fraction(2), y=lambda i: Fraction(3), t=lambda i: Fraction(i)
        )
        kernel = product_ratio_kernel(seqs)
        for k in (-3, 0, 4):
            assert kernel.beta(k, k + 1) == k + 1

    def test_hand_sum(self):
        # x_i = 2, y_i = 3, t_i = 1:
        # beta(0,2) = t_1 x_2 + t_2 / x_1 = 2 + 1/2
        seqs = FactorSequences(
            x=lambda i: Fraction(2), y=lambda i: Fraction(3), t=lambda i: Fraction(1)
        )
        kernel = product_ratio_kernel(seqs)
        assert kernel.beta(0, 2) == Fraction(5, 2)

    def test_triple_sum_holds_for_random_sequences(self):
        rng = random.Random(1001)
        for _ in range(20):
            xs = {i: rational_nonzero(rng) for i in range(-4, 7)}
            ys = {i: rational_nonzero(rng) for i in range(-4, 7)}
            ts = {i: rational_nonzero(rng) for i in range(-4, 7)}
            kernel = product_ratio_kernel(
                FactorSequences(x=lambda i: xs[i], y=lambda i: ys[i], t=lambda i: ts[i])
            )
            assert max_tsi_residual(kernel, (-2, 5)) == 0

    def test_partial_sum_telescoping(self):
        # beta(k,n)/(X_k X_n) + beta(n,m)/(X_n X_m) = beta(k,m)/(X_k X_m)
        rng = random.Random(55)
        xs = {i: rational_nonzero(rng) for i in range(-4, 7)}
        seqs = FactorSequences(
            x=lambda i: xs[i], y=lambda i: Fraction(1), t=lambda i: Fraction(1)
        )
        kernel = product_ratio_kernel(seqs)
        X = lambda m: Fraction(prod_range(seqs.x, 1, m))
        for k, n, m in product(range(-2, 5), repeat=3):
            lhs = kernel.beta(k, n) / (X(k) * X(n)) + kernel.beta(n, m) / (X(n) * X(m))
            assert lhs == kernel.beta(k, m) / (X(k) * X(m))

    def test_delta_on_window(self):
        rng = random.Random(31)
        xs = {i: rational_nonzero(rng) for i in range(-2, 7)}
        ys = {i: rational_nonzero(rng) for i in range(-2, 7)}
        kernel = product_ratio_kernel(
            FactorSequences(x=lambda i: xs[i], y=lambda i: ys[i], t=lambda i: Fraction(1))
        )
        assert verify_inversion(pair_from_kernel(kernel, (0, 5))).passed

    def test_zero_x_is_reported(self):
        seqs = FactorSequences(
            x=lambda i: Fraction(i), y=lambda i: Fraction(1), t=lambda i: Fraction(1)
        )
        kernel = product_ratio_kernel(seqs)
        with pytest.raises(ZeroDivisor):
            kernel.beta(-2, 3)  # partial sums cross x_0 = 0


class TestBilinearKernel:
    def test_diagonal_beta_vanishes(self):
        kernel = bilinear_kernel(
            a=lambda n: Fraction(n), b=lambda n: Fraction(1),
            x=lambda n: Fraction(1), y=lambda n: Fraction(n),
        )
        for k in range(-3, 4):
            assert kernel.beta(k, k) == 0

    def test_recovers_sum_alpha_with_consistent_beta(self):
        # a_n = n, b_n = 1, x_k = 1, y_k = k gives alpha(k,n) = k+n and
        # beta(k,n) = n-k, a triple-sum-compatible completion of that alpha
        kernel = bilinear_kernel(
            a=lambda n: Fraction(n), b=lambda n: Fraction(1),
            x=lambda n: Fraction(1), y=lambda n: Fraction(n),
        )
        for k, n in product(range(-3, 4), repeat=2):
            assert kernel.alpha(k, n) == k + n
            assert kernel.beta(k, n) == n - k
        assert max_tsi_residual(kernel, (-2, 3)) == 0

    def test_triple_sum_holds_for_random_sequences(self):
        rng = random.Random(2002)
        for _ in range(20):
            seqs = {
                name: {i: rational_nonzero(rng) for i in range(-3, 6)}
                for name in "abxy"
            }
            kernel = bilinear_kernel(
                a=lambda n: seqs["a"][n], b=lambda n: seqs["b"][n],
                x=lambda n: seqs["x"][n], y=lambda n: seqs["y"][n],
            )
            assert max_tsi_residual(kernel, (-2, 4)) == 0


class TestBinomialFamily:
    def test_closed_entries(self):
        kernel = binomial_kernel()
        closed_f, closed_g = binomial_closed_entries()
        for k in range(0, 7):
            for n in range(k, 7):
                assert closed_f(n, k) == f_entry(kernel, n, k)
                assert closed_g(n, k) == g_entry(kernel, n, k)


class TestGasperFamily:
    PARAMS = (Fraction(2), Fraction(3), Fraction(1, 5), Fraction(1, 7))

    def test_beta_diagonal_vanishes(self):
        kernel = gasper_kernel(*self.PARAMS)
        for k in range(-3, 4):
            assert kernel.beta(k, k) == 0

    def test_antisymmetry(self):
        assert max_antisymmetry_residual(gasper_kernel(*self.PARAMS), (-3, 3)) == 0

    def test_degenerate_a(self):
        with pytest.raises(DegenerateParams):
            gasper_kernel(Fraction(0), Fraction(3), Fraction(1, 5), Fraction(1, 7))

    def test_degenerate_p(self):
        with pytest.raises(DegenerateParams):
            gasper_kernel(Fraction(2), Fraction(3), Fraction(1), Fraction(1, 7))
        with pytest.raises(DegenerateParams):
            gasper_kernel(Fraction(2), Fraction(3), Fraction(-1), Fraction(1, 7))

    def test_window_admissibility_catches_beta_zero(self):
        # b/a = p^5 makes the second beta factor vanish whenever k+i = 5
        p = Fraction(1, 5)
        with pytest.raises(DegenerateParams, match=r"beta"):
            gasper_kernel(Fraction(2), 2 * p**5, p, Fraction(1, 7), window=(0, 4))


class TestSchlosserFamily:
    PARAMS = (Fraction(1, 2), Fraction(2), Fraction(7), Fraction(1, 3))

    def test_beta_diagonal_vanishes(self):
        kernel = schlosser_kernel(*self.PARAMS)
        for k in range(-3, 4):
            assert kernel.beta(k, k) == 0

    def test_antisymmetry(self):
        assert max_antisymmetry_residual(schlosser_kernel(*self.PARAMS), (-3, 3)) == 0

    def test_triple_sum_exact(self):
        assert max_tsi_residual(schlosser_kernel(*self.PARAMS), (-2, 3)) == 0

    def test_delta_exact(self):
        pair = pair_from_kernel(schlosser_kernel(*self.PARAMS), (0, 6))
        report = verify_inversion(pair)
        assert report.passed and report.mode == "exact"

    def test_closed_entries(self):
        kernel = schlosser_kernel(*self.PARAMS)
        closed_f, closed_g = schlosser_closed_entries(*self.PARAMS)
        for k in range(0, 7):
            for n in range(k, 7):
                assert closed_f(n, k) == f_entry(kernel, n, k)
                assert closed_g(n, k) == g_entry(kernel, n, k)

    def test_degenerate_params(self):
        with pytest.raises(DegenerateParams):
            schlosser_kernel(Fraction(1), Fraction(0), Fraction(7), Fraction(1, 3))
        # c chosen to kill beta(1,0) on the window
        a, b, q = Fraction(1, 2), Fraction(2), Fraction(1, 3)
        c = (a + b) * (a + b * q)
        with pytest.raises(DegenerateParams):
            schlosser_kernel(a, b, c, q, window=(0, 3))


WARNAAR_Q = 0.1
WARNAAR_B = affine_sequence(2.0, 0.1)
WARNAAR_X = affine_sequence(0.3, 0.05)


class TestWarnaarFamily:
    def kernel(self):
        return warnaar_kernel(WARNAAR_Q, WARNAAR_B, WARNAAR_X)

    def test_beta_diagonal_vanishes(self):
        kernel = self.kernel()
        for k in range(0, 5):
            assert kernel.beta(k, k) == 0

    def test_antisymmetry_numeric(self):
        kernel = self.kernel()
        assert abs(max_antisymmetry_residual(kernel, (0, 4))) < 1e-12

    def test_triple_sum_numeric(self):
        kernel = self.kernel()
        assert abs(max_tsi_residual(kernel, (0, 4))) < 1e-10

    def test_triple_sum_is_the_addition_formula(self):
        # tsi(n,k,p,q) = b_p b_k * addition residual at (x_n, b_p, b_q, b_k)
        kernel = self.kernel()
        for n, k, p, q in ((4, 0, 2, 1), (3, 1, 4, 0), (2, 0, 3, 4)):
            lhs = tsi_residual(kernel, n, k, p, q)
            rhs = (
                WARNAAR_B(p)
                * WARNAAR_B(k)
                * weierstrass_addition_residual(
                    WARNAAR_X(n), WARNAAR_B(p), WARNAAR_B(q), WARNAAR_B(k), WARNAAR_Q
                )
            )
            assert abs(lhs - rhs) < 1e-12

    def test_delta_within_tolerance(self):
        report = verify_inversion(pair_from_kernel(self.kernel(), (0, 4)), tol=1e-9)
        assert report.passed


class TestEllipticSumFamily:
    ARGS = (0.3, 0.7, 0.4, 0.1)

    def kernel(self):
        return elliptic_sum_kernel(*self.ARGS, t_seq=constant_sequence(1.0))

    def test_beta_diagonal_vanishes(self):
        kernel = self.kernel()
        for k in range(0, 4):
            assert kernel.beta(k, k) == 0

    def test_delta_within_tolerance(self):
        report = verify_inversion(pair_from_kernel(self.kernel(), (0, 3)), tol=1e-8)
        assert report.passed

    def test_closed_entries_match_generic(self):
        kernel = self.kernel()
        closed_f, closed_g = elliptic_sum_closed_entries(
            *self.ARGS, t_seq=constant_sequence(1.0)
        )
        for k in range(0, 4):
            for n in range(k, 4):
                assert abs(closed_f(n, k) - f_entry(kernel, n, k)) < 1e-10
                assert abs(closed_g(n, k) - g_entry(kernel, n, k)) < 1e-10

    def test_triple_sum_numeric(self):
        assert abs(max_tsi_residual(self.kernel(), (0, 3))) < 1e-9


PT_Q = 0.1
PT_A = affine_sequence(1.0, 0.1)
PT_B = affine_sequence(0.2, 0.05)


class TestPartialThetaFamily:
    def kernel(self):
        return partial_theta_kernel(PT_Q, PT_A, PT_B)

    def test_beta_diagonal_vanishes(self):
        kernel = self.kernel()
        for k in range(0, 4):
            assert kernel.beta(k, k) == 0

    def test_antisymmetry_numeric(self):
        assert abs(max_antisymmetry_residual(self.kernel(), (0, 3))) < 1e-12

    def test_beta_is_partial_theta_difference(self):
        # (b_i - b_k) L(b_i, b_k) telescopes to Theta(q;b_i) - Theta(q;b_k)
        kernel = self.kernel()
        for i, k in product(range(0, 4), repeat=2):
            expected = partial_theta(PT_Q, PT_B(i)) - partial_theta(PT_Q, PT_B(k))
            assert abs(kernel.beta(i, k) - expected) < 1e-12

    def test_delta_within_tolerance(self):
        report = verify_inversion(pair_from_kernel(self.kernel(), (0, 3)), tol=1e-8)
        assert report.passed

    def test_triple_sum_numeric(self):
        assert abs(max_tsi_residual(self.kernel(), (0, 3))) < 1e-9

    def test_repeated_b_rejected(self):
        kernel = partial_theta_kernel(PT_Q, PT_A, constant_sequence(0.3))
        with pytest.raises(DegenerateParams):
            kernel.beta(0, 1)


class TestEdsSequence:
    def test_generated_values(self):
        seq = eds_generate(1, -1, 1, 12)
        assert [seq.w(n) for n in range(0, 10)] == [0, 1, 1, -1, 1, 2, -1, -3, -5, 7]
        assert seq.w(-5) == -2

    def test_recurrence_round_trip(self):
        seq = eds_generate(1, -1, 1, 16)
        for n in range(-(seq.n_max - 2), seq.n_max - 1):
            assert seq.recurrence_residual(n) == 0

    def test_property_residual_exhaustive(self):
        seq = eds_generate(1, -1, 1, 12)
        for k, p, q in product(range(-6, 7), repeat=3):
            assert eds_property_residual(seq, k, p, q) == 0

    def test_property_for_rational_seeds(self):
        seq = eds_generate(2, 1, 6, 12)
        for k, p, q in product(range(-6, 7), repeat=3):
            assert eds_property_residual(seq, k, p, q) == 0

    def test_zero_divisor_reports_index(self):
        # seeds (1,1,1) force W_5 = 0, so W_9 cannot be generated
        with pytest.raises(ZeroDivisor, match=r"W\(9\).*W\(5\)"):
            eds_generate(1, 1, 1, 12)

    def test_index_out_of_table(self):
        seq = eds_generate(1, -1, 1, 12)
        with pytest.raises(IndexOutOfTable):
            seq.w(13)


class TestEdsKernel:
    def seq(self):
        return eds_generate(1, -1, 1, 16)

    def test_antisymmetry(self):
        kernel = eds_kernel(self.seq())
        assert max_antisymmetry_residual(kernel, (1, 6)) == 0

    def test_triple_sum_equals_property_residual(self):
        seq = self.seq()
        kernel = eds_kernel(seq)
        for n, k, p, q in ((3, 1, 2, 4), (6, 2, 1, 5), (4, 4, 3, 2)):
            assert tsi_residual(kernel, n, k, p, q) == eds_property_residual(seq, p, q, k)
            assert tsi_residual(kernel, n, k, p, q) == 0

    def test_delta_exact(self):
        kernel = eds_kernel(self.seq(), window=(1, 6))
        assert verify_inversion(pair_from_kernel(kernel, (1, 6), validate=False)).passed

    def test_closed_entries(self):
        seq = self.seq()
        kernel = eds_kernel(seq)
        closed_f, closed_g = eds_closed_entries(seq)
        for k in range(1, 7):
            for n in range(k, 7):
                assert closed_f(n, k) == f_entry(kernel, n, k)
                assert closed_g(n, k) == g_entry(kernel, n, k)

    def test_window_with_vanishing_beta_rejected(self):
        # seeds (1,1,1) give W_5 = 0, so beta(2,3) = W_5 W_{-1} = 0
        seq = eds_generate(1, 1, 1, 8)
        with pytest.raises(ZeroBeta):
            eds_kernel(seq, window=(1, 4))
