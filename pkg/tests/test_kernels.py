"""Tests for entry builders, node sequences, and the window verifier."""

import random
from fractions import Fraction

import pytest

from invrel import (
    Kernel,
    NodeSequences,
    PivotDegenerate,
    TriangularPair,
    ZeroDiagonal,
    ZeroDivisor,
    binomial_kernel,
    f_entry,
    g_entry,
    gasper_closed_entries,
    gasper_kernel,
    kernel_to_nodes,
    max_antisymmetry_residual,
    node_entries,
    pair_from_kernel,
    pair_from_nodes,
    validate_kernel_window,
    verify_inversion,
)

GASPER_PARAMS = (Fraction(2), Fraction(3), Fraction(1, 5), Fraction(1, 7))


class TestEntryBuilders:
    def test_diagonal_entries_are_one(self):
        for kernel in (binomial_kernel(), gasper_kernel(*GASPER_PARAMS)):
            for k in (-2, 0, 3):
                assert f_entry(kernel, k, k) == 1
                assert g_entry(kernel, k, k) == 1

    def test_binomial_values(self):
        kernel = binomial_kernel()
        assert f_entry(kernel, 3, 1) == Fraction(1, 2)
        assert g_entry(kernel, 3, 1) == Fraction(1, 2)
        for k in (-1, 0, 4):
            assert g_entry(kernel, k + 1, k) == -1

    def test_gasper_matches_closed_form(self):
        kernel = gasper_kernel(*GASPER_PARAMS)
        closed_f, closed_g = gasper_closed_entries(*GASPER_PARAMS)
        for k in range(0, 6):
            for n in range(k, 6):
                assert f_entry(kernel, n, k) == closed_f(n, k)
                assert g_entry(kernel, n, k) == closed_g(n, k)

    def test_zero_divisor_names_indices(self):
        kernel = Kernel(alpha=lambda i, k: 1, beta=lambda i, k: i - k - 1, name="shifted")
        with pytest.raises(ZeroDivisor, match=r"beta\(2,1\)"):
            f_entry(kernel, 3, 1)

    def test_zero_diagonal(self):
        kernel = Kernel(alpha=lambda i, k: i, beta=lambda i, k: i - k)
        with pytest.raises(ZeroDiagonal):
            g_entry(kernel, 0, -2)

    def test_requires_lower_triangle(self):
        from invrel import DomainError

        with pytest.raises(DomainError):
            f_entry(binomial_kernel(), 1, 2)


class TestVerifyInversion:
    def test_identity_pair(self):
        delta = lambda n, k: 1 if n == k else 0
        pair = TriangularPair(f=delta, g=delta, window=(-3, 3))
        report = verify_inversion(pair)
        assert report.passed and report.worst == 0 and report.mode == "exact"

    def test_binomial_window(self):
        pair = pair_from_kernel(binomial_kernel(), (0, 8))
        report = verify_inversion(pair)
        assert report.passed
        assert all(v == 0 for v in report.residuals.values())
        assert all(v == 0 for v in report.transposed_residuals.values())

    def test_both_composition_orders_agree(self):
        # mismatched F and G fail in both orders; matched ones pass in both
        binom = pair_from_kernel(binomial_kernel(), (0, 5))
        gasp = pair_from_kernel(gasper_kernel(*GASPER_PARAMS), (0, 5))
        broken = TriangularPair(f=binom.f, g=gasp.g, window=(0, 5))
        report = verify_inversion(broken)
        assert not report.passed
        assert any(v != 0 for v in report.residuals.values())
        assert any(v != 0 for v in report.transposed_residuals.values())

    def test_tolerance_mode(self):
        delta = lambda n, k: (1.0 if n == k else 0.0) + 1e-12
        pair = TriangularPair(f=delta, g=lambda n, k: 1.0 if n == k else 0.0, window=(0, 3))
        ok = verify_inversion(pair, tol=1e-6)
        assert ok.passed and ok.mode == "tolerance" and ok.tol == 1e-6
        assert not verify_inversion(pair, tol=1e-15).passed

    def test_exact_mode_rejects_drift(self):
        delta = lambda n, k: Fraction(1 if n == k else 0) + Fraction(1, 10**30)
        pair = TriangularPair(f=delta, g=lambda n, k: 1 if n == k else 0, window=(0, 2))
        assert not verify_inversion(pair).passed

    def test_nonpositive_tolerance_rejected(self):
        from invrel import DomainError

        pair = pair_from_kernel(binomial_kernel(), (0, 2))
        with pytest.raises(DomainError):
            verify_inversion(pair, tol=0.0)


class TestWindowValidation:
    def test_off_diagonal_zero_beta(self):
        kernel = Kernel(alpha=lambda i, k: 1, beta=lambda i, k: i - k - 1)
        with pytest.raises(ZeroDivisor, match=r"beta\(1,0\)"):
            validate_kernel_window(kernel, (0, 3))

    def test_zero_diagonal_alpha(self):
        kernel = Kernel(alpha=lambda i, k: i + k, beta=lambda i, k: i - k)
        with pytest.raises(ZeroDiagonal):
            validate_kernel_window(kernel, (-1, 1))

    def test_pair_from_kernel_validates_eagerly(self):
        kernel = Kernel(alpha=lambda i, k: 1, beta=lambda i, k: i - k - 1)
        with pytest.raises(ZeroDivisor):
            pair_from_kernel(kernel, (0, 3))

    def test_antisymmetry_residual(self):
        assert max_antisymmetry_residual(binomial_kernel(), (-3, 3)) == 0
        lopsided = Kernel(alpha=lambda i, k: 1, beta=lambda i, k: i + k)
        assert max_antisymmetry_residual(lopsided, (0, 3)) != 0


class TestNodeSequences:
    def test_diagonal(self):
        seqs = NodeSequences(
            a=lambda n: Fraction(1),
            b=lambda n: Fraction(-1),
            s=lambda n: Fraction(n),
            m=lambda n: Fraction(1),
        )
        assert node_entries(seqs, 2, 2) == (1, 1)

    def test_degenerate_product_sequence(self):
        # s_i = i, a = 1, b = -1, m = 1: F is identically 1 and G collapses
        seqs = NodeSequences(
            a=lambda n: Fraction(1),
            b=lambda n: Fraction(-1),
            s=lambda n: Fraction(n),
            m=lambda n: Fraction(1),
        )
        for k in range(-1, 3):
            for n in range(k, k + 5):
                f_val, g_val = node_entries(seqs, n, k)
                assert f_val == 1
                if n == k:
                    assert g_val == 1
                elif n == k + 1:
                    assert g_val == -1
                else:
                    assert g_val == 0

    def test_random_sequences_invert_exactly(self):
        rng = random.Random(20240811)

        def nonzero():
            v = 0
            while v == 0:
                v = rng.randint(-5, 5)
            return Fraction(v)

        for _ in range(50):
            vals = {
                "a": {n: nonzero() for n in range(0, 6)},
                "b": {n: nonzero() for n in range(0, 6)},
                "m": {n: nonzero() for n in range(0, 6)},
            }
            base = rng.randint(-10, 10)
            svals = {}
            for n in range(0, 6):
                base += rng.randint(1, 4)
                svals[n] = Fraction(base)
            seqs = NodeSequences(
                a=lambda n, t=vals["a"]: t[n],
                b=lambda n, t=vals["b"]: t[n],
                s=lambda n: svals[n],
                m=lambda n, t=vals["m"]: t[n],
            )
            report = verify_inversion(pair_from_nodes(seqs, (0, 5)))
            assert report.passed and report.worst == 0

    def test_duplicate_nodes_rejected(self):
        seqs = NodeSequences(
            a=lambda n: 1, b=lambda n: 1, s=lambda n: n * n, m=lambda n: 1
        )
        with pytest.raises(ZeroDivisor, match="s"):
            pair_from_nodes(seqs, (-2, 2))  # s(-1) == s(1)


class TestKernelToNodes:
    def test_binomial_round_trip(self):
        kernel = binomial_kernel()
        seqs = kernel_to_nodes(kernel, pivot=-5)
        for k in range(0, 5):
            for n in range(k, 5):
                f_val, g_val = node_entries(seqs, n, k)
                assert f_val == f_entry(kernel, n, k)
                assert g_val == g_entry(kernel, n, k)

    def test_gasper_round_trip(self):
        kernel = gasper_kernel(*GASPER_PARAMS)
        seqs = kernel_to_nodes(kernel, pivot=-3)
        for k in range(0, 5):
            for n in range(k, 5):
                f_val, g_val = node_entries(seqs, n, k)
                assert f_val == f_entry(kernel, n, k)
                assert g_val == g_entry(kernel, n, k)

    def test_pivot_degenerate(self):
        seqs = kernel_to_nodes(binomial_kernel(), pivot=2)
        with pytest.raises(PivotDegenerate):
            seqs.s(2)  # beta(p, p) = 0
