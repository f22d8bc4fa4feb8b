"""Concrete kernel families and their printed closed-form entries.

Exact families (binomial, the bibasic and three-parameter q-series pairs,
the two generic solution patterns, divisibility sequences) run over exact
rationals; the theta-based families run over floats under a
:class:`~invrel.numerics.TruncationPolicy`.

Each ``*_kernel`` constructor returns a :class:`~invrel.kernels.Kernel`;
passing ``window`` validates admissibility (nonzero diagonal alpha, nonzero
off-diagonal beta) up front and reports violations as
:class:`~invrel.errors.DegenerateParams`.  Where an independent closed form
of the entries exists, ``*_closed_entries`` returns ``(F, G)`` callables to
compare against the generic builders.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Callable

from .errors import (
    DegenerateParams,
    IndexOutOfTable,
    VerificationError,
    ZeroBeta,
    ZeroDiagonal,
    ZeroDivisor,
)
from .kernels import Kernel, Window, check_window, validate_kernel_window
from .numerics import (
    DEFAULT_POLICY,
    Scalar,
    TruncationPolicy,
    exact_div,
    partial_theta,
    partial_theta_slope_series,
    power,
    prod_range,
    q_pochhammer,
    reciprocal,
    theta,
)


def affine_sequence(start: Scalar, step: Scalar) -> Callable[[int], Scalar]:
    """The sequence ``i -> start + step * i``."""
    return lambda i: start + step * i


def constant_sequence(value: Scalar) -> Callable[[int], Scalar]:
    return lambda i: value


def _binom2(m: int) -> int:
    # m(m-1)/2 for any integer m, consistent with the binomial extension
    return m * (m - 1) // 2


def _validated(kernel: Kernel, window: Window | None) -> Kernel:
    if window is not None:
        try:
            validate_kernel_window(kernel, window)
        except VerificationError as exc:
            raise DegenerateParams(f"{kernel.name}: {exc}") from exc
    return kernel


# --- generic solution patterns ------------------------------------------------


class FactorSequences:
    """Sequences (x, y, t) feeding :func:`product_ratio_kernel`; the x values
    must be nonzero wherever partial products are taken."""

    def __init__(
        self,
        x: Callable[[int], Scalar],
        y: Callable[[int], Scalar],
        t: Callable[[int], Scalar],
    ):
        self.x = x
        self.y = y
        self.t = t


def product_ratio_kernel(seqs: FactorSequences, name: str = "product-ratio") -> Kernel:
    """Kernel with alpha a ratio of bilateral partial products and beta a
    partial-sum telescope:

        alpha(i,k) = X_k / Y_i,  X_m = prod_{j=1}^{m} x_j,  Y_m = prod y_j
        beta(i,k)  = X_i X_k (sigma(k) - sigma(i)),
        sigma(m)   = sum_{j=1}^{m} t_j / (X_{j-1} X_j)   (bilateral)

    so that ``beta(k, k+1) = t(k+1)`` and antisymmetry is structural.  The
    telescoping sum makes the pair satisfy the triple sum identity for
    arbitrary ``y`` and ``t``.
    """
    X = lru_cache(maxsize=None)(lambda m: prod_range(seqs.x, 1, m))
    Y = lru_cache(maxsize=None)(lambda m: prod_range(seqs.y, 1, m))

    @lru_cache(maxsize=None)
    def sigma(m: int) -> Scalar:
        if m == 0:
            return 0
        if m > 0:
            den = X(m - 1) * X(m)
            if den == 0:
                raise ZeroDivisor(f"x partial product through {m} vanishes")
            return sigma(m - 1) + seqs.t(m) * reciprocal(den)
        den = X(m) * X(m + 1)
        if den == 0:
            raise ZeroDivisor(f"x partial product through {m + 1} vanishes")
        return sigma(m + 1) - seqs.t(m + 1) * reciprocal(den)

    def alpha(i: int, k: int) -> Scalar:
        yi = Y(i)
        if yi == 0:
            raise ZeroDivisor(f"y partial product through {i} vanishes")
        return X(k) * reciprocal(yi)

    def beta(i: int, k: int) -> Scalar:
        return X(i) * X(k) * (sigma(k) - sigma(i))

    return Kernel(alpha=alpha, beta=beta, beta_antisymmetric=True, name=name)


def bilinear_kernel(
    a: Callable[[int], Scalar],
    b: Callable[[int], Scalar],
    x: Callable[[int], Scalar],
    y: Callable[[int], Scalar],
    name: str = "bilinear",
) -> Kernel:
    """Kernel with bilinear alpha and determinant beta:

        alpha(i,k) = x_i a_k + y_i b_k,   beta(i,k) = a_k b_i - a_i b_k

    The triple sum identity holds identically for arbitrary sequences.
    """
    return Kernel(
        alpha=lambda i, k: x(i) * a(k) + y(i) * b(k),
        beta=lambda i, k: a(k) * b(i) - a(i) * b(k),
        beta_antisymmetric=True,
        name=name,
    )


# --- exact q-series families --------------------------------------------------


def binomial_kernel() -> Kernel:
    """The simplest antisymmetric kernel: alpha = 1, beta(i,k) = i - k.

    Induces F(n,k) = 1/(n-k)! and G(n,k) = (-1)^(n-k)/(n-k)!, whose
    orthogonality is the alternating binomial identity.
    """
    return Kernel(
        alpha=lambda i, k: 1,
        beta=lambda i, k: i - k,
        beta_antisymmetric=True,
        name="binomial",
    )


def binomial_closed_entries() -> tuple[Callable, Callable]:
    def f_closed(n: int, k: int) -> Fraction:
        return Fraction(1, factorial(n - k))

    def g_closed(n: int, k: int) -> Fraction:
        return Fraction((-1) ** (n - k), factorial(n - k))

    return f_closed, g_closed


def gasper_kernel(
    a: Scalar, b: Scalar, p: Scalar, q: Scalar,
    window: Window | None = None,
) -> Kernel:
    """Bibasic kernel behind Euler-transformation-style inversions:

        alpha(i,k) = (1 - a p^k q^i)(1 - b p^{-k} q^i)
        beta(i,k)  = (p^i - p^k)(1 - (b/a) p^{-k-i})
    """
    if a == 0:
        raise DegenerateParams("gasper: a must be nonzero")
    if p in (0, 1, -1) or q == 0:
        raise DegenerateParams("gasper: need p not in {0, 1, -1} and q != 0")
    ba = exact_div(b, a)

    @lru_cache(maxsize=None)
    def alpha(i: int, k: int) -> Scalar:
        return (1 - a * power(p, k) * power(q, i)) * (1 - b * power(p, -k) * power(q, i))

    @lru_cache(maxsize=None)
    def beta(i: int, k: int) -> Scalar:
        return (power(p, i) - power(p, k)) * (1 - ba * power(p, -k - i))

    return _validated(Kernel(alpha, beta, True, "gasper"), window)


def gasper_closed_entries(a: Scalar, b: Scalar, p: Scalar, q: Scalar) -> tuple[Callable, Callable]:
    """Printed closed forms of the bibasic entries (q- and p-shifted
    factorials with an explicit sign and power prefactor)."""
    ba = exact_div(b, a)

    def f_closed(n: int, k: int) -> Scalar:
        num = q_pochhammer(a * power(p, k) * power(q, k), q, n - k) * q_pochhammer(
            b * power(p, -k) * power(q, k), q, n - k
        )
        den = q_pochhammer(p, p, n - k) * q_pochhammer(ba * power(p, -n - k), p, n - k)
        return (-1) ** (n - k) * power(p, -(n - k) * k) * num * reciprocal(den)

    def g_closed(n: int, k: int) -> Scalar:
        num = (
            (1 - a * power(p, k) * power(q, k))
            * (1 - b * power(p, -k) * power(q, k))
            * q_pochhammer(a * power(p, n) * power(q, k), q, n - k)
            * q_pochhammer(b * power(q, k) * power(p, -n), q, n - k)
        )
        den = (
            (1 - a * power(p, n) * power(q, k))
            * (1 - b * power(p, -n) * power(q, k))
            * q_pochhammer(p, p, n - k)
            * q_pochhammer(ba * power(p, 1 - 2 * n), p, n - k)
        )
        return power(p, -_binom2(n) + _binom2(k)) * num * reciprocal(den)

    return f_closed, g_closed


def schlosser_kernel(
    a: Scalar, b: Scalar, c: Scalar, q: Scalar,
    window: Window | None = None,
) -> Kernel:
    """Three-parameter kernel behind bilateral series transformations:

        alpha(i,k) = (q^k - q^i / b)(c - (a + b q^k)(a + q^i))
        beta(i,k)  = (q^k - q^i)(c - (a + b q^k)(a + b q^i))
    """
    if b == 0:
        raise DegenerateParams("schlosser: b must be nonzero")
    if q in (0, 1, -1):
        raise DegenerateParams("schlosser: need q not in {0, 1, -1}")

    @lru_cache(maxsize=None)
    def alpha(i: int, k: int) -> Scalar:
        return (power(q, k) - exact_div(power(q, i), b)) * (
            c - (a + b * power(q, k)) * (a + power(q, i))
        )

    @lru_cache(maxsize=None)
    def beta(i: int, k: int) -> Scalar:
        return (power(q, k) - power(q, i)) * (c - (a + b * power(q, k)) * (a + b * power(q, i)))

    return _validated(Kernel(alpha, beta, True, "schlosser"), window)


def schlosser_closed_entries(a: Scalar, b: Scalar, c: Scalar, q: Scalar) -> tuple[Callable, Callable]:
    """Printed closed forms of the three-parameter entries, with the
    sign/power factor carried by the G entries."""

    def f_closed(n: int, k: int) -> Scalar:
        big = a + b * power(q, k)
        rest = c - a * big
        num = q_pochhammer(reciprocal(b), q, n - k) * q_pochhammer(
            big * power(q, k) * reciprocal(rest), q, n - k
        )
        den = q_pochhammer(q, q, n - k) * q_pochhammer(
            big * b * power(q, k + 1) * reciprocal(rest), q, n - k
        )
        return num * reciprocal(den)

    def g_closed(n: int, k: int) -> Scalar:
        big = a + b * power(q, n)
        rest = c - a * big
        lam = (
            (-1) ** (n - k)
            * power(q, _binom2(n - k))
            * (c - (a + b * power(q, k)) * (a + power(q, k)))
            * reciprocal(c - (a + b * power(q, n)) * (a + power(q, n)))
        )
        num = q_pochhammer(power(q, k - n + 1) * reciprocal(b), q, n - k) * q_pochhammer(
            big * power(q, k + 1) * reciprocal(rest), q, n - k
        )
        den = q_pochhammer(q, q, n - k) * q_pochhammer(
            big * b * power(q, k) * reciprocal(rest), q, n - k
        )
        return lam * num * reciprocal(den)

    return f_closed, g_closed


# --- theta families (numeric domain) ------------------------------------------


def warnaar_kernel(
    q: Scalar,
    b_seq: Callable[[int], Scalar],
    x_seq: Callable[[int], Scalar],
    policy: TruncationPolicy = DEFAULT_POLICY,
    window: Window | None = None,
) -> Kernel:
    """Elliptic kernel built from theta factors:

        alpha(i,k) = b_k theta(x_i b_k; q) theta(x_i / b_k; q)
        beta(i,k)  = b_k theta(b_i b_k; q) theta(b_i / b_k; q)

    Antisymmetry follows from the theta inversion rule
    ``theta(1/z; q) = -(1/z) theta(z; q)``.  The triple sum identity is the
    theta addition formula (see
    :func:`~invrel.numerics.weierstrass_addition_residual`).
    """

    @lru_cache(maxsize=None)
    def alpha(i: int, k: int) -> Scalar:
        bk = b_seq(k)
        return bk * theta(x_seq(i) * bk, q, policy) * theta(x_seq(i) / bk, q, policy)

    @lru_cache(maxsize=None)
    def beta(i: int, k: int) -> Scalar:
        if i == k:
            return 0.0
        bk = b_seq(k)
        return bk * theta(b_seq(i) * bk, q, policy) * theta(b_seq(i) / bk, q, policy)

    return _validated(Kernel(alpha, beta, True, "warnaar"), window)


def elliptic_sum_kernel(
    x: Scalar, y: Scalar, q: Scalar, p: Scalar,
    t_seq: Callable[[int], Scalar] = constant_sequence(1.0),
    policy: TruncationPolicy = DEFAULT_POLICY,
    window: Window | None = None,
) -> Kernel:
    """Elliptic-factorial kernel: the product-ratio pattern instantiated with
    ``x_i = theta(x q^{i-1}; p)`` and ``y_i = theta(y q^{i-1}; p)``, so that

        alpha(i,k) = (x;q,p)_k / (y;q,p)_i
        beta(i,k)  = (x;q,p)_i (x;q,p)_k S(i,k)

    with ``S(i,k) = sum_{j=i+1}^{k} t_j / ((x;q,p)_{j-1} (x;q,p)_j)``
    extended antisymmetrically (``S(i,k) = -S(k,i)``).
    """
    seqs = FactorSequences(
        x=lru_cache(maxsize=None)(lambda i: theta(x * power(q, i - 1), p, policy)),
        y=lru_cache(maxsize=None)(lambda i: theta(y * power(q, i - 1), p, policy)),
        t=t_seq,
    )
    return _validated(product_ratio_kernel(seqs, name="elliptic-sum"), window)


def elliptic_sum_closed_entries(
    x: Scalar, y: Scalar, q: Scalar, p: Scalar,
    t_seq: Callable[[int], Scalar] = constant_sequence(1.0),
    policy: TruncationPolicy = DEFAULT_POLICY,
) -> tuple[Callable, Callable]:
    """Collapsed product form of the elliptic-factorial entries:

        F(n,k) = prod_{i=k+1}^{n} 1 / ((x;q,p)_i (y;q,p)_{i-1} S(i,k))
        G(n,k) = prod_{i=k}^{n-1} 1 / ((x;q,p)_{i+1} (y;q,p)_i S(i,n))
    """
    E = lru_cache(maxsize=None)(
        lambda m: prod_range(lambda j: theta(x * power(q, j - 1), p, policy), 1, m)
    )
    D = lru_cache(maxsize=None)(
        lambda m: prod_range(lambda j: theta(y * power(q, j - 1), p, policy), 1, m)
    )

    @lru_cache(maxsize=None)
    def sigma(m: int) -> Scalar:
        if m == 0:
            return 0
        if m > 0:
            return sigma(m - 1) + t_seq(m) * reciprocal(E(m - 1) * E(m))
        return sigma(m + 1) - t_seq(m + 1) * reciprocal(E(m) * E(m + 1))

    def s(i: int, k: int) -> Scalar:
        return sigma(k) - sigma(i)

    def f_closed(n: int, k: int) -> Scalar:
        return prod_range(lambda i: reciprocal(E(i) * D(i - 1) * s(i, k)), k + 1, n)

    def g_closed(n: int, k: int) -> Scalar:
        return prod_range(lambda i: reciprocal(E(i + 1) * D(i) * s(i, n)), k, n - 1)

    return f_closed, g_closed


def partial_theta_kernel(
    q: Scalar,
    a_seq: Callable[[int], Scalar],
    b_seq: Callable[[int], Scalar],
    policy: TruncationPolicy = DEFAULT_POLICY,
    window: Window | None = None,
) -> Kernel:
    """Partial-theta kernel:

        alpha(i,k) = a_i + Theta(q; b_k)
        beta(i,k)  = (b_i - b_k) L(b_i, b_k)

    where ``L`` is the symmetric slope kernel
    (:func:`~invrel.numerics.partial_theta_slope_series`), so beta equals
    the antisymmetric difference ``Theta(q; b_i) - Theta(q; b_k)``.  Requires
    the ``b_i`` pairwise distinct on the window.
    """
    theta_at = lru_cache(maxsize=None)(lambda k: partial_theta(q, b_seq(k), policy))

    @lru_cache(maxsize=None)
    def alpha(i: int, k: int) -> Scalar:
        return a_seq(i) + theta_at(k)

    @lru_cache(maxsize=None)
    def beta(i: int, k: int) -> Scalar:
        bi, bk = b_seq(i), b_seq(k)
        if i != k and bi == bk:
            raise DegenerateParams(f"partial-theta: b({i}) == b({k})")
        return (bi - bk) * partial_theta_slope_series(bi, bk, q, policy)

    return _validated(Kernel(alpha, beta, True, "partial-theta"), window)


# --- elliptic divisibility sequences -------------------------------------------


class EdsSequence:
    """Bilateral table ``W_{-N}..W_N`` of the divisibility recurrence

        W_{n+2} W_{n-2} = W_{n+1} W_{n-1} W_2^2 - W_1 W_3 W_n^2

    with ``W_0 = 0``, ``W_1 = 1``, ``W_{-n} = -W_n`` and seeds
    ``(W_2, W_3, W_4)``."""

    def __init__(self, seeds: tuple[Fraction, Fraction, Fraction], table: dict[int, Fraction]):
        self.seeds = seeds
        self._table = dict(table)
        self.n_max = max(table)

    def w(self, n: int) -> Fraction:
        """``W_n`` with the odd bilateral extension."""
        idx = abs(n)
        if idx > self.n_max:
            raise IndexOutOfTable(f"W({n}) outside generated table (|n| <= {self.n_max})")
        value = self._table[idx]
        return -value if n < 0 else value

    def recurrence_residual(self, n: int) -> Fraction:
        """``W_{n+2} W_{n-2} - W_{n+1} W_{n-1} W_2^2 + W_1 W_3 W_n^2``;
        zero at every tabulated index."""
        w = self.w
        return w(n + 2) * w(n - 2) - w(n + 1) * w(n - 1) * w(2) ** 2 + w(1) * w(3) * w(n) ** 2


def eds_generate(w2: Scalar, w3: Scalar, w4: Scalar, n_max: int) -> EdsSequence:
    """Generate ``W_0..W_{n_max}`` from the seeds by the forward recurrence

        W_{n+2} = (W_{n+1} W_{n-1} W_2^2 - W_1 W_3 W_n^2) / W_{n-2}

    raising :class:`~invrel.errors.ZeroDivisor` (naming the index) at the
    first step whose divisor ``W_{n-2}`` vanishes.
    """
    if n_max < 1:
        raise IndexOutOfTable("n_max must be at least 1")
    seeds = (Fraction(w2), Fraction(w3), Fraction(w4))
    table = {0: Fraction(0), 1: Fraction(1)}
    for i, v in zip((2, 3, 4), seeds):
        if i <= n_max:
            table[i] = v
    for n in range(3, n_max - 1):
        if table[n - 2] == 0:
            raise ZeroDivisor(f"W({n + 2}) needs division by W({n - 2}) = 0")
        table[n + 2] = (
            table[n + 1] * table[n - 1] * seeds[0] ** 2 - table[3] * table[n] ** 2
        ) / table[n - 2]
    return EdsSequence(seeds, table)


def eds_property_residual(W: EdsSequence, k: int, p: int, q: int) -> Fraction:
    """``W_k^2 W_{p+q} W_{p-q} + W_p^2 W_{q+k} W_{q-k} + W_q^2 W_{k+p} W_{k-p}``;
    identically zero for any divisibility sequence."""
    w = W.w
    return (
        w(k) ** 2 * w(p + q) * w(p - q)
        + w(p) ** 2 * w(q + k) * w(q - k)
        + w(q) ** 2 * w(k + p) * w(k - p)
    )


def eds_kernel(W: EdsSequence, window: Window | None = None) -> Kernel:
    """Kernel of a divisibility sequence:

        alpha(i,k) = W_k^2,   beta(i,k) = W_{i+k} W_{i-k}

    Antisymmetry comes from the odd extension; the triple sum identity is
    exactly :func:`eds_property_residual` = 0.  Windows must avoid index
    pairs where ``W_{i+k} W_{i-k} = 0`` (in particular ``k = 0`` and
    ``i = -k``).
    """
    kern = Kernel(
        alpha=lambda i, k: W.w(k) ** 2,
        beta=lambda i, k: W.w(i + k) * W.w(i - k),
        beta_antisymmetric=True,
        name="eds",
    )
    if window is not None:
        lo, hi = check_window(window)
        for k in range(lo, hi + 1):
            if W.w(k) == 0:
                raise ZeroDiagonal(f"alpha({k},{k}) = W({k})^2 = 0 on window [{lo},{hi}]")
        for k in range(lo, hi + 1):
            for i in range(lo, hi + 1):
                if i != k and kern.beta(i, k) == 0:
                    raise ZeroBeta(f"W({i + k}) W({i - k}) = 0 at ({i},{k}) on window [{lo},{hi}]")
    return kern


def eds_closed_entries(W: EdsSequence) -> tuple[Callable, Callable]:
    """Printed closed forms of the divisibility-sequence entries:

        F(n,k) = W_k^{2(n-k)} / (prod_{i=2k+1}^{n+k} W_i * prod_{i=1}^{n-k} W_i)
        G(n,k) = (-1)^{n-k} (W_k^2/W_n^2) W_n^{2(n-k)}
                 * prod_{i=1}^{n+k-1} W_i / (prod_{i=1}^{2n-1} W_i * prod_{i=1}^{n-k} W_i)
    """

    def f_closed(n: int, k: int) -> Fraction:
        den = prod_range(W.w, 2 * k + 1, n + k) * prod_range(W.w, 1, n - k)
        return W.w(k) ** (2 * (n - k)) * reciprocal(den)

    def g_closed(n: int, k: int) -> Fraction:
        num = W.w(k) ** 2 * W.w(n) ** (2 * (n - k)) * prod_range(W.w, 1, n + k - 1)
        den = W.w(n) ** 2 * prod_range(W.w, 1, 2 * n - 1) * prod_range(W.w, 1, n - k)
        return (-1) ** (n - k) * num * reciprocal(den)

    return f_closed, g_closed


# --- reproducible presets -------------------------------------------------------

FAMILY_PRESETS: dict[str, dict] = {
    "binomial": {"params": {}, "window": (0, 8), "tolerance": None},
    "gasper": {
        "params": {"a": Fraction(2), "b": Fraction(3), "p": Fraction(1, 5), "q": Fraction(1, 7)},
        "window": (0, 6),
        "tolerance": None,
    },
    "schlosser": {
        "params": {"a": Fraction(1, 2), "b": Fraction(2), "c": Fraction(7), "q": Fraction(1, 3)},
        "window": (0, 6),
        "tolerance": None,
    },
    "warnaar": {
        "params": {"q": 0.1, "b0": 2.0, "bstep": 0.1, "x0": 0.3, "xstep": 0.05},
        "window": (0, 4),
        "tolerance": 1e-9,
    },
    "elliptic-sum": {
        "params": {"x": 0.3, "y": 0.7, "q": 0.4, "p": 0.1, "t": 1.0},
        "window": (0, 3),
        "tolerance": 1e-8,
    },
    "partial-theta": {
        "params": {"q": 0.1, "a0": 1.0, "astep": 0.1, "b0": 0.2, "bstep": 0.05},
        "window": (0, 3),
        "tolerance": 1e-8,
    },
    "eds": {
        "params": {"w2": Fraction(1), "w3": Fraction(-1), "w4": Fraction(1)},
        "window": (1, 6),
        "tolerance": None,
    },
}
