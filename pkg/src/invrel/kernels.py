"""Kernel pairs, triangular entry builders, and the finite-window verifier.

A :class:`Kernel` is a pair of two-index coefficient functions
``(alpha, beta)`` with ``beta`` expected antisymmetric.  It induces a pair of
lower-triangular matrices

    F(n,k) = prod_{i=k}^{n-1} alpha(i,k) / prod_{i=k+1}^{n} beta(i,k)
    G(n,k) = (alpha(k,k)/alpha(n,n))
             * prod_{i=k+1}^{n} alpha(i,n) / prod_{i=k}^{n-1} beta(i,n)

and :func:`verify_inversion` checks ``sum_i F(n,i) G(i,k) = delta_{n,k}``
exhaustively over a finite index window, in both composition orders.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Callable

from .errors import (
    DomainError,
    PivotDegenerate,
    VerificationError,
    ZeroDiagonal,
    ZeroDivisor,
)
from .numerics import Scalar, magnitude, reciprocal

Window = tuple[int, int]


def check_window(window: Window) -> Window:
    """Validate a closed integer window ``(lo, hi)`` and normalize it."""
    lo, hi = window
    if lo > hi:
        raise DomainError(f"empty window [{lo},{hi}]")
    return int(lo), int(hi)


@dataclass(frozen=True)
class Kernel:
    """Two-index coefficient pair driving the entry builders.

    ``beta_antisymmetric`` records the expectation ``beta(i,k) = -beta(k,i)``;
    it is checked by :func:`max_antisymmetry_residual`, never assumed.
    """

    alpha: Callable[[int, int], Scalar]
    beta: Callable[[int, int], Scalar]
    beta_antisymmetric: bool = True
    name: str = ""


@dataclass(frozen=True)
class NodeSequences:
    """Four bilateral sequences (a, b, s, m) that generate a matrix inversion.

    The node values ``s`` must be pairwise distinct and ``a``, ``b`` nonzero
    wherever entries are built; violations surface as named errors.
    """

    a: Callable[[int], Scalar]
    b: Callable[[int], Scalar]
    s: Callable[[int], Scalar]
    m: Callable[[int], Scalar]


@dataclass(frozen=True)
class TriangularPair:
    """Memoized F/G entry functions over a closed integer window.

    Entries are defined for ``n >= k``; for ``n < k`` both matrices are
    conceptually zero and never evaluated.
    """

    f: Callable[[int, int], Scalar]
    g: Callable[[int, int], Scalar]
    window: Window
    name: str = ""


@dataclass(frozen=True)
class VerificationReport:
    """Residual table for a delta check, with a verdict.

    ``residuals`` holds ``sum_i F(n,i)G(i,k) - delta_{n,k}`` per ``(n,k)``,
    ``transposed_residuals`` the same for the G.F composition.  ``mode`` is
    ``"exact"`` (every residual must be zero) or ``"tolerance"`` (every
    magnitude must be ``<= tol``).
    """

    residuals: dict[tuple[int, int], Scalar]
    transposed_residuals: dict[tuple[int, int], Scalar]
    worst: float
    worst_value: Scalar
    passed: bool
    mode: str
    tol: float | None = None
    name: str = ""


def f_entry(kernel: Kernel, n: int, k: int) -> Scalar:
    """``F(n,k) = prod_{i=k}^{n-1} alpha(i,k) / prod_{i=k+1}^{n} beta(i,k)``."""
    if n < k:
        raise DomainError(f"f_entry requires n >= k, got ({n},{k})")
    num: Scalar = 1
    for i in range(k, n):
        num = num * kernel.alpha(i, k)
    den: Scalar = 1
    for i in range(k + 1, n + 1):
        b = kernel.beta(i, k)
        if b == 0:
            raise ZeroDivisor(f"beta({i},{k}) = 0 in F({n},{k})")
        den = den * b
    return num * reciprocal(den)


def g_entry(kernel: Kernel, n: int, k: int) -> Scalar:
    """``G(n,k) = (alpha(k,k)/alpha(n,n)) prod_{i=k+1}^{n} alpha(i,n)
    / prod_{i=k}^{n-1} beta(i,n)``."""
    if n < k:
        raise DomainError(f"g_entry requires n >= k, got ({n},{k})")
    diag = kernel.alpha(n, n)
    if diag == 0:
        raise ZeroDiagonal(f"alpha({n},{n}) = 0 in G({n},{k})")
    num = kernel.alpha(k, k)
    for i in range(k + 1, n + 1):
        num = num * kernel.alpha(i, n)
    den = diag
    for i in range(k, n):
        b = kernel.beta(i, n)
        if b == 0:
            raise ZeroDivisor(f"beta({i},{n}) = 0 in G({n},{k})")
        den = den * b
    return num * reciprocal(den)


def node_entries(seqs: NodeSequences, n: int, k: int) -> tuple[Scalar, Scalar]:
    """``(F(n,k), G(n,k))`` built from four sequences:

    F(n,k) = (b_n/b_k) prod_{i=k+1}^{n}
                 m_i (s_k - s_{i-1} + a_{i-1} b_{i-1} m_{i-1}) / (s_k - s_i)
    G(n,k) = (a_k/a_n) prod_{i=k}^{n-1}
                 m_i (s_n - s_{i+1} + a_{i+1} b_{i+1} m_{i+1}) / (s_n - s_i)
    """
    if n < k:
        raise DomainError(f"node_entries requires n >= k, got ({n},{k})")
    a, b, s, m = seqs.a, seqs.b, seqs.s, seqs.m
    if b(k) == 0:
        raise ZeroDivisor(f"b({k}) = 0 in node F({n},{k})")
    if a(n) == 0:
        raise ZeroDivisor(f"a({n}) = 0 in node G({n},{k})")

    f_val: Scalar = b(n) * reciprocal(b(k))
    sk = s(k)
    for i in range(k + 1, n + 1):
        diff = sk - s(i)
        if diff == 0:
            raise ZeroDivisor(f"s({k}) = s({i}) in node F({n},{k})")
        f_val = f_val * m(i) * (sk - s(i - 1) + a(i - 1) * b(i - 1) * m(i - 1))
        f_val = f_val * reciprocal(diff)

    g_val: Scalar = a(k) * reciprocal(a(n))
    sn = s(n)
    for i in range(k, n):
        diff = sn - s(i)
        if diff == 0:
            raise ZeroDivisor(f"s({n}) = s({i}) in node G({n},{k})")
        g_val = g_val * m(i) * (sn - s(i + 1) + a(i + 1) * b(i + 1) * m(i + 1))
        g_val = g_val * reciprocal(diff)
    return f_val, g_val


def kernel_to_nodes(kernel: Kernel, pivot: int) -> NodeSequences:
    """Collapse a kernel into node sequences through row/column ``pivot``:

    ``s_n = alpha(p,n)/beta(p,n)``, ``m_n = alpha(n,p)/beta(n,p)``,
    ``a_n = -alpha(n,n)/alpha(n,p)``, ``b_n = alpha(p,p)/alpha(n,p)``.

    For a kernel satisfying the triple sum identity the resulting node
    entries reproduce :func:`f_entry`/:func:`g_entry` exactly on any window
    that excludes the pivot (keeping ``beta(p,n) != 0``); ``pivot = lo - 3``
    is a safe default for a window ``[lo, hi]``.
    """
    p = pivot

    def _guarded(num: Scalar, den: Scalar, what: str, n: int) -> Scalar:
        if den == 0:
            raise PivotDegenerate(f"{what} undefined at n={n}: denominator is 0 (pivot {p})")
        return num * reciprocal(den)

    return NodeSequences(
        a=lambda n: _guarded(-kernel.alpha(n, n), kernel.alpha(n, p), "a", n),
        b=lambda n: _guarded(kernel.alpha(p, p), kernel.alpha(n, p), "b", n),
        s=lambda n: _guarded(kernel.alpha(p, n), kernel.beta(p, n), "s", n),
        m=lambda n: _guarded(kernel.alpha(n, p), kernel.beta(n, p), "m", n),
    )


def validate_kernel_window(kernel: Kernel, window: Window) -> None:
    """Eagerly check entry-builder preconditions over a window.

    Raises :class:`ZeroDiagonal` for a vanishing ``alpha(n,n)`` and
    :class:`ZeroDivisor` for a vanishing off-diagonal ``beta(i,k)``, naming
    the offending indices.
    """
    lo, hi = check_window(window)
    for n in range(lo, hi + 1):
        if kernel.alpha(n, n) == 0:
            raise ZeroDiagonal(f"alpha({n},{n}) = 0 on window [{lo},{hi}]")
    for k in range(lo, hi + 1):
        for i in range(lo, hi + 1):
            if i != k and kernel.beta(i, k) == 0:
                raise ZeroDivisor(f"beta({i},{k}) = 0 on window [{lo},{hi}]")


def max_antisymmetry_residual(kernel: Kernel, window: Window) -> Scalar:
    """Largest ``beta(i,k) + beta(k,i)`` over the window (0 if antisymmetric)."""
    lo, hi = check_window(window)
    worst: Scalar = 0
    for i in range(lo, hi + 1):
        for k in range(i, hi + 1):
            r = kernel.beta(i, k) + kernel.beta(k, i)
            if abs(r) > abs(worst):
                worst = r
    return worst


def pair_from_kernel(kernel: Kernel, window: Window, validate: bool = True) -> TriangularPair:
    """Build the memoized F/G pair of a kernel over a window.

    Preconditions (nonzero diagonal alpha, nonzero off-diagonal beta) are
    checked eagerly by default so failures are named up front rather than
    surfacing deep inside a product.
    """
    window = check_window(window)
    if validate:
        validate_kernel_window(kernel, window)
    f = lru_cache(maxsize=None)(lambda n, k: f_entry(kernel, n, k))
    g = lru_cache(maxsize=None)(lambda n, k: g_entry(kernel, n, k))
    return TriangularPair(f=f, g=g, window=window, name=kernel.name)


def pair_from_nodes(seqs: NodeSequences, window: Window, name: str = "") -> TriangularPair:
    """Build the memoized F/G pair of node sequences over a window.

    Distinctness of the nodes ``s`` and nonvanishing of ``a``, ``b`` on the
    window are checked eagerly.
    """
    lo, hi = check_window(window)
    svals = {n: seqs.s(n) for n in range(lo, hi + 1)}
    for i in range(lo, hi + 1):
        for j in range(i + 1, hi + 1):
            if svals[i] == svals[j]:
                raise ZeroDivisor(f"s({i}) = s({j}) on window [{lo},{hi}]")
    for n in range(lo, hi + 1):
        if seqs.a(n) == 0:
            raise ZeroDivisor(f"a({n}) = 0 on window [{lo},{hi}]")
        if seqs.b(n) == 0:
            raise ZeroDivisor(f"b({n}) = 0 on window [{lo},{hi}]")
    entries = lru_cache(maxsize=None)(lambda n, k: node_entries(seqs, n, k))
    return TriangularPair(
        f=lambda n, k: entries(n, k)[0],
        g=lambda n, k: entries(n, k)[1],
        window=(lo, hi),
        name=name,
    )


def verify_inversion(pair: TriangularPair, tol: float | None = None) -> VerificationReport:
    """Check ``F.G = delta`` and ``G.F = delta`` exhaustively on the window.

    ``tol=None`` demands exact equality (exact-domain entries); otherwise
    every residual magnitude must be ``<= tol``.
    """
    lo, hi = check_window(pair.window)
    fvals: dict[tuple[int, int], Scalar] = {}
    gvals: dict[tuple[int, int], Scalar] = {}
    for k in range(lo, hi + 1):
        for n in range(k, hi + 1):
            try:
                fvals[(n, k)] = pair.f(n, k)
                gvals[(n, k)] = pair.g(n, k)
            except VerificationError as exc:
                try:
                    wrapped = type(exc)(f"entry ({n},{k}): {exc}")
                except TypeError:
                    raise  # error types with structured constructors pass through
                raise wrapped from exc

    def _compose(left, right):
        out: dict[tuple[int, int], Scalar] = {}
        for k in range(lo, hi + 1):
            for n in range(k, hi + 1):
                acc: Scalar = 0
                for i in range(k, n + 1):
                    acc = acc + left[(n, i)] * right[(i, k)]
                out[(n, k)] = acc - (1 if n == k else 0)
        return out

    residuals = _compose(fvals, gvals)
    transposed = _compose(gvals, fvals)

    worst_value: Scalar = 0
    for table in (residuals, transposed):
        for r in table.values():
            if abs(r) > abs(worst_value):
                worst_value = r
    if tol is None:
        passed = worst_value == 0
        mode = "exact"
    else:
        if tol <= 0:
            raise DomainError("tolerance must be positive")
        passed = magnitude(worst_value) <= tol
        mode = "tolerance"
    return VerificationReport(
        residuals=residuals,
        transposed_residuals=transposed,
        worst=magnitude(worst_value),
        worst_value=worst_value,
        passed=passed,
        mode=mode,
        tol=tol,
        name=pair.name,
    )
