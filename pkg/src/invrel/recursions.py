"""Two ways to reconstruct beta from alpha and the first superdiagonal.

Given ``alpha`` and the seed ``t(k) = beta(k, k+1)``, the full antisymmetric
``beta`` is forced in two a-priori different ways:

* the triple-sum-identity route (:func:`beta_step_tsi`,
  :func:`beta_closed_tsi`), a first-order recursion in the gap ``n - k``;
* the window-delta route (:func:`beta_from_inversion`), which solves the
  lowest nontrivial orthogonality constraint of the induced F/G pair for
  ``beta(k, n)``, consuming all shorter-gap values.

The two routes agree at gap 2 for every seed but diverge from gap 3 on;
:func:`counterexample_discrepancies` exhibits the canonical divergent seed
``alpha(i,j) = i + j``, ``t(j) = j`` with exact rational output.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Callable, Mapping

from .errors import DomainError, MissingBeta, ZeroDenominator, ZeroDiagonal
from .kernels import Window, check_window
from .numerics import Scalar, reciprocal


@dataclass(frozen=True)
class BetaSeed:
    """alpha table plus the first superdiagonal ``t(k) = beta(k, k+1)``.

    Diagonal values ``alpha(k,k)`` are denominators of both routes and are
    checked to be nonzero on the declared window at construction.
    """

    alpha: Callable[[int, int], Scalar]
    t: Callable[[int], Scalar]
    window: Window

    def __post_init__(self):
        lo, hi = check_window(self.window)
        object.__setattr__(self, "window", (lo, hi))
        for k in range(lo, hi + 1):
            if self.alpha(k, k) == 0:
                raise ZeroDiagonal(f"alpha({k},{k}) = 0 on seed window [{lo},{hi}]")


def beta_step_tsi(seed: BetaSeed, beta_prev: Scalar, k: int, n: int) -> Scalar:
    """One step of the triple-sum route: ``beta(k,n)`` from ``beta(k,n-1)``:

    ``(alpha(n-1,n) beta(k,n-1) + alpha(n-1,k) t(n-1)) / alpha(n-1,n-1)``.
    """
    diag = seed.alpha(n - 1, n - 1)
    if diag == 0:
        raise ZeroDiagonal(f"alpha({n - 1},{n - 1}) = 0 in beta step ({k},{n})")
    return (seed.alpha(n - 1, n) * beta_prev + seed.alpha(n - 1, k) * seed.t(n - 1)) * reciprocal(diag)


def beta_closed_tsi(seed: BetaSeed, k: int, n: int) -> Scalar:
    """Closed form of the iterated step, for ``k <= n``:

    ``beta(k,n) = sum_{i=k+1}^{n} (alpha(i-1,k)/alpha(i-1,i-1))
                  * prod_{j=i+1}^{n} (alpha(j-1,j)/alpha(j-1,j-1)) * t(i-1)``.
    """
    if n < k:
        raise DomainError(f"beta_closed_tsi requires k <= n, got ({k},{n})")
    total: Scalar = 0
    for i in range(k + 1, n + 1):
        diag = seed.alpha(i - 1, i - 1)
        if diag == 0:
            raise ZeroDiagonal(f"alpha({i - 1},{i - 1}) = 0 in beta({k},{n})")
        coeff = seed.alpha(i - 1, k) * reciprocal(diag)
        for j in range(i + 1, n + 1):
            dj = seed.alpha(j - 1, j - 1)
            if dj == 0:
                raise ZeroDiagonal(f"alpha({j - 1},{j - 1}) = 0 in beta({k},{n})")
            coeff = coeff * seed.alpha(j - 1, j) * reciprocal(dj)
        total = total + coeff * seed.t(i - 1)
    return total


def _pair_beta_product(
    betas: Mapping[tuple[int, int], Scalar], k: int, n: int, i: int,
    max_gap: int | None = None,
) -> Scalar:
    out: Scalar = 1
    for j1, j2 in combinations(range(k, n + 1), 2):
        if j1 == i or j2 == i:
            continue
        if max_gap is not None and j2 - j1 > max_gap:
            continue
        try:
            out = out * betas[(j1, j2)]
        except KeyError:
            raise MissingBeta(f"beta({j1},{j2}) required but not yet determined") from None
    return out


def f_weight(
    alpha: Callable[[int, int], Scalar],
    betas: Mapping[tuple[int, int], Scalar],
    k: int, n: int, i: int,
) -> Scalar:
    """``f(k,n;i) = (-1)^{n-i} prod_{k<=j1<j2<=n, j1,j2 != i} beta(j1,j2)
    * prod_{j=k+1}^{n-1} alpha(j,i)``."""
    out = (-1) ** (n - i) * _pair_beta_product(betas, k, n, i)
    for j in range(k + 1, n):
        out = out * alpha(j, i)
    return out


def g_weight(
    alpha: Callable[[int, int], Scalar],
    betas: Mapping[tuple[int, int], Scalar],
    k: int, n: int, i: int,
) -> Scalar:
    """Like :func:`f_weight` but with pairs restricted to gap ``<= n-k-1``,
    so the unknown ``beta(k,n)`` is excluded: ``f(k,n;i) = g(k,n;i) beta(k,n)``
    for interior ``i``."""
    out = (-1) ** (n - i) * _pair_beta_product(betas, k, n, i, max_gap=n - k - 1)
    for j in range(k + 1, n):
        out = out * alpha(j, i)
    return out


def _with_seed_gap1(seed: BetaSeed, known: Mapping[tuple[int, int], Scalar], k: int, n: int) -> dict:
    betas = {(j, j + 1): seed.t(j) for j in range(k, n)}
    betas.update(known)
    return betas


def beta_from_inversion(
    seed: BetaSeed, k: int, n: int,
    known_betas: Mapping[tuple[int, int], Scalar],
) -> Scalar:
    """Window-delta route: solve the orthogonality constraint for ``beta(k,n)``:

    ``beta(k,n) = -(f(k,n;k) + f(k,n;n)) / sum_{i=k+1}^{n-1} g(k,n;i)``

    All ``beta(j1,j2)`` with ``j2 - j1 < n - k`` inside ``[k,n]`` must already
    be in ``known_betas`` (gap-1 values fall back to the seed).  A vanishing
    g-weight sum means the constraint does not determine ``beta(k,n)``; that
    is reported as :class:`~invrel.errors.ZeroDenominator`, not a crash.
    """
    if n - k < 2:
        raise DomainError(f"beta_from_inversion needs gap >= 2, got ({k},{n})")
    betas = _with_seed_gap1(seed, known_betas, k, n)
    num = f_weight(seed.alpha, betas, k, n, k) + f_weight(seed.alpha, betas, k, n, n)
    g_values = [g_weight(seed.alpha, betas, k, n, i) for i in range(k + 1, n)]
    den: Scalar = 0
    for g in g_values:
        den = den + g
    if den == 0:
        raise ZeroDenominator(k, n, g_values)
    return -num * reciprocal(den)


def beta_table_tsi(seed: BetaSeed, window: Window | None = None) -> dict[tuple[int, int], Scalar]:
    """All ``beta(k,n)`` for ``lo <= k < n <= hi`` via the triple-sum route."""
    lo, hi = check_window(window or seed.window)
    table: dict[tuple[int, int], Scalar] = {}
    for k in range(lo, hi):
        table[(k, k + 1)] = seed.t(k)
        for n in range(k + 2, hi + 1):
            table[(k, n)] = beta_step_tsi(seed, table[(k, n - 1)], k, n)
    return table


def beta_table_inversion(seed: BetaSeed, window: Window | None = None) -> dict[tuple[int, int], Scalar]:
    """All ``beta(k,n)`` for ``lo <= k < n <= hi`` via the window-delta route.

    Built bottom-up by gap, since each gap consumes every shorter one.
    """
    lo, hi = check_window(window or seed.window)
    table = {(k, k + 1): seed.t(k) for k in range(lo, hi)}
    for gap in range(2, hi - lo + 1):
        for k in range(lo, hi - gap + 1):
            table[(k, k + gap)] = beta_from_inversion(seed, k, k + gap, table)
    return table


def counterexample_discrepancies(k: int) -> tuple[Scalar, Scalar, Scalar]:
    """Gap-2/3/4 differences (delta-route minus triple-sum route) for the seed
    ``alpha(i,j) = i + j``, ``t(j) = j``, as exact rationals.

    The gap-2 difference is identically zero; the higher gaps are not, which
    is what makes the triple sum identity strictly stronger than
    delta-orthogonality of the induced pair.  Requires ``k >= 1`` so that no
    diagonal ``alpha(j,j) = 2j`` vanishes.
    """
    if k < 1:
        raise DomainError("counterexample seed needs k >= 1 (alpha(0,0) = 0)")
    seed = BetaSeed(
        alpha=lambda i, j: Fraction(i + j),
        t=lambda j: Fraction(j),
        window=(k, k + 4),
    )
    inv = beta_table_inversion(seed)
    return tuple(
        inv[(k, k + gap)] - beta_closed_tsi(seed, k, k + gap) for gap in (2, 3, 4)
    )


def _poly(coeffs_desc: tuple[int, ...], k: int) -> Fraction:
    out = Fraction(0)
    for c in coeffs_desc:
        out = out * k + c
    return out


def counterexample_reference(k: int) -> tuple[Fraction, Fraction, Fraction]:
    """Known closed forms of the three discrepancies, for cross-checking:

    gap 2: 0
    gap 3: (8k^3 + 32k^2 + 32k + 5) / (8k^3 + 36k^2 + 52k + 24)
    gap 4: (2k+7) / (8 (k+1)(k+2)(k+3)(2k+3)(2k+5)) * f(k)/g(k)

    with ``f`` of degree 11 and ``g`` of degree 7 as spelled out below.
    """
    gap3 = _poly((8, 32, 32, 5), k) / _poly((8, 36, 52, 24), k)
    f_num = _poly(
        (3072, 56320, 451904, 2085376, 6115168, 11884320,
         15498308, 13457624, 7592100, 2669648, 540883, 47328),
        k,
    )
    g_den = _poly((48, 544, 2452, 5656, 7216, 5232, 2175, 464), k)
    gap4 = (
        Fraction(2 * k + 7, 8 * (k + 1) * (k + 2) * (k + 3) * (2 * k + 3) * (2 * k + 5))
        * f_num
        / g_den
    )
    return Fraction(0), gap3, gap4
