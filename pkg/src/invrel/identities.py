"""Residual evaluators for the sum identities, plus divided differences.

The triple sum identity (TSI) for a kernel ``(alpha, beta)`` reads

    alpha(n,p) beta(q,k) + alpha(n,q) beta(k,p) + alpha(n,k) beta(p,q) = 0

for all integer quadruples.  For antisymmetric ``beta`` it is equivalent to
the quintuple sum identity (QSI) and to its anchored three-term special case
(first row index pinned to the anchor); the ``max_*`` sweeps below check all
three exhaustively over finite windows.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .errors import DomainError, DuplicateNodes
from .kernels import Kernel, Window, check_window
from .numerics import Scalar, reciprocal


def tsi_residual(kernel: Kernel, n: int, k: int, p: int, q: int) -> Scalar:
    """``alpha(n,p) beta(q,k) + alpha(n,q) beta(k,p) + alpha(n,k) beta(p,q)``."""
    a, b = kernel.alpha, kernel.beta
    return a(n, p) * b(q, k) + a(n, q) * b(k, p) + a(n, k) * b(p, q)


def anchored_tsi_residual(kernel: Kernel, x: int, p: int, y: int) -> Scalar:
    """Triple sum with the free row index anchored at ``p``:

    ``alpha(p,x) beta(y,p) + alpha(p,y) beta(p,x) + alpha(p,p) beta(x,y)``

    Equals ``tsi_residual(kernel, p, p, x, y)`` term for term.
    """
    a, b = kernel.alpha, kernel.beta
    return a(p, x) * b(y, p) + a(p, y) * b(p, x) + a(p, p) * b(x, y)


def qsi_residual(kernel: Kernel, x: int, y: int, p: int, q: int) -> Scalar:
    """Five-term quintuple sum, two positive and three negative terms:

    ``alpha(x,p) alpha(p,y) beta(x,p) beta(q,y)
      + alpha(x,p) alpha(p,x) beta(q,y) beta(p,y)
      - alpha(x,y) alpha(p,y) beta(x,p) beta(q,p)
      - alpha(x,y) alpha(p,q) beta(x,p) beta(p,y)
      - alpha(x,x) alpha(p,p) beta(q,y) beta(p,y)``
    """
    a, b = kernel.alpha, kernel.beta
    return (
        a(x, p) * a(p, y) * b(x, p) * b(q, y)
        + a(x, p) * a(p, x) * b(q, y) * b(p, y)
        - a(x, y) * a(p, y) * b(x, p) * b(q, p)
        - a(x, y) * a(p, q) * b(x, p) * b(p, y)
        - a(x, x) * a(p, p) * b(q, y) * b(p, y)
    )


def _max_over(values) -> Scalar:
    worst: Scalar = 0
    for v in values:
        if abs(v) > abs(worst):
            worst = v
    return worst


def max_tsi_residual(kernel: Kernel, window: Window) -> Scalar:
    """Largest-magnitude TSI residual over all quadruples in ``window^4``."""
    lo, hi = check_window(window)
    idx = range(lo, hi + 1)
    return _max_over(
        tsi_residual(kernel, n, k, p, q) for n, k, p, q in product(idx, repeat=4)
    )


def max_anchored_tsi_residual(kernel: Kernel, window: Window) -> Scalar:
    """Largest-magnitude anchored residual over all triples in ``window^3``."""
    lo, hi = check_window(window)
    idx = range(lo, hi + 1)
    return _max_over(
        anchored_tsi_residual(kernel, x, p, y) for x, p, y in product(idx, repeat=3)
    )


def max_qsi_residual(kernel: Kernel, window: Window) -> Scalar:
    """Largest-magnitude QSI residual over all quadruples in ``window^4``."""
    lo, hi = check_window(window)
    idx = range(lo, hi + 1)
    return _max_over(
        qsi_residual(kernel, x, y, p, q) for x, y, p, q in product(idx, repeat=4)
    )


@dataclass(frozen=True)
class DividedDifferenceProblem:
    """Pairwise-distinct nodes plus a polynomial.

    The polynomial is given either as ``coeffs`` (ascending powers) or as
    ``shifts`` ``(a_1, ..., a_d)`` for the product form ``prod_j (x + a_j)``;
    the product form is kept separate because the vanishing statement below
    is naturally posed for it.  With ``n + 1`` nodes, any polynomial of
    degree ``< n`` has divided difference zero.
    """

    nodes: tuple[Scalar, ...]
    coeffs: tuple[Scalar, ...] | None = None
    shifts: tuple[Scalar, ...] | None = None

    def __post_init__(self):
        object.__setattr__(self, "nodes", tuple(self.nodes))
        if self.coeffs is not None:
            object.__setattr__(self, "coeffs", tuple(self.coeffs))
        if self.shifts is not None:
            object.__setattr__(self, "shifts", tuple(self.shifts))
        if (self.coeffs is None) == (self.shifts is None):
            raise DomainError("supply exactly one of coeffs or shifts")
        if not self.nodes:
            raise DomainError("at least one node required")
        seen = list(self.nodes)
        for i, xi in enumerate(seen):
            for xj in seen[i + 1 :]:
                if xi == xj:
                    raise DuplicateNodes(f"node {xi!r} repeated")

    @property
    def degree(self) -> int:
        if self.shifts is not None:
            return len(self.shifts)
        deg = -1
        for i, c in enumerate(self.coeffs):
            if c != 0:
                deg = i
        return deg

    def h(self, x: Scalar) -> Scalar:
        """Evaluate the polynomial at ``x``."""
        if self.shifts is not None:
            out: Scalar = 1
            for a in self.shifts:
                out = out * (x + a)
            return out
        out = 0
        for c in reversed(self.coeffs):
            out = out * x + c
        return out


def divided_difference(problem: DividedDifferenceProblem) -> Scalar:
    """Recursive divided difference ``[x_0, ..., x_n]H`` via the standard table:

    ``[x_0]H = H(x_0)`` and
    ``[x_0..x_n]H = ([x_0..x_{n-1}]H - [x_1..x_n]H) / (x_0 - x_n)``.
    """
    nodes = problem.nodes
    vals = [problem.h(x) for x in nodes]
    n = len(nodes) - 1
    for level in range(1, n + 1):
        for i in range(n - level + 1):
            vals[i] = (vals[i] - vals[i + 1]) * reciprocal(nodes[i] - nodes[i + level])
    return vals[0]


def divided_difference_sum(problem: DividedDifferenceProblem) -> Scalar:
    """Explicit form ``sum_i H(x_i) / prod_{j != i} (x_i - x_j)``.

    Exactly zero whenever ``deg H < len(nodes) - 1``; always equal to the
    recursive form.
    """
    nodes = problem.nodes
    total: Scalar = 0
    for i, xi in enumerate(nodes):
        den: Scalar = 1
        for j, xj in enumerate(nodes):
            if j != i:
                den = den * (xi - xj)
        total = total + problem.h(xi) * reciprocal(den)
    return total
