"""Orthogonal polynomials underlying the Laguerre evolution kernel.

Laguerre, Jacobi and Legendre polynomials are evaluated through their
three-term recurrences, which are stable on the orthogonality interval.
The explicit binomial sums are kept as exact rational cross-checks: they
suffer catastrophic cancellation in floating point at high degree, so
they are never used on the hot path.

The normalized Jacobi function ``g_n^{(a,b)}`` carries the weight and
Gamma-ratio factors that keep it uniformly bounded; for ``b = 0`` the
Gamma ratio collapses to 1 and the whole function stays in ``[-1, 1]``,
which is what makes it the numerically safe carrier of the kernel
modulus.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

__all__ = [
    "PolyIndex",
    "ExactPoly",
    "GValue",
    "laguerre_eval",
    "laguerre_table",
    "laguerre_exact",
    "jacobi_eval",
    "jacobi_exact_sum",
    "legendre_eval",
    "legendre_table",
    "g_eval",
    "g_beta0_iter",
    "g_beta0_table",
    "hyp2f1_terminating",
    "inequality_grid",
]


@dataclass(frozen=True)
class PolyIndex:
    """Degree and (integer) Jacobi parameters of a polynomial."""

    n: int
    alpha: int = 0
    beta: int = 0

    def __post_init__(self):
        if self.n < 0 or self.alpha < 0 or self.beta < 0:
            raise ValueError(f"indices must be nonnegative, got {self}")


@dataclass(frozen=True)
class ExactPoly:
    """Polynomial with exact rational coefficients, coeffs[k] ~ z**k."""

    coeffs: tuple

    def __post_init__(self):
        if len(self.coeffs) > 1 and self.coeffs[-1] == 0:
            raise ValueError("leading coefficient must be nonzero")

    @property
    def degree(self):
        return len(self.coeffs) - 1

    def __call__(self, z):
        """Horner evaluation in the arithmetic of ``z`` (exact for Fraction)."""
        acc = self.coeffs[-1]
        for c in reversed(self.coeffs[:-1]):
            acc = acc * z + c
        return acc


@dataclass(frozen=True)
class GValue:
    """Value of the weight-normalized Jacobi function at a point."""

    value: float
    x: float


def laguerre_eval(n, x):
    """Laguerre polynomial ``L_n(x)`` by upward recurrence.

    Accepts real or complex scalars and numpy arrays.
    """
    if n < 0:
        raise ValueError("degree must be nonnegative")
    if n == 0:
        return np.ones_like(x) if isinstance(x, np.ndarray) else 1.0
    prev = np.ones_like(x) if isinstance(x, np.ndarray) else 1.0
    cur = 1.0 - x
    for k in range(1, n):
        prev, cur = cur, ((2 * k + 1 - x) * cur - k * prev) / (k + 1)
    return cur


def laguerre_table(nmax, x):
    """Array of ``L_0(x) .. L_nmax(x)``; first axis is the degree."""
    x = np.asarray(x)
    out = np.empty((nmax + 1,) + x.shape, dtype=x.dtype)
    out[0] = 1.0
    if nmax >= 1:
        out[1] = 1.0 - x
    for k in range(1, nmax):
        out[k + 1] = ((2 * k + 1 - x) * out[k] - k * out[k - 1]) / (k + 1)
    return out


def laguerre_exact(n):
    """Exact coefficients of ``L_n``: ``binom(n, k) (-1)^k / k!``."""
    if n < 0:
        raise ValueError("degree must be nonnegative")
    coeffs = tuple(
        Fraction((-1) ** k * math.comb(n, k), math.factorial(k)) for k in range(n + 1)
    )
    return ExactPoly(coeffs)


def _jacobi_p1(alpha, beta, x):
    return 0.5 * ((alpha - beta) + (alpha + beta + 2) * x)


def jacobi_eval(idx: PolyIndex, x):
    """Jacobi polynomial ``P_n^{(alpha,beta)}(x)`` by the degree recurrence."""
    n, a, b = idx.n, idx.alpha, idx.beta
    if n == 0:
        return 1.0
    prev = 1.0
    cur = _jacobi_p1(a, b, x)
    for k in range(2, n + 1):
        s = 2 * k + a + b
        c1 = 2 * k * (k + a + b) * (s - 2)
        c2 = (s - 1) * (s * (s - 2) * x + a * a - b * b)
        c3 = 2 * (k + a - 1) * (k + b - 1) * s
        prev, cur = cur, (c2 * cur - c3 * prev) / c1
    return cur


def jacobi_exact_sum(n, m, z):
    """Exact rational ``P_n^{(m-n,0)}(z)`` by the explicit binomial sum.

    Requires ``n <= m``; ``z`` is coerced to an exact Fraction.  The sum
    is accumulated in integer arithmetic over the common denominator
    ``(2 den(z))^n`` so high degrees stay cheap.
    """
    if n > m:
        raise ValueError(f"requires n <= m, got n={n}, m={m}")
    z = Fraction(z)
    p, q = z.numerator, z.denominator
    acc = 0
    for k in range(n + 1):
        acc += math.comb(m, n - k) * math.comb(n, k) * (p - q) ** k * (p + q) ** (n - k)
    return Fraction(acc, (2 * q) ** n)


def legendre_eval(n, x):
    """Legendre polynomial ``P_n(x)`` by the three-term recurrence."""
    if n == 0:
        return np.ones_like(x) if isinstance(x, np.ndarray) else 1.0
    prev = np.ones_like(x) if isinstance(x, np.ndarray) else 1.0
    cur = x
    for k in range(2, n + 1):
        prev, cur = cur, ((2 * k - 1) * x * cur - (k - 1) * prev) / k
    return cur


def legendre_table(nmax, x):
    """Array of ``P_0(x) .. P_nmax(x)``; first axis is the degree."""
    x = np.asarray(x, dtype=float)
    out = np.empty((nmax + 1,) + x.shape)
    out[0] = 1.0
    if nmax >= 1:
        out[1] = x
    for k in range(2, nmax + 1):
        out[k] = ((2 * k - 1) * x * out[k - 1] - (k - 1) * out[k - 2]) / k
    return out


def g_eval(idx: PolyIndex, x):
    """Weight-normalized Jacobi function.

    ``g_n^{(a,b)}(x) = (Gamma(n+1)Gamma(n+a+b+1) / (Gamma(n+a+1)Gamma(n+b+1)))^{1/2}
    ((1-x)/2)^{a/2} ((1+x)/2)^{b/2} P_n^{(a,b)}(x)``.

    The Gamma ratio is accumulated in log space; for ``b = 0`` it equals 1
    exactly and ``|g| <= 1`` on ``[-1, 1]``.
    """
    n, a, b = idx.n, idx.alpha, idx.beta
    if b == 0:
        log_ratio = 0.0
    else:
        log_ratio = (
            math.lgamma(n + 1)
            + math.lgamma(n + a + b + 1)
            - math.lgamma(n + a + 1)
            - math.lgamma(n + b + 1)
        )
    half_minus = 0.5 * (1.0 - x)
    half_plus = 0.5 * (1.0 + x)
    weight = half_minus ** (0.5 * a) * half_plus ** (0.5 * b)
    value = math.exp(0.5 * log_ratio) * weight * jacobi_eval(idx, x)
    return GValue(value=value, x=x)


def g_beta0_iter(x, alphas, max_degree):
    """Yield ``(k, g_k^{(alpha,0)}(x))`` for ``k = 0..max_degree``.

    ``alphas`` and ``x`` are broadcast against each other, so a column of
    alphas against a row grid of x scans a whole family at once.  The
    weight ``((1-x)/2)^{alpha/2}`` is folded into the seed of the degree
    recurrence: every intermediate is itself a g-value and stays in
    ``[-1, 1]``, so no overflow occurs no matter how large alpha gets.
    Seeds below the double-precision floor flush to zero, which only
    affects entries that are themselves below ~1e-300.
    """
    a = np.asarray(alphas, dtype=float)
    x = np.asarray(x, dtype=float)
    half_minus = 0.5 * (1.0 - x)
    with np.errstate(divide="ignore", over="ignore", under="ignore"):
        logw = 0.5 * a * np.log(half_minus)
        cur = np.exp(np.broadcast_to(logw, np.broadcast_shapes(a.shape, x.shape)))
    cur = np.where(half_minus == 0.0, np.where(a == 0.0, 1.0, 0.0), cur)
    yield 0, cur
    if max_degree == 0:
        return
    prev = cur
    cur = cur * 0.5 * ((a + 2) * x + a)
    yield 1, cur
    for k in range(2, max_degree + 1):
        s = 2 * k + a
        c1 = 2 * k * (k + a) * (s - 2)
        c2 = (s - 1) * (s * (s - 2) * x + a * a)
        c3 = 2 * (k + a - 1) * (k - 1) * s
        prev, cur = cur, (c2 * cur - c3 * prev) / c1
        yield k, cur


def g_beta0_table(x, max_degree, n_alpha):
    """Table ``G[k, a] = g_k^{(a,0)}(x)`` for scalar ``x``."""
    alphas = np.arange(n_alpha, dtype=float)
    table = np.empty((max_degree + 1, n_alpha))
    for k, row in g_beta0_iter(float(x), alphas, max_degree):
        table[k] = row
    return table


def hyp2f1_terminating(n, m, z):
    """Terminating hypergeometric sum ``2F1(-n, -m; -n-m; z)``.

    The series stops at ``k = min(n, m)``; the lower parameter never
    vanishes on the summed range.  Exact when ``z`` is a Fraction; the
    float path loses digits for large ``z`` (small-t kernel queries go
    through the exact path instead).
    """
    if n < 0 or m < 0:
        raise ValueError("parameters must be nonnegative")
    if n == 0 or m == 0:
        return z * 0 + 1 if isinstance(z, Fraction) else complex(1.0)
    kmax = min(n, m)
    term = z * 0 + 1 if isinstance(z, Fraction) else complex(1.0)
    acc = term
    for k in range(1, kmax + 1):
        if isinstance(z, Fraction):
            ratio = Fraction((-n + k - 1) * (-m + k - 1), (-n - m + k - 1) * k)
        else:
            ratio = (-n + k - 1) * (-m + k - 1) / ((-n - m + k - 1) * k)
        term = term * ratio * z
        acc = acc + term
    return acc


def inequality_grid(n_uniform=1001, n_chebyshev=1001):
    """Scan grid on [-1, 1]: uniform points plus Chebyshev points.

    Extrema of Jacobi polynomials cluster near the endpoints, which the
    Chebyshev nodes resolve.
    """
    uniform = np.linspace(-1.0, 1.0, n_uniform)
    cheb = np.cos(np.pi * np.arange(n_chebyshev) / (n_chebyshev - 1))
    return np.unique(np.concatenate([uniform, cheb]))
