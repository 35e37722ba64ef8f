"""Counting sequences and limit laws for rooted planar maps.

Everything here is exact: ``m_n``, the bivariate series ``M(z, u)`` of maps
by edges and root-face valency, the pure-polygon series ``F_ell(z)``, the
limiting pure-polygon probabilities ``xi_ell``, the limiting root-face
valency law ``p*_k`` and the local pattern probability.
"""

from __future__ import annotations

import math
import threading
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .errors import UnsupportedValency
from .maps import CombinatorialMap, PatternDescriptor, descriptor
from .series import UPoly, UZSeries, ZSeries, binomial, divide_exact, sqrt_series

DEFAULT_ORDER = 30

_ONE_MINUS_U = UPoly([1, -1])


def m_count(n: int) -> int:
    """Number of rooted planar maps with ``n`` edges: ``2 (2n)! 3^n / ((n+2)! n!)``."""
    if n < 0:
        raise ValueError("n must be non-negative")
    return 2 * math.factorial(2 * n) * 3**n // (math.factorial(n + 2) * math.factorial(n))


class _BivariateCache:
    """Rows ``[z^n] M(z, u)`` grown on demand, shared between callers."""

    def __init__(self):
        self._rows: list[UPoly] = [UPoly([1])]
        self._lock = threading.Lock()

    def rows(self, order: int) -> list[UPoly]:
        with self._lock:
            while len(self._rows) <= order:
                self._rows.append(self._next_row())
            return self._rows[: order + 1]

    def _next_row(self) -> UPoly:
        # One pass of  M <- 1 + z u^2 M^2 + z u (M(z,1) - u M(z,u)) / (1 - u)
        # fixes the next coefficient; the lower ones are already exact.
        rows = self._rows
        n = len(rows)
        square = UPoly()
        for i in range(n):
            j = n - 1 - i
            if j < i:
                break
            term = rows[i] * rows[j]
            square = square + (term if i == j else term * 2)
        prev = rows[n - 1]
        numer = UPoly([prev(1)]) - prev.shift(1)
        catalytic = divide_exact(numer, _ONE_MINUS_U)
        return square.shift(2) + catalytic.shift(1)


_BIVARIATE = _BivariateCache()


def M_bivariate(N: int = DEFAULT_ORDER) -> UZSeries:
    """``M(z, u)`` to order ``z^N`` by fixed-point iteration of Tutte's equation.

    The iteration starts at the constant series 1; pass ``n`` makes the
    coefficient of ``z^n`` exact, and each pass only has to compute that new
    coefficient.  The division by ``1 - u`` must leave no remainder.
    """
    if N < 0:
        raise ValueError("N must be non-negative")
    return UZSeries(_BIVARIATE.rows(N), N)


def M_univariate(N: int = DEFAULT_ORDER) -> ZSeries:
    """``M(z, 1)`` read off the bivariate series."""
    return M_bivariate(N).at_u(1)


def M_closed_form(N: int = DEFAULT_ORDER) -> ZSeries:
    """``M(z, 1) = (18z - 1 + (1 - 12z)^(3/2)) / (54 z^2)`` expanded to order ``N``.

    Independent of the functional equation; used as a cross-check.
    """
    w = N + 2
    one_minus = ZSeries([1, -12], w)
    root = sqrt_series(one_minus)
    numer = ZSeries([-1, 18], w) + one_minus * root
    return divide_exact(numer, ZSeries.monomial(2, w, 54))


@dataclass(frozen=True)
class CountTable:
    """``m_{n,k}``: maps with ``n`` edges and root-face valency ``k``."""

    values: tuple[tuple[int, ...], ...]

    @classmethod
    def from_series(cls, M: UZSeries) -> "CountTable":
        rows = []
        for n, p in enumerate(M.coefficients):
            row = [int(c) for c in p.coefficients] or [0]
            if any(c.denominator != 1 or c < 0 for c in p.coefficients):
                raise ValueError(f"non-integral count in row {n}")
            rows.append(tuple(row))
        return cls(tuple(rows))

    def __getitem__(self, nk: tuple[int, int]) -> int:
        n, k = nk
        row = self.values[n]
        return row[k] if 0 <= k < len(row) else 0

    def row(self, n: int) -> tuple[int, ...]:
        return self.values[n]

    def total(self, n: int) -> int:
        return sum(self.values[n])


def count_table(N: int = DEFAULT_ORDER) -> CountTable:
    return CountTable.from_series(M_bivariate(N))


def star_insertion(P: UPoly, ell: int) -> Fraction:
    """``1/(ell-1)! d^{ell-1}/du^{ell-1} [u^{ell-1} P(u)]`` at ``u = 1``."""
    q = P.shift(ell - 1)
    for _ in range(ell - 1):
        q = q.derivative()
    return q(1) / math.factorial(ell - 1)


@lru_cache(maxsize=None)
def F_ell(ell: int, N: int = DEFAULT_ORDER) -> ZSeries:
    """Series of ``f_{ell,n}``: maps with ``n`` edges whose root face is a pure ``ell``-gon.

    Obtained from ``M(z, u)`` by the star-insertion operator
    ``z^ell / (ell-1)! d^{ell-1}/du^{ell-1} u^{ell-1} M(z, u) |_{u=1}``.
    """
    if ell < 2:
        raise UnsupportedValency(f"pure polygons need ell >= 2, got {ell}")
    if N < 0:
        raise ValueError("N must be non-negative")
    if N < ell:
        return ZSeries([], N)
    M = M_bivariate(N - ell)
    inner = ZSeries([star_insertion(p, ell) for p in M.coefficients])
    return inner.shift(ell)


@lru_cache(maxsize=None)
def xi_double_sum(ell: int) -> Fraction:
    """Limiting probability that the root face is a pure ``ell``-gon, as a finite double sum."""
    if ell < 2:
        raise UnsupportedValency(f"pure polygons need ell >= 2, got {ell}")
    total = Fraction(0)
    for j in range(ell):
        bj = binomial(Fraction(-3, 2), j) * (-5) ** j
        for i in range(ell - j):
            total += (
                math.comb(ell, ell - 1 - i - j)
                * binomial(Fraction(-1, 2), i)
                * Fraction(1, 3**i)
                * bj
            )
    return total / 12**ell


def xi(ell: int, check: bool = True) -> Fraction:
    """``xi_ell`` from the double sum, confirmed against ``kappa_{ell,3} / a_3``."""
    value = xi_double_sum(ell)
    if check:
        from .asymptotics import xi_from_kappa

        other = xi_from_kappa(ell)
        if other != value:
            raise ArithmeticError(f"xi_{ell}: double sum {value} != kappa route {other}")
    return value


@lru_cache(maxsize=None)
def _p_star_table(K: int) -> tuple[Fraction, ...]:
    # p(u) = u/12 * sum C(2i,i) (-u/8)^i * sum C(2j,j) (2j+1) (5u/24)^j
    a = [math.comb(2 * i, i) * Fraction(-1, 8) ** i for i in range(K)]
    b = [math.comb(2 * j, j) * (2 * j + 1) * Fraction(5, 24) ** j for j in range(K)]
    out = [Fraction(0)]
    for k in range(1, K + 1):
        s = sum(a[i] * b[k - 1 - i] for i in range(k))
        out.append(s / 12)
    return tuple(out)


def p_star(k: int) -> Fraction:
    """Limiting probability that the root face has valency ``k``."""
    if k < 1:
        raise ValueError("k must be positive")
    return _p_star_table(max(k, 64))[k]


def p_star_series(K: int) -> ZSeries:
    """``sum_{k<=K} p*_k u^k`` as an exact series."""
    return ZSeries(_p_star_table(max(K, 1))[: K + 1], K)


def local_pattern_probability(pattern: CombinatorialMap | PatternDescriptor) -> Fraction:
    """Limiting probability ``xi_ell * 12^{s-k}`` that ``pattern`` occurs at the root."""
    d = pattern if isinstance(pattern, PatternDescriptor) else descriptor(pattern)
    if d.ell < 2:
        raise UnsupportedValency("patterns with root-face valency 1 are not supported")
    return xi(d.ell) * Fraction(12) ** (d.outer_edges - d.inner_edges)
