"""Singular expansions at ``z = 1/12`` and coefficient asymptotics.

Expansions are kept in the variable ``Z = (1 - 12 z)^(1/2)``: a
:class:`PuiseuxExpansion` stores the rational coefficient of ``Z^i`` at index
``i``, so integer and half-integer powers of ``1 - 12z`` sit at even and odd
indices respectively.  The coefficient functions ``a_i(u)`` of
``M(z, u) = sum_i a_i(u) Z^i`` are truncated series in ``v = u - 1``.

Floating point appears only in :func:`transfer_asymptotic` and
:func:`transfer_coefficient`.
"""

from __future__ import annotations

import math
import threading
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from .errors import BranchSelectionFailure, InsufficientOrder, UnsupportedValency
from .maps import CombinatorialMap, PatternDescriptor, descriptor
from .series import ZSeries, binomial, divide_exact, sqrt_series

VSeries = ZSeries

_A3 = Fraction(8, 3)


class PuiseuxExpansion:
    """Truncated ``sum_{i<=order} c_i (1 - 12z)^{i/2}`` with rational ``c_i``."""

    __slots__ = ("_s",)

    def __init__(self, coeffs: Sequence, order: int | None = None):
        self._s = ZSeries(coeffs, order)

    @classmethod
    def _wrap(cls, s: ZSeries) -> "PuiseuxExpansion":
        obj = cls.__new__(cls)
        obj._s = s
        return obj

    @classmethod
    def z_power(cls, k: int, order: int) -> "PuiseuxExpansion":
        """``z^k = 12^{-k} (1 - Z^2)^k`` for any integer ``k``."""
        base = ZSeries([1, 0, -1], order)
        return cls._wrap((base**k) * (Fraction(1, 12) ** k))

    @property
    def order(self) -> int:
        return self._s.order

    @property
    def coefficients(self) -> tuple[Fraction, ...]:
        return self._s.coefficients

    def __getitem__(self, i: int) -> Fraction:
        return self._s[i]

    def __len__(self) -> int:
        return len(self._s)

    def __eq__(self, other) -> bool:
        if isinstance(other, PuiseuxExpansion):
            return self._s == other._s
        return NotImplemented

    def __repr__(self) -> str:
        terms = " + ".join(f"({c})Z^{i}" for i, c in enumerate(self.coefficients) if c)
        return f"PuiseuxExpansion({terms or '0'}; order={self.order})"

    def __add__(self, other: "PuiseuxExpansion") -> "PuiseuxExpansion":
        return PuiseuxExpansion._wrap(self._s + other._s)

    def __sub__(self, other: "PuiseuxExpansion") -> "PuiseuxExpansion":
        return PuiseuxExpansion._wrap(self._s - other._s)

    def __mul__(self, other) -> "PuiseuxExpansion":
        if isinstance(other, PuiseuxExpansion):
            return PuiseuxExpansion._wrap(self._s * other._s)
        return PuiseuxExpansion._wrap(self._s * other)

    __rmul__ = __mul__

    def truncate(self, order: int) -> "PuiseuxExpansion":
        return PuiseuxExpansion._wrap(self._s.truncate(order))

    def euler_operator(self) -> "PuiseuxExpansion":
        """Expansion of ``2 z d/dz f``; loses two orders.

        With ``dZ/dz = -6/Z`` the coefficient of ``Z^m`` becomes
        ``m c_m - (m + 2) c_{m+2}``.  Requires ``c_1 = 0``.
        """
        c = self.coefficients
        if len(c) > 1 and c[1]:
            raise ValueError("2z d/dz of an expansion with a Z^1 term has a Z^-1 term")
        if self.order < 2:
            raise InsufficientOrder("need order >= 2 to apply 2z d/dz")
        return PuiseuxExpansion([m * c[m] - (m + 2) * c[m + 2] for m in range(self.order - 1)])


# --- a_i(u) as series in v = u - 1 -----------------------------------------


def m1_expansion(order: int) -> PuiseuxExpansion:
    """``M(z, 1) = (18z - 1 + Z^3) / (54 z^2)`` rewritten in ``Z``, with ``z = (1 - Z^2)/12``."""
    w = order
    z = ZSeries([Fraction(1, 12), 0, Fraction(-1, 12)], w)
    numer = z * 18 - 1 + ZSeries.monomial(3, w)
    return PuiseuxExpansion._wrap(divide_exact(numer, z * z * 54))


class _ACache:
    def __init__(self):
        self._store: dict[tuple[int, int], tuple[VSeries, ...]] = {}
        self._lock = threading.Lock()

    def get(self, max_i: int, order_v: int) -> tuple[VSeries, ...]:
        with self._lock:
            for (mi, ov), val in self._store.items():
                if mi >= max_i and ov >= order_v:
                    return tuple(s.truncate(order_v) for s in val[: max_i + 1])
        val = _solve_a(max_i, order_v)
        with self._lock:
            self._store[(max_i, order_v)] = val
        return val


def _select_a0(c2: VSeries, c1: VSeries, c0: VSeries, order_v: int) -> VSeries:
    # c2 has zero constant term; exactly one root is analytic at v = 0.
    disc = c1 * c1 - c2 * c0 * 4
    root = sqrt_series(disc)
    c2v = divide_exact(c2, ZSeries.monomial(1, c2.order))
    for sign in (1, -1):
        numer = -c1 + root * sign
        if numer[0] != 0:
            continue
        numer_v = divide_exact(numer, ZSeries.monomial(1, numer.order))
        a0 = divide_exact(numer_v, c2v * 2)
        if a0[0] == Fraction(4, 3):
            return a0.truncate(order_v)
    raise BranchSelectionFailure("no root of the constant-order equation has a_0(1) = 4/3")


def _solve_a(max_i: int, order_v: int) -> tuple[VSeries, ...]:
    w = order_v + 1
    v = ZSeries.monomial(1, w)
    u = v + 1
    u2 = u * u
    A = m1_expansion(max_i + 2).coefficients
    twelfth = Fraction(1, 12)

    # Constant order in Z of (1-u)M = (1-u) + z u^2 (1-u) M^2 + z u M1 - z u^2 M:
    # c2 a0^2 + c1 a0 + c0 = 0.
    c2 = u2 * v * twelfth
    c1 = u2 * twelfth - v
    c0 = v - u * (A[0] * twelfth)
    a = [_select_a0(c2, c1, c0, order_v)]
    lin = u2 * v * a[0] * Fraction(1, 6) + u2 * twelfth - v
    zero = ZSeries([], w)

    def coef(seq, j):
        return seq[j] if 0 <= j < len(seq) else zero

    def square_coef(j, skip_a0):
        s = zero
        lo = 1 if skip_a0 else 0
        for t in range(lo, j + 1 - lo):
            s = s + a[t] * a[j - t]
        return s

    for i in range(1, max_i + 1):
        Ai = A[i] - (A[i - 2] if i >= 2 else 0)
        rest = (
            u2 * v * (square_coef(i, True) - (square_coef(i - 2, False) if i >= 2 else zero)) * twelfth
            - u * (Ai * twelfth)
            - u2 * coef(a, i - 2) * twelfth
        )
        a.append(divide_exact(-rest, lin))
    return tuple(s.truncate(order_v) for s in a)


_A_CACHE = _ACache()


def a_series(max_i: int, order_v: int) -> tuple[VSeries, ...]:
    """``(a_0(u), ..., a_{max_i}(u))`` as series in ``v = u - 1`` to order ``order_v``.

    Substitutes ``z = (1 - Z^2)/12`` and the ``Z``-expansion of ``M(z, 1)`` into
    Tutte's equation and equates powers of ``Z``.  Order 0 is quadratic and
    the root with ``a_0(1) = 4/3`` is taken; higher orders are linear.
    """
    if max_i < 0 or order_v < 0:
        raise ValueError("indices must be non-negative")
    return _A_CACHE.get(max_i, order_v)


def a_coeff(i: int, order_v: int) -> VSeries:
    return a_series(i, order_v)[i]


def a0_closed_form(order_v: int) -> VSeries:
    """``(-3u^2 + 36u - 36 + sqrt(3(u+2)(6-5u)^3)) / (6u^2(u-1))`` in ``v``."""
    w = order_v + 1
    u = ZSeries([1, 1], w)
    rad = sqrt_series(u.__add__(2) * 3 * (ZSeries([6], w) - u * 5) ** 3)
    numer = u * u * (-3) + u * 36 - 36 + rad
    denom = u * u * 6 * ZSeries.monomial(1, w)
    return divide_exact(numer, denom).truncate(order_v)


def a3_closed_form(order_v: int) -> VSeries:
    """``8u / sqrt(3(u+2)(6-5u)^3)`` in ``v``."""
    u = ZSeries([1, 1], order_v)
    rad = sqrt_series((u + 2) * 3 * (ZSeries([6], order_v) - u * 5) ** 3)
    return divide_exact(u * 8, rad)


# --- pure-polygon expansions -------------------------------------------------


def _star_functional(s: VSeries, ell: int) -> Fraction:
    # 1/(ell-1)! d^{ell-1}/du^{ell-1} [u^{ell-1} s(u)] at u=1  ==  [v^{ell-1}] (1+v)^{ell-1} s(v)
    n = ell - 1
    return sum((math.comb(n, t) * s[n - t] for t in range(n + 1)), Fraction(0))


@lru_cache(maxsize=None)
def kappa_expansion(ell: int, max_i: int) -> PuiseuxExpansion:
    """Singular expansion ``F_ell(z) = sum_i kappa_{ell,i} (1 - 12z)^{i/2}``."""
    if ell < 2:
        raise UnsupportedValency(f"pure polygons need ell >= 2, got {ell}")
    a = a_series(max_i, ell - 1)
    b = [_star_functional(s, ell) for s in a]
    scale = Fraction(1, 12**ell)
    out = []
    for i in range(max_i + 1):
        acc = Fraction(0)
        for p in range(min(ell, i // 2) + 1):
            acc += math.comb(ell, p) * (-1) ** p * b[i - 2 * p]
        out.append(acc * scale)
    return PuiseuxExpansion(out)


def kappa(ell: int, i: int) -> Fraction:
    return kappa_expansion(ell, max(i, 5))[i]


def xi_from_kappa(ell: int) -> Fraction:
    """``kappa_{ell,3} / a_3`` with ``a_3 = 8/3``."""
    return kappa(ell, 3) / _A3


# --- occurrence expansions ---------------------------------------------------


def _desc(m) -> PatternDescriptor:
    d = m if isinstance(m, PatternDescriptor) else descriptor(m)
    if d.ell < 2:
        raise UnsupportedValency("patterns with root-face valency 1 are not supported")
    return d


def singular_F(m, max_i: int = 5) -> PuiseuxExpansion:
    """Expansion of ``z^{k-s} F_ell(z)``; its coefficients are the shifted kappas."""
    d = _desc(m)
    return PuiseuxExpansion.z_power(d.k - d.s, max_i) * kappa_expansion(d.ell, max_i)


def singular_T(m, max_i: int = 5) -> PuiseuxExpansion:
    """Expansion ``sum tau_i (1-12z)^{i/2}`` of the marked-pattern series."""
    d = _desc(m)
    F = singular_F(d, max_i + 2)
    T = (F.euler_operator() - F.truncate(max_i) * d.inner_valency_sum) * Fraction(1, d.rotational_count)
    kt = F.coefficients
    R = d.rotational_count
    if kt[1] != 0:
        raise ArithmeticError("shifted kappa_1 must vanish")
    if kt[3] != Fraction(12) ** (d.s - d.k) * kappa(d.ell, 3):
        raise ArithmeticError("shifted kappa_3 disagrees with 12^(s-k) kappa_{ell,3}")
    if max_i >= 1 and T[1] != -3 * kt[3] / R:
        raise ArithmeticError("tau_1 disagrees with -3 kappa~_3 / |R|")
    if max_i >= 3 and T[3] != (-5 * kt[5] + (3 - d.inner_valency_sum) * kt[3]) / R:
        raise ArithmeticError("tau_3 disagrees with the closed formula")
    return T


def insertion_factor(omega: int, max_i: int) -> PuiseuxExpansion:
    """Expansion of ``z^{-omega} F_omega(z)``."""
    if omega < 2:
        raise UnsupportedValency(f"cannot insert into an inner face of valency {omega}")
    return PuiseuxExpansion.z_power(-omega, max_i) * kappa_expansion(omega, max_i)


def rho3_by_formula(tau: PuiseuxExpansion, omegas: Sequence[int]) -> Fraction:
    """``rho_3`` from the published shortcut formula (product rule, kappa_2/kappa_0 terms)."""
    prod = Fraction(1)
    ratio = Fraction(0)
    for om in omegas:
        prod *= Fraction(12) ** om * kappa(om, 0)
        ratio += kappa(om, 2) / kappa(om, 0)
    return tau[1] * prod * ratio + tau[3] * prod


def rho3_by_product_rule(tau: PuiseuxExpansion, omegas: Sequence[int]) -> Fraction:
    """``rho_3`` from the first four coefficients of each insertion factor."""
    g = [insertion_factor(om, 3) for om in omegas]
    g0 = [x[0] for x in g]
    total0 = math.prod(g0, start=Fraction(1))
    two = sum((x[2] / x[0] for x in g), Fraction(0))
    three = sum((x[3] / x[0] for x in g), Fraction(0))
    return tau[3] * total0 + tau[1] * total0 * two + tau[0] * total0 * three


def singular_S(m, max_i: int = 5) -> PuiseuxExpansion:
    """Expansion ``sum rho_i (1-12z)^{i/2}`` of the marked-submap series.

    Computed by full multiplication of the marked-pattern expansion with
    every insertion factor ``z^{-Omega} F_Omega(z)``.
    """
    d = _desc(m)
    T = singular_T(d, max_i)
    S = T
    for om in d.inner_valencies:
        S = S * insertion_factor(om, max_i)
    prod = math.prod((Fraction(12) ** om * kappa(om, 0) for om in d.inner_valencies), start=Fraction(1))
    if max_i >= 1 and S[1] != T[1] * prod:
        raise ArithmeticError("rho_1 disagrees with tau_1 * prod 12^Omega kappa_{Omega,0}")
    if max_i >= 3 and S[3] != rho3_by_product_rule(T, d.inner_valencies):
        raise ArithmeticError("rho_3 disagrees with the product-rule formula")
    return S


@dataclass(frozen=True)
class Expectation:
    """``E[count] = c1 n + c2 + O(1/n)``."""

    c1: Fraction
    c2: Fraction

    def __iter__(self):
        return iter((self.c1, self.c2))


def _expectation(exp: PuiseuxExpansion) -> Expectation:
    return Expectation(-exp[1] / 4, (3 * exp[3] - 7 * exp[1]) / 8)


def expectation_pattern(m) -> Expectation:
    """Mean number of occurrences of ``m`` as a pattern in a random ``n``-edge map."""
    return _expectation(singular_T(m, 3))


def expectation_submap(m) -> Expectation:
    """Mean number of occurrences of ``m`` as a submap in a random ``n``-edge map."""
    return _expectation(singular_S(m, 3))


# --- transfer ----------------------------------------------------------------


def transfer_coefficient(alpha: float, n: int) -> float:
    """Three-term asymptotic expansion of ``[z^n] (1 - z)^{-alpha}``."""
    if float(alpha).is_integer() and alpha <= 0:
        return 0.0
    a = float(alpha)
    corr = 1 + a * (a - 1) / (2 * n) + a * (a - 1) * (a - 2) * (3 * a - 1) / (24 * n * n)
    return n ** (a - 1) / math.gamma(a) * corr


def _gamma_half(i: int) -> Fraction:
    """``Gamma(-i/2) / sqrt(pi)`` for odd ``i >= 1``."""
    g = Fraction(1)  # Gamma(1/2)/sqrt(pi)
    x = Fraction(1, 2)
    while x > Fraction(-i, 2):
        x -= 1
        g /= x
    return g


def transfer_terms(expansion: PuiseuxExpansion, terms: int | None = None) -> list[tuple[Fraction, Fraction]]:
    """Exact asymptotic terms of ``[z^n]`` of an expansion at ``z = 1/12``.

    Returns ``[(p, r), ...]`` meaning ``[z^n] ~ 12^n sum r n^{-p} / sqrt(pi)``,
    for the ``terms`` leading powers.  By default every term the truncation
    order supports is kept (two at least, three at most).
    """
    c = expansion.coefficients
    odd = [i for i in range(1, len(c), 2) if c[i]]
    if not odd:
        raise InsufficientOrder("no half-integer power present: coefficients are eventually zero")
    lead = odd[0]
    if terms is None:
        terms = max(2, min(3, (expansion.order - lead) // 2 + 1))
    if not 1 <= terms <= 3:
        raise ValueError("between 1 and 3 terms are supported")
    need = lead + 2 * (terms - 1)
    if expansion.order < need:
        raise InsufficientOrder(f"need the expansion through Z^{need}, have Z^{expansion.order}")
    out: dict[Fraction, Fraction] = {}
    for i in range(lead, need + 1, 2):
        alpha = Fraction(-i, 2)
        e = [
            Fraction(1),
            alpha * (alpha - 1) / 2,
            alpha * (alpha - 1) * (alpha - 2) * (3 * alpha - 1) / 24,
        ]
        g = _gamma_half(i)
        for t in range(3):
            p = 1 - alpha + t
            if p <= Fraction(lead, 2) + 1 + terms - 1:
                out[p] = out.get(p, Fraction(0)) + c[i] * e[t] / g
    return sorted(out.items())[:terms]


def transfer_asymptotic_scaled(expansion: PuiseuxExpansion, n: int, terms: int | None = None) -> float:
    """``12^{-n}`` times :func:`transfer_asymptotic`."""
    return sum(float(r) * n ** (-float(p)) for p, r in transfer_terms(expansion, terms)) / math.sqrt(math.pi)


def transfer_asymptotic(expansion: PuiseuxExpansion, n: int, terms: int | None = None) -> float:
    """Asymptotic value of ``[z^n]`` from the singular expansion at ``z = 1/12``.

    For a marked-pattern expansion known through ``(1-12z)^{5/2}`` this is
    ``12^n (-tau_1/(2 sqrt(pi)) n^{-3/2} + (12 tau_3 - 3 tau_1)/(16 sqrt(pi)) n^{-5/2})``
    plus the ``n^{-7/2}`` term those coefficients determine.
    """
    return transfer_asymptotic_scaled(expansion, n, terms) * 12.0**n
