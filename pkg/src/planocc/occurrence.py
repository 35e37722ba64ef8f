"""Occurrence generating functions for an arbitrary pattern map.

Three series, all driven by the :class:`~planocc.maps.PatternDescriptor` of
the pattern (so hand-written descriptors work just as well as extracted ones):

* ``F_pattern``: maps with the pattern at the root, ``z^{k-s} F_ell(z)``;
* ``T_pattern``: marked pattern occurrences,
  ``|R|^{-1} (2z d/dz - |I^Sigma|) F_pattern``;
* ``S_submap``: marked submap occurrences, ``T * prod z^{-Omega} F_Omega``.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from .counting import F_ell
from .errors import NonIntegerCoefficient, UnsupportedValency
from .maps import CombinatorialMap, PatternDescriptor, descriptor
from .series import ZSeries, divide_exact


class Kind(str, Enum):
    AT_ROOT = "at_root"
    PATTERN = "pattern"
    SUBMAP = "submap"


@dataclass(frozen=True)
class OccurrenceSeries:
    kind: Kind
    series: ZSeries
    descriptor: PatternDescriptor

    def __getitem__(self, n: int) -> int:
        return int(self.series[n])

    @property
    def order(self) -> int:
        return self.series.order

    def coefficients(self) -> list[int]:
        return [int(c) for c in self.series.coefficients] + [0] * (self.order + 1 - len(self.series))


def _desc(pattern) -> PatternDescriptor:
    d = pattern if isinstance(pattern, PatternDescriptor) else descriptor(pattern)
    if d.ell < 2:
        raise UnsupportedValency("patterns with root-face valency 1 are not supported")
    return d


def _check_integral(s: ZSeries, what: str) -> ZSeries:
    for n, c in enumerate(s.coefficients):
        if c.denominator != 1 or c < 0:
            raise NonIntegerCoefficient(f"{what}: coefficient of z^{n} is {c}")
    return s


def _at_root_series(d: PatternDescriptor, N: int) -> ZSeries:
    shift = d.k - d.s
    if shift > N:
        return ZSeries([], N)
    base = F_ell(d.ell, N - shift)
    if shift >= 0:
        return base.shift(shift)
    # Negative shift: f_{ell,n} vanishes for n < ell, so the division is exact.
    return divide_exact(base, ZSeries.monomial(-shift, base.order))


def F_pattern(pattern: CombinatorialMap | PatternDescriptor, N: int = 20) -> OccurrenceSeries:
    """Maps with ``n`` edges in which the pattern occurs at the root."""
    d = _desc(pattern)
    if N < 0:
        raise ValueError("N must be non-negative")
    s = _check_integral(_at_root_series(d, N), "at-root series")
    return OccurrenceSeries(Kind.AT_ROOT, s, d)


def T_pattern(pattern: CombinatorialMap | PatternDescriptor, N: int = 20) -> OccurrenceSeries:
    """Maps with ``n`` edges carrying a marked occurrence of the pattern."""
    d = _desc(pattern)
    f = F_pattern(d, N).series
    R = d.rotational_count
    coeffs = [Fraction(2 * n - d.inner_valency_sum) * c / R for n, c in enumerate(f.coefficients)]
    s = _check_integral(ZSeries(coeffs, f.order), "marked-pattern series")
    return OccurrenceSeries(Kind.PATTERN, s, d)


def insertion_series(omega: int, N: int) -> ZSeries:
    """``z^{-omega} F_omega(z)`` to order ``N``; constant term 1 (the bare cycle)."""
    if omega < 2:
        raise UnsupportedValency(f"cannot insert into an inner face of valency {omega}")
    f = F_ell(omega, N + omega)
    return divide_exact(f, ZSeries.monomial(omega, f.order)).truncate(N)


def S_submap(pattern: CombinatorialMap | PatternDescriptor, N: int = 20) -> OccurrenceSeries:
    """Maps with ``n`` edges carrying a marked submap occurrence of the pattern."""
    d = _desc(pattern)
    for om in d.inner_valencies:
        if om < 2:
            raise UnsupportedValency(f"inner face of valency {om} admits no insertion convention")
    s = T_pattern(d, N).series
    for om in d.inner_valencies:
        s = s * insertion_series(om, N)
    s = _check_integral(s, "marked-submap series")
    return OccurrenceSeries(Kind.SUBMAP, s, d)
