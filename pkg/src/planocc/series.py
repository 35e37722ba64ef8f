"""Exact truncated power series over the rationals.

Three value types live here:

* :class:`ZSeries` -- a power series in one variable truncated at a fixed
  order, with :class:`fractions.Fraction` coefficients.  Used for ``z``-series
  and, in :mod:`planocc.asymptotics`, for series in ``v = u - 1`` and in
  ``Z = (1 - 12 z)^(1/2)``.
* :class:`UPoly` -- a polynomial in ``u`` with rational coefficients.
* :class:`UZSeries` -- a truncated ``z``-series whose coefficients are
  :class:`UPoly` values.

All values are immutable.  Binary operations on operands of different
truncation orders truncate to the smaller order.
"""

from __future__ import annotations

import math
from fractions import Fraction
from numbers import Rational as _RationalABC
from typing import Iterable, Sequence, Union

from .errors import NonzeroRemainder, NotASquareConstant

Rational = Fraction

_ZERO = Fraction(0)
_ONE = Fraction(1)

Scalar = Union[int, Fraction]


def as_rational(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, _RationalABC)):
        return Fraction(x)
    raise TypeError(f"expected an exact rational, got {type(x).__name__}")


def binomial(r, k: int) -> Fraction:
    """Generalized binomial coefficient ``C(r, k)`` for rational ``r``.

    >>> binomial(Fraction(-1, 2), 2)
    Fraction(3, 8)
    """
    if k < 0:
        return _ZERO
    r = as_rational(r)
    num = _ONE
    for j in range(k):
        num *= r - j
    return num / math.factorial(k)


def rational_sqrt(q) -> Fraction | None:
    """Exact square root of a non-negative rational, or ``None``."""
    q = as_rational(q)
    if q < 0:
        return None
    a, b = q.numerator, q.denominator
    ra, rb = math.isqrt(a), math.isqrt(b)
    if ra * ra == a and rb * rb == b:
        return Fraction(ra, rb)
    return None


class ZSeries:
    """Truncated power series ``sum_{n<=order} c_n x^n`` with rational coefficients."""

    __slots__ = ("_c",)

    def __init__(self, coeffs: Iterable = (), order: int | None = None):
        c = [as_rational(x) for x in coeffs]
        if order is None:
            order = len(c) - 1
        if order < 0:
            raise ValueError("truncation order must be non-negative")
        if len(c) > order + 1:
            c = c[: order + 1]
        else:
            c.extend([_ZERO] * (order + 1 - len(c)))
        self._c = tuple(c)

    @classmethod
    def _raw(cls, coeffs: Sequence[Fraction]) -> "ZSeries":
        obj = cls.__new__(cls)
        obj._c = tuple(coeffs)
        return obj

    @classmethod
    def constant(cls, value, order: int) -> "ZSeries":
        return cls([value], order)

    @classmethod
    def monomial(cls, power: int, order: int, coeff=1) -> "ZSeries":
        c = [_ZERO] * (order + 1)
        if power <= order:
            c[power] = as_rational(coeff)
        return cls._raw(c)

    @classmethod
    def from_polynomial(cls, coeffs: Sequence, order: int) -> "ZSeries":
        """Polynomial given low-to-high, embedded at the requested order."""
        return cls(coeffs[: order + 1], order)

    @property
    def order(self) -> int:
        return len(self._c) - 1

    @property
    def coefficients(self) -> tuple[Fraction, ...]:
        return self._c

    def __len__(self) -> int:
        return len(self._c)

    def __iter__(self):
        return iter(self._c)

    def __getitem__(self, n):
        return self._c[n]

    def __eq__(self, other) -> bool:
        if isinstance(other, ZSeries):
            return self._c == other._c
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._c)

    def __repr__(self) -> str:
        terms = ", ".join(str(x) for x in self._c)
        return f"ZSeries([{terms}], order={self.order})"

    def truncate(self, order: int) -> "ZSeries":
        if order > self.order:
            raise ValueError(f"cannot extend a series of order {self.order} to {order}")
        return ZSeries._raw(self._c[: order + 1])

    def valuation(self) -> int | None:
        for i, x in enumerate(self._c):
            if x:
                return i
        return None

    # ring structure

    def __neg__(self) -> "ZSeries":
        return ZSeries._raw([-x for x in self._c])

    def __add__(self, other) -> "ZSeries":
        if isinstance(other, ZSeries):
            n = min(len(self._c), len(other._c))
            return ZSeries._raw([a + b for a, b in zip(self._c[:n], other._c[:n])])
        other = as_rational(other)
        return ZSeries._raw((self._c[0] + other,) + self._c[1:])

    __radd__ = __add__

    def __sub__(self, other) -> "ZSeries":
        if isinstance(other, ZSeries):
            n = min(len(self._c), len(other._c))
            return ZSeries._raw([a - b for a, b in zip(self._c[:n], other._c[:n])])
        return self + (-as_rational(other))

    def __rsub__(self, other) -> "ZSeries":
        return (-self) + other

    def __mul__(self, other) -> "ZSeries":
        if isinstance(other, ZSeries):
            n = min(len(self._c), len(other._c))
            a, b = self._c, other._c
            out = []
            for k in range(n):
                s = _ZERO
                for i in range(k + 1):
                    ai = a[i]
                    if ai:
                        bk = b[k - i]
                        if bk:
                            s += ai * bk
                out.append(s)
            return ZSeries._raw(out)
        other = as_rational(other)
        return ZSeries._raw([x * other for x in self._c])

    __rmul__ = __mul__

    def __truediv__(self, other) -> "ZSeries":
        if isinstance(other, ZSeries):
            return divide_exact(self, other)
        other = as_rational(other)
        return ZSeries._raw([x / other for x in self._c])

    def __pow__(self, k: int) -> "ZSeries":
        if k < 0:
            return divide_exact(ZSeries.constant(1, self.order), self ** (-k))
        result = ZSeries.constant(1, self.order)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def shift(self, k: int) -> "ZSeries":
        """Multiply by ``x^k`` (``k >= 0``); the truncation order grows by ``k``."""
        if k < 0:
            raise ValueError("use divide_exact for negative shifts")
        return ZSeries._raw((_ZERO,) * k + self._c)

    def derivative(self) -> "ZSeries":
        return differentiate(self)

    def compose_linear(self, a) -> "ZSeries":
        """Substitute ``x -> a*x``."""
        a = as_rational(a)
        p = _ONE
        out = []
        for x in self._c:
            out.append(x * p)
            p *= a
        return ZSeries._raw(out)


class UPoly:
    """Polynomial in ``u`` with rational coefficients, trailing zeros trimmed."""

    __slots__ = ("_c",)

    def __init__(self, coeffs: Iterable = ()):
        c = [as_rational(x) for x in coeffs]
        while c and not c[-1]:
            c.pop()
        self._c = tuple(c)

    @classmethod
    def _raw(cls, coeffs) -> "UPoly":
        c = list(coeffs)
        while c and not c[-1]:
            c.pop()
        obj = cls.__new__(cls)
        obj._c = tuple(c)
        return obj

    @classmethod
    def monomial(cls, k: int, coeff=1) -> "UPoly":
        return cls._raw([_ZERO] * k + [as_rational(coeff)])

    @property
    def coefficients(self) -> tuple[Fraction, ...]:
        return self._c

    @property
    def degree(self) -> int:
        return len(self._c) - 1

    def __bool__(self) -> bool:
        return bool(self._c)

    def __getitem__(self, k: int) -> Fraction:
        return self._c[k] if 0 <= k < len(self._c) else _ZERO

    def __eq__(self, other) -> bool:
        if isinstance(other, UPoly):
            return self._c == other._c
        if isinstance(other, (int, Fraction)):
            return self._c == UPoly([other])._c
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._c)

    def __repr__(self) -> str:
        return f"UPoly({[str(x) for x in self._c]})"

    def __neg__(self) -> "UPoly":
        return UPoly._raw([-x for x in self._c])

    def __add__(self, other) -> "UPoly":
        if not isinstance(other, UPoly):
            other = UPoly([other])
        a, b = self._c, other._c
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, x in enumerate(b):
            out[i] += x
        return UPoly._raw(out)

    __radd__ = __add__

    def __sub__(self, other) -> "UPoly":
        if not isinstance(other, UPoly):
            other = UPoly([other])
        return self + (-other)

    def __rsub__(self, other) -> "UPoly":
        return (-self) + other

    def __mul__(self, other) -> "UPoly":
        if isinstance(other, UPoly):
            a, b = self._c, other._c
            if not a or not b:
                return UPoly()
            out = [_ZERO] * (len(a) + len(b) - 1)
            for i, x in enumerate(a):
                if x:
                    for j, y in enumerate(b):
                        if y:
                            out[i + j] += x * y
            return UPoly._raw(out)
        other = as_rational(other)
        return UPoly._raw([x * other for x in self._c])

    __rmul__ = __mul__

    def shift(self, k: int) -> "UPoly":
        """Multiply by ``u^k``."""
        if not self._c:
            return self
        return UPoly._raw([_ZERO] * k + list(self._c))

    def __call__(self, u) -> Fraction:
        u = as_rational(u)
        acc = _ZERO
        for x in reversed(self._c):
            acc = acc * u + x
        return acc

    def derivative(self) -> "UPoly":
        return differentiate(self)


class UZSeries:
    """Truncated ``z``-series whose coefficients are :class:`UPoly` values."""

    __slots__ = ("_c",)

    def __init__(self, coeffs: Iterable, order: int | None = None):
        c = [x if isinstance(x, UPoly) else UPoly([x]) for x in coeffs]
        if order is None:
            order = len(c) - 1
        if order < 0:
            raise ValueError("truncation order must be non-negative")
        c = c[: order + 1] + [UPoly()] * max(0, order + 1 - len(c))
        self._c = tuple(c)

    @classmethod
    def _raw(cls, coeffs) -> "UZSeries":
        obj = cls.__new__(cls)
        obj._c = tuple(coeffs)
        return obj

    @property
    def order(self) -> int:
        return len(self._c) - 1

    @property
    def coefficients(self) -> tuple[UPoly, ...]:
        return self._c

    def __len__(self) -> int:
        return len(self._c)

    def __getitem__(self, n):
        return self._c[n]

    def __iter__(self):
        return iter(self._c)

    def __eq__(self, other) -> bool:
        if isinstance(other, UZSeries):
            return self._c == other._c
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._c)

    def __repr__(self) -> str:
        return f"UZSeries(order={self.order})"

    def truncate(self, order: int) -> "UZSeries":
        if order > self.order:
            raise ValueError(f"cannot extend a series of order {self.order} to {order}")
        return UZSeries._raw(self._c[: order + 1])

    def __neg__(self) -> "UZSeries":
        return UZSeries._raw([-p for p in self._c])

    def __add__(self, other) -> "UZSeries":
        n = min(len(self._c), len(other._c))
        return UZSeries._raw([a + b for a, b in zip(self._c[:n], other._c[:n])])

    def __sub__(self, other) -> "UZSeries":
        n = min(len(self._c), len(other._c))
        return UZSeries._raw([a - b for a, b in zip(self._c[:n], other._c[:n])])

    def __mul__(self, other) -> "UZSeries":
        if isinstance(other, UZSeries):
            n = min(len(self._c), len(other._c))
            a, b = self._c, other._c
            out = []
            for k in range(n):
                s = UPoly()
                for i in range(k + 1):
                    if a[i] and b[k - i]:
                        s = s + a[i] * b[k - i]
                out.append(s)
            return UZSeries._raw(out)
        if isinstance(other, UPoly):
            return UZSeries._raw([p * other for p in self._c])
        other = as_rational(other)
        return UZSeries._raw([p * other for p in self._c])

    __rmul__ = __mul__

    def shift(self, k: int) -> "UZSeries":
        """Multiply by ``z^k``."""
        return UZSeries._raw((UPoly(),) * k + self._c)

    def at_u(self, u) -> ZSeries:
        """Evaluate every coefficient at a rational ``u``."""
        return ZSeries._raw([p(u) for p in self._c])


AnySeries = Union[ZSeries, UPoly, UZSeries]


def ring_op(a, b, op: str):
    """Apply ``add``, ``sub``, ``mul`` or ``scale`` to two series.

    For ``scale``, ``b`` is a rational scalar.  Mixed truncation orders
    truncate to the smaller one.
    """
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "scale":
        return a * as_rational(b)
    raise ValueError(f"unknown ring operation {op!r}")


def _divide_series(a: ZSeries, b: ZSeries) -> ZSeries:
    vb = b.valuation()
    if vb is None:
        raise ZeroDivisionError("division by the zero series")
    order = min(a.order, b.order)
    for i in range(min(vb, a.order + 1)):
        if a[i]:
            raise NonzeroRemainder(
                f"dividend has nonzero coefficient at x^{i} below divisor valuation {vb}"
            )
    ac = a.coefficients[vb : order + 1]
    bc = b.coefficients[vb : order + 1]
    n = len(ac)
    b0 = bc[0]
    q: list[Fraction] = []
    for k in range(n):
        s = ac[k]
        for i in range(1, k + 1):
            bi = bc[i]
            if bi:
                s -= bi * q[k - i]
        q.append(s / b0)
    return ZSeries._raw(q)


def _divide_poly(a: UPoly, b: UPoly) -> UPoly:
    if not b:
        raise ZeroDivisionError("division by the zero polynomial")
    rem = list(a.coefficients)
    db = b.degree
    lead = b.coefficients[-1]
    if len(rem) - 1 < db:
        if rem:
            raise NonzeroRemainder(f"{a!r} is not divisible by {b!r}")
        return UPoly()
    q = [_ZERO] * (len(rem) - db)
    bc = b.coefficients
    for k in range(len(rem) - 1, db - 1, -1):
        c = rem[k]
        if c:
            c = c / lead
            q[k - db] = c
            for j in range(db + 1):
                rem[k - db + j] -= c * bc[j]
    if any(rem[:db]):
        raise NonzeroRemainder(f"{a!r} is not divisible by {b!r}")
    return UPoly._raw(q)


def divide_exact(a, b):
    """Exact quotient ``a / b``.

    * ``ZSeries / ZSeries``: the divisor may have positive valuation ``v``;
      the dividend's coefficients below ``v`` must vanish and the result has
      order ``min(a.order, b.order) - v``.
    * ``UPoly / UPoly``: long division whose remainder must be zero.
    * ``UZSeries / UPoly``: coefficientwise polynomial division.

    Raises :class:`NonzeroRemainder` when ``b`` does not divide ``a``.
    """
    if isinstance(a, ZSeries) and isinstance(b, ZSeries):
        return _divide_series(a, b)
    if isinstance(a, UPoly) and isinstance(b, UPoly):
        return _divide_poly(a, b)
    if isinstance(a, UZSeries) and isinstance(b, UPoly):
        return UZSeries._raw([_divide_poly(p, b) for p in a.coefficients])
    if isinstance(a, ZSeries) and isinstance(b, (int, Fraction)):
        return a / b
    raise TypeError(f"unsupported operands {type(a).__name__} / {type(b).__name__}")


def sqrt_series(f: ZSeries) -> ZSeries:
    """Square root ``g`` of ``f`` with ``g(0) > 0``, by Newton refinement.

    Each pass doubles the number of correct coefficients:
    ``g <- (g + f/g) / 2``.
    """
    c0 = f[0]
    if c0 <= 0:
        raise NotASquareConstant(f"constant term {c0} is not positive")
    r = rational_sqrt(c0)
    if r is None:
        raise NotASquareConstant(f"constant term {c0} is not a rational square")
    n = f.order
    g = ZSeries([r], 0)
    prec = 1
    while prec < n + 1:
        prec = min(2 * prec, n + 1)
        ft = f.truncate(prec - 1)
        gt = ZSeries(g.coefficients, prec - 1)
        g = (gt + _divide_series(ft, gt)) * Fraction(1, 2)
    return ZSeries(g.coefficients, n)


def differentiate(f, var: str | None = None):
    """Formal derivative.

    ``ZSeries`` differentiates in its own variable and loses one order.
    ``UPoly`` differentiates in ``u``.  ``UZSeries`` needs ``var`` in
    ``{"z", "u"}``.
    """
    if isinstance(f, ZSeries):
        if f.order < 1:
            raise ValueError("z-derivative needs truncation order >= 1")
        return ZSeries._raw([k * f[k] for k in range(1, f.order + 1)])
    if isinstance(f, UPoly):
        return UPoly._raw([k * c for k, c in enumerate(f.coefficients)][1:])
    if isinstance(f, UZSeries):
        if var == "u":
            return UZSeries._raw([p.derivative() for p in f.coefficients])
        if var == "z":
            if f.order < 1:
                raise ValueError("z-derivative needs truncation order >= 1")
            return UZSeries._raw([f[k] * k for k in range(1, f.order + 1)])
        raise ValueError("UZSeries derivative needs var='z' or var='u'")
    raise TypeError(f"cannot differentiate {type(f).__name__}")
