"""Truncated Taylor arithmetic.

A :class:`Jet` of order ``K`` stores the normalized Taylor coefficients
``c[k] = f^(k)(t) / k!`` for ``k = 0..K``. Arithmetic propagates them with
the usual recurrences, so every derivative is exact up to rounding.
Mixing jets of different orders truncates to the smaller one; plain
numbers act as constants.
"""

from __future__ import annotations

import math
from typing import Iterable, Sequence

from .errors import DomainError

MAX_ORDER = 4


class Jet:
    __slots__ = ("c",)

    def __init__(self, coeffs: Iterable[float]):
        self.c = tuple(float(x) for x in coeffs)
        if not self.c:
            raise ValueError("a jet needs at least one coefficient")

    # construction ------------------------------------------------------

    @classmethod
    def const(cls, value: float, order: int) -> Jet:
        return cls((value,) + (0.0,) * order)

    @classmethod
    def variable(cls, t: float, order: int) -> Jet:
        if order == 0:
            return cls((t,))
        return cls((t, 1.0) + (0.0,) * (order - 1))

    @classmethod
    def from_derivatives(cls, derivs: Sequence[float]) -> Jet:
        return cls(d / math.factorial(k) for k, d in enumerate(derivs))

    # views -------------------------------------------------------------

    @property
    def order(self) -> int:
        return len(self.c) - 1

    @property
    def value(self) -> float:
        return self.c[0]

    @property
    def derivatives(self) -> tuple[float, ...]:
        """``(f, f', f'', ...)`` at the expansion point."""
        return tuple(x * math.factorial(k) for k, x in enumerate(self.c))

    def derivative(self, j: int) -> float:
        return self.c[j] * math.factorial(j)

    def deriv(self) -> Jet:
        """Jet of the derivative; one order lower."""
        if self.order == 0:
            raise ValueError("cannot differentiate an order-0 jet")
        return _raw(tuple((k + 1) * self.c[k + 1] for k in range(self.order)))

    def truncate(self, order: int) -> Jet:
        return self if order >= len(self.c) - 1 else _raw(self.c[: order + 1])

    def is_finite(self) -> bool:
        return all(math.isfinite(x) for x in self.c)

    def __repr__(self) -> str:
        return f"Jet({list(self.derivatives)!r})"

    # arithmetic --------------------------------------------------------

    def _coerce(self, other) -> tuple[tuple[float, ...], tuple[float, ...]] | None:
        if isinstance(other, Jet):
            n = min(len(self.c), len(other.c))
            return self.c[:n], other.c[:n]
        if isinstance(other, (int, float)):
            return self.c, (float(other),) + (0.0,) * (len(self.c) - 1)
        return None

    def __add__(self, other):
        if isinstance(other, Jet):
            return _raw(tuple(x + y for x, y in zip(self.c, other.c)))
        if isinstance(other, (int, float)):
            return _raw((self.c[0] + other,) + self.c[1:])
        return NotImplemented

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, Jet):
            return _raw(tuple(x - y for x, y in zip(self.c, other.c)))
        if isinstance(other, (int, float)):
            return _raw((self.c[0] - other,) + self.c[1:])
        return NotImplemented

    def __rsub__(self, other):
        if isinstance(other, (int, float)):
            return _raw((other - self.c[0],) + tuple(-x for x in self.c[1:]))
        return NotImplemented

    def __neg__(self):
        return _raw(tuple(-x for x in self.c))

    def __pos__(self):
        return self

    def __mul__(self, other):
        if isinstance(other, (int, float)):
            return _raw(tuple(x * other for x in self.c))
        if not isinstance(other, Jet):
            return NotImplemented
        a, b = self.c, other.c
        out = []
        for k in range(min(len(a), len(b))):
            acc = 0.0
            for i in range(k + 1):
                acc += a[i] * b[k - i]
            out.append(acc)
        return _raw(tuple(out))

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, float)):
            if other == 0:
                raise DomainError("division by zero")
            return _raw(tuple(x / other for x in self.c))
        pair = self._coerce(other)
        if pair is None:
            return NotImplemented
        return _div(*pair)

    def __rtruediv__(self, other):
        pair = self._coerce(other)
        if pair is None:
            return NotImplemented
        a, b = pair
        return _div(b, a)

    def __pow__(self, n):
        if not isinstance(n, int):
            return NotImplemented
        return ipow(self, n)


def _div(a: Sequence[float], b: Sequence[float]) -> Jet:
    if b[0] == 0.0:
        raise DomainError("division by zero")
    q: list[float] = []
    for k in range(len(a)):
        s = a[k] - sum(b[i] * q[k - i] for i in range(1, k + 1))
        q.append(s / b[0])
    return _raw(tuple(q))


def ipow(x: Jet, n: int) -> Jet:
    """``x**n`` for integer ``n`` by repeated squaring."""
    if n < 0:
        return 1.0 / ipow(x, -n)
    result = Jet.const(1.0, x.order)
    base = x
    while n:
        if n & 1:
            result = result * base
        n >>= 1
        if n:
            base = base * base
    return result


def _exp_like(a: Sequence[float], v0: float) -> Jet:
    e = [v0]
    for k in range(1, len(a)):
        e.append(sum(i * a[i] * e[k - i] for i in range(1, k + 1)) / k)
    return _raw(tuple(e))


def exp(x: Jet) -> Jet:
    try:
        v0 = math.exp(x.c[0])
    except OverflowError:
        raise DomainError("exp overflow") from None
    return _exp_like(x.c, v0)


def _pair(a: Sequence[float], s0: float, c0: float, sign: float) -> tuple[Jet, Jet]:
    # s' = a' c,  c' = sign * a' s  (sign -1 for sin/cos, +1 for sinh/cosh)
    s = [s0]
    c = [c0]
    for k in range(1, len(a)):
        s.append(sum(i * a[i] * c[k - i] for i in range(1, k + 1)) / k)
        c.append(sign * sum(i * a[i] * s[k - i] for i in range(1, k + 1)) / k)
    return _raw(tuple(s)), _raw(tuple(c))


def sin_cos(x: Jet) -> tuple[Jet, Jet]:
    return _pair(x.c, math.sin(x.c[0]), math.cos(x.c[0]), -1.0)


def sinh_cosh(x: Jet) -> tuple[Jet, Jet]:
    try:
        s0, c0 = math.sinh(x.c[0]), math.cosh(x.c[0])
    except OverflowError:
        raise DomainError("sinh/cosh overflow") from None
    return _pair(x.c, s0, c0, 1.0)


def sin(x: Jet) -> Jet:
    return sin_cos(x)[0]


def cos(x: Jet) -> Jet:
    return sin_cos(x)[1]


def sinh(x: Jet) -> Jet:
    return sinh_cosh(x)[0]


def cosh(x: Jet) -> Jet:
    return sinh_cosh(x)[1]


def sqrt(x: Jet) -> Jet:
    a = x.c
    if a[0] < 0.0:
        raise DomainError("sqrt of a negative number")
    if a[0] == 0.0 and len(a) > 1:
        raise DomainError("sqrt is not differentiable at 0")
    r = [math.sqrt(a[0])]
    for k in range(1, len(a)):
        s = a[k] - sum(r[i] * r[k - i] for i in range(1, k))
        r.append(s / (2.0 * r[0]))
    return _raw(tuple(r))


def _raw(c: tuple) -> Jet:
    # internal constructor for arithmetic results, which are already float tuples
    j = object.__new__(Jet)
    j.c = c
    return j


def lift(x, order: int) -> Jet:
    """Promote a number to a constant jet; jets pass through."""
    if isinstance(x, Jet):
        return x
    return Jet.const(float(x), order)


class VecJet:
    """Four jets of a common order: a vector-valued function near a point."""

    __slots__ = ("c1", "c2", "c3", "c4")

    def __init__(self, c1, c2, c3, c4):
        comps = (c1, c2, c3, c4)
        orders = [len(c.c) - 1 for c in comps if isinstance(c, Jet)]
        order = min(orders) if orders else 0
        if len(orders) < 4 or max(orders) != order:
            c1, c2, c3, c4 = (lift(c, order).truncate(order) for c in comps)
        self.c1, self.c2, self.c3, self.c4 = c1, c2, c3, c4

    @property
    def order(self) -> int:
        return self.c1.order

    def components(self) -> tuple[Jet, Jet, Jet, Jet]:
        return (self.c1, self.c2, self.c3, self.c4)

    def value(self):
        from .metric import Vec4

        return Vec4(self.c1.value, self.c2.value, self.c3.value, self.c4.value)

    def derivative_value(self, j: int):
        from .metric import Vec4

        return Vec4(*(c.derivative(j) for c in self.components()))

    def deriv(self) -> VecJet:
        return VecJet(*(c.deriv() for c in self.components()))

    def __add__(self, other: VecJet) -> VecJet:
        return VecJet(self.c1 + other.c1, self.c2 + other.c2, self.c3 + other.c3, self.c4 + other.c4)

    def __sub__(self, other: VecJet) -> VecJet:
        return VecJet(self.c1 - other.c1, self.c2 - other.c2, self.c3 - other.c3, self.c4 - other.c4)

    def __neg__(self) -> VecJet:
        return VecJet(-self.c1, -self.c2, -self.c3, -self.c4)

    def __mul__(self, k) -> VecJet:
        return VecJet(self.c1 * k, self.c2 * k, self.c3 * k, self.c4 * k)

    __rmul__ = __mul__

    def __truediv__(self, k) -> VecJet:
        return VecJet(self.c1 / k, self.c2 / k, self.c3 / k, self.c4 / k)

    def __repr__(self) -> str:
        return f"VecJet({self.c1!r}, {self.c2!r}, {self.c3!r}, {self.c4!r})"


def combine(terms: Iterable[tuple[Jet, VecJet]]) -> VecJet:
    """Sum of ``coefficient * vector`` pairs."""
    total = None
    for coeff, vec in terms:
        term = vec * coeff
        total = term if total is None else total + term
    if total is None:
        raise ValueError("empty combination")
    return total
