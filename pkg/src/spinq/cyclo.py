"""Exact scalars: rationals extended by roots of unity.

Values throughout the package are either `fractions.Fraction` or `Cyclo`,
an element of the cyclotomic field Q(zeta_k) stored in canonical form
modulo the k-th cyclotomic polynomial.  Canonical form makes `==` a real
decision procedure, which the verification suites depend on.  There is no
floating point anywhere.
"""

from __future__ import annotations

import re
from fractions import Fraction
from functools import lru_cache
from math import lcm


def _poly_div_exact(num, den):
    """Divide polynomials with ascending int coefficients; den monic, exact."""
    num = list(num)
    dd = len(den) - 1
    out = [0] * (len(num) - dd)
    for i in range(len(num) - 1, dd - 1, -1):
        c = num[i]
        if c:
            out[i - dd] = c
            for j, dj in enumerate(den):
                num[i - dd + j] -= c * dj
    if any(num):
        raise ArithmeticError("polynomial division left a remainder")
    return out


@lru_cache(maxsize=None)
def cyclotomic_poly(k: int) -> tuple[int, ...]:
    """Ascending integer coefficients of the k-th cyclotomic polynomial."""
    if k < 1:
        raise ValueError("order must be a positive integer")
    poly = [-1] + [0] * (k - 1) + [1]
    for d in range(1, k):
        if k % d == 0:
            poly = _poly_div_exact(poly, cyclotomic_poly(d))
    return tuple(poly)


def _reduce(coeffs, k):
    """Reduce a power-basis coefficient list to canonical form mod Phi_k."""
    phi = cyclotomic_poly(k)
    d = len(phi) - 1
    folded = [Fraction(0)] * max(k, d, 1)
    for e, c in enumerate(coeffs):
        if c:
            folded[e % k] += c
    for i in range(len(folded) - 1, d - 1, -1):
        c = folded[i]
        if c:
            folded[i] = Fraction(0)
            for j in range(d):
                folded[i - d + j] -= c * phi[j]
    return tuple(folded[:d])


class Cyclo:
    """An element of Q(zeta_k), with zeta_k = exp(2*pi*i/k).

    Coefficients live in the power basis 1, zeta, ..., zeta^(phi(k)-1),
    already reduced mod the cyclotomic polynomial.  Mixed arithmetic with
    int/Fraction promotes the scalar; mixed orders embed into lcm order.
    """

    __slots__ = ("order", "coeffs")

    def __init__(self, order: int, coeffs):
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "coeffs", _reduce([Fraction(c) for c in coeffs], order))

    def __setattr__(self, name, value):
        raise AttributeError("Cyclo values are immutable")

    @staticmethod
    def zeta(order: int, power: int = 1) -> "Cyclo":
        coeffs = [Fraction(0)] * order
        coeffs[power % order] = Fraction(1)
        return Cyclo(order, coeffs)

    @staticmethod
    def promote(value, order: int = 1) -> "Cyclo":
        if isinstance(value, Cyclo):
            return value if value.order == order else value._embed(lcm(value.order, order))
        return Cyclo(order, [Fraction(value)])

    def _embed(self, new_order: int) -> "Cyclo":
        if new_order == self.order:
            return self
        if new_order % self.order:
            raise ValueError("can only embed into a multiple of the order")
        step = new_order // self.order
        coeffs = [Fraction(0)] * new_order
        for e, c in enumerate(self.coeffs):
            coeffs[(e * step) % new_order] += c
        return Cyclo(new_order, coeffs)

    def _common(self, other):
        if isinstance(other, Cyclo):
            k = lcm(self.order, other.order)
            return self._embed(k), other._embed(k)
        if isinstance(other, (int, Fraction)):
            return self, Cyclo.promote(other, self.order)
        return None, None

    def __add__(self, other):
        a, b = self._common(other)
        if a is None:
            return NotImplemented
        n = max(len(a.coeffs), len(b.coeffs))
        pa = list(a.coeffs) + [Fraction(0)] * (n - len(a.coeffs))
        for e, c in enumerate(b.coeffs):
            pa[e] += c
        return Cyclo(a.order, pa)

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-Cyclo.promote(other, self.order))

    def __rsub__(self, other):
        return (-self) + other

    def __neg__(self):
        return Cyclo(self.order, [-c for c in self.coeffs])

    def __mul__(self, other):
        a, b = self._common(other)
        if a is None:
            return NotImplemented
        conv = [Fraction(0)] * (len(a.coeffs) + len(b.coeffs))
        for i, ci in enumerate(a.coeffs):
            if ci:
                for j, cj in enumerate(b.coeffs):
                    if cj:
                        conv[i + j] += ci * cj
        return Cyclo(a.order, conv)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            inv = Fraction(1, 1) / Fraction(other)
            return Cyclo(self.order, [c * inv for c in self.coeffs])
        return NotImplemented

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative powers are not supported")
        out = Cyclo.promote(1, self.order)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __bool__(self):
        return any(self.coeffs)

    def __eq__(self, other):
        a, b = self._common(other)
        if a is None:
            return NotImplemented
        return a.coeffs == b.coeffs

    def conjugate(self) -> "Cyclo":
        """Complex conjugation, zeta -> zeta^(-1)."""
        k = self.order
        coeffs = [Fraction(0)] * k
        for e, c in enumerate(self.coeffs):
            coeffs[(-e) % k] += c
        return Cyclo(k, coeffs)

    def is_rational(self) -> bool:
        return not any(self.coeffs[1:])

    def as_fraction(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return self.coeffs[0] if self.coeffs else Fraction(0)

    def __str__(self):
        terms = []
        for e, c in enumerate(self.coeffs):
            if not c:
                continue
            if e == 0:
                terms.append(str(c))
            else:
                mono = f"z{self.order}" + (f"^{e}" if e > 1 else "")
                if c == 1:
                    terms.append(mono)
                elif c == -1:
                    terms.append(f"-{mono}")
                else:
                    terms.append(f"{c}*{mono}")
        if not terms:
            return "0"
        out = terms[0]
        for t in terms[1:]:
            out += t if t.startswith("-") else "+" + t
        return out

    __repr__ = __str__


_TERM_RE = re.compile(
    r"^(?P<coef>\d+(?:/\d+)?)?(?:\*?z(?P<order>\d+)(?:\^(?P<exp>\d+))?)?$"
)


def parse_scalar(text: str):
    """Parse "2/3", "-1", "z3^2", "1-z3" ... into Fraction or Cyclo."""
    s = text.replace(" ", "")
    if not s:
        raise ValueError("empty scalar")
    # split into signed terms
    terms = []
    i = 0
    sign = 1
    if s[0] in "+-":
        sign = -1 if s[0] == "-" else 1
        i = 1
    start = i
    while i <= len(s):
        if i == len(s) or s[i] in "+-":
            terms.append((sign, s[start:i]))
            if i < len(s):
                sign = -1 if s[i] == "-" else 1
                start = i + 1
        i += 1
    total = Fraction(0)
    for sg, term in terms:
        m = _TERM_RE.match(term)
        if not m or (m.group("coef") is None and m.group("order") is None):
            raise ValueError(f"cannot parse scalar term {term!r} in {text!r}")
        coef = Fraction(m.group("coef")) if m.group("coef") else Fraction(1)
        if m.group("order"):
            k = int(m.group("order"))
            e = int(m.group("exp")) if m.group("exp") else 1
            total = Cyclo.zeta(k, e) * (sg * coef) + total
        else:
            total = total + sg * coef
    if isinstance(total, Cyclo) and total.is_rational():
        return total.as_fraction()
    return total


def format_scalar(value) -> str:
    """Inverse of parse_scalar, suitable for JSON/CSV output."""
    if isinstance(value, Cyclo):
        if value.is_rational():
            return str(value.as_fraction())
        return str(value)
    return str(Fraction(value))


def conjugate_scalar(value):
    if isinstance(value, Cyclo):
        return value.conjugate()
    return Fraction(value)
