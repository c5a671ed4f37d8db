"""Truncated formal power series with exact coefficients.

`PowerSeries` carries Fraction coefficients c_0..c_N and all arithmetic is
exact modulo t^(N+1).  The seq_* helpers implement the same recurrences
generically for any coefficient ring with +, *, scalar multiplication and
truthiness (Fraction, OmegaElem, SplitElement, ...), which is how the
generating functions over those rings are computed.
"""

from __future__ import annotations

from fractions import Fraction


def seq_mul(a, b, N, zero):
    """Coefficients of (sum a_i t^i)(sum b_j t^j) up to degree N."""
    out = [zero for _ in range(N + 1)]
    for i, ai in enumerate(a[: N + 1]):
        if not ai:
            continue
        for j, bj in enumerate(b[: N + 1 - i]):
            if bj:
                out[i + j] = out[i + j] + ai * bj
    return out


def seq_exp(g, N, one, zero):
    """exp of a series with zero constant term, via n f_n = sum k g_k f_{n-k}."""
    if len(g) > 0 and g[0]:
        raise ValueError("exp needs a zero constant term")
    f = [zero] * (N + 1)
    f[0] = one
    for n in range(1, N + 1):
        acc = zero
        for k in range(1, n + 1):
            gk = g[k] if k < len(g) else zero
            if not gk:
                continue
            acc = acc + Fraction(k, n) * (gk * f[n - k])
        f[n] = acc
    return f


def seq_log(f, N, one, zero):
    """log of a series with constant term one (inverse of seq_exp)."""
    if len(f) == 0 or f[0] != one:
        raise ValueError("log needs constant term 1")
    g = [zero] * (N + 1)
    for n in range(1, N + 1):
        acc = f[n] if n < len(f) else zero
        for k in range(1, n):
            if g[k]:
                fk = f[n - k] if n - k < len(f) else zero
                if fk:
                    acc = acc - Fraction(k, n) * (g[k] * fk)
        g[n] = acc
    return g


class PowerSeries:
    """Exact rational power series truncated at degree N."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        object.__setattr__(self, "coeffs", tuple(Fraction(c) for c in coeffs))
        if not self.coeffs:
            raise ValueError("a series needs at least the constant coefficient")

    def __setattr__(self, name, value):
        raise AttributeError("PowerSeries is immutable")

    @property
    def truncation(self) -> int:
        return len(self.coeffs) - 1

    @classmethod
    def zero(cls, N: int) -> "PowerSeries":
        return cls([0] * (N + 1))

    @classmethod
    def one(cls, N: int) -> "PowerSeries":
        return cls([1] + [0] * N)

    @classmethod
    def term(cls, coeff, exponent: int, N: int) -> "PowerSeries":
        coeffs = [Fraction(0)] * (N + 1)
        if 0 <= exponent <= N:
            coeffs[exponent] = Fraction(coeff)
        return cls(coeffs)

    def coefficient(self, n: int) -> Fraction:
        if n < 0:
            return Fraction(0)
        if n > self.truncation:
            raise IndexError(f"coefficient {n} beyond truncation {self.truncation}")
        return self.coeffs[n]

    def truncate(self, N: int) -> "PowerSeries":
        if N > self.truncation:
            raise ValueError("cannot extend a truncated series")
        return PowerSeries(self.coeffs[: N + 1])

    def _common(self, other):
        N = min(self.truncation, other.truncation)
        return N, self.coeffs[: N + 1], other.coeffs[: N + 1]

    def __add__(self, other):
        N, a, b = self._common(other)
        return PowerSeries([x + y for x, y in zip(a, b)])

    def __sub__(self, other):
        N, a, b = self._common(other)
        return PowerSeries([x - y for x, y in zip(a, b)])

    def __neg__(self):
        return PowerSeries([-c for c in self.coeffs])

    def __mul__(self, other):
        if isinstance(other, PowerSeries):
            N, a, b = self._common(other)
            return PowerSeries(seq_mul(a, b, N, Fraction(0)))
        return PowerSeries([c * Fraction(other) for c in self.coeffs])

    __rmul__ = __mul__

    def __eq__(self, other):
        return isinstance(other, PowerSeries) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def agrees_with(self, other: "PowerSeries", upto: int) -> bool:
        return self.coeffs[: upto + 1] == other.coeffs[: upto + 1]

    def exp(self) -> "PowerSeries":
        return PowerSeries(
            seq_exp(self.coeffs, self.truncation, Fraction(1), Fraction(0))
        )

    def log(self) -> "PowerSeries":
        return PowerSeries(
            seq_log(self.coeffs, self.truncation, Fraction(1), Fraction(0))
        )

    def inverse(self) -> "PowerSeries":
        if not self.coeffs[0]:
            raise ZeroDivisionError("no reciprocal: constant term is zero")
        N = self.truncation
        inv0 = 1 / self.coeffs[0]
        out = [Fraction(0)] * (N + 1)
        out[0] = inv0
        for n in range(1, N + 1):
            acc = Fraction(0)
            for k in range(1, n + 1):
                if self.coeffs[k]:
                    acc += self.coeffs[k] * out[n - k]
            out[n] = -inv0 * acc
        return PowerSeries(out)

    def pow(self, e: int) -> "PowerSeries":
        base = self if e >= 0 else self.inverse()
        e = abs(e)
        out = PowerSeries.one(self.truncation)
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    @classmethod
    def product_form(cls, N: int, exponents, sign: int, power: int) -> "PowerSeries":
        """prod over r in exponents of (1 + sign t^r)^power, truncated at N."""
        out = cls.one(N)
        for r in exponents:
            if r > N:
                continue
            factor = cls.one(N) + cls.term(sign, r, N)
            out = out * factor.pow(power)
        return out

    def ints(self) -> list[int]:
        """Coefficients as ints; raises if any coefficient is non-integral."""
        out = []
        for c in self.coeffs:
            if c.denominator != 1:
                raise ValueError(f"non-integer coefficient {c}")
            out.append(c.numerator)
        return out

    def __str__(self):
        return " ".join(str(c) for c in self.coeffs)

    __repr__ = __str__


def odd_exponents(N: int):
    return range(1, N + 1, 2)


def even_exponents(N: int):
    return range(2, N + 1, 2)
