"""K-theory operations in a splitting-principle model.

Virtual bundles are signed sums of monomials in line variables x_1..x_m.
Adams operations raise monomial exponents; symmetric and exterior power
series come from their exponential expressions in Adams operations, which
is also how virtual (negative) summands are handled.  The supersymmetric
power series multiplies the two, and collapses to Adams operations of odd
degree only:

    Q_t(E) = Lambda_t(E) sigma_t(E) = exp( sum over odd r of 2 psi^r(E) t^r / r ).

Everything is an exact polynomial identity in the line variables.
"""

from __future__ import annotations

from fractions import Fraction

from .partitions import Partition
from .series import seq_exp, seq_mul
from .symfunc import Q_in_p

class SplitElement:
    """Signed sum of monomials in m line variables, exact coefficients."""

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms=None):
        clean = {}
        for expo, c in (terms or {}).items():
            if len(expo) != nvars or any(e < 0 for e in expo):
                raise ValueError(f"bad exponent tuple {expo} for {nvars} variables")
            c = Fraction(c)
            if c:
                clean[tuple(expo)] = c
        object.__setattr__(self, "nvars", int(nvars))
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("SplitElement is immutable")

    @classmethod
    def zero(cls, nvars: int) -> "SplitElement":
        return cls(nvars, {})

    @classmethod
    def one(cls, nvars: int) -> "SplitElement":
        return cls(nvars, {(0,) * nvars: 1})

    @classmethod
    def line(cls, i: int, nvars: int) -> "SplitElement":
        expo = [0] * nvars
        expo[i] = 1
        return cls(nvars, {tuple(expo): 1})

    @classmethod
    def line_sum(cls, nvars: int, positive, negative=()) -> "SplitElement":
        out = cls.zero(nvars)
        for i in positive:
            out = out + cls.line(i, nvars)
        for i in negative:
            out = out - cls.line(i, nvars)
        return out

    def _check(self, other):
        if self.nvars != other.nvars:
            raise ValueError("variable counts differ")

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Fraction(other) * SplitElement.one(self.nvars)
        self._check(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, Fraction(0)) + c
        return SplitElement(self.nvars, out)

    def __sub__(self, other):
        return self + (-1) * other

    def __neg__(self):
        return (-1) * self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            c = Fraction(other)
            return SplitElement(self.nvars, {e: c * v for e, v in self.terms.items()})
        self._check(other)
        out: dict = {}
        for ea, ca in self.terms.items():
            for eb, cb in other.terms.items():
                key = tuple(x + y for x, y in zip(ea, eb))
                out[key] = out.get(key, Fraction(0)) + ca * cb
        return SplitElement(self.nvars, out)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * other
        return NotImplemented

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        return (
            isinstance(other, SplitElement)
            and self.nvars == other.nvars
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.nvars, frozenset(self.terms.items())))

    def rank(self) -> Fraction:
        """Value at x_i = 1 for all i (the virtual rank)."""
        return sum(self.terms.values(), Fraction(0))

    def evaluate(self, values) -> Fraction:
        values = [Fraction(v) for v in values]
        if len(values) != self.nvars:
            raise ValueError("wrong number of values")
        total = Fraction(0)
        for expo, c in self.terms.items():
            term = c
            for e, v in zip(expo, values):
                if e:
                    term *= v**e
            total += term
        return total

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.terms.values())

    def __str__(self):
        if not self.terms:
            return "0"
        bits = []
        for expo, c in sorted(self.terms.items()):
            mono = "*".join(
                f"x{i}" + (f"^{e}" if e > 1 else "") for i, e in enumerate(expo) if e
            )
            bits.append(f"({c})" + (f"*{mono}" if mono else ""))
        return " + ".join(bits)

    __repr__ = __str__


def _adams_any(r: int, E: SplitElement) -> SplitElement:
    # internal: all degrees allowed; powers each line monomial
    return SplitElement(
        E.nvars, {tuple(r * e for e in expo): c for expo, c in E.terms.items()}
    )


def adams(r: int, E: SplitElement) -> SplitElement:
    """Adams operation psi^r, r odd: x^a -> x^(ra) on line monomials.

    Only odd degrees are exposed; even ones exist solely as internal tools
    for the symmetric/exterior series."""
    if r < 1 or r % 2 == 0:
        raise ValueError(f"only odd Adams operations exist here, got r={r}")
    return _adams_any(r, E)


def sym_series(E: SplitElement, N: int) -> list[SplitElement]:
    """Total symmetric power series sigma_t(E) = exp(sum psi~^r(E) t^r / r),
    coefficients S^0 E .. S^N E.  Valid for virtual E."""
    zero = SplitElement.zero(E.nvars)
    g = [zero] * (N + 1)
    for r in range(1, N + 1):
        g[r] = Fraction(1, r) * _adams_any(r, E)
    return seq_exp(g, N, SplitElement.one(E.nvars), zero)


def ext_series(E: SplitElement, N: int) -> list[SplitElement]:
    """Total exterior power series Lambda_t(E) = exp(sum (-1)^(r-1) psi~^r(E) t^r / r)."""
    zero = SplitElement.zero(E.nvars)
    g = [zero] * (N + 1)
    for r in range(1, N + 1):
        g[r] = Fraction((-1) ** (r - 1), r) * _adams_any(r, E)
    return seq_exp(g, N, SplitElement.one(E.nvars), zero)


def q_series(E: SplitElement, N: int) -> list[SplitElement]:
    """Supersymmetric power series by the odd-Adams exponential:
    Q_t(E) = exp(sum over odd r of 2 psi^r(E) t^r / r)."""
    zero = SplitElement.zero(E.nvars)
    g = [zero] * (N + 1)
    for r in range(1, N + 1, 2):
        g[r] = Fraction(2, r) * adams(r, E)
    return seq_exp(g, N, SplitElement.one(E.nvars), zero)


def qsusy(n: int, E: SplitElement) -> SplitElement:
    """n-th supersymmetric power, computed both as the convolution
    sum_i S^i E * Lambda^(n-i) E and as the coefficient of the odd-Adams
    exponential; the two must agree exactly."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    sym = sym_series(E, n)
    ext = ext_series(E, n)
    zero = SplitElement.zero(E.nvars)
    conv = seq_mul(sym, ext, n, zero)[n]
    expo = q_series(E, n)[n]
    if conv != expo:
        raise AssertionError(
            f"supersymmetric power routes disagree at n={n}: {conv} vs {expo}"
        )
    return conv


def negate_t(series: list[SplitElement]) -> list[SplitElement]:
    """t -> -t on a coefficient list."""
    return [c if i % 2 == 0 else -c for i, c in enumerate(series)]


def q_identities_check(E: SplitElement, F: SplitElement, N: int) -> dict:
    """Exact series verification of Q_t(E+F) = Q_t(E) Q_t(F) and
    Q_t(E-F) = Q_t(E) Q_(-t)(F), up to degree N."""
    zero = SplitElement.zero(E.nvars)
    qe = q_series(E, N)
    qf = q_series(F, N)
    sum_lhs = q_series(E + F, N)
    sum_rhs = seq_mul(qe, qf, N, zero)
    diff_lhs = q_series(E - F, N)
    diff_rhs = seq_mul(qe, negate_t(qf), N, zero)
    report = {
        "N": N,
        "sum_identity": sum_lhs == sum_rhs,
        "difference_identity": diff_lhs == diff_rhs,
    }
    report["passed"] = report["sum_identity"] and report["difference_identity"]
    if not report["sum_identity"]:
        k = next(i for i in range(N + 1) if sum_lhs[i] != sum_rhs[i])
        report["first_sum_mismatch"] = {
            "degree": k,
            "lhs": str(sum_lhs[k]),
            "rhs": str(sum_rhs[k]),
        }
    if not report["difference_identity"]:
        k = next(i for i in range(N + 1) if diff_lhs[i] != diff_rhs[i])
        report["first_difference_mismatch"] = {
            "degree": k,
            "lhs": str(diff_lhs[k]),
            "rhs": str(diff_rhs[k]),
        }
    return report


def power_sum(r: int, nvars: int) -> SplitElement:
    """x_1^r + ... + x_m^r."""
    out = SplitElement.zero(nvars)
    for i in range(nvars):
        expo = [0] * nvars
        expo[i] = r
        out = out + SplitElement(nvars, {tuple(expo): 1})
    return out


def trace_of_op(lam, nvars: int) -> SplitElement:
    """Character polynomial of the operation attached to a strict partition:
    2^((delta(l) - l)/2) Q_lam evaluated at p_r = x_1^r + ... + x_m^r.

    The one-row case recovers the supersymmetric powers; on a permutation
    module model these are the traces realizing class functions as
    K-theory operations."""
    if nvars < 1:
        raise ValueError("need at least one variable")
    lam = lam if isinstance(lam, Partition) else Partition(lam)
    expansion = Q_in_p(lam)
    l = lam.length()
    delta = l % 2
    e2 = (delta - l) // 2
    scale = Fraction(2**e2) if e2 >= 0 else Fraction(1, 2**-e2)
    out = SplitElement.zero(nvars)
    for key, coeff in expansion.coeffs.items():
        term = SplitElement.one(nvars)
        for _, part in key.assignment:
            for r in part.parts:
                term = term * power_sum(r, nvars)
        out = out + (scale * coeff) * term
    return out
