"""Spin class functions of the twisted hyperoctahedral wreath products.

A degree-n class function lives on the even split classes, which are
indexed by all-odd labelled partition functions rho of total weight n.
The distinguished basis sigma^rho takes value Z_rho at rho and vanishes
elsewhere; on that basis the product is concatenation of labelled part
multisets, the coproduct splits them with binomial multiplicities, and
single-part sigma_r(c) generators are primitive.  The characteristic map
sends sigma^rho to 2^l(rho) p_rho, hence the basic spin character to q_n.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import product as iter_product
from math import comb

from .cyclo import Cyclo
from .partitions import (
    GroupData,
    LabeledPartitionFn,
    Z_of,
    enumerate_labeled,
)
from .series import PowerSeries, odd_exponents
from .symfunc import OmegaElem, Q_in_p

def _as_exact(value):
    if isinstance(value, Cyclo):
        return value
    return Fraction(value)


def _as_fraction(value) -> Fraction:
    if isinstance(value, Cyclo):
        return value.as_fraction()
    return Fraction(value)


class ClassFunction:
    """A spin class function of fixed degree, stored by its values on the
    even split classes (all-odd rho of total weight = degree)."""

    __slots__ = ("group", "degree", "values")

    def __init__(self, group: GroupData, degree: int, values=None):
        clean = {}
        for rho, v in (values or {}).items():
            if rho.labels != group.labels:
                raise ValueError("class type labels do not match the group")
            if not rho.is_odd() or rho.total_weight() != degree:
                raise ValueError(f"{rho} is not an even split type of degree {degree}")
            v = _as_exact(v)
            if v:
                clean[rho] = v
        object.__setattr__(self, "group", group)
        object.__setattr__(self, "degree", degree)
        object.__setattr__(self, "values", clean)

    def __setattr__(self, name, value):
        raise AttributeError("ClassFunction is immutable")

    def value(self, rho: LabeledPartitionFn):
        return self.values.get(rho, Fraction(0))

    def sigma_coeffs(self) -> dict:
        """Coordinates in the sigma^rho basis: value at rho divided by Z_rho."""
        return {rho: v / Z_of(rho, self.group) for rho, v in self.values.items()}

    def _check(self, other, same_degree=True):
        if self.group is not other.group and self.group.labels != other.group.labels:
            raise ValueError("class functions live over different groups")
        if same_degree and self.degree != other.degree:
            raise ValueError(f"degree mismatch: {self.degree} vs {other.degree}")

    def __add__(self, other):
        self._check(other)
        out = dict(self.values)
        for rho, v in other.values.items():
            out[rho] = out.get(rho, Fraction(0)) + v
        return ClassFunction(self.group, self.degree, out)

    def __sub__(self, other):
        return self + (-1) * other

    def __neg__(self):
        return (-1) * self

    def scale(self, c):
        c = _as_exact(c)
        return ClassFunction(
            self.group, self.degree, {rho: c * v for rho, v in self.values.items()}
        )

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction, Cyclo)):
            return self.scale(other)
        return NotImplemented

    def __mul__(self, other):
        """Graded product: sigma^rho * sigma^tau = sigma^(rho union tau)."""
        if isinstance(other, (int, Fraction, Cyclo)):
            return self.scale(other)
        self._check(other, same_degree=False)
        acc: dict[LabeledPartitionFn, object] = {}
        for ra, ca in self.sigma_coeffs().items():
            for rb, cb in other.sigma_coeffs().items():
                key = ra.union(rb)
                prev = acc.get(key)
                acc[key] = ca * cb if prev is None else prev + ca * cb
        deg = self.degree + other.degree
        values = {rho: c * Z_of(rho, self.group) for rho, c in acc.items()}
        return ClassFunction(self.group, deg, values)

    def __bool__(self):
        return bool(self.values)

    def __eq__(self, other):
        return (
            isinstance(other, ClassFunction)
            and self.group.labels == other.group.labels
            and self.degree == other.degree
            and self.values == other.values
        )

    def sorted_items(self):
        return sorted(self.values.items(), key=lambda kv: kv[0].sort_key())

    def __str__(self):
        if not self.values:
            return f"0 (degree {self.degree})"
        return ", ".join(f"{rho}:{v}" for rho, v in self.sorted_items())

    __repr__ = __str__


def split_classes(n: int, group: GroupData):
    """(even split types, odd split types) at degree n.

    Even split classes are the all-odd rho; odd split classes are the
    strict rho of odd total length (the grading on the wreath product
    counts sign flips, one mod two per odd-signed cycle)."""
    even = enumerate_labeled(n, "odd", group.labels)
    odd = [
        rho
        for rho in enumerate_labeled(n, "strict", group.labels)
        if rho.total_length() % 2 == 1
    ]
    return even, odd


def sigma(r: int, c, group: GroupData) -> ClassFunction:
    """Class function with value r*zeta_c on the one-cycle class of an
    odd r-cycle colored by c, zero elsewhere."""
    if r < 1 or r % 2 == 0:
        raise ValueError(f"r must be odd and positive, got {r}")
    if c not in group.labels:
        raise KeyError(f"label {c!r} not a class of group {group.name!r}")
    rho = LabeledPartitionFn(group.labels, [(c, (r,))])
    return ClassFunction(group, r, {rho: Fraction(r * group.zeta[c])})


def sigma_rho(rho: LabeledPartitionFn, group: GroupData) -> ClassFunction:
    """Basis element with value Z_rho at rho, zero elsewhere."""
    if not rho.is_odd():
        raise ValueError(f"{rho} has an even part")
    return ClassFunction(
        group, rho.total_weight(), {rho: Fraction(Z_of(rho, group))}
    )


def xi(n: int, group: GroupData) -> ClassFunction:
    """Basic spin character: value 2^l(rho) at every even split type rho."""
    values = {
        rho: Fraction(1 << rho.total_length())
        for rho in enumerate_labeled(n, "odd", group.labels)
    }
    return ClassFunction(group, n, values)


def coproduct_sigma(a: ClassFunction) -> dict:
    """Coproduct in sigma-coordinates: {(alpha, beta): coefficient}.

    Splitting the parts of rho as distinguishable objects gives binomial
    multiplicities; this is the unique choice making every sigma_r(c)
    primitive."""
    group = a.group
    out: dict = {}
    for rho, c in a.sigma_coeffs().items():
        mult = sorted(rho.multiplicities().items())
        keys = [k for k, _ in mult]
        maxes = [m for _, m in mult]
        for choice in iter_product(*(range(m + 1) for m in maxes)):
            w = 1
            for k, m in zip(choice, maxes):
                w *= comb(m, k)
            alpha = LabeledPartitionFn.from_multiplicities(
                group.labels, dict(zip(keys, choice))
            )
            beta = LabeledPartitionFn.from_multiplicities(
                group.labels, {k: m - k2 for k, m, k2 in zip(keys, maxes, choice)}
            )
            key = (alpha, beta)
            prev = out.get(key)
            term = c * w
            out[key] = term if prev is None else prev + term
    return {k: v for k, v in out.items() if v}


def coproduct(a: ClassFunction):
    """Deconcatenation coproduct, as a list of tensor factor pairs."""
    group = a.group
    pairs = []
    for (alpha, beta), c in sorted(
        coproduct_sigma(a).items(), key=lambda kv: (kv[0][0].sort_key(), kv[0][1].sort_key())
    ):
        pairs.append((c * sigma_rho(alpha, group), sigma_rho(beta, group)))
    return pairs


def antipode(a: ClassFunction) -> ClassFunction:
    """sigma^rho -> (-1)^l(rho) sigma^rho, the antipode on a primitively
    generated commutative Hopf algebra."""
    return ClassFunction(
        a.group,
        a.degree,
        {rho: Fraction((-1) ** rho.total_length()) * v for rho, v in a.values.items()},
    )


def counit(a: ClassFunction):
    if a.degree != 0:
        return Fraction(0)
    return a.value(LabeledPartitionFn(a.group.labels))


def ch_prime(a: ClassFunction) -> OmegaElem:
    """Characteristic map: sigma^rho -> 2^l(rho) p_rho.

    Equivalently sum over rho of the value at rho times p_rho weighted by
    prod_c z_{rho(c)}^-1 zeta_c^-l(rho(c)); it is a degreewise algebra
    isomorphism onto the colored ring and sends the basic spin character
    to q_n."""
    coeffs = {}
    for rho, v in a.values.items():
        w = Fraction(1 << rho.total_length(), Z_of(rho, a.group))
        coeffs[rho] = _as_fraction(v) * w
    return OmegaElem(a.group.labels, coeffs)


def class_function_from_omega(f: OmegaElem, group: GroupData) -> ClassFunction:
    """Inverse of ch_prime on a homogeneous element."""
    if f.labels != group.labels:
        raise ValueError("element labels do not match the group")
    degrees = f.degrees()
    if len(degrees) > 1:
        raise ValueError("element is not homogeneous")
    degree = degrees.pop() if degrees else 0
    values = {
        rho: c * Fraction(Z_of(rho, group), 1 << rho.total_length())
        for rho, c in f.coeffs.items()
    }
    return ClassFunction(group, degree, values)


def irreducible_char(lam, group: GroupData) -> ClassFunction:
    """Irreducible spin supercharacter indexed by a strict partition, for
    the one-class group only: the preimage of 2^((delta - l)/2) Q_lam."""
    if group.order != 1:
        raise ValueError("irreducible characters are only classified here for the trivial group")
    from .partitions import Partition

    lam = lam if isinstance(lam, Partition) else Partition(lam)
    if not lam.is_strict():
        raise ValueError(f"{lam} is not strict")
    l = lam.length()
    delta = l % 2
    e2 = (delta - l) // 2
    scale = Fraction(2**e2) if e2 >= 0 else Fraction(1, 2**-e2)
    f = scale * Q_in_p(lam, group.labels)
    return class_function_from_omega(f, group)


def star(V, chi: ClassFunction) -> ClassFunction:
    """Twist by a character of the underlying group: the value at rho is
    multiplied by prod_c gamma_V(c)^l(rho(c)) (one factor per cycle)."""
    group = chi.group
    if isinstance(V, (str, int)):
        V = group.character(V)
    unknown = [lab for lab in V if lab not in group.labels]
    if unknown:
        raise KeyError(f"labels {unknown} not classes of group {group.name!r}")
    missing = [lab for lab in group.labels if lab not in V]
    if missing:
        raise KeyError(f"character vector lacks values at {missing}")
    values = {}
    for rho, v in chi.values.items():
        w = v
        for lab, p in rho.assignment:
            gamma = _as_exact(V[lab])
            w = w * gamma ** p.length()
        values[rho] = w
    return ClassFunction(group, chi.degree, values)


class GradedAlgebraElem:
    """A finite sum of class functions across degrees, truncated at N."""

    __slots__ = ("group", "truncation", "components")

    def __init__(self, group: GroupData, truncation: int, components=None):
        comps = {}
        for n, cf in (components or {}).items():
            if n < 0 or n > truncation:
                continue
            if cf.degree != n:
                raise ValueError(f"component at {n} has degree {cf.degree}")
            if cf:
                comps[n] = cf
        object.__setattr__(self, "group", group)
        object.__setattr__(self, "truncation", truncation)
        object.__setattr__(self, "components", comps)

    def __setattr__(self, name, value):
        raise AttributeError("GradedAlgebraElem is immutable")

    @classmethod
    def one(cls, group: GroupData, N: int) -> "GradedAlgebraElem":
        unit = ClassFunction(
            group, 0, {LabeledPartitionFn(group.labels): Fraction(1)}
        )
        return cls(group, N, {0: unit})

    def component(self, n: int) -> ClassFunction:
        return self.components.get(n, ClassFunction(self.group, n))

    def __add__(self, other):
        N = min(self.truncation, other.truncation)
        comps = {}
        for n in range(N + 1):
            c = None
            if n in self.components and n in other.components:
                c = self.components[n] + other.components[n]
            elif n in self.components:
                c = self.components[n]
            elif n in other.components:
                c = other.components[n]
            if c:
                comps[n] = c
        return GradedAlgebraElem(self.group, N, comps)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, Cyclo)):
            return GradedAlgebraElem(
                self.group,
                self.truncation,
                {n: cf.scale(other) for n, cf in self.components.items()},
            )
        N = min(self.truncation, other.truncation)
        comps: dict[int, ClassFunction] = {}
        for i, ci in self.components.items():
            for j, cj in other.components.items():
                if i + j > N:
                    continue
                term = ci * cj
                comps[i + j] = comps[i + j] + term if i + j in comps else term
        return GradedAlgebraElem(self.group, N, comps)

    __rmul__ = __mul__

    def __eq__(self, other):
        return (
            isinstance(other, GradedAlgebraElem)
            and self.truncation == other.truncation
            and self.components == other.components
        )

    def __bool__(self):
        return bool(self.components)


def vertex_Q(V, group: GroupData, N: int) -> GradedAlgebraElem:
    """Vertex-operator generating element: degree-n component is the
    basic spin character twisted by V."""
    comps = {n: star(V, xi(n, group)) for n in range(N + 1)}
    return GradedAlgebraElem(group, N, comps)


def vertex_Q_exponential(V, group: GroupData, N: int) -> GradedAlgebraElem:
    """The same element computed through its exponential form
    exp(sum over odd r of (2/r) t^r sum_c gamma_V(c) zeta_c^-1 sigma_r(c))."""
    if isinstance(V, (str, int)):
        V = group.character(V)
    comps = {}
    for r in odd_exponents(N):
        acc = None
        for c in group.labels:
            gamma = _as_exact(V[c])
            term = (gamma / group.zeta[c]) * sigma(r, c, group)
            acc = term if acc is None else acc + term
        if acc:
            comps[r] = Fraction(2, r) * acc
    A = GradedAlgebraElem(group, N, comps)
    result = GradedAlgebraElem.one(group, N)
    term = GradedAlgebraElem.one(group, N)
    for k in range(1, N + 1):
        term = term * A * Fraction(1, k)
        if not term:
            break
        result = result + term
    return result


def dim_series_point(group: GroupData, N: int) -> PowerSeries:
    """Graded dimension of the spin class-function algebra at a point:
    prod_{r>=1} (1 - t^(2r-1))^-|classes|; coefficient n counts the
    even split classes of degree n."""
    if N < 0:
        raise ValueError("N must be nonnegative")
    return PowerSeries.product_form(N, odd_exponents(N), -1, -len(group.labels))


def character_table_rows(group: GroupData, n: int):
    """Rows of the degree-n character table over the even split classes.

    Returns (columns, rows, warnings): columns are (rho, Z_rho) pairs;
    rows are (name, class function) with the sigma basis, the basic spin
    row, and, for the one-class group, the irreducible rows."""
    from .partitions import enumerate_partitions

    columns = [
        (rho, Z_of(rho, group)) for rho in enumerate_labeled(n, "odd", group.labels)
    ]
    rows = []
    for rho, _ in columns:
        rows.append((f"sigma^{rho}", sigma_rho(rho, group)))
    rows.append((f"xi^{n}", xi(n, group)))
    warnings = []
    if group.order == 1:
        for lam in enumerate_partitions(n, "strict"):
            rows.append((f"T{lam}", irreducible_char(lam, group)))
    else:
        warnings.append(
            "irreducible rows are classified here only for the one-class group; omitted"
        )
    return columns, rows, warnings
