"""The ring of symmetric functions generated by the q_n, realized inside
the polynomial ring on odd power sums.

Internally every element is a sparse rational combination of monomials
p_rho, where rho is an all-odd labelled partition function (a plain odd
partition in the uncolored, single-label case).  Multiplication is free:
keys concatenate.  The q_n and the Schur Q-functions are derived
expansions; the graded dimension at degree n is the number of strict
partitions of n.
"""

from __future__ import annotations

import json
from fractions import Fraction

from .partitions import (
    EMPTY_PARTITION,
    LabeledPartitionFn,
    Partition,
    count_partitions,
    enumerate_partitions,
    z_of,
)
from .series import PowerSeries, odd_exponents, seq_exp

DEFAULT_LABELS = ("c0",)


class OmegaElem:
    """Sparse rational expansion in odd power-sum monomials.

    Keys are LabeledPartitionFn with all parts odd; the single-label case
    is the ordinary uncolored ring.  Zero coefficients are never stored.
    """

    __slots__ = ("labels", "coeffs")

    def __init__(self, labels=DEFAULT_LABELS, coeffs=None):
        labels = tuple(labels)
        clean: dict[LabeledPartitionFn, Fraction] = {}
        for key, c in (coeffs or {}).items():
            if key.labels != labels:
                raise ValueError(f"key labels {key.labels} != element labels {labels}")
            if not key.is_odd():
                raise ValueError(f"key {key} has an even part")
            c = Fraction(c)
            if c:
                clean[key] = c
        object.__setattr__(self, "labels", labels)
        object.__setattr__(self, "coeffs", clean)

    def __setattr__(self, name, value):
        raise AttributeError("OmegaElem is immutable")

    @classmethod
    def zero(cls, labels=DEFAULT_LABELS) -> "OmegaElem":
        return cls(labels, {})

    @classmethod
    def one(cls, labels=DEFAULT_LABELS) -> "OmegaElem":
        key = LabeledPartitionFn(labels)
        return cls(labels, {key: Fraction(1)})

    def _check(self, other):
        if self.labels != other.labels:
            raise ValueError(f"label sets differ: {self.labels} vs {other.labels}")

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Fraction(other) * OmegaElem.one(self.labels)
        self._check(other)
        out = dict(self.coeffs)
        for k, c in other.coeffs.items():
            out[k] = out.get(k, Fraction(0)) + c
        return OmegaElem(self.labels, out)

    def __sub__(self, other):
        return self + (-1) * other

    def __neg__(self):
        return OmegaElem(self.labels, {k: -c for k, c in self.coeffs.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            c = Fraction(other)
            return OmegaElem(self.labels, {k: v * c for k, v in self.coeffs.items()})
        self._check(other)
        out: dict[LabeledPartitionFn, Fraction] = {}
        for ka, ca in self.coeffs.items():
            for kb, cb in other.coeffs.items():
                key = ka.union(kb)
                out[key] = out.get(key, Fraction(0)) + ca * cb
        return OmegaElem(self.labels, out)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * other
        return NotImplemented

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        return (
            isinstance(other, OmegaElem)
            and self.labels == other.labels
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((self.labels, frozenset(self.coeffs.items())))

    def coefficient(self, key: LabeledPartitionFn) -> Fraction:
        return self.coeffs.get(key, Fraction(0))

    def degrees(self) -> set[int]:
        return {k.total_weight() for k in self.coeffs}

    def degree_component(self, n: int) -> "OmegaElem":
        return OmegaElem(
            self.labels,
            {k: c for k, c in self.coeffs.items() if k.total_weight() == n},
        )

    def is_homogeneous(self) -> bool:
        return len(self.degrees()) <= 1

    def sorted_items(self):
        return sorted(self.coeffs.items(), key=lambda kv: (kv[0].total_weight(), kv[0].sort_key()))

    def __str__(self):
        if not self.coeffs:
            return "0"
        bits = []
        for key, c in self.sorted_items():
            mono = "1" if not key else f"p{key}"
            bits.append(f"({c})*{mono}" if mono != "1" else f"({c})")
        return " + ".join(bits)

    __repr__ = __str__

    def to_json(self) -> dict:
        entries = []
        for key, c in self.sorted_items():
            entries.append(
                {
                    "key": [[lab, list(p.parts)] for lab, p in key.assignment],
                    "num": str(c.numerator),
                    "den": str(c.denominator),
                }
            )
        return {"labels": list(self.labels), "coeffs": entries}

    @classmethod
    def from_json(cls, data: dict) -> "OmegaElem":
        labels = tuple(data["labels"])
        coeffs = {}
        for entry in data["coeffs"]:
            key = LabeledPartitionFn(
                labels, [(lab, Partition(parts)) for lab, parts in entry["key"]]
            )
            coeffs[key] = Fraction(int(entry["num"]), int(entry["den"]))
        return cls(labels, coeffs)

    def dumps(self) -> str:
        return json.dumps(self.to_json())

    @classmethod
    def loads(cls, text: str) -> "OmegaElem":
        return cls.from_json(json.loads(text))


def p_monomial(mu, label=None, labels=DEFAULT_LABELS) -> OmegaElem:
    """The power-sum monomial p_mu placed at the given label (all parts odd)."""
    labels = tuple(labels)
    if label is None:
        label = labels[0]
    mu = mu if isinstance(mu, Partition) else Partition(mu)
    if not mu.is_odd():
        raise ValueError(f"{mu} has an even part; only odd power sums exist here")
    key = LabeledPartitionFn(labels, [(label, mu)] if mu.parts else [])
    return OmegaElem(labels, {key: Fraction(1)})


_q_cache: dict[tuple, list[OmegaElem]] = {}


def q_in_p(n: int, labels=DEFAULT_LABELS) -> OmegaElem:
    """Coefficient of t^n in exp(sum over odd r of 2 p_r t^r / r)."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    labels = tuple(labels)
    cached = _q_cache.get(labels, [])
    if n >= len(cached):
        N = max(n, 2 * len(cached), 8)
        zero = OmegaElem.zero(labels)
        g = [zero] * (N + 1)
        for r in odd_exponents(N):
            g[r] = Fraction(2, r) * p_monomial((r,), labels=labels)
        cached = seq_exp(g, N, OmegaElem.one(labels), zero)
        _q_cache[labels] = cached
    return cached[n]


def _q_two_row(a: int, b: int, labels) -> OmegaElem:
    """Two-row expansion: q_a q_b + 2 sum_{i=1..b} (-1)^i q_{a+i} q_{b-i}."""
    out = q_in_p(a, labels) * q_in_p(b, labels)
    for i in range(1, b + 1):
        term = q_in_p(a + i, labels) * q_in_p(b - i, labels)
        out = out + Fraction(2 * (-1) ** i) * term
    return out


def _pfaffian(entries, index, labels) -> OmegaElem:
    """Pfaffian of the skew matrix with upper entries entries[(i, j)]."""
    if not index:
        return OmegaElem.one(labels)
    first = index[0]
    out = OmegaElem.zero(labels)
    for t in range(1, len(index)):
        j = index[t]
        rest = index[1:t] + index[t + 1 :]
        term = entries[(first, j)] * _pfaffian(entries, rest, labels)
        out = out + Fraction((-1) ** (t + 1)) * term
    return out


def Q_in_p(lam, labels=DEFAULT_LABELS) -> OmegaElem:
    """Schur Q-function Q_lam expanded in odd power sums (lam strict).

    One row is q_n; longer rows go through the two-row expansion and a
    Pfaffian, appending a zero row when the length is odd.
    """
    lam = lam if isinstance(lam, Partition) else Partition(lam)
    if not lam.is_strict():
        raise ValueError(f"{lam} is not strict")
    labels = tuple(labels)
    rows = list(lam.parts)
    if not rows:
        return OmegaElem.one(labels)
    if len(rows) == 1:
        return q_in_p(rows[0], labels)
    if len(rows) % 2:
        rows.append(0)
    entries = {}
    for i in range(len(rows)):
        for j in range(i + 1, len(rows)):
            entries[(i, j)] = _q_two_row(rows[i], rows[j], labels)
    return _pfaffian(entries, tuple(range(len(rows))), labels)


def inner(f: OmegaElem, g: OmegaElem, group=None) -> Fraction:
    """Bilinear pairing with <p_mu, p_nu> = delta * z_mu * (zeta/2)^l per label
    (zeta = 1 without group data, recovering the uncolored normalization)."""
    if f.labels != g.labels:
        raise ValueError(f"label sets differ: {f.labels} vs {g.labels}")
    if group is not None:
        missing = [lab for lab in f.labels if lab not in group.labels]
        if missing:
            raise KeyError(f"labels {missing} not classes of group {group.name!r}")
    total = Fraction(0)
    for key, cf in f.coeffs.items():
        cg = g.coeffs.get(key)
        if not cg:
            continue
        w = Fraction(1)
        for lab, p in key.assignment:
            zeta = group.zeta[lab] if group is not None else 1
            w *= z_of(p) * Fraction(zeta, 2) ** p.length()
        total += cf * cg * w
    return total


def omega_dim_series(N: int) -> PowerSeries:
    """Graded dimension series 1/prod_{i>=1}(1 - t^(2i-1)); the coefficient
    of t^n is the number of strict partitions of n."""
    if N < 0:
        raise ValueError("N must be nonnegative")
    return PowerSeries.product_form(N, odd_exponents(N), -1, -1)


def q_monomial_in_p(mu, labels=DEFAULT_LABELS) -> OmegaElem:
    """q_mu = prod q_{mu_i} for an all-odd partition mu (a monomial in the
    free generators q_1, q_3, q_5, ...)."""
    mu = mu if isinstance(mu, Partition) else Partition(mu)
    if not mu.is_odd():
        raise ValueError(f"{mu} has an even part; q-monomials use odd indices only")
    out = OmegaElem.one(labels)
    for part in mu.parts:
        out = out * q_in_p(part, labels)
    return out


def _solve_exact(columns, target):
    """Solve sum_j x_j columns[j] = target exactly over the rationals.

    columns/target are dicts key->Fraction.  Raises ValueError when the
    columns are dependent or the target is outside their span.
    """
    keys = sorted(
        {k for col in columns for k in col} | set(target),
        key=lambda k: (k.total_weight(), k.sort_key()),
    )
    rows = [[col.get(k, Fraction(0)) for col in columns] + [target.get(k, Fraction(0))] for k in keys]
    ncols = len(columns)
    pivot_rows = []
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, len(rows)) if rows[i][c]), None)
        if pivot is None:
            raise ValueError("columns are linearly dependent")
        rows[r], rows[pivot] = rows[pivot], rows[r]
        inv = 1 / rows[r][c]
        rows[r] = [v * inv for v in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c]:
                factor = rows[i][c]
                rows[i] = [v - factor * w for v, w in zip(rows[i], rows[r])]
        pivot_rows.append((r, c))
        r += 1
    for i in range(r, len(rows)):
        if rows[i][ncols]:
            raise ValueError("target is not in the span of the columns")
    solution = [Fraction(0)] * ncols
    for row, col in pivot_rows:
        solution[col] = rows[row][ncols]
    return solution


def expand_in_basis(f: OmegaElem, basis) -> dict:
    """Coordinates of f in a list [(tag, OmegaElem), ...] of basis elements."""
    columns = [elem.coeffs for _, elem in basis]
    sol = _solve_exact(columns, f.coeffs)
    return {tag: x for (tag, _), x in zip(basis, sol) if x}

def expand_in_q(f: OmegaElem) -> dict[Partition, Fraction]:
    """Expansion of an uncolored element in q-monomials q_mu, mu all-odd."""
    out: dict[Partition, Fraction] = {}
    for n in sorted(f.degrees()):
        basis = [
            (mu, q_monomial_in_p(mu, f.labels)) for mu in enumerate_partitions(n, "odd")
        ]
        out.update(expand_in_basis(f.degree_component(n), basis))
    return out


def expand_in_schur_q(f: OmegaElem) -> dict[Partition, Fraction]:
    """Expansion of an uncolored element in Schur Q-functions."""
    out: dict[Partition, Fraction] = {}
    for n in sorted(f.degrees()):
        basis = [(lam, Q_in_p(lam, f.labels)) for lam in enumerate_partitions(n, "strict")]
        out.update(expand_in_basis(f.degree_component(n), basis))
    return out


def rank_of(elems) -> int:
    """Rank of a family of OmegaElem over the rationals (exact elimination)."""
    elems = [e for e in elems if e]
    if not elems:
        return 0
    keys = sorted(
        {k for e in elems for k in e.coeffs},
        key=lambda k: (k.total_weight(), k.sort_key()),
    )
    key_index = {k: i for i, k in enumerate(keys)}
    rows = []
    for e in elems:
        row = [Fraction(0)] * len(keys)
        for k, c in e.coeffs.items():
            row[key_index[k]] = c
        rows.append(row)
    rank = 0
    for c in range(len(keys)):
        pivot = next((i for i in range(rank, len(rows)) if rows[i][c]), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        inv = 1 / rows[rank][c]
        rows[rank] = [v * inv for v in rows[rank]]
        for i in range(len(rows)):
            if i != rank and rows[i][c]:
                factor = rows[i][c]
                rows[i] = [v - factor * w for v, w in zip(rows[i], rows[rank])]
        rank += 1
    return rank
