"""Integer partitions, partition-valued functions on a labelled class set,
and the centralizer-order quantities built from them.

Everything here is exact: counts are Python ints, never floats, and all
enumerations come back in a fixed deterministic order (label by label,
each partition stream in reverse-lexicographic order, largest part first).
"""

from __future__ import annotations

import json
from fractions import Fraction
from functools import lru_cache
from math import factorial
from pathlib import Path

from .cyclo import parse_scalar, conjugate_scalar


class Partition:
    """A weakly decreasing tuple of positive integers."""

    __slots__ = ("parts",)

    def __init__(self, parts=()):
        parts = tuple(sorted((int(p) for p in parts), reverse=True))
        if parts and parts[-1] < 1:
            raise ValueError(f"parts must be positive, got {parts}")
        object.__setattr__(self, "parts", parts)

    def __setattr__(self, name, value):
        raise AttributeError("Partition is immutable")

    def weight(self) -> int:
        return sum(self.parts)

    def length(self) -> int:
        return len(self.parts)

    def multiplicities(self) -> dict[int, int]:
        """Multiplicity form: {part: count}, the (1^m1 2^m2 ...) view."""
        out: dict[int, int] = {}
        for p in self.parts:
            out[p] = out.get(p, 0) + 1
        return out

    @classmethod
    def from_multiplicities(cls, mult: dict[int, int]) -> "Partition":
        parts = []
        for p, m in mult.items():
            if m < 0:
                raise ValueError("negative multiplicity")
            parts.extend([p] * m)
        return cls(parts)

    def is_strict(self) -> bool:
        return all(a > b for a, b in zip(self.parts, self.parts[1:]))

    def is_odd(self) -> bool:
        return all(p % 2 == 1 for p in self.parts)

    def sort_key(self):
        # ascending sort by this key = reverse-lexicographic order, (5) < (4,1) < (3,2)
        return tuple(-p for p in self.parts)

    def __eq__(self, other):
        return isinstance(other, Partition) and self.parts == other.parts

    def __hash__(self):
        return hash(self.parts)

    def __bool__(self):
        return bool(self.parts)

    def __str__(self):
        return "(" + ",".join(str(p) for p in self.parts) + ")"

    __repr__ = __str__


EMPTY_PARTITION = Partition()


def z_of(lam: Partition) -> int:
    """Order of the centralizer of a permutation of cycle type lam:
    the product over parts i of i^m_i * m_i!."""
    out = 1
    for i, m in lam.multiplicities().items():
        out *= i**m * factorial(m)
    return out


def _parts_desc(n, max_part, strict, odd):
    if n == 0:
        yield ()
        return
    p = min(n, max_part)
    while p >= 1:
        if not (odd and p % 2 == 0):
            bound = p - 1 if strict else p
            for rest in _parts_desc(n - p, bound, strict, odd):
                yield (p,) + rest
        p -= 1


_KINDS = {"all": (False, False), "strict": (True, False), "odd": (False, True)}


def enumerate_partitions(n: int, kind: str = "all") -> list[Partition]:
    """All partitions of n of the given kind, in reverse-lex order."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    strict, odd = _KINDS[kind]
    return [Partition(p) for p in _parts_desc(n, n, strict, odd)]


@lru_cache(maxsize=None)
def _count_table(kind: str, N: int) -> tuple[int, ...]:
    strict, odd = _KINDS[kind]
    counts = [0] * (N + 1)
    counts[0] = 1
    for part in range(1, N + 1):
        if odd and part % 2 == 0:
            continue
        if strict:
            for n in range(N, part - 1, -1):
                counts[n] += counts[n - part]
        else:
            for n in range(part, N + 1):
                counts[n] += counts[n - part]
    return tuple(counts)


def count_partitions(n: int, kind: str = "all") -> int:
    """Number of partitions of n of the given kind (dynamic programming,
    no enumeration; cross-checked against enumerate_partitions in tests)."""
    return _count_table(kind, max(n, 0))[n]


@lru_cache(maxsize=None)
def _strict_signed_table(N: int) -> tuple[int, ...]:
    # coefficient of t^n in prod_{r>=1} (1 - t^r): strict partitions signed by length
    signed = [0] * (N + 1)
    signed[0] = 1
    for part in range(1, N + 1):
        for n in range(N, part - 1, -1):
            signed[n] -= signed[n - part]
    return tuple(signed)


def strict_counts_by_length(n: int) -> tuple[int, int]:
    """(#strict partitions of n with even length, # with odd length)."""
    total = count_partitions(n, "strict")
    signed = _strict_signed_table(max(n, 0))[n]
    return (total + signed) // 2, (total - signed) // 2


def strict_counts_by_sign(n: int) -> tuple[int, int]:
    """Strict partitions of n split by the parity of n - length, i.e. by the
    sign of a permutation with that cycle type.  This is the split relevant
    to the double cover of the symmetric group, where a class of distinct
    cycle type is odd exactly when the underlying permutation is odd."""
    even_l, odd_l = strict_counts_by_length(n)
    return (even_l, odd_l) if n % 2 == 0 else (odd_l, even_l)


class LabeledPartitionFn:
    """A partition-valued function on a finite ordered label set.

    Canonical form drops empty partitions, so these hash and compare
    cheaply as sparse maps.  The label set itself is part of the value.
    """

    __slots__ = ("labels", "assignment")

    def __init__(self, labels, assignment=()):
        labels = tuple(labels)
        items = assignment.items() if isinstance(assignment, dict) else assignment
        amap: dict[str, Partition] = {}
        for lab, part in items:
            if lab not in labels:
                raise KeyError(f"unknown label {lab!r}")
            if not isinstance(part, Partition):
                part = Partition(part)
            if part.parts:
                if lab in amap:
                    raise ValueError(f"duplicate label {lab!r}")
                amap[lab] = part
        object.__setattr__(self, "labels", labels)
        object.__setattr__(
            self, "assignment", tuple((lab, amap[lab]) for lab in labels if lab in amap)
        )

    def __setattr__(self, name, value):
        raise AttributeError("LabeledPartitionFn is immutable")

    def part(self, label) -> Partition:
        for lab, p in self.assignment:
            if lab == label:
                return p
        if label not in self.labels:
            raise KeyError(f"unknown label {label!r}")
        return EMPTY_PARTITION

    def total_weight(self) -> int:
        return sum(p.weight() for _, p in self.assignment)

    def total_length(self) -> int:
        return sum(p.length() for _, p in self.assignment)

    def is_odd(self) -> bool:
        return all(p.is_odd() for _, p in self.assignment)

    def is_strict(self) -> bool:
        return all(p.is_strict() for _, p in self.assignment)

    def multiplicities(self) -> dict[tuple[str, int], int]:
        """{(label, part): multiplicity} over all labels."""
        out: dict[tuple[str, int], int] = {}
        for lab, p in self.assignment:
            for part, m in p.multiplicities().items():
                out[(lab, part)] = m
        return out

    @classmethod
    def from_multiplicities(cls, labels, mult) -> "LabeledPartitionFn":
        per_label: dict[str, dict[int, int]] = {}
        for (lab, part), m in mult.items():
            if m:
                per_label.setdefault(lab, {})[part] = m
        return cls(
            labels,
            [(lab, Partition.from_multiplicities(d)) for lab, d in per_label.items()],
        )

    def union(self, other: "LabeledPartitionFn") -> "LabeledPartitionFn":
        """Disjoint union of the labelled part multisets."""
        if self.labels != other.labels:
            raise ValueError("label sets differ")
        merged = self.multiplicities()
        for key, m in other.multiplicities().items():
            merged[key] = merged.get(key, 0) + m
        return LabeledPartitionFn.from_multiplicities(self.labels, merged)

    def sort_key(self):
        weights = tuple(-self.part(lab).weight() for lab in self.labels)
        subkeys = tuple(self.part(lab).sort_key() for lab in self.labels)
        return (weights, subkeys)

    def __eq__(self, other):
        return (
            isinstance(other, LabeledPartitionFn)
            and self.labels == other.labels
            and self.assignment == other.assignment
        )

    def __hash__(self):
        return hash((self.labels, self.assignment))

    def __bool__(self):
        return bool(self.assignment)

    def __str__(self):
        if len(self.labels) == 1:
            return str(self.part(self.labels[0]))
        if not self.assignment:
            return "()"
        return ";".join(f"{lab}:{p}" for lab, p in self.assignment)

    __repr__ = __str__


def _gen_labeled(n, labels, strict, odd):
    if not labels:
        if n == 0:
            yield ()
        return
    lab = labels[0]
    for w in range(n, -1, -1):
        for parts in _parts_desc(w, w, strict, odd):
            for rest in _gen_labeled(n - w, labels[1:], strict, odd):
                if parts:
                    yield ((lab, Partition(parts)),) + rest
                else:
                    yield rest


def enumerate_labeled(n: int, kind: str, labels) -> list[LabeledPartitionFn]:
    """All partition-valued functions on `labels` of total weight n, of the
    given kind, in deterministic order (weight on earlier labels first)."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    labels = tuple(labels)
    strict, odd = _KINDS[kind]
    return [
        LabeledPartitionFn(labels, asn) for asn in _gen_labeled(n, labels, strict, odd)
    ]


def count_labeled(n: int, kind: str, num_labels: int) -> int:
    """|{rho on a num_labels set : ||rho|| = n, rho of the given kind}|."""
    base = _count_table(kind, max(n, 0))
    counts = [1] + [0] * n
    for _ in range(num_labels):
        counts = [
            sum(counts[k] * base[m - k] for k in range(m + 1)) for m in range(n + 1)
        ]
    return counts[n]


def count_identity_check(n: int, labels) -> tuple[int, int]:
    """(|OP_n(L)|, |SP_n(L)|): odd-part vs strict counts; the two agree."""
    labels = tuple(labels)
    op = count_labeled(n, "odd", len(labels))
    sp = count_labeled(n, "strict", len(labels))
    return op, sp


class GroupData:
    """Conjugacy-class data of a finite group: ordered class labels,
    centralizer orders, and (optionally) an exact character table.

    Groups enter the library only through this data; no element-level
    computation happens anywhere.
    """

    __slots__ = ("name", "order", "labels", "zeta", "char_names", "char_table")

    def __init__(self, name, order, labels, zeta, char_names=None, char_table=None):
        object.__setattr__(self, "name", str(name))
        object.__setattr__(self, "order", int(order))
        object.__setattr__(self, "labels", tuple(labels))
        object.__setattr__(self, "zeta", {lab: int(zeta[lab]) for lab in self.labels})
        object.__setattr__(
            self, "char_names", tuple(char_names) if char_names is not None else None
        )
        object.__setattr__(self, "char_table", char_table)
        self.validate()

    def __setattr__(self, name, value):
        raise AttributeError("GroupData is immutable")

    def validate(self):
        total = Fraction(0)
        for lab in self.labels:
            zc = self.zeta[lab]
            if zc < 1 or self.order % zc:
                raise ValueError(f"centralizer order {zc} does not divide |G|")
            total += Fraction(self.order, zc)
        if total != self.order:
            raise ValueError(
                f"class sizes sum to {total}, expected group order {self.order}"
            )
        if self.char_table is not None:
            if self.char_names is None:
                raise ValueError("character table requires character names")
            names = self.char_names
            for i, ni in enumerate(names):
                for j, nj in enumerate(names):
                    acc = 0
                    for lab in self.labels:
                        acc = acc + (
                            Fraction(1, self.zeta[lab])
                            * self.char_table[ni][lab]
                            * conjugate_scalar(self.char_table[nj][lab])
                        )
                    expected = 1 if i == j else 0
                    if acc != expected:
                        raise ValueError(
                            f"character rows {ni!r},{nj!r} fail orthogonality: {acc}"
                        )

    def character(self, name):
        """Row of the character table, as {class label: value}."""
        if self.char_table is None:
            raise ValueError(f"group {self.name!r} carries no character table")
        if isinstance(name, int):
            name = self.char_names[name]
        if name not in self.char_table:
            raise KeyError(f"unknown character {name!r}")
        return dict(self.char_table[name])

    def identity_label(self) -> str:
        for lab in self.labels:
            if self.zeta[lab] == self.order:
                return lab
        raise ValueError("no class has centralizer order equal to the group order")

    def one_dim_characters(self) -> list[str]:
        if self.char_table is None:
            return []
        e = self.identity_label()
        return [n for n in self.char_names if self.char_table[n][e] == 1]

    @classmethod
    def from_dict(cls, data: dict) -> "GroupData":
        labels = [c["label"] for c in data["classes"]]
        zeta = {c["label"]: c["centralizer_order"] for c in data["classes"]}
        table = None
        names = data.get("character_names")
        if "character_table" in data:
            rows = data["character_table"]
            if names is None:
                names = [f"chi{i}" for i in range(len(rows))]
            table = {
                names[i]: {lab: parse_scalar(v) for lab, v in zip(labels, row)}
                for i, row in enumerate(rows)
            }
        return cls(data.get("name", "group"), data["order"], labels, zeta, names, table)

    @classmethod
    def load(cls, path) -> "GroupData":
        with open(path) as fh:
            return cls.from_dict(json.load(fh))

    @classmethod
    def builtin(cls, name: str) -> "GroupData":
        path = Path(__file__).parent / "data" / f"{name}.json"
        if not path.exists():
            raise KeyError(f"no builtin group {name!r}")
        return cls.load(path)

    def __repr__(self):
        return f"GroupData({self.name!r}, order={self.order}, classes={len(self.labels)})"


def Z_of(rho: LabeledPartitionFn, group: GroupData) -> int:
    """Centralizer order of a wreath-product class of type rho:
    2^l(rho) * prod_c z_{rho(c)} * zeta_c^{l(rho(c))}."""
    out = 1 << rho.total_length()
    for lab, p in rho.assignment:
        if lab not in group.labels:
            raise KeyError(f"label {lab!r} not a class of group {group.name!r}")
        out *= z_of(p) * group.zeta[lab] ** p.length()
    return out


def wreath_order(n: int, group: GroupData) -> int:
    """Order 2^n n! |Gamma|^n of the degree-n hyperoctahedral wreath product."""
    return (1 << n) * factorial(n) * group.order**n


def even_split_class_sizes(n: int, group: GroupData) -> dict[LabeledPartitionFn, int]:
    """Sizes |G|/Z_rho of the even split classes, keyed by their type."""
    total = wreath_order(n, group)
    sizes = {}
    for rho in enumerate_labeled(n, "odd", group.labels):
        Z = Z_of(rho, group)
        if total % Z:
            raise ArithmeticError(f"Z_rho = {Z} does not divide |G| = {total}")
        sizes[rho] = total // Z
    return sizes
