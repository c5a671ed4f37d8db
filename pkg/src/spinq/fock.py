"""Supersymmetric Fock space over an abstract sector model.

The model records, per conjugacy class of the underlying group, the even
and odd graded dimensions of the corresponding sector.  The Fock space is
the free supersymmetric algebra on generators (r, b) with r odd and b a
sector basis element: polynomial in the even b's, exterior in the odd
ones, with the generator (r, b) sitting in degree r.  Creation operators
multiply by (r/2) times a generator sum; annihilation operators are the
superderivations dual to them, and together they satisfy the twisted
Heisenberg relations with central term (l/2) delta_{m,l} <eta, V>.

States are plain tuples (even, odd): `even` weakly increasing with
repeats, `odd` strictly increasing.  Reordering odd generators costs the
permutation sign; the fixed canonical order makes equality exact.
"""

from __future__ import annotations

import json
import random
from bisect import bisect_left, insort
from collections import namedtuple
from fractions import Fraction
from pathlib import Path

from .partitions import GroupData
from .series import PowerSeries, even_exponents, odd_exponents

BasisElem = namedtuple("BasisElem", ["index", "label", "parity", "name"])

VACUUM = ((), ())

_MISSING = object()


class SectorModel:
    """Per-class graded dimensions (d0, d1) with named basis elements."""

    __slots__ = ("group", "sectors", "basis", "even_indices", "odd_indices", "parity")

    def __init__(self, group: GroupData, sectors):
        sectors = dict(sectors)
        unknown = [lab for lab in sectors if lab not in group.labels]
        if unknown:
            raise KeyError(f"sector labels {unknown} not classes of group {group.name!r}")
        basis = []
        for lab in group.labels:
            d0, d1 = sectors.get(lab, (0, 0))
            if d0 < 0 or d1 < 0:
                raise ValueError("graded dimensions must be nonnegative")
            for i in range(d0):
                basis.append(BasisElem(len(basis), lab, 0, f"{lab}.e{i}"))
            for i in range(d1):
                basis.append(BasisElem(len(basis), lab, 1, f"{lab}.o{i}"))
        object.__setattr__(self, "group", group)
        object.__setattr__(
            self, "sectors", {lab: tuple(sectors.get(lab, (0, 0))) for lab in group.labels}
        )
        object.__setattr__(self, "basis", tuple(basis))
        object.__setattr__(
            self, "even_indices", tuple(b.index for b in basis if b.parity == 0)
        )
        object.__setattr__(
            self, "odd_indices", tuple(b.index for b in basis if b.parity == 1)
        )
        object.__setattr__(self, "parity", tuple(b.parity for b in basis))

    def __setattr__(self, name, value):
        raise AttributeError("SectorModel is immutable")

    def dims(self) -> tuple[int, int]:
        """Total graded dimension (sum of d0_c, sum of d1_c)."""
        return len(self.even_indices), len(self.odd_indices)

    @classmethod
    def from_dims(cls, d0: int, d1: int) -> "SectorModel":
        """A model with the given total dimensions over the one-class group."""
        return cls(GroupData.builtin("trivial"), {"c0": (d0, d1)})

    @classmethod
    def from_dict(cls, data: dict, base_dir=None) -> "SectorModel":
        group = data["group"]
        if isinstance(group, str):
            try:
                group = GroupData.builtin(group)
            except KeyError:
                path = Path(group)
                if base_dir is not None and not path.is_absolute():
                    path = Path(base_dir) / path
                group = GroupData.load(path)
        else:
            group = GroupData.from_dict(group)
        sectors = {s["class"]: (s.get("d0", 0), s.get("d1", 0)) for s in data["sectors"]}
        return cls(group, sectors)

    @classmethod
    def load(cls, path) -> "SectorModel":
        path = Path(path)
        with open(path) as fh:
            return cls.from_dict(json.load(fh), base_dir=path.parent)

    @classmethod
    def builtin(cls, name: str) -> "SectorModel":
        path = Path(__file__).parent / "data" / f"{name}.json"
        if not path.exists():
            raise KeyError(f"no builtin sector model {name!r}")
        return cls.load(path)

    def __repr__(self):
        return f"SectorModel(group={self.group.name!r}, dims={self.dims()})"


def state_degree(state) -> int:
    even, odd = state
    return sum(g[0] for g in even) + sum(g[0] for g in odd)


def state_parity(state) -> int:
    return len(state[1]) % 2


class FockVector:
    """Finitely supported rational combination of basis states."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=None):
        clean = {}
        for state, c in (coeffs or {}).items():
            c = Fraction(c)
            if c:
                clean[state] = c
        object.__setattr__(self, "coeffs", clean)

    def __setattr__(self, name, value):
        raise AttributeError("FockVector is immutable")

    @classmethod
    def vacuum(cls) -> "FockVector":
        return cls({VACUUM: Fraction(1)})

    @classmethod
    def from_state(cls, state, coeff=1) -> "FockVector":
        return cls({state: Fraction(coeff)})

    def coefficient(self, state) -> Fraction:
        return self.coeffs.get(state, Fraction(0))

    def __add__(self, other):
        out = dict(self.coeffs)
        for s, c in other.coeffs.items():
            out[s] = out.get(s, Fraction(0)) + c
        return FockVector(out)

    def __sub__(self, other):
        out = dict(self.coeffs)
        for s, c in other.coeffs.items():
            out[s] = out.get(s, Fraction(0)) - c
        return FockVector(out)

    def __rmul__(self, scalar):
        scalar = Fraction(scalar)
        return FockVector({s: scalar * c for s, c in self.coeffs.items()})

    def __neg__(self):
        return (-1) * self

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        return isinstance(other, FockVector) and self.coeffs == other.coeffs

    def degrees(self) -> set[int]:
        return {state_degree(s) for s in self.coeffs}

    def degree_component(self, n: int) -> "FockVector":
        return FockVector(
            {s: c for s, c in self.coeffs.items() if state_degree(s) == n}
        )

    def __str__(self):
        if not self.coeffs:
            return "0"
        bits = []
        for s, c in sorted(self.coeffs.items()):
            bits.append(f"{c}*{s}")
        return " + ".join(bits)

    __repr__ = __str__


def _odd_subsets(gens, budget, start=0):
    yield ()
    for i in range(start, len(gens)):
        r = gens[i][0]
        if r <= budget:
            for rest in _odd_subsets(gens, budget - r, i + 1):
                yield (gens[i],) + rest


def _even_multisets(gens, target, start=0):
    if target == 0:
        yield ()
        return
    for i in range(start, len(gens)):
        r = gens[i][0]
        if r <= target:
            for rest in _even_multisets(gens, target - r, i):
                yield (gens[i],) + rest


def fock_basis(model: SectorModel, n: int):
    """All degree-n basis states, deterministically ordered."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    levels = list(odd_exponents(n))
    odd_gens = [(r, i) for r in levels for i in model.odd_indices]
    even_gens = [(r, i) for r in levels for i in model.even_indices]
    out = []
    for odd_part in _odd_subsets(odd_gens, n):
        w = sum(g[0] for g in odd_part)
        for even_part in _even_multisets(even_gens, n - w):
            out.append((even_part, tuple(sorted(odd_part))))
    out.sort()
    return out


def dim_series(model: SectorModel, N: int) -> PowerSeries:
    """prod_{r odd} (1 + t^r)^d1 / (1 - t^r)^d0, exact to degree N."""
    d0, d1 = model.dims()
    num = PowerSeries.product_form(N, odd_exponents(N), +1, d1)
    den = PowerSeries.product_form(N, odd_exponents(N), -1, -d0)
    return num * den


def _insert_even(even, gen):
    even = list(even)
    insort(even, gen)
    return tuple(even)


def _insert_odd(odd, gen):
    """Insert an odd generator; returns (new tuple, sign) or None if present."""
    pos = bisect_left(odd, gen)
    if pos < len(odd) and odd[pos] == gen:
        return None
    return odd[:pos] + (gen,) + odd[pos:], (-1) ** pos


def _removal_terms(state):
    """All single-generator removals: list of (r, idx, new state, signed mult)."""
    even, odd = state
    out = []
    i = 0
    while i < len(even):
        gen = even[i]
        j = i
        while j < len(even) and even[j] == gen:
            j += 1
        out.append((gen[0], gen[1], (even[:i] + even[j:], odd), j - i))
        i = j
    for pos, gen in enumerate(odd):
        out.append((gen[0], gen[1], (even, odd[:pos] + odd[pos + 1 :]), (-1) ** pos))
    return out


def _check_odd_level(r):
    if r < 1 or r % 2 == 0:
        raise ValueError(f"level must be odd and positive, got {r}")


def _sector_vector(model, V):
    V = list(V)
    if len(V) != len(model.basis):
        raise ValueError(
            f"sector vector has length {len(V)}, model has {len(model.basis)} basis elements"
        )
    return V


def a_create(model: SectorModel, r: int, V, vec: FockVector) -> FockVector:
    """Creation at odd level r: (r/2) times multiplication by sum_b V_b (r, b)."""
    _check_odd_level(r)
    V = _sector_vector(model, V)
    half_r = Fraction(r, 2)
    out: dict = {}
    for state, c in vec.coeffs.items():
        even, odd = state
        for idx, vb in enumerate(V):
            if not vb:
                continue
            gen = (r, idx)
            if model.parity[idx] == 0:
                ns, sign = (_insert_even(even, gen), odd), 1
            else:
                res = _insert_odd(odd, gen)
                if res is None:
                    continue
                new_odd, sign = res
                ns = (even, new_odd)
            out[ns] = out.get(ns, Fraction(0)) + c * Fraction(vb) * half_r * sign
    return FockVector(out)


def a_annihilate(model: SectorModel, m: int, eta, vec: FockVector) -> FockVector:
    """Annihilation at odd level m: the superderivation with value <eta, b>
    on the generator (m, b); kills the vacuum."""
    _check_odd_level(m)
    eta = _sector_vector(model, eta)
    out: dict = {}
    for state, c in vec.coeffs.items():
        for r, idx, ns, smult in _removal_terms(state):
            if r == m and eta[idx]:
                out[ns] = out.get(ns, Fraction(0)) + c * smult * Fraction(eta[idx])
    return FockVector(out)


def pairing(eta, V) -> Fraction:
    """Natural pairing of a dual vector against a sector vector."""
    return sum((Fraction(e) * Fraction(v) for e, v in zip(eta, V)), Fraction(0))


def varpi(model: SectorModel, n: int, V) -> FockVector:
    """Single-generator embedding of a sector vector at odd level n."""
    _check_odd_level(n)
    V = _sector_vector(model, V)
    out = {}
    for idx, vb in enumerate(V):
        if not vb:
            continue
        gen = (n, idx)
        state = ((gen,), ()) if model.parity[idx] == 0 else ((), (gen,))
        out[state] = Fraction(vb)
    return FockVector(out)


def ch_n(model: SectorModel, n: int, vec: FockVector) -> list[Fraction]:
    """Extract the single-generator level-n component as a sector vector;
    product states contribute nothing.  Left inverse of varpi."""
    _check_odd_level(n)
    out = [Fraction(0)] * len(model.basis)
    for state, c in vec.coeffs.items():
        even, odd = state
        if len(even) + len(odd) != 1:
            continue
        gen = even[0] if even else odd[0]
        if gen[0] == n:
            out[gen[1]] += c
    return out


def lower_to_vacuum(model: SectorModel, vec: FockVector) -> Fraction:
    """Drive a nonzero vector to a nonzero multiple of the vacuum with
    annihilation operators (the computable face of irreducibility).

    Picks a support state of top degree and applies the annihilation
    monomial dual to it; distinct states of the same degree cannot
    survive that monomial, so the vacuum coefficient is nonzero.
    """
    if not vec:
        raise ValueError("zero vector cannot be lowered")
    top = max(vec.degrees())
    target = max(
        (s for s in vec.coeffs if state_degree(s) == top),
        key=lambda s: (s[1], s[0]),
    )
    current = vec
    for part in (tuple(reversed(target[1])), target[0]):
        for gen in part:
            eta = [0] * len(model.basis)
            eta[gen[1]] = 1
            current = a_annihilate(model, gen[0], eta, current)
    return current.coefficient(VACUUM)


def euler_series(e: int, N: int) -> PowerSeries:
    """prod_{r>=1} (1 - t^(2r-1))^(-e), the signed-dimension generating
    function of a model with total graded Euler number e."""
    if N < 0:
        raise ValueError("N must be nonnegative")
    return PowerSeries.product_form(N, odd_exponents(N), -1, -e)


def euler_s_series(e: int, N: int) -> PowerSeries:
    """Signed-dimension series for the symmetric-double-cover variant,
    where odd split classes also contribute:

        prod (1-t^(2r-1))^-e
          + prod (1+t^(2r-1))^e * ( prod (1+t^(2r))^e - prod (1-t^(2r))^e ) / 2.
    """
    if N < 0:
        raise ValueError("N must be nonnegative")
    a = PowerSeries.product_form(N, odd_exponents(N), -1, -e)
    b = PowerSeries.product_form(N, odd_exponents(N), +1, e)
    c = PowerSeries.product_form(N, even_exponents(N), +1, e)
    d = PowerSeries.product_form(N, even_exponents(N), -1, e)
    return a + Fraction(1, 2) * (b * (c - d))


def euler_characteristic(model: SectorModel, n: int) -> int:
    """Signed state count at degree n: even-parity states minus odd."""
    total = 0
    for state in fock_basis(model, n):
        total += -1 if state_parity(state) else 1
    return total


class OperatorKernel:
    """Integer-arithmetic engine for the exhaustive relation sweeps.

    States are interned to small ids and single-generator moves are
    cached, so repeated operator applications cost dictionary lookups.
    Creation here is scaled by 2 (factor r instead of r/2) to stay in
    integers; the sweeps account for the scaling explicitly.
    """

    __slots__ = ("model", "states", "index", "_insert", "_remove")

    def __init__(self, model: SectorModel):
        self.model = model
        self.states = []
        self.index = {}
        self._insert = {}
        self._remove = {}

    def intern(self, state) -> int:
        sid = self.index.get(state)
        if sid is None:
            sid = len(self.states)
            self.states.append(state)
            self.index[state] = sid
        return sid

    def insert(self, sid, gen):
        key = (sid, gen)
        hit = self._insert.get(key, _MISSING)
        if hit is not _MISSING:
            return hit
        state = self.states[sid]
        even, odd = state
        if self.model.parity[gen[1]] == 0:
            res = (self.intern((_insert_even(even, gen), odd)), 1)
        else:
            ins = _insert_odd(odd, gen)
            res = None if ins is None else (self.intern((even, ins[0])), ins[1])
        self._insert[key] = res
        return res

    def removals(self, sid):
        hit = self._remove.get(sid)
        if hit is None:
            hit = tuple(
                (r, idx, self.intern(ns), smult)
                for r, idx, ns, smult in _removal_terms(self.states[sid])
            )
            self._remove[sid] = hit
        return hit

    def create2(self, vec: dict, l: int, coeff_items) -> dict:
        """Apply 2*a_l(V) (= l * multiplication) with integer coefficients."""
        out: dict = {}
        for sid, c in vec.items():
            for idx, vb in coeff_items:
                res = self.insert(sid, (l, idx))
                if res is None:
                    continue
                tid, sign = res
                val = out.get(tid, 0) + c * vb * sign * l
                if val:
                    out[tid] = val
                elif tid in out:
                    del out[tid]
        return out

    def annihilate(self, vec: dict, m: int, eta: dict) -> dict:
        out: dict = {}
        for sid, c in vec.items():
            for r, idx, tid, smult in self.removals(sid):
                if r == m:
                    ev = eta.get(idx)
                    if ev:
                        val = out.get(tid, 0) + c * smult * ev
                        if val:
                            out[tid] = val
                        elif tid in out:
                            del out[tid]
        return out


def _random_parity_vector(rng, model, parity):
    idx = model.even_indices if parity == 0 else model.odd_indices
    if not idx:
        return None
    vec = {}
    while not any(vec.values()):
        vec = {i: rng.randint(-5, 5) for i in idx}
    return vec


def heisenberg_report(model: SectorModel, D: int = 9, pairs: int = 50, seed: int = 0):
    """Exhaustively verify the three bracket relations on every basis state
    of degree <= D, for `pairs` random homogeneous (eta, V) draws.

    Checked, with creation scaled by 2 to stay integral:

      [a_-m(eta), a_l(V)]  = (l/2) delta_{m,l} <eta, V>    (central term)
      [a_m(W),    a_l(V)]  = 0                              (creations)
      [a_-m(eta), a_-l(eta')] = 0                           (annihilations)

    Odd-odd pairs use the anticommutator.  Returns a report dict with the
    number of identities checked and the first counterexample, if any.
    """
    kernel = OperatorKernel(model)
    base = [kernel.intern(s) for n in range(D + 1) for s in fock_basis(model, n)]
    rng = random.Random(seed)
    levels = list(odd_exponents(D))
    checked = 0
    failures = []

    def record(kind, detail):
        failures.append({"relation": kind, "detail": detail})

    for pair_index in range(pairs):
        p_eta = (pair_index >> 1) & 1
        p_v = pair_index & 1
        eta = _random_parity_vector(rng, model, p_eta)
        eta2 = _random_parity_vector(rng, model, p_eta)
        V = _random_parity_vector(rng, model, p_v)
        W = _random_parity_vector(rng, model, p_v)
        if eta is None or V is None:
            continue
        koszul = -1 if (p_eta and p_v) else 1
        v_items = tuple(V.items())
        w_items = tuple(W.items())
        central = sum(eta.get(i, 0) * v for i, v in V.items())
        for m in levels:
            for l in levels:
                for sid in base:
                    one = {sid: 1}
                    ab = kernel.annihilate(kernel.create2(one, l, v_items), m, eta)
                    ba = kernel.create2(kernel.annihilate(one, m, eta), l, v_items)
                    for tid, c in ba.items():
                        val = ab.get(tid, 0) - koszul * c
                        if val:
                            ab[tid] = val
                        elif tid in ab:
                            del ab[tid]
                    expected = {sid: l * central} if (m == l and l * central) else {}
                    checked += 1
                    if ab != expected:
                        record(
                            "central",
                            f"pair {pair_index}, m={m}, l={l}, state {kernel.states[sid]}",
                        )
                if l < m:
                    continue
                koszul_vv = -1 if p_v else 1
                koszul_ee = -1 if p_eta else 1
                for sid in base:
                    one = {sid: 1}
                    ab = kernel.create2(kernel.create2(one, l, v_items), m, w_items)
                    ba = kernel.create2(kernel.create2(one, m, w_items), l, v_items)
                    for tid, c in ba.items():
                        val = ab.get(tid, 0) - koszul_vv * c
                        if val:
                            ab[tid] = val
                        elif tid in ab:
                            del ab[tid]
                    checked += 1
                    if ab:
                        record(
                            "creation",
                            f"pair {pair_index}, m={m}, l={l}, state {kernel.states[sid]}",
                        )
                    ab = kernel.annihilate(kernel.annihilate(one, l, eta2), m, eta)
                    ba = kernel.annihilate(kernel.annihilate(one, m, eta), l, eta2)
                    for tid, c in ba.items():
                        val = ab.get(tid, 0) - koszul_ee * c
                        if val:
                            ab[tid] = val
                        elif tid in ab:
                            del ab[tid]
                    checked += 1
                    if ab:
                        record(
                            "annihilation",
                            f"pair {pair_index}, m={m}, l={l}, state {kernel.states[sid]}",
                        )
                if failures:
                    return {
                        "model": repr(model),
                        "degree_bound": D,
                        "pairs": pairs,
                        "seed": seed,
                        "checked": checked,
                        "passed": False,
                        "failures": failures,
                    }
    return {
        "model": repr(model),
        "degree_bound": D,
        "pairs": pairs,
        "seed": seed,
        "checked": checked,
        "passed": True,
        "failures": [],
    }
