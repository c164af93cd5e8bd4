"""Braid-group action on weight spaces of tensor powers of the generic
highest-weight module over Z[q^±, s^±].

The module basis is indexed by v_0, v_1, ...; the basis of the weight-m
subspace of the n-th tensor power is indexed by compositions of m into n
nonnegative parts.  Braid generators act by a two-factor braiding operator
whose coefficients are exact Laurent polynomials in (q, s):

    braiding(v_i ⊗ v_j) =
        s^-(i+j) · sum_{k=0}^{i}  F(i, j, k) ·
            prod_{r=0}^{k-1} (s·q^(-r-j) - s^(-1)·q^(r+j)) · v_{j+k} ⊗ v_{i-k}

with F(i, j, k) = q^(2(i-k)(j+k)) · q^(k(k-1)/2) · qbinom(k+j, j).

Inverse generators are obtained exactly, per two-factor weight block: in the
basis ordered by first index the forward operator is triangular with
unit-monomial pivots, so back-substitution over the Laurent ring inverts it
without leaving the ring.  Expansions are memoized per (i, j, sign) since the
braid loop hits them constantly; the cache supports concurrent reads with
serialized inserts.
"""

from __future__ import annotations

import dataclasses
import json
import math
import threading

from .braid import BraidWord
from .rings import QS, TwoVarLaurent, add_mul_terms, qbinom


def enumerate_basis(n, m):
    """All compositions of m into n nonnegative parts, lexicographic order."""
    if n < 1 or m < 0:
        raise ValueError(f"bad weight-space parameters ({n}, {m})")
    out = []

    def rec(prefix, remaining, slots):
        if slots == 1:
            out.append(prefix + (remaining,))
            return
        for first in range(remaining + 1):
            rec(prefix + (first,), remaining - first, slots - 1)

    rec((), m, n)
    return out


def basis_count(n, m):
    return math.comb(m + n - 1, n - 1)


def is_composition(e, n, m):
    return (len(e) == n and all(isinstance(p, int) and p >= 0 for p in e)
            and sum(e) == m)


@dataclasses.dataclass(frozen=True)
class WeightVector:
    """Sparse element of a weight space: composition -> (q, s) coefficient."""

    strands: int
    weight: int
    entries: dict

    @classmethod
    def from_entries(cls, strands, weight, entries):
        clean = {}
        for e, c in entries.items():
            e = tuple(int(p) for p in e)
            if not is_composition(e, strands, weight):
                raise ValueError(f"key {e} is not a composition of {weight} "
                                 f"into {strands} parts")
            if c:
                clean[e] = c
        return cls(strands, weight, clean)

    @classmethod
    def basis_vector(cls, e):
        e = tuple(int(p) for p in e)
        if not e or any(p < 0 for p in e):
            raise ValueError(f"bad composition {e}")
        return cls(len(e), sum(e), {e: TwoVarLaurent.one(QS)})

    def coefficient(self, e):
        return self.entries.get(tuple(e), TwoVarLaurent.zero(QS))

    def __bool__(self):
        return bool(self.entries)

    def __add__(self, other):
        if (self.strands, self.weight) != (other.strands, other.weight):
            raise ValueError("weight-space mismatch")
        out = dict(self.entries)
        for e, c in other.entries.items():
            s = out.get(e)
            s = c if s is None else s + c
            if s:
                out[e] = s
            elif e in out:
                del out[e]
        return WeightVector(self.strands, self.weight, out)

    def scaled(self, poly):
        out = {}
        for e, c in self.entries.items():
            p = c * poly
            if p:
                out[e] = p
        return WeightVector(self.strands, self.weight, out)


def rmatrix_entry(i, j, n):
    """Closed-form coefficient of v_{j+n} ⊗ v_{i-n} in braiding(v_i ⊗ v_j)."""
    if i < 0 or j < 0:
        raise ValueError("basis indices must be nonnegative")
    if n < 0 or n > i:
        raise ValueError(f"term index {n} outside 0..{i}")
    poly = qbinom(n + j, j).times_monomial(
        1, (2 * (i - n) * (j + n) + n * (n - 1) // 2, 0))
    for k in range(n):
        factor = TwoVarLaurent({(-(k + j), 1): 1, (k + j, -1): -1}, QS)
        poly = poly * factor
    return poly.times_monomial(1, (0, -(i + j)))


def _ladder_down(power, i):
    """Index hit by the n-th raising power on v_i, or None if it annihilates."""
    return i - power if power <= i else None


def _divided_lower_coeff(power, i):
    """Coefficient of v_{i+power} in the divided lowering power on v_i."""
    poly = qbinom(power + i, i)
    for k in range(power):
        poly = poly * TwoVarLaurent({(-(k + i), 1): 1, (k + i, -1): -1}, QS)
    return poly


def rmatrix_series_oracle(i, j, cutoff):
    """Braiding of v_i ⊗ v_j assembled operator-by-operator from the module
    action (raising powers on the left factor, divided lowering powers on the
    right, then the weight-twisted swap).  Independent of `rmatrix_entry`."""
    if cutoff < i:
        raise ValueError(f"cutoff {cutoff} below first tensor index {i}")
    acc = {}
    for n in range(cutoff + 1):
        left = _ladder_down(n, i)
        if left is None:
            continue
        coeff = _divided_lower_coeff(n, j).times_monomial(1, (n * (n - 1) // 2, 0))
        a, b = left, j + n
        # twisted swap: v_a ⊗ v_b -> s^-(a+b) q^(2ab) v_b ⊗ v_a
        term = coeff.times_monomial(1, (2 * a * b, -(a + b)))
        key = (b, a)
        prev = acc.get(key)
        acc[key] = term if prev is None else prev + term
    return WeightVector(2, i + j, {k: c for k, c in acc.items() if c})


_EXPANSION_CACHE = {}
_CACHE_LOCK = threading.Lock()


def _forward_expansion(a, b):
    return tuple(((b + n, a - n), rmatrix_entry(a, b, n)) for n in range(a + 1))


def _invert_block(c):
    """Exact inverse of the braiding on the two-factor block of weight c.

    Returns {(a, b): ((key, poly), ...)} expanding the inverse image of each
    basis pair.  The forward operator sends (w1, w2) to (w2, w1) with a
    unit-monomial coefficient plus terms of strictly larger first index, so
    eliminating residuals in increasing first-index order terminates and
    keeps every coefficient inside the Laurent ring.
    """
    fwd = {(a, c - a): dict(_forward_expansion(a, c - a)) for a in range(c + 1)}
    inv = {}
    for a in range(c + 1):
        target = (a, c - a)
        solution = {}
        residual = {target: TwoVarLaurent.one(QS)}
        while residual:
            t = min(residual)
            r = residual.pop(t)
            w = (t[1], t[0])
            (ue, uc) = fwd[w][t].sole_term()
            if uc not in (1, -1):
                raise AssertionError("block pivot is not a unit monomial")
            factor = r.times_monomial(uc, (-ue[0], -ue[1]))
            solution[w] = factor
            for t2, p2 in fwd[w].items():
                if t2 == t:
                    continue
                upd = residual.get(t2, TwoVarLaurent.zero(QS)) - factor * p2
                if upd:
                    residual[t2] = upd
                elif t2 in residual:
                    del residual[t2]
        inv[target] = tuple(sorted(solution.items()))
    return inv


def _expansion(a, b, sign):
    key = (a, b, sign)
    hit = _EXPANSION_CACHE.get(key)
    if hit is not None:
        return hit
    with _CACHE_LOCK:
        hit = _EXPANSION_CACHE.get(key)
        if hit is not None:
            return hit
        if sign == 1:
            _EXPANSION_CACHE[key] = _forward_expansion(a, b)
        else:
            block = _invert_block(a + b)
            for pair, expansion in block.items():
                _EXPANSION_CACHE.setdefault((pair[0], pair[1], -1), expansion)
        return _EXPANSION_CACHE[key]


def apply_generator(v, i, sign=1):
    """Apply the braiding (or its exact inverse) to tensor factors (i, i+1)."""
    if sign not in (1, -1):
        raise ValueError("generator sign must be +1 or -1")
    if not 1 <= i <= v.strands - 1:
        raise ValueError(f"generator index {i} out of range for {v.strands} strands")
    out = {}
    for e, coeff in v.entries.items():
        a, b = e[i - 1], e[i]
        head, tail = e[:i - 1], e[i + 1:]
        for (a2, b2), poly in _expansion(a, b, sign):
            key = head + (a2, b2) + tail
            acc = out.get(key)
            if acc is None:
                acc = out[key] = {}
            add_mul_terms(acc, coeff.terms, poly.terms)
    entries = {}
    for key, terms in out.items():
        terms = {k: c for k, c in terms.items() if c}
        if terms:
            entries[key] = TwoVarLaurent._raw(terms, QS)
    return WeightVector(v.strands, v.weight, entries)


def apply_braid(beta: BraidWord, v: WeightVector) -> WeightVector:
    """Image of v under the word, letters applied left to right."""
    if beta.strands != v.strands:
        raise ValueError(f"braid on {beta.strands} strands cannot act on a "
                         f"{v.strands}-strand weight space")
    for k in beta.letters:
        v = apply_generator(v, abs(k), 1 if k > 0 else -1)
    return v


def representation_matrix_json(beta: BraidWord, n, m, indent=None):
    """Debug dump of the full weight-space matrix of a braid word as JSON.
    Rows and columns follow the canonical (lexicographic) basis order."""
    if beta.strands != n:
        raise ValueError("strand count mismatch")
    basis = enumerate_basis(n, m)
    index = {e: r for r, e in enumerate(basis)}
    columns = []
    for e in basis:
        img = apply_braid(beta, WeightVector.basis_vector(e))
        col = ["0"] * len(basis)
        for key, coeff in img.entries.items():
            col[index[key]] = coeff.render()
        columns.append(col)
    rows = [[columns[c][r] for c in range(len(basis))] for r in range(len(basis))]
    return json.dumps({
        "strands": n,
        "weight": m,
        "letters": list(beta.letters),
        "basis": [list(e) for e in basis],
        "entries": rows,
    }, indent=indent)
