"""The unified two-variable pairing of a braid word and its two
one-variable specialisations.

For a braid on n strands and a colour N, the pairing is computed on the
weight space of weight (n-1)(N-1) in a (2n-1)-strand tensor power: the braid
is padded with n-1 trivial strands, each "symmetric" start vector

    sym(i_1, ..., i_{n-1}) = (0, i_1, ..., i_{n-1}, N-1-i_{n-1}, ..., N-1-i_1)

is pushed through the representation, and only the diagonal coefficient (the
coefficient of the start vector in its own image) survives the duality.  The
result

    I_N(beta) = sum over indices of d^(i_1+...+i_{n-1}) * c(index)

lives in Z[x^±, d^±]: each diagonal (q, s)-coefficient has only even
exponents and converts by s^(2a) q^(-2b) -> x^a d^b.  An odd exponent can
only mean a bug, and raises `PairingImageError`.

Framed specialisations:

    jones(beta, N) = q^((N-1)(n-1-w)) · I_N|_{x -> q^(2(N-1)), d -> q^-2}
    ado(beta, N)   = s^((N-1)(w-n+1)) · I_N|_{x -> s^2, d -> xi^-2}

with w the writhe.  `ado_zn_route` computes the same value by reducing the
d-exponents modulo N first (the local system with a mod-N deck variable),
which is an independent code path used for cross-checking.
"""

from __future__ import annotations

import dataclasses
import itertools
from concurrent.futures import ThreadPoolExecutor

from .braid import BraidWord, extend, require_knot, writhe
from .rings import (CycLaurent, CycScalar, OneVarLaurent, QS, TwoVarLaurent,
                    XD, yfact)
from .special import gamma_n, psi_generic, psi_root
from .verma import WeightVector, apply_braid


class PairingImageError(RuntimeError):
    """A pairing coefficient fell outside the expected even-exponent lattice.

    This is an internal-consistency failure, not a user error: the theory
    guarantees membership, so seeing this means the implementation is wrong
    (or has found a genuine counterexample worth reporting)."""


@dataclasses.dataclass(frozen=True)
class SymmetricIndex:
    """A tuple (i_1, ..., i_{n-1}) with 0 <= i_k <= N-1, indexing one
    symmetric start vector of the pairing."""

    colour: int
    parts: tuple[int, ...]

    def __post_init__(self):
        if self.colour < 1:
            raise ValueError("colour must be >= 1")
        object.__setattr__(self, "parts", tuple(int(p) for p in self.parts))
        if any(not 0 <= p <= self.colour - 1 for p in self.parts):
            raise ValueError(f"index parts {self.parts} out of range "
                             f"0..{self.colour - 1}")

    def composition(self):
        """The associated composition (0, i_1.., N-1-i_.., reversed)."""
        rev = tuple(self.colour - 1 - p for p in reversed(self.parts))
        return (0,) + self.parts + rev

    def degree(self):
        """Exponent of d contributed by this index (the sum of the parts)."""
        return sum(self.parts)


def symmetric_compositions(n, N):
    """All N^(n-1) symmetric indices for an n-strand braid, sorted."""
    if n < 1 or N < 1:
        raise ValueError("need n >= 1 and N >= 1")
    return [SymmetricIndex(N, parts)
            for parts in itertools.product(range(N), repeat=n - 1)]


def pairing_support(e, n, N):
    """Whether a composition pairs nontrivially with the dual class: first
    part zero and mirror parts summing to N-1 (all parts <= N-1)."""
    e = tuple(e)
    m = (n - 1) * (N - 1)
    if len(e) != 2 * n - 1 or any(p < 0 for p in e) or sum(e) != m:
        raise ValueError(f"{e} is not a composition of {m} into {2 * n - 1} parts")
    if e[0] != 0:
        return False
    for k in range(1, n):
        a, b = e[k], e[2 * n - 1 - k]
        if a > N - 1 or b > N - 1 or a + b != N - 1:
            return False
    return True


@dataclasses.dataclass(frozen=True)
class UnifiedPairing:
    """The two-variable pairing value together with its framing data."""

    value: TwoVarLaurent
    colour: int
    strands: int
    writhe: int


def gamma_preimage(p: TwoVarLaurent) -> TwoVarLaurent:
    """Invert x -> s^2, d -> q^-2 on a polynomial with even exponents."""
    if p.vars != QS:
        raise ValueError(f"expected a (q, s) polynomial, got {p.vars}")
    out = {}
    for (qe, se), c in p.terms.items():
        if qe % 2 or se % 2:
            raise PairingImageError(
                f"not in image of gamma: monomial q^{qe} s^{se}")
        out[(se // 2, -qe // 2)] = c
    return TwoVarLaurent(out, XD)


def _map_ordered(fn, items, jobs):
    if jobs <= 1 or len(items) <= 1:
        return [fn(x) for x in items]
    with ThreadPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(fn, items))


def unified_pairing(beta: BraidWord, N: int, jobs: int = 1) -> UnifiedPairing:
    """Compute I_N(beta) by the per-index diagonal evaluation.

    The per-index computations are independent; `jobs` > 1 maps them over a
    thread pool.  Results are reduced in sorted index order either way, so
    the output is identical for every parallelism degree.
    """
    if N < 1:
        raise ValueError("colour must be >= 1")
    n = beta.strands
    padded = extend(beta, n - 1)

    def one_index(idx):
        e = idx.composition()
        image = apply_braid(padded, WeightVector.basis_vector(e))
        diag = image.entries.get(e)
        if diag is None:
            return TwoVarLaurent.zero(XD)
        return gamma_preimage(diag).times_monomial(1, (0, idx.degree()))

    parts = _map_ordered(one_index, symmetric_compositions(n, N), jobs)
    value = TwoVarLaurent.zero(XD)
    for part in parts:
        value = value + part
    return UnifiedPairing(value, N, n, writhe(beta))


def jones_from_unified(u: UnifiedPairing) -> OneVarLaurent:
    """Specialise and frame a pairing value to the generic-q invariant."""
    framing = (u.colour - 1) * ((u.strands - 1) - u.writhe)
    return psi_generic(u.value, u.colour).times_monomial(1, framing)


def ado_from_unified(u: UnifiedPairing) -> CycLaurent:
    """Specialise and frame a pairing value to the root-of-unity invariant."""
    framing = (u.colour - 1) * (u.writhe - (u.strands - 1))
    return psi_root(u.value, u.colour).times_monomial(1, framing)


def zn_route_from_unified(u: UnifiedPairing) -> CycLaurent:
    """Root-of-unity invariant via the mod-N deck variable: d-exponents are
    reduced modulo N before the cyclotomic substitution."""
    N = u.colour
    reduced = {}
    for (a, b), c in u.value.terms.items():
        key = (a, b % N)
        reduced[key] = reduced.get(key, 0) + c
    framing = (N - 1) * (u.writhe - (u.strands - 1))
    return gamma_n(TwoVarLaurent(reduced, XD), N).times_monomial(1, framing)


def coloured_jones(beta: BraidWord, N: int, force: bool = False,
                   jobs: int = 1) -> OneVarLaurent:
    """The colour-N generic invariant of the braid closure, normalised to 1
    on the unknot.  Requires a knot closure unless `force` is set."""
    require_knot(beta, force)
    return jones_from_unified(unified_pairing(beta, N, jobs))


def ado(beta: BraidWord, N: int, force: bool = False,
        jobs: int = 1) -> CycLaurent:
    """The colour-N root-of-unity invariant of the braid closure, a Laurent
    polynomial in s over Z[xi_N].  Requires a knot closure unless forced."""
    if N < 2:
        raise ValueError("the root-of-unity invariant needs N >= 2")
    require_knot(beta, force)
    return ado_from_unified(unified_pairing(beta, N, jobs))


def ado_zn_route(beta: BraidWord, N: int, force: bool = False,
                 jobs: int = 1) -> CycLaurent:
    """Same value as `ado`, computed through the mod-N exponent reduction."""
    if N < 2:
        raise ValueError("the root-of-unity invariant needs N >= 2")
    require_knot(beta, force)
    return zn_route_from_unified(unified_pairing(beta, N, jobs))


def multiarc_to_code_coeff(e) -> TwoVarLaurent:
    """Basis-change coefficient between the two homological bases: the
    product of one-sided quantum factorials of the parts, in d."""
    out = TwoVarLaurent.one(XD)
    for p in e:
        if p < 0:
            raise ValueError(f"bad composition part {p}")
        out = out * yfact(p, "d")
    return out


# ---------------------------------------------------------------------------
# Result objects and JSON wire format
# ---------------------------------------------------------------------------

@dataclasses.dataclass(frozen=True)
class InvariantResult:
    """A computed invariant plus the input it came from, JSON-serialisable."""

    kind: str  # "jones" | "ado" | "unified"
    colour: int
    braid: BraidWord
    value: object

    def render(self):
        return self.value.render()

    def to_json_dict(self):
        if self.kind == "unified":
            terms = [{"exp": [a, b], "coef": c}
                     for (a, b), c in sorted(self.value.terms.items(), reverse=True)]
        elif self.kind == "jones":
            terms = [{"exp": [e], "coef": self.value.terms[e]}
                     for e in sorted(self.value.terms, reverse=True)]
        elif self.kind == "ado":
            terms = [{"exp": [e], "coef": list(self.value.terms[e].coeffs)}
                     for e in sorted(self.value.terms, reverse=True)]
        else:
            raise ValueError(f"unknown result kind {self.kind!r}")
        return {
            "invariant": self.kind,
            "N": self.colour,
            "braid": list(self.braid.letters),
            "strands": self.braid.strands,
            "writhe": writhe(self.braid),
            "terms": terms,
        }

    @classmethod
    def from_json_dict(cls, data):
        kind = data["invariant"]
        N = data["N"]
        beta = BraidWord(data["strands"], tuple(data["braid"]))
        if kind == "unified":
            value = TwoVarLaurent(
                {tuple(t["exp"]): t["coef"] for t in data["terms"]}, XD)
        elif kind == "jones":
            value = OneVarLaurent(
                {t["exp"][0]: t["coef"] for t in data["terms"]}, "q")
        elif kind == "ado":
            value = CycLaurent(
                {t["exp"][0]: CycScalar(t["coef"], N) for t in data["terms"]}, N)
        else:
            raise ValueError(f"unknown result kind {kind!r}")
        return cls(kind, N, beta, value)
