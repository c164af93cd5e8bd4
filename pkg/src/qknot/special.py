"""The specialisation lattice between the coefficient rings.

Source rings and maps (N is the colour, xi the primitive 2N-th root of unity,
and s stays a formal variable throughout -- nothing is ever evaluated to a
complex float):

    gamma        : Z[x^±, d^±] -> Z[q^±, s^±]      x -> s^2,        d -> q^-2
    psi_generic  : Z[x^±, d^±] -> Z[q^±]           x -> q^(2(N-1)), d -> q^-2
    psi_root     : Z[x^±, d^±] -> Z[xi][s^±]       x -> s^2,        d -> xi^-2
    gamma_n      : Z[x^±, d^±] -> Z[xi][s^±]       x -> s^2,        d -> xi^-2
    eta_generic  : Z[q^±, s^±] -> Z[q^±]           s -> q^(N-1)
    eta_root     : Z[q^±, s^±] -> Z[xi][s^±]       q -> xi

The diagram commutes: psi_generic = eta_generic ∘ gamma and
psi_root = eta_root ∘ gamma; gamma_n factors the root case through the ring
where the d-exponent only matters modulo N (xi^-2 has multiplicative
order N), which is what the mod-N invariant route exploits.
"""

from __future__ import annotations

import dataclasses

from .rings import (CycLaurent, CycScalar, OneVarLaurent, QS, RingError,
                    TwoVarLaurent, XD, qbinom)


def _require_vars(p, vars_):
    if p.vars != vars_:
        raise RingError(f"expected a polynomial in {vars_}, got {p.vars}")


def gamma(p: TwoVarLaurent) -> TwoVarLaurent:
    """x -> s^2, d -> q^-2."""
    _require_vars(p, XD)
    out = {}
    for (a, b), c in p.terms.items():
        out[(-2 * b, 2 * a)] = out.get((-2 * b, 2 * a), 0) + c
    return TwoVarLaurent(out, QS)


def psi_generic(p: TwoVarLaurent, N: int) -> OneVarLaurent:
    """x -> q^(2(N-1)), d -> q^-2."""
    _require_vars(p, XD)
    out = {}
    for (a, b), c in p.terms.items():
        e = 2 * (N - 1) * a - 2 * b
        out[e] = out.get(e, 0) + c
    return OneVarLaurent(out, "q")


def eta_generic(p: TwoVarLaurent, N: int) -> OneVarLaurent:
    """s -> q^(N-1)."""
    _require_vars(p, QS)
    out = {}
    for (e, f), c in p.terms.items():
        k = e + (N - 1) * f
        out[k] = out.get(k, 0) + c
    return OneVarLaurent(out, "q")


def psi_root(p: TwoVarLaurent, N: int) -> CycLaurent:
    """x -> s^2, d -> xi^-2 with s kept symbolic (s stands for xi^lambda)."""
    _require_vars(p, XD)
    out = {}
    for (a, b), c in p.terms.items():
        scalar = CycScalar.root_power(-2 * b, N) * c
        prev = out.get(2 * a)
        out[2 * a] = scalar if prev is None else prev + scalar
    return CycLaurent({e: c for e, c in out.items() if c}, N)


def gamma_n(p: TwoVarLaurent, N: int) -> CycLaurent:
    """The mod-N local-system substitution; same target map as `psi_root`
    but kept as a distinct entry point because the mod-N invariant route
    reduces d-exponents before calling it."""
    return psi_root(p, N)


def eta_root(p: TwoVarLaurent, N: int) -> CycLaurent:
    """q -> xi, s kept symbolic."""
    _require_vars(p, QS)
    out = {}
    for (e, f), c in p.terms.items():
        scalar = CycScalar.root_power(e, N) * c
        prev = out.get(f)
        out[f] = scalar if prev is None else prev + scalar
    return CycLaurent({e: c for e, c in out.items() if c}, N)


_TAGS = ("gamma", "psi_generic", "psi_root", "gamma_n", "eta_generic", "eta_root")


@dataclasses.dataclass(frozen=True)
class SpecTarget:
    """A named node of the specialisation lattice (tag plus colour)."""

    tag: str
    colour: int | None = None

    def __post_init__(self):
        if self.tag not in _TAGS:
            raise ValueError(f"unknown specialisation {self.tag!r}")
        if self.tag != "gamma" and (self.colour is None or self.colour < 2):
            raise ValueError(f"{self.tag} needs a colour N >= 2")

    @classmethod
    def gamma(cls):
        return cls("gamma")

    @classmethod
    def psi_generic(cls, N):
        return cls("psi_generic", N)

    @classmethod
    def psi_root(cls, N):
        return cls("psi_root", N)

    @classmethod
    def gamma_n(cls, N):
        return cls("gamma_n", N)

    @classmethod
    def eta_generic(cls, N):
        return cls("eta_generic", N)

    @classmethod
    def eta_root(cls, N):
        return cls("eta_root", N)


def specialize(p: TwoVarLaurent, target: SpecTarget):
    """Apply a lattice map to p; the source ring must match the target's."""
    if target.tag == "gamma":
        return gamma(p)
    if target.tag == "psi_generic":
        return psi_generic(p, target.colour)
    if target.tag == "psi_root":
        return psi_root(p, target.colour)
    if target.tag == "gamma_n":
        return gamma_n(p, target.colour)
    if target.tag == "eta_generic":
        return eta_generic(p, target.colour)
    return eta_root(p, target.colour)


def evaluate_at_root(p: OneVarLaurent, N: int) -> CycScalar:
    """Evaluate a one-variable q-polynomial at the primitive 2N-th root."""
    acc = CycScalar.zero(N)
    for e, c in p.terms.items():
        acc = acc + CycScalar.root_power(e, N) * c
    return acc


def truncation_vanishing(i, j, n, N) -> CycScalar:
    """The braiding q-coefficient F(i, j, n) evaluated at the 2N-th root.

    For admissible indices (i <= N-1, n <= i) it vanishes exactly whenever
    j + n >= N: the Gaussian binomial picks up the vanishing quantum integer
    [N].  This is the root-of-unity truncation mechanism, checked exactly."""
    if not (0 <= i <= N - 1 and 0 <= j <= N - 1):
        raise ValueError(f"indices (i={i}, j={j}) must lie in 0..{N - 1}")
    if not 0 <= n <= i:
        raise ValueError(f"term index {n} outside 0..{i}")
    shift = 2 * (i - n) * (j + n) + n * (n - 1) // 2
    f_poly = OneVarLaurent(
        {e + shift: c for (e, _), c in qbinom(n + j, j).terms.items()}, "q")
    return evaluate_at_root(f_poly, N)
