"""Specialisation lattice: substitutions, commuting squares, truncation."""

import random

import pytest

from qknot.rings import (CycLaurent, CycScalar, OneVarLaurent, QS, RingError,
                         TwoVarLaurent, XD)
from qknot.special import (SpecTarget, eta_generic, eta_root, gamma, gamma_n,
                           psi_generic, psi_root, specialize,
                           truncation_vanishing)


def xd(terms):
    return TwoVarLaurent(terms, XD)


def random_xd(rng):
    terms = {(rng.randint(-5, 5), rng.randint(-5, 5)): rng.randint(-9, 9)
             for _ in range(rng.randint(1, 6))}
    return xd(terms)


def test_gamma_example():
    # x*d -> s^2 q^-2
    assert gamma(xd({(1, 1): 1})) == TwoVarLaurent({(-2, 2): 1}, QS)
    assert gamma(xd({(0, 0): 5})) == TwoVarLaurent({(0, 0): 5}, QS)


def test_psi_generic_example():
    assert psi_generic(xd({(1, 0): 1}), 3) == OneVarLaurent({4: 1}, "q")
    assert psi_generic(xd({(0, 1): 1}), 3) == OneVarLaurent({-2: 1}, "q")


def test_gamma_n_example():
    trefoil_value = xd({(0, 0): 1, (-1, 1): 1, (-2, 1): -1})
    got = gamma_n(trefoil_value, 2)
    assert got == CycLaurent({0: 1, -2: -1, -4: 1}, 2)


def test_diagram_commutes():
    rng = random.Random(17)
    for N in (2, 3, 4):
        for _ in range(50):
            p = random_xd(rng)
            assert eta_generic(gamma(p), N) == psi_generic(p, N)
            assert eta_root(gamma(p), N) == psi_root(p, N)


def test_gamma_n_equals_psi_root_after_mod_reduction():
    rng = random.Random(23)
    for N in (2, 3, 4):
        for _ in range(30):
            p = random_xd(rng)
            reduced = {}
            for (a, b), c in p.terms.items():
                key = (a, b % N)
                reduced[key] = reduced.get(key, 0) + c
            assert gamma_n(xd(reduced), N) == psi_root(p, N)


def test_spec_target_dispatch():
    p = xd({(1, 1): 1})
    assert specialize(p, SpecTarget.gamma()) == gamma(p)
    assert specialize(p, SpecTarget.psi_generic(3)) == psi_generic(p, 3)
    assert specialize(p, SpecTarget.psi_root(2)) == psi_root(p, 2)
    assert specialize(p, SpecTarget.gamma_n(2)) == gamma_n(p, 2)
    q = gamma(p)
    assert specialize(q, SpecTarget.eta_generic(4)) == eta_generic(q, 4)
    assert specialize(q, SpecTarget.eta_root(3)) == eta_root(q, 3)
    with pytest.raises(ValueError):
        SpecTarget("nonsense")
    with pytest.raises(ValueError):
        SpecTarget.psi_generic(1)


def test_source_ring_enforced():
    p_qs = TwoVarLaurent({(1, 0): 1}, QS)
    with pytest.raises(RingError):
        gamma(p_qs)
    with pytest.raises(RingError):
        eta_generic(xd({(1, 0): 1}), 2)


def test_truncation_vanishing_examples():
    assert truncation_vanishing(1, 1, 1, 2) == CycScalar.zero(2)
    assert truncation_vanishing(2, 2, 1, 3) == CycScalar.zero(3)
    assert truncation_vanishing(1, 0, 1, 2) == CycScalar.one(2)


def test_truncation_vanishing_sweep():
    for N in range(2, 6):
        for i in range(N):
            for j in range(N):
                for n in range(i + 1):
                    value = truncation_vanishing(i, j, n, N)
                    if j + n >= N:
                        assert not value, (i, j, n, N)


def test_truncation_vanishing_validation():
    with pytest.raises(ValueError):
        truncation_vanishing(3, 0, 0, 3)
    with pytest.raises(ValueError):
        truncation_vanishing(1, 0, 2, 3)
