"""The unified pairing and its framed specialisations."""

import random

import pytest

from qknot.braid import BraidWord, NotAKnotError, is_knot
from qknot.oracles import (ado2_to_classical, alexander_match_up_to_unit,
                           burau_alexander, jones_to_classical, kauffman_jones)
from qknot.pairing import (InvariantResult, PairingImageError, SymmetricIndex,
                           ado, ado_from_unified, ado_zn_route, coloured_jones,
                           gamma_preimage, jones_from_unified,
                           multiarc_to_code_coeff, pairing_support,
                           symmetric_compositions, unified_pairing)
from qknot.rings import CycLaurent, OneVarLaurent, QS, TwoVarLaurent, XD
from qknot.special import gamma
from qknot.verma import WeightVector, apply_braid

TREFOIL = BraidWord(2, (1, 1, 1))
FIG8 = BraidWord(3, (1, -2, 1, -2))


def xd(terms):
    return TwoVarLaurent(terms, XD)


def random_knot(rng, strands, max_len):
    while True:
        length = rng.randint(1, max_len)
        letters = tuple(rng.choice((1, -1)) * rng.randint(1, strands - 1)
                        for _ in range(length))
        beta = BraidWord(strands, letters)
        if is_knot(beta):
            return beta


def test_symmetric_compositions():
    assert [s.parts for s in symmetric_compositions(2, 2)] == [(0,), (1,)]
    assert [s.parts for s in symmetric_compositions(3, 2)] == \
        [(0, 0), (0, 1), (1, 0), (1, 1)]
    assert [s.parts for s in symmetric_compositions(2, 3)] == [(0,), (1,), (2,)]
    assert SymmetricIndex(3, (1,)).composition() == (0, 1, 1)
    assert SymmetricIndex(2, (0, 1)).composition() == (0, 0, 1, 0, 1)
    assert symmetric_compositions(1, 4) == [SymmetricIndex(4, ())]
    with pytest.raises(ValueError):
        SymmetricIndex(2, (2,))


def test_symmetric_composition_membership():
    for n, N in ((2, 2), (2, 3), (3, 2), (3, 3)):
        for idx in symmetric_compositions(n, N):
            e = idx.composition()
            assert sum(e) == (n - 1) * (N - 1)
            assert len(e) == 2 * n - 1
            assert pairing_support(e, n, N)


def test_pairing_support_examples():
    assert pairing_support((0, 1, 0), 2, 2) is True
    assert pairing_support((1, 0, 0), 2, 2) is False
    assert pairing_support((0, 0, 1, 1, 0), 3, 2) is False
    with pytest.raises(ValueError):
        pairing_support((0, 1, 1), 2, 2)  # wrong ambient weight


def test_identity_braid_closed_form():
    for n in range(1, 5):
        for N in range(1, 5):
            u = unified_pairing(BraidWord(n), N)
            expected = xd({(0, k): 1 for k in range(N)}) ** (n - 1)
            assert u.value == expected, (n, N)
    assert unified_pairing(BraidWord(1), 7).value == TwoVarLaurent.one(XD)


def test_trefoil_unified_value():
    u = unified_pairing(TREFOIL, 2)
    assert u.value == xd({(0, 0): 1, (-1, 1): 1, (-2, 1): -1})
    assert u.writhe == 3 and u.strands == 2 and u.colour == 2


def test_trefoil_jones_and_ado_frozen():
    assert coloured_jones(TREFOIL, 2) == OneVarLaurent({-2: 1, -6: 1, -8: -1}, "q")
    assert ado(TREFOIL, 2) == CycLaurent({2: 1, 0: -1, -2: 1}, 2)


def test_trefoil_against_oracles():
    jones_t = jones_to_classical(coloured_jones(TREFOIL, 2))
    assert jones_t == kauffman_jones(TREFOIL)
    alex_t = ado2_to_classical(ado(TREFOIL, 2))
    assert alexander_match_up_to_unit(alex_t, burau_alexander(TREFOIL))


def test_figure_eight_against_oracles():
    jones_t = jones_to_classical(coloured_jones(FIG8, 2))
    assert jones_t == kauffman_jones(FIG8)
    assert jones_t == OneVarLaurent({2: 1, 1: -1, 0: 1, -1: -1, -2: 1}, "t")
    alex_t = ado2_to_classical(ado(FIG8, 2))
    assert alexander_match_up_to_unit(alex_t, burau_alexander(FIG8))
    assert alexander_match_up_to_unit(alex_t, OneVarLaurent({1: 1, 0: -3, -1: 1}, "t"))


def habiro_figure_eight(N):
    """Cyclotomic expansion of the figure-eight invariant (Habiro):
    sum_k prod_{j=1..k} {N+j}{N-j} with {m} = q^m - q^-m.  An independent
    oracle for colours beyond the classical one."""
    total = OneVarLaurent.one("q")
    prod = OneVarLaurent.one("q")
    for k in range(1, N):
        for m in (N + k, N - k):
            prod = prod * OneVarLaurent({m: 1, -m: -1}, "q")
        total = total + prod
    return total


def test_figure_eight_higher_colours_match_cyclotomic_expansion():
    for N in (2, 3, 4):
        assert coloured_jones(FIG8, N) == habiro_figure_eight(N), N


def test_cinquefoil_against_oracles():
    c5 = BraidWord(2, (1, 1, 1, 1, 1))
    jones_t = jones_to_classical(coloured_jones(c5, 2))
    assert jones_t == kauffman_jones(c5)
    assert jones_t == OneVarLaurent(
        {-2: 1, -4: 1, -5: -1, -6: 1, -7: -1}, "t")
    alex_t = ado2_to_classical(ado(c5, 2))
    assert alexander_match_up_to_unit(alex_t, burau_alexander(c5))
    assert alexander_match_up_to_unit(
        alex_t, OneVarLaurent({2: 1, 1: -1, 0: 1, -1: -1, -2: 1}, "t"))


def test_random_knots_against_both_oracles():
    rng = random.Random(41)
    seen = 0
    while seen < 15:
        beta = random_knot(rng, rng.choice((2, 3)), 7)
        assert jones_to_classical(coloured_jones(beta, 2)) == \
            kauffman_jones(beta), beta.letters
        assert alexander_match_up_to_unit(ado2_to_classical(ado(beta, 2)),
                                          burau_alexander(beta)), beta.letters
        seen += 1


def test_unified_derives_both_invariants():
    for beta, N in ((TREFOIL, 2), (TREFOIL, 3), (FIG8, 2), (FIG8, 3)):
        u = unified_pairing(beta, N)
        assert coloured_jones(beta, N) == jones_from_unified(u)
        assert ado(beta, N) == ado_from_unified(u)


def test_generic_and_root_invariants_agree_at_the_root():
    # Both invariants collapse the same pairing value, so evaluating the
    # generic one at q = xi must equal the root one at s = xi^(N-1); the
    # framing mismatch is xi^(N(N-1)(n-1-w)) = 1 on knot closures.
    from qknot.rings import CycScalar
    from qknot.special import evaluate_at_root

    rng = random.Random(53)
    cases = [(TREFOIL, 2), (TREFOIL, 3), (FIG8, 2), (FIG8, 3)]
    for _ in range(6):
        cases.append((random_knot(rng, rng.choice((2, 3)), 5),
                      rng.choice((2, 3))))
    for beta, N in cases:
        lhs = evaluate_at_root(coloured_jones(beta, N), N)
        rhs = CycScalar.zero(N)
        for e, c in ado(beta, N).terms.items():
            rhs = rhs + CycScalar.root_power((N - 1) * e, N) * c
        assert lhs == rhs, (beta.letters, N)


def test_coevaluation_route_matches_diagonal_route():
    # Alternative evaluation: push the whole weighted symmetric sum through
    # the braid at once, then keep only coefficients on the support of the
    # dual class.  Must be the exact same sum, just reorganised.
    for beta, N in ((TREFOIL, 2), (BraidWord(2, (-1, -1, -1)), 2), (FIG8, 2)):
        n = beta.strands
        padded = BraidWord(2 * n - 1, beta.letters)
        total = WeightVector(2 * n - 1, (n - 1) * (N - 1), {})
        for idx in symmetric_compositions(n, N):
            start = WeightVector.basis_vector(idx.composition())
            total = total + start.scaled(
                gamma(xd({(0, idx.degree()): 1})))
        image = apply_braid(padded, total)
        acc = TwoVarLaurent.zero(QS)
        for key, coeff in image.entries.items():
            if pairing_support(key, n, N):
                acc = acc + coeff
        assert gamma_preimage(acc) == unified_pairing(beta, N).value


def test_zn_route_examples_and_property():
    assert ado_zn_route(BraidWord(1), 3) == CycLaurent.one(3)
    assert ado_zn_route(TREFOIL, 2) == ado(TREFOIL, 2)
    rng = random.Random(31)
    for _ in range(12):
        beta = random_knot(rng, 3, 6)
        assert ado_zn_route(beta, 3) == ado(beta, 3), beta.letters


def test_multiarc_to_code_coeff():
    assert multiarc_to_code_coeff((0, 1, 0)) == TwoVarLaurent.one(XD)
    assert multiarc_to_code_coeff((2, 0)) == xd({(0, 0): 1, (0, 1): 1})
    assert multiarc_to_code_coeff((2, 2)) == \
        xd({(0, 0): 1, (0, 1): 2, (0, 2): 1})
    with pytest.raises(ValueError):
        multiarc_to_code_coeff((1, -1))


def test_colour_one_degenerate():
    rng = random.Random(13)
    for _ in range(10):
        beta = random_knot(rng, rng.choice((2, 3)), 5)
        assert coloured_jones(beta, 1) == OneVarLaurent.one("q")


def test_unknot_normalisation():
    for N in range(1, 6):
        assert coloured_jones(BraidWord(1), N) == 1
        assert coloured_jones(BraidWord(2, (1,)), N) == 1
        assert coloured_jones(BraidWord(2, (-1,)), N) == 1
    for N in range(2, 5):
        assert ado(BraidWord(1), N) == CycLaurent.one(N)
        assert ado(BraidWord(2, (1,)), N) == CycLaurent.one(N)


def test_knot_gate_and_force():
    unlink = BraidWord(2)
    with pytest.raises(NotAKnotError):
        coloured_jones(unlink, 2)
    with pytest.raises(NotAKnotError):
        ado(unlink, 2)
    # forcing computes the flagged, unvalidated value
    assert coloured_jones(unlink, 2, force=True) == \
        jones_from_unified(unified_pairing(unlink, 2))
    with pytest.raises(ValueError):
        ado(TREFOIL, 1)
    with pytest.raises(ValueError):
        unified_pairing(TREFOIL, 0)


def test_gamma_preimage_guard():
    ok = TwoVarLaurent({(-2, 4): 3}, QS)
    assert gamma_preimage(ok) == xd({(2, 1): 3})
    with pytest.raises(PairingImageError, match="not in image of gamma"):
        gamma_preimage(TwoVarLaurent({(1, 0): 1}, QS))
    with pytest.raises(PairingImageError):
        gamma_preimage(TwoVarLaurent({(0, 3): 1}, QS))


def test_parallel_reduction_is_deterministic():
    for jobs in (1, 2, 4):
        u = unified_pairing(FIG8, 3, jobs=jobs)
        assert u.value == unified_pairing(FIG8, 3).value
        assert u.value.render() == unified_pairing(FIG8, 3, jobs=1).value.render()


def test_json_round_trip():
    u = unified_pairing(TREFOIL, 2)
    results = [
        InvariantResult("unified", 2, TREFOIL, u.value),
        InvariantResult("jones", 2, TREFOIL, jones_from_unified(u)),
        InvariantResult("ado", 2, TREFOIL, ado_from_unified(u)),
        InvariantResult("ado", 3, FIG8, ado(FIG8, 3)),
    ]
    for result in results:
        data = result.to_json_dict()
        assert data["N"] == result.colour
        assert data["strands"] == result.braid.strands
        assert InvariantResult.from_json_dict(data) == result


def test_json_writhe_field():
    data = InvariantResult("jones", 2, TREFOIL,
                           coloured_jones(TREFOIL, 2)).to_json_dict()
    assert data["writhe"] == 3
    assert data["braid"] == [1, 1, 1]
