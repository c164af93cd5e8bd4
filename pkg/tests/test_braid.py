"""Braid words: combinatorics, Markov moves, parsing, knot tables."""

import random

import pytest

from qknot.braid import (BraidError, BraidWord, NotAKnotError,
                         closure_cycle_count, closure_permutation, conjugate,
                         extend, inverse, is_knot, load_knot_table,
                         parse_braid, render_braid, require_knot, stabilize,
                         writhe)


def compose_transpositions(letters, n):
    """Independent closure-permutation oracle."""
    perm = list(range(n))
    for k in letters:
        i = abs(k) - 1
        perm = [i + 1 if p == i else i if p == i + 1 else p for p in perm]
    return perm


def test_writhe_examples():
    assert writhe(BraidWord(3)) == 0
    assert writhe(BraidWord(2, (1, 1, 1))) == 3
    assert writhe(BraidWord(3, (1, -2, 1, -2))) == 0


def test_extend_examples():
    assert extend(BraidWord(2, (1, 1, 1)), 1) == BraidWord(3, (1, 1, 1))
    assert extend(BraidWord(1), 2) == BraidWord(3)
    assert extend(BraidWord(3, (1, -2)), 2) == BraidWord(5, (1, -2))
    with pytest.raises(BraidError):
        extend(BraidWord(2, (1,)), -1)


def test_closure_cycle_count():
    assert closure_cycle_count(BraidWord(2, (1, 1, 1))) == 1
    assert closure_cycle_count(BraidWord(2)) == 2
    assert closure_cycle_count(BraidWord(3, (1, -2, 1, -2))) == 1
    # against the independent transposition oracle
    rng = random.Random(3)
    for _ in range(50):
        n = rng.randint(2, 5)
        letters = tuple(rng.choice((1, -1)) * rng.randint(1, n - 1)
                        for _ in range(rng.randint(0, 8)))
        beta = BraidWord(n, letters)
        assert closure_permutation(beta) == compose_transpositions(letters, n)


def test_markov_moves():
    beta = BraidWord(2, (1, 1, 1))
    assert conjugate(beta, BraidWord(2, (1,))) == BraidWord(2, (1, 1, 1, 1, -1))
    assert stabilize(beta, 1) == BraidWord(3, (1, 1, 1, 2))
    assert stabilize(BraidWord(1), -1) == BraidWord(2, (-1,))
    with pytest.raises(BraidError):
        stabilize(beta, 2)
    with pytest.raises(BraidError):
        conjugate(beta, BraidWord(3, (1,)))


def test_move_invariants():
    rng = random.Random(9)
    for _ in range(60):
        n = rng.randint(2, 4)
        beta = BraidWord(n, tuple(rng.choice((1, -1)) * rng.randint(1, n - 1)
                                  for _ in range(rng.randint(0, 6))))
        alpha = BraidWord(n, tuple(rng.choice((1, -1)) * rng.randint(1, n - 1)
                                   for _ in range(rng.randint(1, 3))))
        conj = conjugate(beta, alpha)
        assert writhe(conj) == writhe(beta)
        assert closure_cycle_count(conj) == closure_cycle_count(beta)
        for sign in (1, -1):
            stab = stabilize(beta, sign)
            assert writhe(stab) == writhe(beta) + sign
            assert closure_cycle_count(stab) == closure_cycle_count(beta)


def test_word_group_helpers():
    beta = BraidWord(3, (1, -2, 1))
    assert inverse(beta) == BraidWord(3, (-1, 2, -1))
    assert closure_permutation(conjugate(beta, inverse(beta))) == \
        closure_permutation(beta)


def test_validation():
    with pytest.raises(BraidError):
        BraidWord(0)
    with pytest.raises(BraidError):
        BraidWord(2, (2,))
    with pytest.raises(BraidError):
        BraidWord(3, (0,))
    with pytest.raises(BraidError):
        BraidWord(1, (1,))


def test_require_knot():
    assert require_knot(BraidWord(2, (1,))) == 1
    with pytest.raises(NotAKnotError):
        require_knot(BraidWord(2))
    assert require_knot(BraidWord(2), force=True) == 2
    assert is_knot(BraidWord(2, (1, 1, 1)))
    assert not is_knot(BraidWord(3, (1,)))


def test_parse_round_trip():
    for text, strands in (("1 1 1", 2), ("1,-2,1,-2", 3), ("", 4),
                          ("  1 ,  -2 ", 3)):
        beta = parse_braid(text, strands)
        assert parse_braid(render_braid(beta), strands) == beta
    assert parse_braid("1 1 1", 2) == BraidWord(2, (1, 1, 1))
    assert render_braid(BraidWord(3, (1, -2))) == "1 -2"
    with pytest.raises(BraidError):
        parse_braid("1 x", 3)
    with pytest.raises(BraidError):
        parse_braid("1 5", 3)


def test_knot_table(tmp_path):
    path = tmp_path / "knots.txt"
    path.write_text(
        "# sample table\n"
        "trefoil 2 1 1 1\n"
        "\n"
        "figure8 3 1 -2 1 -2\n"
        "unknot 1\n")
    table = load_knot_table(path)
    assert table["trefoil"] == BraidWord(2, (1, 1, 1))
    assert table["figure8"] == BraidWord(3, (1, -2, 1, -2))
    assert table["unknot"] == BraidWord(1)

    bad = tmp_path / "bad.txt"
    bad.write_text("lonely\n")
    with pytest.raises(BraidError):
        load_knot_table(bad)
    dup = tmp_path / "dup.txt"
    dup.write_text("a 2 1\na 2 -1\n")
    with pytest.raises(BraidError):
        load_knot_table(dup)
