import random

import pytest

from basiclocus.affweyl import (
    WordError,
    bruhat_leq,
    format_word,
    from_word,
    identity,
    longest_element,
    min_double_coset_rep,
    parse_word,
    simple_reflection,
    translation,
)
from basiclocus.rootdata import get_root_datum, omega_element

TYPES = [("A", 2), ("B", 3), ("C", 2), ("G", 2), ("D", 4)]


@pytest.mark.parametrize("fam,rank", TYPES)
def test_simple_reflections_are_involutions(fam, rank):
    dt = get_root_datum(fam, rank)
    for i in dt.vertices:
        s = simple_reflection(dt, i)
        assert s * s == identity(dt) and s.length == 1


@pytest.mark.parametrize("fam,rank", TYPES)
def test_reduced_word_roundtrip(fam, rank):
    dt = get_root_datum(fam, rank)
    rng = random.Random(7)
    for _ in range(60):
        w = from_word(dt, [rng.randrange(rank + 1) for _ in range(rng.randrange(12))])
        assert len(w.word) == w.length
        assert from_word(dt, w.word) * w.omega_part == w
        assert w.omega_part.length == 0


@pytest.mark.parametrize("fam,rank", TYPES)
def test_inverse_and_length(fam, rank):
    dt = get_root_datum(fam, rank)
    rng = random.Random(3)
    for _ in range(40):
        w = from_word(dt, [rng.randrange(rank + 1) for _ in range(10)])
        assert (w * w.inverse()) == identity(dt)
        assert w.inverse().length == w.length


def test_translation_length_is_pairing_with_2rho():
    dt = get_root_datum("C", 3)
    for k in range(1, 4):
        lam = dt.coweight(f"omega:{k}")
        assert translation(dt, lam).length == dt.pair_2rho(lam)


def test_longest_element_finite_weyl_group():
    for fam, rank, n in [("B", 3, 9), ("D", 4, 12), ("G", 2, 6)]:
        dt = get_root_datum(fam, rank)
        assert longest_element(dt, range(1, rank + 1)).length == n


def test_parse_and_format():
    dt = get_root_datum("B", 4)
    tau = omega_element(dt, 1).element
    w = parse_word(dt, "s0 s[4..2]^-1 tau s[3..2]", tau)
    assert parse_word(dt, "s0 s2 s3 s4 tau s3 s2", tau) == w
    assert parse_word(dt, "s[1..2]", tau) == identity(dt)
    assert format_word(identity(dt)) == "1"
    with pytest.raises(WordError):
        parse_word(dt, "s9")
    with pytest.raises(WordError):
        parse_word(dt, "x1")
    with pytest.raises(WordError):
        parse_word(dt, "tau")


def test_double_coset_rep_is_minimal():
    dt = get_root_datum("C", 2)
    rng = random.Random(5)
    J = [1, 2]
    for _ in range(30):
        w = from_word(dt, [rng.randrange(3) for _ in range(8)])
        m = min_double_coset_rep(w, J, J)
        assert m.length <= w.length
        assert not any(m.is_left_descent(i) or m.is_right_descent(i) for i in J)
        assert bruhat_leq(m, w)
