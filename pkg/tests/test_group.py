import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from qk.group import (
    GroupWord,
    Letter,
    as_conjugate_power,
    as_two_block_power,
    concat,
    cyclic_reduce,
    invert,
    is_reduced,
    power,
    surviving_generators,
)
from support import group_words, letters, raw_letter_lists

G = GroupWord.parse


def test_concat_examples():
    assert concat(G("x"), G("x^-1")) == G("")
    assert concat(G("x y"), G("y^-1 x")) == G("x x")
    assert concat(G("x y"), G("x")) == G("x y x")


def test_invert_examples():
    assert invert(G("x y^-1")) == G("y x^-1")
    assert invert(G("")) == G("")
    assert invert(G("x x")) == G("x^-1 x^-1")


def test_cyclic_reduce_examples():
    assert cyclic_reduce(G("x y x^-1")) == G("y")
    assert cyclic_reduce(G("x y1 y2^-1 x^-1")) == G("y1 y2^-1")
    assert cyclic_reduce(G("x y x^-1 y^-1")) == G("x y x^-1 y^-1")


def test_surviving_generators_examples():
    assert surviving_generators(G("x y x^-1")) == {"y"}
    assert surviving_generators(G("y1 x y1^-1 y2 x^-1 y2^-1")) == {"x", "y1", "y2"}
    assert surviving_generators(G("")) == set()


def test_as_conjugate_power_examples():
    assert as_conjugate_power(G("x x y x^-1 x^-1"), "x", "y") == 2
    assert as_conjugate_power(G("y"), "x", "y") == 0
    assert as_conjugate_power(G("x y x"), "x", "y") is None
    assert as_conjugate_power(G("x^-1 y x"), "x", "y") == -1
    assert as_conjugate_power(G("x y^-1 x^-1"), "x", "y") is None
    assert as_conjugate_power(G("x y x^-1 x^-1"), "x", "y") is None
    with pytest.raises(ValueError):
        as_conjugate_power(G("x"), "x", "x")


def test_as_two_block_power_examples():
    assert as_two_block_power(G("x x y"), "x", "y") == (2, 1)
    assert as_two_block_power(G(""), "x", "y") == (0, 0)
    assert as_two_block_power(G("y x"), "x", "y") is None
    assert as_two_block_power(G("x^-1 x^-1"), "x", "y") == (-2, 0)
    assert as_two_block_power(G("y^-1 y^-1 y^-1"), "x", "y") == (0, -3)
    assert as_two_block_power(G("z"), "x", "y") is None
    assert as_two_block_power(G("x y x"), "x", "y") is None


def test_text_round_trip():
    w = G("x y1^-1 y2")
    assert str(w) == "x y1^-1 y2"
    assert str(G("")) == "1"
    assert G(str(w)) == w


def test_constructor_reduces():
    w = GroupWord([Letter("x", 1), Letter("y", 1), Letter("y", -1), Letter("x", 1)])
    assert w == G("x x")
    assert is_reduced(w)


def test_power():
    assert power(G("x y"), 2) == G("x y x y")
    assert power(G("x y"), -1) == G("y^-1 x^-1")
    assert power(G("x y"), 0) == G("")


# --- properties ----------------------------------------------------------

def _reduce_in_random_order(seq, rng):
    """Cancel randomly chosen adjacent inverse pairs until none remain."""
    seq = list(seq)
    while True:
        spots = [
            i for i in range(len(seq) - 1)
            if seq[i].gen == seq[i + 1].gen and seq[i].sign == -seq[i + 1].sign
        ]
        if not spots:
            return tuple(seq)
        i = rng.choice(spots)
        del seq[i : i + 2]


@given(raw_letter_lists(gens=("x", "y"), max_size=30), st.randoms(use_true_random=False))
def test_free_reduction_is_confluent(seq, rng):
    assert _reduce_in_random_order(seq, rng) == GroupWord(seq).letters


@given(group_words(), group_words())
def test_concat_length_bounds(a, b):
    c = concat(a, b)
    assert is_reduced(c)
    assert abs(len(a) - len(b)) <= len(c) <= len(a) + len(b)
    assert (len(c) - len(a) - len(b)) % 2 == 0


@given(group_words())
def test_invert_is_inverse(a):
    assert concat(a, invert(a)) == GroupWord()
    assert concat(invert(a), a) == GroupWord()
    assert invert(invert(a)) == a


@given(group_words(), group_words(), group_words())
def test_concat_associative(a, b, c):
    assert concat(concat(a, b), c) == concat(a, concat(b, c))


@given(group_words())
def test_cyclic_reduce_properties(a):
    c = cyclic_reduce(a)
    assert cyclic_reduce(c) == c
    assert len(c) <= len(a)
    assert c.exponent_sums() == a.exponent_sums()
    if len(c) > 1:
        assert c[0] != c[-1].inverse()
    # c is a conjugate of a by the stripped prefix
    k = (len(a) - len(c)) // 2
    u = GroupWord(a.letters[:k])
    assert concat(u, c, invert(u)) == a


@given(group_words(), letters())
def test_survivors_conjugation_invariant(a, g):
    conj = concat(GroupWord([g]), a, GroupWord([g.inverse()]))
    assert surviving_generators(conj) == surviving_generators(a)
    assert conj.exponent_sums() == a.exponent_sums()


@given(st.integers(-6, 6))
def test_conjugate_power_shape(k):
    a = concat(power(G("x"), k), G("y"), power(G("x"), -k))
    assert as_conjugate_power(a, "x", "y") == k
    assert len(a) == 2 * abs(k) + 1
    # zero sums are omitted, so x is absent
    assert a.exponent_sums() == {"y": 1}


@given(group_words(gens=("x", "y"), max_size=12))
def test_conjugate_power_implies_shape(a):
    k = as_conjugate_power(a, "x", "y")
    if k is not None:
        assert len(a) == 2 * abs(k) + 1
        assert a.exponent_sums().get("x", 0) == 0
        assert a.exponent_sums()["y"] == 1


@given(st.integers(-5, 5), st.integers(-5, 5))
def test_two_block_round_trip(k, j):
    a = concat(power(G("x"), k), power(G("y"), j))
    assert as_two_block_power(a, "x", "y") == (k, j)


def test_random_kernel_cases():
    """Seeded bulk run of the reduction properties."""
    rng = random.Random(20261017)
    gens = ["x", "y1", "y2"]
    for _ in range(2000):
        seq = [Letter(rng.choice(gens), rng.choice((1, -1))) for _ in range(rng.randrange(25))]
        a = GroupWord(seq)
        assert _reduce_in_random_order(seq, rng) == a.letters
        c = cyclic_reduce(a)
        assert cyclic_reduce(c) == c
        assert c.exponent_sums() == a.exponent_sums()
        g = GroupWord([Letter(rng.choice(gens), rng.choice((1, -1)))])
        assert surviving_generators(concat(g, a, invert(g))) == surviving_generators(a)
