import random

import pytest
from hypothesis import given, strategies as st

from braidkit import (
    BraidWord,
    DomainError,
    FreeWord,
    artin_apply,
    artin_images,
    free_reduce,
    full_twist,
    half_twist,
    is_identity,
    parse_braid,
    parse_free_word,
    random_braid,
    verify_artin_form,
)
from braidkit.free_group import split_conjugate


def test_free_reduce_examples():
    assert free_reduce(FreeWord(1, (1, -1))).letters == ()
    assert free_reduce(FreeWord(2, (1, 2, -2, 1))).letters == (1, 1)
    assert free_reduce(FreeWord(2, (-2, 1, -1, 2))).letters == ()


free_letters = st.lists(
    st.tuples(st.integers(1, 3), st.sampled_from((1, -1))).map(lambda t: t[0] * t[1]),
    max_size=20,
)


@given(free_letters)
def test_free_reduce_properties(letters):
    w = free_reduce(FreeWord(3, tuple(letters)))
    assert w.is_reduced()
    assert free_reduce(w) == w
    assert (w * w.inverse()).letters == ()


def test_word_multiplication_reduces():
    u = FreeWord(2, (1, 2))
    v = FreeWord(2, (-2, -1, 2))
    assert (u * v).letters == (2,)


def test_parse_free_word():
    w = parse_free_word("1 -2 1")
    assert w.rank == 2 and w.letters == (1, -2, 1)


def test_artin_apply_generator_images():
    s1 = parse_braid("n=2; 1")
    assert artin_apply(s1, FreeWord(2, (1,))).letters == (1, 2, -1)
    assert artin_apply(s1, FreeWord(2, (2,))).letters == (1,)
    s1_in_3 = parse_braid("n=3; 1")
    assert artin_apply(s1_in_3, FreeWord(3, (3,))).letters == (3,)


def test_artin_apply_inverse_undoes():
    rng = random.Random(3)
    for _ in range(25):
        b = random_braid(4, rng.randint(0, 8), seed=rng.randrange(2**32))
        w = FreeWord(4, tuple(rng.choice((1, -1)) * rng.randint(1, 4) for _ in range(6)))
        round_trip = artin_apply(b.inverse(), artin_apply(b, w))
        assert round_trip == free_reduce(w)


def test_artin_apply_rank_mismatch():
    with pytest.raises(DomainError):
        artin_apply(parse_braid("n=3; 1"), FreeWord(2, (1,)))


def test_action_composes_left_to_right():
    rng = random.Random(4)
    for _ in range(20):
        a = random_braid(4, rng.randint(0, 6), seed=rng.randrange(2**32))
        b = random_braid(4, rng.randint(0, 6), seed=rng.randrange(2**32))
        w = FreeWord(4, (1, -3, 2))
        assert artin_apply(a * b, w) == artin_apply(b, artin_apply(a, w))


def test_action_fixes_generator_product():
    rng = random.Random(5)
    product = FreeWord(4, (1, 2, 3, 4))
    for _ in range(30):
        b = random_braid(4, rng.randint(0, 10), seed=rng.randrange(2**32))
        assert artin_apply(b, product) == product


def test_is_identity_braid_relations():
    assert is_identity(parse_braid("1 2 1 -2 -1 -2"))
    assert is_identity(parse_braid("n=4; 1 3 -1 -3"))
    assert not is_identity(parse_braid("1"))
    assert is_identity(BraidWord(1))


def test_is_identity_necessary_conditions():
    rng = random.Random(6)
    for _ in range(40):
        b = random_braid(4, rng.randint(0, 8), seed=rng.randrange(2**32))
        if is_identity(b):
            assert b.degree() == 0 and b.is_pure()


def test_half_twist_conjugation():
    delta = half_twist(3)
    s1, s2 = parse_braid("n=3; 1"), parse_braid("n=3; 2")
    assert is_identity(delta * s1 * delta.inverse() * s2.inverse())
    assert is_identity(delta * s2 * delta.inverse() * s1.inverse())


def test_full_twist_central():
    for n in range(2, 6):
        gamma = full_twist(n)
        for i in range(1, n):
            s = BraidWord(n, (i,))
            assert is_identity(gamma * s * gamma.inverse() * s.inverse())


def test_split_conjugate():
    assert split_conjugate(FreeWord(2, (1, 2, -1))) == (FreeWord(2, (1,)), 2)
    assert split_conjugate(FreeWord(2, (2,))) == (FreeWord(2), 2)
    assert split_conjugate(FreeWord(2, (1, 2))) is None
    assert split_conjugate(FreeWord(2, (1, 2, 1))) is None


def test_verify_artin_form():
    assert verify_artin_form(parse_braid("n=3; 1"))
    assert verify_artin_form(half_twist(3))
    rng = random.Random(7)
    for _ in range(20):
        assert verify_artin_form(random_braid(4, rng.randint(0, 10), seed=rng.randrange(2**32)))


def test_artin_images_length():
    images = artin_images(parse_braid("n=3; 1 2"))
    assert len(images) == 3
    assert all(w.rank == 3 for w in images)
