import random

import pytest

from braidkit import (
    ArtinCoordinates,
    BraidWord,
    DomainError,
    FreeWord,
    comb,
    forget_last,
    free_reduce,
    full_twist,
    is_identity,
    kernel_part,
    linking_numbers,
    loop_word,
    parse_braid,
    pure_generator,
    pure_word_problem,
    random_braid,
    reconstruct,
)


def random_pure(rng, n_max=5, len_max=12):
    while True:
        n = rng.randint(2, n_max)
        b = random_braid(n, rng.randint(0, len_max), seed=rng.randrange(2**32))
        if b.is_pure():
            return b


def test_forget_last_examples():
    assert forget_last(parse_braid("n=3; 2 2")).letters == ()
    assert forget_last(parse_braid("n=3; 1 1")) == parse_braid("n=2; 1 1")
    assert forget_last(pure_generator(1, 3, 3)).letters == ()


def test_forget_last_requires_pure():
    with pytest.raises(DomainError):
        forget_last(parse_braid("n=3; 2"))


def test_forget_last_is_retraction():
    rng = random.Random(1)
    for _ in range(30):
        p = random_pure(rng, n_max=4, len_max=10)
        assert forget_last(p.include(p.n + 1)) == p


def test_kernel_part_deletes_to_identity():
    rng = random.Random(2)
    for _ in range(25):
        p = random_pure(rng, n_max=4, len_max=10)
        k = kernel_part(p)
        assert is_identity(forget_last(k))


def test_kernel_part_examples():
    b = parse_braid("n=3; 1 1")
    assert kernel_part(b).free_cancel().letters == ()
    a13 = pure_generator(1, 3, 3)
    assert is_identity(kernel_part(a13) * a13.inverse())
    assert kernel_part(BraidWord(3)).free_cancel().letters == ()


def test_comb_single_strand():
    c = comb(BraidWord(1))
    assert c.n == 1 and c.coords == () and c.is_trivial()


def test_loop_word_basis_calibration():
    assert loop_word(parse_braid("n=2; 1 1")).letters == (1,)
    for n in range(2, 6):
        for i in range(1, n):
            assert loop_word(pure_generator(i, n, n)) == FreeWord(n - 1, (i,))
    assert loop_word(BraidWord(3)).letters == ()


def test_loop_word_inverse_generator():
    g = pure_generator(1, 3, 3).inverse()
    assert loop_word(g).letters == (-1,)


def test_loop_word_is_homomorphism():
    rng = random.Random(3)
    n = 4
    gens = [pure_generator(i, n, n) for i in range(1, n)]
    for _ in range(30):
        k1 = BraidWord(n)
        k2 = BraidWord(n)
        for _ in range(rng.randint(0, 3)):
            g = rng.choice(gens)
            k1 = k1 * (g if rng.random() < 0.5 else g.inverse())
        for _ in range(rng.randint(0, 3)):
            g = rng.choice(gens)
            k2 = k2 * (g if rng.random() < 0.5 else g.inverse())
        assert loop_word(k1 * k2) == loop_word(k1) * loop_word(k2)


def test_loop_word_requires_kernel_membership():
    with pytest.raises(DomainError):
        loop_word(parse_braid("n=3; 2"))
    with pytest.raises(DomainError):
        loop_word(parse_braid("n=3; 1 1"))


def test_comb_examples():
    c = comb(parse_braid("n=3; 1 1"))
    assert [w.letters for w in c.coords] == [(1,), ()]

    b = parse_braid("n=3; 1 1") * pure_generator(1, 3, 3)
    c2 = comb(b)
    assert [w.letters for w in c2.coords] == [(1,), (1,)]

    assert comb(BraidWord(4)).is_trivial()


def test_coordinates_validate_ranks():
    with pytest.raises(DomainError):
        ArtinCoordinates(3, (FreeWord(2, (1,)), FreeWord(2)))


def test_reconstruct_examples():
    c = ArtinCoordinates(3, (FreeWord(1, (1,)), FreeWord(2)))
    assert reconstruct(c) == parse_braid("n=3; 1 1")
    c2 = ArtinCoordinates(3, (FreeWord(1, (1,)), FreeWord(2, (1,))))
    assert reconstruct(c2) == parse_braid("n=3; 1 1") * pure_generator(1, 3, 3)
    assert reconstruct(comb(BraidWord(3))).letters == ()


def test_round_trip():
    rng = random.Random(4)
    for _ in range(60):
        b = random_pure(rng)
        r = reconstruct(comb(b))
        assert is_identity(r.inverse() * b)


def test_pure_word_problem():
    a13 = pure_generator(1, 3, 3)
    assert pure_word_problem(a13 * a13.inverse())
    assert not pure_word_problem(parse_braid("n=2; 1 1"))

    # presentation relation: a_ij a_ik a_jk (a_ik a_jk a_ij)^-1 is trivial
    a12, a23 = pure_generator(1, 2, 3), pure_generator(2, 3, 3)
    lhs = a12 * a13 * a23
    rhs = a13 * a23 * a12
    assert pure_word_problem(lhs * rhs.inverse())


def test_pure_word_problem_agrees_with_action():
    rng = random.Random(5)
    for _ in range(60):
        b = random_pure(rng, n_max=4, len_max=10)
        assert pure_word_problem(b) == is_identity(b)


def test_linking_numbers_examples():
    lk = linking_numbers(pure_generator(1, 3, 3))
    assert lk == {(1, 2): 0, (1, 3): 1, (2, 3): 0}
    assert linking_numbers(parse_braid("n=3; 1 1 2 2")) == {(1, 2): 1, (1, 3): 0, (2, 3): 1}
    assert linking_numbers(full_twist(3)) == {(1, 2): 1, (1, 3): 1, (2, 3): 1}


def test_linking_numbers_additive():
    rng = random.Random(6)
    for _ in range(25):
        a = random_pure(rng, n_max=4, len_max=8)
        b = random_pure(rng, n_max=4, len_max=8)
        m = max(a.n, b.n)
        a, b = a.include(m), b.include(m)
        lk_ab = linking_numbers(a * b)
        lk_a, lk_b = linking_numbers(a), linking_numbers(b)
        assert lk_ab == {k: lk_a[k] + lk_b[k] for k in lk_ab}


def test_loop_word_agrees_with_free_reduction_of_coordinates():
    # combing the reconstruction returns the same coordinates
    rng = random.Random(7)
    for _ in range(20):
        b = random_pure(rng, n_max=4, len_max=10)
        c = comb(b)
        assert comb(reconstruct(c)).coords == tuple(free_reduce(w) for w in c.coords)
