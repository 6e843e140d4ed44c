"""Reduced words in free groups and the braid-group action on them.

The action of a braid word on the free group of rank n is applied letter by
letter, left to right: the generator with index i sends x_i to x_i x_{i+1}
x_i^{-1} and x_{i+1} to x_i; its inverse sends x_i to x_{i+1} and x_{i+1} to
x_{i+1}^{-1} x_i x_{i+1}; all other generators are fixed.  Since the action
is faithful, "all generators fixed" decides the braid word problem.
"""

from __future__ import annotations

from dataclasses import dataclass

from .braids import BraidWord, Permutation
from .errors import DomainError, ParseError


def _reduce(letters) -> tuple[int, ...]:
    out: list[int] = []
    for v in letters:
        if out and out[-1] == -v:
            out.pop()
        else:
            out.append(v)
    return tuple(out)


@dataclass(frozen=True)
class FreeWord:
    """A word in the free group of the given rank; letters are signed generator indices."""

    rank: int
    letters: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        if not isinstance(self.rank, int) or self.rank < 0:
            raise DomainError(f"rank must be a nonnegative integer, got {self.rank!r}")
        object.__setattr__(self, "letters", tuple(self.letters))
        for v in self.letters:
            if not isinstance(v, int) or v == 0 or abs(v) > self.rank:
                raise DomainError(f"letter {v!r} is not a generator index for rank {self.rank}")

    def __len__(self) -> int:
        return len(self.letters)

    def is_reduced(self) -> bool:
        return all(a != -b for a, b in zip(self.letters, self.letters[1:]))

    def __mul__(self, other: "FreeWord") -> "FreeWord":
        if self.rank != other.rank:
            raise DomainError("cannot multiply words of different ranks")
        return FreeWord(self.rank, _reduce(self.letters + other.letters))

    def inverse(self) -> "FreeWord":
        return FreeWord(self.rank, tuple(-v for v in reversed(self.letters)))

    def exponent_sum(self, i: int) -> int:
        return sum(1 if v == i else -1 if v == -i else 0 for v in self.letters)

    def text(self) -> str:
        return " ".join(str(v) for v in self.letters)

    def __repr__(self) -> str:
        return f"FreeWord(rank={self.rank}, letters={list(self.letters)})"


def free_reduce(w: FreeWord) -> FreeWord:
    """Perform all free cancellations; empty result iff w represents the identity."""
    return FreeWord(w.rank, _reduce(w.letters))


def free_generator(rank: int, i: int, sign: int = 1) -> FreeWord:
    if sign not in (1, -1):
        raise DomainError("sign must be +1 or -1")
    return FreeWord(rank, (sign * i,))


def parse_free_word(text: str, rank: int | None = None) -> FreeWord:
    letters = []
    for tok in text.split():
        try:
            v = int(tok)
        except ValueError:
            raise ParseError(f"malformed free-group letter {tok!r}") from None
        if v == 0:
            raise ParseError("0 is not a generator index")
        letters.append(v)
    if rank is None:
        rank = max((abs(v) for v in letters), default=0)
    return FreeWord(rank, tuple(letters))


def _apply_letter(braid_letter: int, word: list[int]) -> list[int]:
    """Substitute one braid letter's automorphism into a free word, reducing as we go."""
    i = abs(braid_letter)
    if braid_letter > 0:
        pos_i = (i, i + 1, -i)       # x_i -> x_i x_{i+1} x_i^{-1}
        pos_i1 = (i,)                # x_{i+1} -> x_i
    else:
        pos_i = (i + 1,)             # x_i -> x_{i+1}
        pos_i1 = (-(i + 1), i, i + 1)  # x_{i+1} -> x_{i+1}^{-1} x_i x_{i+1}
    neg_i = tuple(-v for v in reversed(pos_i))
    neg_i1 = tuple(-v for v in reversed(pos_i1))

    out: list[int] = []
    for v in word:
        if v == i:
            image = pos_i
        elif v == -i:
            image = neg_i
        elif v == i + 1:
            image = pos_i1
        elif v == -(i + 1):
            image = neg_i1
        else:
            image = (v,)
        for u in image:
            if out and out[-1] == -u:
                out.pop()
            else:
                out.append(u)
    return out


def artin_apply(b: BraidWord, w: FreeWord) -> FreeWord:
    """Image of w under the automorphism of b; ranks must agree with the strand count."""
    if w.rank != b.n:
        raise DomainError(f"word rank {w.rank} does not match strand count {b.n}")
    cur = list(_reduce(w.letters))
    for v in b.letters:
        cur = _apply_letter(v, cur)
    return FreeWord(w.rank, tuple(cur))


def artin_images(b: BraidWord) -> tuple[FreeWord, ...]:
    """Images of all generators x_1..x_n under the automorphism of b."""
    return tuple(artin_apply(b, FreeWord(b.n, (i,))) for i in range(1, b.n + 1))


def is_identity(b: BraidWord) -> bool:
    """True iff the braid word represents the identity (all generators fixed)."""
    if b.degree() != 0 or not b.is_pure():
        return False
    word = b.free_cancel()
    return all(
        artin_apply(word, FreeWord(b.n, (i,))).letters == (i,)
        for i in range(1, b.n + 1)
    )


def split_conjugate(w: FreeWord) -> tuple[FreeWord, int] | None:
    """Write a reduced word as c * x_j^{+-1} * c^{-1}; return (c, signed core) or None.

    The symmetric strip peels matched inverse pairs off both ends; it
    succeeds exactly when the word is a conjugate of a single letter.
    """
    letters = _reduce(w.letters)
    if len(letters) % 2 == 0:
        return None
    a, b = 0, len(letters) - 1
    while a < b and letters[a] == -letters[b]:
        a += 1
        b -= 1
    if a != b:
        return None
    return FreeWord(w.rank, letters[:a]), letters[a]


def verify_artin_form(b: BraidWord) -> bool:
    """Check the structure of the automorphism of b: every generator maps to a
    conjugate of a generator, the induced index map is a permutation, and the
    product x_1 x_2 ... x_n is fixed.  Holds for every braid word; serves as a
    self-test of the action."""
    n = b.n
    images = artin_images(b)
    cores = []
    for img in images:
        split = split_conjugate(img)
        if split is None:
            return False
        _, core = split
        if core < 0:
            return False
        cores.append(core)
    try:
        Permutation(tuple(cores))
    except DomainError:
        return False
    product = FreeWord(n)
    for img in images:
        product = product * img
    return product.letters == tuple(range(1, n + 1))
