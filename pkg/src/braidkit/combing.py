"""Combing of pure braids into coordinates in an iterated semidirect product
of free groups, giving a second word-problem solver and linking numbers.

A pure braid on n strands is peeled strand by strand: deleting the last
strand is a retraction onto the (n-1)-strand group, and its kernel is free
of rank n-1, with the standard pure generators linking strand n to each
earlier strand as a basis.  The kernel word is identified with a free word
by reading the conjugator of the action on the last free generator and
projecting away that generator; the projection is what makes the reading a
homomorphism, and it is calibrated so the generator linking strands i and n
reads exactly as x_i.
"""

from __future__ import annotations

from dataclasses import dataclass

from .braids import BraidWord, pure_generator
from .errors import ConventionError, DomainError
from .free_group import FreeWord, artin_apply, free_reduce, is_identity, split_conjugate


@dataclass(frozen=True)
class ArtinCoordinates:
    """Coordinates (b_1, ..., b_{n-1}) of a pure braid; b_k is a free word of rank k
    recording how strand k+1 links strands 1..k."""

    n: int
    coords: tuple[FreeWord, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "coords", tuple(self.coords))
        if len(self.coords) != self.n - 1:
            raise DomainError(f"expected {self.n - 1} coordinates, got {len(self.coords)}")
        for k, w in enumerate(self.coords, start=1):
            if w.rank != k:
                raise DomainError(f"coordinate {k} must have rank {k}, got {w.rank}")

    def is_trivial(self) -> bool:
        return all(len(w) == 0 for w in self.coords)


def _require_pure(b: BraidWord, op: str) -> None:
    if not b.is_pure():
        raise DomainError(f"{op} requires a pure braid")


def forget_last(b: BraidWord) -> BraidWord:
    """Delete the strand that starts (and, by purity, ends) at position n.

    Tracks the strand's position through the word, drops every crossing it
    participates in, and renumbers the remaining crossings by position.
    """
    _require_pure(b, "forget_last")
    if b.n == 1:
        raise DomainError("cannot forget the only strand")
    cur = b.n
    letters: list[int] = []
    for v in b.letters:
        i = abs(v)
        if cur == i:
            cur = i + 1
        elif cur == i + 1:
            cur = i
        else:
            letters.append(v if i < cur else (v - 1 if v > 0 else v + 1))
    return BraidWord(b.n - 1, tuple(letters))


def kernel_part(b: BraidWord) -> BraidWord:
    """The part of a pure braid left after straightening its last strand:
    include(forget_last(b))^{-1} * b, which deletes to the identity."""
    _require_pure(b, "kernel_part")
    return forget_last(b).include(b.n).inverse() * b


def loop_word(k: BraidWord) -> FreeWord:
    """Read a braid whose last strand carries all the interaction as a free word
    of rank n-1, sending the generator linking strands i and n to x_i.

    The image of x_n under the braid's action is a conjugate c * x_n * c^{-1};
    the returned word is c with all x_n letters deleted, which is the unique
    reading compatible with multiplication.
    """
    n = k.n
    _require_pure(k, "loop_word")
    if not is_identity(forget_last(k)):
        raise DomainError("loop_word requires a braid that deletes to the identity")
    image = artin_apply(k, FreeWord(n, (n,)))
    split = split_conjugate(image)
    if split is None or split[1] != n:
        raise ConventionError(
            f"action image of the last generator is not a conjugate of it: {image!r}"
        )
    conjugator = split[0]
    kept = tuple(v for v in conjugator.letters if abs(v) != n)
    return free_reduce(FreeWord(n - 1, kept))


def comb(b: BraidWord) -> ArtinCoordinates:
    """Artin coordinates of a pure braid, peeled highest strand first and
    stored index-ascending; equal braids get equal coordinates."""
    _require_pure(b, "comb")
    coords: list[FreeWord] = []
    current = b
    for _ in range(b.n, 1, -1):
        coords.append(loop_word(kernel_part(current)))
        current = forget_last(current)
    coords.reverse()
    return ArtinCoordinates(b.n, tuple(coords))


def reconstruct(c: ArtinCoordinates) -> BraidWord:
    """Inverse of comb up to braid equality: substitute the linking generator
    for each coordinate letter and concatenate coordinates in order."""
    word = BraidWord(c.n)
    for k, beta in enumerate(c.coords, start=1):
        j = k + 1
        for v in beta.letters:
            g = pure_generator(abs(v), j, c.n)
            word = word * (g if v > 0 else g.inverse())
    return word


def pure_word_problem(b: BraidWord) -> bool:
    """True iff the pure braid is trivial, decided by combing."""
    return comb(b).is_trivial()


def linking_numbers(b: BraidWord) -> dict[tuple[int, int], int]:
    """Pairwise linking numbers of a pure braid: entry (i, j) is the exponent
    sum of x_i in the coordinate of strand j (the abelianized coordinates)."""
    c = comb(b)
    out: dict[tuple[int, int], int] = {}
    for j in range(2, b.n + 1):
        beta = c.coords[j - 2]
        for i in range(1, j):
            out[(i, j)] = beta.exponent_sum(i)
    return out
