"""Braid words on n strands, stored as sequences of signed generator letters.

A letter ``i > 0`` is the elementary crossing of strands i and i+1 in which
string i+1 passes over string i; ``-i`` is its inverse.  Words multiply by
concatenation, read left to right, and are kept unreduced: ``free_cancel``
is always an explicit step, so every operation is a pure syntactic function.
"""

from __future__ import annotations

import random
import re
from dataclasses import dataclass

from .errors import DomainError, ParseError

_HEADER_RE = re.compile(r"^\s*n\s*=\s*(\d+)\s*;(.*)$", re.DOTALL)


@dataclass(frozen=True)
class Permutation:
    """A permutation of {1,...,n}, stored as the tuple of images of 1..n."""

    images: tuple[int, ...]

    def __post_init__(self) -> None:
        n = len(self.images)
        if sorted(self.images) != list(range(1, n + 1)):
            raise DomainError(f"not a permutation of 1..{n}: {self.images!r}")

    @staticmethod
    def identity(n: int) -> "Permutation":
        return Permutation(tuple(range(1, n + 1)))

    @property
    def n(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    def compose(self, other: "Permutation") -> "Permutation":
        """Function composition: (self.compose(other))(i) == self(other(i))."""
        if self.n != other.n:
            raise DomainError("cannot compose permutations of different sizes")
        return Permutation(tuple(self.images[j - 1] for j in other.images))

    def inverse(self) -> "Permutation":
        inv = [0] * self.n
        for i, j in enumerate(self.images, start=1):
            inv[j - 1] = i
        return Permutation(tuple(inv))

    def is_identity(self) -> bool:
        return all(j == i for i, j in enumerate(self.images, start=1))

    def cycles(self) -> tuple[tuple[int, ...], ...]:
        """Cycle decomposition, fixed points included, each cycle led by its minimum."""
        seen: set[int] = set()
        out = []
        for start in range(1, self.n + 1):
            if start in seen:
                continue
            cyc = [start]
            seen.add(start)
            j = self(start)
            while j != start:
                cyc.append(j)
                seen.add(j)
                j = self(j)
            out.append(tuple(cyc))
        return tuple(out)


@dataclass(frozen=True)
class BraidWord:
    """A word in the braid group on ``n`` strands."""

    n: int
    letters: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        if not isinstance(self.n, int) or self.n < 1:
            raise DomainError(f"strand count must be a positive integer, got {self.n!r}")
        object.__setattr__(self, "letters", tuple(self.letters))
        for v in self.letters:
            if not isinstance(v, int) or v == 0 or abs(v) > self.n - 1:
                raise DomainError(
                    f"letter {v!r} is not a generator index for {self.n} strands"
                )

    def __len__(self) -> int:
        return len(self.letters)

    def __mul__(self, other: "BraidWord") -> "BraidWord":
        if self.n != other.n:
            m = max(self.n, other.n)
            return self.include(m) * other.include(m)
        return BraidWord(self.n, self.letters + other.letters)

    def inverse(self) -> "BraidWord":
        return BraidWord(self.n, tuple(-v for v in reversed(self.letters)))

    def free_cancel(self) -> "BraidWord":
        """Delete adjacent inverse pairs until none remain (stack pass handles nesting)."""
        out: list[int] = []
        for v in self.letters:
            if out and out[-1] == -v:
                out.pop()
            else:
                out.append(v)
        return BraidWord(self.n, tuple(out))

    def mirror(self) -> "BraidWord":
        return BraidWord(self.n, tuple(-v for v in self.letters))

    def include(self, m: int) -> "BraidWord":
        """Reinterpret this word in the braid group on m >= n strands."""
        if m < self.n:
            raise DomainError(f"cannot include a {self.n}-strand braid into {m} strands")
        return BraidWord(m, self.letters)

    def permutation(self) -> Permutation:
        images = list(range(1, self.n + 1))
        for v in self.letters:
            i = abs(v)
            images[i - 1], images[i] = images[i], images[i - 1]
        return Permutation(tuple(images))

    def is_pure(self) -> bool:
        return self.permutation().is_identity()

    def degree(self) -> int:
        """Exponent sum of the word; the abelianization of the braid group."""
        return sum(1 if v > 0 else -1 for v in self.letters)

    def text(self, header: bool = True) -> str:
        body = " ".join(str(v) for v in self.letters)
        return f"n={self.n}; {body}".rstrip() if header else body

    def __repr__(self) -> str:
        return f"BraidWord(n={self.n}, letters={list(self.letters)})"


def parse_braid(text: str, n_hint: int | None = None) -> BraidWord:
    """Parse whitespace-separated signed generator indices, optionally prefixed ``n=<k>;``.

    Without a header or hint the strand count is inferred as max|letter| + 1
    (1 for the empty word).
    """
    n = None
    m = _HEADER_RE.match(text)
    if m:
        n = int(m.group(1))
        if n < 1:
            raise ParseError(f"strand count must be >= 1, got {n}")
        text = m.group(2)
    elif n_hint is not None:
        if n_hint < 1:
            raise ParseError(f"strand count must be >= 1, got {n_hint}")
        n = n_hint

    letters = []
    for tok in text.split():
        try:
            v = int(tok)
        except ValueError:
            raise ParseError(f"malformed braid letter {tok!r}") from None
        if v == 0:
            raise ParseError("0 is not a generator index")
        letters.append(v)

    if n is None:
        n = max((abs(v) for v in letters), default=0) + 1
    for v in letters:
        if abs(v) > n - 1:
            raise ParseError(f"letter {v} out of range for {n} strands")
    return BraidWord(n, tuple(letters))


def generator(n: int, i: int, sign: int = 1) -> BraidWord:
    if sign not in (1, -1):
        raise DomainError("sign must be +1 or -1")
    return BraidWord(n, (sign * i,))


def half_twist(n: int) -> BraidWord:
    """The half twist on n strands: (s1)(s2 s1)(s3 s2 s1)...(s_{n-1} ... s1)."""
    letters: list[int] = []
    for k in range(1, n):
        letters.extend(range(k, 0, -1))
    return BraidWord(n, tuple(letters))


def full_twist(n: int) -> BraidWord:
    """The full twist (s1 s2 ... s_{n-1})^n; generates the center for n >= 3."""
    return BraidWord(n, tuple(range(1, n)) * n)


def pure_generator(i: int, j: int, n: int) -> BraidWord:
    """The standard pure-braid generator linking strands i < j over the ones between:
    s_{j-1} ... s_{i+1} s_i^2 s_{i+1}^{-1} ... s_{j-1}^{-1}.
    """
    if not (1 <= i < j <= n):
        raise DomainError(f"need 1 <= i < j <= n, got i={i}, j={j}, n={n}")
    down = list(range(j - 1, i, -1))
    letters = down + [i, i] + [-v for v in reversed(down)]
    return BraidWord(n, tuple(letters))


def random_braid(n: int, length: int, seed: int) -> BraidWord:
    """A uniform random word of the given length; deterministic in the seed."""
    if length < 0:
        raise DomainError("length must be >= 0")
    if n < 2 and length > 0:
        raise DomainError("a 1-strand braid group has no generators")
    rng = random.Random(seed)
    letters = tuple(
        rng.randrange(1, n) * rng.choice((1, -1)) for _ in range(length)
    )
    return BraidWord(n, letters)
