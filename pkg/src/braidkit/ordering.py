"""Braid orderings: the Dehornoy right-order decided by handle reduction, and
the bi-order on pure braids from the Magnus expansion of their combing
coordinates.

A handle is a subword  s_i^e v s_i^{-e}  whose interior v only uses
generators with index greater than i.  Reducing the innermost handle first
(the leftmost one to close contains no other) repeats until the word is
handle-free; a nonempty handle-free word uses its lowest generator index
with only one sign, which decides the order.

The Magnus expansion sends the free generator x_i to 1 + X_i in integer
power series over noncommuting variables, truncated at a working degree;
series are compared in graded order, monomials within a degree ordered
lexicographically by subscript sequence.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from enum import Enum

from .braids import BraidWord, random_braid
from .combing import comb
from .errors import BudgetError, ConventionError, DomainError
from .free_group import FreeWord, is_identity
from .invariants import FuzzReport

#: Default cap on handle-reduction rewrite steps.
DEFAULT_BUDGET = 10**6

#: Hard cap on the Magnus truncation degree used by free_compare.
MAX_TRUNCATION = 16


class OrderResult(Enum):
    LESS = "LT"
    EQUAL = "EQ"
    GREATER = "GT"

    @property
    def code(self) -> str:
        return self.value


def is_sigma_positive(b: BraidWord) -> int | None:
    """Purely syntactic sign of this spelling: +1 if the lowest generator index
    present occurs only positively, -1 if only negatively, None if mixed or
    the word is empty.  Says nothing about other spellings of the braid."""
    if not b.letters:
        return None
    low = min(abs(v) for v in b.letters)
    signs = {v > 0 for v in b.letters if abs(v) == low}
    if signs == {True}:
        return 1
    if signs == {False}:
        return -1
    return None


def _find_innermost_handle(letters: tuple[int, ...]) -> tuple[int, int] | None:
    """Position pair (p, t) of the first handle to close, scanning left to right.

    Walking left from t, the first letter with index <= |letters[t]| either
    matches it with opposite sign (a handle) or blocks any handle ending at t.
    """
    for t, v in enumerate(letters):
        i = abs(v)
        for p in range(t - 1, -1, -1):
            j = abs(letters[p])
            if j < i:
                break
            if j == i:
                if letters[p] == -v:
                    return p, t
                break
    return None


def _reduce_handle(letters: tuple[int, ...], p: int, t: int) -> tuple[int, ...]:
    start = letters[p]
    e = 1 if start > 0 else -1
    i = abs(start)
    new_mid: list[int] = []
    for v in letters[p + 1:t]:
        if abs(v) == i + 1:
            d = 1 if v > 0 else -1
            new_mid.extend((-e * (i + 1), d * i, e * (i + 1)))
        else:
            new_mid.append(v)
    return letters[:p] + tuple(new_mid) + letters[t + 1:]


def handle_reduction_steps(b: BraidWord, budget: int = DEFAULT_BUDGET):
    """Yield the word after each rewrite (each step represents the same braid)."""
    letters = b.free_cancel().letters
    steps = 0
    while True:
        found = _find_innermost_handle(letters)
        if found is None:
            return
        steps += 1
        if steps > budget:
            raise BudgetError(f"handle reduction exceeded {budget} rewrite steps")
        p, t = found
        reduced = BraidWord(b.n, _reduce_handle(letters, p, t)).free_cancel()
        letters = reduced.letters
        yield reduced


def handle_reduce(b: BraidWord, budget: int = DEFAULT_BUDGET) -> BraidWord:
    """Rewrite to an equivalent handle-free word; empty iff the braid is trivial."""
    result = b.free_cancel()
    for step in handle_reduction_steps(b, budget):
        result = step
    return result


def dehornoy_compare(a: BraidWord, b: BraidWord, budget: int = DEFAULT_BUDGET) -> OrderResult:
    """Right-invariant total order: a < b iff b a^{-1} reduces sigma-positive."""
    w = handle_reduce(b * a.inverse(), budget)
    if not w.letters:
        return OrderResult.EQUAL
    sign = is_sigma_positive(w)
    if sign == 1:
        return OrderResult.LESS
    if sign == -1:
        return OrderResult.GREATER
    raise ConventionError(f"handle-free word is neither positive nor negative: {w!r}")


@dataclass(frozen=True)
class NCSeries:
    """Integer power series in noncommuting variables X_1..X_rank, truncated to
    total degree <= degree.  Terms map subscript tuples to nonzero coefficients."""

    rank: int
    degree: int
    terms: dict[tuple[int, ...], int]

    def __post_init__(self) -> None:
        clean = {}
        for mono, c in self.terms.items():
            if len(mono) > self.degree:
                raise DomainError(f"monomial {mono} exceeds truncation degree {self.degree}")
            if any(not (1 <= i <= self.rank) for i in mono):
                raise DomainError(f"monomial {mono} uses variables beyond rank {self.rank}")
            if c != 0:
                clean[mono] = c
        object.__setattr__(self, "terms", clean)

    def coeff(self, mono: tuple[int, ...]) -> int:
        return self.terms.get(mono, 0)

    def __mul__(self, other: "NCSeries") -> "NCSeries":
        if self.rank != other.rank:
            raise DomainError("rank mismatch")
        degree = min(self.degree, other.degree)
        out: dict[tuple[int, ...], int] = {}
        for m1, c1 in self.terms.items():
            if len(m1) > degree:
                continue
            for m2, c2 in other.terms.items():
                if len(m1) + len(m2) > degree:
                    continue
                m = m1 + m2
                out[m] = out.get(m, 0) + c1 * c2
        return NCSeries(self.rank, degree, out)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, NCSeries):
            return NotImplemented
        return (self.rank, self.degree, self.terms) == (other.rank, other.degree, other.terms)


def _letter_series(v: int, rank: int, degree: int) -> NCSeries:
    i = abs(v)
    if v > 0:
        return NCSeries(rank, degree, {(): 1, (i,): 1})
    return NCSeries(rank, degree, {(i,) * k: (-1) ** k for k in range(degree + 1)})


def magnus_expand(w: FreeWord, degree: int) -> NCSeries:
    """Expansion of a free word: each x_i contributes 1 + X_i, each inverse the
    alternating geometric series, all truncated at the given total degree."""
    if degree < 0:
        raise DomainError("truncation degree must be >= 0")
    acc = NCSeries(w.rank, degree, {(): 1})
    for v in w.letters:
        acc = acc * _letter_series(v, w.rank, degree)
    return acc


def series_compare(s: NCSeries, t: NCSeries) -> OrderResult:
    """Graded comparison: ascending total degree, monomials within a degree in
    lexicographic subscript order; decide at the first coefficient that differs."""
    if s.rank != t.rank:
        raise DomainError("rank mismatch")
    degree = min(s.degree, t.degree)
    diffs = [
        m
        for m in set(s.terms) | set(t.terms)
        if len(m) <= degree and s.coeff(m) != t.coeff(m)
    ]
    if not diffs:
        return OrderResult.EQUAL
    first = min(diffs, key=lambda m: (len(m), m))
    return OrderResult.LESS if s.coeff(first) < t.coeff(first) else OrderResult.GREATER


def free_compare(u: FreeWord, v: FreeWord, max_degree: int = MAX_TRUNCATION) -> OrderResult:
    """Bi-invariant order on a free group via the Magnus expansion, raising the
    truncation degree (2, 4, ..., max_degree) until the series differ."""
    if u.rank != v.rank:
        raise DomainError("rank mismatch")
    if not (u * v.inverse()).letters:
        return OrderResult.EQUAL
    degree = 2
    while degree <= max_degree:
        result = series_compare(magnus_expand(u, degree), magnus_expand(v, degree))
        if result is not OrderResult.EQUAL:
            return result
        degree *= 2
    raise BudgetError(
        f"distinct words agree to truncation degree {max_degree}; raise the cap"
    )


def pure_compare(a: BraidWord, b: BraidWord, max_degree: int = MAX_TRUNCATION) -> OrderResult:
    """Bi-invariant order on pure braids: compare combing coordinates
    lexicographically (lowest strand first), each under the Magnus order."""
    if a.n != b.n:
        raise DomainError("strand counts differ")
    if not a.is_pure() or not b.is_pure():
        raise DomainError("pure_compare requires pure braids")
    ca, cb = comb(a), comb(b)
    for u, v in zip(ca.coords, cb.coords):
        result = free_compare(u, v, max_degree)
        if result is not OrderResult.EQUAL:
            return result
    return OrderResult.EQUAL


def fuzz_order(
    n_max: int = 4,
    len_max: int = 8,
    trials: int = 200,
    seed: int = 0,
    budget: int = DEFAULT_BUDGET,
) -> FuzzReport:
    """Sample the ordering laws: trichotomy against the word problem, closure of
    the positive cone under products, and right-invariance."""
    rng = random.Random(seed)
    violations = 0
    first = None

    def note(kind: str, text: str) -> None:
        nonlocal violations, first
        violations += 1
        if first is None:
            first = f"{kind}: {text}"

    for _ in range(trials):
        n = rng.randint(2, max(2, n_max))
        g, h, c = (
            random_braid(n, rng.randint(0, len_max), seed=rng.randrange(2**32))
            for _ in range(3)
        )
        identity = BraidWord(n)
        rg = dehornoy_compare(identity, g, budget)
        if (rg is OrderResult.EQUAL) != is_identity(g):
            note("trichotomy", g.text())
            continue
        rh = dehornoy_compare(identity, h, budget)
        if rg is OrderResult.LESS and rh is OrderResult.LESS:
            if dehornoy_compare(identity, g * h, budget) is not OrderResult.LESS:
                note("cone-closure", f"{g.text()} | {h.text()}")
                continue
        if dehornoy_compare(g, h, budget) is not dehornoy_compare(g * c, h * c, budget):
            note("right-invariance", f"{g.text()} | {h.text()} | {c.text()}")
    return FuzzReport("order", trials, violations, first)
