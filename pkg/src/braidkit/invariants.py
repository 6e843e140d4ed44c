"""Kauffman bracket of braid closures by state sum, the writhe-normalized
invariant, the Jones polynomial, Markov moves, and a move-invariance fuzzer.

The closure of a braid joins each strand's endpoints without new crossings.
Every crossing is resolved into a pass-through or a cap-cup smoothing; a
state contributes a^(through - capcup) (signs flipped for negative letters)
times delta^(loops-1) with delta = -a^2 - a^{-2}.  The assignment of the
a-smoothing is calibrated so the closure of a single positive crossing has
bracket -a^3 and normalized value 1.  Under this calibration the closure of
three positive crossings on two strands (a trefoil) has Jones polynomial
t + t^3 - t^4; tables built on the mirror convention list the
exponent-negated values.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .braids import BraidWord, random_braid
from .errors import DomainError
from .laurent import LaurentPoly
from .temperley_lieb import DELTA, bracket_via_tl

#: a-exponent of the pass-through smoothing of a positive crossing.  Flipping
#: this constant to -1 selects the mirror convention; the value is pinned by
#: the bracket(-a^3) test for the single positive crossing.
PASS_THROUGH_EXPONENT = 1

#: Crossing count above which report() switches from the 2^c state sum to the
#: Temperley-Lieb route.
STATE_SUM_LIMIT = 20


def writhe(b: BraidWord) -> int:
    """Signed crossing count of the closure diagram; equals the word's degree."""
    return b.degree()


def bracket_state_sum(b: BraidWord) -> LaurentPoly:
    """Bracket polynomial (variable a) of the braid closure by brute-force
    enumeration of all 2^c smoothing states."""
    letters = b.letters
    c = len(letters)
    n = b.n
    delta_pow = [LaurentPoly.one()]
    for _ in range(n + c):
        delta_pow.append(delta_pow[-1] * DELTA)
    acc: dict[int, int] = {}
    for state in range(1 << c):
        parent = list(range(n + c))

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        size = n
        cur = list(range(n))
        exponent = 0
        for t, v in enumerate(letters):
            i = abs(v) - 1
            sign = 1 if v > 0 else -1
            if state >> t & 1:
                # cap-cup smoothing: incoming segments join, one new segment
                # spans both outgoing positions.
                exponent -= sign * PASS_THROUGH_EXPONENT
                parent[find(cur[i])] = find(cur[i + 1])
                cur[i] = cur[i + 1] = size
                size += 1
            else:
                exponent += sign * PASS_THROUGH_EXPONENT
        for p in range(n):
            parent[find(cur[p])] = find(p)
        loops = len({find(x) for x in range(size)})
        for e, coeff in delta_pow[loops - 1].terms().items():
            key = e + exponent
            acc[key] = acc.get(key, 0) + coeff
    return LaurentPoly(acc)


def components(b: BraidWord) -> int:
    """Number of link components of the closure: cycles of the permutation."""
    return len(b.permutation().cycles())


def normalization(w: int) -> LaurentPoly:
    """(-a^3)^(-w), the writhe correction factor."""
    return LaurentPoly.monomial(-3 * w, -1 if w % 2 else 1)


@dataclass(frozen=True)
class InvariantReport:
    """Bracket and Jones data of a braid closure.

    ``bracket`` and ``f`` are Laurent polynomials in a; ``jones_q`` is f
    rewritten in q = t^(1/4) (exponents negated, since a = t^(-1/4)).
    """

    n: int
    components: int
    writhe: int
    bracket: LaurentPoly
    f: LaurentPoly
    jones_q: LaurentPoly

    def jones_display(self) -> tuple[str, LaurentPoly]:
        """Rescale jones_q for printing: in t when all q-exponents are
        multiples of 4, in t^(1/2) when multiples of 2, else raw q."""
        exps = self.jones_q.exponents()
        if all(e % 4 == 0 for e in exps):
            return "t", LaurentPoly({e // 4: c for e, c in self.jones_q.terms().items()})
        if all(e % 2 == 0 for e in exps):
            return "t^(1/2)", LaurentPoly({e // 2: c for e, c in self.jones_q.terms().items()})
        return "t^(1/4)", self.jones_q

    def to_json(self) -> dict:
        var, jones = self.jones_display()
        return {
            "n": self.n,
            "components": self.components,
            "writhe": self.writhe,
            "bracket": self.bracket.to_json("a"),
            "f": self.f.to_json("a"),
            "jones_q": self.jones_q.to_json("q"),
            "jones": jones.to_json(var),
        }


def report(b: BraidWord) -> InvariantReport:
    """Full invariant report; uses the state sum up to STATE_SUM_LIMIT crossings
    and the Temperley-Lieb route beyond."""
    if len(b.letters) <= STATE_SUM_LIMIT:
        bracket = bracket_state_sum(b)
    else:
        bracket = bracket_via_tl(b)
    w = writhe(b)
    f = normalization(w) * bracket
    jones_q = f.substitute_power(-1)
    return InvariantReport(
        n=b.n,
        components=components(b),
        writhe=w,
        bracket=bracket,
        f=f,
        jones_q=jones_q,
    )


def markov_conjugate(b: BraidWord, g: BraidWord) -> BraidWord:
    """The first Markov move: g^{-1} b g on a common strand count."""
    m = max(b.n, g.n)
    b, g = b.include(m), g.include(m)
    return g.inverse() * b * g


def markov_stabilize(b: BraidWord, sign: int) -> BraidWord:
    """The second Markov move: append a crossing with the new last strand."""
    if sign not in (1, -1):
        raise DomainError("stabilization sign must be +1 or -1")
    wide = b.include(b.n + 1)
    return wide * BraidWord(b.n + 1, (sign * b.n,))


@dataclass(frozen=True)
class FuzzReport:
    kind: str
    trials: int
    violations: int
    first_counterexample: str | None = None

    def to_json(self) -> dict:
        return {
            "kind": self.kind,
            "trials": self.trials,
            "violations": self.violations,
            "first_counterexample": self.first_counterexample,
        }


def fuzz_markov(
    n_max: int = 4,
    len_max: int = 10,
    trials: int = 200,
    seed: int = 0,
    invariant=None,
) -> FuzzReport:
    """Apply random Markov moves to random braids and check the invariant is
    unchanged.  The default invariant is the normalized polynomial f, computed
    through the Temperley-Lieb route so trial cost stays polynomial in length;
    passing a non-invariant (such as the raw bracket) is the negative control.
    """
    if invariant is None:
        invariant = lambda braid: normalization(writhe(braid)) * bracket_via_tl(braid)
    rng = random.Random(seed)
    violations = 0
    first = None
    for _ in range(trials):
        n = rng.randint(2, max(2, n_max))
        length = rng.randint(0, len_max)
        b = random_braid(n, length, seed=rng.randrange(2**32))
        move = rng.choice(("conjugate", "stabilize+", "stabilize-"))
        if move == "conjugate":
            g = random_braid(n, rng.randint(0, len_max), seed=rng.randrange(2**32))
            moved = markov_conjugate(b, g)
            detail = f"conjugate by {g.text()}"
        else:
            s = 1 if move.endswith("+") else -1
            moved = markov_stabilize(b, s)
            detail = f"stabilize {'+' if s > 0 else '-'}"
        if invariant(b) != invariant(moved):
            violations += 1
            if first is None:
                first = f"{b.text()} | {detail}"
    return FuzzReport("markov", trials, violations, first)
