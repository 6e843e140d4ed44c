"""The Temperley-Lieb algebra on crossingless planar matchings, the braid
representation into it, and the trace used for closed-form bracket values.

Elements are integer-Laurent combinations (variable A) of perfect matchings
of the 2n boundary points of a square, n on the left and n on the right,
by disjoint planar arcs.  Multiplication glues two squares along the middle
wall; every closed loop produced by the gluing is deleted at the cost of a
factor delta = -A^2 - A^{-2}.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass

from .braids import BraidWord
from .errors import ConventionError, DomainError
from .laurent import LaurentPoly

#: Loop value: each deleted closed curve contributes this scalar.
DELTA = LaurentPoly({2: -1, -2: -1})

_A = LaurentPoly.monomial(1)
_AINV = LaurentPoly.monomial(-1)


def _circle_position(point: int, n: int) -> int:
    """Boundary points in circular order: L1..Ln then Rn..R1."""
    return point - 1 if point <= n else 3 * n - point


@dataclass(frozen=True)
class PlanarMatching:
    """A crossingless perfect matching of 2n boundary points.

    Points 1..n are the left side top to bottom, points n+1..2n are the
    right side (point n+i sits opposite point i).  Pairs are stored sorted,
    so equality is syntactic.
    """

    n: int
    pairs: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        norm = tuple(sorted(tuple(sorted(p)) for p in self.pairs))
        object.__setattr__(self, "pairs", norm)
        points = [q for p in norm for q in p]
        if sorted(points) != list(range(1, 2 * self.n + 1)):
            raise DomainError(f"not a perfect matching of 2n={2 * self.n} points: {norm}")
        arcs = [
            tuple(sorted((_circle_position(a, self.n), _circle_position(b, self.n))))
            for a, b in norm
        ]
        for i, (a, b) in enumerate(arcs):
            for c, d in arcs[i + 1:]:
                if (a < c < b < d) or (c < a < d < b):
                    raise DomainError(f"matching is not planar: {norm}")

    def partner(self, point: int) -> int:
        for a, b in self.pairs:
            if a == point:
                return b
            if b == point:
                return a
        raise DomainError(f"no such boundary point: {point}")


def identity_matching(n: int) -> PlanarMatching:
    return PlanarMatching(n, tuple((i, n + i) for i in range(1, n + 1)))


def cap_matching(i: int, n: int) -> PlanarMatching:
    """Straight-through arcs except short caps joining levels i, i+1 on both sides."""
    if not (1 <= i <= n - 1):
        raise DomainError(f"generator index {i} out of range for n={n}")
    pairs = [(i, i + 1), (n + i, n + i + 1)]
    pairs += [(j, n + j) for j in range(1, n + 1) if j not in (i, i + 1)]
    return PlanarMatching(n, tuple(pairs))


def _noncrossing(points: tuple[int, ...]) -> list[tuple[tuple[int, int], ...]]:
    """All noncrossing perfect matchings of an even run of circle positions."""
    if not points:
        return [()]
    out = []
    first = points[0]
    for k in range(1, len(points), 2):
        for inner in _noncrossing(points[1:k]):
            for outer in _noncrossing(points[k + 1:]):
                out.append(((first, points[k]),) + inner + outer)
    return out


@functools.lru_cache(maxsize=None)
def tl_basis(n: int) -> tuple[PlanarMatching, ...]:
    """All planar matchings of the 2n boundary points; Catalan(n) of them."""
    if n < 1:
        raise DomainError("n must be >= 1")
    point_of = {_circle_position(p, n): p for p in range(1, 2 * n + 1)}
    basis = []
    for circle_pairs in _noncrossing(tuple(range(2 * n))):
        pairs = tuple((point_of[a], point_of[b]) for a, b in circle_pairs)
        basis.append(PlanarMatching(n, pairs))
    return tuple(basis)


def _glue(left: PlanarMatching, right: PlanarMatching) -> tuple[PlanarMatching, int]:
    """Concatenate two matchings through the middle wall.

    Returns the resulting boundary matching and the number of closed loops
    removed.  Nodes on the middle wall have degree exactly 2, so arcs are
    traced edge by edge; double edges between the same wall nodes are loops
    and must be tracked at the edge level.
    """
    n = left.n
    if n != right.n:
        raise DomainError("cannot glue matchings of different sizes")

    edges: list[tuple[tuple[str, int], tuple[str, int]]] = []
    incidence: dict[tuple[str, int], list[int]] = {}

    def add_edge(u, v):
        incidence.setdefault(u, []).append(len(edges))
        incidence.setdefault(v, []).append(len(edges))
        edges.append((u, v))

    for a, b in left.pairs:
        u = ("L", a) if a <= n else ("M", a - n)
        v = ("L", b) if b <= n else ("M", b - n)
        add_edge(u, v)
    for a, b in right.pairs:
        u = ("M", a) if a <= n else ("R", a - n)
        v = ("M", b) if b <= n else ("R", b - n)
        add_edge(u, v)

    def as_point(node: tuple[str, int]) -> int:
        side, i = node
        return i if side == "L" else n + i

    used = [False] * len(edges)
    new_pairs = []
    for j in range(1, n + 1):
        for start in (("L", j), ("R", j)):
            eids = incidence.get(start, [])
            if len(eids) != 1:
                raise ConventionError(f"boundary node {start} has degree {len(eids)}")
            if used[eids[0]]:
                continue
            node, eid = start, eids[0]
            while True:
                used[eid] = True
                u, v = edges[eid]
                node = v if u == node else u
                if node[0] != "M":
                    break
                nxt = [k for k in incidence[node] if k != eid and not used[k]]
                if not nxt:
                    raise ConventionError("arc trace ended inside the wall")
                eid = nxt[0]
            new_pairs.append(tuple(sorted((as_point(start), as_point(node)))))

    loops = 0
    for eid in range(len(edges)):
        if used[eid]:
            continue
        loops += 1
        node, cur = edges[eid][0], eid
        while not used[cur]:
            used[cur] = True
            u, v = edges[cur]
            node = v if u == node else u
            nxt = [k for k in incidence[node] if k != cur and not used[k]]
            if not nxt:
                break
            cur = nxt[0]

    return PlanarMatching(n, tuple(new_pairs)), loops


class TLElement:
    """A formal integer-Laurent combination of planar matchings."""

    __slots__ = ("n", "_terms")

    def __init__(self, n: int, terms: dict[PlanarMatching, LaurentPoly] | None = None):
        self.n = n
        clean: dict[PlanarMatching, LaurentPoly] = {}
        for m, c in (terms or {}).items():
            if m.n != n:
                raise DomainError("all matchings in an element must share n")
            if not c.is_zero:
                clean[m] = c
        self._terms = clean

    @staticmethod
    def zero(n: int) -> "TLElement":
        return TLElement(n)

    @staticmethod
    def one(n: int) -> "TLElement":
        return TLElement(n, {identity_matching(n): LaurentPoly.one()})

    def terms(self) -> dict[PlanarMatching, LaurentPoly]:
        return dict(self._terms)

    def coeff(self, m: PlanarMatching) -> LaurentPoly:
        return self._terms.get(m, LaurentPoly.zero())

    def __add__(self, other: "TLElement") -> "TLElement":
        if self.n != other.n:
            raise DomainError("size mismatch")
        out = dict(self._terms)
        for m, c in other._terms.items():
            out[m] = out.get(m, LaurentPoly.zero()) + c
        return TLElement(self.n, out)

    def scale(self, c: LaurentPoly) -> "TLElement":
        return TLElement(self.n, {m: v * c for m, v in self._terms.items()})

    def __mul__(self, other: "TLElement") -> "TLElement":
        if self.n != other.n:
            raise DomainError("size mismatch")
        out: dict[PlanarMatching, LaurentPoly] = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                glued, loops = _glue(m1, m2)
                coeff = c1 * c2 * DELTA**loops
                out[glued] = out.get(glued, LaurentPoly.zero()) + coeff
        return TLElement(self.n, out)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TLElement):
            return NotImplemented
        return self.n == other.n and self._terms == other._terms

    def __repr__(self) -> str:
        if not self._terms:
            return f"TLElement(n={self.n}, 0)"
        bits = [f"({c.format('A')})*{m.pairs}" for m, c in self._terms.items()]
        return f"TLElement(n={self.n}, " + " + ".join(bits) + ")"

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "terms": [
                {"matching": [list(p) for p in m.pairs], "coeff": c.to_json("A")}
                for m, c in sorted(self._terms.items(), key=lambda mc: mc[0].pairs)
            ],
        }


def tl_e(i: int, n: int) -> TLElement:
    """The i-th cap-cup generator as an algebra element."""
    return TLElement(n, {cap_matching(i, n): LaurentPoly.one()})


def jones_rep(b: BraidWord) -> TLElement:
    """Multiplicative image of a braid word: a generator maps to A*1 + A^{-1}*e_i,
    its inverse to A^{-1}*1 + A*e_i."""
    acc = TLElement.one(b.n)
    for v in b.letters:
        i = abs(v)
        if v > 0:
            factor = TLElement.one(b.n).scale(_A) + tl_e(i, b.n).scale(_AINV)
        else:
            factor = TLElement.one(b.n).scale(_AINV) + tl_e(i, b.n).scale(_A)
        acc = acc * factor
    return acc


def _closure_loops(m: PlanarMatching) -> int:
    """Loops formed by joining each left point to its opposite right point."""
    n = m.n
    parent = list(range(2 * n + 1))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(x: int, y: int) -> None:
        parent[find(x)] = find(y)

    for a, b in m.pairs:
        union(a, b)
    for i in range(1, n + 1):
        union(i, n + i)
    return len({find(x) for x in range(1, 2 * n + 1)})


def markov_trace(x: TLElement) -> LaurentPoly:
    """Close each matching around the outside and weight by delta^(loops-1),
    so the trace of 1 in the 1-strand algebra is 1."""
    total = LaurentPoly.zero()
    for m, c in x.terms().items():
        total = total + c * DELTA ** (_closure_loops(m) - 1)
    return total


def bracket_via_tl(b: BraidWord) -> LaurentPoly:
    """Bracket polynomial of the braid closure, computed through the algebra;
    agrees exactly with the state-sum route."""
    return markov_trace(jones_rep(b))
