"""The unreduced Burau representation and the 3-strand map onto SL(2,Z).

Burau sends the generator with index j to the identity with the block
[[1-t, t], [1, 0]] at rows j, j+1; each row sums to 1 (a formal jump
probability per crossing; with the opposite crossing convention the
transpose tells the same story), evaluation at t=1 recovers the permutation
matrix, and the determinant of a word's image is (-t)^degree.  Burau is
faithful for n <= 3 and known to be unfaithful for n >= 5, so it is never
used here as a word-problem oracle beyond B_3.

The modular map on 3 strands sends s1 s2 s1 to S = [[0,-1],[1,0]] and
s1 s2 to T = [[0,-1],[1,1]], which satisfy S^2 = -I = T^3; the words whose
image lies in {+-I} are exactly the central elements, the powers of the
full twist.
"""

from __future__ import annotations

import functools

from .braids import BraidWord, Permutation
from .errors import DomainError
from .laurent import LaurentMatrix, LaurentPoly

IntMatrix = tuple[tuple[int, ...], ...]

_T = LaurentPoly.monomial(1)
_TINV = LaurentPoly.monomial(-1)
_ONE = LaurentPoly.one()
_ZERO = LaurentPoly.zero()

# 2x2 blocks of the generator and its inverse.
_POS_BLOCK = ((_ONE - _T, _T), (_ONE, _ZERO))
_NEG_BLOCK = ((_ZERO, _ONE), (_TINV, _ONE - _TINV))


@functools.lru_cache(maxsize=None)
def _burau_letter(v: int, n: int) -> LaurentMatrix:
    j = abs(v)
    block = _POS_BLOCK if v > 0 else _NEG_BLOCK
    rows = [list(row) for row in LaurentMatrix.identity(n).rows]
    rows[j - 1][j - 1] = block[0][0]
    rows[j - 1][j] = block[0][1]
    rows[j][j - 1] = block[1][0]
    rows[j][j] = block[1][1]
    return LaurentMatrix(tuple(tuple(row) for row in rows))


def burau(b: BraidWord) -> LaurentMatrix:
    """Image of the braid word under the unreduced Burau representation (variable t)."""
    acc = LaurentMatrix.identity(b.n)
    for v in b.letters:
        acc = acc * _burau_letter(v, b.n)
    return acc


def permutation_matrix(p: Permutation) -> IntMatrix:
    """The matrix sending basis vector e_j to e_{p(j)} (1 in row p(j) of column j)."""
    n = p.n
    return tuple(
        tuple(1 if p(j) == i else 0 for j in range(1, n + 1)) for i in range(1, n + 1)
    )


def burau_at_one(b: BraidWord) -> IntMatrix:
    """Evaluate every Burau entry at t=1; equals the permutation matrix of the braid."""
    return burau(b).eval_int(1)


def mat2_mul(a: IntMatrix, b: IntMatrix) -> IntMatrix:
    return (
        (a[0][0] * b[0][0] + a[0][1] * b[1][0], a[0][0] * b[0][1] + a[0][1] * b[1][1]),
        (a[1][0] * b[0][0] + a[1][1] * b[1][0], a[1][0] * b[0][1] + a[1][1] * b[1][1]),
    )

S: IntMatrix = ((0, -1), (1, 0))
T: IntMatrix = ((0, -1), (1, 1))
I2: IntMatrix = ((1, 0), (0, 1))

# Generator images forced by s1 s2 s1 -> S and s1 s2 -> T.
_MODULAR_POS = {1: ((1, -1), (0, 1)), 2: ((1, 0), (1, 1))}
_MODULAR_NEG = {1: ((1, 1), (0, 1)), 2: ((1, 0), (-1, 1))}


def modular(b: BraidWord) -> IntMatrix:
    """Image of a 3-strand braid word in SL(2,Z)."""
    if b.n != 3:
        raise DomainError(f"the modular map is defined on 3 strands, got n={b.n}")
    acc = I2
    for v in b.letters:
        acc = mat2_mul(acc, _MODULAR_POS[v] if v > 0 else _MODULAR_NEG[-v])
    return acc
