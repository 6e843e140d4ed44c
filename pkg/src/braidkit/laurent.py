"""Exact integer Laurent polynomials in one abstract variable, and square
matrices over them.

The variable is anonymous; it is named (t, a, A, q, ...) only when printing
or serializing.  Coefficients are Python ints, so there is no overflow; the
zero polynomial stores no terms and zero coefficients are never kept.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import DomainError


class LaurentPoly:
    """Mapping from integer exponents to nonzero integer coefficients."""

    __slots__ = ("_terms",)

    def __init__(self, terms: dict[int, int] | None = None):
        clean: dict[int, int] = {}
        for e, c in (terms or {}).items():
            if not isinstance(e, int) or not isinstance(c, int):
                raise DomainError(f"exponents and coefficients must be ints: {e!r}: {c!r}")
            if c != 0:
                clean[e] = c
        self._terms = clean

    @staticmethod
    def zero() -> "LaurentPoly":
        return LaurentPoly()

    @staticmethod
    def one() -> "LaurentPoly":
        return LaurentPoly({0: 1})

    @staticmethod
    def monomial(exponent: int, coefficient: int = 1) -> "LaurentPoly":
        return LaurentPoly({exponent: coefficient})

    @staticmethod
    def constant(c: int) -> "LaurentPoly":
        return LaurentPoly({0: c})

    @property
    def is_zero(self) -> bool:
        return not self._terms

    def terms(self) -> dict[int, int]:
        return dict(self._terms)

    def coeff(self, exponent: int) -> int:
        return self._terms.get(exponent, 0)

    def exponents(self) -> tuple[int, ...]:
        return tuple(sorted(self._terms))

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        out = dict(self._terms)
        for e, c in other._terms.items():
            out[e] = out.get(e, 0) + c
        return LaurentPoly(out)

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly({e: -c for e, c in self._terms.items()})

    def __sub__(self, other: "LaurentPoly") -> "LaurentPoly":
        return self + (-other)

    def __mul__(self, other: "LaurentPoly") -> "LaurentPoly":
        out: dict[int, int] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = e1 + e2
                out[e] = out.get(e, 0) + c1 * c2
        return LaurentPoly(out)

    def __pow__(self, k: int) -> "LaurentPoly":
        if k < 0:
            raise DomainError("only nonnegative powers are defined")
        acc = LaurentPoly.one()
        base = self
        while k:
            if k & 1:
                acc = acc * base
            base = base * base
            k >>= 1
        return acc

    def scale(self, c: int) -> "LaurentPoly":
        return LaurentPoly({e: c * v for e, v in self._terms.items()})

    def eval_int(self, v: int) -> int:
        """Exact evaluation at an integer point; the result must be an integer."""
        total = Fraction(0)
        for e, c in self._terms.items():
            if e >= 0:
                total += c * v**e
            else:
                if v == 0:
                    raise DomainError("cannot evaluate a negative exponent at 0")
                total += Fraction(c, v ** (-e))
        if total.denominator != 1:
            raise DomainError(f"evaluation at {v} is not an integer: {total}")
        return int(total)

    def substitute_power(self, k: int) -> "LaurentPoly":
        """Substitute the variable by its k-th power (k nonzero): exponent e -> k*e."""
        if k == 0:
            raise DomainError("substitution power must be nonzero")
        return LaurentPoly({k * e: c for e, c in self._terms.items()})

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(tuple(sorted(self._terms.items())))

    def format(self, variable: str = "t") -> str:
        if not self._terms:
            return "0"
        parts = []
        for e in sorted(self._terms):
            c = self._terms[e]
            if e == 0:
                body = str(abs(c))
            else:
                head = "" if abs(c) == 1 else f"{abs(c)}*"
                body = f"{head}{variable}" + (f"^{e}" if e != 1 else "")
            parts.append(("- " if c < 0 else "+ ") + body)
        joined = " ".join(parts)
        return joined[2:] if joined.startswith("+ ") else "-" + joined[2:]

    def __repr__(self) -> str:
        return f"LaurentPoly({self.format()})"

    def to_json(self, variable: str = "t") -> dict:
        return {"variable": variable, "terms": {str(e): c for e, c in sorted(self._terms.items())}}

    @staticmethod
    def from_json(obj: dict) -> "LaurentPoly":
        return LaurentPoly({int(e): int(c) for e, c in obj["terms"].items()})


class LaurentMatrix:
    """A square matrix over LaurentPoly."""

    __slots__ = ("size", "rows")

    def __init__(self, rows):
        rows = tuple(tuple(row) for row in rows)
        n = len(rows)
        for row in rows:
            if len(row) != n:
                raise DomainError("matrix must be square")
            for p in row:
                if not isinstance(p, LaurentPoly):
                    raise DomainError("matrix entries must be LaurentPoly")
        self.size = n
        self.rows = rows

    @staticmethod
    def identity(n: int) -> "LaurentMatrix":
        one, zero = LaurentPoly.one(), LaurentPoly.zero()
        return LaurentMatrix(
            tuple(tuple(one if i == j else zero for j in range(n)) for i in range(n))
        )

    def __getitem__(self, ij: tuple[int, int]) -> LaurentPoly:
        i, j = ij
        return self.rows[i][j]

    def __mul__(self, other: "LaurentMatrix") -> "LaurentMatrix":
        if self.size != other.size:
            raise DomainError("cannot multiply matrices of different sizes")
        n = self.size
        out = []
        for i in range(n):
            row = []
            for j in range(n):
                acc = LaurentPoly.zero()
                for k in range(n):
                    acc = acc + self.rows[i][k] * other.rows[k][j]
                row.append(acc)
            out.append(tuple(row))
        return LaurentMatrix(tuple(out))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LaurentMatrix):
            return NotImplemented
        return self.size == other.size and self.rows == other.rows

    def __hash__(self) -> int:
        return hash(self.rows)

    def eval_int(self, v: int) -> tuple[tuple[int, ...], ...]:
        return tuple(tuple(p.eval_int(v) for p in row) for row in self.rows)

    def row_sums(self) -> tuple[LaurentPoly, ...]:
        out = []
        for row in self.rows:
            acc = LaurentPoly.zero()
            for p in row:
                acc = acc + p
            out.append(acc)
        return tuple(out)

    def det(self) -> LaurentPoly:
        """Determinant by Laplace expansion; fine for the small sizes used here."""
        n = self.size
        if n == 0:
            return LaurentPoly.one()
        if n == 1:
            return self.rows[0][0]
        acc = LaurentPoly.zero()
        for j in range(n):
            entry = self.rows[0][j]
            if entry.is_zero:
                continue
            minor = LaurentMatrix(
                tuple(
                    tuple(self.rows[i][k] for k in range(n) if k != j)
                    for i in range(1, n)
                )
            )
            term = entry * minor.det()
            acc = acc + (term if j % 2 == 0 else -term)
        return acc

    def __repr__(self) -> str:
        body = "; ".join(
            ", ".join(p.format() for p in row) for row in self.rows
        )
        return f"LaurentMatrix[{body}]"

    def to_json(self, variable: str = "t") -> list:
        return [[p.to_json(variable) for p in row] for row in self.rows]
