"""Exact rationals, Laurent polynomials in ``u`` and dense rational linear algebra.

Scalars are :class:`fractions.Fraction` throughout; nothing in this package
ever touches a float.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Mapping, Sequence, Union

Rational = Fraction
Scalar = Union[int, Fraction]

_RATIONAL_RE = re.compile(r"^\s*([+-]?\d+)(?:\s*/\s*(\d+))?\s*$")


def parse_rational(text: Union[str, int]) -> Fraction:
    """Parse ``"p/q"`` or an integer string exactly.

    Decimal and exponent notation are rejected on purpose.
    """
    if isinstance(text, bool):
        raise ValueError(f"malformed rational {text!r}")
    if isinstance(text, int):
        return Fraction(text)
    if not isinstance(text, str):
        raise ValueError(f"malformed rational {text!r}")
    m = _RATIONAL_RE.match(text)
    if m is None:
        raise ValueError(f"malformed rational {text!r}")
    num = int(m.group(1))
    den = int(m.group(2)) if m.group(2) is not None else 1
    if den == 0:
        raise ValueError(f"zero denominator in {text!r}")
    return Fraction(num, den)


def format_rational(q: Scalar) -> str:
    return str(Fraction(q))


class LaurentPoly:
    """A finitely supported map ``exponent -> Fraction``, read as a Laurent
    polynomial in one variable ``u``.

    Zero coefficients are never stored, so two equal polynomials always have
    equal coefficient maps.
    """

    __slots__ = ("_c",)

    def __init__(self, coeffs: Mapping[int, Scalar] | None = None):
        c: dict[int, Fraction] = {}
        if coeffs:
            for k, v in coeffs.items():
                v = Fraction(v)
                if v:
                    c[int(k)] = v
        self._c = c

    @classmethod
    def monomial(cls, coef: Scalar, exp: int) -> LaurentPoly:
        return cls({exp: coef})

    @classmethod
    def constant(cls, coef: Scalar) -> LaurentPoly:
        return cls({0: coef})

    @classmethod
    def _promote(cls, other) -> LaurentPoly:
        if isinstance(other, LaurentPoly):
            return other
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return cls.constant(other)
        return NotImplemented

    def coefficient(self, k: int) -> Fraction:
        return self._c.get(k, Fraction(0))

    def items(self) -> list[tuple[int, Fraction]]:
        return sorted(self._c.items())

    def exponents(self) -> list[int]:
        return sorted(self._c)

    def is_zero(self) -> bool:
        return not self._c

    def __bool__(self) -> bool:
        return bool(self._c)

    @property
    def degree(self) -> int:
        if not self._c:
            raise ValueError("degree of the zero polynomial is undefined")
        return max(self._c)

    @property
    def valuation(self) -> int:
        if not self._c:
            raise ValueError("valuation of the zero polynomial is undefined")
        return min(self._c)

    def is_monomial_of_degree(self, k: int) -> bool:
        """True for zero or for ``c*u^k``."""
        return all(e == k for e in self._c)

    def negative_part(self) -> LaurentPoly:
        return LaurentPoly({k: v for k, v in self._c.items() if k < 0})

    def is_polynomial(self) -> bool:
        return all(k >= 0 for k in self._c)

    def shift(self, k: int) -> LaurentPoly:
        """Multiply by ``u^k``."""
        return LaurentPoly({e + k: v for e, v in self._c.items()})

    def __add__(self, other):
        other = self._promote(other)
        if other is NotImplemented:
            return other
        c = dict(self._c)
        for k, v in other._c.items():
            c[k] = c.get(k, 0) + v
        return LaurentPoly(c)

    __radd__ = __add__

    def __neg__(self) -> LaurentPoly:
        return LaurentPoly({k: -v for k, v in self._c.items()})

    def __sub__(self, other):
        other = self._promote(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._promote(other)
        if other is NotImplemented:
            return other
        return other - self

    def __mul__(self, other):
        other = self._promote(other)
        if other is NotImplemented:
            return other
        c: dict[int, Fraction] = {}
        for i, a in self._c.items():
            for j, b in other._c.items():
                c[i + j] = c.get(i + j, 0) + a * b
        return LaurentPoly(c)

    __rmul__ = __mul__

    def __truediv__(self, scalar: Scalar) -> LaurentPoly:
        if isinstance(scalar, LaurentPoly):
            raise TypeError("division by a Laurent polynomial is not supported")
        s = Fraction(scalar)
        if s == 0:
            raise ZeroDivisionError("division of a Laurent polynomial by zero")
        return LaurentPoly({k: v / s for k, v in self._c.items()})

    def __pow__(self, n: int) -> LaurentPoly:
        if n < 0:
            raise ValueError("negative powers are not supported")
        out = LaurentPoly.constant(1)
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other) -> bool:
        other = self._promote(other)
        if other is NotImplemented:
            return NotImplemented
        return self._c == other._c

    def __hash__(self) -> int:
        return hash(tuple(self.items()))

    def __repr__(self) -> str:
        return f"LaurentPoly({self})"

    def __str__(self) -> str:
        if not self._c:
            return "0"
        parts = []
        for k, v in sorted(self._c.items(), reverse=True):
            if k == 0:
                parts.append(str(v))
            else:
                mono = "u" if k == 1 else f"u^{k}"
                if v == 1:
                    parts.append(mono)
                elif v == -1:
                    parts.append(f"-{mono}")
                else:
                    parts.append(f"{v}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")


U = LaurentPoly.monomial(1, 1)
ONE = LaurentPoly.constant(1)
ZERO = LaurentPoly()


def laurent_mul(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    return a * b


def coefficient(p: LaurentPoly, k: int) -> Fraction:
    return p.coefficient(k)


@dataclass(frozen=True)
class RatMatrix:
    """Dense ``rows x cols`` matrix of Fractions (row-major)."""

    rows: int
    cols: int
    entries: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self):
        if len(self.entries) != self.rows or any(len(r) != self.cols for r in self.entries):
            raise ValueError(
                f"entry count does not match shape {self.rows}x{self.cols}"
            )

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[Scalar]], cols: int | None = None) -> RatMatrix:
        entries = tuple(tuple(Fraction(x) for x in r) for r in rows)
        if cols is None:
            cols = len(entries[0]) if entries else 0
        return cls(len(entries), cols, entries)

    @classmethod
    def zeros(cls, rows: int, cols: int) -> RatMatrix:
        return cls(rows, cols, tuple((Fraction(0),) * cols for _ in range(rows)))

    def __getitem__(self, ij: tuple[int, int]) -> Fraction:
        i, j = ij
        return self.entries[i][j]

    def __iter__(self) -> Iterator[tuple[Fraction, ...]]:
        return iter(self.entries)

    def transpose(self) -> RatMatrix:
        return RatMatrix(
            self.cols,
            self.rows,
            tuple(tuple(self.entries[i][j] for i in range(self.rows)) for j in range(self.cols)),
        )

    def apply(self, vector: Sequence[Scalar]) -> tuple[Fraction, ...]:
        if len(vector) != self.cols:
            raise ValueError("vector length does not match column count")
        return tuple(sum((a * b for a, b in zip(row, vector)), Fraction(0)) for row in self.entries)

    def tolist(self) -> list[list[Fraction]]:
        return [list(r) for r in self.entries]


def rref(m: RatMatrix) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form and pivot columns.

    Pivoting takes the first nonzero entry in the column; exact arithmetic
    makes magnitude pivoting pointless.
    """
    a = [list(r) for r in m.entries]
    pivots: list[int] = []
    r = 0
    for c in range(m.cols):
        if r == m.rows:
            break
        pr = next((i for i in range(r, m.rows) if a[i][c] != 0), None)
        if pr is None:
            continue
        a[r], a[pr] = a[pr], a[r]
        piv = a[r][c]
        a[r] = [x / piv for x in a[r]]
        for i in range(m.rows):
            if i != r and a[i][c] != 0:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
    return a, pivots


def rank(m: RatMatrix) -> int:
    return len(rref(m)[1])


def nullspace(m: RatMatrix) -> list[tuple[Fraction, ...]]:
    """Basis of the right nullspace; each vector scaled so its first nonzero
    entry is 1."""
    a, pivots = rref(m)
    free = [c for c in range(m.cols) if c not in set(pivots)]
    basis = []
    for f in free:
        v = [Fraction(0)] * m.cols
        v[f] = Fraction(1)
        for row, pc in enumerate(pivots):
            v[pc] = -a[row][f]
        lead = next(x for x in v if x != 0)
        basis.append(tuple(x / lead for x in v))
    return basis


def is_nonsingular(m: RatMatrix) -> bool:
    return m.rows == m.cols and rank(m) == m.cols

