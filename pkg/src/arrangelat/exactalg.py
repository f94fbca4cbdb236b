"""Field-generic exact linear algebra: rationals, prime fields, matrices, RREF.

Everything here is exact. Rational scalars are ``fractions.Fraction``
(always in lowest terms, positive denominator); prime-field scalars are
``FpElement`` with a canonical representative in ``[0, p)``. No floating
point is used anywhere.
"""

from __future__ import annotations

import re
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

RATIONAL_RE = re.compile(r"-?[0-9]+(/[1-9][0-9]*)?")


class RationalField:
    """The field Q. Elements are ``fractions.Fraction`` instances."""

    characteristic = 0

    def __call__(self, value) -> Fraction:
        return Fraction(value)

    @property
    def zero(self) -> Fraction:
        return Fraction(0)

    @property
    def one(self) -> Fraction:
        return Fraction(1)

    def parse(self, text: str) -> Fraction:
        """Parse a rational string "p" or "p/q" (q positive, lowest terms not required)."""
        if not RATIONAL_RE.fullmatch(text):
            raise ValueError(f"not a rational string: {text!r}")
        return Fraction(text)

    def format(self, value: Fraction) -> str:
        return str(value)

    def __repr__(self) -> str:
        return "QQ"

    def __eq__(self, other) -> bool:
        return isinstance(other, RationalField)

    def __hash__(self) -> int:
        return hash(RationalField)


QQ = RationalField()


class FpElement:
    """Element of F_p, stored as the canonical representative in [0, p)."""

    __slots__ = ("value", "p")

    def __init__(self, value: int, p: int):
        self.value = value % p
        self.p = p

    def _check(self, other: "FpElement") -> None:
        if self.p != other.p:
            raise ValueError(f"mixed prime fields F_{self.p} and F_{other.p}")

    def __add__(self, other):
        if not isinstance(other, FpElement):
            return NotImplemented
        self._check(other)
        return FpElement(self.value + other.value, self.p)

    def __sub__(self, other):
        if not isinstance(other, FpElement):
            return NotImplemented
        self._check(other)
        return FpElement(self.value - other.value, self.p)

    def __mul__(self, other):
        if not isinstance(other, FpElement):
            return NotImplemented
        self._check(other)
        return FpElement(self.value * other.value, self.p)

    def __truediv__(self, other):
        if not isinstance(other, FpElement):
            return NotImplemented
        self._check(other)
        if other.value == 0:
            raise ZeroDivisionError(f"division by zero in F_{self.p}")
        return FpElement(self.value * pow(other.value, -1, self.p), self.p)

    def __neg__(self):
        return FpElement(-self.value, self.p)

    def __bool__(self) -> bool:
        return self.value != 0

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, FpElement)
            and self.p == other.p
            and self.value == other.value
        )

    def __lt__(self, other) -> bool:
        # canonical-representative order, used only for deterministic sorting
        if not isinstance(other, FpElement) or self.p != other.p:
            return NotImplemented
        return self.value < other.value

    def __hash__(self) -> int:
        return hash((self.p, self.value))

    def __repr__(self) -> str:
        return f"{self.value}"


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


class PrimeField:
    """The field F_p for a prime p."""

    def __init__(self, p: int):
        if not _is_prime(p):
            raise ValueError(f"{p} is not prime")
        self.p = p
        self.characteristic = p

    def __call__(self, value) -> FpElement:
        if isinstance(value, FpElement):
            if value.p != self.p:
                raise ValueError(f"element of F_{value.p} is not in F_{self.p}")
            return value
        if isinstance(value, Fraction):
            if value.denominator % self.p == 0:
                raise ValueError(f"denominator of {value} divisible by {self.p}")
            num = FpElement(value.numerator, self.p)
            return num / FpElement(value.denominator, self.p)
        return FpElement(int(value), self.p)

    @property
    def zero(self) -> FpElement:
        return FpElement(0, self.p)

    @property
    def one(self) -> FpElement:
        return FpElement(1, self.p)

    def parse(self, text: str) -> FpElement:
        if not RATIONAL_RE.fullmatch(text):
            raise ValueError(f"not a rational string: {text!r}")
        return self(Fraction(text))

    def format(self, value: FpElement) -> str:
        return str(value.value)

    def __repr__(self) -> str:
        return f"GF({self.p})"

    def __eq__(self, other) -> bool:
        return isinstance(other, PrimeField) and self.p == other.p

    def __hash__(self) -> int:
        return hash((PrimeField, self.p))


@lru_cache(maxsize=None)
def GF(p: int) -> PrimeField:
    return PrimeField(p)


def _lead(row: Sequence) -> int | None:
    for i, x in enumerate(row):
        if x:
            return i
    return None


def _rref_rows(rows: list[list], ncols: int) -> list[list]:
    """In-place Gauss-Jordan; returns rows in RREF (zero rows trailing)."""
    nrows = len(rows)
    piv = 0
    for c in range(ncols):
        pr = None
        for i in range(piv, nrows):
            if rows[i][c]:
                pr = i
                break
        if pr is None:
            continue
        rows[piv], rows[pr] = rows[pr], rows[piv]
        inv = rows[piv][c]
        prow = rows[piv]
        if inv != inv / inv:  # pivot not already 1
            rows[piv] = prow = [x / inv for x in prow]
        for i in range(nrows):
            if i == piv:
                continue
            f = rows[i][c]
            if f:
                rows[i] = [a - f * b for a, b in zip(rows[i], prow)]
        piv += 1
        if piv == nrows:
            break
    return rows


def reduce_against_rref(rref_rows: Sequence[Sequence], row: Sequence) -> list:
    """Reduce one row against rows already in RREF (pivots are 1)."""
    out = list(row)
    for r in rref_rows:
        c = _lead(r)
        f = out[c]
        if f:
            out = [a - f * b for a, b in zip(out, r)]
    return out


def rref_insert(rref_rows: tuple, row: Sequence) -> tuple | None:
    """Insert one row into an RREF system with no zero rows.

    Returns the new RREF row tuple, or None when the row is already in the
    row space. The result equals the RREF of the vertically stacked system
    with zero rows stripped (RREF is unique).
    """
    reduced = reduce_against_rref(rref_rows, row)
    lead = _lead(reduced)
    if lead is None:
        return None
    lv = reduced[lead]
    reduced = tuple(x / lv for x in reduced)
    out = []
    inserted = False
    for r in rref_rows:
        if not inserted and _lead(r) > lead:
            out.append(reduced)
            inserted = True
        f = r[lead]
        out.append(tuple(a - f * b for a, b in zip(r, reduced)) if f else r)
    if not inserted:
        out.append(reduced)
    return tuple(out)


class Matrix:
    """Immutable rectangular matrix over one field.

    The RREF is computed once and cached; RREF is the unique canonical
    form used for flat identity throughout the engine.
    """

    __slots__ = ("field", "nrows", "ncols", "rows", "_hash", "_rref")

    def __init__(self, field, rows: Iterable[Iterable], ncols: int | None = None):
        coerced = tuple(tuple(field(x) for x in row) for row in rows)
        if coerced:
            widths = {len(r) for r in coerced}
            if len(widths) != 1:
                raise ValueError("ragged rows")
            ncols_found = widths.pop()
            if ncols is not None and ncols != ncols_found:
                raise ValueError(f"expected {ncols} columns, got {ncols_found}")
            ncols = ncols_found
        elif ncols is None:
            raise ValueError("column count required for a matrix with no rows")
        self.field = field
        self.rows = coerced
        self.nrows = len(coerced)
        self.ncols = ncols
        self._hash = None
        self._rref = None

    @classmethod
    def identity(cls, field, n: int) -> "Matrix":
        one, zero = field.one, field.zero
        return cls(field, [[one if i == j else zero for j in range(n)] for i in range(n)], n)

    def rref(self) -> "Matrix":
        if self._rref is None:
            rows = _rref_rows([list(r) for r in self.rows], self.ncols)
            out = Matrix(self.field, rows, self.ncols)
            out._rref = out
            self._rref = out
        return self._rref

    def rank(self) -> int:
        return sum(1 for r in self.rref().rows if any(r))

    def stack(self, other: "Matrix") -> "Matrix":
        if other.ncols != self.ncols:
            raise ValueError("dimension mismatch in vertical stack")
        if other.field != self.field:
            raise ValueError("field mismatch in vertical stack")
        return Matrix(self.field, self.rows + other.rows, self.ncols)

    def strip_zero_rows(self) -> "Matrix":
        return Matrix(self.field, [r for r in self.rows if any(r)], self.ncols)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Matrix)
            and self.field == other.field
            and self.ncols == other.ncols
            and self.rows == other.rows
        )

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.field, self.ncols, self.rows))
        return self._hash

    def __repr__(self) -> str:
        body = "; ".join(" ".join(self.field.format(x) for x in r) for r in self.rows)
        return f"Matrix({self.nrows}x{self.ncols} [{body}])"


def rref(m: Matrix) -> Matrix:
    """Unique reduced row-echelon form of m over its field."""
    return m.rref()


def rank(m: Matrix) -> int:
    """Number of nonzero rows of rref(m)."""
    return m.rank()


def rowspace_contains(big: Matrix, small: Matrix) -> bool:
    """True iff every row of `small` lies in the row space of `big`.

    Equivalent to rank(big) == rank(stack(big, small)).
    """
    if big.ncols != small.ncols:
        raise ValueError("dimension mismatch: differing column counts")
    if big.field != small.field:
        raise ValueError("field mismatch")
    reduced = tuple(r for r in big.rref().rows if any(r))
    for row in small.rows:
        if any(reduce_against_rref(reduced, row)):
            return False
    return True
