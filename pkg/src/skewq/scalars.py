"""Exact scalars and dense/sparse exact linear algebra.

Everything here works over Q, Q(i) or F_2.  Rationals are plain
:class:`fractions.Fraction`; Gaussian rationals are a thin pair of them.
Elimination always pivots on the first nonzero entry in column order so
that bases coming out of :func:`rref` and :func:`kernel_basis_gq` are
reproducible.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

Rational = Fraction

__all__ = [
    "Rational",
    "GaussianRational",
    "I",
    "as_gq",
    "MatrixGQ",
    "MatrixF2",
    "rank_gq",
    "rank_f2",
    "nullity_f2",
    "kernel_basis_gq",
    "rref",
    "rank_sparse",
]


def _frac(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, str)):
        return Fraction(x)
    raise TypeError(f"cannot coerce {x!r} to an exact rational")


class GaussianRational:
    """An element re + im*i of Q(i)."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        self.re = _frac(re)
        self.im = _frac(im)

    @classmethod
    def parse(cls, text: str) -> "GaussianRational":
        """Parse ``"a"``, ``"a/b"``, ``"i"``, ``"-2i"``, ``"1/2+3/4*i"``."""
        s = text.replace(" ", "").replace("*", "")
        if not s:
            raise ValueError("empty scalar")
        # split at the last sign that is not at position 0 or after '/'
        cut = None
        for k in range(len(s) - 1, 0, -1):
            if s[k] in "+-" and s[k - 1] not in "/eE":
                cut = k
                break
        if s.endswith("i"):
            if cut is None:
                real, imag = "0", s[:-1]
            else:
                real, imag = s[:cut], s[cut:-1]
            if imag in ("", "+"):
                imag = "1"
            elif imag == "-":
                imag = "-1"
            return cls(Fraction(real), Fraction(imag))
        if cut is not None and "i" in s:
            raise ValueError(f"malformed Gaussian rational {text!r}")
        return cls(Fraction(s), 0)

    def __repr__(self) -> str:
        return f"GaussianRational({self})"

    def __str__(self) -> str:
        if not self.im:
            return str(self.re)
        if not self.re:
            return f"{self.im}*i"
        sign = "+" if self.im > 0 else "-"
        return f"{self.re}{sign}{abs(self.im)}*i"

    def to_pair(self) -> list[str]:
        return [str(self.re), str(self.im)]

    # arithmetic -----------------------------------------------------------
    def __add__(self, other):
        other = as_gq(other)
        return GaussianRational(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other):
        other = as_gq(other)
        return GaussianRational(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        return as_gq(other) - self

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __mul__(self, other):
        if isinstance(other, GaussianRational):
            a, b, c, d = self.re, self.im, other.re, other.im
            if not b and not d:
                return GaussianRational(a * c, 0)
            return GaussianRational(a * c - b * d, a * d + b * c)
        other = _frac(other)
        return GaussianRational(self.re * other, self.im * other)

    __rmul__ = __mul__

    def conj(self) -> "GaussianRational":
        return GaussianRational(self.re, -self.im)

    def norm(self) -> Fraction:
        """|z|^2 as a rational."""
        return self.re * self.re + self.im * self.im

    def inverse(self) -> "GaussianRational":
        n = self.norm()
        if not n:
            raise ZeroDivisionError("division by zero in Q(i)")
        return GaussianRational(self.re / n, -self.im / n)

    def __truediv__(self, other):
        other = as_gq(other)
        if not other.im:
            if not other.re:
                raise ZeroDivisionError("division by zero in Q(i)")
            return GaussianRational(self.re / other.re, self.im / other.re)
        return self * other.inverse()

    def __rtruediv__(self, other):
        return as_gq(other) / self

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        out = GaussianRational(1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    # comparisons ----------------------------------------------------------
    def __bool__(self) -> bool:
        return bool(self.re) or bool(self.im)

    def __eq__(self, other) -> bool:
        try:
            other = as_gq(other)
        except TypeError:
            return NotImplemented
        return self.re == other.re and self.im == other.im

    def __hash__(self) -> int:
        if not self.im:
            return hash(self.re)
        return hash((self.re, self.im))


I = GaussianRational(0, 1)


def as_gq(x) -> GaussianRational:
    if isinstance(x, GaussianRational):
        return x
    if isinstance(x, complex):
        raise TypeError("floating complex numbers are not exact")
    return GaussianRational(_frac(x), 0)


# ---------------------------------------------------------------------------
# sparse elimination core, generic over any exact field element type
# ---------------------------------------------------------------------------

def _reduce_into(pivots: dict, row: dict) -> bool:
    """Echelon-insert ``row`` into ``pivots`` (col -> normalized row).

    Returns True if the row was independent of the existing pivots.
    Mutates ``row``.
    """
    while row:
        c = min(row)
        p = pivots.get(c)
        if p is None:
            lead = row[c]
            if lead != 1:
                for k in row:
                    row[k] = row[k] / lead
            pivots[c] = row
            return True
        f = row[c]
        for k, v in p.items():
            nv = row.get(k, 0) - f * v
            if nv:
                row[k] = nv
            else:
                row.pop(k, None)
    return False


def _coerce_row(row) -> dict:
    if isinstance(row, dict):
        items = row.items()
    else:
        items = enumerate(row)
    out = {}
    for k, v in items:
        if v:
            out[k] = Fraction(v) if isinstance(v, int) else v
    return out


def rank_sparse(rows: Iterable) -> int:
    """Rank of a matrix given as dict rows ``{col: value}`` or dense lists."""
    pivots: dict = {}
    r = 0
    for row in rows:
        if _reduce_into(pivots, _coerce_row(row)):
            r += 1
    return r


def rref(rows: Iterable) -> tuple[list[dict], list[int]]:
    """Reduced row echelon form of dict (or dense) rows.

    Returns ``(pivot_rows, pivot_cols)`` with pivot rows sorted by pivot
    column, each normalized to leading coefficient 1 and with zeros in
    every other pivot column.
    """
    pivots: dict = {}
    for row in rows:
        _reduce_into(pivots, _coerce_row(row))
    cols = sorted(pivots)
    # back substitution, right to left
    for idx in range(len(cols) - 1, -1, -1):
        c = cols[idx]
        prow = pivots[c]
        for c2 in cols[:idx]:
            other = pivots[c2]
            f = other.get(c)
            if f:
                for k, v in prow.items():
                    nv = other.get(k, 0) - f * v
                    if nv:
                        other[k] = nv
                    else:
                        other.pop(k, None)
    return [pivots[c] for c in cols], cols


# ---------------------------------------------------------------------------
# dense matrices over Q(i)
# ---------------------------------------------------------------------------

class MatrixGQ:
    """Dense row-major matrix of Gaussian rationals."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, rows: int, cols: int, entries: Sequence | None = None):
        self.rows = rows
        self.cols = cols
        if entries is None:
            self.entries = [GaussianRational() for _ in range(rows * cols)]
        else:
            if len(entries) != rows * cols:
                raise ValueError("entries length does not match the shape")
            self.entries = [as_gq(e) for e in entries]

    @classmethod
    def from_rows(cls, data: Sequence[Sequence]) -> "MatrixGQ":
        nrows = len(data)
        ncols = len(data[0]) if nrows else 0
        if any(len(r) != ncols for r in data):
            raise ValueError("ragged rows")
        return cls(nrows, ncols, [e for r in data for e in r])

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "MatrixGQ":
        return cls(rows, cols)

    @classmethod
    def identity(cls, k: int) -> "MatrixGQ":
        m = cls(k, k)
        for i in range(k):
            m.entries[i * k + i] = GaussianRational(1)
        return m

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i * self.cols + j]

    def __setitem__(self, ij, value):
        i, j = ij
        self.entries[i * self.cols + j] = as_gq(value)

    def row(self, i: int) -> list[GaussianRational]:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def to_rows(self) -> list[list[GaussianRational]]:
        return [self.row(i) for i in range(self.rows)]

    def sparse_rows(self) -> list[dict]:
        return [
            {j: v for j, v in enumerate(self.row(i)) if v}
            for i in range(self.rows)
        ]

    def transpose(self) -> "MatrixGQ":
        return MatrixGQ(
            self.cols,
            self.rows,
            [self[i, j] for j in range(self.cols) for i in range(self.rows)],
        )

    def __matmul__(self, other: "MatrixGQ") -> "MatrixGQ":
        if self.cols != other.rows:
            raise ValueError("shape mismatch in matrix product")
        out = MatrixGQ(self.rows, other.cols)
        for i in range(self.rows):
            for k in range(self.cols):
                a = self[i, k]
                if not a:
                    continue
                for j in range(other.cols):
                    b = other[k, j]
                    if b:
                        out.entries[i * other.cols + j] += a * b
        return out

    def apply(self, vec: Sequence) -> list[GaussianRational]:
        if len(vec) != self.cols:
            raise ValueError("vector length does not match column count")
        out = []
        for i in range(self.rows):
            acc = GaussianRational()
            for a, b in zip(self.row(i), vec):
                if a and b:
                    acc = acc + a * b
            out.append(acc)
        return out

    def is_zero(self) -> bool:
        return not any(self.entries)

    def __eq__(self, other) -> bool:
        if not isinstance(other, MatrixGQ):
            return NotImplemented
        return (self.rows, self.cols) == (other.rows, other.cols) and all(
            a == b for a, b in zip(self.entries, other.entries)
        )

    def __repr__(self) -> str:
        return f"MatrixGQ({self.rows}x{self.cols})"


def rank_gq(m: MatrixGQ) -> int:
    return rank_sparse(m.sparse_rows())


def kernel_basis_gq(m: MatrixGQ) -> list[list[GaussianRational]]:
    """Basis of the right null space, one vector per free column."""
    prows, pcols = rref(m.sparse_rows())
    pivot_set = set(pcols)
    basis = []
    for free in range(m.cols):
        if free in pivot_set:
            continue
        v = [GaussianRational() for _ in range(m.cols)]
        v[free] = GaussianRational(1)
        for prow, pc in zip(prows, pcols):
            coeff = prow.get(free)
            if coeff:
                v[pc] = -as_gq(coeff)
        basis.append(v)
    return basis


# ---------------------------------------------------------------------------
# F_2
# ---------------------------------------------------------------------------

class MatrixF2:
    """Matrix over F_2 with each row packed into a Python int (bit j = col j)."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, rows: int, cols: int, entries: Sequence[int] | None = None):
        self.rows = rows
        self.cols = cols
        if entries is None:
            entries = [0] * rows
        if len(entries) != rows:
            raise ValueError("need one packed int per row")
        mask = (1 << cols) - 1
        if any(e & ~mask for e in entries):
            raise ValueError("row has bits beyond the column count")
        self.entries = list(entries)

    @classmethod
    def from_rows(cls, data: Sequence[Sequence[int]]) -> "MatrixF2":
        nrows = len(data)
        ncols = len(data[0]) if nrows else 0
        packed = []
        for r in data:
            if len(r) != ncols:
                raise ValueError("ragged rows")
            packed.append(sum((int(b) & 1) << j for j, b in enumerate(r)))
        return cls(nrows, ncols, packed)

    @classmethod
    def identity(cls, k: int) -> "MatrixF2":
        return cls(k, k, [1 << i for i in range(k)])

    def __getitem__(self, ij) -> int:
        i, j = ij
        return (self.entries[i] >> j) & 1

    def to_rows(self) -> list[list[int]]:
        return [[(e >> j) & 1 for j in range(self.cols)] for e in self.entries]


def rank_f2(m: MatrixF2) -> int:
    pivots: dict[int, int] = {}
    for row in m.entries:
        while row:
            low = row & -row
            p = pivots.get(low)
            if p is None:
                pivots[low] = row
                break
            row ^= p
    return len(pivots)


def nullity_f2(m: MatrixF2) -> int:
    return m.cols - rank_f2(m)
