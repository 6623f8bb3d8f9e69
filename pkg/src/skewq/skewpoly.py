"""The (+-1)-skew polynomial algebra S_eps and the hypersurface A_eps = S_eps/(f).

Monomials are kept in normal form x_1^{e_1} ... x_n^{e_n}.  Reordering a
product only ever swaps pairs of generators, each swap costing a sign
eps_ij, so the product of two monomials is a single monomial times +-1.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations_with_replacement
from math import comb
from typing import Iterable, Sequence

from .errors import InputError, InvariantViolation
from .scalars import GaussianRational, as_gq, rank_sparse

Monomial = tuple  # exponent vector


@dataclass(frozen=True)
class SignMatrix:
    """Symmetric +-1 matrix with ones on the diagonal."""

    n: int
    eps: tuple

    def __post_init__(self):
        if self.n < 1:
            raise InputError("need at least one variable")
        if len(self.eps) != self.n or any(len(r) != self.n for r in self.eps):
            raise InputError("sign matrix must be n x n")
        for i in range(self.n):
            if self.eps[i][i] != 1:
                raise InputError("diagonal of a sign matrix must be +1")
            for j in range(self.n):
                v = self.eps[i][j]
                if v not in (1, -1):
                    raise InputError(f"entry ({i + 1},{j + 1}) is not +-1")
                if v != self.eps[j][i]:
                    raise InputError("sign matrix must be symmetric")

    @classmethod
    def from_upper(cls, n: int, upper: Sequence[Sequence[int]]) -> "SignMatrix":
        """Build from the rows of the strict upper triangle.

        Row ``i`` (0-based) lists eps_{i,i+1}, ..., eps_{i,n-1}; trailing
        empty rows may be omitted.
        """
        rows = list(upper)
        while len(rows) < n:
            rows.append([])
        if len(rows) > n:
            raise InputError(f"expected at most {n} rows in the upper triangle")
        eps = [[1] * n for _ in range(n)]
        for i, row in enumerate(rows):
            if len(row) != n - i - 1:
                raise InputError(
                    f"upper-triangle row {i + 1} has {len(row)} entries, "
                    f"expected {n - i - 1}"
                )
            for k, v in enumerate(row):
                j = i + 1 + k
                eps[i][j] = eps[j][i] = v
        return cls(n, tuple(tuple(r) for r in eps))

    @classmethod
    def constant(cls, n: int, sign: int) -> "SignMatrix":
        return cls(
            n, tuple(tuple(1 if i == j else sign for j in range(n)) for i in range(n))
        )

    @classmethod
    def random(cls, n: int, rng: random.Random) -> "SignMatrix":
        upper = [[rng.choice((1, -1)) for _ in range(n - i - 1)] for i in range(n)]
        return cls.from_upper(n, upper)

    def upper(self) -> list[list[int]]:
        return [[self.eps[i][j] for j in range(i + 1, self.n)] for i in range(self.n)]

    def __getitem__(self, ij) -> int:
        i, j = ij
        return self.eps[i][j]


def monomial_sign(a: Monomial, b: Monomial, eps: SignMatrix) -> int:
    """Sign picked up when x^a * x^b is brought into normal form.

    Every occurrence of x_j in ``a`` has to move past every occurrence of
    x_i in ``b`` with i < j.
    """
    s = 0
    e = eps.eps
    for j, aj in enumerate(a):
        if not aj:
            continue
        for i in range(j):
            if b[i] and e[i][j] < 0:
                s += aj * b[i]
    return -1 if s & 1 else 1


def monomials(n: int, d: int) -> list[Monomial]:
    """All exponent vectors of degree d, in lexicographic order."""
    out = []
    for combo in combinations_with_replacement(range(n), d):
        e = [0] * n
        for v in combo:
            e[v] += 1
        out.append(tuple(e))
    out.sort()
    return out


class SkewPoly:
    """Element of S_eps: a dict monomial -> Gaussian rational, zeros dropped."""

    __slots__ = ("ring", "terms")

    def __init__(self, ring: SignMatrix, terms: dict | None = None):
        self.ring = ring
        self.terms = {}
        if terms:
            for m, c in terms.items():
                if len(m) != ring.n:
                    raise InputError("monomial length does not match n")
                c = as_gq(c)
                if c:
                    self.terms[tuple(m)] = c

    @classmethod
    def var(cls, ring: SignMatrix, i: int, coeff=1) -> "SkewPoly":
        """The generator x_{i+1} (0-based index ``i``)."""
        e = [0] * ring.n
        e[i] = 1
        return cls(ring, {tuple(e): coeff})

    @classmethod
    def const(cls, ring: SignMatrix, c=1) -> "SkewPoly":
        return cls(ring, {(0,) * ring.n: c})

    @classmethod
    def linear(cls, ring: SignMatrix, coeffs: Sequence) -> "SkewPoly":
        """sum_j coeffs[j] * x_{j+1}."""
        p = cls(ring)
        for j, c in enumerate(coeffs):
            c = as_gq(c)
            if c:
                e = [0] * ring.n
                e[j] = 1
                p.terms[tuple(e)] = c
        return p

    def _check(self, other: "SkewPoly"):
        if self.ring.n != other.ring.n:
            raise InputError(
                f"polynomials live in different rings (n={self.ring.n} vs n={other.ring.n})"
            )

    def __add__(self, other):
        if not isinstance(other, SkewPoly):
            other = SkewPoly.const(self.ring, other)
        self._check(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            v = out.get(m)
            v = c if v is None else v + c
            if v:
                out[m] = v
            else:
                out.pop(m, None)
        p = SkewPoly(self.ring)
        p.terms = out
        return p

    __radd__ = __add__

    def __neg__(self):
        p = SkewPoly(self.ring)
        p.terms = {m: -c for m, c in self.terms.items()}
        return p

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c) -> "SkewPoly":
        c = as_gq(c)
        p = SkewPoly(self.ring)
        if c:
            p.terms = {m: v * c for m, v in self.terms.items()}
        return p

    def __mul__(self, other):
        if not isinstance(other, SkewPoly):
            return self.scale(other)
        return multiply(self, other, self.ring)

    def __rmul__(self, other):
        return self.scale(other)

    def __eq__(self, other) -> bool:
        if isinstance(other, SkewPoly):
            return self.ring.n == other.ring.n and self.terms == other.terms
        if not other:
            return not self.terms
        return NotImplemented

    def __bool__(self) -> bool:
        return bool(self.terms)

    def degrees(self) -> set[int]:
        return {sum(m) for m in self.terms}

    def is_homogeneous(self, d: int | None = None) -> bool:
        degs = self.degrees()
        if not degs:
            return True
        return len(degs) == 1 and (d is None or d in degs)

    def linear_coeffs(self) -> list[GaussianRational]:
        """Coefficient vector of a degree-1 element."""
        if not self.is_homogeneous(1):
            raise InputError(f"not homogeneous of degree 1: {self}")
        out = [GaussianRational() for _ in range(self.ring.n)]
        for m, c in self.terms.items():
            out[m.index(1)] = c
        return out

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for m in sorted(self.terms):
            c = self.terms[m]
            mono = "".join(f"x{i + 1}^{e}" for i, e in enumerate(m) if e)
            parts.append(f"({c.re},{c.im}) {mono}".rstrip())
        return "+".join(parts)

    __repr__ = __str__


def multiply(p: SkewPoly, q: SkewPoly, eps: SignMatrix) -> SkewPoly:
    if p.ring.n != q.ring.n or p.ring.n != eps.n:
        raise InputError("dimension mismatch in skew polynomial product")
    out: dict = {}
    for a, ca in p.terms.items():
        for b, cb in q.terms.items():
            m = tuple(x + y for x, y in zip(a, b))
            c = ca * cb
            if monomial_sign(a, b, eps) < 0:
                c = -c
            v = out.get(m)
            v = c if v is None else v + c
            if v:
                out[m] = v
            else:
                out.pop(m, None)
    r = SkewPoly(eps)
    r.terms = out
    return r


def f_epsilon(eps: SignMatrix) -> SkewPoly:
    """x_1^2 + ... + x_n^2."""
    terms = {}
    for i in range(eps.n):
        e = [0] * eps.n
        e[i] = 2
        terms[tuple(e)] = 1
    return SkewPoly(eps, terms)


def is_central(p: SkewPoly, eps: SignMatrix) -> bool:
    for i in range(eps.n):
        x = SkewPoly.var(eps, i)
        if multiply(x, p, eps) != multiply(p, x, eps):
            return False
    return True


# ---------------------------------------------------------------------------
# matrices over S_eps
# ---------------------------------------------------------------------------

class SkewMatrix:
    """rows x cols array of SkewPoly over a fixed ring."""

    def __init__(self, ring: SignMatrix, entries: Sequence[Sequence[SkewPoly]]):
        self.ring = ring
        self.entries = [list(r) for r in entries]
        self.rows = len(self.entries)
        self.cols = len(self.entries[0]) if self.rows else 0
        if any(len(r) != self.cols for r in self.entries):
            raise InputError("ragged skew matrix")

    def __getitem__(self, ij) -> SkewPoly:
        i, j = ij
        return self.entries[i][j]

    def __matmul__(self, other: "SkewMatrix") -> "SkewMatrix":
        if self.cols != other.rows:
            raise InputError("shape mismatch in skew matrix product")
        out = []
        for i in range(self.rows):
            row = []
            for j in range(other.cols):
                acc = SkewPoly(self.ring)
                for k in range(self.cols):
                    acc = acc + multiply(self[i, k], other[k, j], self.ring)
                row.append(acc)
            out.append(row)
        return SkewMatrix(self.ring, out)

    def column(self, t: int) -> list[SkewPoly]:
        return [self.entries[i][t] for i in range(self.rows)]

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, SkewMatrix)
            and (self.rows, self.cols) == (other.rows, other.cols)
            and all(a == b for ra, rb in zip(self.entries, other.entries) for a, b in zip(ra, rb))
        )


def scalar_matrix(ring: SignMatrix, k: int, p: SkewPoly) -> SkewMatrix:
    zero = SkewPoly(ring)
    return SkewMatrix(ring, [[p if i == j else zero for j in range(k)] for i in range(k)])


def _check_mf_shape(M: SkewMatrix, Mp: SkewMatrix):
    if M.rows != M.cols or Mp.rows != Mp.cols or M.rows != Mp.rows:
        raise InputError("matrix factorization needs two square matrices of equal size")
    for mat in (M, Mp):
        for row in mat.entries:
            for e in row:
                if not e.is_homogeneous(1):
                    raise InputError(f"matrix factorization entry is not of degree 1: {e}")


def verify_matrix_factorization(M: SkewMatrix, Mp: SkewMatrix, eps: SignMatrix) -> bool:
    """True iff M Mp = Mp M = f_eps * Id."""
    _check_mf_shape(M, Mp)
    target = scalar_matrix(eps, M.rows, f_epsilon(eps))
    return (M @ Mp) == target and (Mp @ M) == target


# ---------------------------------------------------------------------------
# graded dimensions
# ---------------------------------------------------------------------------

def dim_S(n: int, d: int) -> int:
    return comb(d + n - 1, n - 1) if d >= 0 else 0


def dim_A_closed(n: int, d: int) -> int:
    """Coefficient of t^d in (1+t)(1-t)^{-(n-1)}."""
    if d < 0:
        return 0
    return dim_S(n, d) - dim_S(n, d - 2)


def _row_key(row: dict):
    first = min(row)
    if row[first].re < 0 or (row[first].re == 0 and row[first].im < 0):
        row = {k: -v for k, v in row.items()}
    return frozenset((k, v.re, v.im) for k, v in row.items()), row


def _f_image_rows(eps: SignMatrix, d: int, index: dict) -> list[dict]:
    """Rows spanning the degree-d part of the two-sided ideal (f)."""
    f = f_epsilon(eps)
    seen = {}
    for k in range(d - 1):
        left = monomials(eps.n, k)
        right = monomials(eps.n, d - 2 - k)
        for a in left:
            pa = SkewPoly(eps, {a: 1})
            paf = multiply(pa, f, eps)
            for b in right:
                prod = multiply(paf, SkewPoly(eps, {b: 1}), eps)
                row = {index[m]: c for m, c in prod.terms.items()}
                if row:
                    key, row = _row_key(row)
                    seen.setdefault(key, row)
    return list(seen.values())


def dim_A_oracle(eps: SignMatrix, d: int) -> int:
    """dim (A_eps)_d by linear algebra on (S_eps)_d modulo the span of m f m'."""
    if d < 0:
        return 0
    basis = monomials(eps.n, d)
    if d < 2:
        return len(basis)
    index = {m: i for i, m in enumerate(basis)}
    return len(basis) - rank_sparse(_f_image_rows(eps, d, index))


def dim_A(eps: SignMatrix, d: int) -> int:
    closed = dim_A_closed(eps.n, d)
    oracle = dim_A_oracle(eps, d)
    if closed != oracle:
        raise InvariantViolation(
            f"dim (A_eps)_{d}: closed form {closed} != linear algebra {oracle}"
        )
    return closed


def hilbert_dims(eps: SignMatrix, count: int = 8, check: bool = True) -> list[int]:
    if check:
        return [dim_A(eps, d) for d in range(count)]
    return [dim_A_closed(eps.n, d) for d in range(count)]


def coker_dim(M: SkewMatrix, eps: SignMatrix, d: int) -> int:
    """dim_k of the degree-d part of Coker(M.) : A(-1)^beta -> A^beta.

    Worked out inside S_eps^beta modulo f S_eps^beta.
    """
    beta = M.rows
    if d < 0:
        return 0
    basis = monomials(eps.n, d)
    nb = len(basis)
    index = {m: i for i, m in enumerate(basis)}
    rows: list[dict] = []
    # f * S^beta in degree d, one copy per coordinate
    for frow in _f_image_rows(eps, d, index) if d >= 2 else []:
        for slot in range(beta):
            rows.append({slot * nb + k: v for k, v in frow.items()})
    # image of M. on (S^beta)_{d-1}
    if d >= 1:
        for t in range(beta):
            for m in monomials(eps.n, d - 1):
                pm = SkewPoly(eps, {m: 1})
                row = {}
                for i in range(beta):
                    prod = multiply(M[i, t], pm, eps)
                    for mono, c in prod.terms.items():
                        row[i * nb + index[mono]] = c
                if row:
                    rows.append(row)
    return beta * nb - rank_sparse(rows)


def parse_poly(ring: SignMatrix, terms: Iterable) -> SkewPoly:
    """Parse ``[[re, im], [e1, ..., en]]`` term lists (re/im are rational strings)."""
    p = SkewPoly(ring)
    for term in terms:
        try:
            coeff, expo = term
            re, im = coeff
            c = GaussianRational(str(re), str(im))
            expo = tuple(int(e) for e in expo)
        except (TypeError, ValueError) as exc:
            raise InputError(f"malformed polynomial term {term!r}") from exc
        if len(expo) != ring.n or any(e < 0 for e in expo):
            raise InputError(f"bad exponent vector {list(expo)}")
        p = p + SkewPoly(ring, {expo: c})
    return p


def poly_to_json(p: SkewPoly) -> list:
    return [[p.terms[m].to_pair(), list(m)] for m in sorted(p.terms)]
