"""Hochschild cohomology of bound quiver algebras of global dimension <= 2.

Two independent routes:

* :func:`build_complex` dualizes the minimal bimodule resolution
  P^2 -> P^1 -> P^0 (vertices, arrows, relations) in theta bases;
* :func:`bar_oracle` uses the reduced bar resolution relative to the
  semisimple subalgebra spanned by the vertices.
"""
from __future__ import annotations

import csv
import io
from dataclasses import dataclass, field

from .errors import BudgetExceeded, InputError, InvariantViolation
from .golden import EXPECTED_RANK, PRINTED_D2, THETA1, THETA2
from .quiver import BoundQuiverAlgebra, builtin_case, realize_algebra
from .scalars import GaussianRational, MatrixGQ, as_gq, rank_gq, rank_sparse


@dataclass(frozen=True)
class ThetaBasisIndex:
    level: int
    u: object  # vertex (level 0) or basis path
    gamma: object  # vertex, arrow id or relation index


@dataclass
class HochschildComplex:
    dims: tuple
    d1: MatrixGQ
    d2: MatrixGQ
    theta: tuple = field(default_factory=tuple)


@dataclass(frozen=True)
class HochschildReport:
    dims: tuple
    rank_d1: int
    rank_d2: int
    hh0: int
    hh1: int
    hh2: int

    def as_dict(self) -> dict:
        return {
            "dims": list(self.dims),
            "rank_d1": self.rank_d1,
            "rank_d2": self.rank_d2,
            "hh": [self.hh0, self.hh1, self.hh2],
        }


def check_preconditions(A: BoundQuiverAlgebra) -> None:
    if A.max_path_length() > 2:
        raise InputError(
            "the quiver has paths of length 3; only global dimension <= 2 "
            "(no paths of length >= 3) is supported"
        )
    rels = A.presentation.relations
    if A.relation_rank != len(rels):
        raise InputError("relations are linearly dependent; give a minimal generating set")


def theta_bases(A: BoundQuiverAlgebra):
    q = A.quiver
    t0 = [ThetaBasisIndex(0, v, v) for v in range(1, q.vertices + 1)]
    t1 = [
        ThetaBasisIndex(1, u, a.id)
        for a in q.arrows
        for u in A.hom_basis.get((a.src, a.dst), [])
    ]
    t2 = []
    for k, rel in enumerate(A.presentation.relations):
        s, t = A.presentation.relation_ends(rel)
        t2.extend(ThetaBasisIndex(2, u, k) for u in A.hom_basis.get((s, t), []))
    return t0, t1, t2


def _d2_column(A: BoundQuiverAlgebra, u, gamma: int, rel) -> dict:
    """Value on relation ``rel`` of the map sending arrow gamma to u (Leibniz rule)."""
    arrow = lambda k: (A.quiver.arrows[k].src, (k,))  # noqa: E731
    acc: dict = {}
    for lam, (p, q) in rel.terms:
        pieces = []
        if q == gamma:
            pieces.append(A.multiply_paths(arrow(p), u))
        if p == gamma:
            pieces.append(A.multiply_paths(u, arrow(q)))
        for piece in pieces:
            for b, c in piece.items():
                v = acc.get(b)
                v = lam * c if v is None else v + lam * c
                if v:
                    acc[b] = v
                else:
                    acc.pop(b, None)
    return acc


def build_complex(A: BoundQuiverAlgebra, theta2_scalars: dict | None = None) -> HochschildComplex:
    """Matrices of (A^1)* and (A^2)*; rows index the target theta basis.

    ``theta2_scalars`` optionally rescales level-2 basis elements:
    ``{(relation_index, basis_path): scalar}``.
    """
    check_preconditions(A)
    q = A.quiver
    rels = A.presentation.relations
    t0, t1, t2 = theta_bases(A)
    row1 = {(t.u, t.gamma): k for k, t in enumerate(t1)}
    d1 = MatrixGQ.zeros(len(t1), len(t0))
    for j, tv in enumerate(t0):
        v = tv.u
        for a in q.arrows:
            c = (a.dst == v) - (a.src == v)
            if c:
                d1[row1[((a.src, (a.id,)), a.id)], j] = c
    row2 = {(t.gamma, t.u): k for k, t in enumerate(t2)}
    scal = theta2_scalars or {}
    d2 = MatrixGQ.zeros(len(t2), len(t1))
    for j, tu in enumerate(t1):
        for k, rel in enumerate(rels):
            for b, c in _d2_column(A, tu.u, tu.gamma, rel).items():
                s = scal.get((k, b))
                d2[row2[(k, b)], j] = c if s is None else c / as_gq(s)
    return HochschildComplex((len(t0), len(t1), len(t2)), d1, d2, (t0, t1, t2))


def hh_dims(A: BoundQuiverAlgebra) -> HochschildReport:
    cx = build_complex(A)
    if cx.dims[2] and not (cx.d2 @ cx.d1).is_zero():
        raise InvariantViolation("(A^2)* o (A^1)* != 0")
    r1 = rank_gq(cx.d1)
    r2 = rank_gq(cx.d2)
    p0, p1, p2 = cx.dims
    return HochschildReport(cx.dims, r1, r2, p0 - r1, p1 - r2 - r1, p2 - r2)


# ---------------------------------------------------------------------------
# independent route: reduced bar complex over the vertex subalgebra
# ---------------------------------------------------------------------------

def _chains(A: BoundQuiverAlgebra, length: int) -> list[tuple]:
    """Composable tuples of radical basis paths."""
    rad = [p for p in A.basis if p[1]]
    if length == 0:
        return [((v, ()),) for v in range(1, A.quiver.vertices + 1)]
    chains = [(p,) for p in rad]
    for _ in range(length - 1):
        nxt = []
        for ch in chains:
            end = A.quiver.arrows[ch[-1][1][-1]].dst
            for p in rad:
                if p[0] == end:
                    nxt.append(ch + (p,))
        chains = nxt
    return chains


def _ends(A: BoundQuiverAlgebra, chain: tuple) -> tuple[int, int]:
    first, last = chain[0], chain[-1]
    end = A.quiver.arrows[last[1][-1]].dst if last[1] else last[0]
    return first[0], end


def _cochain_index(A: BoundQuiverAlgebra, chains: list) -> dict:
    idx = {}
    for ch in chains:
        s, t = _ends(A, ch)
        for b in A.hom_basis.get((s, t), []):
            idx[(ch, b)] = len(idx)
    return idx


def _bar_differential(A, chains_i, idx_i, chains_next, idx_next, degree: int) -> list[dict]:
    """Sparse rows of d: C^degree -> C^(degree+1), one row per target coordinate."""
    rows = {k: {} for k in range(len(idx_next))}

    def add(row_key, col, val):
        if not val:
            return
        r = rows[idx_next[row_key]]
        v = r.get(col)
        v = val if v is None else v + val
        if v:
            r[col] = v
        else:
            r.pop(col, None)

    for (ch, b), col in idx_i.items():
        # f = delta_{ch, b}; evaluate df on every chain of length degree+1
        for nch in chains_next:
            s, t = _ends(A, nch)
            if (s, t) not in A.hom_basis:
                continue
            if degree == 0:
                v = ch[0][0]
                a = nch[0]
                # (df)(a) = a f(e_t) - f(e_s) a
                out = {}
                if _ends(A, (a,))[1] == v:
                    out = _axpy(out, A.multiply_paths(a, b), 1)
                if a[0] == v:
                    out = _axpy(out, A.multiply_paths(b, a), -1)
                for r, c in out.items():
                    add((nch, r), col, c)
                continue
            out = {}
            if nch[1:] == ch:
                out = _axpy(out, A.multiply_paths(nch[0], b), 1)
            for j in range(degree):
                prod = A.multiply_paths(nch[j], nch[j + 1])
                c = prod.get(ch[j]) if prod else None
                if c and nch[:j] == ch[:j] and nch[j + 2:] == ch[j + 1:]:
                    out = _axpy(out, {b: GaussianRational(1)}, (-1) ** (j + 1) * c)
            if nch[:-1] == ch:
                out = _axpy(out, A.multiply_paths(b, nch[-1]), (-1) ** (degree + 1))
            for r, c in out.items():
                add((nch, r), col, c)
    return [rows[k] for k in range(len(idx_next))]


def _axpy(acc: dict, x: dict, scale) -> dict:
    for k, v in x.items():
        w = acc.get(k)
        w = v * scale if w is None else w + v * scale
        if w:
            acc[k] = w
        else:
            acc.pop(k, None)
    return acc


def bar_cochain_dims(A: BoundQuiverAlgebra, top: int = 3) -> list[int]:
    return [len(_cochain_index(A, _chains(A, i))) for i in range(top + 1)]


def bar_oracle(A: BoundQuiverAlgebra, i: int, max_dim: int = 64) -> int:
    """dim HH^i(A) for i in 0, 1, 2 from the reduced bar complex."""
    if i not in (0, 1, 2):
        raise InputError("bar_oracle computes HH^0, HH^1 and HH^2 only")
    if A.dim > max_dim:
        raise BudgetExceeded(f"algebra of dimension {A.dim} exceeds the oracle budget {max_dim}")
    chains = [_chains(A, k) for k in range(i + 2)]
    idx = [_cochain_index(A, c) for c in chains]

    def rank_of(k):
        if not idx[k] or not idx[k + 1]:
            return 0
        return rank_sparse(_bar_differential(A, chains[k], idx[k], chains[k + 1], idx[k + 1], k))

    rank_in = rank_of(i - 1) if i >= 1 else 0
    rank_out = rank_of(i)
    return len(idx[i]) - rank_out - rank_in


def bar_hh(A: BoundQuiverAlgebra, max_dim: int = 64) -> tuple[int, int, int]:
    return tuple(bar_oracle(A, k, max_dim) for k in range(3))


# ---------------------------------------------------------------------------
# comparison against the printed matrices
# ---------------------------------------------------------------------------

def golden_complex(case: str) -> tuple[HochschildComplex, BoundQuiverAlgebra]:
    """Build (A^2)* for a builtin case in the printed theta bases."""
    if case not in PRINTED_D2:
        raise InputError(f"no printed matrix for case {case!r}")
    A = realize_algebra(builtin_case(case))
    scalars = {}
    for k, group in enumerate(THETA2[case]):
        s, t = A.presentation.relation_ends(A.presentation.relations[k])
        basis = A.hom_basis[(s, t)]
        labels = [A.path_label(b) for b in basis]
        if labels != [lab for _, lab in group]:
            raise InvariantViolation(
                f"{case}: level-2 basis for g{k + 1} is {labels}, printed basis differs"
            )
        for (scalar, _), b in zip(group, basis):
            scalars[(k, b)] = scalar
    cx = build_complex(A, scalars)
    t1_labels = [
        (A.path_label(t.u), A.quiver.arrows[t.gamma].label) for t in cx.theta[1]
    ]
    if t1_labels != THETA1[case]:
        raise InvariantViolation(f"{case}: level-1 basis order differs from the printed one")
    return cx, A


def diagonal_equivalence(computed: MatrixGQ, printed: MatrixGQ):
    """Row and column scalars with r_i * computed[i, j] * c_j == printed[i, j], or None.

    Solved by propagation over the bipartite graph of nonzero entries; each
    connected component is normalized by fixing its first row scalar to 1.
    """
    n, m = computed.rows, computed.cols
    for i in range(n):
        for j in range(m):
            if bool(computed[i, j]) != bool(printed[i, j]):
                return None
    one = GaussianRational(1)
    rs: dict = {}
    cs: dict = {}
    for i0 in range(n):
        if i0 in rs:
            continue
        rs[i0] = one
        stack = [(0, i0)]
        while stack:
            kind, x = stack.pop()
            if kind == 0:
                for j in range(m):
                    if computed[x, j]:
                        v = printed[x, j] / (rs[x] * computed[x, j])
                        if j not in cs:
                            cs[j] = v
                            stack.append((1, j))
                        elif cs[j] != v:
                            return None
            else:
                for i in range(n):
                    if computed[i, x]:
                        v = printed[i, x] / (cs[x] * computed[i, x])
                        if i not in rs:
                            rs[i] = v
                            stack.append((0, i))
                        elif rs[i] != v:
                            return None
    return [rs[i] for i in range(n)], [cs.get(j, one) for j in range(m)]


def golden_matrix_check(case: str) -> dict:
    cx, _ = golden_complex(case)
    printed = MatrixGQ.from_rows(PRINTED_D2[case])
    computed = cx.d2
    r_comp = rank_gq(computed)
    r_print = rank_gq(printed)
    expected = EXPECTED_RANK[case]
    mismatches = [
        (i, j)
        for i in range(printed.rows)
        for j in range(printed.cols)
        if computed[i, j] != printed[i, j]
    ]
    stacked = rank_sparse(computed.sparse_rows() + printed.sparse_rows())
    row_space = stacked == r_comp == r_print
    scaling = None if not mismatches else diagonal_equivalence(computed, printed)
    if not mismatches:
        level = "entrywise"
    elif scaling is not None:
        level = "diagonal"
    elif row_space:
        level = "row-space"
    else:
        level = "rank"
    report = {
        "case": case,
        "rank_computed": r_comp,
        "rank_printed": r_print,
        "rank_expected": expected,
        "entrywise": not mismatches,
        "mismatched_entries": len(mismatches),
        "row_space_equal": row_space,
        "level": level,
        "pass": r_comp == expected,
    }
    if scaling is not None:
        report["row_scalars"] = {i + 1: str(v) for i, v in enumerate(scaling[0]) if v != 1}
        report["column_scalars"] = {j + 1: str(v) for j, v in enumerate(scaling[1]) if v != 1}
    if mismatches:
        report["first_mismatches"] = [
            {"row": i + 1, "col": j + 1, "computed": str(computed[i, j]), "printed": str(printed[i, j])}
            for i, j in mismatches[:10]
        ]
    if r_comp != expected:
        raise InvariantViolation(
            f"{case}: rank of (A^2)* is {r_comp}, expected {expected}"
        )
    return report


def matrix_csv(m: MatrixGQ) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    for i in range(m.rows):
        w.writerow([f"{e.re}+{e.im}*i" for e in m.row(i)])
    return buf.getvalue()
