"""Quiver presentations of the tilting endomorphism algebra and their realization.

Paths are read left to right: the path ``ax`` runs along ``a`` and then
``x``.  A path is stored as ``(source_vertex, (arrow_id, ...))`` so that
trivial paths e_v are ``(v, ())``.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Sequence

from .errors import InputError, InvariantViolation
from .graphcalc import delta_and_invariants
from .scalars import GaussianRational, I, as_gq, rank_sparse, rref
from .skewpoly import (
    SignMatrix,
    SkewMatrix,
    SkewPoly,
    parse_poly,
    poly_to_json,
    verify_matrix_factorization,
)


@dataclass(frozen=True)
class Arrow:
    id: int
    label: str
    src: int
    dst: int


@dataclass
class Quiver:
    vertices: int
    arrows: list[Arrow]

    def __post_init__(self):
        labels = set()
        for k, a in enumerate(self.arrows):
            if a.id != k:
                raise InputError("arrow ids must be 0..len(arrows)-1 in order")
            if not (1 <= a.src <= self.vertices and 1 <= a.dst <= self.vertices):
                raise InputError(f"arrow {a.label} has an endpoint out of range")
            if a.label in labels:
                raise InputError(f"duplicate arrow label {a.label!r}")
            labels.add(a.label)

    def arrow_by_label(self, label: str) -> Arrow:
        for a in self.arrows:
            if a.label == label:
                return a
        raise InputError(f"unknown arrow {label!r}")

    def out_arrows(self, v: int) -> list[Arrow]:
        return [a for a in self.arrows if a.src == v]

    def topological_order(self) -> list[int]:
        indeg = {v: 0 for v in range(1, self.vertices + 1)}
        for a in self.arrows:
            indeg[a.dst] += 1
        ready = sorted(v for v, d in indeg.items() if d == 0)
        order = []
        while ready:
            v = ready.pop(0)
            order.append(v)
            for a in self.out_arrows(v):
                indeg[a.dst] -= 1
                if indeg[a.dst] == 0:
                    ready.append(a.dst)
            ready.sort()
        if len(order) != self.vertices:
            raise InputError("quiver has an oriented cycle; only acyclic quivers are supported")
        return order

    def components(self) -> int:
        parent = list(range(self.vertices + 1))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for a in self.arrows:
            parent[find(a.src)] = find(a.dst)
        return len({find(v) for v in range(1, self.vertices + 1)})


@dataclass
class Relation:
    terms: list  # [(GaussianRational, (arrow_id, arrow_id))]
    name: str = ""


@dataclass
class QuiverPresentation:
    quiver: Quiver
    relations: list[Relation] = field(default_factory=list)
    name: str = ""

    def __post_init__(self):
        arrows = self.quiver.arrows
        for rel in self.relations:
            if not rel.terms:
                raise InputError("empty relation")
            ends = set()
            for coeff, path in rel.terms:
                if len(path) != 2:
                    raise InputError("relations must be combinations of paths of length 2")
                a, b = (arrows[k] for k in path)
                if a.dst != b.src:
                    raise InputError(f"path {a.label}{b.label} is not composable")
                ends.add((a.src, b.dst))
            if len(ends) != 1:
                raise InputError(f"relation {rel.name or rel.terms} is not uniform")

    def relation_ends(self, rel: Relation) -> tuple[int, int]:
        _, (a, b) = rel.terms[0]
        return self.quiver.arrows[a].src, self.quiver.arrows[b].dst

    def relation_text(self, rel: Relation) -> str:
        parts = []
        for c, (a, b) in rel.terms:
            lab = self.quiver.arrows[a].label + self.quiver.arrows[b].label
            parts.append(f"({c}){lab}")
        return " + ".join(parts)

    # serialization --------------------------------------------------------
    def to_json(self) -> dict:
        arrows = self.quiver.arrows
        return {
            "vertices": self.quiver.vertices,
            "arrows": [{"label": a.label, "src": a.src, "dst": a.dst} for a in arrows],
            "relations": [
                [
                    {"coeff": as_gq(c).to_pair(), "path": [arrows[a].label, arrows[b].label]}
                    for c, (a, b) in rel.terms
                ]
                for rel in self.relations
            ],
        }

    @classmethod
    def from_json(cls, data: dict) -> "QuiverPresentation":
        try:
            nv = int(data["vertices"])
            arrows = [
                Arrow(k, str(a["label"]), int(a["src"]), int(a["dst"]))
                for k, a in enumerate(data["arrows"])
            ]
            quiver = Quiver(nv, arrows)
            ids = {a.label: a.id for a in arrows}
            rels = []
            for k, rel in enumerate(data.get("relations", [])):
                terms = []
                for t in rel:
                    re, im = t["coeff"]
                    pa, pb = t["path"]
                    terms.append((GaussianRational(str(re), str(im)), (ids[pa], ids[pb])))
                rels.append(Relation(terms, f"g{k + 1}"))
        except (KeyError, TypeError, ValueError) as exc:
            raise InputError(f"malformed quiver JSON: {exc}") from exc
        return cls(quiver, rels)

    def to_dot(self) -> str:
        lines = [f'digraph "{self.name or "Q"}" {{', "  rankdir=LR;"]
        for v in range(1, self.quiver.vertices + 1):
            lines.append(f"  {v};")
        for a in self.quiver.arrows:
            lines.append(f'  {a.src} -> {a.dst} [label="{a.label}"];')
        lines.append("}")
        return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# matrix factorizations -> quiver presentation
# ---------------------------------------------------------------------------

@dataclass
class MatrixFactorizationInput:
    eps: SignMatrix
    pairs: list  # [(SkewMatrix, SkewMatrix)]

    @property
    def beta(self) -> int:
        return self.pairs[0][0].rows if self.pairs else 0

    def validate(self) -> None:
        if not self.pairs:
            raise InputError("no matrix factorizations given")
        inv = delta_and_invariants(self.eps)
        for k, (M, Mp) in enumerate(self.pairs):
            if M.rows != inv.beta:
                raise InputError(
                    f"factorization {k + 1} has size {M.rows}, expected beta={inv.beta}"
                )
            if not verify_matrix_factorization(M, Mp, self.eps):
                raise InputError(f"pair {k + 1} is not a matrix factorization of f_eps")
        if len(self.pairs) != inv.alpha:
            raise InputError(f"got {len(self.pairs)} factorizations, expected alpha={inv.alpha}")

    @classmethod
    def from_json(cls, data: dict) -> "MatrixFactorizationInput":
        try:
            n = int(data["n"])
            eps = SignMatrix.from_upper(n, data.get("upper", []))
            pairs = []
            for pair in data["pairs"]:
                mats = []
                for key in ("M", "Mp"):
                    mats.append(
                        SkewMatrix(eps, [[parse_poly(eps, e) for e in row] for row in pair[key]])
                    )
                pairs.append(tuple(mats))
        except (KeyError, TypeError) as exc:
            raise InputError(f"malformed matrix factorization JSON: {exc}") from exc
        return cls(eps, pairs)

    def to_json(self) -> dict:
        return {
            "n": self.eps.n,
            "upper": self.eps.upper()[: self.eps.n - 1],
            "pairs": [
                {
                    "M": [[poly_to_json(e) for e in row] for row in M.entries],
                    "Mp": [[poly_to_json(e) for e in row] for row in Mp.entries],
                }
                for M, Mp in self.pairs
            ],
        }


def build_lambda(
    mf: MatrixFactorizationInput,
    m_labels: Sequence[Sequence[str]] | None = None,
    x_labels: Sequence[str] | None = None,
    name: str = "",
) -> QuiverPresentation:
    """Quiver with relations of the endomorphism algebra of the tilting object.

    Sources 1..alpha each send beta arrows to alpha+1; the chain
    alpha+1 -> ... -> alpha+n-2 carries one arrow per variable on each
    segment.  The relation g^(s,t) reads its coefficients off column t
    of the s-th factorization matrix.
    """
    mf.validate()
    eps = mf.eps
    n = eps.n
    if n < 3:
        raise InputError("the tilting quiver needs n >= 3")
    alpha = len(mf.pairs)
    beta = mf.beta
    segments = max(n - 3, 0)
    arrows: list[Arrow] = []
    m_ids = []
    for s in range(alpha):
        ids = []
        for i in range(beta):
            if m_labels is not None:
                label = m_labels[s][i]
            else:
                label = f"m{i + 1}_{s + 1}"
            ids.append(len(arrows))
            arrows.append(Arrow(len(arrows), label, s + 1, alpha + 1))
        m_ids.append(ids)
    x_ids = []
    for k in range(segments):
        ids = []
        for j in range(n):
            if x_labels is not None:
                base = x_labels[j]
            else:
                base = f"x{j + 1}"
            label = base if segments == 1 else f"{base}_{k + 1}"
            ids.append(len(arrows))
            arrows.append(Arrow(len(arrows), label, alpha + 1 + k, alpha + 2 + k))
        x_ids.append(ids)
    quiver = Quiver(alpha + n - 2, arrows)

    relations: list[Relation] = []
    if segments >= 1:
        g = 0
        for s, (M, _) in enumerate(mf.pairs):
            for t in range(beta):
                terms = []
                for i in range(beta):
                    for j, c in enumerate(M[i, t].linear_coeffs()):
                        if c:
                            terms.append((c, (m_ids[s][i], x_ids[0][j])))
                g += 1
                if terms:
                    relations.append(Relation(terms, f"g{g}"))
    for k in range(segments - 1):
        first, second = x_ids[k], x_ids[k + 1]
        for i in range(n):
            for j in range(i + 1, n):
                relations.append(
                    Relation(
                        [
                            (GaussianRational(1), (first[i], second[j])),
                            (GaussianRational(-eps.eps[i][j]), (first[j], second[i])),
                        ],
                        f"c{k + 1}_{i + 1}{j + 1}",
                    )
                )
        relations.append(
            Relation(
                [(GaussianRational(1), (first[i], second[i])) for i in range(n)],
                f"f{k + 1}",
            )
        )
    return QuiverPresentation(quiver, relations, name)


def all_minus_generators(n: int) -> list[list[int]]:
    """Sign vectors of a^(s) = x_1 + sum_j (-1)^{c_j} x_{j+1}, c = binary digits of s-1."""
    out = []
    for s in range(2 ** (n - 1)):
        digits = [(s >> (n - 2 - k)) & 1 for k in range(n - 1)]
        out.append([1] + [(-1) ** c for c in digits])
    return out


def all_minus_factorizations(n: int) -> MatrixFactorizationInput:
    if n < 2:
        raise InputError("need n >= 2")
    eps = SignMatrix.constant(n, -1)
    pairs = []
    for signs in all_minus_generators(n):
        a = SkewPoly.linear(eps, signs)
        M = SkewMatrix(eps, [[a]])
        pairs.append((M, M))
    return MatrixFactorizationInput(eps, pairs)


def build_lambda_all_minus(n: int) -> QuiverPresentation:
    if n < 3:
        raise InputError("need n >= 3")
    return build_lambda(all_minus_factorizations(n), name=f"all-minus-{n}")


# ---------------------------------------------------------------------------
# the three n = 4 cases
# ---------------------------------------------------------------------------

QS_LABELS = ("x", "y", "z", "w")


def _lin(eps: SignMatrix, x=0, y=0, z=0, w=0) -> SkewPoly:
    return SkewPoly.linear(eps, [x, y, z, w])


def qs_sign_matrix(case: str) -> SignMatrix:
    if case == "QS1":
        return SignMatrix.constant(4, 1)
    if case == "QS2":
        # only x and w commute
        return SignMatrix.from_upper(4, [[-1, -1, 1], [-1, -1], [-1]])
    if case == "QS3":
        return SignMatrix.constant(4, -1)
    raise InputError(f"unknown case {case!r}; expected QS1, QS2 or QS3")


def qs_factorizations(case: str) -> MatrixFactorizationInput:
    eps = qs_sign_matrix(case)
    L = lambda **kw: _lin(eps, **kw)  # noqa: E731
    if case == "QS1":
        A = [[L(x=1, w=I), L(y=1, z=I)], [L(y=1, z=-I), L(x=-1, w=I)]]
        B = [[L(x=1, w=-I), L(y=1, z=I)], [L(y=1, z=-I), L(x=-1, w=-I)]]
        pairs = [
            (SkewMatrix(eps, A), SkewMatrix(eps, B)),
            (SkewMatrix(eps, B), SkewMatrix(eps, A)),
        ]
        return MatrixFactorizationInput(eps, pairs)
    if case == "QS2":
        pairs = []
        for sgn in (1, -1):
            M = [[L(x=1, w=I), L(y=1, z=sgn)], [L(y=1, z=sgn), L(x=1, w=-I)]]
            Mp = [[L(x=1, w=-I), L(y=1, z=sgn)], [L(y=1, z=sgn), L(x=1, w=I)]]
            pairs.append((SkewMatrix(eps, M), SkewMatrix(eps, Mp)))
        return MatrixFactorizationInput(eps, pairs)
    if case == "QS3":
        return all_minus_factorizations(4)
    raise InputError(f"unknown case {case!r}; expected QS1, QS2 or QS3")


def builtin_case(case: str) -> QuiverPresentation:
    mf = qs_factorizations(case)
    if case == "QS3":
        m_labels = [[f"a{s + 1}"] for s in range(8)]
    else:
        m_labels = [["a", "b"], ["c", "d"]]
    return build_lambda(mf, m_labels=m_labels, x_labels=QS_LABELS, name=case)


def relation_vectors_in_image(mf: MatrixFactorizationInput, pres: QuiverPresentation) -> bool:
    """Map each g^(s,t) back to a vector in (S_eps^beta)_1 and check it lies in Im(M_s .).

    The vector is rebuilt from the relation's coefficients (not from M),
    so this checks the extraction end to end.
    """
    n = mf.eps.n
    beta = mf.beta
    arrows = pres.quiver.arrows
    x_pos = {}
    m_pos = {}
    alpha = len(mf.pairs)
    for a in arrows:
        if a.dst == alpha + 1 and a.src <= alpha:
            m_pos[a.id] = (a.src - 1, len([b for b in arrows[: a.id] if b.src == a.src]))
        elif a.src == alpha + 1:
            x_pos[a.id] = len([b for b in arrows[: a.id] if b.src == alpha + 1])
    for rel in pres.relations:
        first = rel.terms[0][1][0]
        if first not in m_pos:
            continue
        s = m_pos[first][0]
        vec = {}
        for c, (a, b) in rel.terms:
            _, i = m_pos[a]
            key = i * n + x_pos[b]
            vec[key] = vec.get(key, GaussianRational()) + c
        M = mf.pairs[s][0]
        cols = []
        for t in range(beta):
            col = {}
            for i in range(beta):
                for j, c in enumerate(M[i, t].linear_coeffs()):
                    if c:
                        col[i * n + j] = c
            cols.append(col)
        base = rank_sparse([dict(c) for c in cols])
        if rank_sparse([dict(c) for c in cols] + [dict(vec)]) != base:
            return False
    return True


# ---------------------------------------------------------------------------
# realization as a finite-dimensional algebra
# ---------------------------------------------------------------------------

def path_target(quiver: Quiver, path) -> int:
    v, arrows = path
    return quiver.arrows[arrows[-1]].dst if arrows else v


def _extend(quiver: Quiver, paths: list) -> list:
    out = []
    for v, arr in paths:
        end = path_target(quiver, (v, arr))
        for a in quiver.out_arrows(end):
            out.append((v, arr + (a.id,)))
    return out


class BoundQuiverAlgebra:
    """kQ/I for an acyclic quiver Q and I generated by length-2 relations.

    ``hom_basis[(v, w)]`` lists the basis paths of e_v Lambda e_w, shortest
    first and lexicographic by arrow id within a length.  Non-basis paths
    are rewritten through ``reduction``.
    """

    def __init__(self, presentation: QuiverPresentation):
        self.presentation = presentation
        q = presentation.quiver
        self.quiver = q
        q.topological_order()
        self.paths_by_length: list[list] = [[(v, ()) for v in range(1, q.vertices + 1)]]
        while True:
            nxt = _extend(q, self.paths_by_length[-1])
            if not nxt:
                break
            self.paths_by_length.append(nxt)
        self.hom_basis: dict = {}
        self.reduction: dict = {}
        self.relation_rank = 0
        for length, paths in enumerate(self.paths_by_length):
            groups: dict = {}
            for p in paths:
                groups.setdefault((p[0], path_target(q, p)), []).append(p)
            for (v, w), group in sorted(groups.items()):
                basis = self._quotient(length, v, w, group)
                self.hom_basis.setdefault((v, w), []).extend(basis)
        self.basis = [p for key in sorted(self.hom_basis) for p in self.hom_basis[key]]
        self.index = {p: k for k, p in enumerate(self.basis)}
        self.mult_table = self._mult_table()

    def _ideal_rows(self, length: int, v: int, w: int, col: dict) -> list[dict]:
        q = self.quiver
        rows = []
        if length < 2:
            return rows
        for rel in self.presentation.relations:
            s, t = self.presentation.relation_ends(rel)
            for pre_len in range(length - 1):
                post_len = length - 2 - pre_len
                pres = [p for p in self.paths_by_length[pre_len] if p[0] == v and path_target(q, p) == s]
                posts = [p for p in self.paths_by_length[post_len] if p[0] == t and path_target(q, p) == w]
                for p in pres:
                    for r in posts:
                        row = {}
                        for c, mid in rel.terms:
                            row[col[(v, p[1] + mid + r[1])]] = c
                        rows.append(row)
        return rows

    def _quotient(self, length: int, v: int, w: int, group: list) -> list:
        # pivot on the paths whose last arrow has the smallest id
        order = sorted(group, key=lambda p: tuple(reversed(p[1])))
        col = {p: k for k, p in enumerate(order)}
        rows = self._ideal_rows(length, v, w, col)
        if length == 2:
            self.relation_rank += rank_sparse([dict(r) for r in rows])
        prows, pcols = rref(rows)
        pivots = set(pcols)
        basis = sorted((p for p in group if col[p] not in pivots), key=lambda p: p[1])
        for prow, pc in zip(prows, pcols):
            self.reduction[order[pc]] = {
                order[k]: -as_gq(c) for k, c in prow.items() if k != pc
            }
        return basis

    # elements are dicts path -> GaussianRational over basis paths -----------
    def normal_form(self, combo: dict) -> dict:
        out: dict = {}
        for p, c in combo.items():
            if not c:
                continue
            target = self.reduction.get(p)
            if target is None:
                if p not in self.index:
                    raise InvariantViolation(f"path {p} is neither basis nor reducible")
                target = {p: GaussianRational(1)}
            for b, d in target.items():
                acc = out.get(b)
                acc = c * d if acc is None else acc + c * d
                if acc:
                    out[b] = acc
                else:
                    out.pop(b, None)
        return out

    def concat(self, p, q):
        """Path product p then q, or None when not composable."""
        if path_target(self.quiver, p) != q[0]:
            return None
        return (p[0], p[1] + q[1])

    def _path_in_range(self, path) -> bool:
        return len(path[1]) < len(self.paths_by_length)

    def multiply_paths(self, p, q) -> dict:
        r = self.concat(p, q)
        if r is None or not self._path_in_range(r):
            return {}
        return self.normal_form({r: GaussianRational(1)})

    def multiply(self, x: dict, y: dict) -> dict:
        out: dict = {}
        for p, a in x.items():
            for q, b in y.items():
                for r, c in self.multiply_paths(p, q).items():
                    acc = out.get(r)
                    acc = a * b * c if acc is None else acc + a * b * c
                    if acc:
                        out[r] = acc
                    else:
                        out.pop(r, None)
        return out

    def _mult_table(self) -> dict:
        table = {}
        for p in self.basis:
            for q in self.basis:
                prod = self.multiply_paths(p, q)
                if prod:
                    table[(self.index[p], self.index[q])] = {self.index[r]: c for r, c in prod.items()}
        return table

    @property
    def dim(self) -> int:
        return len(self.basis)

    def hom_dim(self, v: int, w: int) -> int:
        return len(self.hom_basis.get((v, w), []))

    def dim_starting_at(self, v: int) -> int:
        """dim e_v Lambda."""
        return sum(len(b) for (s, _), b in self.hom_basis.items() if s == v)

    def dim_ending_at(self, v: int) -> int:
        """dim Lambda e_v."""
        return sum(len(b) for (_, t), b in self.hom_basis.items() if t == v)

    def max_path_length(self) -> int:
        return len(self.paths_by_length) - 1

    def path_label(self, path) -> str:
        v, arr = path
        if not arr:
            return f"e{v}"
        return "".join(self.quiver.arrows[a].label for a in arr)


def realize_algebra(p: QuiverPresentation) -> BoundQuiverAlgebra:
    return BoundQuiverAlgebra(p)


def euler_check(A: BoundQuiverAlgebra) -> bool:
    """Alternating dimension count of the bimodule resolution against dim Lambda."""
    q = A.quiver
    total = sum(A.dim_ending_at(v) * A.dim_starting_at(v) for v in range(1, q.vertices + 1))
    total -= sum(A.dim_ending_at(a.src) * A.dim_starting_at(a.dst) for a in q.arrows)
    for rel in A.presentation.relations:
        s, t = A.presentation.relation_ends(rel)
        total += A.dim_ending_at(s) * A.dim_starting_at(t)
    return total == A.dim


def load_quiver_json(text: str) -> QuiverPresentation:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"invalid JSON: {exc}") from exc
    return QuiverPresentation.from_json(data)
