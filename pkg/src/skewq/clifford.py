"""The Clifford-type algebra C(A_eps) on generators t_1..t_{n-1}.

Relations: t_i^2 = 1 and t_i t_j = -c_ij t_j t_i with
c_ij = eps_{n,i} eps_{i,j} eps_{j,n}.  Basis elements are squarefree
monomials, encoded as bitmasks over the generators.
"""
from __future__ import annotations

from dataclasses import dataclass

from .errors import InputError
from .graphcalc import delta_and_invariants
from .scalars import GaussianRational, MatrixGQ, as_gq, kernel_basis_gq
from .skewpoly import SignMatrix


@dataclass(frozen=True)
class CliffordAlgebra:
    n_gens: int
    sign: tuple  # c_ij, symmetric, ones on the diagonal

    @property
    def dim(self) -> int:
        return 1 << self.n_gens

    @property
    def basis(self) -> list[int]:
        return list(range(self.dim))

    def basis_label(self, mask: int) -> str:
        gens = [f"t{i + 1}" for i in range(self.n_gens) if (mask >> i) & 1]
        return "".join(gens) or "1"

    def monomial_product(self, a: int, b: int) -> tuple[int, int]:
        """(sign, mask) with t^a t^b = sign * t^(a xor b)."""
        s = 1
        for i in range(self.n_gens):
            if not (b >> i) & 1:
                continue
            # t_i from b moves left past every t_j in a with j > i
            for j in range(i + 1, self.n_gens):
                if (a >> j) & 1:
                    s *= -self.sign[i][j]
        return s, a ^ b

    def gen(self, i: int) -> dict:
        return {1 << i: GaussianRational(1)}

    def one(self) -> dict:
        return {0: GaussianRational(1)}


def clifford_from_sign_matrix(eps: SignMatrix) -> CliffordAlgebra:
    n = eps.n
    if n < 2:
        raise InputError("C(A_eps) needs n >= 2")
    e = eps.eps
    last = n - 1
    c = tuple(
        tuple(1 if i == j else e[last][i] * e[i][j] * e[j][last] for j in range(n - 1))
        for i in range(n - 1)
    )
    return CliffordAlgebra(n - 1, c)


def multiply_clifford(C: CliffordAlgebra, a: dict, b: dict) -> dict:
    out: dict = {}
    for ma, ca in a.items():
        for mb, cb in b.items():
            s, m = C.monomial_product(ma, mb)
            v = as_gq(ca) * as_gq(cb)
            if s < 0:
                v = -v
            acc = out.get(m)
            acc = v if acc is None else acc + v
            if acc:
                out[m] = acc
            else:
                out.pop(m, None)
    return out


def commutator_matrix(C: CliffordAlgebra) -> MatrixGQ:
    """Rows: coefficients of z t_i - t_i z for every generator i, stacked."""
    dim = C.dim
    rows = []
    for i in range(C.n_gens):
        g = 1 << i
        block = [[0] * dim for _ in range(dim)]
        for mask in range(dim):
            s_right, out = C.monomial_product(mask, g)
            s_left, _ = C.monomial_product(g, mask)
            block[out][mask] = s_right - s_left
        rows.extend(block)
    if not rows:
        return MatrixGQ.zeros(0, dim)
    return MatrixGQ.from_rows(rows)


def center_basis(C: CliffordAlgebra) -> list[list[GaussianRational]]:
    return kernel_basis_gq(commutator_matrix(C))


def center_dim(C: CliffordAlgebra) -> int:
    return len(center_basis(C))


def verify_decomposition(eps: SignMatrix) -> dict:
    """Check C(A_eps) has dimension 2^{n-1} and centre of dimension alpha = 2^r."""
    inv = delta_and_invariants(eps)
    C = clifford_from_sign_matrix(eps)
    cdim = center_dim(C)
    report = {
        "dim": C.dim,
        "center_dim": cdim,
        "alpha": inv.alpha,
        "beta": inv.beta,
    }
    ok = cdim == inv.alpha and C.dim == inv.alpha * inv.beta**2 == 2 ** (eps.n - 1)
    report["pass"] = ok
    if not ok:
        report["mismatch"] = (
            f"centre dimension {cdim} vs alpha {inv.alpha}; "
            f"dim {C.dim} vs alpha*beta^2 {inv.alpha * inv.beta ** 2}"
        )
    return report
