"""Acceptance gate: one check per numbered criterion, each printing a PASS/FAIL line.

Run with ``pytest tests/test_acceptance.py -s`` or ``python tests/test_acceptance.py``.
"""
import itertools
import json
import random
import sys
import time
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).resolve().parent))

from conftest import random_bound_quiver  # noqa: E402

from skewq.clifford import center_dim, clifford_from_sign_matrix  # noqa: E402
from skewq.golden import TABLE1  # noqa: E402
from skewq.graphcalc import (  # noqa: E402
    Graph,
    canonicalize,
    classify_by_mutation,
    delta_and_invariants,
    graph_from_sign_matrix,
    is_isomorphic,
    is_matching_form,
    mutation,
    nullity,
    relative_mutation,
    relative_mutation_allowed,
    two_points_reduction,
)
from skewq.hochschild import bar_hh, golden_matrix_check, hh_dims  # noqa: E402
from skewq.quiver import (  # noqa: E402
    MatrixFactorizationInput,
    all_minus_factorizations,
    build_lambda,
    build_lambda_all_minus,
    builtin_case,
    euler_check,
    qs_factorizations,
    realize_algebra,
    relation_vectors_in_image,
)
from skewq.skewpoly import (  # noqa: E402
    SignMatrix,
    dim_A_closed,
    dim_A_oracle,
    verify_matrix_factorization,
)

SAMPLES = Path(__file__).resolve().parent.parent / "samples"
CASES = ("QS1", "QS2", "QS3")

PRINTED_RELATIONS = {
    "QS1": [
        "(1)ax + (1*i)aw + (1)by + (-1*i)bz",
        "(1)ay + (1*i)az + (-1)bx + (1*i)bw",
        "(1)cx + (-1*i)cw + (1)dy + (-1*i)dz",
        "(1)cy + (1*i)cz + (-1)dx + (-1*i)dw",
    ],
    "QS2": [
        "(1)ax + (1*i)aw + (1)by + (1)bz",
        "(1)ay + (1)az + (1)bx + (-1*i)bw",
        "(1)cx + (1*i)cw + (1)dy + (-1)dz",
        "(1)cy + (-1)cz + (1)dx + (-1*i)dw",
    ],
}


def crit_table1():
    t0 = time.perf_counter()
    got = {}
    for case in CASES:
        rep = hh_dims(realize_algebra(builtin_case(case)))
        got[case] = {
            "dims": list(rep.dims),
            "rank_d1": rep.rank_d1,
            "rank_d2": rep.rank_d2,
            "hh": [rep.hh0, rep.hh1, rep.hh2],
        }
    elapsed = time.perf_counter() - t0
    expected = {
        c: {k: list(v) if isinstance(v, tuple) else v for k, v in row.items()}
        for c, row in TABLE1.items()
    }
    ok = got == expected and elapsed < 5.0
    return ok, f"{elapsed:.2f}s; " + "; ".join(f"{c} hh={got[c]['hh']}" for c in CASES)


def crit_golden():
    parts, ok = [], True
    for case in CASES:
        rep = golden_matrix_check(case)
        ok &= rep["rank_computed"] == rep["rank_expected"]
        parts.append(f"{case} rank {rep['rank_computed']} ({rep['level']})")
    return ok, "; ".join(parts)


def _n3_shape(eps):
    inv = delta_and_invariants(eps)
    # alpha sources, one sink, beta arrows out of each source, no length-2 paths
    return inv.alpha + 1, inv.alpha * inv.beta


def crit_n3():
    ok = True
    for upper in itertools.product((1, -1), repeat=3):
        eps = SignMatrix.from_upper(3, [list(upper[:2]), [upper[2]]])
        prod = upper[0] * upper[1] * upper[2]
        ok &= _n3_shape(eps) == ((2, 2) if prod == 1 else (5, 4))
    mf = MatrixFactorizationInput.from_json(json.loads((SAMPLES / "mf_n3_plus.json").read_text()))
    kron = build_lambda(mf)
    d4 = build_lambda_all_minus(3)
    shapes = [
        (p.quiver.vertices, len(p.quiver.arrows), len(p.relations)) for p in (kron, d4)
    ]
    ok &= shapes == [(2, 2, 0), (5, 4, 0)]
    # D~4: four sources into one sink
    ok &= sorted(a.src for a in d4.quiver.arrows) == [1, 2, 3, 4]
    ok &= {a.dst for a in d4.quiver.arrows} == {5}
    return ok, f"Kronecker {shapes[0]}, D4-tilde {shapes[1]}, all 8 sign matrices consistent"


def crit_n4():
    t0 = time.perf_counter()
    classes = classify_by_mutation(4)
    elapsed = time.perf_counter() - t0
    targets = [Graph.complete(4), Graph.parse("n=4; edges=1-2"), Graph.empty(4)]
    reps = [c.representative for c in classes]
    matched = all(any(is_isomorphic(r, t) for r in reps) for t in targets)
    ok = len(classes) == 3 and matched and sum(c.size for c in classes) == 64 and elapsed < 1.0
    return ok, f"{len(classes)} classes in {elapsed:.3f}s: " + ", ".join(r.to_text() for r in reps)


def crit_nullity():
    rng = random.Random(5)
    bad = 0
    for _ in range(200):
        n = rng.randint(2, 6)
        eps = SignMatrix.random(n, rng)
        r = delta_and_invariants(eps).r
        if center_dim(clifford_from_sign_matrix(eps)) != 2**r or r % 2 != (n - 1) % 2:
            bad += 1
    return bad == 0, f"200 random sign matrices, {bad} failures"


def crit_graph_ops():
    rng = random.Random(6)
    bad = 0
    for _ in range(500):
        n = rng.randint(2, 7)
        g = Graph.from_code(n, rng.getrandbits(n * (n - 1) // 2))
        r = nullity(g)
        pairs = [(u, v) for u in range(n) for v in range(n) if relative_mutation_allowed(g, u, v)]
        if pairs and rng.random() < 0.5:
            h = relative_mutation(g, *rng.choice(pairs))
        else:
            h = mutation(g, rng.randrange(n))
        bad += nullity(h) != r
    reductions = 0
    for n in range(3, 6):
        for code in range(1 << (n * (n - 1) // 2)):
            g = Graph.from_code(n, code)
            if len(g.isolated()) >= 2:
                reductions += 1
                bad += nullity(two_points_reduction(g)) != nullity(g) - 1
    return bad == 0, f"500 random moves, {reductions} exhaustive reductions, {bad} failures"


def crit_canonical():
    rng = random.Random(7)
    bad = 0
    for _ in range(30):
        n = rng.randint(1, 6)
        eps = SignMatrix.random(n, rng)
        g = graph_from_sign_matrix(eps)
        r = delta_and_invariants(eps).r
        res = canonicalize(g)
        h = res.graph
        ok = is_matching_form(h, r) and h.num_edges() == (n - r - 1) // 2
        ok &= len(h.isolated()) == r + 1
        bad += not ok
    return bad == 0, f"30 random sign matrices, {bad} failures"


def crit_mf():
    ok = True
    for case in ("QS1", "QS2"):
        mf = qs_factorizations(case)
        ok &= all(verify_matrix_factorization(M, Mp, mf.eps) for M, Mp in mf.pairs)
        pres = builtin_case(case)
        ok &= [pres.relation_text(r) for r in pres.relations] == PRINTED_RELATIONS[case]
        ok &= relation_vectors_in_image(mf, pres)
    count = 0
    for n in range(2, 6):
        mf = all_minus_factorizations(n)
        ok &= len(mf.pairs) == 2 ** (n - 1)
        ok &= all(verify_matrix_factorization(M, Mp, mf.eps) for M, Mp in mf.pairs)
        count += len(mf.pairs)
    return ok, f"QS1/QS2 pairs and relations match; {count} one-by-one factorizations verified"


def crit_hilbert():
    rng = random.Random(9)
    bad = 0
    for n in range(1, 7):
        for _ in range(10):
            eps = SignMatrix.random(n, rng)
            for d in range(7):
                bad += dim_A_oracle(eps, d) != dim_A_closed(n, d)
    seq = [dim_A_closed(4, d) for d in range(7)]
    ok = bad == 0 and seq == [(d + 1) ** 2 for d in range(7)]
    return ok, f"{bad} mismatches over n<=6, d<=6; n=4 sequence {seq}"


def crit_oracle():
    algebras = [realize_algebra(builtin_case(c)) for c in CASES]
    mf = MatrixFactorizationInput.from_json(json.loads((SAMPLES / "mf_n3_plus.json").read_text()))
    algebras.append(realize_algebra(build_lambda(mf)))
    algebras.append(realize_algebra(build_lambda_all_minus(3)))
    rng = random.Random(7)
    randoms = 0
    while randoms < 10:
        A = realize_algebra(random_bound_quiver(rng))
        if A.dim <= 50:
            algebras.append(A)
            randoms += 1
    bad = 0
    for A in algebras:
        rep = hh_dims(A)
        bad += bar_hh(A) != (rep.hh0, rep.hh1, rep.hh2)
        bad += not euler_check(A)
    return bad == 0, f"{len(algebras)} algebras, {bad} disagreements"


CRITERIA = [
    (1, "Hochschild table for QS1-QS3", crit_table1),
    (2, "golden matrix ranks", crit_golden),
    (3, "n=3 classification", crit_n3),
    (4, "n=4 classification", crit_n4),
    (5, "centre dimension vs nullity", crit_nullity),
    (6, "graph-operation invariance", crit_graph_ops),
    (7, "canonical matching form", crit_canonical),
    (8, "matrix factorization suite", crit_mf),
    (9, "Hilbert dimensions", crit_hilbert),
    (10, "Hochschild oracle equivalence", crit_oracle),
]


def _line(num, title, ok, detail):
    return f"[{'PASS' if ok else 'FAIL'}] criterion {num}: {title}: {detail}"


@pytest.mark.parametrize("num,title,check", CRITERIA, ids=[f"criterion_{c[0]}" for c in CRITERIA])
def test_criterion(num, title, check, capsys):
    ok, detail = check()
    with capsys.disabled():
        print("\n" + _line(num, title, ok, detail))
    assert ok, detail


if __name__ == "__main__":
    failures = 0
    for num, title, check in CRITERIA:
        ok, detail = check()
        failures += not ok
        print(_line(num, title, ok, detail))
    sys.exit(1 if failures else 0)
