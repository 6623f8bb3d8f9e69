import json

import pytest

from skewq.errors import InputError
from skewq.quiver import (
    MatrixFactorizationInput,
    QuiverPresentation,
    all_minus_factorizations,
    build_lambda,
    build_lambda_all_minus,
    builtin_case,
    euler_check,
    load_quiver_json,
    qs_factorizations,
    realize_algebra,
    relation_vectors_in_image,
)

PRINTED = {
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


@pytest.mark.parametrize("case", ["QS1", "QS2"])
def test_relations_as_printed(case):
    p = builtin_case(case)
    assert [p.relation_text(r) for r in p.relations] == PRINTED[case]
    assert relation_vectors_in_image(qs_factorizations(case), p)


@pytest.mark.parametrize("case,dim,vertices", [("QS1", 24, 4), ("QS2", 24, 4), ("QS3", 46, 10)])
def test_algebra_dims(case, dim, vertices):
    A = realize_algebra(builtin_case(case))
    assert A.quiver.vertices == vertices
    assert A.dim == dim
    assert euler_check(A)


def test_hom_basis_order():
    A = realize_algebra(builtin_case("QS1"))
    assert [A.path_label(p) for p in A.hom_basis[(1, 4)]] == ["ay", "az", "aw", "by", "bz", "bw"]
    A3 = realize_algebra(builtin_case("QS3"))
    assert [A3.path_label(p) for p in A3.hom_basis[(1, 10)]] == ["a1y", "a1z", "a1w"]


def test_normal_form_uses_relation():
    A = realize_algebra(builtin_case("QS1"))
    ax = A.multiply_paths((1, (0,)), (3, (4,)))
    # ax = -i aw - by + i bz
    assert {A.path_label(p): str(c) for p, c in ax.items()} == {"aw": "-1*i", "by": "-1", "bz": "1*i"}


def test_n3_path_algebras():
    kron = build_lambda_all_minus(3)
    assert (kron.quiver.vertices, len(kron.quiver.arrows), len(kron.relations)) == (5, 4, 0)
    assert {a.dst for a in kron.quiver.arrows} == {5}


def test_all_minus_n5_chain_relations():
    p = build_lambda_all_minus(5)
    # 16 sources, a chain of 3 vertices; 4 arrows per chain segment
    assert p.quiver.vertices == 16 + 3
    assert len(p.relations) == 16 + 10 + 1
    A = realize_algebra(p)
    # e Lambda e' along the chain is (A_eps)_2; from a source it is (S/aS)_2 and (S/aS)_1
    assert (A.hom_dim(17, 19), A.hom_dim(1, 19), A.hom_dim(1, 18)) == (14, 10, 4)
    assert A.max_path_length() == 3


def test_mf_validation_errors():
    mf = qs_factorizations("QS1")
    with pytest.raises(InputError):
        MatrixFactorizationInput(mf.eps, mf.pairs[:1]).validate()
    bad = MatrixFactorizationInput(mf.eps, [mf.pairs[0], (mf.pairs[0][0], mf.pairs[0][0])])
    with pytest.raises(InputError):
        bad.validate()


def test_mf_json_roundtrip():
    mf = all_minus_factorizations(4)
    again = MatrixFactorizationInput.from_json(json.loads(json.dumps(mf.to_json())))
    p1 = build_lambda(mf)
    p2 = build_lambda(again)
    assert p1.to_json() == p2.to_json()


def test_quiver_json_roundtrip():
    p = builtin_case("QS2")
    q = QuiverPresentation.from_json(json.loads(json.dumps(p.to_json())))
    assert q.to_json() == p.to_json()


def test_cycle_rejected():
    text = json.dumps({"vertices": 2, "arrows": [{"label": "a", "src": 1, "dst": 2}, {"label": "b", "src": 2, "dst": 1}]})
    with pytest.raises(InputError):
        realize_algebra(load_quiver_json(text))


def test_non_uniform_relation_rejected():
    text = json.dumps({
        "vertices": 4,
        "arrows": [
            {"label": "a", "src": 1, "dst": 2},
            {"label": "b", "src": 2, "dst": 3},
            {"label": "c", "src": 2, "dst": 4},
        ],
        "relations": [[{"coeff": [1, 0], "path": ["a", "b"]}, {"coeff": [1, 0], "path": ["a", "c"]}]],
    })
    with pytest.raises(InputError):
        load_quiver_json(text)


def test_dot_output():
    dot = builtin_case("QS1").to_dot()
    assert dot.startswith('digraph "QS1"')
    assert '1 -> 3 [label="a"];' in dot
