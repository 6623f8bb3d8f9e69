import random

import pytest

from skewq.quiver import Arrow, Quiver, QuiverPresentation, Relation, realize_algebra
from skewq.scalars import GaussianRational, rank_sparse


def random_bound_quiver(rng: random.Random) -> QuiverPresentation:
    """Three layers of vertices, arrows between consecutive layers, random length-2 relations."""
    sizes = [rng.randint(1, 2), rng.randint(1, 2), rng.randint(1, 2)]
    layers, v = [], 1
    for s in sizes:
        layers.append(list(range(v, v + s)))
        v += s
    arrows = []
    for lo, hi in ((0, 1), (1, 2)):
        for a in layers[lo]:
            for b in layers[hi]:
                for _ in range(rng.randint(0, 3)):
                    arrows.append(Arrow(len(arrows), f"a{len(arrows)}", a, b))
    quiver = Quiver(v - 1, arrows)
    relations = []
    for s in layers[0]:
        for t in layers[2]:
            paths = [
                (p.id, q.id)
                for p in arrows
                if p.src == s
                for q in arrows
                if q.src == p.dst and q.dst == t
            ]
            if not paths:
                continue
            rows = []
            for _ in range(rng.randint(1, max(1, len(paths) // 2))):
                terms = [
                    (GaussianRational(rng.randint(-2, 2), rng.randint(-1, 1)), path)
                    for path in paths
                ]
                terms = [(c, p) for c, p in terms if c]
                if not terms:
                    continue
                row = {paths.index(p): c for c, p in terms}
                if rank_sparse(rows + [row]) == len(rows) + 1:
                    rows.append(row)
                    relations.append(Relation(terms, f"g{len(relations) + 1}"))
    return QuiverPresentation(quiver, relations, "random")


@pytest.fixture
def rng():
    return random.Random(20240611)


@pytest.fixture
def random_algebras():
    r = random.Random(7)
    out = []
    while len(out) < 10:
        A = realize_algebra(random_bound_quiver(r))
        if A.dim <= 50:
            out.append(A)
    return out
