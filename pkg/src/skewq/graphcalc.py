"""Graph calculus over F_2: G_eps, Delta_eps, the nullity r and the graph moves.

Vertices are 0-based internally and printed 1-based.  A graph stores one
neighbour bitmask per vertex.
"""
from __future__ import annotations

import os
from collections import deque
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import permutations, product
from typing import Iterable

from .errors import BudgetExceeded, InputError, InvariantViolation
from .scalars import MatrixF2, rank_f2
from .skewpoly import SignMatrix

DEFAULT_BUDGET = 10**6


def default_budget() -> int:
    raw = os.environ.get("SKEWQ_BUDGET")
    if raw is None:
        return DEFAULT_BUDGET
    try:
        value = int(raw)
    except ValueError as exc:
        raise InputError(f"SKEWQ_BUDGET must be an integer, got {raw!r}") from exc
    if value <= 0:
        raise InputError("SKEWQ_BUDGET must be positive")
    return value


@dataclass(frozen=True)
class Graph:
    n: int
    adj: tuple

    def __post_init__(self):
        if len(self.adj) != self.n:
            raise InputError("adjacency needs one mask per vertex")
        full = (1 << self.n) - 1
        for v, mask in enumerate(self.adj):
            if mask & ~full or (mask >> v) & 1:
                raise InputError("graph must be simple on vertices 1..n")
            for w in range(self.n):
                if (mask >> w) & 1 and not (self.adj[w] >> v) & 1:
                    raise InputError("adjacency is not symmetric")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]], one_based: bool = True) -> "Graph":
        adj = [0] * n
        off = 1 if one_based else 0
        for a, b in edges:
            a -= off
            b -= off
            if not (0 <= a < n and 0 <= b < n) or a == b:
                raise InputError(f"bad edge {a + off}-{b + off} for n={n}")
            adj[a] |= 1 << b
            adj[b] |= 1 << a
        return cls(n, tuple(adj))

    @classmethod
    def empty(cls, n: int) -> "Graph":
        return cls(n, (0,) * n)

    @classmethod
    def complete(cls, n: int) -> "Graph":
        full = (1 << n) - 1
        return cls(n, tuple(full & ~(1 << v) for v in range(n)))

    @classmethod
    def from_code(cls, n: int, code: int) -> "Graph":
        adj = [0] * n
        for k, (i, j) in enumerate(_pairs(n)):
            if (code >> k) & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
        return cls(n, tuple(adj))

    @classmethod
    def parse(cls, text: str) -> "Graph":
        """Inverse of :meth:`to_text`: ``n=<n>; edges=i-j,k-l``."""
        try:
            head, tail = [p.strip() for p in text.split(";", 1)]
            n = int(head.split("=", 1)[1])
            edge_list = tail.split("=", 1)[1].strip()
            edges = []
            if edge_list:
                for e in edge_list.split(","):
                    a, b = e.split("-")
                    edges.append((int(a), int(b)))
        except (ValueError, IndexError) as exc:
            raise InputError(f"cannot parse graph {text!r}") from exc
        return cls.from_edges(n, edges)

    def code(self) -> int:
        c = 0
        for k, (i, j) in enumerate(_pairs(self.n)):
            if (self.adj[i] >> j) & 1:
                c |= 1 << k
        return c

    def has_edge(self, a: int, b: int) -> bool:
        return bool((self.adj[a] >> b) & 1)

    def neighbors(self, v: int) -> int:
        return self.adj[v]

    def degree(self, v: int) -> int:
        return bin(self.adj[v]).count("1")

    def edges(self) -> list[tuple[int, int]]:
        """0-based edges (i, j), i < j, sorted."""
        return [(i, j) for i, j in _pairs(self.n) if (self.adj[i] >> j) & 1]

    def num_edges(self) -> int:
        return sum(self.degree(v) for v in range(self.n)) // 2

    def isolated(self) -> list[int]:
        return [v for v in range(self.n) if not self.adj[v]]

    def remove_vertex(self, v: int) -> "Graph":
        """Induced subgraph on the other vertices, relabelled in order."""
        keep = [w for w in range(self.n) if w != v]
        pos = {w: k for k, w in enumerate(keep)}
        adj = []
        for w in keep:
            mask = 0
            for u in keep:
                if (self.adj[w] >> u) & 1:
                    mask |= 1 << pos[u]
            adj.append(mask)
        return Graph(self.n - 1, tuple(adj))

    def relabel(self, perm) -> "Graph":
        """Graph with vertex v renamed perm[v]."""
        adj = [0] * self.n
        for i, j in self.edges():
            a, b = perm[i], perm[j]
            adj[a] |= 1 << b
            adj[b] |= 1 << a
        return Graph(self.n, tuple(adj))

    def to_text(self) -> str:
        es = ",".join(f"{i + 1}-{j + 1}" for i, j in self.edges())
        return f"n={self.n}; edges={es}"

    def __str__(self) -> str:
        return self.to_text()


@lru_cache(maxsize=None)
def _pairs(n: int) -> tuple:
    return tuple((i, j) for i in range(n) for j in range(i + 1, n))


# ---------------------------------------------------------------------------
# G_eps, Delta_eps and the numerical invariants
# ---------------------------------------------------------------------------

def graph_from_sign_matrix(eps: SignMatrix) -> Graph:
    adj = []
    for i in range(eps.n):
        mask = 0
        for j in range(eps.n):
            if i != j and eps.eps[i][j] == 1:
                mask |= 1 << j
        adj.append(mask)
    return Graph(eps.n, tuple(adj))


def sign_matrix_from_graph(g: Graph) -> SignMatrix:
    return SignMatrix(
        g.n,
        tuple(
            tuple(1 if i == j or g.has_edge(i, j) else -1 for j in range(g.n))
            for i in range(g.n)
        ),
    )


def delta_matrix(g: Graph) -> MatrixF2:
    """Adjacency of g over F_2 bordered by a row and column of ones (corner 0)."""
    n = g.n
    rows = [g.adj[v] | (1 << n) for v in range(n)]
    rows.append((1 << n) - 1)
    return MatrixF2(n + 1, n + 1, rows)


def nullity(g: Graph) -> int:
    return g.n + 1 - rank_f2(delta_matrix(g))


@dataclass(frozen=True)
class InvariantBundle:
    n: int
    r: int
    alpha: int
    beta: int
    seq_length: int

    def as_dict(self) -> dict:
        return {
            "n": self.n,
            "r": self.r,
            "alpha": self.alpha,
            "beta": self.beta,
            "seq_length": self.seq_length,
        }


def invariants_of_graph(g: Graph) -> InvariantBundle:
    n = g.n
    r = nullity(g)
    if (n - r - 1) % 2 or r < 0 or n - r - 1 < 0:
        raise InvariantViolation(f"nullity {r} has the wrong parity for n={n}")
    alpha = 2**r
    beta = 2 ** ((n - r - 1) // 2)
    if alpha * beta * beta != 2 ** (n - 1):
        raise InvariantViolation("alpha * beta^2 != 2^(n-1)")
    return InvariantBundle(n=n, r=r, alpha=alpha, beta=beta, seq_length=n - 2 + alpha)


def delta_and_invariants(eps: SignMatrix) -> InvariantBundle:
    return invariants_of_graph(graph_from_sign_matrix(eps))


# ---------------------------------------------------------------------------
# graph moves
# ---------------------------------------------------------------------------

def _check_vertex(g: Graph, v: int):
    if not 0 <= v < g.n:
        raise InputError(f"vertex {v + 1} out of range 1..{g.n}")


def _replace_star(g: Graph, v: int, new_nbrs: int) -> Graph:
    new_nbrs &= ~(1 << v)
    adj = list(g.adj)
    for w in range(g.n):
        if w == v:
            continue
        if (new_nbrs >> w) & 1:
            adj[w] |= 1 << v
        else:
            adj[w] &= ~(1 << v)
    adj[v] = new_nbrs
    return Graph(g.n, tuple(adj))


def mutation(g: Graph, v: int) -> Graph:
    """Replace N(v) by its complement in V \\ {v}."""
    _check_vertex(g, v)
    full = (1 << g.n) - 1
    return _replace_star(g, v, full & ~g.adj[v] & ~(1 << v))


def relative_mutation_allowed(g: Graph, u: int, v: int) -> bool:
    if u == v:
        return False
    return any(i not in (u, v) for i in g.isolated())


def relative_mutation(g: Graph, u: int, v: int) -> Graph:
    """Replace N(v) by the symmetric difference N(u) xor N(v), at v."""
    _check_vertex(g, u)
    _check_vertex(g, v)
    if u == v:
        raise InputError("relative mutation needs u != v")
    if not relative_mutation_allowed(g, u, v):
        raise InputError(
            f"relative mutation at {v + 1} w.r.t. {u + 1} needs an isolated vertex "
            "different from both"
        )
    return _replace_star(g, v, g.adj[u] ^ g.adj[v])


def two_points_reduction(g: Graph) -> Graph:
    iso = g.isolated()
    if len(iso) < 2:
        raise InputError("two points reduction needs two isolated vertices")
    return g.remove_vertex(max(iso))


# ---------------------------------------------------------------------------
# isomorphism
# ---------------------------------------------------------------------------

def _refine(g: Graph) -> list[int]:
    """Stable colour refinement with label-independent colour names."""
    colors = [g.degree(v) for v in range(g.n)]
    while True:
        sigs = [
            (colors[v], tuple(sorted(colors[w] for w in range(g.n) if g.has_edge(v, w))))
            for v in range(g.n)
        ]
        names = {s: k for k, s in enumerate(sorted(set(sigs)))}
        new = [names[s] for s in sigs]
        if len(set(new)) == len(set(colors)):
            return new
        colors = new


@lru_cache(maxsize=1 << 18)
def _canonical(n: int, adj: tuple) -> tuple:
    g = Graph(n, adj)
    colors = _refine(g)
    cells = []
    for c in sorted(set(colors)):
        cells.append([v for v in range(n) if colors[v] == c])
    pairs = _pairs(n)
    best = -1
    for choice in product(*(permutations(cell) for cell in cells)):
        order = [v for part in choice for v in part]
        code = 0
        for k, (p, q) in enumerate(pairs):
            if (adj[order[p]] >> order[q]) & 1:
                code |= 1 << k
        if code > best:
            best = code
    return (n, tuple(sorted(colors)), best)


def canonical_form(g: Graph) -> tuple:
    """Hashable isomorphism invariant that is complete (equal iff isomorphic)."""
    return _canonical(g.n, g.adj)


def canonical_graph(g: Graph) -> Graph:
    return Graph.from_code(g.n, canonical_form(g)[2])


def is_isomorphic(g: Graph, h: Graph) -> bool:
    if g.n != h.n:
        raise InputError("isomorphism test needs graphs on the same vertex count")
    if g.num_edges() != h.num_edges():
        return False
    if sorted(g.degree(v) for v in range(g.n)) != sorted(h.degree(v) for v in range(h.n)):
        return False
    return canonical_form(g) == canonical_form(h)


# ---------------------------------------------------------------------------
# canonical matching form and mutation classes
# ---------------------------------------------------------------------------

def is_matching_form(g: Graph, r: int) -> bool:
    """Disjoint union of (n-r-1)/2 edges and r+1 isolated vertices."""
    if any(g.degree(v) > 1 for v in range(g.n)):
        return False
    return 2 * g.num_edges() == g.n - r - 1


@dataclass
class CanonicalResult:
    graph: Graph
    ops: list = field(default_factory=list)
    visited: int = 0

    def ops_text(self) -> list[str]:
        out = []
        for op in self.ops:
            if op[0] == "mutation":
                out.append(f"mutation({op[1] + 1})")
            else:
                out.append(f"relative_mutation(u={op[1] + 1}, v={op[2] + 1})")
        return out


def _moves(g: Graph):
    for v in range(g.n):
        yield ("mutation", v), mutation(g, v)
    iso = g.isolated()
    if not iso:
        return
    for u in range(g.n):
        for v in range(g.n):
            if u != v and any(i not in (u, v) for i in iso):
                yield ("relative_mutation", u, v), relative_mutation(g, u, v)


def canonicalize(g: Graph, budget: int | None = None) -> CanonicalResult:
    """Breadth-first search of the move orbit, modulo isomorphism.

    The returned op sequence applies to ``g`` itself; the returned graph is
    the labelled graph it produces.
    """
    if budget is None:
        budget = default_budget()
    r = nullity(g)
    if is_matching_form(g, r):
        return CanonicalResult(g, [], 1)
    seen = {canonical_form(g)}
    queue = deque([(g, [])])
    while queue:
        cur, ops = queue.popleft()
        for op, nxt in _moves(cur):
            key = canonical_form(nxt)
            if key in seen:
                continue
            seen.add(key)
            if is_matching_form(nxt, r):
                return CanonicalResult(nxt, ops + [op], len(seen))
            if len(seen) >= budget:
                raise BudgetExceeded(
                    f"canonicalize visited {len(seen)} isomorphism classes without "
                    "reaching the matching form"
                )
            queue.append((nxt, ops + [op]))
    raise InvariantViolation(
        f"orbit of {g} exhausted without reaching the matching form (r={r})"
    )


def apply_ops(g: Graph, ops) -> Graph:
    for op in ops:
        if op[0] == "mutation":
            g = mutation(g, op[1])
        else:
            g = relative_mutation(g, op[1], op[2])
    return g


@dataclass
class OrbitClass:
    representative: Graph
    size: int
    r: int
    members: list = field(default_factory=list, repr=False)

    def as_dict(self) -> dict:
        return {"representative": self.representative.to_text(), "size": self.size, "r": self.r}


def _representative(members: list[Graph]) -> Graph:
    # prefer the "cleanest" shape: a clique plus isolated vertices, largest clique
    # first; otherwise fewest edges; ties by smallest edge code
    def clique_size(g: Graph):
        live = [v for v in range(g.n) if g.adj[v]]
        k = len(live)
        if all(g.degree(v) == k - 1 for v in live):
            return k
        return None

    cliques = [(clique_size(g), g) for g in members]
    cliques = [(k, g) for k, g in cliques if k is not None]
    if cliques:
        kmax = max(k for k, _ in cliques)
        pool = [g for k, g in cliques if k == kmax]
        # a lone edge is drawn between the first and last vertex
        return min(pool, key=lambda g: (-max(j - i for i, j in g.edges()) if g.edges() else 0, g.code()))
    return min(members, key=lambda g: (g.num_edges(), g.code()))


def classify_by_mutation(n: int, max_n: int = 5) -> list[OrbitClass]:
    """Partition all labelled graphs on n vertices into mutation + isomorphism classes."""
    if n < 1:
        raise InputError("n must be positive")
    if n > max_n:
        raise BudgetExceeded(f"classification over all labelled graphs is capped at n={max_n}")
    m = n * (n - 1) // 2
    parent = list(range(1 << m))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(a, b):
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[max(ra, rb)] = min(ra, rb)

    by_form: dict = {}
    for code in range(1 << m):
        g = Graph.from_code(n, code)
        key = canonical_form(g)
        first = by_form.setdefault(key, code)
        union(first, code)
        for v in range(n):
            union(code, mutation(g, v).code())
    groups: dict = {}
    for code in range(1 << m):
        groups.setdefault(find(code), []).append(code)
    classes = []
    for codes in groups.values():
        members = [Graph.from_code(n, c) for c in codes]
        rep = _representative(members)
        classes.append(OrbitClass(rep, len(codes), nullity(rep), members))
    classes.sort(key=lambda c: (-c.representative.num_edges(), c.r, c.representative.code()))
    return classes


def classification_json(n: int) -> dict:
    return {"n": n, "classes": [c.as_dict() for c in classify_by_mutation(n)]}
