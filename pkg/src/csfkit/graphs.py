"""Vertex-labeled simple graphs and the edit operations the recursions need.

Labels are load-bearing: the noncommutative invariants depend on them, so
nothing here canonicalizes up to isomorphism.
"""

from __future__ import annotations

import json
from functools import lru_cache
from itertools import combinations, permutations
from typing import Iterable

from .errors import CapacityError, DomainError
from .partitions import SetPartition


def _normalize_edge(e) -> tuple:
    i, j = e
    if i == j:
        raise DomainError("loops are not allowed")
    return (i, j) if i < j else (j, i)


class LabeledGraph:
    """Simple graph on vertices 1..d; edges stored as (i, j) with i < j."""

    __slots__ = ("d", "edges", "_hash")

    def __init__(self, d: int, edges: Iterable = ()):
        if d < 0:
            raise DomainError("vertex count must be nonnegative")
        es = frozenset(_normalize_edge(e) for e in edges)
        for i, j in es:
            if not 1 <= i < j <= d:
                raise DomainError(f"edge ({i},{j}) outside 1..{d}")
        self.d = d
        self.edges = es
        self._hash = hash((d, es))

    @property
    def edge_list(self) -> list:
        return sorted(self.edges)

    def has_edge(self, e) -> bool:
        return _normalize_edge(e) in self.edges

    def degree_sequence(self) -> tuple:
        deg = [0] * (self.d + 1)
        for i, j in self.edges:
            deg[i] += 1
            deg[j] += 1
        return tuple(sorted(deg[1:], reverse=True))

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, LabeledGraph)
            and self.d == other.d
            and self.edges == other.edges
        )

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        es = ",".join(f"{i}{j}" if self.d <= 9 else f"{i}-{j}" for i, j in self.edge_list)
        return f"LabeledGraph(d={self.d}, edges=[{es}])"

    def to_json(self) -> dict:
        return {"d": self.d, "edges": [list(e) for e in self.edge_list]}

    @classmethod
    def from_json(cls, data: dict) -> "LabeledGraph":
        return cls(data["d"], data["edges"])


# ---------------------------------------------------------------------------
# constructors

def empty_graph(n: int) -> LabeledGraph:
    if n < 0:
        raise DomainError("n must be nonnegative")
    return LabeledGraph(n)


def path(n: int) -> LabeledGraph:
    """Path v_1 ... v_n; n = 0 gives the empty graph."""
    if n < 0:
        raise DomainError("n must be nonnegative")
    return LabeledGraph(n, ((i, i + 1) for i in range(1, n)))


def cycle(n: int) -> LabeledGraph:
    """Cycle v_1 ... v_n v_1 (simple, so n >= 3)."""
    if n < 3:
        raise DomainError("a simple cycle needs n >= 3")
    return LabeledGraph(n, [(i, i + 1) for i in range(1, n)] + [(1, n)])


def complete(n: int) -> LabeledGraph:
    if n < 1:
        raise DomainError("n must be positive")
    return LabeledGraph(n, combinations(range(1, n + 1), 2))


def claw() -> LabeledGraph:
    """The star K_{1,3}, centered at vertex 1."""
    return LabeledGraph(4, [(1, 2), (1, 3), (1, 4)])


def tadpole(m: int, l: int) -> LabeledGraph:
    """Path v_1 ... v_{m+l} plus the edge {1, m}: an m-cycle with an l-tail."""
    if m < 3 or l < 0:
        raise DomainError("need m >= 3 and l >= 0")
    return LabeledGraph(m + l, set(path(m + l).edges) | {(1, m)})


def line_tadpole(m: int, l: int) -> LabeledGraph:
    """Cycle v_1..v_m, path v_{m+1}..v_{m+l}, plus edges {1,m+1} and {m,m+1}."""
    if m < 3 or l < 1:
        raise DomainError("need m >= 3 and l >= 1")
    edges = set(cycle(m).edges)
    edges.update((m + i, m + i + 1) for i in range(1, l))
    edges.update([(1, m + 1), (m, m + 1)])
    return LabeledGraph(m + l, edges)


def cycle_chord(a: int, b: int) -> LabeledGraph:
    """Cycle on a+b vertices with the chord {1, a+1}.

    The chord splits it into an (a+1)-cycle and a (b+1)-cycle sharing an edge.
    """
    if a < 2 or b < 2:
        raise DomainError("need a, b >= 2 for a simple graph")
    return LabeledGraph(a + b, set(cycle(a + b).edges) | {(1, a + 1)})


def cc_m3_labeled(m: int) -> LabeledGraph:
    """Cycle v_1 ... v_{m+2} v_1 plus the edge {2, m+1}."""
    if m < 3:
        raise DomainError("need m >= 3")
    return LabeledGraph(m + 2, set(cycle(m + 2).edges) | {(2, m + 1)})


def diamond() -> LabeledGraph:
    """K_4 minus one edge, labeled as line_tadpole(3, 1)."""
    return line_tadpole(3, 1)


# ---------------------------------------------------------------------------
# edit operations

def disjoint_union(g: LabeledGraph, h: LabeledGraph) -> LabeledGraph:
    """g kept as-is; h's labels shifted up by g.d."""
    shifted = ((i + g.d, j + g.d) for i, j in h.edges)
    return LabeledGraph(g.d + h.d, set(g.edges) | set(shifted))


def clique_attach(g: LabeledGraph, n: int) -> LabeledGraph:
    """Add vertices d+1..d+n-1 and all edges among {d, ..., d+n-1}."""
    if n < 1 or g.d < 1:
        raise DomainError("need n >= 1 and a nonempty graph")
    verts = range(g.d, g.d + n)
    return LabeledGraph(g.d + n - 1, set(g.edges) | set(combinations(verts, 2)))


def delete_edge(g: LabeledGraph, e) -> LabeledGraph:
    e = _normalize_edge(e)
    if e not in g.edges:
        raise DomainError(f"edge {e} not in the graph")
    return LabeledGraph(g.d, g.edges - {e})


def contract_edge(g: LabeledGraph, e) -> LabeledGraph:
    """Contract e = {d-1, d}, merging d into d-1; relabel first for other edges."""
    e = _normalize_edge(e)
    if e not in g.edges:
        raise DomainError(f"edge {e} not in the graph")
    if e != (g.d - 1, g.d):
        raise DomainError("contraction only in the normal form {d-1, d}; relabel first")
    return _contract_into(g, g.d - 1, g.d)


def _contract_into(g: LabeledGraph, i: int, j: int) -> LabeledGraph:
    """Merge vertex j into i (i < j); labels above j slide down by one."""
    assert 1 <= i < j <= g.d and (i, j) in g.edges

    def remap(x: int) -> int:
        if x == j:
            x = i
        return x if x < j else x - 1

    edges = set()
    for a, b in g.edges:
        a2, b2 = remap(a), remap(b)
        if a2 != b2:
            edges.add((a2, b2) if a2 < b2 else (b2, a2))
    return LabeledGraph(g.d - 1, edges)


def relabel(g: LabeledGraph, perm: Iterable[int]) -> LabeledGraph:
    """Map vertex i to perm[i-1]; perm must be a permutation of 1..d."""
    perm = tuple(perm)
    if sorted(perm) != list(range(1, g.d + 1)):
        raise DomainError("not a permutation of 1..d")
    return LabeledGraph(g.d, ((perm[i - 1], perm[j - 1]) for i, j in g.edges))


def component_partition(d: int, edge_subset: Iterable) -> SetPartition:
    """Connected components of the spanning subgraph (V, edge_subset)."""
    parent = list(range(d + 1))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for e in edge_subset:
        i, j = _normalize_edge(e)
        if not 1 <= i < j <= d:
            raise DomainError(f"edge ({i},{j}) outside 1..{d}")
        ri, rj = find(i), find(j)
        if ri != rj:
            parent[rj] = ri
    groups: dict = {}
    for x in range(1, d + 1):
        groups.setdefault(find(x), []).append(x)
    return SetPartition(d, groups.values())


@lru_cache(maxsize=None)
def _chromatic_coeffs(g: LabeledGraph) -> tuple:
    """Chromatic polynomial coefficients (low degree first), by delete/contract."""
    if not g.edges:
        return (0,) * g.d + (1,)
    i, j = min(g.edges)
    out = list(_chromatic_coeffs(delete_edge(g, (i, j))))
    for s, c in enumerate(_chromatic_coeffs(_contract_into(g, i, j))):
        out[s] -= c
    return tuple(out)


def chromatic_polynomial_value(g: LabeledGraph, k: int) -> int:
    """Number of proper colorings of g with k colors."""
    if k < 0:
        raise DomainError("k must be nonnegative")
    return sum(c * k**s for s, c in enumerate(_chromatic_coeffs(g)))


def are_isomorphic(g: LabeledGraph, h: LabeledGraph) -> bool:
    """Brute-force isomorphism test, capped at 8 vertices."""
    if g.d != h.d or len(g.edges) != len(h.edges):
        return False
    if g.degree_sequence() != h.degree_sequence():
        return False
    if g.d > 8:
        raise CapacityError("brute-force isomorphism is capped at 8 vertices")
    target = h.edges
    for perm in permutations(range(1, g.d + 1)):
        mapped = frozenset(
            (perm[i - 1], perm[j - 1]) if perm[i - 1] < perm[j - 1] else (perm[j - 1], perm[i - 1])
            for i, j in g.edges
        )
        if mapped == target:
            return True
    return False


# ---------------------------------------------------------------------------
# specs and the test corpus

_CONSTRUCTORS = {
    "path": (path, 1),
    "cycle": (cycle, 1),
    "complete": (complete, 1),
    "empty": (empty_graph, 1),
    "tadpole": (tadpole, 2),
    "ltadpole": (line_tadpole, 2),
    "cc": (cycle_chord, 2),
    "ccm3": (cc_m3_labeled, 1),
}

_NAMED = {"claw": claw, "diamond": diamond}


def parse_graph(text: str) -> LabeledGraph:
    """Constructor DSL ("path:6", "tadpole:5,2", "claw", ...) or a JSON file."""
    t = text.strip()
    if t in _NAMED:
        return _NAMED[t]()
    if t.startswith("@") or t.endswith(".json"):
        fname = t[1:] if t.startswith("@") else t
        with open(fname) as fh:
            return LabeledGraph.from_json(json.load(fh))
    head, sep, rest = t.partition(":")
    if not sep or head not in _CONSTRUCTORS:
        raise DomainError(f"cannot parse graph spec {text!r}")
    fn, arity = _CONSTRUCTORS[head]
    try:
        args = [int(x) for x in rest.split(",")]
    except ValueError as exc:
        raise DomainError(f"bad arguments in graph spec {text!r}") from exc
    if len(args) != arity:
        raise DomainError(f"{head} takes {arity} argument(s)")
    return fn(*args)


def corpus(max_d: int = 8) -> list:
    """The built-in test corpus as (name, graph) pairs, deterministically ordered."""
    out = []
    for n in range(1, max_d + 1):
        out.append((f"path:{n}", path(n)))
    for n in range(3, max_d + 1):
        out.append((f"cycle:{n}", cycle(n)))
    for m in range(3, max_d):
        for l in range(1, max_d - m + 1):
            out.append((f"tadpole:{m},{l}", tadpole(m, l)))
    for m in range(3, max_d):
        for l in range(1, max_d - m + 1):
            out.append((f"ltadpole:{m},{l}", line_tadpole(m, l)))
    for a in range(2, max_d - 1):
        for b in range(a, max_d - a + 1):
            out.append((f"cc:{a},{b}", cycle_chord(a, b)))
    for m in range(3, max_d - 1):
        out.append((f"ccm3:{m}", cc_m3_labeled(m)))
    out.append(("claw", claw()))
    out.append(("diamond", diamond()))
    return out
