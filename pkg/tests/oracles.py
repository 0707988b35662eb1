"""Independent oracles used by the tests.

These deliberately avoid the library's own conversion and expansion paths:
the Bell triangle instead of the binomial recurrence, recursive interval
sums instead of the product formula, direct coloring counts instead of
delete/contract, and stable-partition counting for the monomial expansion.
"""

from itertools import product
from math import factorial

from csfkit.graphs import LabeledGraph
from csfkit.partitions import SetPartition, is_refinement, set_partitions, type_of


def bell_triangle(n: int) -> int:
    """Bell number via the triangle (Aitken) recurrence."""
    row = [1]
    for _ in range(n):
        nxt = [row[-1]]
        for v in row:
            nxt.append(nxt[-1] + v)
        row = nxt
    return row[0]


def mobius_by_recursion(a: SetPartition, b: SetPartition, universe=None):
    """Mobius on [a, b] from the defining interval recursion."""
    assert is_refinement(a, b)
    if universe is None:
        universe = set_partitions(a.d)
    if a == b:
        return 1
    total = 0
    for t in universe:
        if t != b and is_refinement(a, t) and is_refinement(t, b):
            total += mobius_by_recursion(a, t, universe)
    return -total


def count_colorings_direct(g: LabeledGraph, k: int) -> int:
    """Proper colorings by explicit enumeration (small graphs only)."""
    edges = g.edge_list
    count = 0
    for word in product(range(k), repeat=g.d):
        if all(word[i - 1] != word[j - 1] for i, j in edges):
            count += 1
    return count


def stable_partitions(g: LabeledGraph) -> list:
    return [
        sigma
        for sigma in set_partitions(g.d)
        if all(not sigma.same_block(i, j) for i, j in g.edge_list)
    ]


def coloring_monomial_expansion(g: LabeledGraph, v: int) -> dict:
    """Monomial expansion of the coloring sum with v color values.

    Proper colorings with kernel sigma biject with injections from sigma's
    blocks into the colors, so the coefficient of a monomial with exponent
    multiset lam counts stable partitions of type lam times the number of
    size-preserving block-to-color bijections.
    """
    if g.d == 0:
        return {(): 1}
    by_type: dict = {}
    for sigma in stable_partitions(g):
        lam = type_of(sigma)
        by_type[lam] = by_type.get(lam, 0) + 1
    out = {}
    for lam, n_stable in by_type.items():
        if len(lam) > v:
            continue
        mult: dict = {}
        for part in lam:
            mult[part] = mult.get(part, 0) + 1
        ways = 1
        for m in mult.values():
            ways *= factorial(m)
        out[lam] = n_stable * ways
    return out
