"""Commutative symmetric functions in the e and p bases, all exact.

SymF is a sparse map from integer partitions to rationals.  The monomial
expansion exists only as a ground-truth oracle; e and p are the working
bases, converted through the classical recurrences derived from the
generating-function relation between the two families.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from math import comb
from typing import NamedTuple

from .errors import CapacityError, DomainError
from .graphs import LabeledGraph, cycle, path

BASES = ("e", "p")
EDGE_SUBSET_CAP = 24
MONOMIAL_VAR_CAP = 10


def _canon_partition(parts) -> tuple:
    lam = tuple(sorted((int(x) for x in parts), reverse=True))
    if lam and lam[-1] < 1:
        raise DomainError("partition parts must be positive")
    return lam


def term_order(lam: tuple) -> tuple:
    """Print order: length descending, then reverse-lexicographic."""
    return (-len(lam), tuple(-x for x in lam))


class PositivityVerdict(NamedTuple):
    positive: bool
    witness: tuple | None  # (index, coefficient) of the first offender


class SymF:
    """Sparse symmetric function: basis tag plus {partition: coefficient}."""

    __slots__ = ("basis", "terms")

    def __init__(self, basis: str, terms=()):
        if basis not in BASES:
            raise DomainError(f"unknown basis {basis!r}")
        acc: dict = {}
        items = terms.items() if isinstance(terms, dict) else terms
        for lam, c in items:
            lam = _canon_partition(lam)
            acc[lam] = acc.get(lam, 0) + c
        self.basis = basis
        self.terms = {lam: c for lam, c in acc.items() if c != 0}

    @classmethod
    def zero(cls, basis: str) -> "SymF":
        return cls(basis)

    @classmethod
    def unit(cls, basis: str) -> "SymF":
        return cls(basis, {(): 1})

    @classmethod
    def gen(cls, basis: str, n: int) -> "SymF":
        if n < 0:
            raise DomainError("generator index must be nonnegative")
        return cls.unit(basis) if n == 0 else cls(basis, {(n,): 1})

    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, lam):
        return self.terms.get(_canon_partition(lam), 0)

    def degree(self) -> int:
        return max((sum(lam) for lam in self.terms), default=0)

    def _check_basis(self, other: "SymF") -> None:
        if self.basis != other.basis:
            raise DomainError(f"basis mismatch: {self.basis} vs {other.basis}")

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, SymF)
            and self.basis == other.basis
            and self.terms == other.terms
        )

    def __add__(self, other: "SymF") -> "SymF":
        self._check_basis(other)
        out = dict(self.terms)
        for lam, c in other.terms.items():
            out[lam] = out.get(lam, 0) + c
        return SymF(self.basis, out)

    def __neg__(self) -> "SymF":
        return SymF(self.basis, {lam: -c for lam, c in self.terms.items()})

    def __sub__(self, other: "SymF") -> "SymF":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, SymF):
            self._check_basis(other)
            out: dict = {}
            for lam, c in self.terms.items():
                for mu, k in other.terms.items():
                    key = tuple(sorted(lam + mu, reverse=True))
                    out[key] = out.get(key, 0) + c * k
            return SymF(self.basis, out)
        return SymF(self.basis, {lam: c * other for lam, c in self.terms.items()})

    __rmul__ = __mul__

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        bits = []
        for lam in sorted(self.terms, key=term_order):
            c = self.terms[lam]
            mag = abs(c)
            body = f"{self.basis}[{','.join(map(str, lam))}]"
            if mag != 1:
                body = f"{mag} {body}"
            if not bits:
                bits.append(body if c > 0 else f"-{body}")
            else:
                bits.append(("+ " if c > 0 else "- ") + body)
        return " ".join(bits)

    def __repr__(self) -> str:
        return f"SymF({str(self)!r})"

    def to_json(self) -> dict:
        rows = []
        for lam in sorted(self.terms, key=term_order):
            c = Fraction(self.terms[lam])
            rows.append({"partition": list(lam), "num": c.numerator, "den": c.denominator})
        return {"basis": self.basis, "terms": rows}

    @classmethod
    def from_json(cls, data: dict) -> "SymF":
        terms = {
            tuple(row["partition"]): Fraction(row["num"], row["den"])
            for row in data["terms"]
        }
        return cls(data["basis"], terms)


def scale(f: SymF, r) -> SymF:
    return f * r


# ---------------------------------------------------------------------------
# the subset expansion

def csf_via_subsets(graph: LabeledGraph, edge_cap: int = EDGE_SUBSET_CAP) -> SymF:
    """Signed sum over edge subsets of p indexed by component orders."""
    edges = graph.edge_list
    m = len(edges)
    if m > edge_cap:
        raise CapacityError(f"{m} edges exceeds the subset cap {edge_cap}")
    d = graph.d
    acc: dict = {}
    for mask in range(1 << m):
        parent = list(range(d + 1))
        for t in range(m):
            if mask >> t & 1:
                i, j = edges[t]
                while parent[i] != i:
                    parent[i] = parent[parent[i]]
                    i = parent[i]
                while parent[j] != j:
                    parent[j] = parent[parent[j]]
                    j = parent[j]
                if i != j:
                    parent[j] = i
        sizes: dict = {}
        for v in range(1, d + 1):
            r = v
            while parent[r] != r:
                r = parent[r]
            sizes[r] = sizes.get(r, 0) + 1
        lam = tuple(sorted(sizes.values(), reverse=True))
        sign = -1 if mask.bit_count() & 1 else 1
        acc[lam] = acc.get(lam, 0) + sign
    return SymF("p", {lam: c for lam, c in acc.items() if c})


# ---------------------------------------------------------------------------
# basis conversion

@lru_cache(maxsize=None)
def _p_in_e(n: int) -> SymF:
    # p_n = (-1)^(n-1) n e_n + sum_{j=1}^{n-1} (-1)^(j-1) e_j p_{n-j}
    if n == 0:
        return SymF.unit("e")
    acc = SymF("e", {(n,): (-1) ** (n - 1) * n})
    for j in range(1, n):
        acc = acc + (-1) ** (j - 1) * (SymF.gen("e", j) * _p_in_e(n - j))
    return acc


@lru_cache(maxsize=None)
def _e_in_p(n: int) -> SymF:
    # n e_n = sum_{j=1}^{n} (-1)^(j-1) p_j e_{n-j}
    if n == 0:
        return SymF.unit("p")
    acc = SymF.zero("p")
    for j in range(1, n + 1):
        acc = acc + (-1) ** (j - 1) * (SymF.gen("p", j) * _e_in_p(n - j))
    return Fraction(1, n) * acc


@lru_cache(maxsize=None)
def _lambda_converted(basis: str, lam: tuple) -> SymF:
    table = _p_in_e if basis == "p" else _e_in_p
    out = SymF.unit("e" if basis == "p" else "p")
    for part in lam:
        out = out * table(part)
    return out


def p_to_e(f: SymF) -> SymF:
    if f.basis != "p":
        raise DomainError("p_to_e expects a p-basis input")
    acc: dict = {}
    for lam, c in f.terms.items():
        for mu, k in _lambda_converted("p", lam).terms.items():
            acc[mu] = acc.get(mu, 0) + c * k
    return SymF("e", acc)


def e_to_p(f: SymF) -> SymF:
    if f.basis != "e":
        raise DomainError("e_to_p expects an e-basis input")
    acc: dict = {}
    for lam, c in f.terms.items():
        for mu, k in _lambda_converted("e", lam).terms.items():
            acc[mu] = acc.get(mu, 0) + c * k
    return SymF("p", acc)


def to_basis(f: SymF, basis: str) -> SymF:
    if basis not in BASES:
        raise DomainError(f"unknown basis {basis!r}")
    if f.basis == basis:
        return f
    return p_to_e(f) if f.basis == "p" else e_to_p(f)


def is_e_positive(f: SymF) -> PositivityVerdict:
    g = to_basis(f, "e")
    for lam in sorted(g.terms, key=term_order):
        if g.terms[lam] < 0:
            return PositivityVerdict(False, (lam, g.terms[lam]))
    return PositivityVerdict(True, None)


def specialize_ones(f: SymF, k: int) -> Fraction:
    """Set x_1 = ... = x_k = 1 and the rest to 0."""
    if k < 0:
        raise DomainError("k must be nonnegative")
    total = Fraction(0)
    for lam, c in f.terms.items():
        val = 1
        for part in lam:
            val *= comb(k, part) if f.basis == "e" else k
        total += c * val
    return total


# ---------------------------------------------------------------------------
# the monomial oracle

@lru_cache(maxsize=None)
def _gen_monomials(basis: str, n: int, v: int) -> dict:
    out: dict = {}
    if n == 0:
        return {(0,) * v: 1}
    if basis == "e":
        for subset in combinations(range(v), n):
            expo = [0] * v
            for t in subset:
                expo[t] = 1
            out[tuple(expo)] = 1
    else:
        for t in range(v):
            expo = [0] * v
            expo[t] = n
            out[tuple(expo)] = 1
    return out


def _poly_mul(a: dict, b: dict) -> dict:
    out: dict = {}
    for ea, ca in a.items():
        for eb, cb in b.items():
            key = tuple(x + y for x, y in zip(ea, eb))
            out[key] = out.get(key, 0) + ca * cb
    return out


@lru_cache(maxsize=None)
def _lambda_monomials(basis: str, lam: tuple, v: int) -> dict:
    acc = {(0,) * v: 1}
    for part in lam:
        acc = _poly_mul(acc, _gen_monomials(basis, part, v))
    return acc


def to_monomial_vector(f: SymF, v: int) -> dict:
    """Expand into monomials in v variables, keyed by exponent multiset.

    The value at a key is the coefficient of each single monomial in that
    symmetric orbit (they all agree).
    """
    if v < f.degree():
        raise DomainError("need at least as many variables as the degree")
    if v > MONOMIAL_VAR_CAP:
        raise CapacityError(f"monomial expansion capped at {MONOMIAL_VAR_CAP} variables")
    totals: dict = {}
    for lam, c in f.terms.items():
        for expo, k in _lambda_monomials(f.basis, lam, v).items():
            totals[expo] = totals.get(expo, 0) + c * k
    orbits: dict = {}
    for expo, c in totals.items():
        if c == 0:
            continue
        key = tuple(sorted((x for x in expo if x), reverse=True))
        if key in orbits:
            assert orbits[key] == c, "monomial expansion is not symmetric"
        else:
            orbits[key] = c
    return orbits


# ---------------------------------------------------------------------------
# identities on concrete graphs

def verify_triple_deletion(graph: LabeledGraph, u: int, v: int, w: int) -> tuple:
    """Check both add-three-edges identities on a pairwise nonadjacent triple."""
    if len({u, v, w}) != 3:
        raise DomainError("u, v, w must be distinct")
    for a, b in ((u, v), (v, w), (w, u)):
        if graph.has_edge((a, b)):
            raise DomainError("u, v, w must be pairwise nonadjacent")
    e1, e2, e3 = (u, v), (v, w), (w, u)

    def with_edges(*extra):
        es = set(graph.edges)
        for a, b in extra:
            es.add((a, b) if a < b else (b, a))
        return csf_via_subsets(LabeledGraph(graph.d, es))

    x1, x2, x3 = with_edges(e1), with_edges(e2), with_edges(e3)
    x12, x23 = with_edges(e1, e2), with_edges(e2, e3)
    x123 = with_edges(e1, e2, e3)
    return (x12 == x1 + x23 - x3, x123 == x12 + x23 - x2)


# ---------------------------------------------------------------------------
# closed-form evaluators for the cycle-with-tail families

@lru_cache(maxsize=None)
def x_path(n: int) -> SymF:
    """X of the n-vertex path; empty product at n=0, zero for n < 0."""
    if n < 0:
        return SymF.zero("p")
    return csf_via_subsets(path(n))


@lru_cache(maxsize=None)
def x_cycle(n: int) -> SymF:
    """X of the n-cycle; n=2 uses the doubled-edge value p_11 - p_2 (= 2 e_2)."""
    if n < 2:
        raise DomainError("cycle evaluator starts at n = 2")
    if n == 2:
        return SymF("p", {(1, 1): 1, (2,): -1})
    return csf_via_subsets(cycle(n))


def tadpole_via_recurrence(m: int, l: int) -> SymF:
    """X of the m-cycle with an l-tail, from path and cycle values."""
    if m < 2 or l < 0:
        raise DomainError("need m >= 2 and l >= 0")
    acc = (m - 1) * x_path(m + l)
    for i in range(2, m):
        acc = acc - x_path(m + l - i) * x_cycle(i)
    return acc


def line_tadpole_via_formula(m: int, l: int) -> SymF:
    if m < 2 or l < 0:
        raise DomainError("need m >= 2 and l >= 0")
    acc = x_path(l) * x_cycle(m)
    for k in range(1, l + 1):
        acc = acc + 2 * (x_path(l - k) * x_cycle(m + k))
    return acc - (2 * l) * x_path(m + l)


def line_tadpole_via_tadpole(m: int, l: int) -> SymF:
    if m < 2 or l < 0:
        raise DomainError("need m >= 2 and l >= 0")
    return 2 * tadpole_via_recurrence(m, l) - x_cycle(m) * x_path(l)


def cc_via_formula(a: int, b: int) -> SymF:
    """X of the chorded cycle splitting into arc lengths a and b (five terms)."""
    if a < 1 or b < 1:
        raise DomainError("need a, b >= 1")
    acc = x_cycle(a + b)
    for i in range(1, a + 1):
        for j in range(1, b + 1):
            coeff = (-1) ** (i + j + 1) * i * j
            acc = acc + coeff * (SymF.gen("p", i + j) * x_path(a - i) * x_path(b - j))
    acc = acc + SymF("p", {(a + b,): (-1) ** (a + b + 1)})
    for i in range(1, a + 1):
        acc = acc + (-1) ** (b + i) * i * (SymF.gen("p", b + i) * x_path(a - i))
    for j in range(1, b + 1):
        acc = acc + (-1) ** (a + j) * j * (SymF.gen("p", a + j) * x_path(b - j))
    return acc
