"""Chromatic symmetric functions in noncommuting variables.

NCSymF is a sparse map from set partitions of {1..d} to rationals in one of
the m/e/p bases.  The m basis is the workhorse: stability, letter-doubling
and the delete/contract recursion are all natural there.  The e basis exists
for positivity, which is read per congruence class rather than per exact
coefficient (exact e-coefficients of a graph invariant can be negative while
every class sum is nonnegative).

Basis changes route through p.  Between m and p the refinement order gives
triangular sums with Mobius weights; between p and e the one-block tables
glue multiplicatively across blocks.  The e -> m composite agrees with the
defining relation (e indexed by pi expands over all partitions meeting pi in
the all-singletons partition), which the tests check directly.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import product
from math import factorial
from typing import Iterable

from .errors import CapacityError, DomainError
from .graphs import (
    LabeledGraph,
    _contract_into,
    cc_m3_labeled,
    complete,
    component_partition,
    cycle,
    delete_edge,
    disjoint_union,
    line_tadpole,
    relabel,
    tadpole,
)
from .partitions import (
    CongruenceKey,
    SetPartition,
    add_block,
    block_size_containing,
    coarsenings,
    coarsest,
    congruence_key,
    ground_set_cap,
    insert_element,
    insert_into_block_of,
    meet_is_finest,
    mobius,
    mobius_from_finest,
    refinements,
    set_partitions,
    type_of,
)
from .report import VerificationReport
from .symfunc import EDGE_SUBSET_CAP, PositivityVerdict, SymF

NC_BASES = ("m", "e", "p")

#: default degree caps: full e-basis work is the expensive part
E_WORK_CAP = 8
MP_WORK_CAP = 9


class NCSymF:
    """Sparse degree-d function: basis tag plus {SetPartition: coefficient}."""

    __slots__ = ("degree", "basis", "terms")

    def __init__(self, degree: int, basis: str, terms=()):
        if basis not in NC_BASES:
            raise DomainError(f"unknown basis {basis!r}")
        if degree < 1:
            raise DomainError("degree must be positive")
        items = terms.items() if isinstance(terms, dict) else terms
        acc: dict = {}
        for pi, c in items:
            if not isinstance(pi, SetPartition) or pi.d != degree:
                raise DomainError("index partitions must live on 1..degree")
            acc[pi] = acc.get(pi, 0) + c
        self.degree = degree
        self.basis = basis
        self.terms = {pi: c for pi, c in acc.items() if c != 0}

    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, pi: SetPartition):
        return self.terms.get(pi, 0)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, NCSymF)
            and self.degree == other.degree
            and self.basis == other.basis
            and self.terms == other.terms
        )

    def _check_compatible(self, other: "NCSymF") -> None:
        if self.degree != other.degree or self.basis != other.basis:
            raise DomainError("degree/basis mismatch")

    def __add__(self, other: "NCSymF") -> "NCSymF":
        self._check_compatible(other)
        out = dict(self.terms)
        for pi, c in other.terms.items():
            out[pi] = out.get(pi, 0) + c
        return NCSymF(self.degree, self.basis, out)

    def __neg__(self) -> "NCSymF":
        return NCSymF(self.degree, self.basis, {pi: -c for pi, c in self.terms.items()})

    def __sub__(self, other: "NCSymF") -> "NCSymF":
        return self + (-other)

    def __mul__(self, other):
        return NCSymF(self.degree, self.basis, {pi: c * other for pi, c in self.terms.items()})

    __rmul__ = __mul__

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        bits = []
        for pi in sorted(self.terms, key=lambda q: (q.num_blocks, q.blocks)):
            c = self.terms[pi]
            mag = abs(c)
            body = f"{self.basis}[{pi}]"
            if mag != 1:
                body = f"{mag} {body}"
            if not bits:
                bits.append(body if c > 0 else f"-{body}")
            else:
                bits.append(("+ " if c > 0 else "- ") + body)
        return " ".join(bits)

    def __repr__(self) -> str:
        return f"NCSymF(degree={self.degree}, {str(self)!r})"

    def to_json(self) -> dict:
        rows = []
        for pi in sorted(self.terms, key=lambda q: (q.num_blocks, q.blocks)):
            c = Fraction(self.terms[pi])
            rows.append({"partition": str(pi), "num": c.numerator, "den": c.denominator})
        return {"degree": self.degree, "basis": self.basis, "terms": rows}

    @classmethod
    def from_json(cls, data: dict) -> "NCSymF":
        terms = {
            SetPartition.from_string(row["partition"]): Fraction(row["num"], row["den"])
            for row in data["terms"]
        }
        return cls(data["degree"], data["basis"], terms)


# ---------------------------------------------------------------------------
# basis changes (dict-level transforms, wrapped by convert)

def _m_to_p(vec: dict) -> dict:
    out: dict = {}
    for pi, c in vec.items():
        for sigma in coarsenings(pi):
            out[sigma] = out.get(sigma, 0) + c * mobius(pi, sigma)
    return out


def _p_to_m(vec: dict) -> dict:
    out: dict = {}
    for pi, c in vec.items():
        for sigma in coarsenings(pi):
            out[sigma] = out.get(sigma, 0) + c
    return out


def _e_to_p(vec: dict) -> dict:
    out: dict = {}
    for pi, c in vec.items():
        for tau in refinements(pi):
            out[tau] = out.get(tau, 0) + c * mobius_from_finest(tau)
    return out


@lru_cache(maxsize=None)
def _p_block_in_e(n: int) -> dict:
    """e-expansion of the one-block power sum on {1..n} (read-only)."""
    top = coarsest(n)
    if n == 1:
        return {top: Fraction(1)}
    acc: dict = {top: Fraction(1)}
    for tau in set_partitions(n):
        if tau.num_blocks == 1:
            continue
        w = mobius_from_finest(tau)
        for key, val in _p_vector_in_e(tau).items():
            acc[key] = acc.get(key, 0) - w * val
    mu_top = mobius_from_finest(top)
    return {k: Fraction(v, mu_top) for k, v in acc.items() if v != 0}


@lru_cache(maxsize=None)
def _p_vector_in_e(pi: SetPartition) -> dict:
    """e-expansion of p indexed by pi, glued from the one-block tables."""
    per_block = []
    for block in pi.blocks:
        table = _p_block_in_e(len(block))
        per_block.append(
            [
                (tuple(tuple(block[x - 1] for x in qb) for qb in q.blocks), coeff)
                for q, coeff in table.items()
            ]
        )
    out: dict = {}
    for combo in product(*per_block):
        blocks = [b for grp, _ in combo for b in grp]
        coeff = 1
        for _, c in combo:
            coeff *= c
        key = SetPartition(pi.d, blocks)
        out[key] = out.get(key, 0) + coeff
    return out


def _p_to_e(vec: dict) -> dict:
    out: dict = {}
    for pi, c in vec.items():
        for key, val in _p_vector_in_e(pi).items():
            out[key] = out.get(key, 0) + c * val
    return out


_ROUTES = {
    ("m", "p"): (_m_to_p,),
    ("p", "m"): (_p_to_m,),
    ("p", "e"): (_p_to_e,),
    ("e", "p"): (_e_to_p,),
    ("m", "e"): (_m_to_p, _p_to_e),
    ("e", "m"): (_e_to_p, _p_to_m),
}


def convert(f: NCSymF, basis: str) -> NCSymF:
    """Exact change of basis among m, e, p."""
    if basis not in NC_BASES:
        raise DomainError(f"unknown basis {basis!r}")
    if f.basis == basis:
        return f
    vec = f.terms
    for step in _ROUTES[(f.basis, basis)]:
        vec = step(vec)
    return NCSymF(f.degree, basis, vec)


def e_to_m_by_definition(f: NCSymF) -> NCSymF:
    """Defining expansion: e at pi counts words whose kernel meets pi trivially.

    Quadratic in the number of partitions; kept as the independent check for
    the routed conversion.
    """
    if f.basis != "e":
        raise DomainError("expected an e-basis input")
    out: dict = {}
    for pi, c in f.terms.items():
        for sigma in set_partitions(f.degree):
            if meet_is_finest(sigma, pi):
                out[sigma] = out.get(sigma, 0) + c
    return NCSymF(f.degree, "m", out)


# ---------------------------------------------------------------------------
# the three routes to Y

def _require_degree(d: int, cap_default: int) -> None:
    cap = ground_set_cap(cap_default)
    if d > cap:
        raise CapacityError(f"degree {d} exceeds cap {cap}")
    if d < 1:
        raise DomainError("graph must have at least one vertex")


def y_via_stable_partitions(g: LabeledGraph) -> NCSymF:
    """Coefficient 1 on each partition whose blocks are independent sets."""
    _require_degree(g.d, MP_WORK_CAP)
    edges = g.edge_list
    terms = {}
    for sigma in set_partitions(g.d):
        if all(not sigma.same_block(i, j) for i, j in edges):
            terms[sigma] = 1
    return NCSymF(g.d, "m", terms)


def y_via_edge_subsets(g: LabeledGraph) -> NCSymF:
    """Signed sum over edge subsets of p indexed by component partitions."""
    _require_degree(g.d, MP_WORK_CAP)
    edges = g.edge_list
    if len(edges) > EDGE_SUBSET_CAP:
        raise CapacityError(f"{len(edges)} edges exceeds the subset cap")
    terms: dict = {}
    for mask in range(1 << len(edges)):
        chosen = [edges[t] for t in range(len(edges)) if mask >> t & 1]
        part = component_partition(g.d, chosen)
        sign = -1 if mask.bit_count() & 1 else 1
        terms[part] = terms.get(part, 0) + sign
    return NCSymF(g.d, "p", terms)


@lru_cache(maxsize=None)
def _edgeless_m_vector(d: int) -> dict:
    return {pi: 1 for pi in set_partitions(d)}


_Y_CACHE: dict = {}


def _y_m_vector(g: LabeledGraph) -> dict:
    """Exact Y in the m basis by delete/contract, memoized on the labeled graph.

    The top edge {d-1, d} is preferred; for any other edge {i, j} the
    contraction merges j into i and the subtracted term re-inserts a copy of
    letter i at position j, which is the word-level content of the identity.
    """
    cached = _Y_CACHE.get(g)
    if cached is not None:
        return cached
    if not g.edges:
        vec = _edgeless_m_vector(g.d)
    else:
        top = (g.d - 1, g.d)
        i, j = top if top in g.edges else max(g.edges, key=lambda e: (e[1], e[0]))
        sub = _y_m_vector(_contract_into(g, i, j))
        vec = dict(_y_m_vector(delete_edge(g, (i, j))))
        for pi, c in sub.items():
            key = insert_element(pi, i, j)
            left = vec.get(key, 0) - c
            if left:
                vec[key] = left
            else:
                vec.pop(key, None)
    _Y_CACHE[g] = vec
    return vec


def deletion_contraction(g: LabeledGraph, e=None) -> NCSymF:
    """Y computed recursively by deleting and contracting the top edge."""
    _require_degree(g.d, MP_WORK_CAP)
    if e is not None:
        e = tuple(sorted(e))
        if e not in g.edges:
            raise DomainError(f"edge {e} not in the graph")
        if e != (g.d - 1, g.d):
            raise DomainError("recursion edge must be {d-1, d}; relabel first")
    return NCSymF(g.d, "m", dict(_y_m_vector(g)))


def y_of(g: LabeledGraph, basis: str = "m") -> NCSymF:
    """Convenience: Y by the stable-partition route, in the requested basis."""
    return convert(y_via_stable_partitions(g), basis)


# ---------------------------------------------------------------------------
# induction (letter doubling), commutative image, class machinery

def induce(f: NCSymF) -> NCSymF:
    """Double the last letter of every word: degree d -> d+1, in the m basis."""
    g = convert(f, "m")
    d = g.degree
    terms: dict = {}
    for pi, c in g.terms.items():
        key = insert_into_block_of(pi, d)
        terms[key] = terms.get(key, 0) + c
    return NCSymF(d + 1, "m", terms)


def commutative_image(f: NCSymF) -> SymF:
    """Let the variables commute: e at pi becomes (type!)-weighted e of the type."""
    g = convert(f, "e")
    acc: dict = {}
    for pi, c in g.terms.items():
        lam = type_of(pi)
        weight = 1
        for part in lam:
            weight *= factorial(part)
        acc[lam] = acc.get(lam, 0) + c * weight
    return SymF("e", acc)


def class_order(key: CongruenceKey) -> tuple:
    return (-len(key.type), tuple(-x for x in key.type), key.marked)


class ClassExpansion:
    """Coefficients summed over congruence classes, anchored at one element."""

    __slots__ = ("degree", "anchor", "terms")

    def __init__(self, degree: int, anchor: int, terms=()):
        if not 1 <= anchor <= degree:
            raise DomainError("anchor must lie in 1..degree")
        items = terms.items() if isinstance(terms, dict) else terms
        acc: dict = {}
        for key, c in items:
            key = CongruenceKey(tuple(key[0]), key[1])
            if sum(key.type) != degree or key.marked not in key.type:
                raise DomainError(f"bad class key {key} for degree {degree}")
            acc[key] = acc.get(key, 0) + c
        self.degree = degree
        self.anchor = anchor
        self.terms = {key: c for key, c in acc.items() if c != 0}

    def get(self, key: CongruenceKey):
        return self.terms.get(key, 0)

    def items(self) -> list:
        return [(key, self.terms[key]) for key in sorted(self.terms, key=class_order)]

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, ClassExpansion)
            and self.degree == other.degree
            and self.anchor == other.anchor
            and self.terms == other.terms
        )

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        lines = []
        for key, c in self.items():
            lines.append(f"type=[{','.join(map(str, key.type))}] marked={key.marked}: {c}")
        return "\n".join(lines)

    def __repr__(self) -> str:
        return f"ClassExpansion(degree={self.degree}, anchor={self.anchor}, {self.terms!r})"

    def to_json(self) -> dict:
        rows = []
        for key, c in self.items():
            c = Fraction(c)
            rows.append(
                {
                    "type": list(key.type),
                    "marked": key.marked,
                    "num": c.numerator,
                    "den": c.denominator,
                }
            )
        return {"degree": self.degree, "anchor": self.anchor, "classes": rows}

    @classmethod
    def from_json(cls, data: dict) -> "ClassExpansion":
        terms = {
            CongruenceKey(tuple(row["type"]), row["marked"]): Fraction(row["num"], row["den"])
            for row in data["classes"]
        }
        degree = data.get("degree") or sum(sum(r["type"]) for r in data["classes"][:1])
        return cls(degree, data["anchor"], terms)


def class_reduce(f: NCSymF, anchor: int | None = None) -> ClassExpansion:
    """Sum e-coefficients over the congruence-class fibers at the anchor."""
    g = convert(f, "e")
    i = g.degree if anchor is None else anchor
    terms: dict = {}
    for pi, c in g.terms.items():
        key = congruence_key(pi, i)
        terms[key] = terms.get(key, 0) + c
    return ClassExpansion(g.degree, i, terms)


def induce_e_class(pi: SetPartition, i: int | None = None) -> ClassExpansion:
    """Two-term class expansion of a doubled e-generator, tracked through i."""
    d = pi.d
    if i is None:
        i = d
    b = block_size_containing(pi, i)
    w = Fraction(1, b)
    plus = congruence_key(add_block(pi, [d + 1]), d + 1)
    minus = congruence_key(insert_into_block_of(pi, i), d + 1)
    return ClassExpansion(d + 1, d + 1, {plus: w, minus: -w})


def is_e_paren_positive(g: LabeledGraph, anchor: int | None = None) -> PositivityVerdict:
    """Class-level nonnegativity of Y at the anchor (default: the top label)."""
    _require_degree(g.d, E_WORK_CAP)
    classes = class_reduce(y_via_stable_partitions(g), anchor)
    for key in sorted(classes.terms, key=class_order):
        if classes.terms[key] < 0:
            return PositivityVerdict(False, (key, classes.terms[key]))
    return PositivityVerdict(True, None)


def verify_relabel_congruence(g: LabeledGraph, perm: Iterable[int]) -> bool:
    """Relabelings fixing the top label leave the class expansion unchanged."""
    perm = tuple(perm)
    if len(perm) != g.d or perm[g.d - 1] != g.d:
        raise DomainError("permutation must fix the top label d")
    base = class_reduce(y_via_stable_partitions(g))
    moved = class_reduce(y_via_stable_partitions(relabel(g, perm)))
    return base == moved


# ---------------------------------------------------------------------------
# class-level recursions

def _add(acc: dict, key: CongruenceKey, c) -> None:
    acc[key] = acc.get(key, 0) + c


def _replace_part(lam: tuple, old: int, new: int) -> tuple:
    out = list(lam)
    out.remove(old)
    out.append(new)
    return tuple(sorted(out, reverse=True))


def _with_part(lam: tuple, part: int) -> tuple:
    return tuple(sorted(lam + (part,), reverse=True))


def path_cycle_recursion_step(classes: ClassExpansion) -> tuple:
    """Classes of the next path and cycle from the classes of a path.

    Growing the path either starts a fresh block (weight (b-1)/b) or extends
    the marked block (weight 1/b); closing up the cycle always extends it.
    """
    d = classes.degree
    pterms: dict = {}
    cterms: dict = {}
    for key, c in classes.terms.items():
        lam, b = key.type, key.marked
        grown = CongruenceKey(_replace_part(lam, b, b + 1), b + 1)
        fresh = CongruenceKey(_with_part(lam, 1), 1)
        w = Fraction(c, b)
        _add(pterms, fresh, w * (b - 1))
        _add(pterms, grown, w)
        _add(cterms, grown, c)
    return (
        ClassExpansion(d + 1, d + 1, pterms),
        ClassExpansion(d + 1, d + 1, cterms),
    )


def path_classes(d: int) -> ClassExpansion:
    if d < 1:
        raise DomainError("d must be positive")
    cls = ClassExpansion(1, 1, {CongruenceKey((1,), 1): Fraction(1)})
    for _ in range(d - 1):
        cls, _ = path_cycle_recursion_step(cls)
    return cls


def cycle_classes(d: int) -> ClassExpansion:
    if d < 3:
        raise DomainError("cycles start at d = 3")
    _, cyc = path_cycle_recursion_step(path_classes(d - 1))
    return cyc


def disjoint_union_clique_classes(classes: ClassExpansion, m: int) -> ClassExpansion:
    """Attach a free m-clique: every class gains a part m; the anchor stays put."""
    if m < 1:
        raise DomainError("m must be positive")
    terms = {
        CongruenceKey(_with_part(key.type, m), key.marked): c
        for key, c in classes.terms.items()
    }
    return ClassExpansion(classes.degree + m, classes.anchor, terms)


# ---------------------------------------------------------------------------
# replays: displayed class expansions vs direct computation

def _compare_row(params: dict, formula: ClassExpansion, direct: ClassExpansion) -> dict:
    row = dict(params)
    row["formula"] = formula.to_json()
    row["direct"] = direct.to_json()
    if formula == direct:
        row["status"] = "match"
    else:
        row["status"] = "mismatch"
        keys = sorted(set(formula.terms) | set(direct.terms), key=class_order)
        for key in keys:
            if formula.get(key) != direct.get(key):
                row["first_mismatch"] = {
                    "type": list(key.type),
                    "marked": key.marked,
                    "formula": str(formula.get(key)),
                    "direct": str(direct.get(key)),
                }
                break
    return row


def check_line_tadpole_class_formula(m: int) -> VerificationReport:
    """One-tail line tadpole: two-term class expansion from path classes.

    Each path class (type lam, marked b, coeff c) contributes
    c/(b+1) * [ (b-1) on (lam: b->b+1, fresh singleton) + 2 on (lam: b->b+2) ].
    """
    if m < 3:
        raise DomainError("need m >= 3")
    terms: dict = {}
    for key, c in path_classes(m - 1).terms.items():
        lam, b = key.type, key.marked
        w = Fraction(c, b + 1)
        _add(terms, CongruenceKey(_with_part(_replace_part(lam, b, b + 1), 1), 1), w * (b - 1))
        _add(terms, CongruenceKey(_replace_part(lam, b, b + 2), b + 2), 2 * w)
    formula = ClassExpansion(m + 1, m + 1, terms)
    direct = class_reduce(y_via_stable_partitions(line_tadpole(m, 1)))
    row = _compare_row({"m": m}, formula, direct)
    row["all_nonnegative"] = all(c >= 0 for c in direct.terms.values())
    return VerificationReport("line-tadpole class expansion", [row])


def _relabeled_line_tadpole(m: int) -> LabeledGraph:
    """Cycle v_1..v_{m+1} v_1 with the chord {m-1, m+1}."""
    return LabeledGraph(m + 1, set(cycle(m + 1).edges) | {(m - 1, m + 1)})


def check_relabeled_line_tadpole_class_formula(m: int) -> VerificationReport:
    """Three-term class expansion for the re-labeled one-tail line tadpole.

    The third term rebuilds the marked block around the two top labels and
    splits off the old anchor as a singleton; its key differs from the second
    term's only in the marked size.
    """
    if m < 3:
        raise DomainError("need m >= 3")
    terms: dict = {}
    for key, c in path_classes(m - 1).terms.items():
        lam, b = key.type, key.marked
        _add(terms, CongruenceKey(_replace_part(lam, b, b + 2), b + 2), Fraction(2 * c, b + 1))
        bumped = _with_part(_replace_part(lam, b, b + 1), 1)
        _add(terms, CongruenceKey(bumped, 1), -Fraction(c * (b - 1), b * (b + 1)))
        _add(terms, CongruenceKey(bumped, b + 1), Fraction(c * (b - 1), b))
    formula = ClassExpansion(m + 1, m + 1, terms)
    direct = class_reduce(y_via_stable_partitions(_relabeled_line_tadpole(m)))
    return VerificationReport(
        "relabeled line-tadpole class expansion", [_compare_row({"m": m}, formula, direct)]
    )


def check_cycle_chord3_class_formula(m: int) -> VerificationReport:
    """Chorded (m+2)-cycle with arc split (m-1, 3): final four-term class expansion,
    plus the intermediate four-graph identity checked term by term."""
    if m < 3:
        raise DomainError("need m >= 3")
    graph = cc_m3_labeled(m)
    anchor = m + 2

    terms: dict = {}
    for key, c in path_classes(m - 1).terms.items():
        lam, b = key.type, key.marked
        pref = Fraction(c, b + 1)
        _add(terms, CongruenceKey(_with_part(_replace_part(lam, b, b + 2), 1), 1),
             pref * Fraction(b - 1, b + 2))
        _add(terms, CongruenceKey(_with_part(_replace_part(lam, b, b + 1), 2), 2),
             pref * Fraction(b * b - b + 1, b))
        _add(terms, CongruenceKey(_replace_part(lam, b, b + 3), b + 3),
             pref * Fraction(3, b + 2))
        _add(terms, CongruenceKey(_with_part(_replace_part(lam, b, b + 2), 1), b + 2),
             pref * Fraction(b - 1, b))
    formula = ClassExpansion(m + 2, anchor, terms)
    direct = class_reduce(y_via_stable_partitions(graph), anchor)
    row1 = _compare_row({"m": m, "check": "class formula"}, formula, direct)
    row1["all_nonnegative"] = all(c >= 0 for c in direct.terms.values())

    # four-graph identity: tadpole+free vertex, twice-doubled cycle,
    # doubled (cycle+free vertex), doubled relabeled line tadpole
    y_tp_k1 = y_via_stable_partitions(disjoint_union(tadpole(m, 1), complete(1)))
    y_cm_ind2 = induce(induce(y_via_stable_partitions(cycle(m))))
    y_cmk1_ind = induce(y_via_stable_partitions(disjoint_union(cycle(m), complete(1))))
    y_lt_ind = induce(y_via_stable_partitions(_relabeled_line_tadpole(m)))
    combo = y_tp_k1 + y_cm_ind2 - y_cmk1_ind - y_lt_ind
    row2 = _compare_row(
        {"m": m, "check": "four-graph identity"}, class_reduce(combo, anchor), direct
    )
    return VerificationReport("chorded-cycle class expansion", [row1, row2])
