"""Command-line front end: expansions, positivity checks, identity verification.

Exit codes: 0 = pass/positive, 1 = mathematical negative (witness printed),
2 = resource/capacity limit.  Output is deterministic for fixed input.
"""

from __future__ import annotations

import argparse
import json
import random
import sys

from . import graphs, ncsym, series, symfunc
from .errors import CapacityError, DomainError
from .report import VerificationReport

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_RESOURCE = 2


def _emit(text: str, args) -> None:
    out = getattr(args, "out", None)
    if out:
        with open(out, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)


def _parse_range(spec: str, default: tuple) -> tuple:
    if not spec:
        return default
    if ".." in spec:
        lo, hi = spec.split("..")
        return (int(lo), int(hi))
    v = int(spec)
    return (v, v)


def _parse_order(spec: str, default: tuple) -> tuple:
    if not spec:
        return default
    parts = [int(x) for x in spec.split(",")]
    return (parts[0], parts[1]) if len(parts) > 1 else (parts[0], parts[0])


# ---------------------------------------------------------------------------
# commands

def cmd_expand(args) -> int:
    g = graphs.parse_graph(args.graph)
    if args.nc:
        basis = args.basis or "m"
        if basis not in ncsym.NC_BASES:
            raise DomainError(f"bad basis {basis!r} for noncommuting expansion")
        f = ncsym.y_of(g, basis)
        _emit(json.dumps(f.to_json()) if args.json else str(f), args)
    else:
        basis = args.basis or "e"
        if basis not in symfunc.BASES:
            raise DomainError(f"bad basis {basis!r} for commuting expansion")
        f = symfunc.to_basis(symfunc.csf_via_subsets(g), basis)
        _emit(json.dumps(f.to_json()) if args.json else str(f), args)
    return EXIT_OK


def cmd_classes(args) -> int:
    g = graphs.parse_graph(args.graph)
    expansion = ncsym.class_reduce(ncsym.y_via_stable_partitions(g), args.anchor)
    _emit(json.dumps(expansion.to_json()) if args.json else str(expansion), args)
    return EXIT_OK


def cmd_check(args) -> int:
    g = graphs.parse_graph(args.graph)
    if args.mode == "epos":
        verdict = symfunc.is_e_positive(symfunc.csf_via_subsets(g))
        kind = "e-positive"
    else:
        verdict = ncsym.is_e_paren_positive(g, args.anchor)
        kind = "(e)-positive"
    if verdict.positive:
        _emit(f"{args.graph}: {kind}", args)
        return EXIT_OK
    index, coeff = verdict.witness
    if args.mode == "epos":
        witness = f"({','.join(map(str, index))})"
    else:
        witness = f"(type=({','.join(map(str, index.type))}), marked={index.marked})"
    _emit(f"{args.graph}: not {kind}; witness {witness} coefficient {coeff}", args)
    return EXIT_NEGATIVE


# ---------------------------------------------------------------------------
# verification targets

def _verify_tadpole_rec(args) -> VerificationReport:
    lo, hi = 2, args.max or 8
    rows = []
    for m in range(lo, hi):
        for l in range(0, hi - m + 1):
            value = symfunc.tadpole_via_recurrence(m, l)
            if m == 2:
                brute = symfunc.x_path(l + 2)
            else:
                brute = symfunc.csf_via_subsets(graphs.tadpole(m, l))
            rows.append({"m": m, "l": l, "status": "match" if value == brute else "mismatch"})
    return VerificationReport("tadpole recurrence vs brute force", rows)


def _verify_ltadpole_rec(args) -> VerificationReport:
    hi = args.max or 8
    rows = []
    for m in range(2, hi):
        for l in range(0, hi - m + 1):
            a = symfunc.line_tadpole_via_formula(m, l)
            b = symfunc.line_tadpole_via_tadpole(m, l)
            ok = a == b
            if ok and m >= 3 and l >= 1:
                ok = a == symfunc.csf_via_subsets(graphs.line_tadpole(m, l))
            rows.append({"m": m, "l": l, "status": "match" if ok else "mismatch"})
    return VerificationReport("line-tadpole formulas vs brute force", rows)


def _verify_cc_rec(args) -> VerificationReport:
    hi = args.max or 8
    rows = []
    for a in range(2, hi - 1):
        for b in range(2, hi - a + 1):
            ok = symfunc.cc_via_formula(a, b) == symfunc.csf_via_subsets(graphs.cycle_chord(a, b))
            rows.append({"a": a, "b": b, "status": "match" if ok else "mismatch"})
    for a in range(2, min(hi - 1, 7)):
        ok = symfunc.cc_via_formula(a, 1) == symfunc.x_cycle(a + 1)
        rows.append({"a": a, "b": 1, "status": "match" if ok else "mismatch"})
    return VerificationReport("chorded-cycle formula vs brute force", rows)


def _random_triple_instance(rng: random.Random):
    while True:
        d = rng.randint(3, 7)
        edges = [e for e in graphs.complete(d).edges if rng.random() < 0.35]
        if len(edges) > 9:
            continue
        g = graphs.LabeledGraph(d, edges)
        triples = [
            (u, v, w)
            for u in range(1, d + 1)
            for v in range(u + 1, d + 1)
            for w in range(v + 1, d + 1)
            if not (g.has_edge((u, v)) or g.has_edge((v, w)) or g.has_edge((w, u)))
        ]
        if triples:
            return g, rng.choice(triples)


def _verify_triple_deletion(args) -> VerificationReport:
    count = args.max or 50
    rng = random.Random(20240611)
    rows = []
    for n in range(count):
        g, (u, v, w) = _random_triple_instance(rng)
        first, second = symfunc.verify_triple_deletion(g, u, v, w)
        rows.append(
            {
                "instance": n,
                "d": g.d,
                "edges": len(g.edges),
                "status": "match" if first and second else "mismatch",
            }
        )
    return VerificationReport("triple edge-addition identities", rows)


def _verify_disjoint_union(args) -> VerificationReport:
    hi = args.max or 8
    rng = random.Random(20240612)
    pool = [(name, g) for name, g in graphs.corpus(hi) if 1 <= g.d]
    rows = []
    for _ in range(20):
        (na, ga), (nb, gb) = rng.choice(pool), rng.choice(pool)
        if ga.d + gb.d > hi:
            continue
        lhs = symfunc.csf_via_subsets(graphs.disjoint_union(ga, gb))
        rhs = symfunc.csf_via_subsets(ga) * symfunc.csf_via_subsets(gb)
        rows.append({"g": na, "h": nb, "status": "match" if lhs == rhs else "mismatch"})
    return VerificationReport("disjoint-union factorization", rows)


def _verify_relabel(args) -> VerificationReport:
    hi = min(args.max or 6, 7)
    rng = random.Random(20240613)
    rows = []
    for name, g in graphs.corpus(hi):
        if g.d < 3:
            continue
        perm = list(range(1, g.d))
        rng.shuffle(perm)
        perm.append(g.d)
        ok = ncsym.verify_relabel_congruence(g, perm)
        rows.append({"graph": name, "status": "match" if ok else "mismatch"})
    return VerificationReport("relabeling congruence", rows)


def _verify_induction_classes(args) -> VerificationReport:
    from .partitions import apply_transposition, set_partitions

    hi = args.max or 5
    rows = []
    for d in range(1, hi + 1):
        checked = 0
        good = True
        for pi in set_partitions(d):
            for i in range(1, d + 1):
                lhs = ncsym.class_reduce(
                    ncsym.induce(ncsym.NCSymF(d, "e", {apply_transposition(pi, d, i): 1}))
                )
                rhs = ncsym.induce_e_class(pi, i)
                checked += 1
                if lhs != rhs:
                    good = False
        rows.append({"d": d, "checked": checked, "status": "match" if good else "mismatch"})
    return VerificationReport("class-level induction identity", rows)


def _verify_path_cycle_classes(args) -> VerificationReport:
    hi = args.max or 7
    rows = []
    for d in range(2, hi + 1):
        ok = ncsym.path_classes(d) == ncsym.class_reduce(
            ncsym.y_via_stable_partitions(graphs.path(d))
        )
        if ok and d >= 3:
            ok = ncsym.cycle_classes(d) == ncsym.class_reduce(
                ncsym.y_via_stable_partitions(graphs.cycle(d))
            )
        rows.append({"d": d, "status": "match" if ok else "mismatch"})
    return VerificationReport("path/cycle class recursion", rows)


def _ranged_replay(fn, args, default: tuple) -> VerificationReport:
    lo, hi = _parse_range(args.m, default)
    report = None
    for m in range(lo, hi + 1):
        part = fn(m)
        report = part if report is None else report.merge(part)
    return report


def _verify_gf(fn, args, default: tuple) -> VerificationReport:
    nx, ny = _parse_order(args.order, default)
    return fn(nx, ny)


VERIFY_TARGETS = {
    "tadpole-rec": lambda a: _verify_tadpole_rec(a),
    "ltadpole-rec": lambda a: _verify_ltadpole_rec(a),
    "cc-rec": lambda a: _verify_cc_rec(a),
    "triple-deletion": lambda a: _verify_triple_deletion(a),
    "disjoint-union": lambda a: _verify_disjoint_union(a),
    "relabel": lambda a: _verify_relabel(a),
    "induction-classes": lambda a: _verify_induction_classes(a),
    "path-cycle-classes": lambda a: _verify_path_cycle_classes(a),
    "ltadpole-classes": lambda a: _ranged_replay(ncsym.check_line_tadpole_class_formula, a, (3, 6)),
    "ltadpole-prime-classes": lambda a: _ranged_replay(
        ncsym.check_relabeled_line_tadpole_class_formula, a, (3, 5)
    ),
    "cc3-classes": lambda a: _ranged_replay(ncsym.check_cycle_chord3_class_formula, a, (3, 5)),
    "gf-p": lambda a: series.verify_power_sum_gf(_parse_order(a.order, (8, 8))[0]),
    "gf-path-cycle": lambda a: series.verify_path_cycle_gf(_parse_order(a.order, (8, 8))[0]),
    "gf-tadpole": lambda a: _verify_gf(series.verify_tadpole_gf, a, (5, 5)),
    "gf-ltadpole": lambda a: _verify_gf(series.verify_ltadpole_gf, a, (5, 5)),
    "gf-cc": lambda a: _verify_gf(series.verify_cc_gf, a, (4, 4)),
}


def cmd_verify(args) -> int:
    if args.target == "all":
        targets = [k for k in VERIFY_TARGETS]
    elif args.target in VERIFY_TARGETS:
        targets = [args.target]
    else:
        known = ", ".join(sorted(VERIFY_TARGETS) + ["all"])
        raise DomainError(f"unknown verify target {args.target!r}; known: {known}")
    all_ok = True
    chunks = []
    for t in targets:
        report = VERIFY_TARGETS[t](args)
        all_ok = all_ok and report.ok
        chunks.append(json.dumps(report.to_json()) if args.json else str(report))
    _emit("\n".join(chunks), args)
    return EXIT_OK if all_ok else EXIT_NEGATIVE


def cmd_series(args) -> int:
    n = _parse_order(args.order, (6, 6))[0]
    which = args.family
    if which == "E":
        s = series.E_series(n)
        lines = [f"z^{k}: {s.coeffs[k]}" for k in range(n + 1)]
    elif which == "F":
        s = series.F_series(n)
        lines = [f"z^{k}: {s.coeffs[k]}" for k in range(n + 1)]
    elif which == "paths":
        s = series.div(series.E_series(n), series.F_series(n))
        lines = [f"z^{k}: {s.coeffs[k]}" for k in range(n + 1)]
    elif which == "cycles":
        s = series.div(series.E_double_prime(n), series.F_series(n))
        lines = [f"z^{k}: {s.coeffs[k - 2]}" for k in range(2, n + 1)]
    elif which == "power-sums":
        lines = [
            f"z^{k}: {(-1) ** k * symfunc.to_basis(symfunc.SymF.gen('p', k), 'e')}"
            for k in range(n + 1)
        ]
    else:
        raise DomainError(f"unknown series family {which!r}")
    _emit("\n".join(lines), args)
    return EXIT_OK


def cmd_corpus(args) -> int:
    entries = graphs.corpus()
    if args.json:
        data = [
            {"name": name, "d": g.d, "edges": len(g.edges)} for name, g in entries
        ]
        _emit(json.dumps(data), args)
    else:
        _emit("\n".join(f"{name} d={g.d} |E|={len(g.edges)}" for name, g in entries), args)
    return EXIT_OK


# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="csfkit",
        description="Exact chromatic symmetric functions, in commuting and noncommuting variables.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("expand", help="print the expansion of a graph invariant")
    p.add_argument("graph")
    p.add_argument("--basis", default=None, help="e|p (commuting) or m|e|p with --nc")
    p.add_argument("--nc", action="store_true", help="noncommuting variables")
    p.set_defaults(fn=cmd_expand)

    p = sub.add_parser("classes", help="congruence-class expansion of the noncommuting invariant")
    p.add_argument("graph")
    p.add_argument("--anchor", type=int, default=None)
    p.set_defaults(fn=cmd_classes)

    p = sub.add_parser("check", help="positivity verdicts")
    p.add_argument("graph")
    p.add_argument("--mode", choices=["epos", "eparen"], required=True)
    p.add_argument("--anchor", type=int, default=None)
    p.set_defaults(fn=cmd_check)

    p = sub.add_parser("verify", help="re-check a named identity family")
    p.add_argument("target")
    p.add_argument("--max", type=int, default=None, help="size bound or instance count")
    p.add_argument("--m", default=None, help="range like 3..5 for the class replays")
    p.add_argument("--order", default=None, help="truncation like 8 or 4,4")
    p.set_defaults(fn=cmd_verify)

    p = sub.add_parser("series", help="print truncated coefficient tables")
    p.add_argument("family", choices=["E", "F", "paths", "cycles", "power-sums"])
    p.add_argument("--order", default=None)
    p.set_defaults(fn=cmd_series)

    p = sub.add_parser("corpus", help="list the built-in test corpus")
    p.set_defaults(fn=cmd_corpus)

    for sp in sub.choices.values():
        sp.add_argument("--json", action="store_true")
        sp.add_argument("--out", default=None)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except CapacityError as exc:
        print(f"capacity: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_RESOURCE


if __name__ == "__main__":
    sys.exit(main())
