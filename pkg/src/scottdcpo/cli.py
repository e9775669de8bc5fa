"""Command-line interface.

Reports go to standard output as JSON; ``--verbose`` summaries go to
standard error.  Exit codes: 0 success, 1 verification failure, 2 usage or
input error.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import harness
from .elements import classify, hypothesis_check, quasicontinuity_report
from .enumeration import MAX_ENUMERATION, enumerate_posets
from .errors import ScottError, SizeLimit
from .io import InputError, parse_document, poset_to_json, space_to_json, to_dot
from .isomorphism import canonical_form
from .lattice import as_abstract, c_compact_elements, scott_closed_lattice
from .poset import FinitePoset, property_mM_report, to_mask
from .sobrification import hull_kernel_sobrification, irr_structure, set_label, sobriety_report
from .symbolic import johnstone_truncate, order_axioms_sample
from .topology import FiniteSpace, classify_space, is_td, scott_space, specialization_order


class UsageError(Exception):
    pass


def _dump(obj) -> str:
    return json.dumps(obj, indent=2)


def _load(path: str):
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise UsageError(f"{path}: {exc.strerror}") from None
    try:
        return parse_document(text)
    except InputError as exc:
        raise UsageError(f"{path}:{exc.line}:{exc.column}: {exc}") from None


def _as_poset_and_space(kind: str, obj):
    if kind == "poset":
        return obj, scott_space(obj)
    return specialization_order(obj), obj


def _guard(fn, limited: list, name: str):
    try:
        return fn()
    except SizeLimit:
        limited.append(name)
        return None


def analyze(P: FinitePoset, X: FiniteSpace, canonical: bool = False) -> dict:
    limited: list = []
    irr = irr_structure(X)
    sob = sobriety_report(X, irr)
    cls = _guard(lambda: classify_space(X), limited, "d_space")
    mM = _guard(lambda: property_mM_report(P), limited, "property_M")
    hyp = _guard(lambda: hypothesis_check(P), limited, "hypotheses")
    qc = quasicontinuity_report(P).quasicontinuous
    F = scott_closed_lattice(P)
    L = as_abstract(F)
    kappa = sorted(c_compact_elements(L))
    flags = {
        "sober": sob.is_sober,
        "bounded_sober": sob.is_bounded_sober,
        "T_D": is_td(X),
        "d_space": cls.is_d_space if cls else None,
        "quasicontinuous": qc,
        "dl_sup": hyp.dl_sup if hyp else None,
        "cor16": hyp.cor16_hypotheses if hyp else None,
        "thm15": hyp.thm15_hypotheses if hyp else None,
        "thm22": hyp.thm22_hypotheses if hyp else None,
        "property_M": mM.has_M if mM else None,
    }
    if hyp:
        ec = classify(P, hyp)
        classification = {
            "labels": [str(v) for v in ec.labels],
            "down_linear": list(ec.down_linear),
            "quasicontinuous_element": list(ec.quasicontinuous_element),
            "quasicontinuous": ec.quasicontinuous,
            "dl_sup": ec.dl_sup,
            "thm15_hypotheses": ec.thm15_hypotheses,
            "cor16_hypotheses": ec.cor16_hypotheses,
            "thm22_hypotheses": ec.thm22_hypotheses,
            "elements": ec.elements(),
        }
    else:
        classification = None
    out = {
        "counts": {
            "elements": P.n,
            "scott_closed_sets": len(F),
            "irreducible_closed_sets": len(irr.irr_sets),
        },
        "flags": flags,
        "classification": classification,
        "property_m": {"has_m": mM.has_m, "has_M": mM.has_M} if mM else None,
        "irreducible_closed_sets": [set_label(X, A) for A in irr.irr_sets],
        "non_point_closures": [set_label(X, to_mask(w)) for w in sob.witnesses],
        "c_compact": [set_label(X, F.members[k]) for k in kappa],
        "size_limited": sorted(limited),
    }
    if canonical:
        out["canonical_form"] = canonical_form(P).hex()
    return out


def cmd_analyze(args) -> int:
    kind, obj = _load(args.file)
    P, X = _as_poset_and_space(kind, obj)
    report = analyze(P, X, canonical=args.canonical)
    print(_dump(report))
    if args.verbose:
        f = report["flags"]
        print(
            f"{P.n} elements, {report['counts']['scott_closed_sets']} Scott-closed sets; "
            + ", ".join(f"{k}={v}" for k, v in f.items()),
            file=sys.stderr,
        )
    return 0


def cmd_sobrify(args) -> int:
    kind, obj = _load(args.file)
    _, X = _as_poset_and_space(kind, obj)
    irr = irr_structure(X)
    Y = hull_kernel_sobrification(X, irr)
    doc = space_to_json(Y)
    doc["eta"] = {
        str(X.labels[x]): sorted(str(X.labels[i]) for i in range(X.m) if (irr.irr_sets[irr.unit[x]] >> i) & 1)
        for x in range(X.m)
    }
    print(_dump(doc))
    return 0


def cmd_enumerate(args) -> int:
    if args.n < 1 or args.n > MAX_ENUMERATION:
        raise UsageError(f"--n must be between 1 and {MAX_ENUMERATION}")
    if args.jobs < 1:
        raise UsageError("--jobs must be positive")
    if args.verify is None:
        posets = list(enumerate_posets(args.n))
        print(_dump({"n": args.n, "count": len(posets), "posets": [poset_to_json(P) for P in posets]}))
        return 0
    result = harness.verify(args.verify, args.n, jobs=args.jobs, allow_large=args.large)
    reports = result if isinstance(result, list) else [result]

    def render(timing: bool) -> str:
        if len(reports) == 1:
            return _dump(reports[0].to_dict(timing))
        return _dump({"reports": [r.to_dict(timing) for r in reports]})

    if args.json:
        with open(args.json, "w", encoding="utf-8") as fh:
            fh.write(render(True) + "\n")
    # stdout stays byte-identical across runs and --jobs values
    print(render(False))
    for r in reports:
        print(
            f"{r.suite} n<={r.n}: {r.status} ({r.checked} checked, {len(r.failures)} failures, {r.elapsed_ms} ms)",
            file=sys.stderr,
        )
    if any(r.status == "size_limit" for r in reports):
        return 2
    return 0 if all(r.passed for r in reports) else 1


def cmd_truncate(args) -> int:
    if args.m < 1 or args.n < 1:
        raise UsageError("--m and --n must be positive")
    P = johnstone_truncate(args.m, args.n)
    with open(args.output, "w", encoding="utf-8") as fh:
        fh.write(_dump(poset_to_json(P)) + "\n")
    return 0


def cmd_sample(args) -> int:
    if args.trials < 1:
        raise UsageError("--trials must be at least 1")
    rep = order_axioms_sample(args.oracle, args.seed, args.trials)
    print(_dump(rep.to_dict()))
    return 0 if rep.ok else 1


def cmd_export(args) -> int:
    if not args.dot:
        raise UsageError("export needs --dot")
    kind, obj = _load(args.file)
    P, X = _as_poset_and_space(kind, obj)
    if args.target == "poset":
        target = P
    elif args.target == "irr":
        target = irr_structure(X).poset
    else:
        F = scott_closed_lattice(P)
        L = as_abstract(F)
        target = FinitePoset([set_label(X, s) for s in F.members], L.up, check=False)
    sys.stdout.write(to_dot(target))
    return 0


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(2)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="scottdcpo", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="verb", required=True, parser_class=_Parser)

    a = sub.add_parser("analyze", help="classify a poset or finite space")
    a.add_argument("file")
    a.add_argument("--canonical", action="store_true", help="include the canonical form as hex")
    a.add_argument("--verbose", action="store_true")
    a.set_defaults(func=cmd_analyze)

    e = sub.add_parser("enumerate", help="list posets or run verification suites")
    e.add_argument("--n", type=int, required=True)
    e.add_argument("--verify", choices=[*harness.SUITES, "all"])
    e.add_argument("--jobs", type=int, default=1)
    e.add_argument("--json", metavar="FILE")
    e.add_argument("--large", action="store_true", help=f"allow suites above n={harness.DEFAULT_MAX_N}")
    e.set_defaults(func=cmd_enumerate)

    s = sub.add_parser("sobrify", help="hull-kernel sobrification as a space document")
    s.add_argument("file")
    s.set_defaults(func=cmd_sobrify)

    t = sub.add_parser("truncate", help="finite truncation of a symbolic dcpo")
    t.add_argument("oracle", choices=["johnstone"])
    t.add_argument("--m", type=int, required=True)
    t.add_argument("--n", type=int, required=True)
    t.add_argument("-o", "--output", required=True)
    t.set_defaults(func=cmd_truncate)

    m = sub.add_parser("sample", help="randomised order-axiom check of a symbolic dcpo")
    m.add_argument("oracle", choices=["johnstone", "kou"])
    m.add_argument("--trials", type=int, required=True)
    m.add_argument("--seed", type=int, required=True)
    m.set_defaults(func=cmd_sample)

    x = sub.add_parser("export", help="Hasse diagram in DOT")
    x.add_argument("file")
    x.add_argument("--target", choices=["poset", "irr", "lattice"], default="poset")
    x.add_argument("--dot", action="store_true")
    x.set_defaults(func=cmd_export)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ScottError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
