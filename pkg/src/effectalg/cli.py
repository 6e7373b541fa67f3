"""Command-line interface.

Exit codes: 0 success, 1 check/suite failure or invalid input file,
2 usage error, 3 search budget exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import structure as st
from .catalog import ENTRIES, catalog
from .construct import direct_product, horizontal_sum, interval_algebra
from .core import InvalidAlgebra
from .dot import to_dot
from .efaformat import ParseError, load, serialize
from .families import BudgetExceeded, closure, find_cover
from .verify import FAIL, QUESTIONS, run_suite, search_question, sweep, witness_record


class UsageError(Exception):
    pass


def _load(path):
    try:
        return load(path)
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None


def _ids(E, spec):
    if spec is None:
        return None
    names = [s for s in spec.split(",") if s]
    try:
        return E.ids(names)
    except KeyError as exc:
        raise UsageError(exc.args[0]) from None


def _emit(text, out):
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _print_sets(sets, as_json):
    if as_json:
        print(json.dumps(sets, ensure_ascii=False))
    else:
        for s in sets:
            print(" ".join(s) if isinstance(s, list) else s)


def cmd_check(args):
    try:
        E = _load(args.file)
    except (ParseError, InvalidAlgebra) as exc:
        print(f"{args.file}: invalid", file=sys.stderr)
        violations = getattr(exc, "violations", None)
        if violations:
            for v in violations:
                print(f"  {v.axiom} {list(v.witness)}: {v.message}", file=sys.stderr)
        else:
            print(f"  {exc}", file=sys.stderr)
        return 1
    print(f"{args.file}: valid effect algebra with {len(E)} elements")
    return 0


def cmd_classify(args):
    E = _load(args.file)
    rep = st.report(E, budget=args.budget).to_json(E)
    if args.json:
        print(json.dumps(rep, indent=1, ensure_ascii=False))
    else:
        for k, v in rep["flags"].items():
            print(f"{k}: {str(v).lower()}")
        for k in ("sharp", "central", "k_center"):
            print(f"{k}: {' '.join(rep[k])}")
        for i, b in enumerate(rep["blocks"]):
            print(f"block {i}: {' '.join(b)}")
    return 0


def cmd_sets(args):
    E = _load(args.file)
    if args.command == "blocks":
        res = [[E.names[i] for i in sorted(B)] for B in st.blocks(E, budget=args.budget)]
    else:
        fn = {"sharp": st.sharp_elements, "center": st.central_elements,
              "kcenter": st.compatibility_center}[args.command]
        res = [E.names[i] for i in sorted(fn(E))]
    _print_sets(res, args.json)
    return 0


def cmd_closure(args):
    E = _load(args.file)
    res = [E.names[i] for i in sorted(closure(E, _ids(E, args.set)))]
    _print_sets(res, args.json)
    return 0


def cmd_cover(args):
    E = _load(args.file)
    M = _ids(E, args.set)
    X = _ids(E, args.within) if args.within is not None else E.carrier
    cert = find_cover(E, M, X, budget=args.budget)
    if cert is None:
        print("none")
        return 0
    if args.json:
        print(json.dumps(cert.to_json(E), ensure_ascii=False))
    else:
        print("family: " + " ".join(cert.family.names(E)))
        for x, idx in sorted(cert.assignment.items()):
            print(f"{E.names[x]} <- {' '.join(str(i) for i in idx) or '(empty)'}")
    return 0


def cmd_product(args):
    _emit(serialize(direct_product(_load(args.a), _load(args.b))), args.o)
    return 0


def cmd_hsum(args):
    _emit(serialize(horizontal_sum(_load(args.a), _load(args.b))), args.o)
    return 0


def cmd_interval(args):
    E = _load(args.file)
    (top,) = _ids(E, args.top) or (None,)
    if top is None or top == E.zero:
        raise UsageError("--top must name a nonzero element")
    _emit(serialize(interval_algebra(E, top)), args.o)
    return 0


def cmd_catalog(args):
    if args.name not in ENTRIES:
        raise UsageError(f"unknown catalog entry {args.name!r}; known: {', '.join(sorted(ENTRIES))}")
    try:
        E = catalog(args.name, *args.params)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    label = args.name + "".join(f" {p}" for p in args.params)
    _emit(serialize(E, comments=[f"catalog {label}"]), args.o)
    return 0


def cmd_suite(args):
    E = _load(args.file)
    results = run_suite(E, budget=args.budget)
    if args.json:
        print(json.dumps([{"id": r.id, "status": r.status, "witness": r.witness, "detail": r.detail}
                          for r in results], indent=1, ensure_ascii=False))
    else:
        for r in results:
            extra = f"  {r.detail} {json.dumps(r.witness, ensure_ascii=False)}" if r.status == FAIL else ""
            print(f"{r.status:15} {r.id}{extra}")
    if args.witness_out:
        records = [witness_record(E, r) for r in results if r.status == FAIL]
        with open(args.witness_out, "w", encoding="utf-8") as fh:
            json.dump(records, fh, indent=1, ensure_ascii=False)
    return 1 if any(r.status == FAIL for r in results) else 0


def cmd_sweep(args):
    s = sweep(args.max_n, budget=args.budget)
    print(s.to_json())
    return 0 if s.ok else 1


def cmd_question(args):
    if args.name not in QUESTIONS:
        raise UsageError(f"unknown question {args.name!r}; known: {', '.join(QUESTIONS)}")
    rep = search_question(args.name, args.max_n, budget=args.budget)
    print(rep.to_json())
    return 0


def cmd_export_dot(args):
    _emit(to_dot(_load(args.file)), args.o)
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="effectalg", description="Finite effect algebra toolkit")
    p.add_argument("--budget", type=int, default=None,
                   help="node budget for exponential searches (default: unbounded)")
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, fn, help, file=True, json_flag=False):
        sp = sub.add_parser(name, help=help)
        if file:
            sp.add_argument("file")
        if json_flag:
            sp.add_argument("--json", action="store_true")
        sp.set_defaults(fn=fn)
        return sp

    add("check", cmd_check, "validate the axioms")
    add("classify", cmd_classify, "full classification report", json_flag=True)
    for nm in ("blocks", "sharp", "center", "kcenter"):
        add(nm, cmd_sets, f"print the {nm} set(s)", json_flag=True)
    sp = add("closure", cmd_closure, "closure of a set", json_flag=True)
    sp.add_argument("--set", required=True, help="comma-separated element names")
    sp = add("cover", cmd_cover, "orthogonal cover of a set", json_flag=True)
    sp.add_argument("--set", required=True)
    sp.add_argument("--within", default=None, help="allowed range (default: every element)")
    for nm, fn in (("product", cmd_product), ("hsum", cmd_hsum)):
        sp = add(nm, fn, f"{nm} of two algebras", file=False)
        sp.add_argument("a")
        sp.add_argument("b")
        sp.add_argument("-o", default=None)
    sp = add("interval", cmd_interval, "interval algebra [0, top]")
    sp.add_argument("--top", required=True)
    sp.add_argument("-o", default=None)
    sp = add("catalog", cmd_catalog, "write a named example", file=False)
    sp.add_argument("name")
    sp.add_argument("params", nargs="*", type=int)
    sp.add_argument("-o", default=None)
    sp = add("suite", cmd_suite, "run every theorem check", json_flag=True)
    sp.add_argument("--witness-out", default=None, help="write failure records (JSON) here")
    sp = add("sweep", cmd_sweep, "theorem sweep over the enumerated corpus", file=False)
    sp.add_argument("--max-n", type=int, default=6)
    sp = add("question", cmd_question, "search an open question", file=False)
    sp.add_argument("name")
    sp.add_argument("--max-n", type=int, default=6)
    sp = add("export-dot", cmd_export_dot, "Hasse diagram as DOT")
    sp.add_argument("-o", default=None)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"effectalg: error: {exc}", file=sys.stderr)
        return 2
    except BudgetExceeded as exc:
        print(f"effectalg: {exc}", file=sys.stderr)
        return 3
    except (ParseError, InvalidAlgebra) as exc:
        print(f"effectalg: invalid input: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
