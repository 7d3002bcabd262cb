"""Command-line interface.

Exit codes: 0 success, 1 property or precondition failure, 2 parse/IO error.
"""
from __future__ import annotations

import argparse
import sys
import time
from pathlib import Path

from .errors import FGQError, NotFGError
from .formats import ParseError, format_form, format_module, format_table, parse_module, parse_table
from .genmod import PointedQuasigroup, rho, sigma
from .identities import VARIABLES, IdentityName, fg_witness, identity_witness, isotope_assoc_witness
from .isotopes import is_group
from .linear import canonical_strong_form, enumerate_forms, extract_form, form_at_neutral
from .qcore import CayleyTable, is_simple, quotient, validate_table
from .replay import ReplayConfig, run_battery
from .search import SearchSpec, census, search_stack, filter_stack, threads_from_env
from .structure import classify_simple, mq, mq_congruence

EXIT_OK, EXIT_FAIL, EXIT_PARSE = 0, 1, 2


class _ParseFailure(Exception):
    pass


def _read(path: str) -> str:
    try:
        return Path(path).read_text()
    except OSError as exc:
        print(f"error: cannot read {path}: {exc.strerror}", file=sys.stderr)
        raise _ParseFailure from None


def _load_table(path: str) -> tuple[CayleyTable, int | None]:
    text = _read(path)
    try:
        return parse_table(text)
    except ParseError as exc:
        print(f"error: {path}: {exc}", file=sys.stderr)
        raise _ParseFailure from None


def _fmt_witness(names, tup) -> str:
    return " ".join(f"{k}={v}" for k, v in zip(names, tup))


def _require_quasigroup(t: CayleyTable):
    if not validate_table(t):
        raise FGQError("table is not a Latin square")


# property name -> (label, evaluator returning (bool, witness text or None))
def _prop(name: str, t: CayleyTable):
    key = name.lower()
    latin = validate_table(t)
    if key == "latin":
        return latin, None
    if not latin:
        return False, "not a quasigroup"
    identities = {"fl": IdentityName.FL, "fr": IdentityName.FR, "a": IdentityName.A, "b": IdentityName.B,
                  "medial": IdentityName.MEDIAL, "fasfg": IdentityName.FASFG}
    if key in identities:
        which = identities[key]
        w = identity_witness(t, which)
        return w is None, None if w is None else _fmt_witness(VARIABLES[which], w)
    if key == "f":
        for which in (IdentityName.FL, IdentityName.FR):
            w = identity_witness(t, which)
            if w is not None:
                return False, f"{which.value}: " + _fmt_witness(VARIABLES[which], w)
        return True, None
    if key == "fg":
        w = fg_witness(t)
        return w is None, None if w is None else f"{w[0].value}: " + _fmt_witness(VARIABLES[w[0]], w[1])
    if key == "group":
        return is_group(t), None
    if key == "isogroup":
        w = isotope_assoc_witness(t, 0, 0)
        return w is None, None if w is None else _fmt_witness("xyz", w)
    if key == "simple":
        return t.n >= 2 and is_simple(t), None
    raise KeyError(name)


PROPERTIES = ("latin", "fl", "fr", "a", "b", "medial", "fasfg", "f", "fg", "group", "isogroup", "simple")


def cmd_check(args) -> int:
    t, _ = _load_table(args.path)
    ok = True
    for name in args.properties:
        if name.lower() not in PROPERTIES:
            print(f"error: unknown property {name!r}; choose from {', '.join(PROPERTIES)}", file=sys.stderr)
            return EXIT_PARSE
        holds, witness = _prop(name, t)
        ok &= holds
        line = f"PROP {name} = {'true' if holds else 'false'}"
        if witness:
            line += f" witness {witness}"
        print(line)
    return EXIT_OK if ok else EXIT_FAIL


def _not_fg(t: CayleyTable, exc: Exception | None = None) -> int:
    msg = "error: table is not an FG-quasigroup"
    w = isotope_assoc_witness(t, 0, 0)
    if w is not None:
        msg += f"; isotope associativity fails at {_fmt_witness('xyz', w)}"
    fw = fg_witness(t)
    if fw is not None:
        msg += f"; identity {fw[0].value} fails at {_fmt_witness(VARIABLES[fw[0]], fw[1])}"
    elif exc is not None:
        msg += f"; {exc}"
    print(msg, file=sys.stderr)
    return EXIT_FAIL


def cmd_derive_form(args) -> int:
    t, _ = _load_table(args.path)
    _require_quasigroup(t)
    try:
        if args.strong:
            form = canonical_strong_form(t)
        elif args.neutral is not None:
            form = form_at_neutral(t, args.neutral)
        else:
            form = extract_form(t, args.a, args.b)
    except NotFGError as exc:
        return _not_fg(t, exc)
    sys.stdout.write(format_form(form))
    return EXIT_OK


def cmd_forms(args) -> int:
    t, _ = _load_table(args.path)
    _require_quasigroup(t)
    try:
        forms = enumerate_forms(t)
    except NotFGError as exc:
        return _not_fg(t, exc)
    if args.strong_only:
        forms = [f for f in forms if f.is_strong()]
    blocks = [f"# neutral {f.neutral}{' strong' if f.is_strong() else ''}\n" + format_form(f) for f in forms]
    sys.stdout.write("\n".join(blocks))
    print(f"count={len(forms)}")
    return EXIT_OK


def cmd_mq(args) -> int:
    t, _ = _load_table(args.path)
    _require_quasigroup(t)
    print("mq = " + " ".join(map(str, sorted(mq(t)))))
    return EXIT_OK


def cmd_quotient(args) -> int:
    t, _ = _load_table(args.path)
    _require_quasigroup(t)
    try:
        p = mq_congruence(t)
    except NotFGError as exc:
        return _not_fg(t, exc)
    print("# blocks " + " | ".join(" ".join(map(str, b)) for b in p.blocks))
    sys.stdout.write(format_table(quotient(t, p)))
    return EXIT_OK


def cmd_classify_simple(args) -> int:
    t, _ = _load_table(args.path)
    _require_quasigroup(t)
    try:
        res = classify_simple(t)
    except NotFGError as exc:
        return _not_fg(t, exc)
    line = f"class = {res.kind.value}"
    if res.witness is not None:
        line += " witness " + _fmt_witness("xyab", res.witness)
    print(line)
    return EXIT_OK


def cmd_modulize(args) -> int:
    t, file_point = _load_table(args.path)
    _require_quasigroup(t)
    point = args.point if args.point is not None else (file_point or 0)
    if not 0 <= point < t.n:
        print(f"error: point {point} outside [0, {t.n})", file=sys.stderr)
        return EXIT_FAIL
    try:
        pm = rho(PointedQuasigroup(t, point))
    except NotFGError as exc:
        return _not_fg(t, exc)
    sys.stdout.write(format_module(pm))
    return EXIT_OK


def cmd_demodulize(args) -> int:
    text = _read(args.path)
    try:
        pm = parse_module(text)
    except ParseError as exc:
        print(f"error: {args.path}: {exc}", file=sys.stderr)
        return EXIT_PARSE
    pq = sigma(pm)
    sys.stdout.write(format_table(pq.table, pq.point))
    return EXIT_OK


def cmd_search(args) -> int:
    spec = SearchSpec(order=args.order, mode=args.mode, count=args.count, seed=args.seed,
                      filters=tuple(args.filter or ("latin",)))
    workers = args.threads or threads_from_env()
    hits = filter_stack(search_stack(spec, workers=workers), spec.filters)
    if args.out:
        blocks = [format_table(CayleyTable(t)) for t in hits]
        try:
            Path(args.out).write_text("\n".join(blocks))
        except OSError as exc:
            print(f"error: cannot write {args.out}: {exc.strerror}", file=sys.stderr)
            return EXIT_PARSE
    if args.census:
        for combo, k in census(spec, workers=workers).items():
            print(f"census {'&'.join(combo)} = {k}")
    print(f"count={len(hits)}")
    return EXIT_OK


def cmd_replay_paper(args) -> int:
    if args.max_order > 5:
        print("error: --max-order is capped at 5", file=sys.stderr)
        return EXIT_FAIL
    cfg = ReplayConfig(max_order=args.max_order, sample=args.sample, seed=args.seed,
                       linear_draws=args.linear, homomorphism_maps=args.maps)
    t0 = time.perf_counter()
    corpus, results = run_battery(cfg)
    sizes = " ".join(f"n={n}:{len(s)}" for n, s in corpus.stacks.items())
    print(f"corpus {sizes} linear:{len(corpus.linear)}")
    for r in results:
        print(r.line())
    print(f"elapsed {time.perf_counter() - t0:.1f}s")
    return EXIT_OK if all(r.passed for r in results) else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="fgq", description="FG-quasigroup toolkit")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="evaluate properties of a table file")
    p.add_argument("path")
    p.add_argument("properties", nargs="+", metavar="PROP", help=", ".join(PROPERTIES))
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("derive-form", help="extract an arithmetic form")
    p.add_argument("path")
    p.add_argument("--a", type=int, default=0)
    p.add_argument("--b", type=int, default=0)
    grp = p.add_mutually_exclusive_group()
    grp.add_argument("--neutral", type=int)
    grp.add_argument("--strong", action="store_true", help="use a = b = alpha(beta(0))")
    p.set_defaults(func=cmd_derive_form)

    p = sub.add_parser("forms", help="list every arithmetic form")
    p.add_argument("path")
    p.add_argument("--strong-only", action="store_true")
    p.set_defaults(func=cmd_forms)

    for name, func, text in (("mq", cmd_mq, "print M(Q)"),
                             ("quotient", cmd_quotient, "print Q/M(Q)"),
                             ("classify-simple", cmd_classify_simple, "classify a simple FG-quasigroup")):
        p = sub.add_parser(name, help=text)
        p.add_argument("path")
        p.set_defaults(func=func)

    p = sub.add_parser("modulize", help="pointed FG-quasigroup -> module file")
    p.add_argument("path")
    p.add_argument("--point", type=int)
    p.set_defaults(func=cmd_modulize)

    p = sub.add_parser("demodulize", help="module file -> pointed table file")
    p.add_argument("path")
    p.set_defaults(func=cmd_demodulize)

    p = sub.add_parser("search", help="enumerate or sample Latin squares")
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--mode", choices=("exhaustive", "reduced", "random"), default="exhaustive")
    p.add_argument("--filter", action="append", help="predicate; repeat for a conjunction")
    p.add_argument("--count", type=int, default=0, help="sample size in random mode")
    p.add_argument("--seed", type=int)
    p.add_argument("--out")
    p.add_argument("--threads", type=int)
    p.add_argument("--census", action="store_true", help="also print counts for every filter combination")
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("replay-paper", help="run the verification battery")
    p.add_argument("--max-order", type=int, default=4)
    p.add_argument("--sample", type=int, default=0, help="order-5 sample size (0 = exhaustive)")
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--linear", type=int, default=40, help="random linear FG-quasigroups to add")
    p.add_argument("--maps", type=int, default=300, help="random maps for the homomorphism check")
    p.set_defaults(func=cmd_replay_paper)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except _ParseFailure:
        return EXIT_PARSE
    except FGQError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
