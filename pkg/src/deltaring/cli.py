"""Command-line interface.

Exit codes: 0 for success / a true verdict, 1 for a false verdict or a
failed check, 2 for usage, parse, or build errors.  Reports go to stdout,
diagnostics to stderr.  The order guard and thread count come from
DELTA_RING_MAX_ORDER / DELTA_RING_THREADS; flags win over the environment.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import core, dsl, harness, subsets
from .errors import RingError
from .predicates import CLASS_CONDITIONS, CLASS_REGISTRY, check_class


def _env_int(name: str) -> int | None:
    raw = os.environ.get(name)
    if raw is None or raw == "":
        return None
    try:
        return int(raw)
    except ValueError:
        raise RingError(f"{name} must be an integer, got {raw!r}")


def _order_guard(args) -> int | None:
    flag = getattr(args, "max_order", None)
    return flag if flag is not None else _env_int("DELTA_RING_MAX_ORDER")


def _threads(args) -> int:
    flag = getattr(args, "threads", None)
    if flag is not None:
        return flag
    return _env_int("DELTA_RING_THREADS") or 1


def _emit(obj) -> None:
    print(json.dumps(obj, sort_keys=True, indent=2))


def _info_payload(ring) -> dict:
    set_fns = {
        "units": subsets.units,
        "idempotents": subsets.idempotents,
        "nilpotents": subsets.nilpotents,
        "tripotents": subsets.tripotent_elements,
        "jacobson-radical": subsets.jacobson_radical,
        "delta-set": subsets.delta_set,
        "prime-radical": subsets.prime_radical,
        "quasinilpotents": subsets.quasinilpotents,
    }
    sets = {}
    for name, fn in set_fns.items():
        es = fn(ring)
        sets[name] = {"indices": es.indices, "displays": es.displays()}
    classes = {name: check_class(ring, name).verdict for name in CLASS_REGISTRY}
    return {"subject": ring.label, "order": ring.order, "zero": ring.zero,
            "one": ring.one, "sets": sets, "classes": classes}


def cmd_info(args) -> int:
    ring = dsl.build_str(args.expr, order_guard=_order_guard(args))
    if args.dump:
        print(core.ring_to_json(ring))
        return 0
    payload = _info_payload(ring)
    if args.json:
        _emit(payload)
        return 0
    print(f"ring {ring.label}  (order {ring.order}, zero={ring.zero}, one={ring.one})")
    for name, data in payload["sets"].items():
        shown = ", ".join(f"{i}:{d}" for i, d in zip(data["indices"], data["displays"]))
        print(f"  {name} ({len(data['indices'])}): {{{shown}}}")
    print("classes:")
    for name in payload["classes"]:
        report = check_class(ring, name)
        line = f"  {name}: {str(report.verdict).lower()}"
        if not report.verdict and report.witness:
            parts = ", ".join(f"{w.role}={w.display}" for w in report.witness)
            line += f"  [{parts}]"
        print(line)
    return 0


def cmd_check(args) -> int:
    ring = dsl.build_str(args.expr, order_guard=_order_guard(args))
    report = check_class(ring, args.klass)
    if args.json:
        _emit(report.to_json())
    else:
        print(report)
    return 0 if report.verdict else 1


def cmd_verify(args) -> int:
    guard = _order_guard(args)
    if guard is not None:
        rings = [dsl.build(e, order_guard=guard) for _, e in dsl.catalog()
                 if _expr_fits(e, guard)]
    else:
        rings = None
    if args.suite == "all":
        results = harness.run_all(rings, threads=_threads(args),
                                  include_timings=args.timings)
    else:
        results = [harness.run_check(args.suite, rings,
                                     include_timings=args.timings)]
    if args.json:
        print(harness.results_to_json(results))
    else:
        print(harness.summary(results))
        for result in results:
            for ce in result.counterexamples:
                for w in ce["witness"]:
                    print(f"  {result.check_id} witness on {ce['ring']}: "
                          f"{w['role']} = {w['display']} (index {w['element-index']})")
    return 0 if all(r.verdict for r in results) else 1


def _expr_fits(expr, guard: int) -> bool:
    try:
        return dsl.build(expr, order_guard=guard).order <= guard
    except RingError:
        return False


def cmd_search(args) -> int:
    include = _split(args.include)
    exclude = _split(args.exclude)
    matches = harness.search_classes(include, exclude, max_order=args.max_order)
    if args.json:
        _emit({"include": include, "exclude": exclude,
               "max_order": args.max_order, "matches": matches})
    else:
        print(f"rings in {include} and outside {exclude}"
              + (f" with order <= {args.max_order}" if args.max_order else "") + ":")
        for label in matches:
            print(f"  {label}")
        if not matches:
            print("  (none)")
    return 0


def _split(values: list[str]) -> list[str]:
    out: list[str] = []
    for v in values:
        out.extend(part.strip() for part in v.split(",") if part.strip())
    return out


def cmd_classes(args) -> int:
    payload = {name: {"category": CLASS_REGISTRY[name][0],
                      "condition": CLASS_CONDITIONS[name]}
               for name in CLASS_REGISTRY}
    if args.json:
        _emit(payload)
    else:
        for name, data in payload.items():
            print(f"{name:22s} [{data['category']}]  {data['condition']}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="deltaring",
        description="inspect finite rings, decide ring classes, run the theorem suite")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("info", help="element sets and class verdicts of a ring expression")
    p.add_argument("expr")
    p.add_argument("--json", action="store_true")
    p.add_argument("--dump", action="store_true", help="emit the ring dump format")
    p.add_argument("--max-order", type=int, default=None)
    p.set_defaults(fn=cmd_info)

    p = sub.add_parser("check", help="single class check; exit 0 iff the verdict is true")
    p.add_argument("klass", metavar="class")
    p.add_argument("expr")
    p.add_argument("--json", action="store_true")
    p.add_argument("--max-order", type=int, default=None)
    p.set_defaults(fn=cmd_check)

    p = sub.add_parser("verify", help="run the theorem suite (or one check id)")
    p.add_argument("suite", nargs="?", default="all", help='"all" or a check id')
    p.add_argument("--json", action="store_true")
    p.add_argument("--timings", action="store_true",
                   help="include wall-clock runtimes (off by default so reports are byte-stable)")
    p.add_argument("--max-order", type=int, default=None)
    p.add_argument("--threads", type=int, default=None)
    p.set_defaults(fn=cmd_verify)

    p = sub.add_parser("search", help="catalog rings inside/outside the given classes")
    p.add_argument("--include", action="append", default=[])
    p.add_argument("--exclude", action="append", default=[])
    p.add_argument("--max-order", type=int, default=None)
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=cmd_search)

    p = sub.add_parser("classes", help="list every ring class with its defining condition")
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=cmd_classes)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    try:
        return args.fn(args)
    except RingError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
