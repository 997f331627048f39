"""Command-line interface.

Exit codes:
  0  success
  1  a check failed (not a belief function, oracle mismatch, demo mismatch)
  2  usage or parse error
  3  conditioning undefined for the given event
  4  frame too large for the requested operation
"""

from __future__ import annotations

import argparse
import sys

from .conditioning import ConditionalReport, condition, fh_condition
from .condmass import certify_conditional_belief
from .credal import PartitionScenario, conditional_envelopes, envelopes, extreme_points, partition_belief
from .demos import DEMOS, run_demo
from .documents import Document, dumps, loads, parse_event
from .errors import ConditioningUndefined, DocumentError, FrameTooLargeError
from .frame import Subset, canonical_order
from .generators import random_mass
from .setfunctions import BeliefFunction, MassFunction, belief_from_mass, check_belief_axioms

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_PARSE = 2
EXIT_UNDEFINED = 3
EXIT_TOO_LARGE = 4


def _read(path: str) -> Document:
    if path == "-":
        text = sys.stdin.read()
    else:
        try:
            with open(path, encoding="utf-8") as fh:
                text = fh.read()
        except OSError as exc:
            raise DocumentError(f"cannot read {path}: {exc}") from None
    return loads(text)


def _belief(doc: Document) -> BeliefFunction:
    payload = doc.payload
    if isinstance(payload, BeliefFunction):
        return payload
    if isinstance(payload, MassFunction):
        return belief_from_mass(payload)
    if isinstance(payload, PartitionScenario):
        return partition_belief(payload)
    if doc.kind == "belief":
        raise DocumentError("the belief table is not a belief function (run `check` for the witness)")
    raise DocumentError(f"expected a mass, belief or partition document, got kind {doc.kind!r}")


def _names(doc: Document, s: Subset) -> str:
    return ",".join(name for name, ev in doc.events.items() if ev == s)


def _print_table(doc: Document, report: ConditionalReport, out):
    bel = report.belief
    pl = bel.plausibilities()
    out.write(f"rule {report.rule.value}, event {report.event}\n")
    out.write(f"{'set':<24} {'belief':>10} {'plausibility':>13}  name\n")
    for k in canonical_order(bel.frame.size):
        s = Subset(bel.frame, k)
        line = f"{str(s):<24} {str(bel.values[k]):>10} {str(pl[k]):>13}  {_names(doc, s)}"
        out.write(line.rstrip() + "\n")


def cmd_condition(args, out) -> int:
    doc = _read(args.file)
    bel = _belief(doc)
    event = parse_event(args.event, bel.frame, doc.events)
    report = condition(bel, event, args.rule)
    if args.table:
        _print_table(doc, report, out)
    else:
        out.write(dumps(Document("report", report, doc.events)))
    return EXIT_OK


def cmd_check(args, out) -> int:
    doc = _read(args.file)
    f = doc.payload
    if isinstance(f, MassFunction):
        f = belief_from_mass(f)
    if doc.kind not in ("mass", "belief"):
        raise DocumentError(f"check expects a mass or belief document, got kind {doc.kind!r}")
    report = check_belief_axioms(f, "mobius")
    out.write("Moebius inverse:\n")
    for k in canonical_order(f.frame.size):
        if report.mobius is not None and report.mobius[k] != 0:
            out.write(f"  m({Subset(f.frame, k)}) = {report.mobius[k]}\n")
    if report.mobius is None:
        out.write("  (not computed)\n")
    if report.ok:
        singletons = all(bin(k).count("1") == 1 for k, v in enumerate(report.mobius) if v)
        out.write("verdict: belief function" + (" (probability: mass on singletons only)" if singletons else "") + "\n")
        return EXIT_OK
    witness = ", ".join(str(s) for s in report.witness)
    out.write(f"verdict: NOT a belief function; {report.violated} fails at {witness}: {report.message}\n")
    return EXIT_CHECK_FAILED


def cmd_oracle(args, out) -> int:
    doc = _read(args.file)
    bel = _belief(doc)
    event = parse_event(args.event, bel.frame, doc.events)
    if bel[event] <= 0:
        raise ConditioningUndefined(f"Bel({event}) = 0")
    cs = extreme_points(bel)
    closed = fh_condition(bel, event).belief
    closed_pl = closed.plausibilities()
    lo, hi = conditional_envelopes(cs, event)
    ulo, uhi = envelopes(cs)
    if args.set:
        rows = [parse_event(args.set, bel.frame, doc.events).bits]
    else:
        rows = canonical_order(bel.frame.size)
    out.write(f"event {event}; {len(cs)} extreme points\n")
    out.write(
        f"{'set':<20} {'Bel':>8} {'min Pr':>8} {'Pl':>8} {'max Pr':>8}"
        f" {'Bel(.|B)':>9} {'min':>9} {'Pl(.|B)':>9} {'max':>9}  flag\n"
    )
    mismatches = 0
    pl = bel.plausibilities()
    for k in rows:
        vals = (bel.values[k], ulo[k], pl[k], uhi[k], closed.values[k], lo[k], closed_pl[k], hi[k])
        ok = vals[0] == vals[1] and vals[2] == vals[3] and vals[4] == vals[5] and vals[6] == vals[7]
        mismatches += not ok
        cells = " ".join(f"{str(v):>8}" for v in vals[:4]) + " " + " ".join(f"{str(v):>9}" for v in vals[4:])
        out.write(f"{str(Subset(bel.frame, k)):<20} {cells}  {'EXACT-MATCH' if ok else 'MISMATCH'}\n")
    out.write(f"{len(rows) - mismatches}/{len(rows)} rows match exactly\n")
    return EXIT_OK if mismatches == 0 else EXIT_CHECK_FAILED


def cmd_certify(args, out) -> int:
    doc = _read(args.file)
    bel = _belief(doc)
    event = parse_event(args.event, bel.frame, doc.events)
    report = certify_conditional_belief(bel, event)
    out.write(dumps(Document("report", report, doc.events)))
    return EXIT_OK if report.verified else EXIT_CHECK_FAILED


def cmd_demo(args, out) -> int:
    text, ok = run_demo(args.name)
    out.write(text)
    return EXIT_OK if ok else EXIT_CHECK_FAILED


def cmd_convert(args, out) -> int:
    doc = _read(args.file)
    bel = _belief(doc)
    payload = bel.mass if args.kind == "mass" else bel
    out.write(dumps(Document(args.kind, payload, doc.events)))
    return EXIT_OK


def cmd_random(args, out) -> int:
    mass = random_mass(args.seed, args.size, args.focal)
    payload = mass if args.kind == "mass" else belief_from_mass(mass)
    out.write(dumps(Document(args.kind, payload)))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="beliefcond",
        description="Exact conditioning of belief functions, with a brute-force credal-set oracle.",
        epilog=__doc__.split("\n", 2)[2],
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("condition", help="condition a belief function on an event")
    p.add_argument("--rule", choices=("fh", "ds"), default="fh",
                   help="fh: lower-envelope rule; ds: Dempster's rule")
    p.add_argument("--event", required=True, help="event expression, e.g. 'says-b' or '~{a} & (b|c)'")
    p.add_argument("--table", action="store_true", help="print a table instead of a JSON report")
    p.add_argument("file", help="input document, '-' for stdin")
    p.set_defaults(func=cmd_condition)

    p = sub.add_parser("check", help="check the belief-function axioms")
    p.add_argument("file")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("oracle", help="compare closed forms with extreme-point enumeration")
    p.add_argument("--event", required=True)
    p.add_argument("--set", help="only report this subset")
    p.add_argument("file")
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("certify", help="build the conditional mass function and check it")
    p.add_argument("--event", required=True)
    p.add_argument("file")
    p.set_defaults(func=cmd_certify)

    p = sub.add_parser("demo", help="reproduce a worked example")
    p.add_argument("name", choices=sorted(DEMOS))
    p.set_defaults(func=cmd_demo)

    p = sub.add_parser("convert", help="rewrite a document as a mass or belief document")
    p.add_argument("kind", choices=("mass", "belief"))
    p.add_argument("file")
    p.set_defaults(func=cmd_convert)

    p = sub.add_parser("random", help="emit a seeded random mass or belief document")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--size", type=int, default=4, help="number of frame elements")
    p.add_argument("--focal", type=int, default=3, help="number of focal sets")
    p.add_argument("--kind", choices=("mass", "belief"), default="mass")
    p.set_defaults(func=cmd_random)
    return parser


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    try:
        return args.func(args, out)
    except DocumentError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except ConditioningUndefined as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_UNDEFINED
    except FrameTooLargeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_TOO_LARGE
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE


if __name__ == "__main__":
    sys.exit(main())
