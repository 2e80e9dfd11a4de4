"""Command-line front end.

Subcommands: decide, slps-decide, shorten, flatten, verify, fuzz, bench.
Exit codes are a fixed contract: 0 success/Reachable, 1 negative verdict
or failed verification/fuzzing, 2 input error, 3 budget exhaustion.
All output except bench timing columns is byte-identical across runs
given the same inputs and seeds.
"""

from __future__ import annotations

import argparse
import os
import sys
import time
from typing import Optional

from . import certificates, decide, fuzzing, schemes, shortening
from .core import Configuration, PlaneVector, run
from .errors import BudgetExceededError, ParseError, PreconditionError, VasskitError
from .instances import Instance, load_instance, serialize_instance

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_INPUT = 2
EXIT_BUDGET = 3


def _parse_vector(text: str) -> PlaneVector:
    try:
        x, y = text.split(",")
        return PlaneVector(int(x), int(y))
    except ValueError:
        raise ParseError(f"expected x,y pair, got {text!r}")


def _print_trace(word, source: Configuration, out) -> None:
    for point in run(word, source).visited:
        print(f"trace: {point}", file=out)


def _write_certificate(path: str, instance_file: str, lines: list[str]) -> None:
    rel = os.path.relpath(os.path.abspath(instance_file), os.path.dirname(os.path.abspath(path)))
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(f"instance: {rel}\n")
        for line in lines:
            fh.write(line + "\n")


def _cmd_decide(args, out) -> int:
    instance = load_instance(args.file)
    if instance.kind != "vass" or instance.query is None:
        raise ParseError("decide needs an automaton file with a query line")
    s, t = instance.query
    if args.length_bound is not None:
        verdict = decide.decide_bounded_witness(instance.vass, s, t, args.length_bound)
    else:
        cap = args.cap if args.cap is not None else decide.default_cap(instance.vass, s, t)
        verdict = decide.decide_capped_bfs(instance.vass, s, t, cap)
    print(certificates.serialize_verdict(verdict), file=out)
    if args.trace and verdict.witness is not None:
        _print_trace(verdict.witness, s, out)
    if args.cert:
        _write_certificate(args.cert, args.file, [certificates.serialize_verdict(verdict)])
    return EXIT_OK if verdict.kind == decide.REACHABLE else EXIT_NEGATIVE


def _cmd_slps_decide(args, out) -> int:
    instance = load_instance(args.file)
    if instance.kind != "slps" or instance.query is None:
        raise ParseError("slps-decide needs a simple scheme file with a query line")
    s, t = instance.query
    result = schemes.slps_reach(instance.scheme, s, t)
    cap = schemes.norm_bound_value(
        instance.scheme.K + 2, max(instance.scheme.norm, s.norm, t.norm)
    )
    print(f"cap: {cap}", file=out)
    print(certificates.serialize_result(result), file=out)
    if not result.reachable:
        print("kind=Unreachable", file=out)
    if args.trace and result.exponents is not None:
        from .core import instantiate

        _print_trace(instantiate(instance.scheme, result.exponents), s, out)
    if args.cert:
        _write_certificate(args.cert, args.file, [certificates.serialize_result(result)])
    return EXIT_OK if result.reachable else EXIT_NEGATIVE


def _family_lines(family: shortening.ShorteningFamily, scheme_file: str) -> list[str]:
    return [
        certificates.serialize_shortening(family.members[n], scheme_file)
        for n in sorted(family.members)
    ]


def _cmd_shorten(args, out) -> int:
    instance = load_instance(args.file)
    if instance.kind != "slps" or instance.exponents is None or instance.query is None:
        raise ParseError("shorten needs a simple scheme file with path and query lines")
    scheme, exps = instance.scheme, instance.exponents
    source = instance.query[0]
    rel = os.path.basename(args.file)
    k = args.cycle_cap if args.cycle_cap is not None else scheme.K
    if args.op == "cut":
        if args.direction is None:
            raise ParseError("--direction is required for op cut")
        family = shortening.cut_by_vector(
            scheme, exps, source, args.count, _parse_vector(args.direction)
        )
        lines = _family_lines(family, rel)
    elif args.op == "close-away":
        family = shortening.shorten_close_away(scheme, exps, source, args.corridor, k)
        lines = _family_lines(family, rel)
    elif args.op == "away-both":
        family = shortening.shorten_away_both(scheme, exps, source, args.count, k)
        lines = _family_lines(family, rel)
    elif args.op == "away-other":
        result = shortening.shorten_away_other(
            scheme, exps, source, args.corridor, args.count, k
        )
        if result.case == 1:
            lines = [f"case: 1"] + _family_lines(result.family, rel)
        else:
            lines = [f"case: 2 vector={result.vector.x},{result.vector.y}"]
    elif args.op == "one-visit":
        if args.split is None:
            raise ParseError("--split is required for op one-visit")
        family = shortening.shorten_one_visit(
            scheme, exps, source, args.split, args.corridor, args.count, k
        )
        lines = _family_lines(family, rel)
    else:  # far
        member = shortening.shorten_far(scheme, exps, source, k)
        lines = [certificates.serialize_shortening(member, rel)]
    for line in lines:
        print(line, file=out)
    if args.cert:
        # the scheme reference resolves relative to the certificate file
        cert_rel = os.path.relpath(
            os.path.abspath(args.file), os.path.dirname(os.path.abspath(args.cert))
        )
        _write_certificate(
            args.cert,
            args.file,
            [
                ln.replace(f"scheme={rel}", f"scheme={cert_rel}")
                for ln in lines
                if ln.startswith("shortening:")
            ],
        )
    return EXIT_OK


def _cmd_flatten(args, out) -> int:
    instance = load_instance(args.file)
    if instance.kind != "lps":
        raise ParseError("flatten needs a general scheme file")
    family = schemes.split_lps(instance.scheme)
    print(f"members: {len(family.members)}", file=out)
    for member in family.members:
        profile = ",".join(str(u) for u in member.profile)
        print(f"# member profile={profile}", file=out)
        print(serialize_instance(Instance(kind="slps", scheme=member.scheme)), end="", file=out)
    return EXIT_OK


def _cmd_verify(args, out) -> int:
    violations = certificates.verify_certificate_file(args.file)
    if not violations:
        print("verify: ok", file=out)
        return EXIT_OK
    for violation in violations:
        print(f"verify: {violation}", file=out)
    return EXIT_NEGATIVE


def _cmd_fuzz(args, out) -> int:
    if args.target not in fuzzing.TARGETS:
        raise ParseError(f"unknown fuzz target {args.target!r}")
    report = fuzzing.run_target(args.target, args.iters, args.seed)
    print(
        f"fuzz: target={report.target} iters={report.iterations}"
        f" seed={report.seed} failures={len(report.failures)}",
        file=out,
    )
    if args.target == "thm10" and not report.failures:
        _report_thm10_margin(args, out)
    if not report.failures:
        return EXIT_OK
    repro = args.repro or f"fuzz-{args.target}-repro.txt"
    with open(repro, "w", encoding="utf-8") as fh:
        for failure in report.failures:
            fh.write(f"iteration: {failure.iteration}\n")
            fh.write(f"violation: {failure.violation}\n")
            fh.write(f"case: {failure.case!r}\n")
            fh.write(f"minimized: {failure.minimized!r}\n")
    for failure in report.failures:
        print(f"fuzz: iteration {failure.iteration}: {failure.violation}", file=out)
    print(f"fuzz: minimized reproduction written to {repro}", file=out)
    return EXIT_NEGATIVE


def _report_thm10_margin(args, out) -> None:
    from random import Random

    rng = Random(args.seed)
    observed = 0
    bound = 0
    for _ in range(min(args.iters, 50)):
        scheme = fuzzing._gen_thm10(rng)
        witness = schemes.shortest_zero_witness(scheme, budget=500_000)
        if witness is None:
            continue
        from .core import instantiate

        trace = run(instantiate(scheme, witness), Configuration(0, 0))
        observed = max(observed, max(p.norm for p in trace.visited))
        bound = max(bound, schemes.norm_bound(scheme))
    print(f"fuzz: max observed visited norm {observed} vs bound {bound}", file=out)


def _cmd_bench(args, out) -> int:
    try:
        names = sorted(n for n in os.listdir(args.dir) if n.endswith(".vas"))
    except OSError as exc:
        raise ParseError(f"cannot list {args.dir}: {exc}")
    print("instance\tverdict\tlength\texplored\tseconds", file=out)
    for name in names:
        path = os.path.join(args.dir, name)
        started = time.monotonic()
        try:
            instance = load_instance(path)
            if instance.query is None:
                raise ParseError("no query line")
            s, t = instance.query
            if instance.kind == "vass":
                verdict = decide.decide_capped_bfs(
                    instance.vass, s, t, decide.default_cap(instance.vass, s, t)
                )
                kind, length, explored = verdict.kind, verdict.length, verdict.explored
            elif instance.kind == "slps":
                result = schemes.slps_reach(instance.scheme, s, t)
                kind = "Reachable" if result.reachable else "Unreachable"
                length = sum(result.exponents) + instance.scheme.K + 1 if result.reachable else None
                explored = 0
            else:
                raise ParseError("bench supports automaton and simple scheme files")
        except VasskitError as exc:
            print(f"{name}\terror\t-\t-\t{exc}", file=out)
            continue
        elapsed = time.monotonic() - started
        shown = "-" if length is None else str(length)
        print(f"{name}\t{kind}\t{shown}\t{explored}\t{elapsed:.3f}", file=out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="vasskit",
        description="Reachability toolkit for planar vector addition systems and path schemes.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("decide", help="decide reachability for an automaton instance")
    p.add_argument("file")
    p.add_argument("--cap", type=int, default=None)
    p.add_argument("--length-bound", type=int, default=None)
    p.add_argument("--trace", action="store_true")
    p.add_argument("--cert", default=None, help="write a certificate file")
    p.set_defaults(handler=_cmd_decide)

    p = sub.add_parser("slps-decide", help="complete decision for a simple scheme instance")
    p.add_argument("file")
    p.add_argument("--trace", action="store_true")
    p.add_argument("--cert", default=None)
    p.set_defaults(handler=_cmd_slps_decide)

    p = sub.add_parser("shorten", help="apply a path-shortening operation")
    p.add_argument("file")
    p.add_argument(
        "--op",
        required=True,
        choices=["cut", "close-away", "away-both", "away-other", "one-visit", "far"],
    )
    p.add_argument("--direction", default=None, help="x,y direction for op cut")
    p.add_argument("--count", type=int, default=1)
    p.add_argument("--corridor", type=int, default=8)
    p.add_argument("--cycle-cap", type=int, default=None)
    p.add_argument("--split", type=int, default=None)
    p.add_argument("--cert", default=None)
    p.set_defaults(handler=_cmd_shorten)

    p = sub.add_parser("flatten", help="split a general scheme into simple schemes")
    p.add_argument("file")
    p.set_defaults(handler=_cmd_flatten)

    p = sub.add_parser("verify", help="re-check a certificate file")
    p.add_argument("file")
    p.set_defaults(handler=_cmd_verify)

    p = sub.add_parser("fuzz", help="run a seeded property-fuzzing target")
    p.add_argument("target")
    p.add_argument("--iters", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--repro", default=None, help="reproduction file on failure")
    p.set_defaults(handler=_cmd_fuzz)

    p = sub.add_parser("bench", help="run all instances in a directory and print a table")
    p.add_argument("dir")
    p.set_defaults(handler=_cmd_bench)
    return parser


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args, sys.stdout)
    except (ParseError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except BudgetExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except PreconditionError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except VasskitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NEGATIVE


if __name__ == "__main__":
    raise SystemExit(main())
