"""Command-line interface: gen, find, verify, decide, ramsey, stress.

Exit codes: 0 ok/yes, 1 I/O or parse error, 2 bad parameters or
precondition, 3 structure violation, 4 certificate rejected, 5 decision no,
6 budget exhausted / unknown.
"""

from __future__ import annotations

import argparse
import hashlib
import statistics
import sys
import time
from collections import Counter
from dataclasses import dataclass, field
from pathlib import Path

from . import extremal
from .certificate import format_certificate, parse_certificate
from .colouring import FormatError, parse, serialize
from .extremal import theorem_bound
from .finder import PreconditionError, StructureViolation, find_connected_clique_matching
from .oracle import DEFAULT_BUDGET, BudgetExceeded, decide, ramsey_connected_exact, verify_certificate
from .rng import derive_seed

EXIT_OK, EXIT_IO, EXIT_PRE, EXIT_VIOLATION, EXIT_REJECTED, EXIT_NO, EXIT_BUDGET = range(7)


class CliError(Exception):
    def __init__(self, code: int, message: str):
        super().__init__(message)
        self.code = code


@dataclass
class RunReport:
    command: str
    parameters: dict = field(default_factory=dict)
    digest: str = ""
    outcome: str = ""
    augmentations: int = 0
    seed: int | None = None
    wall_ms: float | None = None
    extra: dict = field(default_factory=dict)

    def lines(self) -> list[str]:
        out = [f"command={self.command}"]
        out += [f"{k}={v}" for k, v in self.parameters.items()]
        if self.digest:
            out.append(f"digest={self.digest}")
        out.append(f"outcome={self.outcome}")
        out.append(f"augmentations={self.augmentations}")
        if self.seed is not None:
            out.append(f"seed={self.seed}")
        out += [f"{k}={v}" for k, v in self.extra.items()]
        if self.wall_ms is not None:
            out.append(f"wall_ms={self.wall_ms:.1f}")
        return out


def digest(text: str) -> str:
    return hashlib.blake2b(text.encode(), digest_size=8).hexdigest()


def _read(path: str) -> str:
    try:
        if path == "-":
            return sys.stdin.read()
        return Path(path).read_text()
    except OSError as exc:
        raise CliError(EXIT_IO, f"cannot read {path}: {exc}") from None


def _write(path: str | None, text: str) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
        return
    try:
        Path(path).write_text(text)
    except OSError as exc:
        raise CliError(EXIT_IO, f"cannot write {path}: {exc}") from None


def _load_colouring(path: str):
    text = _read(path)
    try:
        return parse(text), text
    except FormatError as exc:
        raise CliError(EXIT_IO, f"{path}: {exc}") from None


def _positive(name, value, minimum=1):
    if value is None or value < minimum:
        raise CliError(EXIT_PRE, f"--{name} must be at least {minimum}")


# ---------------------------------------------------------------------------
# commands
# ---------------------------------------------------------------------------

def cmd_gen(args) -> int:
    if args.kind == "burr":
        _positive("r", args.r, 2)
        _positive("n", args.n)
        g = extremal.burr_colouring(args.r, args.n)
        parts = extremal.burr_parts(args.r, args.n)
        print(f"N={g.order}")
        print("parts=" + ",".join(f"{p.start}-{p.stop - 1}" if len(p) else "empty" for p in parts))
    else:
        if args.seed is None:
            raise CliError(EXIT_PRE, "--seed is required for random families")
        if args.kind == "random":
            _positive("N", args.N)
            try:
                g = extremal.random_colouring(args.N, args.p, args.seed)
            except (ValueError, ZeroDivisionError) as exc:
                raise CliError(EXIT_PRE, str(exc)) from None
        elif args.kind == "perturbed-burr":
            _positive("r", args.r, 2)
            _positive("n", args.n)
            g = extremal.perturbed_burr(args.r, args.n, args.flips, args.seed)
        else:
            _positive("r", args.r, 4)
            _positive("n", args.n, 2)
            g = extremal.planted_colouring(args.r, args.n, args.seed, scrambled=args.scrambled)
        print(f"N={g.order}")
        print(f"seed={args.seed}")
    _write(args.out, serialize(g))
    return EXIT_OK


def cmd_find(args) -> int:
    g, text = _load_colouring(args.input)
    _positive("r", args.r, 2)
    _positive("n", args.n)
    report = RunReport("find", {"r": args.r, "n": args.n, "N": g.order}, digest(text))
    start = time.perf_counter()
    try:
        result = find_connected_clique_matching(g, args.r, args.n, ramsey_bound=args.ramsey_bound)
    except PreconditionError as exc:
        raise CliError(EXIT_PRE, f"precondition: {exc}") from None
    except StructureViolation as exc:
        report.outcome = "structure-violation"
        if args.dump:
            _write(args.dump, exc.dump())
        else:
            sys.stderr.write(exc.dump())
        _emit(report, args)
        return EXIT_VIOLATION
    if args.timing:
        report.wall_ms = 1000 * (time.perf_counter() - start)
    report.outcome = result.outcome
    report.augmentations = len(result.augmentations)
    report.extra["colour"] = result.certificate.colour.value
    report.extra["trace"] = ",".join(f"{e.rule}:{e.before}->{e.after}" for e in result.augmentations) or "none"
    _write(args.out, format_certificate(result.certificate, args.r))
    if args.report:
        lines = report.lines() + [f"{k}={v}" for k, v in result.report.items()]
        _write(args.report, "\n".join(lines) + "\n")
    _emit(report, args)
    return EXIT_OK


def _emit(report: RunReport, args) -> None:
    sys.stderr.write("\n".join(report.lines()) + "\n")


def cmd_verify(args) -> int:
    g, _ = _load_colouring(args.colouring)
    try:
        cert = parse_certificate(_read(args.certificate))
    except FormatError as exc:
        raise CliError(EXIT_IO, f"{args.certificate}: {exc}") from None
    r = args.r if args.r is not None else cert.r
    n = args.n if args.n is not None else cert.n
    rejection = verify_certificate(g, cert, r, n)
    if rejection is not None:
        sys.stderr.write(f"rejected: {rejection}\n")
        return EXIT_REJECTED
    print("ok")
    return EXIT_OK


def cmd_decide(args) -> int:
    g, text = _load_colouring(args.input)
    _positive("r", args.r, 2)
    _positive("n", args.n)
    try:
        result = decide(g, args.r, args.n, args.mode, budget=args.budget)
    except BudgetExceeded as exc:
        sys.stderr.write(f"unknown: {exc}\n")
        return EXIT_BUDGET
    report = RunReport("decide", {"r": args.r, "n": args.n, "N": g.order, "mode": args.mode}, digest(text),
                       "yes" if result.answer else "no")
    report.extra["nodes"] = result.nodes
    sys.stderr.write("\n".join(report.lines()) + "\n")
    if not result.answer:
        print("no")
        return EXIT_NO
    _write(args.out, format_certificate(result.witness, args.r))
    return EXIT_OK


def cmd_ramsey(args) -> int:
    _positive("r", args.r, 2)
    _positive("n", args.n)
    _positive("m-max", args.m_max)
    result = ramsey_connected_exact(args.r, args.n, args.m_max, budget=args.budget)
    if result.value is None:
        print("unknown")
        print(f"reason={result.reason}")
        return EXIT_BUDGET
    print(f"value={result.value}")
    if result.witness is not None:
        path = args.witness_out or f"ramsey_r{args.r}_n{args.n}_m{result.value - 1}.rcm"
        _write(path, serialize(result.witness))
        print(f"witness={path}")
    print(f"leaves={result.leaves}")
    return EXIT_OK


def _stress_instance(args, index: int):
    seed = derive_seed(args.seed, index)
    N = theorem_bound(args.r, args.n)
    if args.family == "random":
        p = args.p[index % len(args.p)]
        return extremal.random_colouring(N, p, seed), {"p": p}, seed
    if args.family == "perturbed-burr":
        flips = args.flips[index % len(args.flips)]
        return extremal.perturbed_burr(args.r, args.n, flips, seed), {"flips": flips}, seed
    scrambled = index % 2 == 1
    g = extremal.planted_colouring(args.r, args.n, seed, scrambled=scrambled)
    flips = args.flips[index % len(args.flips)]
    return extremal.perturb(g, flips, seed), {"scrambled": int(scrambled), "flips": flips}, seed


def cmd_stress(args) -> int:
    _positive("r", args.r, 2)
    _positive("n", args.n)
    if args.count < 0:
        raise CliError(EXIT_PRE, "--count must be non-negative")
    if args.dump_dir:
        Path(args.dump_dir).mkdir(parents=True, exist_ok=True)
    times, histogram = [], Counter()
    violations = rejected = regress = 0
    for i in range(args.count):
        g, params, seed = _stress_instance(args, i)
        text = serialize(g)
        report = RunReport("stress", {"run": i, "family": args.family, **params}, digest(text), seed=seed)
        start = time.perf_counter()
        try:
            result = find_connected_clique_matching(g, args.r, args.n, ramsey_bound=args.ramsey_bound)
        except PreconditionError as exc:
            raise CliError(EXIT_PRE, f"precondition: {exc}") from None
        except StructureViolation as exc:
            violations += 1
            report.outcome = "structure-violation"
            if args.dump_dir:
                base = Path(args.dump_dir) / f"run{i}"
                base.with_suffix(".rcm").write_text(text)
                base.with_suffix(".violation").write_text(exc.dump())
            print(" ".join(report.lines()))
            continue
        report.wall_ms = 1000 * (time.perf_counter() - start)
        times.append(report.wall_ms)
        events = result.augmentations
        report.augmentations = len(events)
        histogram[len(events)] += 1
        progress = len(events) <= args.n and all(e.after > e.before for e in events)
        regress += not progress
        rejection = verify_certificate(g, result.certificate, args.r, args.n)
        if rejection is not None:
            rejected += 1
        report.outcome = result.outcome if rejection is None else f"rejected({rejection.clause})"
        report.extra["progress"] = "ok" if progress else "violated"
        print(" ".join(report.lines()))
    summary = [f"runs={args.count}", f"violations={violations}", f"rejected={rejected}", f"progress_failures={regress}"]
    if times:
        summary += [f"median_ms={statistics.median(times):.1f}", f"max_ms={max(times):.1f}"]
    summary.append("augmentation_histogram=" + (",".join(f"{k}:{v}" for k, v in sorted(histogram.items())) or "none"))
    print("summary " + " ".join(summary))
    if violations:
        return EXIT_VIOLATION
    if rejected or regress:
        return EXIT_REJECTED
    return EXIT_OK


# ---------------------------------------------------------------------------
# argument parsing
# ---------------------------------------------------------------------------

def _int_list(text: str) -> list[int]:
    return [int(x) for x in text.split(",") if x]


def _str_list(text: str) -> list[str]:
    return [x for x in text.split(",") if x]


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        sys.stderr.write(f"{self.prog}: error: {message}\n")
        sys.exit(EXIT_PRE)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="rcm", description="Monochromatic connected clique matchings in 2-coloured complete graphs.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("gen", help="write a colouring in rcm v1 format")
    p.add_argument("kind", choices=["burr", "random", "perturbed-burr", "planted"])
    p.add_argument("--r", type=int)
    p.add_argument("--n", type=int)
    p.add_argument("--N", type=int)
    p.add_argument("--p", default="1/2", help="red probability, e.g. 0.5 or 1/3")
    p.add_argument("--flips", type=int, default=0)
    p.add_argument("--scrambled", action="store_true")
    p.add_argument("--seed", type=int)
    p.add_argument("--out", "-o", default="-")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("find", help="find a certified monochromatic connected nK_r")
    p.add_argument("input")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--ramsey-bound", type=int, help="value of R(K_r) to assume for r >= 5")
    p.add_argument("--out", "-o", default="-", help="certificate path (default stdout)")
    p.add_argument("--report", help="write the structure report here")
    p.add_argument("--dump", help="write a structure-violation dump here")
    p.add_argument("--timing", action="store_true", help="add wall time to the run report")
    p.set_defaults(func=cmd_find)

    p = sub.add_parser("verify", help="check a certificate against a colouring")
    p.add_argument("colouring")
    p.add_argument("certificate")
    p.add_argument("--r", type=int)
    p.add_argument("--n", type=int)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("decide", help="exact decision at desk scale")
    p.add_argument("input")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--mode", choices=["connected", "unconnected"], default="connected")
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    p.add_argument("--out", "-o", default="-")
    p.set_defaults(func=cmd_decide)

    p = sub.add_parser("ramsey", help="exhaustive tiny connected-matching Ramsey numbers")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m-max", type=int, required=True)
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    p.add_argument("--witness-out", help="where to write the extremal colouring")
    p.set_defaults(func=cmd_ramsey)

    p = sub.add_parser("stress", help="find + verify over a seeded corpus at the theorem bound")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--count", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--family", choices=["random", "perturbed-burr", "planted"], default="random")
    p.add_argument("--p", type=_str_list, default=["1/10", "1/2", "9/10"], help="comma-separated red probabilities")
    p.add_argument("--flips", type=_int_list, default=[1, 10, 100], help="comma-separated flip counts")
    p.add_argument("--ramsey-bound", type=int)
    p.add_argument("--dump-dir")
    p.set_defaults(func=cmd_stress)
    return parser


def main(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:  # --help, or a usage error already reported
        return exc.code if isinstance(exc.code, int) else EXIT_PRE
    try:
        return args.func(args)
    except CliError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return exc.code


if __name__ == "__main__":
    sys.exit(main())
