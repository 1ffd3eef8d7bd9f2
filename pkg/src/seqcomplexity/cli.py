"""Command-line interface: ``seqcx generate | measure | profile | verify``.

Exit codes: 0 success, 1 a verification claim failed, 2 usage or input error.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field

from . import claims as claimlib
from .bitseq import FORMATS, BitParseError, write_bits
from .expansion import expansion_complexity
from .linear import berlekamp_massey, lc_profile
from .moc import moc_automaton, moc_profile
from .seqgen import AlongSquares, File, Pattern, ThueMorse, generate

WORKERS_ENV = "SEQCX_WORKERS"

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class InputError(Exception):
    pass


@dataclass
class RunReport:
    command: str
    params: dict = field(default_factory=dict)
    results: list = field(default_factory=list)
    verdicts: list = field(default_factory=list)

    def to_json(self) -> str:
        return json.dumps(asdict(self), sort_keys=True)

    @classmethod
    def from_json(cls, text: str) -> RunReport:
        raw = json.loads(text)
        return cls(
            command=raw["command"],
            params=raw["params"],
            results=raw["results"],
            verdicts=[tuple(v) for v in raw["verdicts"]],
        )


def _positive(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1, got {value}")
    return value


def _add_source(p: argparse.ArgumentParser) -> None:
    g = p.add_argument_group("sequence source")
    src = g.add_mutually_exclusive_group(required=True)
    src.add_argument("--seq", choices=("thue-morse", "rudin-shapiro", "pattern"))
    src.add_argument("--file", help="bitstring file")
    g.add_argument("-k", type=_positive, help="pattern length for --seq pattern")
    g.add_argument("--format", choices=FORMATS, default="ascii01", help="format of --file")
    g.add_argument("--squares", action="store_true", help="take the subsequence along squares")


def _spec(args):
    if args.file is not None:
        spec = File(args.file, args.format)
    elif args.seq == "thue-morse":
        spec = ThueMorse()
    elif args.seq == "rudin-shapiro":
        spec = Pattern(2)
    else:
        if args.k is None:
            raise InputError("--seq pattern requires -k")
        spec = Pattern(args.k)
    return AlongSquares(spec) if args.squares else spec


def _load(args, n: int):
    try:
        return generate(_spec(args), n)
    except (OSError, BitParseError, ValueError) as exc:
        raise InputError(str(exc)) from exc


def _default_dmax(spec) -> int:
    if isinstance(spec, ThueMorse):
        return 6
    if isinstance(spec, Pattern):
        return (1 << spec.k) + 4
    return 32


def _emit(text: str, path: str | None) -> None:
    if path is None:
        sys.stdout.write(text)
    else:
        with open(path, "w", newline="\n") as fh:
            fh.write(text)


def cmd_generate(args) -> int:
    seq = _load(args, args.n)
    _emit(write_bits(seq, args.out_format) + "\n", args.output)
    return EXIT_OK


def _measure(seq, measure: str, n: int, dmax: int, witness: bool) -> dict:
    record = {"measure": measure, "N": n}
    if measure == "moc":
        res = moc_automaton(seq, n)
        record["value"] = res.value
        if witness and res.witness is not None:
            record["witness"] = asdict(res.witness)
    elif measure == "lc":
        fit = berlekamp_massey(seq, n)
        record["value"] = fit.length
        if witness:
            record["taps"] = list(fit.taps)
    else:
        res = expansion_complexity(seq, n, dmax)
        record["value"] = res.value if not res.exceeds else f">{dmax}"
        record["dmax"] = dmax
        if witness and res.annihilator is not None:
            record["annihilator"] = str(res.annihilator)
            record["monomials"] = [list(m) for m in res.annihilator.sorted_monomials()]
    return record


def cmd_measure(args) -> int:
    seq = _load(args, args.n)
    dmax = args.dmax or _default_dmax(_spec(args))
    record = _measure(seq, args.measure, args.n, dmax, args.witness)
    if args.json:
        report = RunReport("measure", _params(args), [record])
        print(report.to_json())
    else:
        print(record["value"])
        for key in ("witness", "taps", "annihilator"):
            if key in record:
                print(f"{key}: {record[key]}")
    return EXIT_OK


def profile_csv(seq, measure: str, nmax: int, dmax: int) -> str:
    if measure == "moc":
        values = moc_profile(seq, nmax).values
    elif measure == "lc":
        values = lc_profile(seq, nmax).values
    else:
        values = []
        for n in range(1, nmax + 1):
            res = expansion_complexity(seq, n, dmax)
            values.append(res.value if not res.exceeds else f">{dmax}")
    lines = ["N,value"] + [f"{n},{v}" for n, v in enumerate(values, start=1)]
    return "\n".join(lines) + "\n"


def cmd_profile(args) -> int:
    seq = _load(args, args.nmax)
    dmax = args.dmax or _default_dmax(_spec(args))
    _emit(profile_csv(seq, args.measure, args.nmax, dmax), args.output)
    return EXIT_OK


def _run_one(job):
    claim, nmax, kmax = job
    return claimlib.run_claim(claim, nmax, kmax)


def _workers(requested: int | None) -> int:
    if requested is not None:
        return requested
    try:
        return max(1, int(os.environ.get(WORKERS_ENV, "1")))
    except ValueError:
        return 1


def cmd_verify(args) -> int:
    names = []
    for chunk in args.claims or ["all"]:
        names.extend(c for c in chunk.split(",") if c)
    if "all" in names:
        names = list(claimlib.CLAIMS)
    unknown = [c for c in names if c not in claimlib.CLAIMS]
    if unknown:
        raise InputError(f"unknown claim id(s): {', '.join(unknown)}")
    jobs = [(c, args.nmax, args.kmax) for c in names]
    workers = _workers(args.workers)
    if workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            outcomes = list(pool.map(_run_one, jobs))
    else:
        outcomes = [_run_one(j) for j in jobs]

    report = RunReport("verify", _params(args))
    failed = False
    for res in outcomes:
        if res.exploratory:
            verdict = "exploratory"
        else:
            verdict = "pass" if res.passed else "fail"
            failed |= not res.passed
        report.verdicts.append((res.claim, verdict))
        report.results.append(
            {"claim": res.claim, "passed": res.passed, "exploratory": res.exploratory, "detail": res.detail}
        )
    if args.json:
        print(report.to_json())
    else:
        for res, (_, verdict) in zip(outcomes, report.verdicts):
            print(f"{verdict.upper():<12} {res.claim:<16} {res.detail}")
    return EXIT_FAIL if failed else EXIT_OK


def _params(args) -> dict:
    skip = {"func", "json"}
    return {k: v for k, v in vars(args).items() if k not in skip}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="seqcx",
        description="Generate automatic sequences and compute their linear, "
        "maximum order and expansion complexity.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("generate", help="print a sequence prefix")
    _add_source(p)
    p.add_argument("-n", type=_positive, required=True)
    p.add_argument("--out-format", choices=FORMATS, default="ascii01")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("measure", help="N-th complexity of a prefix")
    _add_source(p)
    p.add_argument("--measure", choices=("moc", "lc", "ec"), required=True)
    p.add_argument("-n", type=_positive, required=True)
    p.add_argument("--dmax", type=_positive, help="degree cap for ec")
    p.add_argument("--witness", action="store_true")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_measure)

    p = sub.add_parser("profile", help="CSV of N,value for N = 1..nmax")
    _add_source(p)
    p.add_argument("--measure", choices=("moc", "lc", "ec"), required=True)
    p.add_argument("--nmax", type=_positive, required=True)
    p.add_argument("--dmax", type=_positive, help="degree cap for ec")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_profile)

    p = sub.add_parser("verify", help="check the published claims")
    p.add_argument(
        "--claims",
        action="append",
        help="comma-separated claim ids or 'all'; one of: " + ", ".join(claimlib.CLAIMS),
    )
    p.add_argument("--nmax", type=_positive)
    p.add_argument("--kmax", type=_positive)
    p.add_argument("--workers", type=_positive, help=f"parallel workers (default ${WORKERS_ENV} or 1)")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except InputError as exc:
        print(f"seqcx {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"seqcx {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
