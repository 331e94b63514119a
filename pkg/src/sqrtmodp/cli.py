"""Command-line frontend: sqrt, synthesize, verify, expand, density, bench.

Structured JSON reports go to stdout and are byte-stable for fixed
arguments (timings go to stderr, never into the documents).  Exit codes:
0 success/pass, 1 usage or internal failure, 2 not a quadratic residue.
"""

import argparse
import json
import sys
import time
from dataclasses import dataclass, field
from fractions import Fraction

from . import analysis, formulas, modarith, oracles, synthesis

__all__ = [
    "BenchRecord",
    "BenchReport",
    "Failure",
    "PrimeCheck",
    "VerificationReport",
    "bench_from_doc",
    "bench_to_doc",
    "density_from_doc",
    "density_to_doc",
    "main",
    "main_entry",
    "run_bench",
    "run_verification",
    "verification_from_doc",
    "verification_to_doc",
]

METHODS = ("auto", "f1", "f2", "f3", "f4", "synth", "tonelli", "direct", "brute")
_CLASS_OF_METHOD = {"f1": 1, "f2": 2, "f3": 3, "f4": 4}


def _brute_outcome(ctx: modarith.PrimeContext, a: int) -> formulas.SqrtOutcome:
    roots = oracles.brute_force_sqrt(ctx.p, a)
    if not roots:
        raise formulas.NotAResidue(f"{a} is not a quadratic residue mod {ctx.p}")
    root = min(roots)
    coroot = max(roots)
    return formulas.SqrtOutcome(root, coroot, "brute", ctx.p)


def _method_fn(name: str):
    # Late-bound through the module attributes so tests can inject faults.
    table = {
        "auto": lambda ctx, a: formulas.sqrt_auto(ctx, a),
        "f1": lambda ctx, a: formulas.sqrt_f1(ctx, a),
        "f2": lambda ctx, a: formulas.sqrt_f2(ctx, a),
        "f3": lambda ctx, a: formulas.sqrt_f3(ctx, a),
        "f4": lambda ctx, a: formulas.sqrt_f4(ctx, a),
        "synth": lambda ctx, a: synthesis.sqrt_synth(ctx, a),
        "tonelli": lambda ctx, a: oracles.tonelli_shanks(ctx, a),
        "direct": lambda ctx, a: oracles.direct_sqrt(ctx, a),
        "brute": _brute_outcome,
    }
    if name not in table:
        raise ValueError(f"unknown method {name!r}")
    return table[name]


@dataclass(frozen=True)
class Failure:
    a: int
    root: int
    coroot: int
    expected: tuple[int, int]


@dataclass(frozen=True)
class PrimeCheck:
    p: int
    k: int
    n: int
    z: int
    residues_checked: int
    failures: tuple[Failure, ...]


@dataclass(frozen=True)
class VerificationReport:
    pmin: int
    pmax: int
    method: str
    k_filter: int | None
    primes: tuple[PrimeCheck, ...]
    total_residues: int
    passed: bool
    wall_time_s: float = field(default=0.0, compare=False)


def run_verification(
    pmin: int, pmax: int, method: str = "auto", k_filter: int | None = None
) -> VerificationReport:
    """Check the chosen method against brute force on every residue of every
    prime in [pmin, pmax]; class-specific methods skip non-matching primes."""
    if pmax > oracles.BRUTE_LIMIT:
        raise ValueError(f"pmax={pmax} exceeds the exhaustion bound 2^20")
    fn = _method_fn(method)
    t0 = time.perf_counter()
    checks = []
    total = 0
    for p in modarith.primes_in_range(max(pmin, 3), pmax):
        ctx = modarith.make_context(p)
        if k_filter is not None and ctx.k != k_filter:
            continue
        if method in _CLASS_OF_METHOD and ctx.k != _CLASS_OF_METHOD[method]:
            continue
        failures = []
        table = oracles.brute_root_table(p)
        for a, pair in table.items():
            out = fn(ctx, a)
            if out.root * out.root % p != a or (out.root, out.coroot) != pair:
                failures.append(Failure(a, out.root, out.coroot, pair))
        checks.append(
            PrimeCheck(p, ctx.k, ctx.n, ctx.z, len(table), tuple(failures))
        )
        total += len(table)
    passed = all(not pc.failures for pc in checks)
    return VerificationReport(
        pmin,
        pmax,
        method,
        k_filter,
        tuple(checks),
        total,
        passed,
        time.perf_counter() - t0,
    )


def verification_to_doc(rep: VerificationReport) -> dict:
    return {
        "kind": "verification_report",
        "pmin": rep.pmin,
        "pmax": rep.pmax,
        "method": rep.method,
        "k_filter": rep.k_filter,
        "primes": [
            {
                "p": pc.p,
                "k": pc.k,
                "n": pc.n,
                "z": pc.z,
                "residues_checked": pc.residues_checked,
                "failures": [
                    {
                        "a": fl.a,
                        "root": fl.root,
                        "coroot": fl.coroot,
                        "expected": list(fl.expected),
                    }
                    for fl in pc.failures
                ],
            }
            for pc in rep.primes
        ],
        "total_primes": len(rep.primes),
        "total_residues": rep.total_residues,
        "pass": rep.passed,
    }


def verification_from_doc(doc: dict) -> VerificationReport:
    if doc.get("kind") != "verification_report":
        raise ValueError("not a verification_report document")
    primes = tuple(
        PrimeCheck(
            pd["p"],
            pd["k"],
            pd["n"],
            pd["z"],
            pd["residues_checked"],
            tuple(
                Failure(fd["a"], fd["root"], fd["coroot"], tuple(fd["expected"]))
                for fd in pd["failures"]
            ),
        )
        for pd in doc["primes"]
    )
    return VerificationReport(
        doc["pmin"],
        doc["pmax"],
        doc["method"],
        doc["k_filter"],
        primes,
        doc["total_residues"],
        doc["pass"],
    )


@dataclass(frozen=True)
class BenchRecord:
    method: str
    p: int
    trials: int
    total_mults: int
    mean_mults: float
    min_mults: int
    max_mults: int
    constant_across_inputs: bool


@dataclass(frozen=True)
class BenchReport:
    p: int
    trials: int
    seed: int
    records: tuple[BenchRecord, ...]
    wall_time_s: float = field(default=0.0, compare=False)


def _sample_residues(ctx: modarith.PrimeContext, trials: int, seed: int) -> list[int]:
    """Linear scan from the seed, keeping a iff legendre(a) = +1."""
    out = []
    a = seed % ctx.p or 1
    while len(out) < trials:
        if modarith.legendre(a, ctx.p) == 1:
            out.append(a)
        a += 1
        if a == ctx.p:
            a = 1
    return out


def _default_methods(ctx: modarith.PrimeContext) -> list[str]:
    methods = ["auto"]
    if ctx.k <= 4:
        methods.append(f"f{ctx.k}")
    methods += ["synth", "direct", "tonelli"]
    return methods


def run_bench(
    p: int, trials: int, methods: list[str] | None = None, seed: int = 1
) -> BenchReport:
    """Per-method multiplication counts over a deterministic residue sample."""
    if trials < 1:
        raise ValueError("trials must be >= 1")
    ctx = modarith.make_context(p)
    if methods is None:
        methods = _default_methods(ctx)
    for m in methods:
        if m in _CLASS_OF_METHOD and ctx.k != _CLASS_OF_METHOD[m]:
            raise ValueError(f"method {m} needs k={_CLASS_OF_METHOD[m]}, p={p} has k={ctx.k}")
        if m == "brute" and p > oracles.BRUTE_LIMIT:
            raise ValueError(f"brute excluded for p > 2^20 (p={p})")
    sample = _sample_residues(ctx, trials, seed)
    t0 = time.perf_counter()
    records = []
    for m in methods:
        fn = _method_fn(m)
        m0 = time.perf_counter()
        counts = [fn(ctx, a).mul_count for a in sample]
        print(
            f"bench {m} on p={p}: {time.perf_counter() - m0:.3f}s",
            file=sys.stderr,
        )
        total = sum(counts)
        records.append(
            BenchRecord(
                m,
                p,
                trials,
                total,
                total / trials,
                min(counts),
                max(counts),
                min(counts) == max(counts),
            )
        )
    return BenchReport(
        p, trials, seed, tuple(records), time.perf_counter() - t0
    )


def bench_to_doc(rep: BenchReport) -> dict:
    return {
        "kind": "bench_report",
        "p": rep.p,
        "trials": rep.trials,
        "seed": rep.seed,
        "records": [
            {
                "method": r.method,
                "p": r.p,
                "trials": r.trials,
                "total_mults": r.total_mults,
                "mean_mults": r.mean_mults,
                "min_mults": r.min_mults,
                "max_mults": r.max_mults,
                "constant_across_inputs": r.constant_across_inputs,
            }
            for r in rep.records
        ],
    }


def bench_from_doc(doc: dict) -> BenchReport:
    if doc.get("kind") != "bench_report":
        raise ValueError("not a bench_report document")
    records = tuple(
        BenchRecord(
            rd["method"],
            rd["p"],
            rd["trials"],
            rd["total_mults"],
            rd["mean_mults"],
            rd["min_mults"],
            rd["max_mults"],
            rd["constant_across_inputs"],
        )
        for rd in doc["records"]
    )
    return BenchReport(doc["p"], doc["trials"], doc["seed"], records)


def density_to_doc(rep: analysis.DensityReport) -> dict:
    predicted_exact = str(Fraction(1, 2 * rep.n)) if rep.k >= 2 else None
    return {
        "kind": "density_report",
        "p": rep.p,
        "k": rep.k,
        "n": rep.n,
        "qr_count": rep.qr_count,
        "odd_order_count": rep.odd_order_count,
        "odd_order_fraction": str(rep.odd_order_fraction),
        "predicted_odd_order_fraction": str(Fraction(1, 1 << (rep.k - 1))),
        "exact_2k1_order_count": rep.exact_2k1_order_count,
        "exact_2k1_fraction": str(rep.exact_2k1_fraction),
        "predicted_exact_2k1_fraction": predicted_exact,
        "class_histogram": list(rep.class_histogram),
        "multiplier_histogram": list(analysis.multiplier_histogram(rep)),
    }


def density_from_doc(doc: dict) -> analysis.DensityReport:
    if doc.get("kind") != "density_report":
        raise ValueError("not a density_report document")
    return analysis.DensityReport(
        doc["p"],
        doc["k"],
        doc["n"],
        doc["qr_count"],
        doc["odd_order_count"],
        doc["exact_2k1_order_count"],
        tuple(doc["class_histogram"]),
        Fraction(doc["odd_order_fraction"]),
        Fraction(doc["exact_2k1_fraction"]),
    )


def _emit(text: str, out: str | None) -> None:
    print(text)
    if out:
        with open(out, "w") as fh:
            fh.write(text + "\n")


def _cmd_sqrt(args) -> int:
    ctx = modarith.make_context(args.p)
    if args.method == "brute" and args.p > oracles.BRUTE_LIMIT:
        raise ValueError(f"brute excluded for p > 2^20 (p={args.p})")
    out = _method_fn(args.method)(ctx, args.a)
    doc = {
        "kind": "sqrt_outcome",
        "p": args.p,
        "a": args.a,
        "root": out.root,
        "coroot": out.coroot,
        "method": out.method,
        "mul_count": out.mul_count,
    }
    _emit(json.dumps(doc, indent=2), args.out)
    return 0


def _cmd_synthesize(args) -> int:
    f = synthesis.synthesize(args.k)
    if args.format == "text":
        text = synthesis.render_text(f)
    elif args.format == "math":
        text = synthesis.render_math(f)
    else:
        text = synthesis.formula_to_json(f)
    _emit(text, args.out)
    return 0


def _cmd_verify(args) -> int:
    rep = run_verification(args.pmin, args.pmax, args.method, args.k)
    _emit(json.dumps(verification_to_doc(rep), indent=2), args.out)
    print(
        f"verify: {len(rep.primes)} primes, {rep.total_residues} residues, "
        f"{'pass' if rep.passed else 'FAIL'} in {rep.wall_time_s:.2f}s",
        file=sys.stderr,
    )
    return 0 if rep.passed else 1


def _cmd_expand(args) -> int:
    ctx = modarith.make_context(args.p)
    f = synthesis.synthesize(ctx.k)
    poly = synthesis.expand(f, ctx)
    ok = synthesis.degree_check(poly, ctx)
    doc = {
        "kind": "expanded_polynomial",
        "p": ctx.p,
        "k": ctx.k,
        "n": ctx.n,
        "z": ctx.z,
        "polynomial": poly.text(),
        "terms": [[ex, co] for ex, co in poly.terms],
        "degree": poly.degree,
        "term_count": len(poly.terms),
        "expected_degree": (1 << (ctx.k - 1)) * ctx.n - (ctx.n - 1) // 2,
        "max_terms": 1 << (ctx.k - 1),
        "degree_check": "PASS" if ok else "FAIL",
    }
    _emit(json.dumps(doc, indent=2), args.out)
    return 0 if ok else 1


def _cmd_density(args) -> int:
    ctx = modarith.make_context(args.p)
    rep = analysis.order_census(ctx)
    _emit(json.dumps(density_to_doc(rep), indent=2), args.out)
    return 0


def _cmd_bench(args) -> int:
    methods = args.methods.split(",") if args.methods else None
    if methods:
        for m in methods:
            if m not in METHODS:
                raise ValueError(f"unknown method {m!r}")
    rep = run_bench(args.p, args.trials, methods, args.seed)
    _emit(json.dumps(bench_to_doc(rep), indent=2), args.out)
    print(f"bench: total {rep.wall_time_s:.2f}s", file=sys.stderr)
    return 0


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse exits with status 2 on bad usage, which this CLI reserves for
    # nonresidue inputs; route usage errors to exit 1 instead.
    def error(self, message):
        raise _UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="sqrtmodp",
        description="Square roots modulo primes p = 2^k*n + 1: closed-form "
        "evaluators, general-k synthesis, oracles, statistics, benchmarks.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    sq = sub.add_parser("sqrt", help="compute one square root")
    sq.add_argument("--p", type=int, required=True, help="odd prime modulus")
    sq.add_argument("--a", type=int, required=True, help="residue in [0, p)")
    sq.add_argument("--method", choices=METHODS, default="auto")
    sq.add_argument("--out", default=None, help="also write the report here")
    sq.set_defaults(func=_cmd_sqrt)

    sy = sub.add_parser("synthesize", help="print the general-k formula")
    sy.add_argument("--k", type=int, required=True)
    sy.add_argument("--format", choices=("text", "structured", "math"), default="text")
    sy.add_argument("--out", default=None)
    sy.set_defaults(func=_cmd_synthesize)

    ve = sub.add_parser("verify", help="sweep a prime range against brute force")
    ve.add_argument("--pmin", type=int, required=True)
    ve.add_argument("--pmax", type=int, required=True)
    ve.add_argument("--k", type=int, default=None, help="only primes with this k")
    ve.add_argument("--method", choices=METHODS, default="auto")
    ve.add_argument("--out", default=None)
    ve.set_defaults(func=_cmd_verify)

    ex = sub.add_parser("expand", help="expand the formula for one prime")
    ex.add_argument("--p", type=int, required=True)
    ex.add_argument("--out", default=None)
    ex.set_defaults(func=_cmd_expand)

    de = sub.add_parser("density", help="exact order-class census for one prime")
    de.add_argument("--p", type=int, required=True)
    de.add_argument("--out", default=None)
    de.set_defaults(func=_cmd_density)

    be = sub.add_parser("bench", help="multiplication-count benchmark")
    be.add_argument("--p", type=int, required=True)
    be.add_argument("--trials", type=int, default=100)
    be.add_argument("--methods", default=None, help="comma-separated method list")
    be.add_argument("--seed", type=int, default=1)
    be.add_argument("--out", default=None)
    be.set_defaults(func=_cmd_bench)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except SystemExit as exc:  # --help
        return 0 if exc.code in (0, None) else 1
    try:
        return args.func(args)
    except formulas.NotAResidue as exc:
        print(f"not a quadratic residue: {exc}", file=sys.stderr)
        return 2
    except (ValueError, ArithmeticError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def main_entry() -> None:
    raise SystemExit(main())
