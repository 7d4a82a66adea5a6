"""Batch driver: named verification suites over (n, q, divisor) grids, plus
direct access to the counters and trace functions.

Commands: verify, count, trace, equations, schur-weyl, drinfeld,
character-table.  Reports are deterministic (entries order-normalized, fixed
RNG seeds), so repeated runs and different --jobs values emit byte-identical
output; the process exits nonzero iff some check failed.  Budget overruns
are reported as "skipped", never as failures.  The VINBUN_BUDGET environment
variable overrides the enumeration budgets.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import random
import sys
import time
from dataclasses import dataclass

from vinbun import arith, drinfeld, kcalc, lefschetz, localmodel, symrep
from vinbun.budget import BudgetExceededError
from vinbun.kcalc import CalibrationError

ALL_SUITES = (
    "nearby",
    "omega",
    "strata",
    "schurweyl",
    "reconstruct",
    "drinfeld",
    "quadric",
    "uniformity",
)


def field_from_q(q, modulus=None):
    """F_q from the prime power q (q = p^e with e <= 3)."""
    for p in range(2, q + 1):
        if q % p == 0:
            e = 0
            m = q
            while m % p == 0:
                m //= p
                e += 1
            if m != 1:
                raise ValueError(f"{q} is not a prime power")
            return arith.build_field(p, e, modulus)
    raise ValueError(f"bad q = {q}")


def prime_powers_up_to(limit):
    out = []
    for q in range(2, limit + 1):
        try:
            field_from_q(q)
        except ValueError:
            continue
        out.append(q)
    return out


# ---------------------------------------------------------------------------
# verification suites
# ---------------------------------------------------------------------------


@dataclass
class RunConfig:
    suites: tuple = ALL_SUITES
    max_n: int = 3
    max_q: int = 4
    max_degree: int = 2
    max_k: int = 4
    jobs: int = 1
    budget: int | None = None
    output: str | None = None
    fmt: str = "json"

    def __post_init__(self):
        if not self.suites:
            raise ValueError("suites must be nonempty")
        unknown = set(self.suites) - set(ALL_SUITES)
        if unknown:
            raise ValueError(f"unknown suites: {sorted(unknown)}")
        if self.jobs < 1 or (self.budget is not None and self.budget < 1):
            raise ValueError("jobs and budget must be positive")


def _check(suite, name, params, lhs, rhs, ok):
    return {
        "suite": suite,
        "name": name,
        "params": params,
        "lhs": str(lhs),
        "rhs": str(rhs),
        "status": "pass" if ok else "fail",
    }


def _skip(suite, name, params, reason):
    return {
        "suite": suite,
        "name": name,
        "params": params,
        "lhs": reason,
        "rhs": "",
        "status": "skipped",
    }


def suite_nearby(config):
    checks = []
    try:
        ledger = kcalc.NormLedger.calibrated()
    except CalibrationError as exc:
        return [_check("nearby", "calibration", "n=1", str(exc), "", False)]
    one_minus_q = arith.Laurent.one() - arith.Laurent.monomial(2)
    for q in prime_powers_up_to(config.max_q):
        fld = field_from_q(q)
        for n in range(1, config.max_n + 1):
            for d in arith.enumerate_divisors(fld, n):
                if any(pt.degree > config.max_degree for pt, _ in d):
                    continue
                lhs = one_minus_q * kcalc.trace_gr_psi(n, d)
                rhs = ledger.c(n) * kcalc.boundary_stalk_trace(d)
                checks.append(
                    _check(
                        "nearby",
                        "nearby-vs-boundary",
                        f"q={q} n={n} D={arith.format_divisor(fld, d)}",
                        lhs,
                        rhs,
                        lhs == rhs,
                    )
                )
    return checks


def suite_omega(config):
    checks = []
    for q in prime_powers_up_to(config.max_q):
        fld = field_from_q(q)
        for n in range(1, config.max_n + 1):
            for d in arith.enumerate_divisors(fld, n):
                if any(pt.degree != 1 for pt, _ in d):
                    continue
                params = f"q={q} n={n} D={arith.format_divisor(fld, d)}"
                try:
                    count = localmodel.g_locus_count(
                        fld, tuple(m for _, m in d.parts), jobs=config.jobs,
                        budget=config.budget,
                    )
                except BudgetExceededError as exc:
                    checks.append(_skip("omega", "g-locus-count", params, str(exc)))
                    continue
                trace = kcalc.trace_omega_tilde(n, d).at_q(q)
                predicted = q**n * (q - 1) * trace
                m = len(d.parts)
                closed_form = (q - 1) ** (m + 1) * q ** (n - m)
                ok = count == predicted and count == closed_form
                checks.append(
                    _check(
                        "omega",
                        "omega-point-count",
                        params,
                        count,
                        f"{predicted} (closed form {closed_form})",
                        ok,
                    )
                )
    return checks


def suite_strata(config):
    checks = []
    for q in prime_powers_up_to(config.max_q):
        fld = field_from_q(q)
        for n in range(1, config.max_n + 1):
            params = f"q={q} n={n}"
            try:
                counts = localmodel.strata_counts(n, fld, budget=config.budget)
            except BudgetExceededError as exc:
                checks.append(_skip("strata", "defect-strata", params, str(exc)))
                continue
            expected = {
                k: v for k, v in localmodel.expected_strata_counts(n, q).items() if v
            }
            checks.append(
                _check("strata", "defect-strata", params, counts, expected,
                       counts == expected)
            )
            total = localmodel.count_points(
                localmodel.build_system([n]), fld, "zero", jobs=config.jobs
            )
            checks.append(
                _check("strata", "b-locus-total", params, sum(counts.values()),
                       total, sum(counts.values()) == total)
            )
    return checks


def suite_schurweyl(config):
    checks = []
    for k in range(1, config.max_k + 1):
        brute = lefschetz.brute_force_schur_weyl(k)
        predicted = lefschetz.predicted_schur_weyl(k)
        checks.append(
            _check(
                "schurweyl",
                "brute-vs-predicted",
                f"k={k}",
                brute.describe(),
                predicted.describe(),
                brute == predicted and brute.total_dimension() == 1 << k,
            )
        )
    return checks


def suite_reconstruct(config):
    checks = []
    golden_delta = kcalc.KElement(
        {
            kcalc.symbol(2, "trivial", 0): 1,
            kcalc.symbol(2, "trivial", -1): -1,
            kcalc.symbol(2, "sign", 1): 1,
            kcalc.symbol(2, "sign", -2): -1,
        }
    )
    expected = kcalc.KElement(
        {
            kcalc.symbol(2, "sign", 1): 1,
            kcalc.symbol(2, "sign", 0): 1,
            kcalc.symbol(2, "sign", -1): 1,
            kcalc.symbol(2, "trivial", 0): 1,
        }
    )
    got = kcalc.reconstruct_from_difference(golden_delta)
    checks.append(
        _check("reconstruct", "golden-case", "k=2", got, expected, got == expected)
    )
    rng = random.Random(0)
    reps = [(2,), (1, 1)]
    failures = 0
    trials = 1000
    for _ in range(trials):
        terms = {}
        for _ in range(rng.randint(1, 10)):
            sym = kcalc.symbol(2, rng.choice(reps), rng.randint(-5, 5))
            terms[sym] = terms.get(sym, 0) + rng.randint(-3, 3)
        g = kcalc.KElement(terms)
        if kcalc.reconstruct_from_difference(g - g.twisted(-1)) != g:
            failures += 1
    checks.append(
        _check("reconstruct", "random-roundtrips", f"trials={trials}",
               f"{trials - failures} ok", f"{trials} ok", failures == 0)
    )
    return checks


def suite_drinfeld(config):
    checks = []
    for q in prime_powers_up_to(min(config.max_q, 5)):
        fld = field_from_q(q)
        params = f"a1=0 a2=0 q={q}"
        try:
            res = drinfeld.drinfeld_value(0, 0, fld, budget=config.budget)
        except BudgetExceededError as exc:
            checks.append(_skip("drinfeld", "value-0-0", params, str(exc)))
            continue
        checks.append(
            _check("drinfeld", "value-0-0", params, res.value, 1 - q * q,
                   res.value == 1 - q * q)
        )
    try:
        res = drinfeld.drinfeld_value(1, 0, field_from_q(2), budget=config.budget)
        checks.append(
            _check("drinfeld", "value-1-0", "a1=1 a2=0 q=2", res.value, 3,
                   res.value == 3)
        )
    except BudgetExceededError as exc:
        checks.append(_skip("drinfeld", "value-1-0", "a1=1 a2=0 q=2", str(exc)))
    return checks


def suite_quadric(config):
    checks = []
    sys2 = localmodel.build_system([2])
    eqs = sys2.equations_text()
    checks.append(
        _check("quadric", "single-equation", "n=[2]", eqs,
               ["a[-2]*b[1] + a[-1]*b[0] = 0"], len(eqs) == 1)
    )
    sys11 = localmodel.build_system([1, 1])
    for q in prime_powers_up_to(min(config.max_q, 7)):
        fld = field_from_q(q)
        expected = q**3 + q**2 - q
        params = f"q={q}"
        try:
            total = localmodel.count_points(sys2, fld, "any", jobs=config.jobs,
                                            budget=config.budget)
            coupled = localmodel.count_points(sys11, fld, "any", jobs=config.jobs,
                                              budget=config.budget)
        except BudgetExceededError as exc:
            checks.append(_skip("quadric", "cone-count", params, str(exc)))
            continue
        checks.append(
            _check("quadric", "cone-count", params, total, expected,
                   total == expected)
        )
        checks.append(
            _check("quadric", "fiber-product-count", params, coupled, expected,
                   coupled == expected)
        )
    return checks


def suite_uniformity(config):
    checks = []
    for q in prime_powers_up_to(config.max_q):
        fld = field_from_q(q)
        for n in range(1, config.max_n + 1):
            params = f"q={q} n={n}"
            try:
                ok = localmodel.per_fiber_uniformity(n, fld, jobs=config.jobs)
            except BudgetExceededError as exc:
                checks.append(_skip("uniformity", "g-fibers-equal", params, str(exc)))
                continue
            checks.append(
                _check("uniformity", "g-fibers-equal", params,
                       "uniform" if ok else "non-uniform", "uniform", ok)
            )
    return checks


_SUITE_RUNNERS = {
    "nearby": suite_nearby,
    "omega": suite_omega,
    "strata": suite_strata,
    "schurweyl": suite_schurweyl,
    "reconstruct": suite_reconstruct,
    "drinfeld": suite_drinfeld,
    "quadric": suite_quadric,
    "uniformity": suite_uniformity,
}


def run_suite(config):
    """Execute the configured suites and assemble the order-normalized report."""
    checks = []
    for name in config.suites:
        checks.extend(_SUITE_RUNNERS[name](config))
    checks.sort(key=lambda c: (c["suite"], c["name"], c["params"]))
    summary = {
        "pass": sum(1 for c in checks if c["status"] == "pass"),
        "fail": sum(1 for c in checks if c["status"] == "fail"),
        "skipped": sum(1 for c in checks if c["status"] == "skipped"),
    }
    return {
        "schema": 1,
        "suites": list(config.suites),
        "checks": checks,
        "summary": summary,
    }


def render_report(report, fmt):
    if fmt == "json":
        return json.dumps(report, indent=2, sort_keys=True) + "\n"
    buf = io.StringIO()
    writer = csv.writer(buf)
    writer.writerow(["suite", "name", "params", "lhs", "rhs", "status"])
    for c in report["checks"]:
        writer.writerow([c["suite"], c["name"], c["params"], c["lhs"], c["rhs"],
                         c["status"]])
    return buf.getvalue()


# ---------------------------------------------------------------------------
# commands
# ---------------------------------------------------------------------------


def cmd_verify(args):
    config = RunConfig(
        suites=tuple(args.suites.split(",")) if args.suites else ALL_SUITES,
        max_n=args.max_n,
        max_q=args.max_q,
        max_degree=args.max_degree,
        max_k=args.max_k,
        jobs=args.jobs,
        budget=args.budget,
        output=args.output,
        fmt=args.format,
    )
    report = run_suite(config)
    text = render_report(report, config.fmt)
    if config.output:
        with open(config.output, "w") as handle:
            handle.write(text)
    sys.stdout.write(text)
    return 1 if report["summary"]["fail"] else 0


def cmd_count(args):
    field = field_from_q(args.q)
    mults = [int(x) for x in args.n.split(",")]
    system = localmodel.build_system(mults)
    if args.d in ("any", "zero", "nonzero"):
        constraint = args.d
    else:
        constraint = int(args.d)
    start = time.perf_counter()
    count = localmodel.count_points(
        system, field, constraint, jobs=args.jobs, naive=args.naive,
        budget=args.budget,
    )
    elapsed = time.perf_counter() - start
    print(json.dumps({"count": count, "elapsed": round(elapsed, 6)}))
    return 0


def cmd_trace(args):
    field = field_from_q(args.q)
    divisor = arith.parse_divisor(field, args.divisor)
    n = args.n if args.n is not None else divisor.degree
    if args.object == "plo":
        value = kcalc.trace_plo(n, divisor)
    elif args.object == "omega":
        value = kcalc.trace_omega_tilde(n, divisor)
    elif args.object == "grpsi":
        value = kcalc.trace_gr_psi(n, divisor)
    elif args.object == "kelement":
        value = kcalc.trace_k_element(kcalc.plo_k_element(n), divisor)
    else:
        raise ValueError(f"unknown trace object {args.object!r}")
    print(json.dumps(value.to_json_map(), sort_keys=True))
    return 0


def cmd_equations(args):
    mults = [int(x) for x in args.n.split(",")]
    system = localmodel.build_system(mults)
    lines = system.equations_text()
    if not lines:
        print("# no constraints")
    for line in lines:
        print(line)
    multi = len(mults) > 1
    for idx, m in enumerate(mults):
        a = f"a{idx + 1}" if multi else "a"
        b = f"b{idx + 1}" if multi else "b"
        print(f"# d = {a}[{-m}]*{b}[0]")
    return 0


def cmd_schur_weyl(args):
    brute = lefschetz.brute_force_schur_weyl(args.k)
    predicted = lefschetz.predicted_schur_weyl(args.k)
    print(f"brute force : {brute.describe()}")
    print(f"predicted   : {predicted.describe()}")
    verdict = "MATCH" if brute == predicted else "MISMATCH"
    print(f"verdict     : {verdict}")
    return 0 if verdict == "MATCH" else 1


def cmd_drinfeld(args):
    field = field_from_q(args.q)
    res = drinfeld.drinfeld_value(
        args.a1, args.a2, field, budget=args.budget, histogram=args.histogram
    )
    payload = {
        "isom": res.isom,
        "boundary_sum": res.boundary_sum,
        "value": res.value,
    }
    if args.include_nonunit_isos:
        payload["nonunit_isoms"] = res.nonunit_isoms
        payload["value_including_nonunit_isos"] = res.value_including_nonunit_isos
    if args.histogram:
        payload["histogram"] = {
            json.dumps(list(profile)): count for profile, count in res.histogram
        }
    print(json.dumps(payload, sort_keys=True))
    return 0


def cmd_character_table(args):
    cts, lams, rows = symrep.character_table(args.k)
    writer = csv.writer(sys.stdout)
    writer.writerow(["irrep\\class"] + [str(list(c)) for c in cts])
    for lam, row in zip(lams, rows):
        writer.writerow([str(list(lam))] + [str(v) for v in row])
    return 0


def build_parser():
    parser = argparse.ArgumentParser(
        prog="vinbun",
        description="verification suites for local-model point counts vs "
        "representation-theoretic trace predictions",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", help="run named verification suites")
    p.add_argument("--suites", default=None,
                   help=f"comma-separated subset of {','.join(ALL_SUITES)}")
    p.add_argument("--max-n", type=int, default=3)
    p.add_argument("--max-q", type=int, default=4)
    p.add_argument("--max-degree", type=int, default=2)
    p.add_argument("--max-k", type=int, default=4)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--budget", type=int, default=None)
    p.add_argument("--output", default=None)
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("count", help="count F_q-points of a local-model fiber")
    p.add_argument("--n", required=True, help="multiplicities, e.g. 2,1")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--d", default="any", help="any|zero|nonzero|<element code>")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--naive", action="store_true")
    p.add_argument("--budget", type=int, default=None)
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("trace", help="emit a Laurent trace value as JSON")
    p.add_argument("--object", choices=("plo", "omega", "grpsi", "kelement"),
                   required=True)
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--divisor", required=True, help="poly:mult,... format")
    p.set_defaults(func=cmd_trace)

    p = sub.add_parser("equations", help="print a fiber equation system")
    p.add_argument("--n", required=True, help="multiplicities, e.g. 2,1")
    p.set_defaults(func=cmd_equations)

    p = sub.add_parser("schur-weyl", help="brute-force vs predicted decomposition")
    p.add_argument("--k", type=int, required=True)
    p.set_defaults(func=cmd_schur_weyl)

    p = sub.add_parser("drinfeld", help="evaluate Drinfeld's function")
    p.add_argument("--a1", type=int, required=True)
    p.add_argument("--a2", type=int, required=True)
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--histogram", action="store_true")
    p.add_argument("--include-nonunit-isos", action="store_true")
    p.add_argument("--budget", type=int, default=None)
    p.set_defaults(func=cmd_drinfeld)

    p = sub.add_parser("character-table", help="print an S_k character table as CSV")
    p.add_argument("--k", type=int, required=True)
    p.set_defaults(func=cmd_character_table)

    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except BudgetExceededError as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return 3
    except (ValueError, kcalc.StalkNotDeterminedError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
