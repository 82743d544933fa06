"""Command-line front end.

    jfrac convergent --variant 1 --h 2 [--closed-form]
    jfrac verify --suite all
    jfrac congruence --variant 1 --h 3 --m 3 --x 2 --n 4
    jfrac congruence --h 2 --x 3 --find-m --m-max 10
    jfrac congruence --conjecture --variant 2 --h 3 --x-max 10 --n-max 10

Exit codes: 0 all proven checks pass, 1 a proven check failed, 2 usage error.
Conjecture and remark-range outcomes never change the exit code.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field

from . import congruences, identities
from .algebra import format_rational
from .engine import convergent, telescope_check
from .variants import (VariantId, denominator_closed, k_coeff, numerator_closed,
                       sequence)

SUITES = ("enumeration", "closed-form", "exact-sum", "alt-identity", "telescope",
          "hypergeometric", "addition", "ktilde")


class UsageError(Exception):
    pass


def _emit(obj) -> None:
    print(json.dumps(obj))


def _variants(args) -> list[VariantId]:
    if args.variant is None:
        return [VariantId.V1, VariantId.V2]
    return [args.variant]


def _require(args, *names: str) -> None:
    missing = [n for n in names if getattr(args, n) is None]
    if missing:
        flags = ", ".join("--" + n.replace("_", "-") for n in missing)
        raise UsageError(f"{args.command} requires {flags}")


# -- convergent --------------------------------------------------------------

def cmd_convergent(args) -> int:
    _require(args, "variant", "h")
    if args.h < 0:
        raise UsageError("--h must be >= 0")
    v = args.variant
    pair = convergent(sequence(v), args.h)
    out = {"variant": int(v), "h": args.h, "p": str(pair.p), "q": str(pair.q)}
    status = 0
    if args.closed_form:
        p_cf, q_cf = numerator_closed(v, args.h), denominator_closed(v, args.h)
        match = p_cf == pair.p and q_cf == pair.q
        out.update(p_closed=str(p_cf), q_closed=str(q_cf),
                   verdict="match" if match else "mismatch")
        status = 0 if match else 1
    if args.output == "json":
        _emit(out)
    else:
        print(f"variant {int(v)}, h = {args.h}")
        print(f"P: {out['p']}")
        print(f"Q: {out['q']}")
        if args.closed_form:
            print(f"P (closed form): {out['p_closed']}")
            print(f"Q (closed form): {out['q_closed']}")
            print(f"verdict: {out['verdict']}")
    return status


# -- verify ------------------------------------------------------------------

@dataclass
class SuiteResult:
    suite: str
    label: str
    passed: int = 0
    total: int = 0
    proven: bool = True
    failures: list = field(default_factory=list)

    def add(self, ok: bool, params: dict) -> None:
        self.total += 1
        if ok:
            self.passed += 1
        else:
            self.failures.append(params)

    @property
    def ok(self) -> bool:
        return self.passed == self.total

    def to_dict(self) -> dict:
        return {"suite": self.suite, "label": self.label, "passed": self.passed,
                "total": self.total, "proven": self.proven, "failures": self.failures}

    def line(self) -> str:
        tag = "" if self.proven else " [report only]"
        return f"{self.suite}: {self.passed}/{self.total} {self.label}{tag}"


def _positive(args, name: str, default: int) -> int:
    val = getattr(args, name)
    if val is None:
        return default
    if val <= 0:
        raise UsageError(f"--{name.replace('_', '-')} must be positive")
    return val


def _suite_enumeration(args) -> list[SuiteResult]:
    h_max = _positive(args, "h_max", 10)
    if h_max < 2:
        raise UsageError("--h-max must be >= 2 for enumeration")
    results = []
    for v in _variants(args):
        target = "binom(x+n,n)" if v is VariantId.V1 else "binom(x,n)"
        proven = SuiteResult("enumeration", f"v{int(v)} convergents give {target} for n <= h")
        remark = SuiteResult("enumeration", f"v{int(v)} convergents give {target} for h < n < 2h",
                             proven=False)
        for h in range(2, h_max + 1):
            rep = identities.verify_enumeration(v, h, 2 * h - 1)
            proven.add(rep.holds, {"variant": int(v), "h": h})
            remark.add(rep.notes.get("remark_holds", True), {"variant": int(v), "h": h})
        results += [proven, remark]
    return results


def _suite_closed_form(args) -> list[SuiteResult]:
    h_max = _positive(args, "h_max", 12)
    res = SuiteResult("closed-form", "closed forms equal recurrence output")
    for v in _variants(args):
        for h in range(1, h_max + 1):
            pair = convergent(sequence(v), h)
            ok = pair.p == numerator_closed(v, h) and pair.q == denominator_closed(v, h)
            res.add(ok, {"variant": int(v), "h": h})
    return [res]


def _suite_exact_sum(args) -> list[SuiteResult]:
    n_max = _positive(args, "n_max", 30)
    res = SuiteResult("exact-sum", "finite sums reproduce the binomial")
    for v in _variants(args):
        for n in range(n_max + 1):
            res.add(identities.exact_sum(v, n) == identities.binom_poly(v, n),
                    {"variant": int(v), "n": n})
    return [res]


def _suite_alt_identity(args) -> list[SuiteResult]:
    h_max = _positive(args, "h_max", 10)
    res = SuiteResult("alt-identity", "numerator coefficient identities hold")
    for h in range(1, h_max + 1):
        for n in range(h):
            res.add(identities.alt_coefficient_identity(n, h).holds, {"n": n, "h": h})
    return [res]


def _suite_telescope(args) -> list[SuiteResult]:
    h_max = _positive(args, "h_max", 10)
    res = SuiteResult("telescope", "determinant identities hold")
    for v in _variants(args):
        for h in range(2, h_max + 1):
            res.add(telescope_check(sequence(v), h), {"variant": int(v), "h": h})
    return [res]


def _suite_hypergeometric(args) -> list[SuiteResult]:
    n_max = _positive(args, "n_max", 50)
    res = SuiteResult("hypergeometric", "zero-sums hold")
    for n in range(1, n_max + 1):
        res.add(identities.hypergeometric_zero_sum(n) == 0, {"n": n})
    return [res]


def _suite_addition(args) -> list[SuiteResult]:
    p_max, q_max = _positive(args, "p_max", 8), _positive(args, "q_max", 8)
    res = SuiteResult("addition", "addition formulas hold")
    for v in _variants(args):
        for p in range(p_max + 1):
            for q in range(q_max + 1):
                res.add(identities.addition_check(v, p, q).holds,
                        {"variant": int(v), "p": p, "q": q})
    return [res]


def _suite_ktilde(args) -> list[SuiteResult]:
    p_max = _positive(args, "p_max", 8)
    res = SuiteResult("ktilde", "matrix-recurrence values equal closed-form k")
    for v in _variants(args):
        for p in range(p_max + 1):
            for r in range(p + 1):
                try:
                    ok = identities.ktilde_via_recurrence(r, p, v) == k_coeff(v, r, p)
                except ValueError:
                    ok = False
                res.add(ok, {"variant": int(v), "r": r, "p": p})
    return [res]


_SUITE_FUNCS = {
    "enumeration": _suite_enumeration,
    "closed-form": _suite_closed_form,
    "exact-sum": _suite_exact_sum,
    "alt-identity": _suite_alt_identity,
    "telescope": _suite_telescope,
    "hypergeometric": _suite_hypergeometric,
    "addition": _suite_addition,
    "ktilde": _suite_ktilde,
}


def cmd_verify(args) -> int:
    names = SUITES if args.suite == "all" else (args.suite,)
    results: list[SuiteResult] = []
    for name in names:
        results += _SUITE_FUNCS[name](args)
    for r in results:
        if args.output == "json":
            _emit(r.to_dict())
        else:
            print(r.line())
    return 0 if all(r.ok for r in results if r.proven) else 1


# -- congruence --------------------------------------------------------------

def cmd_congruence(args) -> int:
    _require(args, "h")
    if args.h < 2:
        raise UsageError("--h must be >= 2")
    if args.find_m:
        _require(args, "x", "m_max")
        if args.m_max < args.h:
            raise UsageError("--m-max must be >= --h")
        for m in congruences.find_admissible(args.h, args.x, args.m_max):
            value = congruences.lambda_at(m, args.x)
            row = {"h": args.h, "x": args.x, "m": m, "lambda": format_rational(value),
                   "degenerate": value == 0}
            if args.output == "json":
                _emit(row)
            else:
                flag = " (degenerate)" if value == 0 else ""
                print(f"m = {m}: lambda = {value}{flag}")
        return 0
    _require(args, "variant")
    if args.conjecture:
        _require(args, "x_max", "n_max")
        if args.x_max < 0 or args.n_max < 0:
            raise UsageError("grid bounds must be nonnegative")
        report = congruences.conjecture_scan(args.variant, args.h, args.x_max,
                                             args.n_max, args.form)
        if args.output == "json":
            _emit(report.to_dict())
        else:
            d = report.to_dict()
            print(f"variant {d['variant']} mod {d['h']} ({d['form']}): "
                  f"{d['points'] - len(d['failures'])}/{d['points']} hold, "
                  f"{d['mismatches']} mismatches, {d['nonintegral']} non-integral")
        return 0
    _require(args, "m", "x")
    if args.m < args.h:
        raise UsageError("--m must be >= --h")
    if args.x < 0:
        raise UsageError("--x must be nonnegative")
    if args.n is not None:
        ns = [args.n]
    elif args.n_max is not None:
        ns = list(range(args.n_max + 1))
    else:
        raise UsageError("congruence requires --n or --n-max")
    status = 0
    for n in ns:
        if n < 0:
            raise UsageError("--n must be nonnegative")
        case = congruences.congruence_check(args.variant, args.h, args.m, args.x, n)
        if args.output == "json":
            _emit(case.to_dict())
        else:
            print(f"n = {n}: {case.lhs} vs {case.rhs} mod {case.h} -> "
                  f"{'holds' if case.holds else 'fails'}")
        covered = (case.admissible and not case.degenerate and case.in_hypothesis
                   and case.applicable)
        if covered and not case.holds:
            status = 1
    return status


# -- entry point -------------------------------------------------------------

def _variant_arg(s: str) -> VariantId:
    try:
        return VariantId.parse(s)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="jfrac", description=__doc__.split("\n")[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, default_output="table"):
        p.add_argument("--variant", type=_variant_arg, default=None)
        p.add_argument("--output", choices=("json", "table"), default=default_output)

    p = sub.add_parser("convergent", help="print P_h and Q_h")
    common(p)
    p.add_argument("--h", type=int)
    p.add_argument("--closed-form", action="store_true")

    p = sub.add_parser("verify", help="run identity suites")
    common(p)
    p.add_argument("--suite", choices=SUITES + ("all",), default="all")
    for flag in ("--h-max", "--n-max", "--p-max", "--q-max"):
        p.add_argument(flag, type=int)

    p = sub.add_parser("congruence", help="congruence checks and conjecture scans")
    common(p, default_output="json")
    for flag in ("--h", "--m", "--n", "--x", "--m-max", "--x-max", "--n-max"):
        p.add_argument(flag, type=int)
    p.add_argument("--find-m", action="store_true")
    p.add_argument("--conjecture", action="store_true")
    p.add_argument("--form", choices=("general", "displayed"), default="general")
    return parser


_COMMANDS = {"convergent": cmd_convergent, "verify": cmd_verify,
             "congruence": cmd_congruence}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except (UsageError, ValueError) as exc:
        print(f"jfrac {args.command}: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
