"""Command-line front door: integrate expressions, run the verification
suite, emit convergence tables, and evaluate the constructed functions.

Exit codes: 0 success, 1 usage/domain/parse error, 2 non-convergence,
3 verification failures.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys
from dataclasses import dataclass
from typing import Optional

from .elementary import (
    e_const,
    exp_construct,
    hyperbolic,
    inverse_fn,
    log_construct,
    pow_construct,
)
from .errors import (
    DivergenceError,
    DomainError,
    EvaluationError,
    HypothesisViolation,
    InvalidArgumentError,
    ParseError,
)
from .expr import eval_expr, parse
from .integrator import (
    DEFAULT_MAX_N,
    IntegrationResult,
    convergence_report,
    integrate,
    integrate_improper,
)
from .partitions import LEFT, MIDPOINT, RIGHT, TagRule
from .theorems import (
    CheckReport,
    derivative_table_check,
    functional_equation_check,
    product_chain_check,
    reports_to_csv,
    run_catalog,
    substitution_showcases,
)

_RULES: dict[str, TagRule] = {"left": LEFT, "right": RIGHT, "midpoint": MIDPOINT}

_MAX_N_FLOOR = 2 ** 6
_MAX_N_CEIL = 2 ** 26


@dataclass(frozen=True)
class CliConfig:
    """Resolved run settings shared by the subcommands."""

    tolerance: float
    max_n: int
    rule: str
    output: str


class _UsageError(Exception):
    pass


class _ArgumentParser(argparse.ArgumentParser):
    # argparse exits with status 2 on bad usage; the contract here is 1.
    def error(self, message: str):
        raise _UsageError(message)


def _resolve_max_n(flag_value: Optional[int]) -> int:
    origin = "--max-n"
    if flag_value is not None:
        n = flag_value
    else:
        raw = os.environ.get("RF_MAX_N")
        if raw is None or raw == "":
            return DEFAULT_MAX_N
        origin = "RF_MAX_N"
        try:
            n = int(raw)
        except ValueError:
            raise InvalidArgumentError(f"RF_MAX_N must be an integer, got {raw!r}")
    if n < _MAX_N_FLOOR or n > _MAX_N_CEIL or n & (n - 1):
        raise InvalidArgumentError(
            f"{origin} must be a power of two between 2^6 and 2^26, got {n}"
        )
    return n


def _config(args: argparse.Namespace, default_tol: float, default_output: str) -> CliConfig:
    tol = args.tol if args.tol is not None else default_tol
    if not tol > 0:
        raise InvalidArgumentError(f"--tol must be positive, got {tol}")
    output = args.output if args.output is not None else default_output
    return CliConfig(tol, _resolve_max_n(args.max_n), args.rule, output)


def _f9(v: float) -> str:
    return format(v, ".9g")


def _f17(v: float) -> str:
    return format(v, ".17g")


def _emit_integration(result: IntegrationResult, output: str) -> None:
    if output == "human":
        print(f"value {_f9(result.value)}")
        print(f"error estimate {_f9(result.error_estimate)}")
        print(f"n {result.n_final}")
        print(f"evaluations {result.evaluations}")
        print(f"converged {'yes' if result.converged else 'no'}")
    elif output == "csv":
        print("value,error_estimate,n_final,evaluations,converged")
        print(
            f"{_f17(result.value)},{_f17(result.error_estimate)},"
            f"{result.n_final},{result.evaluations},"
            f"{'true' if result.converged else 'false'}"
        )
    else:
        print(json.dumps({
            "value": result.value,
            "error_estimate": result.error_estimate,
            "n_final": result.n_final,
            "evaluations": result.evaluations,
            "converged": result.converged,
        }, indent=2))


def _cmd_integrate(args: argparse.Namespace) -> int:
    cfg = _config(args, 1e-8, "human")
    tree = parse(args.expr)
    rule = _RULES[cfg.rule]

    def f(t: float) -> float:
        return eval_expr(tree, t)

    if args.improper is not None:
        result = integrate_improper(
            f, args.a, args.b, args.improper, cfg.tolerance, rule=rule, max_n=cfg.max_n
        )
    else:
        result = integrate(f, args.a, args.b, cfg.tolerance, rule=rule, max_n=cfg.max_n)
    _emit_integration(result, cfg.output)
    if not result.converged:
        print(f"did not converge within n <= {cfg.max_n}", file=sys.stderr)
        return 2
    return 0


def _emit_reports(reports: list[CheckReport], output: str) -> None:
    if output == "csv":
        sys.stdout.write(reports_to_csv(reports))
        return
    if output == "json":
        print(json.dumps([{
            "name": r.name,
            "lhs": r.lhs,
            "rhs": r.rhs,
            "abs_diff": r.abs_diff,
            "tol": r.tol,
            "pass": r.passed,
            "anchor": r.anchor,
        } for r in reports], indent=2))
        return
    width = max((len(r.name) for r in reports), default=4)
    for r in reports:
        status = "PASS" if r.passed else "FAIL"
        print(
            f"{status} {r.name:<{width}} abs_diff={_f9(r.abs_diff)} "
            f"tol={_f9(r.tol)} [{r.anchor}]"
        )
    passed = sum(1 for r in reports if r.passed)
    print(f"{passed}/{len(reports)} checks passed")


def _cmd_verify(args: argparse.Namespace) -> int:
    cfg = _config(args, 1e-6, "human")
    # Finite-difference rows carry an h^2 truncation floor; pushing their
    # tolerance below 1e-5 would fail for reasons unrelated to the tower.
    fd_tol = max(cfg.tolerance, 1e-5)
    jobs = args.jobs if args.jobs is not None else (os.cpu_count() or 1)
    reports = run_catalog(cfg.tolerance, jobs=jobs, name_filter=args.filter)
    try:
        shows = substitution_showcases(cfg.tolerance)
    except HypothesisViolation as exc:
        # A tolerance below the fp floor makes the showcase hypothesis
        # checks unsatisfiable; that is a failing row, not a crash.
        shows = [CheckReport(
            "substitution-showcases", math.nan, math.nan, math.inf,
            cfg.tolerance, False, str(exc).replace(",", ";"),
        )]
    rest = (
        derivative_table_check(fd_tol)
        + product_chain_check(fd_tol)
        + shows
        + [functional_equation_check(args.seed)]
    )
    if args.filter is not None:
        rest = [r for r in rest if args.filter in r.name]
    reports.extend(rest)
    _emit_reports(reports, cfg.output)
    if all(r.passed for r in reports):
        return 0
    return 3


def _cmd_converge(args: argparse.Namespace) -> int:
    cfg = _config(args, 1e-8, "csv")
    tree = parse(args.expr)
    if args.n_from < 1:
        raise InvalidArgumentError(f"--n-from must be >= 1, got {args.n_from}")
    if args.n_to < args.n_from:
        raise InvalidArgumentError("--n-to must be >= --n-from")
    ns = [args.n_from]
    while ns[-1] * 2 <= min(args.n_to, cfg.max_n):
        ns.append(ns[-1] * 2)

    def f(t: float) -> float:
        return eval_expr(tree, t)

    report = convergence_report(f, args.a, args.b, _RULES[cfg.rule], ns, exact=args.exact)
    if cfg.output == "csv":
        sys.stdout.write(report.to_csv())
    elif cfg.output == "json":
        print(json.dumps({
            "rows": [[n, value, diff] for n, value, diff in report.rows],
            "estimated_order": report.estimated_order,
        }, indent=2))
    else:
        for n, value, diff in report.rows:
            tail = "" if diff is None else f" diff={_f9(diff)}"
            print(f"n={n} value={_f9(value)}{tail}")
        if report.estimated_order is not None:
            print(f"estimated order {_f9(report.estimated_order)}")
    return 0


_EVAL_HYPERBOLIC = ("sinh", "cosh", "tanh")
_EVAL_INVERSE = ("arsinh", "arcosh", "artanh", "arcsin", "arctan")
_EVAL_NAMES = ("log", "exp", "e", "pow") + _EVAL_HYPERBOLIC + _EVAL_INVERSE


def _cmd_eval(args: argparse.Namespace) -> int:
    cfg = _config(args, 1e-8, "human")
    eps = args.eps
    if not eps > 0:
        raise InvalidArgumentError(f"--eps must be positive, got {eps}")
    name = args.fname
    if name not in _EVAL_NAMES:
        raise _UsageError(f"unknown function {name!r}; choose from {', '.join(_EVAL_NAMES)}")
    arity = 0 if name == "e" else 2 if name == "pow" else 1
    if len(args.args) != arity:
        raise _UsageError(f"{name} takes {arity} argument(s), got {len(args.args)}")
    bound: Optional[float] = None
    if name == "log":
        approx = log_construct(args.args[0], eps)
        value, bound = approx.value, approx.bound
    elif name == "exp":
        value = exp_construct(args.args[0], eps)
    elif name == "e":
        value = e_const(eps)
    elif name == "pow":
        value = pow_construct(args.args[0], args.args[1], eps)
    elif name in _EVAL_HYPERBOLIC:
        value = hyperbolic(name, args.args[0], eps)
    else:
        value = inverse_fn(name, args.args[0], eps)
    if cfg.output == "human":
        note = "" if bound is None else f" (bound <= {bound:.3g})"
        print(f"{value!r}{note}")
    elif cfg.output == "csv":
        print("fname,value,bound")
        print(f"{name},{_f17(value)},{'' if bound is None else _f17(bound)}")
    else:
        print(json.dumps({"fname": name, "value": value, "bound": bound}, indent=2))
    return 0


def _add_common(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--tol", type=float, default=None,
                     help="target tolerance (default: 1e-8, verify: 1e-6)")
    sub.add_argument("--max-n", type=int, default=None, dest="max_n",
                     help="refinement cap, a power of two in [2^6, 2^26]")
    sub.add_argument("--rule", choices=sorted(_RULES), default="midpoint",
                     help="tag rule for Riemann sums")
    sub.add_argument("--output", choices=("human", "csv", "json"), default=None,
                     help="report format (default human; converge: csv)")
    sub.add_argument("--seed", type=int, default=42, help="seed for sampled checks")
    sub.add_argument("--jobs", type=int, default=None,
                     help="worker threads for independent checks")


def _build_parser() -> _ArgumentParser:
    parser = _ArgumentParser(
        prog="rfcalc",
        description="Riemann-sum calculus toolkit: integration, verification, convergence tables.",
    )
    commands = parser.add_subparsers(dest="command", required=True)

    p_int = commands.add_parser("integrate", help="integrate an expression in t")
    p_int.add_argument("expr", help="integrand, e.g. 't^2' or '1/sqrt(1-t^2)'")
    p_int.add_argument("a", type=float, help="lower endpoint")
    p_int.add_argument("b", type=float, help="upper endpoint")
    p_int.add_argument("--improper", choices=("lower", "upper"), default=None,
                       help="treat this endpoint as singular")
    _add_common(p_int)
    p_int.set_defaults(func=_cmd_integrate)

    p_ver = commands.add_parser("verify", help="run the identity catalog and theorem checks")
    p_ver.add_argument("--filter", default=None,
                       help="only run checks whose name contains this substring")
    _add_common(p_ver)
    p_ver.set_defaults(func=_cmd_verify)

    p_con = commands.add_parser("converge", help="tabulate Riemann sums over doubling n")
    p_con.add_argument("expr", help="integrand, e.g. 'exp(t)'")
    p_con.add_argument("a", type=float, help="lower endpoint")
    p_con.add_argument("b", type=float, help="upper endpoint")
    p_con.add_argument("--n-from", type=int, default=8, dest="n_from",
                       help="first panel count")
    p_con.add_argument("--n-to", type=int, default=65536, dest="n_to",
                       help="last panel count (rounded down to the doubling ladder)")
    p_con.add_argument("--exact", type=float, default=None,
                       help="known exact value; diffs become true errors")
    _add_common(p_con)
    p_con.set_defaults(func=_cmd_converge)

    p_eval = commands.add_parser("eval", help="evaluate a constructed function directly")
    p_eval.add_argument("fname", help=f"one of: {', '.join(_EVAL_NAMES)}")
    p_eval.add_argument("args", type=float, nargs="*", help="numeric argument(s)")
    p_eval.add_argument("--eps", type=float, default=1e-12,
                        help="construction accuracy target")
    _add_common(p_eval)
    p_eval.set_defaults(func=_cmd_eval)

    return parser


def main(argv: Optional[list[str]] = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except _UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except DivergenceError as exc:
        print(f"error: divergent: {exc}", file=sys.stderr)
        return 1
    except (DomainError, InvalidArgumentError, EvaluationError, HypothesisViolation) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    raise SystemExit(main())
