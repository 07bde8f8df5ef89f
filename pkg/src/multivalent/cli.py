"""Command-line front end.

Every JSON argument (series, operator, region, dominant) accepts inline JSON,
a file path, or ``-`` for stdin.  Exit codes: 0 success, 1 a check failed,
2 bad usage or input, 3 a numerical precondition failed.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from pathlib import Path
from typing import Any, Sequence

from .errors import NumericalError, ParameterError
from .omega import (
    PSI_VARIANTS,
    DominantSpec,
    OmegaParams,
    chi_theorem1,
    chi_theorem2,
    omega,
    phi_theorem1,
    psi_theorem2,
)
from .operators import apply, from_descriptor
from .regions import CLASS_IDS, SamplingGrid, boundary_curve, class_check, region_from_json, subordinate_to
from .reports import dumps
from .series import DEFAULT_ORDER, TruncatedSeries, parse_complex
from .transforms import bernardi
from .verify import (
    ACCEPTANCE_EXAMPLES,
    DEFAULT_SEED,
    EXAMPLES,
    example_config,
    q_discrepancy_check,
    reproduce_constants,
    run_identity_suite,
    run_implication_trial,
)

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_NUMERIC = 0, 1, 2, 3
N_RANGE = (8, 1024)
SUITES = ("identities", "constants", "q-discrepancy", "examples", "all")


class UsageError(ParameterError):
    pass


def _read_json(value: str, what: str) -> Any:
    if value == "-":
        text = sys.stdin.read()
    elif value.lstrip().startswith(("{", "[")):
        text = value
    else:
        path = Path(value)
        if not path.is_file():
            raise UsageError(f"{what}: no such file {value!r}")
        text = path.read_text(encoding="utf-8")
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise UsageError(f"{what}: malformed JSON ({exc})") from exc


def _series(args) -> TruncatedSeries:
    f = TruncatedSeries.from_json(_read_json(args.series, "series"))
    if args.N is not None:
        f = TruncatedSeries.from_json({"p": f.p, "N": args.N, "coeffs": f.to_json()["coeffs"]})
    return f


def _operator(args):
    return from_descriptor(_read_json(args.op, "operator"))


def _params(args) -> OmegaParams:
    a = None if args.a is None else _number(args.a, "--a")
    if a is not None and a.imag == 0:
        a = a.real
    return OmegaParams(args.mu, args.nu, a)


def _number(text: str, what: str) -> complex:
    try:
        return parse_complex(json.loads(text))
    except json.JSONDecodeError as exc:
        raise UsageError(f"{what}: expected a number or [re, im], got {text!r}") from exc


def _grid(args) -> SamplingGrid:
    kw = {}
    if getattr(args, "radii", None):
        kw["radii"] = tuple(float(r) for r in args.radii.split(","))
    if getattr(args, "angles", None):
        kw["angular_samples"] = args.angles
    return SamplingGrid(**kw)


def _emit(args, payload: Any) -> None:
    text = dumps(payload, pretty=args.pretty) + "\n"
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _order(value: str) -> int:
    n = int(value)
    if not N_RANGE[0] <= n <= N_RANGE[1]:
        raise argparse.ArgumentTypeError(f"N must be in [{N_RANGE[0]}, {N_RANGE[1]}]")
    return n


def _default_seed() -> int:
    env = os.environ.get("GFT_SEED")
    if env is None:
        return DEFAULT_SEED
    try:
        return int(env)
    except ValueError as exc:
        raise UsageError(f"GFT_SEED must be an integer, got {env!r}") from exc


def cmd_apply(args) -> int:
    _emit(args, apply(_operator(args), _series(args)).to_json())
    return EXIT_OK


def cmd_bernardi(args) -> int:
    f = _series(args)
    if args.alpha is not None:
        alpha = _number(args.alpha, "--alpha")
    elif args.op is not None:
        alpha = _operator(args).alpha_a
    else:
        raise UsageError("bernardi needs --alpha or --op")
    _emit(args, bernardi(f, alpha).to_json())
    return EXIT_OK


def cmd_omega(args) -> int:
    _emit(args, omega(_operator(args), _params(args), _series(args)).to_json())
    return EXIT_OK


def cmd_phi(args) -> int:
    _emit(args, phi_theorem1(_operator(args), _params(args), _series(args)).to_json())
    return EXIT_OK


def cmd_psi(args) -> int:
    _emit(args, psi_theorem2(_operator(args), _params(args), _series(args), variant=args.variant).to_json())
    return EXIT_OK


def cmd_chi(args) -> int:
    dominant = DominantSpec.from_json(_read_json(args.dominant, "dominant"))
    op = _operator(args)
    params = OmegaParams(args.mu, args.nu)
    alpha, alpha1 = op.alpha_a, op.shift_index(1).alpha_a
    N = args.N or DEFAULT_ORDER
    if args.theorem == 1:
        out = chi_theorem1(dominant, alpha, alpha1, params, N)
    else:
        out = chi_theorem2(dominant, alpha, alpha1, params, N, args.variant)
    _emit(args, out.to_json())
    return EXIT_OK


def cmd_check_class(args) -> int:
    verdict = class_check(
        _series(args), args.class_id, alpha=args.alpha, A=args.A, B=args.B, eta=args.eta, grid=_grid(args)
    )
    _emit(args, verdict.to_json())
    return EXIT_OK if verdict.holds else EXIT_FAIL


def cmd_subordinate(args) -> int:
    region = region_from_json(_read_json(args.region, "region"))
    verdict = subordinate_to(_series(args), region, _grid(args))
    _emit(args, verdict.to_json())
    return EXIT_OK if verdict.holds else EXIT_FAIL


def cmd_verify(args) -> int:
    seed = args.seed if args.seed is not None else _default_seed()
    target = args.target
    reports = []
    if target in ("identities", "all"):
        reports += run_identity_suite(trials=args.trials or 50, seed=seed, N=args.N or DEFAULT_ORDER)
    if target == "q-discrepancy":
        reports.append(q_discrepancy_check(N=args.N or DEFAULT_ORDER, seed=seed))
    if target in ("constants", "all"):
        reports.append(reproduce_constants())
    ids = []
    if target in ("examples", "all"):
        ids = list(ACCEPTANCE_EXAMPLES)
    elif target in EXAMPLES:
        ids = [target]
    elif target not in SUITES:
        raise UsageError(f"unknown verify target {target!r}; choose from {list(SUITES) + sorted(EXAMPLES)}")
    for ex in ids:
        cfg = example_config(
            ex,
            trials=args.trials or 200,
            rho=args.rho,
            seed=seed,
            N=args.N or DEFAULT_ORDER,
            grid=_grid(args),
            superordination=args.superordination,
        )
        reports.append(run_implication_trial(cfg, jobs=args.jobs))
    passed = all(r.passed for r in reports)
    if len(reports) == 1:
        _emit(args, reports[0])
    else:
        _emit(args, {"pass": passed, "reports": reports})
    return EXIT_OK if passed else EXIT_FAIL


def cmd_constants(args) -> int:
    report = reproduce_constants()
    _emit(args, report)
    return EXIT_OK if report.passed else EXIT_FAIL


def cmd_boundary(args) -> int:
    region = region_from_json(_read_json(args.region, "region"))
    points = boundary_curve(region, args.n)
    if args.format == "json":
        _emit(args, {"region": region.to_json(), "points": [list(p) for p in points]})
        return EXIT_OK
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["theta", "u", "v"])
    for t, u, v in points:
        writer.writerow([repr(t), repr(u), repr(v)])
    if args.out:
        Path(args.out).write_text(buf.getvalue(), encoding="utf-8")
    else:
        sys.stdout.write(buf.getvalue())
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--N", type=_order, default=None, help="truncation order (8..1024)")
    common.add_argument("--out", default=None, help="write output here instead of stdout")
    common.add_argument("--pretty", action="store_true", help="round floats to 6 significant digits")

    grid = argparse.ArgumentParser(add_help=False)
    grid.add_argument("--radii", default=None, help="comma-separated sampling radii")
    grid.add_argument("--angles", type=int, default=None, help="samples per circle")

    exps = argparse.ArgumentParser(add_help=False)
    exps.add_argument("--mu", type=float, required=True)
    exps.add_argument("--nu", type=float, required=True)
    exps.add_argument("--a", default=None, help="operator index override")

    parser = argparse.ArgumentParser(prog="multivalent", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("apply", parents=[common], help="apply an operator to a series")
    p.add_argument("--op", required=True)
    p.add_argument("--series", required=True)
    p.set_defaults(func=cmd_apply)

    p = sub.add_parser("bernardi", parents=[common], help="Bernardi-type integral transform")
    p.add_argument("--series", required=True)
    p.add_argument("--alpha", default=None, help="alpha_a (number or [re, im])")
    p.add_argument("--op", default=None, help="take alpha_a from this operator")
    p.set_defaults(func=cmd_bernardi)

    for name, func, help_text in (
        ("omega", cmd_omega, "Omega^a_{mu,nu}(f)"),
        ("phi", cmd_phi, "the first-order expression Phi"),
        ("psi", cmd_psi, "the integral-transform expression Psi"),
    ):
        p = sub.add_parser(name, parents=[common, exps], help=help_text)
        p.add_argument("--op", required=True)
        p.add_argument("--series", required=True)
        if name == "psi":
            p.add_argument("--variant", choices=PSI_VARIANTS, default="printed")
        p.set_defaults(func=func)

    p = sub.add_parser("chi", parents=[common], help="series of the dominant expression chi")
    p.add_argument("--dominant", required=True)
    p.add_argument("--op", required=True, help="operator supplying alpha_a and alpha_{a+1}")
    p.add_argument("--mu", type=float, required=True)
    p.add_argument("--nu", type=float, required=True)
    p.add_argument("--theorem", type=int, choices=(1, 2), default=1)
    p.add_argument("--variant", choices=PSI_VARIANTS, default="printed")
    p.set_defaults(func=cmd_chi)

    p = sub.add_parser("check-class", parents=[common, grid], help="sampled function-class membership")
    p.add_argument("--series", required=True)
    p.add_argument("--class", dest="class_id", required=True, choices=CLASS_IDS)
    p.add_argument("--alpha", type=float, default=0.0)
    p.add_argument("--A", type=float, default=1.0)
    p.add_argument("--B", type=float, default=-1.0)
    p.add_argument("--eta", type=float, default=None)
    p.set_defaults(func=cmd_check_class)

    p = sub.add_parser("subordinate", parents=[common, grid], help="sampled containment q(U) in a region")
    p.add_argument("--series", required=True)
    p.add_argument("--region", required=True)
    p.set_defaults(func=cmd_subordinate)

    p = sub.add_parser("verify", parents=[common, grid], help="run identity suites, constants or examples")
    p.add_argument("target", help=f"one of {', '.join(SUITES)} or an example id ({', '.join(sorted(EXAMPLES))})")
    p.add_argument("--trials", type=int, default=None)
    p.add_argument("--rho", type=float, default=0.08)
    p.add_argument("--seed", type=int, default=None, help="default 7, or $GFT_SEED")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--superordination", action="store_true", help="add the non-rigorous reverse check")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("constants", parents=[common], help="table of closed-form constants")
    p.set_defaults(func=cmd_constants)

    p = sub.add_parser("boundary", parents=[common], help="boundary curve samples as CSV or JSON")
    p.add_argument("--region", required=True)
    p.add_argument("--n", type=int, default=360)
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.set_defaults(func=cmd_boundary)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ParameterError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except NumericalError as exc:
        print(f"numerical error: {exc}", file=sys.stderr)
        return EXIT_NUMERIC
    except (OSError, ValueError, TypeError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
