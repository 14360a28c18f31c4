"""Command line interface.

Output is JSON by default (deterministic: sorted keys, no incidental
whitespace) with --plain for human-readable tables.  Integers that can
outgrow doubles — counts, ghost components, series and polynomial
coefficients — are serialized as decimal strings.

Exit codes: 0 success, 1 verify-suite failure, 2 parse or input error,
3 enumeration budget exceeded, 4 no rational form within the degree
bound, 5 unsupported scenario or space.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import rat, witt
from .errors import (
    BudgetExceededError,
    MotivicError,
    NoRationalFormError,
    UnsupportedScenarioError,
    UnsupportedSpaceError,
)
from .h2 import (
    Conjugation,
    Frobenius,
    Scenario,
    h2_eval,
    scenario_pairs,
)
from .hilbert import sigma2
from .k0 import k0_class, measure_zeta
from .suites import SUITE_NAMES, run_suite
from .varieties import (
    DisjointUnion,
    closed_point_profile,
    parse_variety,
    point_count,
)

# ---------------------------------------------------------------------------
# serialization helpers


def _ints(values) -> list[str]:
    return [str(v) for v in values]


def _witt_json(w: witt.WittVector) -> dict:
    return witt.to_json(w)


def _rational_json(f: rat.RationalFn) -> dict:
    return rat.rational_to_json(f)


def _weil_json(report: rat.WeilReport) -> dict:
    return {
        "q": report.q,
        "genus": report.genus,
        "passed": report.passed,
        "checks": [
            {"name": name, "passed": ok, "detail": detail}
            for name, ok, detail in report.checks
        ],
    }


def _parse_coeffs(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(part) for part in text.split(",") if part.strip())
    except ValueError as exc:
        raise MotivicError(f"not a comma-separated integer list: {text!r}") from exc


# ---------------------------------------------------------------------------
# command handlers: each returns (payload, exit_code)


def _cmd_count(args) -> tuple[dict, int]:
    expr = parse_variety(args.variety, default_q=args.q)
    counts = [point_count(expr, m) for m in range(1, args.upto + 1)]
    return {"counts": _ints(counts)}, 0


def _cmd_profile(args) -> tuple[dict, int]:
    expr = parse_variety(args.variety, default_q=args.q)
    profile = closed_point_profile(expr, args.upto)
    return {"profile": _ints(profile)}, 0


def _cmd_zeta(args) -> tuple[dict, int]:
    expr = parse_variety(args.variety, default_q=args.q)
    z = measure_zeta(k0_class(expr), args.precision)
    payload: dict = {"witt": _witt_json(z)}
    if args.rational:
        max_degree = args.max_degree
        if max_degree is None:
            max_degree = args.precision // 2
        f = rat.to_rational(z, max_degree)
        if f is None:
            raise NoRationalFormError(
                f"no rational form with degrees <= {max_degree} matches "
                f"the first {args.precision} coefficients"
            )
        payload["rational"] = _rational_json(f)
        if f.denominator == (1, -(expr.q + 1), expr.q):
            payload["weil"] = _weil_json(rat.weil_validate(f, expr.q))
    return payload, 0


def _cmd_witt(args) -> tuple[dict, int]:
    op = args.op
    if op in ("add", "mul"):
        u = witt.witt_vector(_parse_coeffs(args.operands[0]))
        v = witt.witt_vector(_parse_coeffs(args.operands[1]))
        out = witt.witt_add(u, v) if op == "add" else witt.witt_mul(u, v)
        return {"witt": _witt_json(out)}, 0
    if op == "neg":
        u = witt.witt_vector(_parse_coeffs(args.operands[0]))
        return {"witt": _witt_json(witt.witt_neg(u))}, 0
    if op == "ghost":
        u = witt.witt_vector(_parse_coeffs(args.operands[0]))
        return {"ghosts": _ints(witt.ghost(u).ghosts)}, 0
    if op == "from-counts":
        counts = _parse_coeffs(args.operands[0])
        return {"witt": _witt_json(witt.from_pointcounts(counts))}, 0
    if op == "teich":
        (c,) = _parse_coeffs(args.operands[0])
        return {
            "witt": _witt_json(witt.teichmuller(c, args.precision))
        }, 0
    if op == "euler":
        profile = _parse_coeffs(args.operands[0])
        return {
            "witt": _witt_json(witt.euler_product(profile, args.precision))
        }, 0
    raise MotivicError(f"unknown witt operation {op!r}")


def _cmd_rational(args) -> tuple[dict, int]:
    counts = _parse_coeffs(args.counts)
    w = witt.from_pointcounts(counts)
    f = rat.to_rational(w, args.max_degree)
    if f is None:
        raise NoRationalFormError(
            f"no rational form with degrees <= {args.max_degree} matches"
        )
    payload: dict = {"rational": _rational_json(f)}
    if args.weil is not None:
        payload["weil"] = _weil_json(rat.weil_validate(f, args.weil))
    return payload, 0


def _scenario_from_args(args) -> Scenario:
    if args.frob is None and not args.conj:
        raise UnsupportedScenarioError(
            "choose a Galois element: --frob Q or --conj"
        )
    if args.frob is not None and args.conj:
        raise UnsupportedScenarioError("--frob and --conj are exclusive")
    default_q = args.frob if args.frob is not None else 3
    expr = parse_variety(args.space, default_q=default_q)
    k = len(expr.parts) if isinstance(expr, DisjointUnion) else 1
    if args.swap and args.perm:
        raise UnsupportedScenarioError("--swap and --perm are exclusive")
    if args.swap:
        if k != 2:
            raise UnsupportedScenarioError(
                f"--swap needs exactly two components, got {k}"
            )
        perm = (1, 0)
    elif args.perm:
        try:
            perm = tuple(int(part) - 1 for part in args.perm.split())
        except ValueError as exc:
            raise UnsupportedScenarioError(
                f"--perm expects 1-based images like '2 1', got {args.perm!r}"
            ) from exc
    else:
        perm = tuple(range(k))
    galois = Frobenius(args.frob) if args.frob is not None else Conjugation()
    return Scenario(expr, perm, galois)


def _cmd_h2(args) -> tuple[dict, int]:
    scenario = _scenario_from_args(args)
    pairs = scenario_pairs(scenario)
    product = sigma2(pairs)
    value = h2_eval(scenario, ell=args.ell)
    return {
        "value": value,
        "ell": args.ell,
        "symbols": [
            {"a": str(a), "b": str(b), "exponent": k}
            for a, b, k in product.factors
        ],
    }, 0


def _cmd_verify(args) -> tuple[dict, int]:
    result = run_suite(args.suite, seed=args.seed)
    payload = {
        "suite": result.name,
        "checks": result.checks,
        "passed": result.passed,
        "failures": list(result.failures),
    }
    return payload, 0 if result.passed else 1


# ---------------------------------------------------------------------------
# parser


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="motivic",
        description="Point counts, zeta series as Witt vectors, rational "
        "forms, and the Z/2 scenario invariant.",
    )
    parser.add_argument(
        "--plain",
        action="store_true",
        help="human-readable output instead of JSON",
    )
    # accept --plain after the subcommand too; SUPPRESS keeps the
    # subparser from clobbering a --plain given before it
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--plain", action="store_true", default=argparse.SUPPRESS
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("count", parents=[common], help="point counts over F_{q^m}")
    p.add_argument("variety")
    p.add_argument("--upto", type=int, default=6, metavar="M")
    p.add_argument("--q", type=int, default=None, help="default base field")
    p.set_defaults(handler=_cmd_count)

    p = sub.add_parser("profile", parents=[common], help="closed-point counts by degree")
    p.add_argument("variety")
    p.add_argument("--upto", type=int, default=6, metavar="D")
    p.add_argument("--q", type=int, default=None)
    p.set_defaults(handler=_cmd_profile)

    p = sub.add_parser("zeta", parents=[common], help="zeta series as a Witt vector")
    p.add_argument("variety")
    p.add_argument("-n", "--precision", type=int, default=8)
    p.add_argument("--q", type=int, default=None)
    p.add_argument("--rational", action="store_true")
    p.add_argument("--max-degree", type=int, default=None)
    p.set_defaults(handler=_cmd_zeta)

    p = sub.add_parser("witt", parents=[common], help="Witt vector arithmetic")
    p.add_argument(
        "op",
        choices=["add", "mul", "neg", "ghost", "from-counts", "teich", "euler"],
    )
    p.add_argument("operands", nargs="+")
    p.add_argument("-n", "--precision", type=int, default=8)
    p.set_defaults(handler=_cmd_witt)

    p = sub.add_parser("rational", parents=[common], help="fit a rational form to counts")
    p.add_argument("counts", help="comma-separated point counts")
    p.add_argument("--max-degree", type=int, default=2)
    p.add_argument("--weil", type=int, default=None, metavar="Q")
    p.set_defaults(handler=_cmd_rational)

    p = sub.add_parser("h2", parents=[common], help="Z/2 invariant of a scenario")
    p.add_argument("space")
    p.add_argument("--swap", action="store_true")
    p.add_argument("--perm", default=None, help="1-based images, e.g. '2 1'")
    p.add_argument("--frob", type=int, default=None, metavar="Q")
    p.add_argument("--conj", action="store_true")
    p.add_argument("--ell", type=int, default=2)
    p.set_defaults(handler=_cmd_h2)

    p = sub.add_parser("verify", parents=[common], help="run a property suite")
    p.add_argument("suite", choices=list(SUITE_NAMES))
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(handler=_cmd_verify)

    return parser


# ---------------------------------------------------------------------------
# rendering and entry point


def _render_plain(payload: dict, out) -> None:
    for key in sorted(payload):
        value = payload[key]
        if isinstance(value, list) and all(
            not isinstance(v, (dict, list)) for v in value
        ):
            print(f"{key}: {' '.join(str(v) for v in value)}", file=out)
        elif isinstance(value, (dict, list)):
            print(f"{key}:", file=out)
            text = json.dumps(value, indent=2, sort_keys=True)
            for line in text.splitlines():
                print(f"  {line}", file=out)
        else:
            print(f"{key}: {value}", file=out)


def _exit_code_for(exc: MotivicError) -> int:
    if isinstance(exc, BudgetExceededError):
        return 3
    if isinstance(exc, NoRationalFormError):
        return 4
    if isinstance(exc, (UnsupportedScenarioError, UnsupportedSpaceError)):
        return 5
    return 2


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        payload, code = args.handler(args)
    except MotivicError as exc:
        error = {"error": {"code": exc.code, "message": str(exc)}}
        print(json.dumps(error, sort_keys=True, separators=(",", ":")),
              file=sys.stderr)
        return _exit_code_for(exc)
    if args.plain:
        _render_plain(payload, sys.stdout)
    else:
        print(json.dumps(payload, sort_keys=True, separators=(",", ":")))
    return code


if __name__ == "__main__":
    sys.exit(main())
