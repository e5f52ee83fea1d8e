"""Command-line front end.

Exit codes
----------
    0  success
    1  verification or self-check failure
    2  invalid input
    3  game form not tight
    4  size limit exceeded
    5  internal error
"""

from __future__ import annotations

import argparse
import sys
from typing import List, Optional

from .backends.explicit import ExplicitGameForm, first_untight_partition
from .core import Player
from .crosscheck import selfcheck
from .engine import certify_ne, lexsafe_ne
from .errors import InternalError, InvalidInstance, NotTight, SizeLimitExceeded
from .estimator import PLAYERS
from .io import (SCHEMA_VERSION, Instance, build_report, dumps, explicit_instance, labels_of,
                 load_instance, read_json, validate_report)
from .oracle import solve_pm1
from .validation import check_outcome_set

EXIT_OK, EXIT_FAIL, EXIT_INVALID, EXIT_NOT_TIGHT, EXIT_LIMIT, EXIT_INTERNAL = 0, 1, 2, 3, 4, 5


def _limit(args, inst: Instance) -> Optional[int]:
    return args.limit_expansion if args.limit_expansion is not None else inst.limit_expansion


def _explicit(args, inst: Instance) -> ExplicitGameForm:
    oracle = inst.oracle
    if isinstance(oracle, ExplicitGameForm):
        return oracle
    return oracle.expand(_limit(args, inst)).form


def _equilibria(inst: Instance, players, dichotomy: bool):
    pa, pb = inst.preference(Player.ALICE), inst.preference(Player.BOB)
    out = {}
    for who in players:
        own, other = (pa, pb) if who is Player.ALICE else (pb, pa)
        out[who] = lexsafe_ne(inst.oracle, own, other, who, dichotomy=dichotomy)
    return out


def cmd_solve(args) -> int:
    inst = load_instance(args.instance)
    dichotomy = args.dichotomy or inst.dichotomy
    report = build_report(inst, _equilibria(inst, PLAYERS[args.player], dichotomy))
    print(dumps(report), end="")
    if not report["certified"]:
        raise InternalError("computed equilibrium failed certification")
    return EXIT_OK


def cmd_pm1(args) -> int:
    inst = load_instance(args.instance)
    omega_a = check_outcome_set(args.omega_a, inst.oracle)
    res = solve_pm1(inst.oracle, omega_a)
    print(dumps({
        "schema_version": SCHEMA_VERSION,
        "omega_a": labels_of(inst.oracle, omega_a),
        "omega_b": labels_of(inst.oracle, omega_a.complement()),
        "winner": res.winner.value,
        "strategy": inst.oracle.payload_to_json(res.winner, res.strategy.payload),
        "queries_used": res.queries_used,
    }), end="")
    return EXIT_OK


def cmd_tight(args) -> int:
    inst = load_instance(args.instance)
    bad = first_untight_partition(_explicit(args, inst))
    out = {"schema_version": SCHEMA_VERSION, "tight": bad is None, "untight_partition": None}
    if bad is not None:
        out["untight_partition"] = {"omega_a": labels_of(inst.oracle, bad),
                                    "omega_b": labels_of(inst.oracle, bad.complement())}
    print(dumps(out), end="")
    return EXIT_OK


def cmd_expand(args) -> int:
    inst = load_instance(args.instance)
    form = _explicit(args, inst)
    print(dumps(explicit_instance(form, inst.data.get("preferences"))), end="")
    return EXIT_OK


def verify_report(report: dict, inst: Instance, limit: Optional[int] = None) -> List[str]:
    """Problems found when rechecking ``report`` against ``inst``; empty when it holds up."""
    validate_report(report)
    oracle = inst.oracle
    problems = []
    if report["labels"] != list(oracle.labels):
        problems.append("label table differs from the instance")
    if report["backend"] != oracle.backend:
        problems.append(f"backend {report['backend']!r} differs from {oracle.backend!r}")
    if problems:
        return problems
    pa, pb = inst.preference(Player.ALICE), inst.preference(Player.BOB)
    fresh = _equilibria(inst, [Player(k) for k in report["equilibria"]], inst.dichotomy)
    try:
        exp = oracle.expand(limit)
    except SizeLimitExceeded:
        exp = None
    for name, entry in report["equilibria"].items():
        who = Player(name)
        ne = fresh[who]
        try:
            own = check_outcome_set(entry["support_own"], oracle)
            other = check_outcome_set(entry["support_other"], oracle)
            star = oracle.labels.index(entry["ne_outcome"])
            x = oracle.payload_from_json(Player.ALICE, entry["x_strategy"])
            y = oracle.payload_from_json(Player.BOB, entry["y_strategy"])
        except (InvalidInstance, ValueError, TypeError) as exc:
            problems.append(f"{name}: unreadable entry ({exc})")
            continue
        claimed = type(ne)(who, oracle.handle(Player.ALICE, x), oracle.handle(Player.BOB, y),
                           own, other, star, 0, 0)
        if not certify_ne(claimed, pa, pb):
            problems.append(f"{name}: supports and outcome fail the equilibrium conditions")
        if (own, other, star) != (ne.support_own, ne.support_other, ne.ne_outcome):
            problems.append(f"{name}: supports or outcome differ from a fresh solve")
        if exp is None:
            continue
        try:
            xi, yi = exp.row_index(x), exp.col_index(y)
        except InvalidInstance as exc:
            problems.append(f"{name}: {exc}")
        else:
            sx, sy = exp.form.row_support(xi), exp.form.col_support(yi)
            own_s, other_s = (sx, sy) if who is Player.ALICE else (sy, sx)
            if own_s != own or other_s != other:
                problems.append(f"{name}: strategies do not have the reported supports")
            if exp.form.cells[xi][yi] != star:
                problems.append(f"{name}: strategies do not meet in the reported outcome")
    if report["certified"] != (not problems):
        problems.append("certified flag does not match the recheck")
    return problems


def cmd_verify(args) -> int:
    report = read_json(args.report)
    inst = load_instance(args.instance)
    problems = verify_report(report, inst, _limit(args, inst))
    print(dumps({"schema_version": SCHEMA_VERSION, "verified": not problems, "problems": problems}), end="")
    return EXIT_OK if not problems else EXIT_FAIL


def cmd_selfcheck(args) -> int:
    summary = selfcheck(args.seed, args.instances, args.preferences)
    failed = any(v["problems"] for v in summary.values())
    print(dumps({"schema_version": SCHEMA_VERSION, "seed": args.seed, "backends": summary,
                 "ok": not failed}), end="")
    return EXIT_FAIL if failed else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--player", choices=sorted(PLAYERS), default="both")
    common.add_argument("--dichotomy", action="store_true", help="binary search in the lexmax search")
    common.add_argument("--limit-expansion", type=int, metavar="N",
                        help="max strategies per player when expanding to a matrix")
    common.add_argument("--seed", type=int, default=0, help="seed for randomized commands")

    parser = argparse.ArgumentParser(prog="lexsafe", description="Lexsafe Nash equilibria of tight game forms.")
    sub = parser.add_subparsers(dest="command", required=True)
    inst_help = "instance JSON file or bundled fixture name"

    p = sub.add_parser("solve", parents=[common], help="lexsafe equilibria of an instance")
    p.add_argument("instance", help=inst_help)
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("pm1", parents=[common], help="solve one +-1 game")
    p.add_argument("instance", help=inst_help)
    p.add_argument("--omega-a", nargs="*", default=[], metavar="LABEL", help="outcomes won by Alice")
    p.set_defaults(func=cmd_pm1)

    p = sub.add_parser("tight", parents=[common], help="check tightness by brute force")
    p.add_argument("instance", help=inst_help)
    p.set_defaults(func=cmd_tight)

    p = sub.add_parser("expand", parents=[common], help="dump the explicit matrix as an instance")
    p.add_argument("instance", help=inst_help)
    p.set_defaults(func=cmd_expand)

    p = sub.add_parser("verify", parents=[common], help="recheck a solve report")
    p.add_argument("report")
    p.add_argument("instance", help=inst_help)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("selfcheck", parents=[common], help="cross-check random instances against brute force")
    p.add_argument("--instances", type=int, default=10)
    p.add_argument("--preferences", type=int, default=5)
    p.set_defaults(func=cmd_selfcheck)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except NotTight as exc:
        print(f"error: not tight: {exc}", file=sys.stderr)
        return EXIT_NOT_TIGHT
    except SizeLimitExceeded as exc:
        print(f"error: size limit: {exc}", file=sys.stderr)
        return EXIT_LIMIT
    except InvalidInstance as exc:
        print(f"error: invalid input: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except InternalError as exc:
        print(f"error: internal: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    raise SystemExit(main())
