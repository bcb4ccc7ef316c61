"""Command-line front end.

Exit codes: 0 success, 1 verification failure, 2 usage or parse error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from . import jordan, rook
from .bij import (
    classical_bijection,
    format_set_partition,
    parse_set_partition,
    path_from_degrees,
    phi,
    phi_inverse,
    placements_of_type,
    psi,
    psi_inverse,
)
from .oracle import DEFAULT_BUDGET, BudgetExceeded, census
from .partition import format_partition, n_lambda, num_syt, parse_partition, partitions_of
from .qpoly import eval_int, extract_qminus1, format_factored, format_poly


class UsageError(Exception):
    pass


def _csv(rows: list[dict]) -> str:
    buf = io.StringIO()
    if rows:
        w = csv.DictWriter(buf, fieldnames=list(rows[0]), lineterminator="\n")
        w.writeheader()
        w.writerows(rows)
    return buf.getvalue().rstrip("\n")


def _emit(rows: list[dict], fmt: str, text: str) -> str:
    if fmt == "json":
        return json.dumps(rows if len(rows) != 1 else rows[0], indent=2)
    if fmt == "csv":
        return _csv(rows)
    return text


def _partition_arg(text: str):
    try:
        return parse_partition(text)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def flambda_info(lam) -> dict:
    f = jordan.f_lambda(lam)
    m, g = extract_qminus1(f)
    return {
        "lambda": format_partition(lam),
        "expanded": format_poly(f),
        "factored": format_factored(f),
        "G": format_poly(g),
        "degree": f.degree,
        "leading": f.leading,
        "qminus1_multiplicity": m,
        "n_lambda": n_lambda(lam),
        "num_syt": num_syt(lam),
    }


def cmd_flambda(args) -> str:
    info = flambda_info(_partition_arg(args.partition))
    text = "\n".join(f"{k}: {v}" for k, v in info.items())
    return _emit([info], args.format, text)


def cmd_table(args) -> str:
    if args.n < 0:
        raise UsageError("n must be nonnegative")
    rows = []
    for lam in partitions_of(args.n):
        f = jordan.f_lambda(lam)
        rows.append({
            "lambda": format_partition(lam),
            "F": format_factored(f),
            "degree": f.degree,
            "num_syt": num_syt(lam),
            "placements": len(placements_of_type(lam)),
        })
    width = max(len(r["lambda"]) for r in rows)
    text = "\n".join(
        f"{r['lambda']:<{width}}  {r['F']}  deg={r['degree']}  f={r['num_syt']}  C={r['placements']}"
        for r in rows
    )
    return _emit(rows, args.format, text)


def cmd_rook(args) -> str:
    if args.board:
        try:
            board = rook.FerrersBoard(tuple(int(x) for x in args.board.split(",")))
        except ValueError as exc:
            raise UsageError(str(exc)) from None
    else:
        if args.n is None:
            raise UsageError("give --n or --board")
        board = rook.FerrersBoard.staircase(args.n)
    ks = [args.k] if args.k is not None else list(range(board.n + 1))
    rows = []
    for k in ks:
        row = {
            "k": k,
            "R": format_poly(rook.q_rook_poly(board, k)),
            "P": format_factored(rook.p_rank_count(board, k)),
        }
        if board.is_staircase():
            row["S"] = format_poly(rook.q_stirling(board.n, board.n - k))
        rows.append(row)
    text = "\n".join("  ".join(f"{key}={val}" for key, val in r.items()) for r in rows)
    return _emit(rows, args.format, text)


def cmd_placements(args) -> str:
    lam = _partition_arg(args.partition)
    rows = []
    for c in placements_of_type(lam):
        rows.append({
            "placement": rook.format_placement(c),
            "ne": rook.ne(c),
            "weight": format_factored(rook.placement_weight(c)),
            "set_partition": format_set_partition(psi(c)),
        })
    text = "\n".join(f"{r['placement']}  ne={r['ne']}  {r['weight']}  {r['set_partition']}" for r in rows)
    if rows:
        text += f"\nmin ne = {min(r['ne'] for r in rows)}"
    return _emit(rows, args.format, text)


def cmd_biject(args) -> str:
    try:
        if args.inverse:
            if args.which == "phi":
                path = path_from_degrees([int(x) for x in args.value.split(",")] if args.value.strip() not in ("", "-") else [])
                out = rook.format_placement(phi_inverse(path))
            elif args.which == "psi":
                out = rook.format_placement(psi_inverse(parse_set_partition(args.value)))
            else:
                raise UsageError("the classical bijection has no inverse command")
            return _emit([{"input": args.value, "output": out}], args.format, out)
        c = rook.parse_placement(args.value, args.n)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if args.which == "phi":
        path = phi(c)
        chain = " > ".join(format_partition(x) if x else "-" for x in path.chain)
        weights = ", ".join(format_factored(e.weight) for e in path.edges)
        row = {
            "input": args.value,
            "chain": chain,
            "weights": weights,
            "degrees": ",".join(map(str, path.degree_sequence)),
            "type": format_partition(path.end),
        }
        text = f"{chain}\nweights: {weights}\ntype: {row['type']}"
        return _emit([row], args.format, text)
    image = psi(c) if args.which == "psi" else classical_bijection(c)
    out = format_set_partition(image)
    return _emit([{"input": args.value, "output": out}], args.format, out)


def cmd_oracle(args) -> str:
    try:
        cen = census(args.n, args.p, budget=args.budget, shards=args.shards)
    except (BudgetExceeded, ValueError) as exc:
        raise UsageError(str(exc)) from None
    if args.format == "json":
        return cen.to_json()
    if args.format == "csv":
        return cen.to_csv().rstrip("\n")
    lines = [f"n={cen.n} p={cen.p} total={cen.total}"]
    for lam, cnt in cen.counts.items():
        fv = eval_int(jordan.f_lambda(lam), cen.p)
        lines.append(f"{format_partition(lam)}  {cnt}  F={fv}  {'ok' if fv == cnt else 'MISMATCH'}")
    return "\n".join(lines)


def cmd_verify(args):
    from .verify import run_verify

    try:
        primes = tuple(int(x) for x in args.primes.split(",") if x)
    except ValueError:
        raise UsageError(f"bad prime list {args.primes!r}") from None
    report = run_verify(args.n_max, primes, args.budget)
    if args.format == "json":
        out = json.dumps(report.as_dict(), indent=2)
    elif args.format == "csv":
        out = _csv([
            {"name": c.name, "params": json.dumps(c.params, sort_keys=True), "status": "pass" if c.passed else "fail", "detail": c.detail}
            for c in report.checks
        ])
    else:
        lines = [
            f"{'PASS' if c.passed else 'FAIL'}  {c.name} {json.dumps(c.params, sort_keys=True)}"
            + (f"  {c.detail}" if c.detail else "")
            for c in report.checks
        ]
        lines.append(f"{report.passed}/{len(report.checks)} checks passed")
        out = "\n".join(lines)
    return out, (0 if report.ok else 1)


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="trinil", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)

    def fmt(p):
        p.add_argument("--format", choices=("text", "json", "csv"), default="text")

    p = sub.add_parser("flambda", help="F_lambda(q) and its statistics")
    p.add_argument("partition")
    fmt(p)
    p.set_defaults(func=cmd_flambda)

    p = sub.add_parser("table", help="one row per partition of n")
    p.add_argument("n", type=int)
    fmt(p)
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("rook", help="q-rook polynomials, q-Stirling numbers, rank counts")
    p.add_argument("--n", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--board", help="column heights, e.g. 0,1,2,3")
    fmt(p)
    p.set_defaults(func=cmd_rook)

    p = sub.add_parser("placements", help="rook placements of a given partition type")
    p.add_argument("partition")
    fmt(p)
    p.set_defaults(func=cmd_placements)

    p = sub.add_parser("biject", help="apply phi, psi or the classical bijection")
    p.add_argument("which", choices=("phi", "psi", "classical"))
    p.add_argument("value", help='placement "r,c;r,c", set partition "1,2|3", or degrees "0,1,1"')
    p.add_argument("--n", type=int, help="board size (default: largest rook column)")
    p.add_argument("--inverse", action="store_true")
    fmt(p)
    p.set_defaults(func=cmd_biject)

    p = sub.add_parser("oracle", help="brute-force census over F_p")
    p.add_argument("n", type=int)
    p.add_argument("p", type=int)
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    p.add_argument("--shards", type=int, default=1)
    fmt(p)
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("verify", help="run every identity check")
    p.add_argument("--n-max", type=int, default=5)
    p.add_argument("--primes", default="2,3")
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    fmt(p)
    p.set_defaults(func=cmd_verify)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        result = args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    code = 0
    if isinstance(result, tuple):
        result, code = result
    print(result)
    return code


if __name__ == "__main__":
    sys.exit(main())
