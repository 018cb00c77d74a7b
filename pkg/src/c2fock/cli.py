"""Command line interface: ``c2fock wall|crystal|fock|gb|decompose|verify``.

Exit codes: 0 on success, 1 on invalid input, 2 when a verification suite fails.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .algebra import DELTA, INDICES, NonDivisibleError, Weight
from .crystal import (
    crystal_axiom_problem,
    crystal_graph,
    is_maximal,
    maximal_vectors,
)
from .fock import (
    FockVector,
    act_e,
    act_f,
    check_ef_relation,
    check_serre,
    divided_power_e,
    divided_power_f,
)
from .globalbasis import (
    A_basis,
    G_basis,
    G_table,
    coefficient_classes_ok,
    peel_sequence,
    support_ok,
)
from .youngwall import (
    Partition,
    WallError,
    associated_partition,
    enumerate_walls,
    is_reduced,
    parse_wall,
    reduced_form,
)

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_FAILED = 2


class UsageError(Exception):
    pass


def parse_ground(text: str) -> int:
    t = text.strip()
    if t.upper().startswith("L"):
        t = t[1:]
    if t not in ("0", "1", "2"):
        raise argparse.ArgumentTypeError(f"ground state must be L0, L1 or L2, got {text!r}")
    return int(t)


def _partition_str(p: Partition) -> str:
    return "(" + ",".join(str(x) for x in p.parts) + ")"


def _bool(b: bool) -> str:
    return "true" if b else "false"


# ---------------------------------------------------------------------------
# subcommands


def cmd_wall(args, out) -> int:
    Y = parse_wall(args.literal)
    red = reduced_form(Y)
    lines = [
        f"wall={Y.literal()}",
        "proper=true",
        f"reduced={_bool(is_reduced(Y))}",
        f"maximal={_bool(is_maximal(Y))}",
        f"partition={_partition_str(associated_partition(Y))}",
        f"wt={Y.weight()}",
        "color_counts=" + ",".join(str(c) for c in Y.color_counts()),
        f"reduced_form={red.literal()}",
    ]
    if Y.weight().delta_str():
        lines.insert(6, f"wt_delta={Y.weight().delta_str()}")
    if is_reduced(Y):
        lines.append(f"peel={peel_sequence(Y).monomial() or '-'}")
    out.write("\n".join(lines) + "\n")
    return EXIT_OK


def cmd_crystal(args, out) -> int:
    if args.depth < 0:
        raise UsageError("depth must be nonnegative")
    graph = crystal_graph(args.ground, args.depth, reduced_only=not args.all)
    out.write(graph.to_dot() if args.format == "dot" else graph.to_json())
    return EXIT_OK


def _read_vector(args) -> FockVector:
    if args.vector:
        text = Path(args.vector).read_text(encoding="utf-8")
        try:
            return FockVector.from_json(text)
        except (KeyError, TypeError, json.JSONDecodeError) as exc:
            raise UsageError(f"cannot read vector file {args.vector}: {exc}") from exc
    if args.literal is None:
        raise UsageError("give a wall literal or --vector FILE")
    return FockVector.basis(parse_wall(args.literal))


def cmd_fock(args, out) -> int:
    v = _read_vector(args)
    if args.pow < 0:
        raise UsageError("--pow must be nonnegative")
    if args.plain:
        act = act_e if args.op == "e" else act_f
        for _ in range(args.pow):
            v = act(args.i, v)
    else:
        fn = divided_power_e if args.op == "e" else divided_power_f
        v = fn(args.i, args.pow, v)
    out.write(v.to_json() + "\n")
    return EXIT_OK


def _parse_weight(text: str, g: int) -> Weight:
    try:
        k = tuple(int(x) for x in text.split(","))
    except ValueError as exc:
        raise UsageError(f"weight must be k0,k1,k2, got {text!r}") from exc
    if len(k) != 3 or min(k) < 0:
        raise UsageError(f"weight must be three nonnegative integers, got {text!r}")
    return Weight(g, k)


def cmd_gb(args, out) -> int:
    if args.wall:
        Y = parse_wall(args.wall)
        if not is_reduced(Y):
            raise UsageError(f"NOT_REDUCED: {Y.literal()} is not reduced")
        expansions = [A_basis(Y) if args.kind == "A" else G_basis(Y)]
    else:
        if args.weight is None or args.ground is None:
            raise UsageError("give --wall, or --weight together with --ground")
        w = _parse_weight(args.weight, args.ground)
        table = G_table(args.ground, w)
        expansions = table if args.kind == "G" else [A_basis(E.head) for E in table]
    for E in expansions:
        out.write(json.dumps(E.to_dict()) + "\n")
    return EXIT_OK


def cmd_decompose(args, out) -> int:
    if args.max_delta < 0:
        raise UsageError("--max-delta must be nonnegative")
    g = args.ground
    for m in range(args.max_delta + 1):
        walls = maximal_vectors(g, m)
        out.write(f"m={m} weight={Weight(g, tuple(m * d for d in DELTA)).delta_str()} count={len(walls)}\n")
        for Y in walls:
            p = associated_partition(Y)
            gen = Partition(tuple(x // 4 for x in p.parts))
            out.write(f"  {Y.literal()} partition={_partition_str(gen)}\n")
    return EXIT_OK


def _suite_ef(walls):
    for Y in walls:
        for i in INDICES:
            for j in INDICES:
                if not check_ef_relation(Y, i, j):
                    return Y, f"[e{i},f{j}]"
    return None


def _suite_serre(walls):
    for Y in walls:
        for i in INDICES:
            for j in INDICES:
                if i != j and not check_serre(i, j, Y):
                    return Y, f"Serre ({i},{j})"
    return None


def _suite_crystal(walls):
    for Y in walls:
        msg = crystal_axiom_problem(Y)
        if msg:
            return Y, msg
    return None


def _suite_gb(walls):
    for Y in walls:
        if not is_reduced(Y):
            continue
        A = A_basis(Y)
        if not support_ok(A):
            return Y, "A not triangular"
        G = G_basis(Y)
        if not support_ok(G):
            return Y, "G not triangular"
        if not coefficient_classes_ok(G):
            return Y, "G coefficient outside qZ[q]"
        if not all(c.is_bar_invariant() for _, c in G.gamma):
            return Y, "gamma not bar-invariant"
    return None


SUITES = {
    "ef": _suite_ef,
    "serre": _suite_serre,
    "crystal-axioms": _suite_crystal,
    "gb-props": _suite_gb,
}


def cmd_verify(args, out) -> int:
    if args.max_blocks < 0:
        raise UsageError("--max-blocks must be nonnegative")
    grounds = [args.ground] if args.ground is not None else list(INDICES)
    failed = False
    for g in grounds:
        walls = enumerate_walls(g, args.max_blocks)
        res = SUITES[args.suite](walls)
        head = f"suite={args.suite} ground=L{g} max_blocks={args.max_blocks} walls={len(walls)}"
        if res is None:
            out.write(f"PASS {head}\n")
        else:
            Y, what = res
            failed = True
            out.write(f"FAIL {head} first_counterexample={Y.literal()} check={what}\n")
    return EXIT_FAILED if failed else EXIT_OK


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="c2fock", description="Young walls, Fock space and global bases for C2^(1).")
    sub = p.add_subparsers(dest="command", required=True)

    w = sub.add_parser("wall", help="parse a wall literal and report its invariants")
    w.add_argument("literal")
    w.set_defaults(func=cmd_wall)

    c = sub.add_parser("crystal", help="export the crystal graph")
    c.add_argument("--ground", type=parse_ground, required=True)
    c.add_argument("--depth", type=int, required=True)
    c.add_argument("--format", choices=("dot", "json"), default="dot")
    mode = c.add_mutually_exclusive_group()
    mode.add_argument("--reduced", action="store_true", help="reduced walls only (default)")
    mode.add_argument("--all", action="store_true", help="all proper walls")
    c.set_defaults(func=cmd_crystal)

    f = sub.add_parser("fock", help="apply e_i or f_i to a wall or vector")
    f.add_argument("--op", choices=("e", "f"), required=True)
    f.add_argument("--i", type=int, choices=INDICES, required=True)
    f.add_argument("--pow", type=int, default=1, help="divided power exponent")
    f.add_argument("--plain", action="store_true", help="ordinary power instead of divided power")
    f.add_argument("--vector", help="JSON file holding a vector")
    f.add_argument("literal", nargs="?")
    f.set_defaults(func=cmd_fock)

    b = sub.add_parser("gb", help="A or G basis elements")
    b.add_argument("--kind", choices=("A", "G"), default="G")
    b.add_argument("--wall")
    b.add_argument("--weight", help="k0,k1,k2 for the weight Λ - k0 α0 - k1 α1 - k2 α2")
    b.add_argument("--ground", type=parse_ground)
    b.set_defaults(func=cmd_gb)

    d = sub.add_parser("decompose", help="maximal vectors of weight Λ - mδ")
    d.add_argument("--ground", type=parse_ground, required=True)
    d.add_argument("--max-delta", type=int, required=True)
    d.set_defaults(func=cmd_decompose)

    v = sub.add_parser("verify", help="run a verification suite")
    v.add_argument("--suite", choices=tuple(SUITES), required=True)
    v.add_argument("--ground", type=parse_ground)
    v.add_argument("--max-blocks", type=int, default=8)
    v.set_defaults(func=cmd_verify)
    return p


def main(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INVALID if exc.code else EXIT_OK
    try:
        return args.func(args, out)
    except (WallError, UsageError, NonDivisibleError, ValueError, OSError) as exc:
        err.write(f"error: {exc}\n")
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
