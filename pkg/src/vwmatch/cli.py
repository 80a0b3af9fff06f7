"""Command line front end: ``vwmatch run|bench|gen|check|stats``.

Exit codes: 0 ok, 1 usage, 2 I/O or parse failure, 3 verification failure.
"""

from __future__ import annotations

import argparse
import os
import sys
from typing import Optional, Sequence

from .bench import ALGORITHMS, bench_graph, timed_solve, write_report
from .generate import WeightSpec, generate_random_bipartite, generate_weights, graph_stats
from .graph import VertexWeights
from .matching import matching_weight, validate_matching
from .mmio import (ParseError, read_matching, read_matrix_market, write_matching,
                   write_matrix_market, write_weights)
from .oracle import OracleGuardError, brute_force_mvm, verify_no_augmenting, verify_no_increasing

EXIT_OK, EXIT_USAGE, EXIT_IO, EXIT_VERIFY = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _weights(text: str, g, seed: int) -> VertexWeights:
    try:
        spec = WeightSpec.parse(text, default_seed=seed)
    except ValueError:
        if text.startswith(("random:", "unit")):
            raise UsageError(f"bad --weights value '{text}'") from None
        spec = WeightSpec("file", path=text)
    return generate_weights(g, spec)


def _algo(name: str):
    if name not in ALGORITHMS:
        raise UsageError(f"unknown algorithm '{name}' (choose from {', '.join(ALGORITHMS)})")
    return ALGORITHMS[name]


def _open_out(path: Optional[str]):
    if path is None or path == "-":
        return sys.stdout, False
    return open(path, "w"), True


def cmd_run(args) -> int:
    fn = _algo(args.algo)
    g = read_matrix_market(args.graph)
    w = _weights(args.weights, g, args.seed)
    m, secs = timed_solve(fn, g, w, args.reps)
    weight = matching_weight(m, w)
    out, close = _open_out(args.out)
    try:
        write_matching(m, out, weight)
    finally:
        if close:
            out.close()
    print(f"algorithm={args.algo} weight={weight} cardinality={m.cardinality} "
          f"time_s={secs:.6g}", file=sys.stderr)
    if args.check:
        ok = validate_matching(g, m)
        if args.algo == "exact":
            ok = ok and verify_no_augmenting(g, m) and verify_no_increasing(g, m, w)
        else:
            exact = matching_weight(ALGORITHMS["exact"](g, w), w)
            num, den = (2, 3) if args.algo == "two-thirds" else (1, 2)
            ok = ok and den * weight >= num * exact
        print(f"check={'ok' if ok else 'FAILED'}", file=sys.stderr)
        if not ok:
            return EXIT_VERIFY
    return EXIT_OK


def _graph_list(args) -> list[str]:
    paths = list(args.graph or [])
    if args.graphs:
        with open(args.graphs) as fh:
            base = os.path.dirname(os.path.abspath(args.graphs))
            for line in fh:
                s = line.strip()
                if s and not s.startswith("#"):
                    paths.append(s if os.path.isabs(s) else os.path.join(base, s))
    if not paths:
        raise UsageError("bench needs --graph or --graphs")
    return paths


def cmd_bench(args) -> int:
    algos = [a.strip() for a in args.algos.split(",") if a.strip()]
    for a in algos:
        _algo(a)
    rows = []
    for path in _graph_list(args):
        g = read_matrix_market(path)
        w = _weights(args.weights, g, args.seed)
        name = os.path.splitext(os.path.basename(path))[0]
        rows.extend(bench_graph(name, g, w, algos, args.reps, args.oracle))
    out, close = _open_out(args.out)
    try:
        write_report(rows, algos, out, oracle=args.oracle)
    finally:
        if close:
            out.close()
    return EXIT_OK


def cmd_gen(args) -> int:
    try:
        g = generate_random_bipartite(args.n_s, args.n_t, args.m, args.seed)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    out, close = _open_out(args.out)
    try:
        write_matrix_market(g, out, comment=f"random bipartite graph, seed={args.seed}")
    finally:
        if close:
            out.close()
    if args.weights_out:
        w = _weights(args.weights, g, args.seed)
        with open(args.weights_out, "w") as fh:
            write_weights(w, fh)
    return EXIT_OK


def cmd_check(args) -> int:
    g = read_matrix_market(args.graph)
    w = _weights(args.weights, g, args.seed)
    with open(args.matching) as fh:
        m = read_matching(fh, g.n_s, g.n_t)
    if not validate_matching(g, m):
        print("valid=false")
        return EXIT_VERIFY
    weight = matching_weight(m, w)
    print("valid=true")
    print(f"weight={weight} cardinality={m.cardinality}")
    ok = True
    if args.full or args.max_len is not None:
        max_len = None if args.full else args.max_len
        no_aug = verify_no_augmenting(g, m, max_len)
        no_inc = verify_no_increasing(g, m, w, max_len)
        suffix = "" if max_len is None else f" (max_len={max_len})"
        print(f"no_augmenting={str(no_aug).lower()}{suffix}")
        print(f"no_increasing={str(no_inc).lower()}{suffix}")
        ok = no_aug and no_inc
    if args.oracle:
        try:
            res = brute_force_mvm(g, w)
        except OracleGuardError as exc:
            raise UsageError(str(exc)) from None
        print(f"oracle_weight={res.best_weight} oracle_cardinality={res.best_cardinality}")
        ok = ok and weight == res.best_weight
    return EXIT_OK if ok else EXIT_VERIFY


def cmd_stats(args) -> int:
    print("graph\tV1\tV1_max\tV1_mean\tV2\tV2_max\tV2_mean\tE\torder")
    for path in args.graph:
        st = graph_stats(read_matrix_market(path))
        name = os.path.splitext(os.path.basename(path))[0]
        print(st.row(name, rows_first=True) + "\trows-first")
        print(st.row(name, rows_first=False) + "\tcols-first")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="vwmatch", description="Maximum vertex-weighted matching in bipartite graphs.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(sp, weights_default):
        sp.add_argument("--weights", default=weights_default,
                        help="unit | random:<lo>:<hi>[:<seed>] | file:<path> (default: %(default)s)")
        sp.add_argument("--seed", type=int, default=0,
                        help="seed for random weights without an explicit seed")

    r = sub.add_parser("run", help="solve one graph and print the matching")
    r.add_argument("--graph", required=True)
    r.add_argument("--algo", default="two-thirds")
    r.add_argument("--out")
    r.add_argument("--reps", type=int, default=1)
    r.add_argument("--check", action="store_true", help="verify the result before exiting")
    common(r, "unit")
    r.set_defaults(func=cmd_run)

    b = sub.add_parser("bench", help="graphs x algorithms -> CSV report")
    b.add_argument("--graph", action="append")
    b.add_argument("--graphs", help="file listing one .mtx path per line")
    b.add_argument("--algos", default="exact,two-thirds,half")
    b.add_argument("--out")
    b.add_argument("--reps", type=int, default=3)
    b.add_argument("--oracle", action="store_true", help="add a brute-force column when m <= 24")
    common(b, "random:1:1000")
    b.set_defaults(func=cmd_bench)

    gn = sub.add_parser("gen", help="write a random bipartite graph")
    gn.add_argument("--n-s", type=int, required=True)
    gn.add_argument("--n-t", type=int, required=True)
    gn.add_argument("--m", type=int, required=True)
    gn.add_argument("--out")
    gn.add_argument("--weights-out")
    common(gn, "random:1:1000")
    gn.set_defaults(func=cmd_gen)

    c = sub.add_parser("check", help="validate a matching file and run verifiers")
    c.add_argument("--graph", required=True)
    c.add_argument("--matching", required=True)
    c.add_argument("--full", action="store_true", help="unbounded augmenting/increasing path search")
    c.add_argument("--max-len", type=int, help="bounded path search")
    c.add_argument("--oracle", action="store_true", help="compare with brute force (m <= 24)")
    common(c, "unit")
    c.set_defaults(func=cmd_check)

    s = sub.add_parser("stats", help="vertex counts, degree statistics and edge count")
    s.add_argument("--graph", action="append", required=True)
    s.set_defaults(func=cmd_stats)
    return p


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"vwmatch: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (OSError, ParseError) as exc:
        print(f"vwmatch: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
