"""Command-line front end.

Exit codes: 0 success, 1 negative verdict or fewer kings than requested,
2 usage error, 3 invalid input.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import bench
from .errors import ConfigError, KingsError
from .generators import (
    all_kings_tournament,
    delta_sample,
    hard_instance,
    random_tournament,
    transitive_tournament,
)
from .reduction import brute_force_eaf, build_king_instance, parse_tripartite, solve_eaf_via_kings
from .search import FEWER_THAN_K, run_algorithm
from .tournament import parse, serialize

EXIT_OK, EXIT_NEGATIVE, EXIT_USAGE, EXIT_INVALID = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    return Path(path).read_text()


def _write(path: str | None, text: str) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        Path(path).write_text(text)


def _need(args, *names):
    for name in names:
        if getattr(args, name) is None:
            raise UsageError(f"--{name} is required for --kind {args.kind}")


def cmd_gen(args) -> int:
    manifest = None
    if args.kind == "random":
        _need(args, "n")
        t = random_tournament(args.n, args.seed)
    elif args.kind == "transitive":
        _need(args, "n")
        t = transitive_tournament(args.n)
    elif args.kind == "allkings":
        size = args.m if args.m is not None else args.n
        if size is None:
            raise UsageError("--m (or --n) is required for --kind allkings")
        t = all_kings_tournament(size, args.seed)
    elif args.kind == "hard":
        _need(args, "m")
        inst = hard_instance(args.m, args.seed)
        t, manifest = inst.t, inst.manifest()
    else:
        _need(args, "m", "k")
        sample = delta_sample(args.m, args.k, args.seed)
        t, manifest = sample.t, sample.manifest()
    _write(args.output, serialize(t))
    if manifest is not None and args.output not in (None, "-"):
        Path(args.output + ".parts").write_text(manifest)
    return EXIT_OK


def cmd_find(args) -> int:
    t = parse(_read(args.input))
    result = run_algorithm(args.algo, t, k=args.k, seed=args.seed)
    if args.json:
        print(json.dumps(result.record(t.n)))
    else:
        print("kings: " + " ".join(map(str, sorted(result.kings))))
        print(f"certificate: {result.certificate}")
        print(f"queries: total={result.stats.total} distinct={result.stats.distinct}")
    if result.certificate == FEWER_THAN_K or len(result.kings) < args.k:
        return EXIT_NEGATIVE
    return EXIT_OK


def cmd_verify(args) -> int:
    t = parse(_read(args.input))
    print(f"ok: tournament on {t.n} vertices")
    if args.vertex is not None:
        if not 0 <= args.vertex < t.n:
            raise UsageError(f"vertex {args.vertex} out of range for n={t.n}")
        king = t.is_king(args.vertex)
        print(f"vertex {args.vertex}: {'king' if king else 'not a king'}")
        return EXIT_OK if king else EXIT_NEGATIVE
    return EXIT_OK


def cmd_bench(args) -> int:
    plan = bench.parse_plan(_read(args.plan))
    records = bench.run_bench(plan)
    text = bench.records_to_csv(records)
    _write(args.output, text)
    if args.output not in (None, "-"):
        sys.stdout.write(bench.summarize(records).format())
    return EXIT_OK


def cmd_reduce(args) -> int:
    g = parse_tripartite(_read(args.input))
    inst = build_king_instance(g, args.seed)
    _write(args.output, serialize(inst.t))
    threshold = f"k={inst.threshold}\n"
    if args.output in (None, "-"):
        sys.stderr.write(threshold)
    else:
        sys.stdout.write(threshold)
    if not args.check:
        return EXIT_OK
    direct = brute_force_eaf(g)
    via = solve_eaf_via_kings(g, args.seed)
    agree = direct == via
    out = sys.stdout if args.output not in (None, "-") else sys.stderr
    out.write(f"agree: {'yes' if agree else 'no'}\n")
    out.write(f"verdict: {'yes' if via.verdict else 'no'}\n")
    out.write("witnesses: " + " ".join(map(str, sorted(via.witnesses))) + "\n")
    return EXIT_OK if agree and via.verdict else EXIT_NEGATIVE


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="tkings", description="Find kings in tournaments.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    g = sub.add_parser("gen", help="generate a tournament")
    g.add_argument("--kind", required=True, choices=["random", "transitive", "allkings", "hard", "delta"])
    g.add_argument("--n", type=int)
    g.add_argument("--m", type=int)
    g.add_argument("--k", type=int)
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("-o", "--output")
    g.set_defaults(func=cmd_gen)

    f = sub.add_parser("find", help="run a king finder")
    f.add_argument("--algo", required=True, choices=["rand", "maxdeg", "det", "three", "three-det", "kn2", "matmul"])
    f.add_argument("--k", type=int, default=1)
    f.add_argument("-i", "--input", default="-")
    f.add_argument("--seed", type=int, default=0)
    f.add_argument("--json", action="store_true")
    f.set_defaults(func=cmd_find)

    v = sub.add_parser("verify", help="validate a tournament file")
    v.add_argument("-i", "--input", default="-")
    v.add_argument("--vertex", type=int)
    v.set_defaults(func=cmd_verify)

    b = sub.add_parser("bench", help="run a benchmark plan")
    b.add_argument("--plan", required=True)
    b.add_argument("-o", "--output")
    b.set_defaults(func=cmd_bench)

    r = sub.add_parser("reduce", help="reduce a tripartite instance to a king instance")
    r.add_argument("-i", "--input", default="-")
    r.add_argument("-o", "--output")
    r.add_argument("--seed", type=int, default=0)
    r.add_argument("--check", action="store_true")
    r.set_defaults(func=cmd_reduce)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except UsageError as e:
        print(f"usage error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except ConfigError as e:
        print(f"configuration error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except (KingsError, OSError) as e:
        print(f"invalid input: {e}", file=sys.stderr)
        return EXIT_INVALID
    except bench.ValidityError as e:
        print(f"validity check failed: {e}", file=sys.stderr)
        return EXIT_INVALID


cli_dispatch = main


if __name__ == "__main__":
    sys.exit(main())
