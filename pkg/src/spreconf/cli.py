"""Command-line entry point.

Exit status: 0 success, 1 "no" verdict or failed verification, 2 usage or
input error, 3 path cap or other limit exceeded.
"""
from __future__ import annotations

import argparse
import json
import logging
import sys
from fractions import Fraction
from pathlib import Path as FsPath
from typing import Sequence

from . import costs as cost_mod
from . import reductions
from .errors import CapExceeded, ReconfigError
from .formats import InstanceFile, format_instance, format_path, format_sequence, parse_costs, parse_instance, parse_path
from .generators import gadget_chain, hypercube_instance
from .graph import StInstance, count_shortest_paths, iter_shortest_paths
from .oracle import INFINITE, ReconfigSequence, reconfig_diameter, shortest_reconfig_sequence
from .solvers.arcs import circular_arc_solve
from .solvers.bounded import bounded_diameter_solve
from .solvers.circle import circle_solve
from .solvers.hypercube import hypercube_solve
from .solvers.permutation import permutation_solve
from .solvers.reps import ArcRep, ChordRep, HypercubeRep, PermutationRep
from .solvers.weakly_modular import weakly_modular_solve
from .verify import CLASSES, verify

EXIT_OK, EXIT_NO, EXIT_USAGE, EXIT_CAP = 0, 1, 2, 3

EPILOG = """\
instance files (one record per line, '#' starts a comment):
  n m                      header
  e u v                    m edge lines, ids 0..n-1
  s <id>, t <id>           endpoints
  perm s0 .. s(n-1)        optional permutation (0- or 1-based)
  chords / arcs            optional, followed by n lines 'v a b'
  hypercube d s_bits t_bits

An INSTANCE argument may also be gen:chain:G:L or gen:hypercube:D:S:T.
Path files hold whitespace-separated vertex ids; a literal such as
'0,3,5' is accepted in place of a file.  Cost files list p_1 .. p_n
(integers or fractions like 3/2), or a literal list such as '1,3'.  Sequences print as 'steps <count> k
<k>' followed by one path per line.  RECONFIG_PATH_CAP overrides the
default oracle path cap.
"""


class UsageError(Exception):
    pass


def _load(spec: str) -> InstanceFile:
    if spec.startswith("gen:"):
        parts = spec.split(":")
        try:
            if parts[1] == "chain" and len(parts) == 4:
                return InstanceFile(gadget_chain(int(parts[2]), int(parts[3])))
            if parts[1] == "hypercube" and len(parts) == 5:
                d, s_bits, t_bits = int(parts[2]), parts[3], parts[4]
                inst, _ = hypercube_instance(d, s_bits, t_bits)
                return InstanceFile(inst, hypercube=(d, s_bits, t_bits))
        except ValueError as exc:
            raise UsageError(f"bad generator spec {spec!r}: {exc}") from None
        raise UsageError(f"bad generator spec {spec!r}; use gen:chain:G:L or gen:hypercube:D:S:T")
    try:
        text = FsPath(spec).read_text(encoding="utf-8")
    except OSError as exc:
        raise UsageError(f"cannot read {spec}: {exc.strerror}") from None
    return parse_instance(text)


def _path_arg(value: str | None, name: str) -> tuple[int, ...]:
    if value is None:
        raise UsageError(f"--{name} is required")
    file = FsPath(value)
    if file.exists():
        return parse_path(file.read_text(encoding="utf-8"))
    try:
        return tuple(int(x) for x in value.replace(",", " ").split())
    except ValueError:
        raise UsageError(f"--{name}: no such file and not a vertex list: {value!r}") from None


def _emit(args, obj: dict, text: str) -> None:
    if args.json:
        print(json.dumps(obj, sort_keys=True, default=str))
    else:
        sys.stdout.write(text if text.endswith("\n") else text + "\n")


def _report_sequence(args, ok: bool, seq: ReconfigSequence | None, k: int, extra: dict | None = None) -> int:
    obj: dict = {"verdict": "yes" if ok else "no", **(extra or {})}
    text = f"verdict {obj['verdict']}\n"
    if seq is not None:
        obj.update(steps=len(seq), k=k, paths=[list(p) for p in seq.paths()], via_oracle=seq.via_oracle)
        text += format_sequence(seq, k)
        if seq.via_oracle:
            print("note: sequence completed by the oracle after a merge stall", file=sys.stderr)
    _emit(args, obj, text)
    return EXIT_OK if ok else EXIT_NO


def _rep(inf: InstanceFile, cls: str):
    need = {"permutation": inf.perm, "circle": inf.chords, "arc": inf.arcs, "hypercube": inf.hypercube}[cls]
    if need is None:
        raise UsageError(f"class {cls} needs a representation block in the instance file")
    if cls == "permutation":
        return PermutationRep(inf.perm)
    if cls == "circle":
        return ChordRep(inf.chords)
    if cls == "arc":
        return ArcRep(inf.arcs)
    return HypercubeRep(inf.hypercube[0])  # type: ignore[index]


def cmd_solve(args) -> int:
    inf = _load(args.instance)
    inst = inf.instance
    p, q = _path_arg(args.p, "p"), _path_arg(args.q, "q")
    cls = args.cls
    if cls == "hypercube":
        seq = hypercube_solve(_rep(inf, cls), inst.s, inst.t, p, q)
        return _report_sequence(args, True, seq, 1)
    if cls == "interval":
        return _report_sequence(args, True, weakly_modular_solve(inst, p, q), 1)
    if cls == "bounded":
        ok, seq = bounded_diameter_solve(inst, p, q, c_max=args.c_max)
        return _report_sequence(args, ok, seq, 1)
    solve = {"permutation": permutation_solve, "circle": circle_solve, "arc": circular_arc_solve}[cls]
    ok, seq = solve(_rep(inf, cls), inst, p, q)
    return _report_sequence(args, ok, seq, 1)


def cmd_oracle(args) -> int:
    inst = _load(args.instance).instance
    p, q = _path_arg(args.p, "p"), _path_arg(args.q, "q")
    seq = shortest_reconfig_sequence(inst, p, q, args.k)
    return _report_sequence(args, seq is not None, seq, args.k)


def cmd_count(args) -> int:
    inst = _load(args.instance).instance
    count = count_shortest_paths(inst)
    _emit(args, {"count": count, "distance": inst.distance}, str(count))
    return EXIT_OK


def cmd_diameter(args) -> int:
    inst = _load(args.instance).instance
    diam = reconfig_diameter(inst, args.k)
    shown = "inf" if diam == INFINITE else str(diam)
    _emit(args, {"diameter": shown, "k": args.k}, shown)
    return EXIT_OK


def cmd_gen(args) -> int:
    kind, rest = args.kind, args.params
    try:
        if kind == "chain":
            g, l = map(int, rest)
            inst = gadget_chain(g, l)
            text = format_instance(inst, comments=[f"gadget chain g={g} l={l}"])
        elif kind == "hypercube":
            d, s_bits, t_bits = int(rest[0]), rest[1], rest[2]
            inst, _ = hypercube_instance(d, s_bits, t_bits)
            text = format_instance(inst, hypercube=(d, s_bits, t_bits), comments=[f"hypercube d={d}"])
        elif kind in ("linegraph", "power", "subdivide"):
            src = _load(rest[0]).instance
            x = int(rest[1])
            text = _gen_transform(kind, src, x, args)
        else:
            raise UsageError(f"unknown generator {kind!r}")
    except (ValueError, IndexError) as exc:
        if isinstance(exc, ReconfigError):
            raise
        raise UsageError(f"bad parameters for gen {kind}: {' '.join(rest)}") from None
    sys.stdout.write(text)
    return EXIT_OK


def _gen_transform(kind: str, src: StInstance, x: int, args) -> str:
    if kind == "subdivide":
        g = reductions.subdivide_uniform(src.graph, x)
        return format_instance(StInstance(g, src.s, src.t), comments=[f"subdivided l={x}"])
    p = _path_arg(args.p, "p") if args.p else None
    q = _path_arg(args.q, "q") if args.q else p
    if kind == "power":
        inst = StInstance(reductions.graph_power(src.graph, x), src.s, src.t)
        notes = [f"graph power k={x}"]
        if p is not None:
            red = reductions.power_instance(src, p, q, x)
            notes += [f"p {format_path(red.p)}", f"q {format_path(red.q)}"]
        return format_instance(inst, comments=notes)
    if p is None:
        # the construction does not depend on the paths
        p = q = next(iter_shortest_paths(src))
    red = reductions.kspr_line_instance(src, p, q, x)
    notes = [f"line graph reduction k={x}"]
    if args.p:
        notes += [f"p {format_path(red.p)}", f"q {format_path(red.q)}"]
    return format_instance(red.instance, comments=notes)


def cmd_verify(args) -> int:
    trials = None if args.trials == "exhaustive" else int(args.trials)
    report = verify(args.cls, args.n, trials, seed=args.seed)
    if args.json:
        print(json.dumps(report.as_dict(), sort_keys=True))
    else:
        print(report.summary())
        for line in report.failures[:20]:
            print(f"mismatch {line}")
    return EXIT_OK if report.ok else EXIT_NO


def _limit(value: str | None):
    if value is None:
        raise UsageError("--l is required")
    if value.lower() in ("inf", "unbounded"):
        return cost_mod.Unbounded
    try:
        l = int(value)
    except ValueError:
        raise UsageError(f"--l must be a positive integer or 'inf', got {value!r}") from None
    if l < 1:
        raise UsageError("--l must be >= 1")
    return l


def _fmt_cost(x) -> str:
    return str(Fraction(x))


def cmd_cost(args) -> int:
    inst = _load(args.instance).instance
    p, q = _path_arg(args.p, "p"), _path_arg(args.q, "q")
    if args.variant == "reduc":
        l = _limit(args.l)
        if l is cost_mod.Unbounded:
            raise UsageError("reduc needs a finite --l")
        ok = cost_mod.reduc_decide(inst, p, q, l)
        _emit(args, {"verdict": "yes" if ok else "no", "l": l}, f"verdict {'yes' if ok else 'no'}")
        return EXIT_OK if ok else EXIT_NO
    if args.costs is None:
        raise UsageError("--costs is required")
    file = FsPath(args.costs)
    try:
        table = parse_costs(file.read_text(encoding="utf-8") if file.exists() else args.costs.replace(",", " "))
        model = cost_mod.CostModel(table)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if args.variant == "minsum":
        res, value = cost_mod.min_sum(inst, p, q, model), "total"
    elif args.variant == "minmax":
        res, value = cost_mod.min_max(inst, p, q, model), "max"
    else:
        res, value = cost_mod.min_top_l(inst, p, q, model, _limit(args.l)), "top_l_sum"
    if res is None:
        _emit(args, {"feasible": False}, "infeasible")
        return EXIT_NO
    v = _fmt_cost(getattr(res, value))
    k = max(res.sequence.max_block, 1)
    obj = {
        "variant": args.variant,
        "value": v,
        "step_costs": [_fmt_cost(c) for c in res.step_costs],
        "paths": [list(x) for x in res.sequence.paths()],
    }
    text = f"value {v}\ncosts {' '.join(_fmt_cost(c) for c in res.step_costs)}\n" + format_sequence(res.sequence, k)
    _emit(args, obj, text)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit one JSON object per result")
    common.add_argument("--seed", type=int, default=0, help="seed for random generation (default 0)")
    common.add_argument("-v", "--verbose", action="store_true", help="log solver diagnostics to stderr")

    parser = argparse.ArgumentParser(
        prog="spreconf",
        description="Shortest path reconfiguration: solvers, oracle, reductions and cost variants.",
        epilog=EPILOG,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    sub = parser.add_subparsers(dest="verb", required=True)

    def paths(sp):
        sp.add_argument("--p", help="source path file or vertex list")
        sp.add_argument("--q", help="target path file or vertex list")

    sp = sub.add_parser("solve", parents=[common], help="decide SPR with a class solver")
    sp.add_argument("instance")
    sp.add_argument(
        "--class", dest="cls", required=True,
        choices=["permutation", "circle", "arc", "interval", "hypercube", "bounded"],
    )
    sp.add_argument("--c-max", type=int, default=6, help="distance limit for --class bounded")
    paths(sp)
    sp.set_defaults(func=cmd_solve)

    sp = sub.add_parser("oracle", parents=[common], help="shortest k-SPR sequence by brute force")
    sp.add_argument("instance")
    sp.add_argument("--k", type=int, default=1)
    paths(sp)
    sp.set_defaults(func=cmd_oracle)

    sp = sub.add_parser("count", parents=[common], help="number of s-t shortest paths")
    sp.add_argument("instance")
    sp.set_defaults(func=cmd_count)

    sp = sub.add_parser("diameter", parents=[common], help="diameter of the k-SPR reconfiguration graph")
    sp.add_argument("instance")
    sp.add_argument("--k", type=int, default=1)
    sp.set_defaults(func=cmd_diameter)

    sp = sub.add_parser(
        "gen", parents=[common], help="emit an instance file",
        description="gen chain G L | gen hypercube D S T | gen linegraph FILE K | gen power FILE K | gen subdivide FILE L",
    )
    sp.add_argument("kind", choices=["chain", "hypercube", "linegraph", "power", "subdivide"])
    sp.add_argument("params", nargs="+")
    paths(sp)
    sp.set_defaults(func=cmd_gen)

    sp = sub.add_parser("verify", parents=[common], help="sweep a class solver against the oracle")
    sp.add_argument("--class", dest="cls", required=True, choices=CLASSES)
    sp.add_argument("--n", type=int, required=True, help="representation size (hypercube: dimension)")
    sp.add_argument("--trials", default="100", help="number of random instances, or 'exhaustive'")
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("cost", parents=[common], help="cost-optimal reconfiguration")
    sp.add_argument("variant", choices=["minsum", "minmax", "mintop", "reduc"])
    sp.add_argument("instance")
    sp.add_argument("--l", help="objective width for mintop/reduc ('inf' for unbounded)")
    sp.add_argument("--costs", help="cost file or literal list p_1 .. p_n, e.g. 1,3")
    paths(sp)
    sp.set_defaults(func=cmd_cost)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    logging.basicConfig(level=logging.INFO if args.verbose else logging.ERROR, format="%(levelname)s %(name)s: %(message)s")
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except CapExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    except (ReconfigError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
