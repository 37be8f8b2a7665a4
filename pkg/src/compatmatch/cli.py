"""Command-line entry point.

Machine-readable results (JSON, CSV, SVG) go to --out or stdout; human
diagnostics go to stderr.  Exit codes: 0 success, 1 domain error (with a
JSON error object on stderr), 2 usage error.  Every command is
deterministic given its flags and seed; wall-clock timing is therefore
reported only on request (--timing for ccm).
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from fractions import Fraction
from pathlib import Path

from . import bounds as bounds_mod
from . import generators
from .constructive import (
    Shape,
    block_non_nested_matching,
    rball_matching,
    same_shape_matching,
)
from .conflict import is_compatible
from .geom import DegeneracyError
from .model import (
    ConvexSet,
    Instance,
    InstanceError,
    Matching,
    PlanarSet,
    parse_instance,
    parse_matching,
    write_instance,
)
from .solver import (
    brute_force_max_matching,
    greedy_maximal_matching,
    max_compatible_matching,
)
from .svg import render_instance


class CliError(ValueError):
    pass


def _emit(data: bytes, out: str | None) -> None:
    if out:
        Path(out).write_bytes(data)
    else:
        sys.stdout.buffer.write(data)
        sys.stdout.buffer.flush()


def _emit_json(obj, out: str | None) -> None:
    _emit((json.dumps(obj, separators=(",", ":"), sort_keys=True) + "\n").encode(), out)


def _load_instance(path: str) -> Instance:
    try:
        return parse_instance(Path(path).read_bytes())
    except OSError as exc:
        raise CliError(f"cannot read instance: {exc}") from None


def _load_matching(path: str) -> Matching:
    try:
        return parse_matching(Path(path).read_bytes())
    except OSError as exc:
        raise CliError(f"cannot read matching: {exc}") from None


def _seed_of(args) -> int:
    if args.seed is None:
        print("seed: 0 (default; pass --seed to vary)", file=sys.stderr)
        return 0
    return args.seed


def _parse_shape(text: str) -> Shape:
    try:
        chords = []
        for part in text.split(","):
            a, b = part.strip().split("-")
            chords.append((int(a), int(b)))
        return Shape(chords)
    except (ValueError, IndexError) as exc:
        raise CliError(f"bad --shape value {text!r}: {exc}") from None


def _cmd_solve(args) -> None:
    inst = _load_instance(args.instance)
    algo = args.algorithm
    if algo == "exact":
        res = max_compatible_matching(inst)
    elif algo == "oracle":
        res = brute_force_max_matching(inst)
    elif algo == "greedy":
        res = greedy_maximal_matching(inst)
    elif algo == "blocks":
        k = args.k if args.k else bounds_mod.lb_formulas(inst.n, inst.num_sets).non_nested
        m = block_non_nested_matching(inst, k)
        res = None
    elif algo == "rball":
        m = rball_matching(inst)
        res = None
    elif algo == "shape":
        if not args.shape:
            raise CliError("--shape is required with --algorithm shape")
        m = same_shape_matching(inst, _parse_shape(args.shape))
        res = None
    else:  # pragma: no cover - argparse restricts choices
        raise CliError(f"unknown algorithm {algo!r}")

    if res is not None:
        m = res.matching
    out = {
        "algorithm": algo,
        "size": m.size,
        "matching": [list(e) for e in m.edges],
        "compatible": is_compatible(inst, m),
    }
    if res is not None:
        out["optimal"] = res.optimal
        out["nodes_explored"] = res.nodes_explored
    _emit_json(out, args.out)


def _cmd_generate(args) -> None:
    kind = args.kind
    n = args.n
    if kind == "five-block":
        inst = generators.five_block_permutation(n)
    elif kind == "bit-partition":
        inst = Instance(n, generators.bit_partition_family(n))
    elif kind == "random-convex":
        seed = _seed_of(args)
        sets = [
            ConvexSet(generators.random_labeling(n, seed * 1_000_003 + i))
            for i in range(args.l)
        ]
        inst = Instance(n, sets)
    elif kind == "random-planar":
        seed = _seed_of(args)
        sets = []
        for i in range(args.l):
            pts = generators.random_planar_set(n, seed * 1_000_003 + 2 * i)
            perm = generators.random_labeling(n, seed * 1_000_003 + 2 * i + 1)
            sets.append(generators.relabel_planar(pts, perm))
        inst = Instance(n, sets)
    else:  # pragma: no cover
        raise CliError(f"unknown kind {kind!r}")
    _emit(write_instance(inst), args.out)


def _cmd_ccm(args) -> None:
    t0 = time.monotonic()
    rec = bounds_mod.ccm_search(args.n, mode=args.mode, jobs=args.jobs)
    elapsed = time.monotonic() - t0
    seconds = f"{elapsed:.3f}" if args.timing else "0.000"
    witness = " ".join(str(v) for v in rec.witness_permutation)
    lines = [
        "n,ccm,witness_permutation,labelings_examined,mode,seconds",
        f"{rec.n},{rec.ccm},{witness},{rec.labelings_examined},{args.mode},{seconds}",
    ]
    _emit(("\n".join(lines) + "\n").encode(), args.out)


def _cmd_force(args) -> None:
    seed = _seed_of(args)
    if args.instance:
        geometry = _load_instance(args.instance).sets[0]
        if isinstance(geometry, ConvexSet):
            geometry = generators.convex_polygon_points(geometry.n)
    elif args.n:
        geometry = generators.convex_polygon_points(args.n)
    else:
        raise CliError("force needs --instance or --n")
    count, labelings = generators.force_search_random(
        geometry, max_rounds=args.max_rounds, seed=seed
    )
    _emit_json(
        {
            "n": geometry.n,
            "seed": seed,
            "l": count,
            "labelings": [list(p) for p in labelings],
        },
        args.out,
    )


def _cmd_bounds(args) -> None:
    n, l = args.n, args.l
    g = bounds_mod.lb_formulas(n, l)
    out = {
        "n": n,
        "l": l,
        "guarantees": {
            "same_shape": g.same_shape,
            "greedy_two_sets": g.greedy_two_sets,
            "non_nested": g.non_nested,
            "close_pair": g.close_pair,
            "greedy_multi": g.greedy_multi,
        },
    }
    if l >= 2:
        t = bounds_mod.prob_threshold(n, l)
        out["thresholds"] = {
            "k_convex": t.k_convex,
            "k_general": t.k_general,
            "inequality_holds": t.inequality_holds,
            "convex_vacuous": t.convex_vacuous,
        }
    if n >= 5:
        lo, hi = bounds_mod.force_bounds(n)
        out["force"] = {"lower": lo, "upper": hi, "alpha": "1/5"}
        lo_c, hi_c = bounds_mod.force_bounds(n, Fraction(1))
        out["force_convex"] = {"lower": lo_c, "upper": hi_c, "alpha": "1"}
    _emit_json(out, args.out)


def _cmd_verify(args) -> None:
    inst = _load_instance(args.instance)
    if args.matching:
        m = _load_matching(args.matching)
        extra = m.labels() - set(range(1, inst.n + 1))
        if extra:
            raise CliError(f"matching uses labels outside 1..{inst.n}: {sorted(extra)}")
        _emit_json({"compatible": is_compatible(inst, m), "size": m.size}, args.out)
    else:
        ok, witness = bounds_mod.verify_force_family(list(inst.sets))
        _emit_json(
            {
                "forces_single_edge": ok,
                "compatible_pair": None if witness is None else [list(witness[0]), list(witness[1])],
            },
            args.out,
        )


def _cmd_draw(args) -> None:
    inst = _load_instance(args.instance)
    m = _load_matching(args.matching) if args.matching else None
    _emit(render_instance(inst, m).encode(), args.out)


def _build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="compatmatch",
        description="Compatible matchings over labeled point sets.",
    )
    sub = p.add_subparsers(dest="command", required=True)

    ps = sub.add_parser("solve", help="compute a compatible matching")
    ps.add_argument("--instance", required=True)
    ps.add_argument(
        "--algorithm",
        default="exact",
        choices=["exact", "greedy", "blocks", "rball", "shape", "oracle"],
    )
    ps.add_argument("--k", type=int, default=None, help="block count for --algorithm blocks")
    ps.add_argument("--shape", default=None, help='chord list like "1-4,2-3"')
    ps.add_argument("--out", default=None)
    ps.set_defaults(func=_cmd_solve)

    pg = sub.add_parser("generate", help="emit a structured or random instance")
    pg.add_argument(
        "--kind",
        required=True,
        choices=["five-block", "bit-partition", "random-convex", "random-planar"],
    )
    pg.add_argument("--n", type=int, required=True)
    pg.add_argument("--l", type=int, default=2, help="number of sets for random kinds")
    pg.add_argument("--seed", type=int, default=None)
    pg.add_argument("--out", default=None)
    pg.set_defaults(func=_cmd_generate)

    pc = sub.add_parser("ccm", help="guaranteed matching size over all labelings")
    pc.add_argument("--n", type=int, required=True)
    pc.add_argument("--mode", default="reduced", choices=["full", "reduced"])
    pc.add_argument("--jobs", type=int, default=1)
    pc.add_argument(
        "--timing",
        action="store_true",
        help="report wall seconds (non-deterministic) instead of 0.000",
    )
    pc.add_argument("--out", default=None)
    pc.set_defaults(func=_cmd_ccm)

    pf = sub.add_parser("force", help="randomized search for a forcing family")
    pf.add_argument("--instance", default=None, help="geometry: first set is used")
    pf.add_argument("--n", type=int, default=None, help="use a convex n-gon geometry")
    pf.add_argument("--max-rounds", type=int, default=200)
    pf.add_argument("--seed", type=int, default=None)
    pf.add_argument("--out", default=None)
    pf.set_defaults(func=_cmd_force)

    pb = sub.add_parser("bounds", help="closed-form guarantees and thresholds")
    pb.add_argument("--n", type=int, required=True)
    pb.add_argument("--l", type=int, default=2)
    pb.add_argument("--out", default=None)
    pb.set_defaults(func=_cmd_bounds)

    pv = sub.add_parser("verify", help="check a matching, or a forcing family")
    pv.add_argument("--instance", required=True)
    pv.add_argument("--matching", default=None)
    pv.add_argument("--out", default=None)
    pv.set_defaults(func=_cmd_verify)

    pd = sub.add_parser("draw", help="render an instance (and matching) as SVG")
    pd.add_argument("--instance", required=True)
    pd.add_argument("--matching", default=None)
    pd.add_argument("--out", default=None)
    pd.set_defaults(func=_cmd_draw)

    return p


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        args.func(args)
    except (CliError, InstanceError, DegeneracyError, ValueError, RuntimeError) as exc:
        err = {"error": type(exc).__name__, "message": str(exc)}
        print(json.dumps(err, sort_keys=True), file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
