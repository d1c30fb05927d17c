"""Command-line interface.

Exit codes: 0 = yes (witness emitted), 1 = no, 2 = usage/format error or
oracle disagreement, 3 = cap exceeded or timeout.  Every solve/oracle run
prints a machine-readable line `VERDICT yes|no|cap-exceeded`.
"""

from __future__ import annotations

import argparse
import json
import signal
import sys
from contextlib import contextmanager
from typing import Optional

from . import formats, generators, oracle
from .errors import CapExceeded, FormatError
from .model import verify_allocation
from .multigraph import d_edge_core, find_good_separation
from .reductions import (
    solve_asldh,
    solve_bldh,
    solve_minmax,
    solve_mbldh,
    sparsify_asldh,
)
from .solver import PipelineConfig, solve_la


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="listalloc",
        description="Exact solvers for list allocation and its companion problems.",
    )
    parser.add_argument("--oracle-cap", type=int, default=10**7, metavar="N",
                        help="state cap for any enumeration (default 1e7)")
    parser.add_argument("--f1-override", type=int, metavar="K",
                        help="testing mode: lower the border-space bound")
    parser.add_argument("--f2-override", type=int, metavar="K",
                        help="testing mode: lower the piece-size bound")
    parser.add_argument("--seed", type=int, default=0, metavar="S")
    parser.add_argument("--jobs", type=int, default=1, metavar="J",
                        help="parallelize family sweeps; outputs are identical for any J")
    parser.add_argument("--timeout", type=float, metavar="SEC")
    parser.add_argument("--emit-witness", metavar="PATH")
    parser.add_argument("--trace", action="store_true",
                        help="print shrink recursion and contraction events to stderr")

    sub = parser.add_subparsers(dest="group", required=True)

    def add_input(p):
        p.add_argument("-i", "--instance", required=True, metavar="FILE")

    la = sub.add_parser("la").add_subparsers(dest="action", required=True)
    p = la.add_parser("solve"); add_input(p)
    p.add_argument("--oracle", action="store_true", help="cross-check against the oracle")
    p = la.add_parser("oracle"); add_input(p)
    p = la.add_parser("verify"); add_input(p)
    p.add_argument("-w", "--witness", required=True, metavar="FILE")

    minmax = sub.add_parser("minmax").add_subparsers(dest="action", required=True)
    p = minmax.add_parser("solve"); add_input(p)
    p.add_argument("--oracle", action="store_true")
    p = minmax.add_parser("oracle"); add_input(p)

    bldh = sub.add_parser("bldh").add_subparsers(dest="action", required=True)
    p = bldh.add_parser("solve"); add_input(p)
    p.add_argument("--oracle", action="store_true")
    p = bldh.add_parser("oracle"); add_input(p)

    asldh = sub.add_parser("asldh").add_subparsers(dest="action", required=True)
    p = asldh.add_parser("solve"); add_input(p)
    p.add_argument("--oracle", action="store_true")
    p = asldh.add_parser("oracle"); add_input(p)
    p = asldh.add_parser("sparsify"); add_input(p)
    p.add_argument("-o", "--output", metavar="FILE")

    mbldh = sub.add_parser("mbldh").add_subparsers(dest="action", required=True)
    p = mbldh.add_parser("solve"); add_input(p)

    p = sub.add_parser("core"); add_input(p)
    p.add_argument("-d", type=int, required=True)
    p.add_argument("-o", "--output", metavar="FILE")

    p = sub.add_parser("sep"); add_input(p)
    p.add_argument("-q", type=int, required=True)
    p.add_argument("-y", type=int, required=True)

    p = sub.add_parser("gen")
    p.add_argument("--kind", required=True, choices=["la", "minmax", "bldh", "asldh"])
    p.add_argument("-o", "--output", metavar="FILE")
    p.add_argument("--n", type=int, default=6)
    p.add_argument("--r", type=int, default=2)
    p.add_argument("--w", type=int, default=1)
    p.add_argument("--ell", type=int, default=1)
    p.add_argument("--host-n", type=int, default=2)
    p.add_argument("--d", type=int, default=1)
    p.add_argument("--edge-density", type=float, default=0.5)
    p.add_argument("--list-density", type=float, default=0.6)
    p.add_argument("--max-mult", type=int, default=2)
    p.add_argument("--guest-density", type=float, default=0.3)
    p.add_argument("--host-density", type=float, default=0.6)
    p.add_argument("--loop-density", type=float, default=0.5)
    return parser


@contextmanager
def _alarm(seconds: Optional[float]):
    if seconds is None:
        yield
        return

    def handler(signum, frame):
        raise TimeoutError

    old = signal.signal(signal.SIGALRM, handler)
    signal.setitimer(signal.ITIMER_REAL, seconds)
    try:
        yield
    finally:
        signal.setitimer(signal.ITIMER_REAL, 0)
        signal.signal(signal.SIGALRM, old)


def _load(path: str) -> dict:
    try:
        with open(path) as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise FormatError(f"cannot read {path}: {exc}") from exc


def _read_text(path: str) -> str:
    try:
        with open(path) as fh:
            return fh.read()
    except OSError as exc:
        raise FormatError(f"cannot read {path}: {exc}") from exc


def _write_out(text: str, path: Optional[str]):
    if path:
        with open(path, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _trace_printer(event: dict):
    parts = []
    for key, value in event.items():
        if hasattr(value, "g"):  # instance snapshot: print its size only
            parts.append(f"{key}_n={value.g.n}")
        elif isinstance(value, tuple) and key == "edges":
            parts.append(f"edges={len(value)}")
        else:
            parts.append(f"{key}={value}")
    print("TRACE " + " ".join(parts), file=sys.stderr)


def _config(args) -> PipelineConfig:
    if args.f2_override is not None or args.f1_override is not None:
        print(
            "WARNING: bound overrides are a testing mode; the stated "
            "completeness guarantees hold only with the default bounds",
            file=sys.stderr,
        )
    return PipelineConfig(
        f1_override=args.f1_override,
        f2_override=args.f2_override,
        oracle_cap=args.oracle_cap,
        seed=args.seed,
        jobs=args.jobs,
        trace=_trace_printer if args.trace else None,
    )


def _finish(args, witness_doc: Optional[dict]) -> int:
    if witness_doc is None:
        print("VERDICT no")
        return 1
    print("VERDICT yes")
    text = formats.dumps_canonical(witness_doc)
    sys.stdout.write(text)
    if args.emit_witness:
        with open(args.emit_witness, "w") as fh:
            fh.write(text)
    return 0


def _disagreement() -> int:
    print("DISAGREEMENT solver and oracle verdicts differ", file=sys.stderr)
    return 2


def _run_la(args, cfg) -> int:
    inst = formats.parse_la(_load(args.instance))
    if args.action == "oracle":
        wit = oracle.oracle_la(inst, cap=args.oracle_cap)
        return _finish(args, formats.allocation_to_doc(wit) if wit else None)
    if args.action == "verify":
        alloc = formats.parse_allocation(_load(args.witness), inst.g.n)
        verdict = verify_allocation(inst, alloc)
        print(f"VERIFY {verdict.kind}")
        return 0 if verdict.ok else 1
    wit = solve_la(inst, cfg)
    if args.oracle:
        ref = oracle.oracle_la(inst, cap=args.oracle_cap)
        if (ref is None) != (wit is None):
            return _disagreement()
    return _finish(args, formats.allocation_to_doc(wit) if wit else None)


def _run_minmax(args, cfg) -> int:
    inst = formats.parse_minmax(_load(args.instance))
    if args.action == "oracle":
        part = oracle.oracle_minmax(inst, cap=args.oracle_cap)
        return _finish(args, formats.partition_to_doc(part) if part else None)
    part = solve_minmax(inst, cfg)
    if args.oracle:
        ref = oracle.oracle_minmax(inst, cap=args.oracle_cap)
        if (ref is None) != (part is None):
            return _disagreement()
    return _finish(args, formats.partition_to_doc(part) if part else None)


def _run_bldh(args, cfg) -> int:
    inst = formats.parse_bldh(_load(args.instance))
    if args.action == "oracle":
        chi = oracle.oracle_bldh(inst, cap=args.oracle_cap)
        return _finish(args, formats.chi_to_doc(chi) if chi else None)
    chi = solve_bldh(inst, cfg)
    if args.oracle:
        ref = oracle.oracle_bldh(inst, cap=args.oracle_cap)
        if (ref is None) != (chi is None):
            return _disagreement()
    return _finish(args, formats.chi_to_doc(chi) if chi else None)


def _run_asldh(args, cfg) -> int:
    inst = formats.parse_asldh(_load(args.instance))
    if args.action == "oracle":
        chi = oracle.oracle_asldh(inst, cap=args.oracle_cap)
        return _finish(args, formats.chi_to_doc(chi) if chi else None)
    if args.action == "sparsify":
        result = sparsify_asldh(inst)
        if result.resolved_no:
            print("VERDICT no")
            return 1
        _write_out(formats.dumps_canonical(formats.asldh_to_doc(result.instance)), args.output)
        return 0
    chi = solve_asldh(inst, cfg)
    if args.oracle:
        ref = oracle.oracle_asldh(inst, cap=args.oracle_cap)
        if (ref is None) != (chi is None):
            return _disagreement()
    return _finish(args, formats.chi_to_doc(chi) if chi else None)


def _run_mbldh(args, cfg) -> int:
    inst = formats.parse_bldh(_load(args.instance))
    chi = solve_mbldh(inst, cfg)
    return _finish(args, formats.chi_to_doc(chi) if chi else None)


def _run_core(args) -> int:
    g = formats.parse_dimacs(_read_text(args.instance))
    core = d_edge_core(g, args.d)
    _write_out(formats.dimacs_text(core), args.output)
    return 0


def _run_sep(args) -> int:
    g = formats.parse_dimacs(_read_text(args.instance))
    sep = find_good_separation(g, args.q, args.y)
    if sep is None:
        print("SEPARATION none")
        return 1
    side1 = ",".join(str(v + 1) for v in sorted(sep.side1))
    side2 = ",".join(str(v + 1) for v in sorted(sep.side2))
    print(f"SEPARATION cut={sep.cut_size} side1={side1} side2={side2}")
    return 0


def _run_gen(args) -> int:
    if args.kind == "la":
        inst = generators.gen_la(
            args.n, args.r, args.w,
            edge_density=args.edge_density, list_density=args.list_density,
            max_mult=args.max_mult, seed=args.seed,
        )
        doc = formats.la_to_doc(inst)
    elif args.kind == "minmax":
        inst = generators.gen_minmax(
            args.n, args.r, args.ell,
            edge_density=args.edge_density, max_mult=args.max_mult, seed=args.seed,
        )
        doc = formats.minmax_to_doc(inst)
    elif args.kind == "bldh":
        inst = generators.gen_bldh(
            args.n, args.host_n, args.ell,
            guest_density=args.guest_density, host_density=args.host_density,
            loop_density=args.loop_density, list_density=args.list_density,
            seed=args.seed,
        )
        doc = formats.bldh_to_doc(inst)
    else:
        inst = generators.gen_asldh(
            args.n, args.host_n, args.d,
            guest_density=args.guest_density, host_density=args.host_density,
            loop_density=args.loop_density, list_density=args.list_density,
            seed=args.seed,
        )
        doc = formats.asldh_to_doc(inst)
    _write_out(formats.dumps_canonical(doc), args.output)
    return 0


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        with _alarm(args.timeout):
            if args.group == "la":
                return _run_la(args, _config(args))
            if args.group == "minmax":
                return _run_minmax(args, _config(args))
            if args.group == "bldh":
                return _run_bldh(args, _config(args))
            if args.group == "asldh":
                return _run_asldh(args, _config(args))
            if args.group == "mbldh":
                return _run_mbldh(args, _config(args))
            if args.group == "core":
                return _run_core(args)
            if args.group == "sep":
                return _run_sep(args)
            if args.group == "gen":
                return _run_gen(args)
            parser.error(f"unknown command {args.group}")
    except (TimeoutError, CapExceeded):
        print("VERDICT cap-exceeded")
        return 3
    except FormatError as exc:
        print(f"ERROR {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"ERROR {exc}", file=sys.stderr)
        return 2
    return 2


if __name__ == "__main__":
    sys.exit(main())
