"""Command-line front end: ``genassoc <command> <type> [options]``.

Exit codes: 0 success, 1 a verification failed, 2 bad usage or input.
Data goes to stdout, diagnostics to stderr.
"""

from __future__ import annotations

import argparse
from dataclasses import dataclass
from fractions import Fraction
import os
import re
import sys

from .cartan import InvalidCartanType, build_root_system
from .clusters import display_expansion, enumerate_clusters, expansion_table, format_expansion, \
    format_vector
from .export import ExportError, export
from .polytope import SupportFunctionError, build_support_function, realize
from .report import ConsistencyError
from .tau import orbits

THREADS_ENV = "GENASSOC_THREADS"

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


@dataclass(frozen=True)
class RunConfig:
    cartan_type: str
    support: tuple | None = None   # explicit orbit values; None means rho-check
    fmt: str = "txt"
    full: bool = False
    seed: int = 0
    threads: int = 1


def parse_vector(text, n) -> tuple:
    """``"[1,0,2]"``, ``"1,0,2"`` or ``"1 0 2"`` -> (1, 0, 2)."""
    body = text.strip()
    if body.startswith("[") and body.endswith("]"):
        body = body[1:-1]
    parts = [p for p in re.split(r"[,\s]+", body.strip()) if p]
    try:
        v = tuple(int(p) for p in parts)
    except ValueError:
        raise UsageError(f"cannot parse vector {text!r}") from None
    if len(v) != n:
        raise UsageError(f"vector {text!r} has {len(v)} entries, rank is {n}")
    return v


def parse_support(text) -> tuple:
    try:
        return tuple(Fraction(p.strip()) for p in text.split(",") if p.strip())
    except (ValueError, ZeroDivisionError):
        raise UsageError(f"cannot parse support values {text!r}") from None


def default_threads() -> int:
    raw = os.environ.get(THREADS_ENV, "1")
    try:
        t = int(raw)
    except ValueError:
        raise UsageError(f"{THREADS_ENV}={raw!r} is not an integer") from None
    if t < 1:
        raise UsageError(f"{THREADS_ENV} must be >= 1")
    return t


def _catalog(cfg):
    try:
        return build_root_system(cfg.cartan_type)
    except InvalidCartanType as e:
        raise UsageError(str(e)) from None


def _support(cat, cfg):
    try:
        if cfg.support is None:
            return build_support_function(cat)
        return build_support_function(cat, cfg.support)
    except SupportFunctionError as e:
        raise UsageError(f"inadmissible support values: {e}") from None


# ---------------------------------------------------------------------------
# commands; each returns (stdout text or bytes, exit code)

def cmd_roots(cfg):
    cat = _catalog(cfg)
    part = orbits(cat)
    out = [f"# {cat.cartan_type}: {len(cat)} almost positive roots, {len(part)} orbits, "
           f"h = {cat.coxeter_number}, I+ = {[i + 1 for i in cat.I_plus()]}, "
           f"I- = {[i + 1 for i in cat.I_minus()]}"]
    for k, v in enumerate(cat.roots):
        out.append(f"{k} {format_vector(v)} orbit {part.orbit_of[k]}")
    for t, orb in enumerate(part.orbits):
        out.append(f"# orbit {t} ({len(orb)}): " + " ".join(format_vector(cat.roots[k]) for k in orb))
    return "\n".join(out) + "\n", EXIT_OK


def cmd_clusters(cfg):
    cat = _catalog(cfg)
    cl = enumerate_clusters(cat, cfg.threads)
    out = [f"# {cat.cartan_type}: {len(cl)} clusters"]
    out += [" ".join(format_vector(cat.roots[k]) for k in c) for c in cl]
    return "\n".join(out) + "\n", EXIT_OK


def cmd_expand(cfg, vector, minus_simple=None):
    cat = _catalog(cfg)
    g = list(parse_vector(vector, cat.rank))
    if minus_simple is not None:
        if not 1 <= minus_simple <= cat.rank:
            raise UsageError(f"--minus-simple must be in 1..{cat.rank}")
        g[minus_simple - 1] -= 1
    return format_expansion(cat, display_expansion(cat, g)) + "\n", EXIT_OK


def cmd_polytope(cfg):
    cat = _catalog(cfg)
    F = _support(cat, cfg)
    if cfg.fmt == "off" and cat.rank != 3:
        raise UsageError(f"OFF output needs rank 3, {cat.cartan_type} has rank {cat.rank}")
    real = realize(cat, F, threads=cfg.threads)
    data = export(real, cfg.fmt)
    status = "verified" if real.verified else "VERIFICATION FAILED"
    print(f"{cat.cartan_type}: {real.n_vertices} vertices, {len(real.facets)} facets, "
          f"{len(real.pairs)} edges, {status}", file=sys.stderr)
    if not real.verified:
        for line in real.report.lines():
            if line.startswith("FAIL") or line.startswith("    "):
                print(line, file=sys.stderr)
    return data, EXIT_OK if real.verified else EXIT_FAIL


def cmd_verify(cfg):
    from .verify import run_suite

    cat = _catalog(cfg)
    F = _support(cat, cfg)
    rep = run_suite(cat, F, full=cfg.full, seed=cfg.seed, threads=cfg.threads)
    n_fail = len(rep.failures())
    print(f"{cat.cartan_type}: {len(rep.checks)} checks, {n_fail} failed", file=sys.stderr)
    return str(rep) + "\n", EXIT_OK if rep.ok else EXIT_FAIL


def cmd_table(cfg):
    return expansion_table(_catalog(cfg)), EXIT_OK


def cmd_oracle(cfg):
    from .oracle_models import compare_with_algebra

    cat = _catalog(cfg)
    if cat.cartan_type.family not in "ABC":
        raise UsageError(f"polygon models exist for types A, B, C only, not {cat.cartan_type}")
    rep = compare_with_algebra(cat)
    return str(rep) + "\n", EXIT_OK if rep.ok else EXIT_FAIL


# ---------------------------------------------------------------------------

def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("type", help="Cartan type, e.g. A3, C3, E6")
    common.add_argument("--threads", type=int, default=None,
                        help=f"worker processes (default ${THREADS_ENV} or 1)")
    sup = argparse.ArgumentParser(add_help=False)
    g = sup.add_mutually_exclusive_group()
    g.add_argument("--rho", action="store_true", help="use rho-check values (default)")
    g.add_argument("--support", metavar="V1,V2,...",
                   help="one rational per -w0 class of simple roots")

    p = argparse.ArgumentParser(prog="genassoc",
                                description="Generalized associahedra: clusters, expansions, "
                                            "polytopes and their verification.")
    sub = p.add_subparsers(dest="command", required=True)
    sub.add_parser("roots", parents=[common], help="list almost positive roots and orbits")
    sub.add_parser("clusters", parents=[common], help="list all clusters")
    e = sub.add_parser("expand", parents=[common], help="cluster expansion of a vector")
    e.add_argument("vector", help="coordinates, e.g. [1,1,1,2,2,1]")
    e.add_argument("--minus-simple", type=int, metavar="J", help="subtract alpha_J first")
    q = sub.add_parser("polytope", parents=[common, sup], help="realize and export the polytope")
    q.add_argument("--format", dest="fmt", choices=["json", "off", "txt"], default="txt")
    v = sub.add_parser("verify", parents=[common, sup], help="run the verification suite")
    v.add_argument("--full", action="store_true", help="add lattice-box and E-set checks")
    v.add_argument("--seed", type=int, default=0, help="seed for sampled checks")
    sub.add_parser("table", parents=[common], help="expansions of alpha - alpha_j, "
                                                    "alpha of full support")
    sub.add_parser("oracle", parents=[common], help="compare with the polygon model (A, B, C)")
    return p


COMMANDS = {
    "roots": cmd_roots, "clusters": cmd_clusters, "polytope": cmd_polytope,
    "verify": cmd_verify, "table": cmd_table, "oracle": cmd_oracle,
}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code not in (0, None) else EXIT_OK
    try:
        threads = args.threads if args.threads is not None else default_threads()
        if threads < 1:
            raise UsageError("--threads must be >= 1")
        cfg = RunConfig(
            cartan_type=args.type,
            support=parse_support(args.support) if getattr(args, "support", None) else None,
            fmt=getattr(args, "fmt", "txt"),
            full=getattr(args, "full", False),
            seed=getattr(args, "seed", 0),
            threads=threads,
        )
        if args.command == "expand":
            out, code = cmd_expand(cfg, args.vector, args.minus_simple)
        else:
            out, code = COMMANDS[args.command](cfg)
    except UsageError as e:
        print(f"genassoc: error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except (ConsistencyError, ExportError) as e:
        print(f"genassoc: {e}", file=sys.stderr)
        return EXIT_FAIL
    if isinstance(out, str):
        out = out.encode()
    sys.stdout.buffer.write(out)
    sys.stdout.flush()
    return code


if __name__ == "__main__":
    sys.exit(main())
