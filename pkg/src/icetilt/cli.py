"""Command-line entry point.

Exit codes: 0 success, 1 verification failure or internal inconsistency,
2 input error, 3 a resource cap was hit.
"""

import argparse
import os
import sys
from pathlib import Path
from typing import List, Optional

from .algebra import FIXTURES, load_algebra, load_fixture
from .errors import (
    CapExceeded, IcetiltError, IncompleteTable, NotHereditary, SchemaError, TooManyIndecs,
)
from .ice import DEFAULT_MAX_MULT, IceCore, is_ice_direct
from .lattice import SubcatLattice
from .modcat import build_table
from .report import analyze, hasse_diagram, serialize, to_dot
from .verify import verify_fixture

EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_RESOURCE = 0, 1, 2, 3
ENV_PREFIX = "TIK_"


def _positive(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be at least 1, got {value}")
    return value


def _env_int(name: str) -> Optional[int]:
    raw = os.environ.get(ENV_PREFIX + name)
    if raw is None or raw == "":
        return None
    try:
        return int(raw)
    except ValueError:
        raise SchemaError(f"{ENV_PREFIX}{name} must be an integer, got {raw!r}") from None


def _settings(args) -> dict:
    """Flags win over environment variables, which win over built-in defaults."""
    field = args.field if args.field is not None else _env_int("FIELD")
    dim_bound = args.dim_bound if args.dim_bound is not None else _env_int("DIM_BOUND")
    if dim_bound is not None and dim_bound < 1:
        raise SchemaError("the dimension bound must be at least 1")
    return {"field": field, "dim_bound": dim_bound, "max_mult": args.max_mult, "jobs": args.jobs}


def _load(path: str, field: Optional[int]):
    p = Path(path)
    # bare fixture names such as "nak" or "nak.json" resolve to the bundled files
    if not p.exists() and p.parent == Path(".") and p.stem in FIXTURES:
        return load_fixture(p.stem, field=field)
    return load_algebra(path, field=field)


def _emit(text: str, out: Optional[str]):
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def cmd_analyze(args) -> int:
    cfg = _settings(args)
    algebra = _load(args.path, cfg["field"])
    report = analyze(algebra, cfg["dim_bound"], cfg["max_mult"], cfg["jobs"], source=args.path)
    _emit(serialize(report), args.out)
    return EXIT_OK


def cmd_hasse(args) -> int:
    cfg = _settings(args)
    algebra = _load(args.path, cfg["field"])
    diagram = hasse_diagram(algebra, args.what, cfg["dim_bound"], cfg["max_mult"], cfg["jobs"])
    if args.format == "dot":
        text = to_dot(diagram, title=f"{args.what}")
    else:
        text = serialize({"what": args.what, **diagram})
    _emit(text, args.out)
    return EXIT_OK


def cmd_verify(args) -> int:
    cfg = _settings(args)
    names = FIXTURES if args.fixture == "all" else (args.fixture,)
    lines, failed = [], 0
    for name in names:
        for check in verify_fixture(name, field=cfg["field"], jobs=cfg["jobs"]):
            status = "PASS" if check.passed else "FAIL"
            lines.append(f"{status}  {name:<7} {check.name}")
            if not check.passed:
                failed += 1
                lines.append(f"        expected: {check.expected}")
                lines.append(f"        actual:   {check.actual}")
    lines.append(f"{len([ln for ln in lines if ln.startswith(('PASS', 'FAIL'))]) - failed} passed, {failed} failed")
    _emit("\n".join(lines) + "\n", args.out)
    return EXIT_OK if failed == 0 else EXIT_FAIL


def cmd_oracle(args) -> int:
    cfg = _settings(args)
    algebra = _load(args.path, cfg["field"])
    lat = SubcatLattice(build_table(algebra, cfg["dim_bound"]), jobs=cfg["jobs"])
    subsets = range(1 << lat.n)
    if args.check == "tors":
        lat._check_size(lat.n)
        direct = [s for s in subsets if lat.is_torsion_class(s)]
        theory = sorted({lat.perp_left(lat.perp_right(s)) for s in subsets})
    else:
        core = IceCore(lat, max_mult=cfg["max_mult"])
        theory = sorted(core.enumerate_ice())
        try:
            flags = lat.map(lambda s: is_ice_direct(lat, s, cfg["max_mult"]), subsets)
        except CapExceeded as exc:
            raise CapExceeded(f"{exc}; try a smaller --max-mult") from exc
        direct = [s for s, ok in zip(subsets, flags) if ok]
    lines = [f"{args.check}: definition {len(direct)} = theorem {len(theory)}"
             if direct == theory else f"{args.check}: definition {len(direct)} != theorem {len(theory)}"]
    for s in sorted(set(direct) ^ set(theory)):
        side = "definition only" if s in direct else "theorem only"
        lines.append(f"  {side}: {{{', '.join(lat.names_of(s))}}}")
    lines.append("agreement" if direct == theory else "DISAGREEMENT")
    _emit("\n".join(lines) + "\n", args.out)
    return EXIT_OK if direct == theory else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--field", type=int, default=None, help="prime p of the ground field (env TIK_FIELD)")
    common.add_argument("--dim-bound", type=int, default=None,
                        help="per-vertex dimension bound for indecomposables (env TIK_DIM_BOUND)")
    common.add_argument("--max-mult", type=_positive, default=DEFAULT_MAX_MULT,
                        help="multiplicity bound of the closure oracles")
    common.add_argument("--jobs", type=_positive, default=1, help="worker threads")
    common.add_argument("--out", default=None, help="write output to this file instead of stdout")

    parser = argparse.ArgumentParser(prog="icetilt", description=(
        "Torsion classes, ICE-closed subcategories and wide tau-tilting modules of a bound quiver algebra."))
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", parents=[common], help="full JSON report for an algebra")
    p.add_argument("path")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("hasse", parents=[common], help="one Hasse diagram as DOT or JSON")
    p.add_argument("path")
    p.add_argument("--what", choices=["tors", "ice", "rigid"], default="tors")
    p.add_argument("--format", choices=["dot", "json"], default="dot")
    p.set_defaults(func=cmd_hasse)

    p = sub.add_parser("verify", parents=[common], help="check the bundled fixtures against known results")
    p.add_argument("--fixture", choices=[*FIXTURES, "all"], default="all")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("oracle", parents=[common], help="compare definition-level checks with the enumeration")
    p.add_argument("path")
    p.add_argument("--check", choices=["ice", "tors"], default="ice")
    p.set_defaults(func=cmd_oracle)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (CapExceeded, IncompleteTable, TooManyIndecs) as exc:
        print(f"error [{exc.stage}]: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except (SchemaError, NotHereditary) as exc:
        print(f"error [{exc.stage}]: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except IcetiltError as exc:
        print(f"error [{exc.stage}]: {exc}", file=sys.stderr)
        return EXIT_FAIL
    except (ValueError, OSError) as exc:
        print(f"error [input]: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
