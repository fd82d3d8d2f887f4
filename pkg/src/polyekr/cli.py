"""Command-line frontend; every subcommand prints one JSON document.

Exit status: 0 on success, 1 on usage, guard or input errors (and searches
that hit their timeout), 2 when a search contradicts a theorem.
"""
from __future__ import annotations

import argparse
import sys
import time
from dataclasses import replace

from . import __version__
from .config import GuardError, Guards
from .constructions import exceptional_family, primary_family, trivial_family
from .field import field_of_order, split_prime_power
from .io import FamilyFormatError, dump_family, dumps, read_family
from .poly import Poly, count_irreducibles, factor, irreducible_lower_bound_holds, lcm_all_monic_degree
from .search import TheoremViolation, default_workers, verify_theorem1, verify_theorem4
from .verifier import (NotExtremalError, check_irreducible_witnesses, classify_extremal,
                       extremal_bound, family_common_divisor, is_ell_intersecting,
                       is_k_wise_intersecting, realized_level)


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _positive(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"{text!r} is not an integer") from None
    if value <= 0:
        raise argparse.ArgumentTypeError(f"{text!r} must be positive")
    return value


def _non_negative(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"{text!r} is not an integer") from None
    if value < 0:
        raise argparse.ArgumentTypeError(f"{text!r} must be non-negative")
    return value


def _prime_power(text: str) -> int:
    q = _positive(text)
    try:
        split_prime_power(q)
    except ValueError:
        raise argparse.ArgumentTypeError(f"q = {q} is not a prime power p^k") from None
    return q


def _int_list(text: str) -> list[int]:
    try:
        return [int(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"{text!r} is not a comma-separated integer list") from None


def _positive_float(text: str) -> float:
    try:
        value = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"{text!r} is not a number") from None
    if value <= 0:
        raise argparse.ArgumentTypeError(f"{text!r} must be positive")
    return value


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--pretty", action="store_true", help="indent the JSON output")
    common.add_argument("--output", "-o", help="write to this file instead of stdout")
    common.add_argument("--no-meta", action="store_true",
                        help="drop the run-metadata block (for byte-exact comparison)")

    search_opts = _Parser(add_help=False)
    search_opts.add_argument("--cap", type=_positive, help="store at most this many maximum families")
    search_opts.add_argument("--threads", type=_positive, default=None,
                             help="worker processes (default: available CPUs)")
    search_opts.add_argument("--timeout", type=_positive_float, help="seconds before giving up")
    search_opts.add_argument("--max-vertices", type=_positive, help="override the vertex guard")

    parser = _Parser(prog="polyekr", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"polyekr {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("count-irreducibles", parents=[common], help="N_q(n) by Moebius inversion")
    p.add_argument("--q", type=_prime_power, required=True)
    p.add_argument("--n", type=_positive, required=True)

    p = sub.add_parser("construct", parents=[common], help="emit an extremal family as a family file")
    p.add_argument("kind", choices=["trivial", "primary", "exceptional"])
    p.add_argument("--q", type=_prime_power, help="field order (trivial, primary)")
    p.add_argument("--g", type=_int_list, help="trivial: coefficients of the monic generator, constant first")
    p.add_argument("--n", type=_non_negative, help="trivial: member degree")
    p.add_argument("--d", type=_positive, help="primary: the parameter d of H_d")

    p = sub.add_parser("verify", parents=[common], help="check a family file")
    p.add_argument("--file", required=True)
    p.add_argument("--ell", type=_non_negative, help="level to test (default: the file's ell)")
    p.add_argument("--k", type=_positive, help="also test k-wise intersection")

    p = sub.add_parser("search", parents=[common, search_opts],
                       help="maximum l-intersecting families of degree-n polynomials")
    p.add_argument("--q", type=_prime_power, required=True)
    p.add_argument("--n", type=_non_negative, required=True)
    p.add_argument("--ell", type=_non_negative, required=True)
    p.add_argument("--enumerate", action="store_true", help="enumerate and classify every maximum family")

    p = sub.add_parser("theorem4", parents=[common, search_opts],
                       help="mixed-degree maximum l-intersecting families")
    p.add_argument("--q", type=_prime_power, required=True)
    p.add_argument("--degrees", type=_int_list, required=True)
    p.add_argument("--ell", type=_non_negative, required=True)
    p.add_argument("--enumerate", action="store_true", help="list the maximum families in the output")

    p = sub.add_parser("hd", parents=[common], help="H_d, the lcm of all monic degree-d polynomials")
    p.add_argument("--q", type=_prime_power, required=True)
    p.add_argument("--d", type=_positive, required=True)
    return parser


def _guards(args) -> Guards:
    g = Guards.from_env()
    if getattr(args, "max_vertices", None):
        g = replace(g, max_vertices=args.max_vertices)
    if getattr(args, "timeout", None):
        g = replace(g, timeout=args.timeout)
    return g


def _cmd_count(args, guards):
    return {"q": args.q, "n": args.n, "count": count_irreducibles(args.q, args.n),
            "lower_bound_holds": irreducible_lower_bound_holds(args.q, args.n)}


def _cmd_construct(args, guards):
    if args.kind == "exceptional":
        return exceptional_family()
    if args.q is None:
        raise UsageError(f"construct {args.kind}: --q is required")
    f = field_of_order(args.q, guards)
    if args.kind == "primary":
        if args.d is None:
            raise UsageError("construct primary: --d is required")
        return primary_family(f, args.d, guards)
    if args.g is None or args.n is None:
        raise UsageError("construct trivial: --g and --n are required")
    return trivial_family(Poly(f, args.g), args.n, guards)


def _cmd_verify(args, guards):
    fam = read_family(args.file, guards)
    ell = fam.ell if args.ell is None else args.ell
    out = {
        "size": len(fam),
        "ell": ell,
        "degrees": sorted(fam.degree_set),
        "extremal_size": extremal_bound(fam.q, fam.degree_set, ell),
        "intersecting": is_ell_intersecting(fam, ell),
        "realized_level": realized_level(fam),
        "common_divisor": family_common_divisor(fam).to_json(),
        "classification": None,
    }
    if out["intersecting"] and len(fam) == out["extremal_size"]:
        try:
            out["classification"] = classify_extremal(fam, ell, guards).to_json()
        except NotExtremalError:  # pragma: no cover - guarded by the test above
            pass
    if fam.uniform_degree is not None and fam.uniform_degree >= ell:
        ok, missing = check_irreducible_witnesses(fam, ell, guards)
        out["irreducible_witnesses"] = {"ok": ok, "missing": [m.to_json() for m in missing]}
    if args.k is not None:
        if args.k < 2:
            raise UsageError("verify: --k must be at least 2")
        out["k"] = args.k
        out["k_wise_intersecting"] = is_k_wise_intersecting(fam, args.k, ell, guards)
    return out


def _cmd_search(args, guards):
    return verify_theorem1(args.q, args.n, args.ell, enumerate_all=args.enumerate, cap=args.cap,
                           workers=args.threads or default_workers(), guards=guards)


def _cmd_theorem4(args, guards):
    return verify_theorem4(args.q, args.degrees, args.ell, cap=args.cap,
                           workers=args.threads or default_workers(), guards=guards)


def _cmd_hd(args, guards):
    f = field_of_order(args.q, guards)
    hd = lcm_all_monic_degree(f, args.d, check=True, guards=guards)
    return {"q": args.q, "d": args.d, "field": f.to_json(), "degree": hd.degree,
            "poly": hd.to_json(), "factors": factor(hd, guards).to_json()["factors"]}


COMMANDS = {"count-irreducibles": _cmd_count, "construct": _cmd_construct, "verify": _cmd_verify,
            "search": _cmd_search, "theorem4": _cmd_theorem4, "hd": _cmd_hd}


def _emit(args, text: str, stdout):
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        stdout.write(text)


def _render_report(args, report) -> str:
    show_families = args.command == "search" or args.enumerate
    return dumps(report.to_json(include_families=show_families, include_meta=not args.no_meta), args.pretty)


def run(argv=None, stdout=None, stderr=None) -> int:
    stdout = sys.stdout if stdout is None else stdout
    stderr = sys.stderr if stderr is None else stderr
    try:
        args = build_parser().parse_args(argv)
    except UsageError as exc:
        print(exc, file=stderr)
        return 1
    started = time.monotonic()
    try:
        guards = _guards(args)
        result = COMMANDS[args.command](args, guards)
    except TheoremViolation as exc:
        if exc.report is not None:
            _emit(args, _render_report(args, exc.report), stdout)
        print(f"theorem violation: {exc}", file=stderr)
        return 2
    except (UsageError, GuardError, FamilyFormatError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=stderr)
        return 1

    if args.command in ("search", "theorem4"):
        _emit(args, _render_report(args, result), stdout)
        if not result.complete:
            print("error: search timed out; report is incomplete", file=stderr)
            return 1
        return 0
    if args.command == "construct":
        _emit(args, dump_family(result) if not args.pretty else dumps(result.to_json(), True), stdout)
        return 0
    if not args.no_meta:
        result["meta"] = {"command": args.command, "version": __version__,
                          "elapsed_seconds": round(time.monotonic() - started, 3)}
    _emit(args, dumps(result, args.pretty), stdout)
    return 0


def main():  # pragma: no cover
    sys.exit(run())


if __name__ == "__main__":  # pragma: no cover
    main()
