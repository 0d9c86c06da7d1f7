"""Batch command-line front end.

Exit codes: 0 success, 1 domain failure (axiom violation, not invertible,
lambda outside the convergence disk), 2 input or parse error.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import io
from .config import RunConfig, Tolerances
from .errors import ConvergenceDomainError, FinalgError, NotInvertibleError
from .norms import NormKind, check_norm_axioms, element_norm
from .semigroup import convolve, validate_table
from .spectral import invert_cayley_hamilton, one_sided_inverse, resolvent_neumann, spectrum

EXIT_OK, EXIT_DOMAIN, EXIT_INPUT = 0, 1, 2


class InputError(FinalgError):
    pass


def _complex_arg(text: str) -> complex:
    parts = text.split(",")
    if len(parts) not in (1, 2):
        raise argparse.ArgumentTypeError(f"expected 're,im', got {text!r}")
    try:
        vals = [float(p) for p in parts]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected 're,im', got {text!r}") from None
    return complex(vals[0], vals[1] if len(vals) == 2 else 0.0)


def _norm_kind(text: str) -> NormKind:
    try:
        return NormKind(text)
    except ValueError:
        names = ", ".join(k.value for k in NormKind)
        raise argparse.ArgumentTypeError(f"unknown norm kind {text!r} (choose from {names})") from None


def _spectrum_part(x: float, scale: float) -> str:
    if abs(x) <= 1e-12 * scale:
        x = 0.0
    return io.format_real(x, 12)


def _emit(args, text: str, payload) -> None:
    if args.json:
        print(json.dumps(payload, sort_keys=True))
    else:
        sys.stdout.write(text)


def _coords_payload(coords):
    return [[float(z.real) + 0.0, float(z.imag) + 0.0] for z in coords]


def cmd_validate(args, cfg: RunConfig) -> int:
    report = validate_table(io.read_table(args.table))
    if report.ok:
        _emit(args, "OK\n", {"ok": True})
        return EXIT_OK
    lines = []
    if not report["associativity"].passed:
        x, y, z = report["associativity"].witness
        lines.append(f"ASSOC-FAIL {x} {y} {z}")
    if not report["identity"].passed:
        lines.append(f"IDENT-FAIL {report['identity'].witness}")
    _emit(args, "".join(line + "\n" for line in lines),
          {"ok": False, "failures": [{"check": c.name, "witness": c.witness} for c in report.failures()]})
    return EXIT_DOMAIN


def cmd_spectrum(args, cfg: RunConfig) -> int:
    a = io.read_element(args.element)
    tol = args.tol if args.tol is not None else cfg.tolerances.cluster_radius
    spec = spectrum(a, tol=tol, root_tol=cfg.tolerances.root_residual)
    lines = []
    for value, count in spec.clusters:
        scale = 1 + abs(value)
        lines.append(f"{_spectrum_part(value.real, scale)} {_spectrum_part(value.imag, scale)} {count}\n")
    _emit(args, "".join(lines),
          {"clusters": [[float(v.real), float(v.imag), c] for v, c in spec.clusters]})
    return EXIT_OK


def cmd_invert(args, cfg: RunConfig) -> int:
    a = io.read_element(args.element)
    try:
        inv = invert_cayley_hamilton(a, cfg.tolerances.invertibility)
    except NotInvertibleError as exc:
        print(f"NOT-INVERTIBLE {exc}", file=sys.stderr)
        _emit(args, "NOT-INVERTIBLE\n", {"invertible": False})
        return EXIT_DOMAIN
    _emit(args, io.format_coords(inv.coords), {"invertible": True, "coords": _coords_payload(inv.coords)})
    return EXIT_OK


def cmd_one_sided(args, cfg: RunConfig) -> int:
    a = io.read_element(args.element)
    y = one_sided_inverse(a, args.side, cfg.tolerances.inverse_check)
    if y is None:
        _emit(args, "NONE\n", {"side": args.side, "coords": None})
        return EXIT_DOMAIN
    _emit(args, io.format_coords(y.coords), {"side": args.side, "coords": _coords_payload(y.coords)})
    return EXIT_OK


def cmd_resolvent(args, cfg: RunConfig) -> int:
    a = io.read_element(args.element)
    target = args.error if args.error is not None else cfg.tolerances.resolvent_error
    try:
        res = resolvent_neumann(a, args.lam, target, args.norm, cfg.tolerances.resolvent_max_terms)
    except ConvergenceDomainError as exc:
        msg = f"OUT-OF-DISK |lambda|={io.format_real(exc.lam_abs)} norm={io.format_real(exc.norm)}"
        _emit(args, msg + "\n", {"error": "OUT-OF-DISK", "lambda_abs": exc.lam_abs, "norm": exc.norm})
        return EXIT_DOMAIN
    _emit(args, io.format_coords(res.value.coords),
          {"coords": _coords_payload(res.value.coords), "terms_used": res.terms_used,
           "error_bound": res.error_bound, "norm": res.norm, "norm_kind": res.norm_kind.value})
    return EXIT_OK


def cmd_norm(args, cfg: RunConfig) -> int:
    a = io.read_element(args.element)
    value = element_norm(a, args.kind)
    _emit(args, io.format_real(value) + "\n", {"kind": args.kind.value, "norm": value})
    return EXIT_OK


def cmd_convolve(args, cfg: RunConfig) -> int:
    table = io.read_table(args.table)
    f = io.read_values(args.f)
    g = io.read_values(args.g)
    for name, v in ((args.f, f), (args.g, g)):
        if v.size != table.n:
            raise io.ParseError(f"function has {v.size} values, table has {table.n} elements", name)
    report = validate_table(table)
    if not report.ok:
        print(f"invalid Cayley table:\n{report}", file=sys.stderr)
        return EXIT_DOMAIN
    out = convolve(f, g, table)
    _emit(args, io.format_coords(out), {"coords": _coords_payload(out)})
    return EXIT_OK


def cmd_check_axioms(args, cfg: RunConfig) -> int:
    alg = io.algebra_from_words(args.algebra.split())
    trials = args.trials if args.trials is not None else cfg.trials
    seed = args.seed if args.seed is not None else cfg.seed
    report = check_norm_axioms(alg, args.kind, trials, seed, cfg.tolerances.axiom_margin)
    lines = [f"{'PASS' if c.passed else 'FAIL'} {c.name} {io.format_real(c.residual, 6)} {c.violations}\n"
             for c in report.checks]
    lines.append("OK\n" if report.ok else "FAIL\n")
    _emit(args, "".join(lines),
          {"ok": report.ok, "checks": [{"name": c.name, "passed": c.passed, "margin": c.residual,
                                        "violations": c.violations} for c in report.checks]})
    return EXIT_OK if report.ok else EXIT_DOMAIN


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise InputError(message)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="finalg", description=__doc__.splitlines()[0])
    parser.add_argument("--json", action="store_true", help="wrap results in a JSON object")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("validate-semigroup", help="check a Cayley table")
    p.add_argument("table")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("spectrum", help="spectrum of an element, one cluster per line")
    p.add_argument("element")
    p.add_argument("--tol", type=float, help="cluster radius")
    p.set_defaults(func=cmd_spectrum)

    p = sub.add_parser("invert", help="Cayley-Hamilton inverse")
    p.add_argument("element")
    p.set_defaults(func=cmd_invert)

    p = sub.add_parser("one-sided-inverse", help="left or right inverse by linear solve")
    p.add_argument("element")
    p.add_argument("--side", choices=("left", "right"), required=True)
    p.set_defaults(func=cmd_one_sided)

    p = sub.add_parser("resolvent", help="(lambda e - a)^-1 by Neumann series")
    p.add_argument("element")
    p.add_argument("--lambda", dest="lam", type=_complex_arg, required=True, metavar="RE,IM")
    p.add_argument("--error", type=float, help="target truncation error")
    p.add_argument("--norm", type=_norm_kind, default=NormKind.REG_OP_L1)
    p.set_defaults(func=cmd_resolvent)

    p = sub.add_parser("norm", help="norm of an element")
    p.add_argument("element")
    p.add_argument("--kind", type=_norm_kind, required=True)
    p.set_defaults(func=cmd_norm)

    p = sub.add_parser("convolve", help="convolution of two functions over a Cayley table")
    p.add_argument("f")
    p.add_argument("g")
    p.add_argument("table")
    p.set_defaults(func=cmd_convolve)

    p = sub.add_parser("check-axioms", help="randomized normed-algebra axiom check")
    p.add_argument("--algebra", required=True, metavar="SPEC",
                   help="'function N', 'matrix D' or 'semigroup PATH'")
    p.add_argument("--kind", type=_norm_kind, required=True)
    p.add_argument("--trials", type=int)
    p.add_argument("--seed", type=int)
    p.set_defaults(func=cmd_check_axioms)
    return parser


def main(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
        cfg = RunConfig(tolerances=Tolerances.from_env())
        return args.func(args, cfg)
    except (InputError, io.ParseError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except FinalgError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except ValueError as exc:
        # malformed FINALG_DEFAULT_TOL and similar configuration problems
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
