"""Command-line front end: quadrature dumps, kernel evaluation, transform
application, operator application, and the verification suites.

Exit codes: 0 success (all checks passed for ``verify``), 1 a verification
check failed, 2 usage or configuration error.  Reports are JSON on stdout;
node dumps are CSV.  ``verify`` reads an optional flat ``key = value``
config file (``--config`` or the BARGMANN_CONFIG environment variable) and
applies long-form flag overrides on top; the effective configuration is
echoed into the report metadata.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

import numpy as np

from .kernels import KernelFamily, kernel_matrix
from .operators import DiskOperator, MonomialExpansion, apply_exact, apply_fd, casimir
from .quadrature import disk_rule, gauss_halfline, gauss_line, gaussian_plane_rule
from .special import basis_matrix
from .transforms import forward, make_transform
from .verify import SUITES, RunConfig, run_suite

__all__ = ["build_parser", "main"]


def _point(text: str) -> complex:
    """Parse 're,im' into a complex number."""
    parts = text.split(",")
    if len(parts) != 2:
        raise argparse.ArgumentTypeError(f"expected 're,im', got {text!r}")
    try:
        return complex(float(parts[0]), float(parts[1]))
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


_FAMILIES = (
    "classical",
    "second",
    "generalized_second",
    "dirichlet",
    "gen_bergman_dirichlet",
)


def _add_family_arguments(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--family", required=True, choices=_FAMILIES)
    parser.add_argument("--delta", type=float, help="second-kind weight exponent")
    parser.add_argument("--nu", type=float, help="generalized-second parameter")
    parser.add_argument("--ell", type=int, help="generalized-second level")
    parser.add_argument("--alpha", type=float, help="Bergman-Dirichlet weight exponent")
    parser.add_argument("--m", type=int, help="Bergman-Dirichlet derivative order")


def _family_params(args: argparse.Namespace) -> tuple:
    """Collect the positional parameters the chosen family requires."""
    needed = {
        "classical": (),
        "second": ("delta",),
        "generalized_second": ("nu", "ell"),
        "dirichlet": (),
        "gen_bergman_dirichlet": ("alpha", "m"),
    }[args.family]
    values = []
    for name in needed:
        value = getattr(args, name)
        if value is None:
            raise ValueError(f"family {args.family!r} needs --{name}")
        values.append(value)
    return tuple(values)


def _emit(payload: dict) -> None:
    json.dump(payload, sys.stdout, indent=2)
    sys.stdout.write("\n")


# ---------------------------------------------------------------------------
# Subcommands
# ---------------------------------------------------------------------------

def _cmd_nodes(args: argparse.Namespace) -> int:
    if args.rule in ("line", "halfline", "plane") and args.n is None:
        raise ValueError(f"--rule {args.rule} needs --n")
    if args.rule == "line":
        rule = gauss_line(args.n)
    elif args.rule == "halfline":
        rule = gauss_halfline(args.n, args.alpha)
    elif args.rule == "plane":
        rule = gaussian_plane_rule(args.n)
    else:
        if args.radial is None or args.angular is None:
            raise ValueError("--rule disk needs --radial and --angular")
        rule = disk_rule(args.radial, args.angular, args.gamma)
    nodes = np.asarray(rule.nodes, dtype=complex)
    for node, weight in zip(nodes, rule.weights):
        print(f"{node.real:.17g}, {node.imag:.17g}, {weight:.17g}")
    return 0


def _cmd_kernel_eval(args: argparse.Namespace) -> int:
    family = KernelFamily(args.family, _family_params(args))
    z = np.array([args.z])
    x = np.array([args.x])
    value = complex(kernel_matrix(family, z, x, strategy="primary")[0, 0])
    payload = {
        "family": args.family,
        "z_re": args.z.real,
        "z_im": args.z.imag,
        "x": args.x,
        "value_re": value.real,
        "value_im": value.imag,
    }
    if args.cross_check:
        other = complex(
            kernel_matrix(family, z, x, strategy="series", J=args.truncation)[0, 0]
        )
        payload["cross_check_re"] = other.real
        payload["cross_check_im"] = other.imag
        payload["discrepancy"] = abs(value - other)
    _emit(payload)
    return 0


def _load_coefficients(path: str) -> np.ndarray:
    with open(path, "r", encoding="utf-8") as handle:
        raw = json.load(handle)
    if not isinstance(raw, list) or not raw:
        raise ValueError("coefficient file must hold a non-empty JSON list")
    out = np.empty(len(raw), dtype=complex)
    for k, entry in enumerate(raw):
        if isinstance(entry, (int, float)):
            out[k] = entry
        elif isinstance(entry, list) and len(entry) == 2:
            out[k] = complex(entry[0], entry[1])
        else:
            raise ValueError("coefficients must be numbers or [re, im] pairs")
    return out


def _cmd_transform(args: argparse.Namespace) -> int:
    op = make_transform(args.family, *_family_params(args))
    coeffs = _load_coefficients(args.input)
    if coeffs.shape[0] - 1 > op.series_truncation:
        raise ValueError(
            f"coefficient degree {coeffs.shape[0] - 1} exceeds the series "
            f"truncation {op.series_truncation}"
        )
    fv = basis_matrix(op.kernel.source_basis(), coeffs.shape[0] - 1,
                      op.source_rule.nodes) @ coeffs
    value = complex(forward(op, fv, args.at))
    # a-posteriori estimate: the same evaluation through the independent
    # series route; the two routes share only the source rule
    other = complex(forward(op, fv, args.at, strategy="series"))
    _emit({
        "value_re": value.real,
        "value_im": value.imag,
        "truncation": op.series_truncation,
        "est_error": abs(value - other),
    })
    return 0


def _cmd_operator(args: argparse.Namespace) -> int:
    op = casimir(args.gamma) if args.casimir else DiskOperator(args.gamma)
    with open(args.apply, "r", encoding="utf-8") as handle:
        expansion = MonomialExpansion.from_json(json.load(handle))
    if args.fd:
        if args.at is None:
            raise ValueError("--fd needs --at re,im")
        value = complex(apply_fd(op, expansion, args.at, h=args.h))
        _emit({"value_re": value.real, "value_im": value.imag})
        return 0
    _emit(apply_exact(op, expansion).to_json())
    return 0


_CONFIG_FLAGS = (
    "plane_order",
    "disk_radial",
    "disk_angular",
    "source_order",
    "series_truncation",
    "omega_tmax",
    "omega_h",
    "fd_step",
    "tolerance_scale",
)


def _cmd_verify(args: argparse.Namespace) -> int:
    path = args.config or os.environ.get("BARGMANN_CONFIG")
    cfg = RunConfig.from_file(path) if path else RunConfig()
    overrides = {
        name: getattr(args, name)
        for name in _CONFIG_FLAGS
        if getattr(args, name) is not None
    }
    cfg = cfg.with_overrides(overrides)
    cfg.validate()
    report = run_suite(args.suite, cfg)
    _emit(report.to_json())
    return 0 if report.passed else 1


# ---------------------------------------------------------------------------
# Parser
# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bargmann",
        description="Bargmann-type transforms: kernels, quadrature, "
                    "operators, and verification suites.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("nodes", help="dump a quadrature rule as CSV "
                                     "(node_re, node_im, weight)")
    p.add_argument("--rule", required=True,
                   choices=["line", "halfline", "disk", "plane"])
    p.add_argument("--n", type=int, help="order for line/halfline/plane rules")
    p.add_argument("--alpha", type=float, default=0.0,
                   help="halfline measure exponent (default 0)")
    p.add_argument("--radial", type=int, help="disk rule radial order")
    p.add_argument("--angular", type=int, help="disk rule angular order")
    p.add_argument("--gamma", type=float, default=0.0,
                   help="disk weight exponent (default 0)")
    p.set_defaults(func=_cmd_nodes)

    p = sub.add_parser("kernel-eval", help="evaluate a transform kernel K(z, x)")
    _add_family_arguments(p)
    p.add_argument("--z", required=True, type=_point, help="target point re,im")
    p.add_argument("--x", required=True, type=float, help="source point")
    p.add_argument("--cross-check", action="store_true",
                   help="also evaluate by truncated basis series and report "
                        "the discrepancy")
    p.add_argument("--truncation", type=int, default=64,
                   help="series truncation for --cross-check (default 64)")
    p.set_defaults(func=_cmd_kernel_eval)

    p = sub.add_parser("transform", help="apply a forward transform to source "
                                         "coefficients at one target point")
    _add_family_arguments(p)
    p.add_argument("--input", required=True,
                   help="JSON file: list of source-basis coefficients, "
                        "numbers or [re, im] pairs")
    p.add_argument("--at", required=True, type=_point, help="target point re,im")
    p.set_defaults(func=_cmd_transform)

    p = sub.add_parser("operator", help="apply an invariant disk operator to a "
                                        "monomial expansion")
    p.add_argument("--gamma", required=True, type=float)
    p.add_argument("--casimir", action="store_true",
                   help="use the shifted (Casimir) form of the operator")
    p.add_argument("--apply", required=True,
                   help="JSON file with {'a,b': [re, im]} expansion terms")
    p.add_argument("--fd", action="store_true",
                   help="evaluate by centered finite differences at --at "
                        "instead of symbolically")
    p.add_argument("--at", type=_point, help="evaluation point re,im for --fd")
    p.add_argument("--h", type=float, default=1e-3,
                   help="finite-difference step (default 1e-3)")
    p.set_defaults(func=_cmd_operator)

    p = sub.add_parser("verify", help="run a verification suite and print the "
                                      "JSON report")
    p.add_argument("suite", choices=sorted(SUITES) + ["all"])
    p.add_argument("--config",
                   help="flat 'key = value' config file (default: "
                        "$BARGMANN_CONFIG if set)")
    p.add_argument("--plane-order", type=int)
    p.add_argument("--disk-radial", type=int)
    p.add_argument("--disk-angular", type=int)
    p.add_argument("--source-order", type=int)
    p.add_argument("--series-truncation", type=int)
    p.add_argument("--omega-tmax", type=float)
    p.add_argument("--omega-h", type=float)
    p.add_argument("--fd-step", type=float)
    p.add_argument("--tolerance-scale", type=float)
    p.set_defaults(func=_cmd_verify)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, OSError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
