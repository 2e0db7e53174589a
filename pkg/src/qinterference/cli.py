"""``qinterference`` command line.

Exit codes: 0 success, 1 input or usage error, 2 verification failure.
The default geometry can be overridden through ``QINTERFERENCE_L``,
``QINTERFERENCE_THETA`` and ``QINTERFERENCE_K``; explicit flags win.
"""

import argparse
import os
import sys
import warnings
from pathlib import Path

import numpy as np

from . import errata
from .doubleslit import (DEFAULT_GRID, SlitGeometry, density_grid, marginal_pattern,
                         oracle_verify)
from .errors import QInterferenceError
from .formats import read_state, render_grid_csv, render_report
from .interference2 import i2_quantifier
from .interference3 import i3_quantifier
from .states import (BELL_STATES, EIGENVALUE_FLOOR, HERMITIAN_TOL, TRACE_TOL, from_pure,
                     random_density, standard_state, werner_2q, werner_ghz)
from .sweeps import DEFAULT_STEPS, FAMILIES, sweep

EXIT_OK, EXIT_INPUT, EXIT_VERIFY = 0, 1, 2
DEFAULT_TRIALS = {4: 200, 8: 100}
DEFAULT_TOLERANCE = 1e-9
ENV_GEOMETRY = {"L": "QINTERFERENCE_L", "theta": "QINTERFERENCE_THETA", "k": "QINTERFERENCE_K"}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse exits with 2 on bad usage, which collides with "verification failed"
    def error(self, message):
        self.print_usage(sys.stderr)
        raise UsageError(f"{self.prog}: error: {message}")


def _positive(kind):
    def conv(text):
        try:
            v = kind(text)
        except ValueError:
            raise argparse.ArgumentTypeError(f"not a number: {text!r}") from None
        if not v > 0:
            raise argparse.ArgumentTypeError(f"must be positive, got {text}")
        return v
    return conv


def _validation_flags(p):
    p.add_argument("--trace-tol", type=_positive(float), default=TRACE_TOL,
                   help=f"allowed |tr(rho) - 1| (default {TRACE_TOL:g})")
    p.add_argument("--eig-floor", type=float, default=EIGENVALUE_FLOOR,
                   help=f"smallest accepted eigenvalue (default {EIGENVALUE_FLOOR:g})")
    p.add_argument("--herm-tol", type=_positive(float), default=HERMITIAN_TOL,
                   help=f"allowed Hermiticity deviation (default {HERMITIAN_TOL:g})")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="qinterference",
                     description="Multiparticle interference quantifiers for 2- and 3-qubit states.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    q = sub.add_parser("quantify", help="interference quantifier of a state file")
    q.add_argument("--input", required=True, type=Path)
    q.add_argument("--system", choices=("auto", "2q", "3q"), default="auto")
    q.add_argument("--format", choices=("text", "json", "csv"), default="text")
    q.add_argument("--out", type=Path)
    _validation_flags(q)

    s = sub.add_parser("sweep", help="Werner-family comparison table (CSV)")
    s.add_argument("--family", choices=FAMILIES, required=True)
    s.add_argument("--steps", type=_positive(int), default=DEFAULT_STEPS)
    s.add_argument("--format", choices=("csv", "json"), default="csv")
    s.add_argument("--out", type=Path)

    m = sub.add_parser("simulate", help="coincidence density on a one-period grid (CSV)")
    m.add_argument("--input", required=True, type=Path)
    m.add_argument("--L", type=_positive(float), dest="L")
    m.add_argument("--theta", type=_positive(float))
    m.add_argument("--k", type=_positive(float))
    m.add_argument("--grid", type=_positive(int), default=DEFAULT_GRID)
    m.add_argument("--envelope", action="store_true",
                   help="keep the 1/r envelope instead of the pure far-field limit")
    m.add_argument("--marginals", action="store_true",
                   help="also emit the single-particle patterns")
    m.add_argument("--out", type=Path)
    _validation_flags(m)

    v = sub.add_parser("verify", help="closed form against the Fourier oracle")
    v.add_argument("--trials", type=_positive(int),
                   help="random states per dimension (default 200 for 2q, 100 for 3q)")
    v.add_argument("--seed", type=int, default=42)
    v.add_argument("--tolerance", type=_positive(float), default=DEFAULT_TOLERANCE)
    v.add_argument("--grid", type=_positive(int), default=DEFAULT_GRID)
    v.add_argument("--format", choices=("text", "json"), default="text")
    v.add_argument("--out", type=Path)

    e = sub.add_parser("errata", help="markdown list of corrections to the printed tables")
    e.add_argument("--out", type=Path)
    return parser


def _emit(text, out):
    if out is None:
        sys.stdout.write(text)
    else:
        out.write_text(text, encoding="utf-8")


def _load(args):
    return read_state(args.input, trace_tol=args.trace_tol, eig_floor=args.eig_floor,
                      herm_tol=args.herm_tol)


def geometry(args, environ=None) -> SlitGeometry:
    environ = os.environ if environ is None else environ
    values = {}
    for name, var in ENV_GEOMETRY.items():
        flag = getattr(args, name, None)
        if flag is not None:
            values[name] = flag
        elif var in environ:
            try:
                values[name] = float(environ[var])
            except ValueError:
                raise UsageError(f"{var}={environ[var]!r} is not a number") from None
    return SlitGeometry(**values)


def cmd_quantify(args):
    rho = _load(args)
    system = args.system
    if system == "auto":
        system = "2q" if rho.dim == 4 else "3q"
    if (system == "2q") != (rho.dim == 4):
        raise UsageError(f"--system {system} does not match a {rho.dim}x{rho.dim} state")
    report = i2_quantifier(rho) if system == "2q" else i3_quantifier(rho)
    _emit(render_report(report, args.format), args.out)
    return EXIT_OK


def cmd_sweep(args):
    if args.steps < 2:
        raise UsageError("--steps must be at least 2")
    _emit(render_report(sweep(args.family, args.steps), args.format), args.out)
    return EXIT_OK


def cmd_simulate(args):
    rho = _load(args)
    g = geometry(args)
    grid = density_grid(rho, g, args.grid, envelope=args.envelope)
    _emit(render_grid_csv(grid), args.out)
    if args.marginals:
        for particle in "ABC"[:rho.n_qubits]:
            text = render_grid_csv(marginal_pattern(rho, g, particle, args.grid))
            if args.out is None:
                sys.stdout.write(f"# marginal {particle}\n{text}")
            else:
                target = args.out.with_name(f"{args.out.stem}_marginal_{particle}{args.out.suffix}")
                target.write_text(text, encoding="utf-8")
    return EXIT_OK


def verification_states(trials, seed):
    """Named states followed by seeded random states of every rank, per dimension."""
    named = [(name, from_pure(standard_state(name))) for name in BELL_STATES + ("ghz", "w")]
    named += [("werner(0.5)", werner_2q(0.5)), ("werner-ghz(0.5)", werner_ghz(0.5))]
    rng = np.random.default_rng(seed)
    randoms = []
    for dim in (4, 8):
        n = DEFAULT_TRIALS[dim] if trials is None else trials
        for t in range(n):
            rank = 1 + t % dim
            randoms.append((f"random-{dim}-{t}", random_density(dim, rank, rng)))
    return named + randoms


def cmd_verify(args):
    g = SlitGeometry()
    worst_group, worst_total, failures = 0.0, 0.0, []
    count = 0
    for label, rho in verification_states(args.trials, args.seed):
        rep = oracle_verify(rho, g, args.grid)
        count += 1
        worst_group = max(worst_group, rep.max_group_deviation)
        worst_total = max(worst_total, rep.max_total_deviation)
        dev = max(rep.max_group_deviation, rep.max_total_deviation)
        if dev > args.tolerance:
            failures.append((label, dev))
    divs = errata.divergences()
    passed = not failures
    summary = {
        "kind": "verify-summary",
        "states": count,
        "tolerance": args.tolerance,
        "max_group_deviation": worst_group,
        "max_total_deviation": worst_total,
        "failures": len(failures),
        "passed": passed,
        "errata_divergences": len(divs),
        "errata_confirmed_by_oracle": sum(v == "derived" for _, _, v in divs),
    }
    if args.format == "json":
        text = render_report(summary, "json")
    else:
        text = render_report(summary, "text")
        for label, dev in failures[:10]:
            text += f"FAIL {label}: deviation {dev:.3e}\n"
        c_sin = errata.corrected_c_sin()
        text += f"sign finding: three-qubit sin(2k theta zC) group is {c_sin}\n"
    _emit(text, args.out)
    return EXIT_OK if passed else EXIT_VERIFY


def cmd_errata(args):
    _emit(errata.render_errata(), args.out)
    return EXIT_OK


COMMANDS = {"quantify": cmd_quantify, "sweep": cmd_sweep, "simulate": cmd_simulate,
            "verify": cmd_verify, "errata": cmd_errata}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        with warnings.catch_warnings():
            warnings.simplefilter("always")
            return COMMANDS[args.command](args)
    except UsageError as exc:
        print(exc, file=sys.stderr)
        return EXIT_INPUT
    except (QInterferenceError, OSError, ValueError) as exc:
        print(f"qinterference: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
