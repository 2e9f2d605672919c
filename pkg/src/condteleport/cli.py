"""Command-line front end emitting reproducible JSON/CSV plot data.

Exit codes: 0 success, 2 usage error, 3 unresolvable precision loss,
4 impossible photon-count outcome, 5 failed cutoff-convergence check.
Identical command lines produce byte-identical output files: floats are
written with full round-trip precision and no timestamps are embedded.
"""

import argparse
import json
import sys

import numpy as np

from . import __version__
from .analysis import (
    GridCellQuantity,
    SuccessProbabilityQuantity,
    all_outcomes,
    conditional_success,
    convergence_check,
    diagonal_csv_rows,
    diagonal_only,
    diagonal_sweep,
    grid_csv_rows,
    grid_to_json_dict,
    profile_csv_rows,
    sweep_grid,
)
from .errors import (
    ConvergenceError,
    ImpossibleOutcomeError,
    PrecisionLossError,
)
from .fock import DEFAULT_CUTOFF, make_state
from .protocol import MeasurementOutcome, teleport_event
from .quadrature import BKConfig, bk_csv_rows, bk_pu, bk_sweep, bk_total_probability
from .squeeze import SqueezeParams, coeff_profile

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_PRECISION = 3
EXIT_IMPOSSIBLE = 4
EXIT_NOT_CONVERGED = 5


def parse_state(text):
    """Amplitudes from ``re,im;re,im;...`` (index = photon number)."""
    amps = []
    for chunk in text.split(";"):
        parts = chunk.split(",")
        if len(parts) != 2:
            raise ValueError(f"bad amplitude {chunk!r}: expected re,im")
        amps.append(complex(float(parts[0]), float(parts[1])))
    return amps


def load_state(args):
    """Build the normalized input state from --state or --state-file."""
    if args.state_file:
        with open(args.state_file) as fh:
            pairs = json.load(fh)
        amps = [complex(re, im) for re, im in pairs]
    else:
        amps = parse_state(args.state)
    arr = np.asarray(amps, dtype=complex)
    norm = float(np.linalg.norm(arr))
    if norm < 1e-12:
        raise ValueError("input state has zero norm")
    if abs(norm - 1.0) > 1e-6:
        print(
            f"warning: renormalizing input state (norm was {norm:.6g})",
            file=sys.stderr,
        )
    return make_state(arr / norm, args.cutoff)


def state_pairs(state):
    return [[float(a.real), float(a.imag)] for a in state.amplitudes]


def write_output(args, text):
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def json_dump(obj):
    # round-trip float repr keeps all 17 significant digits
    return json.dumps(obj, indent=2) + "\n"


def reproducibility_block(args, convergence=None):
    block = {"version": __version__, "cutoff": args.cutoff}
    if convergence is not None:
        block["convergence"] = {
            "quantity": convergence.quantity,
            "cutoffs": list(convergence.cutoffs),
            "difference": convergence.difference,
            "passed": convergence.passed,
        }
    return block


def run_config_dict(args, **extra):
    cfg = {
        "command": args.command,
        "alpha": getattr(args, "alpha", None),
        "alpha_phase": getattr(args, "alpha_phase", None),
        "beta": getattr(args, "beta", None),
        "beta_phase": getattr(args, "beta_phase", None),
        "cutoff": args.cutoff,
        "format": getattr(args, "format", "json"),
    }
    cfg.update(extra)
    return {k: v for k, v in cfg.items() if v is not None}


def cmd_coeffs(args):
    alpha = SqueezeParams(args.alpha, args.alpha_phase)
    beta = SqueezeParams(args.beta, args.beta_phase)
    profile = coeff_profile(args.n, args.d, alpha, beta, args.mmax)
    if args.format == "csv":
        write_output(args, "\n".join(profile_csv_rows(profile)) + "\n")
    else:
        payload = {
            "config": run_config_dict(args, n=args.n, d=args.d, mmax=args.mmax),
            "profile": [[float(v.real), float(v.imag)] for v in profile],
            "reproducibility": reproducibility_block(args),
        }
        write_output(args, json_dump(payload))
    return EXIT_OK


def cmd_teleport(args):
    psi = load_state(args)
    alpha = SqueezeParams(args.alpha, args.alpha_phase)
    beta = SqueezeParams(args.beta, args.beta_phase)
    outcome = MeasurementOutcome(args.n, args.nprime)
    result = teleport_event(psi, alpha, beta, outcome)
    payload = {
        "config": run_config_dict(args, n=args.n, nprime=args.nprime),
        "input": state_pairs(psi),
        "psi_out": state_pairs(result.psi_out),
        "psi_tel": state_pairs(result.psi_tel),
        "probability": result.probability,
        "fidelity": result.fidelity,
        "reproducibility": reproducibility_block(args),
    }
    write_output(args, json_dump(payload))
    return EXIT_OK


def _maybe_convergence(args, psi, alpha, beta, quantity):
    if not args.check_convergence:
        return None
    return convergence_check(
        psi, alpha, beta, quantity, cutoffs=(args.cutoff, 2 * args.cutoff)
    )


def cmd_sweep(args):
    psi = load_state(args)
    alpha = SqueezeParams(args.alpha, args.alpha_phase)
    beta = SqueezeParams(args.beta, args.beta_phase)
    grid = sweep_grid(psi, alpha, beta, args.nmax, workers=args.workers)
    convergence = _maybe_convergence(
        args, psi, alpha, beta, GridCellQuantity(0, 0, "probability")
    )
    if args.format == "csv":
        write_output(args, "\n".join(grid_csv_rows(grid)) + "\n")
    else:
        payload = grid_to_json_dict(grid)
        payload["config"] = run_config_dict(args, nmax=args.nmax)
        payload["reproducibility"] = reproducibility_block(args, convergence)
        write_output(args, json_dump(payload))
    return EXIT_OK


def cmd_diagonal(args):
    psi = load_state(args)
    alpha = SqueezeParams(args.alpha, args.alpha_phase)
    beta = SqueezeParams(args.beta, args.beta_phase)
    diag = diagonal_sweep(psi, alpha, beta, args.nmax)
    if args.format == "csv":
        write_output(args, "\n".join(diagonal_csv_rows(diag)) + "\n")
    else:
        payload = {
            "config": run_config_dict(args, nmax=args.nmax),
            "rows": [
                {"n": n, "fidelity": f, "probability": p} for n, f, p in diag
            ],
            "reproducibility": reproducibility_block(args),
        }
        write_output(args, json_dump(payload))
    return EXIT_OK


def cmd_pu(args):
    psi = load_state(args)
    alpha = SqueezeParams(args.alpha, args.alpha_phase)
    beta = SqueezeParams(args.beta, args.beta_phase)
    grid = sweep_grid(psi, alpha, beta, args.nmax, workers=args.workers)
    flt = diagonal_only if args.diagonal else all_outcomes
    p_u = conditional_success(grid, args.fu, flt)
    quantity = SuccessProbabilityQuantity(args.fu, args.nmax, args.diagonal)
    convergence = _maybe_convergence(args, psi, alpha, beta, quantity)
    payload = {
        "config": run_config_dict(args, nmax=args.nmax, fu=args.fu),
        "f_u": args.fu,
        "filter": "diagonal" if args.diagonal else "all",
        "p_u": p_u,
        "total_probability": grid.total_probability,
        "reproducibility": reproducibility_block(args, convergence),
    }
    write_output(args, json_dump(payload))
    return EXIT_OK


def cmd_bk(args):
    psi = load_state(args)
    config = BKConfig(args.r, args.grid_l, args.grid_h, args.gain)
    sweep = bk_sweep(psi, config, cutoff=args.cutoff)
    xs, fid, density = sweep
    if args.format == "csv":
        write_output(args, "\n".join(bk_csv_rows(xs, fid, density)) + "\n")
        return EXIT_OK
    p_u = bk_pu(psi, config, args.fu, cutoff=args.cutoff, sweep=sweep)
    payload = {
        "config": run_config_dict(args, r=args.r, fu=args.fu, gain=args.gain),
        "r": config.r,
        "F_u": args.fu,
        "P_u": p_u,
        "grid": {"L": config.grid_half_width, "h": config.grid_step},
        "total_probability": bk_total_probability(config, density),
        "reproducibility": reproducibility_block(args),
    }
    write_output(args, json_dump(payload))
    return EXIT_OK


def _add_state_args(p):
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--state", help="amplitudes as 're,im;re,im;...'")
    group.add_argument("--state-file", help="JSON file with [[re, im], ...]")


def _add_squeeze_args(p):
    p.add_argument("--alpha", type=float, required=True, help="|alpha| of squeezer 1-2")
    p.add_argument("--beta", type=float, required=True, help="|beta| of squeezer 0-1")
    p.add_argument("--alpha-phase", type=float, default=0.0)
    p.add_argument("--beta-phase", type=float, default=0.0)


def _add_common(p):
    p.add_argument("--cutoff", type=int, default=DEFAULT_CUTOFF)
    p.add_argument("--output", help="output path (default: stdout)")
    p.add_argument("--format", choices=("json", "csv"), default="json")


def build_parser():
    parser = argparse.ArgumentParser(
        prog="condteleport",
        description="Conditional-teleportation simulator: squeezers plus photon counting",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("coeffs", help="squeeze-coefficient product profile")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--d", type=int, default=0)
    _add_squeeze_args(p)
    p.add_argument("--mmax", type=int, required=True)
    _add_common(p)
    p.set_defaults(func=cmd_coeffs)

    p = sub.add_parser("teleport", help="one detection event end to end")
    _add_state_args(p)
    _add_squeeze_args(p)
    p.add_argument("--n", type=int, required=True, help="photons counted in mode 0")
    p.add_argument("--nprime", type=int, required=True, help="photons counted in mode 1")
    _add_common(p)
    p.set_defaults(func=cmd_teleport)

    p = sub.add_parser("sweep", help="fidelity/probability over the outcome grid")
    _add_state_args(p)
    _add_squeeze_args(p)
    p.add_argument("--nmax", type=int, default=12)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--check-convergence", action="store_true")
    _add_common(p)
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("diagonal", help="the n = n' slice of the grid")
    _add_state_args(p)
    _add_squeeze_args(p)
    p.add_argument("--nmax", type=int, default=30)
    _add_common(p)
    p.set_defaults(func=cmd_diagonal)

    p = sub.add_parser("pu", help="success probability above a fidelity threshold")
    _add_state_args(p)
    _add_squeeze_args(p)
    p.add_argument("--fu", type=float, required=True)
    p.add_argument("--nmax", type=int, default=12)
    p.add_argument("--diagonal", action="store_true", help="count only n = n' outcomes")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--check-convergence", action="store_true")
    _add_common(p)
    p.set_defaults(func=cmd_pu)

    p = sub.add_parser("bk", help="quadrature-measurement benchmark")
    _add_state_args(p)
    p.add_argument("--r", type=float, required=True, help="resource squeezing")
    p.add_argument("--fu", type=float, default=0.9)
    p.add_argument("--grid-l", type=float, default=8.0)
    p.add_argument("--grid-h", type=float, default=0.05)
    p.add_argument("--gain", type=float, default=1.0)
    _add_common(p)
    p.set_defaults(func=cmd_bk)

    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ImpossibleOutcomeError as exc:
        body = {"error": "impossible-outcome", "message": str(exc), "probability": exc.probability}
        write_output(args, json_dump(body))
        return EXIT_IMPOSSIBLE
    except PrecisionLossError as exc:
        print(f"error: precision loss: {exc}", file=sys.stderr)
        return EXIT_PRECISION
    except ConvergenceError as exc:
        print(f"error: not converged: {exc}", file=sys.stderr)
        return EXIT_NOT_CONVERGED
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
