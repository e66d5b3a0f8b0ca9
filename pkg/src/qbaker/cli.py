"""Command-line front end.

Exit codes: 0 success (and passing checks), 1 domain error or failing
check, 2 usage error. Check subcommands print machine-readable JSON with
residuals; every file output gets a run manifest written next to it.
The QBAKER_THREADS environment variable sets the kernel worker count for
large systems (default 1).
"""
from __future__ import annotations

import argparse
import json
import os
import sys

import numpy as np

from . import __version__, io, kernels
from .baker import ClassicalPoint, baker_circuit, baker_matrix, classical_orbit
from .dynamics import EchoConfig, form_factor, iterate, loschmidt_echo
from .errors import DomainError, ParseError
from .gates import circuit_to_matrix
from .qft import qft_residual
from .state import basis_state
from .weyl import build_operators, check_weyl

QFT_CHECK_TOL = 1e-10
WEYL_CHECK_TOL = 1e-9
MATRIX_DUMP_LIMIT = 10
MATRIX_DUMP_LIMIT_LARGE = 12


def _emit(text: str, args: argparse.Namespace, manifest: io.RunManifest | None = None) -> None:
    out = getattr(args, "out", None)
    if out is None:
        sys.stdout.write(text)
        return
    io.write_text_file(text, out)
    if manifest is not None:
        io.write_manifest(manifest, out)


def _manifest(command: str, params: dict, seed: int | None = None) -> io.RunManifest:
    return io.RunManifest(command, params, __version__, seed)


def cmd_qft_check(args: argparse.Namespace) -> int:
    residual = qft_residual(args.qubits)
    ok = residual <= QFT_CHECK_TOL
    report = {
        "qubits": args.qubits,
        "frobenius_residual": residual,
        "tolerance": QFT_CHECK_TOL,
        "pass": ok,
    }
    _emit(json.dumps(report) + "\n", args,
          _manifest("qft-check", {"qubits": args.qubits, "out": getattr(args, "out", None)}))
    return 0 if ok else 1


def cmd_weyl_check(args: argparse.Namespace) -> int:
    ops = build_operators(args.qubits)
    report = check_weyl(ops, WEYL_CHECK_TOL)
    payload = {
        "qubits": args.qubits,
        "dim": ops.dim,
        "commutation_residual": report.commutation_residual,
        "periodicity_residual": report.periodicity_residual,
        "tolerance": WEYL_CHECK_TOL,
        "pass": report.passed,
    }
    _emit(json.dumps(payload) + "\n", args,
          _manifest("weyl-check", {"qubits": args.qubits, "out": getattr(args, "out", None)}))
    return 0 if report.passed else 1


def cmd_baker(args: argparse.Namespace) -> int:
    params = {
        "qubits": args.qubits,
        "form": args.form,
        "allow_large": args.allow_large,
        "out": args.out,
    }
    if args.form == "circuit":
        text = io.circuit_to_text(baker_circuit(args.qubits))
    else:
        limit = MATRIX_DUMP_LIMIT_LARGE if args.allow_large else MATRIX_DUMP_LIMIT
        mat = baker_matrix(args.qubits, max_qubits=limit)
        text = io.matrix_to_json(mat, args.qubits) + "\n"
    _emit(text, args, _manifest("baker", params))
    return 0


def cmd_iterate(args: argparse.Namespace) -> int:
    if args.state is not None:
        state = io.read_state(args.state)
        if state.qubits != args.qubits:
            raise DomainError(
                f"state file has {state.qubits} qubits, command asked for {args.qubits}"
            )
    else:
        state = basis_state(args.qubits, args.basis)
    result = iterate(state, args.steps)
    params = {
        "qubits": args.qubits,
        "state": args.state,
        "basis": args.basis,
        "steps": args.steps,
        "out": args.out,
    }
    _emit(io.state_to_json(result) + "\n", args, _manifest("iterate", params))
    return 0


def cmd_echo(args: argparse.Namespace) -> int:
    cfg = EchoConfig(args.qubits, args.steps, args.delta, args.ensemble, args.seed)
    records = loschmidt_echo(cfg)
    params = {
        "qubits": args.qubits,
        "steps": args.steps,
        "delta": args.delta,
        "ensemble": args.ensemble,
        "seed": args.seed,
        "out": args.out,
    }
    _emit(io.echo_records_to_csv(records), args, _manifest("echo", params, args.seed))
    return 0


def cmd_formfactor(args: argparse.Namespace) -> int:
    values = form_factor(args.qubits, args.nmax)
    params = {"qubits": args.qubits, "nmax": args.nmax, "out": args.out}
    _emit(io.form_factor_to_csv(values), args, _manifest("formfactor", params))
    return 0


def cmd_classical(args: argparse.Namespace) -> int:
    orbit = classical_orbit(ClassicalPoint(args.q, args.p), args.steps)
    lines = [f"{pt.q!r} {pt.p!r}" for pt in orbit[1:]]
    sys.stdout.write("\n".join(lines) + ("\n" if lines else ""))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qbaker",
        description="Quantized baker map: gate-network simulation and verification.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("qft-check", help="Fourier network vs dense matrix residual")
    p.add_argument("--qubits", type=int, required=True)
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_qft_check)

    p = sub.add_parser("weyl-check", help="displacement-operator commutation residuals")
    p.add_argument("--qubits", type=int, required=True)
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_weyl_check)

    p = sub.add_parser("baker", help="emit the map as circuit text or matrix JSON")
    p.add_argument("--qubits", type=int, required=True)
    p.add_argument("--form", choices=("matrix", "circuit"), required=True)
    p.add_argument("--out", default=None)
    p.add_argument(
        "--allow-large",
        action="store_true",
        help=f"raise the matrix dump limit from {MATRIX_DUMP_LIMIT} to "
        f"{MATRIX_DUMP_LIMIT_LARGE} qubits",
    )
    p.set_defaults(func=cmd_baker)

    p = sub.add_parser("iterate", help="apply the map repeatedly to a state")
    p.add_argument("--qubits", type=int, required=True)
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--state", default=None, help="state JSON file")
    src.add_argument("--basis", type=int, default=None, help="position basis index")
    p.add_argument("--steps", type=int, required=True)
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_iterate)

    p = sub.add_parser("echo", help="perturbation echo experiment (CSV)")
    p.add_argument("--qubits", type=int, required=True)
    p.add_argument("--steps", type=int, required=True)
    p.add_argument("--delta", type=float, required=True)
    p.add_argument("--ensemble", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_echo)

    p = sub.add_parser("formfactor", help="spectral form factor K(n) (CSV)")
    p.add_argument("--qubits", type=int, required=True)
    p.add_argument("--nmax", type=int, required=True)
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_formfactor)

    p = sub.add_parser("classical", help="iterate the classical map")
    p.add_argument("--q", type=float, required=True)
    p.add_argument("--p", type=float, required=True)
    p.add_argument("--steps", type=int, required=True)
    p.set_defaults(func=cmd_classical)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    threads = os.environ.get("QBAKER_THREADS")
    if threads is not None:
        try:
            kernels.set_num_threads(int(threads))
        except (ValueError, DomainError):
            print(f"error: QBAKER_THREADS={threads!r} is not a valid count", file=sys.stderr)
            return 1
    try:
        return args.func(args)
    except (DomainError, ParseError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
