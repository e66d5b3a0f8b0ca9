"""File formats: state JSON, circuit text, matrix JSON, CSV, run manifests.

All file writes are atomic (temp file in the target directory, then
rename). Floats are serialized with Python's shortest round-trip repr, so
reading back reproduces the exact double-precision bits.
"""
from __future__ import annotations

import json
import math
import os
import tempfile
from dataclasses import dataclass, field
from datetime import datetime, timezone
from typing import Any

import numpy as np

from .dynamics import TrajectoryRecord
from .errors import ParseError
from .gates import Circuit, Gate, GateKind, a_gate, b_gate, swap_gate
from .state import StateVector


def _atomic_write_text(text: str, path: str) -> None:
    directory = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".qbaker-", suffix=".tmp")
    try:
        with os.fdopen(fd, "w") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def write_text_file(text: str, path: str) -> None:
    _atomic_write_text(text, path)


# ---------------------------------------------------------------------------
# State JSON: {"qubits": L, "amplitudes": [[re, im], ...]}, index ascending.

def state_to_json(state: StateVector) -> str:
    amps = [[z.real, z.imag] for z in state.amplitudes]
    return json.dumps({"qubits": state.qubits, "amplitudes": amps})


def state_from_json(text: str) -> StateVector:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"state file is not valid JSON: {exc}") from None
    if not isinstance(obj, dict):
        raise ParseError("state file must hold a JSON object")
    qubits = obj.get("qubits")
    if not isinstance(qubits, int) or isinstance(qubits, bool) or qubits < 1:
        raise ParseError(f"field 'qubits': expected positive integer, got {qubits!r}")
    amps = obj.get("amplitudes")
    if not isinstance(amps, list):
        raise ParseError("field 'amplitudes': expected a list")
    if len(amps) != (1 << qubits):
        raise ParseError(
            f"field 'amplitudes': expected 2^{qubits} = {1 << qubits} entries, got {len(amps)}"
        )
    out = np.empty(1 << qubits, dtype=np.complex128)
    for i, entry in enumerate(amps):
        if (
            not isinstance(entry, list)
            or len(entry) != 2
            or not all(isinstance(x, (int, float)) and not isinstance(x, bool) for x in entry)
        ):
            raise ParseError(f"field 'amplitudes[{i}]': expected [re, im] pair")
        re, im = float(entry[0]), float(entry[1])
        if not (math.isfinite(re) and math.isfinite(im)):
            raise ParseError(f"field 'amplitudes[{i}]': non-finite value")
        out[i] = complex(re, im)
    return StateVector(qubits, out)


def write_state(state: StateVector, path: str) -> None:
    _atomic_write_text(state_to_json(state) + "\n", path)


def read_state(path: str) -> StateVector:
    with open(path) as fh:
        return state_from_json(fh.read())


# ---------------------------------------------------------------------------
# Circuit text: header "qubits L"; one gate per line (A m | B m n | Bdg m n |
# SWAP m n); '#' comments; optional trailing "relabel p0 ... p(L-1)".
# B lines take an optional fourth token, the phase exponent, when it
# differs from n - m (gates relabeled by swap elision keep their phase).

def circuit_to_text(circuit: Circuit) -> str:
    lines = [f"qubits {circuit.qubits}"]
    for g in circuit.gates:
        if g.kind is GateKind.A:
            lines.append(f"A {g.m}")
        elif g.kind is GateKind.B:
            word = "Bdg" if g.conjugated else "B"
            suffix = "" if g.span == g.n - g.m else f" {g.span}"
            lines.append(f"{word} {g.m} {g.n}{suffix}")
        else:
            lines.append(f"SWAP {g.m} {g.n}")
    if not circuit.has_identity_relabel():
        lines.append("relabel " + " ".join(str(p) for p in circuit.relabel))
    return "\n".join(lines) + "\n"


def _parse_labels(parts: list[str], count: int, lineno: int) -> list[int]:
    if len(parts) != count:
        raise ParseError(f"line {lineno}: expected {count} integer label(s)")
    try:
        return [int(p) for p in parts]
    except ValueError:
        raise ParseError(f"line {lineno}: labels must be integers") from None


def circuit_from_text(text: str) -> Circuit:
    qubits: int | None = None
    gates: list[Gate] = []
    relabel: tuple[int, ...] | None = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        keyword = parts[0]
        if qubits is None:
            if keyword != "qubits" or len(parts) != 2:
                raise ParseError(f"line {lineno}: expected header 'qubits L'")
            try:
                qubits = int(parts[1])
            except ValueError:
                raise ParseError(f"line {lineno}: qubit count must be an integer") from None
            continue
        if relabel is not None:
            raise ParseError(f"line {lineno}: relabel must be the last line")
        try:
            if keyword == "A":
                gates.append(a_gate(*_parse_labels(parts[1:], 1, lineno)))
            elif keyword in ("B", "Bdg"):
                nargs = 3 if len(parts) == 4 else 2
                m, n, *rest = _parse_labels(parts[1:], nargs, lineno)
                span = rest[0] if rest else None
                gates.append(b_gate(m, n, conjugated=(keyword == "Bdg"), span=span))
            elif keyword == "SWAP":
                gates.append(swap_gate(*_parse_labels(parts[1:], 2, lineno)))
            elif keyword == "relabel":
                relabel = tuple(_parse_labels(parts[1:], qubits, lineno))
            else:
                raise ParseError(f"line {lineno}: unknown gate {keyword!r}")
        except ValueError as exc:
            if isinstance(exc, ParseError):
                raise
            raise ParseError(f"line {lineno}: {exc}") from None
    if qubits is None:
        raise ParseError("missing 'qubits L' header")
    try:
        return Circuit(qubits, tuple(gates), relabel)
    except ValueError as exc:
        raise ParseError(str(exc)) from None


def write_circuit(circuit: Circuit, path: str) -> None:
    _atomic_write_text(circuit_to_text(circuit), path)


def read_circuit(path: str) -> Circuit:
    with open(path) as fh:
        return circuit_from_text(fh.read())


# ---------------------------------------------------------------------------
# Matrix JSON: {"qubits": L, "dim": D, "entries": [[[re, im], ...] rows]}.

def matrix_to_json(mat: np.ndarray, qubits: int) -> str:
    entries = [[[z.real, z.imag] for z in row] for row in mat]
    return json.dumps({"qubits": qubits, "dim": mat.shape[0], "entries": entries})


# ---------------------------------------------------------------------------
# CSV time series. Header row mandatory, '.' decimal marks by construction.

def echo_records_to_csv(records: list[TrajectoryRecord]) -> str:
    lines = ["step,member,fidelity,pos_entropy,mom_entropy"]
    for member, rec in enumerate(records):
        for step in range(len(rec.fidelity)):
            lines.append(
                f"{step},{member},{float(rec.fidelity[step])!r},"
                f"{float(rec.position_entropy[step])!r},{float(rec.momentum_entropy[step])!r}"
            )
    return "\n".join(lines) + "\n"


def form_factor_to_csv(values: np.ndarray) -> str:
    lines = ["n,K"]
    for i, k in enumerate(values, start=1):
        lines.append(f"{i},{float(k)!r}")
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# Run manifests: written next to every output file; replaying one must
# reproduce the data bytes (timestamp aside).

@dataclass(frozen=True)
class RunManifest:
    command: str
    params: dict[str, Any]
    version: str
    seed: int | None = None
    timestamp: str = field(default_factory=lambda: datetime.now(timezone.utc).isoformat())

    def to_json(self) -> str:
        return json.dumps(
            {
                "command": self.command,
                "params": self.params,
                "version": self.version,
                "seed": self.seed,
                "timestamp": self.timestamp,
            },
            indent=2,
        )

    @classmethod
    def from_json(cls, text: str) -> "RunManifest":
        try:
            obj = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ParseError(f"manifest is not valid JSON: {exc}") from None
        for key in ("command", "params", "version", "timestamp"):
            if key not in obj:
                raise ParseError(f"manifest missing field {key!r}")
        return cls(obj["command"], obj["params"], obj["version"], obj.get("seed"), obj["timestamp"])


def manifest_path(out_path: str) -> str:
    return out_path + ".manifest.json"


def write_manifest(manifest: RunManifest, out_path: str) -> None:
    _atomic_write_text(manifest.to_json() + "\n", manifest_path(out_path))


def read_manifest(path: str) -> RunManifest:
    with open(path) as fh:
        return RunManifest.from_json(fh.read())


def manifest_to_argv(manifest: RunManifest, out: str | None = None) -> list[str]:
    """Rebuild a command line that reproduces the manifest's run.

    Pass `out` to redirect the output file (the recorded path is skipped).
    """
    argv = [manifest.command]
    for key, value in manifest.params.items():
        if key == "out" and out is not None:
            continue
        if value is None or value is False:
            continue
        flag = "--" + key.replace("_", "-")
        if value is True:
            argv.append(flag)
        else:
            argv.extend([flag, str(value)])
    if out is not None:
        argv.extend(["--out", out])
    return argv
