"""Gates, circuits, O(D) application, dense realization, and swap elision.

Three gate types act on the position-basis index bits:

* ``A(m)`` mixes the two amplitudes differing in bit m with the matrix
  (1, 1; 1, -1)/sqrt(2).
* ``B(m, n)`` multiplies amplitudes whose bits m and n are both 1 by
  e^{+i pi / 2^(n-m)}; the ``conjugated`` variant uses the opposite sign.
  The gate is symmetric in its labels and stored with m < n.
* ``Swap(m, n)`` exchanges bits m and n of the index.

A circuit stores its gates in application order (first element acts first)
plus an optional relabel permutation applied after the gates: logical
qubit k ends up living at label ``relabel[k]``. Builders that realize an
operator product written right-to-left perform that one reversal
themselves, so nothing else reasons about product order.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

import numpy as np

from . import kernels
from .errors import DomainError, SizeError
from .state import StateVector

MAX_DENSE_QUBITS = 10


class GateKind(Enum):
    A = "A"
    B = "B"
    SWAP = "SWAP"


@dataclass(frozen=True)
class Gate:
    """One gate. Two-qubit kinds store labels canonically as m < n.

    B gates carry their phase exponent in ``span``: the angle is
    +/- pi / 2^span, with span = n - m at construction. Relabeling a gate
    (swap elision) keeps span, because the phase belongs to the gate, not
    to wherever its wires end up.
    """

    kind: GateKind
    m: int
    n: int | None = None
    conjugated: bool = False
    span: int | None = None

    def __post_init__(self) -> None:
        if self.m < 0 or (self.n is not None and self.n < 0):
            raise DomainError("qubit labels must be non-negative")
        if self.kind is GateKind.A:
            if self.n is not None:
                raise DomainError("A acts on a single qubit")
            if self.conjugated:
                raise DomainError("A has no conjugated variant")
        else:
            if self.n is None or self.n <= self.m:
                raise DomainError(f"{self.kind.value} needs two labels with m < n")
            if self.kind is GateKind.SWAP and self.conjugated:
                raise DomainError("Swap has no conjugated variant")
        if self.kind is GateKind.B:
            if self.span is None:
                object.__setattr__(self, "span", self.n - self.m)
            elif self.span < 1:
                raise DomainError(f"phase exponent must be >= 1, got {self.span}")
        elif self.span is not None:
            raise DomainError(f"{self.kind.value} carries no phase exponent")

    def labels(self) -> tuple[int, ...]:
        return (self.m,) if self.n is None else (self.m, self.n)

    def inverse(self) -> "Gate":
        if self.kind is GateKind.B:
            return Gate(GateKind.B, self.m, self.n, not self.conjugated, self.span)
        return self  # A and Swap are involutions

    def relabeled(self, mapping: tuple[int, ...]) -> "Gate":
        if self.kind is GateKind.A:
            return Gate(GateKind.A, mapping[self.m])
        a, b = sorted((mapping[self.m], mapping[self.n]))
        return Gate(self.kind, a, b, self.conjugated, self.span)


def a_gate(m: int) -> Gate:
    return Gate(GateKind.A, m)


def b_gate(m: int, n: int, conjugated: bool = False, span: int | None = None) -> Gate:
    lo, hi = sorted((m, n))
    return Gate(GateKind.B, lo, hi, conjugated, span)


def swap_gate(m: int, n: int) -> Gate:
    lo, hi = sorted((m, n))
    return Gate(GateKind.SWAP, lo, hi)


def b_angle(gate: Gate) -> float:
    """Phase angle of a B gate: +/- pi / 2^span."""
    if gate.kind is not GateKind.B:
        raise DomainError("b_angle is defined for B gates only")
    sign = -1.0 if gate.conjugated else 1.0
    return sign * math.pi / float(1 << gate.span)


def identity_permutation(qubits: int) -> tuple[int, ...]:
    return tuple(range(qubits))


def inverse_permutation(perm: tuple[int, ...]) -> tuple[int, ...]:
    inv = [0] * len(perm)
    for k, p in enumerate(perm):
        inv[p] = k
    return tuple(inv)


def compose_permutations(outer: tuple[int, ...], inner: tuple[int, ...]) -> tuple[int, ...]:
    """(outer o inner)[k] = outer[inner[k]]: apply inner first."""
    return tuple(outer[i] for i in inner)


@dataclass(frozen=True)
class Circuit:
    """Ordered gate list plus a pending relabel permutation.

    The realized unitary applies the gates first to last, then moves the
    value of qubit k to label relabel[k].
    """

    qubits: int
    gates: tuple[Gate, ...]
    relabel: tuple[int, ...] | None = None

    def __post_init__(self) -> None:
        if self.qubits < 1:
            raise DomainError(f"qubit count must be >= 1, got {self.qubits}")
        object.__setattr__(self, "gates", tuple(self.gates))
        relabel = self.relabel
        if relabel is None:
            relabel = identity_permutation(self.qubits)
        relabel = tuple(relabel)
        if sorted(relabel) != list(range(self.qubits)):
            raise DomainError(f"relabel {relabel} is not a permutation of 0..{self.qubits - 1}")
        object.__setattr__(self, "relabel", relabel)
        for g in self.gates:
            for q in g.labels():
                if q >= self.qubits:
                    raise DomainError(f"gate label {q} outside circuit of {self.qubits} qubits")

    def has_identity_relabel(self) -> bool:
        return self.relabel == identity_permutation(self.qubits)


@dataclass(frozen=True)
class GateCounts:
    a: int
    b: int
    swap: int


def gate_count(circuit: Circuit) -> GateCounts:
    a = sum(1 for g in circuit.gates if g.kind is GateKind.A)
    b = sum(1 for g in circuit.gates if g.kind is GateKind.B)
    return GateCounts(a, b, len(circuit.gates) - a - b)


def _apply_gate_array(arr: np.ndarray, qubits: int, gate: Gate) -> None:
    if gate.kind is GateKind.A:
        kernels.hadamard(arr, qubits, gate.m)
    elif gate.kind is GateKind.B:
        kernels.cond_phase(arr, qubits, gate.m, gate.n, b_angle(gate))
    else:
        kernels.swap_bits(arr, qubits, gate.m, gate.n)


def _apply_circuit_array(arr: np.ndarray, circuit: Circuit) -> np.ndarray:
    for g in circuit.gates:
        _apply_gate_array(arr, circuit.qubits, g)
    if not circuit.has_identity_relabel():
        arr = kernels.permute_bits(arr, circuit.qubits, circuit.relabel)
    return arr


def apply_gate(state: StateVector, gate: Gate, *, copy: bool = True) -> StateVector:
    """Apply one gate. With copy=False the input amplitudes are mutated."""
    for q in gate.labels():
        if q >= state.qubits:
            raise DomainError(f"gate label {q} outside state of {state.qubits} qubits")
    arr = state.amplitudes.copy() if copy else state.amplitudes
    _apply_gate_array(arr, state.qubits, gate)
    return StateVector(state.qubits, arr)


def apply_circuit(state: StateVector, circuit: Circuit, *, copy: bool = True) -> StateVector:
    """Apply every gate in order, then the relabel permutation."""
    if circuit.qubits != state.qubits:
        raise DomainError(f"circuit on {circuit.qubits} qubits, state on {state.qubits}")
    arr = state.amplitudes.copy() if copy else state.amplitudes
    arr = _apply_circuit_array(arr, circuit)
    return StateVector(state.qubits, arr)


def circuit_to_matrix(circuit: Circuit, *, max_qubits: int = MAX_DENSE_QUBITS) -> np.ndarray:
    """Dense unitary realized by the circuit (verification path only)."""
    if circuit.qubits > max_qubits:
        raise SizeError(
            f"dense realization refused for {circuit.qubits} qubits (limit {max_qubits})"
        )
    dim = 1 << circuit.qubits
    mat = np.eye(dim, dtype=np.complex128)
    for g in circuit.gates:
        _apply_gate_array(mat, circuit.qubits, g)
    if not circuit.has_identity_relabel():
        mat = kernels.permute_bits(mat, circuit.qubits, circuit.relabel)
    return mat


def dagger(circuit: Circuit) -> Circuit:
    """Circuit realizing the inverse unitary.

    Gates are reversed and inverted elementwise. A pending relabel pi is
    pushed through: the reversed gates act on labels pi[q] and the result
    carries relabel pi^{-1}.
    """
    pi = circuit.relabel
    gates = tuple(g.inverse().relabeled(pi) for g in reversed(circuit.gates))
    return Circuit(circuit.qubits, gates, inverse_permutation(pi))


def concat(first: Circuit, second: Circuit) -> Circuit:
    """Circuit equivalent to applying `first` then `second`."""
    if first.qubits != second.qubits:
        raise DomainError("cannot concatenate circuits of different widths")
    inv1 = inverse_permutation(first.relabel)
    gates = first.gates + tuple(g.relabeled(inv1) for g in second.gates)
    relabel = compose_permutations(second.relabel, first.relabel)
    return Circuit(first.qubits, gates, relabel)


def elide_swaps(circuit: Circuit) -> Circuit:
    """Remove every Swap gate, folding it into the relabel permutation.

    Remaining gates have their labels rewritten through the accumulated
    permutation; the output realizes the identical unitary.
    """
    sigma = list(identity_permutation(circuit.qubits))   # swaps absorbed so far
    inv = list(sigma)                                    # sigma^{-1}, kept in step
    out: list[Gate] = []
    for g in circuit.gates:
        if g.kind is GateKind.SWAP:
            m, n = g.m, g.n
            # sigma := t_{mn} o sigma  (swap the two values wherever they occur)
            sigma = [n if v == m else m if v == n else v for v in sigma]
            inv[m], inv[n] = inv[n], inv[m]
        else:
            out.append(g.relabeled(tuple(inv)))
    relabel = compose_permutations(circuit.relabel, tuple(sigma))
    return Circuit(circuit.qubits, tuple(out), relabel)


def is_unitary(mat: np.ndarray, tol: float = 1e-10) -> bool:
    dim = mat.shape[0]
    return bool(np.linalg.norm(mat.conj().T @ mat - np.eye(dim)) <= tol)
