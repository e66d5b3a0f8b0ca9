"""Fourier-transform gate network and its dense matrix oracle.

The dense transform maps position to momentum amplitudes with matrix
elements e^{-2 pi i k j / D} / sqrt(D). The gate network reproducing it
consists of one A gate per qubit, one conditional-phase gate per qubit
pair, and a bit-reversal swap stage. Written as an operator product the
network reads

    S x (A_0 B_01 ... B_0,L-1) x ... x (A_L-2 B_L-2,L-1) x (A_L-1)

with the rightmost factor acting first; the builder performs that single
reversal into application order.

Sign convention: the product above matches the dense transform only when
the conditional phases carry the NEGATIVE angle, i.e. every B gate in the
forward network is the conjugated variant (the positive-angle network
realizes the elementwise conjugate, which is the inverse transform).
:func:`resolve_phase_sign` re-derives this from scratch against the dense
oracle and the test suite pins the outcome.
"""
from __future__ import annotations

import functools
from dataclasses import dataclass

import numpy as np

from .errors import DomainError, SizeError
from .gates import (
    MAX_DENSE_QUBITS,
    Circuit,
    a_gate,
    b_gate,
    circuit_to_matrix,
    swap_gate,
)

#: Sign of the conditional-phase angles that makes the gate network equal
#: the dense position-to-momentum matrix. Resolved empirically; see
#: resolve_phase_sign().
DFT_PHASE_SIGN = -1


@dataclass(frozen=True)
class DftConvention:
    """Resolved sign and ordering convention of the gate network."""

    phase_sign: int
    ordering: str = "product-right-first"


CONVENTION = DftConvention(DFT_PHASE_SIGN)


def dft_matrix(qubits: int, *, max_qubits: int = MAX_DENSE_QUBITS) -> np.ndarray:
    """Dense D x D transform, entry (k, j) = e^{-2 pi i k j / D} / sqrt(D)."""
    if qubits < 1:
        raise DomainError(f"qubit count must be >= 1, got {qubits}")
    if qubits > max_qubits:
        raise SizeError(f"dense transform refused for {qubits} qubits (limit {max_qubits})")
    dim = 1 << qubits
    k, j = np.meshgrid(np.arange(dim), np.arange(dim), indexing="ij")
    return np.exp(-2j * np.pi * k * j / dim) / np.sqrt(dim)


def _bit_reversal_pairs(qubits: int) -> list[tuple[int, int]]:
    return [(i, qubits - 1 - i) for i in range(qubits // 2)]


@functools.lru_cache(maxsize=None)
def qft_circuit(qubits: int, *, phase_sign: int = DFT_PHASE_SIGN) -> Circuit:
    """Gate network realizing the dense transform on `qubits` qubits."""
    if qubits < 1:
        raise DomainError(f"qubit count must be >= 1, got {qubits}")
    if phase_sign not in (-1, 1):
        raise DomainError(f"phase_sign must be +1 or -1, got {phase_sign}")
    conj = phase_sign < 0
    gates = []
    for m in range(qubits - 1, -1, -1):
        for n in range(qubits - 1, m, -1):
            gates.append(b_gate(m, n, conjugated=conj))
        gates.append(a_gate(m))
    for m, n in _bit_reversal_pairs(qubits):
        gates.append(swap_gate(m, n))
    return Circuit(qubits, tuple(gates))


@functools.lru_cache(maxsize=None)
def qft_block_circuit(
    qubits: int, low_qubits: int, *, phase_sign: int = DFT_PHASE_SIGN
) -> Circuit:
    """Network applying the transform to qubits 0..low_qubits-1 only.

    The remaining (most significant) qubits are untouched, so the dense
    realization is block diagonal with 2^(qubits - low_qubits) identical
    blocks.
    """
    if not 1 <= low_qubits <= qubits:
        raise DomainError(f"low_qubits {low_qubits} outside [1, {qubits}]")
    inner = qft_circuit(low_qubits, phase_sign=phase_sign)
    return Circuit(qubits, inner.gates)


def qft_residual(qubits: int, *, phase_sign: int = DFT_PHASE_SIGN) -> float:
    """Frobenius distance between the gate network and the dense oracle."""
    mat = circuit_to_matrix(qft_circuit(qubits, phase_sign=phase_sign))
    return float(np.linalg.norm(mat - dft_matrix(qubits)))


def resolve_phase_sign(max_qubits: int = 4, tol: float = 1e-10) -> int:
    """Determine the phase sign by brute-force match against the oracle.

    Exactly one sign must reproduce the dense transform for every size up
    to `max_qubits` (one qubit alone cannot distinguish them: there are no
    two-qubit phases). Anything else means the gate-ordering assumption is
    broken, which is a build-stopping defect, not a tolerance issue.
    """
    candidates = []
    for sign in (1, -1):
        if all(qft_residual(L, phase_sign=sign) <= tol for L in range(1, max_qubits + 1)):
            candidates.append(sign)
    if len(candidates) != 1:
        raise RuntimeError(
            "phase-sign resolution failed: matching signs "
            f"{candidates or 'none'}; the network ordering does not realize "
            "the dense transform for either sign"
        )
    return candidates[0]
