"""In-place bitmask kernels over the leading axis of a complex array.

Each kernel touches every amplitude a constant number of times (O(D) per
gate) and never forms a dense matrix. Arrays may be shape (D,) for a state
or (D, M) for M columns sharing the transformation; the leading axis is
the basis index and C-order layout lets every kernel reshape it into
(high bits, target bit, rest) blocks.

Kernels can partition the leading blocks across a shared thread pool for
large systems. Every element is written exactly once, by the same formula
from the same inputs, so results are independent of the partitioning.
"""
from __future__ import annotations

import math
import threading
from concurrent.futures import ThreadPoolExecutor

import numpy as np

from .errors import DomainError

INV_SQRT2 = 1.0 / math.sqrt(2.0)

# Threading kicks in only above this qubit count (smaller arrays are not
# worth the dispatch overhead).
THREAD_MIN_QUBITS = 16

_lock = threading.Lock()
_num_threads = 1
_pool: ThreadPoolExecutor | None = None


def set_num_threads(n: int) -> None:
    """Set the worker count for large-system kernels (default 1)."""
    global _num_threads, _pool
    if n < 1:
        raise DomainError(f"thread count must be >= 1, got {n}")
    with _lock:
        if n != _num_threads and _pool is not None:
            _pool.shutdown(wait=True)
            _pool = None
        _num_threads = n


def get_num_threads() -> int:
    return _num_threads


def _get_pool(n: int) -> ThreadPoolExecutor:
    global _pool
    with _lock:
        if _pool is None:
            _pool = ThreadPoolExecutor(max_workers=n)
        return _pool


def _run_blocks(block_fn, nblocks: int, qubits: int) -> None:
    n = _num_threads
    if n <= 1 or qubits < THREAD_MIN_QUBITS or nblocks < n:
        block_fn(0, nblocks)
        return
    pool = _get_pool(n)
    step = (nblocks + n - 1) // n
    futures = [
        pool.submit(block_fn, b0, min(b0 + step, nblocks))
        for b0 in range(0, nblocks, step)
    ]
    for f in futures:
        f.result()


def _check_label(qubits: int, m: int) -> None:
    if not 0 <= m < qubits:
        raise DomainError(f"qubit label {m} outside [0, {qubits})")


def hadamard(arr: np.ndarray, qubits: int, m: int) -> None:
    """Mix amplitude pairs differing in bit m with (1,1;1,-1)/sqrt(2)."""
    _check_label(qubits, m)
    hi = 1 << (qubits - 1 - m)
    rest = arr.size >> (qubits - m)
    view = arr.reshape(hi, 2, rest)

    def block(b0: int, b1: int) -> None:
        a = view[b0:b1, 0, :]
        b = view[b0:b1, 1, :]
        t = (a + b) * INV_SQRT2
        np.subtract(a, b, out=b)
        b *= INV_SQRT2
        a[...] = t

    _run_blocks(block, hi, qubits)


def cond_phase(arr: np.ndarray, qubits: int, m: int, n: int, angle: float) -> None:
    """Multiply amplitudes whose bits m and n are both 1 by e^{i*angle}."""
    if m > n:
        m, n = n, m
    _check_label(qubits, m)
    _check_label(qubits, n)
    if m == n:
        raise DomainError("conditional phase needs two distinct qubits")
    phase = complex(math.cos(angle), math.sin(angle))
    hi = 1 << (qubits - 1 - n)
    mid = 1 << (n - 1 - m)
    rest = arr.size >> (qubits - m)
    view = arr.reshape(hi, 2, mid, 2, rest)

    def block(b0: int, b1: int) -> None:
        view[b0:b1, 1, :, 1, :] *= phase

    _run_blocks(block, hi, qubits)


def swap_bits(arr: np.ndarray, qubits: int, m: int, n: int) -> None:
    """Exchange bits m and n of the basis index (amplitude permutation)."""
    if m > n:
        m, n = n, m
    _check_label(qubits, m)
    _check_label(qubits, n)
    if m == n:
        raise DomainError("swap needs two distinct qubits")
    hi = 1 << (qubits - 1 - n)
    mid = 1 << (n - 1 - m)
    rest = arr.size >> (qubits - m)
    view = arr.reshape(hi, 2, mid, 2, rest)

    def block(b0: int, b1: int) -> None:
        a = view[b0:b1, 0, :, 1, :]
        b = view[b0:b1, 1, :, 0, :]
        t = a.copy()
        a[...] = b
        b[...] = t

    _run_blocks(block, hi, qubits)


def phase_on_one(arr: np.ndarray, qubits: int, m: int, angle: float) -> None:
    """Apply diag(1, e^{i*angle}) on qubit m."""
    _check_label(qubits, m)
    phase = complex(math.cos(angle), math.sin(angle))
    hi = 1 << (qubits - 1 - m)
    rest = arr.size >> (qubits - m)
    view = arr.reshape(hi, 2, rest)

    def block(b0: int, b1: int) -> None:
        view[b0:b1, 1, :] *= phase

    _run_blocks(block, hi, qubits)


def bit_permutation_indices(qubits: int, perm: tuple[int, ...]) -> np.ndarray:
    """Index map for relabeling: entry j is the index whose bit perm[k]
    equals bit k of j."""
    j = np.arange(1 << qubits, dtype=np.int64)
    idx = np.zeros_like(j)
    for k, pk in enumerate(perm):
        idx |= ((j >> k) & 1) << pk
    return idx


def permute_bits(arr: np.ndarray, qubits: int, perm: tuple[int, ...]) -> np.ndarray:
    """Return a new array with the value of qubit k moved to qubit perm[k]."""
    idx = bit_permutation_indices(qubits, perm)
    out = np.empty_like(arr)
    out[idx] = arr
    return out
