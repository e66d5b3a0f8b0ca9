import numpy as np
import pytest

from qbaker import (
    Circuit,
    ClassicalPoint,
    DomainError,
    GateKind,
    SizeError,
    baker_circuit,
    baker_matrix,
    baker_realization,
    baker_reference_3q,
    classical_orbit,
    classical_step,
    circuit_to_matrix,
    elide_swaps,
    gate_count,
    is_unitary,
)

INV_SQRT2 = 1.0 / np.sqrt(2.0)


# --- classical map ---------------------------------------------------------

def test_classical_first_branch():
    out = classical_step(ClassicalPoint(0.25, 0.6))
    assert (out.q, out.p) == (0.5, 0.3)


def test_classical_second_branch():
    out = classical_step(ClassicalPoint(0.75, 0.2))
    assert (out.q, out.p) == (0.5, 0.6)


def test_classical_boundary_belongs_to_first_branch():
    out = classical_step(ClassicalPoint(0.5, 0.0))
    assert (out.q, out.p) == (1.0, 0.0)


def test_classical_period_two_orbit():
    pt = ClassicalPoint(1 / 3, 2 / 3)
    once = classical_step(pt)
    assert once.q == pytest.approx(2 / 3, abs=1e-15)
    assert once.p == pytest.approx(1 / 3, abs=1e-15)
    twice = classical_step(once)
    assert twice.q == pytest.approx(pt.q, abs=1e-15)
    assert twice.p == pytest.approx(pt.p, abs=1e-15)


def test_classical_rejects_outside_unit_square():
    with pytest.raises(DomainError):
        ClassicalPoint(1.2, 0.5)
    with pytest.raises(DomainError):
        ClassicalPoint(0.5, -0.1)


def test_classical_orbit_length():
    orbit = classical_orbit(ClassicalPoint(0.2, 0.9), 5)
    assert len(orbit) == 6
    with pytest.raises(DomainError):
        classical_orbit(ClassicalPoint(0.2, 0.9), -1)


@pytest.mark.parametrize("seed", range(6))
def test_classical_area_preservation(seed):
    # a rectangle inside one branch maps to exactly 2x the width and half
    # the height, corner by corner
    rng = np.random.default_rng(seed)
    q0 = rng.uniform(0.0, 0.4)
    q1 = q0 + rng.uniform(0.01, 0.5 - q0 - 0.01)
    p0 = rng.uniform(0.0, 0.9)
    p1 = p0 + rng.uniform(0.01, 1.0 - p0 - 0.005)
    corners = [ClassicalPoint(q, p) for q in (q0, q1) for p in (p0, p1)]
    images = [classical_step(c) for c in corners]
    width = images[2].q - images[0].q
    height = images[1].p - images[0].p
    assert width == pytest.approx(2 * (q1 - q0), rel=1e-12)
    assert height == pytest.approx(0.5 * (p1 - p0), rel=1e-12)


# --- dense unitary ---------------------------------------------------------

def test_baker_matrix_one_qubit():
    expect = INV_SQRT2 * np.array([[1, 1], [1, -1]])
    assert np.allclose(baker_matrix(1), expect, atol=1e-14)


def test_baker_matrix_two_qubits_independent_assembly():
    # assemble the unitary from scratch with explicit loops
    def fourier(dim):
        f = np.empty((dim, dim), dtype=complex)
        for k in range(dim):
            for j in range(dim):
                f[k, j] = np.exp(-2j * np.pi * k * j / dim) / np.sqrt(dim)
        return f

    f4, f2 = fourier(4), fourier(2)
    blocks = np.zeros((4, 4), dtype=complex)
    blocks[:2, :2] = f2
    blocks[2:, 2:] = f2
    expect = np.linalg.inv(f4) @ blocks
    assert np.linalg.norm(baker_matrix(2) - expect) <= 1e-13


def test_baker_matrix_unitarity():
    mat = baker_matrix(3)
    assert np.linalg.norm(mat.conj().T @ mat - np.eye(8)) <= 1e-12


def test_baker_matrix_size_guard():
    with pytest.raises(SizeError):
        baker_matrix(11)
    with pytest.raises(DomainError):
        baker_matrix(0)


# --- gate network ----------------------------------------------------------

def test_baker_circuit_one_qubit():
    mat = circuit_to_matrix(baker_circuit(1))
    assert np.allclose(mat, INV_SQRT2 * np.array([[1, 1], [1, -1]]), atol=1e-14)


@pytest.mark.parametrize("qubits", range(1, 9))
def test_baker_circuit_matches_matrix(qubits):
    mat = circuit_to_matrix(baker_circuit(qubits))
    assert np.linalg.norm(mat - baker_matrix(qubits)) <= 1e-10


@pytest.mark.parametrize("qubits", range(2, 7))
def test_baker_elide_swaps_equivalent(qubits):
    c = baker_circuit(qubits)
    e = elide_swaps(c)
    assert all(g.kind is not GateKind.SWAP for g in e.gates)
    assert np.linalg.norm(circuit_to_matrix(e) - circuit_to_matrix(c)) <= 1e-12


def test_baker_realization_forms_agree():
    real = baker_realization(4)
    assert np.linalg.norm(circuit_to_matrix(real.circuit_form) - real.matrix_form) <= 1e-10
    assert is_unitary(real.matrix_form)


# --- the hardcoded three-qubit sequence -------------------------------------

def test_reference_3q_matches_matrix():
    mat = circuit_to_matrix(baker_reference_3q())
    assert np.linalg.norm(mat - baker_matrix(3)) <= 1e-12


def test_reference_3q_matches_builder_matrix():
    fixture = circuit_to_matrix(baker_reference_3q())
    built = circuit_to_matrix(baker_circuit(3))
    assert np.linalg.norm(fixture - built) <= 1e-12


def test_reference_3q_gate_multiset():
    c = baker_reference_3q()
    counts = gate_count(c)
    assert (counts.a, counts.b, counts.swap) == (5, 4, 2)
    b_gates = [g for g in c.gates if g.kind is GateKind.B]
    # in the written sequence three of the four conditional phases are
    # daggered; with the resolved sign those are the positive-angle gates
    assert sum(1 for g in b_gates if not g.conjugated) == 3
    assert sum(1 for g in b_gates if g.conjugated) == 1


def test_reference_3q_multiset_equals_builder():
    assert sorted(
        (g.kind.value, g.m, g.n, g.conjugated) for g in baker_reference_3q().gates
    ) == sorted((g.kind.value, g.m, g.n, g.conjugated) for g in baker_circuit(3).gates)


def test_reference_3q_order_differs_from_builder():
    # same multiset and same unitary, but not the same sequence: the
    # hand-written inverse stage is the elementwise conjugate of the
    # forward network, not its reversal
    assert baker_reference_3q().gates != baker_circuit(3).gates


def test_baker_circuit_flattened_multiset():
    counts = gate_count(baker_circuit(3))
    assert (counts.a, counts.b, counts.swap) == (5, 4, 2)
