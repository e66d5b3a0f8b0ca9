"""Iterate the map classically and quantum mechanically, side by side.

A classical point stretches along q and squeezes along p; a position
basis state spreads over position while its momentum distribution
sharpens and wanders. The text histograms show the quantum position
distribution coarse-grained into 8 bins over a few steps.
"""
import numpy as np

from qbaker import (
    ClassicalPoint,
    basis_state,
    classical_orbit,
    distribution_entropy,
    iterate,
    momentum_distribution,
    position_distribution,
)

QUBITS = 6
STEPS = 8
BINS = 8


def bar(fraction, width=40):
    return "#" * int(round(fraction * width))


def main():
    print("Classical orbit starting at (0.31, 0.42)")
    for step, pt in enumerate(classical_orbit(ClassicalPoint(0.31, 0.42), STEPS)):
        print(f"  step {step}: q={pt.q:.6f}  p={pt.p:.6f}")

    print(f"\nQuantum iteration of a position eigenstate, {QUBITS} qubits")
    state = basis_state(QUBITS, 5)
    for step in range(STEPS + 1):
        pos = position_distribution(state)
        h_pos = distribution_entropy(pos)
        h_mom = distribution_entropy(momentum_distribution(state))
        coarse = pos.reshape(BINS, -1).sum(axis=1)
        print(f"\nstep {step}: position entropy {h_pos:.3f} nats, "
              f"momentum entropy {h_mom:.3f} nats")
        for b, weight in enumerate(coarse):
            lo, hi = b / BINS, (b + 1) / BINS
            print(f"  q in [{lo:.3f},{hi:.3f}): {bar(weight)} {weight:.3f}")
        if step < STEPS:
            state = iterate(state, 1, copy=False)

    cap = QUBITS * np.log(2)
    print(f"\nentropy ceiling for {QUBITS} qubits: {cap:.3f} nats")


if __name__ == "__main__":
    main()
