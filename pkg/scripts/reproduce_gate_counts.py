#!/usr/bin/env python3
"""Reproduce the headline gate counts of the uniform construction.

Prints the application counts for building CNOT out of weak ZZ gates,
the controlled-PHASE worked example, and uniform bounds for a range of
entanglers.
"""

import numpy as np

from gatesynth import synthesize, upper_bound, zz_interaction
from gatesynth.gates import CNOT, SQRT_SWAP, cphase


def main() -> None:
    print("CNOT from weak ZZ entanglers")
    for gamma, label in ((np.pi / 3, "ZZ(pi/3)"), (np.pi / 5, "ZZ(pi/5)")):
        _, report = synthesize(CNOT, zz_interaction(gamma))
        print(f"  {label:9s}: {report.entangler_count} applications "
              f"(n = {report.n}, residual {report.residual:.2e})")

    print("\nsqrt(SWAP) from controlled-PHASE gates")
    for phi in (np.pi / 2, 2 * np.pi / 3, np.pi):
        _, report = synthesize(SQRT_SWAP, cphase(phi))
        print(f"  CPHASE({phi / np.pi:.3f}pi): {report.entangler_count} applications, "
              f"{report.local_count} local layers (residual {report.residual:.2e})")

    print("\nuniform upper bounds")
    rows = [("CNOT", CNOT)] + [
        (f"CPHASE({phi / np.pi:.2f}pi)", cphase(phi))
        for phi in (np.pi, 2 * np.pi / 3, np.pi / 2, np.pi / 3, np.pi / 5, np.pi / 9)
    ]
    for label, gate in rows:
        r = upper_bound(gate)
        print(f"  {label:16s}: gamma = {r.gamma:.4f}, units of {r.apps_per_unit}, "
              f"n = {r.n}, bound = {r.bound}")


if __name__ == "__main__":
    main()
