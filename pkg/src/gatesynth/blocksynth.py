"""Closed-form synthesis of ZZ blocks and Controlled-U gates.

An arbitrary block exp(c (i/2) ZZ) is built from exactly two insertions
of an amplified ZZ resource with gamma in [pi/4, pi/2]; any Controlled-U
gate is built from a single ZZ interaction plus locals.
"""

from dataclasses import dataclass

import numpy as np

from .kak import kak_decompose
from .matcore import (DEFAULT_TOL, ID2, Circuit, EntanglerApp, LocalPair,
                      SIGMA_X, SIGMA_Y, SIGMA_Z, ToleranceConfig, dagger,
                      exp_pauli, require_unitary)
from .zzsynth import ZzResource


@dataclass(frozen=True)
class BlockParams:
    """Solution of the two-insertion block equations for (c, gamma).

    Satisfies p^2 + q^2 = 1, sin(c/2) = sin(gamma) sin(b/2), and
    b in [0, pi].
    """

    c: float
    gamma: float
    b: float
    p: float
    q: float


@dataclass(frozen=True)
class AxisAngle:
    """Single-qubit rotation exp(i gamma n.sigma), axis a unit 3-vector."""

    gamma: float
    axis: tuple[float, float, float]

    def __post_init__(self) -> None:
        if self.gamma <= 0:
            raise ValueError("gamma must be positive")
        if abs(np.linalg.norm(self.axis) - 1.0) > 1e-12:
            raise ValueError("axis must have unit norm")

    def matrix(self) -> np.ndarray:
        nx, ny, nz = self.axis
        return exp_pauli(nx * SIGMA_X + ny * SIGMA_Y + nz * SIGMA_Z, self.gamma)

    def controlled_matrix(self) -> np.ndarray:
        out = np.eye(4, dtype=complex)
        out[2:, 2:] = self.matrix()
        return out


def block_params(c: float, gamma: float) -> BlockParams:
    """Solve for the inner rotation angle b and the U1/U2 entries p, q.

    Requires c in (0, pi/2], gamma in [pi/4, pi/2] and c <= 2*gamma,
    which is exactly the reachable range of the two-insertion block.
    """
    if not 0.0 < c <= np.pi / 2 + 1e-12:
        raise ValueError(f"block angle c = {c} outside (0, pi/2]")
    if c > 2 * gamma + 1e-12:
        raise ValueError(f"c = {c} exceeds reachable range 2*gamma = {2 * gamma}")
    if not np.pi / 4 - 1e-12 <= gamma <= np.pi / 2 + 1e-12:
        raise ValueError(f"resource gamma = {gamma} outside [pi/4, pi/2]")
    # cos(b) hits -1 up to roundoff at c = 2*gamma; clamp before arccos.
    cos_b = (np.cos(c) - np.cos(gamma) ** 2) / np.sin(gamma) ** 2
    b = float(np.arccos(np.clip(cos_b, -1.0, 1.0)))
    # cot(gamma) * tan(c/2) instead of tan(c/2)/tan(gamma): exact 0 at the
    # gamma = pi/2 endpoint where tan diverges.
    ratio = (np.cos(gamma) / np.sin(gamma)) * np.tan(c / 2)
    p = float(np.sqrt(np.clip((1 + ratio) / 2, 0.0, 1.0)))
    q = float(np.sqrt(np.clip((1 - ratio) / 2, 0.0, 1.0)))
    return BlockParams(c=float(c), gamma=float(gamma), b=b, p=p, q=q)


def u1_u2(params: BlockParams) -> tuple[np.ndarray, np.ndarray]:
    """The two single-qubit gates flanking the block construction."""
    p, q = params.p, params.q
    u1 = np.array([[1j * p, 1j * q], [-q, p]], dtype=complex)
    u2 = np.array([[1j * p, -q], [-1j * q, -p]], dtype=complex)
    return u1, u2


def synth_zz_block(c: float, resource: ZzResource) -> Circuit:
    """Simulate exp(c (i/2) ZZ), c in (0, pi], with two resource insertions.

    For c in (pi/2, pi) the block is reflected to pi - c first and wrapped
    with the reflection locals; c = pi is locally trivial and never reaches
    this operation.
    """
    if abs(c - np.pi) < 1e-9:
        raise ValueError("c = pi is a local gate, not a synthesizable block")
    if not 0.0 < c < np.pi:
        raise ValueError(f"block angle c = {c} outside (0, pi]")
    if c > np.pi / 2:
        inner = synth_zz_block(np.pi - c, resource)
        elems = ([LocalPair(ID2, exp_pauli("z", -np.pi / 2)),
                  LocalPair(exp_pauli("y", -np.pi / 2), ID2)]
                 + inner.elements
                 + [LocalPair(exp_pauli("y", np.pi / 2), ID2),
                    LocalPair(exp_pauli("z", -np.pi / 2), ID2)])
        return Circuit(elems, phase=-1j * inner.phase)

    params = block_params(c, resource.gamma)
    u1, u2 = u1_u2(params)
    mid = LocalPair(ID2, exp_pauli("y", (params.b + np.pi) / 2))
    elems = ([LocalPair(ID2, u2)]
             + resource.circuit.elements
             + [mid]
             + resource.circuit.elements
             + [LocalPair(ID2, u1)])
    return Circuit(elems, phase=resource.circuit.phase ** 2)


def _controlled_u1(axis: tuple[float, float, float], snap: float) -> np.ndarray:
    """The conjugating gate of the Controlled-U construction (three branches)."""
    nx, ny, nz = axis
    if abs(nz - 1.0) <= snap:
        return SIGMA_X.copy()
    if abs(nz + 1.0) <= snap:
        return ID2.copy()
    return np.array([
        [1j * np.sqrt((1 - nz) / 2), np.sqrt((1 + nz) / 2)],
        [(ny - 1j * nx) / np.sqrt(2 * (1 - nz)), (nx + 1j * ny) / np.sqrt(2 * (1 + nz))],
    ], dtype=complex)


def controlled_u_circuit(spec: AxisAngle,
                         tol: ToleranceConfig = DEFAULT_TOL) -> Circuit:
    """Simulate diag(I, exp(i gamma n.sigma)) with one ZZ interaction.

    The interaction insertion is an opaque EntanglerApp; evaluate the
    returned circuit against zz_interaction(spec.gamma).
    """
    u1 = _controlled_u1(spec.axis, tol.snap_tol)
    first = LocalPair(ID2, exp_pauli("z", -spec.gamma / 2) @ dagger(u1))
    elems = [first, EntanglerApp(), LocalPair(ID2, u1)]
    return Circuit(elems)


def controlled_u_gamma(u: np.ndarray, tol: ToleranceConfig = DEFAULT_TOL) -> float:
    """Interval coordinate in [0, pi/2] of the Controlled-u local class."""
    u = require_unitary(u, tol.unitarity_tol, "input")
    cu = np.eye(4, dtype=complex)
    cu[2:, 2:] = u
    c1 = kak_decompose(cu, tol).c.c1
    # Controlled gates sit on the c3 = 0 base where the chamber folds at
    # pi/2; the canonical c1 already lands in [0, pi/2], but reduce
    # defensively in case of boundary roundoff.
    return float(min(c1, np.pi - c1))
