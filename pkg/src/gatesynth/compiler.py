"""Top-level synthesis pipeline and the uniform application bound.

A target decomposes into at most three ZZ blocks interleaved with fixed
local layers; each block costs two insertions of the amplified resource,
so the entangler count never exceeds 6 * n * apps_per_unit. That bound
depends only on the entangler's canonical vector.
"""

from dataclasses import dataclass

import numpy as np

from .blocksynth import controlled_u_gamma, synth_zz_block
from .kak import kak_decompose, snap_angle
from .matcore import (DEFAULT_TOL, Circuit, LocalPair, ToleranceConfig,
                      dagger, evaluate, exp_pauli, phase_distance,
                      require_unitary)
from .zzsynth import prepare_resource

_KX = exp_pauli("y", np.pi / 4)
_KY = exp_pauli("x", np.pi / 4)


@dataclass
class SynthesisReport:
    """Audit record of one synthesis run.

    gamma, apps_per_unit and n describe the amplified resource; bound is
    6 * n * apps_per_unit. entangler_count, local_count and residual are
    None for bound-only reports.
    """

    gamma: float
    apps_per_unit: int
    n: int
    bound: int
    entangler_count: int | None = None
    local_count: int | None = None
    residual: float | None = None


def upper_bound(entangler: np.ndarray,
                tol: ToleranceConfig = DEFAULT_TOL) -> SynthesisReport:
    """Uniform bound on entangler applications for any two-qubit target."""
    resource = prepare_resource(entangler, tol)
    return SynthesisReport(
        gamma=resource.gamma,
        apps_per_unit=resource.apps_per_unit,
        n=resource.reps,
        bound=6 * resource.reps * resource.apps_per_unit,
    )


def merge_locals(circuit: Circuit) -> Circuit:
    """Fuse adjacent local layers and move scalar factors into the phase.

    Every surviving local pair is renormalized to unit determinant per
    qubit, with the extracted scalars folded into the circuit phase, so
    output layers are canonical and no two local layers are adjacent.
    """
    merged: list = []
    for elem in circuit.elements:
        if isinstance(elem, LocalPair) and merged and isinstance(merged[-1], LocalPair):
            prev = merged[-1]
            merged[-1] = LocalPair(elem.a @ prev.a, elem.b @ prev.b)
        else:
            merged.append(elem)
    phase = circuit.phase
    out: list = []
    for elem in merged:
        if isinstance(elem, LocalPair):
            scale_a = np.sqrt(np.linalg.det(elem.a))
            scale_b = np.sqrt(np.linalg.det(elem.b))
            phase *= scale_a * scale_b
            elem = LocalPair(elem.a / scale_a, elem.b / scale_b)
        out.append(elem)
    return Circuit(out, phase)


def synthesize(target: np.ndarray, entangler: np.ndarray,
               tol: ToleranceConfig = DEFAULT_TOL) -> tuple[Circuit, SynthesisReport]:
    """Compile a target unitary into local layers plus entangler applications.

    The target's canonical blocks are emitted in application order c3,
    c2, c1 with the fixed interleavers from the three-block rewriting;
    blocks whose coefficient snaps to zero are omitted. The result is
    verified against the target before returning.
    """
    target = require_unitary(target, tol.unitarity_tol, "target")
    dec = kak_decompose(target, tol)
    resource = prepare_resource(entangler, tol)

    c1, c2, c3 = (snap_angle(c, tol.snap_tol) for c in dec.c.as_tuple())

    elements: list = [dec.k2]
    phase = dec.phase
    # Application order per the three-block form: c3 block, k_y,
    # c2 block, k_x k_y^dag, c1 block, k1 k_x^dag; identity-angle blocks
    # drop out and their neighbors merge.
    if c3 > 0:
        block = synth_zz_block(c3, resource)
        elements += block.elements
        phase *= block.phase
    elements.append(LocalPair(_KY, _KY))
    if c2 > 0:
        block = synth_zz_block(c2, resource)
        elements += block.elements
        phase *= block.phase
    elements.append(LocalPair(_KX @ dagger(_KY), _KX @ dagger(_KY)))
    if c1 > 0:
        block = synth_zz_block(c1, resource)
        elements += block.elements
        phase *= block.phase
    elements.append(LocalPair(dec.k1.a @ dagger(_KX), dec.k1.b @ dagger(_KX)))

    circuit = merge_locals(Circuit(elements, phase))

    residual = phase_distance(evaluate(circuit, entangler, tol), target)
    if residual >= tol.verify_tol:
        raise ArithmeticError(f"synthesis verification failed: residual {residual:g}")

    report = SynthesisReport(
        gamma=resource.gamma,
        apps_per_unit=resource.apps_per_unit,
        n=resource.reps,
        bound=6 * resource.reps * resource.apps_per_unit,
        entangler_count=circuit.entangler_count,
        local_count=circuit.local_count,
        residual=residual,
    )
    assert report.entangler_count <= report.bound
    return circuit, report


def efficient_as_cnot(u: np.ndarray, tol: ToleranceConfig = DEFAULT_TOL) -> bool:
    """Whether Controlled-u shares the CNOT gate's uniform bound of 6.

    True exactly on the upper half [pi/4, pi/2] of the Controlled-U
    coordinate interval.
    """
    coord = controlled_u_gamma(u, tol)
    return coord >= np.pi / 4 - tol.snap_tol
