"""Extraction of a ZZ-interaction gate from an arbitrary entangler.

Any entangling gate can simulate exp(gamma (i/2) ZZ) for some
gamma in (0, pi/2] using at most two applications of itself. The case
split runs on the entangler's canonical vector (g1, g2, g3):

  case 1: g2 = g3 = 0            -- one application, axis moved x -> z
  case 2: g1 = g2 = pi/2, g3 = 0 -- the special two-application circuit
  case 3: g3 = 0, 0 < g2 < pi/2  -- two applications, sigma_x conjugation
  case 4: g3 > 0                 -- two applications, sigma_z conjugation

followed by angle reduction and reflection so gamma lands in (0, pi/2],
and repetition until the amplified angle reaches [pi/4, pi/2].
"""

from dataclasses import dataclass, replace

import numpy as np

from .kak import GateClass, classify, kak_decompose, snap_angle
from .matcore import (DEFAULT_TOL, ID2, Circuit, EntanglerApp, LocalPair,
                      ToleranceConfig, dagger, exp_pauli)

KX_FACTOR = exp_pauli("y", np.pi / 4)  # k_x = this on both qubits moves ZZ <-> XX
KY_FACTOR = exp_pauli("x", np.pi / 4)  # k_y = this on both qubits moves ZZ <-> YY


@dataclass(eq=False)
class ZzResource:
    """A circuit over one fixed entangler realizing exp(gamma (i/2) ZZ).

    apps_per_unit is the entangler count of one unamplified unit (1 or 2);
    reps counts amplification repetitions, so the circuit holds exactly
    apps_per_unit * reps entangler applications.
    """

    circuit: Circuit
    gamma: float
    apps_per_unit: int
    reps: int = 1


def _conjugated(circ: Circuit, left_a: np.ndarray, left_b: np.ndarray) -> Circuit:
    """Wrap a circuit as L . circ . L^dag with L = left_a (x) left_b."""
    pre = LocalPair(dagger(left_a), dagger(left_b))
    post = LocalPair(left_a, left_b)
    return Circuit([pre] + circ.elements + [post], circ.phase)


def extract_zz(entangler: np.ndarray, tol: ToleranceConfig = DEFAULT_TOL) -> ZzResource:
    """Build exp(gamma (i/2) ZZ), gamma in (0, pi/2], from <= 2 applications.

    Raises ValueError when the gate is local or in the SWAP class, which
    cannot serve as the entangling resource.
    """
    dec = kak_decompose(entangler, tol)
    kind = classify(dec.c, tol)
    if kind is not GateClass.ENTANGLING:
        raise ValueError(f"resource gate is {kind.value}, not entangling")

    # Circuit computing the entangler's pure interaction factor
    # A = k_l^dag U_g k_r^dag, KAK locals folded into flanking layers.
    a_circ = Circuit([dec.k2.dag(), EntanglerApp(), dec.k1.dag()],
                     phase=np.conj(dec.phase))
    g1, g2, g3 = (snap_angle(g, tol.snap_tol) for g in dec.c.as_tuple())

    if g3 == 0.0 and g2 == 0.0:
        # case 1: A is a pure XX rotation; k_x conjugation moves it to ZZ
        circuit = _conjugated(a_circ, KX_FACTOR, KX_FACTOR)
        resource = ZzResource(circuit, g1, apps_per_unit=1)
    elif g3 == 0.0 and g1 == np.pi / 2 and g2 == np.pi / 2:
        # case 2: two applications interleaved with fixed locals
        elems = (
            [LocalPair(exp_pauli("y", np.pi / 4), ID2),
             LocalPair(exp_pauli("z", -np.pi / 4), exp_pauli("z", np.pi / 4))]
            + a_circ.elements
            + [LocalPair(exp_pauli("z", np.pi / 4), exp_pauli("z", -np.pi / 4)),
               LocalPair(ID2, exp_pauli("y", np.pi / 4))]
            + a_circ.elements
            + [LocalPair(exp_pauli("y", -np.pi / 4), ID2)]
        )
        circuit = Circuit(elems, phase=a_circ.phase ** 2)
        resource = ZzResource(circuit, np.pi / 2, apps_per_unit=2)
    elif g3 == 0.0:
        # case 3: A e^{i pi/2 sx^1} A e^{-i pi/2 sx^1} doubles the XX angle.
        # At g1 = pi/2 that angle is pi (locally trivial), so the sigma_y
        # variant doubling g2 is substituted on that subfamily.
        if g1 == np.pi / 2:
            axis, angle, wrap = "y", 2 * g2, KY_FACTOR
        else:
            axis, angle, wrap = "x", 2 * g1, KX_FACTOR
        elems = ([LocalPair(exp_pauli(axis, -np.pi / 2), ID2)]
                 + a_circ.elements
                 + [LocalPair(exp_pauli(axis, np.pi / 2), ID2)]
                 + a_circ.elements)
        doubled = Circuit(elems, phase=a_circ.phase ** 2)
        resource = ZzResource(_conjugated(doubled, wrap, wrap), angle, apps_per_unit=2)
    else:
        # case 4: sigma_z conjugation doubles the ZZ angle, axis already right
        elems = ([LocalPair(exp_pauli("z", -np.pi / 2), ID2)]
                 + a_circ.elements
                 + [LocalPair(exp_pauli("z", np.pi / 2), ID2)]
                 + a_circ.elements)
        resource = ZzResource(Circuit(elems, phase=a_circ.phase ** 2),
                              2 * g3, apps_per_unit=2)

    return reflect_angle(reduce_angle(resource))


def reduce_angle(r: ZzResource) -> ZzResource:
    """Bring gamma from (0, 2pi) into (0, pi) by a full-pi rewrite.

    exp(g (i/2) ZZ) = i e^{i pi/2 sz^1} exp((pi+g)(i/2) ZZ) e^{i pi/2 sz^2},
    so a resource with angle pi + g also realizes angle g with two extra
    local layers. gamma = pi is locally trivial and rejected.
    """
    if not 0.0 < r.gamma < 2 * np.pi or r.gamma == np.pi:
        raise ValueError(f"gamma = {r.gamma} has no entangling reduction")
    if r.gamma < np.pi:
        return r
    elems = ([LocalPair(ID2, exp_pauli("z", np.pi / 2))]
             + r.circuit.elements
             + [LocalPair(exp_pauli("z", np.pi / 2), ID2)])
    circuit = Circuit(elems, phase=1j * r.circuit.phase)
    return replace(r, circuit=circuit, gamma=r.gamma - np.pi)


def reflect_angle(r: ZzResource) -> ZzResource:
    """Reflect gamma in (pi/2, pi) down to pi - gamma in (0, pi/2).

    Uses -i e^{-i pi/2 sz^1} e^{i pi/2 sy^1} exp(g (i/2) ZZ)
    e^{-i pi/2 sy^1} e^{-i pi/2 sz^2} = exp((pi-g)(i/2) ZZ); the boundary
    gamma = pi/2 is kept as is.
    """
    if r.gamma <= np.pi / 2:
        return r
    elems = ([LocalPair(ID2, exp_pauli("z", -np.pi / 2)),
              LocalPair(exp_pauli("y", -np.pi / 2), ID2)]
             + r.circuit.elements
             + [LocalPair(exp_pauli("y", np.pi / 2), ID2),
                LocalPair(exp_pauli("z", -np.pi / 2), ID2)])
    circuit = Circuit(elems, phase=-1j * r.circuit.phase)
    return replace(r, circuit=circuit, gamma=np.pi - r.gamma)


def amplify(r: ZzResource) -> ZzResource:
    """Repeat the resource n times until n*gamma lands in [pi/4, pi/2].

    The minimal such n exists for every gamma in (0, pi/2]: steps of at
    most pi/4 cannot jump over an interval of width pi/4.
    """
    if not 0.0 < r.gamma <= np.pi / 2:
        raise ValueError(f"gamma = {r.gamma} outside (0, pi/2]")
    n = max(1, int(np.ceil(np.pi / 4 / r.gamma)))
    if n == 1:
        return r
    circuit = Circuit(r.circuit.elements * n, phase=r.circuit.phase ** n)
    return ZzResource(circuit, n * r.gamma, r.apps_per_unit, reps=n * r.reps)


def prepare_resource(entangler: np.ndarray,
                     tol: ToleranceConfig = DEFAULT_TOL) -> ZzResource:
    """Full resource pipeline: extract, reduce, reflect, amplify."""
    return amplify(extract_zz(entangler, tol))
