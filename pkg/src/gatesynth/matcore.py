"""Fixed-size complex matrix primitives shared by the synthesis pipeline.

All gates are plain numpy arrays of dtype complex128: 2x2 for single-qubit
gates, 4x4 for two-qubit gates (qubit 1 is the high-order tensor factor).
Circuits are ordered element lists; element 0 acts first on the state, so
the evaluated matrix is the right-to-left product of the element matrices.
"""

from dataclasses import dataclass, field

import numpy as np

ID2 = np.eye(2, dtype=complex)
ID4 = np.eye(4, dtype=complex)
SIGMA_X = np.array([[0, 1], [1, 0]], dtype=complex)
SIGMA_Y = np.array([[0, -1j], [1j, 0]], dtype=complex)
SIGMA_Z = np.array([[1, 0], [0, -1]], dtype=complex)
PAULIS = {"x": SIGMA_X, "y": SIGMA_Y, "z": SIGMA_Z}


@dataclass(frozen=True)
class ToleranceConfig:
    """Numerical tolerances used across the pipeline.

    unitarity_tol bounds ||U U^dag - I|| at input boundaries, snap_tol is
    the window for snapping angles to special values before discrete
    decisions (classification, case selection), and verify_tol bounds the
    residual of every reconstructed circuit.
    """

    unitarity_tol: float = 1e-10
    snap_tol: float = 1e-9
    verify_tol: float = 1e-8

    def __post_init__(self) -> None:
        if not (self.unitarity_tol > 0 and self.snap_tol > 0 and self.verify_tol > 0):
            raise ValueError("tolerances must be strictly positive")
        if self.snap_tol < self.unitarity_tol:
            raise ValueError("snap_tol must be >= unitarity_tol")


DEFAULT_TOL = ToleranceConfig()


def is_unitary(m: np.ndarray, tol: float = DEFAULT_TOL.unitarity_tol) -> bool:
    m = np.asarray(m, dtype=complex)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        return False
    if not np.all(np.isfinite(m)):
        return False
    return bool(np.abs(m @ m.conj().T - np.eye(m.shape[0])).max() <= tol)


def require_unitary(m: np.ndarray, tol: float = DEFAULT_TOL.unitarity_tol,
                    what: str = "matrix") -> np.ndarray:
    """Validate and return a finite unitary matrix as complex128."""
    m = np.asarray(m, dtype=complex)
    if not np.all(np.isfinite(m)):
        raise ValueError(f"{what} has non-finite entries")
    if not is_unitary(m, tol):
        raise ValueError(f"{what} is not unitary within tolerance {tol:g}")
    return m


def dagger(m: np.ndarray) -> np.ndarray:
    return np.asarray(m).conj().T


def tensor(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Kronecker product a (x) b; a acts on qubit 1, b on qubit 2."""
    return np.kron(np.asarray(a, dtype=complex), np.asarray(b, dtype=complex))


def exp_pauli(axis: str | np.ndarray, alpha: float) -> np.ndarray:
    """exp(i * alpha * sigma) for a Pauli axis or any 2x2 involution sigma."""
    sigma = PAULIS[axis] if isinstance(axis, str) else np.asarray(axis, dtype=complex)
    return np.cos(alpha) * ID2 + 1j * np.sin(alpha) * sigma


def interaction(c1: float, c2: float, c3: float) -> np.ndarray:
    """exp((i/2)(c1 XX + c2 YY + c3 ZZ)), the nonlocal canonical factor.

    The three terms commute, so the closed form multiplies the
    cos + i*sin factor per axis; no general matrix exponential is needed.
    """
    out = ID4.copy()
    for c, s in ((c1, SIGMA_X), (c2, SIGMA_Y), (c3, SIGMA_Z)):
        ss = tensor(s, s)
        out = out @ (np.cos(c / 2) * ID4 + 1j * np.sin(c / 2) * ss)
    return out


def zz_interaction(gamma: float) -> np.ndarray:
    """exp(gamma (i/2) ZZ), the diagonal building-block gate."""
    return interaction(0.0, 0.0, gamma)


def phase_distance(a: np.ndarray, b: np.ndarray) -> float:
    """Frobenius distance between 4x4 unitaries minimized over global phase.

    Equals sqrt(8 - 2 |tr(a^dag b)|), but is evaluated at the explicit
    minimizing phase tr/|tr|: the closed form loses half the significant
    digits near zero, where these residuals are actually read.
    """
    overlap = np.trace(dagger(a) @ b)
    phi = np.conj(overlap) / abs(overlap) if abs(overlap) > 0 else 1.0
    return float(np.linalg.norm(np.asarray(a) - phi * np.asarray(b), "fro"))


def project_special(u: np.ndarray,
                    tol: ToleranceConfig = DEFAULT_TOL) -> tuple[np.ndarray, complex]:
    """Rescale a 4x4 unitary to unit determinant.

    Returns (v, phase) with u = phase * v, det(v) = 1 and phase the
    principal fourth root of det(u).
    """
    u = require_unitary(u, tol.unitarity_tol, "input")
    det = np.linalg.det(u)
    phase = complex(np.exp(1j * np.angle(det) / 4))
    return u / phase, phase


@dataclass(eq=False)
class LocalPair:
    """A pair of single-qubit gates applied simultaneously, a (x) b."""

    a: np.ndarray
    b: np.ndarray

    def matrix(self) -> np.ndarray:
        return tensor(self.a, self.b)

    def dag(self) -> "LocalPair":
        return LocalPair(dagger(self.a), dagger(self.b))


@dataclass(frozen=True)
class EntanglerApp:
    """Opaque application of the circuit's single fixed entangling gate."""


CircuitElement = LocalPair | EntanglerApp


@dataclass(eq=False)
class Circuit:
    """Ordered gate list plus an explicit unit-modulus global phase.

    Element 0 is applied first to the state and therefore appears
    rightmost in the evaluated matrix product.
    """

    elements: list[CircuitElement] = field(default_factory=list)
    phase: complex = 1.0 + 0.0j

    @property
    def entangler_count(self) -> int:
        return sum(isinstance(e, EntanglerApp) for e in self.elements)

    @property
    def local_count(self) -> int:
        return sum(isinstance(e, LocalPair) for e in self.elements)

    def concat(self, other: "Circuit") -> "Circuit":
        """Circuit that applies self first, then other."""
        return Circuit(self.elements + other.elements, self.phase * other.phase)


def evaluate(circuit: Circuit, entangler: np.ndarray,
             tol: ToleranceConfig = DEFAULT_TOL) -> np.ndarray:
    """Multiply out a circuit against a concrete entangler matrix."""
    entangler = require_unitary(entangler, tol.unitarity_tol, "entangler")
    out = ID4.copy()
    for elem in circuit.elements:
        m = entangler if isinstance(elem, EntanglerApp) else elem.matrix()
        out = m @ out
    return circuit.phase * out
