"""Cartan decomposition of two-qubit gates and Weyl-chamber classification.

Every 4x4 unitary factors as

    phase * (k1.a (x) k1.b) * exp((i/2)(c1 XX + c2 YY + c3 ZZ)) * (k2.a (x) k2.b)

with the canonical vector (c1, c2, c3) reduced to the chamber

    pi - c2 >= c1 >= c2 >= c3 >= 0.

The algorithm conjugates into the magic (Bell) basis, where local gates
become real orthogonal matrices and the interaction factor becomes
diagonal, then simultaneously diagonalizes the real and imaginary parts
of the symmetric product M = V^T V.
"""

import enum
import itertools
from dataclasses import dataclass

import numpy as np

from .matcore import (DEFAULT_TOL, ID2, SIGMA_X, SIGMA_Y, SIGMA_Z, LocalPair,
                      ToleranceConfig, interaction, project_special,
                      require_unitary)

MAGIC = np.array([[1, 0, 0, 1j],
                  [0, 1j, 1, 0],
                  [0, 1j, -1, 0],
                  [1, 0, 0, -1j]], dtype=complex) / np.sqrt(2)
MAGIC_DAG = MAGIC.conj().T

# Diagonal of XX, YY, ZZ in the magic basis; together with the all-ones
# vector these form an orthogonal basis of R^4, so any diagonal phase
# vector resolves exactly into identity + interaction components.
_DIAG_XX = np.array([1.0, 1.0, -1.0, -1.0])
_DIAG_YY = np.array([-1.0, 1.0, -1.0, 1.0])
_DIAG_ZZ = np.array([1.0, -1.0, -1.0, 1.0])

_SNAP_POINTS = (0.0, np.pi / 4, np.pi / 2, np.pi)

# Seed for breaking eigenvalue degeneracies; fresh generator per call so
# results do not depend on call ordering.
_DIAG_SEED = 7

# Hermitian involution exchanging two Pauli axes: (s_i + s_j)/sqrt(2)
# conjugates sigma_i <-> sigma_j and negates the third axis, so applying
# it on both qubits swaps two interaction coefficients exactly.
_AXIS_SWAP = {
    (0, 1): (SIGMA_X + SIGMA_Y) / np.sqrt(2),
    (0, 2): (SIGMA_X + SIGMA_Z) / np.sqrt(2),
    (1, 2): (SIGMA_Y + SIGMA_Z) / np.sqrt(2),
}

# Pauli on qubit 1 whose conjugation negates the other two coefficients.
_PAIR_NEGATE = {(0, 1): SIGMA_Z, (0, 2): SIGMA_Y, (1, 2): SIGMA_X}

# Even sign patterns and the coefficient pair each one negates.
_SIGN_PATTERNS = ((1, 1, 1), (-1, -1, 1), (-1, 1, -1), (1, -1, -1))

_SHIFT_PHASE = (1.0 + 0j, -1j, -1.0 + 0j, 1j)  # (-i)**m for m mod 4

_PAULI_BY_AXIS = (SIGMA_X, SIGMA_Y, SIGMA_Z)


class GateClass(enum.Enum):
    LOCAL = "local"
    SWAP_CLASS = "swap"
    ENTANGLING = "entangling"


@dataclass(frozen=True)
class CanonicalVector:
    """Weyl-chamber coordinates (radians) of a two-qubit gate class."""

    c1: float
    c2: float
    c3: float

    def __post_init__(self) -> None:
        slack = 1e-9
        ok = (np.pi - self.c2 + slack >= self.c1 >= self.c2 - slack
              and self.c2 + slack >= self.c3 >= -slack)
        if not ok:
            raise ValueError(f"({self.c1}, {self.c2}, {self.c3}) is outside the chamber")

    def as_tuple(self) -> tuple[float, float, float]:
        return (self.c1, self.c2, self.c3)


@dataclass(eq=False)
class KakDecomposition:
    k1: LocalPair
    c: CanonicalVector
    k2: LocalPair
    phase: complex

    def interaction_matrix(self) -> np.ndarray:
        return interaction(*self.c.as_tuple())

    def reconstruct(self) -> np.ndarray:
        return self.phase * self.k1.matrix() @ self.interaction_matrix() @ self.k2.matrix()


def snap_angle(x: float, tol: float = DEFAULT_TOL.snap_tol) -> float:
    """Snap an angle to {0, pi/4, pi/2, pi} when within tol of one."""
    for point in _SNAP_POINTS:
        if abs(x - point) <= tol:
            return point
    return float(x)


def snap_vector(c: CanonicalVector, tol: float = DEFAULT_TOL.snap_tol) -> tuple[float, float, float]:
    return tuple(snap_angle(x, tol) for x in c.as_tuple())


def _in_chamber(c1: float, c2: float, c3: float, slack: float = 1e-12) -> bool:
    return (np.pi - c2 + slack >= c1 >= c2 - slack
            and c2 + slack >= c3 >= -slack)


class _MoveTracker:
    """Accumulates local corrections while reducing an interaction triple.

    Maintains A(raw) = phase * (pre.a (x) pre.b) @ A(c) @ (post.a (x) post.b)
    exactly through every move.
    """

    def __init__(self, raw: tuple[float, float, float]):
        self.c = list(raw)
        self.pre_a = ID2.copy()
        self.pre_b = ID2.copy()
        self.post_a = ID2.copy()
        self.post_b = ID2.copy()
        self.phase = 1.0 + 0j

    def swap(self, i: int, j: int) -> None:
        h = _AXIS_SWAP[(min(i, j), max(i, j))]
        self.pre_a = self.pre_a @ h
        self.pre_b = self.pre_b @ h
        self.post_a = h @ self.post_a
        self.post_b = h @ self.post_b
        self.c[i], self.c[j] = self.c[j], self.c[i]

    def negate_pair(self, i: int, j: int) -> None:
        s = _PAIR_NEGATE[(min(i, j), max(i, j))]
        self.pre_a = self.pre_a @ s
        self.post_a = s @ self.post_a
        self.c[i] = -self.c[i]
        self.c[j] = -self.c[j]

    def shift(self, k: int, m: int) -> None:
        # A(c) = A(c + m*pi e_k) * (-i)^m (sigma_k (x) sigma_k)^m
        if m == 0:
            return
        self.phase *= _SHIFT_PHASE[m % 4]
        if m % 2:
            s = _PAULI_BY_AXIS[k]
            self.post_a = s @ self.post_a
            self.post_b = s @ self.post_b
        self.c[k] = self.c[k] + m * np.pi


def _component_options(x: float, slack: float) -> list[tuple[float, int]]:
    """Residues of x mod pi usable as a chamber coordinate, with shift counts.

    Normally just the representative in [0, pi); a residue within slack of
    pi also offers its tiny-negative twin, so that roundoff noise sitting
    just below zero cannot hide an otherwise-valid chamber candidate.
    """
    m0 = -int(np.floor(x / np.pi))
    r = x + m0 * np.pi
    options = [(r, m0)]
    if r > np.pi - slack:
        options.append((x + (m0 - 1) * np.pi, m0 - 1))
    return options


def _chamber_candidates(raw: tuple[float, float, float], slack: float = 1e-12):
    """All chamber representatives reachable from raw by exact local moves.

    The move group is permutations x even sign flips x per-axis pi shifts,
    so the orbit inside [0, pi)^3 is exactly the points enumerated here.
    """
    for perm in itertools.permutations((0, 1, 2)):
        for signs in _SIGN_PATTERNS:
            base = [s * raw[p] for s, p in zip(signs, perm)]
            for picks in itertools.product(*(_component_options(x, slack) for x in base)):
                cand = tuple(v for v, _ in picks)
                if _in_chamber(*cand, slack=slack):
                    yield cand, perm, signs, tuple(m for _, m in picks)


def _canonicalize_tracked(raw: tuple[float, float, float]) -> tuple[
        CanonicalVector, LocalPair, LocalPair, complex]:
    choices = list(_chamber_candidates(raw))
    if not choices:
        choices = list(_chamber_candidates(raw, slack=DEFAULT_TOL.snap_tol))
    if not choices:
        raise ArithmeticError(f"no chamber representative found for {raw}")
    # Lexicographically smallest representative, with candidates within
    # roundoff of the minimum treated as ties: the first tie in enumeration
    # order wins, so identity moves are preferred and an already-canonical
    # triple maps exactly to itself.
    best = min(choice[0] for choice in choices)
    cand, perm, signs, shifts = next(
        choice for choice in choices
        if all(abs(x - y) <= 1e-12 for x, y in zip(choice[0], best)))

    tracker = _MoveTracker(raw)
    # Realize the permutation as position swaps: src[k] tracks which raw
    # component currently sits at position k; stop when src == perm.
    src = [0, 1, 2]
    for i in range(3):
        if src[i] != perm[i]:
            j = src.index(perm[i], i + 1)
            tracker.swap(i, j)
            src[i], src[j] = src[j], src[i]
    neg = [i for i in range(3) if signs[i] < 0]
    if neg:
        tracker.negate_pair(neg[0], neg[1])
    for k in range(3):
        tracker.shift(k, shifts[k])

    vec = CanonicalVector(*(x + 0.0 for x in tracker.c))  # -0.0 -> +0.0
    return (vec, LocalPair(tracker.pre_a, tracker.pre_b),
            LocalPair(tracker.post_a, tracker.post_b), tracker.phase)


def canonicalize(raw: tuple[float, float, float]) -> tuple[
        CanonicalVector, LocalPair, LocalPair]:
    """Reduce an interaction triple to its Weyl-chamber representative.

    Returns (c, pre, post) with

        A(raw) = (pre.a (x) pre.b) @ A(c) @ (post.a (x) post.b)

    exactly; the accumulated scalar phase is folded into pre.a. Chamber
    ties (which occur on the boundary and on the c3 = 0 base) are broken
    by choosing the lexicographically smallest representative.
    """
    vec, pre, post, phase = _canonicalize_tracked(tuple(float(x) for x in raw))
    return vec, LocalPair(phase * pre.a, pre.b), post


def _simultaneous_diagonalize(m2: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Diagonalize a complex-symmetric unitary M2 = P D P^T, P real orthogonal.

    Real and imaginary parts of M2 commute, so a random real combination
    (fixed seed, redrawn on failure) is diagonalized instead; this breaks
    eigenvalue degeneracies deterministically.
    """
    rng = np.random.default_rng(_DIAG_SEED)
    re, im = m2.real.copy(), m2.imag.copy()
    # Symmetrize against roundoff so eigh sees exactly symmetric input.
    re = (re + re.T) / 2
    im = (im + im.T) / 2
    for _ in range(32):
        wr, wi = rng.normal(size=2)
        _, p = np.linalg.eigh(wr * re + wi * im)
        d = p.T @ m2 @ p
        if np.abs(d - np.diag(np.diag(d))).max() < 1e-10:
            break
    else:
        raise ArithmeticError("failed to diagonalize the magic-basis symmetric product")
    theta = np.angle(np.diag(d))
    order = np.argsort(theta)
    return p[:, order], theta[order]


def _factor_local(m: np.ndarray, atol: float = 1e-8) -> tuple[complex, np.ndarray, np.ndarray]:
    """Split m = g * (a (x) b) with det(a) = det(b) = 1.

    Builds both factors from the rows/columns through the largest-magnitude
    entry, which is safe because a true tensor product has rank-1 block
    structure everywhere.
    """
    r, c = max(((i, j) for i in range(4) for j in range(4)), key=lambda t: abs(m[t]))
    f1 = np.zeros((2, 2), dtype=complex)
    f2 = np.zeros((2, 2), dtype=complex)
    for i in range(2):
        for j in range(2):
            f1[(r >> 1) ^ i, (c >> 1) ^ j] = m[r ^ (i << 1), c ^ (j << 1)]
            f2[(r & 1) ^ i, (c & 1) ^ j] = m[r ^ i, c ^ j]
    with np.errstate(divide="ignore", invalid="ignore"):
        f1 /= np.sqrt(np.linalg.det(f1)) or 1
        f2 /= np.sqrt(np.linalg.det(f2)) or 1
    g = m[r, c] / (f1[r >> 1, c >> 1] * f2[r & 1, c & 1])
    if g.real < 0:
        f1 = -f1
        g = -g
    if np.abs(m - g * np.kron(f1, f2)).max() > atol:
        raise ArithmeticError("matrix is not a tensor product of single-qubit gates")
    return complex(g), f1, f2


def kak_decompose(u: np.ndarray, tol: ToleranceConfig = DEFAULT_TOL) -> KakDecomposition:
    """Decompose a 4x4 unitary into local pairs and a canonical interaction.

    Raises ValueError for non-unitary input and ArithmeticError if the
    reconstruction misses verify_tol (an internal failure, never a property
    of valid input).
    """
    u = require_unitary(u, tol.unitarity_tol, "input")
    if u.shape != (4, 4):
        raise ValueError("expected a 4x4 matrix")
    su, proj_phase = project_special(u, tol)

    v = MAGIC_DAG @ su @ MAGIC
    p, theta = _simultaneous_diagonalize(v.T @ v)

    # Eigenphases of M2 are twice the interaction phases. det(M2) = 1, so
    # the principal angles sum to a multiple of 2*pi; shift one phase by a
    # full turn when needed so that det(Delta) = +1 below.
    phases = theta.copy()
    turns = round(float(theta.sum()) / (2 * np.pi))
    if turns % 2:
        phases[0] -= 2 * np.pi * np.sign(turns)
    if np.linalg.det(p) < 0:
        p = p.copy()
        p[:, 0] = -p[:, 0]

    delta = np.exp(0.5j * phases)
    q2 = p.T
    q1 = v @ p @ np.diag(delta.conj())
    if np.abs(q1.imag).max() > 1e-6:
        raise ArithmeticError("local factor failed to come out real in the magic basis")
    q1 = q1.real

    g1, a1, b1 = _factor_local(MAGIC @ q1 @ MAGIC_DAG)
    g2, a2, b2 = _factor_local(MAGIC @ q2 @ MAGIC_DAG)

    # Resolve the phase vector against the orthogonal basis {1, dXX, dYY, dZZ}:
    # identity component becomes global phase, the rest the raw triple.
    c0 = float(phases.sum()) / 4
    raw = (
        float(phases @ _DIAG_XX) / 4,
        float(phases @ _DIAG_YY) / 4,
        float(phases @ _DIAG_ZZ) / 4,
    )
    vec, pre, post, move_phase = _canonicalize_tracked(raw)

    k1 = LocalPair(a1 @ pre.a, b1 @ pre.b)
    k2 = LocalPair(post.a @ a2, post.b @ b2)
    phase = proj_phase * g1 * g2 * np.exp(0.5j * c0) * move_phase
    decomp = KakDecomposition(k1, vec, k2, complex(phase))

    if np.abs(decomp.reconstruct() - u).max() > tol.verify_tol:
        raise ArithmeticError("KAK reconstruction failed verification")
    return decomp


def classify(c: CanonicalVector, tol: ToleranceConfig = DEFAULT_TOL) -> GateClass:
    """Classify a canonical vector after snapping to special angles."""
    s = snap_vector(c, tol.snap_tol)
    if s == (0.0, 0.0, 0.0) or s == (np.pi, 0.0, 0.0):
        return GateClass.LOCAL
    if s == (np.pi / 2, np.pi / 2, np.pi / 2):
        return GateClass.SWAP_CLASS
    return GateClass.ENTANGLING


def locally_equivalent(u: np.ndarray, v: np.ndarray,
                       tol: ToleranceConfig = DEFAULT_TOL) -> bool:
    """Whether two gates share a canonical vector within snap_tol."""
    cu = kak_decompose(u, tol).c.as_tuple()
    cv = kak_decompose(v, tol).c.as_tuple()
    return all(abs(a - b) <= tol.snap_tol for a, b in zip(cu, cv))
