import numpy as np
import pytest


def haar_unitary(rng: np.random.Generator, dim: int = 4) -> np.ndarray:
    """Haar-random U(dim) via QR of a complex Ginibre matrix."""
    z = rng.normal(size=(dim, dim)) + 1j * rng.normal(size=(dim, dim))
    q, r = np.linalg.qr(z)
    return q * (np.diag(r) / np.abs(np.diag(r)))


def random_local(rng: np.random.Generator) -> np.ndarray:
    """Random two-qubit local gate a (x) b."""
    return np.kron(haar_unitary(rng, 2), haar_unitary(rng, 2))


def dress(u: np.ndarray, rng: np.random.Generator) -> np.ndarray:
    """Sandwich u between random local gates (same local class)."""
    return random_local(rng) @ u @ random_local(rng)


@pytest.fixture
def rng() -> np.random.Generator:
    return np.random.default_rng(1234)
