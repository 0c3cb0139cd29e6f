import numpy as np
import pytest


def random_hermitian(seed: int) -> np.ndarray:
    rng = np.random.default_rng(seed)
    g = rng.standard_normal((4, 4)) + 1j * rng.standard_normal((4, 4))
    return 0.5 * (g + g.conj().T)


def random_psd(seed: int) -> np.ndarray:
    rng = np.random.default_rng(seed)
    g = rng.standard_normal((4, 4)) + 1j * rng.standard_normal((4, 4))
    m = g @ g.conj().T
    return m / np.trace(m).real


def haar_unitary_2x2(rng: np.random.Generator) -> np.ndarray:
    g = rng.standard_normal((2, 2)) + 1j * rng.standard_normal((2, 2))
    q, r = np.linalg.qr(g)
    return q * (np.diag(r) / np.abs(np.diag(r)))


def random_local_unitary(seed: int) -> np.ndarray:
    rng = np.random.default_rng(seed)
    return np.kron(haar_unitary_2x2(rng), haar_unitary_2x2(rng))


@pytest.fixture
def rng():
    return np.random.default_rng(271828)
