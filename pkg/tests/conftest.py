"""Shared helpers: brute-force reference implementations kept deliberately
separate from the package's vectorized code paths."""

import numpy as np
import pytest

from entforge.states import DensityMatrix, StateVector


def random_state(num_qubits: int, seed: int) -> StateVector:
    rng = np.random.default_rng(seed)
    amps = rng.normal(size=2**num_qubits) + 1j * rng.normal(size=2**num_qubits)
    amps /= np.linalg.norm(amps)
    return StateVector(num_qubits, amps)


def random_density(num_qubits: int, seed: int, rank: int | None = None) -> DensityMatrix:
    """Mixture of random pure states; full rank by default."""
    dim = 2**num_qubits
    rank = dim if rank is None else rank
    rng = np.random.default_rng(seed)
    rho = np.zeros((dim, dim), dtype=np.complex128)
    weights = rng.uniform(0.1, 1.0, size=rank)
    weights /= weights.sum()
    for w in weights:
        v = rng.normal(size=dim) + 1j * rng.normal(size=dim)
        v /= np.linalg.norm(v)
        rho += w * np.outer(v, v.conj())
    return DensityMatrix(num_qubits, rho)


def random_unitary(dim: int, seed: int) -> np.ndarray:
    rng = np.random.default_rng(seed)
    m = rng.normal(size=(dim, dim)) + 1j * rng.normal(size=(dim, dim))
    q, r = np.linalg.qr(m)
    return q * (np.diag(r) / np.abs(np.diag(r)))


def embed_operator(op: np.ndarray, wires: tuple[int, ...], num_qubits: int) -> np.ndarray:
    """Slow reference embedding of a k-qubit operator into the full register.

    Qubit 0 is the most significant bit of the basis index.
    """
    dim = 2**num_qubits
    k = len(wires)
    full = np.zeros((dim, dim), dtype=np.complex128)
    for col in range(dim):
        bits = [(col >> (num_qubits - 1 - q)) & 1 for q in range(num_qubits)]
        sub_col = 0
        for w in wires:
            sub_col = (sub_col << 1) | bits[w]
        for sub_row in range(2**k):
            amp = op[sub_row, sub_col]
            if amp == 0:
                continue
            new_bits = list(bits)
            for j, w in enumerate(wires):
                new_bits[w] = (sub_row >> (k - 1 - j)) & 1
            row = 0
            for b in new_bits:
                row = (row << 1) | b
            full[row, col] += amp
    return full


def partial_trace_keep_one(rho: np.ndarray, keep: int, num_qubits: int) -> np.ndarray:
    """Slow reference single-qubit reduced density matrix."""
    out = np.zeros((2, 2), dtype=np.complex128)
    dim = 2**num_qubits
    shift = num_qubits - 1 - keep
    for i in range(dim):
        for j in range(dim):
            bi, bj = (i >> shift) & 1, (j >> shift) & 1
            if (i & ~(1 << shift)) == (j & ~(1 << shift)):
                out[bi, bj] += rho[i, j]
    return out


def ghz(num_qubits: int) -> StateVector:
    amps = np.zeros(2**num_qubits, dtype=np.complex128)
    amps[0] = amps[-1] = 1 / np.sqrt(2)
    return StateVector(num_qubits, amps)


def w_state(num_qubits: int) -> StateVector:
    amps = np.zeros(2**num_qubits, dtype=np.complex128)
    for q in range(num_qubits):
        amps[1 << (num_qubits - 1 - q)] = 1 / np.sqrt(num_qubits)
    return StateVector(num_qubits, amps)


@pytest.fixture
def rng():
    return np.random.default_rng(1234)
