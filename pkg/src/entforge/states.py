"""Dense state containers and the tensor primitives built on them.

Basis convention: qubit 0 is the most significant bit of the basis index,
so |q0 q1 ... q_{n-1}> lives at index sum_i q_i * 2**(n-1-i).  All gate
embedding, partial traces, and partial transposes in this package follow
that ordering.
"""

from __future__ import annotations

from dataclasses import InitVar, dataclass
from typing import Sequence

import numpy as np

from .errors import ConfigurationError, NumericalContractError

MAX_QUBITS = 24
NORM_ATOL = 1e-10
TRACE_ATOL = 1e-10
HERMITIAN_ATOL = 1e-10
UNITARY_ATOL = 1e-10
# Noise channels introduce rounding, so the PSD floor is slightly below zero.
EIGVAL_FLOOR = -1e-9
PURITY_IMAG_ATOL = 1e-12


def _check_qubit_count(num_qubits: int) -> None:
    if not isinstance(num_qubits, (int, np.integer)) or not 1 <= num_qubits <= MAX_QUBITS:
        raise ConfigurationError(
            f"num_qubits must be an integer in [1, {MAX_QUBITS}], got {num_qubits!r}"
        )


@dataclass
class StateVector:
    """Pure n-qubit state as 2**n complex amplitudes with unit norm."""

    num_qubits: int
    amplitudes: np.ndarray
    check: InitVar[bool] = True

    def __post_init__(self, check: bool) -> None:
        self.amplitudes = np.asarray(self.amplitudes, dtype=np.complex128)
        if check:
            _check_qubit_count(self.num_qubits)
            dim = 1 << self.num_qubits
            if self.amplitudes.shape != (dim,):
                raise ConfigurationError(
                    f"expected {dim} amplitudes for {self.num_qubits} qubits, "
                    f"got shape {self.amplitudes.shape}"
                )
            norm_sq = float(np.sum(np.abs(self.amplitudes) ** 2))
            if abs(norm_sq - 1.0) > NORM_ATOL:
                raise NumericalContractError(f"state norm^2 = {norm_sq!r} deviates from 1")

    @property
    def dim(self) -> int:
        return self.amplitudes.shape[0]


@dataclass
class DensityMatrix:
    """Mixed n-qubit state: Hermitian, trace-1, PSD 2**n x 2**n matrix."""

    num_qubits: int
    entries: np.ndarray
    check: InitVar[bool] = True

    def __post_init__(self, check: bool) -> None:
        self.entries = np.asarray(self.entries, dtype=np.complex128)
        if check:
            _check_qubit_count(self.num_qubits)
            dim = 1 << self.num_qubits
            if self.entries.shape != (dim, dim):
                raise ConfigurationError(
                    f"expected a {dim}x{dim} matrix for {self.num_qubits} qubits, "
                    f"got shape {self.entries.shape}"
                )
            if not np.allclose(self.entries, self.entries.conj().T, atol=HERMITIAN_ATOL, rtol=0):
                raise NumericalContractError("density matrix is not Hermitian within 1e-10")
            trace = complex(np.trace(self.entries))
            if abs(trace - 1.0) > TRACE_ATOL:
                raise NumericalContractError(f"density matrix trace {trace!r} deviates from 1")
            if float(np.linalg.eigvalsh(self.entries).min()) < EIGVAL_FLOOR:
                raise NumericalContractError("density matrix has an eigenvalue below -1e-9")

    @property
    def dim(self) -> int:
        return self.entries.shape[0]


@dataclass(frozen=True)
class Bipartition:
    """Subsystem B of a bipartite cut; the complement is implied."""

    side_b: tuple[int, ...]

    def __post_init__(self) -> None:
        side = tuple(int(q) for q in self.side_b)
        if len(side) == 0:
            raise ConfigurationError("bipartition side B must be non-empty")
        if len(set(side)) != len(side):
            raise ConfigurationError(f"bipartition has duplicate indices: {side}")
        if any(q < 0 for q in side):
            raise ConfigurationError(f"bipartition has negative indices: {side}")
        object.__setattr__(self, "side_b", tuple(sorted(side)))

    def validate_for(self, num_qubits: int) -> None:
        """Require B to be a proper, in-range subset of {0..n-1}."""
        if max(self.side_b) >= num_qubits:
            raise ConfigurationError(
                f"bipartition {self.label()} out of range for {num_qubits} qubits"
            )
        if len(self.side_b) >= num_qubits:
            raise ConfigurationError(
                f"bipartition {self.label()} must be a proper subset of {num_qubits} qubits"
            )

    def complement(self, num_qubits: int) -> "Bipartition":
        self.validate_for(num_qubits)
        side = set(self.side_b)
        return Bipartition(tuple(q for q in range(num_qubits) if q not in side))

    def label(self) -> str:
        """Serialized sorted-index-list form, e.g. "[0,1,2]"."""
        return "[" + ",".join(str(q) for q in self.side_b) + "]"

    def column_label(self) -> str:
        """CSV-safe form without separators, e.g. "0_1_2"."""
        return "_".join(str(q) for q in self.side_b)

    @classmethod
    def from_text(cls, text: str) -> "Bipartition":
        stripped = text.strip()
        if stripped.startswith("[") and stripped.endswith("]"):
            stripped = stripped[1:-1]
        try:
            indices = tuple(int(tok) for tok in stripped.split(",") if tok.strip() != "")
        except ValueError as exc:
            raise ConfigurationError(f"cannot parse bipartition {text!r}") from exc
        return cls(indices)


def zero_state(num_qubits: int) -> StateVector:
    """|0...0> on num_qubits qubits."""
    _check_qubit_count(num_qubits)
    amps = np.zeros(1 << num_qubits, dtype=np.complex128)
    amps[0] = 1.0
    return StateVector(num_qubits, amps, check=False)


def to_density(psi: StateVector) -> DensityMatrix:
    """Outer product |psi><psi|."""
    a = psi.amplitudes
    return DensityMatrix(psi.num_qubits, np.outer(a, a.conj()), check=False)


def _apply_on_axes(arr: np.ndarray, mat: np.ndarray, axes: Sequence[int], num_axes: int) -> np.ndarray:
    """Contract mat (2^k x 2^k) into the listed axes of arr viewed as (2,)*num_axes."""
    k = len(axes)
    t = np.moveaxis(arr.reshape((2,) * num_axes), axes, range(k))
    t = (mat @ t.reshape(1 << k, -1)).reshape((2,) * num_axes)
    return np.moveaxis(t, range(k), axes).reshape(arr.shape)


def _check_wires(wires: Sequence[int], num_qubits: int) -> tuple[int, ...]:
    ws = tuple(int(w) for w in wires)
    if len(set(ws)) != len(ws):
        raise ConfigurationError(f"wire collision in {ws}")
    if any(not 0 <= w < num_qubits for w in ws):
        raise ConfigurationError(f"wires {ws} out of range for {num_qubits} qubits")
    return ws


def apply_unitary(
    state: StateVector | DensityMatrix, u: np.ndarray, wires: Sequence[int]
) -> StateVector | DensityMatrix:
    """Embed a one- or two-qubit unitary on the given wires and apply it.

    Pure states evolve as U|psi>, mixed states as U rho U^dagger.  The first
    listed wire corresponds to the most significant bit of u's index space.
    """
    u = np.asarray(u, dtype=np.complex128)
    k = len(wires)
    if k not in (1, 2):
        raise ConfigurationError(f"apply_unitary supports 1 or 2 wires, got {k}")
    dim = 1 << k
    if u.shape != (dim, dim):
        raise ConfigurationError(f"matrix shape {u.shape} does not act on {k} qubits")
    if not np.allclose(u.conj().T @ u, np.eye(dim), atol=UNITARY_ATOL, rtol=0):
        raise NumericalContractError("matrix is not unitary within 1e-10")
    ws = _check_wires(wires, state.num_qubits)
    return _apply_unitary_unchecked(state, u, ws)


def _apply_unitary_unchecked(
    state: StateVector | DensityMatrix, u: np.ndarray, wires: tuple[int, ...]
) -> StateVector | DensityMatrix:
    n = state.num_qubits
    if isinstance(state, StateVector):
        amps = _apply_on_axes(state.amplitudes, u, wires, n)
        return StateVector(n, amps, check=False)
    entries = _apply_on_axes(state.entries, u, wires, 2 * n)
    entries = _apply_on_axes(entries, u.conj(), [n + w for w in wires], 2 * n)
    return DensityMatrix(n, entries, check=False)


def _single_qubit_rdm(state: StateVector | DensityMatrix, i: int) -> np.ndarray:
    n = state.num_qubits
    d_left, d_right = 1 << i, 1 << (n - i - 1)
    if isinstance(state, StateVector):
        t = state.amplitudes.reshape(d_left, 2, d_right)
        return np.einsum("ajb,akb->jk", t, t.conj())
    t = state.entries.reshape(d_left, 2, d_right, d_left, 2, d_right)
    return np.einsum("ajbakb->jk", t)


def _single_qubit_rdms(state: StateVector | DensityMatrix) -> np.ndarray:
    """All single-qubit reduced density matrices, shape (n, 2, 2)."""
    return np.stack([_single_qubit_rdm(state, i) for i in range(state.num_qubits)])


def reduced_single_qubit(state: StateVector | DensityMatrix, i: int) -> DensityMatrix:
    """Partial trace over every qubit except qubit i."""
    if not 0 <= i < state.num_qubits:
        raise ConfigurationError(f"qubit index {i} out of range for {state.num_qubits} qubits")
    return DensityMatrix(1, _single_qubit_rdm(state, i), check=False)


def purity(rho: DensityMatrix) -> float:
    """Tr[rho^2], computed without forming the matrix square."""
    # Tr[AB] = sum_jk A_jk B_kj; rounding must leave only a tiny imaginary part.
    val = complex(np.sum(rho.entries * rho.entries.T))
    if abs(val.imag) > PURITY_IMAG_ATOL:
        raise NumericalContractError(f"purity has imaginary residue {val.imag!r}")
    return float(val.real)


def partial_transpose(rho: DensityMatrix, part: Bipartition) -> np.ndarray:
    """Transpose the indices of subsystem B only; returns a plain Hermitian matrix."""
    n = rho.num_qubits
    part.validate_for(n)
    perm = list(range(2 * n))
    for q in part.side_b:
        perm[q], perm[n + q] = perm[n + q], perm[q]
    dim = 1 << n
    return rho.entries.reshape((2,) * (2 * n)).transpose(perm).reshape(dim, dim)


def trace_norm(h: np.ndarray) -> float:
    """Sum of absolute eigenvalues of a Hermitian matrix."""
    h = np.asarray(h, dtype=np.complex128)
    if not np.allclose(h, h.conj().T, atol=1e-8, rtol=0):
        raise NumericalContractError("trace_norm input is not Hermitian within 1e-8")
    return float(np.sum(np.abs(np.linalg.eigvalsh(h))))
