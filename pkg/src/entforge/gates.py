"""Primitive rotations and the memristor-style two-qubit exchange block.

Every 4x4 matrix orders its basis with the first listed wire as the most
significant bit.  The composite block applies, in circuit order: RY on
wire A, CNOT (control B), CRX (control A) with negated angle, CNOT
(control B), then SWAP.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import ConfigurationError
from .noise import NoiseModel, amplitude_damp, dephase
from .states import DensityMatrix, StateVector, _apply_unitary_unchecked

_I2 = np.eye(2, dtype=np.complex128)

_CNOT = np.array(
    [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 0, 1], [0, 0, 1, 0]], dtype=np.complex128
)
# Control on the second-listed wire, target on the first.
_CNOT_BA = np.array(
    [[1, 0, 0, 0], [0, 0, 0, 1], [0, 0, 1, 0], [0, 1, 0, 0]], dtype=np.complex128
)
_SWAP = np.array(
    [[1, 0, 0, 0], [0, 0, 1, 0], [0, 1, 0, 0], [0, 0, 0, 1]], dtype=np.complex128
)


def _require_finite(name: str, value: float) -> float:
    value = float(value)
    if not math.isfinite(value):
        raise ConfigurationError(f"{name} must be finite, got {value!r}")
    return value


def ry(theta: float) -> np.ndarray:
    """exp(-i theta Y / 2)."""
    theta = _require_finite("theta", theta)
    c, s = math.cos(theta / 2.0), math.sin(theta / 2.0)
    return np.array([[c, -s], [s, c]], dtype=np.complex128)


def _rx(theta: float) -> np.ndarray:
    c, s = math.cos(theta / 2.0), math.sin(theta / 2.0)
    return np.array([[c, -1j * s], [-1j * s, c]], dtype=np.complex128)


def crx(theta: float) -> np.ndarray:
    """X rotation on the second wire, controlled on the first."""
    theta = _require_finite("theta", theta)
    u = np.eye(4, dtype=np.complex128)
    u[2:, 2:] = _rx(theta)
    return u


def cnot() -> np.ndarray:
    """CNOT with control on the first listed wire."""
    return _CNOT.copy()


def swap() -> np.ndarray:
    return _SWAP.copy()


def _entangler(bs_angle: float) -> np.ndarray:
    """The block minus its leading RY: SWAP . CNOT_ba . CRX(-bs) . CNOT_ba."""
    return _SWAP @ _CNOT_BA @ crx(-bs_angle) @ _CNOT_BA


def pqm_block_unitary(ry_angle: float, bs_angle: float) -> np.ndarray:
    """Full 4x4 block unitary; equals SWAP exactly at zero angles."""
    return _entangler(bs_angle) @ np.kron(ry(ry_angle), _I2)


@dataclass(frozen=True)
class PqmBlockSpec:
    """One block placement: wires and post-activation angles."""

    wire_a: int
    wire_b: int
    ry_angle: float
    bs_angle: float

    def __post_init__(self) -> None:
        if self.wire_a == self.wire_b:
            raise ConfigurationError(f"block wires must differ, got {self.wire_a} twice")
        _require_finite("ry_angle", self.ry_angle)
        _require_finite("bs_angle", self.bs_angle)


def apply_block(
    state: StateVector | DensityMatrix,
    spec: PqmBlockSpec,
    noise: NoiseModel | None = None,
) -> StateVector | DensityMatrix:
    """Run one block, inserting noise channels where the model enables them.

    Channel placement: dephasing on wire A right after the RY, amplitude
    damping on both wires after the closing SWAP.
    """
    n = state.num_qubits
    for w in (spec.wire_a, spec.wire_b):
        if not 0 <= w < n:
            raise ConfigurationError(f"block wire {w} out of range for {n} qubits")
    noisy = noise is not None and noise.is_active
    if noisy and not isinstance(state, DensityMatrix):
        raise ConfigurationError("noisy blocks need a DensityMatrix; lift with to_density first")

    wires = (spec.wire_a, spec.wire_b)
    state = _apply_unitary_unchecked(state, ry(spec.ry_angle), wires[:1])
    if noisy and noise.dephasing_enabled:
        state = dephase(state, noise.dephase_p, spec.wire_a)
    state = _apply_unitary_unchecked(state, _entangler(spec.bs_angle), wires)
    if noisy and noise.damping_enabled:
        state = amplitude_damp(state, noise.damping_gamma, spec.wire_a)
        state = amplitude_damp(state, noise.damping_gamma, spec.wire_b)
    return state
