"""Single-qubit Kraus channels applied in place on n-qubit density matrices.

Channels are direct Kraus conjugations contracted into the target wire's
row and column axes; no 2^n x 2^n operator or 4^n superoperator is ever
materialized.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Any, Mapping

import numpy as np

from .errors import ConfigurationError
from .states import DensityMatrix, _apply_on_axes


@dataclass(frozen=True)
class NoiseModel:
    """Which channels run inside each block, and how strongly."""

    dephase_p: float = 0.01
    damping_gamma: float = 0.01
    dephasing_enabled: bool = False
    damping_enabled: bool = False

    def __post_init__(self) -> None:
        for name, p in (("dephase_p", self.dephase_p), ("damping_gamma", self.damping_gamma)):
            if not 0.0 <= p <= 1.0:
                raise ConfigurationError(f"{name} must lie in [0, 1], got {p!r}")

    @property
    def is_active(self) -> bool:
        return self.dephasing_enabled or self.damping_enabled

    @classmethod
    def nisq(cls, p: float = 0.01, gamma: float = 0.01) -> "NoiseModel":
        """Both channels on at every block."""
        return cls(dephase_p=p, damping_gamma=gamma, dephasing_enabled=True, damping_enabled=True)

    @classmethod
    def damping_only(cls, gamma: float = 0.01) -> "NoiseModel":
        return cls(damping_gamma=gamma, dephasing_enabled=False, damping_enabled=True)

    @classmethod
    def dephasing_only(cls, p: float = 0.01) -> "NoiseModel":
        return cls(dephase_p=p, dephasing_enabled=True, damping_enabled=False)

    def to_config(self) -> dict[str, Any]:
        return {
            "dephase_p": self.dephase_p,
            "damping_gamma": self.damping_gamma,
            "dephasing": self.dephasing_enabled,
            "damping": self.damping_enabled,
        }

    @classmethod
    def from_config(cls, cfg: Mapping[str, Any]) -> "NoiseModel":
        return cls(
            dephase_p=float(cfg.get("dephase_p", 0.01)),
            damping_gamma=float(cfg.get("damping_gamma", 0.01)),
            dephasing_enabled=bool(cfg.get("dephasing", False)),
            damping_enabled=bool(cfg.get("damping", False)),
        )


def _kraus_conjugate(rho: DensityMatrix, kraus_ops: list[np.ndarray], wire: int) -> DensityMatrix:
    """sum_k K rho K^dagger with each 2x2 Kraus operator acting on one wire."""
    if not isinstance(rho, DensityMatrix):
        raise ConfigurationError(
            f"noise channels act on density matrices, got {type(rho).__name__}; "
            "lift with to_density first"
        )
    n = rho.num_qubits
    if not 0 <= wire < n:
        raise ConfigurationError(f"wire {wire} out of range for {n} qubits")
    out = None
    for k in kraus_ops:
        term = _apply_on_axes(rho.entries, k, [wire], 2 * n)
        term = _apply_on_axes(term, k.conj(), [n + wire], 2 * n)
        out = term if out is None else out + term
    return DensityMatrix(n, out, check=False)


def dephase(rho: DensityMatrix, p: float, wire: int) -> DensityMatrix:
    """Phase-damping channel (1-p) rho + p Z rho Z on the given wire."""
    if not 0.0 <= p <= 1.0:
        raise ConfigurationError(f"dephasing probability must lie in [0, 1], got {p!r}")
    k0 = math.sqrt(1.0 - p) * np.eye(2, dtype=np.complex128)
    k1 = math.sqrt(p) * np.diag([1.0, -1.0]).astype(np.complex128)
    return _kraus_conjugate(rho, [k0, k1], wire)


def amplitude_damp(rho: DensityMatrix, gamma: float, wire: int) -> DensityMatrix:
    """Amplitude-damping channel with decay probability gamma on the given wire."""
    if not 0.0 <= gamma <= 1.0:
        raise ConfigurationError(f"damping probability must lie in [0, 1], got {gamma!r}")
    k0 = np.diag([1.0, math.sqrt(1.0 - gamma)]).astype(np.complex128)
    k1 = np.zeros((2, 2), dtype=np.complex128)
    k1[0, 1] = math.sqrt(gamma)
    return _kraus_conjugate(rho, [k0, k1], wire)
