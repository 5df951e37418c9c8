"""Entanglement quantifiers: the global surrogate cost and the certifier.

The Meyer-Wallach measure averages single-qubit linear entropies,
Q = (2/n) * sum_i (1 - Tr[rho_i^2]), so Q = 0 exactly on product states and
Q = 1 on GHZ states.  Negativity (|| rho^T_B ||_1 - 1) / 2 certifies
entanglement across one bipartition; its pure-state ceiling is
(2^min(|B|, n-|B|) - 1) / 2.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import ConfigurationError
from .states import (
    Bipartition,
    DensityMatrix,
    StateVector,
    _single_qubit_rdms,
    partial_transpose,
    to_density,
    trace_norm,
)

# Lifting a pure state to a density matrix for negativity stops being cheap
# past this size; callers must track negativity on smaller registers only.
NEGATIVITY_LIFT_LIMIT = 12


def meyer_wallach(state: StateVector | DensityMatrix) -> float:
    """Global entanglement in [0, 1] from single-qubit reduced purities."""
    if state.num_qubits < 2:
        raise ConfigurationError("meyer_wallach needs at least 2 qubits")
    rdms = _single_qubit_rdms(state)
    # Tr[rho^2] = sum |rho_jk|^2 for Hermitian rho.
    purities = np.sum(np.abs(rdms) ** 2, axis=(1, 2))
    return float((2.0 / state.num_qubits) * np.sum(1.0 - purities))


def negativity(rho: DensityMatrix, part: Bipartition) -> float:
    """(trace norm of the partial transpose - 1) / 2; zero on product states."""
    return (trace_norm(partial_transpose(rho, part)) - 1.0) / 2.0


def negativity_upper_bound(num_qubits: int, part: Bipartition) -> float:
    """Pure-state ceiling (d_min - 1)/2 with d_min = 2^min(|B|, n-|B|)."""
    part.validate_for(num_qubits)
    d_min = 1 << min(len(part.side_b), num_qubits - len(part.side_b))
    return (d_min - 1) / 2.0


@dataclass
class MeasureReport:
    """MW plus per-bipartition negativities and their theoretical ceilings."""

    mw: float
    negativities: dict[Bipartition, float] = field(default_factory=dict)
    bounds: dict[Bipartition, float] = field(default_factory=dict)

    def __post_init__(self) -> None:
        for part, neg in self.negativities.items():
            bound = self.bounds.get(part)
            if bound is not None and neg > bound + 1e-9:
                raise ConfigurationError(
                    f"negativity {neg!r} for {part.label()} exceeds its bound {bound!r}"
                )

    @classmethod
    def from_state(
        cls,
        state: StateVector | DensityMatrix,
        bipartitions: tuple[Bipartition, ...] = (),
    ) -> "MeasureReport":
        """Evaluate every quantity on one state, lifting pure states as needed."""
        negs: dict[Bipartition, float] = {}
        bounds: dict[Bipartition, float] = {}
        if bipartitions:
            if isinstance(state, DensityMatrix):
                rho = state
            elif state.num_qubits <= NEGATIVITY_LIFT_LIMIT:
                rho = to_density(state)
            else:
                raise ConfigurationError(
                    f"negativity on a pure state needs n <= {NEGATIVITY_LIFT_LIMIT}, "
                    f"got {state.num_qubits}"
                )
            for part in bipartitions:
                negs[part] = negativity(rho, part)
                bounds[part] = negativity_upper_bound(state.num_qubits, part)
        return cls(mw=meyer_wallach(state), negativities=negs, bounds=bounds)
