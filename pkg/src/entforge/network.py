"""Topology construction, parameter layout, and the circuit forward pass.

A topology is an ordered list of wire pairs; one two-qubit block acts on
each pair, in order.  A circuit replays that list `depth` times with an
independent parameter slice per repetition, activating every raw parameter
before it becomes a gate angle.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Mapping, Sequence

import numpy as np

from .activations import Activation, activate
from .errors import ConfigurationError
from .gates import PqmBlockSpec, apply_block
from .noise import NoiseModel
from .states import DensityMatrix, StateVector, to_density, zero_state


@dataclass(frozen=True)
class Topology:
    name: str
    num_qubits: int
    pairs: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        if self.num_qubits < 2:
            raise ConfigurationError(f"a topology needs at least 2 qubits, got {self.num_qubits}")
        pairs = tuple((int(a), int(b)) for a, b in self.pairs)
        if len(pairs) == 0:
            raise ConfigurationError("a topology needs at least one wire pair")
        for a, b in pairs:
            if a == b:
                raise ConfigurationError(f"pair ({a},{b}) repeats a wire")
            if not (0 <= a < self.num_qubits and 0 <= b < self.num_qubits):
                raise ConfigurationError(
                    f"pair ({a},{b}) out of range for {self.num_qubits} qubits"
                )
        object.__setattr__(self, "pairs", pairs)

    def to_text(self) -> str:
        """Comma-separated ordered pairs, e.g. "0-1,1-2,2-3,3-4,4-0"."""
        return ",".join(f"{a}-{b}" for a, b in self.pairs)

    @classmethod
    def from_text(cls, text: str, num_qubits: int | None = None, name: str = "inline") -> "Topology":
        pairs = []
        for token in text.split(","):
            token = token.strip()
            if token == "":
                continue
            left, sep, right = token.partition("-")
            try:
                if sep != "-":
                    raise ValueError(token)
                pairs.append((int(left), int(right)))
            except ValueError as exc:
                raise ConfigurationError(
                    f"cannot parse topology token {token!r}; expected forms like '0-1'"
                ) from exc
        if not pairs:
            raise ConfigurationError(f"topology text {text!r} holds no pairs")
        if num_qubits is None:
            num_qubits = 1 + max(max(a, b) for a, b in pairs)
        return cls(name=name, num_qubits=num_qubits, pairs=tuple(pairs))

    def to_json_dict(self) -> dict[str, Any]:
        return {
            "name": self.name,
            "num_qubits": self.num_qubits,
            "pairs": [list(p) for p in self.pairs],
        }

    @classmethod
    def from_json_dict(cls, data: Mapping[str, Any]) -> "Topology":
        try:
            return cls(
                name=str(data.get("name", "inline")),
                num_qubits=int(data["num_qubits"]),
                pairs=tuple((int(a), int(b)) for a, b in data["pairs"]),
            )
        except (KeyError, TypeError, ValueError) as exc:
            raise ConfigurationError(f"bad topology JSON object: {exc}") from exc


def staircase(n: int) -> Topology:
    """Nearest-neighbor ascending chain (0,1),(1,2),...,(n-2,n-1)."""
    if n < 2:
        raise ConfigurationError(f"staircase needs n >= 2, got {n}")
    return Topology("sc", n, tuple((i, i + 1) for i in range(n - 1)))


def staircase_plus_1(n: int) -> Topology:
    """Staircase closed by the descending long-range pair (n-1, 0)."""
    if n < 3:
        raise ConfigurationError(f"staircase_plus_1 needs n >= 3, got {n}")
    return Topology("sc+1", n, staircase(n).pairs + ((n - 1, 0),))


def staircase_plus_1_mirrored(n: int) -> Topology:
    """Staircase closed by the ascending pair (0, n-1) instead."""
    if n < 3:
        raise ConfigurationError(f"staircase_plus_1_mirrored needs n >= 3, got {n}")
    return Topology("sc+1w", n, staircase(n).pairs + ((0, n - 1),))


def staircase_plus_2(n: int) -> Topology:
    """staircase_plus_1 followed by the extra long-range pair (3, 1)."""
    if n < 5:
        raise ConfigurationError(f"staircase_plus_2 needs n >= 5, got {n}")
    return Topology("sc+2", n, staircase_plus_1(n).pairs + ((3, 1),))


_NAMED_10Q_EXTRAS = {
    "u_5_9": ((8, 1), (7, 2), (6, 3), (5, 4)),
    "u_0_3": ((8, 1), (7, 2), (6, 3), (4, 1), (5, 2)),
    "w_0_3": ((8, 1), (7, 2), (6, 3), (4, 1), (5, 2), (9, 1), (8, 0)),
}


def named_10q(variant: str) -> Topology:
    """The three studied 10-qubit layouts: "u_5_9", "u_0_3", "w_0_3"."""
    extras = _NAMED_10Q_EXTRAS.get(variant)
    if extras is None:
        raise ConfigurationError(
            f"unknown 10-qubit variant {variant!r}; expected {sorted(_NAMED_10Q_EXTRAS)}"
        )
    return Topology(variant, 10, staircase_plus_1(10).pairs + extras)


def random_topology(n: int, num_gates: int, rng_seed: int) -> Topology:
    """num_gates ordered pairs of distinct wires, drawn uniformly and reproducibly."""
    if n < 2:
        raise ConfigurationError(f"random_topology needs n >= 2, got {n}")
    if num_gates < 1:
        raise ConfigurationError(f"random_topology needs num_gates >= 1, got {num_gates}")
    rng = np.random.default_rng(rng_seed)
    pairs = []
    for _ in range(num_gates):
        a = int(rng.integers(n))
        b = int(rng.integers(n - 1))
        if b >= a:
            b += 1
        pairs.append((a, b))
    return Topology(f"rn[{rng_seed}]", n, tuple(pairs))


@dataclass(frozen=True)
class StructureFlags:
    has_descending_nonneighbor: bool


def structure_flags(t: Topology) -> StructureFlags:
    """True iff some pair (a, b) runs downward across more than one wire."""
    flag = any(a > b and abs(a - b) > 1 for a, b in t.pairs)
    return StructureFlags(has_descending_nonneighbor=flag)


@dataclass(frozen=True)
class Circuit:
    """A topology replayed `depth` times with activated angles.

    params_per_block = 1 feeds the same activated angle to the RY and the
    controlled exchange; 2 gives the RY its own raw parameter.
    """

    topology: Topology
    activation: Activation
    depth: int = 1
    params_per_block: int = 1

    def __post_init__(self) -> None:
        if self.depth not in (1, 2):
            raise ConfigurationError(f"depth must be 1 or 2, got {self.depth}")
        if self.params_per_block not in (1, 2):
            raise ConfigurationError(
                f"params_per_block must be 1 or 2, got {self.params_per_block}"
            )

    @property
    def num_params(self) -> int:
        return self.depth * len(self.topology.pairs) * self.params_per_block

    @property
    def num_qubits(self) -> int:
        return self.topology.num_qubits


def _block_angles(
    circuit: Circuit,
    chunk: np.ndarray,
    block_index: int,
) -> tuple[float, float]:
    act = circuit.activation
    if circuit.params_per_block == 1:
        angle = activate(float(chunk[block_index]), act)
        return angle, angle
    ry_angle = activate(float(chunk[2 * block_index]), act)
    bs_angle = activate(float(chunk[2 * block_index + 1]), act)
    return ry_angle, bs_angle


def _forward(
    circuit: Circuit,
    params: np.ndarray,
    noise: NoiseModel | None,
    shift: tuple[int, int, str, float] | None = None,
) -> StateVector | DensityMatrix:
    """Forward pass; `shift` nudges one activated angle, used by gradients.

    shift = (repetition, block index, "ry" | "bs", delta in radians).
    """
    n = circuit.num_qubits
    pairs = circuit.topology.pairs
    per_rep = len(pairs) * circuit.params_per_block
    state: StateVector | DensityMatrix = zero_state(n)
    if noise is not None and noise.is_active:
        state = to_density(state)
    for rep in range(circuit.depth):
        chunk = params[rep * per_rep : (rep + 1) * per_rep]
        for j, (a, b) in enumerate(pairs):
            ry_angle, bs_angle = _block_angles(circuit, chunk, j)
            if shift is not None and shift[0] == rep and shift[1] == j:
                if shift[2] == "ry":
                    ry_angle += shift[3]
                else:
                    bs_angle += shift[3]
            state = apply_block(state, PqmBlockSpec(a, b, ry_angle, bs_angle), noise)
    return state


def forward(
    circuit: Circuit, params: Sequence[float] | np.ndarray, noise: NoiseModel | None = None
) -> StateVector | DensityMatrix:
    """Evolve |0...0> through every block; noise switches to the mixed path."""
    params = np.asarray(params, dtype=np.float64)
    if params.shape != (circuit.num_params,):
        raise ConfigurationError(
            f"circuit expects {circuit.num_params} parameters, got shape {params.shape}"
        )
    return _forward(circuit, params, noise)
