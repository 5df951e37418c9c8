"""Loss, gradients, Adam with early stopping, and multi-seed statistics.

The loss is 1 minus the Meyer-Wallach measure of the forward output.  Two
gradient modes are provided:

* parameter_shift: exact analytic gradients.  Because the loss is quadratic
  in the state (purities of reduced density matrices), shift rules are
  applied at the state level, d rho / d angle = sum_m c_m rho(angle + mu_m),
  and chained through the purity product rule.  The RY occurrence of an
  angle uses the two-term +-pi/2 rule; the controlled-X occurrence has
  generator spectrum {0, +-1/2} and needs the four-term rule.  Both results
  are multiplied by the activation's chain factor.
* finite_difference: central differences on the raw parameters.
"""

from __future__ import annotations

import csv
import math
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field, replace
from typing import Any, Iterable, Mapping, Sequence

import numpy as np

from .activations import activate_derivative
from .errors import ConfigurationError
from .measures import NEGATIVITY_LIFT_LIMIT, meyer_wallach, negativity
from .network import Circuit, _forward, forward
from .noise import NoiseModel
from .states import Bipartition, DensityMatrix, StateVector, _single_qubit_rdms, to_density

PARAMETER_SHIFT = "parameter_shift"
FINITE_DIFFERENCE = "finite_difference"

_HALF_PI = math.pi / 2.0
# Two-term rule for plain rotations: d rho/d angle = (rho(+pi/2) - rho(-pi/2))/2.
_RY_RULE = ((0.5, _HALF_PI), (-0.5, -_HALF_PI))
# Four-term rule for controlled rotations (generator eigenvalues {0, +-1/2}).
_C1 = (math.sqrt(2.0) + 1.0) / (4.0 * math.sqrt(2.0))
_C2 = (math.sqrt(2.0) - 1.0) / (4.0 * math.sqrt(2.0))
_CRX_RULE = (
    (_C1, _HALF_PI),
    (-_C1, -_HALF_PI),
    (-_C2, 3.0 * _HALF_PI),
    (_C2, -3.0 * _HALF_PI),
)


def worker_count(upper: int) -> int:
    """Parallel worker budget, capped by the ENTFORGE_THREADS env var."""
    cap = os.environ.get("ENTFORGE_THREADS")
    limit = os.cpu_count() or 1
    if cap is not None:
        try:
            limit = max(1, int(cap))
        except ValueError as exc:
            raise ConfigurationError(f"ENTFORGE_THREADS must be an integer, got {cap!r}") from exc
    return max(1, min(upper, limit))


@dataclass(frozen=True)
class TrainConfig:
    learning_rate: float = 5e-3
    adam_beta1: float = 0.9
    adam_beta2: float = 0.999
    adam_eps: float = 1e-8
    max_epochs: int = 2000
    early_stop_patience: int = 100
    early_stop_min_delta: float = 1e-6
    seed: int = 0
    gradient_mode: str = PARAMETER_SHIFT
    fd_step: float = 1e-4
    # None: every epoch up to 6 qubits, every 10 epochs above.
    negativity_every: int | None = None

    def __post_init__(self) -> None:
        if self.learning_rate <= 0:
            raise ConfigurationError(f"learning_rate must be positive, got {self.learning_rate}")
        if not (0 < self.adam_beta1 < 1 and 0 < self.adam_beta2 < 1):
            raise ConfigurationError("adam betas must lie strictly inside (0, 1)")
        if self.early_stop_patience < 1:
            raise ConfigurationError("early_stop_patience must be at least 1")
        if self.max_epochs < 0:
            raise ConfigurationError("max_epochs must be non-negative")
        if self.gradient_mode not in (PARAMETER_SHIFT, FINITE_DIFFERENCE):
            raise ConfigurationError(f"unknown gradient_mode {self.gradient_mode!r}")
        if self.fd_step <= 0:
            raise ConfigurationError("fd_step must be positive")

    def to_config(self) -> dict[str, Any]:
        return {
            "learning_rate": self.learning_rate,
            "adam_beta1": self.adam_beta1,
            "adam_beta2": self.adam_beta2,
            "adam_eps": self.adam_eps,
            "max_epochs": self.max_epochs,
            "early_stop_patience": self.early_stop_patience,
            "early_stop_min_delta": self.early_stop_min_delta,
            "seed": self.seed,
            "gradient_mode": self.gradient_mode,
            "fd_step": self.fd_step,
            "negativity_every": self.negativity_every,
        }

    @classmethod
    def from_config(cls, cfg: Mapping[str, Any]) -> "TrainConfig":
        known = {f: cfg[f] for f in cls.__dataclass_fields__ if f in cfg}
        return cls(**known)


def loss(circuit: Circuit, params: Sequence[float], noise: NoiseModel | None = None) -> float:
    """1 - meyer_wallach of the forward output."""
    return 1.0 - meyer_wallach(forward(circuit, params, noise))


def _occurrences(circuit: Circuit, index: int) -> tuple[int, int, tuple[tuple[str, tuple], ...]]:
    """Map a raw parameter index to (repetition, block, shift-rule occurrences)."""
    per_rep = len(circuit.topology.pairs) * circuit.params_per_block
    rep, offset = divmod(index, per_rep)
    if circuit.params_per_block == 1:
        return rep, offset, (("ry", _RY_RULE), ("bs", _CRX_RULE))
    block, slot = divmod(offset, 2)
    if slot == 0:
        return rep, block, (("ry", _RY_RULE),)
    return rep, block, (("bs", _CRX_RULE),)


def _rdm_overlap(a: np.ndarray, b: np.ndarray) -> float:
    """sum_i Re Tr[a_i b_i] over stacked (n, 2, 2) reduced density matrices."""
    return float(np.real(np.sum(a * b.transpose(0, 2, 1))))


def _parameter_shift_gradient(
    circuit: Circuit, params: np.ndarray, noise: NoiseModel | None
) -> np.ndarray:
    n = circuit.num_qubits
    base_rdms = _single_qubit_rdms(_forward(circuit, params, noise))
    grad = np.zeros(len(params))
    for j in range(len(params)):
        chain = activate_derivative(float(params[j]), circuit.activation)
        if chain == 0.0:
            continue
        rep, block, occurrences = _occurrences(circuit, j)
        acc = 0.0
        for occ, rule in occurrences:
            for coeff, delta in rule:
                shifted = _forward(circuit, params, noise, shift=(rep, block, occ, delta))
                acc += coeff * _rdm_overlap(base_rdms, _single_qubit_rdms(shifted))
        # dL/d angle = (4/n) sum_i Tr[rho_i d rho_i/d angle]
        grad[j] = chain * (4.0 / n) * acc
    return grad


def _finite_difference_gradient(
    circuit: Circuit, params: np.ndarray, noise: NoiseModel | None, step: float
) -> np.ndarray:
    grad = np.zeros(len(params))
    work = params.copy()
    for j in range(len(params)):
        work[j] = params[j] + step
        up = loss(circuit, work, noise)
        work[j] = params[j] - step
        down = loss(circuit, work, noise)
        work[j] = params[j]
        grad[j] = (up - down) / (2.0 * step)
    return grad


def gradient(
    circuit: Circuit,
    params: Sequence[float],
    noise: NoiseModel | None = None,
    mode: str = PARAMETER_SHIFT,
    fd_step: float = 1e-4,
) -> np.ndarray:
    """Gradient of the loss with respect to the raw parameters."""
    params = np.asarray(params, dtype=np.float64)
    if params.shape != (circuit.num_params,):
        raise ConfigurationError(
            f"circuit expects {circuit.num_params} parameters, got shape {params.shape}"
        )
    if mode == PARAMETER_SHIFT:
        return _parameter_shift_gradient(circuit, params, noise)
    if mode == FINITE_DIFFERENCE:
        return _finite_difference_gradient(circuit, params, noise, fd_step)
    raise ConfigurationError(f"unknown gradient mode {mode!r}")


@dataclass
class AdamState:
    m: np.ndarray
    v: np.ndarray

    @classmethod
    def zeros(cls, size: int) -> "AdamState":
        return cls(m=np.zeros(size), v=np.zeros(size))


def adam_step(
    params: np.ndarray,
    grads: np.ndarray,
    moment_state: AdamState,
    config: TrainConfig,
    epoch: int,
) -> tuple[np.ndarray, AdamState]:
    """One bias-corrected Adam update; epoch counts from 1."""
    if params.shape != grads.shape:
        raise ConfigurationError("params and grads must share a shape")
    if epoch < 1:
        raise ConfigurationError("adam_step epochs count from 1")
    b1, b2 = config.adam_beta1, config.adam_beta2
    m = b1 * moment_state.m + (1.0 - b1) * grads
    v = b2 * moment_state.v + (1.0 - b2) * grads**2
    m_hat = m / (1.0 - b1**epoch)
    v_hat = v / (1.0 - b2**epoch)
    new_params = params - config.learning_rate * m_hat / (np.sqrt(v_hat) + config.adam_eps)
    return new_params, AdamState(m=m, v=v)


@dataclass
class TrainingTrace:
    """Per-epoch history of one optimization run."""

    epochs: list[int]
    loss: list[float]
    mw: list[float]
    # Bipartition -> {epoch: value}; sparse when the logging cadence skips epochs.
    negativity: dict[Bipartition, dict[int, float]]
    final_params: np.ndarray
    stopped_early: bool
    stop_epoch: int
    config: TrainConfig

    @property
    def final_loss(self) -> float:
        """Best loss seen over the whole run (monotone under early stopping)."""
        return min(self.loss)

    @property
    def final_mw(self) -> float:
        return 1.0 - self.final_loss

    @property
    def best_epoch(self) -> int:
        return self.epochs[int(np.argmin(self.loss))]

    def final_negativities(self) -> dict[Bipartition, float]:
        """Last logged negativity per tracked bipartition."""
        out: dict[Bipartition, float] = {}
        for part, series in self.negativity.items():
            if series:
                out[part] = series[max(series)]
        return out

    def to_csv(self, path: str) -> None:
        parts = sorted(self.negativity, key=lambda p: p.side_b)
        with open(path, "w", newline="") as fh:
            writer = csv.writer(fh)
            writer.writerow(["epoch", "loss", "mw"] + [f"neg_{p.column_label()}" for p in parts])
            for row, epoch in enumerate(self.epochs):
                cells: list[str] = [str(epoch), repr(self.loss[row]), repr(self.mw[row])]
                for part in parts:
                    value = self.negativity[part].get(epoch)
                    cells.append("" if value is None else repr(value))
                writer.writerow(cells)

    def summary_dict(self) -> dict[str, Any]:
        return {
            "final_loss": self.final_loss,
            "final_mw": self.final_mw,
            "best_epoch": self.best_epoch,
            "stop_epoch": self.stop_epoch,
            "stopped_early": self.stopped_early,
            "negativity_final": {p.label(): v for p, v in self.final_negativities().items()},
        }


def _negativity_cadence(config: TrainConfig, num_qubits: int) -> int:
    if config.negativity_every is not None:
        return max(1, config.negativity_every)
    return 1 if num_qubits <= 6 else 10


def _evaluate(
    circuit: Circuit,
    params: np.ndarray,
    noise: NoiseModel | None,
    tracked: tuple[Bipartition, ...],
    want_negativity: bool,
) -> tuple[float, float, dict[Bipartition, float]]:
    state = forward(circuit, params, noise)
    mw = meyer_wallach(state)
    negs: dict[Bipartition, float] = {}
    if tracked and want_negativity:
        if isinstance(state, DensityMatrix):
            rho = state
        elif circuit.num_qubits <= NEGATIVITY_LIFT_LIMIT:
            rho = to_density(state)
        else:
            rho = None  # cost guard: skip silently on big pure registers
        if rho is not None:
            for part in tracked:
                negs[part] = negativity(rho, part)
    return 1.0 - mw, mw, negs


def train(
    circuit: Circuit,
    config: TrainConfig,
    noise: NoiseModel | None = None,
    tracked_bipartitions: Iterable[Bipartition] = (),
) -> TrainingTrace:
    """Adam-train the circuit parameters against the surrogate loss.

    Initial parameters are uniform on [-pi, pi) from config.seed.  Training
    stops at max_epochs, or once the loss has failed to improve by
    early_stop_min_delta for early_stop_patience consecutive epochs.
    """
    tracked = tuple(tracked_bipartitions)
    for part in tracked:
        part.validate_for(circuit.num_qubits)
    cadence = _negativity_cadence(config, circuit.num_qubits)
    rng = np.random.default_rng(config.seed)
    params = rng.uniform(-math.pi, math.pi, size=circuit.num_params)

    epochs, losses, mws = [], [], []
    neg_series: dict[Bipartition, dict[int, float]] = {p: {} for p in tracked}

    def record(epoch: int, force_neg: bool = False) -> float:
        want = force_neg or epoch % cadence == 0
        l, mw, negs = _evaluate(circuit, params, noise, tracked, want)
        epochs.append(epoch)
        losses.append(l)
        mws.append(mw)
        for part, value in negs.items():
            neg_series[part][epoch] = value
        return l

    current = record(0)
    best_loss = current
    best_params = params.copy()
    reference = current  # early-stopping baseline: best loss so far
    patience_left = config.early_stop_patience
    moments = AdamState.zeros(circuit.num_params)
    stopped_early = False
    epoch = 0

    for epoch in range(1, config.max_epochs + 1):
        grads = gradient(circuit, params, noise, config.gradient_mode, config.fd_step)
        params, moments = adam_step(params, grads, moments, config, epoch)
        current = record(epoch, force_neg=epoch == config.max_epochs)
        if current < best_loss:
            best_loss = current
            best_params = params.copy()
        if current < reference - config.early_stop_min_delta:
            reference = current
            patience_left = config.early_stop_patience
        else:
            patience_left -= 1
            if patience_left == 0:
                stopped_early = True
                break

    if stopped_early and tracked and epochs[-1] % cadence != 0:
        # final-epoch negativity so downstream summaries always have one
        _, _, negs = _evaluate(circuit, params, noise, tracked, True)
        for part, value in negs.items():
            neg_series[part][epochs[-1]] = value

    return TrainingTrace(
        epochs=epochs,
        loss=losses,
        mw=mws,
        negativity=neg_series,
        final_params=best_params,
        stopped_early=stopped_early,
        stop_epoch=epochs[-1],
        config=config,
    )


@dataclass
class CurveStats:
    epochs: list[int]
    mean: np.ndarray
    std: np.ndarray


@dataclass
class MultiSeedStats:
    """Pointwise statistics over k reruns differing only in their seed."""

    loss: CurveStats
    mw: CurveStats
    negativity: dict[Bipartition, CurveStats]
    traces: list[TrainingTrace]

    @property
    def best_index(self) -> int:
        return int(np.argmin([t.final_loss for t in self.traces]))

    @property
    def best_trace(self) -> TrainingTrace:
        return self.traces[self.best_index]

    def final_losses(self) -> np.ndarray:
        return np.array([t.final_loss for t in self.traces])


def _padded_curves(series: list[list[float]]) -> tuple[np.ndarray, np.ndarray]:
    width = max(len(s) for s in series)
    table = np.array([s + [s[-1]] * (width - len(s)) for s in series])
    return table.mean(axis=0), table.std(axis=0)


def _run_one_seed(args: tuple) -> TrainingTrace:
    circuit, config, noise, tracked, seed = args
    return train(circuit, replace(config, seed=seed), noise, tracked)


def multi_seed_stats(
    circuit: Circuit,
    config: TrainConfig,
    noise: NoiseModel | None = None,
    k: int = 20,
    tracked_bipartitions: Iterable[Bipartition] = (),
) -> MultiSeedStats:
    """Train k times with seeds config.seed .. config.seed + k - 1.

    Runs execute in parallel when ENTFORGE_THREADS and the host allow it;
    results merge in seed order either way.
    """
    if k < 2:
        raise ConfigurationError(f"multi_seed_stats needs k >= 2, got {k}")
    tracked = tuple(tracked_bipartitions)
    jobs = [(circuit, config, noise, tracked, config.seed + i) for i in range(k)]
    workers = worker_count(k)
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            traces = list(pool.map(_run_one_seed, jobs))
    else:
        traces = [_run_one_seed(job) for job in jobs]

    width = max(len(t.epochs) for t in traces)
    epochs = max((t.epochs for t in traces), key=len)
    loss_mean, loss_std = _padded_curves([t.loss for t in traces])
    mw_mean, mw_std = _padded_curves([t.mw for t in traces])

    neg_stats: dict[Bipartition, CurveStats] = {}
    for part in tracked:
        logged = sorted(set().union(*(t.negativity[part].keys() for t in traces)))
        if not logged:
            continue
        series = []
        for t in traces:
            own = t.negativity[part]
            if not own:
                continue
            last = None
            padded = []
            for e in logged:
                last = own.get(e, last)
                if last is not None:
                    padded.append(last)
            # pad a late-starting series backward with its first value
            padded = [padded[0]] * (len(logged) - len(padded)) + padded
            series.append(padded)
        if series:
            mean, std = _padded_curves(series)
            neg_stats[part] = CurveStats(epochs=logged, mean=mean, std=std)

    return MultiSeedStats(
        loss=CurveStats(epochs=list(epochs[:width]), mean=loss_mean, std=loss_std),
        mw=CurveStats(epochs=list(epochs[:width]), mean=mw_mean, std=mw_std),
        negativity=neg_stats,
        traces=traces,
    )
