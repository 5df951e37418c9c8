"""Entanglement engineering for circuits of memristor-style two-qubit blocks.

The package simulates parameterized circuits assembled from one reusable
block (a rotation feeding a beam-splitter-like entangler plus a mode swap),
optionally reparameterized through a nonlinear activation and run under
dephasing or amplitude damping.  Training minimizes one minus the
Meyer-Wallach measure; certification uses bipartite negativity.
"""

from .activations import Activation, activate, activate_derivative, response
from .errors import ConfigurationError, NumericalContractError
from .experiments import (
    ExperimentSpec,
    MonteCarloRecord,
    SpecError,
    SweepRow,
    ThresholdSummary,
    default_mc_train_config,
    list_presets,
    monte_carlo,
    preset_spec,
    run_experiment,
    sweep_memristor_params,
    threshold_analysis,
)
from .gates import PqmBlockSpec, apply_block, cnot, crx, pqm_block_unitary, ry, swap
from .measures import (
    MeasureReport,
    meyer_wallach,
    negativity,
    negativity_upper_bound,
)
from .network import (
    Circuit,
    StructureFlags,
    Topology,
    forward,
    named_10q,
    random_topology,
    staircase,
    staircase_plus_1,
    staircase_plus_1_mirrored,
    staircase_plus_2,
    structure_flags,
)
from .noise import NoiseModel, amplitude_damp, dephase
from .states import (
    Bipartition,
    DensityMatrix,
    StateVector,
    apply_unitary,
    partial_transpose,
    purity,
    reduced_single_qubit,
    to_density,
    trace_norm,
    zero_state,
)
from .training import (
    AdamState,
    FINITE_DIFFERENCE,
    PARAMETER_SHIFT,
    MultiSeedStats,
    TrainConfig,
    TrainingTrace,
    adam_step,
    gradient,
    loss,
    multi_seed_stats,
    train,
)

__version__ = "0.1.0"

__all__ = [
    "Activation",
    "AdamState",
    "Bipartition",
    "Circuit",
    "ConfigurationError",
    "DensityMatrix",
    "ExperimentSpec",
    "FINITE_DIFFERENCE",
    "MeasureReport",
    "MonteCarloRecord",
    "MultiSeedStats",
    "NoiseModel",
    "NumericalContractError",
    "PARAMETER_SHIFT",
    "PqmBlockSpec",
    "SpecError",
    "StateVector",
    "StructureFlags",
    "SweepRow",
    "ThresholdSummary",
    "Topology",
    "TrainConfig",
    "TrainingTrace",
    "activate",
    "activate_derivative",
    "adam_step",
    "amplitude_damp",
    "apply_block",
    "apply_unitary",
    "cnot",
    "crx",
    "default_mc_train_config",
    "dephase",
    "forward",
    "gradient",
    "list_presets",
    "loss",
    "meyer_wallach",
    "monte_carlo",
    "multi_seed_stats",
    "named_10q",
    "negativity",
    "negativity_upper_bound",
    "partial_transpose",
    "pqm_block_unitary",
    "preset_spec",
    "purity",
    "random_topology",
    "reduced_single_qubit",
    "response",
    "run_experiment",
    "ry",
    "staircase",
    "staircase_plus_1",
    "staircase_plus_1_mirrored",
    "staircase_plus_2",
    "structure_flags",
    "swap",
    "sweep_memristor_params",
    "threshold_analysis",
    "to_density",
    "train",
    "trace_norm",
    "zero_state",
]
