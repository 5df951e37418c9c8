"""Release gate: one test per headline claim, each printing what it measured.

Run with -s to see the measured numbers as they land. The first three tests
are instant; the training-based ones take minutes each on one core, and the
Monte Carlo separation is the long pole (tens of minutes). Criterion 8 runs
ten-qubit noisy optimizations for hours and only activates when
ENTFORGE_EXTENDED=1 is set.
"""

import json
import math
import os
import time

import numpy as np
import pytest

from conftest import ghz, random_density, random_state, w_state
from entforge.activations import Activation, activate
from entforge.experiments import (
    ExperimentSpec,
    monte_carlo,
    preset_spec,
    run_experiment,
    threshold_analysis,
)
from entforge.measures import meyer_wallach, negativity
from entforge.network import Circuit, forward, random_topology, staircase_plus_1
from entforge.noise import NoiseModel, amplitude_damp, dephase
from entforge.states import Bipartition, DensityMatrix, StateVector, to_density
from entforge.training import (
    FINITE_DIFFERENCE,
    PARAMETER_SHIFT,
    TrainConfig,
    gradient,
    multi_seed_stats,
    train,
)

B_012 = Bipartition((0, 1, 2))
B_234 = Bipartition((2, 3, 4))


def _product_state(num_qubits: int, rng) -> StateVector:
    amps = np.ones(1, dtype=np.complex128)
    for _ in range(num_qubits):
        single = rng.normal(size=2) + 1j * rng.normal(size=2)
        single /= np.linalg.norm(single)
        amps = np.kron(amps, single)
    return StateVector(num_qubits, amps)


def _peak_negativity(stats, part) -> float:
    return max(
        max(trace.negativity[part].values()) for trace in stats.traces
    )


def test_criterion_01_measure_oracles():
    for n in range(2, 11):
        assert abs(meyer_wallach(ghz(n)) - 1.0) <= 1e-12, f"ghz({n})"
    rng = np.random.default_rng(20250825)
    for i in range(100):
        state = _product_state(2 + i % 5, rng)
        assert abs(meyer_wallach(state)) <= 1e-12
    assert abs(meyer_wallach(w_state(3)) - 8.0 / 9.0) <= 1e-12
    bell = negativity(to_density(ghz(2)), Bipartition((0,)))
    assert abs(bell - 0.5) <= 1e-10
    ghz5 = negativity(to_density(ghz(5)), B_012)
    assert abs(ghz5 - 0.5) <= 1e-9
    print(f"criterion 1: bell neg {bell:.12f}, ghz5 [0,1,2] neg {ghz5:.12f}")


def test_criterion_02_channel_contracts():
    rng = np.random.default_rng(42)
    worst_trace = 0.0
    worst_eig = 0.0
    for i in range(500):
        rho = random_density(3, seed=1000 + i)
        out = dephase(rho, float(rng.uniform(0, 1)), int(rng.integers(3)))
        out = amplitude_damp(out, float(rng.uniform(0, 1)), int(rng.integers(3)))
        worst_trace = max(worst_trace, abs(complex(np.trace(out.entries)) - 1.0))
        worst_eig = min(worst_eig, float(np.linalg.eigvalsh(out.entries).min()))
        assert worst_trace <= 1e-12
        assert worst_eig >= -1e-9
    one = DensityMatrix(1, np.diag([0.0, 1.0]).astype(np.complex128))
    drained = amplitude_damp(one, 1.0, 0)
    assert np.array_equal(drained.entries, np.diag([1.0, 0.0]).astype(np.complex128))
    print(f"criterion 2: worst trace drift {worst_trace:.2e}, worst eigenvalue {worst_eig:.2e}")


def test_criterion_03_gradient_fidelity():
    rng = np.random.default_rng(7)
    activations = [Activation.linear(), Activation.sine(), Activation.memristor(4.0, 0.5)]
    worst = {None: 0.0, "nisq": 0.0}
    for i in range(50):
        n = int(rng.integers(2, 5))
        topo = random_topology(n, num_gates=int(rng.integers(1, n + 1)), rng_seed=i)
        circ = Circuit(topo, activations[i % 3], depth=int(rng.integers(1, 3)))
        params = _clamp_safe(rng, circ)
        for noise, tol, key in (
            (None, 1e-5, None),
            (NoiseModel.nisq(0.01, 0.01), 1e-4, "nisq"),
        ):
            shift = gradient(circ, params, noise, PARAMETER_SHIFT)
            fd = gradient(circ, params, noise, FINITE_DIFFERENCE, fd_step=1e-5)
            gap = float(np.max(np.abs(shift - fd)))
            worst[key] = max(worst[key], gap)
            assert gap <= tol, f"circuit {i}: gap {gap:.2e} over {tol}"
    print(
        f"criterion 3: worst shift-vs-fd gap noiseless {worst[None]:.2e}, "
        f"nisq {worst['nisq']:.2e}"
    )


def _clamp_safe(rng, circuit: Circuit, margin: float = 0.05) -> np.ndarray:
    out = np.empty(circuit.num_params)
    filled = 0
    while filled < circuit.num_params:
        theta = float(rng.uniform(-2 * math.pi, 2 * math.pi))
        if circuit.activation.kind == "linear":
            out[filled] = theta
            filled += 1
            continue
        angle = activate(theta, circuit.activation)
        r = math.cos(angle / 2.0) ** 2
        if margin < r < 1.0 - margin:
            out[filled] = theta
            filled += 1
    return out


def test_criterion_04_noiseless_training_converges():
    circuit = Circuit(staircase_plus_1(5), Activation.sine(), depth=2)
    stats = multi_seed_stats(circuit, TrainConfig(seed=0), None, k=5)
    best = stats.best_trace.final_loss
    print(f"criterion 4: best of 5 noiseless losses {best:.6f}")
    assert best <= 0.05


@pytest.fixture(scope="module")
def mc_batches():
    batches = {}
    for tag in ("linear", "sin", "bm"):
        spec = preset_spec(f"appendix_montecarlo_5q_{tag}")
        batches[tag] = monte_carlo(
            spec.samples,
            spec.num_qubits,
            spec.activation,
            spec.noise,
            spec.train,
            master_seed=spec.train.seed,
            depth=spec.depth,
        )
    return batches


def test_criterion_05_monte_carlo_separation(mc_batches):
    fractions = {
        tag: threshold_analysis(records).fraction_above
        for tag, records in mc_batches.items()
    }
    unflagged = {
        tag: sum(
            1
            for r in records
            if r.final_mw <= 0.8 and not r.has_descending_nonneighbor
        )
        for tag, records in mc_batches.items()
    }
    print(f"criterion 5: fraction above 0.8 {fractions}, unflagged low records {unflagged}")
    assert fractions["sin"] > fractions["linear"]
    assert fractions["bm"] > fractions["linear"]
    for tag, records in mc_batches.items():
        assert threshold_analysis(records).below_all_have_flag, f"{tag} flag claim"


def test_criterion_06_low_noise_added_connection():
    spec = preset_spec("fig_sc_plus1_low_noise_5q_bm")
    stats = multi_seed_stats(
        spec.circuit(), spec.train, spec.noise,
        k=spec.seeds, tracked_bipartitions=spec.bipartitions,
    )
    peak = _peak_negativity(stats, B_012)
    control = preset_spec("fig_sc_low_noise_5q_bm")
    trace = train(control.circuit(), control.train, control.noise, control.bipartitions)
    control_peaks = {
        part.label(): max(series.values()) for part, series in trace.negativity.items()
    }
    print(f"criterion 6: best-of-20 peak {peak:.4f}, plain-chain peaks {control_peaks}")
    assert peak >= 1.3
    for label, value in control_peaks.items():
        assert value < 0.6, f"plain chain {label} reached {value:.4f}"


def test_criterion_07_full_noise_balanced_bipartitions():
    spec = preset_spec("fig_sc_plus2_full_noise_5q")
    stats = multi_seed_stats(
        spec.circuit(), spec.train, spec.noise,
        k=spec.seeds, tracked_bipartitions=spec.bipartitions,
    )
    finals = stats.best_trace.final_negativities()
    a, b = finals[B_012], finals[B_234]
    print(f"criterion 7: best-seed negativities [0,1,2] {a:.4f}, [2,3,4] {b:.4f}")
    assert a >= 1.0 and b >= 1.0
    assert abs(a - b) <= 0.2


@pytest.mark.skipif(
    os.environ.get("ENTFORGE_EXTENDED") != "1",
    reason="ten-qubit noisy runs take hours; set ENTFORGE_EXTENDED=1 to include them",
)
def test_criterion_08_ten_qubit_topology_study():
    spec = preset_spec("fig_10q_u_5_9")
    trace = train(spec.circuit(), spec.train, spec.noise, spec.bipartitions)
    wide = max(trace.negativity[Bipartition((0, 1, 2, 3, 4))].values())
    spec2 = preset_spec("fig_10q_u_0_3")
    trace2 = train(spec2.circuit(), spec2.train, spec2.noise, spec2.bipartitions)
    narrow = max(trace2.negativity[Bipartition((0, 1, 2, 3))].values())
    print(f"criterion 8: funnel-to-[5..9] peak {wide:.3f}, funnel-to-[0..3] peak {narrow:.3f}")
    assert wide >= 8.0
    assert narrow >= 4.5


def test_criterion_09_scale_up_smoke():
    spec = preset_spec("fig_11q_sc_plus1_sin")
    trace = train(spec.circuit(), spec.train, spec.noise, spec.bipartitions)
    curve = np.asarray(trace.mw)
    quarters = [float(q.mean()) for q in np.array_split(curve, 4)]
    print(f"criterion 9: mw quarter means {[round(q, 4) for q in quarters]}, "
          f"max mw {curve.max():.4f}")
    assert curve.max() > 0.9
    for earlier, later in zip(quarters, quarters[1:]):
        assert later >= earlier - 1e-9
    assert quarters[-1] > quarters[0]

    big = preset_spec("smoke_20q_sc_plus1_sin")
    circuit = big.circuit()
    params = np.random.default_rng(0).uniform(-np.pi, np.pi, circuit.num_params)
    start = time.perf_counter()
    state = forward(circuit, params)
    mw = meyer_wallach(state)
    elapsed = time.perf_counter() - start
    print(f"criterion 9: twenty-qubit forward+mw {elapsed:.2f}s, mw {mw:.4f}")
    assert elapsed < 60.0


def test_criterion_10_spec_file_determinism(tmp_path):
    spec_file = tmp_path / "exp.json"
    spec_file.write_text(
        json.dumps(
            {
                "kind": "montecarlo",
                "num_qubits": 3,
                "activation": "sin",
                "samples": 8,
                "train": {"max_epochs": 40, "gradient_mode": "finite_difference"},
                "plots": False,
            }
        )
    )
    contents = []
    for sub in ("a", "b"):
        out = tmp_path / sub
        spec = ExperimentSpec.from_json_file(str(spec_file), out_dir=str(out))
        written = run_experiment(spec)
        contents.append(
            tuple(open(written[k], "rb").read() for k in ("records", "histogram"))
        )
    assert contents[0] == contents[1]

    train_file = tmp_path / "train.json"
    train_file.write_text(
        json.dumps(
            {
                "kind": "train",
                "num_qubits": 3,
                "topology": "sc",
                "seeds": 2,
                "bipartitions": [[0, 1]],
                "noise": {"dephase_p": 0.02, "dephasing": True},
                "train": {"max_epochs": 30},
                "plots": False,
            }
        )
    )
    traces = []
    for sub in ("c", "d"):
        out = tmp_path / sub
        spec = ExperimentSpec.from_json_file(str(train_file), out_dir=str(out))
        written = run_experiment(spec)
        traces.append(open(written["trace"], "rb").read())
    assert traces[0] == traces[1]
    print("criterion 10: repeated runs byte-identical")
