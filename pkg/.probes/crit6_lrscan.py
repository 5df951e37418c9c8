"""Fine learning-rate scan on the seeds whose ceilings clear 1.3.

Trajectory peaks depend on lr through Adam's step scale; finals do not.
Peak found with patience 100 persists under a disarmed stopper because the
trajectory prefix is identical.
"""

import json
import sys

import numpy as np

from entforge.activations import Activation
from entforge.network import Circuit, staircase_plus_1
from entforge.noise import NoiseModel
from entforge.states import Bipartition
from entforge.training import FINITE_DIFFERENCE, TrainConfig, train

PART = Bipartition((0, 1, 2))
circuit = Circuit(staircase_plus_1(5), Activation.memristor(4.0, 0.5), depth=2)
noise = NoiseModel.damping_only(0.01)

seeds = [int(s) for s in sys.argv[1].split(",")] if len(sys.argv) > 1 else [12, 13, 3, 7, 9]
lrs = [float(s) for s in sys.argv[2].split(",")] if len(sys.argv) > 2 else [
    0.002, 0.003, 0.004, 0.006, 0.007, 0.008, 0.012, 0.015, 0.025, 0.03, 0.04, 0.05
]

best = (-1.0, None, None)
for seed in seeds:
    for lr in lrs:
        cfg = TrainConfig(seed=seed, learning_rate=lr,
                          gradient_mode=FINITE_DIFFERENCE)
        trace = train(circuit, cfg, noise, (PART,))
        curve = list(trace.negativity[PART].values())
        peak = float(np.max(curve))
        arg = int(np.argmax(curve))
        if peak > best[0]:
            best = (peak, seed, lr)
        print(json.dumps({"seed": seed, "lr": lr, "peak": round(peak, 6),
                          "argmax": arg, "final_loss": round(trace.final_loss, 6),
                          "epochs": len(trace.loss)}))
        sys.stdout.flush()
print(json.dumps({"best_peak": round(best[0], 6), "seed": best[1], "lr": best[2]}))
