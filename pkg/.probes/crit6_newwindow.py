"""Validate the candidate window (3.8, 0.15): seed-12 dead set, ceiling, and
an lr sweep of the actual training trajectory."""

import json
import math
import sys

import numpy as np
from scipy.optimize import minimize

from entforge.activations import Activation, reflectivity_to_angle, response
from entforge.measures import negativity
from entforge.network import Circuit, forward, staircase_plus_1
from entforge.noise import NoiseModel
from entforge.states import Bipartition, StateVector, to_density
from entforge.training import FINITE_DIFFERENCE, TrainConfig, train

T_OSC, T_INT = 3.8, 0.15
A = (T_OSC / (2 * math.pi * T_INT)) * math.sin(math.pi * T_INT / T_OSC)
AMIN = reflectivity_to_angle(A)
PART = Bipartition((0, 1, 2))
noise = NoiseModel.damping_only(0.01)

lin = Circuit(staircase_plus_1(5), Activation.linear(), depth=2)
for seed in range(20):
    draws = np.random.default_rng(seed).uniform(-np.pi, np.pi, 10)
    dead = [i for i, th in enumerate(draws) if response(th, T_OSC, T_INT) <= 0.0]
    if len(dead) <= 2:
        print(json.dumps({"seed": seed, "dead": dead}))
print(json.dumps({"amp": round(A, 5), "amin": round(AMIN, 5)}))
sys.stdout.flush()


def neg_of(angles):
    state = forward(lin, np.asarray(angles), noise)
    if isinstance(state, StateVector):
        state = to_density(state)
    return negativity(state, PART)


rng = np.random.default_rng(11)
best = -1.0
for _ in range(30):
    x0 = rng.uniform(AMIN, math.pi, 10)
    res = minimize(lambda x: -neg_of(x), x0, method="L-BFGS-B",
                   bounds=[(AMIN, math.pi)] * 10)
    best = max(best, -res.fun)
print(json.dumps({"all_alive_ceiling": round(best, 6)}))
sys.stdout.flush()

circuit = Circuit(staircase_plus_1(5), Activation.memristor(T_OSC, T_INT), depth=2)
for lr in (0.003, 0.005, 0.008, 0.012, 0.02, 0.03, 0.05):
    cfg = TrainConfig(seed=12, learning_rate=lr, gradient_mode=FINITE_DIFFERENCE)
    trace = train(circuit, cfg, noise, (PART,))
    curve = list(trace.negativity[PART].values())
    print(json.dumps({"seed": 12, "lr": lr, "peak": round(float(np.max(curve)), 6),
                      "argmax": int(np.argmax(curve)),
                      "final_loss": round(trace.final_loss, 6),
                      "epochs": len(trace.loss)}))
    sys.stdout.flush()
