"""Exact per-seed ceilings for the low-noise SC+1(5) memristor arm.

A parameter whose init lands where R(theta) <= 0 is pinned at angle pi with
zero derivative, so that seed's entire trajectory lives on the submanifold
with those angles fixed. Maximizing negativity([0,1,2]) over the remaining
angles bounds what any training run from that seed can ever show.
"""

import json
import math

import numpy as np
from scipy.optimize import minimize

from entforge.activations import Activation, reflectivity_to_angle, response
from entforge.measures import negativity
from entforge.network import Circuit, forward, staircase_plus_1
from entforge.noise import NoiseModel
from entforge.states import Bipartition, StateVector, to_density

T_OSC, T_INT = 4.0, 0.5
A = (T_OSC / (2 * math.pi * T_INT)) * math.sin(math.pi * T_INT / T_OSC)
AMIN = reflectivity_to_angle(A)
PART = Bipartition((0, 1, 2))

circuit = Circuit(staircase_plus_1(5), Activation.linear(), depth=2)
noise = NoiseModel.damping_only(0.01)


def neg_of(angles):
    state = forward(circuit, np.asarray(angles), noise)
    if isinstance(state, StateVector):
        state = to_density(state)
    return negativity(state, PART)


def ceiling(dead, restarts=25):
    rng = np.random.default_rng(3)
    lo = np.full(circuit.num_params, AMIN)
    hi = np.full(circuit.num_params, math.pi)
    lo[list(dead)] = math.pi - 1e-12
    best = -1.0
    for _ in range(restarts):
        x0 = rng.uniform(lo, hi)
        res = minimize(lambda x: -neg_of(x), x0, method="L-BFGS-B",
                       bounds=list(zip(lo, hi)))
        best = max(best, -res.fun)
    return best


# Single-dead ceilings: which block being pinned hurts most / least.
for i in range(circuit.num_params):
    print(json.dumps({"dead": [i], "ceiling": round(ceiling([i]), 6)}))

# The 20 shipped seeds: exact dead sets and their ceilings.
for seed in range(20):
    draws = np.random.default_rng(seed).uniform(-np.pi, np.pi, circuit.num_params)
    dead = [i for i, th in enumerate(draws) if response(th, T_OSC, T_INT) <= 0.0]
    print(json.dumps({"seed": seed, "dead": dead,
                      "ceiling": round(ceiling(dead), 6)}))
