"""Direct maximization of negativity([0,1,2]) on SC+1(5) depth 2.

Bypasses training: optimizes the activated angles themselves (linear kind)
inside the memristor-reachable band [amin, pi], with and without damping.
Answers whether the criterion-6 target 1.3 is reachable at all.
"""

import json
import math
import sys

import numpy as np
from scipy.optimize import minimize

from entforge.activations import Activation, reflectivity_to_angle
from entforge.measures import negativity
from entforge.network import Circuit, forward, staircase_plus_1
from entforge.noise import NoiseModel
from entforge.states import Bipartition, StateVector, to_density

A = (4.0 / (2 * math.pi * 0.5)) * math.sin(math.pi * 0.5 / 4.0)
AMIN = reflectivity_to_angle(A)  # lowest activated angle the window reaches
PART = Bipartition((0, 1, 2))

circuit = Circuit(staircase_plus_1(5), Activation.linear(), depth=2)
noise = NoiseModel.damping_only(0.01)


def neg_of(angles, noisy):
    state = forward(circuit, np.asarray(angles), noise if noisy else None)
    if isinstance(state, StateVector):
        state = to_density(state)
    return negativity(state, PART)


def ceiling(lo, hi, noisy, restarts=40):
    rng = np.random.default_rng(7)
    best = -1.0
    best_x = None
    for _ in range(restarts):
        x0 = rng.uniform(lo, hi, size=circuit.num_params)
        res = minimize(
            lambda x: -neg_of(x, noisy),
            x0,
            method="L-BFGS-B",
            bounds=[(lo, hi)] * circuit.num_params,
        )
        if -res.fun > best:
            best = -res.fun
            best_x = res.x
    return best, best_x


for tag, lo, hi, noisy in (
    ("window+damping", AMIN, math.pi, True),
    ("window noiseless", AMIN, math.pi, False),
    ("free+damping", 0.0, 2 * math.pi, True),
):
    val, x = ceiling(lo, hi, noisy)
    print(json.dumps({"case": tag, "max_neg": round(val, 6),
                      "angles": [round(float(a), 4) for a in x]}))
    sys.stdout.flush()
print(json.dumps({"amin": AMIN, "amp": A}))
