"""Grid over memristor windows: which (t_osc, t_int) leave a seed fully alive.

The response sign at theta depends only on frac((theta - t_int/2)/t_osc);
a parameter is trainable iff that fraction falls in (1/4, 3/4). The twenty
init draws are fixed by seed, so alive-counts per window are arithmetic.
Amplitude constraint: A = sin(pi x)/(2 pi x) with x = t_int/t_osc must keep
the angle floor below the per-block sweet spot 2pi/3, i.e. A >= 0.25.
"""

import json
import math

import numpy as np

DRAWS = np.stack([
    np.random.default_rng(seed).uniform(-np.pi, np.pi, 10) for seed in range(20)
])


def amplitude(x: float) -> float:
    return math.sin(math.pi * x) / (2 * math.pi * x)


rows = []
for t_osc in np.arange(1.0, 14.0, 0.02):
    for x in np.arange(0.04, 0.58, 0.01):
        t_int = x * t_osc
        a = amplitude(x)
        if a < 0.25:
            continue
        frac = np.mod((DRAWS - t_int / 2.0) / t_osc, 1.0)
        alive = (frac > 0.25) & (frac < 0.75)
        counts = alive.sum(axis=1)
        best = int(counts.max())
        if best >= 9:
            amin = 2 * math.asin(math.sqrt(1 - a))
            rows.append((10 - best, -a, round(float(t_osc), 3), round(float(t_int), 3),
                         [int(s) for s in np.where(counts == best)[0]], round(amin, 4)))

rows.sort()
for dead, nega, t_osc, t_int, seeds, amin in rows[:25]:
    print(json.dumps({"t_osc": t_osc, "t_int": t_int, "min_dead": dead,
                      "amp": round(-nega, 4), "amin": amin, "seeds": seeds}))
print(f"total candidate windows: {len(rows)}")
