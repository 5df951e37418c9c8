"""Arm A learning-rate scan: 20 seeds at lr=0.01, stopper on (runs freeze anyway)."""
import json, sys, time
import entforge as ef
from entforge.states import Bipartition

lr = float(sys.argv[1]) if len(sys.argv) > 1 else 0.01
noise = ef.NoiseModel.damping_only(0.01)
part = Bipartition((0, 1, 2))
circ = ef.Circuit(ef.staircase_plus_1(5), ef.Activation.memristor(4.0, 0.5), depth=2)

t0 = time.time()
best = 0.0
for seed in range(20):
    cfg = ef.TrainConfig(
        max_epochs=2000,
        learning_rate=lr,
        seed=seed,
        gradient_mode=ef.FINITE_DIFFERENCE,
    )
    tr = ef.train(circ, cfg, noise, tracked_bipartitions=(part,))
    curve = tr.negativity[part]
    peak_epoch = max(curve, key=curve.get)
    best = max(best, curve[peak_epoch])
    print(
        json.dumps(
            {
                "lr": lr,
                "seed": seed,
                "loss": round(tr.final_loss, 6),
                "stop": tr.stop_epoch,
                "max_neg": round(curve[peak_epoch], 6),
                "argmax": peak_epoch,
                "best_so_far": round(best, 6),
                "t": round(time.time() - t0),
            }
        ),
        flush=True,
    )
print(f"done lr={lr} best={best}", flush=True)
