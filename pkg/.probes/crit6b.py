"""Arm A retry: early stopping off, full 2000 epochs, promising seeds."""
import json, time
import entforge as ef
from entforge.states import Bipartition

noise = ef.NoiseModel.damping_only(0.01)
part = Bipartition((0, 1, 2))
circ = ef.Circuit(ef.staircase_plus_1(5), ef.Activation.memristor(4.0, 0.5), depth=2)

t0 = time.time()
for seed in (5, 10, 13, 2, 0, 6):
    cfg = ef.TrainConfig(
        max_epochs=2000,
        early_stop_patience=2000,
        seed=seed,
        gradient_mode=ef.FINITE_DIFFERENCE,
    )
    tr = ef.train(circ, cfg, noise, tracked_bipartitions=(part,))
    curve = tr.negativity[part]
    peak_epoch = max(curve, key=curve.get)
    print(
        json.dumps(
            {
                "seed": seed,
                "loss": tr.final_loss,
                "stop": tr.stop_epoch,
                "max_neg": curve[peak_epoch],
                "argmax": peak_epoch,
                "final_neg": tr.final_negativities()[part],
                "t": round(time.time() - t0),
            }
        ),
        flush=True,
    )
print("done", flush=True)
