import json, time
import entforge as ef
from entforge.states import Bipartition

noise = ef.NoiseModel.damping_only(0.01)
p1, p2 = Bipartition((0,1,2)), Bipartition((2,3,4))
out = {}

def run(top, parts, t_osc, t_int, k=20):
    circ = ef.Circuit(top, ef.Activation.memristor(t_osc, t_int), depth=2)
    rows = []
    for s in range(k):
        cfg = ef.TrainConfig(max_epochs=2000, seed=s, gradient_mode=ef.FINITE_DIFFERENCE)
        tr = ef.train(circ, cfg, noise, tracked_bipartitions=parts)
        row = {"seed": s, "loss": tr.final_loss, "stop": tr.stop_epoch}
        for p in parts:
            curve = tr.negativity[p]
            row[f"max_{p.column_label()}"] = max(curve.values())
            row[f"final_{p.column_label()}"] = tr.final_negativities()[p]
        rows.append(row)
        print(json.dumps(row), flush=True)
    return rows

t0 = time.time()
print("== SC+1(5) BM t_osc=4 t_int=0.5 ==", flush=True)
out["sc1_4_05"] = run(ef.staircase_plus_1(5), (p1,), 4.0, 0.5)
print(f"[{time.time()-t0:.0f}s] == SC(5) BM t_osc=4 t_int=0.5, both parts ==", flush=True)
out["sc_4_05"] = run(ef.staircase(5), (p1, p2), 4.0, 0.5)
print(f"[{time.time()-t0:.0f}s] done", flush=True)
json.dump(out, open("/root/pkg/.probes/crit6.json", "w"), indent=1)
