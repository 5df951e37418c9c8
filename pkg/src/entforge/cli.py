"""Command line front end.

Four subcommands map onto the four experiment kinds:

    entforge train      --qubits 5 --topology sc+1 --activation sin --out runs/demo
    entforge montecarlo --samples 1000 --activation bm --seed 2025 --out runs/mc
    entforge sweep      --topology sc --seeds 20 --out runs/sweep
    entforge measure    --qubits 20 --topology sc+1 --out runs/big

Every run writes summary.json plus CSV tables into --out, and PNG figures
next to them unless --no-plots is given.  --preset loads a canned spec and
--spec loads a JSON file; explicit flags override either.
"""

from __future__ import annotations

import argparse
import dataclasses
import sys
from dataclasses import replace

from .activations import Activation
from .errors import ConfigurationError
from .experiments import (
    ExperimentSpec,
    default_mc_train_config,
    list_presets,
    preset_spec,
    run_experiment,
)
from .noise import NoiseModel
from .states import Bipartition
from .training import FINITE_DIFFERENCE, PARAMETER_SHIFT, TrainConfig

_ACTIVATION_FLAGS = ("linear", "sin", "bm")


def _add_common_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--qubits", type=int, help="number of qubits")
    parser.add_argument(
        "--topology",
        help="named layout (sc, sc+1, sc+1w, sc+2, u_5_9, u_0_3, w_0_3, rn), "
        "a file, or inline pairs like 0-1,1-2,4-0",
    )
    parser.add_argument("--activation", choices=_ACTIVATION_FLAGS)
    parser.add_argument("--t-osc", type=float, dest="t_osc", help="memristor drive period")
    parser.add_argument("--t-int", type=float, dest="t_int", help="memristor averaging window")
    parser.add_argument("--dephase-p", type=float, dest="dephase_p",
                        help="enable dephasing after each rotation with this probability")
    parser.add_argument("--damping-gamma", type=float, dest="damping_gamma",
                        help="enable amplitude damping after each block with this rate")
    parser.add_argument("--depth", type=int, choices=(1, 2))
    parser.add_argument("--params-per-block", type=int, choices=(1, 2), dest="params_per_block")
    parser.add_argument("--epochs", type=int, help="training epoch budget")
    parser.add_argument("--lr", type=float, help="Adam learning rate")
    parser.add_argument("--grad-mode", choices=(PARAMETER_SHIFT, FINITE_DIFFERENCE),
                        dest="grad_mode")
    parser.add_argument("--seed", type=int, help="base RNG seed")
    parser.add_argument("--seeds", type=int, help="number of restarts (or seeds per sweep cell)")
    parser.add_argument("--samples", type=int, help="Monte Carlo sample count")
    parser.add_argument("--bipartition", action="append", dest="bipartitions",
                        metavar="QUBITS", help="track this side-B set, e.g. 0,1,2 (repeatable)")
    parser.add_argument("--preset", help="start from a named preset (see --list-presets)")
    parser.add_argument("--spec", dest="spec_file", help="start from a JSON experiment file")
    parser.add_argument("--out", help="output directory")
    parser.add_argument("--no-plots", action="store_true", help="skip PNG rendering")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="entforge",
        description="Train and audit entangling circuits built from two-qubit "
        "memristor-style blocks.",
    )
    parser.add_argument("--list-presets", action="store_true",
                        help="print preset names and exit")
    sub = parser.add_subparsers(dest="kind")
    for kind, summary in (
        ("train", "optimize one circuit and log its loss / entanglement curves"),
        ("montecarlo", "train many random topologies and histogram the outcomes"),
        ("sweep", "scan memristor drive periods on a fixed topology"),
        ("measure", "evaluate entanglement of one circuit without training"),
    ):
        p = sub.add_parser(kind, help=summary)
        _add_common_flags(p)
    return parser


def _parse_bipartitions(raw: list[str]) -> tuple[Bipartition, ...]:
    return tuple(Bipartition.from_text(text) for text in raw)


def _base_spec(args: argparse.Namespace) -> ExperimentSpec:
    if args.preset is not None:
        return preset_spec(args.preset)
    if args.spec_file is not None:
        return ExperimentSpec.from_json_file(args.spec_file)
    kind = args.kind
    defaults = {
        "train": dict(topology="sc+1", seeds=1),
        "montecarlo": dict(train=default_mc_train_config(), samples=100),
        "sweep": dict(topology="sc", activation=Activation.memristor(), seeds=20,
                      train=default_mc_train_config()),
        "measure": dict(topology="sc+1"),
    }[kind]
    return ExperimentSpec(kind=kind, **defaults)


def _apply_overrides(spec: ExperimentSpec, args: argparse.Namespace) -> ExperimentSpec:
    updates: dict = {}
    if args.qubits is not None:
        updates["num_qubits"] = args.qubits
    if args.topology is not None:
        updates["topology"] = args.topology
    if args.activation is not None or args.t_osc is not None or args.t_int is not None:
        kind = args.activation
        if kind is None:
            kind = "bm" if spec.activation.kind == "memristor" else None
        if kind != "bm" and (args.t_osc is not None or args.t_int is not None):
            raise ConfigurationError("--t-osc/--t-int only apply to --activation bm")
        if kind == "bm":
            updates["activation"] = Activation.memristor(
                t_osc=args.t_osc if args.t_osc is not None else 1.0,
                t_int=args.t_int if args.t_int is not None else 1.0,
            )
        else:
            updates["activation"] = Activation.from_config(
                {"linear": "linear", "sin": "sin"}[kind]
            )
    if args.dephase_p is not None or args.damping_gamma is not None:
        base = spec.noise or NoiseModel()
        if args.dephase_p is not None:
            base = replace(base, dephase_p=args.dephase_p, dephasing_enabled=True)
        if args.damping_gamma is not None:
            base = replace(base, damping_gamma=args.damping_gamma, damping_enabled=True)
        updates["noise"] = base
    if args.depth is not None:
        updates["depth"] = args.depth
    if args.params_per_block is not None:
        updates["params_per_block"] = args.params_per_block
    train_updates: dict = {}
    if args.epochs is not None:
        train_updates["max_epochs"] = args.epochs
    if args.lr is not None:
        train_updates["learning_rate"] = args.lr
    if args.grad_mode is not None:
        train_updates["gradient_mode"] = args.grad_mode
    if args.seed is not None:
        train_updates["seed"] = args.seed
    if train_updates:
        updates["train"] = replace(spec.train, **train_updates)
    if args.seeds is not None:
        updates["seeds"] = args.seeds
    if args.samples is not None:
        updates["samples"] = args.samples
    if args.bipartitions is not None:
        updates["bipartitions"] = _parse_bipartitions(args.bipartitions)
    if args.out is not None:
        updates["out_dir"] = args.out
    if args.no_plots:
        updates["plots"] = False
    if updates:
        spec = dataclasses.replace(spec, **updates)
    return spec


def _headline(spec: ExperimentSpec, written: dict[str, str]) -> list[str]:
    import json

    with open(written["summary"]) as fh:
        summary = json.load(fh)
    lines = []
    if spec.kind == "train":
        block = summary.get("best", summary)
        lines.append(f"final loss {block['final_loss']:.6f}  final mw {block['final_mw']:.6f}")
        for label, value in sorted(block.get("negativity_final", {}).items()):
            lines.append(f"negativity {label}: {value:.6f}")
    elif spec.kind == "montecarlo":
        lines.append(
            f"{summary['samples']} samples  above-threshold fraction "
            f"{summary['fraction_above']:.3f}  flagged-below claim "
            f"{summary['below_all_have_flag']}"
        )
    elif spec.kind == "sweep":
        for row in summary["rows"]:
            lines.append(
                f"t_osc {row['t_osc']:g}: mean loss {row['mean_final_loss']:.6f} "
                f"variance {row['variance']:.3e}"
            )
    else:
        lines.append(f"mw {summary['mw']:.6f}")
        for label, value in sorted(summary.get("negativities", {}).items()):
            bound = summary["bounds"][label]
            lines.append(f"negativity {label}: {value:.6f} (bound {bound:g})")
    return lines


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.list_presets:
        for name in list_presets():
            print(name)
        return 0
    if args.kind is None:
        parser.print_help()
        return 2
    try:
        spec = _apply_overrides(_base_spec(args), args)
        if spec.kind != args.kind:
            raise ConfigurationError(
                f"preset/spec is of kind {spec.kind!r} but the {args.kind!r} "
                "subcommand was used"
            )
        written = run_experiment(spec)
    except ConfigurationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    for line in _headline(spec, written):
        print(line)
    for name in sorted(written):
        print(f"wrote {written[name]}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
