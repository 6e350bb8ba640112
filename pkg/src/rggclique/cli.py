"""Command-line interface.

Subcommands: generate, plant, run-vd, run-cn, experiment, phase-diagram,
constants.  Exit status 0 on success, 1 on usage/parse errors, 2 when the
parameters fall outside the model domain.  Error lines carry a greppable
bracketed prefix on stderr.
"""

from __future__ import annotations

import argparse
import sys

import numpy as np

from . import graph_io
from .errors import GraphFormatError, ModelDomainError, UsageError
from .experiments import ExperimentConfig, phase_diagram, run_grid
from .geometry import blocking_region_fraction, lens_contact_fraction, unit_ball_volume
from .recovery import cn_recover, evaluate, vd_recover
from .rgg import PlantedInstance, plant_clique, sample_instance
from .thresholds import (
    ClassifierConfig,
    ModelParams,
    max_degree_threshold,
    min_degree_threshold,
)


class _Parser(argparse.ArgumentParser):
    # argparse exits with status 2 on bad flags; the contract reserves 2 for
    # model-domain errors, so re-route through UsageError (exit 1).
    def error(self, message):
        raise UsageError(message)


def _add_model_flags(parser, require_size=True):
    parser.add_argument("--n", type=float, required=require_size,
                        help="expected vertex count")
    parser.add_argument("--d", type=int, required=require_size, help="dimension")
    density = parser.add_mutually_exclusive_group(required=require_size)
    density.add_argument("--mu", type=float, help="mean degree")
    density.add_argument("--radius", type=float, help="connection radius")


def _params_from_args(args):
    if args.mu is None and args.radius is None:
        raise UsageError("one of --mu or --radius is required")
    if args.radius is not None:
        return ModelParams.from_radius(args.n, args.d, args.radius)
    return ModelParams.from_mu(args.n, args.d, args.mu)


def build_parser():
    parser = _Parser(prog="rggclique",
                     description="Planted cliques on hard random geometric graphs: "
                                 "generation, recovery, experiments, phase diagrams.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("generate", help="sample a graph and write it to a file")
    _add_model_flags(p)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--fixed-count", type=int, default=None,
                   help="use exactly this many vertices instead of a Poisson draw")
    p.add_argument("--output", "-o", required=True)

    p = sub.add_parser("plant", help="plant a clique into a stored graph")
    p.add_argument("input", help="graph file")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--output", "-o", required=True)

    for name in ("run-vd", "run-cn"):
        p = sub.add_parser(name, help=f"run {name[4:].upper()} recovery on a stored graph or instance")
        p.add_argument("input")
        p.add_argument("--k", type=int, default=None,
                       help="clique size (defaults to the stored clique's size)")

    p = sub.add_parser("experiment", help="Monte Carlo success-rate sweep, CSV output")
    p.add_argument("--config", default=None, help="key=value config file")
    p.add_argument("--n", type=float, default=None)
    p.add_argument("--d", type=int, default=None)
    p.add_argument("--mu", type=str, default=None, help="comma-separated mean degrees")
    p.add_argument("--k", type=str, default=None, help="comma-separated clique sizes")
    p.add_argument("--trials", type=int, default=None)
    p.add_argument("--seed", type=int, default=None, help="master seed")
    p.add_argument("--methods", type=str, default=None, help="comma-separated: VD,CN")
    p.add_argument("--fixed-count", type=int, default=None)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--output", "-o", required=True)

    p = sub.add_parser("phase-diagram", help="classifier verdicts on a log grid, CSV output")
    p.add_argument("--n", type=float, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--mu-min", type=float, required=True)
    p.add_argument("--mu-max", type=float, required=True)
    p.add_argument("--mu-points", type=int, default=20)
    p.add_argument("--k-min", type=float, required=True)
    p.add_argument("--k-max", type=float, required=True)
    p.add_argument("--k-points", type=int, default=20)
    p.add_argument("--epsilon", type=float, default=0.1)
    p.add_argument("--tau", type=float, default=0.1)
    p.add_argument("--c1", type=float, default=None,
                   help="override the blocking-region fraction")
    p.add_argument("--c2", type=float, default=None,
                   help="override the lens contact fraction")
    p.add_argument("--output", "-o", required=True)

    p = sub.add_parser("constants", help="print the model constants for given parameters")
    _add_model_flags(p)

    return parser


def cmd_generate(args):
    params = _params_from_args(args)
    graph = sample_instance(params, args.seed, fixed_count=args.fixed_count)
    graph_io.write_graph(graph, args.output)
    print(f"wrote {args.output}: N={graph.num_vertices} M={graph.num_edges}")
    return 0


def cmd_plant(args):
    graph = graph_io.read_graph(args.input)
    instance = plant_clique(graph, args.k, args.seed)
    graph_io.write_instance(instance, args.output)
    print(f"wrote {args.output}: k={instance.k} "
          f"planted_edges={len(instance.planted_edges)}")
    return 0


def cmd_run(args, method):
    loaded = graph_io.read(args.input)
    if isinstance(loaded, PlantedInstance):
        graph, truth = loaded.graph, loaded.clique
    else:
        graph, truth = loaded, None
    k = args.k
    if k is None:
        if truth is None:
            raise UsageError("--k is required when the input carries no clique")
        k = int(truth.size)
    recover = vd_recover if method == "VD" else cn_recover
    result = recover(graph, k)
    print("recovered: " + " ".join(str(int(v)) for v in result.output))
    if truth is not None:
        scored = evaluate(result, truth)
        print(f"exact_match: {'true' if scored.exact_match else 'false'}")
        print(f"overlap: {scored.overlap}")
    return 0


def cmd_experiment(args):
    mapping = {}
    if args.config:
        config = ExperimentConfig.from_file(args.config)
        mapping = {
            "n": config.n, "d": config.d, "mu": config.mu_values,
            "k": config.k_values, "trials": config.trials,
            "master_seed": config.master_seed, "methods": config.methods,
            "fixed_count": "" if config.fixed_count is None else config.fixed_count,
        }
    overrides = {
        "n": args.n, "d": args.d, "mu": args.mu, "k": args.k,
        "trials": args.trials, "master_seed": args.seed,
        "methods": args.methods, "fixed_count": args.fixed_count,
    }
    for key, value in overrides.items():
        if value is not None:
            mapping[key] = value
    config = ExperimentConfig.from_mapping(
        {key: value for key, value in mapping.items()})
    grid = run_grid(config, workers=args.workers)
    grid.write_csv(args.output)
    print(f"wrote {args.output}: {len(grid.cells)} cells x "
          f"{len(config.methods)} methods, {config.trials} trials each")
    return 0


def cmd_phase_diagram(args):
    mu_values = np.geomspace(args.mu_min, args.mu_max, args.mu_points)
    k_values = np.geomspace(args.k_min, args.k_max, args.k_points)
    classifier = ClassifierConfig(tau=args.tau, blocking_fraction=args.c1,
                                  contact_fraction=args.c2)
    table = phase_diagram(args.n, args.d, mu_values, k_values,
                          epsilon=args.epsilon, classifier=classifier)
    table.write_csv(args.output)
    print(f"wrote {args.output}: {len(table.cells)} cells")
    return 0


def cmd_constants(args):
    params = _params_from_args(args)
    print(f"phi_d = {unit_ball_volume(params.d)!r}")
    print(f"radius = {params.radius!r}")
    print(f"mu = {params.mu!r}")
    print(f"alpha = {params.alpha!r}")
    print(f"blocking_region_fraction = {blocking_region_fraction(params.d)!r}")
    print(f"lens_contact_fraction = {lens_contact_fraction(params.d)!r}")
    print(f"max_degree_scale_T = {max_degree_threshold(params)!r}")
    print(f"min_degree_scale_t = {min_degree_threshold(params)!r}")
    return 0


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if args.command == "generate":
            return cmd_generate(args)
        if args.command == "plant":
            return cmd_plant(args)
        if args.command == "run-vd":
            return cmd_run(args, "VD")
        if args.command == "run-cn":
            return cmd_run(args, "CN")
        if args.command == "experiment":
            return cmd_experiment(args)
        if args.command == "phase-diagram":
            return cmd_phase_diagram(args)
        if args.command == "constants":
            return cmd_constants(args)
        raise UsageError(f"unknown command {args.command}")
    except GraphFormatError as exc:
        print(f"[parse-error] line {exc.line_number}: {exc}", file=sys.stderr)
        return 1
    except UsageError as exc:
        print(f"[usage-error] {exc}", file=sys.stderr)
        return 1
    except ModelDomainError as exc:
        print(f"[model-error] {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"[usage-error] {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"[io-error] {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
