"""Command-line interface.

Subcommands: exact, threshold, assess, curve, lifetime, simulate, sweep,
generate.  JSON goes to stdout (or --out) with enough metadata to reproduce
the run: tool version, rng seed where randomness is involved, the threshold
rule, and the derived cutoff M_c.  Curve and scan outputs are CSV.

Exit codes: 0 success, 1 computation or data errors, 2 usage errors.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from . import __version__
from .assessment import (
    AssessmentConfig,
    le_cam_bound,
    rel_c_heterogeneous,
    rel_c_poisson_approx,
)
from .degree import Empirical, distribution_from_spec
from .exact import (
    DEFAULT_ENUMERATION_CAP,
    f_coefficients,
    reliability_factoring,
    reliability_heterogeneous,
    reliability_homogeneous,
)
from .graph import degree_sequence, format_edge_list, parse_edge_list
from .lifetime import (
    ConstantProfile,
    ExponentialDecayProfile,
    lifetime_integral,
    lifetime_threshold_crossing,
    reliability_curve,
    time_grid,
)
from .percolation import bond_threshold, threshold_truncated, threshold_zeta
from .percolation import threshold_power_cutoff
from .simulation import (
    RNG_ALGORITHM,
    degrees_for_target_edges,
    estimate_reliability,
    generate_configuration_model,
    generate_inhomogeneous,
    inverse_percolation_sweep,
    sample_degrees,
    uniform_pair_probs,
)


class CLIError(ValueError):
    """Input or flag combination errors surfaced with exit code 1."""


# ---------------------------------------------------------------------------
# small input helpers


def _read_text(path):
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise CLIError(f"cannot read {path}: {exc}") from None


def _load_graph(path):
    return parse_edge_list(_read_text(path))


def _json_value(text, what):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise CLIError(f"invalid JSON for {what}: {exc}") from None


def _float_list(value, what):
    data = _json_value(value, what) if isinstance(value, str) else value
    if not isinstance(data, list) or not data:
        raise CLIError(f"{what} must be a nonempty JSON array")
    try:
        return [float(x) for x in data]
    except (TypeError, ValueError):
        raise CLIError(f"{what} must contain numbers only") from None


def _parse_range(text, what):
    parts = text.split(":")
    if len(parts) != 3:
        raise CLIError(f"{what} must look like start:end:step, got {text!r}")
    try:
        start, end, step = (float(p) for p in parts)
    except ValueError:
        raise CLIError(f"{what} must contain numbers, got {text!r}") from None
    return time_grid(start, end, step)


def _resolve_pc_rule(rule):
    """Normalize a threshold-rule string/object to {'rule': ..., [...]}."""
    if isinstance(rule, dict):
        if set(rule) == {"value"}:
            rule = f"value:{rule['value']}"
        elif set(rule) == {"rule"}:
            rule = str(rule["rule"])
        else:
            raise CLIError(f"bad pc rule object: {rule!r}")
    rule = str(rule)
    if rule in ("moment", "mean-inverse"):
        return {"rule": rule}
    if rule.startswith("value:"):
        try:
            value = float(rule.split(":", 1)[1])
        except ValueError:
            raise CLIError(f"bad pc rule value in {rule!r}") from None
        if not (0.0 <= value <= 1.0):
            raise CLIError(f"pc rule value must lie in [0, 1], got {value}")
        return {"rule": "value", "value": value}
    raise CLIError(
        f"unknown pc rule {rule!r}; expected moment, mean-inverse, or value:<x>"
    )


def _pc_from_rule(rule, graph):
    """Threshold probability for a normalized rule, given the graph (or None)."""
    if rule["rule"] == "value":
        return float(rule["value"])
    if graph is None:
        raise CLIError(
            f"pc rule {rule['rule']!r} needs graph structure; "
            "use --pc-rule value:<x> when only an edge count is given"
        )
    degrees = degree_sequence(graph)
    if rule["rule"] == "moment":
        p_c = bond_threshold(Empirical.from_degrees(degrees)).p_c
        if p_c > 1.0:
            raise CLIError(
                f"moment rule gives p_c = {p_c:.6g} > 1: this graph cannot "
                "sustain a giant component, so the threshold assessment is "
                "undefined; use a denser graph or --pc-rule value:<x>"
            )
        return p_c
    mean = sum(degrees) / len(degrees) if degrees else 0.0
    if mean <= 0.0:
        raise CLIError("mean degree is zero; mean-inverse rule undefined")
    return min(1.0, 1.0 / mean)


# ---------------------------------------------------------------------------
# scenario files (curve / lifetime run descriptions)


@dataclass(frozen=True)
class Scenario:
    """Validated run description for curve/lifetime commands."""

    graph: dict
    profile: dict
    pc_rule: dict
    grid: tuple
    output_format: str


def parse_scenario(spec):
    """Validate a scenario object (or JSON text) into a Scenario.

    Fields: ``graph`` ({"path": ...} | {"edges": N} | {"generator": {...}}),
    ``profile`` ({"shared_rate": r} | {"rates": [...]} | {"rates_from_graph":
    true} | {"constant": p} | {"constant_probs": [...]}), optional ``pc_rule``
    (default "moment"), optional ``grid`` ({"start", "end", "step"}, default
    0..15 step 0.1), optional ``format`` ("json" | "csv").
    """
    if isinstance(spec, (str, bytes)):
        spec = _json_value(spec, "scenario")
    if not isinstance(spec, dict):
        raise CLIError("scenario must be a JSON object")
    unknown = set(spec) - {"graph", "profile", "pc_rule", "grid", "format"}
    if unknown:
        raise CLIError(f"unknown scenario field(s): {sorted(unknown)}")

    graph = spec.get("graph")
    if not isinstance(graph, dict) or sum(
        k in graph for k in ("path", "edges", "generator")
    ) != 1:
        raise CLIError(
            "scenario.graph must be an object with exactly one of: "
            "path, edges, generator"
        )
    if "edges" in graph and (int(graph["edges"]) != graph["edges"] or graph["edges"] <= 0):
        raise CLIError("scenario.graph.edges must be a positive integer")
    if "generator" in graph:
        gen = graph["generator"]
        if not isinstance(gen, dict) or gen.get("model") != "configuration":
            raise CLIError("scenario.graph.generator.model must be 'configuration'")
        if "distribution" not in gen:
            raise CLIError("scenario.graph.generator needs a 'distribution' field")
        if sum(k in gen for k in ("nodes", "target_edges")) != 1:
            raise CLIError(
                "scenario.graph.generator needs exactly one of: nodes, target_edges"
            )

    profile = spec.get("profile")
    if not isinstance(profile, dict) or sum(
        k in profile
        for k in ("shared_rate", "rates", "rates_from_graph", "constant", "constant_probs")
    ) != 1:
        raise CLIError(
            "scenario.profile must be an object with exactly one of: shared_rate, "
            "rates, rates_from_graph, constant, constant_probs"
        )

    grid_spec = spec.get("grid", {})
    if not isinstance(grid_spec, dict):
        raise CLIError("scenario.grid must be an object")
    grid = time_grid(
        grid_spec.get("start", 0.0),
        grid_spec.get("end", 15.0),
        grid_spec.get("step", 0.1),
    )

    fmt = spec.get("format")
    if fmt is not None and fmt not in ("json", "csv"):
        raise CLIError(f"scenario.format must be 'json' or 'csv', got {fmt!r}")

    return Scenario(
        graph=graph,
        profile=profile,
        pc_rule=_resolve_pc_rule(spec.get("pc_rule", "moment")),
        grid=grid,
        output_format=fmt or "",
    )


def _materialize_scenario(scenario, base_dir):
    """Turn a Scenario into (graph_or_None, profile, config, metadata)."""
    meta = {}
    graph = None
    file_rates = None
    src = scenario.graph
    if "path" in src:
        path = Path(base_dir) / src["path"] if base_dir else Path(src["path"])
        parsed = _load_graph(path)
        graph = parsed.graph
        file_rates = parsed.rates
        meta["graph"] = {"path": str(src["path"]), "edges": graph.edge_count,
                        "nodes": graph.node_count}
    elif "edges" in src:
        meta["graph"] = {"edges": int(src["edges"])}
    else:
        gen = src["generator"]
        dist = distribution_from_spec(gen["distribution"])
        seed = int(gen.get("seed", 0))
        if "target_edges" in gen:
            degrees = degrees_for_target_edges(dist, int(gen["target_edges"]), seed)
        else:
            degrees = sample_degrees(dist, int(gen["nodes"]), seed)
            if sum(degrees) % 2 == 1:
                degrees.append(1)
        graph = generate_configuration_model(degrees, seed)
        meta["graph"] = {
            "generator": {"model": "configuration", "seed": seed,
                          "distribution": dist.spec()},
            "edges": graph.edge_count,
            "nodes": graph.node_count,
        }

    n_edges = graph.edge_count if graph is not None else int(src["edges"])

    prof_spec = scenario.profile
    if "shared_rate" in prof_spec:
        profile = ExponentialDecayProfile.shared(prof_spec["shared_rate"], n_edges)
    elif "rates" in prof_spec:
        rates = _float_list(prof_spec["rates"], "profile.rates")
        if len(rates) != n_edges:
            raise CLIError(
                f"profile.rates has {len(rates)} entries but the graph has "
                f"{n_edges} edges"
            )
        profile = ExponentialDecayProfile(tuple(rates))
    elif "rates_from_graph" in prof_spec:
        if not prof_spec["rates_from_graph"]:
            raise CLIError("profile.rates_from_graph must be true when present")
        if file_rates is None:
            raise CLIError(
                "profile.rates_from_graph needs an edge-list file with a rate column"
            )
        profile = ExponentialDecayProfile(file_rates)
    elif "constant" in prof_spec:
        profile = ConstantProfile((float(prof_spec["constant"]),) * n_edges)
    else:
        probs = _float_list(prof_spec["constant_probs"], "profile.constant_probs")
        if len(probs) != n_edges:
            raise CLIError(
                f"profile.constant_probs has {len(probs)} entries but the graph "
                f"has {n_edges} edges"
            )
        profile = ConstantProfile(tuple(probs))

    p_c = _pc_from_rule(scenario.pc_rule, graph)
    config = AssessmentConfig(N=n_edges, p_c=p_c)
    meta["pc_rule"] = scenario.pc_rule
    meta["p_c"] = p_c
    meta["M_c"] = config.M_c
    meta["N"] = n_edges
    return graph, profile, config, meta


def _scenario_from_args(args):
    """Build the Scenario for curve/lifetime from either --scenario or flags."""
    if args.scenario:
        spec = _json_value(_read_text(args.scenario), "scenario")
        scenario = parse_scenario(spec)
        base = Path(args.scenario).parent
        return scenario, base
    graph: dict = {}
    if args.graph:
        graph = {"path": args.graph}
    elif args.edges:
        graph = {"edges": args.edges}
    else:
        raise CLIError("need --scenario, --graph, or --edges")
    if args.rates:
        profile = {"rates": _float_list(args.rates, "--rates")}
    elif args.rate is not None:
        profile = {"shared_rate": args.rate}
    elif args.graph:
        profile = {"rates_from_graph": True}
    else:
        raise CLIError("need --rate or --rates to define the decay profile")
    spec = {
        "graph": graph,
        "profile": profile,
        "pc_rule": args.pc_rule,
        "grid": {"start": args.t_start, "end": args.t_end, "step": args.t_step},
    }
    return parse_scenario(spec), Path(".")


# ---------------------------------------------------------------------------
# output


def _json_text(payload):
    return json.dumps(payload, indent=2) + "\n"


def _base_payload(command):
    return {"tool": "relperc", "version": __version__, "command": command}


def _csv_text(header, rows):
    lines = [header]
    lines.extend(",".join(f"{x:.12g}" for x in row) for row in rows)
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# subcommand handlers


def _cmd_exact(args):
    parsed = _load_graph(args.graph)
    g = parsed.graph
    payload = _base_payload("exact")
    payload["node_count"] = g.node_count
    payload["edge_count"] = g.edge_count
    if (args.p is None) == (args.probs is None):
        raise CLIError("give exactly one of --p or --probs")
    if args.probs is not None:
        probs = _float_list(args.probs, "--probs")
        if len(probs) != g.edge_count:
            raise CLIError(
                f"--probs has {len(probs)} entries but the graph has "
                f"{g.edge_count} edges"
            )
        payload["probs"] = probs
    else:
        probs = [args.p] * g.edge_count
        payload["p"] = args.p
    payload["method"] = args.method
    if args.method == "factoring":
        payload["reliability"] = reliability_factoring(g, probs)
    else:
        if args.p is not None:
            coeffs = f_coefficients(g, cap=args.cap)
            payload["f_coefficients"] = list(coeffs.counts)
            payload["spanning_trees"] = coeffs.spanning_trees
            payload["reliability"] = reliability_homogeneous(coeffs, args.p)
        else:
            payload["reliability"] = reliability_heterogeneous(g, probs, cap=args.cap)
            coeffs = f_coefficients(g, cap=args.cap)
            payload["f_coefficients"] = list(coeffs.counts)
            payload["spanning_trees"] = coeffs.spanning_trees
    return _json_text(payload)


def _closed_form_threshold(dist_spec):
    kind = dist_spec.get("kind")
    if kind == "power_cutoff":
        return threshold_power_cutoff(dist_spec["gamma"], dist_spec["kappa"])
    if kind == "zeta":
        return threshold_zeta(dist_spec["gamma"])
    if kind == "truncated_power":
        return threshold_truncated(
            dist_spec["gamma"], dist_spec["k_min"], dist_spec["k_max"]
        )
    raise CLIError(
        f"no closed-form threshold for kind {kind!r}; use --formula moment"
    )


def _cmd_threshold(args):
    if args.scan_gamma:
        grid = _parse_range(args.scan_gamma, "--scan-gamma")
        rows = []
        for gamma in grid:
            rows.append((gamma, threshold_zeta(gamma).p_c))
        return _csv_text("gamma,p_c", rows)
    if (args.dist is None) == (args.graph is None):
        raise CLIError("give exactly one of --dist or --graph")
    payload = _base_payload("threshold")
    if args.graph is not None:
        g = _load_graph(args.graph).graph
        dist = Empirical.from_degrees(degree_sequence(g))
        payload["source"] = {"graph": args.graph, "nodes": g.node_count,
                             "edges": g.edge_count}
        if args.formula == "closed":
            raise CLIError("--formula closed needs --dist with a parametric kind")
        report = bond_threshold(dist)
    else:
        dist_spec = _json_value(args.dist, "--dist")
        payload["source"] = {"distribution": dist_spec}
        if args.formula == "closed":
            report = _closed_form_threshold(dist_spec)
        else:
            report = bond_threshold(distribution_from_spec(dist_spec))
    payload["formula"] = args.formula
    payload.update(report.to_dict())
    return _json_text(payload)


def _cmd_assess(args):
    payload = _base_payload("assess")
    graph = None
    if args.probs is not None:
        probs = np.asarray(_float_list(args.probs, "--probs"))
        if args.graph:
            graph = _load_graph(args.graph).graph
            if probs.size != graph.edge_count:
                raise CLIError(
                    f"--probs has {probs.size} entries but the graph has "
                    f"{graph.edge_count} edges"
                )
    elif args.graph:
        parsed = _load_graph(args.graph)
        graph = parsed.graph
        if args.p is not None:
            probs = np.full(graph.edge_count, args.p)
        elif parsed.rates is not None:
            if args.time is None:
                raise CLIError("--time is required when probabilities come from rates")
            probs = ExponentialDecayProfile(parsed.rates).probabilities(args.time)
            payload["time"] = args.time
        else:
            raise CLIError(
                "edge probabilities undefined: give --p or --probs, or a graph "
                "file with a rate column plus --time"
            )
    else:
        raise CLIError("need --graph and/or --probs")
    rule = _resolve_pc_rule(args.pc_rule)
    p_c = _pc_from_rule(rule, graph)
    config = AssessmentConfig(N=int(probs.size), p_c=p_c)
    approx, mu = rel_c_poisson_approx(probs, config.M_c)
    payload.update(
        {
            "N": config.N,
            "pc_rule": rule,
            "p_c": p_c,
            "M_c": config.M_c,
            "rel_c_exact": rel_c_heterogeneous(probs, config.M_c),
            "rel_c_poisson": approx,
            "mu": mu,
            "le_cam_bound": le_cam_bound(probs),
        }
    )
    return _json_text(payload)


def _cmd_curve(args):
    scenario, base = _scenario_from_args(args)
    _, profile, config, meta = _materialize_scenario(scenario, base)
    curve = reliability_curve(profile, config, scenario.grid)
    fmt = args.format or scenario.output_format or "csv"
    if fmt == "csv":
        return _csv_text("t,rel_c", list(zip(curve.times, curve.values)))
    payload = _base_payload("curve")
    payload.update(meta)
    payload["grid"] = {
        "start": scenario.grid[0],
        "end": scenario.grid[-1],
        "step": scenario.grid[1] - scenario.grid[0],
    }
    payload["times"] = list(curve.times)
    payload["rel_c"] = list(curve.values)
    return _json_text(payload)


def _cmd_lifetime(args):
    scenario, base = _scenario_from_args(args)
    _, profile, config, meta = _materialize_scenario(scenario, base)
    curve = reliability_curve(profile, config, scenario.grid)
    integral = lifetime_integral(curve)
    payload = _base_payload("lifetime")
    payload.update(meta)
    payload["grid"] = {
        "start": scenario.grid[0],
        "end": scenario.grid[-1],
        "step": scenario.grid[1] - scenario.grid[0],
    }
    try:
        crossing = lifetime_threshold_crossing(profile, config)
        payload["lifetime_crossing"] = crossing.time
        payload["edge_level_crossing"] = crossing.edge_level_time
    except Exception as exc:  # noqa: BLE001 - surfaced in the payload
        payload["lifetime_crossing"] = None
        payload["edge_level_crossing"] = None
        payload["crossing_error"] = str(exc)
    payload["lifetime_integral"] = integral.value
    payload["integral_tail_bound"] = integral.tail_bound
    payload["integral_decayed"] = integral.decayed
    t_mean = integral.value
    probs = profile.probabilities(t_mean)
    payload["rel_c_at_T"] = rel_c_heterogeneous(probs, config.M_c)
    return _json_text(payload)


def _cmd_simulate(args):
    parsed = _load_graph(args.graph)
    g = parsed.graph
    if (args.p is None) == (args.probs is None):
        raise CLIError("give exactly one of --p or --probs")
    if args.probs is not None:
        probs = _float_list(args.probs, "--probs")
        if len(probs) != g.edge_count:
            raise CLIError(
                f"--probs has {len(probs)} entries but the graph has "
                f"{g.edge_count} edges"
            )
    else:
        probs = [args.p] * g.edge_count
    result = estimate_reliability(g, probs, trials=args.trials, seed=args.seed)
    payload = _base_payload("simulate")
    payload.update(
        {
            "node_count": g.node_count,
            "edge_count": g.edge_count,
            "estimate": result.estimate,
            "standard_error": result.standard_error,
            "trials": result.trials,
            "seed": result.seed,
            "rng": RNG_ALGORITHM,
        }
    )
    return _json_text(payload)


def _cmd_sweep(args):
    g = _load_graph(args.graph).graph
    if args.fractions.strip().startswith("["):
        fractions = _float_list(args.fractions, "--fractions")
    else:
        fractions = list(_parse_range(args.fractions, "--fractions"))
    sweep = inverse_percolation_sweep(
        g,
        fractions,
        trials=args.trials,
        seed=args.seed,
        giant_threshold=args.giant_threshold,
    )
    payload = _base_payload("sweep")
    payload.update(
        {
            "node_count": g.node_count,
            "edge_count": g.edge_count,
            "fractions": list(sweep.fractions),
            "mean_largest_fractions": list(sweep.mean_largest_fractions),
            "g_c": sweep.g_c,
            "giant_threshold": args.giant_threshold,
            "trials": args.trials,
            "seed": args.seed,
            "rng": RNG_ALGORITHM,
        }
    )
    return _json_text(payload)


def _cmd_generate(args):
    if args.model == "configuration":
        if args.degrees:
            degrees = [int(d) for d in _float_list(args.degrees, "--degrees")]
        elif args.dist:
            dist = distribution_from_spec(_json_value(args.dist, "--dist"))
            if (args.nodes is None) == (args.target_edges is None):
                raise CLIError("give exactly one of --nodes or --target-edges")
            if args.target_edges is not None:
                degrees = degrees_for_target_edges(dist, args.target_edges, args.seed)
            else:
                degrees = sample_degrees(dist, args.nodes, args.seed)
                if sum(degrees) % 2 == 1:
                    degrees.append(1)
        else:
            raise CLIError("configuration model needs --degrees or --dist")
        g = generate_configuration_model(degrees, seed=args.seed)
        header = [
            f"model=configuration seed={args.seed} rng={RNG_ALGORITHM}",
            f"nodes={g.node_count} edges={g.edge_count}",
        ]
    else:
        if args.nodes is None or args.p is None:
            raise CLIError("inhomogeneous model needs --nodes and --p")
        g = generate_inhomogeneous(
            args.nodes, uniform_pair_probs(args.nodes, args.p), seed=args.seed
        )
        header = [
            f"model=inhomogeneous seed={args.seed} rng={RNG_ALGORITHM} p={args.p}",
            f"nodes={g.node_count} edges={g.edge_count}",
        ]
    rates = None
    if args.rate is not None:
        rates = [args.rate] * g.edge_count
    return format_edge_list(g, rates=rates, header=header)


# ---------------------------------------------------------------------------
# parser


def _add_grid_flags(sub):
    sub.add_argument("--scenario", help="JSON run description file")
    sub.add_argument("--graph", help="edge-list file (rate column used if present)")
    sub.add_argument("--edges", type=int, help="bare edge count (no graph structure)")
    sub.add_argument("--rate", type=float, help="shared exponential decay rate")
    sub.add_argument("--rates", help="JSON array of per-edge decay rates")
    sub.add_argument(
        "--pc-rule",
        default="moment",
        help="moment | mean-inverse | value:<x> (default moment)",
    )
    sub.add_argument("--t-start", type=float, default=0.0)
    sub.add_argument("--t-end", type=float, default=15.0)
    sub.add_argument("--t-step", type=float, default=0.1)


def build_parser():
    parser = argparse.ArgumentParser(
        prog="relperc",
        description="Network reliability: exact polynomials, percolation "
        "thresholds, threshold-based assessment, Monte Carlo.",
    )
    parser.add_argument("--version", action="version", version=f"relperc {__version__}")
    subs = parser.add_subparsers(dest="command", required=True)

    sub = subs.add_parser("exact", help="exact all-terminal reliability")
    sub.add_argument("--graph", required=True, help="edge-list file")
    sub.add_argument("--p", type=float, help="shared edge probability")
    sub.add_argument("--probs", help="JSON array of per-edge probabilities")
    sub.add_argument(
        "--method", choices=("enumeration", "factoring"), default="enumeration"
    )
    sub.add_argument("--cap", type=int, default=DEFAULT_ENUMERATION_CAP,
                     help="edge-count cap for subset enumeration")
    sub.set_defaults(handler=_cmd_exact)

    sub = subs.add_parser("threshold", help="bond percolation threshold")
    sub.add_argument("--dist", help="degree distribution JSON")
    sub.add_argument("--graph", help="edge-list file (empirical degrees)")
    sub.add_argument("--formula", choices=("moment", "closed"), default="moment")
    sub.add_argument(
        "--scan-gamma",
        metavar="A:B:STEP",
        help="emit CSV of the pure-power-law threshold over a gamma range",
    )
    sub.set_defaults(handler=_cmd_threshold)

    sub = subs.add_parser("assess", help="threshold-based reliability assessment")
    sub.add_argument("--graph", help="edge-list file")
    sub.add_argument("--p", type=float, help="shared edge probability")
    sub.add_argument("--probs", help="JSON array of per-edge probabilities")
    sub.add_argument("--time", type=float,
                     help="evaluate rate-column probabilities at this time")
    sub.add_argument("--pc-rule", default="moment",
                     help="moment | mean-inverse | value:<x> (default moment)")
    sub.set_defaults(handler=_cmd_assess)

    sub = subs.add_parser("curve", help="Rel_c(t) over a time grid")
    _add_grid_flags(sub)
    sub.add_argument("--format", choices=("csv", "json"), default=None)
    sub.set_defaults(handler=_cmd_curve)

    sub = subs.add_parser("lifetime", help="lifetime summary of a decay scenario")
    _add_grid_flags(sub)
    sub.set_defaults(handler=_cmd_lifetime)

    sub = subs.add_parser("simulate", help="Monte Carlo reliability estimate")
    sub.add_argument("--graph", required=True, help="edge-list file")
    sub.add_argument("--p", type=float, help="shared edge probability")
    sub.add_argument("--probs", help="JSON array of per-edge probabilities")
    sub.add_argument("--trials", type=int, default=10000)
    sub.add_argument("--seed", type=int, default=0)
    sub.set_defaults(handler=_cmd_simulate)

    sub = subs.add_parser("sweep", help="inverse percolation under edge removal")
    sub.add_argument("--graph", required=True, help="edge-list file")
    sub.add_argument("--fractions", default="0:0.95:0.05",
                     help="A:B:STEP range or JSON array of removal fractions")
    sub.add_argument("--trials", type=int, default=32)
    sub.add_argument("--seed", type=int, default=0)
    sub.add_argument("--giant-threshold", type=float, default=0.05,
                     help="largest-component fraction below which the giant "
                     "component counts as gone")
    sub.set_defaults(handler=_cmd_sweep)

    sub = subs.add_parser("generate", help="write a random graph as an edge list")
    sub.add_argument("--model", choices=("configuration", "inhomogeneous"),
                     required=True)
    sub.add_argument("--degrees", help="JSON array of degrees (configuration)")
    sub.add_argument("--dist", help="degree distribution JSON (configuration)")
    sub.add_argument("--nodes", type=int)
    sub.add_argument("--target-edges", type=int)
    sub.add_argument("--p", type=float, help="pair probability (inhomogeneous)")
    sub.add_argument("--rate", type=float,
                     help="attach a shared decay-rate column to the output")
    sub.add_argument("--seed", type=int, default=0)
    sub.set_defaults(handler=_cmd_generate)

    for sub_parser in subs.choices.values():
        sub_parser.add_argument("--out", help="write output to a file instead of stdout")
    return parser


def run(argv):
    """Run the CLI on an argument list; returns the process exit code."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        code = exc.code
        return int(code) if code is not None else 0
    try:
        text = args.handler(args)
    except (ValueError, RuntimeError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    if getattr(args, "out", None):
        try:
            Path(args.out).write_text(text)
        except OSError as exc:
            print(f"error: cannot write {args.out}: {exc}", file=sys.stderr)
            return 1
    else:
        sys.stdout.write(text)
    return 0


def main():
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
