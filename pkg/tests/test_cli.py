import json
import math

import numpy as np
import pytest

from relperc import (
    AssessmentConfig,
    ExponentialDecayProfile,
    lifetime_integral,
    reliability_curve,
    threshold_power_cutoff,
    time_grid,
)
from relperc.cli import CLIError, parse_scenario, run

K4_TEXT = "0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n"


@pytest.fixture
def k4_file(tmp_path):
    path = tmp_path / "k4.edges"
    path.write_text(K4_TEXT)
    return str(path)


@pytest.fixture
def k4_rates_file(tmp_path):
    lines = [f"{line} 0.25" for line in K4_TEXT.strip().splitlines()]
    path = tmp_path / "k4_rates.edges"
    path.write_text("\n".join(lines) + "\n")
    return str(path)


def run_cli(capsys, *args):
    rc = run(list(args))
    out, err = capsys.readouterr()
    return rc, out, err


# ---------------------------------------------------------------------------
# exit codes and top-level behavior


def test_version_flag(capsys):
    rc, out, err = run_cli(capsys, "--version")
    assert rc == 0
    assert "relperc" in out + err


def test_missing_subcommand_is_usage_error(capsys):
    rc, _, _ = run_cli(capsys)
    assert rc == 2


def test_unknown_flag_is_usage_error(capsys, k4_file):
    rc, _, _ = run_cli(capsys, "exact", "--graph", k4_file, "--bogus")
    assert rc == 2


def test_computation_error_exits_1(capsys, k4_file):
    rc, out, err = run_cli(capsys, "exact", "--graph", k4_file)  # no --p/--probs
    assert rc == 1
    assert err.startswith("error:")
    assert out == ""


def test_missing_file_exits_1(capsys, tmp_path):
    rc, _, err = run_cli(capsys, "exact", "--graph", str(tmp_path / "nope"), "--p", "0.5")
    assert rc == 1
    assert "error:" in err


def test_out_flag_writes_file(capsys, k4_file, tmp_path):
    target = tmp_path / "result.json"
    rc, out, _ = run_cli(
        capsys, "exact", "--graph", k4_file, "--p", "0.5", "--out", str(target)
    )
    assert rc == 0
    assert out == ""
    payload = json.loads(target.read_text())
    assert payload["reliability"] == pytest.approx(38 / 64, abs=1e-15)


# ---------------------------------------------------------------------------
# exact


def test_exact_enumeration_payload(capsys, k4_file):
    rc, out, _ = run_cli(capsys, "exact", "--graph", k4_file, "--p", "0.5")
    assert rc == 0
    payload = json.loads(out)
    assert payload["tool"] == "relperc"
    assert payload["command"] == "exact"
    assert payload["f_coefficients"] == [1, 6, 15, 16, 0, 0, 0]
    assert payload["spanning_trees"] == 16
    assert payload["reliability"] == pytest.approx(38 / 64, abs=1e-15)


def test_exact_factoring_matches_enumeration(capsys, k4_file):
    rc, out, _ = run_cli(
        capsys, "exact", "--graph", k4_file, "--p", "0.37", "--method", "factoring"
    )
    payload = json.loads(out)
    rc2, out2, _ = run_cli(capsys, "exact", "--graph", k4_file, "--p", "0.37")
    ref = json.loads(out2)
    assert rc == rc2 == 0
    assert payload["reliability"] == pytest.approx(ref["reliability"], abs=1e-12)


def test_exact_heterogeneous_probs(capsys, k4_file):
    probs = "[0.9, 0.8, 0.7, 0.6, 0.5, 0.4]"
    rc, out, _ = run_cli(capsys, "exact", "--graph", k4_file, "--probs", probs)
    assert rc == 0
    payload = json.loads(out)
    rc2, out2, _ = run_cli(
        capsys, "exact", "--graph", k4_file, "--probs", probs, "--method", "factoring"
    )
    assert payload["reliability"] == pytest.approx(
        json.loads(out2)["reliability"], abs=1e-12
    )


def test_exact_cap_violation_exits_1(capsys, k4_file):
    rc, _, err = run_cli(capsys, "exact", "--graph", k4_file, "--p", "0.5", "--cap", "3")
    assert rc == 1
    assert "cap" in err


# ---------------------------------------------------------------------------
# threshold


def test_threshold_from_graph_degrees(capsys, tmp_path):
    # degrees (4, 4, 3, 3, 2): first moment 16/5, second 54/5
    path = tmp_path / "g.edges"
    path.write_text(
        "0 1\n0 2\n0 3\n0 4\n1 2\n1 3\n1 4\n2 3\n"
    )
    rc, out, _ = run_cli(capsys, "threshold", "--graph", str(path))
    assert rc == 0
    payload = json.loads(out)
    assert payload["p_c"] == pytest.approx(16.0 / 38.0, abs=1e-12)
    assert payload["g_c"] == pytest.approx(1.0 - 16.0 / 38.0, abs=1e-12)
    assert payload["molloy_reed_satisfied"] is True


def test_threshold_closed_form(capsys):
    dist = json.dumps({"kind": "power_cutoff", "gamma": 2.5, "kappa": 10.0})
    rc, out, _ = run_cli(capsys, "threshold", "--dist", dist, "--formula", "closed")
    assert rc == 0
    payload = json.loads(out)
    assert payload["p_c"] == pytest.approx(threshold_power_cutoff(2.5, 10.0).p_c, abs=1e-12)


def test_threshold_moment_vs_closed_agree_for_cutoff(capsys):
    dist = json.dumps({"kind": "power_cutoff", "gamma": 2.5, "kappa": 10.0})
    _, out_m, _ = run_cli(capsys, "threshold", "--dist", dist)
    _, out_c, _ = run_cli(capsys, "threshold", "--dist", dist, "--formula", "closed")
    assert json.loads(out_m)["p_c"] == pytest.approx(
        json.loads(out_c)["p_c"], abs=1e-9
    )


def test_threshold_scan_gamma_csv(capsys):
    rc, out, _ = run_cli(capsys, "threshold", "--scan-gamma", "3.1:3.9:0.1")
    assert rc == 0
    lines = out.strip().splitlines()
    assert lines[0] == "gamma,p_c"
    rows = [tuple(map(float, line.split(","))) for line in lines[1:]]
    assert len(rows) == 9
    pcs = [pc for _, pc in rows]
    assert all(b > a for a, b in zip(pcs, pcs[1:]))  # increasing in gamma


def test_threshold_requires_one_source(capsys, k4_file):
    dist = json.dumps({"kind": "zeta", "gamma": 3.5})
    rc, _, err = run_cli(capsys, "threshold", "--dist", dist, "--graph", k4_file)
    assert rc == 1
    assert "error:" in err


# ---------------------------------------------------------------------------
# assess


ASSESS_KEYS = {
    "tool",
    "version",
    "command",
    "N",
    "pc_rule",
    "p_c",
    "M_c",
    "rel_c_exact",
    "rel_c_poisson",
    "mu",
    "le_cam_bound",
}


def test_assess_homogeneous_payload(capsys, k4_file):
    rc, out, _ = run_cli(capsys, "assess", "--graph", k4_file, "--p", "0.5")
    assert rc == 0
    payload = json.loads(out)
    assert set(payload) == ASSESS_KEYS
    # K4 is 3-regular: p_c = 3/(9-3) = 0.5, M_c = floor(6 * 0.5) = 3
    assert payload["p_c"] == pytest.approx(0.5, abs=1e-12)
    assert payload["M_c"] == 3
    assert payload["N"] == 6
    # P(Binomial(6, 0.5) > 3) = (15 + 6 + 1) / 64
    assert payload["rel_c_exact"] == pytest.approx(22 / 64, abs=1e-12)
    assert payload["mu"] == pytest.approx(3.0, abs=1e-12)
    assert payload["le_cam_bound"] == pytest.approx(2 * 6 * 0.25, abs=1e-12)


def test_assess_with_rates_and_time(capsys, k4_rates_file):
    rc, out, _ = run_cli(
        capsys, "assess", "--graph", k4_rates_file, "--time", "2.0"
    )
    assert rc == 0
    payload = json.loads(out)
    assert set(payload) == ASSESS_KEYS | {"time"}
    p = math.exp(-0.5)
    probs = np.full(6, p)
    from relperc import rel_c_heterogeneous

    assert payload["rel_c_exact"] == pytest.approx(
        rel_c_heterogeneous(probs, 3), abs=1e-12
    )


def test_assess_pc_rule_value(capsys, k4_file):
    rc, out, _ = run_cli(
        capsys, "assess", "--graph", k4_file, "--p", "0.9", "--pc-rule", "value:0.3"
    )
    payload = json.loads(out)
    assert payload["pc_rule"] == {"rule": "value", "value": 0.3}
    assert payload["M_c"] == 1  # floor(6 * 0.3)


def test_assess_probs_without_graph_needs_value_rule(capsys):
    rc, _, err = run_cli(capsys, "assess", "--probs", "[0.5, 0.5, 0.5]")
    assert rc == 1
    assert "value" in err
    rc, out, _ = run_cli(
        capsys, "assess", "--probs", "[0.5, 0.5, 0.5]", "--pc-rule", "value:0.4"
    )
    assert rc == 0
    assert json.loads(out)["N"] == 3


# ---------------------------------------------------------------------------
# curve and lifetime


def test_curve_csv_reintegrates_to_lifetime_integral(capsys, k4_file):
    rc, out, _ = run_cli(
        capsys,
        "curve",
        "--graph",
        k4_file,
        "--rate",
        "0.25",
        "--t-end",
        "15",
        "--t-step",
        "0.1",
    )
    assert rc == 0
    lines = out.strip().splitlines()
    assert lines[0] == "t,rel_c"
    ts, vals = zip(*[tuple(map(float, line.split(","))) for line in lines[1:]])
    profile = ExponentialDecayProfile.shared(0.25, 6)
    config = AssessmentConfig(N=6, p_c=0.5)
    curve = reliability_curve(profile, config, time_grid(0.0, 15.0, 0.1))
    expected = lifetime_integral(curve)
    assert abs(np.trapezoid(vals, ts) - expected.value) < 1e-9


def test_curve_json_format(capsys, k4_file):
    rc, out, _ = run_cli(
        capsys, "curve", "--graph", k4_file, "--rate", "0.5", "--format", "json"
    )
    assert rc == 0
    payload = json.loads(out)
    assert payload["command"] == "curve"
    assert payload["M_c"] == 3
    assert payload["pc_rule"] == {"rule": "moment"}
    assert len(payload["times"]) == len(payload["rel_c"])
    assert payload["rel_c"][0] == 1.0


def test_lifetime_payload(capsys, k4_file):
    rc, out, _ = run_cli(capsys, "lifetime", "--graph", k4_file, "--rate", "0.25")
    assert rc == 0
    payload = json.loads(out)
    for key in (
        "lifetime_crossing",
        "edge_level_crossing",
        "lifetime_integral",
        "integral_tail_bound",
        "integral_decayed",
        "rel_c_at_T",
    ):
        assert key in payload
    # shared-rate edge-level crossing: ln(1/p_c) / r with p_c = 0.5, r = 0.25
    assert payload["edge_level_crossing"] == pytest.approx(math.log(2.0) / 0.25, abs=1e-9)
    assert payload["lifetime_crossing"] > 0
    assert payload["M_c"] == 3


def test_lifetime_without_crossing_reports_error_field(capsys, tmp_path):
    scenario = {
        "graph": {"edges": 4},
        "profile": {"constant": 0.9},
        "pc_rule": "value:0.3",
        "grid": {"start": 0.0, "end": 2.0, "step": 0.5},
    }
    path = tmp_path / "s.json"
    path.write_text(json.dumps(scenario))
    rc, out, _ = run_cli(capsys, "lifetime", "--scenario", str(path))
    assert rc == 0
    payload = json.loads(out)
    assert payload["lifetime_crossing"] is None
    assert "crossing_error" in payload
    assert payload["integral_decayed"] is False


def test_scenario_with_graph_path_and_file_rates(capsys, tmp_path, k4_rates_file):
    scenario = {
        "graph": {"path": k4_rates_file},
        "profile": {"rates_from_graph": True},
        "grid": {"start": 0.0, "end": 10.0, "step": 0.1},
        "format": "json",
    }
    path = tmp_path / "scenario.json"
    path.write_text(json.dumps(scenario))
    rc, out, _ = run_cli(capsys, "curve", "--scenario", str(path))
    assert rc == 0
    payload = json.loads(out)
    assert payload["graph"]["edges"] == 6
    assert payload["p_c"] == pytest.approx(0.5)


def test_scenario_generator_end_to_end(capsys, tmp_path):
    scenario = {
        "graph": {
            "generator": {
                "model": "configuration",
                "distribution": {"kind": "truncated_power", "gamma": 2.5,
                                 "k_min": 1, "k_max": 11},
                "target_edges": 40,
                "seed": 7,
            }
        },
        "profile": {"shared_rate": 0.25},
        "pc_rule": "value:0.43",
        "grid": {"start": 0.0, "end": 12.0, "step": 0.25},
    }
    path = tmp_path / "scenario.json"
    path.write_text(json.dumps(scenario))
    rc, out, _ = run_cli(capsys, "lifetime", "--scenario", str(path))
    assert rc == 0
    payload = json.loads(out)
    assert payload["graph"]["generator"]["seed"] == 7
    assert payload["lifetime_integral"] > 0


def test_scenario_generator_sparse_graph_moment_rule_fails_cleanly(capsys, tmp_path):
    # a 40-edge graph from this heavy-tailed distribution is usually too
    # sparse for its own empirical moments to give a threshold below 1
    scenario = {
        "graph": {
            "generator": {
                "model": "configuration",
                "distribution": {"kind": "truncated_power", "gamma": 2.5,
                                 "k_min": 1, "k_max": 11},
                "target_edges": 40,
                "seed": 7,
            }
        },
        "profile": {"shared_rate": 0.25},
    }
    path = tmp_path / "scenario.json"
    path.write_text(json.dumps(scenario))
    rc, _, err = run_cli(capsys, "lifetime", "--scenario", str(path))
    assert rc == 1
    assert "giant component" in err


def test_parse_scenario_rejects_bad_input():
    with pytest.raises(CLIError, match="unknown scenario field"):
        parse_scenario({"graph": {"edges": 4}, "profile": {"constant": 1}, "x": 1})
    with pytest.raises(CLIError, match="exactly one of"):
        parse_scenario({"graph": {}, "profile": {"constant": 1}})
    with pytest.raises(CLIError, match="exactly one of"):
        parse_scenario(
            {"graph": {"edges": 4}, "profile": {"constant": 1, "shared_rate": 2}}
        )
    with pytest.raises(CLIError, match="pc rule"):
        parse_scenario(
            {"graph": {"edges": 4}, "profile": {"constant": 1}, "pc_rule": "median"}
        )


def test_rates_length_mismatch_exits_1(capsys, k4_file):
    rc, _, err = run_cli(
        capsys, "curve", "--graph", k4_file, "--rates", "[0.1, 0.2]"
    )
    assert rc == 1
    assert "6 edges" in err


# ---------------------------------------------------------------------------
# simulate, sweep, generate


def test_simulate_deterministic_and_close(capsys, k4_file):
    rc, out, _ = run_cli(
        capsys, "simulate", "--graph", k4_file, "--p", "0.5",
        "--trials", "20000", "--seed", "9",
    )
    assert rc == 0
    payload = json.loads(out)
    assert payload["trials"] == 20000
    assert payload["seed"] == 9
    assert payload["rng"] == "philox4x64"
    assert abs(payload["estimate"] - 38 / 64) <= 4 * payload["standard_error"]
    _, out2, _ = run_cli(
        capsys, "simulate", "--graph", k4_file, "--p", "0.5",
        "--trials", "20000", "--seed", "9",
    )
    assert json.loads(out2)["estimate"] == payload["estimate"]


def test_sweep_payload(capsys, k4_file):
    rc, out, _ = run_cli(
        capsys, "sweep", "--graph", k4_file, "--fractions", "[0.0, 0.5, 1.0]",
        "--trials", "10",
    )
    assert rc == 0
    payload = json.loads(out)
    assert payload["fractions"] == [0.0, 0.5, 1.0]
    assert payload["mean_largest_fractions"][0] == 1.0
    assert "g_c" in payload


def test_generate_configuration_round_trip(capsys):
    rc, out, _ = run_cli(
        capsys, "generate", "--model", "configuration",
        "--degrees", "[3, 3, 2, 2, 2]", "--seed", "4",
    )
    assert rc == 0
    from relperc import parse_edge_list

    parsed = parse_edge_list(out)
    assert parsed.graph.node_count == 5
    assert parsed.rates is None
    assert out.startswith("# model=configuration")


def test_generate_with_rate_column(capsys):
    rc, out, _ = run_cli(
        capsys, "generate", "--model", "configuration",
        "--degrees", "[2, 2, 2]", "--rate", "0.25",
    )
    assert rc == 0
    from relperc import parse_edge_list

    parsed = parse_edge_list(out)
    assert parsed.rates is not None
    assert all(r == 0.25 for r in parsed.rates)


def test_generate_inhomogeneous(capsys):
    rc, out, _ = run_cli(
        capsys, "generate", "--model", "inhomogeneous",
        "--nodes", "30", "--p", "0.2", "--seed", "1",
    )
    assert rc == 0
    from relperc import parse_edge_list

    parsed = parse_edge_list(out)
    assert parsed.graph.node_count == 30


def test_generate_from_distribution_with_target_edges(capsys):
    dist = json.dumps({"kind": "poisson", "lambda": 4.0})
    rc, out, _ = run_cli(
        capsys, "generate", "--model", "configuration", "--dist", dist,
        "--target-edges", "100", "--seed", "2",
    )
    assert rc == 0
    from relperc import parse_edge_list

    parsed = parse_edge_list(out)
    assert abs(parsed.graph.edge_count - 100) < 20
