"""Result persistence and parameter sweeps."""
import dataclasses
import json
import os
from typing import Sequence

from .config import ConfigError, Scenario
from .sim import ScenarioResult, run_scenario

# Parameters sweepable from the CLI, with their parsers.
SWEEPABLE = {
    "seed": int,
    "frames": int,
    "n_nodes": int,
    "file_kbits": float,
    "malicious_fraction": float,
    "variant": str,
    "weights.threshold": float,
    "weights.beta2": float,
    "weights.mu": float,
    "weights.nu": float,
}


def override(scenario: Scenario, param: str, value) -> Scenario:
    if param.startswith("weights."):
        name = param.split(".", 1)[1]
        weights = dataclasses.replace(scenario.weights, **{name: value})
        out = dataclasses.replace(scenario, weights=weights)
    else:
        out = dataclasses.replace(scenario, **{param: value})
    out.validate()
    return out


def write_result(result: ScenarioResult, out_dir: str,
                 with_transcript: bool = True) -> None:
    os.makedirs(out_dir, exist_ok=True)
    with open(os.path.join(out_dir, "metrics.csv"), "w") as fh:
        fh.write(result.metrics_csv())
    with open(os.path.join(out_dir, "summary.json"), "w") as fh:
        json.dump(result.summary(), fh, sort_keys=True, indent=1)
        fh.write("\n")
    with open(os.path.join(out_dir, "st_traces.jsonl"), "w") as fh:
        fh.write(result.st_trace_jsonl())
    if with_transcript:
        with open(os.path.join(out_dir, "transcript.jsonl"), "w") as fh:
            fh.write(result.transcript.to_jsonl())


def run_and_write(scenario: Scenario, out_dir: str) -> ScenarioResult:
    result = run_scenario(scenario)
    write_result(result, out_dir)
    return result


def sweep(scenario: Scenario, param: str, values: Sequence[str],
          out_dir: str) -> list[ScenarioResult]:
    if param not in SWEEPABLE:
        raise ConfigError(
            f"sweep parameter must be one of {sorted(SWEEPABLE)}, got {param!r}")
    parse = SWEEPABLE[param]
    results = []
    for raw in values:
        try:
            value = parse(raw)
        except ValueError as exc:
            raise ConfigError(f"{param}: bad value {raw!r}: {exc}") from exc
        sc = override(scenario, param, value)
        results.append(run_and_write(
            sc, os.path.join(out_dir, f"{param.replace('.', '_')}={raw}")))
    return results


def collect_summaries(results_dir: str) -> list[dict]:
    """All summary.json files below a results directory."""
    out = []
    for root, _, files in os.walk(results_dir):
        if "summary.json" in files:
            with open(os.path.join(root, "summary.json")) as fh:
                out.append(json.load(fh))
    return out
