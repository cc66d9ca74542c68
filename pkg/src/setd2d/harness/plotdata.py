"""Tabular series emitters for the shipped figure reproductions.

Sweep-driven figures read summary.json files from a results directory;
trace figures regenerate their single-pair curves from the trust engine.
Each series file starts with a header line documenting its columns.
"""
import os
from collections import defaultdict

from . import traces

FIGURE_IDS = ("fig3", "fig4", "fig5a", "fig5b", "fig6", "fig7", "fig8",
              "fig9", "fig10", "figCI")


class PlotDataError(ValueError):
    pass


def _write(out_dir: str, name: str, header: str, rows) -> str:
    os.makedirs(out_dir, exist_ok=True)
    path = os.path.join(out_dir, name)
    with open(path, "w") as fh:
        fh.write(header + "\n")
        for row in rows:
            fh.write(",".join(repr(x) if isinstance(x, float) else str(x)
                              for x in row) + "\n")
    return path


def _threshold_series(summaries, out_dir):
    by_frac = defaultdict(dict)
    for s in summaries:
        by_frac[s["malicious_fraction"]][s["threshold"]] = s
    if not by_frac or all(len(v) < 2 for v in by_frac.values()):
        raise PlotDataError(
            "fig3 needs a weights.threshold sweep (several thresholds per "
            "malicious fraction) under the results directory")
    paths = []
    for frac, by_thr in sorted(by_frac.items()):
        rows = [(thr, by_thr[thr]["mean_non_corrupted_kbits"])
                for thr in sorted(by_thr)]
        paths.append(_write(out_dir, f"fig3_frac{frac}.csv",
                            "threshold,mean_non_corrupted_kbits", rows))
    return paths


def _variant_series(summaries, out_dir, name):
    by_variant = defaultdict(dict)
    for s in summaries:
        by_variant[s["variant"]][s["malicious_fraction"]] = s
    if len(by_variant) < 2:
        raise PlotDataError(
            f"{name} needs a variant sweep (setd2d/sed2d/d2d) under the "
            "results directory")
    paths = []
    header = ("malicious_fraction,mean_non_corrupted_kbits,"
              "mean_wasted_pct,malicious_selection_pct")
    for variant, by_frac in sorted(by_variant.items()):
        rows = [(frac, s["mean_non_corrupted_kbits"], s["mean_wasted_pct"],
                 s["malicious_selection_pct"])
                for frac, s in sorted(by_frac.items())]
        paths.append(_write(out_dir, f"{name}_{variant}.csv", header, rows))
    return paths


def emit_plot_data(figure_id: str, out_dir: str,
                   summaries=None) -> list[str]:
    """Write the series files for one figure; returns the paths written."""
    if figure_id not in FIGURE_IDS:
        raise PlotDataError(
            f"unknown figure id {figure_id!r}; known: {FIGURE_IDS}")

    if figure_id == "fig3":
        return _threshold_series(summaries or [], out_dir)
    if figure_id in ("fig4", "fig10"):
        return _variant_series(summaries or [], out_dir, figure_id)
    if figure_id in ("fig5a", "fig5b"):
        interval = "short" if figure_id == "fig5a" else "long"
        scbs = traces.decay_comparison(interval)
        rows = [(name, scbs[name]) for name in sorted(scbs)]
        return [_write(out_dir, f"{figure_id}.csv",
                       "decay_preset,competence_belief", rows)]
    if figure_id == "fig6":
        paths = []
        for phase in ("final", "initial"):
            for rate in (0.3, 0.5, 0.8):
                flags, st = traces.consecutive_trace(rate, phase)
                rows = [(k + 1, flags[k], st[k]) for k in range(len(st))]
                paths.append(_write(
                    out_dir, f"fig6_{phase}_{int(rate * 100)}.csv",
                    "round,profile,st", rows))
        return paths
    if figure_id == "fig7":
        flags, st = traces.irregular_trace(rate=0.5, seed=7)
        rows = [(k + 1, flags[k], st[k]) for k in range(len(st))]
        return [_write(out_dir, "fig7.csv", "round,profile,st", rows)]
    if figure_id == "fig8":
        victim, other = traces.receiver_selective_trace()
        paths = [
            _write(out_dir, "fig8_victim.csv", "round,st",
                   [(k + 1, v) for k, v in enumerate(victim)]),
            _write(out_dir, "fig8_nonvictim.csv", "round,st",
                   [(k + 1, v) for k, v in enumerate(other)]),
        ]
        return paths
    if figure_id == "fig9":
        paths = []
        for beta2 in (0.25, 0.5, 1.0):
            flags, st = traces.periodic_trace(beta2)
            rows = [(k + 1, flags[k], st[k]) for k in range(len(st))]
            paths.append(_write(out_dir, f"fig9_beta2_{beta2}.csv",
                                "round,profile,st", rows))
        return paths
    if figure_id == "figCI":
        paths = []
        for mode in ("deviation", "sort"):
            rows = [(r["sh"], r["sib"], r["st"])
                    for r in traces.all_satisfactory_trace(integrity_mode=mode)]
            paths.append(_write(out_dir, f"figCI_{mode}.csv",
                                "sh,sib,st", rows))
        return paths
    raise PlotDataError(f"unhandled figure id {figure_id!r}")
