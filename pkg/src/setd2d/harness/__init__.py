from .config import (AttackSettings, ConfigError, Scenario, default_out_dir,
                     load_scenario)
from .sim import MetricsRow, ScenarioResult, run_scenario
from .runner import override, run_and_write, sweep, collect_summaries
from .plotdata import FIGURE_IDS, PlotDataError, emit_plot_data
from . import traces

__all__ = [
    "AttackSettings", "ConfigError", "Scenario", "default_out_dir",
    "load_scenario", "MetricsRow", "ScenarioResult", "run_scenario",
    "override", "run_and_write", "sweep", "collect_summaries",
    "FIGURE_IDS", "PlotDataError", "emit_plot_data", "traces",
]
