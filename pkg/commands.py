#
# Copyright 2026 ABSA Group Limited
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
#

"""
This module contains the Command Runner class, which executes one resolved command, writes its outputs and
records the manifest that makes the run reproducible.
"""

import logging
import math
import os
from typing import Callable, Optional, Sequence

import pandas as pd

from analysis.calibration import (
    calibrate_beta_labeled,
    calibrate_beta_sim,
    load_labeled_scenarios,
    risk_traces_over_beta,
)
from analysis.correlation import correlate_delta_p, relative_motion_trace
from analysis.latency import bench_latency
from analysis.separation import kl_separation, separation_samples
from core_types.model.agent_state import AgentState
from core_types.model.planned_trajectory import PlannedTrajectory
from core_types.model.pose import Pose2
from core_types.participants import load_participants
from grid.model.grid_spec import GridSpec
from grid.model.occupancy_grid import OccupancyGrid
from predictor.analytic import AnalyticPredictor
from predictor.file_predictor import FileGridPredictor, OccupancyPredictor
from risk_engine.pora import pora_trajectory
from risk_engine.risk_export import write_risk_field
from run_inputs import RunInputs
from simulator.batch import group_by_penetration, run_batch, summarize_penetration
from simulator.episode import run_episode
from simulator.model.episode_report import EpisodeReport
from simulator.model.scenario_spec import ScenarioSpec
from simulator.scenarios import load_scenario, make_penetration_sweep, make_scenario, with_penetration
from simulator.trajectory_log import write_trajectory_log
from utils.constants import (
    DEFAULT_BETA_GRID,
    GENERATOR_NAME,
    GENERATOR_VERSION,
    CalibrationProgram,
    DeltaPSummary,
    Demand,
    KlDirection,
    Metric,
    PredictorMode,
    RoadTemplate,
    SampleMode,
    SummaryFormat,
)
from utils.exceptions import ConfigurationError
from utils.utils import ensure_directory, frame_records, write_json, write_table

logger = logging.getLogger(__name__)

MANIFEST_FILE = "manifest.json"
FIELDS_DIRECTORY = "fields"
PLAN_GRID_MARGIN = 40.0
DEFAULT_SWEEP_LEVELS = (0.0, 0.25, 0.5, 0.75, 1.0)
DEFAULT_SEPARATION_METRICS = (Metric.PORA, Metric.TTC1)
EPISODE_COLUMNS = [
    "seed",
    "family",
    "metric",
    "outcome",
    "conflicts",
    "collisions",
    "travel_time",
    "episode_return",
    "crash_time",
    "av_penetration",
]
SCORE_COLUMNS = ["t", "score", "unadjusted_score"]
SEPARATION_SUMMARY_COLUMNS = [
    "metric",
    "kl",
    "direction",
    "bins",
    "proceed_below",
    "brake_above",
    "safe_samples",
    "crash_samples",
]


def episodes_frame(reports: Sequence[EpisodeReport]) -> pd.DataFrame:
    """One row per episode with its outcome and counts, in report order."""
    rows = []
    for report in reports:
        report_json = report.to_dict()
        rows.append([report_json[column] for column in EPISODE_COLUMNS])
    return pd.DataFrame(rows, columns=EPISODE_COLUMNS)


def trace_frame(report: EpisodeReport) -> pd.DataFrame:
    """
    The per-tick traces of an episode side by side: driving metric, reward, minimum TTC-2 and shadow metrics.

    @param report: The episode report.
    @return: Table indexed by the tick time column `t`; a tick without TTC-2 threat holds a missing value.
    """
    traces = {report.metric.value: report.metric_trace, "reward": report.reward_trace, "ttc2": report.ttc2_trace}
    traces.update(sorted(report.shadow_traces.items()))
    frame = pd.DataFrame({name: pd.Series(dict(trace), dtype=float) for name, trace in traces.items()})
    frame.index.name = "t"
    return frame.sort_index().reset_index()


def plan_grid_spec(
    plan: PlannedTrajectory, agents: Sequence[AgentState], cell_size: float, margin: float = PLAN_GRID_MARGIN
) -> GridSpec:
    """
    A world-aligned grid covering the planned trajectory and the observed participants with a margin.

    @param plan: The planned AV trajectory.
    @param agents: The observed participants.
    @param cell_size: Cell edge in meters.
    @param margin: Clearance around the covered points in meters.
    @return: The grid geometry.
    """
    xs = [s.pose.x for s in plan.samples] + [a.pose.x for a in agents]
    ys = [s.pose.y for s in plan.samples] + [a.pose.y for a in agents]
    cols = int(math.ceil((max(xs) - min(xs) + 2 * margin) / cell_size))
    rows = int(math.ceil((max(ys) - min(ys) + 2 * margin) / cell_size))
    return GridSpec(Pose2(min(xs) - margin, min(ys) - margin, 0.0), cell_size, rows, cols)


class CommandRunner:  # pylint: disable=too-few-public-methods
    """
    A class executing one command. Every output lands in the output directory next to a manifest recording the
    resolved configuration, the seeds and the generator; the manifest carries no wall-clock timestamps so that
    equal runs produce byte-identical files.
    """

    def __init__(self, inputs: RunInputs):
        self.__inputs: RunInputs = inputs
        self.__output_path: str = inputs.output_path
        self.__outputs: list[str] = []
        self.__seeds: set[int] = set()

    def run(self) -> list[str]:
        """
        Execute the command and write the manifest.

        @return: The written file paths, manifest last.
        @raise PoraRiskEngineException: Whatever the executed operation raises.
        """
        handlers: dict[str, Callable[[], None]] = {
            "sim run": self._sim_run,
            "sim batch": self._sim_batch,
            "sim sweep": self._sim_sweep,
            "risk eval": self._risk_eval,
            "analyze correlate": self._analyze_correlate,
            "analyze separate": self._analyze_separate,
            "analyze calibrate": self._analyze_calibrate,
            "analyze bench": self._analyze_bench,
        }
        command = self.__inputs.command
        if command not in handlers:
            raise ConfigurationError(f"Unknown command `{command}`.")

        ensure_directory(self.__output_path)
        logger.info("Command `%s` - started.", command)
        handlers[command]()
        self._write_manifest()
        logger.info("Command `%s` - finished, %s files written.", command, len(self.__outputs))
        return list(self.__outputs)

    # outputs

    def _path(self, name: str) -> str:
        return os.path.join(self.__output_path, name)

    def _record(self, path: str) -> None:
        self.__outputs.append(path)

    def _table(self, name: str, frame: pd.DataFrame) -> None:
        self._record(write_table(self._path(name), frame, self.__inputs.file_format.value))

    def _json(self, name: str, payload: object) -> None:
        self._record(write_json(self._path(name + ".json"), payload))

    def _summary(self, name: str, frame: pd.DataFrame, payload: object) -> None:
        """The table in CSV form, or the payload in JSON form."""
        if self.__inputs.file_format is SummaryFormat.JSON:
            self._json(name, payload)
        else:
            self._table(name, frame)

    def _write_manifest(self) -> None:
        manifest = {
            "command": self.__inputs.command,
            "configuration": self.__inputs.to_dict(),
            "seeds": sorted(self.__seeds),
            "generator": {"name": GENERATOR_NAME, "version": GENERATOR_VERSION},
            "outputs": sorted(os.path.relpath(p, self.__output_path) for p in self.__outputs),
        }
        self._record(write_json(self._path(MANIFEST_FILE), manifest))

    # scenarios

    def _base_scenarios(self) -> list[ScenarioSpec]:
        """
        Scenarios from `--scenario` files or, without files, one generated scenario per family; `--penetration`
        overrides their penetration level.
        """
        inputs = self.__inputs
        if inputs.scenario_paths:
            bases = [load_scenario(path) for path in inputs.scenario_paths]
        else:
            demand = Demand(inputs.option("demand", Demand.FREE.value))
            template = RoadTemplate(inputs.option("template", RoadTemplate.CORRIDOR.value))
            bases = [make_scenario(family, inputs.seed, demand, template) for family in inputs.families]
        penetration = inputs.option("penetration")
        if penetration is not None:
            bases = [with_penetration(base, penetration) for base in bases]
        return bases

    def _batch_specs(self, levels: Optional[Sequence[float]] = None) -> list[ScenarioSpec]:
        """Seeded episodes of every base scenario, at the given penetration levels or the base level."""
        episodes = int(self.__inputs.option("episodes", 1))
        specs = []
        for base in self._base_scenarios():
            specs += make_penetration_sweep(base, levels if levels is not None else [base.av_penetration], episodes)
        self.__seeds.update(spec.seed for spec in specs)
        return specs

    def _shadow_metrics(self, metrics: Sequence[Metric]) -> tuple[Metric, ...]:
        return tuple(m for m in dict.fromkeys(metrics) if m is not self.__inputs.metric)

    def _run_batch(self, specs: Sequence[ScenarioSpec], shadow_metrics: Sequence[Metric] = ()):
        inputs = self.__inputs
        return run_batch(
            specs,
            inputs.metric,
            inputs.policy,
            inputs.risk_params,
            inputs.predictor_config,
            shadow_metrics=self._shadow_metrics(shadow_metrics),
            workers=inputs.workers,
        )

    # commands

    def _sim_run(self) -> None:
        inputs = self.__inputs
        spec = self._base_scenarios()[0]
        self.__seeds.add(spec.seed)

        report = run_episode(
            spec,
            inputs.metric,
            inputs.policy,
            inputs.risk_params,
            inputs.predictor_config,
            shadow_metrics=self._shadow_metrics([Metric(m) for m in inputs.option("shadow_metric", [])]),
            record_trajectory=True,
        )
        if inputs.file_format is SummaryFormat.JSON:
            self._json("episode", report.to_dict())
        else:
            self._table("episode", episodes_frame([report]))
            self._table("trace", trace_frame(report))
        self._record(write_trajectory_log(self._path("trajectory.csv"), report))

    def _sim_batch(self) -> None:
        shadow = [Metric(m) for m in self.__inputs.option("shadow_metric", [])]
        reports, summary = self._run_batch(self._batch_specs(), shadow)
        self._summary("episodes", episodes_frame(reports), [r.to_dict() for r in reports])
        self._summary("summary", pd.DataFrame([summary.to_dict()]), summary.to_dict())

    def _sim_sweep(self) -> None:
        levels = [float(level) for level in self.__inputs.option("levels", DEFAULT_SWEEP_LEVELS)]
        reports, _ = self._run_batch(self._batch_specs(levels))
        table = summarize_penetration(group_by_penetration(reports))
        self._summary("penetration", table, frame_records(table))

    def _plan_inputs(self) -> tuple[PlannedTrajectory, list[AgentState], list[OccupancyGrid]]:
        """The planned trajectory, the observed participants and the grids predicted for the plan."""
        inputs = self.__inputs
        plan = PlannedTrajectory.from_csv(inputs.option("plan"))
        participants_path = inputs.option("participants")
        agents = load_participants(participants_path) if participants_path else []

        predictor: OccupancyPredictor
        if inputs.predictor_mode is PredictorMode.FILE:
            predictor = FileGridPredictor(inputs.grids_path)
        else:
            predictor = AnalyticPredictor(inputs.predictor_config)
        spec = plan_grid_spec(plan, agents, inputs.risk_params.cell_size)
        grids = predictor.predict(agents, spec, float(plan.times[0]))
        logger.debug("%s grids predicted for a plan of %s samples.", len(grids), len(plan.samples))
        return plan, agents, grids

    def _risk_eval(self) -> None:
        inputs = self.__inputs
        plan, agents, grids = self._plan_inputs()
        scores = pora_trajectory(
            plan,
            grids,
            inputs.option("av_length"),
            inputs.option("av_width"),
            [a.box for a in agents],
            inputs.risk_params,
        )
        if not scores:
            logger.warning("No grid lies after the first plan sample; the score table is empty.")
        table = pd.DataFrame([(t, score, field.unadjusted_score) for t, score, field in scores], columns=SCORE_COLUMNS)
        self._table("scores", table)

        if inputs.option("export_fields", False):
            directory = self._path(FIELDS_DIRECTORY)
            for _, _, field in scores:
                for path in write_risk_field(directory, field, inputs.file_format):
                    self._record(path)

    def _analyze_correlate(self) -> None:
        inputs = self.__inputs
        seeds = list(range(inputs.seed, inputs.seed + int(inputs.option("traces"))))
        self.__seeds.update(seeds)
        summary = DeltaPSummary(inputs.option("summary", DeltaPSummary.MAX.value))
        traces = [
            relative_motion_trace(
                seed, inputs.option("steps"), inputs.option("dt"), summary, inputs.risk_params, inputs.predictor_config
            )
            for seed in seeds
        ]
        result = correlate_delta_p(traces, inputs.option("min_samples"))
        self._summary("correlation", result.to_frame(), result.to_dict())

    def _analyze_separate(self) -> None:
        inputs = self.__inputs
        metrics = [Metric(m) for m in inputs.option("separate_metric", [m.value for m in DEFAULT_SEPARATION_METRICS])]
        metrics = list(dict.fromkeys(metrics))
        reports, _ = self._run_batch(self._batch_specs(), metrics)
        self._summary("episodes", episodes_frame(reports), [r.to_dict() for r in reports])

        mode = SampleMode(inputs.option("mode", SampleMode.PEAK.value))
        direction = KlDirection(inputs.option("direction", KlDirection.CRASH_SAFE.value))
        rows, payload = [], {}
        for metric in metrics:
            safe, crash = separation_samples(reports, metric, mode)
            report = kl_separation(safe, crash, inputs.option("bins"), direction)
            logger.info("Separation of %s: KL %s over %s bins.", metric.value, report.kl, report.bins)
            rows.append({"metric": metric.value, **report.to_dict()})
            payload[metric.value] = {**report.to_dict(), "histogram": frame_records(report.to_frame())}
            if inputs.file_format is SummaryFormat.CSV:
                self._table(f"histogram_{metric.value}", report.to_frame())
        self._summary("separation", pd.DataFrame(rows, columns=SEPARATION_SUMMARY_COLUMNS), payload)

    def _analyze_calibrate(self) -> None:
        inputs = self.__inputs
        beta_grid = inputs.option("beta_grid", list(DEFAULT_BETA_GRID))
        if CalibrationProgram(inputs.option("program")) is CalibrationProgram.LABELED:
            scenarios = [s for path in inputs.option("labeled", []) for s in load_labeled_scenarios(path)]
            if inputs.option("plan"):
                plan, agents, grids = self._plan_inputs()
                scenarios.append(
                    risk_traces_over_beta(
                        os.path.splitext(os.path.basename(inputs.option("plan")))[0],
                        plan,
                        grids,
                        inputs.option("av_length"),
                        inputs.option("av_width"),
                        [a.box for a in agents],
                        inputs.risk_params,
                        inputs.option("collision_time"),
                        beta_grid,
                    )
                )
            result = calibrate_beta_labeled(scenarios)
        else:
            bases = self._base_scenarios()
            episodes = int(inputs.option("episodes", 1))
            self.__seeds.update(base.seed + i for base in bases for i in range(episodes))
            result = calibrate_beta_sim(
                bases,
                beta_grid,
                episodes,
                inputs.policy,
                inputs.risk_params,
                inputs.predictor_config,
                workers=inputs.workers,
            )
        self._json("calibration", result.to_dict())
        if inputs.file_format is SummaryFormat.CSV:
            self._table("calibration_table", result.table)

    def _analyze_bench(self) -> None:
        inputs = self.__inputs
        self.__seeds.add(inputs.seed)
        table = bench_latency(
            inputs.option("window", [(30, 40)]),
            inputs.option("repetitions"),
            inputs.option("agent_counts"),
            inputs.seed,
        )
        self._summary("bench", table, frame_records(table))
