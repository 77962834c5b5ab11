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
This module contains the main script of the PORA risk engine. It parses the command line, sets up logging,
validates the run inputs, executes the command and maps the outcome to the process exit code.
"""

import argparse
import logging
import sys
from typing import Optional, Sequence

from living_doc_utilities.logging_config import setup_logging

from commands import CommandRunner
from run_inputs import RunInputs
from utils.constants import (
    BENCH_MIN_REPETITIONS,
    DEFAULT_BETA,
    DEFAULT_BRAKE_ABOVE,
    DEFAULT_CELL_SIZE,
    DEFAULT_DECEL_RATE,
    DEFAULT_HISTOGRAM_BINS,
    DEFAULT_HORIZON_STEPS,
    DEFAULT_PROCEED_BELOW,
    DEFAULT_REACTION_TIME,
    DEFAULT_STEP_DT,
    GENERATOR_NAME,
    MIN_CORRELATION_SAMPLES,
    CalibrationProgram,
    DeltaPSummary,
    Demand,
    Falloff,
    KlDirection,
    Metric,
    MotionModel,
    PredictorMode,
    RoadTemplate,
    SampleMode,
    ScenarioFamily,
    SummaryFormat,
)
from utils.exceptions import ConfigurationError, GridFormatError, PoraRiskEngineException, ScenarioLoadException

EXIT_SUCCESS = 0
EXIT_RUNTIME_ERROR = 1
EXIT_CONFIG_ERROR = 2


def window_size(text: str) -> tuple[int, int]:
    """
    Parse a `ROWSxCOLS` window size.

    @param text: The flag value, for example `30x40`.
    @return: (rows, cols).
    @raise argparse.ArgumentTypeError: When the value is not two positive integers joined by `x`.
    """
    try:
        rows, cols = (int(part) for part in text.lower().split("x"))
    except ValueError as e:
        raise argparse.ArgumentTypeError(f"expected ROWSxCOLS, got `{text}`") from e
    if rows < 1 or cols < 1:
        raise argparse.ArgumentTypeError(f"window sides must be >= 1, got `{text}`")
    return rows, cols


def _values(enum_type) -> list[str]:
    return [member.value for member in enum_type]


def _common_arguments() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    output = common.add_argument_group("output")
    output.add_argument("--out", help="output directory (default: the OUTPUT_DIR input or ./output)")
    output.add_argument("--format", choices=_values(SummaryFormat), default=SummaryFormat.CSV.value)
    output.add_argument("--workers", type=int, help="worker processes (default: the WORKERS input or all CPUs)")
    output.add_argument("--verbose", action="store_true", help="debug logging")
    output.add_argument("--seed", type=int, default=0, help="base seed")
    output.add_argument("--metric", choices=_values(Metric), default=Metric.PORA.value)

    risk = common.add_argument_group("risk")
    risk.add_argument("--beta", type=float, default=DEFAULT_BETA, help="Cox coefficient")
    risk.add_argument("--reaction-time", type=float, default=DEFAULT_REACTION_TIME, help="seconds")
    risk.add_argument("--decel", type=float, default=DEFAULT_DECEL_RATE, help="design deceleration in m/s^2")
    risk.add_argument("--cell-size", type=float, default=DEFAULT_CELL_SIZE, help="AV-centered cell size in m")
    risk.add_argument("--falloff", choices=_values(Falloff), default=Falloff.LINEAR.value)

    predictor = common.add_argument_group("predictor")
    predictor.add_argument("--predictor", choices=_values(PredictorMode), default=PredictorMode.ANALYTIC.value)
    predictor.add_argument("--grids", help="directory of grid files for the file predictor")
    predictor.add_argument("--horizon-steps", type=int, default=DEFAULT_HORIZON_STEPS)
    predictor.add_argument("--step-dt", type=float, default=DEFAULT_STEP_DT)
    predictor.add_argument(
        "--motion-model", choices=_values(MotionModel), default=MotionModel.CONSTANT_VELOCITY.value
    )

    policy = common.add_argument_group("policy")
    policy.add_argument("--proceed-below", type=float, default=DEFAULT_PROCEED_BELOW)
    policy.add_argument("--brake-above", type=float, default=DEFAULT_BRAKE_ABOVE)
    return common


def _scenario_arguments() -> argparse.ArgumentParser:
    scenario = argparse.ArgumentParser(add_help=False)
    group = scenario.add_argument_group("scenario")
    group.add_argument("--scenario", action="append", help="scenario JSON file (repeatable)")
    group.add_argument("--family", action="append", choices=_values(ScenarioFamily), help="generated family")
    group.add_argument("--demand", choices=_values(Demand), default=Demand.FREE.value)
    group.add_argument("--template", choices=_values(RoadTemplate), default=RoadTemplate.CORRIDOR.value)
    group.add_argument("--penetration", type=float, help="fraction of background vehicles under AV control")
    return scenario


def _plan_arguments() -> argparse.ArgumentParser:
    plan = argparse.ArgumentParser(add_help=False)
    group = plan.add_argument_group("planned trajectory")
    group.add_argument("--plan", help="planned trajectory CSV (t, x, y, heading_deg, vx, vy)")
    group.add_argument("--participants", help="JSON list of observed participants")
    group.add_argument("--av-length", type=float, default=4.5)
    group.add_argument("--av-width", type=float, default=1.8)
    return plan


def _episodes_argument(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--episodes", type=int, default=1, help="seeds per scenario, counted up from its seed")


def _shadow_argument(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--shadow-metric", action="append", choices=_values(Metric), help="metric evaluated alongside (repeatable)"
    )


def _bench_arguments(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--window", action="append", type=window_size, help="ROWSxCOLS window (repeatable)")
    parser.add_argument("--repetitions", type=int, default=BENCH_MIN_REPETITIONS)
    parser.add_argument("--agent-counts", type=int, nargs="+", default=[2, 4, 8, 16])
    parser.set_defaults(command="analyze bench")


def build_parser() -> argparse.ArgumentParser:
    """
    The command-line parser. Global flags follow the subcommand, for example `sim batch --workers 4`.

    @return: The parser.
    """
    common, scenario, plan = _common_arguments(), _scenario_arguments(), _plan_arguments()
    parser = argparse.ArgumentParser(
        prog=GENERATOR_NAME, description="PORA collision-risk engine and Monte Carlo harness."
    )
    groups = parser.add_subparsers(dest="group", required=True)

    sim = groups.add_parser("sim", help="simulate episodes").add_subparsers(dest="action", required=True)
    sim_run = sim.add_parser("run", parents=[common, scenario], help="one episode with its trajectory log")
    _shadow_argument(sim_run)
    sim_run.set_defaults(command="sim run")
    sim_batch = sim.add_parser("batch", parents=[common, scenario], help="seeded episodes and their summary")
    _episodes_argument(sim_batch)
    _shadow_argument(sim_batch)
    sim_batch.set_defaults(command="sim batch")
    sim_sweep = sim.add_parser("sweep", parents=[common, scenario], help="penetration-level sweep")
    _episodes_argument(sim_sweep)
    sim_sweep.add_argument("--levels", type=float, nargs="+", help="penetration levels in [0, 1]")
    sim_sweep.set_defaults(command="sim sweep")

    risk = groups.add_parser("risk", help="score planned trajectories").add_subparsers(dest="action", required=True)
    risk_eval = risk.add_parser("eval", parents=[common, plan], help="PORA score per predicted grid")
    risk_eval.add_argument("--export-fields", action="store_true", help="write every risk sub-field per step")
    risk_eval.set_defaults(command="risk eval")

    analyze = groups.add_parser("analyze", help="studies").add_subparsers(dest="action", required=True)
    correlate = analyze.add_parser("correlate", parents=[common], help="occupancy change vs relative motion")
    correlate.add_argument("--traces", type=int, default=30)
    correlate.add_argument("--steps", type=int, default=200)
    correlate.add_argument("--dt", type=float, default=0.1)
    correlate.add_argument("--summary", choices=_values(DeltaPSummary), default=DeltaPSummary.MAX.value)
    correlate.add_argument("--min-samples", type=int, default=MIN_CORRELATION_SAMPLES)
    correlate.set_defaults(command="analyze correlate")
    separate = analyze.add_parser("separate", parents=[common, scenario], help="crash/safe KL separation")
    _episodes_argument(separate)
    separate.add_argument("--separate-metric", action="append", choices=_values(Metric), help="(repeatable)")
    separate.add_argument("--bins", type=int, default=DEFAULT_HISTOGRAM_BINS)
    separate.add_argument("--mode", choices=_values(SampleMode), default=SampleMode.PEAK.value)
    separate.add_argument("--direction", choices=_values(KlDirection), default=KlDirection.CRASH_SAFE.value)
    separate.set_defaults(command="analyze separate")
    calibrate = analyze.add_parser("calibrate", parents=[common, scenario, plan], help="Cox coefficient search")
    _episodes_argument(calibrate)
    calibrate.add_argument("--program", choices=_values(CalibrationProgram), default=CalibrationProgram.LABELED.value)
    calibrate.add_argument("--labeled", action="append", help="JSON list of labeled scenarios (repeatable)")
    calibrate.add_argument("--collision-time", type=float, help="labeled collision time of `--plan`")
    calibrate.add_argument("--beta-grid", type=float, nargs="+", help="coefficients to evaluate")
    calibrate.set_defaults(command="analyze calibrate")
    _bench_arguments(analyze.add_parser("bench", parents=[common], help="latency of the PORA stages"))

    _bench_arguments(groups.add_parser("bench", parents=[common], help="alias of `analyze bench`"))
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    """
    Run one command.

    @param argv: Command-line arguments without the program name; the process arguments when None.
    @return: 0 on success, 2 on a configuration or input error, 1 on a runtime error.
    """
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as e:
        return EXIT_SUCCESS if e.code is None else int(e.code)

    setup_logging()
    inputs = RunInputs(args)
    if inputs.verbose:
        logging.getLogger().setLevel(logging.DEBUG)
    logger = logging.getLogger(__name__)

    logger.info("PORA risk engine - starting.")

    if not inputs.validate_user_configuration():
        logger.info("PORA risk engine - user configuration validation failed.")
        return EXIT_CONFIG_ERROR

    try:
        CommandRunner(inputs).run()
    except (ConfigurationError, ScenarioLoadException, GridFormatError) as e:
        logger.error("PORA risk engine - `%s` rejected its inputs: %s", inputs.command, e)
        return EXIT_CONFIG_ERROR
    except PoraRiskEngineException as e:
        logger.error("PORA risk engine - `%s` failed: %s", inputs.command, e)
        return EXIT_RUNTIME_ERROR

    logger.info("PORA risk engine - root output path set to `%s`.", inputs.output_path)
    logger.info("PORA risk engine - ending.")
    return EXIT_SUCCESS


def run() -> None:
    """
    The entry point: run the command given on the command line and exit with its code.

    @return: None
    """
    sys.exit(main())


if __name__ == "__main__":
    run()
