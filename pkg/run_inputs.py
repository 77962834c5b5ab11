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
This module contains the Run Inputs class, which resolves and validates the command-line arguments and the
environment inputs required for running a command.
"""

import argparse
import logging
import os
from typing import Any, Optional

from living_doc_utilities.constants import OUTPUT_PATH
from living_doc_utilities.github.utils import get_action_input
from living_doc_utilities.inputs.action_inputs import BaseActionInputs

from predictor.model.predictor_config import PredictorConfig
from risk_engine.model.cox_params import CoxParams
from risk_engine.model.risk_params import RiskParams
from risk_engine.model.ssd_params import SsdParams
from simulator.model.controller_policy import ControllerPolicy
from utils.constants import (
    OUTPUT_DIR,
    VERBOSE_LOGGING,
    WORKERS,
    CalibrationProgram,
    Falloff,
    Metric,
    MotionModel,
    PredictorMode,
    ScenarioFamily,
    SummaryFormat,
)
from utils.exceptions import ConfigurationError, InvalidParameterError
from utils.utils import make_absolute_path

logger = logging.getLogger(__name__)

SIM_COMMANDS = ("sim run", "sim batch", "sim sweep", "analyze separate")
# Arguments that change where or how fast a run happens but never what it produces
NON_RESULT_ARGUMENTS = ("out", "workers", "verbose", "command", "group", "action")


class RunInputs(BaseActionInputs):
    """
    A class representing all the inputs of one command. It is responsible for resolving the parsed arguments
    against the environment defaults, building the parameter containers and validating the configuration.
    """

    def __init__(self, args: argparse.Namespace):
        super().__init__()
        self.__args: argparse.Namespace = args
        self.__risk_params: Optional[RiskParams] = None
        self.__predictor_config: Optional[PredictorConfig] = None
        self.__policy: Optional[ControllerPolicy] = None

    @property
    def command(self) -> str:
        """Getter of the command name, for example `sim batch`."""
        return self.__args.command

    @property
    def output_path(self) -> str:
        """Getter of the absolute output directory: the `--out` flag, the OUTPUT_DIR input or the default."""
        out = self.__args.out if self.__args.out else get_action_input(OUTPUT_DIR, OUTPUT_PATH)
        return make_absolute_path(out)

    @property
    def file_format(self) -> SummaryFormat:
        """Getter of the summary file format."""
        return SummaryFormat(self.__args.format)

    @property
    def workers(self) -> int:
        """
        Getter of the worker count: the `--workers` flag, the WORKERS input or the available parallelism.

        @raise ConfigurationError: When the WORKERS input is not an integer.
        """
        if self.__args.workers is not None:
            return int(self.__args.workers)
        value = get_action_input(WORKERS, str(os.cpu_count() or 1))
        try:
            return int(value)
        except (TypeError, ValueError) as e:
            logger.error("The WORKERS input must be an integer, got `%s`.", value)
            raise ConfigurationError(f"The WORKERS input must be an integer, got `{value}`.") from e

    @property
    def verbose(self) -> bool:
        """Getter of the verbose logging switch: the `--verbose` flag or the VERBOSE_LOGGING input."""
        if self.__args.verbose:
            return True
        return str(get_action_input(VERBOSE_LOGGING, "false")).lower() == "true"

    @property
    def metric(self) -> Metric:
        """Getter of the metric driving the controlled vehicles."""
        return Metric(self.__args.metric)

    @property
    def seed(self) -> int:
        """Getter of the base seed."""
        return int(self.__args.seed)

    @property
    def predictor_mode(self) -> PredictorMode:
        """Getter of the occupancy source."""
        return PredictorMode(self.__args.predictor)

    @property
    def grids_path(self) -> Optional[str]:
        """Getter of the grid directory of the file predictor."""
        return self.__args.grids

    @property
    def scenario_paths(self) -> list[str]:
        """Getter of the scenario files given with `--scenario`."""
        return list(self.option("scenario") or [])

    @property
    def families(self) -> list[ScenarioFamily]:
        """Getter of the generated scenario families; all families for the separation study, else nominal."""
        names = self.option("family")
        if names:
            return [ScenarioFamily(name) for name in dict.fromkeys(names)]
        if self.command == "analyze separate":
            return list(ScenarioFamily)
        return [ScenarioFamily.NOMINAL]

    @property
    def risk_params(self) -> RiskParams:
        """Getter of the risk parameters, built during validation."""
        if self.__risk_params is None:
            self.__risk_params = RiskParams(
                CoxParams(self.__args.beta),
                SsdParams(self.__args.reaction_time, self.__args.decel),
                self.__args.cell_size,
                Falloff(self.__args.falloff),
            )
        return self.__risk_params

    @property
    def predictor_config(self) -> PredictorConfig:
        """Getter of the analytic predictor configuration, built during validation."""
        if self.__predictor_config is None:
            self.__predictor_config = PredictorConfig(
                horizon_steps=self.__args.horizon_steps,
                step_dt=self.__args.step_dt,
                motion_model=MotionModel(self.__args.motion_model),
            )
        return self.__predictor_config

    @property
    def policy(self) -> ControllerPolicy:
        """Getter of the threshold policy, built during validation."""
        if self.__policy is None:
            self.__policy = ControllerPolicy(self.__args.proceed_below, self.__args.brake_above)
        return self.__policy

    def option(self, name: str, default: Any = None) -> Any:
        """
        Getter of a command-specific argument.

        @param name: The argument destination name.
        @param default: Returned when the command does not define the argument or it was not given.
        @return: The argument value.
        """
        value = getattr(self.__args, name, None)
        return default if value is None else value

    def to_dict(self) -> dict:
        """
        The resolved configuration: every argument that influences the results, plus the resolved parameter
        containers. Output location, worker count and verbosity are left out so that equal runs record equal
        configurations.
        """
        arguments = {key: value for key, value in sorted(vars(self.__args).items()) if key not in NON_RESULT_ARGUMENTS}
        return {
            "command": self.command,
            "arguments": arguments,
            "risk_params": self.risk_params.to_dict(),
            "predictor_config": self.predictor_config.to_dict(),
            "policy": self.policy.to_dict(),
        }

    def _missing_files(self) -> list[str]:
        files = self.scenario_paths + [p for p in (self.option("plan"), self.option("participants")) if p]
        files += list(self.option("labeled") or [])
        missing = [path for path in files if not os.path.isfile(path)]
        if self.grids_path and not os.path.isdir(self.grids_path):
            missing.append(self.grids_path)
        return missing

    def _command_errors(self) -> list[str]:
        errors = []
        file_predictor = self.predictor_mode is PredictorMode.FILE
        labeled = self.option("program") == CalibrationProgram.LABELED.value
        simulating = self.command in SIM_COMMANDS or (self.command == "analyze calibrate" and not labeled)
        scoring_plan = self.command == "risk eval" or (self.command == "analyze calibrate" and labeled)

        if file_predictor and not self.grids_path:
            errors.append("the file predictor needs `--grids`")
        if file_predictor and simulating:
            errors.append(f"`{self.command}` predicts occupancy while simulating; use the analytic predictor")
        if self.command == "sim run" and max(len(self.scenario_paths), len(self.families)) > 1:
            errors.append("`sim run` simulates one scenario; use `sim batch` for several")
        if self.command == "risk eval" and not self.option("plan"):
            errors.append("`risk eval` needs `--plan`")
        if scoring_plan and self.option("plan") and not self.option("participants"):
            errors.append("scoring a plan needs `--participants`")
        if self.command == "analyze calibrate" and labeled:
            if not self.option("labeled") and not self.option("plan"):
                errors.append("labeled calibration needs `--labeled` or `--plan`")
            if self.option("plan") and self.option("collision_time") is None:
                errors.append("a labeled `--plan` needs `--collision-time`")
        if simulating and self.option("episodes", 1) < 1:
            errors.append(f"`--episodes` must be >= 1, got {self.option('episodes')}")
        return errors

    def _validate(self) -> int:
        err_counter = 0

        for path in self._missing_files():
            logger.error("Input file not found: `%s`.", path)
            err_counter += 1

        for name in ("risk_params", "predictor_config", "policy"):
            try:
                getattr(self, name)
            except InvalidParameterError:
                logger.error("Invalid %s.", name.replace("_", " "))
                err_counter += 1

        try:
            if self.workers < 1:
                logger.error("Worker count must be >= 1, got %s.", self.workers)
                err_counter += 1
        except ConfigurationError:
            err_counter += 1

        for error in self._command_errors():
            logger.error("Invalid command configuration: %s.", error)
            err_counter += 1

        if err_counter > 0:
            logger.error("User configuration validation failed.")
        else:
            logger.info("User configuration validation successfully completed.")
            self.print_effective_configuration()

        return err_counter

    def _print_effective_configuration(self) -> None:
        """
        Print the effective configuration of the run inputs.
        """
        logger.info("Command: `%s`.", self.command)
        logger.info("Output directory: `%s`, format: %s.", self.output_path, self.file_format.value)
        logger.info("Workers: %s, seed: %s, metric: %s.", self.workers, self.seed, self.metric.value)
        logger.info("Risk parameters: %s.", self.risk_params)
        logger.info("Predictor: %s, %s.", self.predictor_mode.value, self.predictor_config)
        logger.info("Controller policy: %s.", self.policy.to_dict())
        logger.info("verbose logging: %s", self.verbose)
