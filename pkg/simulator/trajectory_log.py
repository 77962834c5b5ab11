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
This module contains the CSV trajectory log of an episode.
"""

import logging
import math

import pandas as pd

from simulator.model.episode_report import EpisodeReport

logger = logging.getLogger(__name__)

TRAJECTORY_LOG_COLUMNS = ["t", "id", "kind", "x", "y", "heading", "vx", "vy", "ax", "length", "width"]


def trajectory_frame(report: EpisodeReport) -> pd.DataFrame:
    """
    Tabular form of the recorded participant states, heading in degrees.

    @param report: A report recorded with trajectories.
    @return: One row per participant and tick.
    """
    frame = pd.DataFrame(list(report.trajectory), columns=TRAJECTORY_LOG_COLUMNS)
    frame["heading"] = frame["heading"].map(math.degrees)
    return frame


def write_trajectory_log(file_path: str, report: EpisodeReport) -> str:
    """
    Write the recorded participant states as CSV.

    @param file_path: Target file.
    @param report: A report recorded with trajectories; without recording only the header is written.
    @return: The written path.
    """
    if not report.trajectory:
        logger.warning("Episode %s carries no recorded trajectory.", report.seed)
    trajectory_frame(report).to_csv(file_path, index=False, float_format="%.17g")
    logger.debug("Trajectory log written to `%s`.", file_path)
    return file_path
