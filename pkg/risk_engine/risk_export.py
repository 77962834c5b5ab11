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
This module contains the export of risk fields for plotting, one grid file per sub-field.
"""

import logging
import os

from grid.grid_io import write_field_csv, write_field_json
from risk_engine.model.risk_field import RiskField
from utils.constants import SummaryFormat
from utils.utils import ensure_directory

logger = logging.getLogger(__name__)


def write_risk_field(directory: str, field: RiskField, file_format: SummaryFormat = SummaryFormat.CSV) -> list[str]:
    """
    Write every sub-field of a risk field as `step_<k>_<sub-field>.<ext>`.

    @param directory: Target directory, created when missing.
    @param field: The risk field.
    @param file_format: CSV or JSON.
    @return: The written paths, in sub-field order.
    """
    ensure_directory(directory)
    writer = write_field_json if file_format is SummaryFormat.JSON else write_field_csv
    extension = SummaryFormat(file_format).value
    paths = []
    for name, values in field.sub_fields().items():
        path = os.path.join(directory, f"step_{field.k:02d}_{name}.{extension}")
        paths.append(writer(path, field.spec, field.t, values))
    logger.debug("Risk field of step %s written to `%s`.", field.k, directory)
    return paths
