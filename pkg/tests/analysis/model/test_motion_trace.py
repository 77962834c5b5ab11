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
import pytest

from analysis.model.motion_trace import MotionTrace
from utils.exceptions import InvalidParameterError


# MotionTrace


def test_motion_trace_differences():
    # Arrange
    trace = MotionTrace("m", (0.0, 0.1, 0.2), (10.0, 9.0, 9.5), (0.1, 0.3, 0.2))

    # Assert
    assert pytest.approx([-1.0, 0.5]) == trace.relative_motion.tolist()
    assert pytest.approx([0.2, -0.1]) == trace.occupancy_change.tolist()


def test_motion_trace_length_mismatch(mocker):
    # Arrange
    mock_log_error = mocker.patch("analysis.model.motion_trace.logger.error")

    # Act
    with pytest.raises(InvalidParameterError):
        MotionTrace("m", (0.0, 0.1), (10.0, 9.0, 8.0), (0.1, 0.2))

    # Assert
    mock_log_error.assert_called_once()


def test_motion_trace_time_order(mocker):
    # Arrange
    mocker.patch("analysis.model.motion_trace.logger.error")

    # Act & Assert
    with pytest.raises(InvalidParameterError):
        MotionTrace("m", (0.0, 0.0), (10.0, 9.0), (0.1, 0.2))
