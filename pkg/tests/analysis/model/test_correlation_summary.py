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

from analysis.model.correlation_summary import (
    AGGREGATE_ROW_ID,
    CORRELATION_COLUMNS,
    CorrelationSummary,
    ScenarioCorrelation,
)
from utils.exceptions import InvalidParameterError


@pytest.fixture
def summary():
    per_scenario = (ScenarioCorrelation("a", 10, -0.5, -0.4, -0.3), ScenarioCorrelation("b", 6, -0.2, -0.1, 0.0))
    return CorrelationSummary(per_scenario, -0.45, -0.35, -0.25, ("c",))


# ScenarioCorrelation


def test_scenario_correlation_out_of_range(mocker):
    # Arrange
    mock_log_error = mocker.patch("analysis.model.correlation_summary.logger.error")

    # Act
    with pytest.raises(InvalidParameterError):
        ScenarioCorrelation("a", 10, 1.2, 0.0, 0.0)

    # Assert
    mock_log_error.assert_called_once()


# aggregate


def test_aggregate(summary):
    # Assert
    assert (-0.45, -0.35, -0.25) == summary.aggregate


# to_frame


def test_to_frame(summary):
    # Act
    actual = summary.to_frame()

    # Assert
    assert CORRELATION_COLUMNS == list(actual.columns)
    assert ["a", "b", AGGREGATE_ROW_ID] == actual["scenario_id"].tolist()
    assert 16 == actual.iloc[-1]["n"]
    assert -0.45 == actual.iloc[-1]["pearson"]


# to_dict


def test_to_dict(summary):
    # Act
    actual = summary.to_dict()

    # Assert
    assert ["c"] == actual["excluded"]
    assert {"pearson": -0.45, "spearman": -0.35, "kendall": -0.25} == actual["aggregate"]
    assert "a" == actual["per_scenario"][0]["scenario_id"]
