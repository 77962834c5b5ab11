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
import json

import pytest

from core_types.participants import load_participants, save_participants
from utils.exceptions import ScenarioLoadException


# load_participants


def test_load_participants_file_order(tmp_path, make_car):
    # Arrange
    path = str(tmp_path / "participants.json")
    save_participants(path, [make_car("lead", 20.0, speed=8.0), make_car("side", 5.0, y=3.5)])

    # Act
    actual = load_participants(path)

    # Assert
    assert ["lead", "side"] == [a.id for a in actual]
    assert 8.0 == pytest.approx(actual[0].speed)
    assert 3.5 == actual[1].pose.y


def test_load_participants_missing_file(tmp_path, mocker):
    # Arrange
    mock_log_error = mocker.patch("core_types.participants.logger.error")

    # Act & Assert
    with pytest.raises(ScenarioLoadException):
        load_participants(str(tmp_path / "absent.json"))
    mock_log_error.assert_called_once()


@pytest.mark.parametrize(
    "payload",
    [
        {"id": "a", "x": 0.0, "y": 0.0},
        [{"id": "a", "x": 0.0}],
        [{"id": "a", "x": 0.0, "y": 0.0, "kind": "tram"}],
        [{"id": "a", "x": 0.0, "y": 0.0}, {"id": "a", "x": 9.0, "y": 0.0}],
        [{"id": "a", "x": 0.0, "y": 0.0, "length": -1.0}],
    ],
)
def test_load_participants_malformed(tmp_path, payload):
    # Arrange
    path = tmp_path / "participants.json"
    path.write_text(json.dumps(payload), encoding="utf-8")

    # Act & Assert
    with pytest.raises(ScenarioLoadException):
        load_participants(str(path))
