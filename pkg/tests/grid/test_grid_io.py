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
import numpy as np
import pytest

from core_types.model.pose import Pose2
from grid.grid_io import (
    read_field_csv,
    read_grid,
    read_grid_csv,
    read_grid_json,
    write_field_csv,
    write_grid,
    write_grid_csv,
    write_grid_json,
)
from grid.model.grid_spec import GridSpec
from grid.model.occupancy_grid import OccupancyGrid
from utils.exceptions import GridFormatError


@pytest.fixture
def irrational_grid():
    spec = GridSpec(Pose2(1.0 / 3.0, -2.0 / 7.0, 2.0 / 3.0), 0.1 + 0.2, 7, 5)
    values = np.random.default_rng(3).uniform(0.0, 1.0, spec.shape)
    return OccupancyGrid(spec, 0.1 * 3, values)


# write_grid_csv / read_grid_csv


def test_csv_round_trip_is_bit_exact(tmp_path, irrational_grid):
    # Arrange
    path = str(tmp_path / "grid.csv")

    # Act
    write_grid_csv(path, irrational_grid)
    actual = read_grid_csv(path)

    # Assert
    assert irrational_grid.spec == actual.spec
    assert irrational_grid.t == actual.t
    assert np.array_equal(irrational_grid.values, actual.values)


def test_csv_header_names_metadata(tmp_path, irrational_grid):
    # Arrange
    path = tmp_path / "grid.csv"

    # Act
    write_grid_csv(str(path), irrational_grid)

    # Assert
    lines = path.read_text(encoding="utf-8").splitlines()
    assert "rows,cols,cell_size,origin_x,origin_y,origin_heading,t" == lines[0]
    assert 2 + irrational_grid.spec.rows == len(lines)


# write_grid_json / read_grid_json


def test_json_round_trip_is_bit_exact(tmp_path, irrational_grid):
    # Arrange
    path = str(tmp_path / "grid.json")

    # Act
    write_grid_json(path, irrational_grid)
    actual = read_grid_json(path)

    # Assert
    assert irrational_grid.spec == actual.spec
    assert irrational_grid.t == actual.t
    assert np.array_equal(irrational_grid.values, actual.values)


# write_field_csv


def test_signed_field_round_trip(tmp_path, irrational_grid):
    # Arrange
    path = str(tmp_path / "delta.csv")
    signed = irrational_grid.values - 0.5

    # Act
    write_field_csv(path, irrational_grid.spec, 2.0, signed)
    spec, t, values = read_field_csv(path)

    # Assert
    assert irrational_grid.spec == spec
    assert 2.0 == t
    assert np.array_equal(signed, values)


def test_read_grid_rejects_signed_field_as_probabilities(tmp_path, irrational_grid):
    # Arrange
    path = str(tmp_path / "delta.csv")
    write_field_csv(path, irrational_grid.spec, 2.0, irrational_grid.values - 0.5)

    # Act & Assert
    with pytest.raises(GridFormatError):
        read_grid_csv(path)


# read_grid


def test_read_grid_dispatches_on_extension(tmp_path, irrational_grid):
    # Arrange
    json_path = write_grid(str(tmp_path / "a"), irrational_grid, "json")
    csv_path = write_grid(str(tmp_path / "b"), irrational_grid, "csv")

    # Act
    from_json = read_grid(json_path)
    from_csv = read_grid(csv_path)

    # Assert
    assert np.array_equal(from_json.values, from_csv.values)


def test_read_grid_unknown_extension(tmp_path):
    # Arrange
    path = tmp_path / "grid.txt"
    path.write_text("x", encoding="utf-8")

    # Act & Assert
    with pytest.raises(GridFormatError):
        read_grid(str(path))


def test_read_grid_missing_file(tmp_path, mocker):
    # Arrange
    mock_log_error = mocker.patch("grid.grid_io.logger.error")

    # Act & Assert
    with pytest.raises(GridFormatError):
        read_grid_json(str(tmp_path / "missing.json"))
    mock_log_error.assert_called_once()


def test_read_grid_csv_value_count_mismatch(tmp_path):
    # Arrange
    path = tmp_path / "grid.csv"
    path.write_text("rows,cols,cell_size,origin_x,origin_y,origin_heading,t\n2,2,0.5,0,0,0,0\n0,0\n", encoding="utf-8")

    # Act & Assert
    with pytest.raises(GridFormatError):
        read_grid_csv(str(path))
