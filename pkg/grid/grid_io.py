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
This module contains the CSV and JSON file forms of grids and of signed per-cell fields.

CSV layout: a header line naming the metadata, one metadata line, then `rows` lines of `cols`
comma-separated values in row-major order. The origin heading is stored in radians and every float
is written at round-trip precision so that reading back is bit-exact.
"""

import json
import logging
import os

import numpy as np

from core_types.model.pose import Pose2
from grid.model.grid_spec import GridSpec
from grid.model.occupancy_grid import OccupancyGrid
from utils.exceptions import GridFormatError, InvalidGeometryError, InvalidGridError
from utils.utils import read_json, write_json

logger = logging.getLogger(__name__)

GRID_HEADER = "rows,cols,cell_size,origin_x,origin_y,origin_heading,t"
GRID_FILE_EXTENSIONS = (".csv", ".json")


def write_field_csv(file_path: str, spec: GridSpec, t: float, values: np.ndarray) -> str:
    """
    Write any per-cell field (probabilities or signed changes) as CSV.

    @param file_path: Target file.
    @param spec: The field geometry.
    @param t: The field timestamp.
    @param values: A rows x cols array.
    @return: The written path.
    """
    metadata = [spec.rows, spec.cols, spec.cell_size, spec.origin.x, spec.origin.y, spec.origin.heading, t]
    with open(file_path, "w", encoding="utf-8") as f:
        f.write(GRID_HEADER + "\n")
        f.write(",".join(repr(v) for v in metadata) + "\n")
        np.savetxt(f, np.asarray(values, dtype=float), delimiter=",", fmt="%.17g")
    return file_path


def read_field_csv(file_path: str) -> tuple[GridSpec, float, np.ndarray]:
    """
    Read a per-cell field written by write_field_csv.

    @param file_path: Source file.
    @return: (spec, t, values).
    @raise GridFormatError: When the file is missing or malformed.
    """
    try:
        with open(file_path, "r", encoding="utf-8") as f:
            header = f.readline().strip()
            if header != GRID_HEADER:
                raise ValueError(f"unexpected header `{header}`")
            rows, cols, cell_size, x, y, heading, t = f.readline().strip().split(",")
            spec = GridSpec(Pose2(float(x), float(y), float(heading)), float(cell_size), int(rows), int(cols))
            values = np.loadtxt(f, delimiter=",", ndmin=2)
    except OSError as e:
        logger.error("Cannot read grid file `%s`: %s.", file_path, e)
        raise GridFormatError(f"Cannot read grid file {file_path}.") from e
    except (ValueError, InvalidGridError, InvalidGeometryError) as e:
        logger.error("Malformed grid file `%s`: %s.", file_path, e)
        raise GridFormatError(f"Malformed grid file {file_path}.") from e
    if values.shape != spec.shape:
        logger.error("Grid file `%s` holds %s values, header says %s.", file_path, values.shape, spec.shape)
        raise GridFormatError(f"Grid file {file_path} does not match its header.")
    return spec, float(t), values


def write_field_json(file_path: str, spec: GridSpec, t: float, values: np.ndarray) -> str:
    """
    Write any per-cell field as JSON.

    @param file_path: Target file.
    @param spec: The field geometry.
    @param t: The field timestamp.
    @param values: A rows x cols array.
    @return: The written path.
    """
    payload = {
        "rows": spec.rows,
        "cols": spec.cols,
        "cell_size": spec.cell_size,
        "origin": {"x": spec.origin.x, "y": spec.origin.y, "heading": spec.origin.heading},
        "t": t,
        "values": np.asarray(values, dtype=float).tolist(),
    }
    return write_json(file_path, payload)


def read_field_json(file_path: str) -> tuple[GridSpec, float, np.ndarray]:
    """
    Read a per-cell field written by write_field_json.

    @param file_path: Source file.
    @return: (spec, t, values).
    @raise GridFormatError: When the file is missing or malformed.
    """
    try:
        payload = read_json(file_path)
        origin = payload["origin"]
        spec = GridSpec(
            Pose2(float(origin["x"]), float(origin["y"]), float(origin["heading"])),
            float(payload["cell_size"]),
            int(payload["rows"]),
            int(payload["cols"]),
        )
        values = np.array(payload["values"], dtype=float).reshape(spec.shape)
        t = float(payload["t"])
    except OSError as e:
        logger.error("Cannot read grid file `%s`: %s.", file_path, e)
        raise GridFormatError(f"Cannot read grid file {file_path}.") from e
    except (json.JSONDecodeError, KeyError, TypeError, ValueError, InvalidGridError, InvalidGeometryError) as e:
        logger.error("Malformed grid file `%s`: %s.", file_path, e)
        raise GridFormatError(f"Malformed grid file {file_path}.") from e
    return spec, t, values


def write_grid_csv(file_path: str, g: OccupancyGrid) -> str:
    """Write an occupancy grid as CSV."""
    return write_field_csv(file_path, g.spec, g.t, g.values)


def write_grid_json(file_path: str, g: OccupancyGrid) -> str:
    """Write an occupancy grid as JSON."""
    return write_field_json(file_path, g.spec, g.t, g.values)


def _as_grid(file_path: str, spec: GridSpec, t: float, values: np.ndarray) -> OccupancyGrid:
    try:
        return OccupancyGrid(spec, t, values)
    except InvalidGridError as e:
        raise GridFormatError(f"Grid file {file_path} holds values outside [0, 1].") from e


def read_grid_csv(file_path: str) -> OccupancyGrid:
    """Read an occupancy grid from CSV."""
    return _as_grid(file_path, *read_field_csv(file_path))


def read_grid_json(file_path: str) -> OccupancyGrid:
    """Read an occupancy grid from JSON."""
    return _as_grid(file_path, *read_field_json(file_path))


def read_grid(file_path: str) -> OccupancyGrid:
    """
    Read an occupancy grid, choosing the form by file extension.

    @param file_path: A `.csv` or `.json` grid file.
    @return: The grid.
    @raise GridFormatError: When the extension is unknown or the file is malformed.
    """
    extension = os.path.splitext(file_path)[1].lower()
    if extension == ".csv":
        return read_grid_csv(file_path)
    if extension == ".json":
        return read_grid_json(file_path)
    logger.error("Unsupported grid file extension: `%s`.", file_path)
    raise GridFormatError(f"Unsupported grid file extension: {file_path}.")


def write_grid(file_path_stem: str, g: OccupancyGrid, file_format: str) -> str:
    """
    Write an occupancy grid in the requested form.

    @param file_path_stem: Target path without extension.
    @param g: The grid.
    @param file_format: `csv` or `json`.
    @return: The written path.
    """
    if file_format == "json":
        return write_grid_json(file_path_stem + ".json", g)
    return write_grid_csv(file_path_stem + ".csv", g)
