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
This module contains the separation analysis of a risk metric: how differently it is distributed over
episodes that ended safely and episodes that ended in a crash.
"""

import logging
from typing import Optional, Sequence

import numpy as np
from scipy.stats import entropy

from analysis.model.separation_report import SeparationReport
from simulator.model.episode_report import EpisodeReport
from utils.constants import DEFAULT_HISTOGRAM_BINS, KlDirection, Metric, SampleMode
from utils.exceptions import EmptySampleError, InvalidParameterError

logger = logging.getLogger(__name__)


def separation_samples(
    reports: Sequence[EpisodeReport], metric: Metric, mode: SampleMode = SampleMode.PEAK
) -> tuple[np.ndarray, np.ndarray]:
    """
    Metric values of safe and crash episodes. The traces of crash episodes end before the impact.

    @param reports: Episode reports carrying the metric as driving or shadow trace.
    @param metric: The metric.
    @param mode: One value per episode (its maximum) or every tick.
    @return: (safe samples, crash samples).
    """
    safe: list[float] = []
    crash: list[float] = []
    for report in reports:
        values = report.trace_values(metric)
        if not values:
            logger.debug("Episode %s has no %s trace.", report.seed, metric.value)
            continue
        samples = [max(values)] if mode is SampleMode.PEAK else values
        (crash if report.crashed else safe).extend(samples)
    return np.array(safe, dtype=float), np.array(crash, dtype=float)


def _smoothed_histogram(samples: np.ndarray, edges: np.ndarray) -> np.ndarray:
    counts, _ = np.histogram(np.clip(samples, 0.0, 1.0), bins=edges)
    smoothed = counts.astype(float) + 1.0
    return smoothed / smoothed.sum()


def _proceed_below(safe: np.ndarray, crash: np.ndarray, edges: np.ndarray) -> Optional[float]:
    leading = 0
    while leading < safe.size and safe[leading] > crash[leading]:
        leading += 1
    return float(edges[leading]) if leading else None


def _brake_above(safe: np.ndarray, crash: np.ndarray, edges: np.ndarray) -> Optional[float]:
    trailing = 0
    while trailing < crash.size and crash[-1 - trailing] > safe[-1 - trailing]:
        trailing += 1
    return float(edges[crash.size - trailing]) if trailing else None


def kl_separation(
    safe: Sequence[float],
    crash: Sequence[float],
    bins: int = DEFAULT_HISTOGRAM_BINS,
    direction: KlDirection = KlDirection.CRASH_SAFE,
) -> SeparationReport:
    """
    Histogram both sample sets over [0, 1] with add-one smoothing and measure their KL divergence in nats.
    The threshold suggestions are the edge up to which the safe density exceeds the crash density in every bin
    and the edge from which the crash density exceeds the safe density in every bin.

    @param safe: Samples of safe episodes.
    @param crash: Samples of crash episodes.
    @param bins: Number of bins (at least 2).
    @param direction: KL(crash || safe) or KL(safe || crash).
    @return: The separation report.
    @raise EmptySampleError: When a sample set is empty.
    @raise InvalidParameterError: When fewer than 2 bins are requested.
    """
    safe_samples, crash_samples = np.asarray(safe, dtype=float), np.asarray(crash, dtype=float)
    if safe_samples.size == 0 or crash_samples.size == 0:
        logger.error("Separation needs safe and crash samples, got %s and %s.", safe_samples.size, crash_samples.size)
        raise EmptySampleError("Separation needs both safe and crash samples.")
    if bins < 2:
        logger.error("Separation needs at least 2 bins, got %s.", bins)
        raise InvalidParameterError(f"Separation needs at least 2 bins, got {bins}.")

    edges = np.linspace(0.0, 1.0, bins + 1)
    safe_hist = _smoothed_histogram(safe_samples, edges)
    crash_hist = _smoothed_histogram(crash_samples, edges)
    if direction is KlDirection.CRASH_SAFE:
        kl = float(entropy(crash_hist, safe_hist))
    else:
        kl = float(entropy(safe_hist, crash_hist))

    report = SeparationReport(
        tuple(edges.tolist()),
        tuple(safe_hist.tolist()),
        tuple(crash_hist.tolist()),
        max(0.0, kl),
        direction,
        _proceed_below(safe_hist, crash_hist, edges),
        _brake_above(safe_hist, crash_hist, edges),
        int(safe_samples.size),
        int(crash_samples.size),
    )
    logger.info("Separation of %s safe and %s crash samples: KL=%s.", safe_samples.size, crash_samples.size, kl)
    return report
