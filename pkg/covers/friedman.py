# Copyright 2024 Schreier Lab Contributors
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

"""
New eigenvalues of random lifts.

For a d-regular base, the new eigenvalues of a random lift concentrate in
[-sqrt(2d sqrt(d-1)), sqrt(2d sqrt(d-1))] as the number of sheets grows.
The sweep measures how often every new eigenvalue lands in a window.
"""

import logging
import math

from core.models.reports import FriedmanSweepReport
from covers.lifts import random_cover
from covers.rng import SeedLike, as_stream
from covers.verify import new_eigenvalues
from labeled_graph.graph import SLabeledGraph

logger = logging.getLogger(__name__)


def ramanujan_window(d: int) -> float:
    """sqrt(2d sqrt(d - 1))."""
    if d < 2:
        raise ValueError(f"degree must be at least 2, got {d}")
    return math.sqrt(2 * d * math.sqrt(d - 1))


def friedman_ceiling(d: int) -> float:
    """b = d - (d - sqrt(2d sqrt(d - 1)))/2, strictly between the window and d."""
    return d - (d - ramanujan_window(d)) / 2


def friedman_sweep(
    base: SLabeledGraph,
    cover_degree: int,
    trials: int,
    seed: SeedLike,
    window: float = 3.9,
    target_fraction: float = 0.9,
    base_name: str = "",
) -> FriedmanSweepReport:
    """
    Sample random lifts and count those whose new eigenvalues all lie in
    [-window, window]. Trial t uses stream seed/t.
    """
    if trials < 1:
        raise ValueError(f"trials must be positive, got {trials}")
    d = 2 * base.k
    stream = as_stream(seed)

    inside = 0
    largest = 0.0
    for trial in range(trials):
        cover = random_cover(base, cover_degree, stream.child(trial))
        _, new = new_eigenvalues(cover)
        peak = max((abs(v) for v in new), default=0.0)
        largest = max(largest, peak)
        if peak <= window:
            inside += 1

    fraction = inside / trials
    passed = fraction >= target_fraction
    if not passed:
        logger.warning(f"Friedman sweep: only {inside}/{trials} lifts inside [-{window}, {window}]")
    return FriedmanSweepReport(
        base=base_name or f"{base.n}-vertex graph",
        base_degree=d,
        cover_degree=cover_degree,
        trials=trials,
        window=window,
        ramanujan_bound=ramanujan_window(d),
        inside=inside,
        fraction=fraction,
        max_abs_new=largest,
        target_fraction=target_fraction,
        passed=passed,
    )
