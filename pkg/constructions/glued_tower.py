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
Glued Tower: a covering tower that is not an expander, shadowed by one
that nearly is.

Two towers share their vertex sets. G_{n+1} glues a c-sheet and a c'-sheet
cover of G_n along one pair of edges, so its Cheeger constant collapses;
K_{n+1} is the disjoint union of the same two covers of K_n, so it stays
edit-close to G_{n+1} while its largest component keeps most of the
vertices and a spectral gap.

Each lift pair applies one sheet table to G_n and K_n alike. A sample is
accepted when both girths grow, the G-lift is connected, every K_n
component lifts to one component, and no lifted component's second
eigenvalue exceeds max(lambda1 of its base component, b).
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

import numpy as np

from core.errors import (
    CapExceededError,
    DisconnectedGraphError,
    GirthTooSmallError,
    InvariantViolation,
    RetriesExhaustedError,
)
from core.models.audits import GluedTowerReport, LevelStats
from core.models.config import TowerConfig
from core.models.reports import PropertyCheck
from covers.friedman import friedman_ceiling
from covers.girth import cycle_killing_spec
from covers.gluing import GLUE_CROSSING, glue
from covers.lifts import CoveringMap, Tower, disjoint_union_cover, lift, random_cover_spec
from covers.rng import SeedStream
from labeled_graph.graph import SLabeledGraph, edit_distance
from labeled_graph.multigraph import (
    Multigraph,
    connected_components,
    girth,
    induced_subgraph,
    undirected_view,
)
from observability.checks import PropertyCheckTracker, get_tracker
from spectral.eigen import second_eigenvalue
from spectral.enumeration import EXHAUSTIVE_LIMIT
from spectral.expansion import crossing_edges, edge_cheeger_exact

logger = logging.getLogger(__name__)

FIRST_DEGREE = 2
EIGEN_TOLERANCE = 1e-9
MAX_SECOND_DEPTH = 16


@dataclass(frozen=True)
class TowerParameters:
    """Thresholds of one run, resolved from a TowerConfig."""

    d: int
    b: float
    delta: Fraction
    max_edit_distance: Fraction
    min_component_fraction: Fraction

    @classmethod
    def from_config(cls, config: TowerConfig, k: int) -> "TowerParameters":
        d = 2 * k
        return cls(
            d=d,
            b=config.b if config.b is not None else friedman_ceiling(d),
            delta=config.delta,
            max_edit_distance=(
                config.max_edit_distance
                if config.max_edit_distance is not None
                else config.delta / 50
            ),
            min_component_fraction=(
                config.min_component_fraction
                if config.min_component_fraction is not None
                else 1 - config.delta / (100 * d)
            ),
        )


@dataclass(frozen=True)
class _Components:
    """Components of K_n with their second eigenvalues."""

    groups: List[List[int]]
    label: np.ndarray
    lambdas: List[float]

    @classmethod
    def of(cls, view: Multigraph) -> "_Components":
        groups = connected_components(view)
        label = np.empty(view.n, dtype=np.int64)
        for i, group in enumerate(groups):
            label[group] = i
        lambdas = [second_eigenvalue(induced_subgraph(view, group)) for group in groups]
        return cls(groups=groups, label=label, lambdas=lambdas)

    @property
    def largest(self) -> int:
        return max(range(len(self.groups)), key=lambda i: (len(self.groups[i]), -i))


def _gir(value) -> Optional[int]:
    return None if value == float("inf") else int(value)


def _shared_lift_pair(
    g: SLabeledGraph,
    k: SLabeledGraph,
    depth: int,
    rng: np.random.Generator,
) -> Tuple[CoveringMap, CoveringMap]:
    """
    2^depth-sheet covers of g and k through identical sheet tables.

    Every step opens the current shortest cycles of both graphs when the
    parity system allows it and is a uniform 2-cover otherwise.
    """
    spec = cycle_killing_spec([g, k], rng) or random_cover_spec(g, FIRST_DEGREE, rng)
    g_map, k_map = lift(g, spec), lift(k, spec)
    for _ in range(depth - 1):
        spec = cycle_killing_spec([g_map.total, k_map.total], rng) or random_cover_spec(
            g_map.total, FIRST_DEGREE, rng
        )
        g_map = lift(g_map.total, spec).compose(g_map)
        k_map = lift(k_map.total, spec).compose(k_map)
    return g_map, k_map


def _rejection(
    g_girth,
    k_girth,
    g_map: CoveringMap,
    k_map: CoveringMap,
    components: _Components,
    b: float,
) -> Optional[str]:
    """None when the lift pair is acceptable, else the failed condition."""
    g_view = undirected_view(g_map.total)
    if girth(g_view) <= max(g_girth, 2):
        return "girth of G did not grow"
    k_view = undirected_view(k_map.total)
    if girth(k_view) <= max(k_girth, 2):
        return "girth of K did not grow"
    if len(connected_components(g_view)) != 1:
        return "G lift disconnected"
    lifted = connected_components(k_view)
    if len(lifted) != len(components.groups):
        return "a K component lifted to several components"
    for group in lifted:
        below = components.label[k_map.proj[group[0]]]
        ceiling = max(components.lambdas[below], b) + EIGEN_TOLERANCE
        if second_eigenvalue(induced_subgraph(k_view, group)) > ceiling:
            return "lifted component exceeds the eigenvalue ceiling"
    return None


def _sample_pair(
    g: SLabeledGraph,
    k: SLabeledGraph,
    depth: int,
    components: _Components,
    params: TowerParameters,
    stream: SeedStream,
    max_tries: int,
) -> Tuple[CoveringMap, CoveringMap]:
    """
    An accepted lift pair of at least 2^depth sheets. A single 2-cover
    cannot raise the girth when the parity system on the shortest cycles
    is inconsistent; depth 1 then becomes depth 2.
    """
    g_girth = girth(undirected_view(g))
    k_girth = girth(undirected_view(k))
    if depth == 1 and cycle_killing_spec([g, k], stream.generator()) is None:
        logger.debug(f"No 2-cover opens every shortest cycle at {stream}; using 4 sheets")
        depth = 2
    for attempt in range(max_tries):
        rng = stream.child(attempt).generator()
        g_map, k_map = _shared_lift_pair(g, k, depth, rng)
        reason = _rejection(g_girth, k_girth, g_map, k_map, components, params.b)
        if reason is None:
            logger.debug(f"Lift pair of depth {depth} accepted at attempt {attempt + 1} ({stream})")
            return g_map, k_map
        logger.debug(f"Lift pair attempt {attempt + 1} rejected: {reason}")
    raise RetriesExhaustedError(f"lift pair of {2 ** depth} sheets at {stream}", max_tries)


def _second_depth(
    vertices: int,
    largest: int,
    distance: Fraction,
    params: TowerParameters,
    cap: int,
    first_sheets: int = FIRST_DEGREE,
) -> int:
    """
    Smallest j such that the 2^j-sheet second pair keeps the largest
    component fraction and the edit distance within their thresholds.

    Raises:
        CapExceededError: no admissible j fits under the vertex cap
    """
    for depth in range(1, MAX_SECOND_DEPTH + 1):
        sheets = 2**depth
        total = vertices * (first_sheets + sheets)
        if total > cap:
            raise CapExceededError(total, cap)
        fraction = Fraction(max(first_sheets, sheets) * largest, total)
        predicted = distance + Fraction(2 * GLUE_CROSSING, total)
        if fraction > params.min_component_fraction and predicted < params.max_edit_distance:
            return depth
    raise CapExceededError(vertices * (first_sheets + 2**MAX_SECOND_DEPTH), cap)


def _glue_vertex(g: SLabeledGraph, k: SLabeledGraph, letter: int) -> int:
    """Smallest vertex whose letter edge is the same in g and k."""
    agree = np.nonzero(g.perms[letter] == k.perms[letter])[0]
    if agree.size == 0:
        raise InvariantViolation("glue slot", {"letter": letter, "reason": "no agreeing edge"})
    return int(agree[0])


def _level_stats(
    level: int,
    g: SLabeledGraph,
    k: SLabeledGraph,
    params: TowerParameters,
    first_degree: Optional[int] = None,
    second_degree: Optional[int] = None,
    witness: Optional[Sequence[int]] = None,
) -> Tuple[LevelStats, _Components]:
    g_view = undirected_view(g)
    k_view = undirected_view(k)
    components = _Components.of(k_view)
    largest = components.largest
    lambda1 = components.lambdas[largest]

    cheeger_exact = None
    if g.n <= EXHAUSTIVE_LIMIT and g.n >= 2:
        cheeger_exact = edge_cheeger_exact(g_view).value

    upper = crossing_g = crossing_k = None
    if witness is not None:
        crossing_g = crossing_edges(g_view, witness)
        crossing_k = crossing_edges(k_view, witness)
        upper = Fraction(crossing_g, min(len(witness), g.n - len(witness)))

    stats = LevelStats(
        level=level,
        vertices=g.n,
        girth_g=_gir(girth(g_view)),
        girth_k=_gir(girth(k_view)),
        g_connected=len(connected_components(g_view)) == 1,
        first_degree=first_degree,
        second_degree=second_degree,
        cheeger_upper_bound=upper,
        cheeger_exact=cheeger_exact,
        witness_size=len(witness) if witness is not None else None,
        witness_crossing_g=crossing_g,
        witness_crossing_k=crossing_k,
        edit_distance=edit_distance(g, k),
        k_components=len(components.groups),
        largest_component_fraction=Fraction(len(components.groups[largest]), k.n),
        largest_component_lambda1=None if lambda1 == float("-inf") else lambda1,
        spectral_cheeger_lower=None if lambda1 == float("-inf") else (params.d - lambda1) / 2,
    )
    return stats, components


def _record_level_checks(
    tracker: PropertyCheckTracker,
    previous: LevelStats,
    current: LevelStats,
    predicted_distance: Fraction,
    previous_lambda: float,
    params: TowerParameters,
) -> List[PropertyCheck]:
    level = current.level
    prev_bound = previous.cheeger_upper_bound
    if prev_bound is None:
        prev_bound = previous.cheeger_exact
    checks = [
        tracker.record(
            "girth grows in G",
            current.girth_g is None or (previous.girth_g is not None and current.girth_g > previous.girth_g),
            {"level": level, "before": previous.girth_g, "after": current.girth_g},
        ),
        tracker.record(
            "girth grows in K",
            current.girth_k is None or (previous.girth_k is not None and current.girth_k > previous.girth_k),
            {"level": level, "before": previous.girth_k, "after": current.girth_k},
        ),
        tracker.record("G connected", current.g_connected, {"level": level}),
        tracker.record(
            "edit distance recount",
            current.edit_distance == predicted_distance,
            {"level": level, "counted": current.edit_distance, "predicted": predicted_distance},
        ),
        tracker.record(
            "edit distance below threshold",
            current.edit_distance < params.max_edit_distance,
            {"level": level, "edit_distance": current.edit_distance, "threshold": params.max_edit_distance},
        ),
        tracker.record(
            "largest component fraction",
            current.largest_component_fraction > params.min_component_fraction,
            {
                "level": level,
                "fraction": current.largest_component_fraction,
                "threshold": params.min_component_fraction,
            },
        ),
        tracker.record(
            "witness crossing",
            current.witness_crossing_g == GLUE_CROSSING,
            {"level": level, "crossing": current.witness_crossing_g},
        ),
        tracker.record(
            "cheeger bound halves",
            prev_bound is None or current.cheeger_upper_bound <= prev_bound / 2,
            {"level": level, "before": prev_bound, "after": current.cheeger_upper_bound},
        ),
    ]
    if current.cheeger_exact is not None:
        checks.append(
            tracker.record(
                "cheeger exact below witness bound",
                current.cheeger_exact <= current.cheeger_upper_bound,
                {"level": level, "exact": current.cheeger_exact, "bound": current.cheeger_upper_bound},
            )
        )
    if current.largest_component_lambda1 is not None:
        ceiling = max(previous_lambda, params.b)
        checks.append(
            tracker.record(
                "largest component eigenvalue ceiling",
                current.largest_component_lambda1 <= ceiling + EIGEN_TOLERANCE,
                {"level": level, "lambda1": current.largest_component_lambda1, "ceiling": ceiling},
            )
        )
    return checks


def build_glued_towers(
    g1: SLabeledGraph,
    config: TowerConfig,
    tracker: Optional[PropertyCheckTracker] = None,
) -> Tuple[Tower, Tower, GluedTowerReport]:
    """
    Build the towers (G_n) and (K_n) over a common start graph.

    Args:
        g1: Connected start graph of girth at least 2
        config: Seed, thresholds and caps
        tracker: Receives the property checks (global tracker by default)

    Returns:
        (g_tower, k_tower, report)

    Raises:
        DisconnectedGraphError: g1 is not connected
        GirthTooSmallError: g1 has a loop
        CapExceededError: the next level would exceed config.max_vertices
        RetriesExhaustedError: no acceptable lift pair within config.max_tries
    """
    tracker = tracker or get_tracker()
    view = undirected_view(g1)
    components = connected_components(view)
    if len(components) != 1:
        raise DisconnectedGraphError(len(components))
    if girth(view) < 2:
        raise GirthTooSmallError(girth(view))
    if not 0 <= config.glue_letter < g1.k:
        raise ValueError(f"glue letter {config.glue_letter} outside 0..{g1.k - 1}")

    params = TowerParameters.from_config(config, g1.k)
    stream = SeedStream(config.seed)
    logger.info(
        f"Glued towers from {g1.n} vertices: d={params.d}, b={params.b:.6f}, "
        f"d_e < {params.max_edit_distance}, fraction > {params.min_component_fraction}"
    )

    stats, k_components = _level_stats(1, g1, g1, params)
    levels = [stats]
    checks: List[PropertyCheck] = []
    g_levels, g_maps = [g1], []
    k_levels, k_maps = [g1], []

    for level in range(2, config.levels + 2):
        g, k = g_levels[-1], k_levels[-1]
        largest = len(k_components.groups[k_components.largest])
        level_stream = stream.child(level)
        first_g, first_k = _sample_pair(
            g, k, 1, k_components, params, level_stream.child(0), config.max_tries
        )
        depth = _second_depth(
            g.n, largest, stats.edit_distance, params, config.max_vertices, first_g.degree
        )
        second_g, second_k = _sample_pair(
            g, k, depth, k_components, params, level_stream.child(1), config.max_tries
        )

        x = _glue_vertex(g, k, config.glue_letter)
        p1 = int(np.argmax(first_g.proj == x))
        p2 = int(np.argmax(second_g.proj == x))
        g_map = glue(first_g, second_g, config.glue_letter, p1, p2)
        k_map = disjoint_union_cover(first_k, second_k)

        predicted = stats.edit_distance + Fraction(2 * GLUE_CROSSING, g_map.total.n)
        previous, previous_lambda = stats, max(k_components.lambdas)
        stats, k_components = _level_stats(
            level,
            g_map.total,
            k_map.total,
            params,
            first_degree=first_g.degree,
            second_degree=second_g.degree,
            witness=range(first_g.total.n),
        )
        checks.extend(_record_level_checks(tracker, previous, stats, predicted, previous_lambda, params))

        levels.append(stats)
        g_levels.append(g_map.total)
        g_maps.append(g_map)
        k_levels.append(k_map.total)
        k_maps.append(k_map)
        logger.info(
            f"Level {level}: {g_map.total.n} vertices, sheets ({first_g.degree}, {second_g.degree}), "
            f"d_e={stats.edit_distance}, Ch(G) <= {stats.cheeger_upper_bound}"
        )

    report = GluedTowerReport(
        d=params.d,
        b=params.b,
        delta=params.delta,
        max_edit_distance=params.max_edit_distance,
        min_component_fraction=params.min_component_fraction,
        seed=config.seed,
        levels=levels,
        checks=checks,
    )
    g_tower = Tower(levels=tuple(g_levels), maps=tuple(g_maps))
    k_tower = Tower(levels=tuple(k_levels), maps=tuple(k_maps))
    return g_tower, k_tower, report
