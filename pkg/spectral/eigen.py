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
Adjacency spectra of undirected multigraphs.

A loop adds 2 to the diagonal, so a d-regular view has top eigenvalue d.
Eigenvalues come from numpy's dense symmetric solver and are reported
rounded to 1e-9.
"""

import logging
from typing import Union

import numpy as np

from core.errors import InvariantViolation, SizeGuardError
from core.models.reports import SpectrumReport
from labeled_graph.graph import SLabeledGraph
from labeled_graph.multigraph import Multigraph, undirected_view

logger = logging.getLogger(__name__)

SPECTRUM_LIMIT = 4096
ROUND_DIGITS = 9
TRACE_TOLERANCE = 1e-6


def _as_multigraph(graph: Union[Multigraph, SLabeledGraph]) -> Multigraph:
    return undirected_view(graph) if isinstance(graph, SLabeledGraph) else graph


def adjacency_matrix(graph: Union[Multigraph, SLabeledGraph]) -> np.ndarray:
    return _as_multigraph(graph).adjacency_counts().astype(float)


def eigenvalues(graph: Union[Multigraph, SLabeledGraph]) -> np.ndarray:
    """
    Unrounded eigenvalues in descending order.

    Raises:
        SizeGuardError: more than 4096 vertices
    """
    m = _as_multigraph(graph)
    if m.n > SPECTRUM_LIMIT:
        raise SizeGuardError("spectrum", m.n, SPECTRUM_LIMIT)
    return np.linalg.eigvalsh(m.adjacency_counts().astype(float))[::-1]


def check_trace_identities(m: Multigraph, values: np.ndarray) -> None:
    """
    Sum of eigenvalues = trace(A), sum of squares = trace(A^2).

    Raises:
        InvariantViolation: either sum is off by more than 1e-6
    """
    counts = m.adjacency_counts()
    trace = int(np.trace(counts))
    trace_sq = int(np.sum(counts * counts))
    if abs(float(values.sum()) - trace) > TRACE_TOLERANCE * max(1, m.n):
        raise InvariantViolation("spectrum trace", {"sum": float(values.sum()), "trace": trace})
    if abs(float(np.dot(values, values)) - trace_sq) > TRACE_TOLERANCE * max(1, trace_sq):
        raise InvariantViolation(
            "spectrum trace of square",
            {"sum_squares": float(np.dot(values, values)), "trace_square": trace_sq},
        )


def _clean(value: float) -> float:
    return float(np.round(value, ROUND_DIGITS)) + 0.0


def spectrum(graph: Union[Multigraph, SLabeledGraph], check: bool = False) -> SpectrumReport:
    """
    Adjacency spectrum report.

    Args:
        graph: Multigraph or labeled graph (its undirected view is used)
        check: Verify the trace identities before reporting

    Raises:
        SizeGuardError: more than 4096 vertices
    """
    m = _as_multigraph(graph)
    values = eigenvalues(m)
    if check:
        check_trace_identities(m, values)

    rounded = [_clean(v) for v in values]
    lambda1 = rounded[1] if m.n > 1 else None
    return SpectrumReport(
        n=m.n,
        eigenvalues=rounded,
        lambda0=rounded[0],
        lambda1=lambda1,
        lambda_minus=rounded[-1],
        gap=_clean(values[0] - values[1]) if m.n > 1 else None,
    )


def second_eigenvalue(graph: Union[Multigraph, SLabeledGraph]) -> float:
    """lambda1, or -inf for a single vertex."""
    values = eigenvalues(graph)
    return float(values[1]) if values.size > 1 else float("-inf")
