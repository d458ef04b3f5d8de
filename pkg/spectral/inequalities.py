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
Finite checks of spectral inequalities.

- lambda_min >= -d + psi^2/(4d) and psi >= min{c, rc/(2d), r/4}
- the upward variation of a vertex function bounds its spread
- (d - lambda1)/2 <= Ch <= sqrt(2d(d - lambda1))
"""

import logging
import math
from typing import Optional, Sequence

import numpy as np

from core.errors import DisconnectedGraphError, NotRegularError
from core.models.reports import BoundCheckReport, CheegerSandwichReport, UpwardVariationReport
from labeled_graph.multigraph import Multigraph, connected_components
from spectral.bipartite import psi
from spectral.eigen import eigenvalues
from spectral.expansion import edge_cheeger_exact

logger = logging.getLogger(__name__)

EIGEN_SLACK = 1e-6
SANDWICH_SLACK = 1e-9
VARIATION_SLACK = 1e-12


def _require_connected(m: Multigraph) -> None:
    components = connected_components(m)
    if len(components) > 1:
        raise DisconnectedGraphError(len(components))


def _require_regular(m: Multigraph, d: Optional[int]) -> int:
    degrees = m.degrees
    expected = d if d is not None else degrees[0]
    for vertex, degree in enumerate(degrees):
        if degree != expected:
            raise NotRegularError(expected, vertex, degree)
    return expected


def eigenvalue_bound_checks(m: Multigraph, d: Optional[int] = None) -> BoundCheckReport:
    """
    Both bipartiteness/eigenvalue inequalities with exact psi, c and r.

    Raises:
        DisconnectedGraphError: m is disconnected
        NotRegularError: m is not d-regular
        SizeGuardError: more than 14 vertices
    """
    _require_connected(m)
    d = _require_regular(m, d)
    report = psi(m)
    lambda_minus = float(eigenvalues(m)[-1])

    bound = -d + float(report.psi) ** 2 / (4 * d)
    desai_rao_passed = lambda_minus >= bound - EIGEN_SLACK

    candidates = [report.r / 4]
    if report.c is not None:
        candidates.extend([report.c, report.r * report.c / (2 * d)])
    lower = min(candidates)
    psi_passed = report.psi >= lower

    if not (desai_rao_passed and psi_passed):
        logger.warning(
            f"Eigenvalue bound check failed: lambda_min={lambda_minus}, bound={bound}, "
            f"psi={report.psi}, lower={lower}"
        )
    return BoundCheckReport(
        d=d,
        lambda_minus=lambda_minus,
        psi=report.psi,
        c=report.c,
        r=report.r,
        desai_rao_bound=bound,
        desai_rao_passed=desai_rao_passed,
        psi_lower_bound=lower,
        psi_lower_passed=psi_passed,
    )


def upward_variation(m: Multigraph, values: Sequence[float]) -> UpwardVariationReport:
    """
    F(f) = sum over v of max(0, max over neighbours w of f(w) - f(v)).

    Raises:
        DisconnectedGraphError: m is disconnected
    """
    _require_connected(m)
    f = np.asarray(values, dtype=float)
    if f.shape != (m.n,):
        raise ValueError(f"expected {m.n} values, got shape {f.shape}")

    best = f.copy()
    if m.edges:
        edges = np.asarray(m.edges, dtype=np.int64)
        np.maximum.at(best, edges[:, 0], f[edges[:, 1]])
        np.maximum.at(best, edges[:, 1], f[edges[:, 0]])
    value = float(np.sum(best - f))
    spread = float(f.max() - f.min())
    return UpwardVariationReport(
        value=value,
        spread=spread,
        passed=value >= spread - VARIATION_SLACK,
    )


def cheeger_sandwich(m: Multigraph) -> CheegerSandwichReport:
    """
    Exact Ch against its spectral bounds on a connected regular multigraph.

    Raises:
        DisconnectedGraphError: m is disconnected
        NotRegularError: m is not regular
        SizeGuardError: more than 20 vertices
    """
    if m.n < 2:
        raise ValueError("the Cheeger sandwich needs at least two vertices")
    d = _require_regular(m, None)
    cheeger = edge_cheeger_exact(m).value
    lambda1 = float(eigenvalues(m)[1])
    lower = (d - lambda1) / 2
    upper = math.sqrt(max(0.0, 2 * d * (d - lambda1)))
    passed = lower <= float(cheeger) + SANDWICH_SLACK and float(cheeger) <= upper + SANDWICH_SLACK
    return CheegerSandwichReport(
        d=d,
        lambda1=lambda1,
        cheeger=cheeger,
        lower=lower,
        upper=upper,
        passed=passed,
    )
