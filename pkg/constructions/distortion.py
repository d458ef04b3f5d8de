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
Expansion distortion under passing to a finite-index subgroup.

For a group G with generators S and a subgroup H of index k of the free
group, the Nielsen-Schreier words T act on the orbit O of the identity.
h(O, T) stays above min{h(G, S)/k^2, 1} / (8 k^(3 - log2 3)).
"""

import logging
import math
from fractions import Fraction
from typing import Iterable, List, Optional, Sequence

from core.errors import AlphabetMismatchError
from core.models.audits import DistortionReport
from covers.rng import SeedLike, as_stream
from spectral.expansion import set_expansion_exact
from subgroups.groups import FiniteGroup
from subgroups.restriction import word_orbit
from subgroups.subgroup import SubgroupRep, cyclic_quotient, random_transitive_action, schreier_machinery

logger = logging.getLogger(__name__)


def distortion_bound(h_group: Optional[Fraction], k: int) -> float:
    """min{h/k^2, 1} / (8 k^(3 - log2 3)); an infinite h counts as 1."""
    capped = 1.0 if h_group is None else min(float(h_group) / k**2, 1.0)
    return capped / (8 * k ** (3 - math.log2(3)))


def distortion_audit(group: FiniteGroup, sub: SubgroupRep) -> DistortionReport:
    """
    Compare h(O, T) with the distortion bound.

    Raises:
        AlphabetMismatchError: sub is not a subgroup of the group's free group
        SizeGuardError: |G| or |O| above the exhaustive limit
    """
    if sub.alphabet != group.action.alphabet:
        raise AlphabetMismatchError(group.action.alphabet, sub.alphabet)

    _, generators = schreier_machinery(sub.action, sub.basepoint)
    orbit = word_orbit(group.action, generators.words, 0)
    h_group = set_expansion_exact(group.action).value
    orbit_report = set_expansion_exact(group.action, generators.words, domain=orbit)
    bound = distortion_bound(h_group, sub.index)
    h_orbit = orbit_report.value
    passed = h_orbit is None or float(h_orbit) > bound

    if not passed:
        logger.warning(f"Distortion bound fails on {group.name}, index {sub.index}: h(O,T)={h_orbit}")
    return DistortionReport(
        group=group.name,
        order=group.order,
        k=sub.index,
        generators=generators.format(),
        orbit_size=len(orbit),
        h_group=h_group,
        h_orbit=h_orbit,
        h_orbit_witness=orbit_report.witness,
        bound=bound,
        passed=passed,
    )


def standard_subgroup(group: FiniteGroup, k: int) -> SubgroupRep:
    """Kernel of F_S -> Z/k sending every letter to 1."""
    return cyclic_quotient(group.action.alphabet, [1] * group.action.k, k)


def distortion_sweep(
    groups: Iterable[FiniteGroup],
    indices: Sequence[int] = (2, 3),
    random_instances: int = 0,
    seed: SeedLike = 0,
) -> List[DistortionReport]:
    """
    Audit the standard index-k subgroup of every group, then random
    subgroups of random groups from the same list.
    """
    groups = list(groups)
    reports = [distortion_audit(g, standard_subgroup(g, k)) for g in groups for k in indices]

    stream = as_stream(seed)
    for i in range(random_instances):
        rng = stream.child(i).generator()
        group = groups[int(rng.integers(len(groups)))]
        k = int(indices[int(rng.integers(len(indices)))])
        sub = random_transitive_action(group.action.alphabet, k, rng)
        reports.append(distortion_audit(group, sub))

    failed = sum(1 for r in reports if not r.passed)
    logger.info(f"Distortion sweep: {len(reports)} instances, {failed} failed")
    return reports
