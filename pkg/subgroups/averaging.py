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
Averaging over right translates in a finite group.

For A, B ⊆ G the mean of mu(Ag ∩ B) over g ∈ G equals mu(A)mu(B). A greedy
choice of translates therefore covers at least a mu(A) fraction of what is
still uncovered at every step.
"""

import logging
import math
from fractions import Fraction
from typing import List, Sequence

import numpy as np

from core.errors import OutOfRangeError
from core.models.reports import AveragingReport, AveragingSweepReport, TranslateCoverReport
from subgroups.groups import FiniteGroup

logger = logging.getLogger(__name__)

SWEEP_BLOCK = 256


def _check_subset(group: FiniteGroup, subset: Sequence[int]) -> List[int]:
    for x in subset:
        if not 0 <= x < group.order:
            raise OutOfRangeError(x, group.order)
    return sorted(set(int(x) for x in subset))


def averaging_identity_check(
    group: FiniteGroup,
    a: Sequence[int],
    b: Sequence[int],
) -> AveragingReport:
    """
    Exact mean of |Ag ∩ B|/|G| over all g.

    Raises:
        OutOfRangeError: an element is not in the group
    """
    a = _check_subset(group, a)
    b = _check_subset(group, b)
    in_b = np.zeros(group.order, dtype=bool)
    in_b[b] = True
    table = group.table
    total = 0
    for g in range(group.order):
        total += int(np.count_nonzero(in_b[table[a, g]])) if a else 0
    n = group.order
    mean = Fraction(total, n * n)
    product = Fraction(len(a), n) * Fraction(len(b), n)
    return AveragingReport(
        order=n,
        size_a=len(a),
        size_b=len(b),
        mean=mean,
        product=product,
        passed=mean == product,
    )


def averaging_sweep(group: FiniteGroup) -> AveragingSweepReport:
    """
    The averaging identity for every pair of subsets (A, B).

    For each A the translate counts c_A(x) = #{g : x ∈ Ag} are summed over
    B as one integer matrix product, so every pair is compared exactly.
    """
    n = group.order
    subsets = np.arange(1 << n, dtype=np.int64)
    indicator = ((subsets[:, None] >> np.arange(n)[None, :]) & 1).astype(np.int64)
    sizes = indicator.sum(axis=1)

    # x ∈ Ag  iff  x*g^-1 ∈ A
    counts = np.zeros_like(indicator)
    for g in range(n):
        pre = group.table[:, group.inverses[g]]
        counts += indicator[:, pre]

    violations = 0
    for start in range(0, 1 << n, SWEEP_BLOCK):
        block = slice(start, start + SWEEP_BLOCK)
        sums = counts[block] @ indicator.T
        expected = np.outer(sizes[block], sizes)
        violations += int(np.count_nonzero(sums != expected))

    pairs = (1 << n) ** 2
    if violations:
        logger.warning(f"Averaging identity failed on {violations} of {pairs} pairs in {group.name}")
    return AveragingSweepReport(group=group.name, order=n, pairs_checked=pairs, violations=violations)


def greedy_translate_cover(group: FiniteGroup, a: Sequence[int], count: int) -> TranslateCoverReport:
    """
    Choose count translates of A greedily and compare the coverage
    with 1 - (1 - mu(A))^count.

    When count = ceil(1/mu(A)) the coverage must also exceed 1 - 1/e.
    """
    a = _check_subset(group, a)
    if not a:
        raise ValueError("A must be nonempty")
    if count < 0:
        raise ValueError(f"count must be non-negative, got {count}")

    n = group.order
    table = group.table
    covered = np.zeros(n, dtype=bool)
    chosen: List[int] = []
    for _ in range(count):
        gains = [int(np.count_nonzero(~covered[table[a, g]])) for g in range(n)]
        best = int(np.argmax(gains))
        chosen.append(best)
        covered[table[a, best]] = True

    mu = Fraction(len(a), n)
    coverage = Fraction(int(covered.sum()), n)
    lower = 1 - (1 - mu) ** count
    exponential_checked = count == math.ceil(1 / mu)
    exponential_passed = coverage > 1 - 1 / math.e if exponential_checked else None
    return TranslateCoverReport(
        order=n,
        size_a=len(a),
        count=count,
        chosen=chosen,
        coverage=coverage,
        lower_bound=lower,
        passed=coverage >= lower and exponential_passed is not False,
        exponential_bound_checked=exponential_checked,
        exponential_bound_passed=exponential_passed,
    )
