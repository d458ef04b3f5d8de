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
Index-2 subgroups that destroy expansion.

From a transitive action of F_2 = <x1, x2> on n points, build an action of
F_4 = <x1, x2, t, c> on two sheets: x1 and x2 act on each sheet as before,
t swaps the sheets, and c is the 3-cycle (e1, e2, e2·t) with e1, e2 the
vertices 0 and 1 of sheet 0. Let H be the kernel of the map to C2 sending
t to the generator and the other letters to 1. In the action of H's
Nielsen-Schreier generators the sheet-0 copy is left by exactly four edges,
so expansion drops to 4/n while the base family may expand.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import List

import numpy as np

from core.errors import InvariantViolation, NotTransitiveError, ShapeMismatchError, TooSmallError
from core.models.audits import BadFamilyReport
from labeled_graph.graph import (
    SLabeledGraph,
    build_graph,
    is_transitive,
    orbit_words,
    word_permutation,
)
from labeled_graph.words import Alphabet, parse_word
from spectral.expansion import crossing_edges
from subgroups.restriction import restrict_to_subgroup, word_action_graph
from subgroups.subgroup import GeneratorSet, SubgroupRep, schreier_machinery

logger = logging.getLogger(__name__)

BAD_FAMILY_ALPHABET = Alphabet(("x1", "x2", "t", "c"))
EXPECTED_CROSSING = 4
MIN_BASE = 3


@dataclass(frozen=True, eq=False)
class BadFamilyMember:
    """
    One member of the bad family.

    Attributes:
        base: The two-letter base action on n points
        graph: Four-letter action on 2n points, sheet s holding v + s*n
        subgroup: H, the index-2 kernel
        generators: Nielsen-Schreier words T of H
        t_graph: graph acted on by the words of T
        witness: Sheet-0 vertices
        crossing: T-edges leaving the witness
        ch_bound: crossing / n
        stabilizer: Stabilizer of e2 in the four-letter action
        report: Serializable summary
    """

    base: SLabeledGraph
    graph: SLabeledGraph
    subgroup: SubgroupRep
    generators: GeneratorSet
    t_graph: SLabeledGraph
    witness: List[int]
    crossing: int
    ch_bound: Fraction
    stabilizer: SubgroupRep
    report: BadFamilyReport


def kernel_of_sheet_swap() -> SubgroupRep:
    """H: t swaps two points, every other letter fixes them."""
    identity = [0, 1]
    return SubgroupRep(action=build_graph(2, BAD_FAMILY_ALPHABET, [identity, identity, [1, 0], identity]))


def doubled_action(base: SLabeledGraph) -> SLabeledGraph:
    """
    Raises:
        ShapeMismatchError: base does not have exactly two letters
        TooSmallError: base has fewer than 3 points
    """
    if base.k != 2:
        raise ShapeMismatchError(f"base action needs 2 letters, has {base.k}")
    n = base.n
    if n < MIN_BASE:
        raise TooSmallError(n, MIN_BASE)

    sheets = np.arange(2 * n)
    local = sheets % n
    offset = sheets - local
    x1 = base.perms[0][local] + offset
    x2 = base.perms[1][local] + offset
    t = (sheets + n) % (2 * n)
    c = sheets.copy()
    e1, e2, e2t = 0, 1, 1 + n
    c[e1], c[e2], c[e2t] = e2, e2t, e1
    return build_graph(2 * n, BAD_FAMILY_ALPHABET, [x1, x2, t, c])


def _relations_hold(graph: SLabeledGraph) -> bool:
    pairs = [("x1", "t*x1*t^-1"), ("x2", "t*x2*t^-1"), ("t*t", "e")]
    for left, right in pairs:
        a = word_permutation(graph, parse_word(left, BAD_FAMILY_ALPHABET))
        b = word_permutation(graph, parse_word(right, BAD_FAMILY_ALPHABET))
        if not np.array_equal(a, b):
            return False
    return True


def build_bad_family_member(base: SLabeledGraph) -> BadFamilyMember:
    """
    Build the four-letter action over base and audit its witness cut.

    Raises:
        NotTransitiveError: base is not transitive
        TooSmallError: base has fewer than 3 points
        InvariantViolation: the witness is not left by exactly 4 edges or
            the conjugation relations fail
    """
    if not is_transitive(base):
        order, _ = orbit_words(base, 0)
        raise NotTransitiveError(len(order), base.n)

    graph = doubled_action(base)
    n = base.n
    subgroup = kernel_of_sheet_swap()
    _, generators = schreier_machinery(subgroup.action, subgroup.basepoint)

    t_graph = word_action_graph(graph, generators.words)
    witness = list(range(n))
    crossing = crossing_edges(t_graph, witness)
    relations = _relations_hold(graph)
    restricted = restrict_to_subgroup(graph, subgroup, generators, v0=1)

    passed = crossing == EXPECTED_CROSSING and relations
    report = BadFamilyReport(
        base_vertices=n,
        vertices=2 * n,
        generators=generators.format(),
        crossing_count=crossing,
        ch_bound=Fraction(crossing, n),
        relations_hold=relations,
        restricted_vertices=restricted.n,
        passed=passed,
    )
    if not passed:
        raise InvariantViolation(
            "bad family witness",
            {"crossing": crossing, "expected": EXPECTED_CROSSING, "relations_hold": relations},
        )

    logger.info(f"Bad family member over {n} points: witness bound {report.ch_bound}")
    return BadFamilyMember(
        base=base,
        graph=graph,
        subgroup=subgroup,
        generators=generators,
        t_graph=t_graph,
        witness=witness,
        crossing=crossing,
        ch_bound=Fraction(crossing, n),
        stabilizer=SubgroupRep(action=graph, basepoint=1),
        report=report,
    )
