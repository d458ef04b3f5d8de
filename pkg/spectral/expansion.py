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
Exact expansion constants by exhaustive enumeration.

Ch(G) = min |L(A)|/|A| over 0 < |A| <= n/2, with L(A) the edges leaving A
(loops never leave). h(X, S) = min |AS \\ A|/|A| over the same range, for
a set S of words acting on X or on an invariant domain O ⊆ X. Beyond 20
vertices only witness-based upper bounds are available.
"""

import logging
from fractions import Fraction
from typing import List, Optional, Sequence, Union

import numpy as np

from core.errors import DisconnectedGraphError, DomainNotInvariantError
from core.models.reports import (
    ExpansionKind,
    ExpansionProfile,
    ExpansionReport,
    SmallSetExpansionReport,
)
from labeled_graph.graph import SLabeledGraph, word_permutation
from labeled_graph.multigraph import Multigraph, connected_components, undirected_view
from labeled_graph.words import Word, words_from_letters
from spectral.enumeration import (
    EXHAUSTIVE_LIMIT,
    guard,
    minimum_ratio,
    popcounts,
    subset_images,
    subset_tables,
)
from subgroups.subgroup import GeneratorSet, SubgroupRep

logger = logging.getLogger(__name__)


def crossing_edges(graph: Union[Multigraph, SLabeledGraph], vertices: Sequence[int]) -> int:
    """Number of edges with exactly one endpoint in the given set."""
    m = undirected_view(graph) if isinstance(graph, SLabeledGraph) else graph
    if not m.edges:
        return 0
    inside = np.zeros(m.n, dtype=bool)
    inside[list(vertices)] = True
    edges = np.asarray(m.edges, dtype=np.int64)
    return int(np.count_nonzero(inside[edges[:, 0]] != inside[edges[:, 1]]))


def cut_ratio(graph: Union[Multigraph, SLabeledGraph], vertices: Sequence[int]) -> Fraction:
    """
    crossing / min(|A|, n - |A|): an upper bound on Ch for any proper A.
    """
    n = graph.n
    size = len(set(vertices))
    smaller = min(size, n - size)
    if smaller == 0:
        raise ValueError("cut side must be a proper nonempty subset")
    return Fraction(crossing_edges(graph, vertices), smaller)


def edge_cheeger_exact(m: Multigraph, allow_disconnected: bool = False) -> ExpansionReport:
    """
    Exact edge Cheeger constant with the lexicographically smallest witness.

    Raises:
        SizeGuardError: more than 20 vertices
        DisconnectedGraphError: m is disconnected and allow_disconnected is False
    """
    guard("edge_cheeger_exact", m.n)
    if not allow_disconnected:
        components = connected_components(m)
        if len(components) > 1:
            raise DisconnectedGraphError(len(components))

    tables = subset_tables(m, "edge_cheeger_exact")
    admissible = (tables.popcount >= 1) & (2 * tables.popcount <= m.n)
    value, witness = minimum_ratio(tables.boundary, tables.popcount, admissible)
    return ExpansionReport(
        kind=ExpansionKind.EDGE_CHEEGER,
        value=value,
        witness=witness,
        domain_size=m.n,
    )


def _word_list(g: SLabeledGraph, words: Optional[Sequence[Word]], symmetric: bool) -> List[Word]:
    chosen = list(words) if words is not None else list(words_from_letters(g.alphabet))
    if symmetric:
        chosen = chosen + [w.inverse() for w in chosen]
    return chosen


def set_expansion_exact(
    g: SLabeledGraph,
    words: Optional[Sequence[Word]] = None,
    domain: Optional[Sequence[int]] = None,
    symmetric: bool = True,
) -> ExpansionReport:
    """
    Exact h(O, S) for words acting on an invariant domain.

    Args:
        g: Action the words are evaluated in
        words: The set S (defaults to the letters)
        domain: Invariant vertex subset O (defaults to all vertices)
        symmetric: Add the inverse of every word

    Raises:
        SizeGuardError: |O| > 20
        DomainNotInvariantError: a word maps O outside O
    """
    domain = sorted(set(domain)) if domain is not None else list(range(g.n))
    if not domain:
        raise ValueError("domain must be nonempty")
    guard("set_expansion_exact", len(domain))

    position = np.full(g.n, -1, dtype=np.int64)
    position[domain] = np.arange(len(domain))
    size = len(domain)

    union = np.zeros(1 << size, dtype=np.int64)
    for word in _word_list(g, words, symmetric):
        image = word_permutation(g, word)[domain]
        relabeled = position[image]
        outside = np.nonzero(relabeled < 0)[0]
        if outside.size:
            raise DomainNotInvariantError(word.format(g.alphabet), domain[int(outside[0])])
        union |= subset_images(relabeled)

    masks = np.arange(1 << size, dtype=np.int64)
    pop = popcounts(size)
    gained = pop[union & ~masks]
    admissible = (pop >= 1) & (2 * pop <= size)
    value, witness = minimum_ratio(gained, pop, admissible)
    return ExpansionReport(
        kind=ExpansionKind.SET_EXPANSION,
        value=value,
        witness=[domain[i] for i in witness],
        domain_size=size,
    )


def small_set_expansion_check(
    g: SLabeledGraph,
    sub: SubgroupRep,
    generators: GeneratorSet,
    letters: Optional[Sequence[Word]] = None,
) -> SmallSetExpansionReport:
    """
    |AT \\ A|/|A| >= h(X, S)/k for every A with 0 < |A| <= n/(2k).

    T is taken symmetric; S defaults to the letters of g.

    Raises:
        SizeGuardError: more than 20 vertices
    """
    guard("small_set_expansion_check", g.n)
    k = sub.index
    h = set_expansion_exact(g, letters).value
    bound = h / k if h is not None else None

    union = np.zeros(1 << g.n, dtype=np.int64)
    for word in generators.symmetric():
        union |= subset_images(word_permutation(g, word))
    masks = np.arange(1 << g.n, dtype=np.int64)
    pop = popcounts(g.n)
    gained = pop[union & ~masks]
    admissible = (pop >= 1) & (2 * k * pop <= g.n)
    checked = int(np.count_nonzero(admissible))

    min_ratio, witness = minimum_ratio(gained, pop, admissible)
    violations = 0
    if bound is not None and checked:
        below = admissible & (gained * bound.denominator < pop * bound.numerator)
        violations = int(np.count_nonzero(below))
    if violations:
        logger.warning(f"Small-set expansion fails on {violations} sets (n={g.n}, k={k})")
    return SmallSetExpansionReport(
        n=g.n,
        k=k,
        h=h,
        bound=bound,
        min_ratio=min_ratio,
        witness=witness,
        sets_checked=checked,
        violations=violations,
        passed=violations == 0,
    )


def tower_expansion_profile(
    levels: Sequence[SLabeledGraph],
    words: Optional[Sequence[Word]] = None,
) -> ExpansionProfile:
    """
    Exact h(level, S) along a covering tower and its running infimum.

    Levels above the exhaustive limit end the profile.
    """
    values: List[Optional[Fraction]] = []
    for level in levels:
        if level.n > EXHAUSTIVE_LIMIT:
            logger.info(f"Expansion profile stops at a level with {level.n} vertices")
            break
        values.append(set_expansion_exact(level, words).value)

    running: List[Optional[Fraction]] = []
    current: Optional[Fraction] = None
    for value in values:
        if value is not None and (current is None or value < current):
            current = value
        running.append(current)

    non_increasing = all(
        later is None and earlier is None
        or (later is not None and (earlier is None or later <= earlier))
        for earlier, later in zip(values, values[1:])
    )
    return ExpansionProfile(values=values, running_infimum=running, non_increasing=non_increasing)
