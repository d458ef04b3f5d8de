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
Tests for subgroups as pointed transitive actions.

Covers transversals, Nielsen-Schreier generators, restriction to a
subgroup and intersections through product orbits.
"""

import numpy as np
import pytest

from constructions.bad_family import kernel_of_sheet_swap
from core.errors import (
    AlphabetMismatchError,
    IndexCapExceededError,
    NotTransitiveError,
    WordNotInSubgroupError,
)
from covers.rng import SeedStream
from labeled_graph.graph import cycle_graph, cyclic_action, disjoint_union
from labeled_graph.words import Alphabet, Word, parse_word
from subgroups.intersection import intersect_actions, intersection_orbit, product_orbit
from subgroups.restriction import restrict_to_subgroup, word_action_graph, word_orbit
from subgroups.subgroup import (
    GeneratorSet,
    SubgroupRep,
    conjugate,
    cyclic_quotient,
    random_transitive_action,
    schreier_machinery,
    transversal,
)

TWO_LETTERS = Alphabet.standard(2)


@pytest.fixture
def parity_subgroup():
    """Kernel of F_2 -> Z/2 sending both letters to 1."""
    return cyclic_quotient(TWO_LETTERS, [1, 1], 2)


class TestSubgroupRep:
    """Test subgroup representations."""

    def test_index_and_membership(self, parity_subgroup):
        """Test index and word membership."""
        assert parity_subgroup.index == 2
        assert parity_subgroup.contains(parse_word("s1*s2", TWO_LETTERS))
        assert not parity_subgroup.contains(parse_word("s1", TWO_LETTERS))

    def test_requires_transitive_action(self):
        """Test an intransitive action is rejected."""
        with pytest.raises(NotTransitiveError):
            SubgroupRep(action=disjoint_union(cycle_graph(2), cycle_graph(2)))

    def test_cyclic_quotient_must_generate(self):
        """Test weights that miss part of Z/m are rejected."""
        with pytest.raises(NotTransitiveError):
            cyclic_quotient(TWO_LETTERS, [2, 2], 4)

    def test_conjugate_moves_basepoint(self):
        """Test H^w is the stabilizer of basepoint*w."""
        sub = SubgroupRep(action=cycle_graph(5))
        moved = conjugate(sub, parse_word("a*a", sub.alphabet))
        assert moved.basepoint == 2

    def test_random_transitive_action(self):
        """Test sampled actions are transitive of the requested degree."""
        rng = SeedStream(3).generator()
        for k in range(1, 7):
            sub = random_transitive_action(TWO_LETTERS, k, rng)
            assert sub.index == k


class TestSchreierMachinery:
    """Test transversals and Nielsen-Schreier generators."""

    def test_transversal_of_cycle(self):
        """Test shortest representatives."""
        g = cycle_graph(4)
        trans = transversal(g)
        assert [w.format(g.alphabet) for w in trans.reps] == ["e", "a", "a*a", "a^-1"]

    def test_parity_generators(self, parity_subgroup):
        """Test the generators of the parity kernel."""
        _, generators = schreier_machinery(parity_subgroup.action)
        assert generators.format() == ["s2*s1^-1", "s1*s1", "s1*s2"]

    def test_sheet_swap_kernel_generators(self):
        """Test the seven generators of the sheet swap kernel."""
        sub = kernel_of_sheet_swap()
        _, generators = schreier_machinery(sub.action, sub.basepoint)
        assert generators.format() == [
            "x1",
            "x2",
            "c",
            "t*x1*t^-1",
            "t*x2*t^-1",
            "t*t",
            "t*c*t^-1",
        ]

    def test_rank_formula(self):
        """Test an index-k subgroup of F_r has k(r - 1) + 1 free generators."""
        rng = SeedStream(11).generator()
        for r in (1, 2, 3):
            alphabet = Alphabet.standard(r)
            for k in range(1, 8):
                sub = random_transitive_action(alphabet, k, rng)
                _, generators = schreier_machinery(sub.action, sub.basepoint)
                assert len(generators) == k * (r - 1) + 1
                for word in generators:
                    assert sub.contains(word)
                    assert word == word.reduce()

    def test_symmetric_generators(self, parity_subgroup):
        """Test each generator is followed by its inverse."""
        _, generators = schreier_machinery(parity_subgroup.action)
        closed = generators.symmetric()
        assert len(closed) == 2 * len(generators)
        assert closed[1] == closed[0].inverse()


class TestRestriction:
    """Test restriction of an action to a subgroup."""

    def test_word_orbit(self):
        """Test the orbit of a vertex under words."""
        g = cyclic_action(6, [1, 1])
        assert word_orbit(g, [parse_word("s1*s1", g.alphabet)], 0) == [0, 2, 4]

    def test_restrict_to_parity_subgroup(self, parity_subgroup):
        """Test the orbit graph of Z/6 under the parity kernel."""
        g = cyclic_action(6, [1, 1])
        _, generators = schreier_machinery(parity_subgroup.action)
        restricted = restrict_to_subgroup(g, parity_subgroup, generators)
        assert restricted.n == 3
        assert list(restricted.alphabet) == ["t1", "t2", "t3"]
        assert [p.tolist() for p in restricted.perms] == [[0, 1, 2], [1, 2, 0], [1, 2, 0]]

    def test_word_outside_subgroup(self, parity_subgroup):
        """Test a word moving the basepoint is rejected."""
        g = cyclic_action(6, [1, 1])
        outside = GeneratorSet(words=(Word.letter(0),), alphabet=TWO_LETTERS)
        with pytest.raises(WordNotInSubgroupError):
            restrict_to_subgroup(g, parity_subgroup, outside)

    def test_alphabet_mismatch(self, parity_subgroup):
        """Test an action over other letters is rejected."""
        _, generators = schreier_machinery(parity_subgroup.action)
        with pytest.raises(AlphabetMismatchError):
            restrict_to_subgroup(cycle_graph(4), parity_subgroup, generators)

    def test_word_action_graph(self):
        """Test words become letters t1..tm."""
        g = cycle_graph(5)
        h = word_action_graph(g, [parse_word("a*a", g.alphabet)])
        assert list(h.alphabet) == ["t1"]
        assert h.perms[0].tolist() == [2, 3, 4, 0, 1]


class TestIntersection:
    """Test intersections of subgroups."""

    def test_coprime_indices_multiply(self, parity_subgroup):
        """Test the kernels of Z/2 and Z/3 meet in index 6."""
        third = cyclic_quotient(TWO_LETTERS, [1, 1], 3)
        result = intersect_actions(parity_subgroup, third)
        assert result.index == 6
        word = parse_word("s1*s2*s1*s2*s1*s2", TWO_LETTERS)
        assert result.contains(word)

    def test_product_orbit_coordinates(self, parity_subgroup):
        """Test vertex 0 is the starting pair and coordinates follow the letters."""
        third = cyclic_quotient(TWO_LETTERS, [1, 1], 3)
        orbit = product_orbit([parity_subgroup.action, third.action], [0, 0])
        assert orbit.coords[0].tolist() == [0, 0]
        for v in range(orbit.graph.n):
            w = orbit.graph.image(v, 0)
            assert orbit.coords[w].tolist() == [
                (orbit.coords[v][0] + 1) % 2,
                (orbit.coords[v][1] + 1) % 3,
            ]

    def test_index_cap(self, parity_subgroup):
        """Test the cap stops the orbit search."""
        third = cyclic_quotient(TWO_LETTERS, [1, 1], 3)
        with pytest.raises(IndexCapExceededError):
            intersect_actions(parity_subgroup, third, cap=4)

    def test_self_intersection(self, parity_subgroup):
        """Test H ∩ H = H."""
        assert intersect_actions(parity_subgroup, parity_subgroup).index == 2

    def test_alphabet_mismatch(self, parity_subgroup):
        """Test subgroups of different free groups do not intersect."""
        other = SubgroupRep(action=cycle_graph(2))
        with pytest.raises(AlphabetMismatchError):
            intersect_actions(parity_subgroup, other)

    def test_stabilizer_of_basepoint_pair(self):
        """Test the intersection's basepoint is fixed exactly by common words."""
        a = SubgroupRep(action=cyclic_action(4, [1, 2]))
        b = SubgroupRep(action=cyclic_action(3, [1, 0]))
        result = intersect_actions(a, b)
        rng = np.random.default_rng(5)
        for _ in range(50):
            letters = rng.integers(0, 2, size=6)
            signs = rng.choice([1, -1], size=6)
            word = Word(tuple((int(i), int(s)) for i, s in zip(letters, signs)))
            assert result.contains(word) == (a.contains(word) and b.contains(word))

    def test_intersection_orbit_index_bounds(self):
        """Test max(i_a, i_b) <= index <= i_a * i_b on random transitive actions."""
        rng = np.random.default_rng(11)
        for _ in range(40):
            a = random_transitive_action(TWO_LETTERS, int(rng.integers(1, 7)), rng)
            b = random_transitive_action(TWO_LETTERS, int(rng.integers(1, 7)), rng)
            orbit = intersection_orbit(a, b)
            assert max(a.index, b.index) <= orbit.graph.n <= a.index * b.index
            assert orbit.coords[0].tolist() == [a.basepoint, b.basepoint]
