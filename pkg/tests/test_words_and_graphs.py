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
Tests for alphabets, words, labeled graphs and their undirected views.
"""

import math
from fractions import Fraction

import numpy as np
import pytest

from cli.graph_io import k4_with_matching
from core.errors import LengthMismatchError, NonBijectionError, OutOfRangeError, ParseError
from covers.lifts import lift, random_cover_spec
from labeled_graph.graph import (
    apply_word,
    bouquet,
    build_graph,
    cycle_graph,
    cyclic_action,
    disjoint_union,
    edit_distance,
    is_transitive,
    orbit_words,
    replace_letter,
    word_permutation,
)
from labeled_graph.multigraph import (
    Multigraph,
    connected_components,
    girth,
    graph_stats,
    induced_subgraph,
    undirected_view,
)
from labeled_graph.words import Alphabet, Word, parse_word, power
from tests.conftest import random_labeled_graph


def random_word(k: int, rng: np.random.Generator, max_length: int = 6) -> Word:
    length = int(rng.integers(0, max_length))
    return Word(tuple((int(rng.integers(k)), int(rng.choice([1, -1]))) for _ in range(length)))


class TestWords:
    """Test alphabets and free group words."""

    def test_standard_alphabet(self):
        """Test the s1..sk alphabet."""
        alphabet = Alphabet.standard(3)
        assert list(alphabet) == ["s1", "s2", "s3"]
        assert alphabet.index("s2") == 1

    def test_invalid_alphabets(self):
        """Test duplicate and reserved letter names are rejected."""
        with pytest.raises(ValueError):
            Alphabet(("a", "a"))
        with pytest.raises(ValueError):
            Alphabet(("a^-1",))
        with pytest.raises(ValueError):
            Alphabet(("a", "e"))
        with pytest.raises(ValueError):
            Alphabet(())

    def test_format(self):
        """Test word rendering."""
        alphabet = Alphabet(("x1", "x2", "t"))
        assert Word(((0, 1), (2, -1))).format(alphabet) == "x1*t^-1"
        assert Word().format(alphabet) == "e"

    def test_reduce(self):
        """Test free reduction cancels adjacent inverse pairs."""
        w = Word(((0, 1), (2, 1), (2, -1), (0, -1), (1, 1)))
        assert w.reduce() == Word.letter(1)
        assert (w * w.inverse()).reduce().is_identity

    def test_parse_word(self):
        """Test parsing the rendered format."""
        alphabet = Alphabet(("x1", "x2", "t", "c"))
        w = parse_word("t*c*t^-1", alphabet)
        assert w == Word(((2, 1), (3, 1), (2, -1)))
        assert parse_word("e", alphabet).is_identity

    def test_parse_unknown_letter(self):
        """Test an unknown letter is a parse error."""
        with pytest.raises(ParseError):
            parse_word("x1*y", Alphabet(("x1",)))

    def test_power(self):
        """Test powers and negative powers."""
        a = Word.letter(0)
        assert len(power(a, 3)) == 3
        assert power(a, -2) == Word(((0, -1), (0, -1)))


class TestLabeledGraph:
    """Test S-labeled graph construction and actions."""

    def test_build_validates_length(self):
        """Test a short permutation is rejected."""
        with pytest.raises(LengthMismatchError):
            build_graph(3, ["a"], [[1, 0]])

    def test_build_validates_range(self):
        """Test an image outside the vertex set is rejected."""
        with pytest.raises(OutOfRangeError):
            build_graph(3, ["a"], [[1, 2, 3]])

    def test_build_validates_bijection(self):
        """Test a non-injective letter is rejected."""
        with pytest.raises(NonBijectionError):
            build_graph(3, ["a"], [[1, 1, 0]])

    def test_build_from_mapping(self):
        """Test permutations given by letter name."""
        g = build_graph(3, ["a", "b"], {"b": [0, 1, 2], "a": [1, 2, 0]})
        assert g.perm("a").tolist() == [1, 2, 0]
        assert g.perm("b").tolist() == [0, 1, 2]

    def test_equality_is_by_content(self):
        """Test two graphs built separately compare equal."""
        assert cycle_graph(5) == cycle_graph(5)
        assert cycle_graph(5) != cycle_graph(6)
        assert hash(cycle_graph(5)) == hash(cycle_graph(5))

    def test_apply_word(self):
        """Test the right action of a word."""
        g = cycle_graph(5)
        w = parse_word("a*a*a^-1", g.alphabet)
        assert apply_word(g, 0, w) == 1
        assert apply_word(g, 0, parse_word("a^-1", g.alphabet)) == 4

    def test_word_permutation(self):
        """Test word permutations compose left to right."""
        g = cyclic_action(7, [1, 3])
        w = parse_word("s1*s2^-1", g.alphabet)
        assert word_permutation(g, w).tolist() == [(x + 1 - 3) % 7 for x in range(7)]

    def test_edit_distance(self):
        """Test each differing slot counts twice."""
        g = cyclic_action(4, [1, 1])
        h = replace_letter(g, 1, [2, 1, 3, 0])
        assert edit_distance(g, g) == 0
        assert edit_distance(g, h) == Fraction(1)

    def test_edit_distance_three_cycle(self):
        """Test a 3-cycle is at distance 2 from the identity action."""
        identity = build_graph(3, ["a"], [[0, 1, 2]])
        assert edit_distance(cycle_graph(3), identity) == Fraction(2)

    def test_edit_distance_is_a_metric(self, rng):
        """Test symmetry and the triangle inequality on random triples."""
        for _ in range(100):
            n = int(rng.integers(1, 8))
            f, g, h = (random_labeled_graph(n, 2, rng) for _ in range(3))
            assert edit_distance(f, f) == 0
            assert edit_distance(f, g) == edit_distance(g, f)
            assert edit_distance(f, h) <= edit_distance(f, g) + edit_distance(g, h)

    def test_edit_distance_survives_shared_lift(self, rng):
        """Test lifting both graphs with one sheet table keeps the distance."""
        for _ in range(50):
            n, d = int(rng.integers(1, 7)), int(rng.integers(1, 4))
            g, h = random_labeled_graph(n, 2, rng), random_labeled_graph(n, 2, rng)
            spec = random_cover_spec(g, d, rng)
            assert edit_distance(lift(g, spec).total, lift(h, spec).total) == edit_distance(g, h)

    def test_apply_word_is_a_homomorphism(self, rng):
        """Test applying u*v equals applying u and then v."""
        for _ in range(200):
            n, k = int(rng.integers(1, 9)), int(rng.integers(1, 4))
            g = random_labeled_graph(n, k, rng)
            u, v = random_word(k, rng), random_word(k, rng)
            x = int(rng.integers(n))
            assert apply_word(g, x, u * v) == apply_word(g, apply_word(g, x, u), v)
            assert apply_word(g, apply_word(g, x, u), u.inverse()) == x

    def test_disjoint_union(self):
        """Test the second summand is shifted."""
        u = disjoint_union(cycle_graph(2), cycle_graph(2))
        assert u.perms[0].tolist() == [1, 0, 3, 2]
        assert not is_transitive(u)

    def test_orbit_words(self):
        """Test breadth-first words try a letter before its inverse."""
        g = cycle_graph(4)
        order, reps = orbit_words(g, 0)
        assert order == [0, 1, 3, 2]
        assert reps[3].format(g.alphabet) == "a^-1"
        assert reps[2].format(g.alphabet) == "a*a"

    def test_bouquet(self):
        """Test the one-vertex graph."""
        g = bouquet(2)
        assert g.n == 1
        assert list(g.alphabet) == ["s1", "s2"]


class TestMultigraph:
    """Test undirected views and multigraph invariants."""

    def test_undirected_view(self):
        """Test one edge per slot."""
        m = undirected_view(cycle_graph(3))
        assert m.edges == ((0, 1), (0, 2), (1, 2))

    def test_equality_ignores_edge_order(self):
        """Test edges are stored canonically."""
        assert Multigraph.from_edges(3, [(1, 0), (2, 1)]) == Multigraph.from_edges(3, [(1, 2), (0, 1)])

    def test_loops_count_twice(self):
        """Test loop degrees and adjacency."""
        m = undirected_view(bouquet(2))
        assert m.degrees == [4]
        assert m.adjacency_counts().tolist() == [[4]]

    def test_girth_conventions(self):
        """Test loops, parallel pairs, cycles and forests."""
        assert girth(undirected_view(bouquet(1))) == 1
        assert girth(undirected_view(k4_with_matching())) == 2
        assert girth(undirected_view(cycle_graph(5))) == 5
        assert girth(Multigraph.from_edges(3, [(0, 1), (1, 2)])) == math.inf

    def test_components(self):
        """Test components are sorted by smallest vertex."""
        m = Multigraph.from_edges(5, [(3, 4), (0, 2)])
        assert connected_components(m) == [[0, 2], [1], [3, 4]]

    def test_induced_subgraph(self):
        """Test relabeling in the given order."""
        m = undirected_view(cycle_graph(5))
        sub = induced_subgraph(m, [2, 3, 4])
        assert sub.n == 3
        assert sub.edges == ((0, 1), (1, 2))

    def test_graph_stats(self):
        """Test the stats summary of a cycle."""
        stats = graph_stats(undirected_view(cycle_graph(5)))
        assert stats.n == 5
        assert stats.edges == 5
        assert stats.girth == 5
        assert stats.regular is True
        assert stats.degree == 2
        assert stats.components == [[0, 1, 2, 3, 4]]

    def test_k4_with_matching(self):
        """Test the named start graph is K4 plus a matching."""
        edges = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3), (0, 1), (2, 3)]
        assert undirected_view(k4_with_matching()) == Multigraph.from_edges(4, edges)
        assert np.all(np.array(undirected_view(k4_with_matching()).degrees) == 4)
