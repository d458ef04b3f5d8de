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
Tests for covers: lifts, verification, girth boosting, gluing and the
Friedman sweep.
"""

import math
from fractions import Fraction

import numpy as np
import pytest

from cli.graph_io import k4_with_matching
from core.errors import (
    BaseMismatchError,
    FiberMismatchError,
    GirthTooSmallError,
    NotSurjectiveError,
    ShapeMismatchError,
)
from covers.friedman import friedman_ceiling, friedman_sweep, ramanujan_window
from covers.girth import cycle_killing_spec, girth_boosting_cover, graph_girth, shortest_cycles
from covers.gluing import GLUE_CROSSING, default_glue_points, glue, glue_cut, glue_cut_bound
from covers.lifts import (
    CoverSpec,
    disjoint_union_cover,
    iterated_random_cover,
    lift,
    random_cover,
)
from covers.rng import SeedStream
from covers.verify import new_eigenvalues, verify_covering
from labeled_graph.graph import bouquet, cycle_graph, cyclic_action
from labeled_graph.multigraph import is_connected, undirected_view
from spectral.bipartite import bipartite_ratio, independence_ratio
from spectral.eigen import eigenvalues
from spectral.expansion import crossing_edges, edge_cheeger_exact
from tests.conftest import random_connected_graph, random_labeled_graph


class TestSeedStream:
    """Test reproducible seed streams."""

    def test_same_stream_same_cover(self):
        """Test a stream always yields the same lift."""
        g = cycle_graph(5)
        assert random_cover(g, 3, SeedStream(5)).total == random_cover(g, 3, 5).total

    def test_child_paths(self):
        """Test child streams extend the path."""
        stream = SeedStream(5).child(1).child(2)
        assert stream == SeedStream(5, (1, 2))
        assert str(stream) == "5/1/2"

    def test_invalid_seeds(self):
        """Test seeds must be 64-bit unsigned."""
        for seed in (-1, 2**64):
            with pytest.raises(ValueError):
                SeedStream(seed)


class TestLifts:
    """Test lifts defined by sheet tables."""

    def test_vertex_numbering(self):
        """Test sheet k over x is vertex x*d + k."""
        cover = random_cover(cycle_graph(4), 3, 1)
        assert cover.proj.tolist() == [x // 3 for x in range(12)]
        assert cover.fiber(2) == [6, 7, 8]
        assert cover.degree == 3

    def test_identity_lift(self):
        """Test the trivial table gives disjoint copies."""
        g = cycle_graph(3)
        cover = lift(g, CoverSpec.identity(1, 3, 2))
        assert cover.total.perms[0].tolist() == [2, 3, 4, 5, 0, 1]
        assert not is_connected(undirected_view(cover.total))

    def test_invalid_table(self):
        """Test table rows must be permutations of the sheets."""
        with pytest.raises(ValueError):
            CoverSpec(d=2, table=np.array([[[0, 0]]]))
        with pytest.raises(ShapeMismatchError):
            lift(cycle_graph(4), CoverSpec.identity(1, 3, 2))

    def test_tower_projection(self):
        """Test the composite projection of an iterated cover."""
        tower = iterated_random_cover(cycle_graph(3), [2, 3, 2], 9)
        assert [level.n for level in tower.levels] == [3, 6, 18, 36]
        top = tower.projection()
        assert verify_covering(top.total, top.base, top.proj) == 0
        assert len(tower.stats()) == 4

    def test_iterated_degrees_must_exceed_one(self):
        """Test degree lists are validated."""
        with pytest.raises(ValueError):
            iterated_random_cover(cycle_graph(3), [], 1)
        with pytest.raises(ValueError):
            iterated_random_cover(cycle_graph(3), [2, 1], 1)

    def test_disjoint_union_cover(self):
        """Test two covers side by side still cover."""
        g = cyclic_action(4, [1, 3])
        union = disjoint_union_cover(random_cover(g, 2, 1), random_cover(g, 3, 2))
        assert union.total.n == 20
        assert verify_covering(union.total, union.base, union.proj) == 0
        with pytest.raises(BaseMismatchError):
            disjoint_union_cover(random_cover(g, 2, 1), random_cover(cycle_graph(4), 2, 1))


class TestVerifyCovering:
    """Test epsilon-covering verification."""

    def test_random_covers_are_exact(self):
        """Test random lifts have epsilon 0."""
        rng = SeedStream(2).generator()
        for trial in range(200):
            g = random_labeled_graph(int(rng.integers(1, 21)), int(rng.integers(1, 4)), rng)
            d = int(rng.integers(1, 9))
            cover = random_cover(g, d, SeedStream(2).child(trial))
            assert cover.total.n == g.n * d
            assert verify_covering(cover.total, g, cover.proj) == 0

    def test_iterated_and_glued_covers_are_exact(self):
        """Test iterated covers and glued covers project with epsilon 0."""
        rng = SeedStream(5).generator()
        for trial in range(50):
            g = random_labeled_graph(int(rng.integers(1, 9)), int(rng.integers(1, 4)), rng)
            degrees = [int(d) for d in rng.integers(2, 4, size=int(rng.integers(1, 4)))]
            top = iterated_random_cover(g, degrees, SeedStream(5).child(trial)).projection()
            assert top.total.n == g.n * math.prod(degrees)
            assert verify_covering(top.total, g, top.proj) == 0

        base = cyclic_action(7, [1, 2])
        for trial in range(50):
            first = random_cover(base, 1 + trial % 3, SeedStream(5).child(100 + trial, 0))
            second = random_cover(base, 1 + trial // 3 % 3, SeedStream(5).child(100 + trial, 1))
            glued = glue(first, second, "s1", *default_glue_points(first, second))
            assert verify_covering(glued.total, base, glued.proj) == 0

    def test_cycle_double_cover(self):
        """Test C4 covers C2 by parity."""
        assert verify_covering(cycle_graph(4), cycle_graph(2), [0, 1, 0, 1]) == 0

    def test_defective_projection(self):
        """Test a projection that breaks labels on half the vertices."""
        assert verify_covering(cycle_graph(4), cycle_graph(2), [0, 0, 1, 1]) == Fraction(1, 2)

    def test_not_surjective(self):
        """Test a projection missing a base vertex."""
        with pytest.raises(NotSurjectiveError):
            verify_covering(cycle_graph(4), cycle_graph(2), [0, 0, 0, 0])


class TestOldEigenvalues:
    """Test the base spectrum reappears in every cover."""

    def test_random_covers(self):
        """Test old eigenvalues match and the counts add up."""
        rng = SeedStream(3).generator()
        for trial in range(100):
            g = random_connected_graph(int(rng.integers(1, 13)), int(rng.integers(1, 3)), rng)
            d = int(rng.integers(1, 5))
            cover = random_cover(g, d, SeedStream(3).child(trial))
            old, new = new_eigenvalues(cover)
            assert len(old) == g.n
            assert len(new) == g.n * (d - 1)
            assert np.allclose(sorted(old, reverse=True), eigenvalues(g), atol=1e-6)


class TestFriedman:
    """Test the random-lift eigenvalue window."""

    def test_window_constants(self):
        """Test the Ramanujan window and ceiling for d = 4."""
        assert math.isclose(ramanujan_window(4), 2 * math.sqrt(3))
        assert ramanujan_window(4) < friedman_ceiling(4) < 4

    def test_bouquet_lifts(self):
        """Test most 50-lifts of a two-letter bouquet have new eigenvalues within 3.9."""
        report = friedman_sweep(bouquet(2), 50, 200, 7, base_name="bouquet2")
        assert report.base_degree == 4
        assert report.fraction >= 0.9
        assert report.passed


class TestGirthBoosting:
    """Test girth-raising covers."""

    def inputs(self):
        rng = SeedStream(4).generator()
        graphs = [bouquet(1), bouquet(2), bouquet(3), cycle_graph(2), cycle_graph(5)]
        graphs += [cyclic_action(6, [1, 1]), k4_with_matching()]
        graphs += [random_connected_graph(int(rng.integers(2, 7)), 2, rng) for _ in range(13)]
        return graphs

    def test_girth_grows(self):
        """Test every input gains girth."""
        for i, g in enumerate(self.inputs()):
            tower = girth_boosting_cover(g, SeedStream(40).child(i), max_vertices=1024)
            assert graph_girth(tower.top) > graph_girth(g)
            top = tower.projection()
            assert verify_covering(top.total, g, top.proj) == 0

    def test_shortest_cycles(self):
        """Test the parallel pairs of K4 plus a matching."""
        assert len(shortest_cycles(k4_with_matching())) == 2
        assert len(shortest_cycles(bouquet(3))) == 3
        assert len(shortest_cycles(cycle_graph(5))) == 1

    def test_cycle_killing_spec(self, rng):
        """Test one 2-cover opening every shortest cycle."""
        for g in (k4_with_matching(), cycle_graph(5), bouquet(2)):
            spec = cycle_killing_spec([g], rng)
            assert spec is not None
            assert graph_girth(lift(g, spec).total) > graph_girth(g)

    def test_max_vertices(self):
        """Test a cap below one 2-cover is rejected."""
        with pytest.raises(ValueError):
            girth_boosting_cover(cycle_graph(5), 1, max_vertices=8)


class TestGluing:
    """Test two-edge gluing of covers."""

    def test_random_glues(self):
        """Test covering, crossing, girth and the Cheeger bound of glued covers."""
        stream = SeedStream(6)
        trial = 0
        for n in (5, 6, 7, 8, 9, 10):
            base = cyclic_action(n, [1, 2])
            for d1 in (1, 2, 3):
                for d2 in (1, 2, 3):
                    first = random_cover(base, d1, stream.child(trial, 0))
                    second = random_cover(base, d2, stream.child(trial, 1))
                    trial += 1
                    p1, p2 = default_glue_points(first, second)
                    glued = glue(first, second, "s1", p1, p2)
                    view = undirected_view(glued.total)
                    assert glued.total.n == first.total.n + second.total.n
                    assert verify_covering(glued.total, base, glued.proj) == 0
                    assert crossing_edges(view, glue_cut(first)) == GLUE_CROSSING
                    assert graph_girth(glued.total) >= min(graph_girth(first.total), graph_girth(second.total))
                    if glued.total.n <= 20:
                        exact = edge_cheeger_exact(view, allow_disconnected=True).value
                        assert exact <= glue_cut_bound(first, second)

    def test_fiber_mismatch(self):
        """Test glue points must share a base vertex."""
        base = cyclic_action(5, [1, 2])
        first, second = random_cover(base, 2, 1), random_cover(base, 2, 2)
        with pytest.raises(FiberMismatchError):
            glue(first, second, "s1", 0, 2)

    def test_small_girth(self):
        """Test covers with loops cannot be glued."""
        cover = lift(bouquet(2), CoverSpec.identity(2, 1, 3))
        with pytest.raises(GirthTooSmallError):
            glue(cover, cover, "s1", 0, 0)

    def test_base_mismatch(self):
        """Test covers of different bases cannot be glued."""
        first = random_cover(cyclic_action(5, [1, 2]), 2, 1)
        second = random_cover(cyclic_action(6, [1, 2]), 2, 1)
        with pytest.raises(BaseMismatchError):
            glue(first, second, "s1", 0, 0)


class TestCoverMonotonicity:
    """Test covers are no less bipartite and no shorter-cycled than their base."""

    def test_random_covers(self):
        """Test r, alpha and girth along random covers."""
        rng = SeedStream(12).generator()
        for trial in range(100):
            n = int(rng.integers(1, 7))
            d = int(rng.integers(1, 18 // n + 1))
            g = random_labeled_graph(n, int(rng.integers(1, 3)), rng)
            cover = random_cover(g, d, SeedStream(12).child(trial))
            base_view, total_view = undirected_view(g), undirected_view(cover.total)
            assert bipartite_ratio(total_view) <= bipartite_ratio(base_view)
            assert independence_ratio(total_view) >= independence_ratio(base_view)
            assert graph_girth(cover.total) >= graph_girth(g)
