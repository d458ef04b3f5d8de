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
Tests for the SL(2, p) family, the bad family, subgroup distortion,
intersection chains and glued towers.
"""

from fractions import Fraction

import pytest

from cli.graph_io import k4_with_matching
from constructions import chain as chain_module
from constructions.bad_family import build_bad_family_member, doubled_action
from constructions.chain import bad_family_chain_report
from constructions.distortion import (
    distortion_audit,
    distortion_bound,
    distortion_sweep,
    standard_subgroup,
)
from constructions.glued_tower import build_glued_towers
from constructions.sl2p import is_prime, sl2p_action
from core.errors import (
    AlphabetMismatchError,
    DisconnectedGraphError,
    GirthTooSmallError,
    NotPrimeError,
    NotTransitiveError,
    ShapeMismatchError,
    TooSmallError,
)
from core.models.config import TowerConfig
from covers.verify import verify_covering
from labeled_graph.graph import bouquet, cycle_graph, cyclic_action, disjoint_union, is_transitive
from observability.checks import PropertyCheckTracker
from spectral.eigen import second_eigenvalue
from subgroups.groups import cyclic_group, small_groups
from subgroups.intersection import intersect_actions
from subgroups.subgroup import cyclic_quotient


@pytest.fixture(scope="module")
def sl2_5():
    return sl2p_action(5)


class TestSL2p:
    """Test the SL(2, p) actions."""

    def test_orders(self, sl2_5):
        """Test |SL(2, p)| = p(p^2 - 1)."""
        assert sl2_5.n == 120
        assert sl2p_action(7).n == 336
        assert is_transitive(sl2_5)

    def test_spectral_gap(self, sl2_5):
        """Test the second eigenvalue stays below the degree."""
        assert second_eigenvalue(sl2_5) < 3.99

    def test_rejects_non_primes(self):
        """Test p must be a prime of at least 5."""
        assert is_prime(7) and not is_prime(9)
        for p in (2, 3, 4, 9):
            with pytest.raises(NotPrimeError):
                sl2p_action(p)


class TestBadFamily:
    """Test the four-letter doubled actions."""

    def test_sl2_5_member(self, sl2_5):
        """Test the witness of the member over SL(2, 5)."""
        member = build_bad_family_member(sl2_5)
        report = member.report
        assert report.vertices == 240
        assert report.crossing_count == 4
        assert report.ch_bound == Fraction(1, 30)
        assert report.relations_hold
        assert report.restricted_vertices == 240
        assert report.passed
        assert report.generators == [
            "x1",
            "x2",
            "c",
            "t*x1*t^-1",
            "t*x2*t^-1",
            "t*t",
            "t*c*t^-1",
        ]

    def test_bound_shrinks_with_base(self):
        """Test the witness bound is 4/n."""
        for n in (3, 5, 8):
            member = build_bad_family_member(cyclic_action(n, [1, 1]))
            assert member.ch_bound == Fraction(4, n)
            assert member.crossing == 4

    def test_doubled_action_shape(self):
        """Test the doubled action rejects small or wrong bases."""
        assert doubled_action(cyclic_action(4, [1, 3])).n == 8
        with pytest.raises(TooSmallError):
            doubled_action(cyclic_action(2, [1, 1]))
        with pytest.raises(ShapeMismatchError):
            doubled_action(cyclic_action(5, [1, 1, 1]))

    def test_base_must_be_transitive(self):
        """Test an intransitive base is rejected."""
        base = disjoint_union(cyclic_action(3, [1, 1]), cyclic_action(3, [1, 1]))
        with pytest.raises(NotTransitiveError):
            build_bad_family_member(base)


class TestDistortion:
    """Test orbit expansion against the distortion bound."""

    def test_cyclic_index_two(self):
        """Test Z/6 under the index-2 kernel."""
        report = distortion_audit(cyclic_group(6), standard_subgroup(cyclic_group(6), 2))
        assert report.generators == ["a*a"]
        assert report.orbit_size == 3
        assert report.h_group == Fraction(2, 3)
        assert report.h_orbit == 2
        assert report.bound == pytest.approx(1 / 128)
        assert report.passed
        dumped = report.model_dump(mode="json")
        assert dumped["h_orbit"] == "2/1"
        assert dumped["h_group"] == "2/3"

    def test_bound(self):
        """Test an infinite expansion counts as one."""
        assert distortion_bound(None, 2) == pytest.approx(3 / 64)
        assert distortion_bound(Fraction(100), 2) == distortion_bound(None, 2)

    def test_sweep(self):
        """Test every small group with standard and random subgroups."""
        reports = distortion_sweep(small_groups(16), (2, 3), random_instances=20, seed=3)
        assert len(reports) == 2 * len(small_groups(16)) + 20
        assert all(r.passed for r in reports)

    def test_alphabet_mismatch(self):
        """Test the subgroup must live in the group's free group."""
        sub = cyclic_quotient(cycle_graph(2, "b").alphabet, [1], 2)
        with pytest.raises(AlphabetMismatchError):
            distortion_audit(cyclic_group(6), sub)


class TestIntersectionChain:
    """Test witness bounds along intersections of stabilizers."""

    def test_single_member(self, sl2_5):
        """Test one level reproduces the member's bound."""
        report = bad_family_chain_report([sl2_5])
        assert len(report.levels) == 1
        assert report.levels[0].bound == build_bad_family_member(sl2_5).ch_bound
        assert report.levels[0].index == 240

    def test_toy_chain(self):
        """Test bounds along two small bases."""
        report = bad_family_chain_report([cyclic_action(3, [1, 1]), cyclic_action(5, [1, 1])])
        assert [level.bound for level in report.levels] == [Fraction(4, 3), Fraction(4, 5)]
        assert report.monotone
        assert not report.truncated

    def test_sl2_chain(self, sl2_5):
        """Test the chain over SL(2, 5) and SL(2, 7)."""
        report = bad_family_chain_report([sl2_5, sl2p_action(7)])
        assert [level.bound for level in report.levels] == [Fraction(1, 30), Fraction(1, 84)]
        assert 672 <= report.levels[1].index <= 240 * 672
        assert report.monotone

    def test_levels_use_checked_intersection(self, monkeypatch):
        """Test later levels go through the index-checked intersection."""
        calls = []
        checked = chain_module.intersection_orbit

        def counting(a, b, cap=None):
            calls.append((a.index, b.index))
            return checked(a, b, cap=cap)

        monkeypatch.setattr(chain_module, "intersection_orbit", counting)
        bases = [cyclic_action(3, [1, 1]), cyclic_action(5, [1, 1])]
        report = bad_family_chain_report(bases)
        members = [build_bad_family_member(base).stabilizer for base in bases]
        assert len(calls) == 1
        assert report.levels[1].index == intersect_actions(*members).index

    def test_truncation(self):
        """Test the index cap stops the chain."""
        report = bad_family_chain_report([cyclic_action(3, [1, 1]), cyclic_action(5, [1, 1])], max_index=15)
        assert len(report.levels) == 1
        assert report.truncated

    def test_empty(self):
        """Test no bases give an empty chain."""
        report = bad_family_chain_report([])
        assert report.levels == []
        assert report.monotone


class TestGluedTowers:
    """Test towers of glued covers."""

    def config(self, **overrides):
        values = dict(
            seed=20240101,
            levels=3,
            max_edit_distance="1/4",
            min_component_fraction="1/5",
            max_vertices=2000,
        )
        values.update(overrides)
        return TowerConfig(**values)

    def test_tower(self):
        """Test sizes, checks and Cheeger bounds of a three-step tower."""
        tracker = PropertyCheckTracker()
        g_tower, k_tower, report = build_glued_towers(k4_with_matching(), self.config(), tracker)
        sizes = [level.vertices for level in report.levels]
        assert sizes[:2] == [4, 24]
        assert len(sizes) == 4
        assert all(n <= 2000 for n in sizes)
        assert report.levels[0].cheeger_exact == 2
        assert report.checks
        assert all(check.passed for check in report.checks)
        assert tracker.passed

        bounds = [level.cheeger_upper_bound for level in report.levels[1:]]
        assert bounds[0] == Fraction(1, 4)
        assert all(later < earlier for earlier, later in zip(bounds, bounds[1:]))

        for tower in (g_tower, k_tower):
            top = tower.projection()
            assert verify_covering(top.total, top.base, top.proj) == 0

    def test_rejects_disconnected_start(self):
        """Test the start graph must be connected."""
        start = disjoint_union(cyclic_action(3, [1, 2]), cyclic_action(3, [1, 2]))
        with pytest.raises(DisconnectedGraphError):
            build_glued_towers(start, self.config(), PropertyCheckTracker())

    def test_rejects_loops(self):
        """Test the start graph must have no loops."""
        with pytest.raises(GirthTooSmallError):
            build_glued_towers(bouquet(2), self.config(), PropertyCheckTracker())

    def test_glue_letter_range(self):
        """Test the glue letter must exist."""
        with pytest.raises(ValueError):
            build_glued_towers(k4_with_matching(), self.config(glue_letter=5), PropertyCheckTracker())
