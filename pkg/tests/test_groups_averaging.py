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
Tests for finite group fixtures and the averaging identity.
"""

import math
from fractions import Fraction

import pytest

from core.errors import NotRegularActionError, OutOfRangeError
from labeled_graph.graph import build_graph
from subgroups.averaging import averaging_identity_check, averaging_sweep, greedy_translate_cover
from subgroups.groups import (
    FiniteGroup,
    alternating_group_4,
    cyclic_group,
    dihedral_group,
    group_by_name,
    small_groups,
    symmetric_group_3,
)


class TestFiniteGroups:
    """Test group fixtures built from regular actions."""

    def test_orders(self):
        """Test fixture orders."""
        assert cyclic_group(6).order == 6
        assert dihedral_group(4).order == 8
        assert symmetric_group_3().order == 6
        assert alternating_group_4().order == 12

    def test_cyclic_multiplication(self):
        """Test Z/6 multiplies by addition."""
        z6 = cyclic_group(6)
        assert z6.multiply(2, 3) == 5
        assert z6.multiply(2, 5) == 1
        assert z6.inverses.tolist() == [0, 5, 4, 3, 2, 1]
        assert z6.translate([0, 1], 5) == [0, 5]

    def test_table_is_latin_square(self):
        """Test each row and column of the table is a permutation."""
        for group in (dihedral_group(5), symmetric_group_3(), alternating_group_4()):
            n = group.order
            for i in range(n):
                assert sorted(group.table[i].tolist()) == list(range(n))
                assert sorted(group.table[:, i].tolist()) == list(range(n))

    def test_associativity(self):
        """Test the table is associative."""
        group = symmetric_group_3()
        n = group.order
        for a in range(n):
            for b in range(n):
                for c in range(n):
                    left = group.multiply(group.multiply(a, b), c)
                    right = group.multiply(a, group.multiply(b, c))
                    assert left == right

    def test_non_regular_action_rejected(self):
        """Test S3 acting on three points is not a Cayley graph."""
        action = build_graph(3, ["a", "b"], [[1, 0, 2], [1, 2, 0]])
        with pytest.raises(NotRegularActionError):
            FiniteGroup(name="s3-points", action=action)

    def test_multiply_out_of_range(self):
        """Test elements outside the group are rejected."""
        with pytest.raises(OutOfRangeError):
            cyclic_group(3).multiply(0, 3)

    def test_group_by_name(self):
        """Test fixture names resolve."""
        assert group_by_name("D4").order == 8
        assert group_by_name("z7").order == 7
        assert group_by_name("a4").name == "a4"
        for bad in ("q8", "d2", "z0", "x"):
            with pytest.raises(ValueError):
                group_by_name(bad)

    def test_dihedral_needs_polygon(self):
        """Test the dihedral fixture needs m >= 3."""
        with pytest.raises(ValueError):
            dihedral_group(2)

    def test_small_groups(self):
        """Test the fixture list up to a given order."""
        assert [g.name for g in small_groups(5)] == ["z1", "z2", "z3", "z4", "z5"]
        names = [g.name for g in small_groups(12)]
        assert len(names) == 18
        assert {"d3", "d6", "s3", "a4"} <= set(names)
        assert all(g.order <= 12 for g in small_groups(12))


class TestAveragingIdentity:
    """Test the mean of |Ag ∩ B| equals mu(A) mu(B)."""

    def test_single_pair(self):
        """Test one pair in Z/6."""
        report = averaging_identity_check(cyclic_group(6), [0, 1], [0, 2, 4])
        assert report.mean == Fraction(1, 6)
        assert report.product == Fraction(1, 6)
        assert report.passed

    def test_empty_subset(self):
        """Test an empty A averages to zero."""
        report = averaging_identity_check(dihedral_group(3), [], [0, 1])
        assert report.mean == 0
        assert report.passed

    def test_out_of_range(self):
        """Test elements outside the group are rejected."""
        with pytest.raises(OutOfRangeError):
            averaging_identity_check(cyclic_group(4), [4], [0])

    def test_all_pairs_of_small_groups(self):
        """Test every pair of subsets of every group of order at most 12."""
        for group in small_groups(12):
            report = averaging_sweep(group)
            assert report.violations == 0, group.name
            assert report.pairs_checked == 4 ** group.order


class TestGreedyTranslateCover:
    """Test greedy covering by translates."""

    def test_disjoint_translates_cover(self):
        """Test four translates of an interval cover Z/12."""
        report = greedy_translate_cover(cyclic_group(12), [0, 1, 2], 4)
        assert report.coverage == 1
        assert report.exponential_bound_checked
        assert report.exponential_bound_passed
        assert report.passed

    def test_coverage_lower_bound(self):
        """Test coverage against 1 - (1 - mu)^count in every small group."""
        for group in small_groups(12):
            a = list(range(0, group.order, 3))
            count = math.ceil(group.order / len(a))
            report = greedy_translate_cover(group, a, count)
            assert report.coverage >= report.lower_bound
            assert report.passed, group.name

    def test_zero_translates(self):
        """Test no translates cover nothing."""
        report = greedy_translate_cover(cyclic_group(5), [0], 0)
        assert report.coverage == 0
        assert report.chosen == []
