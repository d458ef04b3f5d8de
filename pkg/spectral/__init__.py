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
Spectral and expansion diagnostics - adjacency spectra, exact Cheeger and
set-expansion constants, bipartiteness constants and inequality checks.
"""

from spectral.bipartite import bipartite_costs, bipartite_ratio, independence_ratio, max_cut, psi
from spectral.eigen import adjacency_matrix, eigenvalues, second_eigenvalue, spectrum
from spectral.expansion import (
    crossing_edges,
    cut_ratio,
    edge_cheeger_exact,
    set_expansion_exact,
    small_set_expansion_check,
    tower_expansion_profile,
)
from spectral.inequalities import cheeger_sandwich, eigenvalue_bound_checks, upward_variation

__all__ = [
    # Spectra
    "adjacency_matrix",
    "eigenvalues",
    "second_eigenvalue",
    "spectrum",
    # Expansion
    "crossing_edges",
    "cut_ratio",
    "edge_cheeger_exact",
    "set_expansion_exact",
    "small_set_expansion_check",
    "tower_expansion_profile",
    # Bipartiteness
    "bipartite_costs",
    "bipartite_ratio",
    "independence_ratio",
    "max_cut",
    "psi",
    # Inequalities
    "eigenvalue_bound_checks",
    "upward_variation",
    "cheeger_sandwich",
]
