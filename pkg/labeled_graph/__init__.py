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
Labeled graphs - finite Schreier graphs of free groups and their
undirected views.
"""

from labeled_graph.decomposition import edge_label_decomposition, schreier_labeling, symmetric_view
from labeled_graph.graph import (
    SLabeledGraph,
    apply_word,
    bouquet,
    build_graph,
    cycle_graph,
    cyclic_action,
    disjoint_union,
    edit_distance,
    is_transitive,
    orbit_words,
    word_permutation,
)
from labeled_graph.multigraph import (
    Multigraph,
    connected_components,
    girth,
    graph_stats,
    induced_subgraph,
    is_connected,
    undirected_view,
)
from labeled_graph.words import Alphabet, Word, parse_word

__all__ = [
    # Words
    "Alphabet",
    "Word",
    "parse_word",
    # Labeled graphs
    "SLabeledGraph",
    "build_graph",
    "apply_word",
    "word_permutation",
    "edit_distance",
    "disjoint_union",
    "orbit_words",
    "is_transitive",
    "bouquet",
    "cycle_graph",
    "cyclic_action",
    # Multigraphs
    "Multigraph",
    "undirected_view",
    "graph_stats",
    "girth",
    "connected_components",
    "is_connected",
    "induced_subgraph",
    # Decompositions
    "edge_label_decomposition",
    "symmetric_view",
    "schreier_labeling",
]
