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
Graph file reading and writing.

A labeled graph file is JSON of the form

    {"letters": ["a"], "n": 4, "perms": {"a": [1, 2, 3, 0]}}

with an optional "basepoint". A multigraph file holds {"n": ..., "edges":
[[u, v], ...]} instead. Written files are canonical: sorted keys, compact
separators and a trailing newline.
"""

import json
import logging
import re
from pathlib import Path
from typing import Any, Dict, Optional, Tuple, Union

from constructions.sl2p import sl2p_action
from core.errors import ParseError
from labeled_graph.decomposition import schreier_labeling
from labeled_graph.graph import SLabeledGraph, bouquet, build_graph, cycle_graph
from labeled_graph.multigraph import Multigraph, undirected_view
from labeled_graph.words import Alphabet
from observability.artifacts import canonical_json, write_atomic

logger = logging.getLogger(__name__)

PathLike = Union[str, Path]


def graph_to_dict(g: SLabeledGraph, basepoint: Optional[int] = None) -> Dict[str, Any]:
    data: Dict[str, Any] = {
        "n": g.n,
        "letters": list(g.alphabet),
        "perms": {name: perm.tolist() for name, perm in zip(g.alphabet, g.perms)},
    }
    if basepoint is not None:
        data["basepoint"] = basepoint
    return data


def serialize_graph(g: SLabeledGraph, basepoint: Optional[int] = None) -> str:
    return canonical_json(graph_to_dict(g, basepoint))


def _line_of(text: str, needle: str, start: int = 0) -> int:
    position = text.find(needle, max(start, 0))
    return text.count("\n", 0, position) + 1 if position >= 0 else 1


def _load_json(text: str) -> Dict[str, Any]:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(e.lineno, e.msg) from None
    if not isinstance(data, dict):
        raise ParseError(1, "top level must be an object")
    return data


def _int_field(data: Dict[str, Any], key: str, text: str) -> int:
    value = data.get(key)
    if not isinstance(value, int) or isinstance(value, bool):
        raise ParseError(_line_of(text, f'"{key}"'), f"'{key}' must be an integer")
    return value


def parse_graph(text: str) -> Tuple[SLabeledGraph, Optional[int]]:
    """
    Parse a labeled graph file.

    Returns:
        (graph, basepoint or None)

    Raises:
        ParseError: malformed JSON, missing keys or wrong permutation lengths
        NonBijectionError: a permutation hits a vertex twice
    """
    data = _load_json(text)
    n = _int_field(data, "n", text)
    letters = data.get("letters")
    perms = data.get("perms")
    if not isinstance(letters, list) or not all(isinstance(x, str) for x in letters):
        raise ParseError(_line_of(text, '"letters"'), "'letters' must be a list of names")
    if not isinstance(perms, dict) or set(perms) != set(letters):
        raise ParseError(_line_of(text, '"perms"'), "'perms' must map every letter to a list")

    ordered = []
    perms_at = text.find('"perms"')
    for name in letters:
        perm = perms[name]
        line = _line_of(text, f'"{name}"', perms_at)
        if not isinstance(perm, list) or not all(isinstance(v, int) for v in perm):
            raise ParseError(line, f"permutation of '{name}' must be a list of integers")
        if len(perm) != n:
            raise ParseError(line, f"permutation of '{name}' has {len(perm)} entries, expected {n}")
        ordered.append(perm)

    basepoint = data.get("basepoint")
    if basepoint is not None:
        basepoint = _int_field(data, "basepoint", text)
    return build_graph(n, Alphabet(tuple(letters)), ordered), basepoint


def parse_multigraph(text: str) -> Multigraph:
    data = _load_json(text)
    n = _int_field(data, "n", text)
    edges = data.get("edges")
    if not isinstance(edges, list) or not all(
        isinstance(e, list) and len(e) == 2 and all(isinstance(v, int) and 0 <= v < n for v in e)
        for e in edges
    ):
        raise ParseError(_line_of(text, '"edges"'), "'edges' must be a list of vertex pairs in range")
    return Multigraph.from_edges(n, edges)


def read_graph(path: PathLike) -> Tuple[SLabeledGraph, Optional[int]]:
    text = Path(path).read_text(encoding="utf-8")
    graph, basepoint = parse_graph(text)
    logger.debug(f"Read graph {path}: n={graph.n}, letters={list(graph.alphabet)}")
    return graph, basepoint


def write_graph(path: PathLike, g: SLabeledGraph, basepoint: Optional[int] = None) -> Path:
    return write_atomic(path, serialize_graph(g, basepoint))


def k4_with_matching() -> SLabeledGraph:
    """K4 plus the matching {01, 23}: a 4-vertex 4-regular graph of girth 2."""
    edges = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3), (0, 1), (2, 3)]
    return schreier_labeling(Multigraph.from_edges(4, edges), Alphabet(("a", "b")))


def named_graph(name: str) -> Optional[SLabeledGraph]:
    """bouquet<k>, cycle<n>, sl2-<p> or k4-matching; None for other names."""
    if name == "k4-matching":
        return k4_with_matching()
    match = re.fullmatch(r"(bouquet|cycle|sl2-)(\d+)", name)
    if not match:
        return None
    kind, value = match.group(1), int(match.group(2))
    if kind == "bouquet":
        return bouquet(value)
    if kind == "cycle":
        return cycle_graph(value)
    return sl2p_action(value)


def load_graph(source: str) -> Tuple[SLabeledGraph, Optional[int]]:
    """
    A labeled graph from a file path or a graph name.

    Raises:
        ParseError: neither an existing file nor a known name
    """
    graph = named_graph(source)
    if graph is not None:
        return graph, None
    if not Path(source).exists():
        raise ParseError(1, f"no graph file or named graph '{source}'")
    return read_graph(source)


def load_multigraph(source: str) -> Multigraph:
    """A multigraph file, or the undirected view of a labeled graph file or name."""
    graph = named_graph(source)
    if graph is not None:
        return undirected_view(graph)
    if not Path(source).exists():
        raise ParseError(1, f"no graph file or named graph '{source}'")
    text = Path(source).read_text(encoding="utf-8")
    if '"edges"' in text:
        return parse_multigraph(text)
    return undirected_view(parse_graph(text)[0])
