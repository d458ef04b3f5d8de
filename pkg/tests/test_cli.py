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
Tests for the slab command line and graph files.
"""

import json

import pytest

from cli.graph_io import load_graph, load_multigraph, parse_graph, read_graph, serialize_graph, write_graph
from cli.slab import run
from core.errors import EXIT_OK, EXIT_PROPERTY_FAILED, EXIT_USAGE, NonBijectionError, ParseError
from labeled_graph.graph import cycle_graph

BAD_LENGTH = """{
  "letters": ["a"],
  "n": 4,
  "perms": {
    "a": [1, 2, 0]
  }
}
"""


class TestGraphFiles:
    """Test reading and writing graph files."""

    def test_canonical_round_trip(self, c4_path):
        """Test a canonical file is rewritten byte for byte."""
        graph, basepoint = read_graph(c4_path)
        assert graph == cycle_graph(4)
        assert basepoint is None
        assert serialize_graph(graph) == c4_path.read_text()

    def test_basepoint(self, tmp_path):
        """Test the optional basepoint survives a write."""
        path = write_graph(tmp_path / "c5.json", cycle_graph(5), basepoint=2)
        graph, basepoint = read_graph(path)
        assert graph.n == 5
        assert basepoint == 2

    def test_bad_length_reports_line(self):
        """Test a short permutation names its line."""
        with pytest.raises(ParseError) as exc_info:
            parse_graph(BAD_LENGTH)
        assert exc_info.value.details["line"] == 5

    def test_malformed_json(self):
        """Test JSON syntax errors keep their line."""
        with pytest.raises(ParseError) as exc_info:
            parse_graph('{\n  "n": 4,\n  "letters": [\n}')
        assert exc_info.value.details["line"] == 4

    def test_missing_fields(self):
        """Test required keys."""
        with pytest.raises(ParseError):
            parse_graph('{"letters": ["a"], "perms": {"a": [0]}}')
        with pytest.raises(ParseError):
            parse_graph('{"letters": ["a"], "n": 1, "perms": {"b": [0]}}')

    def test_non_bijection(self):
        """Test repeated images are rejected."""
        with pytest.raises(NonBijectionError):
            parse_graph('{"letters": ["a"], "n": 2, "perms": {"a": [0, 0]}}')

    def test_named_graphs(self):
        """Test graph names resolve without files."""
        assert load_graph("bouquet3")[0].k == 3
        assert load_graph("cycle6")[0].n == 6
        assert load_graph("k4-matching")[0].n == 4
        assert load_multigraph("cycle6").n == 6
        with pytest.raises(ParseError):
            load_graph("no-such-graph")

    def test_multigraph_file(self, tmp_path):
        """Test edge-list files."""
        path = tmp_path / "path.json"
        path.write_text('{"n": 3, "edges": [[0, 1], [1, 2]]}')
        m = load_multigraph(str(path))
        assert m.edges == ((0, 1), (1, 2))


class TestCommands:
    """Test slab commands end to end."""

    def test_spectrum(self, c4_path, capsys):
        """Test the spectrum row of C4."""
        assert run(["spectrum", "--in", str(c4_path)]) == EXIT_OK
        assert capsys.readouterr().out == "n,lambda0,lambda1,lambda_minus,gap\n4,2.0,0.0,-2.0,2.0\n"

    def test_stats(self, capsys):
        """Test statistics of a named cycle."""
        assert run(["stats", "--in", "cycle5"]) == EXIT_OK
        assert capsys.readouterr().out.splitlines()[1] == "5,5,5,1,True,2"

    def test_distortion_json(self, capsys):
        """Test the JSON report of Z/6 under the index-2 kernel."""
        assert run(["--json", "distortion", "--group", "z6", "--index", "2"]) == EXIT_OK
        report = json.loads(capsys.readouterr().out)
        assert report["h_orbit"] == "2/1"
        assert report["h_group"] == "2/3"
        assert report["passed"] is True

    def test_bad_family(self, capsys):
        """Test the default member over SL(2, 5)."""
        assert run(["bad-family"]) == EXIT_OK
        assert capsys.readouterr().out.splitlines()[1] == "120,240,4,1/30,True,240"

    def test_bad_family_by_name(self, capsys):
        """Test rossztau with --p builds the same member as bad-family."""
        assert run(["rossztau", "--p", "5", "--seed", "1"]) == EXIT_OK
        assert capsys.readouterr().out.splitlines()[1] == "120,240,4,1/30,True,240"

    def test_distortion_by_name(self, capsys):
        """Test nagytetel reports a passing audit for Z/6."""
        assert run(["--json", "nagytetel", "--group", "z6", "--index", "2", "--seed", "1"]) == EXIT_OK
        report = json.loads(capsys.readouterr().out)
        assert report["passed"] is True
        assert report["h_orbit"] == "2/1"

    def test_chain_by_name(self, capsys):
        """Test lubtau runs the SL(2, 5) chain."""
        assert run(["lubtau", "--bases", "sl2-5"]) == EXIT_OK
        rows = capsys.readouterr().out.splitlines()
        assert rows[0] == "level,index,orbit_size,bound,member_bound,crossing,witness_size"
        assert rows[1].split(",")[3] == "1/30"

    def test_glued_tower_by_name(self, tmp_path, capsys):
        """Test gluelemma resolves to the glued tower command."""
        path = tmp_path / "tower.yaml"
        path.write_text(
            "tower:\n  seed: 20240101\n  levels: 1\n  max_vertices: 2000\n"
            '  max_edit_distance: "1/4"\n  min_component_fraction: "1/5"\n'
        )
        assert run(["gluelemma", "--config", str(path)]) == EXIT_OK
        rows = capsys.readouterr().out.splitlines()
        assert rows[0].startswith("level,vertices,girth_g")
        assert [row.split(",")[1] for row in rows[1:]] == ["4", "24"]

    def test_distortion_sweep_needs_seed(self, capsys):
        """Test the sweep refuses to pick a seed on its own."""
        assert run(["distortion", "--sweep"]) == EXIT_USAGE
        assert "--seed" in capsys.readouterr().err

    def test_artifacts(self, tmp_path, capsys):
        """Test --out writes CSV and JSON next to stdout."""
        assert run(["--out", str(tmp_path), "spectrum", "--in", "cycle4"]) == EXIT_OK
        csv_text = (tmp_path / "spectrum.csv").read_text()
        assert csv_text == capsys.readouterr().out
        data = json.loads((tmp_path / "spectrum.json").read_text())
        assert data["eigenvalues"] == [2.0, 0.0, 0.0, -2.0]

    def test_cover_from_config(self, tmp_path, capsys):
        """Test a cover experiment file."""
        path = tmp_path / "cover.yaml"
        path.write_text("variable:\n  seed: {default: 4}\ncover:\n  seed: ${var.seed}\n  degrees: [2, 3]\n  graph: cycle3\n")
        assert run(["cover", "--config", str(path), "--var", "seed=5"]) == EXIT_OK
        rows = capsys.readouterr().out.splitlines()
        assert rows[0] == "level,n,edges,girth,components"
        assert [row.split(",")[1] for row in rows[1:]] == ["3", "6", "18"]

    def test_decompose(self, tmp_path, capsys):
        """Test labeling an edge list."""
        path = tmp_path / "k4.json"
        path.write_text('{"n": 4, "edges": [[0, 1], [0, 2], [0, 3], [1, 2], [1, 3], [2, 3]]}')
        assert run(["decompose", "--in", str(path), "--mode", "symmetric"]) == EXIT_OK
        graph, _ = parse_graph(capsys.readouterr().out)
        assert graph.k == 3

    def test_no_command(self, capsys):
        """Test a missing command is a usage error."""
        assert run([]) == EXIT_USAGE

    def test_missing_file(self, tmp_path, capsys):
        """Test an unreadable input is a usage error with a JSON error body."""
        assert run(["--json", "spectrum", "--in", str(tmp_path / "absent.json")]) == EXIT_USAGE
        assert '"error":"ParseError"' in capsys.readouterr().err

    def test_bad_file_line(self, tmp_path, capsys):
        """Test the parse error names the offending line."""
        path = tmp_path / "bad.json"
        path.write_text(BAD_LENGTH)
        assert run(["spectrum", "--in", str(path)]) == EXIT_USAGE
        assert "line 5" in capsys.readouterr().err

    def test_failed_property(self, capsys):
        """Test a failed check exits with code 2."""
        argv = [
            "friedman-sweep",
            "--base",
            "bouquet2",
            "--d",
            "3",
            "--trials",
            "3",
            "--seed",
            "1",
            "--window",
            "0.001",
            "--target-fraction",
            "1.0",
        ]
        assert run(argv) == EXIT_PROPERTY_FAILED
        assert "friedman window" in capsys.readouterr().err
