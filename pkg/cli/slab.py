#!/usr/bin/env python3
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
Schreier Lab CLI

Command-line interface for Schreier graph experiments. Every command
prints CSV (or JSON with --json) to standard output and, with --out,
writes <command>.csv and <command>.json into that directory.

Exit codes: 0 all asserted properties hold, 1 usage or guard error,
2 a property check failed.
"""

import argparse
import logging
import sys
from typing import Any, Dict, List, Optional, Sequence

from cli.graph_io import load_graph, load_multigraph, serialize_graph
from constructions.bad_family import build_bad_family_member
from constructions.chain import bad_family_chain_report
from constructions.distortion import distortion_audit, distortion_sweep, standard_subgroup
from constructions.glued_tower import build_glued_towers
from core.config_loader import ConfigLoader, parse_var_overrides
from core.errors import (
    EXIT_OK,
    EXIT_PROPERTY_FAILED,
    EXIT_USAGE,
    ConfigError,
    RetriesExhaustedError,
    SchreierLabError,
)
from core.models.config import TowerConfig
from covers.friedman import friedman_sweep
from covers.girth import girth_boosting_cover
from covers.gluing import default_glue_points, glue, glue_cut_bound
from covers.lifts import iterated_random_cover, random_cover
from covers.rng import SeedStream
from covers.verify import new_eigenvalues, verify_covering
from labeled_graph.decomposition import edge_label_decomposition, schreier_labeling, symmetric_view
from labeled_graph.multigraph import girth, graph_stats, is_connected, undirected_view
from observability.artifacts import ArtifactWriter, canonical_json, csv_text
from observability.checks import PropertyCheckTracker
from spectral.bipartite import psi
from spectral.eigen import second_eigenvalue, spectrum
from spectral.enumeration import EXHAUSTIVE_LIMIT
from spectral.expansion import crossing_edges, edge_cheeger_exact, tower_expansion_profile
from spectral.inequalities import cheeger_sandwich, eigenvalue_bound_checks
from subgroups.groups import cyclic_group, group_by_name, small_groups
from subgroups.intersection import intersect_actions
from subgroups.subgroup import SubgroupRep, random_transitive_action, schreier_machinery

logger = logging.getLogger(__name__)

LOG_FORMAT = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"
SWEEP_CYCLIC_MAX = 16
SWEEP_RANDOM_INSTANCES = 20


class CLI:
    """Command-line interface for Schreier Lab."""

    def __init__(self, out_dir: Optional[str] = None, as_json: bool = False):
        self.out_dir = out_dir
        self.as_json = as_json
        self.tracker = PropertyCheckTracker()
        self.loader = ConfigLoader()

    def _emit(
        self,
        command: str,
        header: Sequence[str],
        rows: Sequence[Sequence[Any]],
        payload: Any,
        out_dir: Optional[str] = None,
    ):
        """Print the report and write its artifacts."""
        out_dir = self.out_dir or out_dir
        if out_dir:
            writer = ArtifactWriter(out_dir)
            writer.write_csv(command, header, rows)
            writer.write_json(command, payload)
            logger.info(f"Artifacts written to {out_dir}")
        if self.as_json:
            sys.stdout.write(canonical_json(payload))
        else:
            sys.stdout.write(csv_text(header, rows))

    def _config(self, kind: str, args, overrides: Dict[str, Any]):
        variables = parse_var_overrides(getattr(args, "var", None))
        return self.loader.resolve(kind, getattr(args, "config", None), variables, overrides)

    # Graph diagnostics

    def stats(self, args):
        """Girth, components and degrees."""
        m = load_multigraph(args.input)
        stats = graph_stats(m)
        row = [stats.n, stats.edges, stats.girth, len(stats.components), stats.regular, stats.degree]
        self._emit("stats", ["n", "edges", "girth", "components", "regular", "degree"], [row], stats)

    def spectrum(self, args):
        """Adjacency spectrum."""
        report = spectrum(load_multigraph(args.input), check=args.check)
        self._emit("spectrum", ["n", "lambda0", "lambda1", "lambda_minus", "gap"], [report.csv_row()], report)

    def cheeger(self, args):
        """Exact edge Cheeger constant, with its spectral sandwich on regular graphs."""
        m = load_multigraph(args.input)
        report = edge_cheeger_exact(m)
        payload: Dict[str, Any] = {"cheeger": report.model_dump(mode="json")}
        lower = upper = None
        if m.n >= 2 and m.regular_degree() is not None:
            sandwich = cheeger_sandwich(m)
            lower, upper = sandwich.lower, sandwich.upper
            payload["sandwich"] = sandwich.model_dump(mode="json")
            self.tracker.record(
                "cheeger sandwich",
                sandwich.passed,
                {"lower": lower, "cheeger": sandwich.cheeger, "upper": upper},
                report.witness,
            )
        row = [m.n, report.value, len(report.witness), lower, upper]
        self._emit("cheeger", ["n", "cheeger", "witness_size", "lower", "upper"], [row], payload)

    def psi(self, args):
        """Bipartiteness constants and the eigenvalue bounds they imply."""
        m = load_multigraph(args.input)
        report = psi(m)
        payload: Dict[str, Any] = {"psi": report.model_dump(mode="json")}
        if m.n >= 2 and is_connected(m) and m.regular_degree() is not None:
            bounds = eigenvalue_bound_checks(m)
            payload["bounds"] = bounds.model_dump(mode="json")
            self.tracker.record(
                "smallest eigenvalue bound",
                bounds.desai_rao_passed,
                {"lambda_minus": bounds.lambda_minus, "bound": bounds.desai_rao_bound},
                report.psi_witness,
            )
            self.tracker.record(
                "psi lower bound",
                bounds.psi_lower_passed,
                {"psi": bounds.psi, "bound": bounds.psi_lower_bound},
                report.psi_witness,
            )
        row = [report.n, report.psi, report.c, report.r, report.edges_removed]
        self._emit("psi", ["n", "psi", "c", "r", "edges_removed"], [row], payload)

    def decompose(self, args):
        """Turn a regular multigraph into a labeled graph."""
        m = load_multigraph(args.input)
        if args.mode == "symmetric":
            degree = m.regular_degree()
            g = edge_label_decomposition(m, degree if degree is not None else 0)
            back = symmetric_view(g)
        else:
            g = schreier_labeling(m)
            back = undirected_view(g)
        self.tracker.record("decomposition round trip", back == m, {"mode": args.mode, "n": m.n})
        if self.out_dir:
            ArtifactWriter(self.out_dir).write_json("decompose", g.to_dict())
        sys.stdout.write(serialize_graph(g))

    # Covers

    def cover(self, args):
        """Random (iterated) cover, or girth boosting."""
        config = self._config(
            "cover",
            args,
            {
                "seed": args.seed,
                "degrees": args.degrees,
                "graph": args.input,
                "boost_girth": args.boost_girth or None,
                "max_tries": args.max_tries,
            },
        )
        g, _ = load_graph(config.graph)
        if config.boost_girth:
            tower = girth_boosting_cover(g, config.seed, max_tries=config.max_tries)
        else:
            tower = iterated_random_cover(g, config.degrees, config.seed)
        projection = tower.projection()
        epsilon = verify_covering(projection.total, projection.base, projection.proj)
        self.tracker.record("covering", epsilon == 0, {"epsilon": epsilon})

        stats = tower.stats()
        rows = [[i, s.n, s.edges, s.girth, len(s.components)] for i, s in enumerate(stats)]
        payload = {
            "seed": config.seed,
            "degrees": [cover.degree for cover in tower.maps],
            "levels": [s.model_dump(mode="json") for s in stats],
            "top": tower.top.to_dict(),
        }
        self._emit("cover", ["level", "n", "edges", "girth", "components"], rows, payload, config.output_dir)

    def tower(self, args):
        """Iterated random cover with per-level spectra and expansion."""
        g, _ = load_graph(args.input)
        tower = iterated_random_cover(g, args.degrees, args.seed)
        for level, cover in enumerate(tower.maps, start=1):
            if is_connected(undirected_view(cover.base)):
                new_eigenvalues(cover)
                self.tracker.record("old eigenvalues contained", True, {"level": level})
        profile = tower_expansion_profile(tower.levels)
        self.tracker.record("expansion non-increasing", profile.non_increasing, {"values": profile.values})

        rows = []
        for level, graph in enumerate(tower.levels):
            h = profile.values[level] if level < len(profile.values) else None
            rows.append([level, graph.n, girth(undirected_view(graph)), second_eigenvalue(graph), h])
        payload = {"seed": args.seed, "degrees": list(args.degrees), "rows": rows, "profile": profile}
        self._emit("tower", ["level", "n", "girth", "lambda1", "expansion"], rows, payload)

    def glue(self, args):
        """Glue a c-cover and a c'-cover of one base along a letter."""
        g, _ = load_graph(args.input)
        stream = SeedStream(args.seed)
        covers = []
        for side, sheets in enumerate((args.first, args.second)):
            for attempt in range(args.max_tries):
                cover = random_cover(g, sheets, stream.child(side, attempt))
                view = undirected_view(cover.total)
                if girth(view) > 2 and is_connected(view):
                    covers.append(cover)
                    break
            else:
                raise RetriesExhaustedError(f"{sheets}-cover of girth > 2", args.max_tries)

        first, second = covers
        p1, p2 = default_glue_points(first, second)
        glued = glue(first, second, args.letter, p1, p2)
        view = undirected_view(glued.total)
        crossing = crossing_edges(view, range(first.total.n))
        bound = glue_cut_bound(first, second)
        exact = edge_cheeger_exact(view).value if glued.total.n <= EXHAUSTIVE_LIMIT else None
        self.tracker.record("glue crossing", crossing == 2, {"crossing": crossing})
        if exact is not None:
            self.tracker.record("cheeger below glue bound", exact <= bound, {"exact": exact, "bound": bound})

        row = [glued.total.n, args.first, args.second, girth(view), crossing, bound, exact]
        payload = {"row": row, "graph": glued.total.to_dict(), "proj": glued.proj}
        self._emit("glue", ["n", "first", "second", "girth", "crossing", "bound", "cheeger"], [row], payload)

    # Subgroups

    def subgroup(self, args):
        """Transversal and Nielsen-Schreier generators of Stab(basepoint)."""
        g, basepoint = load_graph(args.input)
        if args.basepoint is not None:
            basepoint = args.basepoint
        sub = SubgroupRep(action=g, basepoint=basepoint or 0)
        trans, generators = schreier_machinery(sub.action, sub.basepoint)
        words = generators.format()
        payload = {
            "index": sub.index,
            "basepoint": sub.basepoint,
            "transversal": {v: w.format(g.alphabet) for v, w in enumerate(trans.reps)},
            "generators": words,
        }
        self._emit("subgroup", ["index", "generator"], [[sub.index, w] for w in words], payload)

    def intersect(self, args):
        """Index of the intersection of two subgroups."""
        (a, pa), (b, pb) = load_graph(args.input[0]), load_graph(args.input[1])
        left = SubgroupRep(action=a, basepoint=pa or 0)
        right = SubgroupRep(action=b, basepoint=pb or 0)
        result = intersect_actions(left, right, cap=args.cap)
        row = [left.index, right.index, result.index]
        payload = {
            "index_a": left.index,
            "index_b": right.index,
            "index": result.index,
            "graph": result.action.to_dict(),
        }
        self._emit("intersect", ["index_a", "index_b", "index"], [row], payload)

    # Constructions

    def bad_family(self, args):
        """Index-2 subgroup whose generators' action has a 4-edge cut."""
        base, _ = load_graph(f"sl2-{args.p}" if args.p is not None else args.base)
        member = build_bad_family_member(base)
        report = member.report
        self.tracker.record("bad family witness", report.passed, {"crossing": report.crossing_count})
        row = [
            report.base_vertices,
            report.vertices,
            report.crossing_count,
            report.ch_bound,
            report.relations_hold,
            report.restricted_vertices,
        ]
        header = ["base_vertices", "vertices", "crossing", "ch_bound", "relations_hold", "restricted_vertices"]
        self._emit("bad-family", header, [row], report)

    def chain(self, args):
        """Witness bounds along the intersection chain of bad family members."""
        config = self._config("chain", args, {"bases": args.bases, "max_index": args.max_index})
        bases = [load_graph(name)[0] for name in config.bases]
        report = bad_family_chain_report(bases, max_index=config.max_index)
        self.tracker.record("chain monotone", report.monotone, {"bounds": [lv.bound for lv in report.levels]})
        rows = [
            [lv.level, lv.index, lv.orbit_size, lv.bound, lv.member_bound, lv.crossing, lv.witness_size]
            for lv in report.levels
        ]
        header = ["level", "index", "orbit_size", "bound", "member_bound", "crossing", "witness_size"]
        self._emit("chain", header, rows, report, config.output_dir)

    def glued_tower(self, args):
        """Glued tower pair (G_n, K_n)."""
        config: TowerConfig = self._config(
            "tower",
            args,
            {
                "seed": args.seed,
                "levels": args.levels,
                "start": args.start,
                "delta": args.delta,
                "b": args.b,
                "max_vertices": args.max_vertices,
                "max_tries": args.max_tries,
                "max_edit_distance": args.max_edit_distance,
                "min_component_fraction": args.min_component_fraction,
                "glue_letter": args.glue_letter,
            },
        )
        g1, _ = load_graph(config.start)
        g_tower, k_tower, report = build_glued_towers(g1, config, tracker=self.tracker)

        out_dir = self.out_dir or config.output_dir
        if out_dir:
            writer = ArtifactWriter(out_dir)
            writer.write_json("glued-tower-g-top", g_tower.top.to_dict())
            writer.write_json("glued-tower-k-top", k_tower.top.to_dict())

        header = [
            "level",
            "vertices",
            "girth_g",
            "girth_k",
            "first_degree",
            "second_degree",
            "cheeger_upper_bound",
            "cheeger_exact",
            "edit_distance",
            "k_components",
            "largest_component_fraction",
            "largest_component_lambda1",
        ]
        rows = [[getattr(level, name) for name in header] for level in report.levels]
        self._emit("glued-tower", header, rows, report, config.output_dir)

    def distortion(self, args):
        """h(O, T) against the distortion bound."""
        if args.sweep:
            groups = [cyclic_group(m) for m in range(1, SWEEP_CYCLIC_MAX + 1)]
            groups.extend(g for g in small_groups(12) if not g.name.startswith("z"))
            if args.seed is None:
                raise ConfigError("distortion --sweep samples random subgroups and needs --seed")
            reports = distortion_sweep(groups, random_instances=SWEEP_RANDOM_INSTANCES, seed=args.seed)
        else:
            config = self._config(
                "distortion",
                args,
                {
                    "group": args.group,
                    "index": args.index,
                    "seed": args.seed,
                    "random_subgroup": args.random_subgroup or None,
                },
            )
            group = group_by_name(config.group)
            if config.random_subgroup:
                if config.seed is None:
                    raise ConfigError("a random subgroup needs a seed")
                rng = SeedStream(config.seed).generator()
                sub = random_transitive_action(group.action.alphabet, config.index, rng)
            else:
                sub = standard_subgroup(group, config.index)
            reports = [distortion_audit(group, sub)]

        for report in reports:
            self.tracker.record(
                "distortion bound",
                report.passed,
                {"group": report.group, "k": report.k, "h_orbit": report.h_orbit, "bound": report.bound},
                report.h_orbit_witness,
            )
        header = ["group", "order", "k", "orbit_size", "h_group", "h_orbit", "bound", "passed"]
        rows = [[getattr(r, name) for name in header] for r in reports]
        payload: Any = reports[0] if len(reports) == 1 else [r.model_dump(mode="json") for r in reports]
        self._emit("distortion", header, rows, payload)

    def friedman_sweep(self, args):
        """Fraction of random lifts with all new eigenvalues in the window."""
        config = self._config(
            "friedman_sweep",
            args,
            {
                "seed": args.seed,
                "base": args.base,
                "degree": args.d,
                "trials": args.trials,
                "window": args.window,
                "target_fraction": args.target_fraction,
            },
        )
        base, _ = load_graph(config.base)
        report = friedman_sweep(
            base,
            config.degree,
            config.trials,
            config.seed,
            window=config.window,
            target_fraction=config.target_fraction,
            base_name=config.base,
        )
        self.tracker.record(
            "friedman window",
            report.passed,
            {"fraction": report.fraction, "target": report.target_fraction},
        )
        header = ["base", "cover_degree", "trials", "window", "inside", "fraction", "max_abs_new", "passed"]
        rows = [[getattr(report, name) for name in header]]
        self._emit("friedman-sweep", header, rows, report, config.output_dir)


def _int_list(text: str) -> List[int]:
    try:
        return [int(part) for part in text.split(",") if part.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="slab",
        description="Schreier Lab - Schreier graphs, covers and expansion audits",
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    parser.add_argument(
        "--log-level",
        default="WARNING",
        choices=["DEBUG", "INFO", "WARNING", "ERROR"],
        help="Logging level (default: WARNING)",
    )
    parser.add_argument("--out", help="Directory for CSV and JSON artifacts")
    parser.add_argument("--json", action="store_true", help="Print JSON instead of CSV")

    subparsers = parser.add_subparsers(dest="command", help="Available commands")

    for name, help_text in [
        ("stats", "Girth, components and degrees"),
        ("spectrum", "Adjacency spectrum"),
        ("cheeger", "Exact edge Cheeger constant"),
        ("psi", "Bipartiteness constants"),
    ]:
        sub = subparsers.add_parser(name, help=help_text)
        sub.add_argument("--in", dest="input", required=True, help="Graph file or named graph")
        if name == "spectrum":
            sub.add_argument("--check", action="store_true", help="Verify trace identities")

    decompose_parser = subparsers.add_parser("decompose", help="Label a regular multigraph")
    decompose_parser.add_argument("--in", dest="input", required=True, help="Multigraph file")
    decompose_parser.add_argument(
        "--mode",
        default="schreier",
        choices=["schreier", "symmetric"],
        help="schreier: 2j-regular -> j letters; symmetric: k-regular -> k letters",
    )

    cover_parser = subparsers.add_parser("cover", help="Random (iterated) cover")
    cover_parser.add_argument("--in", dest="input", help="Graph file or named graph")
    cover_parser.add_argument("--degrees", type=_int_list, help="Sheets per level, e.g. 2,3")
    cover_parser.add_argument("--seed", type=int, help="Root seed")
    cover_parser.add_argument("--boost-girth", action="store_true", help="Grow depth until the girth increases")
    cover_parser.add_argument("--max-tries", type=int, help="Girth boosting attempts")

    tower_parser = subparsers.add_parser("tower", help="Iterated cover with per-level diagnostics")
    tower_parser.add_argument("--in", dest="input", required=True, help="Graph file or named graph")
    tower_parser.add_argument("--degrees", type=_int_list, required=True, help="Sheets per level")
    tower_parser.add_argument("--seed", type=int, required=True, help="Root seed")

    glue_parser = subparsers.add_parser("glue", help="Glue two random covers of one base")
    glue_parser.add_argument("--in", dest="input", required=True, help="Base graph file or named graph")
    glue_parser.add_argument("--first", type=int, default=2, help="Sheets of the first cover")
    glue_parser.add_argument("--second", type=int, default=2, help="Sheets of the second cover")
    glue_parser.add_argument("--letter", type=int, default=0, help="Letter index to glue along")
    glue_parser.add_argument("--seed", type=int, required=True, help="Root seed")
    glue_parser.add_argument("--max-tries", type=int, default=50, help="Samples per cover")

    subgroup_parser = subparsers.add_parser("subgroup", help="Transversal and Schreier generators")
    subgroup_parser.add_argument("--in", dest="input", required=True, help="Action graph file")
    subgroup_parser.add_argument("--basepoint", type=int, help="Override the file's basepoint")

    intersect_parser = subparsers.add_parser("intersect", help="Intersect two subgroups")
    intersect_parser.add_argument("--in", dest="input", nargs=2, required=True, help="Two action graph files")
    intersect_parser.add_argument("--cap", type=int, help="Index cap")

    bad_parser = subparsers.add_parser(
        "bad-family", aliases=["rossztau"], help="Index-2 subgroup with a small cut"
    )
    bad_parser.add_argument("--base", default="sl2-5", help="Two-letter base action (default: sl2-5)")
    bad_parser.add_argument("--p", type=int, help="Use SL(2, p) as the base")
    bad_parser.add_argument("--seed", type=int, help="Root seed (the construction itself is deterministic)")

    chain_parser = subparsers.add_parser("chain", aliases=["lubtau"], help="Intersection chain of bad family members")
    chain_parser.add_argument("--bases", nargs="+", help="Base actions, e.g. sl2-5 sl2-7")
    chain_parser.add_argument("--max-index", type=int, help="Index cap")

    glued_parser = subparsers.add_parser("glued-tower", aliases=["gluelemma"], help="Glued tower pair (G_n, K_n)")
    glued_parser.add_argument("--seed", type=int, help="Root seed")
    glued_parser.add_argument("--levels", type=int, help="Glue steps")
    glued_parser.add_argument("--start", help="Start graph (default: k4-matching)")
    glued_parser.add_argument("--delta", help="Gap constant, e.g. 1 or 1/2")
    glued_parser.add_argument("--b", type=float, help="New-eigenvalue ceiling")
    glued_parser.add_argument("--max-vertices", type=int, help="Vertex cap")
    glued_parser.add_argument("--max-tries", type=int, help="Samples per lift pair")
    glued_parser.add_argument("--max-edit-distance", help="Edit distance threshold, e.g. 1/4")
    glued_parser.add_argument("--min-component-fraction", help="Largest component threshold, e.g. 1/5")
    glued_parser.add_argument("--glue-letter", type=int, help="Letter index to glue along")

    distortion_parser = subparsers.add_parser("distortion", aliases=["nagytetel"], help="Expansion distortion audit")
    distortion_parser.add_argument("--group", help="z<m>, d<m>, s3 or a4")
    distortion_parser.add_argument("--index", type=int, help="Subgroup index k")
    distortion_parser.add_argument("--seed", type=int, help="Seed for random subgroups")
    distortion_parser.add_argument("--random-subgroup", action="store_true", help="Sample the subgroup")
    distortion_parser.add_argument("--sweep", action="store_true", help="Audit every fixture group")

    friedman_parser = subparsers.add_parser("friedman-sweep", help="New eigenvalues of random lifts")
    friedman_parser.add_argument("--base", help="Base graph (default: bouquet2)")
    friedman_parser.add_argument("--d", type=int, help="Sheets per lift")
    friedman_parser.add_argument("--trials", type=int, help="Number of lifts")
    friedman_parser.add_argument("--seed", type=int, help="Root seed")
    friedman_parser.add_argument("--window", type=float, help="Window half-width")
    friedman_parser.add_argument("--target-fraction", type=float, help="Required fraction")

    for sub in (cover_parser, chain_parser, glued_parser, distortion_parser, friedman_parser):
        sub.add_argument("--config", help="YAML or JSON experiment file")
        sub.add_argument("--var", action="append", help="Config variable (name=value)")

    return parser


COMMANDS = {
    "stats": CLI.stats,
    "spectrum": CLI.spectrum,
    "cheeger": CLI.cheeger,
    "psi": CLI.psi,
    "decompose": CLI.decompose,
    "cover": CLI.cover,
    "tower": CLI.tower,
    "glue": CLI.glue,
    "subgroup": CLI.subgroup,
    "intersect": CLI.intersect,
    "bad-family": CLI.bad_family,
    "chain": CLI.chain,
    "glued-tower": CLI.glued_tower,
    "distortion": CLI.distortion,
    "friedman-sweep": CLI.friedman_sweep,
}

ALIASES = {
    "rossztau": "bad-family",
    "lubtau": "chain",
    "gluelemma": "glued-tower",
    "nagytetel": "distortion",
}


def run(argv: Optional[Sequence[str]] = None) -> int:
    """Run one command and return its exit code."""
    parser = build_parser()
    args = parser.parse_args(argv)

    if not args.command:
        parser.print_help(sys.stderr)
        return EXIT_USAGE

    logging.basicConfig(
        level=getattr(logging, args.log_level),
        format=LOG_FORMAT,
        handlers=[logging.StreamHandler(sys.stderr)],
    )

    cli = CLI(out_dir=args.out, as_json=args.json)
    try:
        COMMANDS[ALIASES.get(args.command, args.command)](cli, args)
    except SchreierLabError as e:
        print(f"✗ {e.message}", file=sys.stderr)
        if args.json:
            print(canonical_json(e.to_dict()), end="", file=sys.stderr)
        return e.exit_code
    except (ValueError, OSError) as e:
        print(f"✗ Error: {e}", file=sys.stderr)
        return EXIT_USAGE

    if not cli.tracker.passed:
        for check in cli.tracker.failures:
            print(f"✗ Property check failed: {check.name}", file=sys.stderr)
            print(canonical_json(check), end="", file=sys.stderr)
        return EXIT_PROPERTY_FAILED
    return EXIT_OK


def main():
    """Main CLI entry point."""
    sys.exit(run())


if __name__ == "__main__":
    main()
