"""Command line interface: ``kdual <command> [options]``.

Objects are printed as JSON with sorted keys, surveys as CSV.  Exit status is
0 on success, 1 for usage or input errors, and 2 when a search budget runs out.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import generators
from .errors import BudgetExceeded, GraphError, HypothesisViolation, ParseError
from .genus import DEFAULT_BUDGET, genus_report, nonorientable_genus_connected
from .graph import dump_graph, load_graph, load_graphs
from .hypergraph import Hypergraph, verify_ding_bound
from .packing import (
    DEFAULT_CAP,
    DEFAULT_NODE_BUDGET,
    apex_to_genus,
    duality_report,
    k_number,
    planar_deletion_set,
)
from .planarity import is_planar, kuratowski_witness
from .society import Society, find_cross, is_rural
from .survey import mixed_corpus, render_csv, survey_rows
from .tangles import planar_side_tangle

COMMANDS = (
    "planarity",
    "witness",
    "genus",
    "pack",
    "cover",
    "apex",
    "duality",
    "hypergraph-verify",
    "society-cross",
    "society-rural",
    "tangle",
    "generate",
    "survey",
)


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _read_input(path: str | None) -> bytes:
    if path is None or path == "-":
        return sys.stdin.buffer.read()
    with open(path, "rb") as fh:
        return fh.read()


def _graph(args):
    return load_graph(_read_input(args.input), args.format)


def _json_input(args):
    try:
        return json.loads(_read_input(args.input))
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, exc.pos) from None


def _emit(args, text: str) -> None:
    if not text.endswith("\n"):
        text += "\n"
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2)


def cmd_planarity(args):
    return _dumps({"planar": is_planar(_graph(args))})


def cmd_witness(args):
    w = kuratowski_witness(_graph(args))
    return _dumps({"planar": w is None, "witness": None if w is None else w.to_json()})


def cmd_genus(args):
    g = _graph(args)
    rep = genus_report(g, args.budget_schemes).to_json()
    if args.nonorientable:
        rep["nonorientable_per_component"] = [
            nonorientable_genus_connected(g.induced(c)[0], args.budget_schemes) for c in g.components
        ]
    return _dumps(rep)


def cmd_pack(args):
    size, cert = k_number(_graph(args), args.mode, args.cap)
    return _dumps({"k_number": size, "mode": args.mode, "certificate": cert.to_json()})


def cmd_cover(args):
    return _dumps(planar_deletion_set(_graph(args), args.budget_nodes).to_json())


def cmd_apex(args):
    cert = apex_to_genus(_graph(args), args.k, args.budget_schemes, args.budget_nodes)
    return _dumps({"k": args.k, "certificate": None if cert is None else cert.to_json()})


def cmd_duality(args):
    rep = duality_report(_graph(args), args.k, args.budget_schemes, args.budget_nodes, args.cap)
    return _dumps(rep.to_json())


def cmd_hypergraph_verify(args):
    h = Hypergraph.from_json(_json_input(args))
    return _dumps(verify_ding_bound(h).to_json())


def cmd_society_cross(args):
    s = Society.from_json(_json_input(args))
    c = find_cross(s, args.budget_nodes)
    return _dumps({"cross": None if c is None else c.to_json()})


def cmd_society_rural(args):
    return _dumps({"rural": is_rural(Society.from_json(_json_input(args)))})


def cmd_tangle(args):
    g = _graph(args)
    return _dumps(planar_side_tangle(g, args.theta).to_json(g))


def cmd_generate(args):
    kind = args.kind
    if kind in ("random", "apex_planar", "society", "hypergraph", "cross_config") and args.seed is None:
        raise UsageError(f"generate {kind} needs --seed")
    if kind == "kuratowski":
        kinds = args.kinds.split(",") if args.kinds else None
        g = generators.kuratowski(args.k if args.k is not None else len(kinds or []), kinds)
    elif kind == "random":
        g = generators.random_graph(_need(args.n, "--n"), _need(args.p, "--p"), args.seed)
    elif kind == "apex_planar":
        g = generators.apex_planar(_need(args.base_size, "--base-size"), _need(args.apex_count, "--apex-count"), args.seed)
    elif kind == "society":
        s = generators.society(_need(args.n, "--n"), _need(args.boundary_size, "--boundary-size"), args.seed, args.p)
        return _dumps(s.to_json())
    elif kind == "hypergraph":
        h = generators.hypergraph(
            _need(args.n, "--n"), _need(args.m, "--m"), _need(args.max_edge, "--max-edge"), args.seed
        )
        return _dumps(h.to_json())
    elif kind == "cross_config":
        return _dumps(generators.cross_config(args.seed).to_json())
    else:
        raise UsageError(f"unknown generator {kind!r}")
    fmt = args.format if args.format != "graph6" or g.n < 258048 else "json"
    return dump_graph(g, fmt).decode()


def _need(value, flag):
    if value is None:
        raise UsageError(f"missing {flag}")
    return value


def cmd_survey(args):
    if args.input is not None:
        graphs = load_graphs(_read_input(args.input), args.format)
    else:
        if args.seed is None:
            raise UsageError("survey without --input needs --seed for the generated corpus")
        graphs = mixed_corpus(args.count, args.seed, args.max_n)
    ks = [int(x) for x in str(args.k).split(",")]
    rows = survey_rows(graphs, ks, args.budget_schemes, args.budget_nodes, args.cap)
    return render_csv(rows)


HANDLERS = {name: globals()["cmd_" + name.replace("-", "_")] for name in COMMANDS}


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--input", help="input file ('-' or omitted: stdin)")
    common.add_argument("--format", default="graph6", choices=("graph6", "edgelist", "edge_list", "json"))
    common.add_argument("--seed", type=int, help="64-bit seed for generated instances")
    common.add_argument("--budget-schemes", type=int, default=DEFAULT_BUDGET, help="genus search budget (face traces)")
    common.add_argument("--budget-nodes", type=int, default=DEFAULT_NODE_BUDGET, help="branching search budget")
    common.add_argument("--cap", type=int, default=DEFAULT_CAP, help="cap on minimal K-graph enumeration")
    common.add_argument("--out", help="write output here instead of stdout")

    parser = _Parser(prog="kdual", description="Kuratowski packing/covering toolkit")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    for name in COMMANDS:
        p = sub.add_parser(name, parents=[common])
        if name in ("apex", "duality"):
            p.add_argument("--k", type=int, required=True)
        if name == "survey":
            p.add_argument("--k", default="0,1", help="comma separated list of k")
            p.add_argument("--count", type=int, default=100)
            p.add_argument("--max-n", type=int, default=12)
        if name == "pack":
            p.add_argument("--mode", choices=("exact", "lower"), default="exact")
        if name == "genus":
            p.add_argument("--nonorientable", action="store_true", help="also report crosscap numbers")
        if name == "tangle":
            p.add_argument("--theta", type=int, required=True)
        if name == "generate":
            p.add_argument("kind", choices=("kuratowski", "random", "apex_planar", "society", "hypergraph", "cross_config"))
            p.add_argument("--k", type=int)
            p.add_argument("--kinds", help="comma separated K5/K33 list")
            p.add_argument("--n", type=int)
            p.add_argument("--p", type=float)
            p.add_argument("--m", type=int)
            p.add_argument("--max-edge", type=int)
            p.add_argument("--base-size", type=int)
            p.add_argument("--apex-count", type=int)
            p.add_argument("--boundary-size", type=int)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        text = HANDLERS[args.command](args)
        _emit(args, text)
    except UsageError as exc:
        print(f"kdual: usage error: {exc}", file=sys.stderr)
        return 1
    except (ParseError, GraphError, HypothesisViolation, ValueError, KeyError, OSError) as exc:
        print(f"kdual: error: {exc}", file=sys.stderr)
        return 1
    except BudgetExceeded as exc:
        print(f"kdual: budget exceeded: {exc}", file=sys.stderr)
        return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())
