"""Command line front end.

Every subcommand reads JSON files, prints one JSON document to stdout and
exits 0; malformed input exits 2 and a tripped resource guard exits 3, both
with a message on stderr.  Group orders are emitted as decimal strings since
they can exceed what doubles (and thus many JSON readers) carry exactly.
"""

from __future__ import annotations

import argparse
import json
import sys

from .divisors import Divisor, divisor_from_json, divisor_to_json
from .errors import GraphConstructionError, ResourceGuardError
from .multigraph import INFINITE, Multigraph, graph_from_json
from .rank import linear_system, rank as compute_rank
from . import dollar_game, jacobian, lattices, reduction, sandpile


def _load_json(path: str):
    try:
        with open(path) as fh:
            return json.load(fh)
    except OSError as exc:
        raise GraphConstructionError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise GraphConstructionError(f"{path} is not valid JSON: {exc}") from exc


def _load_graph(path: str) -> Multigraph:
    return graph_from_json(_load_json(path))


def _load_divisor(g: Multigraph, path: str) -> Divisor:
    data = _load_json(path)
    try:
        return divisor_from_json(g, data)
    except ValueError as exc:
        raise GraphConstructionError(f"{path}: {exc}") from exc


def _emit(obj, pretty: bool):
    if pretty:
        json.dump(obj, sys.stdout, indent=2, sort_keys=False)
    else:
        json.dump(obj, sys.stdout, separators=(",", ":"))
    sys.stdout.write("\n")


def _cmd_rank(args) -> dict:
    g = _load_graph(args.graph)
    d = _load_divisor(g, args.divisor)
    result = compute_rank(g, d, args.base)
    return {
        "rank": result.value,
        "degree": d.degree(),
        "certificate": (
            divisor_to_json(g, result.certificate) if result.certificate is not None else None
        ),
    }


def _cmd_reduce(args) -> dict:
    g = _load_graph(args.graph)
    d = _load_divisor(g, args.divisor)
    red = reduction.reduce(g, d, args.base)
    script = {v: c for v, c in zip(g.vertices, red.script.coeffs) if c != 0}
    return {
        "base": red.base,
        "reduced": divisor_to_json(g, red.divisor),
        "script": script,
    }


def _cmd_linsys(args) -> dict:
    g = _load_graph(args.graph)
    d = _load_divisor(g, args.divisor)
    system = linear_system(g, d)
    return {
        "divisor": divisor_to_json(g, d),
        "degree": d.degree(),
        "size": len(system),
        "empty": len(system) == 0,
        "members": [divisor_to_json(g, e) for e in system.members],
    }


def _cmd_jacobian(args) -> dict:
    g = _load_graph(args.graph)
    js = jacobian.jacobian_structure(g, args.base)
    return {
        "invariant_factors": list(js.nontrivial_factors),
        "order": str(js.order),
        "genus": js.genus,
    }


def _cmd_lattice(args) -> dict:
    g = _load_graph(args.graph)
    report = lattices.lattice_diagnostics(g)
    conn = g.edge_connectivity()
    return {
        **report,
        "spanning_tree_count": str(g.spanning_tree_count()),
        "girth": g.girth(),
        "edge_connectivity": None if conn is INFINITE else conn,
        "bipartite": g.is_bipartite(),
        "eulerian": g.is_eulerian(),
    }


def _parse_moves(raw) -> list[tuple[str, str]]:
    if not isinstance(raw, list):
        raise GraphConstructionError("move script must be a JSON array")
    moves = []
    for item in raw:
        if isinstance(item, dict) and set(item) >= {"vertex", "kind"}:
            moves.append((item["vertex"], item["kind"]))
        elif isinstance(item, (list, tuple)) and len(item) == 2:
            moves.append((item[0], item[1]))
        else:
            raise GraphConstructionError(f"bad move entry: {item!r}")
    return moves


def _cmd_play(args) -> dict:
    g = _load_graph(args.graph)
    d = _load_divisor(g, args.divisor)
    state = dollar_game.GameState(g, d)
    moves = _parse_moves(_load_json(args.script)) if args.script else []
    try:
        for vertex, kind in moves:
            state = dollar_game.apply_move(state, vertex, kind)
    except (KeyError, ValueError) as exc:
        raise GraphConstructionError(f"bad move: {exc}") from exc
    return {
        "final": divisor_to_json(g, state.config),
        "total": state.total,
        "won": state.is_won(),
        "moves_applied": len(moves),
    }


def _cmd_sandpile(args) -> dict:
    g = _load_graph(args.graph)
    d = _load_divisor(g, args.config)
    try:
        config = sandpile.SandpileConfig(d.coeffs)
    except ValueError as exc:
        raise GraphConstructionError(str(exc)) from exc
    if args.policy == "lowest":
        policy = sandpile.lowest_index_policy
    elif args.policy == "random":
        policy = sandpile.random_policy(args.seed)
    else:
        policy = sandpile.round_robin_policy()
    result = sandpile.run(g, config, policy, cap=args.cap)
    return {
        "outcome": result.outcome,
        "evidence": result.evidence,
        "move_count": result.move_count,
        "fired": {v: c for v, c in zip(g.vertices, result.fired) if c},
        "terminal": divisor_to_json(g, result.terminal.as_divisor()) if result.terminal else None,
        "finite_by_duality": sandpile.finiteness_via_duality(g, config),
    }


def _cmd_winnable(args) -> dict:
    g = _load_graph(args.graph)
    d = _load_divisor(g, args.divisor)
    state = dollar_game.GameState(g, d)
    strategy = dollar_game.winning_strategy(state)
    return {
        "winnable": strategy is not None,
        "degree": d.degree(),
        "genus": g.genus(),
        "strategy": [list(mv) for mv in strategy.moves] if strategy is not None else None,
    }


def _cmd_serve(args) -> dict:
    import uvicorn

    from .service import create_app

    app = create_app(snapshot_path=args.snapshot)
    uvicorn.run(app, host=args.host, port=args.port, log_level="warning")
    return {}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="chipfire", description=__doc__)
    parser.add_argument("--pretty", action="store_true", help="indent the JSON output")
    sub = parser.add_subparsers(dest="command", required=True)

    def with_graph(p):
        p.add_argument("--graph", required=True, help="graph JSON file")
        return p

    p = with_graph(sub.add_parser("rank", help="rank of a divisor, with a failing certificate"))
    p.add_argument("--divisor", required=True)
    p.add_argument("--base", default=None)

    p = with_graph(sub.add_parser("reduce", help="base-reduced form and the move script"))
    p.add_argument("--divisor", required=True)
    p.add_argument("--base", default=None)

    p = with_graph(sub.add_parser("linsys", help="all effective divisors equivalent to the input"))
    p.add_argument("--divisor", required=True)

    p = with_graph(sub.add_parser("jacobian", help="critical group invariant factors"))
    p.add_argument("--base", default=None)

    with_graph(sub.add_parser("lattice", help="flow/cut lattice diagnostics"))

    p = with_graph(sub.add_parser("play", help="apply a move script to a configuration"))
    p.add_argument("--divisor", required=True)
    p.add_argument("--script", default=None, help="JSON array of [vertex, kind] moves")

    p = with_graph(sub.add_parser("sandpile", help="run the constrained chip-firing game"))
    p.add_argument("--config", required=True, help="nonnegative chip counts, divisor JSON")
    p.add_argument("--policy", choices=["lowest", "random", "roundrobin"], default="lowest")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--cap", type=int, default=100_000)

    p = with_graph(sub.add_parser("winnable", help="decide winnability, with a strategy"))
    p.add_argument("--divisor", required=True)

    p = sub.add_parser("serve", help="start the HTTP session service")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8714)
    p.add_argument("--snapshot", default=None, help="write sessions here on shutdown")

    return parser


_COMMANDS = {
    "rank": _cmd_rank,
    "reduce": _cmd_reduce,
    "linsys": _cmd_linsys,
    "jacobian": _cmd_jacobian,
    "lattice": _cmd_lattice,
    "play": _cmd_play,
    "sandpile": _cmd_sandpile,
    "winnable": _cmd_winnable,
    "serve": _cmd_serve,
}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        result = _COMMANDS[args.command](args)
    except ResourceGuardError as exc:
        print(f"resource guard tripped: {exc.guard}", file=sys.stderr)
        return 3
    except (GraphConstructionError, ValueError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if args.command != "serve":
        _emit(result, args.pretty)
    return 0


if __name__ == "__main__":
    sys.exit(main())
