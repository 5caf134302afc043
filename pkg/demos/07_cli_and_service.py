"""The command line and the HTTP service, driven from Python.

Everything the library does is reachable as `chipfire <command>` on graph
files, and as JSON over HTTP for interactive clients.  This script fakes a
shell session by calling the CLI entry point directly, then talks to the
service in-process.
"""

import json
import pathlib
import tempfile

from chipfire.cli import main

workdir = pathlib.Path(tempfile.mkdtemp())
graph = workdir / "pentagon.json"
graph.write_text(json.dumps({
    "vertices": ["v1", "v2", "v3", "v4", "v5"],
    "edges": [["v1", "v2"], ["v2", "v3"], ["v3", "v4"], ["v4", "v5"],
              ["v5", "v1"], ["v1", "v3"]],
}))

double_v4 = workdir / "double_v4.json"
double_v4.write_text(json.dumps({"v4": 2}))
debt = workdir / "debt.json"
debt.write_text(json.dumps({"v1": -1, "v2": 2}))

print("$ chipfire rank --graph", graph.name, "--divisor", double_v4.name)
main(["rank", "--graph", str(graph), "--divisor", str(double_v4)])

print("\n$ chipfire jacobian --graph", graph.name)
main(["jacobian", "--graph", str(graph)])

print("\n$ chipfire --pretty winnable --graph", graph.name, "--divisor", debt.name)
main(["--pretty", "winnable", "--graph", str(graph), "--divisor", str(debt)])

# the service wraps the same engine; sessions hold game state server-side
try:
    from fastapi.testclient import TestClient

    from chipfire.service import create_app
except ModuleNotFoundError:
    print("\n(fastapi not installed, skipping the service half)")
else:
    with TestClient(create_app()) as client:
        board = json.loads(graph.read_text())
        resp = client.post("/session", json={"graph": board, "divisor": {"v1": -1, "v2": 2}})
        sid = resp.json()["id"]
        print("\nsession", sid, "state:", resp.json()["config"])

        hint = client.get(f"/session/{sid}/hint").json()
        print("hint:", hint)

        while hint["suggested_move"]:
            vertex, kind = hint["suggested_move"]
            state = client.post(f"/session/{sid}/move", json={"vertex": vertex, "kind": kind}).json()
            if state["won"]:
                print("won after", len(state["log"]), "moves:", state["config"])
                break
            hint = client.get(f"/session/{sid}/hint").json()

        analysis = client.post("/graph/analyze", json={"graph": board}).json()
        print("analysis:", {k: analysis[k] for k in ("genus", "spanning_tree_count", "invariant_factors")})
