"""JSON files for graphs, colourings and plans."""

from __future__ import annotations

import json
from pathlib import Path
from typing import Union

from .graph import EdgeColouring, GraphError, Multigraph, build_graph

__all__ = [
    "graph_to_json", "graph_from_json", "colouring_to_json", "colouring_from_json",
    "load_json", "dump_json",
]

PathLike = Union[str, Path]


def graph_to_json(G: Multigraph) -> dict:
    return {"n": G.n, "edges": [list(e) for e in G.edges]}


def graph_from_json(data: dict) -> Multigraph:
    try:
        n = int(data["n"])
        edges = [tuple(int(x) for x in e) for e in data["edges"]]
    except (KeyError, TypeError, ValueError) as exc:
        raise GraphError(f"malformed graph JSON: {exc}") from exc
    if any(len(e) != 2 for e in edges):
        raise GraphError("every edge needs exactly two endpoints")
    return build_graph(n, edges)


def colouring_to_json(c: EdgeColouring) -> dict:
    return {"k": c.k, "colours": list(c.colours)}


def colouring_from_json(data: dict) -> EdgeColouring:
    try:
        return EdgeColouring(int(data["k"]), tuple(int(x) for x in data["colours"]))
    except (KeyError, TypeError, ValueError) as exc:
        raise ValueError(f"malformed colouring JSON: {exc}") from exc


def load_json(path: PathLike) -> dict:
    with open(path, encoding="utf-8") as fh:
        return json.load(fh)


def dump_json(data, path: PathLike = None) -> str:
    text = json.dumps(data, sort_keys=True)
    if path is not None:
        Path(path).write_text(text + "\n", encoding="utf-8")
    return text
