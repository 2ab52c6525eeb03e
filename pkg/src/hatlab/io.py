"""JSON and DOT serialization.

All JSON output is canonical: sorted keys, LF line endings, trailing
newline — so saved artifacts are diffable and save(load(f)) is
byte-identical.  Schema errors carry JSON-pointer paths ("/hatness/x").
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Optional

from . import algebra
from .games import HatGame, make_game
from .graphs import Graph, make_graph


class SchemaError(ValueError):
    def __init__(self, pointer: str, message: str):
        self.pointer = pointer
        super().__init__(f"{pointer}: {message}")


def frac_str(x) -> str:
    """Exact rational as 'p/q' in lowest terms; integers without '/1'."""
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def canonical_dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


def _write(path: str, text: str):
    with open(path, "w", newline="\n") as f:
        f.write(text)


# -- graphs ------------------------------------------------------------


def graph_to_json(graph: Graph) -> dict:
    return {
        "vertices": list(graph.vertices),
        "edges": sorted(sorted(e) for e in graph.edges),
    }


def graph_from_json(obj, pointer: str = "") -> Graph:
    if not isinstance(obj, dict):
        raise SchemaError(pointer or "/", "expected an object")
    for key in ("vertices", "edges"):
        if key not in obj:
            raise SchemaError(f"{pointer}/{key}", "missing")
    verts = obj["vertices"]
    if not isinstance(verts, list) or not all(isinstance(v, str) for v in verts):
        raise SchemaError(f"{pointer}/vertices", "expected a list of names")
    edges = []
    for i, e in enumerate(obj["edges"]):
        if not (isinstance(e, list) and len(e) == 2):
            raise SchemaError(f"{pointer}/edges/{i}", "expected a name pair")
        edges.append(tuple(e))
    try:
        return make_graph(verts, edges)
    except ValueError as err:
        raise SchemaError(pointer or "/", str(err)) from err


# -- games -------------------------------------------------------------


def game_to_json(game: HatGame) -> dict:
    obj = graph_to_json(game.graph)
    obj["hatness"] = dict(game.h)
    if not game.is_classic():
        obj["guesses"] = dict(game.g)
    return obj


def game_from_json(obj) -> HatGame:
    graph = graph_from_json(obj)
    if "hatness" not in obj:
        raise SchemaError("/hatness", "missing")
    h = obj["hatness"]
    if not isinstance(h, dict):
        raise SchemaError("/hatness", "expected an object")
    for v, hv in h.items():
        if v not in graph._adj:
            raise SchemaError(f"/hatness/{v}", "unknown vertex")
        if not isinstance(hv, int) or hv < 1:
            raise SchemaError(f"/hatness/{v}", "hatness must be a positive integer")
    g = obj.get("guesses")
    if g is not None:
        if not isinstance(g, dict):
            raise SchemaError("/guesses", "expected an object")
        for v, gv in g.items():
            if v not in graph._adj:
                raise SchemaError(f"/guesses/{v}", "unknown vertex")
            if not isinstance(gv, int) or gv < 1:
                raise SchemaError(f"/guesses/{v}", "guesses must be a positive integer")
    try:
        return make_game(graph, h, g)
    except ValueError as err:
        raise SchemaError("/", str(err)) from err


def load_game(path: str) -> HatGame:
    with open(path) as f:
        try:
            obj = json.load(f)
        except json.JSONDecodeError as err:
            raise SchemaError("/", f"invalid JSON: {err}") from err
    return game_from_json(obj)


def save_game(game: HatGame, path: str):
    _write(path, canonical_dumps(game_to_json(game)))


# -- expressions -------------------------------------------------------


def expr_to_json(e: algebra.GameExpr) -> dict:
    if isinstance(e, algebra.CliqueLeaf):
        return {
            "op": "clique",
            "vertices": list(e.vertices),
            "h": dict(e.h),
            "g": dict(e.g),
        }
    if isinstance(e, algebra.Sum):
        return {
            "op": "sum",
            "left": expr_to_json(e.left),
            "S": list(e.S),
            "right": expr_to_json(e.right),
            "v": e.v,
        }
    if isinstance(e, algebra.Product):
        return {
            "op": "product",
            "left": expr_to_json(e.left),
            "A": e.A,
            "right": expr_to_json(e.right),
            "v": e.v,
        }
    if isinstance(e, algebra.Substitute):
        return {
            "op": "substitute",
            "inner": expr_to_json(e.inner),
            "outer": expr_to_json(e.outer),
            "at": e.at,
        }
    if isinstance(e, algebra.SumLose):
        return {
            "op": "sum_lose",
            "left": expr_to_json(e.left),
            "A": e.A,
            "right": expr_to_json(e.right),
            "v": e.v,
        }
    if isinstance(e, algebra.PendantLose):
        return {
            "op": "pendant_lose",
            "base": expr_to_json(e.base),
            "B": e.B,
            "A": e.A,
        }
    raise SchemaError("/", f"not a game expression: {e!r}")


def expr_from_json(obj, pointer: str = "") -> algebra.GameExpr:
    if not isinstance(obj, dict) or "op" not in obj:
        raise SchemaError(f"{pointer}/op", "missing")

    def need(key):
        if key not in obj:
            raise SchemaError(f"{pointer}/{key}", "missing")
        return obj[key]

    op = obj["op"]
    if op == "clique":
        return algebra.CliqueLeaf(
            tuple(need("vertices")), dict(need("h")), dict(obj.get("g", {}))
        )
    if op == "sum":
        return algebra.Sum(
            expr_from_json(need("left"), f"{pointer}/left"),
            tuple(need("S")),
            expr_from_json(need("right"), f"{pointer}/right"),
            need("v"),
        )
    if op == "product":
        return algebra.Product(
            expr_from_json(need("left"), f"{pointer}/left"),
            need("A"),
            expr_from_json(need("right"), f"{pointer}/right"),
            need("v"),
        )
    if op == "substitute":
        inner = expr_from_json(need("inner"), f"{pointer}/inner")
        if not isinstance(inner, algebra.CliqueLeaf):
            raise SchemaError(f"{pointer}/inner", "substitution inner must be a clique")
        return algebra.Substitute(
            inner, expr_from_json(need("outer"), f"{pointer}/outer"), need("at")
        )
    if op == "sum_lose":
        return algebra.SumLose(
            expr_from_json(need("left"), f"{pointer}/left"),
            need("A"),
            expr_from_json(need("right"), f"{pointer}/right"),
            need("v"),
        )
    if op == "pendant_lose":
        return algebra.PendantLose(
            expr_from_json(need("base"), f"{pointer}/base"), need("B"), need("A")
        )
    raise SchemaError(f"{pointer}/op", f"unknown operation {op!r}")


def load_expr(path: str) -> algebra.GameExpr:
    with open(path) as f:
        try:
            obj = json.load(f)
        except json.JSONDecodeError as err:
            raise SchemaError("/", f"invalid JSON: {err}") from err
    return expr_from_json(obj)


def save_expr(e: algebra.GameExpr, path: str):
    _write(path, canonical_dumps(expr_to_json(e)))


# -- strategies --------------------------------------------------------


def strategy_to_json(strategy: dict) -> dict:
    return {
        v: {",".join(map(str, sigma)): list(guesses) for sigma, guesses in table.items()}
        for v, table in strategy.items()
    }


def strategy_from_json(obj) -> dict:
    out = {}
    for v, table in obj.items():
        out[v] = {
            tuple(int(c) for c in key.split(",")) if key else (): tuple(guesses)
            for key, guesses in table.items()
        }
    return out


# -- DOT ---------------------------------------------------------------


def _dot_quote(name: str) -> str:
    return '"' + name.replace("\\", "\\\\").replace('"', '\\"') + '"'


def dot_text(game_or_graph) -> str:
    if isinstance(game_or_graph, HatGame):
        game: Optional[HatGame] = game_or_graph
        graph = game.graph
    else:
        game = None
        graph = game_or_graph
    lines = ["graph {"]
    for v in graph.vertices:
        if game is None:
            lines.append(f"  {_dot_quote(v)};")
        else:
            label = f"{v}\\nh={game.h[v]}"
            if game.g[v] > 1:
                label += f",g={game.g[v]}"
            # label keeps the literal \n escape DOT expects; quote " only
            quoted = '"' + label.replace('"', '\\"') + '"'
            lines.append(f"  {_dot_quote(v)} [label={quoted}];")
    for a, b in sorted(sorted(e) for e in graph.edges):
        lines.append(f"  {_dot_quote(a)} -- {_dot_quote(b)};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def export_dot(game_or_graph, path: str):
    _write(path, dot_text(game_or_graph))
