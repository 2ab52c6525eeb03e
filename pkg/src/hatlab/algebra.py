"""Theorem-constructors as a certificate-producing expression language.

An expression tree combines clique games by the sum / product /
substitution constructors (winning side) or by the losing-sum and
pendant-attachment theorems (losing side).  Evaluating it builds the
composite game and derives its status; Unknown is a first-class result
for mixtures the rules do not cover.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Union

from . import graphs
from .games import HatGame, clique_criterion, glue_hatness, make_game
from .graphs import Graph, complete_graph


class ExprError(ValueError):
    """Violated constructor-rule hypothesis or malformed expression."""


@dataclass(frozen=True)
class CliqueLeaf:
    vertices: tuple[str, ...]
    h: dict[str, int]
    g: dict[str, int] = field(default_factory=dict)


@dataclass(frozen=True)
class Sum:
    left: "GameExpr"
    S: tuple[str, ...]
    right: "GameExpr"
    v: str


@dataclass(frozen=True)
class Product:
    left: "GameExpr"
    A: str
    right: "GameExpr"
    v: str


@dataclass(frozen=True)
class Substitute:
    inner: CliqueLeaf
    outer: "GameExpr"
    at: str


@dataclass(frozen=True)
class SumLose:
    left: "GameExpr"
    A: str
    right: "GameExpr"
    v: str


@dataclass(frozen=True)
class PendantLose:
    base: "GameExpr"
    B: str
    A: str  # name of the new pendant vertex


GameExpr = Union[CliqueLeaf, Sum, Product, Substitute, SumLose, PendantLose]

WINNING = "winning"
LOSING = "losing"
UNKNOWN = "unknown"


@dataclass
class Certificate:
    game: HatGame
    status: str
    precise_bricks: bool
    maximal: bool
    derivation: dict
    hg_claim: Optional[Fraction] = None
    muhat_claim: Optional[Fraction] = None


def _leaf_cert(leaf: CliqueLeaf) -> Certificate:
    game = make_game(complete_graph(leaf.vertices), leaf.h, leaf.g)
    crit = clique_criterion(game)
    status = WINNING if crit.winning else LOSING
    return Certificate(
        game,
        status,
        precise_bricks=crit.precise,
        maximal=crit.precise,
        derivation={
            "rule": "clique-criterion",
            "sum": str(crit.total),
            "precise": crit.precise,
            "status": status,
        },
    )


def _winning_join(rule, cl, S, cr, v) -> Certificate:
    for s in S:
        if s not in cl.game.graph._adj:
            raise ExprError(f"{rule}: vertex {s!r} missing from left operand")
    if v not in cr.game.graph._adj:
        raise ExprError(f"{rule}: vertex {v!r} missing from right operand")
    graph = graphs.clique_join(cl.game.graph, S, cr.game.graph, v)
    h = glue_hatness(cl.game.h, S, cr.game.h, v)
    g = glue_hatness(cl.game.g, S, cr.game.g, v)
    # clamp products back (gluing may push g above the new h)
    game = make_game(graph, h, g)
    if cl.status == WINNING and cr.status == WINNING:
        status = WINNING
    else:
        status = UNKNOWN
    return Certificate(
        game,
        status,
        precise_bricks=cl.precise_bricks and cr.precise_bricks,
        maximal=cl.maximal and cr.maximal,
        derivation={
            "rule": rule,
            "S": list(S),
            "v": v,
            "left": cl.derivation,
            "right": cr.derivation,
            "status": status,
        },
    )


def eval_expr(e: GameExpr) -> Certificate:
    """Build the composite game of an expression and derive its status."""
    if isinstance(e, CliqueLeaf):
        return _leaf_cert(e)

    if isinstance(e, Sum):
        return _winning_join("sum", eval_expr(e.left), e.S, eval_expr(e.right), e.v)

    if isinstance(e, Product):
        return _winning_join(
            "product", eval_expr(e.left), (e.A,), eval_expr(e.right), e.v
        )

    if isinstance(e, Substitute):
        # substitution of a complete graph is the S = V(inner) clique join
        inner = eval_expr(e.inner)
        outer = eval_expr(e.outer)
        return _winning_join(
            "substitute", inner, inner.game.graph.vertices, outer, e.at
        )

    if isinstance(e, SumLose):
        cl, cr = eval_expr(e.left), eval_expr(e.right)
        if cl.status != LOSING or cr.status != LOSING:
            raise ExprError("sum_lose: both operands must carry Losing status")
        if not (cl.game.is_classic() and cr.game.is_classic()):
            raise ExprError("sum_lose: the losing-sum theorem covers classic games")
        if e.A not in cl.game.h:
            raise ExprError(f"sum_lose: vertex {e.A!r} missing from left operand")
        if e.v not in cr.game.h:
            raise ExprError(f"sum_lose: vertex {e.v!r} missing from right operand")
        if cr.game.h[e.v] != 2:
            raise ExprError(
                f"sum_lose: failed hypothesis h2(A) = 2 (got {cr.game.h[e.v]})"
            )
        if cl.game.h[e.A] < 2:
            raise ExprError("sum_lose: failed hypothesis h1(A) >= h2(A) = 2")
        graph = graphs.vertex_glue(cl.game.graph, e.A, cr.game.graph, e.v)
        h = {"L/" + u: val for u, val in cl.game.h.items()}
        h.update(
            ("R/" + u, val) for u, val in cr.game.h.items() if u != e.v
        )
        game = make_game(graph, h)
        return Certificate(
            game,
            LOSING,
            precise_bricks=False,
            maximal=False,
            derivation={
                "rule": "sum_lose",
                "A": e.A,
                "v": e.v,
                "left": cl.derivation,
                "right": cr.derivation,
                "status": LOSING,
            },
        )

    if isinstance(e, PendantLose):
        base = eval_expr(e.base)
        if base.status != LOSING:
            raise ExprError("pendant_lose: the base game must carry Losing status")
        if not base.game.is_classic():
            raise ExprError("pendant_lose: the pendant theorem covers classic games")
        if e.B not in base.game.h:
            raise ExprError(f"pendant_lose: vertex {e.B!r} missing from base")
        if e.A in base.game.h:
            raise ExprError(f"pendant_lose: pendant name {e.A!r} already in base")
        bg = base.game.graph
        graph = graphs.make_graph(
            tuple(bg.vertices) + (e.A,), set(bg.edges) | {(e.A, e.B)}
        )
        h = dict(base.game.h)
        h[e.B] = 2 * h[e.B] - 1
        h[e.A] = 2
        game = make_game(graph, h)
        return Certificate(
            game,
            LOSING,
            precise_bricks=False,
            maximal=False,
            derivation={
                "rule": "pendant_lose",
                "B": e.B,
                "A": e.A,
                "base": base.derivation,
                "status": LOSING,
            },
        )

    raise ExprError(f"not a game expression: {e!r}")


def _only_winning_constructors(e: GameExpr) -> bool:
    if isinstance(e, CliqueLeaf):
        return True
    if isinstance(e, (Sum, Product)):
        return _only_winning_constructors(e.left) and _only_winning_constructors(
            e.right
        )
    if isinstance(e, Substitute):
        return _only_winning_constructors(e.outer)
    return False


def _leaves(e: GameExpr):
    if isinstance(e, CliqueLeaf):
        yield e
    elif isinstance(e, (Sum, Product, SumLose)):
        yield from _leaves(e.left)
        yield from _leaves(e.right)
    elif isinstance(e, Substitute):
        yield e.inner
        yield from _leaves(e.outer)
    elif isinstance(e, PendantLose):
        yield from _leaves(e.base)


@dataclass(frozen=True)
class Conclusion:
    value: Optional[Fraction]
    reason: str = ""

    @property
    def applicable(self) -> bool:
        return self.value is not None


def _precise_sum_shape(e: GameExpr) -> Optional[str]:
    """Reason the corollary hypotheses fail, or None when they hold."""
    if not _only_winning_constructors(e):
        return "expression uses constructors other than sum/product/substitute"
    for leaf in _leaves(e):
        cert = _leaf_cert(leaf)
        if not cert.precise_bricks:
            return f"non-precise clique leaf on {list(leaf.vertices)}"
    return None


def conclude_hg(e: GameExpr) -> Conclusion:
    """Hat guessing number of a sum-composed game of precise classic
    clique bricks with constant resulting hatness."""
    reason = _precise_sum_shape(e)
    if reason is not None:
        return Conclusion(None, reason)
    for leaf in _leaves(e):
        if any(gv != 1 for gv in _leaf_cert(leaf).game.g.values()):
            return Conclusion(None, "a leaf uses multiple guesses (g != 1)")
    cert = eval_expr(e)
    values = set(cert.game.h.values())
    if len(values) != 1:
        return Conclusion(None, f"resulting hatness is not constant: {sorted(values)}")
    h = values.pop()
    # maximality backs the upper bound HG <= mu-hat = h
    from .certify import check_maximal_compositional

    check_maximal_compositional(e)
    return Conclusion(Fraction(h))


def conclude_muhat(e: GameExpr) -> Conclusion:
    """Fractional hat chromatic number of a sum-composed game of precise
    clique bricks with constant h/g ratio."""
    reason = _precise_sum_shape(e)
    if reason is not None:
        return Conclusion(None, reason)
    cert = eval_expr(e)
    ratios = {
        Fraction(cert.game.h[v], cert.game.g[v]) for v in cert.game.vertices
    }
    if len(ratios) != 1:
        return Conclusion(None, "h/g is not a constant function")
    return Conclusion(ratios.pop())
