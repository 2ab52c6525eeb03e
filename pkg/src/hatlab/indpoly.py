"""Exact evaluation of independence polynomials.

P_G(x) sums the products of variables over independent sets.  Evaluation
uses the clique recurrence

    P_G = P_{G\\K} + sum_{u in K} x_u * P_{G\\N+(u)}

with the pivot clique K chosen as a maximal clique containing a
minimum-degree vertex, factorization over connected components, and
memoization on vertex subsets.  On tree-of-cliques graphs the recursion
stays linear, which is what makes the large gallery graphs feasible.
"""

from __future__ import annotations

from collections import deque
from fractions import Fraction

from .graphs import Graph, GraphError, independent_sets
from .poly import UnivariatePoly


class _Evaluator:
    """Evaluates P of induced subgraphs of one graph at a fixed point.

    Values may be Fractions (point evaluation) or UnivariatePoly (all
    variables identified); the recurrence only needs ring operations.
    The memo is keyed by the induced vertex subset, so one evaluator can
    serve many induced-subgraph queries (e.g. the box-corner sweep)."""

    def __init__(self, graph: Graph, x):
        self.names = graph.vertices
        self.index = {v: i for i, v in enumerate(self.names)}
        self.adj = [
            frozenset(self.index[u] for u in graph.neighbors(v))
            for v in self.names
        ]
        if callable(x):
            self.x = [x(v) for v in self.names]
        else:
            self.x = [x[v] for v in self.names]
        self.memo: dict[frozenset, object] = {}

    def full(self):
        return self.value(frozenset(range(len(self.names))))

    def value(self, sub: frozenset):
        got = self.memo.get(sub)
        if got is not None:
            return got
        if not sub:
            return 1
        comps = self._components(sub)
        if len(comps) == 1:
            out = self._component_value(comps[0])
        else:
            out = 1
            for comp in comps:
                out = out * self.value(comp)
        self.memo[sub] = out
        return out

    def _components(self, sub: frozenset) -> list[frozenset]:
        todo = set(sub)
        comps = []
        while todo:
            start = min(todo)
            seen = {start}
            q = deque([start])
            while q:
                u = q.popleft()
                for w in self.adj[u] & sub:
                    if w not in seen:
                        seen.add(w)
                        q.append(w)
            comps.append(frozenset(seen))
            todo -= seen
        return comps

    def _component_value(self, sub: frozenset):
        # pivot: maximal clique around a minimum-degree vertex
        u0 = min(sub, key=lambda u: (len(self.adj[u] & sub), u))
        clique = [u0]
        for w in sorted(self.adj[u0] & sub):
            if all(w in self.adj[c] for c in clique):
                clique.append(w)
        out = self.value(sub - frozenset(clique))
        for u in clique:
            out = out + self.x[u] * self.value(sub - self.adj[u] - {u})
        return out


def eval_P(graph: Graph, x: dict[str, Fraction]) -> Fraction:
    """Exact value of the independence polynomial at the given point."""
    val = _Evaluator(graph, x).full()
    return Fraction(val)


def eval_Z(graph: Graph, x: dict[str, Fraction]) -> Fraction:
    """Signed independence polynomial Z_G(x) = P_G(-x)."""
    return eval_P(graph, {v: -Fraction(val) for v, val in x.items()})


def z_corner_evaluator(graph: Graph, r: dict[str, Fraction]) -> _Evaluator:
    """Evaluator whose value(sub) is Z of the induced subgraph at r
    (vertices outside sub set to zero, i.e. deleted)."""
    return _Evaluator(graph, {v: -Fraction(val) for v, val in r.items()})


def eval_P_brute(graph: Graph, x: dict[str, Fraction], max_n: int = 20) -> Fraction:
    """Independent-set enumeration oracle for eval_P."""
    total = Fraction(0)
    for s in independent_sets(graph, max_n=max_n):
        term = Fraction(1)
        for v in s:
            term *= x[v]
        total += term
    return total


def univariate_P(graph: Graph, max_n: int = 40) -> UnivariatePoly:
    """P_G with all variables identified: coefficient k counts the
    independent k-sets.  Computed by the clique recurrence over
    polynomial values, so tree-of-cliques graphs well beyond brute-force
    scale are fine; the guard is a safety net for dense inputs."""
    if len(graph.vertices) > max_n:
        raise GraphError(
            f"graph has {len(graph.vertices)} vertices, univariate guard is {max_n}"
        )
    val = _Evaluator(graph, lambda v: UnivariatePoly.x()).full()
    if not isinstance(val, UnivariatePoly):
        val = UnivariatePoly.const(val)
    return val


def univariate_U(graph: Graph, max_n: int = 40) -> UnivariatePoly:
    """Monovariate signed independence polynomial U_G(x): coefficient k
    is (-1)^k times the number of independent k-sets."""
    return univariate_P(graph, max_n=max_n).compose_neg_x()
