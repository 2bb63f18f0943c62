"""Order ideal counting and enumeration for colored subposets.

Two engines:

  * a frontier profile dynamic program that works on any subposet (dualized
    or restricted to a component), sweeping a linear extension and keeping
    one bit of membership per still-referenced vertex, and

  * the staircase-array transfer program in arrays.py, used as a fast path
    whenever green is present and the poset is not dualized, since those
    ideals are in weight-preserving bijection with arrays.

Both produce the full rank generating function sum q^|I|; counts are the
evaluation at q = 1.
"""

from __future__ import annotations

import heapq
from collections.abc import Iterator
from math import comb

from .arrays import array_rank_gf
from .budget import guard
from .colors import Color
from .polynomials import QPoly
from .poset import OrderIdeal, Subposet, Vertex


def _linear_extension(p: Subposet) -> list[Vertex]:
    """Kahn's algorithm with a heap, so the order is deterministic."""
    pred = p.predecessors()
    succ = p.successors()
    indeg = {v: len(ws) for v, ws in pred.items()}
    ready = [v for v in p.vertices if indeg[v] == 0]
    heapq.heapify(ready)
    order: list[Vertex] = []
    while ready:
        v = heapq.heappop(ready)
        order.append(v)
        for w in succ[v]:
            indeg[w] -= 1
            if indeg[w] == 0:
                heapq.heappush(ready, w)
    if len(order) != len(p.vertices):
        raise ValueError("cover relation contains a cycle")
    return order


def _frontier_rank_dict(p: Subposet) -> dict[int, int]:
    """Map ideal size -> number of ideals, by profile DP over a linear extension."""
    order = _linear_extension(p)
    pos = {v: t for t, v in enumerate(order)}
    pred = p.predecessors()
    succ = p.successors()
    last_use = {
        v: max((pos[w] for w in succ[v]), default=pos[v]) for v in p.vertices
    }
    active: list[Vertex] = []
    # states: bitmask over indices of `active` -> {ideal size: count}
    states: dict[int, dict[int, int]] = {0: {0: 1}}
    for t, u in enumerate(order):
        pred_bits = [active.index(v) for v in pred[u]]
        keep = [idx for idx, v in enumerate(active) if last_use[v] > t]
        keeps_u = last_use[u] > t
        new_states: dict[int, dict[int, int]] = {}

        def add(mask: int, sizes: dict[int, int], bump: int) -> None:
            acc = new_states.setdefault(mask, {})
            for s, c in sizes.items():
                acc[s + bump] = acc.get(s + bump, 0) + c

        for mask, sizes in states.items():
            base = 0
            for new_idx, old_idx in enumerate(keep):
                if mask >> old_idx & 1:
                    base |= 1 << new_idx
            u_bit = 1 << len(keep) if keeps_u else 0
            # u stays out of the ideal
            add(base, sizes, 0)
            # u joins the ideal, legal only when every cover below it is in
            if all(mask >> b & 1 for b in pred_bits):
                add(base | u_bit, sizes, 1)
        active = [active[idx] for idx in keep] + ([u] if keeps_u else [])
        states = new_states
    total: dict[int, int] = {}
    for sizes in states.values():
        for s, c in sizes.items():
            total[s] = total.get(s, 0) + c
    return total


def _array_path_applies(p: Subposet) -> bool:
    return (
        Color.GREEN in p.colors
        and not p.is_dual
        and len(p.vertices) == comb(p.n + 1, 3)
    )


def rank_gf(p: Subposet) -> QPoly:
    """Rank generating function sum over ideals I of q^|I|."""
    if _array_path_applies(p):
        return array_rank_gf(p.n, p.colors)
    return QPoly(_frontier_rank_dict(p))


def count_ideals(p: Subposet, max_vertices: int | None = None) -> int:
    """Number of order ideals. Counting itself is uncapped; max_vertices is an
    optional guard for callers that want to refuse oversized inputs up front."""
    if max_vertices is not None and len(p.vertices) > max_vertices:
        raise ValueError(
            f"poset has {len(p.vertices)} vertices, above the cap {max_vertices}"
        )
    return rank_gf(p)(1)


def enumerate_ideals(p: Subposet, budget: int | None = None) -> Iterator[OrderIdeal]:
    """Yield every order ideal, in a deterministic depth-first order.

    The walk follows the linear extension; at each vertex the branch that
    leaves it out comes before the branch that puts it in. The total count is
    checked against the yield budget before any work is done.
    """
    guard(count_ideals(p), "order ideals", budget)
    order = _linear_extension(p)
    pred = p.predecessors()
    n_verts = len(order)
    member: dict[Vertex, bool] = {}

    def walk(t: int) -> Iterator[OrderIdeal]:
        if t == n_verts:
            yield OrderIdeal(p.n, frozenset(v for v, b in member.items() if b))
            return
        u = order[t]
        member[u] = False
        yield from walk(t + 1)
        if all(member[v] for v in pred[u]):
            member[u] = True
            yield from walk(t + 1)
        del member[u]

    yield from walk(0)
