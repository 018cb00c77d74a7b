"""Affine crystal structure on proper Young walls: signatures and Kashiwara operators."""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass
from typing import Optional, Union

from .algebra import DELTA, INDICES, Weight, pairing, weight_sub_alpha
from .youngwall import (
    Partition,
    YoungWall,
    ground_block_color,
    ground_wall,
    is_reduced,
    needs_color,
    sort_walls_desc,
    try_add,
    try_remove,
    walls_with_blocks,
)


@dataclass(frozen=True)
class WallPart:
    """Columns ``start <= k < stop`` of a wall, treated as a standalone configuration.

    ``stop=None`` means the part runs on through all ground columns to the left.
    Moves inside a part only have to respect the building rules and properness
    among the part's own columns.
    """

    wall: YoungWall
    start: int = 0
    stop: Optional[int] = None

    def scan_limit(self) -> int:
        # one column past the stored ones is the last that can ever receive a block
        top = max(self.wall.width, self.start) + 1
        return top if self.stop is None else min(self.stop, top)

    def is_empty(self) -> bool:
        return self.stop is not None and self.stop <= self.start


def _as_part(Y: Union[YoungWall, WallPart]) -> WallPart:
    return Y if isinstance(Y, WallPart) else WallPart(Y)


def column_marks(Y: Union[YoungWall, WallPart], k: int, i: int) -> str:
    """One of ``--``, ``-``, ``-+``, ``+``, ``++`` or ``.`` for column ``k``.

    Removable blocks and admissible slots are found by trying successive moves
    on the same column.
    """
    part = _as_part(Y)
    lo, hi = part.start, part.stop
    minus = 0
    cur = part.wall
    while minus < 2:
        nxt = try_remove(cur, k, i, lo, hi)
        if nxt is None:
            break
        minus += 1
        cur = nxt
    plus = 0
    cur = part.wall
    while plus < 2:
        nxt = try_add(cur, k, i, lo, hi)
        if nxt is None:
            break
        plus += 1
        cur = nxt
    mark = "-" * minus + "+" * plus
    return mark or "."


@dataclass(frozen=True)
class Signature:
    i: int
    marks: tuple  # (k, mark) read from the largest k down to 0
    minus_positions: tuple
    plus_positions: tuple

    @property
    def eps(self) -> int:
        return len(self.minus_positions)

    @property
    def phi(self) -> int:
        return len(self.plus_positions)

    def reduced_string(self) -> str:
        return "-" * self.eps + "+" * self.phi


def signature(Y: Union[YoungWall, WallPart], i: int) -> Signature:
    """Read column marks from left (large k) to right and cancel every ``+ -`` pair."""
    part = _as_part(Y)
    marks = []
    stack: list = []
    for k in range(part.scan_limit() - 1, part.start - 1, -1):
        m = column_marks(part, k, i)
        marks.append((k, m))
        if m == ".":
            continue
        for sym in m:
            if sym == "-" and stack and stack[-1][0] == "+":
                stack.pop()
            else:
                stack.append((sym, k))
    minus = tuple(k for s, k in stack if s == "-")
    plus = tuple(k for s, k in stack if s == "+")
    return Signature(i, tuple(marks), minus, plus)


def eps(Y, i: int) -> int:
    return signature(Y, i).eps


def phi(Y, i: int) -> int:
    return signature(Y, i).phi


def wt(Y: YoungWall) -> Weight:
    return Y.weight()


def F_tilde(Y: YoungWall, i: int) -> Optional[YoungWall]:
    sig = signature(Y, i)
    if not sig.plus_positions:
        return None
    return try_add(Y, sig.plus_positions[0], i)


def E_tilde(Y: YoungWall, i: int) -> Optional[YoungWall]:
    sig = signature(Y, i)
    if not sig.minus_positions:
        return None
    return try_remove(Y, sig.minus_positions[-1], i)


def is_maximal(Y: YoungWall) -> bool:
    return all(E_tilde(Y, i) is None for i in INDICES)


@dataclass
class CrystalGraph:
    ground: int
    nodes: list
    edges: list  # (source, target, i)

    def to_dot(self) -> str:
        lines = [f'digraph "B(L{self.ground})" {{']
        for Y in self.nodes:
            lines.append(f'  "{Y.literal()}";')
        for a, b, i in self.edges:
            lines.append(f'  "{a.literal()}" -> "{b.literal()}" [label="i={i}"];')
        lines.append("}")
        return "\n".join(lines) + "\n"

    def to_json(self) -> str:
        data = {
            "nodes": [Y.literal() for Y in self.nodes],
            "edges": [{"from": a.literal(), "to": b.literal(), "i": i} for a, b, i in self.edges],
        }
        return json.dumps(data, indent=2) + "\n"


def _edge_key(edge) -> tuple:
    a, b, i = edge
    return (a.num_blocks(), a.literal(), i)


def crystal_graph(g: int, depth: int, reduced_only: bool = True) -> CrystalGraph:
    """Walls within ``depth`` blocks of the ground and the F̃ arrows between them.

    With ``reduced_only`` the nodes are the walls reachable from the ground wall
    (the crystal of the irreducible module); otherwise every proper wall with at
    most ``depth`` blocks is a node.
    """
    if depth < 0:
        raise ValueError("depth must be nonnegative")
    if reduced_only:
        start = ground_wall(g)
        seen = {start}
        frontier = deque([start])
        while frontier:
            Y = frontier.popleft()
            if Y.num_blocks() >= depth:
                continue
            for i in INDICES:
                Z = F_tilde(Y, i)
                if Z is not None and Z not in seen:
                    seen.add(Z)
                    frontier.append(Z)
        nodes = seen
    else:
        nodes = {Y for n in range(depth + 1) for Y in walls_with_blocks(g, n)}
    edges = []
    for Y in nodes:
        for i in INDICES:
            Z = F_tilde(Y, i)
            if Z is not None and Z in nodes:
                edges.append((Y, Z, i))
    ordered = sorted(sort_walls_desc(nodes), key=lambda Y: Y.num_blocks())
    edges.sort(key=_edge_key)
    return CrystalGraph(g, ordered, edges)


def wall_of_partition(g: int, p: Partition) -> YoungWall:
    """Stack ``p_k`` δ-columns on column ``k``; the result is a maximal vector."""
    cols = []
    for k, m in enumerate(p.parts):
        n = 4 * m
        cols.append((n, ground_block_color(g, k) if needs_color(g, n) else None))
    return YoungWall.checked(g, cols)


def partitions_of(m: int) -> list:
    """Partitions of ``m`` as weakly decreasing tuples, largest first."""
    out = []

    def rec(rest, cap, acc):
        if rest == 0:
            out.append(tuple(acc))
            return
        for part in range(min(rest, cap), 0, -1):
            acc.append(part)
            rec(rest - part, part, acc)
            acc.pop()

    rec(m, m, [])
    return out


def maximal_vectors(g: int, m: int) -> list:
    """All maximal proper walls of weight ``Λ - m δ``, found by exhaustive search."""
    target = tuple(m * d for d in DELTA)
    found = [Y for Y in walls_with_blocks(g, 4 * m) if Y.color_counts() == target and is_maximal(Y)]
    return sort_walls_desc(found)


def crystal_axiom_problem(Y: YoungWall) -> Optional[str]:
    """First failing crystal axiom at ``Y``, or ``None``.

    Checks ``phi - eps = <h_i, wt>``, that ``F_tilde`` and ``E_tilde`` are inverse,
    shift the weight by one simple root and move ``eps``/``phi`` by one, and that
    ``F_tilde`` keeps reduced walls reduced.
    """
    w = Y.weight()
    for i in INDICES:
        sig = signature(Y, i)
        if sig.phi - sig.eps != pairing(i, w):
            return f"phi-eps mismatch for i={i}"
        Z = F_tilde(Y, i)
        if Z is not None:
            if E_tilde(Z, i) != Y:
                return f"E_tilde does not undo F_tilde for i={i}"
            if Z.weight() != weight_sub_alpha(w, i):
                return f"F_tilde changes weight wrongly for i={i}"
            if eps(Z, i) != sig.eps + 1 or phi(Z, i) != sig.phi - 1:
                return f"eps/phi not shifted by F_tilde for i={i}"
            if is_reduced(Y) and not is_reduced(Z):
                return f"F_tilde leaves the reduced walls for i={i}"
        X = E_tilde(Y, i)
        if X is not None and F_tilde(X, i) != Y:
            return f"F_tilde does not undo E_tilde for i={i}"
    return None
