"""Young walls of level 1 for C_2^(1).

A column above its ground block is filled bottom-up along a fixed periodic
pattern.  Every block has volume one half, so a column is described by the
number ``n`` of blocks added above the ground and, when the top level is a
half-filled unit cube, by the color of the block present there.

Geometry conventions
--------------------
``l`` is the number of whole unit levels below a block.  Level ``l`` is either
a pair of stacked half-height 1-blocks (``lo`` under ``hi``) or a unit cube
split into a front and a back half-thickness block, one colored 0 and the
other 2.  Over Λ1 the even levels are 1-pairs and the ground block is the
``lo`` half of level 0; over Λ0 and Λ2 the even levels are cubes and the
ground block is the back half of level 0.  Inside a cube the front color
alternates with the column parity.  Column 0 is the rightmost column.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from enum import IntEnum
from functools import cmp_to_key, lru_cache
from typing import Iterator, Optional, Sequence

from .algebra import Weight

ONE = "one"
CUBE = "cube"

#: Kind of level ``l`` keyed by (ground, l % 2).
LEVEL_KIND = {
    (0, 0): CUBE, (0, 1): ONE,
    (1, 0): ONE, (1, 1): CUBE,
    (2, 0): CUBE, (2, 1): ONE,
}

#: Front color of every cube level keyed by (ground, k % 2); the back color is the other one.
FRONT_COLOR = {
    (0, 0): 0, (0, 1): 2,
    (1, 0): 0, (1, 1): 2,
    (2, 0): 2, (2, 1): 0,
}

FRONT, BACK, LO, HI = "F", "B", "lo", "hi"


class GroundState(IntEnum):
    L0 = 0
    L1 = 1
    L2 = 2


class WallError(ValueError):
    """A column configuration violates a building rule."""

    def __init__(self, message: str, column: Optional[int] = None, position: Optional[int] = None):
        super().__init__(message)
        self.column = column
        self.position = position


class InadmissibleError(WallError):
    pass


class NotRemovableError(WallError):
    pass


class NotReducedError(WallError):
    pass


def level_kind(g: int, l: int) -> str:
    return LEVEL_KIND[(g, l % 2)]


def cube_colors(g: int, k: int) -> tuple[int, int]:
    """(front, back) colors of the cube levels in column ``k``."""
    front = FRONT_COLOR[(g, k % 2)]
    return front, 2 - front


def cube_position(g: int, k: int, color: int) -> str:
    return FRONT if cube_colors(g, k)[0] == color else BACK


def ground_block_color(g: int, k: int) -> int:
    return 1 if g == 1 else cube_colors(g, k)[1]


def needs_color(g: int, n: int) -> bool:
    """Whether ``n`` added blocks leave a half-filled cube on top."""
    return n > 0 and n % 2 == 0 and level_kind(g, n // 2) == CUBE


def is_full_count(n: int) -> bool:
    """Ground block plus ``n`` added blocks fill whole levels exactly when ``n`` is odd."""
    return n % 2 == 1


@dataclass(frozen=True)
class Slot:
    kind: str
    colors: tuple


def slot_at(g: int, k: int, level: int) -> Slot:
    """The ``level``-th slot above the ground block of column ``k``.

    A 1-pair contributes two HALF_ONE slots and a cube one CUBE slot, except the
    ground level which contributes only what the ground block leaves open.
    """
    if level < 0 or k < 0:
        raise ValueError("slot coordinates must be nonnegative")
    seen = 0
    l = 0
    while True:
        kind = level_kind(g, l)
        if kind == ONE:
            slots = 1 if l == 0 else 2
        else:
            slots = 1
        if level < seen + slots:
            if kind == ONE:
                return Slot("HALF_ONE", (1,))
            return Slot("CUBE", cube_colors(g, k))
        seen += slots
        l += 1


@dataclass(frozen=True, order=True)
class Block:
    """An added block in a column: its color, level and position in the level."""

    color: int
    l: int
    pos: str


@lru_cache(maxsize=None)
def column_blocks(g: int, k: int, n: int, p: Optional[int]) -> tuple:
    """Added blocks of column ``k`` holding ``n`` blocks (partial top color ``p``)."""
    front, back = cube_colors(g, k)
    out = []
    per_level: dict[int, int] = {}
    for t in range(1, n + 1):
        per_level[t // 2] = per_level.get(t // 2, 0) + 1
    for l in sorted(per_level):
        c = per_level[l]
        if level_kind(g, l) == ONE:
            if l == 0:
                out.append(Block(1, 0, HI))
            else:
                out.append(Block(1, l, LO))
                if c == 2:
                    out.append(Block(1, l, HI))
        elif c == 2:
            out.append(Block(front, l, FRONT))
            out.append(Block(back, l, BACK))
        elif l == 0:
            out.append(Block(front, 0, FRONT))
        else:
            out.append(Block(p, l, cube_position(g, k, p)))
    return tuple(out)


@lru_cache(maxsize=None)
def column_color_counts(g: int, k: int, n: int, p: Optional[int]) -> tuple:
    counts = [0, 0, 0]
    for b in column_blocks(g, k, n, p):
        counts[b.color] += 1
    return tuple(counts)


Column = tuple  # (n, partial color or None)
EMPTY_COLUMN: Column = (0, None)


def column_problem(g: int, k: int, col: Column) -> Optional[str]:
    n, p = col
    if not isinstance(n, int) or n < 0:
        return f"column {k}: block count must be a nonnegative integer"
    if needs_color(g, n):
        if p not in (0, 2):
            return f"column {k}: {n} blocks leave a half cube on top, its color (0 or 2) is required"
    elif p is not None:
        return f"column {k}: {n} blocks do not leave a half cube on top, no color allowed"
    return None


def _height_problem(k: int, right: Column, left: Column) -> Optional[str]:
    if left[0] > right[0]:
        return f"column {k} is higher than column {k - 1} (columns must weakly decrease to the left)"
    return None


def pair_problem(g: int, k: int, right: Column, left: Column) -> Optional[str]:
    """Rules between column ``k - 1`` (``right``) and column ``k`` (``left``)."""
    msg = _height_problem(k, right, left)
    if msg:
        return msg
    if left[0] == right[0] and left[1] is not None:
        if cube_position(g, k, left[1]) != cube_position(g, k - 1, right[1]):
            return f"column {k}: half cube leaves free space to its right"
    return None


def window_problem(g: int, cols: Sequence[Column], lo: int = 0, hi: Optional[int] = None) -> Optional[WallError]:
    """First building-rule or properness violation among columns ``lo <= k < hi``."""
    top = len(cols) if hi is None else min(hi, len(cols))
    fulls: dict[int, int] = {}
    for k in range(lo, top):
        msg = (k > lo and _height_problem(k, cols[k - 1], cols[k])) or column_problem(g, k, cols[k])
        if not msg and k > lo:
            msg = pair_problem(g, k, cols[k - 1], cols[k])
        if msg:
            return WallError(msg, column=k)
        n = cols[k][0]
        if is_full_count(n):
            if n in fulls:
                return WallError(f"columns {fulls[n]} and {k} are full and have equal heights", column=k)
            fulls[n] = k
    return None


def _strip(cols) -> tuple:
    cols = [tuple(c) for c in cols]
    while cols and cols[-1] == EMPTY_COLUMN:
        cols.pop()
    return tuple(cols)


@dataclass(frozen=True)
class YoungWall:
    """A Young wall over the ground state ``Λ_ground``; trailing ground columns are dropped."""

    ground: int
    columns: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "ground", int(self.ground))
        object.__setattr__(self, "columns", _strip(self.columns))

    @classmethod
    def checked(cls, ground: int, columns) -> "YoungWall":
        """Build a wall, rejecting any violated building rule or properness."""
        wall = cls(ground, columns)
        err = wall.problem()
        if err:
            raise err
        return wall

    def problem(self) -> Optional[WallError]:
        if self.ground not in (0, 1, 2):
            return WallError(f"unknown ground state {self.ground}")
        return window_problem(self.ground, self.columns)

    def col(self, k: int) -> Column:
        return self.columns[k] if k < len(self.columns) else EMPTY_COLUMN

    def count(self, k: int) -> int:
        return self.col(k)[0]

    def partial(self, k: int) -> Optional[int]:
        return self.col(k)[1]

    @property
    def width(self) -> int:
        return len(self.columns)

    def counts(self) -> tuple:
        return tuple(c[0] for c in self.columns)

    def num_blocks(self) -> int:
        return sum(c[0] for c in self.columns)

    def color_counts(self) -> tuple:
        total = [0, 0, 0]
        for k, (n, p) in enumerate(self.columns):
            for i, c in enumerate(column_color_counts(self.ground, k, n, p)):
                total[i] += c
        return tuple(total)

    def weight(self) -> Weight:
        return Weight(self.ground, self.color_counts())

    def blocks(self) -> Iterator[tuple]:
        """Yield ``(k, block)`` for every added block."""
        for k, (n, p) in enumerate(self.columns):
            for b in column_blocks(self.ground, k, n, p):
                yield k, b

    def literal(self) -> str:
        return format_wall(self)

    def __str__(self) -> str:
        return format_wall(self)

    def __repr__(self) -> str:
        return f"YoungWall({format_wall(self)})"


def ground_wall(g: int) -> YoungWall:
    return YoungWall(int(g), ())


def format_wall(Y: YoungWall) -> str:
    parts = []
    for n, p in Y.columns:
        parts.append(str(n) if p is None else f"{n}:{p}")
    return f"L{Y.ground}[{','.join(parts)}]"


_WALL_HEAD = re.compile(r"\s*L([0-9]+)\s*\[")
_WALL_ITEM = re.compile(r"\s*([0-9]+)\s*(?::\s*([0-9]+))?\s*")


def parse_wall(text: str) -> YoungWall:
    """Parse ``L<d>[c0,c1,...]``; errors carry the character position."""
    m = _WALL_HEAD.match(text)
    if not m:
        raise WallError(f"expected 'L<d>[' at position 0 in {text!r}", position=0)
    g = int(m.group(1))
    if g not in (0, 1, 2):
        raise WallError(f"ground must be 0, 1 or 2 at position {m.start(1)}", position=m.start(1))
    pos = m.end()
    cols = []
    starts = []
    close = text.find("]", pos)
    if close < 0:
        raise WallError(f"missing ']' in {text!r}", position=len(text))
    if text[close + 1:].strip():
        raise WallError(f"trailing text at position {close + 1}", position=close + 1)
    body = text[pos:close]
    if body.strip():
        offset = pos
        for item in body.split(","):
            im = _WALL_ITEM.fullmatch(item)
            if not im:
                raise WallError(f"bad column entry {item.strip()!r} at position {offset}", position=offset)
            n = int(im.group(1))
            p = int(im.group(2)) if im.group(2) is not None else None
            starts.append(offset + im.start(1))
            cols.append((n, p))
            offset += len(item) + 1
    if cols and cols[-1] == EMPTY_COLUMN:
        raise WallError("trailing empty columns must be omitted", position=starts[-1])
    err = window_problem(g, cols)
    if err:
        if err.column is not None and err.column < len(starts):
            err.position = starts[err.column]
            err.args = (f"{err.args[0]} (position {err.position})",)
        raise err
    return YoungWall(g, tuple(cols))


# ---------------------------------------------------------------------------
# single-block moves


def _replace(cols: Sequence[Column], k: int, new: Column) -> list:
    out = list(cols)
    while len(out) <= k:
        out.append(EMPTY_COLUMN)
    out[k] = new
    return out


def next_states_up(g: int, k: int, col: Column) -> list:
    """``(color, new column)`` for each way of adding one block on top of ``col``."""
    n, p = col
    if p is not None:
        return [(2 - p, (n + 1, None))]
    t = n + 1
    l, half = divmod(t, 2)
    if level_kind(g, l) == ONE:
        return [(1, (t, None))]
    if half == 1:
        # only the ground cube can be open at its second half
        return [(cube_colors(g, k)[0], (t, None))]
    return [(0, (t, 0)), (2, (t, 2))]


def next_states_down(g: int, k: int, col: Column) -> list:
    """``(color, new column)`` for each way of removing one top block of ``col``."""
    n, p = col
    if n == 0:
        return []
    if p is not None:
        return [(p, (n - 1, None))]
    l, half = divmod(n, 2)
    if level_kind(g, l) == ONE:
        return [(1, (n - 1, None))]
    if l == 0:
        return [(cube_colors(g, k)[0], (0, None))]
    if half == 1:
        return [(0, (n - 1, 2)), (2, (n - 1, 0))]
    raise AssertionError("half cube on top must carry a color")


def _locally_fine(g: int, cols: Sequence[Column], k: int, lo: int, hi: Optional[int]) -> bool:
    """Check column ``k`` against its neighbours and properness inside the window."""
    col = cols[k] if k < len(cols) else EMPTY_COLUMN
    if column_problem(g, k, col):
        return False
    if k - 1 >= lo:
        if pair_problem(g, k, cols[k - 1], col):
            return False
    if hi is None or k + 1 < hi:
        left = cols[k + 1] if k + 1 < len(cols) else EMPTY_COLUMN
        if pair_problem(g, k + 1, col, left):
            return False
    n = col[0]
    if is_full_count(n):
        top = len(cols) if hi is None else min(hi, len(cols))
        for j in range(lo, top):
            if j != k and cols[j][0] == n:
                return False
    return True


def try_add(Y: YoungWall, k: int, color: int, lo: int = 0, hi: Optional[int] = None) -> Optional[YoungWall]:
    """Add a ``color`` block on column ``k``; ``None`` if the result breaks a rule.

    ``lo``/``hi`` restrict the rules to the columns of a part ``lo <= k < hi``.
    """
    for c, new in next_states_up(Y.ground, k, Y.col(k)):
        if c == color:
            cols = _replace(Y.columns, k, new)
            if _locally_fine(Y.ground, cols, k, lo, hi):
                return YoungWall(Y.ground, cols)
    return None


def try_remove(Y: YoungWall, k: int, color: int, lo: int = 0, hi: Optional[int] = None) -> Optional[YoungWall]:
    for c, new in next_states_down(Y.ground, k, Y.col(k)):
        if c == color:
            cols = _replace(Y.columns, k, new)
            if _locally_fine(Y.ground, cols, k, lo, hi):
                return YoungWall(Y.ground, cols)
    return None


def add_block(Y: YoungWall, k: int, color: int) -> YoungWall:
    out = try_add(Y, k, color)
    if out is None:
        raise InadmissibleError(f"no admissible {color}-slot on column {k} of {Y}", column=k)
    return out


def remove_block(Y: YoungWall, k: int, color: int) -> YoungWall:
    out = try_remove(Y, k, color)
    if out is None:
        raise NotRemovableError(f"no removable {color}-block on column {k} of {Y}", column=k)
    return out


# ---------------------------------------------------------------------------
# properness, reducedness


def is_proper(Y: YoungWall) -> bool:
    fulls = [n for n, _ in Y.columns if is_full_count(n)]
    return len(fulls) == len(set(fulls))


def remove_delta(Y: YoungWall, k: int) -> Optional[YoungWall]:
    """Remove one δ-column (one 0, two 1 and one 2 block) from the top of column ``k``.

    Returns ``None`` when the top four blocks do not form a δ-column or the rest
    is not a proper Young wall.
    """
    g = Y.ground
    n, p = Y.col(k)
    if n < 4:
        return None
    m = n - 4
    if needs_color(g, m):
        new = (m, p)
    elif p is not None:
        # the lower half cube would be the ground block itself
        if m != 0 or p != ground_block_color(g, k):
            return None
        new = (m, None)
    else:
        new = (m, None)
    removed = _block_difference(column_blocks(g, k, n, p), column_blocks(g, k, *new))
    if len(removed) != 4 or sorted(b.color for b in removed) != [0, 1, 1, 2]:
        return None
    cols = _replace(Y.columns, k, new)
    if window_problem(g, cols):
        return None
    return YoungWall(g, cols)


def _block_difference(big, small) -> list:
    rest = list(small)
    out = []
    for b in big:
        if b in rest:
            rest.remove(b)
        else:
            out.append(b)
    return out


def is_reduced(Y: YoungWall) -> bool:
    return all(remove_delta(Y, k) is None for k in range(Y.width))


# ---------------------------------------------------------------------------
# partitions and orderings


@dataclass(frozen=True)
class Partition:
    parts: tuple

    def __post_init__(self):
        parts = list(int(x) for x in self.parts)
        while parts and parts[-1] == 0:
            parts.pop()
        object.__setattr__(self, "parts", tuple(parts))

    def part(self, k: int) -> int:
        return self.parts[k] if k < len(self.parts) else 0

    def __len__(self) -> int:
        return len(self.parts)

    def size(self) -> int:
        return sum(self.parts)


def associated_partition(Y: YoungWall) -> Partition:
    return Partition(Y.counts())


def _tail_sums(p: Partition, length: int) -> list:
    out = [0] * (length + 1)
    for k in range(length - 1, -1, -1):
        out[k] = out[k + 1] + p.part(k)
    return out


def dominance(P1: Partition, P2: Partition) -> bool:
    """``P1 ⊵ P2``: every tail sum of ``P1`` is at least the matching tail sum of ``P2``."""
    length = max(len(P1), len(P2))
    t1, t2 = _tail_sums(P1, length), _tail_sums(P2, length)
    return all(a >= b for a, b in zip(t1, t2))


def partition_cmp(P1: Partition, P2: Partition) -> int:
    """Sign of the comparison decided at the largest index where the parts differ."""
    for k in range(max(len(P1), len(P2)) - 1, -1, -1):
        a, b = P1.part(k), P2.part(k)
        if a != b:
            return 1 if a > b else -1
    return 0


def partition_gt(P1: Partition, P2: Partition) -> bool:
    return partition_cmp(P1, P2) > 0


def _partial_rank(p: Optional[int]) -> int:
    # higher rank = larger in the tie-break: absent > 0 > 2
    return {None: 2, 0: 1, 2: 0}[p]


def tie_break_cmp(Y: YoungWall, Z: YoungWall) -> int:
    for k in range(max(Y.width, Z.width)):
        a, b = Y.partial(k), Z.partial(k)
        if a != b:
            return 1 if _partial_rank(a) > _partial_rank(b) else -1
    return 0


def wall_total_order(Y: YoungWall, Z: YoungWall) -> int:
    """1 if ``Y > Z``, -1 if ``Y < Z``, 0 if equal, for walls over one ground."""
    if Y.ground != Z.ground:
        raise ValueError("walls over different ground states are not comparable")
    c = partition_cmp(associated_partition(Y), associated_partition(Z))
    if c:
        return c
    return tie_break_cmp(Y, Z)


def sort_walls_desc(walls) -> list:
    return sorted(walls, key=cmp_to_key(wall_total_order), reverse=True)


# ---------------------------------------------------------------------------
# coordinates, ladders, peeling, reduced form


@dataclass(frozen=True)
class Coordinate:
    k: int
    l: int


@dataclass(frozen=True)
class Ladder:
    base: Coordinate

    @property
    def points(self) -> tuple:
        k, l = self.base.k, self.base.l
        return tuple(Coordinate(k - j, l + 2 * j) for j in range(k + 1))

    @property
    def diagonal(self) -> int:
        return self.base.l + 2 * self.base.k


def coordinate_of(k: int, block: Block) -> Coordinate:
    return Coordinate(k, block.l)


def ladder(c: Coordinate) -> Ladder:
    if c.k < 0 or c.l < 0:
        raise ValueError("coordinates are nonnegative")
    return Ladder(c)


def blocks_in_ladder(Y: YoungWall, L: Ladder) -> list:
    pts = set(L.points)
    return [(k, b) for k, b in Y.blocks() if Coordinate(k, b.l) in pts]


def _wall_from_blocks(g: int, per_column: dict) -> YoungWall:
    """Rebuild column states from block sets; raise if a column is not a valid stack."""
    width = max((k for k, bs in per_column.items() if bs), default=-1) + 1
    cols = []
    for k in range(width):
        bs = sorted(per_column.get(k, ()))
        n = len(bs)
        p = None
        if needs_color(g, n):
            tops = [b for b in bs if b.l == n // 2]
            if len(tops) != 1:
                raise WallError(f"column {k} is not stacked bottom-up", column=k)
            p = tops[0].color
        if sorted(column_blocks(g, k, n, p)) != bs:
            raise WallError(f"column {k} is not stacked bottom-up", column=k)
        cols.append((n, p))
    return YoungWall(g, cols)


def _blocks_by_column(Y: YoungWall) -> dict:
    per: dict[int, list] = {}
    for k, b in Y.blocks():
        per.setdefault(k, []).append(b)
    return per


def peel_target(Y: YoungWall) -> tuple:
    """Coordinate and color of the block a peel starts from."""
    if Y.width == 0:
        raise WallError("the ground wall cannot be peeled")
    k = Y.width - 1
    bs = column_blocks(Y.ground, k, *Y.col(k))
    top_l = max(b.l for b in bs)
    tops = [b for b in bs if b.l == top_l]
    if len(tops) == 2 and tops[0].pos in (FRONT, BACK):
        b = next(b for b in tops if b.pos == FRONT)
    else:
        b = max(tops, key=lambda b: b.pos == HI)
    return Coordinate(k, b.l), b.color


def peel(Y: YoungWall) -> tuple:
    """Remove all blocks of the peel color on the ladder of the leftmost top block.

    Returns ``(Ybar, i, r)`` where ``r`` blocks of color ``i`` were removed.
    """
    c, i = peel_target(Y)
    pts = set(ladder(c).points)
    per = _blocks_by_column(Y)
    removed = 0
    for k, bs in per.items():
        keep = [b for b in bs if not (b.color == i and Coordinate(k, b.l) in pts)]
        removed += len(bs) - len(keep)
        per[k] = keep
    return _wall_from_blocks(Y.ground, per), i, removed


def _diagonal_slots(g: int, D: int, color: int) -> list:
    """Slots of ``color`` on the anti-diagonal ``l + 2k = D``, bottom first."""
    out = []
    for k in range(D // 2, -1, -1):
        l = D - 2 * k
        if level_kind(g, l) == ONE:
            if color != 1:
                continue
            if l == 0:
                out.append((k, Block(1, 0, HI)))
            else:
                out.append((k, Block(1, l, LO)))
                out.append((k, Block(1, l, HI)))
        else:
            if color == 1:
                continue
            if l == 0 and color == ground_block_color(g, k):
                continue
            out.append((k, Block(color, l, cube_position(g, k, color))))
    return out


def reduced_form(Y: YoungWall) -> YoungWall:
    """Slide the blocks of each ladder and color down to the lowest slots of that ladder."""
    g = Y.ground
    tally: dict[tuple, int] = {}
    for k, b in Y.blocks():
        key = (b.l + 2 * k, b.color)
        tally[key] = tally.get(key, 0) + 1
    per: dict[int, list] = {}
    for (D, color), r in tally.items():
        slots = _diagonal_slots(g, D, color)
        if r > len(slots):
            raise WallError(f"ladder {D} cannot hold {r} blocks of color {color}")
        for k, b in slots[:r]:
            per.setdefault(k, []).append(b)
    return _wall_from_blocks(g, per)


# ---------------------------------------------------------------------------
# enumeration


def _column_options(g: int, n: int) -> tuple:
    return (0, 2) if needs_color(g, n) else (None,)


def _walls_exact(g: int, total: int, k: int, prev: Column, cols: list, fulls: set, out: list) -> None:
    if total == 0:
        out.append(YoungWall(g, tuple(cols)))
        return
    cap = total if k == 0 else min(prev[0], total)
    for n in range(cap, 0, -1):
        if is_full_count(n) and n in fulls:
            continue
        for p in _column_options(g, n):
            col = (n, p)
            if k > 0 and pair_problem(g, k, prev, col):
                continue
            cols.append(col)
            if is_full_count(n):
                fulls.add(n)
            _walls_exact(g, total - n, k + 1, col, cols, fulls, out)
            if is_full_count(n):
                fulls.discard(n)
            cols.pop()


@lru_cache(maxsize=None)
def walls_with_blocks(g: int, total: int) -> tuple:
    """All proper walls with exactly ``total`` added blocks, in descending total order."""
    out: list = []
    _walls_exact(int(g), total, 0, EMPTY_COLUMN, [], set(), out)
    return tuple(sort_walls_desc(out))


def enumerate_walls(g: int, max_blocks: int) -> list:
    """All proper walls with at most ``max_blocks`` added blocks, descending total order."""
    if max_blocks < 0:
        raise ValueError("max_blocks must be nonnegative")
    out = []
    for total in range(max_blocks + 1):
        out.extend(walls_with_blocks(int(g), total))
    return sort_walls_desc(out)


def enumerate_weight_space(g: int, w: Weight, reduced_only: bool = True) -> list:
    if w.lam != g:
        raise ValueError("weight lives over a different ground state")
    if min(w.k) < 0:
        return []
    walls = [Y for Y in walls_with_blocks(int(g), sum(w.k)) if Y.color_counts() == w.k]
    if reduced_only:
        walls = [Y for Y in walls if is_reduced(Y)]
    return walls
