"""Bar-invariant bases of the basic representations inside the Fock space.

``A(Y)`` is the monomial vector obtained by peeling a reduced wall down to the
ground; ``G(Y)`` is the global basis element obtained from it by a unitriangular,
bar-symmetric correction within one weight space.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass, field
from math import comb
from typing import Callable, Optional

from .algebra import ONE, LaurentPoly, Weight, bar_symmetrize, exact_div, quantum_int
from .fock import FockVector, L_exponent, divided_power_f, moves_add, vacuum
from .youngwall import (
    NotReducedError,
    YoungWall,
    associated_partition,
    dominance,
    enumerate_weight_space,
    is_reduced,
    peel,
    reduced_form,
    wall_total_order,
)


class NoChainError(ValueError):
    """Raised when no admissible chain of single moves leads from one wall to another."""


@dataclass(frozen=True)
class PeelSequence:
    """Successive peels ``Y = Y_0, Y_1, ..., Y_N = ground``; ``steps[k] = (i, r)``."""

    walls: tuple
    steps: tuple

    def __len__(self) -> int:
        return len(self.steps)

    def monomial(self) -> str:
        """The operator word, e.g. ``f1^(2) f0 f2 f1``."""
        parts = []
        for i, r in self.steps:
            parts.append(f"f{i}" if r == 1 else f"f{i}^({r})")
        return " ".join(parts)


def _require_reduced(Y: YoungWall) -> None:
    if not is_reduced(Y):
        raise NotReducedError(f"{Y.literal()} is not reduced")


def peel_sequence(Y: YoungWall) -> PeelSequence:
    _require_reduced(Y)
    walls = [Y]
    steps = []
    cur = Y
    while cur.width:
        nxt, i, r = peel(cur)
        steps.append((i, r))
        walls.append(nxt)
        cur = nxt
    return PeelSequence(tuple(walls), tuple(steps))


@dataclass
class BasisExpansion:
    head: YoungWall
    vector: FockVector
    kind: str
    gamma: tuple = ()  # (lower reduced wall, bar-invariant coefficient)

    @property
    def coeffs(self) -> dict:
        return dict(self.vector.items())

    def coefficient(self, Z: YoungWall) -> LaurentPoly:
        return self.vector.coefficient(Z)

    def to_dict(self) -> dict:
        data = self.vector.to_dict()
        data["kind"] = self.kind
        data["head"] = self.head.literal()
        data["gamma"] = [
            {"from": self.head.literal(), "to": Z.literal(), "coeff": str(c)} for Z, c in self.gamma
        ]
        return data


@functools.lru_cache(maxsize=None)
def _a_vector(Y: YoungWall) -> FockVector:
    seq = peel_sequence(Y)
    v = vacuum(Y.ground)
    for i, r in reversed(seq.steps):
        v = divided_power_f(i, r, v)
    return v


def A_basis(Y: YoungWall) -> BasisExpansion:
    """``f_{i_1}^{(r_1)} ... f_{i_N}^{(r_N)}`` applied to the ground wall."""
    _require_reduced(Y)
    return BasisExpansion(Y, _a_vector(Y), "A")


# ---------------------------------------------------------------------------
# global basis


def _weight_space(Y: YoungWall) -> tuple:
    return tuple(enumerate_weight_space(Y.ground, Y.weight(), reduced_only=True))


def _sorted_desc(walls, order: Callable) -> list:
    return sorted(walls, key=functools.cmp_to_key(order), reverse=True)


class _GSolver:
    def __init__(self, order: Callable = wall_total_order):
        self.order = order
        self.memo: dict = {}

    def solve(self, Y: YoungWall) -> BasisExpansion:
        if Y in self.memo:
            return self.memo[Y]
        space = _sorted_desc(_weight_space(Y), self.order)
        below = space[space.index(Y) + 1:]
        rest = _a_vector(Y)
        gamma = []
        for Yp in below:
            c = rest.coefficient(Yp)
            if c.is_zero():
                continue
            g = bar_symmetrize(c)
            if g.is_zero():
                continue
            gamma.append((Yp, g))
            rest = rest - self.solve(Yp).vector.scale(g)
        out = BasisExpansion(Y, rest, "G", tuple(gamma))
        self.memo[Y] = out
        return out


_DEFAULT_SOLVER = _GSolver()


def G_basis(Y: YoungWall, order: Optional[Callable] = None) -> BasisExpansion:
    """Global basis element of a reduced wall.

    ``order`` is a comparison function used to run the correction; the default is
    the usual total order on walls. Any refinement of the dominance order gives
    the same result.
    """
    _require_reduced(Y)
    solver = _DEFAULT_SOLVER if order is None else _GSolver(order)
    return solver.solve(Y)


def G_table(g: int, w: Weight, order: Optional[Callable] = None) -> list:
    """G for every reduced wall of weight ``w``, highest wall first."""
    if w.lam != g:
        raise ValueError("weight lives over a different ground state")
    walls = _sorted_desc(enumerate_weight_space(g, w, reduced_only=True), order or wall_total_order)
    solver = _DEFAULT_SOLVER if order is None else _GSolver(order)
    return [solver.solve(Y) for Y in walls]


def support_violations(E: BasisExpansion, strict: bool = False) -> list:
    """Walls in the expansion that break the triangularity of ``E``.

    Every wall ``Z != head`` must have the head's weight, a reduced form whose
    partition is dominated by the head's, and a partition different from the
    head's. With ``strict`` the reduced form's partition must also differ from
    the head's.
    """
    P = associated_partition(E.head)
    bad = []
    if E.vector.coefficient(E.head) != ONE:
        bad.append(E.head)
    for Z, _ in E.vector.items():
        if Z == E.head:
            continue
        PR = associated_partition(reduced_form(Z))
        if (
            Z.weight() != E.head.weight()
            or not dominance(P, PR)
            or associated_partition(Z) == P
            or (strict and PR == P)
        ):
            bad.append(Z)
    return bad


def support_ok(E: BasisExpansion, strict: bool = False) -> bool:
    return not support_violations(E, strict)


def coefficient_classes_ok(E: BasisExpansion) -> bool:
    """Off-head coefficients of a global basis element lie in q Z[q]."""
    return all(c.in_q_zq() for Z, c in E.vector.items() if Z != E.head)


# ---------------------------------------------------------------------------
# closed form for divided powers


@dataclass
class QContext:
    chain: tuple  # Y_0, ..., Y_r
    slots: tuple  # column of each added block
    moves: tuple
    step_coeffs: tuple
    J1: frozenset = frozenset()
    J2: frozenset = frozenset()
    J3: frozenset = frozenset()
    S: frozenset = frozenset()
    mu: dict = field(default_factory=dict)

    @property
    def r(self) -> int:
        return len(self.slots)

    @property
    def n1(self) -> int:
        return len(self.J1)

    @property
    def n2(self) -> int:
        return len(self.J2)

    @property
    def n3(self) -> int:
        return len(self.J3)

    def q_circ(self) -> LaurentPoly:
        out = ONE
        for c in self.step_coeffs:
            out = out * c
        return out


def _below_target(Y: YoungWall, Z: YoungWall) -> bool:
    return all(Y.count(k) <= Z.count(k) for k in range(max(Y.width, Z.width)))


def move_chains(Y: YoungWall, Z: YoungWall, i: int) -> list:
    """All chains of single ``f_i`` moves from ``Y`` to ``Z`` with slots moving rightward or upward."""
    r = sum(Z.color_counts()) - sum(Y.color_counts())
    out = []

    def rec(cur, last_k, path):
        if len(path) == r:
            if cur == Z:
                out.append(tuple(path))
            return
        for mv in moves_add(cur, i):
            if last_k is not None and mv.k > last_k:
                continue
            if not _below_target(mv.result, Z):
                continue
            path.append((cur, mv))
            rec(mv.result, mv.k, path)
            path.pop()

    if r >= 0:
        rec(Y, None, [])
    return out


def _adds_upper_one(n_before: int) -> bool:
    # a 1-block added on top of n_before blocks is the upper half of its pair exactly when n_before is even
    return n_before % 2 == 0


def q_context(Y: YoungWall, Z: YoungWall, i: int) -> QContext:
    chains = move_chains(Y, Z, i)
    if not chains:
        raise NoChainError(f"no chain of {i}-moves from {Y.literal()} to {Z.literal()}")
    if len(chains) > 1:
        raise NoChainError(f"{len(chains)} chains of {i}-moves from {Y.literal()} to {Z.literal()}")
    path = chains[0]
    w = 1 if i == 1 else 2
    walls = tuple([cur for cur, _ in path] + [Z])
    moves = tuple(mv for _, mv in path)
    coeffs = tuple(mv.local_coeff.shift(w * L_exponent(mv, cur, i)) for cur, mv in path)
    ctx = QContext(walls, tuple(mv.k for mv in moves), moves, coeffs)
    if i != 1:
        return ctx
    J1, J2, J3 = set(), set(), set()
    for k, (cur, mv) in enumerate(path, start=1):
        col = mv.k
        n_before = cur.count(col)
        if _adds_upper_one(n_before):
            if k > 1 and moves[k - 2].k == col:
                J1.add(k)
            else:
                J2.add(k)
        elif Z.count(col) == n_before + 1:
            J3.add(k)
    S = {
        k
        for k in J2
        if k - 1 in J3 and Z.count(moves[k - 2].k) == Z.count(moves[k - 1].k) - 1
    }
    ctx.J1, ctx.J2, ctx.J3, ctx.S = frozenset(J1), frozenset(J2), frozenset(J3), frozenset(S)
    ctx.mu = {k: moves[k - 1].local_coeff.shift(1) for k in S}
    return ctx


def sigma(n1: int, n2: int, n3: int) -> int:
    return 4 * comb(n1, 2) + comb(n2, 2) + comb(n3, 2) + 2 * n1 * (n2 + n3) + n2 * n3


def Q_closed_form(Y: YoungWall, Z: YoungWall, i: int, r: int) -> LaurentPoly:
    """Coefficient of ``Z`` in ``f_i^{(r)} Y`` from the product of single-step coefficients."""
    if sum(Z.color_counts()) - sum(Y.color_counts()) != r:
        raise NoChainError("walls differ by the wrong number of blocks")
    ctx = q_context(Y, Z, i)
    qc = ctx.q_circ()
    if i != 1:
        return qc.shift(2 * comb(r, 2))
    den = quantum_int(2, 1) ** ctx.n1
    for k in sorted(ctx.S):
        den = den * ctx.mu[k]
    return exact_div(qc, den).shift(sigma(ctx.n1, ctx.n2, ctx.n3))
