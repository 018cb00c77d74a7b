"""The Fock space action of e_i, f_i and q^h on proper Young walls."""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Mapping, Optional, Union

from .algebra import (
    CARTAN,
    INDICES,
    ONE,
    ZERO,
    LaurentPoly,
    exact_div,
    format_poly,
    pairing,
    parse_poly,
    quantum_binomial,
    quantum_factorial,
    signed_quantum_int,
)
from .crystal import WallPart, signature
from .youngwall import (
    YoungWall,
    ground_wall,
    parse_wall,
    sort_walls_desc,
    try_add,
    try_remove,
    window_problem,
)

REMOVE = "REMOVE"
ADD = "ADD"
VIRTUAL_REMOVE = "VIRTUAL_REMOVE"
VIRTUAL_ADD = "VIRTUAL_ADD"

MINUS_Q2 = LaurentPoly.monomial(2, -1)


class FockVector:
    """A finite Z[q, q^-1]-combination of proper walls over one ground state."""

    __slots__ = ("ground", "_terms")

    def __init__(self, ground: int, terms: Union[Mapping, Iterable, None] = None):
        self.ground = int(ground)
        acc: dict = {}
        items = terms.items() if isinstance(terms, Mapping) else (terms or ())
        for Y, c in items:
            if Y.ground != self.ground:
                raise ValueError(f"{Y} does not live over Λ{self.ground}")
            if isinstance(c, int):
                c = LaurentPoly(c)
            acc[Y] = acc.get(Y, ZERO) + c
        self._terms = {Y: c for Y, c in acc.items() if not c.is_zero()}

    @classmethod
    def basis(cls, Y: YoungWall, coeff=ONE) -> "FockVector":
        return cls(Y.ground, {Y: coeff})

    @classmethod
    def zero(cls, ground: int) -> "FockVector":
        return cls(ground)

    def items(self):
        return self._terms.items()

    def walls(self) -> list:
        return sort_walls_desc(self._terms)

    def sorted_terms(self) -> list:
        return [(Y, self._terms[Y]) for Y in self.walls()]

    def coefficient(self, Y: YoungWall) -> LaurentPoly:
        return self._terms.get(Y, ZERO)

    def __getitem__(self, Y: YoungWall) -> LaurentPoly:
        return self.coefficient(Y)

    def __contains__(self, Y) -> bool:
        return Y in self._terms

    def __len__(self) -> int:
        return len(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def _check(self, other: "FockVector") -> None:
        if other.ground != self.ground:
            raise ValueError("vectors live over different ground states")

    def __add__(self, other: "FockVector") -> "FockVector":
        self._check(other)
        return FockVector(self.ground, list(self._terms.items()) + list(other._terms.items()))

    def __neg__(self) -> "FockVector":
        return FockVector(self.ground, {Y: -c for Y, c in self._terms.items()})

    def __sub__(self, other: "FockVector") -> "FockVector":
        return self + (-other)

    def scale(self, c) -> "FockVector":
        if isinstance(c, int):
            c = LaurentPoly(c)
        return FockVector(self.ground, {Y: c * v for Y, v in self._terms.items()})

    def __rmul__(self, c) -> "FockVector":
        return self.scale(c)

    def __eq__(self, other) -> bool:
        if not isinstance(other, FockVector):
            return NotImplemented
        return self.ground == other.ground and self._terms == other._terms

    def __hash__(self):
        return hash((self.ground, frozenset(self._terms.items())))

    def to_dict(self) -> dict:
        return {
            "ground": f"L{self.ground}",
            "terms": [{"wall": Y.literal(), "coeff": format_poly(c)} for Y, c in self.sorted_terms()],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, data: Mapping) -> "FockVector":
        g = data["ground"]
        if not (isinstance(g, str) and g in ("L0", "L1", "L2")):
            raise ValueError(f"bad ground {g!r}")
        ground = int(g[1])
        terms = []
        for t in data["terms"]:
            Y = parse_wall(t["wall"])
            if Y.ground != ground:
                raise ValueError(f"{t['wall']} does not live over {g}")
            terms.append((Y, parse_poly(t["coeff"])))
        return cls(ground, terms)

    @classmethod
    def from_json(cls, text: str) -> "FockVector":
        return cls.from_dict(json.loads(text))

    def __repr__(self) -> str:
        if not self._terms:
            return f"FockVector(L{self.ground}: 0)"
        body = " + ".join(f"({format_poly(c)}){Y.literal()}" for Y, c in self.sorted_terms())
        return f"FockVector({body})"


# ---------------------------------------------------------------------------
# local moves


@dataclass(frozen=True)
class Move:
    kind: str
    k: int
    i: int
    run_length: int
    swallow: bool
    result: YoungWall
    local_coeff: LaurentPoly


def swallow_factor(l: int) -> LaurentPoly:
    """``q^-1 (1 - (-q^2)^(l+1))``."""
    return (ONE - MINUS_Q2 ** (l + 1)).shift(-1)


def _top_is_lower_one(n: int) -> bool:
    # the n-th added block sits in the lower half of a 1-pair exactly when n is even
    return n % 2 == 0


def _partial_runs(Y: YoungWall) -> list:
    """Maximal runs ``(a, b)`` (``a <= b``) of equal-count columns with a half cube on top."""
    runs = []
    k = 0
    while k < Y.width:
        n, p = Y.col(k)
        if p is None:
            k += 1
            continue
        b = k
        while Y.count(b + 1) == n and Y.partial(b + 1) is not None:
            b += 1
        runs.append((k, b))
        k = b + 1
    return runs


def _flip_run(Y: YoungWall, a: int, b: int, end: int, end_state) -> Optional[YoungWall]:
    cols = list(Y.columns)
    for j in range(a, b + 1):
        n, p = cols[j]
        cols[j] = (n, 2 - p)
    cols[end] = end_state
    if window_problem(Y.ground, cols):
        return None
    return YoungWall(Y.ground, cols)


@lru_cache(maxsize=200000)
def moves_remove(Y: YoungWall, i: int) -> tuple:
    out = []
    for k in range(Y.width):
        Z = try_remove(Y, k, i)
        if Z is None:
            continue
        if i == 1 and _top_is_lower_one(Y.count(k)):
            l = sum(1 for j in range(k) if Y.count(j) == Y.count(k))
            out.append(Move(REMOVE, k, i, l, True, Z, swallow_factor(l)))
        else:
            out.append(Move(REMOVE, k, i, 0, False, Z, ONE))
    if i != 1:
        for a, b in _partial_runs(Y):
            if b == a or Y.partial(a) != i:
                continue
            n, p_end = Y.col(b)
            Z = _flip_run(Y, a, b - 1, b, (n - 1, None))
            if Z is not None:
                l = b - a
                out.append(Move(VIRTUAL_REMOVE, a, i, l, False, Z, MINUS_Q2 ** l))
    return tuple(out)


@lru_cache(maxsize=200000)
def moves_add(Y: YoungWall, i: int) -> tuple:
    out = []
    for k in range(Y.width + 1):
        Z = try_add(Y, k, i)
        if Z is None:
            continue
        n = Y.count(k)
        if i == 1 and not _top_is_lower_one(n + 1):
            if k >= Y.width:
                # the run of equal columns is the infinite ground tail
                out.append(Move(ADD, k, i, -1, False, Z, ONE))
                continue
            l = sum(1 for j in range(k + 1, Y.width) if Y.count(j) == n)
            out.append(Move(ADD, k, i, l, True, Z, swallow_factor(l)))
        else:
            out.append(Move(ADD, k, i, 0, False, Z, ONE))
    if i != 1:
        for a, b in _partial_runs(Y):
            if b == a or 2 - Y.partial(b) != i:
                continue
            n, _ = Y.col(a)
            Z = _flip_run(Y, a + 1, b, a, (n + 1, None))
            if Z is not None:
                l = b - a
                out.append(Move(VIRTUAL_ADD, b, i, l, False, Z, MINUS_Q2 ** l))
    return tuple(out)


def _phi_minus_eps(part: WallPart, i: int) -> int:
    if part.is_empty():
        return 0
    sig = signature(part, i)
    return sig.phi - sig.eps


def R_exponent(move: Move, Y: YoungWall, i: int) -> int:
    """``φ_i - ε_i`` of the part of ``Y`` to the right of the removed block."""
    k = move.k
    if k == 0:
        return 0
    if i == 1:
        n = Y.count(k)
        l = k - 1
        while l >= 0 and Y.count(l) == n:
            l -= 1
        if l < 0:
            return 0
        return _phi_minus_eps(WallPart(Y, 0, l + 1), i)
    return _phi_minus_eps(WallPart(Y, 0, k), i)


def L_exponent(move: Move, Y: YoungWall, i: int) -> int:
    """``φ_i - ε_i`` of the part of ``Y`` to the left of the added block."""
    k = move.k
    if i == 1:
        if move.run_length < 0:
            return 0
        n = Y.count(k)
        l = k
        while Y.count(l + 1) == n:
            l += 1
        return _phi_minus_eps(WallPart(Y, l + 1, None), i)
    return _phi_minus_eps(WallPart(Y, k + 1, None), i)


def _exp_weight(i: int) -> int:
    return 1 if i == 1 else 2


@lru_cache(maxsize=200000)
def e_on_wall(Y: YoungWall, i: int) -> tuple:
    out = []
    w = _exp_weight(i)
    for mv in moves_remove(Y, i):
        out.append((mv.result, mv.local_coeff.shift(-w * R_exponent(mv, Y, i))))
    return tuple(out)


@lru_cache(maxsize=200000)
def f_on_wall(Y: YoungWall, i: int) -> tuple:
    out = []
    w = _exp_weight(i)
    for mv in moves_add(Y, i):
        out.append((mv.result, mv.local_coeff.shift(w * L_exponent(mv, Y, i))))
    return tuple(out)


def _as_vector(v) -> FockVector:
    if isinstance(v, YoungWall):
        return FockVector.basis(v)
    return v


def act_e(i: int, v) -> FockVector:
    v = _as_vector(v)
    terms = []
    for Y, c in v.items():
        for Z, a in e_on_wall(Y, i):
            terms.append((Z, c * a))
    return FockVector(v.ground, terms)


def act_f(i: int, v) -> FockVector:
    v = _as_vector(v)
    terms = []
    for Y, c in v.items():
        for Z, a in f_on_wall(Y, i):
            terms.append((Z, c * a))
    return FockVector(v.ground, terms)


def power_f(i: int, r: int, v) -> FockVector:
    v = _as_vector(v)
    for _ in range(r):
        v = act_f(i, v)
    return v


def power_e(i: int, r: int, v) -> FockVector:
    v = _as_vector(v)
    for _ in range(r):
        v = act_e(i, v)
    return v


def divided_power_f(i: int, r: int, v) -> FockVector:
    """``f_i^r / [r]_i!`` with every coefficient divided exactly."""
    if r < 0:
        raise ValueError("divided power needs r >= 0")
    v = power_f(i, r, v)
    d = quantum_factorial(r, i)
    return FockVector(v.ground, {Y: exact_div(c, d) for Y, c in v.items()})


def divided_power_e(i: int, r: int, v) -> FockVector:
    if r < 0:
        raise ValueError("divided power needs r >= 0")
    v = power_e(i, r, v)
    d = quantum_factorial(r, i)
    return FockVector(v.ground, {Y: exact_div(c, d) for Y, c in v.items()})


def h_pairing(h, Y: YoungWall) -> int:
    """``<h, wt(Y)>`` for ``h`` an index 0..2 (meaning h_i), ``"c"`` or ``"d"``."""
    w = Y.weight()
    if h == "c":
        return sum(pairing(j, w) for j in INDICES)
    if h == "d":
        return -w.k[0]
    return pairing(int(h), w)


def act_qh(h, v) -> FockVector:
    v = _as_vector(v)
    return FockVector(v.ground, {Y: c.shift(h_pairing(h, Y)) for Y, c in v.items()})


def ef_commutator(Y: YoungWall, i: int, j: int) -> tuple:
    """Both sides of ``[e_i, f_j] Y = δ_ij (K_i - K_i^-1)/(q_i - q_i^-1) Y``."""
    lhs = act_e(i, act_f(j, Y)) - act_f(j, act_e(i, Y))
    if i == j:
        rhs = FockVector.basis(Y, signed_quantum_int(pairing(i, Y.weight()), i))
    else:
        rhs = FockVector.zero(Y.ground)
    return lhs, rhs


def check_ef_relation(Y: YoungWall, i: int, j: int) -> bool:
    lhs, rhs = ef_commutator(Y, i, j)
    return lhs == rhs


def serre_combination(i: int, j: int, v, form: str = "e") -> FockVector:
    """``sum_k (-1)^k [n choose k]_i X_i^(n-k) X_j X_i^k v`` with ``n = 1 - a_ij``."""
    if i == j:
        raise ValueError("Serre relations need i != j")
    v = _as_vector(v)
    act = act_e if form == "e" else act_f
    n = 1 - int(CARTAN[i, j])
    total = FockVector.zero(v.ground)
    for k in range(n + 1):
        w = v
        for _ in range(k):
            w = act(i, w)
        w = act(j, w)
        for _ in range(n - k):
            w = act(i, w)
        c = quantum_binomial(n, k, i)
        total = total + w.scale(c if k % 2 == 0 else -c)
    return total


def check_serre(i: int, j: int, v, forms: str = "ef") -> bool:
    return all(serre_combination(i, j, v, f).is_zero() for f in forms)


def vacuum(g: int) -> FockVector:
    return FockVector.basis(ground_wall(g))
