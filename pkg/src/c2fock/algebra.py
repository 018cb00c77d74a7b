"""Exact Laurent polynomials in q and the C_2^(1) Cartan datum.

All coefficients are Python integers, so nothing ever overflows or rounds.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Mapping, Optional, Union

import numpy as np

INDICES = (0, 1, 2)

#: Generalized Cartan matrix, ``CARTAN[i, j] = a_ij = <h_i, alpha_j>``.
CARTAN = np.array([[2, -1, 0], [-2, 2, -2], [0, -1, 2]], dtype=np.int64)

#: ``q_i = q ** QI_EXPONENT[i]``.
QI_EXPONENT = (2, 1, 2)

#: Coefficients of the null root in the simple-root basis.
DELTA = (1, 2, 1)


class NonDivisibleError(ArithmeticError):
    """Raised when a Laurent polynomial division does not come out exact."""


class LaurentPoly:
    """An element of Z[q, q^-1], stored sparsely as ``{exponent: coefficient}``."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Union[Mapping[int, int], Iterable, int, None] = None):
        if terms is None:
            items = ()
        elif isinstance(terms, int):
            items = ((0, terms),)
        elif isinstance(terms, Mapping):
            items = terms.items()
        else:
            items = terms
        acc: dict[int, int] = {}
        for e, c in items:
            acc[int(e)] = acc.get(int(e), 0) + int(c)
        self._terms = tuple(sorted((e, c) for e, c in acc.items() if c != 0))
        self._hash = None

    @classmethod
    def monomial(cls, exponent: int, coeff: int = 1) -> "LaurentPoly":
        return cls(((exponent, coeff),))

    @property
    def terms(self) -> dict[int, int]:
        return dict(self._terms)

    def items(self):
        return self._terms

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def min_degree(self) -> Optional[int]:
        return self._terms[0][0] if self._terms else None

    def max_degree(self) -> Optional[int]:
        return self._terms[-1][0] if self._terms else None

    def coeff(self, exponent: int) -> int:
        return dict(self._terms).get(exponent, 0)

    def _coerce(self, other) -> "LaurentPoly":
        if isinstance(other, LaurentPoly):
            return other
        if isinstance(other, int):
            return LaurentPoly(other)
        return NotImplemented

    def __eq__(self, other) -> bool:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(self._terms)
        return self._hash

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return LaurentPoly(self._terms + other._terms)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly((e, -c) for e, c in self._terms)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        acc: dict[int, int] = {}
        for e1, c1 in self._terms:
            for e2, c2 in other._terms:
                acc[e1 + e2] = acc.get(e1 + e2, 0) + c1 * c2
        return LaurentPoly(acc)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            if len(self._terms) != 1 or abs(self._terms[0][1]) != 1:
                raise NonDivisibleError(f"{self} is not a unit")
            (e, c), = self._terms
            return LaurentPoly.monomial(e * n, c ** (-n))
        result = ONE
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def shift(self, k: int) -> "LaurentPoly":
        """Multiply by ``q**k``."""
        return LaurentPoly((e + k, c) for e, c in self._terms)

    def bar(self) -> "LaurentPoly":
        return LaurentPoly((-e, c) for e, c in self._terms)

    def is_bar_invariant(self) -> bool:
        return self == self.bar()

    def at_zero(self) -> int:
        """Value at q = 0; only defined when no negative powers occur."""
        if self._terms and self._terms[0][0] < 0:
            raise ValueError(f"{self} has a pole at q = 0")
        return self.coeff(0)

    def in_q_zq(self) -> bool:
        """True when every exponent is at least 1 (membership in q Z[q])."""
        return all(e >= 1 for e, _ in self._terms)

    def evaluate(self, q):
        return sum(c * q ** e for e, c in self._terms)

    def __divmod__(self, other):
        raise TypeError("use exact_div for Laurent polynomial division")

    def exact_div(self, d: "LaurentPoly") -> "LaurentPoly":
        return exact_div(self, d)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return exact_div(self, other)

    def __repr__(self) -> str:
        return f"LaurentPoly({self})"

    def __str__(self) -> str:
        return format_poly(self)


ZERO = LaurentPoly()
ONE = LaurentPoly(1)
Q = LaurentPoly.monomial(1)


def q_pow(e: int, c: int = 1) -> LaurentPoly:
    return LaurentPoly.monomial(e, c)


def poly_add(p: LaurentPoly, r: LaurentPoly) -> LaurentPoly:
    return p + r


def poly_mul(p: LaurentPoly, r: LaurentPoly) -> LaurentPoly:
    return p * r


def bar(p: LaurentPoly) -> LaurentPoly:
    return p.bar()


def exact_div(p: LaurentPoly, d: LaurentPoly) -> LaurentPoly:
    """Return ``t`` with ``t * d == p``; raise :class:`NonDivisibleError` otherwise.

    Both operands are shifted to ordinary polynomials with nonzero constant
    term and long division runs from the top degree down.
    """
    if d.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    if p.is_zero():
        return ZERO
    p_low, d_low = p.min_degree(), d.min_degree()
    num = [0] * (p.max_degree() - p_low + 1)
    for e, c in p.items():
        num[e - p_low] = c
    den = [0] * (d.max_degree() - d_low + 1)
    for e, c in d.items():
        den[e - d_low] = c
    if len(den) > len(num):
        raise NonDivisibleError(f"{p} is not divisible by {d}")
    lead = den[-1]
    quot = [0] * (len(num) - len(den) + 1)
    for shift in range(len(quot) - 1, -1, -1):
        top = num[shift + len(den) - 1]
        if top == 0:
            continue
        if top % lead:
            raise NonDivisibleError(f"{p} is not divisible by {d}")
        c = top // lead
        quot[shift] = c
        for j, dc in enumerate(den):
            num[shift + j] -= c * dc
    if any(num):
        raise NonDivisibleError(f"{p} is not divisible by {d}")
    return LaurentPoly((j + p_low - d_low, c) for j, c in enumerate(quot))


def bar_symmetrize(p: LaurentPoly) -> LaurentPoly:
    """Bar-invariant polynomial agreeing with ``p`` on all exponents <= 0.

    Writing ``p = sum a_i q^{-i}``, the result is ``a_0 + sum_{i>=1} a_i (q^i + q^-i)``,
    so ``p - bar_symmetrize(p)`` lies in ``q Z[q]``.
    """
    acc: dict[int, int] = {}
    for e, c in p.items():
        if e > 0:
            continue
        acc[e] = acc.get(e, 0) + c
        if e < 0:
            acc[-e] = acc.get(-e, 0) + c
    return LaurentPoly(acc)


def _check_index(i: int) -> None:
    if i not in INDICES:
        raise ValueError(f"index must be one of 0, 1, 2, got {i!r}")


def signed_quantum_int(k: int, i: int) -> LaurentPoly:
    """``(q_i^k - q_i^-k) / (q_i - q_i^-1)`` for any integer ``k``."""
    _check_index(i)
    if k < 0:
        return -signed_quantum_int(-k, i)
    s = QI_EXPONENT[i]
    return LaurentPoly((s * (k - 1 - 2 * j), 1) for j in range(k))


def quantum_int(k: int, i: int) -> LaurentPoly:
    if k < 0:
        raise ValueError(f"quantum integer needs k >= 0, got {k}")
    return signed_quantum_int(k, i)


def quantum_factorial(n: int, i: int) -> LaurentPoly:
    if n < 0:
        raise ValueError(f"quantum factorial needs n >= 0, got {n}")
    _check_index(i)
    result = ONE
    for k in range(1, n + 1):
        result = result * quantum_int(k, i)
    return result


def quantum_binomial(n: int, k: int, i: int) -> LaurentPoly:
    if k < 0 or k > n:
        return ZERO
    return exact_div(quantum_factorial(n, i), quantum_factorial(k, i) * quantum_factorial(n - k, i))


@dataclass(frozen=True)
class Weight:
    """The weight ``Lambda_lam - sum_i k[i] alpha_i``."""

    lam: int
    k: tuple = (0, 0, 0)

    def __post_init__(self):
        _check_index(self.lam)
        object.__setattr__(self, "k", tuple(int(x) for x in self.k))
        if len(self.k) != 3:
            raise ValueError("weight needs three root multiplicities")

    def __str__(self) -> str:
        head = f"Λ{self.lam}"
        parts = []
        for i, c in enumerate(self.k):
            if c == 1:
                parts.append(f"α{i}")
            elif c:
                parts.append(f"{c}α{i}")
        if not parts:
            return head
        return f"{head}-({'+'.join(parts)})"

    def delta_multiple(self) -> Optional[int]:
        """``m`` when the weight is ``Lambda - m delta``, else ``None``."""
        m = self.k[0]
        return m if self.k == tuple(m * d for d in DELTA) else None

    def delta_str(self) -> Optional[str]:
        m = self.delta_multiple()
        if m is None:
            return None
        if m == 0:
            return f"Λ{self.lam}"
        return f"Λ{self.lam}-{'' if m == 1 else m}δ"


def pairing(j: int, w: Weight) -> int:
    """``<h_j, w>`` for ``w = Lambda_lam - sum k_i alpha_i``."""
    _check_index(j)
    return int((j == w.lam) - CARTAN[j] @ np.array(w.k, dtype=np.int64))


def weight_sub_alpha(w: Weight, i: int, r: int = 1) -> Weight:
    _check_index(i)
    k = list(w.k)
    k[i] += r
    return Weight(w.lam, tuple(k))


def is_delta_shift(w1: Weight, w2: Weight) -> Optional[int]:
    """Return ``m`` when ``w2 - w1 = m * delta``, i.e. ``k(w1) - k(w2) = m (1,2,1)``."""
    if w1.lam != w2.lam:
        raise ValueError("weights live over different dominant weights")
    diff = np.array(w1.k) - np.array(w2.k)
    m = int(diff[0])
    if np.array_equal(diff, m * np.array(DELTA)):
        return m
    return None


def format_poly(p: LaurentPoly) -> str:
    """Render in the grammar ``-q^-2+3+q^4`` (ascending exponents)."""
    if p.is_zero():
        return "0"
    out = []
    for n, (e, c) in enumerate(p.items()):
        sign = "-" if c < 0 else ("+" if n else "")
        a = abs(c)
        if e == 0:
            body = str(a)
        else:
            mono = "q" if e == 1 else f"q^{e}"
            body = mono if a == 1 else f"{a}*{mono}"
        out.append(sign + body)
    return "".join(out)


_TERM = re.compile(r"([+-]?)(?:(\d+)(?:\*(q(?:\^(-?\d+))?))?|(q(?:\^(-?\d+))?))")


def parse_poly(text: str) -> LaurentPoly:
    """Inverse of :func:`format_poly`; whitespace is ignored."""
    s = "".join(text.split())
    if not s:
        raise ValueError("empty polynomial")
    pos = 0
    acc: dict[int, int] = {}
    while pos < len(s):
        m = _TERM.match(s, pos)
        if m is None or m.end() == pos or (pos > 0 and not m.group(1)):
            raise ValueError(f"cannot parse polynomial {text!r} at position {pos}")
        sign = -1 if m.group(1) == "-" else 1
        if m.group(2) is not None:
            c = int(m.group(2))
            if m.group(3) is None:
                e = 0
            else:
                e = int(m.group(4)) if m.group(4) is not None else 1
        else:
            c = 1
            e = int(m.group(6)) if m.group(6) is not None else 1
        acc[e] = acc.get(e, 0) + sign * c
        pos = m.end()
    return LaurentPoly(acc)
