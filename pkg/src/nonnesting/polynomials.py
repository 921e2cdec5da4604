"""Exact integer polynomials in ``t`` and ``u`` and the named families."""

from __future__ import annotations

import math
from collections import defaultdict
from typing import Iterable, Mapping, Sequence

from .core import des, enumerate_dyck, enumerate_perms, peak_stats, plat

Exponent = tuple[int, int]

ENUMERATION_LIMIT = 8


class BivariatePoly:
    """Sparse polynomial ``sum c * t**i * u**j`` with integer coefficients.

    Zero coefficients are never stored, so ``==`` is exact coefficient
    comparison.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[Exponent, int] | Iterable[tuple[Exponent, int]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[Exponent, int] = defaultdict(int)
        for (i, j), c in items:
            if i < 0 or j < 0:
                raise ValueError(f"negative exponent in t^{i} u^{j}")
            acc[(i, j)] += c
        self._terms = {e: c for e, c in acc.items() if c}

    @classmethod
    def monomial(cls, i: int = 0, j: int = 0, coeff: int = 1) -> "BivariatePoly":
        return cls({(i, j): coeff})

    @classmethod
    def from_t_coeffs(cls, coeffs: Sequence[int]) -> "BivariatePoly":
        return cls({(i, 0): c for i, c in enumerate(coeffs)})

    @property
    def terms(self) -> dict[Exponent, int]:
        return dict(self._terms)

    def coeff(self, i: int, j: int = 0) -> int:
        return self._terms.get((i, j), 0)

    def deg_t(self) -> int:
        return max((i for i, _ in self._terms), default=-1)

    def deg_u(self) -> int:
        return max((j for _, j in self._terms), default=-1)

    def is_zero(self) -> bool:
        return not self._terms

    def t_coeffs(self) -> list[int]:
        """Coefficient list in ``t``; requires no ``u`` dependence."""
        if any(j for _, j in self._terms):
            raise ValueError("polynomial depends on u")
        out = [0] * (self.deg_t() + 1)
        for (i, _), c in self._terms.items():
            out[i] = c
        return out

    # arithmetic -------------------------------------------------------

    def __add__(self, other: "BivariatePoly") -> "BivariatePoly":
        if isinstance(other, int):
            other = BivariatePoly.monomial(coeff=other)
        return BivariatePoly(list(self._terms.items()) + list(other._terms.items()))

    __radd__ = __add__

    def __neg__(self) -> "BivariatePoly":
        return BivariatePoly({e: -c for e, c in self._terms.items()})

    def __sub__(self, other: "BivariatePoly") -> "BivariatePoly":
        return self + (-other)

    def __mul__(self, other: "BivariatePoly | int") -> "BivariatePoly":
        if isinstance(other, int):
            return BivariatePoly({e: c * other for e, c in self._terms.items()})
        acc: dict[Exponent, int] = defaultdict(int)
        for (i1, j1), c1 in self._terms.items():
            for (i2, j2), c2 in other._terms.items():
                acc[(i1 + i2, j1 + j2)] += c1 * c2
        return BivariatePoly(acc)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "BivariatePoly":
        out = BivariatePoly.monomial()
        for _ in range(e):
            out = out * self
        return out

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = BivariatePoly.monomial(coeff=other)
        if not isinstance(other, BivariatePoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    # substitutions ----------------------------------------------------

    def substitute(self, t: Exponent = (1, 0), u: Exponent = (0, 1)) -> "BivariatePoly":
        """Replace ``t`` and ``u`` by monomials given as exponent pairs.

        ``substitute(u=(1, 0))`` sets ``u := t`` and ``substitute(u=(0, 0))``
        sets ``u := 1``.
        """
        acc: dict[Exponent, int] = defaultdict(int)
        for (i, j), c in self._terms.items():
            acc[(i * t[0] + j * u[0], i * t[1] + j * u[1])] += c
        return BivariatePoly(acc)

    def reverse_in_t(self, degree: int, scale_u: bool = False) -> "BivariatePoly":
        """``t**degree * P(1/t, u)``, or ``t**degree * P(1/t, u/t)`` with ``scale_u``."""
        if self._terms and degree < self.deg_t():
            raise ValueError(f"reversal degree {degree} below t-degree {self.deg_t()}")
        acc = {}
        for (i, j), c in self._terms.items():
            new_i = degree - i - (j if scale_u else 0)
            if new_i < 0:
                raise ValueError(f"reversal degree {degree} too small for t^{i} u^{j}")
            acc[(new_i, j)] = c
        return BivariatePoly(acc)

    def evaluate(self, t: int = 1, u: int = 1):
        return sum(c * t**i * u**j for (i, j), c in self._terms.items())

    def is_palindromic(self, degree: int) -> bool:
        """Coefficient of ``t^r u^j`` equals that of ``t^(degree-r) u^j`` for all ``r``."""
        try:
            return self.reverse_in_t(degree) == self
        except ValueError:
            return False

    # output -----------------------------------------------------------

    def sorted_terms(self) -> list[tuple[int, int, int]]:
        return [(i, j, c) for (i, j), c in sorted(self._terms.items())]

    def to_json(self) -> dict:
        return {"terms": [list(term) for term in self.sorted_terms()]}

    @classmethod
    def from_json(cls, data: Mapping) -> "BivariatePoly":
        return cls({(i, j): c for i, j, c in data["terms"]})

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for i, j, c in self.sorted_terms():
            factors = []
            if i:
                factors.append("t" if i == 1 else f"t^{i}")
            if j:
                factors.append("u" if j == 1 else f"u^{j}")
            mono = "*".join(factors)
            if not mono:
                body = str(abs(c))
            elif abs(c) == 1:
                body = mono
            else:
                body = f"{abs(c)}{mono}"
            sign = "-" if c < 0 else "+"
            parts.append((sign, body))
        first_sign, first = parts[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    def __repr__(self) -> str:
        return f"BivariatePoly({str(self)!r})"


T = BivariatePoly.monomial(1, 0)
U = BivariatePoly.monomial(0, 1)
ONE = BivariatePoly.monomial()


# ---------------------------------------------------------------------------
# Families
# ---------------------------------------------------------------------------


def distribution(words: Iterable[Sequence[int]]) -> BivariatePoly:
    """Sum of ``t^des u^plat`` over ``words``."""
    acc: dict[Exponent, int] = defaultdict(int)
    for w in words:
        acc[(des(w), plat(w))] += 1
    return BivariatePoly(acc)


def eulerian_enumerated(n: int) -> BivariatePoly:
    acc: dict[Exponent, int] = defaultdict(int)
    for sigma in enumerate_perms(n, cap=math.inf):
        acc[(des(sigma), 0)] += 1
    return BivariatePoly(acc)


def eulerian_recurrence(n: int) -> BivariatePoly:
    """``A(n, m) = (m + 1) A(n-1, m) + (n - m) A(n-1, m-1)``."""
    row = [1]
    for size in range(2, n + 1):
        prev = row + [0]
        row = [
            (m + 1) * prev[m] + ((size - m) * prev[m - 1] if m else 0)
            for m in range(size)
        ]
    return BivariatePoly.from_t_coeffs(row)


def eulerian(n: int) -> BivariatePoly:
    if n <= ENUMERATION_LIMIT:
        return eulerian_enumerated(n)
    return eulerian_recurrence(n)


def narayana(n: int) -> BivariatePoly:
    """Sum of ``t^hpea u^lpea`` over all Dyck paths of semilength ``n``."""
    acc: dict[Exponent, int] = defaultdict(int)
    for d in enumerate_dyck(n, cap=math.inf):
        st = peak_stats(d)
        acc[(st.hpea, st.lpea)] += 1
    return BivariatePoly(acc)


def narayana_number(n: int, r: int) -> int:
    if not 1 <= r <= n:
        return 0
    return math.comb(n, r) * math.comb(n, r - 1) // n


def narayana_closed(n: int) -> BivariatePoly:
    """The diagonal ``N_n(t, t)`` from the Narayana numbers."""
    if n < 1:
        raise ValueError("defined for n >= 1")
    return BivariatePoly({(r, 0): narayana_number(n, r) for r in range(1, n + 1)})
