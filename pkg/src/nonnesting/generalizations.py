"""Multiset words with ``k`` copies of each value of ``1..n``.

``A_n^k`` avoids 1221 and 2112, ``B_n^k`` has a nonnesting arc diagram when
consecutive copies are joined, and ``C_n^k`` (canon words) has all ``k``
copy-subsequences equal.  The enumerators for A and B search prefixes and
prune as soon as a forbidden configuration appears; both properties are
inherited by prefixes, so the search is exhaustive.
"""

from __future__ import annotations

import math
from collections import Counter
from functools import lru_cache
from typing import Iterator, Sequence

from .core import (
    ArcDiagram,
    CapExceeded,
    DEFAULT_CAP,
    Multipermutation,
    Permutation,
    _check_cap,
    copy_subsequences,
    enumerate_perms,
)
from .polynomials import BivariatePoly, T, U, distribution, eulerian


def multinomial(n: int, k: int) -> int:
    return math.factorial(k * n) // math.factorial(k) ** n


def k_catalan(n: int, k: int) -> int:
    return math.comb(k * n, n) // ((k - 1) * n + 1)


def b_count_formula(n: int, k: int) -> int:
    return math.factorial(k * n) // math.factorial((k - 1) * n + 1)


def a_count_formula(n: int) -> int:
    return 2 ** (n - 1) * math.factorial(n) if n else 1


def enumerate_multiperms(n: int, k: int, cap: int | None = None) -> Iterator[Multipermutation]:
    """All words with ``k`` copies of each of ``1..n``, lexicographically."""
    _check_cap(multinomial(n, k), cap, f"multiset permutations of ({n}, {k})")
    remaining = [k] * (n + 1)
    word: list[int] = []
    total = n * k

    def rec() -> Iterator[Multipermutation]:
        if len(word) == total:
            yield Multipermutation._trusted(word)
            return
        for v in range(1, n + 1):
            if remaining[v]:
                remaining[v] -= 1
                word.append(v)
                yield from rec()
                word.pop()
                remaining[v] += 1

    yield from rec()


def _pruned_search(n: int, k: int, ok, cap: int | None) -> Iterator[Multipermutation]:
    """Lexicographic prefix search keeping only prefixes accepted by ``ok``."""
    limit = DEFAULT_CAP if cap is None else cap
    remaining = [k] * (n + 1)
    word: list[int] = []
    total = n * k
    emitted = 0

    def rec() -> Iterator[Multipermutation]:
        nonlocal emitted
        if len(word) == total:
            emitted += 1
            if emitted > limit:
                raise CapExceeded(f"more than {limit} words for ({n}, {k})")
            yield Multipermutation._trusted(word)
            return
        for v in range(1, n + 1):
            if remaining[v] and ok(word, v):
                remaining[v] -= 1
                word.append(v)
                yield from rec()
                word.pop()
                remaining[v] += 1

    yield from rec()


# ---------------------------------------------------------------------------
# A_n^k
# ---------------------------------------------------------------------------


def is_in_A(word: Sequence[int]) -> bool:
    """No ``a..b..b..a`` with ``a != b``: at most one copy of ``b`` between the outer ``a``s."""
    first: dict[int, int] = {}
    last: dict[int, int] = {}
    for pos, v in enumerate(word):
        first.setdefault(v, pos)
        last[v] = pos
    for a in first:
        inside = Counter(word[first[a] + 1 : last[a]])
        if any(c >= 2 for b, c in inside.items() if b != a):
            return False
    return True


def _a_extends(prefix: list[int], v: int) -> bool:
    # a new copy of v closes an abba iff some b occurs twice after the first v
    try:
        f = prefix.index(v)
    except ValueError:
        return True
    seen = set()
    for b in prefix[f + 1 :]:
        if b != v:
            if b in seen:
                return False
            seen.add(b)
    return True


def enumerate_A(n: int, k: int, cap: int | None = None) -> Iterator[Multipermutation]:
    """Same order as the generic search with :func:`_a_extends`.

    A repeated ``v`` is allowed iff no other value has its second-to-last
    copy after the first ``v``.  Prefixes that leave an unfinished value
    blocked are cut early; they have no completions.
    """
    limit = DEFAULT_CAP if cap is None else cap
    remaining = [k] * (n + 1)
    first = [-1] * (n + 1)
    last = [-1] * (n + 1)
    second_last = [-1] * (n + 1)
    word: list[int] = []
    total = n * k
    emitted = 0

    def rec() -> Iterator[Multipermutation]:
        nonlocal emitted
        pos = len(word)
        if pos == total:
            emitted += 1
            if emitted > limit:
                raise CapExceeded(f"more than {limit} words for ({n}, {k})")
            yield Multipermutation._trusted(word)
            return
        for v in range(1, n + 1):
            if not remaining[v]:
                continue
            f = first[v]
            if f >= 0 and any(second_last[b] > f for b in range(1, n + 1) if b != v):
                continue
            saved = (first[v], last[v], second_last[v])
            if f < 0:
                first[v] = pos
            second_last[v], last[v] = last[v], pos
            remaining[v] -= 1
            # a started value that is now blocked can never be finished
            if not any(
                remaining[u] and first[u] >= 0 and second_last[v] > first[u]
                for u in range(1, n + 1)
                if u != v
            ):
                word.append(v)
                yield from rec()
                word.pop()
            remaining[v] += 1
            first[v], last[v], second_last[v] = saved

    yield from rec()


def a_poly(n: int, k: int, cap: int | None = None) -> BivariatePoly:
    return distribution(enumerate_A(n, k, cap))


def a_closed(n: int, k: int) -> BivariatePoly:
    """``u^((k-3)n+2) (u^2 + t)^(n-1) A_n(t)``, valid for ``k >= 3``."""
    if k < 3:
        raise ValueError("closed form holds for k >= 3; for k = 2 use the main theorem")
    if n < 1:
        raise ValueError("closed form holds for n >= 1")
    return BivariatePoly.monomial(0, (k - 3) * n + 2) * (U * U + T) ** (n - 1) * eulerian(n)


def overrun_decomposition(word: Sequence[int]) -> tuple[Permutation, frozenset[int]]:
    """Split a word of ``A_n^k`` (``k >= 3``) into its value order and overrun set.

    ``i`` is an overrun when the last copy of ``sigma_i`` sits to the right of
    the first copy of ``sigma_(i+1)``.
    """
    order: list[int] = []
    first: dict[int, int] = {}
    last: dict[int, int] = {}
    for pos, v in enumerate(word):
        if v not in first:
            first[v] = pos
            order.append(v)
        last[v] = pos
    overruns = frozenset(
        i for i in range(1, len(order)) if last[order[i - 1]] > first[order[i]]
    )
    return Permutation(order), overruns


def overrun_word(sigma: Sequence[int], overruns, k: int) -> Multipermutation:
    """Inverse of :func:`overrun_decomposition`."""
    if k < 3:
        raise ValueError("overrun structure needs k >= 3")
    word = [v for v in sigma for _ in range(k)]
    for i in overruns:
        a = i * k - 1  # last copy of sigma_i (0-based)
        word[a], word[a + 1] = word[a + 1], word[a]
    return Multipermutation._trusted(word)


# ---------------------------------------------------------------------------
# B_n^k
# ---------------------------------------------------------------------------


def block_arcs(word: Sequence[int]) -> ArcDiagram:
    """Arcs joining consecutive copies of each value (1-based positions)."""
    last: dict[int, int] = {}
    arcs = []
    for pos, v in enumerate(word, 1):
        if v in last:
            arcs.append((last[v], pos))
        last[v] = pos
    return ArcDiagram(len(word), tuple(arcs))


def is_in_B(word: Sequence[int]) -> bool:
    return not block_arcs(word).has_nesting()


def _b_extends(prefix: list[int], v: int) -> bool:
    # the new arc from the previous v nests an older arc iff some b occurs twice after it
    p = len(prefix) - 1
    while p >= 0 and prefix[p] != v:
        p -= 1
    if p < 0:
        return True
    seen = set()
    for b in prefix[p + 1 :]:
        if b in seen:
            return False
        seen.add(b)
    return True


def enumerate_B(n: int, k: int, cap: int | None = None) -> Iterator[Multipermutation]:
    """Same order as the generic search with :func:`_b_extends`, checked in O(1) per step.

    ``start`` is where the longest repeat-free suffix of the prefix begins; a
    new copy of ``v`` is allowed iff the previous ``v`` sits at ``start - 1``
    or later.
    """
    limit = DEFAULT_CAP if cap is None else cap
    remaining = [k] * (n + 1)
    last = [-1] * (n + 1)
    word: list[int] = []
    total = n * k
    emitted = 0

    def rec(start: int) -> Iterator[Multipermutation]:
        nonlocal emitted
        pos = len(word)
        if pos == total:
            emitted += 1
            if emitted > limit:
                raise CapExceeded(f"more than {limit} words for ({n}, {k})")
            yield Multipermutation._trusted(word)
            return
        for v in range(1, n + 1):
            prev = last[v]
            if remaining[v] and (prev < 0 or prev + 1 >= start):
                new_start = max(start, prev + 1)
                remaining[v] -= 1
                last[v] = pos
                # values left behind the window can never be placed again
                if not any(
                    remaining[u] and 0 <= last[u] < new_start - 1 for u in range(1, n + 1)
                ):
                    word.append(v)
                    yield from rec(new_start)
                    word.pop()
                last[v] = prev
                remaining[v] += 1

    yield from rec(0)


def b_count(n: int, k: int, cap: int | None = None) -> int:
    return sum(1 for _ in enumerate_B(n, k, cap))


def b_count_fast(n: int, k: int) -> int:
    """``|B_n^k|`` by memoised prefix counting.

    The state is the remaining copies together with the prefix from one place
    before its repeat-free suffix onward; the admissibility test above only
    looks at that window.
    """

    @lru_cache(maxsize=None)
    def count(remaining: tuple[int, ...], window: tuple[int, ...]) -> int:
        if not any(remaining):
            return 1
        total = 0
        for v in range(1, n + 1):
            r = remaining[v - 1]
            if not r:
                continue
            if r == k:
                new_window = window + (v,)
            elif v in window:
                cut = len(window) - 1 - window[::-1].index(v)
                new_window = window[cut:] + (v,)
            else:
                continue
            total += count(remaining[: v - 1] + (r - 1,) + remaining[v:], new_window)
        return total

    return count((k,) * n, ())


def b_poly(n: int, k: int, cap: int | None = None) -> BivariatePoly:
    return distribution(enumerate_B(n, k, cap))


# ---------------------------------------------------------------------------
# Canon words C_n^k
# ---------------------------------------------------------------------------


def is_canon(word: Sequence[int]) -> bool:
    counts = Counter(word)
    if len(set(counts.values())) > 1:
        return False
    layers = copy_subsequences(word)
    return all(layer == layers[0] for layer in layers)


def syt_rectangle_count(n: int, k: int) -> int:
    """Standard Young tableaux of a ``k x n`` rectangle (hook length formula)."""
    hooks = 1
    for r in range(k):
        for c in range(n):
            hooks *= (n - c - 1) + (k - r - 1) + 1
    return math.factorial(n * k) // hooks


def enumerate_canon_class(sigma: Sequence[int], k: int, cap: int | None = None) -> Iterator[Multipermutation]:
    """Words whose every copy-subsequence equals ``sigma``, built as interleavings.

    ``counts[j]`` is how many letters copy-layer ``j`` has emitted; layer ``j``
    may advance only while layer ``j-1`` is strictly ahead of it.
    """
    sigma = tuple(sigma)
    n = len(sigma)
    _check_cap(syt_rectangle_count(n, k), cap, f"canon class of {sigma} with k={k}")
    counts = [0] * k
    word: list[int] = []

    def rec() -> Iterator[Multipermutation]:
        if len(word) == n * k:
            yield Multipermutation._trusted(word)
            return
        for j in range(k):
            c = counts[j]
            if c < n and (j == 0 or counts[j - 1] > c):
                counts[j] += 1
                word.append(sigma[c])
                yield from rec()
                word.pop()
                counts[j] -= 1

    yield from rec()


def enumerate_canon(n: int, k: int, cap: int | None = None) -> Iterator[Multipermutation]:
    _check_cap(math.factorial(n) * syt_rectangle_count(n, k), cap, f"C_{n}^{k}")
    for sigma in enumerate_perms(n, cap=math.inf):
        yield from enumerate_canon_class(sigma, k, cap=math.inf)


def c_k_class_poly(sigma: Sequence[int], k: int, cap: int | None = None) -> BivariatePoly:
    return distribution(enumerate_canon_class(sigma, k, cap))


def c_k_poly(n: int, k: int, cap: int | None = None) -> BivariatePoly:
    return distribution(enumerate_canon(n, k, cap))
