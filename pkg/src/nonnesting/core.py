"""Words, Dyck paths, arc diagrams and the statistics defined on them.

Conventions used throughout the package:

* positions in words are 1-based and a descent is a position ``i`` in
  ``1..len-1`` with ``w[i] > w[i+1]`` (the last position never counts);
* a Dyck path is a string over ``E``/``N`` that stays weakly below ``y = x``;
  lattice points use Cartesian coordinates with the origin at the lower-left;
* grid cells are addressed as ``(column, row)``, both 1-based, columns counted
  left to right and rows bottom to top.
"""

from __future__ import annotations

import itertools
import math
from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

DEFAULT_CAP = 500_000


class CapExceeded(ValueError):
    """Raised when an enumeration would produce more objects than allowed."""


class NotNonnestingError(ValueError):
    pass


def _check_cap(size: int, cap: int | None, what: str) -> None:
    limit = DEFAULT_CAP if cap is None else cap
    if size > limit:
        raise CapExceeded(f"{what} has {size} elements, above the cap of {limit}")


# ---------------------------------------------------------------------------
# Domain types
# ---------------------------------------------------------------------------


class Permutation(tuple):
    """A permutation of ``1..n`` in one-line notation."""

    def __new__(cls, entries: Iterable[int] = ()):
        self = super().__new__(cls, entries)
        if sorted(self) != list(range(1, len(self) + 1)):
            raise ValueError(f"{tuple(self)} is not a permutation of 1..{len(self)}")
        return self

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return tuple.__new__(cls, range(1, n + 1))

    @classmethod
    def decreasing(cls, n: int) -> "Permutation":
        return tuple.__new__(cls, range(n, 0, -1))

    @property
    def n(self) -> int:
        return len(self)

    def reverse(self) -> "Permutation":
        return tuple.__new__(Permutation, self[::-1])

    def inverse(self) -> "Permutation":
        inv = [0] * len(self)
        for pos, v in enumerate(self, 1):
            inv[v - 1] = pos
        return tuple.__new__(Permutation, inv)

    def swap_values(self, k: int) -> "Permutation":
        """Return ``s_k sigma``: the values ``k`` and ``k+1`` trade places."""
        return tuple.__new__(
            Permutation, (k + 1 if v == k else k if v == k + 1 else v for v in self)
        )

    @property
    def descent_set(self) -> frozenset[int]:
        return descent_set(self)

    @property
    def des(self) -> int:
        return len(descent_set(self))

    def noninversions(self) -> frozenset[tuple[int, int]]:
        """Pairs of positions ``(i, j)``, ``i < j``, with ``sigma_i < sigma_j``."""
        return frozenset(
            (i + 1, j + 1)
            for i, j in itertools.combinations(range(len(self)), 2)
            if self[i] < self[j]
        )

    def __repr__(self) -> str:
        return f"Permutation({format_word(self)!r})"


class Multipermutation(tuple):
    """A word in which each of ``1..n`` occurs exactly ``k`` times."""

    def __new__(cls, entries: Iterable[int] = ()):
        self = super().__new__(cls, entries)
        counts = Counter(self)
        n = len(counts)
        if n:
            if set(counts) != set(range(1, n + 1)):
                raise ValueError(f"values of {tuple(self)} are not 1..{n}")
            if len(set(counts.values())) != 1:
                raise ValueError(f"values of {tuple(self)} do not occur equally often")
        return self

    @classmethod
    def _trusted(cls, entries: Iterable[int]) -> "Multipermutation":
        return tuple.__new__(cls, entries)

    @property
    def n(self) -> int:
        return max(self, default=0)

    @property
    def k(self) -> int:
        return len(self) // self.n if self else 1

    def reverse(self) -> "Multipermutation":
        return tuple.__new__(Multipermutation, self[::-1])

    def __repr__(self) -> str:
        return f"Multipermutation({format_word(self)!r})"


class DyckPath(str):
    """A string over ``{'E', 'N'}`` that never goes above the diagonal."""

    def __new__(cls, steps: str = ""):
        self = super().__new__(cls, steps)
        height = 0
        for step in self:
            if step == "E":
                height += 1
            elif step == "N":
                height -= 1
                if height < 0:
                    raise ValueError(f"{str(self)!r} goes above the diagonal")
            else:
                raise ValueError(f"unknown step {step!r} in {str(self)!r}")
        if height:
            raise ValueError(f"{str(self)!r} does not end on the diagonal")
        return self

    @classmethod
    def _trusted(cls, steps: str) -> "DyckPath":
        return str.__new__(cls, steps)

    @property
    def n(self) -> int:
        return len(self) // 2

    def __repr__(self) -> str:
        return f"DyckPath({str(self)!r})"


@dataclass(frozen=True)
class ArcDiagram:
    """Points ``1..n_points`` on a line with arcs ``(i, j)``, ``i < j``."""

    n_points: int
    arcs: tuple[tuple[int, int], ...]

    def __post_init__(self):
        arcs = tuple(sorted(set(self.arcs)))
        if len(arcs) != len(self.arcs):
            raise ValueError("repeated arc")
        for i, j in arcs:
            if not 1 <= i < j <= self.n_points:
                raise ValueError(f"bad arc {(i, j)} on {self.n_points} points")
        object.__setattr__(self, "arcs", arcs)

    def nestings(self) -> list[tuple[tuple[int, int], tuple[int, int]]]:
        """Pairs ``((i, m), (j, l))`` with ``i < j < l < m``."""
        return [
            (a, b)
            for a in self.arcs
            for b in self.arcs
            if a[0] < b[0] and b[1] < a[1]
        ]

    def crossings(self) -> list[tuple[tuple[int, int], tuple[int, int]]]:
        return [
            (a, b)
            for a in self.arcs
            for b in self.arcs
            if a[0] < b[0] < a[1] < b[1]
        ]

    def has_nesting(self) -> bool:
        return any(
            a[0] < b[0] and b[1] < a[1] for a in self.arcs for b in self.arcs
        )


UPPER_LEFT = "upper-left"
LOWER_RIGHT = "lower-right"


@dataclass(frozen=True)
class DecoratedGrid:
    """The ``n x n`` grid labelled by ``sigma`` with red lines and notches.

    ``vertical_red_lines`` holds ``x`` coordinates of red lines between
    columns ``x`` and ``x+1``; ``horizontal_red_lines`` likewise for rows.
    ``notches`` maps each cell strictly below the diagonal to the corner that
    carries a notch.
    """

    n: int
    column_labels: tuple[int, ...]
    row_labels: tuple[int, ...]
    vertical_red_lines: frozenset[int]
    horizontal_red_lines: frozenset[int]
    notches: tuple[tuple[tuple[int, int], str], ...]

    def notch(self, column: int, row: int) -> str | None:
        if row >= column:
            return None
        sigma = self.column_labels
        return UPPER_LEFT if sigma[row - 1] > sigma[column - 1] else LOWER_RIGHT


@dataclass(frozen=True)
class Stats:
    des: int
    plat: int
    wdes: int
    descent_set: frozenset[int]


@dataclass(frozen=True)
class PeakStats:
    pea: int
    lpea: int
    hpea: int
    peak_cells: tuple[tuple[int, int], ...]
    valley_cells: tuple[tuple[int, int], ...]


# ---------------------------------------------------------------------------
# Text formats
# ---------------------------------------------------------------------------


def format_word(word: Sequence[int]) -> str:
    if all(0 <= v <= 9 for v in word):
        return "".join(map(str, word))
    return ",".join(map(str, word))


def parse_word(text: str) -> tuple[int, ...]:
    text = text.strip()
    if "," in text:
        parts = text.split(",")
        for pos, part in enumerate(parts, 1):
            if not part.strip().isdigit():
                raise ValueError(f"bad entry {part!r} at item {pos} of {text!r}")
        return tuple(int(p) for p in parts)
    for pos, ch in enumerate(text, 1):
        if not ch.isdigit():
            raise ValueError(f"bad character {ch!r} at position {pos} of {text!r}")
    return tuple(int(ch) for ch in text)


def parse_path(text: str) -> DyckPath:
    text = text.strip().upper()
    for pos, ch in enumerate(text, 1):
        if ch not in "EN":
            raise ValueError(f"bad step {ch!r} at position {pos} of {text!r}")
    return DyckPath(text)


# ---------------------------------------------------------------------------
# Statistics and patterns
# ---------------------------------------------------------------------------


def descent_set(word: Sequence[int]) -> frozenset[int]:
    return frozenset(i for i in range(1, len(word)) if word[i - 1] > word[i])


def des(word: Sequence[int]) -> int:
    return sum(1 for a, b in zip(word, word[1:]) if a > b)


def plat(word: Sequence[int]) -> int:
    return sum(1 for a, b in zip(word, word[1:]) if a == b)


def wdes(word: Sequence[int]) -> int:
    return sum(1 for a, b in zip(word, word[1:]) if a >= b)


def statistics(word: Sequence[int]) -> Stats:
    d = descent_set(word)
    p = plat(word)
    return Stats(des=len(d), plat=p, wdes=len(d) + p, descent_set=d)


def pattern_occurs(word: Sequence[int], pattern: Sequence[int]) -> bool:
    """Whether some subsequence of ``word`` is order-isomorphic to ``pattern``.

    Equal pattern letters must match equal entries, and distinct letters must
    match entries in the same strict order.
    """
    p = tuple(pattern)
    m = len(p)
    w = tuple(word)
    if m == 0:
        return True
    assign: dict[int, int] = {}

    def extend(idx: int, start: int) -> bool:
        if idx == m:
            return True
        letter = p[idx]
        for pos in range(start, len(w) - (m - idx) + 1):
            v = w[pos]
            if letter in assign:
                if assign[letter] == v and extend(idx + 1, pos + 1):
                    return True
                continue
            if all(
                (v < val) == (letter < other) and (v > val) == (letter > other)
                for other, val in assign.items()
            ):
                assign[letter] = v
                if extend(idx + 1, pos + 1):
                    return True
                del assign[letter]
        return False

    return extend(0, 0)


def copy_subsequences(word: Sequence[int], k: int | None = None) -> list[tuple[int, ...]]:
    """The ``k`` subsequences formed by the j-th copy of every value."""
    counts = Counter(word)
    if k is None:
        k = max(counts.values(), default=0)
    seen: Counter = Counter()
    layers: list[list[int]] = [[] for _ in range(k)]
    for v in word:
        layers[seen[v]].append(v)
        seen[v] += 1
    return [tuple(layer) for layer in layers]


def _require_k2(word: Sequence[int]) -> None:
    counts = Counter(word)
    if any(c != 2 for c in counts.values()):
        raise ValueError(f"{format_word(word)} is not a word with two copies of each value")


def mat(word: Sequence[int]) -> ArcDiagram:
    _require_k2(word)
    first: dict[int, int] = {}
    arcs = []
    for pos, v in enumerate(word, 1):
        if v in first:
            arcs.append((first[v], pos))
        else:
            first[v] = pos
    return ArcDiagram(len(word), tuple(arcs))


def is_nonnesting(word: Sequence[int]) -> bool:
    return not mat(word).has_nesting()


def s_of(word: Sequence[int]) -> Permutation:
    _require_k2(word)
    first, second = copy_subsequences(word, 2)
    if first != second:
        raise NotNonnestingError(f"{format_word(word)} is not nonnesting")
    return tuple.__new__(Permutation, first)


def dy(word: Sequence[int]) -> DyckPath:
    s_of(word)
    seen = set()
    steps = []
    for v in word:
        if v in seen:
            steps.append("N")
        else:
            seen.add(v)
            steps.append("E")
    return DyckPath._trusted("".join(steps))


def pi_from(sigma: Sequence[int], path: str) -> Multipermutation:
    """The nonnesting word whose copy order is ``sigma`` and whose path is ``path``."""
    if len(path) != 2 * len(sigma):
        raise ValueError(f"path of length {len(path)} does not fit a permutation of {len(sigma)}")
    e = n = 0
    out = []
    for step in path:
        if step == "E":
            out.append(sigma[e])
            e += 1
        else:
            out.append(sigma[n])
            n += 1
    return Multipermutation._trusted(out)


# ---------------------------------------------------------------------------
# Dyck path geometry
# ---------------------------------------------------------------------------


def peak_corners(path: str) -> list[tuple[int, int]]:
    """Lattice points at the corner of every ``EN``."""
    x = y = 0
    out = []
    for a, b in zip(path, path[1:]):
        if a == "E":
            x += 1
        else:
            y += 1
        if a == "E" and b == "N":
            out.append((x, y))
    return out


def valley_corners(path: str) -> list[tuple[int, int]]:
    """Lattice points at the corner of every ``NE``."""
    x = y = 0
    out = []
    for a, b in zip(path, path[1:]):
        if a == "E":
            x += 1
        else:
            y += 1
        if a == "N" and b == "E":
            out.append((x, y))
    return out


def path_from_peaks(corners: Iterable[tuple[int, int]], n: int) -> DyckPath:
    """Rebuild the path whose ``EN`` corners are exactly ``corners``."""
    pts = sorted(corners)
    steps = []
    x = y = 0
    for cx, cy in pts:
        steps.append("N" * (cy - y))
        steps.append("E" * (cx - x))
        x, y = cx, cy
    steps.append("N" * (n - y))
    return DyckPath("".join(steps))


def path_from_valleys(corners: Iterable[tuple[int, int]], n: int) -> DyckPath:
    """Rebuild the path whose ``NE`` corners are exactly ``corners``."""
    pts = sorted(corners)
    steps = []
    x = y = 0
    for cx, cy in pts:
        steps.append("E" * (cx - x))
        steps.append("N" * (cy - y))
        x, y = cx, cy
    steps.append("E" * (n - x))
    steps.append("N" * (n - y))
    return DyckPath("".join(steps))


def peak_stats(path: str) -> PeakStats:
    peaks = peak_corners(path)
    low = sum(1 for x, y in peaks if x == y + 1)
    return PeakStats(
        pea=len(peaks),
        lpea=low,
        hpea=len(peaks) - low,
        peak_cells=tuple(peaks),
        valley_cells=tuple(valley_corners(path)),
    )


def grid_of(sigma: Sequence[int]) -> DecoratedGrid:
    sigma = tuple(sigma)
    n = len(sigma)
    lines = descent_set(sigma)
    notches = tuple(
        ((col, row), UPPER_LEFT if sigma[row - 1] > sigma[col - 1] else LOWER_RIGHT)
        for col in range(1, n + 1)
        for row in range(1, col)
    )
    return DecoratedGrid(n, sigma, sigma, lines, lines, notches)


def des_sigma(path: str, sigma: Sequence[int], grid: DecoratedGrid | None = None) -> int:
    """Count double-steps across red lines plus corners around red notches."""
    if len(path) != 2 * len(sigma):
        raise ValueError("path and permutation sizes differ")
    if grid is None:
        grid = grid_of(sigma)
    x = y = 0
    count = 0
    for a, b in zip(path, path[1:]):
        if a == "E":
            x += 1
        else:
            y += 1
        # (x, y) is the vertex shared by the two steps
        if a == b == "E":
            count += x in grid.vertical_red_lines
        elif a == b == "N":
            count += y in grid.horizontal_red_lines
        elif a == "E":
            # bends around the lower-right corner of column x, row y+1
            count += grid.notch(x, y + 1) == LOWER_RIGHT
        else:
            # bends around the upper-left corner of column x+1, row y
            count += grid.notch(x + 1, y) == UPPER_LEFT
    return count


# ---------------------------------------------------------------------------
# Enumeration
# ---------------------------------------------------------------------------


def catalan(n: int) -> int:
    return math.comb(2 * n, n) // (n + 1)


def enumerate_dyck(n: int, cap: int | None = None) -> Iterator[DyckPath]:
    """All paths in lexicographic order with ``E < N``."""
    _check_cap(catalan(n), cap, f"D_{n}")
    steps: list[str] = []

    def rec(e: int, h: int) -> Iterator[DyckPath]:
        if len(steps) == 2 * n:
            yield DyckPath._trusted("".join(steps))
            return
        if e < n:
            steps.append("E")
            yield from rec(e + 1, h + 1)
            steps.pop()
        if h > 0:
            steps.append("N")
            yield from rec(e, h - 1)
            steps.pop()

    yield from rec(0, 0)


def enumerate_perms(n: int, cap: int | None = None) -> Iterator[Permutation]:
    _check_cap(math.factorial(n), cap, f"S_{n}")
    for p in itertools.permutations(range(1, n + 1)):
        yield tuple.__new__(Permutation, p)


def enumerate_nonnesting(n: int, cap: int | None = None) -> Iterator[Multipermutation]:
    """All of ``C_n``, ordered by ``sigma`` first and then by the path."""
    _check_cap(math.factorial(n) * catalan(n), cap, f"C_{n}")
    paths = list(enumerate_dyck(n, cap=math.inf))
    for sigma in enumerate_perms(n, cap=math.inf):
        for d in paths:
            yield pi_from(sigma, d)
