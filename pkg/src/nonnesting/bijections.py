"""Bijections on Dyck paths and on nonnesting words.

Path-level maps act on :class:`~nonnesting.core.DyckPath`; word-level maps
act on nonnesting words by reading off ``(sigma, path)``, transforming the
path, and relabelling with the target permutation.
"""

from __future__ import annotations

from typing import Iterator, Sequence

from .core import (
    DyckPath,
    Multipermutation,
    Permutation,
    descent_set,
    dy,
    path_from_peaks,
    path_from_valleys,
    peak_corners,
    pi_from,
    s_of,
    valley_corners,
)

Cell = tuple[int, int]


# ---------------------------------------------------------------------------
# rho and Lalanne-Kreweras
# ---------------------------------------------------------------------------


def _high_peak_corners(path: str) -> list[tuple[int, int]]:
    return [(x, y) for x, y in peak_corners(path) if x > y + 1]


def rho(path: str) -> DyckPath:
    """Path whose valley cells are the high-peak cells of ``path``.

    A high peak with corner ``(x, y)`` occupies the cell with lower-left
    corner ``(x-1, y)``; a valley occupying that cell has corner ``(x-1, y+1)``.
    """
    n = len(path) // 2
    return path_from_valleys(((x - 1, y + 1) for x, y in _high_peak_corners(path)), n)


def path_from_high_peaks(corners, n: int) -> DyckPath:
    """The unique path whose high peaks sit exactly at ``corners``.

    Low peaks fill every stretch where the path is free to return to the
    diagonal.
    """
    steps = []
    x = y = 0  # current point, always on a peak corner or the diagonal
    for cx, cy in sorted(corners):
        if x > y:  # just left a high peak
            if x >= cy:
                steps.append("N" * (cy - y))
                y = cy
            else:
                steps.append("N" * (x - y))
                y = x
        while y < cy:
            steps.append("EN")
            x += 1
            y += 1
        steps.append("E" * (cx - x))
        x = cx
    steps.append("N" * (x - y))
    y = x
    steps.append("EN" * (n - x))
    return DyckPath("".join(steps))


def rho_inv(path: str) -> DyckPath:
    n = len(path) // 2
    return path_from_high_peaks(((a + 1, b - 1) for a, b in valley_corners(path)), n)


def lk(path: str) -> DyckPath:
    """Lalanne-Kreweras involution via complementing peak coordinates."""
    n = len(path) // 2
    if n == 0:
        return DyckPath._trusted("")
    peaks = peak_corners(path)
    xs = {x for x, _ in peaks}
    ys = {y for _, y in peaks}
    x_comp = sorted(set(range(n + 1)) - xs)
    y_comp = sorted(set(range(n + 1)) - ys)
    return path_from_peaks(zip(y_comp, x_comp), n)


def lk_rho(path: str) -> DyckPath:
    return lk(rho(path))


# ---------------------------------------------------------------------------
# Cell flips and the sigma normalisation
# ---------------------------------------------------------------------------


def flip_cell(path: str, cell: Cell) -> DyckPath:
    """Switch ``EN``/``NE`` around ``cell = (column, row)`` if the path bends there."""
    col, row = cell
    e_seen = n_seen = 0
    pos_e = pos_n = -1
    for pos, step in enumerate(path):
        if step == "E":
            e_seen += 1
            if e_seen == col:
                pos_e = pos
        else:
            n_seen += 1
            if n_seen == row:
                pos_n = pos
    if abs(pos_e - pos_n) != 1:
        return DyckPath._trusted(str(path))
    lo = min(pos_e, pos_n)
    return DyckPath._trusted(path[:lo] + path[lo + 1] + path[lo] + path[lo + 2 :])


def flip_cell_for(sigma: Sequence[int], k: int) -> Cell:
    """Cell whose row and column labels are ``{k, k+1}``."""
    p = sigma.index(k) + 1
    q = sigma.index(k + 1) + 1
    if abs(p - q) == 1:
        raise ValueError(f"{k} and {k + 1} are adjacent in {tuple(sigma)}")
    return (max(p, q), min(p, q))


def f_k_path(path: str, sigma: Sequence[int], k: int) -> DyckPath:
    return flip_cell(path, flip_cell_for(sigma, k))


def f_k_flip(word: Sequence[int], k: int) -> Multipermutation:
    """Map ``C_n^sigma -> C_n^{s_k sigma}`` preserving ``(des, plat)``."""
    sigma = s_of(word)
    new_path = f_k_path(dy(word), sigma, k)
    return pi_from(sigma.swap_values(k), new_path)


def lambda_of(S, n: int) -> Permutation:
    """The reverse-layered permutation of ``1..n`` with descent set ``S``."""
    cuts = sorted(S)
    if cuts and not (1 <= cuts[0] and cuts[-1] <= n - 1):
        raise ValueError(f"{set(S)} is not a subset of [1, {n - 1}]")
    bounds = [0] + cuts + [n]
    out: list[int] = []
    for a, b in zip(bounds, bounds[1:]):
        out.extend(range(n - b + 1, n - a + 1))
    return tuple.__new__(Permutation, out)


def valid_sequence(sigma: Sequence[int]) -> list[int]:
    """Canonical valid sequence ``[k1, k2, ...]``: apply ``s_k1`` first.

    At each step the largest entry out of place relative to the target
    layered permutation decides the transposition.
    """
    current = Permutation(sigma)
    target = lambda_of(descent_set(current), len(current))
    where_target = {v: i for i, v in enumerate(target)}
    seq = []
    while current != target:
        ell = max(v for i, v in enumerate(current) if target[i] != v)
        k = current[where_target[ell]]
        seq.append(k)
        current = current.swap_values(k)
    return seq


def all_valid_sequences(sigma: Sequence[int]) -> Iterator[list[int]]:
    """Every valid sequence, by exhaustive search over admissible transpositions."""
    start = Permutation(sigma)
    target = lambda_of(descent_set(start), len(start))
    seq: list[int] = []

    def rec(current: Permutation) -> Iterator[list[int]]:
        if current == target:
            yield list(seq)
            return
        pos = current.inverse()
        for k in range(1, len(current)):
            # k must precede k+1 and not be adjacent to it
            if pos[k] - pos[k - 1] >= 2:
                seq.append(k)
                yield from rec(current.swap_values(k))
                seq.pop()

    yield from rec(start)


def flip_cells(sigma: Sequence[int], sequence: Sequence[int] | None = None) -> list[Cell]:
    """Cells flipped, in order, when following a valid sequence for ``sigma``."""
    current = Permutation(sigma)
    if sequence is None:
        sequence = valid_sequence(current)
    cells = []
    for k in sequence:
        cells.append(flip_cell_for(current, k))
        current = current.swap_values(k)
    return cells


def f_sigma_path(path: str, sigma: Sequence[int], sequence: Sequence[int] | None = None) -> DyckPath:
    for cell in flip_cells(sigma, sequence):
        path = flip_cell(path, cell)
    return DyckPath._trusted(str(path))


def f_sigma_path_inv(path: str, sigma: Sequence[int]) -> DyckPath:
    for cell in reversed(flip_cells(sigma)):
        path = flip_cell(path, cell)
    return DyckPath._trusted(str(path))


def f_sigma(word: Sequence[int], sequence: Sequence[int] | None = None) -> Multipermutation:
    """Map ``C_n^sigma -> C_n^lambda`` with ``lambda`` reverse-layered."""
    sigma = s_of(word)
    target = lambda_of(sigma.descent_set, sigma.n)
    return pi_from(target, f_sigma_path(dy(word), sigma, sequence))


# ---------------------------------------------------------------------------
# Removing descents
# ---------------------------------------------------------------------------


def g_hat(path: str, m: int, ell: int) -> DyckPath:
    """Move a run of ``E`` steps across the segment inside ``[m, n] x [0, ell]``.

    The segment runs strictly after the m-th ``E`` and strictly before the
    (ell+1)-st ``N``.
    """
    e_seen = n_seen = 0
    start = stop = None
    for pos, step in enumerate(path):
        if step == "E":
            e_seen += 1
            if e_seen == m:
                start = pos + 1
        else:
            n_seen += 1
            if n_seen == ell + 1:
                stop = pos
                break
    if start is None or stop is None or stop <= start:
        return DyckPath._trusted(str(path))
    seg = path[start:stop]
    if seg[0] == seg[-1]:
        return DyckPath._trusted(str(path))
    if seg[0] == "E":
        run = len(seg) - len(seg.lstrip("E"))
        new_seg = seg[run:] + seg[:run]
    else:
        run = len(seg) - len(seg.rstrip("E"))
        new_seg = seg[-run:] + seg[:-run]
    return DyckPath._trusted(path[:start] + new_seg + path[stop:])


def _removal_steps(S) -> list[tuple[int, int]]:
    """``(m, ell)`` pairs in the order descents are removed (largest first)."""
    cuts = sorted(S)
    return [(cuts[i], cuts[i - 1] if i else 0) for i in range(len(cuts) - 1, -1, -1)]


def g_step(word: Sequence[int]) -> Multipermutation:
    """Map ``C_n^S -> C_n^{S minus max S}``, lowering ``des`` by one."""
    sigma = s_of(word)
    S = sigma.descent_set
    if not S:
        raise ValueError("descent set is empty")
    if sigma != lambda_of(S, sigma.n):
        raise ValueError(f"{sigma} is not reverse-layered")
    m, ell = _removal_steps(S)[0]
    path = g_hat(dy(word), m, ell)
    return pi_from(lambda_of(S - {m}, sigma.n), path)


def g_S_path(path: str, S) -> DyckPath:
    for m, ell in _removal_steps(S):
        path = g_hat(path, m, ell)
    return DyckPath._trusted(str(path))


def g_S_path_inv(path: str, S) -> DyckPath:
    # each g_hat is an involution, so the inverse replays the steps backwards
    for m, ell in reversed(_removal_steps(S)):
        path = g_hat(path, m, ell)
    return DyckPath._trusted(str(path))


def g_S(word: Sequence[int]) -> Multipermutation:
    sigma = s_of(word)
    S = sigma.descent_set
    if sigma != lambda_of(S, sigma.n):
        raise ValueError(f"{sigma} is not reverse-layered")
    return pi_from(Permutation.identity(sigma.n), g_S_path(dy(word), S))


# ---------------------------------------------------------------------------
# phi_sigma and the symmetry involutions
# ---------------------------------------------------------------------------


def phi_sigma_path(path: str, sigma: Sequence[int]) -> DyckPath:
    return g_S_path(f_sigma_path(path, sigma), descent_set(sigma))


def phi_sigma_path_inv(path: str, sigma: Sequence[int]) -> DyckPath:
    return f_sigma_path_inv(g_S_path_inv(path, descent_set(sigma)), sigma)


def phi_sigma(word: Sequence[int]) -> Multipermutation:
    """Map ``C_n^sigma -> C_n^id`` with ``des`` lowered by ``des(sigma)``."""
    sigma = s_of(word)
    return pi_from(Permutation.identity(sigma.n), phi_sigma_path(dy(word), sigma))


def phi_sigma_inv(word: Sequence[int], sigma: Sequence[int]) -> Multipermutation:
    """Inverse of :func:`phi_sigma` landing in the class of ``sigma``."""
    if s_of(word) != tuple(range(1, len(sigma) + 1)):
        raise ValueError("input must lie in the identity class")
    return pi_from(sigma, phi_sigma_path_inv(dy(word), sigma))


def lkc(word: Sequence[int]) -> Multipermutation:
    sigma = s_of(word)
    if sigma != tuple(range(1, sigma.n + 1)):
        raise ValueError("lkc is defined on the identity class only")
    return pi_from(sigma, lk(dy(word)))


def Phi_sigma(word: Sequence[int]) -> Multipermutation:
    """Involution of ``C_n^sigma`` reflecting ``wdes - des(sigma)`` in ``n+1``."""
    sigma = s_of(word)
    return phi_sigma_inv(lkc(phi_sigma(word)), sigma)


def Psi(word: Sequence[int]) -> Multipermutation:
    """Involution of ``C_n`` with ``wdes -> 2n - wdes``; swaps ``sigma`` and its reversal."""
    sigma = s_of(word)
    return phi_sigma_inv(lkc(phi_sigma(word)), sigma.reverse())


def Phi_bar_sigma(word: Sequence[int]) -> Multipermutation:
    """Involution of ``C_n^sigma`` reflecting ``des - des(sigma)`` in ``n-1``."""
    return Phi_sigma(Multipermutation._trusted(word[::-1])).reverse()


def Psi_bar(word: Sequence[int]) -> Multipermutation:
    """Involution of ``C_n`` with ``des -> 2n - 2 - des``."""
    return Psi(Multipermutation._trusted(word[::-1])).reverse()


def reverse_word(word: Sequence[int]) -> Multipermutation:
    return Multipermutation._trusted(tuple(word)[::-1])
