"""Semistandard tableaux, the cocharge statistic and Kostka-Foulkes
polynomials, as a combinatorial model of graded multiplicities in type A.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterator, Sequence

from .exact_algebra import MultiPoly
from .invariant_theory import FAIL, PASS

Partition = tuple


def partition(parts: Sequence[int]) -> Partition:
    p = tuple(int(x) for x in parts if x)
    if any(x < 0 for x in p) or list(p) != sorted(p, reverse=True):
        raise ValueError(f"{tuple(parts)} is not a partition")
    return p


def partitions(n: int, max_part: int | None = None) -> Iterator[Partition]:
    """Partitions of ``n`` in reverse lexicographic order: ``(n), (n-1, 1), ...``."""
    if max_part is None:
        max_part = n
    if n == 0:
        yield ()
        return
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions(n - first, first):
            yield (first,) + rest


def n_statistic(mu: Partition) -> int:
    """``n(mu) = sum (i - 1) mu_i``."""
    return sum(i * x for i, x in enumerate(mu))


def hook(n: int, i: int) -> Partition:
    return (n - i,) + (1,) * i


@dataclass(frozen=True)
class Tableau:
    shape: Partition
    rows: tuple[tuple[int, ...], ...]

    def reading_word(self) -> tuple[int, ...]:
        """Rows from bottom to top, each left to right."""
        return tuple(x for row in reversed(self.rows) for x in row)

    def content(self) -> tuple[int, ...]:
        m = max((x for r in self.rows for x in r), default=0)
        out = [0] * m
        for r in self.rows:
            for x in r:
                out[x - 1] += 1
        return tuple(out)

    def is_semistandard(self) -> bool:
        for r in self.rows:
            if any(a > b for a, b in zip(r, r[1:])):
                return False
        for upper, lower in zip(self.rows, self.rows[1:]):
            if any(a >= b for a, b in zip(upper, lower)):
                return False
        return True


def ssyt(shape: Sequence[int], content: Sequence[int]) -> list[Tableau]:
    """Semistandard tableaux of ``shape`` using ``i`` exactly ``content[i-1]`` times.

    Cells are filled in row-reading order by backtracking; values are tried
    in increasing order, so the output order is deterministic.
    """
    shape = partition(shape)
    content = partition(content)
    if sum(shape) != sum(content):
        raise ValueError(f"|shape| = {sum(shape)} but |content| = {sum(content)}")
    cells = [(r, c) for r, length in enumerate(shape) for c in range(length)]
    grid = [[0] * length for length in shape]
    left = list(content)
    k = len(content)
    out: list[Tableau] = []

    def rec(idx):
        if idx == len(cells):
            out.append(Tableau(shape, tuple(tuple(r) for r in grid)))
            return
        r, c = cells[idx]
        lo = 1
        if c > 0:
            lo = grid[r][c - 1]
        if r > 0:
            lo = max(lo, grid[r - 1][c] + 1)
        for v in range(lo, k + 1):
            if left[v - 1]:
                left[v - 1] -= 1
                grid[r][c] = v
                rec(idx + 1)
                left[v - 1] += 1
        grid[r][c] = 0

    rec(0)
    return out


def _standard_subwords(word: Sequence[int]) -> list[list[int]]:
    """Split a word of partition content into standard subwords.

    Each subword is extracted by scanning leftward (cyclically) from the
    right end for 1, then 2, ...; it is returned as the list of positions.
    """
    remaining = list(range(len(word)))
    out = []
    while remaining:
        top = max(word[p] for p in remaining)
        chosen = []
        pos_idx = len(remaining)  # start just past the right end
        for letter in range(1, top + 1):
            n = len(remaining)
            for step in range(1, n + 1):
                j = (pos_idx - step) % n
                if word[remaining[j]] == letter and remaining[j] not in chosen:
                    chosen.append(remaining[j])
                    pos_idx = j
                    break
            else:
                raise ValueError("word does not have partition content")
        out.append(sorted(chosen, key=lambda p: word[p]))
        chosen_set = set(chosen)
        remaining = [p for p in remaining if p not in chosen_set]
    return out


def charge_word(word: Sequence[int]) -> int:
    """Lascoux-Schutzenberger charge.

    In a standard subword, 1 has index 0 and ``r + 1`` has the index of
    ``r`` plus one when it stands to the right of ``r``, the same index
    otherwise; the charge is the sum of indices over all subwords.
    """
    total = 0
    for positions in _standard_subwords(word):
        idx = 0
        for a, b in zip(positions, positions[1:]):
            if b > a:
                idx += 1
            total += idx
    return total


def charge(t: Tableau) -> int:
    return charge_word(t.reading_word())


def cocharge(t: Tableau) -> int:
    return n_statistic(partition(t.content())) - charge(t)


def kostka_foulkes_bar(mu: Sequence[int], lam: Sequence[int]) -> MultiPoly:
    """``sum over SSYT(mu, lam) of q^cocharge``, a polynomial in q."""
    terms: dict[tuple[int], int] = {}
    for t in ssyt(mu, lam):
        d = cocharge(t)
        terms[(d,)] = terms.get((d,), 0) + 1
    return MultiPoly(1, terms)


def elementary_in_powers(i: int, ms: Sequence[int]) -> MultiPoly:
    """``e_i(q^{m_1}, ..., q^{m_s})``; zero when ``i > s``."""
    terms: dict[tuple[int], int] = {}
    for combo in combinations(ms, i):
        d = sum(combo)
        terms[(d,)] = terms.get((d,), 0) + 1
    return MultiPoly(1, terms)


@dataclass
class HookReport:
    lam: Partition
    s: int
    rows: list[tuple[int, MultiPoly, MultiPoly, bool]]
    verdict: str


def hook_identity_check(lam: Sequence[int]) -> HookReport:
    """``K~_{(n-i, 1^i), lam}(q) = e_i(q, q^2, ..., q^s)`` for ``0 <= i < n``."""
    lam = partition(lam)
    n = sum(lam)
    s = len(lam) - 1
    ms = list(range(1, s + 1))
    rows = []
    for i in range(n):
        lhs = kostka_foulkes_bar(hook(n, i), lam)
        rhs = elementary_in_powers(i, ms)
        rows.append((i, lhs, rhs, lhs == rhs))
    return HookReport(lam, s, rows, PASS if all(r[3] for r in rows) else FAIL)


@dataclass
class CrosscheckReport:
    n: int
    rows: list[tuple[int, MultiPoly, MultiPoly, bool]]
    verdict: str


def fake_degree_crosscheck(n: int) -> CrosscheckReport:
    """Tableau model at ``lam = (1^n)`` against the Molien series of S_n."""
    from .character_theory import coinvariant_graded_multiplicity, exterior_character
    from .root_data import weyl_group

    if not 2 <= n <= 8:
        raise ValueError("n must be between 2 and 8")
    W = weyl_group("A", n - 1)
    rows = []
    for i in range(n):
        kf = kostka_foulkes_bar(hook(n, i), (1,) * n)
        mol = coinvariant_graded_multiplicity(W, exterior_character(W, i))
        rows.append((i, kf, mol, kf == mol))
    return CrosscheckReport(n, rows, PASS if all(r[3] for r in rows) else FAIL)
