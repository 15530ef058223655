"""Jordan types, Levi data and explicit nilpotent matrices in the natural
representations of sl_n, so_{2l+1} and sp_{2l}, together with the isotropic
flags that put ``e`` in the nilradical of the parabolic attached to ``K``.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .exact_algebra import (
    Subspace, apply, identity, image, intersection, is_isotropic, kernel,
    mat_mul, mat_pow, perp, preimage, rank,
)
from .invariant_theory import FAIL, PASS, CoexponentVector, coexponents
from .type_a_springer import partition, partitions

NOT_SUPPORTED = "not_supported"

# Coexponents outside the closed forms, keyed by (family, rank, jordan type).
KNOWN_COEXPONENTS = {
    ("D", 4, (3, 3, 1, 1)): (1, 2),
}


@dataclass(frozen=True)
class LeviDecomposition:
    family: str
    rank: int
    jordan_type: tuple[int, ...]
    lam: tuple[int, ...]
    m: int | None
    J: tuple[int, ...]
    r: int
    s: int
    K: tuple[int, ...]
    coexponents: CoexponentVector | None
    supported: bool = True
    note: str = ""


def natural_dim(family: str, rank: int) -> int:
    return {"A": rank + 1, "B": 2 * rank + 1, "C": 2 * rank, "D": 2 * rank}[family]


def is_valid_jordan_type(family: str, jordan_type: Sequence[int], rank: int) -> bool:
    jt = partition(jordan_type)
    if sum(jt) != natural_dim(family, rank):
        return False
    counts = Counter(jt)
    if family in "BD":
        return all(c % 2 == 0 for v, c in counts.items() if v % 2 == 0)
    if family == "C":
        return all(c % 2 == 0 for v, c in counts.items() if v % 2 == 1)
    return True


def jordan_types(family: str, rank: int) -> list[tuple[int, ...]]:
    n = natural_dim(family, rank)
    return [p for p in partitions(n) if is_valid_jordan_type(family, p, rank)]


def _pairs(parts: Sequence[int]) -> tuple[int, ...] | None:
    """Halve a multiset in which every value has even multiplicity."""
    counts = Counter(parts)
    if any(c % 2 for c in counts.values()):
        return None
    out = []
    for v in sorted(counts, reverse=True):
        out += [v] * (counts[v] // 2)
    return tuple(out)


def _partial_sums(lam: Sequence[int]) -> list[int]:
    out, acc = [], 0
    for x in lam:
        acc += x
        out.append(acc)
    return out


def levi_decompositions(family: str, jordan_type: Sequence[int], rank: int) -> list[LeviDecomposition]:
    """All ``(lam, m)`` splittings making ``e`` regular in a Levi subalgebra.

    Type A has exactly one.  In types B/C the Jordan type is rearranged as
    ``lam_1, lam_1, ..., lam_s, lam_s`` plus one block of size ``2m+1`` (B)
    or ``2m`` (C, absent when ``m = 0``); ``lam`` is taken weakly
    decreasing.  An empty list means the orbit is not parabolic.
    """
    jt = partition(jordan_type)
    if not is_valid_jordan_type(family, jt, rank):
        raise ValueError(f"{jt} is not a Jordan type for {family}{rank}")
    l = rank
    all_idx = range(1, l + 1)
    if family == "A":
        cuts = set(_partial_sums(jt)[:-1])
        J = tuple(i for i in all_idx if i not in cuts)
        s = len(jt) - 1
        r = l - s
        return [LeviDecomposition("A", l, jt, jt, None, J, r, s, tuple(range(r + 1, l + 1)),
                                  coexponents("A", s))]
    out = []
    if family in "BC":
        blocks = sorted({v for v in jt if v % 2 == (1 if family == "B" else 0)})
        options = [(v, (v - 1) // 2 if family == "B" else v // 2) for v in blocks]
        if family == "C":
            options.insert(0, (0, 0))
        for size, m in options:
            rest = list(jt)
            if size:
                rest.remove(size)
            lam = _pairs(rest)
            if lam is None:
                continue
            cuts = set(_partial_sums(lam))
            J = tuple(i for i in all_idx if i not in cuts)
            s = len(lam)
            r = l - s
            out.append(LeviDecomposition(family, l, jt, lam, m, J, r, s,
                                         tuple(range(r + 1, l + 1)), coexponents(family, s)))
        return out
    # type D: pairs plus a regular block (2m-1, 1) of D_m, m >= 2, or pairs alone
    options = [(None, 0)] + [(v, (v + 1) // 2) for v in sorted(set(jt)) if v % 2 and v >= 3]
    for big, m in options:
        rest = list(jt)
        if big is not None:
            if 1 not in rest:
                continue
            rest.remove(big)
            rest.remove(1)
        lam = _pairs(rest)
        if lam is None:
            continue
        sums = _partial_sums(lam)
        if m == 0:
            cuts = set(sums[:-1]) | {l}
        else:
            cuts = set(sums)
        J = tuple(i for i in all_idx if i not in cuts)
        r = len(J)
        s = l - r
        known = KNOWN_COEXPONENTS.get(("D", l, jt))
        cv = CoexponentVector("D", known) if known else None
        out.append(LeviDecomposition(
            "D", l, jt, lam, m, J, r, s, tuple(range(r + 1, l + 1)), cv, supported=False,
            note="type D has no flag construction; condition (1) is tested against known coexponents only",
        ))
    return out


# -- realizations -------------------------------------------------------------

@dataclass(frozen=True)
class NilpotentRealization:
    family: str
    N: int
    e: tuple[tuple[int, ...], ...]
    form: tuple[tuple[int, ...], ...] | None
    U: Subspace
    U1: Subspace  # U'
    U2: Subspace  # U''
    U3: Subspace  # U''' (the e-stable m-dimensional subspace of U'')


def _coord_space(idx, N) -> Subspace:
    vecs = []
    for i in idx:
        v = [0] * N
        v[i] = 1
        vecs.append(v)
    return Subspace.span(vecs, N)


def bilinear_form(family: str, N: int):
    """Antidiagonal form; alternating with a sign split in type C."""
    F = [[0] * N for _ in range(N)]
    for i in range(N):
        F[i][N - 1 - i] = 1 if (family != "C" or i < N // 2) else -1
    return F


def _jordan_blocks(e, offset, sizes):
    for b in sizes:
        for j in range(1, b):
            e[offset + j - 1][offset + j] = 1
        offset += b
    return offset


def realize(decomp: LeviDecomposition) -> NilpotentRealization:
    fam = decomp.family
    N = natural_dim(fam, decomp.rank)
    e = [[0] * N for _ in range(N)]
    if fam == "A":
        _jordan_blocks(e, 0, decomp.jordan_type)
        full = Subspace.full(N)
        zero = Subspace.zero(N)
        return NilpotentRealization(fam, N, tuple(map(tuple, e)), None, full, zero, zero, zero)
    if fam not in "BC":
        raise ValueError(f"no realization for type {fam}")
    F = bilinear_form(fam, N)
    sigma = [F[i][N - 1 - i] for i in range(N)]

    def put(a, j, v):
        # e[a][j] = v together with the entry forced by e^T F + F e = 0
        e[a][j] = v
        e[N - 1 - j][N - 1 - a] = -sigma[a] * sigma[j] * v

    k = decomp.rank - decomp.m
    off = 0
    for b in decomp.lam:
        for j in range(1, b):
            put(off + j - 1, off + j, 1)
        off += b
    mid = N - 2 * k
    for i in range(k, k + mid // 2):
        if i + 1 < k + mid:
            put(i, i + 1, 1)
    check = mat_mul(transpose_(e), F)
    FE = mat_mul(F, e)
    if any(check[i][j] + FE[i][j] for i in range(N) for j in range(N)):
        raise ArithmeticError("realized e is not in the Lie algebra of the form")
    U = _coord_space(range(k), N)
    U1 = _coord_space(range(N - k, N), N)
    U2 = _coord_space(range(k, N - k), N)
    m = decomp.m
    U3 = intersection(U2, kernel(mat_pow(e, m), N)) if m else Subspace.zero(N)
    if U3.dim != m:
        raise ArithmeticError(f"U''' has dimension {U3.dim}, expected {m}")
    return NilpotentRealization(fam, N, tuple(map(tuple, e)), tuple(map(tuple, F)), U, U1, U2, U3)


def transpose_(A):
    return [list(c) for c in zip(*A)]


def jordan_type_of(e: Sequence[Sequence]) -> tuple[int, ...]:
    """Jordan type from the ranks of powers: #blocks of size >= k is
    ``rank(e^{k-1}) - rank(e^k)``."""
    N = len(e)
    ranks = [N]
    P = identity(N)
    while ranks[-1] > 0:
        P = mat_mul(P, e)
        rk = rank(P)
        if rk == ranks[-1]:
            raise ValueError("matrix is not nilpotent")
        ranks.append(rk)
    at_least = [ranks[k - 1] - ranks[k] for k in range(1, len(ranks))]
    parts = []
    for k, c in enumerate(at_least, start=1):
        nxt = at_least[k] if k < len(at_least) else 0
        parts += [k] * (c - nxt)
    return tuple(sorted(parts, reverse=True))


# -- condition (2) ------------------------------------------------------------

@dataclass
class FlagCertificate:
    flag: list[Subspace]
    checks: list[tuple[str, bool]] = field(default_factory=list)
    verdict: str = FAIL
    failed: str = ""

    @property
    def dims(self) -> list[int]:
        return [u.dim for u in self.flag]


def stable_complete_flag(e, S: Subspace) -> list[Subspace]:
    """Complete e-stable flag in an e-stable ``S``, refining ``S & ker e^h``.

    Vectors are added layer by layer (kernel first), taking the canonical
    basis vectors of each layer in order; every step then satisfies
    ``e U_i <= U_{i-1}``.
    """
    N = S.ambient
    flag = [Subspace.zero(N)]
    h = 1
    while flag[-1].dim < S.dim:
        layer = intersection(S, kernel(mat_pow(e, h), N))
        for v in layer.basis:
            if not flag[-1].contains(v):
                flag.append(flag[-1] + Subspace.span([v], N))
        h += 1
        if h > N + 1:
            raise ArithmeticError("e is not nilpotent on S")
    return flag


def condition2_certificate(real: NilpotentRealization, decomp: LeviDecomposition) -> FlagCertificate:
    fam = decomp.family
    e = [list(r) for r in real.e]
    N = real.N
    r = decomp.r
    if fam == "A":
        top = image(e)
    else:
        top = apply(e, real.U) + real.U3
    flag = stable_complete_flag(e, top)
    cert = FlagCertificate(flag)
    checks = cert.checks
    checks.append((f"dim U_r = r = {r}", top.dim == r))
    for i, u in enumerate(flag[1:], start=1):
        checks.append((f"dim U_{i} = {i}", u.dim == i))
        checks.append((f"e U_{i} <= U_{i - 1}", apply(e, u).issubspace(flag[i - 1])))
    if fam == "A":
        checks.append(("e(C^N) <= U_r", image(e).issubspace(top)))
    else:
        F = [list(x) for x in real.form]
        checks.append(("U_r isotropic", is_isotropic(top, F)))
        top_perp = perp(top, F)
        ker_u1 = intersection(real.U1, kernel(e, N))
        if fam == "B":
            third = intersection(real.U2, preimage(e, real.U3))
        else:
            third = real.U3
        checks.append(("U_r^perp = U + ker(e|U') + third summand",
                       top_perp == real.U + ker_u1 + third))
        image_perp = apply(e, top_perp)
        if fam == "B":
            checks.append(("e(U_r^perp) = U_r", image_perp == top))
        else:
            checks.append(("e(U_r^perp) <= U_r", image_perp.issubspace(top)))
    bad = next((name for name, ok in checks if not ok), "")
    cert.failed = bad
    cert.verdict = FAIL if bad else PASS
    return cert


def parabolic_catalogue(family: str, rank: int) -> list[LeviDecomposition]:
    out = []
    for jt in jordan_types(family, rank):
        out.extend(levi_decompositions(family, jt, rank))
    return out
