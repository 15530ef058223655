"""Exact linear algebra over the rationals.

Matrices are plain lists (or tuples) of rows.  Entries may be ``int`` or
``Fraction``; results are always exact.  Subspaces are stored by their
reduced row echelon basis, which makes equality of subspaces a plain
equality test.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

Vector = tuple
Matrix = Sequence[Sequence]


def _q(x) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


def rref(rows: Iterable[Sequence], ncols: int | None = None):
    """Return ``(reduced_rows, pivot_columns)``; zero rows are dropped."""
    m = [[_q(x) for x in row] for row in rows]
    if ncols is None:
        ncols = len(m[0]) if m else 0
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return [tuple(row) for row in m[:r]], pivots


def rank(M: Matrix) -> int:
    return len(rref(M)[1])


def mat_mul(A: Matrix, B: Matrix) -> list[list]:
    if A and len(A[0]) != len(B):
        raise ValueError(f"shape mismatch: {len(A[0])} columns vs {len(B)} rows")
    Bt = list(zip(*B)) if B else []
    return [[sum(a * b for a, b in zip(row, col)) for col in Bt] for row in A]


def mat_vec(A: Matrix, v: Sequence) -> tuple:
    return tuple(sum(a * x for a, x in zip(row, v)) for row in A)


def transpose(A: Matrix) -> list[list]:
    return [list(c) for c in zip(*A)]


def identity(n: int) -> list[list[int]]:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def mat_pow(A: Matrix, k: int) -> list[list]:
    out = identity(len(A))
    for _ in range(k):
        out = mat_mul(out, A)
    return out


def det(A: Matrix) -> Fraction:
    n = len(A)
    m = [[_q(x) for x in row] for row in A]
    sign = 1
    d = Fraction(1)
    for c in range(n):
        p = next((i for i in range(c, n) if m[i][c] != 0), None)
        if p is None:
            return Fraction(0)
        if p != c:
            m[c], m[p] = m[p], m[c]
            sign = -sign
        d *= m[c][c]
        for i in range(c + 1, n):
            if m[i][c] != 0:
                f = m[i][c] / m[c][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[c])]
    return sign * d


def solve(A: Matrix, b: Sequence) -> tuple | None:
    """One solution of ``A x = b`` or ``None`` if inconsistent."""
    ncols = len(A[0]) if A else 0
    aug = [list(row) + [bi] for row, bi in zip(A, b)]
    red, piv = rref(aug, ncols + 1)
    if ncols in piv:
        return None
    x = [Fraction(0)] * ncols
    for row, c in zip(red, piv):
        x[c] = row[ncols]
    return tuple(x)


@dataclass(frozen=True)
class Subspace:
    """A subspace of Q^ambient held by its canonical (RREF) basis."""

    ambient: int
    basis: tuple[tuple[Fraction, ...], ...]

    @classmethod
    def span(cls, vectors: Iterable[Sequence], ambient: int) -> "Subspace":
        vecs = [tuple(v) for v in vectors]
        for v in vecs:
            if len(v) != ambient:
                raise ValueError(f"vector of length {len(v)} in ambient dimension {ambient}")
        red, _ = rref(vecs, ambient)
        return cls(ambient, tuple(red))

    @classmethod
    def zero(cls, ambient: int) -> "Subspace":
        return cls(ambient, ())

    @classmethod
    def full(cls, ambient: int) -> "Subspace":
        return cls.span(identity(ambient), ambient)

    @property
    def dim(self) -> int:
        return len(self.basis)

    def _check(self, other: "Subspace") -> None:
        if self.ambient != other.ambient:
            raise ValueError(f"ambient dimensions differ: {self.ambient} vs {other.ambient}")

    def contains(self, v: Sequence) -> bool:
        if len(v) != self.ambient:
            raise ValueError("dimension mismatch")
        return rank(list(self.basis) + [tuple(v)]) == self.dim

    def issubspace(self, other: "Subspace") -> bool:
        self._check(other)
        return all(other.contains(v) for v in self.basis)

    def __add__(self, other: "Subspace") -> "Subspace":
        self._check(other)
        return Subspace.span(self.basis + other.basis, self.ambient)

    def __and__(self, other: "Subspace") -> "Subspace":
        return intersection(self, other)

    def __le__(self, other: "Subspace") -> bool:
        return self.issubspace(other)


def kernel(M: Matrix, ncols: int | None = None) -> Subspace:
    """Null space of ``M`` (as a map Q^ncols -> Q^rows)."""
    if ncols is None:
        if not M:
            raise ValueError("ncols required for an empty matrix")
        ncols = len(M[0])
    red, piv = rref(M, ncols)
    free = [c for c in range(ncols) if c not in piv]
    vecs = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for row, c in zip(red, piv):
            v[c] = -row[f]
        vecs.append(v)
    return Subspace.span(vecs, ncols)


def image(M: Matrix) -> Subspace:
    """Column space of ``M``."""
    return Subspace.span(transpose(M), len(M))


def annihilator(S: Subspace) -> Subspace:
    return kernel(S.basis, S.ambient) if S.basis else Subspace.full(S.ambient)


def intersection(S: Subspace, T: Subspace) -> Subspace:
    S._check(T)
    return annihilator(annihilator(S) + annihilator(T))


def perp(S: Subspace, form: Matrix | None = None) -> Subspace:
    """``{v : form(s, v) = 0 for all s in S}``; standard dot product by default."""
    n = S.ambient
    if form is None:
        return annihilator(S)
    if len(form) != n:
        raise ValueError("form has the wrong size")
    if det(form) == 0:
        raise ValueError("degenerate form")
    rows = [mat_vec(transpose(form), s) for s in S.basis]
    return kernel(rows, n) if rows else Subspace.full(n)


def apply(M: Matrix, S: Subspace) -> Subspace:
    """Image ``M(S)``."""
    return Subspace.span((mat_vec(M, v) for v in S.basis), len(M))


def preimage(M: Matrix, S: Subspace) -> Subspace:
    """``{v : M v in S}``."""
    n = len(M[0])
    ann = annihilator(S)
    if not ann.basis:
        return Subspace.full(n)
    return kernel(mat_mul(ann.basis, M), n)


def is_isotropic(S: Subspace, form: Matrix) -> bool:
    return all(
        sum(a * f * b for a, frow in zip(u, form) for f, b in zip(frow, v)) == 0
        for u in S.basis
        for v in S.basis
    )
