"""Sparse multivariate polynomials with exact rational coefficients.

Monomials are packed into a single Python int: the total degree sits in
the highest 16-bit field and the exponents of ``x_1, ..., x_n`` follow in
decreasing significance.  Integer comparison of packed keys is therefore
the graded lexicographic order (``x_1 > x_2 > ... > x_n``), and multiplying
monomials is integer addition.  Fields hold values below ``2**15`` so that
divisibility can be tested with a borrow check.

Coefficients are ``int`` or ``Fraction``; both are exact rationals and
compare/hash consistently.
"""

from __future__ import annotations

import heapq
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Mapping, Sequence

_W = 16
_MASK = (1 << _W) - 1
_MAXEXP = 1 << (_W - 1)


def _normal(c):
    if isinstance(c, Fraction) and c.denominator == 1:
        return c.numerator
    return c


def _div(a, b):
    if isinstance(a, int) and isinstance(b, int):
        if a % b == 0:
            return a // b
        return Fraction(a, b)
    return _normal(Fraction(a) / b)


class MultiPoly:
    """Polynomial in ``nvars`` variables.  Treat instances as immutable."""

    __slots__ = ("nvars", "_t", "_hash")

    def __init__(self, nvars: int, terms: Mapping[Sequence[int], object] | None = None):
        self.nvars = nvars
        self._t: dict[int, object] = {}
        self._hash = None
        if terms:
            for exps, c in terms.items():
                if len(exps) != nvars:
                    raise ValueError(f"exponent vector {exps} has wrong length for {nvars} variables")
                if c != 0:
                    k = self._pack(exps)
                    c = _normal(c + self._t.get(k, 0))
                    if c:
                        self._t[k] = c
                    else:
                        self._t.pop(k, None)

    # -- packing -----------------------------------------------------------
    def _pack(self, exps: Sequence[int]) -> int:
        deg = 0
        key = 0
        for e in exps:
            if e < 0 or e >= _MAXEXP:
                raise OverflowError(f"exponent {e} out of range")
            deg += e
            key = (key << _W) | e
        if deg >= _MAXEXP:
            raise OverflowError(f"degree {deg} out of range")
        return (deg << (_W * self.nvars)) | key

    def _unpack(self, key: int) -> tuple[int, ...]:
        out = [0] * self.nvars
        for i in range(self.nvars - 1, -1, -1):
            out[i] = key & _MASK
            key >>= _W
        return tuple(out)

    def _high_bits(self) -> int:
        h = 0
        for f in range(self.nvars + 1):
            h |= 1 << (_W * f + _W - 1)
        return h

    @classmethod
    def _raw(cls, nvars: int, t: dict) -> "MultiPoly":
        p = cls.__new__(cls)
        p.nvars = nvars
        p._t = t
        p._hash = None
        return p

    # -- constructors ------------------------------------------------------
    @classmethod
    def zero(cls, nvars: int) -> "MultiPoly":
        return cls._raw(nvars, {})

    @classmethod
    def const(cls, nvars: int, c) -> "MultiPoly":
        return cls(nvars, {(0,) * nvars: c})

    @classmethod
    def var(cls, nvars: int, i: int) -> "MultiPoly":
        """The coordinate function ``x_{i+1}`` (``i`` is 0-based)."""
        e = [0] * nvars
        e[i] = 1
        return cls(nvars, {tuple(e): 1})

    @classmethod
    def linear_form(cls, coeffs: Sequence) -> "MultiPoly":
        n = len(coeffs)
        terms = {}
        for i, c in enumerate(coeffs):
            e = [0] * n
            e[i] = 1
            terms[tuple(e)] = c
        return cls(n, terms)

    # -- inspection --------------------------------------------------------
    @property
    def terms(self) -> dict[tuple[int, ...], object]:
        return {self._unpack(k): c for k, c in self._t.items()}

    def sorted_terms(self, descending: bool = True) -> list[tuple[tuple[int, ...], object]]:
        """Terms in graded lexicographic order."""
        return [(self._unpack(k), self._t[k]) for k in sorted(self._t, reverse=descending)]

    def __len__(self) -> int:
        return len(self._t)

    def is_zero(self) -> bool:
        return not self._t

    def __bool__(self) -> bool:
        return bool(self._t)

    def is_constant(self) -> bool:
        return not self._t or (len(self._t) == 1 and 0 in self._t)

    def constant_term(self):
        return self._t.get(0, 0)

    def degree(self) -> int:
        """Total degree; ``-1`` for the zero polynomial."""
        if not self._t:
            return -1
        return max(self._t) >> (_W * self.nvars)

    def degrees(self) -> set[int]:
        s = _W * self.nvars
        return {k >> s for k in self._t}

    def is_homogeneous(self, d: int | None = None) -> bool:
        ds = self.degrees()
        if not ds:
            return True
        return len(ds) == 1 and (d is None or d in ds)

    def leading_term(self) -> tuple[tuple[int, ...], object]:
        k = max(self._t)
        return self._unpack(k), self._t[k]

    def variables_used(self) -> set[int]:
        used = set()
        for e in self.terms:
            used.update(i for i, x in enumerate(e) if x)
        return used

    # -- arithmetic --------------------------------------------------------
    def _coerce(self, other) -> "MultiPoly":
        if isinstance(other, MultiPoly):
            if other.nvars != self.nvars:
                raise ValueError(f"variable count mismatch: {self.nvars} vs {other.nvars}")
            return other
        if isinstance(other, (int, Fraction)):
            return MultiPoly.const(self.nvars, other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        t = dict(self._t)
        for k, c in other._t.items():
            v = t.get(k, 0) + c
            if v:
                t[k] = _normal(v)
            else:
                del t[k]
        return MultiPoly._raw(self.nvars, t)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly._raw(self.nvars, {k: -c for k, c in self._t.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c) -> "MultiPoly":
        if c == 0:
            return MultiPoly.zero(self.nvars)
        c = _normal(c)
        return MultiPoly._raw(self.nvars, {k: _normal(v * c) for k, v in self._t.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self._t, other._t
        if len(a) < len(b):
            a, b = b, a
        out: dict[int, object] = {}
        get = out.get
        for kb, cb in b.items():
            for ka, ca in a.items():
                k = ka + kb
                out[k] = get(k, 0) + ca * cb
        res = {k: _normal(c) for k, c in out.items() if c}
        if res and (max(res) >> (_W * self.nvars)) >= _MAXEXP:
            raise OverflowError("degree out of range")
        return MultiPoly._raw(self.nvars, res)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        out = MultiPoly.const(self.nvars, 1)
        base = self
        while k:
            if k & 1:
                out = out * base
            k >>= 1
            if k:
                base = base * base
        return out

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.is_constant() and self.constant_term() == other
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self.nvars == other.nvars and self._t == other._t

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.nvars, frozenset(self._t.items())))
        return self._hash

    # -- calculus and substitution ----------------------------------------
    def partial(self, i: int) -> "MultiPoly":
        """``d/dx_{i+1}``."""
        unit = (1 << (_W * (self.nvars - 1 - i))) + (1 << (_W * self.nvars))
        shift = _W * (self.nvars - 1 - i)
        out = {}
        for k, c in self._t.items():
            e = (k >> shift) & _MASK
            if e:
                out[k - unit] = _normal(c * e)
        return MultiPoly._raw(self.nvars, out)

    def directional_derivative(self, direction: Sequence) -> "MultiPoly":
        if len(direction) != self.nvars:
            raise ValueError("direction has wrong length")
        out = MultiPoly.zero(self.nvars)
        for i, d in enumerate(direction):
            if d:
                out = out + self.partial(i).scale(d)
        return out

    def evaluate(self, point: Sequence):
        if len(point) != self.nvars:
            raise ValueError("point has wrong length")
        total = 0
        for e, c in self.terms.items():
            v = c
            for x, k in zip(point, e):
                if k:
                    v = v * x**k
            total += v
        return _normal(total) if isinstance(total, Fraction) else total

    def linear_substitute(self, M: Sequence[Sequence]) -> "MultiPoly":
        """``p(M y)``: row ``i`` of ``M`` is the image of ``x_{i+1}`` in the new variables.

        ``M`` is ``nvars x k``; its columns are the images of the new basis
        vectors in the old coordinates.
        """
        if len(M) != self.nvars:
            raise ValueError(f"substitution has {len(M)} rows, expected {self.nvars}")
        k = len(M[0]) if M else 0
        forms = []
        for row in M:
            if len(row) != k:
                raise ValueError("ragged substitution matrix")
            forms.append(MultiPoly.linear_form(row) if k else MultiPoly.zero(0))
        powers: dict[tuple[int, int], MultiPoly] = {}

        def power(i, e):
            key = (i, e)
            if key not in powers:
                powers[key] = forms[i] if e == 1 else power(i, e - 1) * forms[i]
            return powers[key]

        acc: dict[int, object] = {}
        for e, c in self.terms.items():
            term = MultiPoly.const(k, c)
            for i, x in enumerate(e):
                if x:
                    term = term * power(i, x)
            for kk, cc in term._t.items():
                acc[kk] = acc.get(kk, 0) + cc
        return MultiPoly._raw(k, {kk: _normal(c) for kk, c in acc.items() if c})

    def signed_permute(self, images: Sequence[int]) -> "MultiPoly":
        """Substitute ``x_{i+1} -> sign * x_{|images[i]|}`` (1-based signed indices)."""
        out = {}
        for e, c in self.terms.items():
            ne = [0] * self.nvars
            neg = 0
            for i, x in enumerate(e):
                if x:
                    j = images[i]
                    if j < 0:
                        neg ^= x & 1
                        j = -j
                    ne[j - 1] = x
            out[self._pack(ne)] = -c if neg else c
        return MultiPoly._raw(self.nvars, out)

    # -- display -----------------------------------------------------------
    def to_string(self, names: Sequence[str] | None = None, descending: bool = True) -> str:
        if not self._t:
            return "0"
        if names is None:
            names = [f"x{i + 1}" for i in range(self.nvars)]
        parts = []
        for e, c in self.sorted_terms(descending):
            mono = "*".join(
                (names[i] if x == 1 else f"{names[i]}^{x}") for i, x in enumerate(e) if x
            )
            if not mono:
                s = str(c)
            elif c == 1:
                s = mono
            elif c == -1:
                s = "-" + mono
            else:
                s = f"{c}*{mono}"
            parts.append(s)
        out = parts[0]
        for s in parts[1:]:
            out += " - " + s[1:] if s.startswith("-") else " + " + s
        return out

    def __str__(self):
        return self.to_string()

    def __repr__(self):
        return f"MultiPoly({self.nvars}, {self.to_string()!r})"


def exact_divide(p: MultiPoly, d: MultiPoly) -> MultiPoly | None:
    """Quotient ``q`` with ``p == q * d``, or ``None`` if ``d`` does not divide ``p``.

    Reduction by graded lexicographic leading terms: if ``d | p`` then every
    intermediate leading term is divisible by ``lt(d)``, so the first failure
    proves non-divisibility.
    """
    if p.nvars != d.nvars:
        raise ValueError(f"variable count mismatch: {p.nvars} vs {d.nvars}")
    if d.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    high = p._high_bits()
    ltk = max(d._t)
    ltc = d._t[ltk]
    rest = [(k - ltk, c) for k, c in d._t.items() if k != ltk]
    rem = dict(p._t)
    heap = [-k for k in rem]
    heapq.heapify(heap)
    quot: dict[int, object] = {}
    while heap:
        k = -heapq.heappop(heap)
        c = rem.pop(k, None)
        if c is None:
            continue
        if ((k | high) - ltk) & high != high:
            return None
        qc = _div(c, ltc)
        qk = k - ltk
        quot[qk] = qc
        for off, dc in rest:
            nk = qk + ltk + off
            old = rem.get(nk)
            v = (old or 0) - qc * dc
            if v:
                rem[nk] = _normal(v)
                if old is None:
                    heapq.heappush(heap, -nk)
            elif old is not None:
                del rem[nk]
    return MultiPoly._raw(p.nvars, quot)


def _det_cofactor(M: list[list[MultiPoly]], nvars: int) -> MultiPoly:
    """Laplace expansion along rows with memoized minors (division free)."""
    n = len(M)
    # minors of the first r rows on each r-subset of columns
    prev = {(): MultiPoly.const(nvars, 1)}
    for r in range(n):
        cur = {}
        for cols in combinations(range(n), r + 1):
            acc = MultiPoly.zero(nvars)
            for pos, c in enumerate(cols):
                entry = M[r][c]
                if entry.is_zero():
                    continue
                sub = prev[cols[:pos] + cols[pos + 1:]]
                if sub.is_zero():
                    continue
                term = entry * sub
                acc = acc - term if (r + pos) % 2 else acc + term
            cur[cols] = acc
        prev = cur
    return prev[tuple(range(n))]


def _det_bareiss(M: list[list[MultiPoly]], nvars: int) -> MultiPoly:
    n = len(M)
    m = [list(row) for row in M]
    sign = 1
    prev = MultiPoly.const(nvars, 1)
    for k in range(n - 1):
        if m[k][k].is_zero():
            p = next((i for i in range(k + 1, n) if not m[i][k].is_zero()), None)
            if p is None:
                return MultiPoly.zero(nvars)
            m[k], m[p] = m[p], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = m[k][k] * m[i][j] - m[i][k] * m[k][j]
                q = exact_divide(num, prev)
                if q is None:
                    raise ArithmeticError("Bareiss step was not exact")
                m[i][j] = q
        prev = m[k][k]
    d = m[n - 1][n - 1]
    return -d if sign < 0 else d


def poly_matrix_det(M: Sequence[Sequence[MultiPoly]], nvars: int | None = None,
                    method: str = "auto") -> MultiPoly:
    """Determinant of a square matrix of polynomials; the 0x0 determinant is 1.

    ``method`` is ``"cofactor"``, ``"bareiss"`` or ``"auto"``.
    """
    n = len(M)
    if any(len(row) != n for row in M):
        raise ValueError("matrix is not square")
    if nvars is None:
        if n == 0:
            raise ValueError("nvars required for the empty matrix")
        nvars = M[0][0].nvars
    if n == 0:
        return MultiPoly.const(nvars, 1)
    rows = [[e if isinstance(e, MultiPoly) else MultiPoly.const(nvars, e) for e in row] for row in M]
    if method == "auto":
        method = "cofactor" if n < 4 else "bareiss"
    if method == "cofactor":
        return _det_cofactor(rows, nvars)
    if method == "bareiss":
        return _det_bareiss(rows, nvars)
    raise ValueError(f"unknown method {method!r}")


def elementary_symmetric(nvars: int, k: int, variables: Sequence[int] | None = None,
                         power: int = 1) -> MultiPoly:
    """``e_k`` in ``x_i**power`` over ``variables`` (0-based, default all)."""
    if variables is None:
        variables = range(nvars)
    terms = {}
    for combo in combinations(variables, k):
        e = [0] * nvars
        for i in combo:
            e[i] = power
        terms[tuple(e)] = 1
    return MultiPoly(nvars, terms)


def monomials(nvars: int, degree: int) -> list[tuple[int, ...]]:
    """All exponent vectors of the given total degree, graded-lex descending."""
    if nvars == 0:
        return [()] if degree == 0 else []
    out = []

    def rec(i, left, acc):
        if i == nvars - 1:
            out.append(tuple(acc + [left]))
            return
        for e in range(left, -1, -1):
            rec(i + 1, left - e, acc + [e])

    rec(0, degree, [])
    return out


def from_univariate(coeffs: Sequence, nvars: int = 1, index: int = 0) -> MultiPoly:
    terms = {}
    for d, c in enumerate(coeffs):
        e = [0] * nvars
        e[index] = d
        terms[tuple(e)] = c
    return MultiPoly(nvars, terms)


def univariate_coeffs(p: MultiPoly) -> list:
    """Ascending coefficient list of a one-variable polynomial."""
    if p.nvars != 1:
        raise ValueError("not univariate")
    deg = p.degree()
    out = [0] * (deg + 1)
    for (e,), c in p.terms.items():
        out[e] = c
    return out
