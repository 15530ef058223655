"""Class functions on Weyl groups, Molien series of the coinvariant algebra,
and the product formula for exterior powers of the reflection representation.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import Callable, Sequence

from .exact_algebra import MultiPoly, TruncatedSeries, poly_matrix_det
from .invariant_theory import FAIL, PASS, fundamental_degrees
from .root_data import WeylElement, WeylGroup, compose, normalize_subset, parabolic_data


@dataclass(frozen=True, eq=False)
class ConjugacyClasses:
    weyl: WeylGroup
    reps: tuple[WeylElement, ...]
    sizes: tuple[int, ...]
    class_of: tuple[int, ...]  # class index of each element, by enumeration index

    def members(self, k: int) -> list[WeylElement]:
        return [w for w, c in zip(self.weyl.elements, self.class_of) if c == k]

    def __len__(self):
        return len(self.reps)


_class_cache: dict[int, ConjugacyClasses] = {}


def conjugacy_classes(weyl: WeylGroup) -> ConjugacyClasses:
    """Orbits under conjugation by the simple reflections; representatives
    are minimal in enumeration order."""
    cached = _class_cache.get(id(weyl))
    if cached is not None and cached.weyl is weyl:
        return cached
    index = weyl.index
    gens = [g.signed_perm for g in weyl.generators]
    class_of = [-1] * weyl.order
    reps, sizes = [], []
    for i, w in enumerate(weyl.elements):
        if class_of[i] >= 0:
            continue
        k = len(reps)
        class_of[i] = k
        stack = [w.signed_perm]
        size = 1
        while stack:
            p = stack.pop()
            for g in gens:
                q = compose(compose(g, p), g)
                j = index[q]
                if class_of[j] < 0:
                    class_of[j] = k
                    size += 1
                    stack.append(q)
        reps.append(w)
        sizes.append(size)
    cc = ConjugacyClasses(weyl, tuple(reps), tuple(sizes), tuple(class_of))
    _class_cache[id(weyl)] = cc
    return cc


@dataclass(frozen=True, eq=False)
class ClassFunction:
    classes: ConjugacyClasses
    values: tuple

    @classmethod
    def from_callable(cls, classes: ConjugacyClasses, fn: Callable[[WeylElement], object],
                      seed: int = 0) -> "ClassFunction":
        """Evaluate on representatives; spot-check up to 3 random members per class."""
        rng = random.Random(seed)
        values = []
        for k, rep in enumerate(classes.reps):
            v = fn(rep)
            members = classes.members(k)
            for w in rng.sample(members, min(3, len(members))):
                if fn(w) != v:
                    raise ValueError(f"function is not constant on class {k}")
            values.append(v)
        return cls(classes, tuple(values))

    @property
    def class_reps(self):
        return self.classes.reps

    @property
    def class_sizes(self):
        return self.classes.sizes

    def __call__(self, w: WeylElement):
        return self.values[self.classes.class_of[self.classes.weyl.index[w.signed_perm]]]

    def __mul__(self, other: "ClassFunction") -> "ClassFunction":
        return ClassFunction(self.classes, tuple(a * b for a, b in zip(self.values, other.values)))

    def __eq__(self, other):
        return isinstance(other, ClassFunction) and self.values == other.values

    def degree(self):
        return self.values[0]


def inner_product(chi: ClassFunction, psi: ClassFunction) -> Fraction:
    """``<chi, psi>``; characters of Weyl groups are real."""
    cc = chi.classes
    total = sum(n * a * b for n, a, b in zip(cc.sizes, chi.values, psi.values))
    return Fraction(total, cc.weyl.order)


def trivial_character(weyl: WeylGroup) -> ClassFunction:
    cc = conjugacy_classes(weyl)
    return ClassFunction(cc, (1,) * len(cc))


def sign_character(weyl: WeylGroup) -> ClassFunction:
    cc = conjugacy_classes(weyl)
    return ClassFunction(cc, tuple(w.sign for w in cc.reps))


# -- action on V --------------------------------------------------------------

def matrix_on_V(weyl: WeylGroup, w: WeylElement) -> list[list[int]]:
    """Matrix of ``w`` on V in the basis of simple roots."""
    rs = weyl.root_system
    cols = [rs.coords_of[w.apply(a)] for a in rs.simple_roots]
    return [[c[i] for c in cols] for i in range(rs.rank)]


@lru_cache(maxsize=None)
def _exterior_poly(key) -> tuple[int, ...]:
    M = [list(r) for r in key]
    l = len(M)
    t = MultiPoly.var(1, 0)
    rows = [[t.scale(M[i][j]) + int(i == j) for j in range(l)] for i in range(l)]
    d = poly_matrix_det(rows, 1)
    out = [0] * (l + 1)
    for (e,), c in d.terms.items():
        out[e] = c
    return tuple(out)


def exterior_coefficients(weyl: WeylGroup, w: WeylElement) -> tuple[int, ...]:
    """Coefficients of ``det(1 + t w|_V)``: the traces of ``w`` on ``Lambda^i V``."""
    return _exterior_poly(tuple(tuple(r) for r in matrix_on_V(weyl, w)))


def exterior_character(weyl: WeylGroup, i: int) -> ClassFunction:
    if not 0 <= i <= weyl.rank:
        raise ValueError(f"exterior power {i} out of range 0..{weyl.rank}")
    cc = conjugacy_classes(weyl)
    return ClassFunction.from_callable(cc, lambda w: exterior_coefficients(weyl, w)[i])


def induced_trivial(weyl: WeylGroup, J) -> ClassFunction:
    """Character of the permutation action on cosets of ``W_J``.

    ``chi(w) = |{x : x^-1 w x in W_J}| / |W_J| = |C(w)| |cl(w) & W_J| / |W_J|``.
    """
    cc = conjugacy_classes(weyl)
    sub = parabolic_data(weyl, J).subgroup
    hits = [0] * len(cc)
    for u in sub:
        hits[cc.class_of[weyl.index[u.signed_perm]]] += 1
    values = []
    for k, size in enumerate(cc.sizes):
        num = (weyl.order // size) * hits[k]
        if num % len(sub):
            raise ArithmeticError("induced character is not integral")
        values.append(num // len(sub))
    return ClassFunction(cc, tuple(values))


@dataclass
class TwoPowerReport:
    J: tuple[int, ...]
    s: int
    per_i: tuple[int, ...]
    total: int
    verdict: str


def two_power_check(weyl: WeylGroup, J) -> TwoPowerReport:
    """``<Ind 1 (x) Lambda^i V, 1> = binom(s, i)``, summing to ``2^s``."""
    J = normalize_subset(J, weyl.rank)
    s = weyl.rank - len(J)
    ind = induced_trivial(weyl, J)
    per_i = []
    for i in range(weyl.rank + 1):
        v = inner_product(ind, exterior_character(weyl, i))
        if v.denominator != 1:
            raise ArithmeticError("non-integral multiplicity")
        per_i.append(int(v))
    total = sum(per_i)
    ok = total == 2**s and all(v == comb(s, i) for i, v in enumerate(per_i))
    return TwoPowerReport(J, s, tuple(per_i), total, PASS if ok else FAIL)


# -- Molien series --------------------------------------------------------------

def coinvariant_graded_multiplicity(weyl: WeylGroup, chi: ClassFunction) -> MultiPoly:
    """Graded multiplicity of ``chi`` in the coinvariant algebra, as a polynomial in q.

    ``prod (1 - q^{d_i}) * (1/|W|) sum_w chi(w) / det(1 - q w)``.  The series
    is carried past the top degree ``N = |Phi+|`` so that the vanishing of
    the tail is actually checked.
    """
    rs = weyl.root_system
    cc = chi.classes
    N = len(rs.positive_roots)
    degs = fundamental_degrees(weyl).degrees
    order = N + max(degs)
    index = weyl.index
    total = TruncatedSeries.from_coeffs([0], order)
    for k, (rep, size) in enumerate(zip(cc.reps, cc.sizes)):
        inv = index[rep.inverse_perm]
        if cc.class_of[inv] != k:
            raise ArithmeticError("class is not closed under inversion")
        v = chi.values[k]
        if not v:
            continue
        ext = exterior_coefficients(weyl, rep)
        den = TruncatedSeries.from_coeffs([(-1) ** i * c for i, c in enumerate(ext)], order)
        total = total + den.inverse().scale(Fraction(size) * v)
    total = total.scale(Fraction(1, weyl.order))
    for d in degs:
        total = total * TruncatedSeries.from_coeffs([1] + [0] * (d - 1) + [-1], order)
    coeffs = total.coeffs
    if any(coeffs[N + 1:]):
        raise ArithmeticError("Molien series did not truncate at the top degree")
    for j, c in enumerate(coeffs[: N + 1]):
        if c.denominator != 1 or c < 0:
            raise ArithmeticError(f"coefficient {c} of q^{j} is not a nonnegative integer")
    return MultiPoly(1, {(j,): int(c) for j, c in enumerate(coeffs[: N + 1]) if c})


@dataclass
class SolomonReport:
    table: MultiPoly  # variables (t, q)
    product: MultiPoly
    exponents: tuple[int, ...]
    verdict: str


def product_formula(ms: Sequence[int]) -> MultiPoly:
    """``prod_k (1 + t q^{m_k})`` in variables ``(t, q)``."""
    out = MultiPoly.const(2, 1)
    for m in ms:
        out = out * MultiPoly(2, {(0, 0): 1, (1, m): 1})
    return out


def bivariate_table(weyl: WeylGroup) -> MultiPoly:
    terms = {}
    for i in range(weyl.rank + 1):
        fake = coinvariant_graded_multiplicity(weyl, exterior_character(weyl, i))
        for (j,), c in fake.terms.items():
            terms[(i, j)] = c
    return MultiPoly(2, terms)


def solomon_check(weyl: WeylGroup) -> SolomonReport:
    ms = fundamental_degrees(weyl).exponents
    table = bivariate_table(weyl)
    prod = product_formula(ms)
    return SolomonReport(table, prod, ms, PASS if table == prod else FAIL)
