"""Fundamental degrees, invariant polynomials, the root product and the
determinant of directional derivatives of invariants.

Polynomials are written in the ambient coordinates ``x_1..x_n`` of the root
system.  In type A the reflection representation is the hyperplane
``x_1 + ... + x_n = 0``; :func:`reduce_sum_zero` gives the canonical
representative of a polynomial function on it.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from .exact_algebra import MultiPoly, elementary_symmetric, exact_divide, monomials, poly_matrix_det, rref
from .root_data import ParabolicDatum, RootSystem, WeylElement, WeylGroup, normalize_subset, parabolic_data

PASS = "pass"
FAIL = "fail"
DEGREE_OBSTRUCTION = "obstruction"
NOT_FOUND = "inconclusive"


# -- degrees and coexponents ---------------------------------------------

@dataclass(frozen=True)
class DegreeMultiset:
    degrees: tuple[int, ...]

    @property
    def exponents(self) -> tuple[int, ...]:
        return tuple(d - 1 for d in self.degrees)


def fundamental_degrees(weyl: WeylGroup) -> DegreeMultiset:
    """Peel ``(1 - q^d)`` factors, smallest ``d`` first, off ``P(q) (1 - q)^l``.

    ``P`` is the length generating function, equal to the product of the
    q-integers ``[d_i]``, so ``P (1-q)^l`` is ``prod (1 - q^{d_i})``.  The
    lowest nonconstant coefficient of that product is ``-k`` at ``q^d`` where
    ``d`` is the smallest degree and ``k`` its multiplicity.
    """
    poly = weyl.length_polynomial()
    for _ in range(weyl.rank):
        poly = _mul_poly(poly, [1, -1])
    degrees = []
    while any(poly[1:]):
        d = next(i for i in range(1, len(poly)) if poly[i])
        k = -poly[d]
        if k <= 0:
            raise ArithmeticError(f"length polynomial does not factor (coefficient {poly[d]} at q^{d})")
        for _ in range(k):
            poly = _div_poly(poly, [1] + [0] * (d - 1) + [-1])
            degrees.append(d)
    if poly[0] != 1 or len(degrees) != weyl.rank:
        raise ArithmeticError("length polynomial does not factor into q-integers")
    return DegreeMultiset(tuple(degrees))


def _mul_poly(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def _div_poly(a, b):
    a = list(a)
    q = [0] * (len(a) - len(b) + 1)
    for i in range(len(q) - 1, -1, -1):
        c = a[i + len(b) - 1] // b[-1]
        q[i] = c
        for j, y in enumerate(b):
            a[i + j] -= c * y
    if any(a):
        raise ArithmeticError("inexact polynomial division")
    while len(q) > 1 and q[-1] == 0:
        q.pop()
    return q


@dataclass(frozen=True)
class CoexponentVector:
    family: str
    values: tuple[int, ...]

    @property
    def s(self) -> int:
        return len(self.values)


def coexponents(family: str, s: int) -> CoexponentVector:
    """Closed forms for parabolic nilpotents: ``i`` in type A, ``2i - 1`` in B and C."""
    if family == "A":
        return CoexponentVector(family, tuple(range(1, s + 1)))
    if family in "BC":
        return CoexponentVector(family, tuple(2 * i - 1 for i in range(1, s + 1)))
    raise ValueError(f"no closed form for coexponents in type {family}")


# -- group action on polynomials ------------------------------------------

def act(w: WeylElement, f: MultiPoly) -> MultiPoly:
    """``(w f)(v) = f(w^{-1} v)``."""
    return f.signed_permute(w.signed_perm)


def reduce_sum_zero(p: MultiPoly) -> MultiPoly:
    """Canonical form on ``x_1 + ... + x_n = 0``: eliminate ``x_n``."""
    n = p.nvars
    if n - 1 not in p.variables_used():
        return p
    M = [[int(i == j) for j in range(n)] for i in range(n - 1)]
    M.append([-1] * (n - 1) + [0])
    return p.linear_substitute(M)


def canonical(rs: RootSystem, p: MultiPoly) -> MultiPoly:
    return reduce_sum_zero(p) if rs.cartan.family == "A" else p


def equal_on_V(rs: RootSystem, p: MultiPoly, q: MultiPoly) -> bool:
    if p == q:
        return True
    return rs.cartan.family == "A" and reduce_sum_zero(p - q).is_zero()


def is_invariant(weyl: WeylGroup, f: MultiPoly) -> bool:
    """Fixed by every simple reflection (hence by W), as a function on V."""
    rs = weyl.root_system
    return all(equal_on_V(rs, act(g, f), f) for g in weyl.generators)


# -- invariant spaces -------------------------------------------------------

def invariant_space(weyl: WeylGroup, degree: int) -> list[MultiPoly]:
    """Basis of homogeneous W-invariants of the given degree, as functions on V.

    Reynolds averages of monomials over the full element list, reduced to
    canonical form and row reduced.  Basis polynomials are monic in graded
    lexicographic order.
    """
    if degree < 0:
        raise ValueError("negative degree")
    rs = weyl.root_system
    n = rs.ambient_dim
    seen: set[tuple[int, ...]] = set()
    averages = []
    for mono in monomials(n, degree):
        if mono in seen:
            continue
        m = MultiPoly(n, {mono: 1})
        total = MultiPoly.zero(n)
        for w in weyl.elements:
            img = act(w, m)
            seen.update(img.terms)
            total = total + img
        avg = canonical(rs, total.scale(Fraction(1, weyl.order)))
        if not avg.is_zero():
            averages.append(avg)
    if not averages:
        return []
    # columns in descending graded lex order so that pivots are leading terms
    basis_monos = sorted({e for p in averages for e in p.terms}, key=lambda e: (sum(e), e), reverse=True)
    pos = {e: i for i, e in enumerate(basis_monos)}
    rows = []
    for p in averages:
        row = [0] * len(basis_monos)
        for e, c in p.terms.items():
            row[pos[e]] = c
        rows.append(row)
    red, _ = rref(rows, len(basis_monos))
    return [MultiPoly(n, {basis_monos[i]: c for i, c in enumerate(r) if c}) for r in red]


# -- root products and the determinant -----------------------------------

def root_form(beta: Sequence[int]) -> MultiPoly:
    return MultiPoly.linear_form(beta)


def positive_roots_of(rs: RootSystem, K: Sequence[int]) -> list[tuple[int, ...]]:
    kset = set(normalize_subset(K, rs.rank))
    return [b for b, c in zip(rs.positive_roots, rs.positive_coords)
            if all(x == 0 or (i + 1) in kset for i, x in enumerate(c))]


def pi_K(root_system: RootSystem, K: Sequence[int]) -> MultiPoly:
    """Product of the positive roots of the parabolic subsystem on ``K``."""
    out = MultiPoly.const(root_system.ambient_dim, 1)
    for b in positive_roots_of(root_system, K):
        out = out * root_form(b)
    return out


def derivative_matrix(fs: Sequence[MultiPoly], directions: Sequence[Sequence]) -> list[list[MultiPoly]]:
    return [[f.directional_derivative(v) for v in directions] for f in fs]


def delta(fs: Sequence[MultiPoly], vk_basis: Sequence[Sequence], nvars: int | None = None) -> MultiPoly:
    """Determinant of ``(d f_i / d v_j)``."""
    if len(fs) != len(vk_basis):
        raise ValueError(f"{len(fs)} polynomials but {len(vk_basis)} directions")
    if nvars is None:
        nvars = fs[0].nvars if fs else len(vk_basis[0]) if vk_basis else None
    if nvars is None:
        raise ValueError("nvars required when s = 0")
    return poly_matrix_det(derivative_matrix(fs, vk_basis), nvars)


def divide_by_roots(p: MultiPoly, roots: Sequence[Sequence[int]]) -> MultiPoly | None:
    """``p / prod(roots)`` by successive division by the (pairwise coprime) linear factors."""
    q = p
    for b in roots:
        q = exact_divide(q, root_form(b))
        if q is None:
            return None
    return q


@dataclass
class DeltaCertificate:
    delta: MultiPoly
    pi_K: MultiPoly
    c: Fraction | int
    skew_invariant: bool
    divisible: bool
    normalized: bool = False
    skew_scope: str = "all"
    verdict: str = FAIL
    note: str = ""


def delta_certificate(weyl: WeylGroup, K: Sequence[int], fs: Sequence[MultiPoly],
                      skew_budget: int = 2_000_000) -> DeltaCertificate:
    """Check ``w Delta = sign(w) Delta`` on ``W_K`` and ``Delta = c pi_K`` with ``c != 0``.

    In type A the check is first made in the ambient polynomial ring, which
    is sufficient; when it fails there (e.g. for witnesses already reduced
    modulo the sum-zero relation) both sides are compared after reduction.
    """
    rs = weyl.root_system
    K = normalize_subset(K, rs.rank)
    par = parabolic_data(weyl, K)
    n = rs.ambient_dim
    D = delta(fs, par.complement_basis, n)
    roots = par.pos_roots_J
    pk = pi_K(rs, K)

    # The full scan is replaced by the simple reflections of K (which generate
    # W_K, and the sign is a character) once it would exceed the budget.
    if len(par.subgroup) * max(len(D), 1) <= skew_budget:
        scan, skew_scope = par.subgroup, "all"
    else:
        scan, skew_scope = [weyl.generators[k - 1] for k in K], "generators"
    skew = all(act(w, D) == (D if w.sign > 0 else -D) for w in scan)
    normalized = False
    if not skew and rs.cartan.family == "A":
        normalized = True
        skew = all(equal_on_V(rs, act(w, D), D if w.sign > 0 else -D) for w in scan)

    q = divide_by_roots(D, roots)
    c = q.constant_term() if q is not None and q.is_constant() else None
    if c is None and rs.cartan.family == "A":
        normalized = True
        Dn, pn = reduce_sum_zero(D), reduce_sum_zero(pk)
        c = _constant_ratio(Dn, pn)
    cert = DeltaCertificate(D, pk, c if c is not None else 0, skew, c is not None, normalized,
                            skew_scope=skew_scope)
    if c is None:
        cert.note = "Delta is not a constant multiple of pi_K"
    elif c == 0:
        cert.note = "Delta vanishes"
    elif not skew:
        cert.note = "Delta is not skew-invariant under W_K"
    else:
        cert.verdict = PASS
    return cert


def _constant_ratio(p: MultiPoly, q: MultiPoly):
    if q.is_zero():
        return None
    q_lt, q_lc = q.leading_term()
    c = Fraction(p.terms.get(q_lt, 0)) / q_lc
    return c if p == q.scale(c) else None


# -- condition (1) ------------------------------------------------------------

@dataclass
class Condition1Report:
    K: tuple[int, ...]
    m: tuple[int, ...]
    witnesses: list[MultiPoly]
    degrees_ok: bool
    invariant_ok: bool
    jacobian_nonzero: bool
    degree_product_ok: bool
    verdict: str
    jacobian_method: str = ""
    obstruction_degree: int | None = None
    note: str = ""


def restriction_matrix(vk_basis: Sequence[Sequence], n: int) -> list[list]:
    """``n x s`` matrix whose columns are the basis vectors of V_K."""
    return [[v[i] for v in vk_basis] for i in range(n)]


def jacobian_nonzero(gs: Sequence[MultiPoly], nvars: int, symbolic_limit: int = 4) -> tuple[bool, str]:
    """Decide ``det(d g_i / d y_j) != 0`` exactly.

    Up to ``symbolic_limit`` variables the determinant is expanded.  Beyond
    that the symbolic matrix is pushed through evaluation at deterministic
    integer points, a ring homomorphism: a nonzero value certifies a nonzero
    determinant.  If every point gives zero the full expansion is used.
    """
    if not gs:
        return True, "empty"
    J = [[g.partial(j) for j in range(nvars)] for g in gs]
    if nvars <= symbolic_limit:
        return not poly_matrix_det(J, nvars).is_zero(), "symbolic"
    from .exact_algebra import det
    for t in range(1, 9):
        point = [(t * (i + 1) ** 2 + i * 7 + 3) % (97 + t) - 40 for i in range(nvars)]
        if det([[e.evaluate(point) for e in row] for row in J]) != 0:
            return True, "evaluation-certificate"
    return not poly_matrix_det(J, nvars).is_zero(), "symbolic"


def check_condition1(weyl: WeylGroup, K: Sequence[int], m, fs: Sequence[MultiPoly]) -> Condition1Report:
    """Do the restrictions of ``fs`` to V_K form fundamental invariants of W_K?

    Degrees must be ``m_i + 1``, each ``f_i`` must be W-invariant, the
    restricted Jacobian must be nonzero (algebraic independence) and the
    degree product must equal ``|W_K|``.
    """
    rs = weyl.root_system
    K = normalize_subset(K, rs.rank)
    mv = tuple(m.values if isinstance(m, CoexponentVector) else m)
    fs = list(fs)
    if not (len(fs) == len(mv) == len(K)):
        return Condition1Report(K, mv, fs, False, False, False, False, FAIL,
                                note=f"|fs|={len(fs)}, |m|={len(mv)}, |K|={len(K)} differ")
    par = parabolic_data(weyl, K)
    degrees_ok = all(not f.is_zero() and f.is_homogeneous(mi + 1) for f, mi in zip(fs, mv))
    invariant_ok = all(is_invariant(weyl, f) for f in fs)
    prod = 1
    for mi in mv:
        prod *= mi + 1
    product_ok = prod == len(par.subgroup)
    s = len(K)
    R = restriction_matrix(par.complement_basis, rs.ambient_dim)
    gs = [f.linear_substitute(R) for f in fs] if s else []
    jac, method = jacobian_nonzero(gs, s)
    ok = degrees_ok and invariant_ok and product_ok and jac
    return Condition1Report(K, mv, fs, degrees_ok, invariant_ok, jac, product_ok,
                            PASS if ok else FAIL, jacobian_method=method)


def standard_witnesses(rs: RootSystem, s: int) -> list[MultiPoly]:
    """``e_{i+1}(x)`` in type A, ``e_i(x^2)`` in types B and C, ``i = 1..s``."""
    n = rs.ambient_dim
    fam = rs.cartan.family
    if fam == "A":
        return [elementary_symmetric(n, i + 1) for i in range(1, s + 1)]
    if fam in "BC":
        return [elementary_symmetric(n, i, power=2) for i in range(1, s + 1)]
    raise ValueError(f"no standard witnesses in type {fam}")


GRID = (0, 1, -1, 2, -2)


def _grid_vectors(dim: int):
    vecs = [v for v in itertools.product(GRID, repeat=dim) if any(v)]
    vecs.sort(key=lambda v: (sum(abs(x) for x in v), [GRID.index(x) for x in v]))
    return vecs


def search_condition1(weyl: WeylGroup, K: Sequence[int], m, max_trials: int = 20000) -> Condition1Report:
    """Look for invariant witnesses of degrees ``m_i + 1`` satisfying condition (1).

    An empty invariant space is a degree obstruction.  Otherwise combinations
    with coefficients in {0, +-1, +-2} are tried in a fixed order; failure
    to find one is inconclusive, not a disproof.
    """
    rs = weyl.root_system
    K = normalize_subset(K, rs.rank)
    mv = tuple(m.values if isinstance(m, CoexponentVector) else m)
    spaces = []
    for mi in mv:
        basis = invariant_space(weyl, mi + 1)
        if not basis:
            return Condition1Report(K, mv, [], False, False, False, False, DEGREE_OBSTRUCTION,
                                    obstruction_degree=mi + 1,
                                    note=f"no W-invariant polynomials of degree {mi + 1}")
        spaces.append(basis)
    if len(mv) != len(K):
        return Condition1Report(K, mv, [], False, False, False, False, FAIL,
                                note=f"|m|={len(mv)} but |K|={len(K)}")
    if not mv:
        return check_condition1(weyl, K, mv, [])
    candidates = []
    for basis in spaces:
        cands = []
        for v in _grid_vectors(len(basis)):
            f = MultiPoly.zero(rs.ambient_dim)
            for c, b in zip(v, basis):
                if c:
                    f = f + b.scale(c)
            cands.append(f)
        candidates.append(cands)
    last = None
    for trial, fs in enumerate(itertools.product(*candidates)):
        if trial >= max_trials:
            break
        rep = check_condition1(weyl, K, mv, fs)
        if rep.verdict == PASS:
            return rep
        last = rep
        if not rep.degree_product_ok:
            rep.note = "degree product differs from |W_K|"
            return rep
    return Condition1Report(K, mv, [], True, True, False, last.degree_product_ok if last else False,
                            NOT_FOUND, note="no witness found on the search grid")
