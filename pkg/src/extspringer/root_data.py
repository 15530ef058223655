"""Classical root systems, Weyl group enumeration and parabolic data.

Coordinates: type A_l lives on the sum-zero hyperplane of Q^(l+1) with
simple roots ``x_i - x_{i+1}``; types B, C, D use Q^l with last simple root
``x_l``, ``2 x_l`` and ``x_{l-1} + x_l`` respectively.  Weyl elements are
signed permutations: ``w.signed_perm[i] = s * (j + 1)`` means
``w(e_i) = s * e_j``.
"""

from __future__ import annotations

import json
import math
import os
import tempfile
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property, lru_cache
from pathlib import Path
from typing import Iterable, Sequence

from .exact_algebra import Subspace, kernel, solve, intersection

DEFAULT_GUARD = 10**6
CACHE_VERSION = 1
CACHE_ENV = "EXTSPRINGER_CACHE_DIR"


class GuardExceeded(ValueError):
    """The Weyl group is larger than the configured enumeration guard."""


def weyl_order(family: str, rank: int) -> int:
    if family == "A":
        return math.factorial(rank + 1)
    if family in "BC":
        return 2**rank * math.factorial(rank)
    if family == "D":
        return 2 ** (rank - 1) * math.factorial(rank)
    raise ValueError(f"unknown family {family!r}")


@dataclass(frozen=True, order=True)
class CartanType:
    family: str
    rank: int

    def __post_init__(self):
        if self.family not in ("A", "B", "C", "D"):
            raise ValueError(f"unsupported family {self.family!r}")
        if not isinstance(self.rank, int) or self.rank < (3 if self.family == "D" else 1):
            raise ValueError(f"rank {self.rank} out of range for type {self.family}")

    @property
    def ambient_dim(self) -> int:
        return self.rank + 1 if self.family == "A" else self.rank

    @property
    def weyl_order(self) -> int:
        return weyl_order(self.family, self.rank)

    def check_guard(self, guard: int = DEFAULT_GUARD) -> None:
        if self.weyl_order > guard:
            raise GuardExceeded(
                f"|W({self})| = {self.weyl_order} exceeds the enumeration guard {guard}"
            )

    def __str__(self):
        return f"{self.family}{self.rank}"


def _reflect(v: Sequence, alpha: Sequence) -> tuple:
    num = 2 * sum(a * b for a, b in zip(v, alpha))
    den = sum(a * a for a in alpha)
    f = Fraction(num, den)
    out = tuple(x - f * a for x, a in zip(v, alpha))
    return tuple(int(x) if x.denominator == 1 else x for x in out)


def _simple_roots(cartan: CartanType) -> list[tuple[int, ...]]:
    n, l = cartan.ambient_dim, cartan.rank
    roots = []
    for i in range(l if cartan.family == "A" else l - 1):
        v = [0] * n
        v[i], v[i + 1] = 1, -1
        roots.append(tuple(v))
    if cartan.family == "B":
        roots.append(tuple([0] * (n - 1) + [1]))
    elif cartan.family == "C":
        roots.append(tuple([0] * (n - 1) + [2]))
    elif cartan.family == "D":
        roots.append(tuple([0] * (n - 2) + [1, 1]))
    return roots


@dataclass(frozen=True)
class RootSystem:
    cartan: CartanType
    ambient_dim: int
    simple_roots: tuple[tuple[int, ...], ...]
    positive_roots: tuple[tuple[int, ...], ...]
    # simple-root coordinates of each positive root, same order
    positive_coords: tuple[tuple[int, ...], ...]

    @property
    def rank(self) -> int:
        return self.cartan.rank

    @cached_property
    def roots(self) -> frozenset:
        return frozenset(self.positive_roots) | {tuple(-x for x in b) for b in self.positive_roots}

    @cached_property
    def coords_of(self) -> dict[tuple[int, ...], tuple[int, ...]]:
        """Simple-root coordinates of every root (positive and negative)."""
        out = {}
        for b, c in zip(self.positive_roots, self.positive_coords):
            out[b] = c
            out[tuple(-x for x in b)] = tuple(-x for x in c)
        return out

    @cached_property
    def space(self) -> Subspace:
        """The reflection representation V inside the ambient space."""
        return Subspace.span(self.simple_roots, self.ambient_dim)

    def regular_vector(self) -> tuple[int, ...]:
        n = self.ambient_dim
        return tuple(range(n, 0, -1))

    def is_positive(self, beta: Sequence) -> bool:
        return sum(a * b for a, b in zip(beta, self.regular_vector())) > 0


def build_root_system(cartan: CartanType, guard: int = DEFAULT_GUARD) -> RootSystem:
    """Roots as the closure of the simple roots under simple reflections."""
    cartan.check_guard(guard)
    simple = _simple_roots(cartan)
    seen = set(simple)
    queue = deque(simple)
    while queue:
        b = queue.popleft()
        for a in simple:
            r = _reflect(b, a)
            if r not in seen:
                seen.add(r)
                queue.append(r)
    reg = tuple(range(cartan.ambient_dim, 0, -1))
    pos = sorted((b for b in seen if sum(x * y for x, y in zip(b, reg)) > 0),
                 key=lambda b: (-sum(x * y for x, y in zip(b, reg)), tuple(-x for x in b)))
    cols = [list(c) for c in zip(*simple)]
    coords = []
    for b in pos:
        sol = solve(cols, b)
        if sol is None or any(x < 0 or x.denominator != 1 for x in sol):
            raise ArithmeticError(f"root {b} is not a nonnegative integer combination of simple roots")
        coords.append(tuple(int(x) for x in sol))
    # sort by height, then lexicographically, for a stable catalogue
    order = sorted(range(len(pos)), key=lambda i: (sum(coords[i]), coords[i]))
    return RootSystem(
        cartan=cartan,
        ambient_dim=cartan.ambient_dim,
        simple_roots=tuple(simple),
        positive_roots=tuple(pos[i] for i in order),
        positive_coords=tuple(coords[i] for i in order),
    )


@dataclass(frozen=True)
class WeylElement:
    signed_perm: tuple[int, ...]
    length: int

    @cached_property
    def matrix(self) -> tuple[tuple[int, ...], ...]:
        n = len(self.signed_perm)
        m = [[0] * n for _ in range(n)]
        for i, s in enumerate(self.signed_perm):
            m[abs(s) - 1][i] = 1 if s > 0 else -1
        return tuple(tuple(r) for r in m)

    @property
    def sign(self) -> int:
        return -1 if self.length % 2 else 1

    def apply(self, v: Sequence) -> tuple:
        out = [0] * len(v)
        for i, s in enumerate(self.signed_perm):
            out[abs(s) - 1] = v[i] if s > 0 else -v[i]
        return tuple(out)

    @cached_property
    def inverse_perm(self) -> tuple[int, ...]:
        out = [0] * len(self.signed_perm)
        for i, s in enumerate(self.signed_perm):
            out[abs(s) - 1] = (i + 1) if s > 0 else -(i + 1)
        return tuple(out)


def compose(a: Sequence[int], b: Sequence[int]) -> tuple[int, ...]:
    """Signed permutation of ``a o b``."""
    return tuple(a[abs(s) - 1] if s > 0 else -a[abs(s) - 1] for s in b)


def _reflection_perm(alpha: Sequence) -> tuple[int, ...]:
    n = len(alpha)
    out = []
    for i in range(n):
        e = [0] * n
        e[i] = 1
        img = _reflect(e, alpha)
        j = next(k for k, x in enumerate(img) if x)
        out.append((j + 1) if img[j] > 0 else -(j + 1))
    return tuple(out)


@dataclass(frozen=True, eq=False)
class WeylGroup:
    root_system: RootSystem
    elements: tuple[WeylElement, ...]
    generators: tuple[WeylElement, ...]

    def __eq__(self, other):
        return (isinstance(other, WeylGroup) and self.root_system == other.root_system
                and self.elements == other.elements)

    def __hash__(self):
        return hash((self.root_system.cartan, len(self.elements)))

    @property
    def order(self) -> int:
        return len(self.elements)

    @property
    def rank(self) -> int:
        return self.root_system.rank

    @property
    def cartan(self) -> CartanType:
        return self.root_system.cartan

    @cached_property
    def index(self) -> dict[tuple[int, ...], int]:
        return {w.signed_perm: i for i, w in enumerate(self.elements)}

    def element(self, signed_perm: Sequence[int]) -> WeylElement:
        return self.elements[self.index[tuple(signed_perm)]]

    def multiply(self, a: WeylElement, b: WeylElement) -> WeylElement:
        return self.element(compose(a.signed_perm, b.signed_perm))

    def inverse(self, a: WeylElement) -> WeylElement:
        return self.element(a.inverse_perm)

    def length_polynomial(self) -> list[int]:
        """Coefficients of sum_w q^length(w), ascending."""
        top = max(w.length for w in self.elements)
        out = [0] * (top + 1)
        for w in self.elements:
            out[w.length] += 1
        return out


def _bfs(identity: tuple[int, ...], gens: Sequence[tuple[int, ...]]):
    seen = {identity}
    layer = [identity]
    out = []
    level = 0
    while layer:
        layer.sort()
        out.extend((p, level) for p in layer)
        nxt = set()
        for p in layer:
            for g in gens:
                q = compose(p, g)
                if q not in seen:
                    seen.add(q)
                    nxt.add(q)
        layer = list(nxt)
        level += 1
    return out


def enumerate_weyl(root_system: RootSystem, guard: int = DEFAULT_GUARD,
                   cache_dir: str | os.PathLike | None = None) -> WeylGroup:
    """All elements, breadth first by length with lexicographic tie-break."""
    cartan = root_system.cartan
    cartan.check_guard(guard)
    cache_dir = cache_dir if cache_dir is not None else os.environ.get(CACHE_ENV)
    gens = [_reflection_perm(a) for a in root_system.simple_roots]
    listing = None
    path = None
    if cache_dir:
        path = Path(cache_dir) / cache_filename(cartan)
        if path.exists():
            listing = load_listing(path.read_bytes(), cartan)
    if listing is None:
        ident = tuple(range(1, root_system.ambient_dim + 1))
        listing = _bfs(ident, gens)
        if len(listing) != cartan.weyl_order:
            raise ArithmeticError(f"enumerated {len(listing)} elements, expected {cartan.weyl_order}")
        if path is not None:
            write_atomic(path, dump_listing(listing, cartan))
    elements = tuple(WeylElement(p, l) for p, l in listing)
    by_perm = {w.signed_perm: w for w in elements}
    return WeylGroup(root_system, elements, tuple(by_perm[g] for g in gens))


# -- enumeration cache ------------------------------------------------------

def cache_filename(cartan: CartanType) -> str:
    return f"weyl-{cartan.family}{cartan.rank}-v{CACHE_VERSION}.json"


def dump_listing(listing: Sequence[tuple[tuple[int, ...], int]], cartan: CartanType) -> bytes:
    doc = {
        "version": CACHE_VERSION,
        "family": cartan.family,
        "rank": cartan.rank,
        "elements": [[list(p), l] for p, l in listing],
    }
    return (json.dumps(doc, separators=(",", ":")) + "\n").encode()


def load_listing(data: bytes, cartan: CartanType):
    try:
        doc = json.loads(data)
    except ValueError:
        return None
    if (doc.get("version") != CACHE_VERSION or doc.get("family") != cartan.family
            or doc.get("rank") != cartan.rank):
        return None
    listing = [(tuple(p), l) for p, l in doc["elements"]]
    if len(listing) != cartan.weyl_order:
        return None
    return listing


def write_atomic(path: Path, data: bytes) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=path.name, suffix=".tmp")
    try:
        with os.fdopen(fd, "wb") as fh:
            fh.write(data)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


@lru_cache(maxsize=None)
def weyl_group(family: str, rank: int, guard: int = DEFAULT_GUARD,
               cache_dir: str | None = None) -> WeylGroup:
    """Memoized ``enumerate_weyl(build_root_system(...))``."""
    cartan = CartanType(family, rank)
    return enumerate_weyl(build_root_system(cartan, guard), guard, cache_dir)


# -- parabolic data ---------------------------------------------------------

@dataclass(frozen=True)
class ParabolicDatum:
    J: tuple[int, ...]
    subgroup: tuple[WeylElement, ...]
    pos_roots_J: tuple[tuple[int, ...], ...]
    fixed_basis: tuple[tuple, ...]
    complement_basis: tuple[tuple[int, ...], ...]
    r: int
    s: int


def normalize_subset(J: Iterable[int], rank: int) -> tuple[int, ...]:
    J = tuple(sorted(set(J)))
    if any(j < 1 or j > rank for j in J):
        raise ValueError(f"simple-root indices {J} not within 1..{rank}")
    return J


def subgroup_generated(weyl: WeylGroup, J: Sequence[int]) -> tuple[WeylElement, ...]:
    gens = [weyl.generators[j - 1].signed_perm for j in J]
    ident = weyl.elements[0].signed_perm
    return tuple(weyl.element(p) for p, _ in _bfs(ident, gens))


def parabolic_data(weyl: WeylGroup, J: Iterable[int]) -> ParabolicDatum:
    rs = weyl.root_system
    J = normalize_subset(J, rs.rank)
    jset = set(J)
    pos_J = tuple(b for b, c in zip(rs.positive_roots, rs.positive_coords)
                  if all(x == 0 or (i + 1) in jset for i, x in enumerate(c)))
    comp = tuple(rs.simple_roots[j - 1] for j in J)
    n = rs.ambient_dim
    if comp:
        fixed = intersection(rs.space, kernel(list(comp), n))
    else:
        fixed = rs.space
    return ParabolicDatum(
        J=J,
        subgroup=subgroup_generated(weyl, J),
        pos_roots_J=pos_J,
        fixed_basis=fixed.basis,
        complement_basis=comp,
        r=len(J),
        s=rs.rank - len(J),
    )
