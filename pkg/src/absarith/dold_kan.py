"""Simplicial engine for a morphism phi: A -> B of finite abelian groups.

The two-term chain complex A -> B corresponds, under Dold-Kan, to a
simplicial abelian group whose n-th level is B x A^n.  Both the levels and
the structure maps are realized through a functor on pairs of pointed sets:
an element is a function on the non-base points of a pair (X, Y), valued in A
off Y and in B on Y, and a map of pairs acts by fibrewise sums, applying phi
when an A-value lands on Y.  The simplicial operator of a monotone map theta
is the pair map of its interval dual, so faces, degeneracies and all their
identities come from one code path.

Homotopy groups are computed by brute force: spherical simplices are
enumerated, the one-step homotopy relation is tabulated and checked to be an
equivalence, and the isomorphism class of the quotient group is read off its
addition table.  The expected answers are pi_0 = coker phi, pi_1 = ker phi,
nothing above.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Mapping, Sequence

from .errors import CapExceeded
from .smith import group_divisors_from_table


@dataclass(frozen=True)
class FiniteAbelianGroup:
    """Product of cyclic groups Z/m_i with m_i >= 2; elements are residue tuples."""

    orders: tuple[int, ...]

    def __post_init__(self) -> None:
        if any(m < 2 for m in self.orders):
            raise ValueError("cyclic orders must be >= 2 (the trivial group is the empty product)")

    @property
    def order(self) -> int:
        n = 1
        for m in self.orders:
            n *= m
        return n

    @property
    def rank(self) -> int:
        return len(self.orders)

    def zero(self) -> tuple[int, ...]:
        return (0,) * self.rank

    def add(self, a: Sequence[int], b: Sequence[int]) -> tuple[int, ...]:
        return tuple((x + y) % m for x, y, m in zip(a, b, self.orders))

    def neg(self, a: Sequence[int]) -> tuple[int, ...]:
        return tuple((-x) % m for x, m in zip(a, self.orders))

    def scalar(self, n: int, a: Sequence[int]) -> tuple[int, ...]:
        return tuple((n * x) % m for x, m in zip(a, self.orders))

    def elements(self) -> Iterator[tuple[int, ...]]:
        return itertools.product(*(range(m) for m in self.orders))


@dataclass(frozen=True)
class GroupHom:
    """A homomorphism between finite abelian groups, by generator images.

    matrix[i] is the image of the i-th domain generator; well-definedness
    demands that m_i times that image vanish in the codomain.
    """

    domain: FiniteAbelianGroup
    codomain: FiniteAbelianGroup
    matrix: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        if len(self.matrix) != self.domain.rank:
            raise ValueError("one image row per domain generator is required")
        for m_i, row in zip(self.domain.orders, self.matrix):
            if len(row) != self.codomain.rank:
                raise ValueError("image rows must match the codomain rank")
            if any((m_i * x) % n != 0 for x, n in zip(row, self.codomain.orders)):
                raise ValueError(f"generator of order {m_i} mapped to an element whose order does not divide it")

    def apply(self, a: Sequence[int]) -> tuple[int, ...]:
        out = self.codomain.zero()
        for coeff, row in zip(a, self.matrix):
            out = self.codomain.add(out, self.codomain.scalar(coeff, row))
        return out

    @staticmethod
    def zero_map(domain: FiniteAbelianGroup, codomain: FiniteAbelianGroup) -> "GroupHom":
        return GroupHom(domain, codomain, tuple(codomain.zero() for _ in range(domain.rank)))

    @staticmethod
    def identity(group: FiniteAbelianGroup) -> "GroupHom":
        rows = tuple(
            tuple(1 if i == j else 0 for j in range(group.rank)) for i in range(group.rank)
        )
        return GroupHom(group, group, rows)

    def to_json_dict(self) -> dict:
        return {
            "domain": list(self.domain.orders),
            "codomain": list(self.codomain.orders),
            "matrix": [list(row) for row in self.matrix],
        }

    @staticmethod
    def from_json_dict(data: Mapping) -> "GroupHom":
        domain = FiniteAbelianGroup(tuple(int(m) for m in data["domain"]))
        codomain = FiniteAbelianGroup(tuple(int(n) for n in data["codomain"]))
        matrix = tuple(tuple(int(x) for x in row) for row in data["matrix"])
        return GroupHom(domain, codomain, matrix)


@dataclass(frozen=True)
class PairOfPointedSets:
    """A pointed set {0, ..., size} with a marked subset containing the base point."""

    size: int
    marked: frozenset[int]

    def __post_init__(self) -> None:
        if 0 not in self.marked:
            raise ValueError("the marked subset must contain the base point")
        if any(x < 0 or x > self.size for x in self.marked):
            raise ValueError("marked point out of range")


@dataclass(frozen=True)
class PairMap:
    """A pointed map sending the marked subset into the marked subset."""

    src: PairOfPointedSets
    dst: PairOfPointedSets
    images: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.images) != self.src.size + 1 or self.images[0] != 0:
            raise ValueError("a pair map must be a pointed map on all points")
        if any(y < 0 or y > self.dst.size for y in self.images):
            raise ValueError("image out of range")
        if any(self.images[x] not in self.dst.marked for x in self.src.marked):
            raise ValueError("a pair map must send marked points to marked points")


@dataclass(frozen=True)
class HPhiElement:
    """A function on the non-base points of a pair: A-valued off the marked
    subset, B-valued on it."""

    hom: GroupHom
    pair: PairOfPointedSets
    values: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        if len(self.values) != self.pair.size:
            raise ValueError("one value per non-base point is required")
        for x, v in enumerate(self.values, start=1):
            expected = self.hom.codomain.rank if x in self.pair.marked else self.hom.domain.rank
            if len(v) != expected:
                raise ValueError(f"value at point {x} has the wrong rank")


def h_phi_zero(hom: GroupHom, pair: PairOfPointedSets) -> HPhiElement:
    values = tuple(
        hom.codomain.zero() if x in pair.marked else hom.domain.zero()
        for x in range(1, pair.size + 1)
    )
    return HPhiElement(hom, pair, values)


def h_phi_add(e1: HPhiElement, e2: HPhiElement) -> HPhiElement:
    if e1.pair != e2.pair or e1.hom != e2.hom:
        raise ValueError("mismatched elements")
    hom = e1.hom
    values = tuple(
        (hom.codomain if x in e1.pair.marked else hom.domain).add(v1, v2)
        for x, (v1, v2) in enumerate(zip(e1.values, e2.values), start=1)
    )
    return HPhiElement(hom, e1.pair, values)


def h_phi_map(f: PairMap, psi: HPhiElement) -> HPhiElement:
    """Push a function forward along a map of pairs.

    At an unmarked target point the preimage values (all A-valued) are summed
    in A; at a marked target point every preimage value is first pushed to B
    (phi on A-values, identity on B-values) and summed there.  Mass on the
    base point is discarded.
    """
    if psi.pair != f.src:
        raise ValueError("element does not live on the source of the map")
    hom = psi.hom
    a_grp, b_grp = hom.domain, hom.codomain
    out: list[tuple[int, ...]] = [
        b_grp.zero() if y in f.dst.marked else a_grp.zero() for y in range(1, f.dst.size + 1)
    ]
    for x in range(1, f.src.size + 1):
        y = f.images[x]
        if y == 0:
            continue
        value = psi.values[x - 1]
        if y in f.dst.marked:
            pushed = value if x in f.src.marked else hom.apply(value)
            out[y - 1] = b_grp.add(out[y - 1], pushed)
        else:
            out[y - 1] = a_grp.add(out[y - 1], value)
    return HPhiElement(hom, f.dst, tuple(out))


# ---------------------------------------------------------------------------
# The simplicial object: levels indexed by n, level n living on the pair
# ({0,...,n+1}, {0, n+1}).  Points 1..n carry A-values, point n+1 the B-value.
# ---------------------------------------------------------------------------


def simplex_pair(n: int) -> PairOfPointedSets:
    if n < 0:
        raise ValueError("simplicial degree must be nonnegative")
    return PairOfPointedSets(n + 1, frozenset({0, n + 1}))


def _check_monotone(theta: Sequence[int], n: int) -> None:
    if not theta:
        raise ValueError("a monotone map needs a nonempty domain")
    if any(theta[i] > theta[i + 1] for i in range(len(theta) - 1)):
        raise ValueError("the map is not monotone")
    if theta[0] < 0 or theta[-1] > n:
        raise ValueError("the map does not land in the stated codomain")


@lru_cache(maxsize=None)
def dual_pair_map(theta: Sequence[int], n: int) -> PairMap:
    """The pair map induced on simplex pairs by a monotone theta: [m] -> [n].

    The dual sends i in {0,...,n+1} to the least k with theta(k) >= i (and to
    the top element when there is none); it always fixes bottom and top.
    """
    _check_monotone(theta, n)
    m = len(theta) - 1
    images = []
    for i in range(n + 2):
        k = next((k for k in range(m + 1) if theta[k] >= i), m + 1)
        images.append(k)
    return PairMap(simplex_pair(n), simplex_pair(m), tuple(images))


def coface(j: int, n: int) -> tuple[int, ...]:
    """delta_j: [n-1] -> [n], the injection missing j."""
    if n < 1 or j < 0 or j > n:
        raise ValueError("coface index out of range")
    return tuple(k if k < j else k + 1 for k in range(n))


def codegeneracy(j: int, n: int) -> tuple[int, ...]:
    """sigma_j: [n+1] -> [n], the surjection hitting j twice."""
    if j < 0 or j > n:
        raise ValueError("codegeneracy index out of range")
    return tuple(k if k <= j else k - 1 for k in range(n + 2))


@dataclass(frozen=True)
class LevelDescriptor:
    """Level n of the simplicial group: the product B x A^n."""

    hom: GroupHom
    n: int

    @property
    def size(self) -> int:
        return self.hom.codomain.order * self.hom.domain.order**self.n

    def element(self, a_values: Sequence[Sequence[int]], b_value: Sequence[int]) -> HPhiElement:
        values = tuple(tuple(v) for v in a_values) + (tuple(b_value),)
        return HPhiElement(self.hom, simplex_pair(self.n), values)

    def zero(self) -> HPhiElement:
        return h_phi_zero(self.hom, simplex_pair(self.n))

    def elements(self, cap: int = 1_000_000) -> Iterator[HPhiElement]:
        if self.size > cap:
            raise CapExceeded(f"level {self.n} has {self.size} elements, above the cap of {cap}")
        pair = simplex_pair(self.n)
        a_iter = itertools.product(self.hom.domain.elements(), repeat=self.n)
        for a_values in a_iter:
            for b in self.hom.codomain.elements():
                yield HPhiElement(self.hom, pair, a_values + (b,))


def simplicial_level(hom: GroupHom, n: int) -> LevelDescriptor:
    if n < 0:
        raise ValueError("simplicial degree must be nonnegative")
    return LevelDescriptor(hom, n)


def simplicial_map(theta: Sequence[int], n: int, element: HPhiElement) -> HPhiElement:
    """Act by a monotone theta: [m] -> [n] on a level-n element."""
    if element.pair != simplex_pair(n):
        raise ValueError("element is not at the stated level")
    return h_phi_map(dual_pair_map(tuple(theta), n), element)


def boundary(j: int, element: HPhiElement) -> HPhiElement:
    n = element.pair.size - 1
    return simplicial_map(coface(j, n), n, element)


def degeneracy(j: int, element: HPhiElement) -> HPhiElement:
    n = element.pair.size - 1
    return simplicial_map(codegeneracy(j, n), n, element)


# ---------------------------------------------------------------------------
# Brute-force homotopy.
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class HomotopyGroups:
    """Elementary divisors of pi_0 and pi_1 and triviality flags above."""

    pi0: tuple[int, ...]
    pi1: tuple[int, ...]
    higher_trivial: tuple[tuple[int, bool], ...]

    @property
    def higher(self) -> dict[int, bool]:
        return dict(self.higher_trivial)


def _assert_equivalence(elements: list, relation: set) -> None:
    for e in elements:
        if (e, e) not in relation:
            raise AssertionError("homotopy relation is not reflexive")
    for x, y in relation:
        if (y, x) not in relation:
            raise AssertionError("homotopy relation is not symmetric")
    by_first: dict = {}
    for x, y in relation:
        by_first.setdefault(x, set()).add(y)
    for x, ys in by_first.items():
        for y in ys:
            if not by_first.get(y, set()) <= ys:
                raise AssertionError("homotopy relation is not transitive")


def _quotient_divisors(elements: list, relation: set, add, zero) -> tuple[int, ...]:
    """Isomorphism class of the quotient of a finite abelian group by an
    equivalence relation compatible with addition."""
    _assert_equivalence(elements, relation)
    class_of: dict = {}
    representatives: list = []
    for e in elements:
        if e in class_of:
            continue
        rep = len(representatives)
        representatives.append(e)
        for x, y in relation:
            if x == e:
                class_of[y] = rep
        class_of[e] = rep
    # Quotient addition, with an exhaustive well-definedness check.
    table: dict[tuple[int, int], int] = {}
    for a in elements:
        for b in elements:
            key = (class_of[a], class_of[b])
            value = class_of[add(a, b)]
            if table.setdefault(key, value) != value:
                raise AssertionError("homotopy relation is not compatible with addition")

    def class_add(i: int, j: int) -> int:
        return table[(i, j)]

    return tuple(group_divisors_from_table(range(len(representatives)), class_add, class_of[zero]))


def homotopy_groups(hom: GroupHom, n_max: int = 3, cap: int = 1_000_000) -> HomotopyGroups:
    """pi_0, pi_1 (as elementary divisors) and triviality flags for 2..n_max.

    Levels are enumerated outright; the one-step relation between simplices is
    tabulated from the level above and asserted to be an equivalence relation
    before quotienting (it is, for simplicial abelian groups).
    """
    level0 = simplicial_level(hom, 0)
    level1 = simplicial_level(hom, 1)
    level2 = simplicial_level(hom, 2)

    # pi_0: all vertices, related through edges.
    vertices = [e.values for e in level0.elements(cap)]
    relation0 = set()
    for psi in level1.elements(cap):
        relation0.add((boundary(0, psi).values, boundary(1, psi).values))
    pair0 = simplex_pair(0)

    def add0(v1, v2):
        return h_phi_add(HPhiElement(hom, pair0, v1), HPhiElement(hom, pair0, v2)).values

    pi0 = _quotient_divisors(vertices, relation0, add0, level0.zero().values)

    # pi_1: spherical edges, related through triangles with a degenerate 0-face.
    zero0 = level0.zero().values
    spherical1 = [
        e.values
        for e in level1.elements(cap)
        if boundary(0, e).values == zero0 and boundary(1, e).values == zero0
    ]
    spherical_set = set(spherical1)
    zero1 = level1.zero().values
    relation1: set = set()
    for z in level2.elements(cap):
        if boundary(0, z).values != zero1:
            continue
        x, y = boundary(1, z).values, boundary(2, z).values
        if x in spherical_set and y in spherical_set:
            relation1.add((x, y))
    pair1 = simplex_pair(1)

    def add1(v1, v2):
        return h_phi_add(HPhiElement(hom, pair1, v1), HPhiElement(hom, pair1, v2)).values

    pi1 = _quotient_divisors(spherical1, relation1, add1, zero1)

    higher: list[tuple[int, bool]] = []
    for n in range(2, n_max + 1):
        level = simplicial_level(hom, n)
        zero_below = simplicial_level(hom, n - 1).zero().values
        spherical = [
            e
            for e in level.elements(cap)
            if all(boundary(j, e).values == zero_below for j in range(n + 1))
        ]
        higher.append((n, len(spherical) == 1))
    return HomotopyGroups(pi0=pi0, pi1=pi1, higher_trivial=tuple(higher))
