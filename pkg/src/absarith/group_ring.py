"""Exact arithmetic in the integral group ring of Q/Z.

Elements are finite integer combinations of symbols e(g) for g in Q/Z, stored
with reduced fractions in [0, 1) as keys; the product is convolution,
e(g) e(h) = e(g + h).  The operator sigma_n sends e(g) to e(n g); its
one-sided inverse rho_n sends e(g) to the sum of the n preimages of g under
multiplication by n, so sigma_n rho_n = n.

The invariant part under all automorphisms of Q/Z (units acting by
multiplication on torsion) is spanned by the sums rho(n) of primitive
n-torsion symbols, and is identified with the Witt ring of cyclic classes by
C(k) <-> sum of all k-torsion symbols.  Under that identification sigma_n is
the Frobenius operator and rho_n the Verschiebung.
"""

from __future__ import annotations

import cmath
import json as _json
from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
from typing import Mapping

from .numth import euler_phi, unit_group_generators
from .witt import WittElement, from_primitive_basis, ghost


def _reduce_mod_1(q: Fraction) -> Fraction:
    return q - (q.numerator // q.denominator)


def _canonical(terms: Mapping[Fraction, int]) -> tuple[tuple[Fraction, int], ...]:
    merged: dict[Fraction, int] = {}
    for g, c in terms.items():
        key = _reduce_mod_1(Fraction(g))
        merged[key] = merged.get(key, 0) + int(c)
    return tuple(sorted((g, c) for g, c in merged.items() if c != 0))


@dataclass(frozen=True)
class GroupRingElt:
    """A finitely supported integer function on Q/Z, under convolution."""

    items: tuple[tuple[Fraction, int], ...]

    @staticmethod
    def from_terms(terms: Mapping[Fraction, int]) -> "GroupRingElt":
        return GroupRingElt(_canonical(terms))

    @staticmethod
    def zero() -> "GroupRingElt":
        return GroupRingElt(())

    @staticmethod
    def e(g) -> "GroupRingElt":
        """The basis symbol of the class of g in Q/Z."""
        return GroupRingElt(_canonical({Fraction(g): 1}))

    @property
    def terms(self) -> dict[Fraction, int]:
        return dict(self.items)

    def is_zero(self) -> bool:
        return not self.items

    def coefficient(self, g) -> int:
        return self.terms.get(_reduce_mod_1(Fraction(g)), 0)

    def __add__(self, other: "GroupRingElt") -> "GroupRingElt":
        out = self.terms
        for g, c in other.items:
            out[g] = out.get(g, 0) + c
        return GroupRingElt.from_terms(out)

    def __neg__(self) -> "GroupRingElt":
        return GroupRingElt(tuple((g, -c) for g, c in self.items))

    def __sub__(self, other: "GroupRingElt") -> "GroupRingElt":
        return self + (-other)

    def __rmul__(self, n: int) -> "GroupRingElt":
        if not isinstance(n, int):
            return NotImplemented
        return GroupRingElt.from_terms({g: n * c for g, c in self.items})

    def __mul__(self, other):
        if isinstance(other, int):
            return self.__rmul__(other)
        if not isinstance(other, GroupRingElt):
            return NotImplemented
        out: dict[Fraction, int] = {}
        for g, cg in self.items:
            for h, ch in other.items:
                key = _reduce_mod_1(g + h)
                out[key] = out.get(key, 0) + cg * ch
        return GroupRingElt.from_terms(out)

    def torsion_lcm(self) -> int:
        """lcm of the orders of the support (1 for the zero element)."""
        n = 1
        for g, _ in self.items:
            n = lcm(n, g.denominator)
        return n

    def to_json(self) -> str:
        return _json.dumps(
            {f"{g.numerator}/{g.denominator}": c for g, c in self.items}, sort_keys=True
        )

    @staticmethod
    def from_json(text: str) -> "GroupRingElt":
        data = _json.loads(text)
        if not isinstance(data, dict):
            raise ValueError("group ring JSON must be an object {'a/b': coefficient}")
        return GroupRingElt.from_terms({Fraction(k): int(c) for k, c in data.items()})


def sigma(n: int, x: GroupRingElt) -> GroupRingElt:
    """Ring endomorphism e(g) -> e(n g); colliding images accumulate."""
    if n < 1:
        raise ValueError("sigma index must be >= 1")
    return GroupRingElt.from_terms({n * g: c for g, c in x.items}) if x.items else x


def rho_tilde(n: int, x: GroupRingElt) -> GroupRingElt:
    """Additive map e(g) -> sum of the n preimages of g under multiplication by n."""
    if n < 1:
        raise ValueError("rho index must be >= 1")
    out: dict[Fraction, int] = {}
    for g, c in x.items:
        base = Fraction(g.numerator, n * g.denominator)
        for j in range(n):
            key = _reduce_mod_1(base + Fraction(j, n))
            out[key] = out.get(key, 0) + c
    return GroupRingElt.from_terms(out)


def act_unit(u: int, x: GroupRingElt) -> GroupRingElt:
    """Automorphism of Q/Z induced by a unit u: g -> u g (u coprime to all orders)."""
    out: dict[Fraction, int] = {}
    for g, c in x.items:
        if gcd(u, g.denominator) != 1:
            raise ValueError(f"{u} is not a unit modulo the order {g.denominator}")
        key = Fraction(u * g.numerator % g.denominator, g.denominator)
        out[key] = out.get(key, 0) + c
    return GroupRingElt.from_terms(out)


def is_invariant(x: GroupRingElt) -> bool:
    """Whether x is fixed by every automorphism of Q/Z.

    On support of bounded torsion N the automorphism group acts through
    (Z/NZ)^x, so it suffices to check a generating set of that unit group.
    """
    n = x.torsion_lcm()
    return all(act_unit(u, x) == x for u in unit_group_generators(n))


def witt_to_groupring(w: WittElement) -> GroupRingElt:
    """C(k) -> sum of all k-torsion symbols, extended additively."""
    out: dict[Fraction, int] = {}
    for k, c in w.items:
        for j in range(k):
            key = Fraction(j, k)
            out[key] = out.get(key, 0) + c
    return GroupRingElt.from_terms(out)


def groupring_to_witt(x: GroupRingElt) -> WittElement:
    """Inverse identification, defined on invariant elements only.

    The coefficient of the primitive basis element rho(n) is read off the
    symbol e(1/n) (e(0) for n = 1); invariance makes that well defined.
    """
    if not is_invariant(x):
        raise ValueError("only invariant group-ring elements correspond to Witt elements")
    prim: dict[int, int] = {}
    for g, c in x.items:
        n = g.denominator
        if n == 1 or g.numerator == 1:
            prim[n] = c
    w = from_primitive_basis(prim)
    if witt_to_groupring(w) != x:
        raise ValueError("invariant element did not round-trip; inconsistent input")
    return w


def fourier(x: GroupRingElt, n: int) -> complex:
    """Floating-point character sum: sum of coeff * exp(2 pi i n g)."""
    return sum(c * cmath.exp(2j * cmath.pi * n * float(g)) for g, c in x.items)


def ghost_invariant(x: GroupRingElt, n: int) -> int:
    """Exact integer value of the n-th character sum of an invariant element."""
    return ghost(groupring_to_witt(x), n)


def primitive_orbit_sum(n: int) -> GroupRingElt:
    """The invariant sum rho(n) of all primitive n-torsion symbols."""
    if n < 1:
        raise ValueError("torsion order must be >= 1")
    terms = {Fraction(a, n): 1 for a in range(n) if gcd(a, n) == 1} or {Fraction(0): 1}
    x = GroupRingElt.from_terms(terms)
    assert len(x.items) == (euler_phi(n) if n > 1 else 1)
    return x


__all__ = [
    "GroupRingElt",
    "sigma",
    "rho_tilde",
    "act_unit",
    "is_invariant",
    "witt_to_groupring",
    "groupring_to_witt",
    "fourier",
    "ghost_invariant",
    "primitive_orbit_sum",
]
