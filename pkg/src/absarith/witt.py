"""The Witt ring of pointed-set endomorphisms, in the cyclic basis.

Elements are finite integer combinations of the classes of cyclic
permutations C(k); the class of an arbitrary endomorphism is the cycle type
of the permutation induced on its eventual image.  The n-th ghost component
(trace of the n-th power) is sum over k | n of k * m(k), a ring homomorphism
to Z for each n, and determines the element by Mobius inversion:

    m(k) = (1/k) * sum over d | k of mu(k/d) * ghost(d).

Multiplication is C(a) * C(b) = gcd(a,b) * C(lcm(a,b)) extended bilinearly,
which makes the ghost components multiply pointwise.  The Frobenius operator
raises the endomorphism to a power, splitting C(k) into gcd(n,k) cycles of
length k/gcd(n,k); the Verschiebung operator is the odometer C(k) -> C(nk).
"""

from __future__ import annotations

import json as _json
from dataclasses import dataclass
from math import gcd, lcm
from typing import Mapping

from .gamma_core import PointedEndo, cycle_type
from .numth import divisors, mobius


def _canonical(coeffs: Mapping[int, int]) -> tuple[tuple[int, int], ...]:
    items = []
    for k, c in sorted(coeffs.items()):
        if k < 1:
            raise ValueError(f"cycle length must be a positive integer, got {k}")
        if c != 0:
            items.append((int(k), int(c)))
    return tuple(items)


@dataclass(frozen=True)
class WittElement:
    """An integer combination of cyclic-permutation classes, keyed by order.

    Zero coefficients are dropped, so equality is structural.  Negative
    coefficients are allowed: the ring consists of formal differences, and
    effectivity (all coefficients >= 0) is a queryable predicate.
    """

    items: tuple[tuple[int, int], ...]

    @staticmethod
    def from_coeffs(coeffs: Mapping[int, int]) -> "WittElement":
        return WittElement(_canonical(coeffs))

    @staticmethod
    def zero() -> "WittElement":
        return WittElement(())

    @staticmethod
    def one() -> "WittElement":
        return WittElement(((1, 1),))

    @staticmethod
    def basis(k: int) -> "WittElement":
        """The class of the cyclic permutation of order k."""
        if k < 1:
            raise ValueError("cycle order must be >= 1")
        return WittElement(((k, 1),))

    @property
    def coeffs(self) -> dict[int, int]:
        return dict(self.items)

    def is_zero(self) -> bool:
        return not self.items

    def is_effective(self) -> bool:
        return all(c >= 0 for _, c in self.items)

    def support(self) -> tuple[int, ...]:
        return tuple(k for k, _ in self.items)

    def __add__(self, other: "WittElement") -> "WittElement":
        out = self.coeffs
        for k, c in other.items:
            out[k] = out.get(k, 0) + c
        return WittElement.from_coeffs(out)

    def __neg__(self) -> "WittElement":
        return WittElement(tuple((k, -c) for k, c in self.items))

    def __sub__(self, other: "WittElement") -> "WittElement":
        return self + (-other)

    def __rmul__(self, n: int) -> "WittElement":
        if not isinstance(n, int):
            return NotImplemented
        return WittElement.from_coeffs({k: n * c for k, c in self.items})

    def __mul__(self, other):
        if isinstance(other, int):
            return self.__rmul__(other)
        if not isinstance(other, WittElement):
            return NotImplemented
        out: dict[int, int] = {}
        for a, ca in self.items:
            for b, cb in other.items:
                g = gcd(a, b)
                key = lcm(a, b)
                out[key] = out.get(key, 0) + ca * cb * g
        return WittElement.from_coeffs(out)

    def to_json(self) -> str:
        return _json.dumps({str(k): c for k, c in self.items}, sort_keys=True)

    @staticmethod
    def from_json(text: str) -> "WittElement":
        data = _json.loads(text)
        if not isinstance(data, dict):
            raise ValueError("Witt element JSON must be an object {cycle length: coefficient}")
        return WittElement.from_coeffs({int(k): int(c) for k, c in data.items()})


def tau(t: PointedEndo) -> WittElement:
    """Universal additive invariant: the cycle type of t on its eventual image."""
    return WittElement.from_coeffs(cycle_type(t))


def ghost(w: WittElement, n: int) -> int:
    """n-th ghost component: sum over k | n of k * m(k); equals trace(T^n)."""
    if n < 1:
        raise ValueError("ghost components are indexed by positive integers")
    return sum(k * c for k, c in w.items if n % k == 0)


def ghost_vector(w: WittElement, n_max: int) -> dict[int, int]:
    """Ghost components on the divisor-closed set of divisors of 1..n_max."""
    return {n: ghost(w, n) for n in range(1, n_max + 1)}


def from_ghost(values: Mapping[int, int]) -> WittElement:
    """Recover the element from its ghost components by Mobius inversion.

    values must be given on a divisor-closed index set; a ghost vector that
    does not invert to integer coefficients is rejected as inconsistent.
    """
    index = set(values)
    for n in index:
        if n < 1:
            raise ValueError("ghost indices must be positive integers")
        missing = [d for d in divisors(n) if d not in index]
        if missing:
            raise ValueError(f"ghost vector not divisor-closed: index {n} lacks divisors {missing}")
    coeffs: dict[int, int] = {}
    for k in sorted(index):
        total = sum(mobius(k // d) * values[d] for d in divisors(k))
        if total % k != 0:
            raise ValueError(f"inconsistent ghost vector: Mobius sum at {k} is {total}, not divisible by {k}")
        coeffs[k] = total // k
    return WittElement.from_coeffs(coeffs)


def frobenius(n: int, w: WittElement) -> WittElement:
    """Frobenius operator T -> T^n: C(k) -> gcd(n,k) copies of C(k/gcd(n,k))."""
    if n < 1:
        raise ValueError("Frobenius index must be >= 1")
    out: dict[int, int] = {}
    for k, c in w.items:
        g = gcd(n, k)
        key = k // g
        out[key] = out.get(key, 0) + c * g
    return WittElement.from_coeffs(out)


def verschiebung(n: int, w: WittElement) -> WittElement:
    """Verschiebung operator (odometer): C(k) -> C(nk)."""
    if n < 1:
        raise ValueError("Verschiebung index must be >= 1")
    return WittElement.from_coeffs({n * k: c for k, c in w.items})


def to_primitive_basis(w: WittElement) -> dict[int, int]:
    """Coefficients in the primitive basis rho, where C(n) = sum over u | n of rho(u)."""
    out: dict[int, int] = {}
    for k, _ in w.items:
        for u in divisors(k):
            out.setdefault(u, 0)
    for u in list(out):
        out[u] = sum(c for k, c in w.items if k % u == 0)
    return {u: c for u, c in sorted(out.items()) if c != 0}


def from_primitive_basis(prim: Mapping[int, int]) -> WittElement:
    """Inverse change of basis: rho(u) = sum over d | u of mu(u/d) * C(d)."""
    coeffs: dict[int, int] = {}
    for u, c in prim.items():
        if u < 1:
            raise ValueError("primitive basis indices must be positive integers")
        for d in divisors(u):
            coeffs[d] = coeffs.get(d, 0) + c * mobius(u // d)
    return WittElement.from_coeffs(coeffs)
