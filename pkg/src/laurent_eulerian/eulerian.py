"""Eulerian numbers, their d-step generalization, and circular-permutation orbits."""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterator


class EnumerationCapError(ValueError):
    """Requested exhaustive enumeration above the configured cap."""


class GenEulerianDomainError(ValueError):
    """The step d does not divide k+1 (the generalized table is undefined there)."""


_eulerian_memo: dict = {}


def eulerian(n: int, k: int) -> int:
    """Number of permutations of {1,...,n} with exactly k ascents.

    Recurrence <n,k> = (k+1)<n-1,k> + (n-k)<n-1,k-1>; zero outside 0 <= k <= n-1
    (except <0,0> = 1 for the empty permutation).
    """
    if n < 0:
        raise ValueError("n must be a natural number")
    if n == 0:
        return 1 if k == 0 else 0
    if k < 0 or k > n - 1:
        return 0
    key = (n, k)
    v = _eulerian_memo.get(key)
    if v is None:
        v = (k + 1) * eulerian(n - 1, k) + (n - k) * eulerian(n - 1, k - 1)
        _eulerian_memo[key] = v
    return v


def ascents(seq) -> int:
    return sum(1 for a, b in zip(seq, seq[1:]) if a < b)


def eulerian_bruteforce(n: int, k: int, cap: int = 9) -> int:
    """<n,k> by exhaustive enumeration of all n! permutations."""
    if n < 0:
        raise ValueError("n must be a natural number")
    if n > cap:
        raise EnumerationCapError(f"n = {n} exceeds the enumeration cap {cap}")
    return sum(
        1 for p in itertools.permutations(range(1, n + 1)) if ascents(p) == k
    )


def _unipoly_mul(a: list, b: list) -> list:
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def worpitzky_check(k: int) -> bool:
    """Exact coefficient-wise check of z^k = sum_i <k,i> C(z+i, k) over QQ."""
    if k < 1:
        raise ValueError("k must be positive")
    rhs = [Fraction(0)] * (k + 1)
    inv_kfact = Fraction(1, math.factorial(k))
    for i in range(k):
        e = eulerian(k, i)
        if not e:
            continue
        # C(z+i, k) = (z+i)(z+i-1)...(z+i-k+1) / k!
        prod = [Fraction(1)]
        for t in range(k):
            prod = _unipoly_mul(prod, [Fraction(i - t), Fraction(1)])
        for j, c in enumerate(prod):
            rhs[j] += e * c * inv_kfact
    lhs = [Fraction(0)] * (k + 1)
    lhs[k] = Fraction(1)
    return rhs == lhs


_gen_memo: dict = {}


def gen_eulerian(k: int, ell: int, d: int) -> int:
    """Generalized Eulerian number with step d, defined when d divides k+1.

    Base row k = d-1: 1 if gcd(ell+1, d) = 1 else 0, for 0 <= ell <= d-1.
    Otherwise (ell+1)*T(k-d, ell) + (k-ell)*T(k-d, ell-d).  Zero outside [0, k].
    """
    if d < 1:
        raise ValueError("d must be a positive integer")
    if k < 0:
        raise ValueError("k must be a natural number")
    if (k + 1) % d != 0:
        raise GenEulerianDomainError(f"d = {d} does not divide k+1 = {k + 1}")
    if ell < 0 or ell > k:
        return 0
    key = (k, ell, d)
    v = _gen_memo.get(key)
    if v is None:
        if k == d - 1:
            v = 1 if math.gcd(ell + 1, d) == 1 else 0
        else:
            v = (ell + 1) * gen_eulerian(k - d, ell, d) + (k - ell) * gen_eulerian(
                k - d, ell - d, d
            )
        _gen_memo[key] = v
    return v


def mobius(n: int) -> int:
    """Classical Moebius function, by trial-division factorization."""
    if n < 1:
        raise ValueError("n must be positive")
    out = 1
    p = 2
    while p * p <= n:
        if n % p == 0:
            n //= p
            if n % p == 0:
                return 0
            out = -out
        p += 1 if p == 2 else 2
    if n > 1:
        out = -out
    return out


def divisors(n: int) -> list:
    small = [d for d in range(1, int(math.isqrt(n)) + 1) if n % d == 0]
    large = [n // d for d in reversed(small) if d * d != n]
    return small + large


@dataclass(frozen=True, order=True)
class CircularPermutation:
    """Cyclic arrangement of {0,...,N-1}, canonically rotated to start at 0."""

    elements: tuple

    def __post_init__(self):
        elems = tuple(self.elements)
        if sorted(elems) != list(range(len(elems))):
            raise ValueError("elements must be a permutation of 0..N-1")
        if elems[0] != 0:
            z = elems.index(0)
            elems = elems[z:] + elems[:z]
        object.__setattr__(self, "elements", elems)

    @property
    def size(self) -> int:
        return len(self.elements)

    def circular_ascents(self) -> int:
        e = self.elements
        return sum(1 for t in range(len(e)) if e[t] < e[(t + 1) % len(e)])

    def add_one(self) -> "CircularPermutation":
        n = len(self.elements)
        return CircularPermutation(tuple((v + 1) % n for v in self.elements))


def circular_ascents(c: CircularPermutation) -> int:
    return c.circular_ascents()


@lru_cache(maxsize=8)
def _ascent_classes(N: int) -> dict:
    """All canonical circular permutations of {0,...,N-1}, keyed by ascent count."""
    buckets: dict = {}
    for rest in itertools.permutations(range(1, N)):
        e = (0,) + rest
        a = sum(1 for t in range(N) if e[t] < e[(t + 1) % N])
        buckets.setdefault(a, []).append(e)
    return buckets


@dataclass(frozen=True)
class OrbitDecomposition:
    N: int
    ascents: int
    orbits: tuple  # tuple of tuples of CircularPermutation, each sorted

    @property
    def sizes(self) -> list:
        return sorted(len(o) for o in self.orbits)

    @property
    def representatives(self) -> list:
        return [min(o) for o in self.orbits]

    @property
    def total(self) -> int:
        return sum(len(o) for o in self.orbits)


def orbit_decomposition(N: int, a: int, cap: int = 11) -> OrbitDecomposition:
    """Orbits of the add-1 action on circular permutations with a circular ascents."""
    if N < 2:
        raise ValueError("N must be at least 2")
    if N > cap:
        raise EnumerationCapError(f"N = {N} exceeds the enumeration cap {cap}")
    members = sorted(_ascent_classes(N).get(a, ()))
    pending = set(members)
    orbits = []
    for elems in members:
        if elems not in pending:
            continue
        start = CircularPermutation(elems)
        orbit = [start]
        cur = start.add_one()
        while cur != start:
            orbit.append(cur)
            cur = cur.add_one()
        for c in orbit:
            pending.discard(c.elements)
        orbits.append(tuple(sorted(set(orbit))))
    orbits.sort(key=lambda o: (len(o), o[0]))
    return OrbitDecomposition(N, a, tuple(orbits))


def deg_Z_circle(m: int, n: int, d: int) -> int:
    """Moebius-inverted degree of the singularity stratum indexed by d | m+n."""
    if m < 1 or n < 1:
        raise ValueError("m and n must be positive")
    if (m + n) % d != 0:
        raise ValueError(f"d = {d} does not divide m+n = {m + n}")
    return sum(
        mobius(c) * gen_eulerian(m + n - 1, m - 1, c * d)
        for c in divisors((m + n) // d)
    )
