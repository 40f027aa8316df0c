"""Buchberger's algorithm, staircase dimension counts, and the constant-term ideals."""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from typing import Optional, Sequence

from .algebra import QQ, FieldMismatchError, MultiPoly
from .laurent import LaurentSpec, constant_term_iterative


@dataclass(frozen=True)
class TermOrder:
    """Monomial order: degrevlex or lex, with an explicit variable priority.

    priority lists variable positions from most to least significant; it
    defaults to position order (x_{offset} > x_{offset+1} > ...).
    """

    kind: str = "degrevlex"
    priority: Optional[tuple] = None

    def __post_init__(self):
        if self.kind not in ("degrevlex", "lex"):
            raise ValueError(f"unknown order kind {self.kind!r}")
        if self.priority is not None:
            object.__setattr__(self, "priority", tuple(self.priority))

    def key(self, nvars: int):
        prio = self.priority if self.priority is not None else tuple(range(nvars))
        if sorted(prio) != list(range(nvars)):
            raise ValueError("priority must be a permutation of the variable positions")
        if self.kind == "lex":
            return lambda e: tuple(e[p] for p in prio)
        rev = tuple(reversed(prio))
        return lambda e: (sum(e), tuple(-e[p] for p in rev))


def _monomial_divides(a: tuple, b: tuple) -> bool:
    return all(x <= y for x, y in zip(a, b))


def _monomial_lcm(a: tuple, b: tuple) -> tuple:
    return tuple(max(x, y) for x, y in zip(a, b))


def _monomial_sub(a: tuple, b: tuple) -> tuple:
    return tuple(x - y for x, y in zip(a, b))


def _make_primitive(p: MultiPoly) -> MultiPoly:
    """Over QQ, scale to integer coefficients with content 1 and positive lead."""
    if p.field != QQ or p.is_zero:
        return p
    den = 1
    for c in p.terms.values():
        den = den * Fraction(c).denominator // math.gcd(den, Fraction(c).denominator)
    num = 0
    for c in p.terms.values():
        num = math.gcd(num, abs(Fraction(c).numerator * (den // Fraction(c).denominator)))
    scale = Fraction(den, num)
    return p.scale(scale)


class GroebnerBasis:
    """Reduced Groebner basis: monic, interreduced, deterministic element order."""

    def __init__(self, elements: Sequence[MultiPoly], order: TermOrder, nvars: int, offset: int, field):
        self.order = order
        self.nvars = nvars
        self.offset = offset
        self.field = field
        self._key = order.key(nvars)
        self.elements = list(elements)
        self.leading = [self._lm(g) for g in self.elements]

    def _lm(self, p: MultiPoly) -> tuple:
        return max(p.terms, key=self._key)

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    @property
    def is_unit(self) -> bool:
        return len(self.elements) == 1 and self.leading[0] == (0,) * self.nvars


def leading_term(p: MultiPoly, order: TermOrder):
    if p.is_zero:
        raise ValueError("zero polynomial has no leading term")
    key = order.key(p.nvars)
    e = max(p.terms, key=key)
    return e, p.terms[e]


def _reduce(p: MultiPoly, reducers, lms, order_key, field) -> MultiPoly:
    """Full normal form of p modulo the reducers (tail reduction included)."""
    nvars, offset = p.nvars, p.offset
    remainder: dict = {}
    work = dict(p.terms)
    add, sub, mul, div = field.add, field.sub, field.mul, field.div
    while work:
        e = max(work, key=order_key)
        c = work.pop(e)
        for g, lm in zip(reducers, lms):
            if _monomial_divides(lm, e):
                shift = _monomial_sub(e, lm)
                factor = div(c, g.terms[lm])
                for ge, gc in g.terms.items():
                    if ge == lm:
                        continue
                    te = tuple(x + y for x, y in zip(ge, shift))
                    v = mul(factor, gc)
                    if te in work:
                        s = sub(work[te], v)
                        if s:
                            work[te] = s
                        else:
                            del work[te]
                    else:
                        nv = field.neg(v)
                        if nv:
                            work[te] = nv
                break
        else:
            remainder[e] = c
    return MultiPoly(remainder, nvars, offset, field)


def normal_form(p: MultiPoly, G: GroebnerBasis) -> MultiPoly:
    """Remainder of p on division by G; zero iff p lies in the ideal of G."""
    if p.field != G.field:
        raise FieldMismatchError(f"polynomial over {p.field!r}, basis over {G.field!r}")
    if (p.nvars, p.offset) != (G.nvars, G.offset):
        raise ValueError("variable window mismatch")
    if p.is_zero:
        return p
    return _reduce(p, G.elements, G.leading, G._key, G.field)


def s_polynomial(f: MultiPoly, g: MultiPoly, order: TermOrder) -> MultiPoly:
    ef, cf = leading_term(f, order)
    eg, cg = leading_term(g, order)
    lcm = _monomial_lcm(ef, eg)
    fld = f.field
    mf = MultiPoly({_monomial_sub(lcm, ef): fld.inv(cf)}, f.nvars, f.offset, fld)
    mg = MultiPoly({_monomial_sub(lcm, eg): fld.inv(cg)}, f.nvars, f.offset, fld)
    return mf * f - mg * g


def buchberger(generators: Sequence[MultiPoly], order: TermOrder = TermOrder()) -> GroebnerBasis:
    """Reduced Groebner basis by Buchberger's algorithm.

    Normal (degree-minimal) pair selection with the product and chain criteria;
    ties broken by generator index, so the result is deterministic.
    """
    gens = [g for g in generators if not g.is_zero]
    if not gens:
        raise ValueError("need at least one nonzero generator")
    nvars, offset, field = gens[0].nvars, gens[0].offset, gens[0].field
    for g in gens:
        if g.field != field:
            raise FieldMismatchError("generators over mixed fields")
        if (g.nvars, g.offset) != (nvars, offset):
            raise ValueError("generators over mixed variable windows")
    key = order.key(nvars)

    basis = [_make_primitive(g) for g in gens]
    lms = [max(g.terms, key=key) for g in basis]
    pairs = {(i, j) for i in range(len(basis)) for j in range(i + 1, len(basis))}
    done = set()

    def pair_rank(pair):
        i, j = pair
        lcm = _monomial_lcm(lms[i], lms[j])
        return (sum(lcm), key(lcm), i, j)

    while pairs:
        i, j = min(pairs, key=pair_rank)
        pairs.discard((i, j))
        done.add((i, j))
        li, lj = lms[i], lms[j]
        lcm = _monomial_lcm(li, lj)
        # product criterion: coprime leading monomials
        if all(a + b == c for a, b, c in zip(li, lj, lcm)):
            continue
        # chain criterion
        skip = False
        for k in range(len(basis)):
            if k in (i, j):
                continue
            if _monomial_divides(lms[k], lcm):
                pik = (min(i, k), max(i, k))
                pjk = (min(j, k), max(j, k))
                if pik in done and pjk in done:
                    skip = True
                    break
        if skip:
            continue
        s = s_polynomial(basis[i], basis[j], order)
        r = _reduce(s, basis, lms, key, field) if not s.is_zero else s
        if r.is_zero:
            continue
        r = _make_primitive(r)
        t = len(basis)
        basis.append(r)
        lms.append(max(r.terms, key=key))
        pairs.update((u, t) for u in range(t))

    # minimalize: drop elements whose leading monomial is divisible by another's
    keep = []
    for i in range(len(basis)):
        if not any(
            k != i
            and _monomial_divides(lms[k], lms[i])
            and (lms[k] != lms[i] or k < i)
            for k in range(len(basis))
        ):
            keep.append(i)
    minimal = [basis[i] for i in keep]
    # interreduce tails and make monic
    reduced = []
    for t, g in enumerate(minimal):
        others = minimal[:t] + minimal[t + 1 :]
        olms = [max(h.terms, key=key) for h in others]
        r = _reduce(g, others, olms, key, field) if others else g
        lc = r.terms[max(r.terms, key=key)]
        reduced.append(r.scale(field.inv(lc)))
    reduced.sort(key=lambda g: key(max(g.terms, key=key)))
    return GroebnerBasis(reduced, order, nvars, offset, field)


INFINITE = "infinite"


def quotient_dimension(G: GroebnerBasis):
    """Vector-space dimension of the quotient ring: the staircase count.

    Returns the exact natural number, or the string "infinite" when some
    variable has no pure power among the leading monomials.
    """
    lms = G.leading
    if any(not any(e) for e in lms):
        return 0  # unit ideal
    nvars = G.nvars
    bounds = []
    for v in range(nvars):
        pure = [e[v] for e in lms if sum(e) == e[v]]
        if not pure:
            return INFINITE
        bounds.append(min(pure))
    count = 0
    for mono in itertools.product(*(range(b) for b in bounds)):
        if not any(_monomial_divides(lm, mono) for lm in lms):
            count += 1
    return count


def staircase_monomials(G: GroebnerBasis) -> list:
    """The monomials outside the leading-term ideal (finite case only)."""
    lms = G.leading
    nvars = G.nvars
    bounds = []
    for v in range(nvars):
        pure = [e[v] for e in lms if sum(e) == e[v]]
        if not pure:
            raise ValueError("quotient is infinite-dimensional")
        bounds.append(min(pure))
    return sorted(
        mono
        for mono in itertools.product(*(range(b) for b in bounds))
        if not any(_monomial_divides(lm, mono) for lm in lms)
    )


@dataclass(frozen=True)
class IdealSpec:
    """The constant-term ideal data: window, power range, field, homogeneity."""

    m: int
    n: int
    max_power: Optional[int] = None  # default m+n-1; use m+n for the unit-ideal system
    field: object = QQ
    dehomogenized: bool = True
    support: Optional[frozenset] = None

    def __post_init__(self):
        if self.m < 1 or self.n < 1:
            raise ValueError("m and n must be positive")
        if self.max_power is None:
            object.__setattr__(self, "max_power", self.m + self.n - 1)
        if self.max_power < 1:
            raise ValueError("max_power must be positive")
        if self.support is not None:
            object.__setattr__(self, "support", frozenset(self.support))


def build_ideal(spec: IdealSpec) -> list:
    """Generators: constant terms of the powers 1..max_power, optionally with
    the endpoint variables set to 1 (the dehomogenized window)."""
    lspec = LaurentSpec(spec.m, spec.n, spec.support, spec.field)
    gens = []
    for i in range(1, spec.max_power + 1):
        g = constant_term_iterative(lspec, i).value
        if spec.dehomogenized:
            g = g.substitute({-spec.m: 1, spec.n: 1})
            g = g.restrict(-spec.m + 1, spec.m + spec.n - 1)
        gens.append(g)
    return gens


def groebner_of_ideal(spec: IdealSpec, order: TermOrder = TermOrder()) -> GroebnerBasis:
    return buchberger(build_ideal(spec), order)


def ideal_quotient_dimension(m: int, n: int, field=QQ, order: TermOrder = TermOrder()):
    """Degree of the constant-term ideal with powers 1..m+n-1."""
    return quotient_dimension(
        groebner_of_ideal(IdealSpec(m, n, field=field), order)
    )


def is_unit_ideal(spec: IdealSpec, order: TermOrder = TermOrder()) -> bool:
    """True iff the powers in the spec's range generate the whole ring."""
    if not spec.dehomogenized:
        raise ValueError("the unit-ideal test is posed in the dehomogenized ring")
    return groebner_of_ideal(spec, order).is_unit


def conjecture_unit_check(m: int, n: int, field=QQ) -> bool:
    """Finite evidence only: whether powers 1..m+n generate the unit ideal."""
    return is_unit_ideal(IdealSpec(m, n, max_power=m + n, field=field))
