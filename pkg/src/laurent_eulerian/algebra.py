"""Exact coefficient fields, sparse multivariate polynomials, and exact linear algebra.

Everything here is immutable after construction and all arithmetic is exact:
rationals are arbitrary-precision, prime-field residues are reduced ints.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Sequence


class FieldMismatchError(TypeError):
    """Operands live over different coefficient fields."""


class ZeroPolynomialError(ValueError):
    """The operation requires a nonzero polynomial."""


def _is_prime(p: int) -> bool:
    # deterministic Miller-Rabin, valid for word-sized integers
    if p < 2:
        return False
    for q in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if p % q == 0:
            return p == q
    d, s = p - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        x = pow(a, d, p)
        if x in (1, p - 1):
            continue
        for _ in range(s - 1):
            x = x * x % p
            if x == p - 1:
                break
        else:
            return False
    return True


class RationalField:
    """The rationals, with values stored as ints or Fractions in lowest terms."""

    zero = Fraction(0)
    one = Fraction(1)

    def coerce(self, v):
        if isinstance(v, (int, Fraction)):
            return v
        raise TypeError(f"cannot coerce {v!r} into QQ")

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def inv(self, a):
        if not a:
            raise ZeroDivisionError("inverse of zero")
        return Fraction(1) / a

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("QQ")

    def __repr__(self):
        return "QQ"


QQ = RationalField()


class PrimeField:
    """Integers modulo a word-sized prime, residues kept in [0, p-1]."""

    def __init__(self, p: int):
        if not _is_prime(p):
            raise ValueError(f"{p} is not prime")
        self.p = p
        self.zero = 0
        self.one = 1 % p

    def coerce(self, v):
        if isinstance(v, int):
            return v % self.p
        if isinstance(v, Fraction):
            den = v.denominator % self.p
            if den == 0:
                raise ZeroDivisionError(f"denominator of {v} vanishes mod {self.p}")
            return v.numerator * pow(den, -1, self.p) % self.p
        raise TypeError(f"cannot coerce {v!r} into GF({self.p})")

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return a * b % self.p

    def neg(self, a):
        return -a % self.p

    def inv(self, a):
        if a % self.p == 0:
            raise ZeroDivisionError("inverse of zero")
        return pow(a, -1, self.p)

    def div(self, a, b):
        return a * self.inv(b) % self.p

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("GF", self.p))

    def __repr__(self):
        return f"GF({self.p})"


def _check_same_field(fa, fb):
    if fa != fb:
        raise FieldMismatchError(f"mixed fields {fa!r} and {fb!r}")


class MultiPoly:
    """Sparse multivariate polynomial over an exact field.

    Variables are x_{offset}, ..., x_{offset+nvars-1}; an exponent vector is a
    tuple of nvars naturals, position t holding the exponent of x_{offset+t}.
    The window-index grading assigns deg(x_j) = (1, j), so a monomial with
    exponents u has bidegree (|u|, sum_j j*u_j).
    """

    __slots__ = ("terms", "nvars", "offset", "field")

    def __init__(self, terms: Mapping[tuple, object], nvars: int, offset: int, field):
        clean = {}
        for exps, c in terms.items():
            if len(exps) != nvars:
                raise ValueError(f"exponent vector {exps} has wrong length (want {nvars})")
            c = field.coerce(c)
            if c:
                clean[tuple(exps)] = c
        self.terms = clean
        self.nvars = nvars
        self.offset = offset
        self.field = field

    @classmethod
    def zero(cls, nvars: int, offset: int, field) -> "MultiPoly":
        return cls({}, nvars, offset, field)

    @classmethod
    def constant(cls, c, nvars: int, offset: int, field) -> "MultiPoly":
        return cls({(0,) * nvars: c}, nvars, offset, field)

    @classmethod
    def variable(cls, j: int, nvars: int, offset: int, field) -> "MultiPoly":
        if not offset <= j < offset + nvars:
            raise ValueError(f"variable index {j} outside window [{offset}, {offset + nvars - 1}]")
        exps = [0] * nvars
        exps[j - offset] = 1
        return cls({tuple(exps): field.one}, nvars, offset, field)

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def _check_compatible(self, other: "MultiPoly"):
        _check_same_field(self.field, other.field)
        if (self.nvars, self.offset) != (other.nvars, other.offset):
            raise ValueError(
                f"incompatible variable windows {(self.offset, self.nvars)} vs "
                f"{(other.offset, other.nvars)}"
            )

    def __add__(self, other):
        if not isinstance(other, MultiPoly):
            return NotImplemented
        self._check_compatible(other)
        add = self.field.add
        out = dict(self.terms)
        for exps, c in other.terms.items():
            if exps in out:
                s = add(out[exps], c)
                if s:
                    out[exps] = s
                else:
                    del out[exps]
            else:
                out[exps] = c
        p = MultiPoly.__new__(MultiPoly)
        p.terms, p.nvars, p.offset, p.field = out, self.nvars, self.offset, self.field
        return p

    def __neg__(self):
        neg = self.field.neg
        out = {e: neg(c) for e, c in self.terms.items()}
        p = MultiPoly.__new__(MultiPoly)
        p.terms, p.nvars, p.offset, p.field = out, self.nvars, self.offset, self.field
        return p

    def __sub__(self, other):
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self + (-other)

    def scale(self, c) -> "MultiPoly":
        c = self.field.coerce(c)
        if not c:
            return MultiPoly.zero(self.nvars, self.offset, self.field)
        mul = self.field.mul
        out = {e: mul(coef, c) for e, coef in self.terms.items()}
        out = {e: v for e, v in out.items() if v}
        p = MultiPoly.__new__(MultiPoly)
        p.terms, p.nvars, p.offset, p.field = out, self.nvars, self.offset, self.field
        return p

    def __mul__(self, other):
        if not isinstance(other, MultiPoly):
            try:
                return self.scale(other)
            except TypeError:
                return NotImplemented
        self._check_compatible(other)
        add, mul = self.field.add, self.field.mul
        out: dict = {}
        a, b = self.terms, other.terms
        if len(a) < len(b):
            a, b = b, a
        for e1, c1 in a.items():
            for e2, c2 in b.items():
                e = tuple(x + y for x, y in zip(e1, e2))
                c = mul(c1, c2)
                if e in out:
                    s = add(out[e], c)
                    if s:
                        out[e] = s
                    else:
                        del out[e]
                elif c:
                    out[e] = c
        p = MultiPoly.__new__(MultiPoly)
        p.terms, p.nvars, p.offset, p.field = out, self.nvars, self.offset, self.field
        return p

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return (
            self.field == other.field
            and (self.nvars, self.offset) == (other.nvars, other.offset)
            and self.terms == other.terms
        )

    def sorted_terms(self) -> list:
        """Terms sorted by exponent vector; the canonical iteration order."""
        return sorted(self.terms.items())

    def graded_degree(self):
        """Bidegree (total, weight) if homogeneous for deg(x_j) = (1, j), else None."""
        if not self.terms:
            raise ZeroPolynomialError("graded degree of the zero polynomial")
        weights = range(self.offset, self.offset + self.nvars)
        deg = None
        for exps in self.terms:
            d = (sum(exps), sum(w * u for w, u in zip(weights, exps)))
            if deg is None:
                deg = d
            elif d != deg:
                return None
        return deg

    def substitute(self, values: Mapping[int, object]) -> "MultiPoly":
        """Set variables x_j to the given scalars; other variables are kept."""
        positions = {j - self.offset: self.field.coerce(v) for j, v in values.items()}
        mul = self.field.mul
        out = MultiPoly.zero(self.nvars, self.offset, self.field)
        acc: dict = {}
        add = self.field.add
        for exps, c in self.terms.items():
            for t, v in positions.items():
                u = exps[t]
                if u:
                    for _ in range(u):
                        c = mul(c, v)
                    if not c:
                        break
            if not c:
                continue
            e = tuple(0 if t in positions else u for t, u in enumerate(exps))
            if e in acc:
                s = add(acc[e], c)
                if s:
                    acc[e] = s
                else:
                    del acc[e]
            else:
                acc[e] = c
        out.terms.update(acc)
        return out

    def restrict(self, offset: int, nvars: int) -> "MultiPoly":
        """Reindex onto a sub-window; exponents outside it must vanish."""
        lo, hi = offset - self.offset, offset - self.offset + nvars
        out = {}
        for exps, c in self.terms.items():
            if any(exps[t] for t in range(self.nvars) if not lo <= t < hi):
                raise ValueError("polynomial involves variables outside the target window")
            out[exps[lo:hi]] = c
        return MultiPoly(out, nvars, offset, self.field)

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for exps, c in self.sorted_terms():
            mono = "*".join(
                f"x_{self.offset + t}" + (f"^{u}" if u > 1 else "")
                for t, u in enumerate(exps)
                if u
            )
            if not mono:
                parts.append(str(c))
            elif c == self.field.one:
                parts.append(mono)
            else:
                parts.append(f"{c}*{mono}")
        return " + ".join(parts)

    def __repr__(self):
        return f"MultiPoly({self}, window=[{self.offset}, {self.offset + self.nvars - 1}], {self.field!r})"


try:
    from gmpy2 import mpq as _fastq
except ImportError:  # pragma: no cover
    _fastq = Fraction


class ExactMatrix:
    """Dense matrix over an exact field; rank and solve by Gaussian elimination."""

    def __init__(self, rows: Sequence[Sequence[object]], field):
        self.rows = [[field.coerce(v) for v in row] for row in rows]
        self.nrows = len(self.rows)
        self.ncols = len(self.rows[0]) if self.rows else 0
        if any(len(r) != self.ncols for r in self.rows):
            raise ValueError("ragged rows")
        self.field = field

    def rank(self) -> int:
        _, pivots = self._echelon(self._work_rows())
        return len(pivots)

    def solve(self, rhs: Sequence[object]):
        """A solution of A x = rhs, or None if inconsistent.

        Free columns are set to zero; the solution is deterministic.
        """
        if len(rhs) != self.nrows:
            raise ValueError("right-hand side has wrong length")
        fld = self.field
        aug = self._work_rows()
        extra = [self._to_work(fld.coerce(v)) for v in rhs]
        for r, v in zip(aug, extra):
            r.append(v)
        rows, pivots = self._echelon(aug)
        n = self.ncols
        if any(col == n for _, col in pivots):
            return None
        # RREF with free columns set to zero: each pivot row reads off directly
        x = [self.field.zero] * n
        for row, col in pivots:
            x[col] = self._from_work(rows[row][n])
        return x

    # -- internals ------------------------------------------------------

    def _uses_fastq(self) -> bool:
        return self.field == QQ and _fastq is not Fraction

    def _to_work(self, v):
        if self._uses_fastq():
            return _fastq(v)
        return v

    def _from_work(self, v):
        if self._uses_fastq():
            return Fraction(int(v.numerator), int(v.denominator))
        return self.field.coerce(v)

    def _work_rows(self):
        return [[self._to_work(v) for v in row] for row in self.rows]

    def _echelon(self, rows):
        """Reduced row echelon form in place; returns (rows, [(row, pivot_col)])."""
        fld = self.field
        fast = self._uses_fastq()
        ncols = len(rows[0]) if rows else 0
        pivots = []
        r = 0
        for c in range(ncols):
            pr = next((i for i in range(r, len(rows)) if rows[i][c]), None)
            if pr is None:
                continue
            rows[r], rows[pr] = rows[pr], rows[r]
            piv = rows[r][c]
            if fast:
                inv = 1 / piv
                rows[r] = [v * inv for v in rows[r]]
                for i in range(len(rows)):
                    if i != r and rows[i][c]:
                        f = rows[i][c]
                        rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
            else:
                inv = fld.inv(piv)
                rows[r] = [fld.mul(v, inv) for v in rows[r]]
                for i in range(len(rows)):
                    if i != r and rows[i][c]:
                        f = rows[i][c]
                        rows[i] = [
                            fld.sub(a, fld.mul(f, b)) for a, b in zip(rows[i], rows[r])
                        ]
            pivots.append((r, c))
            r += 1
            if r == len(rows):
                break
        return rows, pivots


def exact_rank(rows: Iterable[Sequence[object]], field=QQ) -> int:
    """Rank of a matrix given as an iterable of rows, over the given field."""
    rows = list(rows)
    if not rows:
        return 0
    return ExactMatrix(rows, field).rank()
