"""Sparse multivariate polynomials with arbitrary-precision integer coefficients.

Monomials are packed into a single Python int: one ``FIELD_BITS``-wide field
holding the total degree, followed by one field per variable with x_1 most
significant.  Integer comparison of packed keys is then graded lexicographic
order, and multiplying monomials is adding their keys.  The top bit of every
field is a guard bit kept at zero, which turns divisibility of monomials into
a single subtraction.
"""
from __future__ import annotations

import heapq
from collections.abc import Iterable, Iterator, Mapping, Sequence
from math import comb

from sympy import isprime

FIELD_BITS = 24
_MASK = (1 << FIELD_BITS) - 1
MAX_DEGREE = (1 << (FIELD_BITS - 1)) - 1


class PolynomialError(ValueError):
    pass


_layouts: dict[int, tuple[int, int]] = {}


def _guard(n: int) -> int:
    try:
        return _layouts[n][0]
    except KeyError:
        g = sum(1 << (FIELD_BITS - 1 + FIELD_BITS * i) for i in range(n + 1))
        _layouts[n] = (g, FIELD_BITS * n)
        return g


def pack(exps: Sequence[int]) -> int:
    n = len(exps)
    deg = 0
    key = 0
    for e in exps:
        if e < 0:
            raise PolynomialError("negative exponent")
        deg += e
        key = (key << FIELD_BITS) | e
    if deg > MAX_DEGREE:
        raise PolynomialError(f"total degree {deg} exceeds {MAX_DEGREE}")
    return (deg << (FIELD_BITS * n)) | key


def unpack(key: int, n: int) -> tuple[int, ...]:
    return tuple((key >> (FIELD_BITS * (n - 1 - i))) & _MASK for i in range(n))


def _degree_of(key: int, n: int) -> int:
    return key >> (FIELD_BITS * n)


class SparsePolynomial:
    """Immutable element of Z[x_1, ..., x_n].

    ``terms`` maps packed monomials to nonzero integer coefficients; use
    :meth:`from_terms` to build from exponent tuples.
    """

    __slots__ = ("nvars", "_terms", "_hash")

    def __init__(self, nvars: int, terms: Mapping[int, int] | None = None):
        self.nvars = nvars
        self._terms = {k: c for k, c in (terms or {}).items() if c}
        self._hash = None

    # -- construction -------------------------------------------------------

    @classmethod
    def from_terms(cls, nvars: int, terms: Mapping[Sequence[int], int] | Iterable[tuple[Sequence[int], int]]):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[int, int] = {}
        for exps, c in items:
            if len(exps) != nvars:
                raise PolynomialError(f"monomial {tuple(exps)} has wrong length for {nvars} variables")
            k = pack(exps)
            acc[k] = acc.get(k, 0) + int(c)
        return cls(nvars, acc)

    @classmethod
    def zero(cls, nvars: int) -> SparsePolynomial:
        return cls(nvars)

    @classmethod
    def constant(cls, value: int, nvars: int) -> SparsePolynomial:
        return cls(nvars, {0: int(value)})

    @classmethod
    def variable(cls, index: int, nvars: int) -> SparsePolynomial:
        """The polynomial x_index (1-based)."""
        if not 1 <= index <= nvars:
            raise PolynomialError(f"variable index {index} outside [1, {nvars}]")
        exps = [0] * nvars
        exps[index - 1] = 1
        return cls(nvars, {pack(exps): 1})

    # -- inspection ---------------------------------------------------------

    def items(self) -> Iterator[tuple[tuple[int, ...], int]]:
        """(exponents, coefficient) pairs in canonical order, leading term first."""
        n = self.nvars
        for k in sorted(self._terms, reverse=True):
            yield unpack(k, n), self._terms[k]

    def as_dict(self) -> dict[tuple[int, ...], int]:
        return dict(self.items())

    @property
    def packed_terms(self) -> Mapping[int, int]:
        return self._terms

    def __len__(self) -> int:
        return len(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        if not self._terms:
            return -1
        return _degree_of(max(self._terms), self.nvars)

    def leading_term(self) -> tuple[tuple[int, ...], int]:
        if not self._terms:
            raise PolynomialError("zero polynomial has no leading term")
        k = max(self._terms)
        return unpack(k, self.nvars), self._terms[k]

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            return self._terms == ({0: other} if other else {})
        if not isinstance(other, SparsePolynomial):
            return NotImplemented
        return self.nvars == other.nvars and self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.nvars, frozenset(self._terms.items())))
        return self._hash

    def __repr__(self) -> str:
        return f"SparsePolynomial({self.nvars}, {self})"

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for exps, c in self.items():
            mono = "*".join(f"x{i}^{e}" if e > 1 else f"x{i}" for i, e in enumerate(exps, start=1) if e)
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append("-" + mono)
            else:
                parts.append(f"{c}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")

    # -- ring operations ----------------------------------------------------

    def _coerce(self, other) -> SparsePolynomial:
        if isinstance(other, SparsePolynomial):
            if other.nvars != self.nvars:
                raise PolynomialError(f"variable-count mismatch: {self.nvars} vs {other.nvars}")
            return other
        if isinstance(other, int):
            return SparsePolynomial.constant(other, self.nvars)
        raise TypeError(f"cannot combine SparsePolynomial with {type(other).__name__}")

    def __add__(self, other) -> SparsePolynomial:
        other = self._coerce(other)
        acc = dict(self._terms)
        for k, c in other._terms.items():
            acc[k] = acc.get(k, 0) + c
        return SparsePolynomial(self.nvars, acc)

    __radd__ = __add__

    def __neg__(self) -> SparsePolynomial:
        return SparsePolynomial(self.nvars, {k: -c for k, c in self._terms.items()})

    def __sub__(self, other) -> SparsePolynomial:
        other = self._coerce(other)
        acc = dict(self._terms)
        for k, c in other._terms.items():
            acc[k] = acc.get(k, 0) - c
        return SparsePolynomial(self.nvars, acc)

    def __rsub__(self, other) -> SparsePolynomial:
        return self._coerce(other) - self

    def __mul__(self, other) -> SparsePolynomial:
        if isinstance(other, int):
            return SparsePolynomial(self.nvars, {k: c * other for k, c in self._terms.items()})
        other = self._coerce(other)
        a, b = self._terms, other._terms
        if len(a) < len(b):
            a, b = b, a
        if self.degree() + other.degree() > MAX_DEGREE:
            raise PolynomialError("product degree overflow")
        acc: dict[int, int] = {}
        get = acc.get
        for kb, cb in b.items():
            for ka, ca in a.items():
                k = ka + kb
                acc[k] = get(k, 0) + ca * cb
        return SparsePolynomial(self.nvars, acc)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> SparsePolynomial:
        if e < 0:
            raise PolynomialError("negative power")
        result = SparsePolynomial.constant(1, self.nvars)
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def exact_div(self, divisor: SparsePolynomial) -> SparsePolynomial:
        """Quotient q with self == q * divisor; raises if the division is not exact."""
        divisor = self._coerce(divisor)
        if divisor.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        n = self.nvars
        guard = _guard(n)
        kd = max(divisor._terms)
        cd = divisor._terms[kd]
        rest = [(k, c) for k, c in divisor._terms.items() if k != kd]
        rem = dict(self._terms)
        heap = [-k for k in rem]
        heapq.heapify(heap)
        quot: dict[int, int] = {}
        while heap:
            kr = -heapq.heappop(heap)
            cr = rem.get(kr)
            if not cr:
                continue
            if ((kr | guard) - kd) & guard != guard:
                raise PolynomialError("division is not exact")
            q, m = divmod(cr, cd)
            if m:
                raise PolynomialError("division is not exact")
            kq = kr - kd
            quot[kq] = q
            del rem[kr]
            for k, c in rest:
                kk = k + kq
                v = rem.get(kk, 0) - q * c
                if v:
                    if kk not in rem:
                        heapq.heappush(heap, -kk)
                    rem[kk] = v
                else:
                    rem.pop(kk, None)
        return SparsePolynomial(n, quot)

    # -- calculus and evaluation -------------------------------------------

    def partial_derivative(self, v: int) -> SparsePolynomial:
        """Formal derivative with respect to x_v (1-based)."""
        n = self.nvars
        if not 1 <= v <= n:
            raise PolynomialError(f"variable index {v} outside [1, {n}]")
        shift = FIELD_BITS * (n - v)
        step = (1 << shift) | (1 << (FIELD_BITS * n))
        acc = {}
        for k, c in self._terms.items():
            e = (k >> shift) & _MASK
            if e:
                acc[k - step] = c * e
        return SparsePolynomial(n, acc)

    def evaluate(self, point: Sequence[int], modulus: int | None = None) -> int:
        """Exact value at an integer point, or its residue modulo a prime."""
        n = self.nvars
        if len(point) != n:
            raise PolynomialError(f"point has {len(point)} coordinates, expected {n}")
        if modulus is not None and (modulus < 2 or not isprime(modulus)):
            raise PolynomialError(f"modulus {modulus} is not prime")
        pts = [int(x) for x in point] if modulus is None else [int(x) % modulus for x in point]
        cache: list[dict[int, int]] = [{} for _ in range(n)]
        total = 0
        for k, c in self._terms.items():
            val = c
            for i in range(n):
                e = (k >> (FIELD_BITS * (n - 1 - i))) & _MASK
                if e:
                    pw = cache[i].get(e)
                    if pw is None:
                        pw = pts[i] ** e if modulus is None else pow(pts[i], e, modulus)
                        cache[i][e] = pw
                    val *= pw
                    if modulus is not None:
                        val %= modulus
            total += val
        return total if modulus is None else total % modulus

    def univariate_restriction(self, base: Sequence[int], v: int) -> list[int]:
        """Coefficients [c_0, c_1, ...] of t -> self(base + t e_v)."""
        n = self.nvars
        if len(base) != n:
            raise PolynomialError(f"point has {len(base)} coordinates, expected {n}")
        if not 1 <= v <= n:
            raise PolynomialError(f"variable index {v} outside [1, {n}]")
        b = [int(x) for x in base]
        coeffs: dict[int, int] = {}
        for exps, c in self.items():
            rest = c
            for i, e in enumerate(exps):
                if e and i != v - 1:
                    rest *= b[i] ** e
            e = exps[v - 1]
            bv = b[v - 1]
            for d in range(e + 1):
                coeffs[d] = coeffs.get(d, 0) + rest * comb(e, d) * bv ** (e - d)
        top = max((d for d, c in coeffs.items() if c), default=0)
        return [coeffs.get(d, 0) for d in range(top + 1)]

    def substitute_permutation(self, images: Sequence[int]) -> SparsePolynomial:
        """Rename variables: x_i becomes x_{images[i-1]}."""
        n = self.nvars
        if sorted(images) != list(range(1, n + 1)):
            raise PolynomialError("substitution is not a permutation of the variables")
        acc = {}
        for exps, c in self.items():
            new = [0] * n
            for i, e in enumerate(exps):
                new[images[i] - 1] = e
            acc[pack(new)] = c
        return SparsePolynomial(n, acc)

    # -- serialization ------------------------------------------------------

    def to_json(self) -> list[dict]:
        return [{"coeff": str(c), "exps": list(exps)} for exps, c in self.items()]

    @classmethod
    def from_json(cls, nvars: int, data: list[dict]) -> SparsePolynomial:
        return cls.from_terms(nvars, [(tuple(t["exps"]), int(t["coeff"])) for t in data])


def add(p: SparsePolynomial, q: SparsePolynomial) -> SparsePolynomial:
    return p + q


def mul(p: SparsePolynomial, q: SparsePolynomial) -> SparsePolynomial:
    return p * q


def partial_derivative(p: SparsePolynomial, v: int) -> SparsePolynomial:
    return p.partial_derivative(v)


def evaluate(p: SparsePolynomial, point: Sequence[int], modulus: int | None = None) -> int:
    return p.evaluate(point, modulus)


def univariate_restriction(p: SparsePolynomial, base: Sequence[int], v: int) -> list[int]:
    return p.univariate_restriction(base, v)
