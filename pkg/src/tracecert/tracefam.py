"""Trace polynomials Tr_a and the vector families a(B) built from k-subsets of [r]."""
from __future__ import annotations

import itertools
from collections.abc import Sequence
from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .permgroup import CosetSystem
from .polyring import SparsePolynomial, pack


class FamilyError(ValueError):
    pass


@dataclass(frozen=True)
class ExponentVector:
    entries: tuple[int, ...]

    def __post_init__(self):
        entries = tuple(int(a) for a in self.entries)
        if any(a < 0 for a in entries):
            raise FamilyError("exponent vectors have non-negative entries")
        object.__setattr__(self, "entries", entries)

    @property
    def height(self) -> int:
        return sum(self.entries)

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)


@dataclass(frozen=True)
class VectorFamily:
    r: int
    k: int
    t: int
    subsets: tuple[tuple[int, ...], ...]
    vectors: tuple[ExponentVector, ...]

    @property
    def l(self) -> int:
        return len(self.vectors)


@dataclass(frozen=True)
class TraceFamily:
    coset_system: CosetSystem
    vectors: VectorFamily
    polynomials: tuple[SparsePolynomial, ...]

    @property
    def n(self) -> int:
        return self.coset_system.n

    def __len__(self) -> int:
        return len(self.polynomials)


def trace_polynomial(cs: CosetSystem, a: ExponentVector | Sequence[int]) -> SparsePolynomial:
    """Sum over rows i of prod_j x_{pi_j(i)}^{a_j}, like monomials collected."""
    a = tuple(a)
    if len(a) != cs.r:
        raise FamilyError(f"exponent vector has length {len(a)}, expected r={cs.r}")
    n = cs.n
    pis = [(cs.pi(j + 1).images, aj) for j, aj in enumerate(a) if aj]
    acc: dict[int, int] = {}
    for i in range(n):
        exps = [0] * n
        for img, aj in pis:
            exps[img[i] - 1] += aj
        key = pack(exps)
        acc[key] = acc.get(key, 0) + 1
    return SparsePolynomial(n, acc)


def subsets_containing_one(r: int, k: int) -> list[tuple[int, ...]]:
    """k-subsets of [r] containing 1, lexicographic in the remaining elements."""
    if not 2 <= k <= r - 1:
        raise FamilyError(f"k={k} outside [2, r-1] for r={r}")
    return [(1,) + rest for rest in itertools.combinations(range(2, r + 1), k - 1)]


def vector_from_subset(B: Sequence[int], t: int, r: int) -> ExponentVector:
    if 1 not in B:
        raise FamilyError("the subset must contain 1")
    if t < 2:
        raise FamilyError("t must be at least 2")
    if any(not 1 <= b <= r for b in B):
        raise FamilyError(f"subset element outside [1, {r}]")
    members = set(B)
    return ExponentVector(tuple(t if i == 1 else int(i in members) for i in range(1, r + 1)))


def vector_family(r: int, k: int, t: int) -> VectorFamily:
    if r < 3:
        raise FamilyError("need r >= 3")
    subsets = subsets_containing_one(r, k)
    vectors = tuple(vector_from_subset(B, t, r) for B in subsets)
    assert len(vectors) == comb(r - 1, k - 1)
    return VectorFamily(r, k, t, tuple(subsets), vectors)


def build_family(cs: CosetSystem, k: int, t: int = 2) -> tuple[VectorFamily, TraceFamily]:
    vf = vector_family(cs.r, k, t)
    polys = tuple(trace_polynomial(cs, a) for a in vf.vectors)
    return vf, TraceFamily(cs, vf, polys)


@dataclass(frozen=True)
class IndependenceResult:
    independent: bool
    rank: int
    kernel_vector: tuple[Fraction, ...] | None = None

    def __bool__(self) -> bool:
        return self.independent


def _rank_and_kernel(rows: list[list[int]]) -> tuple[int, list[Fraction] | None]:
    """Rank of an integer matrix and, if rows are dependent, one left-kernel vector."""
    m = len(rows)
    ncols = len(rows[0]) if rows else 0
    # augment with the identity to track row combinations
    aug = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(m)] for i, row in enumerate(rows)]
    rank = 0
    for col in range(ncols):
        piv = next((i for i in range(rank, m) if aug[i][col]), None)
        if piv is None:
            continue
        aug[rank], aug[piv] = aug[piv], aug[rank]
        p = aug[rank][col]
        for i in range(rank + 1, m):
            if aug[i][col]:
                f = aug[i][col] / p
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[rank])]
        rank += 1
    if rank == m:
        return rank, None
    kernel = aug[rank][ncols:]
    return rank, kernel


def check_linear_independence(family: TraceFamily | Sequence[SparsePolynomial]) -> IndependenceResult:
    polys = list(family.polynomials if isinstance(family, TraceFamily) else family)
    if not polys:
        raise FamilyError("empty family")
    monomials = sorted(set().union(*(p.packed_terms for p in polys)), reverse=True)
    rows = [[p.packed_terms.get(mono, 0) for mono in monomials] for p in polys]
    rank, kernel = _rank_and_kernel(rows)
    return IndependenceResult(rank == len(polys), rank, None if kernel is None else tuple(kernel))


def distinguished_monomial(B: Sequence[int], t: int, n: int) -> tuple[int, ...]:
    """x_1^t times x_b for b in B \\ {1}: the row-1 term of Tr_{a(B)}."""
    exps = [0] * n
    exps[0] = t
    for b in B:
        if b != 1:
            exps[b - 1] = 1
    return tuple(exps)
