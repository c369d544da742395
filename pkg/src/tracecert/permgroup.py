"""Exact permutation groups on [1, n], coset systems and the two coset actions.

Conventions
-----------
Points are 1-based.  Composition is right-to-left: ``(g * h)(x) == g(h(x))``.
A cycle string such as ``"(1 2)(2 3)"`` is read as the product of its cycles
under that composition, so the rightmost cycle is applied first.
"""
from __future__ import annotations

import re
from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property

DEFAULT_ORDER_CAP = 10**6


class GroupError(ValueError):
    """Malformed or inconsistent group-theoretic input."""


class OrderCapExceeded(GroupError):
    """Closure produced more elements than the configured cap."""


@dataclass(frozen=True, order=True)
class Permutation:
    images: tuple[int, ...]

    def __post_init__(self):
        imgs = tuple(int(x) for x in self.images)
        if sorted(imgs) != list(range(1, len(imgs) + 1)):
            raise GroupError(f"not a bijection on [1, {len(imgs)}]: {imgs}")
        object.__setattr__(self, "images", imgs)

    @classmethod
    def identity(cls, n: int) -> Permutation:
        return cls(tuple(range(1, n + 1)))

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, point: int) -> int:
        return self.images[point - 1]

    def __mul__(self, other: Permutation) -> Permutation:
        if not isinstance(other, Permutation):
            return NotImplemented
        if other.degree != self.degree:
            raise GroupError("degree mismatch in composition")
        img = self.images
        return Permutation(tuple(img[x - 1] for x in other.images))

    def inverse(self) -> Permutation:
        inv = [0] * self.degree
        for i, x in enumerate(self.images, start=1):
            inv[x - 1] = i
        return Permutation(tuple(inv))

    def __invert__(self) -> Permutation:
        return self.inverse()

    def is_identity(self) -> bool:
        return all(x == i for i, x in enumerate(self.images, start=1))

    def cycles(self) -> list[tuple[int, ...]]:
        """All cycles including fixed points, each starting at its least point."""
        seen = set()
        out = []
        for start in range(1, self.degree + 1):
            if start in seen:
                continue
            cyc = [start]
            seen.add(start)
            x = self(start)
            while x != start:
                cyc.append(x)
                seen.add(x)
                x = self(x)
            out.append(tuple(cyc))
        return out

    def order(self) -> int:
        from math import lcm

        return lcm(*(len(c) for c in self.cycles())) if self.degree else 1

    def to_cycles(self) -> str:
        parts = ["(" + " ".join(map(str, c)) + ")" for c in self.cycles() if len(c) > 1]
        return "".join(parts) or "()"

    def __str__(self) -> str:
        return self.to_cycles()


_CYCLE_RE = re.compile(r"\(([^()]*)\)")


def parse_permutation(text: str, degree: int) -> Permutation:
    """Parse cycle notation such as ``"(1 2 3)(4 5)"`` into a degree-``degree`` permutation.

    Cycles need not be disjoint; the product is composed right-to-left.
    Points may be separated by spaces or commas.
    """
    if degree < 0:
        raise GroupError("negative degree")
    stripped = text.strip()
    if _CYCLE_RE.sub("", stripped).strip():
        raise GroupError(f"malformed cycle text: {text!r}")
    result = Permutation.identity(degree)
    for body in _CYCLE_RE.findall(stripped):
        tokens = [tok for tok in re.split(r"[\s,]+", body.strip()) if tok]
        try:
            points = [int(tok) for tok in tokens]
        except ValueError:
            raise GroupError(f"malformed cycle text: {text!r}") from None
        if any(p < 1 or p > degree for p in points):
            raise GroupError(f"point out of range [1, {degree}] in {text!r}")
        if len(set(points)) != len(points):
            raise GroupError(f"repeated point inside one cycle: {text!r}")
        if len(points) < 2:
            continue
        img = list(range(1, degree + 1))
        for a, b in zip(points, points[1:] + points[:1]):
            img[a - 1] = b
        result = result * Permutation(tuple(img))
    return result


@dataclass(frozen=True)
class PermutationGroup:
    degree: int
    elements: tuple[Permutation, ...]
    generators: tuple[Permutation, ...] = ()

    @cached_property
    def element_set(self) -> frozenset[Permutation]:
        return frozenset(self.elements)

    @property
    def order(self) -> int:
        return len(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, g: Permutation) -> bool:
        return g in self.element_set

    @property
    def identity(self) -> Permutation:
        return Permutation.identity(self.degree)

    def orbit(self, point: int) -> set[int]:
        return {g(point) for g in self.elements}

    def is_transitive(self) -> bool:
        return self.degree >= 1 and len(self.orbit(1)) == self.degree

    def is_subgroup_of(self, other: PermutationGroup) -> bool:
        return self.degree == other.degree and self.element_set <= other.element_set

    def same_elements(self, other: PermutationGroup) -> bool:
        return self.element_set == other.element_set


def close_group(
    generators: Iterable[Permutation],
    degree: int | None = None,
    cap: int = DEFAULT_ORDER_CAP,
) -> PermutationGroup:
    """Breadth-first closure of ``generators``.

    Each BFS layer is sorted by images, so the element order does not depend
    on the order in which generators are supplied.
    """
    gens = sorted(set(generators))
    if degree is None:
        if not gens:
            raise GroupError("degree required when there are no generators")
        degree = gens[0].degree
    if any(g.degree != degree for g in gens):
        raise GroupError("generators have differing degrees")
    if cap < 1:
        raise GroupError("cap must be >= 1")
    ident = Permutation.identity(degree)
    seen = {ident}
    elements = [ident]
    layer = [ident]
    while layer:
        fresh = set()
        for g in layer:
            for s in gens:
                h = s * g
                if h not in seen and h not in fresh:
                    fresh.add(h)
        layer = sorted(fresh)
        seen.update(layer)
        elements.extend(layer)
        if len(elements) > cap:
            raise OrderCapExceeded(f"group order exceeds cap {cap}")
    return PermutationGroup(degree, tuple(elements), tuple(gens))


def point_stabilizer(G: PermutationGroup, point: int = 1) -> PermutationGroup:
    elems = tuple(g for g in G.elements if g(point) == point)
    return PermutationGroup(G.degree, elems, elems)


def normalizer(G: PermutationGroup, H: PermutationGroup) -> PermutationGroup:
    """N_G(H) by testing every element of G."""
    if not H.is_subgroup_of(G):
        raise GroupError("H is not a subgroup of G")
    hs = H.generators or H.elements
    elems = []
    for g in G.elements:
        ginv = g.inverse()
        # finite H: gSg^-1 inside H for a generating set S forces gHg^-1 = H
        if all(g * h * ginv in H for h in hs):
            elems.append(g)
    return PermutationGroup(G.degree, tuple(elems), tuple(elems))


def index_of_element(g: Permutation) -> int:
    """Malle index: degree minus the number of cycles (fixed points included)."""
    return g.degree - len(g.cycles())


def malle_constant(G: PermutationGroup) -> Fraction:
    nontrivial = [g for g in G.elements if not g.is_identity()]
    if not nontrivial:
        raise GroupError("a(G) is undefined for the trivial group")
    return Fraction(1, min(index_of_element(g) for g in nontrivial))


@dataclass(frozen=True)
class CosetSystem:
    """Representatives g_1..g_n of G/H with the N/H block in positions 1..r.

    The coset g H is identified with the point g(1); ``relabel`` sends the
    coset index i to that point.
    """

    group: PermutationGroup
    stabilizer_H: PermutationGroup
    normalizer_N: PermutationGroup
    reps: tuple[Permutation, ...]
    r: int
    relabel: Permutation
    _index_of_point: dict[int, int] = field(repr=False, compare=False, default_factory=dict)

    @property
    def n(self) -> int:
        return len(self.reps)

    def index_of(self, g: Permutation) -> int:
        """Index k with g H = g_k H."""
        return self._index_of_point[g(1)]

    def pi(self, j: int) -> Permutation:
        return right_action_pi(self, j)

    def pis(self) -> list[Permutation]:
        return [right_action_pi(self, j) for j in range(1, self.r + 1)]

    def lam(self, g: Permutation) -> Permutation:
        return left_action_lambda(self, g)

    def ordering_cycles(self) -> list[str]:
        return [g.to_cycles() for g in self.reps]


def coset_system(
    G: PermutationGroup,
    H: PermutationGroup | None = None,
    N: PermutationGroup | None = None,
    ordering: Sequence[Permutation] | None = None,
) -> CosetSystem:
    stab = point_stabilizer(G)
    if H is None:
        H = stab
    elif not H.same_elements(stab):
        raise GroupError("H must be the stabilizer of point 1 in G")
    if N is None:
        N = normalizer(G, H)
    elif not (H.is_subgroup_of(N) and N.is_subgroup_of(G)):
        raise GroupError("need H <= N <= G")
    if not G.is_transitive():
        raise GroupError("G is not transitive")
    n = G.degree
    if n < 2 or len(H) == len(G):
        raise GroupError("degenerate coset system: need n >= 2 and H != G")
    if len(G) != n * len(H):
        raise GroupError("orbit-stabilizer violated; |G| != n |H|")

    r = len(N) // len(H)
    n_points = {g(1) for g in N.elements}

    if ordering is None:
        best: dict[int, Permutation] = {}
        for g in G.elements:
            p = g(1)
            if p not in best or g < best[p]:
                best[p] = g
        points = sorted(n_points) + sorted(set(best) - n_points)
        reps = tuple(best[p] for p in points)
    else:
        reps = tuple(ordering)
        if len(reps) != n:
            raise GroupError(f"ordering lists {len(reps)} representatives, expected {n}")
        for g in reps:
            if g not in G:
                raise GroupError(f"ordering element {g} is not in G")
        pts = [g(1) for g in reps]
        if len(set(pts)) != n:
            raise GroupError("ordering lists two representatives of the same coset")
        if not reps[0].is_identity():
            raise GroupError("the first representative must be the identity")
        if set(pts[:r]) != n_points:
            raise GroupError("representatives 1..r must be exactly the N/H block")

    for g in reps[:r]:
        # verified rather than assumed: g_j H = H g_j on the N/H block
        if {g * h for h in H.elements} != {h * g for h in H.elements}:
            raise GroupError(f"representative {g} does not normalize H")

    index_of_point = {g(1): i for i, g in enumerate(reps, start=1)}
    relabel = Permutation(tuple(g(1) for g in reps))
    return CosetSystem(G, H, N, reps, r, relabel, index_of_point)


def right_action_pi(cs: CosetSystem, j: int) -> Permutation:
    """pi_j(i) = k where g_i g_j H = g_k H."""
    if not 1 <= j <= cs.r:
        raise GroupError(f"j={j} outside [1, {cs.r}]")
    p = cs.reps[j - 1](1)
    return Permutation(tuple(cs._index_of_point[g(p)] for g in cs.reps))


def left_action_lambda(cs: CosetSystem, g: Permutation) -> Permutation:
    """lambda_g(i) = k where g g_i H = g_k H."""
    if g not in cs.group:
        raise GroupError(f"{g} is not an element of G")
    return Permutation(tuple(cs._index_of_point[g(h(1))] for h in cs.reps))


def two_row(perm: Permutation, name: str | None = None) -> str:
    """Two-row notation with right-aligned columns."""
    width = len(str(perm.degree))
    top = " ".join(str(i).rjust(width) for i in range(1, perm.degree + 1))
    bottom = " ".join(str(x).rjust(width) for x in perm.images)
    if name is None:
        return f"( {top} )\n( {bottom} )"
    pad = " " * (len(name) + 3)
    return f"{name} = ( {top} )\n{pad}( {bottom} )"
