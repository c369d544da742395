"""Group specifications (the JSON ``GroupSpec`` format) and standard constructions.

A spec has a ``kind``:

``generators``
    ``cycles`` generate a subgroup of S_degree.
``elements``
    ``cycles`` lists every element of the group; the listing order fixes the
    coset representatives (first listed element of each coset).
``regular``
    ``cycles`` generate an abstract group written in degree ``degree``; the
    result is its left regular representation on |group| points, with point i
    labelled by the i-th entry of ``element_order`` (identity first).
``product``
    Direct product of ``factors`` acting on tuples of points ordered
    lexicographically.  A factor carrying ``"regular": true`` acts through its
    regular representation.

For non-regular kinds ``element_order`` (optional) lists coset
representatives g_1..g_n as cycles in S_n.  When ``cycles`` is empty the
``name`` is looked up in a small catalogue (``S<m>``, ``A<m>``, ``C<m>``,
``D<2m>``).
"""
from __future__ import annotations

import itertools
import json
import re
from dataclasses import dataclass
from math import prod

from .permgroup import (
    DEFAULT_ORDER_CAP,
    CosetSystem,
    GroupError,
    OrderCapExceeded,
    Permutation,
    PermutationGroup,
    close_group,
    coset_system,
    normalizer,
    parse_permutation,
    point_stabilizer,
)

KINDS = ("generators", "elements", "regular", "product")


@dataclass(frozen=True)
class GroupSpec:
    name: str
    degree: int
    kind: str
    cycles: tuple[str, ...] = ()
    element_order: tuple[str, ...] | None = None
    factors: tuple[GroupSpec, ...] = ()
    regular: bool = False

    def __post_init__(self):
        if self.kind not in KINDS:
            raise GroupError(f"unknown group kind {self.kind!r}")
        if self.kind == "product" and not self.factors:
            raise GroupError("product spec needs factors")
        if self.kind != "product" and self.degree < 1:
            raise GroupError("degree must be >= 1")

    @classmethod
    def from_dict(cls, d: dict) -> GroupSpec:
        if not isinstance(d, dict):
            raise GroupError("group spec must be a JSON object")
        try:
            kind = d["kind"]
        except KeyError:
            raise GroupError("group spec missing 'kind'") from None
        eo = d.get("element_order")
        return cls(
            name=str(d.get("name", "")),
            degree=int(d.get("degree", 0)),
            kind=kind,
            cycles=tuple(d.get("cycles", ())),
            element_order=None if eo is None else tuple(eo),
            factors=tuple(cls.from_dict(f) for f in d.get("factors", ())),
            regular=bool(d.get("regular", False)),
        )

    @classmethod
    def from_json(cls, text: str) -> GroupSpec:
        try:
            return cls.from_dict(json.loads(text))
        except json.JSONDecodeError as exc:
            raise GroupError(f"group spec is not valid JSON: {exc}") from None

    def to_dict(self) -> dict:
        d = {"name": self.name, "degree": self.degree, "kind": self.kind, "cycles": list(self.cycles)}
        if self.element_order is not None:
            d["element_order"] = list(self.element_order)
        if self.factors:
            d["factors"] = [f.to_dict() for f in self.factors]
        if self.regular:
            d["regular"] = True
        return d


_NAME_RE = re.compile(r"^([SACD])(\d+)$")


def named_generators(name: str) -> tuple[int, list[str]]:
    """Degree and generator cycles for ``S<m>``, ``A<m>``, ``C<m>``, ``D<2m>``."""
    m = _NAME_RE.match(name.strip())
    if not m:
        raise GroupError(f"unknown group name {name!r} and no cycles given")
    letter, size = m.group(1), int(m.group(2))
    full = "(" + " ".join(map(str, range(1, size + 1))) + ")"
    if letter == "S":
        return size, (["(1 2)", full] if size >= 2 else [])
    if letter == "C":
        return size, ([full] if size >= 2 else [])
    if letter == "A":
        return size, [f"(1 2 {i})" for i in range(3, size + 1)]
    if size % 2 or size < 6:
        raise GroupError("dihedral names take the group order, e.g. D8")
    deg = size // 2
    rot = "(" + " ".join(map(str, range(1, deg + 1))) + ")"
    refl = "".join(f"({i} {deg + 2 - i})" for i in range(2, deg // 2 + 1 + (deg % 2)) if i != deg + 2 - i)
    return deg, [rot, refl or "()"]


def dihedral_element_order(order: int) -> list[str]:
    """Rotations 1, a, ..., a^(m-1) then reflections b, ab, ..., a^(m-1) b."""
    deg, (rot, refl) = named_generators(f"D{order}")
    a = parse_permutation(rot, deg)
    b = parse_permutation(refl, deg)
    rots = [Permutation.identity(deg)]
    for _ in range(deg - 1):
        rots.append(a * rots[-1])
    return [g.to_cycles() for g in rots] + [(g * b).to_cycles() for g in rots]


def _abstract_group(spec: GroupSpec, cap: int) -> PermutationGroup:
    if spec.cycles:
        gens = [parse_permutation(c, spec.degree) for c in spec.cycles]
    elif spec.name and _NAME_RE.match(spec.name.strip()):
        deg, cyc = named_generators(spec.name)
        if deg != spec.degree:
            raise GroupError(f"{spec.name} has degree {deg}, spec says {spec.degree}")
        gens = [parse_permutation(c, deg) for c in cyc]
    else:
        gens = []
    return close_group(gens, degree=spec.degree, cap=cap)


def regular_representation(
    A: PermutationGroup, element_order: list[Permutation] | None = None
) -> PermutationGroup:
    """Left regular representation: point i is element e_i, and s sends e_i to s e_i."""
    elems = list(A.elements) if element_order is None else list(element_order)
    if len(elems) != len(A) or set(elems) != A.element_set:
        raise GroupError("element order must list every group element exactly once")
    if not elems[0].is_identity():
        raise GroupError("element order must start with the identity")
    where = {e: i for i, e in enumerate(elems, start=1)}

    def left(s: Permutation) -> Permutation:
        return Permutation(tuple(where[s * e] for e in elems))

    return PermutationGroup(len(elems), tuple(left(e) for e in elems), tuple(left(s) for s in A.generators))


def direct_product(factors: list[PermutationGroup], cap: int = DEFAULT_ORDER_CAP) -> PermutationGroup:
    """Product action on tuples of points, numbered lexicographically (1-based)."""
    degrees = [F.degree for F in factors]
    if prod(len(F) for F in factors) > cap:
        raise OrderCapExceeded(f"group order exceeds cap {cap}")
    tuples = list(itertools.product(*(range(1, d + 1) for d in degrees)))
    index = {t: i for i, t in enumerate(tuples, start=1)}

    def combine(parts) -> Permutation:
        return Permutation(tuple(index[tuple(g(x) for g, x in zip(parts, t))] for t in tuples))

    elems = tuple(combine(parts) for parts in itertools.product(*(F.elements for F in factors)))
    gens = []
    for pos, F in enumerate(factors):
        for s in F.generators:
            parts = [G.identity for G in factors]
            parts[pos] = s
            gens.append(combine(parts))
    return PermutationGroup(prod(degrees), elems, tuple(gens))


def _build(spec: GroupSpec, cap: int) -> PermutationGroup:
    if spec.kind == "generators":
        G = _abstract_group(spec, cap)
    elif spec.kind == "elements":
        listed = [parse_permutation(c, spec.degree) for c in spec.cycles]
        G = close_group(listed, degree=spec.degree, cap=cap)
        if set(listed) != G.element_set:
            raise GroupError("element list is not closed under composition")
    elif spec.kind == "regular":
        A = _abstract_group(spec, cap)
        order = None
        if spec.element_order is not None:
            order = [parse_permutation(c, spec.degree) for c in spec.element_order]
        G = regular_representation(A, order)
    else:
        G = direct_product([_build(f, cap) for f in spec.factors], cap)
    if spec.regular and spec.kind != "regular":
        order = None
        if spec.element_order is not None:
            order = [parse_permutation(c, spec.degree) for c in spec.element_order]
        G = regular_representation(G, order)
    if G.degree > cap:
        raise OrderCapExceeded(f"degree {G.degree} exceeds cap {cap}")
    return G


def build_group(spec: GroupSpec, cap: int = DEFAULT_ORDER_CAP) -> PermutationGroup:
    """Construct the permutation group a spec describes; it must be transitive."""
    G = _build(spec, cap)
    if spec.kind == "product" and spec.degree and spec.degree != G.degree:
        raise GroupError(f"product degree is {G.degree}, spec says {spec.degree}")
    if not G.is_transitive():
        raise GroupError(f"group {spec.name or spec.kind} is not transitive on [1, {G.degree}]")
    return G


def spec_ordering(spec: GroupSpec, G: PermutationGroup) -> list[Permutation] | None:
    """Explicit coset representatives implied by the description, or None for the canonical order."""
    if spec.kind == "elements":
        H = point_stabilizer(G)
        N = normalizer(G, H)
        n_points = {g(1) for g in N.elements}
        reps: dict[int, Permutation] = {}
        for c in spec.cycles:
            g = parse_permutation(c, spec.degree)
            reps.setdefault(g(1), g)
        reps[1] = G.identity
        listed = list(reps.values())
        return [g for g in listed if g(1) in n_points] + [g for g in listed if g(1) not in n_points]
    if spec.kind != "regular" and not spec.regular and spec.element_order is not None:
        return [parse_permutation(c, G.degree) for c in spec.element_order]
    return None


def build_coset_system(
    spec: GroupSpec, ordering: list[Permutation] | None = None, cap: int = DEFAULT_ORDER_CAP
) -> CosetSystem:
    G = build_group(spec, cap)
    if ordering is None:
        ordering = spec_ordering(spec, G)
    return coset_system(G, ordering=ordering)


# -- convenience builders ---------------------------------------------------


def natural_spec(name: str) -> GroupSpec:
    deg, cyc = named_generators(name)
    return GroupSpec(name=name, degree=deg, kind="generators", cycles=tuple(cyc))


def regular_spec(name: str, element_order: list[str] | None = None) -> GroupSpec:
    deg, cyc = named_generators(name)
    if element_order is None and name.startswith("D"):
        element_order = dihedral_element_order(int(name[1:]))
    return GroupSpec(
        name=f"regular({name})",
        degree=deg,
        kind="regular",
        cycles=tuple(cyc),
        element_order=None if element_order is None else tuple(element_order),
    )


def direct_product_spec(A: GroupSpec, B: GroupSpec, name: str | None = None) -> GroupSpec:
    """G = A x B with B in its regular representation."""
    if B.kind != "regular":
        B = GroupSpec(B.name, B.degree, B.kind, B.cycles, B.element_order, B.factors, regular=True)
    return GroupSpec(name=name or f"{A.name}x{B.name}", degree=0, kind="product", factors=(A, B))


def trivial_spec() -> GroupSpec:
    return GroupSpec(name="1", degree=1, kind="generators")


def symmetric_product_spec(sizes: list[int]) -> GroupSpec:
    """S_{n_1} x ... x S_{n_r}, natural on the first r-1 factors, regular on the last."""
    if len(sizes) < 2 or any(s < 2 for s in sizes):
        raise GroupError("need at least two factors, each of size >= 2")
    factors = [natural_spec(f"S{s}") for s in sizes[:-1]]
    factors.append(regular_spec(f"S{sizes[-1]}"))
    name = "x".join(f"S{s}" for s in sizes[:-1]) + f"xregular(S{sizes[-1]})"
    return GroupSpec(name=name, degree=0, kind="product", factors=tuple(factors))


# Element orderings used by the two worked examples.
S3_LISTED_ORDER = ("()", "(1 2)", "(2 3)", "(1 3)", "(1 2 3)", "(1 3 2)")


def example1_spec() -> GroupSpec:
    """S3 inside S6 through its regular representation, elements ordered 1,(12),(23),(13),(123),(132)."""
    return GroupSpec(
        name="regular(S3)", degree=3, kind="regular", cycles=("(1 2)", "(1 2 3)"), element_order=S3_LISTED_ORDER
    )


def example2_spec() -> GroupSpec:
    """S3 x D8 inside S24, D8 regular with rotations then reflections."""
    return direct_product_spec(natural_spec("S3"), regular_spec("D8"), name="S3xregular(D8)")
