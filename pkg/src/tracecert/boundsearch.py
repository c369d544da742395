"""Feasibility of the binomial condition, choice of n trace functions, and the exponent report."""
from __future__ import annotations

import hashlib
import json
import random
from collections.abc import Sequence
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb, prod

from .groups import GroupSpec, build_coset_system
from .jaccert import (
    CERTIFIED_NONZERO,
    DEFAULT_BOUND,
    DEFAULT_GATE,
    DEFAULT_TRIALS,
    NonvanishingCertificate,
    certify_nonvanishing,
    jacobian,
    witness_point,
)
from .permgroup import CosetSystem, malle_constant
from .tracefam import ExponentVector, TraceFamily, build_family

STRATEGIES = ("first-n", "greedy-rank", "random-restart")
DEFAULT_STRATEGY = "greedy-rank"
DEFAULT_ATTEMPTS = 20

CERTIFIED = "CERTIFIED"
NOT_CERTIFIED = "NOT_CERTIFIED"
INFEASIBLE = "INFEASIBLE"


@dataclass(frozen=True)
class FeasibilityResult:
    n: int
    r: int
    feasible_pairs: tuple[tuple[int, int], ...]

    @property
    def feasible(self) -> bool:
        return bool(self.feasible_pairs)

    @property
    def smallest_k(self) -> int | None:
        return self.feasible_pairs[0][0] if self.feasible_pairs else None


def feasibility(n: int, r: int) -> FeasibilityResult:
    """All k in [2, r-1] with binom(r-1, k-1) >= n."""
    pairs = tuple((k, comb(r - 1, k - 1)) for k in range(2, r) if comb(r - 1, k - 1) >= n)
    return FeasibilityResult(n, r, pairs)


def exponent_general(vectors: Sequence[ExponentVector | Sequence[int]], n: int) -> Fraction:
    if len(vectors) != n:
        raise ValueError(f"need exactly n={n} vectors, got {len(vectors)}")
    return Fraction(sum(sum(v) for v in vectors), n)


def fiber_bound(vectors: Sequence[ExponentVector | Sequence[int]]) -> int:
    return prod(sum(v) for v in vectors)


def schmidt_exponent(n: int) -> Fraction:
    if n < 1:
        raise ValueError("n must be >= 1")
    return Fraction(n + 2, 4)


@dataclass(frozen=True)
class SelectionResult:
    strategy: str
    indices: tuple[int, ...] | None
    certificate: NonvanishingCertificate | None
    attempts: int

    @property
    def certified(self) -> bool:
        return self.certificate is not None and self.certificate.status == CERTIFIED_NONZERO


def _sub_seed(seed: int, label: str, index: int) -> int:
    digest = hashlib.sha256(f"tracecert-{label}:{seed}:{index}".encode()).digest()
    return int.from_bytes(digest[:8], "big")


def _greedy_rows(rows: list[list[int]], n: int) -> list[int] | None:
    """Indices of the first rows (in order) that raise the exact rank, until rank n."""
    basis: list[tuple[int, list[Fraction]]] = []  # (pivot column, row scaled to pivot 1)
    chosen = []
    for idx, row in enumerate(rows):
        v = [Fraction(x) for x in row]
        for col, b in basis:
            if v[col]:
                f = v[col]
                v = [x - f * y for x, y in zip(v, b)]
        piv = next((c for c, x in enumerate(v) if x), None)
        if piv is None:
            continue
        p = v[piv]
        basis.append((piv, [x / p for x in v]))
        chosen.append(idx)
        if len(chosen) == n:
            return chosen
    return None


def _certify_subset(family: TraceFamily, indices, seed, trials, bound, exact, gate):
    M = jacobian([family.polynomials[i - 1] for i in indices], indices)
    return certify_nonvanishing(M, seed=seed, trials=trials, bound=bound, exact=exact, gate=gate)


def select_subset(
    family: TraceFamily,
    strategy: str = DEFAULT_STRATEGY,
    seed: int = 0,
    trials: int = DEFAULT_TRIALS,
    bound: int = DEFAULT_BOUND,
    attempts: int = DEFAULT_ATTEMPTS,
    exact: bool = False,
    gate: int = DEFAULT_GATE,
) -> SelectionResult:
    """Pick n of the l trace functions whose Jacobian is certified nonzero.

    Indices are 1-based positions in the family.  A failed search is reported
    through ``SelectionResult.certified``, not raised.
    """
    n, l = family.n, len(family)
    if l < n:
        raise ValueError(f"family has l={l} < n={n} members")
    if strategy not in STRATEGIES:
        raise ValueError(f"unknown strategy {strategy!r}")

    if strategy == "first-n":
        idx = tuple(range(1, n + 1))
        cert = _certify_subset(family, idx, seed, trials, bound, exact, gate)
        return SelectionResult(strategy, idx, cert, 1)

    if strategy == "greedy-rank":
        point = witness_point(_sub_seed(seed, "greedy", 0), 0, n, bound)
        rows = [[f.partial_derivative(j).evaluate(point) for j in range(1, n + 1)] for f in family.polynomials]
        chosen = _greedy_rows(rows, n)
        if chosen is None:
            return SelectionResult(strategy, None, None, 1)
        idx = tuple(i + 1 for i in chosen)
        cert = _certify_subset(family, idx, seed, trials, bound, exact, gate)
        return SelectionResult(strategy, idx, cert, 1)

    last = None
    for attempt in range(attempts):
        rng = random.Random(_sub_seed(seed, "restart", attempt))
        idx = tuple(sorted(rng.sample(range(1, l + 1), n)))
        cert = _certify_subset(family, idx, _sub_seed(seed, "restart-cert", attempt), trials, bound, exact, gate)
        last = SelectionResult(strategy, idx, cert, attempt + 1)
        if last.certified:
            return last
    return last


@dataclass(frozen=True)
class BoundReport:
    group: dict
    n: int
    r: int
    k: int | None
    t: int | None
    l: int | None
    status: str
    feasible_pairs: tuple[tuple[int, int], ...]
    certificate: NonvanishingCertificate | None
    exponent_theorem: int | None
    exponent_general: Fraction | None
    fiber_bound_z: int | None
    schmidt_exponent: Fraction
    malle_a: Fraction
    strategy: str | None = None
    notes: tuple[str, ...] = field(default=())

    def comparison(self) -> dict:
        out = {
            "schmidt_exponent": _frac(self.schmidt_exponent),
            "malle_a": _frac(self.malle_a),
        }
        if self.status == CERTIFIED and self.exponent_general is not None:
            best = "theorem" if self.exponent_general < self.schmidt_exponent else "schmidt"
            out["exponent_theorem"] = str(self.exponent_theorem)
            out["theorem_beats_schmidt"] = self.exponent_general < self.schmidt_exponent
        else:
            best = "schmidt"
        out["smallest_upper_exponent"] = best
        return out

    def to_dict(self) -> dict:
        return {
            "group": self.group,
            "n": self.n,
            "r": self.r,
            "k": self.k,
            "t": self.t,
            "l": self.l,
            "status": self.status,
            "strategy": self.strategy,
            "feasible_pairs": [list(p) for p in self.feasible_pairs],
            "certificate": self.certificate.to_dict() if self.certificate else None,
            "exponent_theorem": None if self.exponent_theorem is None else str(self.exponent_theorem),
            "exponent_general": None if self.exponent_general is None else _frac(self.exponent_general),
            "fiber_bound_z": None if self.fiber_bound_z is None else str(self.fiber_bound_z),
            "schmidt_exponent": _frac(self.schmidt_exponent),
            "malle_a": _frac(self.malle_a),
            "comparison": self.comparison(),
            "notes": list(self.notes),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, indent=2) + "\n"


def _frac(q: Fraction) -> str:
    return f"{q.numerator}/{q.denominator}"


def certify_group(
    spec: GroupSpec,
    k: int | None = None,
    t: int = 2,
    seed: int = 0,
    trials: int = DEFAULT_TRIALS,
    bound: int = DEFAULT_BOUND,
    strategy: str = DEFAULT_STRATEGY,
    exact: bool = False,
    gate: int = DEFAULT_GATE,
    attempts: int = DEFAULT_ATTEMPTS,
    cs: CosetSystem | None = None,
) -> BoundReport:
    """Group spec to exponent report: coset system, family, subset choice, certificate."""
    if cs is None:
        cs = build_coset_system(spec)
    n, r = cs.n, cs.r
    feas = feasibility(n, r)
    common = dict(
        group=spec.to_dict(),
        n=n,
        r=r,
        feasible_pairs=feas.feasible_pairs,
        schmidt_exponent=schmidt_exponent(n),
        malle_a=malle_constant(cs.group),
    )
    if k is None:
        k = feas.smallest_k
    if k is None or k not in {p[0] for p in feas.feasible_pairs}:
        note = "no k in [2, r-1] with binom(r-1, k-1) >= n" if k is None else f"k={k} is not feasible"
        return BoundReport(
            k=k, t=t, l=None if k is None or not 2 <= k < r else comb(r - 1, k - 1), status=INFEASIBLE,
            certificate=None, exponent_theorem=None, exponent_general=None, fiber_bound_z=None,
            notes=(note,), **common,
        )
    if t < 2:
        raise ValueError("t must be >= 2")
    vf, family = build_family(cs, k, t)
    sel = select_subset(family, strategy, seed, trials, bound, attempts, exact, gate)
    cert = sel.certificate
    if cert is not None:
        cert = cert.with_context(group=spec.to_dict(), n=n, r=r, k=k, t=t, ordering=tuple(cs.ordering_cycles()))
    if sel.certified:
        chosen = [vf.vectors[i - 1] for i in sel.indices]
        return BoundReport(
            k=k, t=t, l=vf.l, status=CERTIFIED, certificate=cert, strategy=strategy,
            exponent_theorem=k + t - 1, exponent_general=exponent_general(chosen, n),
            fiber_bound_z=fiber_bound(chosen), **common,
        )
    note = "no n-subset certified within the trial budget; the Jacobian condition is not established"
    return BoundReport(
        k=k, t=t, l=vf.l, status=NOT_CERTIFIED, certificate=cert, strategy=strategy,
        exponent_theorem=None, exponent_general=None, fiber_bound_z=None, notes=(note,), **common,
    )
