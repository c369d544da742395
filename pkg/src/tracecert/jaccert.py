"""Jacobian matrices of trace families and certificates that their determinant is not identically zero.

A certificate is a single integer point at which the entrywise-evaluated
Jacobian has nonzero determinant.  Checking it needs only integer
arithmetic, so it is a complete proof on its own.
"""
from __future__ import annotations

import hashlib
import json
import random
from collections.abc import Sequence
from dataclasses import dataclass, field, replace
from fractions import Fraction

from .polyring import SparsePolynomial

CERTIFIED_NONZERO = "CERTIFIED_NONZERO"
PROBABLY_ZERO = "PROBABLY_ZERO"
EXACT_ZERO = "EXACT_ZERO"

DEFAULT_BOUND = 2**31
DEFAULT_TRIALS = 20
DEFAULT_GATE = 8


class CertificationError(ValueError):
    pass


@dataclass(frozen=True)
class JacobianMatrix:
    entries: tuple[tuple[SparsePolynomial, ...], ...]
    provenance: tuple[int, ...] = ()

    @property
    def n(self) -> int:
        return len(self.entries)

    def __getitem__(self, ij: tuple[int, int]) -> SparsePolynomial:
        i, j = ij
        return self.entries[i][j]

    def degree_bound(self) -> int:
        """Upper bound on deg det: sum over rows of the largest entry degree."""
        return sum(max(max(p.degree() for p in row), 0) for row in self.entries)

    def evaluate(self, point: Sequence[int]) -> list[list[int]]:
        return [[p.evaluate(point) for p in row] for row in self.entries]

    def swap_rows(self, a: int, b: int) -> JacobianMatrix:
        rows = list(self.entries)
        rows[a], rows[b] = rows[b], rows[a]
        prov = list(self.provenance)
        if prov:
            prov[a], prov[b] = prov[b], prov[a]
        return JacobianMatrix(tuple(rows), tuple(prov))


def jacobian(fs: Sequence[SparsePolynomial], provenance: Sequence[int] = ()) -> JacobianMatrix:
    n = len(fs)
    if n == 0:
        raise CertificationError("need at least one polynomial")
    if any(f.nvars != n for f in fs):
        raise CertificationError(f"need {n} polynomials in {n} variables")
    rows = tuple(tuple(f.partial_derivative(j) for j in range(1, n + 1)) for f in fs)
    return JacobianMatrix(rows, tuple(provenance))


def integer_determinant(M: Sequence[Sequence[int]]) -> int:
    """Exact determinant by fraction-free (Bareiss) elimination."""
    n = len(M)
    if any(len(row) != n for row in M):
        raise CertificationError("matrix is not square")
    if n == 0:
        return 1
    a = [[int(x) for x in row] for row in M]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            piv = next((i for i in range(k + 1, n) if a[i][k]), None)
            if piv is None:
                return 0
            a[k], a[piv] = a[piv], a[k]
            sign = -sign
        akk = a[k][k]
        rowk = a[k]
        for i in range(k + 1, n):
            rowi = a[i]
            aik = rowi[k]
            for j in range(k + 1, n):
                rowi[j] = (akk * rowi[j] - aik * rowk[j]) // prev
        prev = akk
    return sign * a[n - 1][n - 1]


def symbolic_determinant(M: JacobianMatrix, gate: int = DEFAULT_GATE) -> SparsePolynomial:
    """Determinant polynomial by Bareiss elimination over Z[x], dividing exactly at each step."""
    n = M.n
    if n > gate:
        raise CertificationError(f"matrix size {n} exceeds the symbolic gate {gate}")
    nvars = M.entries[0][0].nvars
    a = [list(row) for row in M.entries]
    sign = 1
    prev = SparsePolynomial.constant(1, nvars)
    for k in range(n - 1):
        if a[k][k].is_zero():
            piv = next((i for i in range(k + 1, n) if not a[i][k].is_zero()), None)
            if piv is None:
                return SparsePolynomial.zero(nvars)
            a[k], a[piv] = a[piv], a[k]
            sign = -sign
        akk = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            for j in range(k + 1, n):
                num = akk * a[i][j] - aik * a[k][j]
                a[i][j] = num.exact_div(prev) if k else num
        prev = akk
    det = a[n - 1][n - 1]
    return -det if sign < 0 else det


def witness_point(seed: int, trial: int, n: int, bound: int) -> list[int]:
    """Point for the given trial, uniform on [1, bound]^n, a pure function of (seed, trial)."""
    digest = hashlib.sha256(f"tracecert-witness:{seed}:{trial}".encode()).digest()
    rng = random.Random(int.from_bytes(digest, "big"))
    return [rng.randint(1, bound) for _ in range(n)]


@dataclass(frozen=True)
class NonvanishingCertificate:
    status: str
    chosen_indices: tuple[int, ...]
    witness: tuple[int, ...] | None
    det_value: int | None
    seed: int
    trials_used: int
    coordinate_bound: int
    degree_bound: int
    failure_probability_bound: Fraction | None = None
    # context, filled in by the pipeline
    group: dict | None = None
    n: int | None = None
    r: int | None = None
    k: int | None = None
    t: int | None = None
    ordering: tuple[str, ...] | None = None
    extras: dict = field(default_factory=dict, compare=False)

    @property
    def certified(self) -> bool:
        return self.status == CERTIFIED_NONZERO

    def with_context(self, **kw) -> NonvanishingCertificate:
        return replace(self, **kw)

    def to_dict(self) -> dict:
        d = {
            "group": self.group,
            "n": self.n,
            "r": self.r,
            "k": self.k,
            "t": self.t,
            "ordering": list(self.ordering) if self.ordering is not None else None,
            "chosen_indices": list(self.chosen_indices),
            "witness": [str(x) for x in self.witness] if self.witness is not None else None,
            "det_value": str(self.det_value) if self.det_value is not None else None,
            "seed": self.seed,
            "trials_used": self.trials_used,
            "coordinate_bound": str(self.coordinate_bound),
            "degree_bound": self.degree_bound,
            "status": self.status,
        }
        if self.failure_probability_bound is not None:
            d["failure_probability_bound"] = str(self.failure_probability_bound)
        return d

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, indent=2) + "\n"

    @classmethod
    def from_dict(cls, d: dict) -> NonvanishingCertificate:
        try:
            fpb = d.get("failure_probability_bound")
            return cls(
                status=d["status"],
                chosen_indices=tuple(int(i) for i in d["chosen_indices"]),
                witness=None if d.get("witness") is None else tuple(int(x) for x in d["witness"]),
                det_value=None if d.get("det_value") is None else int(d["det_value"]),
                seed=int(d["seed"]),
                trials_used=int(d["trials_used"]),
                coordinate_bound=int(d["coordinate_bound"]),
                degree_bound=int(d.get("degree_bound", 0)),
                failure_probability_bound=None if fpb is None else Fraction(fpb),
                group=d.get("group"),
                n=d.get("n"),
                r=d.get("r"),
                k=d.get("k"),
                t=d.get("t"),
                ordering=None if d.get("ordering") is None else tuple(d["ordering"]),
            )
        except (KeyError, TypeError, ValueError) as exc:
            raise CertificationError(f"malformed certificate: {exc}") from None


def certify_nonvanishing(
    M: JacobianMatrix,
    seed: int,
    trials: int = DEFAULT_TRIALS,
    bound: int = DEFAULT_BOUND,
    exact: bool = False,
    gate: int = DEFAULT_GATE,
) -> NonvanishingCertificate:
    """Search seeded witness points for a nonzero Jacobian determinant.

    The first nonzero evaluation yields CERTIFIED_NONZERO.  Otherwise the
    result is PROBABLY_ZERO with failure probability at most
    (degree_bound / bound) ** trials.  With ``exact`` the symbolic determinant
    is computed first and a zero result is reported as EXACT_ZERO.
    """
    if trials < 1:
        raise CertificationError("trials must be >= 1")
    deg = M.degree_bound()
    if bound < 2 * max(deg, 1):
        raise CertificationError(
            f"coordinate bound {bound} is below twice the determinant degree bound {deg}"
        )
    base = dict(chosen_indices=M.provenance, seed=seed, coordinate_bound=bound, degree_bound=deg)
    if exact:
        if symbolic_determinant(M, gate).is_zero():
            return NonvanishingCertificate(EXACT_ZERO, witness=None, det_value=0, trials_used=0, **base)
    for trial in range(trials):
        w = witness_point(seed, trial, M.n, bound)
        d = integer_determinant(M.evaluate(w))
        if d:
            return NonvanishingCertificate(
                CERTIFIED_NONZERO, witness=tuple(w), det_value=d, trials_used=trial + 1, **base
            )
    return NonvanishingCertificate(
        PROBABLY_ZERO,
        witness=None,
        det_value=None,
        trials_used=trials,
        failure_probability_bound=Fraction(deg, bound) ** trials,
        **base,
    )


def reverify(cert: NonvanishingCertificate, M: JacobianMatrix) -> bool:
    """Recompute the determinant at the witness; True iff it matches det_value and is nonzero."""
    if cert.status != CERTIFIED_NONZERO or cert.witness is None or cert.det_value is None:
        raise CertificationError("only CERTIFIED_NONZERO certificates can be re-verified")
    if len(cert.witness) != M.n:
        raise CertificationError(f"witness has {len(cert.witness)} coordinates, matrix is {M.n}x{M.n}")
    if cert.chosen_indices and M.provenance and tuple(cert.chosen_indices) != tuple(M.provenance):
        return False
    d = integer_determinant(M.evaluate(cert.witness))
    return d != 0 and d == cert.det_value
