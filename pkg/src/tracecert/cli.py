"""Command-line front end.

Exit codes: 0 certified / verified, 2 honest negative (not certified or
infeasible, report still written), 1 malformed input or failed verification.
"""
from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from pathlib import Path

from .boundsearch import (
    CERTIFIED,
    DEFAULT_ATTEMPTS,
    DEFAULT_STRATEGY,
    STRATEGIES,
    certify_group,
    feasibility,
    schmidt_exponent,
)
from .groups import GroupSpec, build_coset_system
from .jaccert import (
    CERTIFIED_NONZERO,
    DEFAULT_BOUND,
    DEFAULT_GATE,
    DEFAULT_TRIALS,
    CertificationError,
    NonvanishingCertificate,
    jacobian,
    reverify,
)
from .permgroup import GroupError, Permutation, malle_constant, parse_permutation, two_row
from .polyring import PolynomialError
from .tracefam import FamilyError, build_family

INPUT_ERRORS = (GroupError, CertificationError, FamilyError, PolynomialError, ValueError, OSError, KeyError)


@dataclass(frozen=True)
class RunConfig:
    spec: GroupSpec
    k: int | None = None
    t: int = 2
    seed: int = 0
    trials: int = DEFAULT_TRIALS
    bound: int = DEFAULT_BOUND
    strategy: str = DEFAULT_STRATEGY
    exact: bool = False
    gate: int = DEFAULT_GATE
    attempts: int = DEFAULT_ATTEMPTS
    out: Path | None = None

    def __post_init__(self):
        if self.trials < 1:
            raise ValueError("--trials must be >= 1")
        if self.bound < 2:
            raise ValueError("--bound must be >= 2")
        if self.t < 2:
            raise ValueError("--t must be >= 2")
        if self.gate < 1:
            raise ValueError("--gate must be >= 1")
        if self.strategy not in STRATEGIES:
            raise ValueError(f"--strategy must be one of {', '.join(STRATEGIES)}")


def _emit(text: str, out: Path | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        out.write_text(text)


def _load_spec(args) -> GroupSpec:
    if args.inline is not None:
        return GroupSpec.from_json(args.inline)
    if args.group is not None:
        return GroupSpec.from_json(Path(args.group).read_text())
    raise ValueError("one of --group PATH or --inline JSON is required")


def cmd_certify(config: RunConfig) -> int:
    report = certify_group(
        config.spec,
        k=config.k,
        t=config.t,
        seed=config.seed,
        trials=config.trials,
        bound=config.bound,
        strategy=config.strategy,
        exact=config.exact,
        gate=config.gate,
        attempts=config.attempts,
    )
    _emit(report.to_json(), config.out)
    if config.out is not None:
        print(f"{report.status}: n={report.n} r={report.r} k={report.k} "
              f"exponent={report.exponent_theorem} -> {config.out}", file=sys.stderr)
    return 0 if report.status == CERTIFIED else 2


def verify_certificate(data: dict) -> tuple[bool, str]:
    """Rebuild everything a certificate refers to and re-check its witness."""
    if not isinstance(data, dict):
        return False, "certificate must be a JSON object"
    if "certificate" in data and isinstance(data["certificate"], dict):
        data = data["certificate"]
    cert = NonvanishingCertificate.from_dict(data)
    if cert.status != CERTIFIED_NONZERO:
        return False, f"status is {cert.status}, nothing to verify"
    if cert.group is None or cert.ordering is None or cert.k is None or cert.t is None:
        return False, "certificate lacks group, ordering, k or t"
    spec = GroupSpec.from_dict(cert.group)
    n = cert.n
    ordering = [parse_permutation(c, n) for c in cert.ordering]
    cs = build_coset_system(spec, ordering=ordering)
    if (cs.n, cs.r) != (cert.n, cert.r):
        return False, f"rebuilt (n, r) = ({cs.n}, {cs.r}) differs from certificate ({cert.n}, {cert.r})"
    _, family = build_family(cs, cert.k, cert.t)
    idx = cert.chosen_indices
    if len(idx) != n or len(set(idx)) != n or not all(1 <= i <= len(family) for i in idx):
        return False, "chosen_indices is not a set of n distinct family positions"
    M = jacobian([family.polynomials[i - 1] for i in idx], idx)
    if not reverify(cert, M):
        return False, "determinant at the witness does not match det_value"
    return True, "ok"


def cmd_verify(path: Path) -> int:
    try:
        data = json.loads(Path(path).read_text())
        ok, why = verify_certificate(data)
    except (json.JSONDecodeError, *INPUT_ERRORS) as exc:
        ok, why = False, str(exc)
    print(("VERIFIED" if ok else "REJECTED") + f": {why}")
    return 0 if ok else 1


def inspect_summary(spec: GroupSpec) -> dict:
    cs = build_coset_system(spec)
    feas = feasibility(cs.n, cs.r)
    return {
        "group": spec.to_dict(),
        "n": cs.n,
        "r": cs.r,
        "order_G": len(cs.group),
        "order_H": len(cs.stabilizer_H),
        "order_N": len(cs.normalizer_N),
        "ordering": cs.ordering_cycles(),
        "pi": [list(p.images) for p in cs.pis()],
        "feasible_pairs": [list(p) for p in feas.feasible_pairs],
        "malle_a": str(malle_constant(cs.group)),
        "schmidt_exponent": str(schmidt_exponent(cs.n)),
    }


def format_inspect(summary: dict) -> str:
    lines = [
        f"group: {summary['group']['name'] or summary['group']['kind']}",
        f"n = {summary['n']}   r = {summary['r']}   |G| = {summary['order_G']}"
        f"   |H| = {summary['order_H']}   |N| = {summary['order_N']}",
        f"a(G) = {summary['malle_a']}   Schmidt exponent = {summary['schmidt_exponent']}",
        "feasible (k, l): " + (", ".join(f"({k}, {l})" for k, l in summary["feasible_pairs"]) or "none"),
        "",
    ]
    for j, img in enumerate(summary["pi"], start=1):
        lines.append(two_row(Permutation(tuple(img)), f"pi_{j}"))
    return "\n".join(lines) + "\n"


def cmd_inspect(spec: GroupSpec, as_json: bool = False, out: Path | None = None) -> int:
    summary = inspect_summary(spec)
    text = json.dumps(summary, sort_keys=True, indent=2) + "\n" if as_json else format_inspect(summary)
    _emit(text, out)
    return 0


def cmd_feasible(n: int, r: int) -> int:
    feas = feasibility(n, r)
    print(json.dumps({"n": n, "r": r, "feasible_pairs": [list(p) for p in feas.feasible_pairs]}, sort_keys=True))
    return 0 if feas.feasible else 2


def _group_args(p: argparse.ArgumentParser) -> None:
    src = p.add_mutually_exclusive_group()
    src.add_argument("--group", metavar="PATH", help="GroupSpec JSON file")
    src.add_argument("--inline", metavar="JSON", help="GroupSpec JSON text")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="tracecert", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    c = sub.add_parser("certify", help="run the full pipeline and write a bound report")
    _group_args(c)
    c.add_argument("--k", type=int, default=None)
    c.add_argument("--t", type=int, default=2)
    c.add_argument("--seed", type=int, required=True)
    c.add_argument("--trials", type=int, default=DEFAULT_TRIALS)
    c.add_argument("--bound", type=int, default=DEFAULT_BOUND)
    c.add_argument("--strategy", choices=STRATEGIES, default=DEFAULT_STRATEGY)
    c.add_argument("--attempts", type=int, default=DEFAULT_ATTEMPTS)
    c.add_argument("--exact", action="store_true", help="also compute the symbolic determinant")
    c.add_argument("--gate", type=int, default=DEFAULT_GATE)
    c.add_argument("--out", type=Path)

    v = sub.add_parser("verify", help="re-check a certificate or report")
    v.add_argument("certificate", type=Path)

    i = sub.add_parser("inspect", help="coset structure, pi tables and feasibility")
    _group_args(i)
    i.add_argument("--json", action="store_true")
    i.add_argument("--out", type=Path)

    f = sub.add_parser("feasible", help="list feasible k for a group or an (n, r) pair")
    _group_args(f)
    f.add_argument("--n", type=int)
    f.add_argument("--r", type=int)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "verify":
            return cmd_verify(args.certificate)
        if args.command == "feasible":
            if args.n is not None and args.r is not None:
                return cmd_feasible(args.n, args.r)
            cs = build_coset_system(_load_spec(args))
            return cmd_feasible(cs.n, cs.r)
        spec = _load_spec(args)
        if args.command == "inspect":
            return cmd_inspect(spec, args.json, args.out)
        config = RunConfig(
            spec=spec, k=args.k, t=args.t, seed=args.seed, trials=args.trials, bound=args.bound,
            strategy=args.strategy, exact=args.exact, gate=args.gate, attempts=args.attempts, out=args.out,
        )
        return cmd_certify(config)
    except INPUT_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
