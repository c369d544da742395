"""
Scanning products of symmetric groups
=====================================

Products S_{m1} x ... x S_{mk} x regular(A) give transitive groups with a
large normalizer quotient.  This scan reports, for each, the smallest
feasible k and whether a certificate was found.
"""

from tracecert import certify_group
from tracecert.groups import direct_product_spec, natural_spec, regular_spec, symmetric_product_spec

candidates = {
    "regular(C4)": regular_spec("C4"),
    "regular(C5)": regular_spec("C5"),
    "regular(D8)": regular_spec("D8"),
    "S2 x S2 x regular(S3)": symmetric_product_spec([2, 2, 3]),
    "S3 x regular(C4)": direct_product_spec(natural_spec("S3"), regular_spec("C4")),
}

print(f"{'group':<24}{'n':>4}{'r':>4}{'k':>4}  {'status':<15}{'exponent':>10}{'schmidt':>10}")
for name, spec in candidates.items():
    rep = certify_group(spec, seed=1)
    exponent = "-" if rep.exponent_general is None else str(rep.exponent_general)
    k = "-" if rep.k is None else rep.k
    print(f"{name:<24}{rep.n:>4}{rep.r:>4}{k:>4}  {rep.status:<15}{exponent:>10}{str(rep.schmidt_exponent):>10}")
