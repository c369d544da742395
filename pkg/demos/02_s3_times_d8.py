"""
S3 x D8 acting on 24 points
===========================

The first factor acts naturally, the second by its regular
representation.  Only the D8 part normalizes the point stabilizer, so
r = 8 and the family uses k = 4.
"""

from tracecert import certify_group
from tracecert.groups import example2_spec

report = certify_group(example2_spec(), k=4, t=2, seed=0)

print(f"n = {report.n}, r = {report.r}, l = {report.l}")
print("status:", report.status)
print("chosen rows:", report.certificate.chosen_indices)
print("exponent from the Jacobian criterion:", report.exponent_theorem)
print("Schmidt exponent:", report.schmidt_exponent)
print("Malle a(G):", report.malle_a)

# the full JSON report is what the command line writes with --out
print(report.to_json()[:400], "...")
