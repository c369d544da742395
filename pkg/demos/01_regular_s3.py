"""
The regular representation of S3 inside S6
===========================================

Build the coset system, print the right-action tables, form the ten
trace functions of height 4 and certify that six of them have a
nonvanishing Jacobian.
"""

from tracecert import build_coset_system, build_family, certify_nonvanishing, jacobian, reverify
from tracecert.groups import example1_spec
from tracecert.permgroup import two_row

cs = build_coset_system(example1_spec())
print(f"n = {cs.n}, r = {cs.r}, |G| = {len(cs.group)}")

# H is trivial, so every coset representative normalizes it and r = n
for j, p in enumerate(cs.pis(), start=1):
    print(two_row(p, f"pi_{j}"))

###############################################################################
# Ten exponent vectors: 2 in the first slot, then two more ones.

vectors, family = build_family(cs, k=3, t=2)
for a, f in zip(vectors.vectors, family.polynomials):
    print(a.entries, "->", f)

###############################################################################
# One nonzero evaluation of the Jacobian determinant is a proof.

matrix = jacobian(family.polynomials[:6], range(1, 7))
cert = certify_nonvanishing(matrix, seed=0)
print(cert.status, "at", cert.witness)
print("det =", cert.det_value)
print("re-check:", reverify(cert, matrix))
