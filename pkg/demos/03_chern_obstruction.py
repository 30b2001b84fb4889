"""Chern classes of E (x) L and the codimension-2 obstruction.

The closed formula for ci(E (x) L) is checked against formal Chern roots.
Then the linear system for the unknown pullback coefficients (a, b) is solved.
Finally we check that the forced class is not in the image of the projection.
"""

from divtensor import (
    chern_tensor_formula,
    chern_tensor_oracle,
    obstruction_membership,
    obstruction_solve,
    pairing_pullback,
)

for r in range(1, 4):
    for i in range(1, r + 1):
        same = chern_tensor_formula(r, i) == chern_tensor_oracle(r, i)
        print(f"c{i}(E (x) L), rank {r}: {chern_tensor_formula(r, i)}   [roots agree: {same}]")

# %% the cohomology pullback carries the same binomial coefficients
print("\npullback of i4, codimension 3:", pairing_pullback(3, 2))

# %% solve for a, b
sol = obstruction_solve()
print("\nside one:", sol.side_one)
print("side two:", sol.side_two_text())
for e in sol.equations:
    print("  ", e)
print(f"unique solution a = {sol.a}, b = {sol.b}")

# %% membership in the image of the projection
res = obstruction_membership(2)
print("\nimage basis:", ", ".join(map(str, res.image_basis)))
label, coeff = res.witness
print("target:", res.target, "-> member:", res.member, f"(left over: {coeff}*{label})")
alt = obstruction_membership(2, a=0, b=1)
print("with (a, b) = (0, 1) the target", alt.target, "would be a member:", alt.member)
