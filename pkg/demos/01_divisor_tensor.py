"""Pairing two hypersurfaces.

A degree-d form f in x and a degree-e form g in y pair to a degree d*e form
in the variables z[i,j].  Walks through the worked example, the one-line
special cases and the shortcut used for larger inputs.
"""

from divtensor import X, Y, parse_polynomial, psi, suspend_linear, tensor_divisor, tensor_fast
from divtensor.psi import psi_monomial

f = parse_polynomial("x0^2 - 3*x1*x2")
g = parse_polynomial("y5*y7")
print("f =", f, " in", f.space)
print("g =", g, " in", g.space)

# %% one basis choice: rows of the x-grid are x-monomials, rows of the y-grid y-monomials
print("\ngrid for x0^2 against y5*y7, y5*y7:", psi_monomial([(0, 0), (0, 0)], [(5, 7), (5, 7)]))
print("grid for x0^2, x1*x2 against the same:", psi_monomial([(0, 0), (1, 2)], [(5, 7), (5, 7)]))

# %% the full expansion: two copies of f, two copies of g
fg = tensor_divisor(f, g)
print("\nf (x) g =", fg)
print("degree", fg.degree, "=", f.degree, "*", g.degree)
assert psi([f, f], [g, g]) == fg

# %% linear forms give the Segre hyperplane
h = parse_polynomial("x0 - 2*x1")
k = parse_polynomial("3*y0 + y1")
print("\n(x0 - 2*x1) (x) (3*y0 + y1) =", tensor_divisor(h, k))

# %% a linear f can be paired by substitution alone
q = parse_polynomial("y0^2 - y0*y1")
print("by substitution:", suspend_linear(h, q))
print("by expansion:   ", tensor_divisor(h, q))

# %% the factored path only expands the x side; it agrees with the naive one
big_f = parse_polynomial("x0^3 - x1*x2^2 + 5*x0*x1*x2")
big_g = parse_polynomial("y0^2 + 2*y1*y2 - y2^2")
fast = tensor_fast(big_f, big_g)
print(f"\nlarger pair: {len(fast)} terms, fast == naive: {fast == tensor_divisor(big_f, big_g)}")

# %% enlarging the ambient spaces leaves the term table alone
wide = tensor_divisor(f.rehoused(X(6)), g.rehoused(Y(10)))
print("same terms in", wide.space, ":", dict(wide.terms) == dict(fg.terms))
