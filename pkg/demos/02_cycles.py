"""Cycles, their pairing, and where the product rule breaks.

A cycle is a formal integer combination of hypersurfaces.  Pairing is
extended to cycles componentwise, so degrees multiply.  The reduced variant
adds the two basepoint terms.  The last section shows an input on which the
pairing of a product differs from the product of pairings.
"""

from divtensor import X, parse_cycle, parse_polynomial, reduced_tensor, render_cycle, tensor_cycles, tensor_divisor

eta = parse_cycle("2*[x0] + 1*[x1^2 - x0*x1]")
xi = parse_cycle("1*[y0*y1] + -1*[y2^2]")
out = tensor_cycles(eta, xi)
print("eta =", render_cycle(eta), " degree", eta.degree())
print("xi  =", render_cycle(xi), " degree", xi.degree())
print("eta (x) xi has", len(out.items()), "components, degree", out.degree())

# %% degree-zero classes and the reduced pairing
a = parse_cycle("1*[x0] + -1*[x1]")
b = parse_cycle("1*[y0] + -1*[y1]")
print("\nplain:  ", render_cycle(tensor_cycles(a, b)))
print("reduced:", render_cycle(reduced_tensor(a, b)))

# %% the product rule holds on simple inputs ...
h1, h2 = parse_polynomial("x0", X(2)), parse_polynomial("x1")
g1 = parse_polynomial("y0*y1")
print("\nx0*x1 against y0*y1: product rule holds:",
      tensor_divisor(h1 * h2, g1) == tensor_divisor(h1, g1) * tensor_divisor(h2, g1))

# %% ... but not in general
h = parse_polynomial("x0 + x1")
g = parse_polynomial("y0^2 + y1^2")
lhs = tensor_divisor(h * h, g)
rhs = tensor_divisor(h, g) * tensor_divisor(h, g)
minor = parse_polynomial("z[0,0]*z[1,1] - z[0,1]*z[1,0]")
print("(x0+x1)^2 against y0^2 + y1^2:")
print("  difference =", lhs - rhs)
print("  equals 2*(z[0,0]*z[1,1] - z[0,1]*z[1,0])^2:", lhs - rhs == (minor * minor).scale(2))
