"""Chern classes of ``E (x) L`` and the higher-codimension obstruction.

Everything is exact rational arithmetic in :class:`~divtensor.graded.GradedRing`.

* ``chern_tensor_formula`` is the closed binomial formula for ``ci(E (x) L)``;
  ``chern_tensor_oracle`` recomputes it from formal Chern roots.
* ``pairing_pullback`` is the rational-cohomology pullback of ``i_{2k}`` under
  the pairing on codimension-p cycles times hyperplane cycles.
* ``obstruction_solve`` and ``obstruction_membership`` replay the computation
  showing no such pairing exists in codimension 2: the pullback of ``i4`` is
  forced to contain ``i4 (x) 1``, which the projection onto ``K(Z,2)`` cannot
  produce.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from math import comb

from .errors import DomainError, InvariantViolation
from .graded import GradedClass, GradedRing, RingMap, rank, rref, solve_unique

# --- rings ---------------------------------------------------------------


def chern_ring(r: int, top: int | None = None) -> GradedRing:
    """Generators ``c1(L), c1(E), ..., cr(E)``."""
    names = ["c1(L)"] + [f"c{j}(E)" for j in range(1, r + 1)]
    return GradedRing(names, [1] + list(range(1, r + 1)), top=top)


def root_ring(r: int, with_line: bool = True) -> GradedRing:
    """Formal roots ``t1..tr`` of E (and ``u`` of L), all of weight 1."""
    names = [f"t{k}" for k in range(1, r + 1)] + (["u"] if with_line else [])
    return GradedRing(names, [1] * len(names))


def elementary_ring(r: int) -> GradedRing:
    return GradedRing([f"e{j}" for j in range(1, r + 1)], list(range(1, r + 1)))


def tensor_ring(left: int, right: int) -> GradedRing:
    """``Q[i2, .., i_{2 left}] (x) Q[i2~, .., i_{2 right}~]``, higher classes declared first."""
    names = [f"i{2 * k}" for k in range(left, 0, -1)] + [f"i{2 * k}~" for k in range(right, 0, -1)]
    weights = list(range(left, 0, -1)) + list(range(right, 0, -1))
    return GradedRing(names, weights, split=left)


def projective_ring(n: int) -> GradedRing:
    """``Q[w] / (w^(n+1))``, the cohomology of n-dimensional projective space."""
    return GradedRing(["w"], [1], top=n)


def obstruction_ring() -> GradedRing:
    """``l1 = c1(L1)``, ``l2 = c1(L2)``, ``e1 = c1(E)``, ``e2 = c2(E)``."""
    return GradedRing(["l1", "l2", "e1", "e2"], [1, 1, 1, 2])


def monomials_of_weight(ring: GradedRing, w: int) -> list:
    out = []

    def rec(i, remaining, acc):
        if i == len(ring.weights):
            if remaining == 0:
                out.append(tuple(acc))
            return
        for e in range(remaining // ring.weights[i] + 1):
            rec(i + 1, remaining - e * ring.weights[i], acc + [e])

    rec(0, w, [])
    return sorted(out, reverse=True)


# --- symmetric reduction ---------------------------------------------------


def elementary(ring: GradedRing, j: int, r: int) -> GradedClass:
    """``e_j(t1..tr)`` inside ``ring`` (whose first r generators are the t's)."""
    terms = {}
    for subset in combinations(range(r), j):
        exps = [0] * len(ring.names)
        for s in subset:
            exps[s] = 1
        terms[tuple(exps)] = 1
    return GradedClass(ring, terms)


def is_symmetric(p: GradedClass, r: int) -> bool:
    for s in range(r - 1):
        swapped = {}
        for exps, c in p.terms.items():
            e = list(exps)
            e[s], e[s + 1] = e[s + 1], e[s]
            swapped[tuple(e)] = c
        if swapped != p.terms:
            return False
    return True


def reduce_to_elementary(p: GradedClass) -> GradedClass:
    """Write a symmetric polynomial in ``t1..tr`` as a polynomial in ``e1..er``.

    Leading-term subtraction: the lex-leading monomial ``t^a`` of a symmetric
    polynomial has ``a1 >= a2 >= ... >= ar``, and is cancelled by
    ``e1^(a1-a2) e2^(a2-a3) ... er^ar``.
    """
    ring = p.ring
    r = len(ring.names)
    if any(not n.startswith("t") for n in ring.names):
        raise DomainError("reduce_to_elementary expects a ring generated by roots t1..tr only")
    if not is_symmetric(p, r):
        raise DomainError(f"{p} is not symmetric in {', '.join(ring.names)}")
    target = elementary_ring(r)
    es = [elementary(ring, j, r) for j in range(1, r + 1)]
    result = target.zero()
    rest = p
    steps = 0
    while not rest.is_zero():
        lead = max(rest.terms)
        c = rest.terms[lead]
        powers = [lead[j] - (lead[j + 1] if j + 1 < r else 0) for j in range(r)]
        if any(x < 0 for x in powers):
            raise InvariantViolation(f"leading exponent {lead} of a symmetric residue is not a partition")
        sub = ring.one() * c
        for j, e in enumerate(powers):
            if e:
                sub = sub * es[j] ** e
        rest = rest - sub
        result = result + target.monomial({f"e{j + 1}": e for j, e in enumerate(powers) if e}, c)
        steps += 1
        if steps > 10**5:
            raise InvariantViolation("symmetric reduction did not terminate")
    return result


def expand_elementary(q: GradedClass, r: int) -> GradedClass:
    """Back-substitute ``e_j -> e_j(t1..tr)``."""
    troots = root_ring(r, with_line=False)
    images = {f"e{j}": elementary(troots, j, r) for j in range(1, r + 1)}
    return RingMap(q.ring, troots, images)(q)


# --- Chern classes of E (x) L ---------------------------------------------


def _check_index(r: int, i: int) -> None:
    if r < 1:
        raise DomainError(f"rank must be >= 1, got {r}")
    if not 1 <= i <= r:
        raise DomainError(f"index {i} outside 1..{r}")


def chern_tensor_formula(r: int, i: int) -> GradedClass:
    """``ci(E (x) L) = sum_j C(r-j, i-j) cj(E) c1(L)^(i-j)`` for E of rank r."""
    _check_index(r, i)
    ring = chern_ring(r)
    total = ring.zero()
    for j in range(i + 1):
        cj = ring.one() if j == 0 else ring.gen(f"c{j}(E)")
        total = total + comb(r - j, i - j) * cj * ring.gen("c1(L)") ** (i - j)
    return total


def chern_tensor_oracle(r: int, i: int) -> GradedClass:
    """Splitting-principle recomputation of :func:`chern_tensor_formula`.

    Expand ``prod_k (1 + t_k + u)``, keep weight ``i``, reduce each coefficient
    of ``u^s`` to elementary symmetric functions, then rename
    ``e_j -> cj(E)`` and ``u -> c1(L)``.
    """
    _check_index(r, i)
    roots = root_ring(r)
    total = roots.one()
    u = roots.gen("u")
    for k in range(1, r + 1):
        total = total * (1 + roots.gen(f"t{k}") + u)
    part = total.weight_part(i)

    troots = root_ring(r, with_line=False)
    by_u: dict = {}
    for exps, c in part.terms.items():
        by_u.setdefault(exps[-1], {})[exps[:-1]] = c
    ring = chern_ring(r)
    rename = RingMap(
        elementary_ring(r), ring, {f"e{j}": ring.gen(f"c{j}(E)") for j in range(1, r + 1)}
    )
    result = ring.zero()
    for s, terms in by_u.items():
        sym = GradedClass(troots, terms)
        reduced = reduce_to_elementary(sym)
        if expand_elementary(reduced, r) != sym:
            raise InvariantViolation(f"round trip failed for {sym}")
        result = result + rename(reduced) * ring.gen("c1(L)") ** s
    return result


# --- rational pullback of the pairing --------------------------------------


def tensor_to_chern(p: int) -> RingMap:
    """``i_{2j} -> cj(E)``, ``i_{2l}~ -> c1(L)^l``."""
    src = tensor_ring(p, p)
    ring = chern_ring(p)
    images = {f"i{2 * j}": ring.gen(f"c{j}(E)") for j in range(1, p + 1)}
    images.update({f"i{2 * l}~": ring.gen("c1(L)") ** l for l in range(1, p + 1)})
    return RingMap(src, ring, images)


def pairing_pullback(p: int, k: int) -> GradedClass:
    """``sum_j C(p-j, k-j) i_{2j} (x) i_{2(k-j)}~`` in ``tensor_ring(p, p)``.

    Checked on the way out against :func:`chern_tensor_formula` under
    :func:`tensor_to_chern`.
    """
    if p < 1 or not 1 <= k <= p:
        raise DomainError(f"need 1 <= k <= p, got p={p}, k={k}")
    ring = tensor_ring(p, p)
    total = ring.zero()
    for j in range(k + 1):
        left = ring.one() if j == 0 else ring.gen(f"i{2 * j}")
        right = ring.one() if j == k else ring.gen(f"i{2 * (k - j)}~")
        total = total + comb(p - j, k - j) * left * right
    if tensor_to_chern(p)(total) != chern_tensor_formula(p, k):
        raise InvariantViolation(f"pullback of i{2 * k} disagrees with the Chern formula")
    return total


def hurewicz_pullback(k: int, n: int) -> GradedClass:
    """``w^k`` in the cohomology of projective n-space."""
    if k < 0:
        raise DomainError(f"negative index {k}")
    if k > n:
        raise DomainError(f"w^{k} vanishes in the cohomology of P^{n} (top weight {n})")
    return projective_ring(n).gen("w") ** k


# --- the codimension-2 obstruction -----------------------------------------


@dataclass(frozen=True)
class Equation:
    """Coefficient of one monomial: ``lhs = const + a_coeff*a + b_coeff*b``."""

    monomial: str
    lhs: Fraction
    const: Fraction
    a_coeff: Fraction
    b_coeff: Fraction

    def rhs_text(self) -> str:
        parts = []
        if self.const:
            parts.append(str(self.const))
        for coeff, sym in ((self.a_coeff, "a"), (self.b_coeff, "b")):
            if coeff:
                parts.append(sym if coeff == 1 else f"-{sym}" if coeff == -1 else f"{coeff}{sym}")
        return " + ".join(parts).replace("+ -", "- ") or "0"

    def involves_unknowns(self) -> bool:
        return bool(self.a_coeff or self.b_coeff)

    def __str__(self):
        return f"{self.monomial}: lhs {self.lhs} = rhs {self.rhs_text()}"


@dataclass(frozen=True)
class ObstructionSolution:
    a: Fraction
    b: Fraction
    side_one: GradedClass
    side_two_const: GradedClass
    side_two_a: GradedClass
    side_two_b: GradedClass
    equations: tuple = field(default_factory=tuple)

    def forcing_equations(self) -> list:
        return [e for e in self.equations if e.involves_unknowns()]

    def side_two_text(self) -> str:
        return f"{self.side_two_const} + a*({self.side_two_a}) + b*({self.side_two_b})"


def phi_pullback(k: int) -> GradedClass:
    """``phi*(i_{2k}) = w^k (x) 1 + 1 (x) w^k`` written in ``l1, l2``."""
    obs = obstruction_ring()
    w = hurewicz_pullback(k, 2)
    to_l1 = RingMap(w.ring, obs, {"w": obs.gen("l1")})
    to_l2 = RingMap(w.ring, obs, {"w": obs.gen("l2")})
    return to_l1(w) + to_l2(w)


def obstruction_solve() -> ObstructionSolution:
    """Solve for ``a, b`` in ``rho*(i4) = 1(x)i4 + i2(x)i2 + a i4(x)1 + b i2^2(x)1``.

    Side one pulls ``i4`` back through the two tensor maps and the Chern
    formula for ``L_t (x) E`` (rank 2).  Side two pulls the unknown class back
    through ``phi x id`` plus the basepoint correction, with
    ``phi*(i4) = l1^2 + l2^2`` multiplying ``a`` and ``phi*(i2)^2`` multiplying
    ``b``.  Matching coefficients gives an overdetermined linear system.
    """
    obs = obstruction_ring()
    formula = chern_tensor_formula(2, 2)
    side_one = obs.zero()
    for line in ("l1", "l2"):
        to_obs = RingMap(
            formula.ring,
            obs,
            {"c1(L)": obs.gen(line), "c1(E)": obs.gen("e1"), "c2(E)": obs.gen("e2")},
        )
        side_one = side_one + to_obs(formula)

    src = tensor_ring(2, 2)
    pull = RingMap(
        src,
        obs,
        {
            "i2": phi_pullback(1),
            "i4": phi_pullback(2),
            "i2~": obs.gen("e1"),
            "i4~": obs.gen("e2"),
        },
    )
    # rho part plus the basepoint term L0 (x) xi, which contributes another 1(x)i4
    const = pull(src.monomial({"i2": 1, "i2~": 1}) + 2 * src.gen("i4~"))
    a_part = pull(src.gen("i4"))
    b_part = pull(src.monomial({"i2": 2}))

    keys = sorted(
        set(side_one.terms) | set(const.terms) | set(a_part.terms) | set(b_part.terms),
        key=lambda k: (-obs.weight(k), tuple(-e for e in k)),
    )
    equations = tuple(
        Equation(
            obs.render_monomial(k),
            side_one.coefficient(k),
            const.coefficient(k),
            a_part.coefficient(k),
            b_part.coefficient(k),
        )
        for k in keys
    )
    a, b = solve_unique(
        [[e.a_coeff, e.b_coeff] for e in equations], [e.lhs - e.const for e in equations]
    )
    return ObstructionSolution(a, b, side_one, const, a_part, b_part, equations)


@dataclass(frozen=True)
class MembershipResult:
    member: bool
    target: GradedClass
    image_basis: tuple
    rank_image: int
    rank_augmented: int
    witness: tuple | None  # (monomial text, coefficient) left over after reduction

    def __str__(self):
        verdict = "member" if self.member else "not a member"
        return f"{self.target}: {verdict}"


def obstruction_target(n: int, a=1, b=0) -> GradedClass:
    ring = tensor_ring(n, 2)
    return (
        a * ring.gen("i4")
        + b * ring.monomial({"i2": 2})
        + ring.monomial({"i2": 1, "i2~": 1})
        + ring.gen("i4~")
    )


def obstruction_membership(n: int = 2, a=1, b=0, target: GradedClass | None = None) -> MembershipResult:
    """Is ``target`` in the image of ``(pi1 x id)*`` in weight 2?

    The source ``Q[i2] (x) Q[i2~, i4~]`` maps identically onto its copy in
    ``Q[i2..i_{2n}] (x) Q[i2~, i4~]``.  Membership is decided by comparing
    ranks; on failure the witness is the first coordinate left over after
    reducing ``target`` against the image.
    """
    if n < 2:
        raise DomainError(f"need at least i2 and i4 on the left factor, got n={n}")
    ring = tensor_ring(n, 2)
    if target is None:
        target = obstruction_target(n, a, b)
    src = tensor_ring(1, 2)
    project = RingMap(src, ring, {name: ring.gen(name) for name in src.names})
    image = tuple(project(GradedClass(src, {k: 1})) for k in monomials_of_weight(src, 2))
    coords = monomials_of_weight(ring, 2)

    def vec(cls):
        return [cls.coefficient(k) for k in coords]

    rows = [vec(c) for c in image]
    r_img = rank(rows)
    r_aug = rank(rows + [vec(target)])
    witness = None
    if r_aug > r_img:
        reduced, pivots = rref(rows)
        residual = vec(target)
        for row, col in zip(reduced, pivots):
            f = residual[col]
            if f:
                residual = [x - f * y for x, y in zip(residual, row)]
        k, c = next((k, c) for k, c in zip(coords, residual) if c)
        witness = (ring.render_monomial(k), c)
    return MembershipResult(r_aug == r_img, target, image, r_img, r_aug, witness)
