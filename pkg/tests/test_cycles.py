from pathlib import Path

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from strategies import forms

from divtensor import (
    Cycle,
    DomainError,
    Polynomial,
    ShapeError,
    X,
    Y,
    degree,
    parse_cycle,
    parse_polynomial,
    reduced_tensor,
    render_cycle,
    stabilize,
    tensor_cycles,
    tensor_divisor,
)
from divtensor.cycles import well_definedness_check

GOLDEN = Path(__file__).parent / "golden"


def cyc(src):
    return parse_cycle(src)


@pytest.mark.parametrize(
    "src, deg",
    [("2*[x0] + 1*[x1]", 3), ("1*[x0] + -1*[x1]", 0), ("1*[x0^2 - 3*x1*x2]", 2), ("0", 0)],
)
def test_degree(src, deg):
    assert degree(cyc(src)) == deg


def test_addition_and_negation():
    x0 = cyc("1*[x0]")
    assert x0 + x0 == cyc("2*[x0]")
    assert (x0 + -x0).is_empty()
    f = cyc("1*[x0^2 - 3*x1*x2]")
    assert f.scale(2) + f.scale(-3) == f.scale(-1)
    assert render_cycle(f.scale(-1)) == "-1*[x0^2 - 3*x1*x2]"


def test_effective():
    assert cyc("2*[x0] + 1*[x1]").is_effective()
    assert not cyc("2*[x0] + -1*[x1]").is_effective()


def test_components_must_have_positive_degree():
    with pytest.raises(DomainError):
        Cycle(X(1), [(Polynomial.constant(X(1), 2), 1)])
    with pytest.raises(DomainError):
        Cycle(X(1), [(Polynomial.zero(X(1), 1), 1)])


def test_hyperplane_pairing():
    out = tensor_cycles(cyc("2*[x0]"), stabilize(cyc("3*[y1]"), 2))
    assert render_cycle(out) == "6*[z[0,1]]"
    assert out.degree() == 6


def test_pairing_distributes_over_components():
    f1, f2 = parse_polynomial("x0^2 - x1^2"), parse_polynomial("x0 + 2*x1")
    g = parse_polynomial("y0*y1")
    sp = X(2)
    out = tensor_cycles(Cycle(sp, [(f1, 1), (f2, 1)]), Cycle(Y(2), [(g, 1)]))
    assert out.multiplicity(tensor_divisor(f1, g)) == 1
    assert out.multiplicity(tensor_divisor(f2, g)) == 1


def test_degree_formula_example():
    out = tensor_cycles(cyc("2*[x0] + 1*[x1]"), cyc("1*[y0*y1]"))
    assert out.degree() == 6 == sum(k * p.degree for p, k in out.items())
    zero = tensor_cycles(cyc("1*[x0] + -1*[x1]"), cyc("1*[y0*y1]"))
    assert zero.degree() == 0


def test_reduced_golden():
    out = reduced_tensor(cyc("1*[x0] + -1*[x1]"), cyc("1*[y0] + -1*[y1]"))
    assert render_cycle(out) == (GOLDEN / "reduced_tensor.txt").read_text().strip()
    assert out.degree() == 0


def test_reduced_explicit_basepoints_match_defaults():
    eta, xi = cyc("1*[x0] + -1*[x1]"), cyc("1*[y0] + -1*[y1]")
    assert reduced_tensor(eta, xi, Polynomial.var(X(2), 0), Polynomial.var(Y(2), 0)) == reduced_tensor(eta, xi)


def test_reduced_of_empty_is_empty():
    assert reduced_tensor(Cycle(X(1)), Cycle(Y(1))).is_empty()


def test_reduced_basepoints_must_be_hyperplanes():
    with pytest.raises(DomainError):
        reduced_tensor(cyc("1*[x0]"), cyc("1*[y0]"), eta0=parse_polynomial("x0^2"))


@settings(max_examples=40)
@given(st.data())
def test_reduced_degree_identity(data):
    mults = st.integers(1, 3)
    eta = Cycle(X(2), [(data.draw(forms("x", 2)), data.draw(mults))])
    xi = Cycle(Y(2), [(data.draw(forms("y", 2)), data.draw(mults))])
    d, e = eta.degree(), xi.degree()
    assert reduced_tensor(eta, xi).degree() == d * e + d + e


@settings(max_examples=40)
@given(st.data())
def test_degree_is_multiplicative(data):
    mults = st.sampled_from([-3, -2, -1, 1, 2, 3])
    eta = Cycle(X(2), [(data.draw(forms("x", 2)), data.draw(mults)) for _ in range(2)])
    xi = Cycle(Y(3), [(data.draw(forms("y", 3)), data.draw(mults)) for _ in range(2)])
    assert tensor_cycles(eta, xi).degree() == eta.degree() * xi.degree()


@pytest.mark.parametrize(
    "f1, f2, g",
    [("x0", "x1", "y0*y1"), ("x0 + x1", "x0 + x1", "y0^2"), ("x0^2 - 3*x1*x2", "x0", "y5*y7")],
)
def test_well_definedness_examples(f1, f2, g):
    a, b = parse_polynomial(f1), parse_polynomial(f2)
    sp = X(max(a.space.shape[0], b.space.shape[0]))
    assert well_definedness_check(a.rehoused(sp), b.rehoused(sp), parse_polynomial(g))


def test_product_rule_fails_off_the_linear_case():
    # smallest known input where the product rule breaks; kept as a regression
    h = parse_polynomial("x0 + x1")
    g = parse_polynomial("y0^2 + y1^2")
    assert not well_definedness_check(h, h, g)
    diff = tensor_divisor(h * h, g) - tensor_divisor(h, g) * tensor_divisor(h, g)
    minor = parse_polynomial("z[0,0]*z[1,1] - z[0,1]*z[1,0]")
    assert diff == (minor * minor).scale(2)


def test_stabilize():
    c = stabilize(cyc("1*[x0]"), 5)
    assert c.space == X(5) and c.degree() == 1
    assert render_cycle(tensor_cycles(c, cyc("1*[y0]"))) == "1*[z[0,0]]"
    with pytest.raises(ShapeError):
        stabilize(c, 2)
