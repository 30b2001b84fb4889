import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from strategies import forms

from divtensor import (
    DomainError,
    Polynomial,
    ShapeError,
    X,
    Y,
    Z,
    parse_polynomial,
    psi,
    suspend_linear,
    tensor_divisor,
    tensor_fast,
)
from divtensor.errors import ResourceError
from divtensor.psi import column_form, psi_monomial

EXAMPLE = (
    "z[0,5]^2*z[0,7]^2 - 3*z[0,5]^2*z[1,7]*z[2,7] - 3*z[0,7]^2*z[1,5]*z[2,5] "
    "+ 9*z[1,5]*z[1,7]*z[2,5]*z[2,7]"
)


@pytest.fixture
def fg():
    return parse_polynomial("x0^2 - 3*x1*x2"), parse_polynomial("y5*y7")


def test_grid_rule_monomials():
    assert psi_monomial([(0, 0), (0, 0)], [(5, 7), (5, 7)]) == ((0, 5), (0, 5), (0, 7), (0, 7))
    assert psi_monomial([(0, 0), (1, 2)], [(5, 7), (5, 7)]) == ((0, 5), (0, 5), (1, 7), (2, 7))
    assert psi_monomial([(3,)], [(4,)]) == ((3, 4),)


def test_grid_rule_rejects_bad_shapes():
    with pytest.raises(ShapeError):
        psi_monomial([(0, 0)], [(1,), (2, 3)])
    with pytest.raises(ShapeError):
        psi_monomial([(1, 0)], [(0,), (0,)])


def test_worked_example(fg):
    f, g = fg
    out = tensor_divisor(f, g)
    assert str(out) == EXAMPLE
    assert sorted(c for _, c in out.items()) == [-3, -3, 1, 9]
    assert out.space == Z(3, 8) and out.degree == 4
    assert psi([f, f], [g, g]) == out
    assert tensor_fast(f, g) == out


def test_one_row_grid():
    xs = [parse_polynomial("x1").rehoused(X(3)), parse_polynomial("x2")]
    assert str(psi(xs, [parse_polynomial("y0*y1")])) == "z[1,0]*z[2,1]"


def test_small_goldens():
    x0x1, y0y1 = parse_polynomial("x0*x1"), parse_polynomial("y0*y1")
    assert str(tensor_divisor(x0x1, y0y1)) == "z[0,0]*z[0,1]*z[1,0]*z[1,1]"
    assert str(tensor_divisor(parse_polynomial("x0"), parse_polynomial("y0"))) == "z[0,0]"


@given(forms("x", degree=1), forms("y", degree=1))
def test_segre_hyperplane(f, g):
    expected = {}
    for (i,), a in f.items():
        for (j,), b in g.items():
            expected[((i, j),)] = a * b
    assert dict(tensor_divisor(f, g).terms) == expected


def test_suspension_examples():
    assert str(suspend_linear(parse_polynomial("x0"), parse_polynomial("y0*y1"))) == "z[0,0]*z[0,1]"
    f, g = parse_polynomial("x0 + x1"), parse_polynomial("y0^2")
    assert str(suspend_linear(f, g)) == "z[0,0]^2 + 2*z[0,0]*z[1,0] + z[1,0]^2"
    assert suspend_linear(f, g) == tensor_divisor(f, g)


def test_suspension_needs_linear_f():
    with pytest.raises(DomainError):
        suspend_linear(parse_polynomial("x0^2"), parse_polynomial("y0"))


@settings(max_examples=60)
@given(st.data())
def test_fast_path_matches_naive(data):
    f = data.draw(forms("x"))
    g = data.draw(forms("y"))
    assert tensor_fast(f, g) == tensor_divisor(f, g)


@settings(max_examples=60)
@given(forms("x", degree=1), forms("y"))
def test_suspension_matches_tensor(f, g):
    assert suspend_linear(f, g) == tensor_divisor(f, g)


def test_monomial_f_is_product_of_column_forms():
    f = parse_polynomial("x0*x2")
    g = parse_polynomial("y0^2 - y0*y1 + 4*y1^2")
    zs = Z(3, 2)
    # single choice: each x-copy picks (0, 2), so each column is constant
    expected = column_form(g, (0, 0), zs) * column_form(g, (2, 2), zs)
    assert tensor_fast(f, g) == expected == tensor_divisor(f, g)


@settings(max_examples=40)
@given(st.data())
def test_multilinear_in_first_slot(data):
    size = data.draw(st.integers(1, 3))
    p = data.draw(forms("x", size, 2))
    q = data.draw(forms("x", size, 2))
    other = data.draw(forms("x", size, 2))
    ys = [data.draw(forms("y", 2, 2)), data.draw(forms("y", 2, 2))]
    assert psi([p + q, other], ys) == psi([p, other], ys) + psi([q, other], ys)


def test_stabilization_example(fg):
    f, g = fg
    small = tensor_divisor(f, g)
    big = tensor_divisor(f.rehoused(X(6)), g.rehoused(Y(10)))
    assert dict(small.terms) == dict(big.terms)
    assert big.space == Z(6, 10)


def test_slot_diagnostics_name_the_slot():
    with pytest.raises(ShapeError, match="y-slot 0"):
        psi([parse_polynomial("x1")], [parse_polynomial("y0*y1")])
    with pytest.raises(ShapeError, match="x-slot 1"):
        psi([parse_polynomial("x0"), parse_polynomial("x0^2")], [parse_polynomial("y0^2")])


def test_zero_and_constants_rejected():
    with pytest.raises(DomainError):
        tensor_divisor(Polynomial.zero(X(2), 1), parse_polynomial("y0"))
    with pytest.raises(DomainError):
        tensor_fast(Polynomial.constant(X(1), 3), parse_polynomial("y0"))


def test_wrong_family_rejected():
    with pytest.raises(ShapeError):
        tensor_divisor(parse_polynomial("y0"), parse_polynomial("y1"))


def test_term_cap_guard(fg):
    f, g = fg
    with pytest.raises(ResourceError):
        tensor_divisor(f, g, cap=3)
    with pytest.raises(ResourceError):
        tensor_fast(parse_polynomial("x0 + x1 + x2") ** 3, parse_polynomial("y0 + y1") ** 3, cap=10)
