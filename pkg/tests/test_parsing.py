import pytest
from hypothesis import given
from strategies import forms

from divtensor import ParseError, Polynomial, X, Y, parse_cycle, parse_polynomial, render, render_cycle


def test_example_inputs():
    f = parse_polynomial("x0^2 - 3*x1*x2")
    assert f == Polynomial(X(3), 2, {(0, 0): 1, (1, 2): -3})
    assert f.space == X(3)
    g = parse_polynomial("y5*y7")
    assert g.space == Y(8) and g.degree == 2


def test_whitespace_and_signs():
    assert parse_polynomial(" - x0 +x1 ") == parse_polynomial("-x0 + x1")
    assert str(parse_polynomial("2 * x1 * x0 + x0*x1")) == "3*x0*x1"


def test_z_variables_parse():
    p = parse_polynomial("z[0,5]^2*z[0,7]^2 - 3*z[ 1 , 7 ]*z[2,7]*z[0,5]^2")
    assert p.space.shape == (3, 8) and p.degree == 4


def test_inhomogeneous_reports_both_degrees_and_column():
    with pytest.raises(ParseError) as info:
        parse_polynomial("x0 + x1^2")
    err = info.value
    assert "degrees 1 and 2" in str(err)
    assert (err.line, err.col) == (1, 6)
    assert str(err).splitlines()[-1] == "       ^"


def test_mixed_family():
    with pytest.raises(ParseError, match="mixed variable families"):
        parse_polynomial("x0*y1")


def test_implicit_multiplication_rejected():
    with pytest.raises(ParseError, match=r"explicit '\*'"):
        parse_polynomial("3x0")
    with pytest.raises(ParseError, match=r"explicit '\*'"):
        parse_polynomial("x0 x1")


def test_line_numbers_on_multiline_input():
    with pytest.raises(ParseError) as info:
        parse_polynomial("x0 +\n x1 ^ ")
    assert info.value.line == 2


@pytest.mark.parametrize("bad", ["", "x", "x0 +", "x0 ^ y1", "x0 $ x1", "(x0)"])
def test_syntax_errors(bad):
    with pytest.raises(ParseError):
        parse_polynomial(bad)


def test_space_argument_checks_bounds():
    assert parse_polynomial("x1", X(4)).space == X(4)
    with pytest.raises(ParseError):
        parse_polynomial("x4", X(4))
    with pytest.raises(ParseError):
        parse_polynomial("y0", X(4))


def test_cycle_syntax():
    c = parse_cycle("2*[x0^2 - 3*x1*x2] + -1*[x0]")
    assert render_cycle(c) == "2*[x0^2 - 3*x1*x2] + -1*[x0]"
    assert parse_cycle("1*[x0] - 1*[x1]") == parse_cycle("1*[x0] + -1*[x1]")
    assert parse_cycle("0").is_empty()


def test_cycle_errors():
    with pytest.raises(ParseError):
        parse_cycle("[x0]")
    with pytest.raises(ParseError):
        parse_cycle("1*[x0] + 1*[y0]")
    with pytest.raises(ParseError):
        parse_cycle("1*[3]")


@given(forms("x"))
def test_round_trip_x(p):
    assert parse_polynomial(render(p)) == p


@given(forms("y", max_terms=6))
def test_round_trip_y(p):
    assert parse_polynomial(render(p)) == p


@given(forms("x"))
def test_round_trip_in_given_space(p):
    q = parse_polynomial(render(p), p.space)
    assert q == p and q.space == p.space
