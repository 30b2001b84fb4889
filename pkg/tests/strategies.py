"""Hypothesis strategies shared by the test modules."""

from hypothesis import strategies as st

from divtensor import Polynomial, VariableSpace

coeffs = st.integers(-9, 9)


@st.composite
def forms(draw, kind="x", size=None, degree=None, max_terms=4, nonzero=True):
    size = size if size is not None else draw(st.integers(1, 3))
    degree = degree if degree is not None else draw(st.integers(1, 3))
    space = VariableSpace(kind, (size,))
    mono = st.lists(st.integers(0, size - 1), min_size=degree, max_size=degree).map(lambda l: tuple(sorted(l)))
    terms = draw(st.dictionaries(mono, coeffs.filter(bool), min_size=1 if nonzero else 0, max_size=max_terms))
    return Polynomial(space, degree, terms)


@st.composite
def same_space_forms(draw, count, kind="x", degrees=None):
    size = draw(st.integers(1, 3))
    out = []
    for k in range(count):
        d = degrees[k] if degrees else draw(st.integers(0, 2))
        out.append(draw(forms(kind, size, d, nonzero=False)))
    return out
