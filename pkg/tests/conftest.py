from fractions import Fraction

import hypothesis.strategies as st
from hypothesis import settings

from prelie_witt.field import BivariatePolynomial, GaussianRational, RationalFunction

settings.register_profile("default", deadline=None)
settings.load_profile("default")

small = st.builds(Fraction, st.integers(-40, 40), st.integers(1, 12))
gaussians = st.builds(GaussianRational, small, small)
nonzero_gaussians = gaussians.filter(lambda z: not z.is_zero())


@st.composite
def polys(draw, max_terms=3, max_deg=2):
    terms = draw(
        st.dictionaries(
            st.tuples(st.integers(0, max_deg), st.integers(0, max_deg)),
            st.builds(Fraction, st.integers(-9, 9), st.integers(1, 4)),
            max_size=max_terms,
        )
    )
    return BivariatePolynomial(terms)


@st.composite
def ratfuncs(draw):
    num = draw(polys())
    den = draw(polys().filter(lambda p: not p.is_zero()))
    return RationalFunction(num, den)


nonzero_ratfuncs = ratfuncs().filter(lambda r: not r.is_zero())

__all__ = ["Fraction", "gaussians", "nonzero_gaussians", "polys", "ratfuncs", "nonzero_ratfuncs", "small"]
