from hypothesis import strategies as st

from qgoellnitz.colored import ALL_COLORS, ColoredPart
from qgoellnitz.series import MarkerExponents, TruncatedSeries

TRUNC = 8

markers = st.builds(MarkerExponents, *[st.integers(0, 2)] * 4)
small_terms = st.dictionaries(
    st.tuples(st.integers(0, TRUNC), markers), st.integers(-5, 5), max_size=6
)


@st.composite
def series(draw, truncation=TRUNC):
    return TruncatedSeries(draw(small_terms), truncation)


@st.composite
def colored_parts(draw, max_weight=12):
    color = draw(st.sampled_from(ALL_COLORS))
    weight = draw(st.integers(color.min_weight, max_weight))
    return ColoredPart(color, weight)
