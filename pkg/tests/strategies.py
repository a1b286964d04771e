"""Hypothesis strategies shared by the test modules."""

import numpy as np
from hypothesis import strategies as st

from depjsl.checks.generators import gen_jsl, gen_ug
from depjsl.finrel.finset import FinSet
from depjsl.finrel.relation import Rel


@st.composite
def rels(draw, max_src=4, max_tgt=4, min_size=0):
    n = draw(st.integers(min_size, max_src))
    m = draw(st.integers(min_size, max_tgt))
    cells = draw(st.lists(st.booleans(), min_size=n * m, max_size=n * m))
    return Rel(FinSet.range(n), FinSet.range(m), np.array(cells, dtype=bool).reshape(n, m))



def jsls(max_size=5):
    return st.integers(0, 2**32 - 1).map(lambda seed: gen_jsl(seed, max_size))


def ugraphs(max_v=4):
    return st.integers(0, 2**32 - 1).map(lambda seed: gen_ug(seed, max_v))
