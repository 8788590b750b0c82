from fractions import Fraction
from functools import lru_cache

import pytest
from hypothesis import settings, strategies as st

from addact.artin import Presentation, build_algebra
from addact.exactpoly import Poly
from addact.families import catalog6, data_text
from addact.fileformat import parse_text

settings.register_profile("default", deadline=None, max_examples=60, derandomize=True)
settings.load_profile("default")

XY = ("x", "y")
XYZ = ("x", "y", "z")

EXAMPLE_RELATIONS = ["x^4", "x^2*y", "x^3 - y^2"]
EXAMPLE_U = ["x", "y", "x^2", "x*y"]


def rationals(max_num=6, max_den=4):
    return st.builds(Fraction, st.integers(-max_num, max_num), st.integers(1, max_den))


@st.composite
def polys(draw, vars=XY, max_deg=3, max_terms=4):
    n = len(vars)
    monos = st.tuples(*[st.integers(0, max_deg) for _ in range(n)])
    terms = draw(st.dictionaries(monos, rationals(), max_size=max_terms))
    return Poly(vars, terms)


@lru_cache(maxsize=None)
def example_algebra():
    return build_algebra(Presentation.parse(XY, EXAMPLE_RELATIONS))


def example_pair():
    from addact.hpair import make_hpair
    return make_hpair(example_algebra(), EXAMPLE_U, "x^3")


@lru_cache(maxsize=None)
def census():
    return tuple(catalog6())


@lru_cache(maxsize=None)
def fixture_docs():
    """Every bundled pair file: the census, the degenerate example and its core."""
    docs = list(parse_text(data_text("census6.alg")))
    docs += parse_text(data_text("worked_example.alg"))
    docs += parse_text(data_text("worked_example_core.alg"))
    return tuple(docs)


def fixture_pairs():
    from addact.construct import add_variable_pair, shrunk_pair
    pairs = [(d.name, d.hpair()) for d in fixture_docs()]
    core = dict(pairs)["core"]
    pairs.append(("added-variable", add_variable_pair(core)))
    pairs.append(("shrunk-alt", shrunk_pair(core, (1, 0))))
    return pairs


@pytest.fixture(scope="session")
def all_pairs():
    return fixture_pairs()


def pytest_terminal_summary(terminalreporter):
    import sys
    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(mod.RESULTS):
        terminalreporter.write_line(mod.RESULTS[number])
