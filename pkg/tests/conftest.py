import pathlib

import pytest
from hypothesis import strategies as st

from strongadf import formula as fm
from strongadf.adf import Adf, load_adf
from strongadf.af import load_af

DATA = pathlib.Path(__file__).parent / "data"


@pytest.fixture
def data_dir():
    return DATA


@pytest.fixture
def running():
    return load_adf((DATA / "running.adf").read_text())


@pytest.fixture
def redundant():
    return load_adf((DATA / "redundant.adf").read_text())


@pytest.fixture
def counter():
    """a: !b | a, b: !a -- admissible but not strongly admissible interpretations."""
    return load_adf((DATA / "counter.adf").read_text())


@pytest.fixture
def chain():
    return load_af((DATA / "chain.af").read_text())


def formulas(names, max_leaves=8):
    leaves = st.one_of(
        st.sampled_from([fm.TOP, fm.BOTTOM]),
        st.sampled_from([fm.Atom(n) for n in names]),
    )
    binary = st.sampled_from([fm.And, fm.Or, fm.Implies, fm.Iff])
    return st.recursive(
        leaves,
        lambda kids: st.one_of(
            kids.map(fm.Not),
            st.builds(lambda op, l, r: op(l, r), binary, kids, kids),
        ),
        max_leaves=max_leaves,
    )


@st.composite
def small_adfs(draw, max_args=4):
    n = draw(st.integers(1, max_args))
    names = [chr(ord("a") + i) for i in range(n)]
    conds = {a: draw(formulas(names, max_leaves=5)) for a in names}
    return Adf(tuple(names), conds)


def pytest_terminal_summary(terminalreporter):
    from .test_acceptance import RESULTS

    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for number in sorted(RESULTS):
            terminalreporter.write_line(RESULTS[number])
