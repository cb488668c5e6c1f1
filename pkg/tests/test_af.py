import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from strongadf import af as AF
from strongadf.adf import grounded
from strongadf.errors import ParseError, UndeclaredArgumentError
from strongadf.formula import to_text
from strongadf.interpretation import F, T, U


@st.composite
def small_afs(draw, max_args=6):
    n = draw(st.integers(0, max_args))
    names = tuple(f"x{i}" for i in range(n))
    pairs = list(itertools.product(names, repeat=2))
    attacks = draw(st.sets(st.sampled_from(pairs), max_size=len(pairs))) if pairs else set()
    return AF.Af(names, frozenset(attacks))


def test_load_chain(chain):
    assert chain.arguments == ("a", "b", "c")
    assert chain.attacks == {("a", "b"), ("b", "c")}


def test_load_edge_cases():
    assert len(AF.load_af("% comment only\n")) == 0
    assert AF.load_af("arg(a). arg(b). att(a,b).").attacks == {("a", "b")}
    with pytest.raises(UndeclaredArgumentError):
        AF.load_af("att(a,b).\n")
    with pytest.raises(ParseError):
        AF.load_af("arg(a)\n")


def test_strong_defence_examples(chain):
    assert AF.strongly_defended(chain, "a", set())
    assert AF.strongly_defended(chain, "c", {"a", "c"})
    assert not AF.strongly_defended(chain, "c", {"c"})


def test_strongly_admissible_examples(chain):
    assert AF.is_strongly_admissible_ext(chain, {"a", "c"})
    assert not AF.is_strongly_admissible_ext(chain, {"c"})
    assert AF.is_strongly_admissible_ext(chain, set())
    assert AF.enumerate_strongly_admissible_ext(chain) == [frozenset(), {"a"}, {"a", "c"}]


def test_enumerate_small_cases():
    assert AF.enumerate_strongly_admissible_ext(AF.load_af("arg(x). att(x,x).")) == [frozenset()]
    assert AF.enumerate_strongly_admissible_ext(AF.load_af("")) == [frozenset()]


def test_grounded_examples(chain):
    assert AF.grounded_extension(chain) == {"a", "c"}
    assert AF.grounded_extension(AF.load_af("")) == frozenset()
    cycle = AF.load_af("arg(a). arg(b). arg(c). att(a,b). att(b,c). att(c,a).")
    assert AF.grounded_extension(cycle) == frozenset()


def test_af_to_adf(chain):
    adf = AF.af_to_adf(chain)
    assert [to_text(adf.conditions[x]) for x in "abc"] == ["T", "!a", "!b"]
    g = grounded(adf)
    assert (g["a"], g["b"], g["c"]) == (T, F, T)
    assert len(AF.af_to_adf(AF.load_af(""))) == 0
    assert to_text(AF.af_to_adf(AF.load_af("arg(x). att(x,x).")).conditions["x"]) == "!x"


def test_probe_chain(chain):
    report = AF.conjecture_probe(chain)
    pairs = [(r["extension"], r["labelling"]) for r in report.forward]
    assert pairs == [("{}", "{}"), ("{a}", "{a, ¬b}"), ("{a, c}", "{a, ¬b, c}")]
    assert report.summary()["extensions"] == 3


def test_probe_empty():
    report = AF.conjecture_probe(AF.load_af(""))
    assert report.summary()["extensions"] == 1
    assert report.summary()["sadm_interpretations"] == 1


def _defended_naive(af, a, S):
    # textbook recursion, written independently of the module
    rest = set(S) - {a}
    return all(
        any(d in rest and _defended_naive(af, d, rest) for d in (x for x, y in af.attacks if y == c))
        for c in (x for x, y in af.attacks if y == a)
    )


@settings(max_examples=60, deadline=None)
@given(small_afs())
def test_af_properties(af):
    exts = AF.enumerate_strongly_admissible_ext(af)
    g = AF.grounded_extension(af)
    assert frozenset() in exts and g in exts
    assert all(e <= g for e in exts)
    for e in exts:
        assert all(_defended_naive(af, s, e) for s in e)
        assert not any((x, y) in af.attacks for x in e for y in e)
    adf_g = grounded(AF.af_to_adf(af))
    assert {a for a in af.arguments if adf_g[a] is T} == g
    assert adf_g == AF.labelling(af, g)
    assert all(adf_g[a] is not U or a not in g for a in af.arguments)


def test_probe_statistics_are_reproducible():
    stats = AF.probe_statistics(2, 30)
    assert stats == AF.probe_statistics(2, 30)
    assert stats["frameworks"] == 30
    assert stats["extensions"] >= 30  # the empty extension, at least
    assert AF.probe_statistics(2, 0) == {"frameworks": 0}
