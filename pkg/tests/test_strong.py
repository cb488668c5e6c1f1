import pytest
from hypothesis import given, settings

from strongadf import strong
from strongadf.adf import grounded, is_admissible, is_conflict_free, load_adf
from strongadf.errors import PreconditionError
from strongadf.interpretation import all_interpretations, parse_interpretation, trivial
from strongadf.oracle import brute_force_sadm

from .conftest import small_adfs

RUNNING_SADM = ["", "a=t", "d=f", "a=t,d=f", "c=f,d=f", "a=t,c=f,d=f", "a=t,b=t,c=f,d=f"]


def iv(adf, literal=""):
    return parse_interpretation(literal, adf.arguments)


def test_strongly_deniable_depends_on_set(running):
    v = iv(running, "b=t,c=f,d=f")
    ok, proof = strong.strongly_acceptable(running, v, "c", {"d"})
    assert ok
    assert proof.chosen == ("d",)
    assert proof.support[0].chosen == ()
    assert strong.strongly_acceptable(running, v, "c", {"b"}) == (False, None)


def test_redundant_link_needs_no_parents(redundant):
    v = iv(redundant, "a=t")
    ok, proof = strong.strongly_acceptable(redundant, v, "a", set())
    assert ok and proof.chosen == ()
    assert strong.is_strongly_admissible(redundant, v)


def test_exclusion_set_must_hold_target(running):
    with pytest.raises(PreconditionError):
        strong.strongly_acceptable(running, iv(running, "d=f"), "d", set(), excluded={"a"})
    with pytest.raises(PreconditionError):
        strong.strongly_acceptable(running, iv(running, "d=f"), "a", set())


def test_is_strongly_admissible_examples(running, counter):
    assert strong.is_strongly_admissible(running, trivial(running.arguments))
    assert strong.is_strongly_admissible(running, iv(running, "c=f,d=f"))
    assert not strong.is_strongly_admissible(counter, iv(counter, "a=f,b=t"))


def test_least_witness_examples(running, redundant):
    w = strong.least_witness(running, iv(running, "b=t,c=f,d=f"), "c")
    assert w.sorted_ancestors() == ["d"]
    assert strong.least_witness(redundant, iv(redundant, "a=t"), "a").sorted_ancestors() == []
    assert strong.least_witness(running, grounded(running), "a").sorted_ancestors() == []


def test_least_witness_requires_justified(counter):
    with pytest.raises(PreconditionError):
        strong.least_witness(counter, iv(counter, "a=f,b=t"), "a")


def test_max_level_examples(running, redundant):
    v = iv(running, "b=t,c=f,d=f")
    assert strong.max_level(running, v, strong.least_witness(running, v, "c")) == 2
    assert strong.max_level(running, v, strong.least_witness(running, v, "d")) == 1
    v2 = iv(redundant, "a=t")
    assert strong.max_level(redundant, v2, strong.least_witness(redundant, v2, "a")) == 1


def test_witness_members_examples(running):
    v = iv(running, "b=t,c=f,d=f")
    w = strong.least_witness(running, v, "c")
    assert strong.replay(running, w)
    assert strong.witness_members_strong(running, v, w)
    g = grounded(running)
    empty = strong.least_witness(running, g, "a")
    assert strong.witness_members_strong(running, g, empty)
    ok, proof = strong.strongly_acceptable(running, g, "b", {"a", "c", "d"})
    assert ok
    full = strong.Witness("b", g, frozenset("acd"), proof, proof.height)
    assert strong.witness_members_strong(running, g, full)


def test_gamma_sequence_examples(running, counter):
    assert strong.gamma_sequence(running) == [
        iv(running, lit) for lit in ("", "a=t,d=f", "a=t,c=f,d=f", "a=t,b=t,c=f,d=f")
    ]
    assert strong.gamma_sequence(counter) == [trivial(counter.arguments)]
    assert strong.gamma_sequence(load_adf("")) == [trivial([])]


def test_least_bounding_index_examples(running):
    assert strong.least_bounding_index(running, iv(running, "c=f,d=f")) == 2
    assert strong.least_bounding_index(running, trivial(running.arguments)) == 0
    assert strong.least_bounding_index(running, grounded(running)) == 3


def test_enumerate_sadm(running, counter, redundant):
    got = strong.enumerate_strongly_admissible(running)
    assert got == [iv(running, lit) for lit in RUNNING_SADM]
    assert strong.enumerate_strongly_admissible(counter) == [trivial(counter.arguments)]
    assert iv(redundant, "a=t") in strong.enumerate_strongly_admissible(redundant)


def test_max_sadm_below_examples(running):
    assert strong.max_sadm_below(running, iv(running, "a=t,b=f,c=f,d=f")) == iv(running, "a=t,c=f,d=f")
    assert strong.max_sadm_below(running, trivial(running.arguments)) == trivial(running.arguments)
    assert strong.max_sadm_below(running, grounded(running)) == grounded(running)


def test_max_sadm_below_by_filtering_nodes(running):
    nodes = [iv(running, lit) for lit in RUNNING_SADM]
    for v in all_interpretations(running.arguments):
        lower = [w for w in nodes if w <= v]
        best = strong.max_sadm_below(running, v)
        assert best in lower and all(w <= best for w in lower)


def test_sup_inf_examples(running):
    s = lambda lit: iv(running, lit)
    assert strong.supremum(running, s("a=t"), s("d=f")) == s("a=t,d=f")
    assert strong.supremum(running, s("a=t,d=f"), s("c=f,d=f")) == s("a=t,c=f,d=f")
    assert strong.infimum(running, s("a=t,d=f"), s("c=f,d=f")) == s("d=f")
    assert strong.infimum(running, s("a=t"), s("d=f")) == s("")
    with pytest.raises(PreconditionError):
        strong.supremum(running, s("b=t"), s("a=t"))


@settings(max_examples=50, deadline=None)
@given(small_adfs())
def test_sadm_chain_and_brute_force(adf):
    for v in all_interpretations(adf.arguments):
        sadm = strong.is_strongly_admissible(adf, v)
        assert sadm == brute_force_sadm(adf, v)
        if sadm:
            assert is_admissible(adf, v) and is_conflict_free(adf, v)


@settings(max_examples=40, deadline=None)
@given(small_adfs())
def test_gamma_sequence_is_sadm_chain(adf):
    seq = strong.gamma_sequence(adf)
    assert seq[-1] == grounded(adf)
    for lo, hi in zip(seq, seq[1:]):
        assert lo < hi
    assert all(strong.is_strongly_admissible(adf, v) for v in seq)


@settings(max_examples=40, deadline=None)
@given(small_adfs())
def test_witness_properties(adf):
    n = len(adf)
    for v in strong.enumerate_strongly_admissible(adf):
        for a in v.decided():
            w = strong.least_witness(adf, v, a)
            assert strong.replay(adf, w)
            assert strong.witness_members_strong(adf, v, w)
            assert 1 <= strong.max_level(adf, v, w) <= n
            assert w.ancestors <= set(v.decided())


@settings(max_examples=40, deadline=None)
@given(small_adfs())
def test_max_sadm_below_fixpoint_matches_join(adf):
    for v in all_interpretations(adf.arguments):
        assert strong.max_sadm_below(adf, v) == strong.max_sadm_below_by_join(adf, v)
