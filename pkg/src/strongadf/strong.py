"""Strong acceptability/deniability and strongly admissible interpretations.

A decided argument ``a`` is strongly justified in ``v`` w.r.t. an ancestor
set ``S`` when some parent set ``P ⊆ (par(a) ∩ S) \\ E`` already fixes φ_a
to ``v(a)`` under ``v`` restricted to ``P``, and every ``p ∈ P`` is in turn
strongly justified with ``E ∪ {p}``. ``E`` starts as ``{a}`` and grows along
each recursion path separately, so no argument is used twice on one path.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import reduce
from typing import Iterable, Optional

from .adf import DEFAULT_ENUM_CAP, Adf, gamma
from .errors import CapExceededError, PreconditionError
from .interpretation import U, Interpretation, all_interpretations, below, join, meet


@dataclass(frozen=True)
class Justification:
    """One node of a strong-acceptability proof tree.

    ``excluded`` is the path set E in force when this node was checked;
    ``support`` holds one subtree per member of the chosen parent set.
    """

    argument: str
    excluded: frozenset[str]
    support: tuple["Justification", ...] = ()

    @property
    def chosen(self) -> tuple[str, ...]:
        return tuple(child.argument for child in self.support)

    @property
    def height(self) -> int:
        return 1 + max((c.height for c in self.support), default=0)

    def walk(self):
        yield self
        for child in self.support:
            yield from child.walk()


@dataclass(frozen=True)
class Witness:
    """Certificate that ``target`` is strongly acceptable/deniable in ``interpretation``."""

    target: str
    interpretation: Interpretation
    ancestors: frozenset[str]
    proof: Justification
    level: int

    @property
    def chosen_parents(self) -> dict[str, tuple[str, ...]]:
        """Parent set picked at the first visit of each argument (preorder)."""
        out: dict[str, tuple[str, ...]] = {}
        for node in self.proof.walk():
            out.setdefault(node.argument, node.chosen)
        return out

    def sorted_ancestors(self) -> list[str]:
        order = {a: i for i, a in enumerate(self.interpretation.universe)}
        return sorted(self.ancestors, key=order.__getitem__)


class _Prover:
    """Proof search for one (framework, interpretation, ancestor set)."""

    def __init__(self, adf: Adf, v: Interpretation, ancestors: Iterable[str]):
        self.adf = adf
        self.v = v
        self.ancestors = frozenset(ancestors)
        self._first: dict = {}
        self._best: dict = {}

    def _candidate_sets(self, a: str, excluded: frozenset[str]):
        cands = [
            p for p in self.adf.parents[a]
            if p in self.ancestors and p not in excluded and self.v[p] is not U
        ]
        v = self.v
        target = v[a]
        for k in range(len(cands) + 1):
            for P in itertools.combinations(cands, k):
                if self.adf.condition_status(a, {p: v[p] for p in P}) is target:
                    yield P

    def first(self, a: str, excluded: frozenset[str]) -> Optional[Justification]:
        """First proof found: smallest qualifying P, then declaration order."""
        key = (a, excluded)
        if key in self._first:
            return self._first[key]
        result = None
        for P in self._candidate_sets(a, excluded):
            subs = []
            for p in P:
                sub = self.first(p, excluded | {p})
                if sub is None:
                    break
                subs.append(sub)
            else:
                result = Justification(a, excluded, tuple(subs))
                break
        self._first[key] = result
        return result

    def shallowest(self, a: str, excluded: frozenset[str]) -> Optional[Justification]:
        """Proof of least height; ties go to the earlier P in search order."""
        key = (a, excluded)
        if key in self._best:
            return self._best[key]
        best = None
        for P in self._candidate_sets(a, excluded):
            subs = []
            for p in P:
                sub = self.shallowest(p, excluded | {p})
                if sub is None:
                    break
                subs.append(sub)
            else:
                node = Justification(a, excluded, tuple(subs))
                if best is None or node.height < best.height:
                    best = node
                    if best.height == 1:
                        break
        self._best[key] = best
        return best


def _require_decided(v: Interpretation, a: str):
    if v[a] is U:
        raise PreconditionError(f"argument {a!r} is undecided in the interpretation")


def strongly_acceptable(
    adf: Adf,
    v: Interpretation,
    a: str,
    ancestors: Iterable[str],
    excluded: Optional[Iterable[str]] = None,
) -> tuple[bool, Optional[Justification]]:
    """Is *a* strongly acceptable (v(a)=t) or deniable (v(a)=f) w.r.t. *v* and
    the ancestor set? *excluded* defaults to ``{a}`` and must contain *a*."""
    adf.check_domain(v)
    _require_decided(v, a)
    excluded = frozenset({a} if excluded is None else excluded)
    if a not in excluded:
        raise PreconditionError("the exclusion set must contain the argument itself")
    proof = _Prover(adf, v, ancestors).first(a, excluded)
    return proof is not None, proof


def is_strongly_admissible(adf: Adf, v: Interpretation) -> bool:
    """Every decided argument is strongly justified.

    Checked with the largest possible ancestor set (all decided arguments):
    enlarging the ancestor set only adds candidate parent sets, so if any set
    works this one does.
    """
    adf.check_domain(v)
    decided = v.decided()
    prover = _Prover(adf, v, decided)
    return all(prover.first(a, frozenset({a})) is not None for a in decided)


def _ancestor_candidates(v: Interpretation):
    names = sorted(v.decided())
    for k in range(len(names) + 1):
        yield from itertools.combinations(names, k)


def least_witness(adf: Adf, v: Interpretation, a: str) -> Witness:
    """Witness with a minimum-size ancestor set (ties: lexicographic on sorted names)."""
    adf.check_domain(v)
    _require_decided(v, a)
    root = frozenset({a})
    for S in _ancestor_candidates(v):
        proof = _Prover(adf, v, S).shallowest(a, root)
        if proof is not None:
            return Witness(a, v, frozenset(S), proof, proof.height)
    raise PreconditionError(f"argument {a!r} is not strongly acceptable/deniable in {v.to_set_notation()}")


def replay(adf: Adf, w: Witness) -> bool:
    """Re-check every node of the witness proof against the definition."""
    v = w.interpretation
    for node in w.proof.walk():
        a = node.argument
        if v[a] is U or a not in node.excluded:
            return False
        P = node.chosen
        if len(set(P)) != len(P):
            return False
        for p in P:
            if p not in adf.parents[a] or p not in w.ancestors or p in node.excluded or v[p] is U:
                return False
        for child in node.support:
            if child.excluded != node.excluded | {child.argument}:
                return False
        if adf.condition_status(a, v.restrict(P)) is not v[a]:
            return False
    return w.proof.argument == w.target and w.proof.excluded == frozenset({w.target})


def max_level(adf: Adf, v: Interpretation, w: Witness) -> int:
    """Maximum level of the witness target in its ancestor set.

    1 when the chosen parent set is empty, else one more than the largest
    level among the chosen parents. Where several parent sets qualify, the
    one giving the smallest level is used.
    """
    if w.interpretation != v or not replay(adf, w):
        raise PreconditionError("invalid witness for this framework and interpretation")
    proof = _Prover(adf, v, w.ancestors).shallowest(w.target, frozenset({w.target}))
    return proof.height


def witness_members_strong(adf: Adf, v: Interpretation, w: Witness) -> bool:
    """Each ancestor in the witness is itself strongly justified within the witness set."""
    if w.interpretation != v or not replay(adf, w):
        raise PreconditionError("invalid witness for this framework and interpretation")
    prover = _Prover(adf, v, w.ancestors)
    return all(prover.first(s, frozenset({s})) is not None for s in w.ancestors)


def gamma_sequence(adf: Adf) -> list[Interpretation]:
    """v_0 = trivial, v_{i+1} = Γ(v_i), up to and including the first fixpoint."""
    seq = [adf.trivial()]
    while True:
        nxt = gamma(adf, seq[-1])
        if nxt == seq[-1]:
            return seq
        seq.append(nxt)


def least_bounding_index(adf: Adf, w: Interpretation) -> int:
    """Smallest m with w ≤ v_m in the Γ-sequence."""
    if not is_strongly_admissible(adf, w):
        raise PreconditionError("interpretation is not strongly admissible")
    for m, vm in enumerate(gamma_sequence(adf)):
        if w <= vm:
            return m
    raise AssertionError("strongly admissible interpretation above grounded")  # pragma: no cover


def enumerate_strongly_admissible(adf: Adf, cap: int = DEFAULT_ENUM_CAP) -> list[Interpretation]:
    if len(adf) > cap:
        raise CapExceededError("sadm enumeration", len(adf), cap)
    return [v for v in all_interpretations(adf.arguments) if is_strongly_admissible(adf, v)]


def max_sadm_below(adf: Adf, v: Interpretation) -> Interpretation:
    """Join of every strongly admissible w ≤ v.

    Computed as a greatest fixpoint: reset to ``u`` every decided argument not
    strongly justified in the current restriction, until nothing changes. Any
    strongly admissible w ≤ v stays below each step, since justification
    only gets easier with more decided arguments around, and the fixpoint is
    itself strongly admissible.
    """
    adf.check_domain(v)
    w = v
    while True:
        decided = w.decided()
        prover = _Prover(adf, w, decided)
        keep = [a for a in decided if prover.first(a, frozenset({a})) is not None]
        if len(keep) == len(decided):
            return w
        w = w.restrict(keep)


def max_sadm_below_by_join(adf: Adf, v: Interpretation) -> Interpretation:
    """Definitional version: fold join over the 2^k restrictions of v that are sadm."""
    adf.check_domain(v)
    lower = [w for w in below(v) if is_strongly_admissible(adf, w)]
    return reduce(join, lower, adf.trivial())


def _require_sadm(adf: Adf, *vs: Interpretation):
    for x in vs:
        if not is_strongly_admissible(adf, x):
            raise PreconditionError(f"{x.to_set_notation()} is not strongly admissible")


def supremum(adf: Adf, v: Interpretation, w: Interpretation) -> Interpretation:
    _require_sadm(adf, v, w)
    return join(v, w)


def infimum(adf: Adf, v: Interpretation, w: Interpretation) -> Interpretation:
    _require_sadm(adf, v, w)
    return max_sadm_below(adf, meet(v, w))
