"""Independent reference deciders and seeded differential testing.

Nothing here reuses the proof search in :mod:`strongadf.strong` or the
tabulated condition statuses of :class:`~strongadf.adf.Adf`. Conditions are
evaluated through the formula tree (partial valuation, then classification
by enumeration), so a bug in either fast path shows up as a discrepancy.
"""

from __future__ import annotations

import itertools
import json
import random
import weakref
from dataclasses import asdict, dataclass
from typing import Iterable, Optional

from . import formula as fm
from .adf import Adf, grounded, is_admissible, is_conflict_free
from .errors import CapExceededError, JoinConflictError, LatticeViolationError
from .interpretation import F, T, U, Interpretation, all_interpretations, join, trivial, update
from .lattice import build_lattice
from . import strong

BRUTE_FORCE_CAP = 6

_CLASS_VALUE = {
    fm.FormulaClass.TAUTOLOGY: "t",
    fm.FormulaClass.UNSATISFIABLE: "f",
    fm.FormulaClass.CONTINGENT: "u",
}


_status_memo: "weakref.WeakKeyDictionary[Adf, dict]" = weakref.WeakKeyDictionary()


def _status(adf: Adf, a: str, v: Interpretation, keep: Iterable[str]) -> str:
    """Status of φ_a under *v* restricted to *keep*, via the formula tree.

    Memoised on a's parent values, so the restriction is only built on a miss.
    """
    memo = _status_memo.setdefault(adf, {})
    keep = set(keep)
    key = (a, tuple(v[p] if p in keep else U for p in adf.parents[a]))
    if key not in memo:
        phi = fm.partial_valuation(adf.conditions[a], v.restrict(keep))
        memo[key] = _CLASS_VALUE[fm.classify(phi)]
    return memo[key]


# --------------------------------------------------------------------------
# Random instances


@dataclass(frozen=True)
class AdfSample:
    seed: int
    size: int
    formulas: tuple[str, ...]
    adf: Adf


def random_formula(rng: random.Random, pool: list[str], depth: int) -> fm.Formula:
    """Random formula over {¬, ∧, ∨} of depth at most *depth*."""
    if depth == 0 or not pool or rng.random() < 0.3:
        if not pool or rng.random() < 0.1:
            return fm.Const(rng.random() < 0.5)
        return fm.Atom(rng.choice(pool))
    op = rng.choice(("not", "and", "or"))
    if op == "not":
        return fm.Not(random_formula(rng, pool, depth - 1))
    cls = fm.And if op == "and" else fm.Or
    return cls(random_formula(rng, pool, depth - 1), random_formula(rng, pool, depth - 1))


def sample_seed(seed: int, index: int) -> int:
    return seed * 1_000_003 + index


def generate_sample(seed: int, max_args: int = 5, depth: int = 3) -> AdfSample:
    rng = random.Random(seed)
    n = rng.randint(1, max_args)
    names = [chr(ord("a") + i) for i in range(n)]
    conditions = {}
    for a in names:
        pool = rng.sample(names, rng.randint(0, min(n, 3)))
        conditions[a] = random_formula(rng, pool, depth)
    adf = Adf(tuple(names), conditions)
    return AdfSample(seed, n, tuple(fm.to_text(conditions[a]) for a in names), adf)


def samples(seed: int, count: int, max_args: int = 5) -> list[AdfSample]:
    return [generate_sample(sample_seed(seed, i), max_args) for i in range(count)]


# --------------------------------------------------------------------------
# Reference deciders


def iterative_justification(adf: Adf, v: Interpretation) -> bool:
    """Bottom-up closure: repeatedly admit decided arguments whose condition is
    already settled to their value by the arguments admitted so far."""
    adf.check_domain(v)
    decided = set(v.decided())
    justified: set[str] = set()
    while True:
        new = {a for a in decided - justified if _status(adf, a, v, justified) == v[a].value}
        if not new:
            return justified == decided
        justified |= new


def _definitional(adf: Adf, v: Interpretation, ancestors: frozenset[str]):
    """Memoised strong acceptability w.r.t. one ancestor set, by plain search
    over every parent subset (undecided members are allowed and simply fail
    the recursive clause)."""
    memo: dict = {}

    def sa(a: str, excluded: frozenset[str]) -> bool:
        key = (a, excluded)
        if key not in memo:
            memo[key] = False
            pool = [p for p in adf.parents[a] if p in ancestors and p not in excluded]
            want = v[a].value
            found = False
            for k in range(len(pool) + 1):
                for P in itertools.combinations(pool, k):
                    if _status(adf, a, v, P) != want:
                        continue
                    if all(v[p] is not U and sa(p, excluded | {p}) for p in P):
                        found = True
                        break
                if found:
                    break
            memo[key] = found
        return memo[key]

    return sa


def brute_force_acceptable(adf: Adf, v: Interpretation, a: str) -> bool:
    """Is there any ancestor set at all for which *a* is strongly justified?"""
    for k in range(len(adf) + 1):
        for S in itertools.combinations(adf.arguments, k):
            if _definitional(adf, v, frozenset(S))(a, frozenset({a})):
                return True
    return False


def brute_force_sadm(adf: Adf, v: Interpretation, cap: int = BRUTE_FORCE_CAP) -> bool:
    if len(adf) > cap:
        raise CapExceededError("brute-force sadm", len(adf), cap)
    adf.check_domain(v)
    return all(brute_force_acceptable(adf, v, a) for a in v.decided())


def level_range(adf: Adf, v: Interpretation, a: str, ancestors: Iterable[str]) -> Optional[tuple[int, int]]:
    """(min, max) proof height over every valid choice of parent sets."""
    ancestors = frozenset(ancestors)
    memo: dict = {}

    def rng(x: str, excluded: frozenset[str]):
        key = (x, excluded)
        if key in memo:
            return memo[key]
        lo = hi = None
        pool = [p for p in adf.parents[x] if p in ancestors and p not in excluded and v[p] is not U]
        for k in range(len(pool) + 1):
            for P in itertools.combinations(pool, k):
                if _status(adf, x, v, P) != v[x].value:
                    continue
                subs = [rng(p, excluded | {p}) for p in P]
                if any(s is None for s in subs):
                    continue
                here_lo = 1 + max((s[0] for s in subs), default=0)
                here_hi = 1 + max((s[1] for s in subs), default=0)
                lo = here_lo if lo is None else min(lo, here_lo)
                hi = here_hi if hi is None else max(hi, here_hi)
        memo[key] = None if lo is None else (lo, hi)
        return memo[key]

    return rng(a, frozenset({a}))


# --------------------------------------------------------------------------
# Differential sweep


@dataclass(frozen=True)
class Discrepancy:
    seed: int
    interpretation: str
    operation: str
    main: str
    oracle: str
    finding: bool = False  # informational; does not fail the sweep

    def to_json(self) -> str:
        return json.dumps(asdict(self), ensure_ascii=False, sort_keys=True)


# Hard checks, in the order they are reported.
THEOREM_CHECKS = (
    "soundness_chain",
    "gamma_sequence",
    "join",
    "max_sadm_below",
    "lattice",
    "bounding_index",
    "witness_members",
    "max_level",
    "monotonicity",
    "brute_force_sadm",
)
FINDINGS = ("iterative_justification", "level_choice", "bounding_vs_level", "below_grounded")


def check_sample(sample: AdfSample, with_oracles: bool = True) -> list[Discrepancy]:
    """Run every decider and every strong-admissibility property on one sample."""
    adf, seed = sample.adf, sample.seed
    out: list[Discrepancy] = []

    def report(op, v, main, oracle, finding=False):
        label = v.to_set_notation() if isinstance(v, Interpretation) else str(v)
        out.append(Discrepancy(seed, label, op, str(main), str(oracle), finding))

    space = all_interpretations(adf.arguments)
    grd = grounded(adf)
    sadm_flags = {v: strong.is_strongly_admissible(adf, v) for v in space}
    sadm = [v for v in space if sadm_flags[v]]
    sadm_set = set(sadm)

    for v in space:
        is_s = sadm_flags[v]
        # (i) sadm => adm => cf
        adm, cf = is_admissible(adf, v), is_conflict_free(adf, v)
        if (is_s and not adm) or (adm and not cf):
            report("soundness_chain", v, f"sadm={is_s} adm={adm}", f"cf={cf}")
        if with_oracles:
            bf = brute_force_sadm(adf, v)
            if bf != is_s:
                report("brute_force_sadm", v, is_s, bf)
            closure = iterative_justification(adf, v)
            if closure != is_s:
                report("iterative_justification", v, is_s, closure, finding=True)
        # below grounded but not sadm: recorded, not asserted
        if not is_s and v <= grd:
            report("below_grounded", v, "not sadm", f"<= {grd.to_set_notation()}", finding=True)
        # (iv) unique maximum sadm below v
        msb = strong.max_sadm_below(adf, v)
        lower = [w for w in sadm if w <= v]
        maximal = [w for w in lower if not any(w < x for x in lower)]
        if msb not in sadm_set or not msb <= v or maximal != [msb]:
            report("max_sadm_below", v, msb.to_set_notation(),
                   ",".join(w.to_set_notation() for w in maximal))

    # (ii) the Γ-sequence
    seq = strong.gamma_sequence(adf)
    for i, vi in enumerate(seq):
        if vi not in sadm_set:
            report("gamma_sequence", vi, f"v_{i} not sadm", "sadm")
        if i and not (seq[i - 1] < vi):
            report("gamma_sequence", vi, f"v_{i - 1} not < v_{i}", "strictly increasing")
    if seq[-1] != grd:
        report("gamma_sequence", seq[-1], "last element", grd.to_set_notation())

    # (iii) join of sadm pairs: defined, sadm, least upper bound in the set
    for v, w in itertools.combinations_with_replacement(sadm, 2):
        try:
            j = join(v, w)
        except JoinConflictError as exc:
            report("join", v, f"conflict with {w.to_set_notation()}", str(exc))
            continue
        uppers = [x for x in sadm if v <= x and w <= x]
        if j not in sadm_set or not all(j <= x for x in uppers):
            report("join", v, f"join with {w.to_set_notation()} = {j.to_set_notation()}", "least sadm upper bound")
        inf = strong.infimum(adf, v, w)
        lowers = [x for x in sadm if x <= v and x <= w]
        if inf not in lowers or not all(x <= inf for x in lowers):
            report("lattice", v, f"inf with {w.to_set_notation()} = {inf.to_set_notation()}", "greatest sadm lower bound")

    # (v) lattice with trivial bottom and grounded top
    try:
        lat = build_lattice(adf)
        if lat.nodes[lat.bottom] != trivial(adf.arguments) or lat.nodes[lat.top] != grd:
            report("lattice", lat.nodes[lat.top], "top/bottom", grd.to_set_notation())
        if list(lat.nodes) != sadm:
            report("lattice", "nodes", len(lat.nodes), len(sadm))
    except LatticeViolationError as exc:
        report("lattice", "build", str(exc), "lattice")

    for w in sadm:
        # (vi) least bounding index
        m = strong.least_bounding_index(adf, w)
        if not w <= seq[m] or (m > 0 and w <= seq[m - 1]):
            report("bounding_index", w, m, "least m with w <= v_m")
        deepest = 0
        for a in w.decided():
            wit = strong.least_witness(adf, w, a)
            # (vii) members of a least witness re-verify inside it
            if not strong.replay(adf, wit) or not strong.witness_members_strong(adf, w, wit):
                report("witness_members", w, f"{a}: S={sorted(wit.ancestors)}", "members strongly justified")
            if with_oracles and _smaller_set_exists(adf, w, a, len(wit.ancestors)):
                report("witness_members", w, f"{a}: |S|={len(wit.ancestors)}", "smaller ancestor set exists")
            # (viii) finite, bounded maximum level
            lvl = strong.max_level(adf, w, wit)
            if not 1 <= lvl <= len(adf) or lvl != wit.level:
                report("max_level", w, f"{a}: level {lvl}", f"1..{len(adf)}")
            if with_oracles:
                lo, hi = level_range(adf, w, a, wit.ancestors)
                if lo != lvl:
                    report("max_level", w, f"{a}: level {lvl}", f"oracle min {lo}")
                if lo != hi:
                    report("level_choice", w, f"{a}: min {lo}", f"max {hi}", finding=True)
            # monotonicity in the ancestor set
            for x in adf.arguments:
                if x not in wit.ancestors and not strong.strongly_acceptable(adf, w, a, wit.ancestors | {x})[0]:
                    report("monotonicity", w, f"{a} fails with S+{x}", "acceptable")
            full = strong._Prover(adf, w, w.decided()).shallowest(a, frozenset({a}))
            deepest = max(deepest, full.height)
        if deepest != m:
            report("bounding_vs_level", w, f"index {m}", f"max level {deepest}", finding=True)

    # monotonicity in the interpretation, one update step at a time
    for v in space:
        S = v.decided()
        ok = [a for a in S if strong.strongly_acceptable(adf, v, a, S)[0]]
        if not ok:
            continue
        for b in adf.arguments:
            if v[b] is not U:
                continue
            for x in (T, F):
                v2 = update(v, b, x)
                for a in ok:
                    if not strong.strongly_acceptable(adf, v2, a, S)[0]:
                        report("monotonicity", v, f"{a} lost after {b}={x}", "acceptable")
    return out


def _smaller_set_exists(adf: Adf, v: Interpretation, a: str, size: int) -> bool:
    for k in range(size):
        for S in itertools.combinations(adf.arguments, k):
            if _definitional(adf, v, frozenset(S))(a, frozenset({a})):
                return True
    return False


def cross_validate(seed: int, count: int, max_args: int = 5, with_oracles: bool = True) -> list[Discrepancy]:
    """Sweep *count* seeded samples. Hard discrepancies have ``finding=False``."""
    out: list[Discrepancy] = []
    for sample in samples(seed, count, max_args):
        out.extend(check_sample(sample, with_oracles=with_oracles))
    return out


def replay_discrepancy(d: Discrepancy, max_args: int = 5) -> list[Discrepancy]:
    """Re-run the sample a discrepancy came from and return matching records."""
    found = check_sample(generate_sample(d.seed, max_args))
    return [x for x in found if x == d]
