"""Dung argumentation frameworks: strong defence, strongly admissible
extensions, the grounded extension, and translation into an ADF."""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Optional

from . import formula as fm
from .adf import DEFAULT_ENUM_CAP, Adf
from .errors import CapExceededError, DuplicateArgumentError, ParseError, UndeclaredArgumentError
from .interpretation import F, T, Interpretation

DEFAULT_AF_CAP = 16


@dataclass(frozen=True)
class Af:
    arguments: tuple[str, ...]
    attacks: frozenset[tuple[str, str]]
    attackers: dict = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        declared = set(self.arguments)
        if len(declared) != len(self.arguments):
            raise DuplicateArgumentError("duplicate argument in framework")
        for x, y in self.attacks:
            if x not in declared or y not in declared:
                raise UndeclaredArgumentError(f"attack ({x},{y}) mentions an undeclared argument")
        attackers = {a: [] for a in self.arguments}
        for x, y in sorted(self.attacks, key=lambda e: (self.arguments.index(e[0]), self.arguments.index(e[1]))):
            attackers[y].append(x)
        object.__setattr__(self, "attackers", {a: tuple(v) for a, v in attackers.items()})

    def __len__(self):
        return len(self.arguments)

    def attacked_by(self, ext: Iterable[str]) -> set[str]:
        ext = set(ext)
        return {y for x, y in self.attacks if x in ext}


_STATEMENT_RE = re.compile(
    r"\s*(?:arg\(\s*(?P<arg>[A-Za-z0-9_]+)\s*\)|att\(\s*(?P<src>[A-Za-z0-9_]+)\s*,\s*(?P<dst>[A-Za-z0-9_]+)\s*\))\s*\.\s*"
)


def load_af(document: str, source: Optional[str] = None) -> Af:
    """Parse ASPARTIX-style ``arg(x).`` / ``att(x,y).`` statements.

    ``#`` and ``%`` start comments. Several statements may share a line.
    """
    args: list[str] = []
    attacks: list[tuple[str, str, int]] = []
    for lineno, raw in enumerate(document.splitlines(), start=1):
        line = re.split(r"[#%]", raw, maxsplit=1)[0]
        pos = 0
        while line[pos:].strip():
            m = _STATEMENT_RE.match(line, pos)
            if m is None:
                raise ParseError("expected 'arg(NAME).' or 'att(NAME,NAME).'",
                                 line=lineno, column=pos + 1, source=source)
            if m.group("arg") is not None:
                if m.group("arg") in args:
                    raise DuplicateArgumentError(f"argument {m.group('arg')!r} declared twice",
                                                 line=lineno, source=source)
                args.append(m.group("arg"))
            else:
                attacks.append((m.group("src"), m.group("dst"), lineno))
            pos = m.end()
    declared = set(args)
    for x, y, lineno in attacks:
        for name in (x, y):
            if name not in declared:
                raise UndeclaredArgumentError(f"attack mentions undeclared argument {name!r}",
                                              line=lineno, source=source)
    return Af(tuple(args), frozenset((x, y) for x, y, _ in attacks))


def strongly_defended(af: Af, a: str, ext: Iterable[str]) -> bool:
    """Every attacker of *a* is attacked by some s ∈ ext∖{a} that is itself
    strongly defended by ext∖{a}. The set shrinks on each step."""

    @lru_cache(maxsize=None)
    def defended(x: str, s: frozenset) -> bool:
        rest = s - {x}
        for c in af.attackers[x]:
            if not any(d in rest and defended(d, rest) for d in af.attackers[c]):
                return False
        return True

    return defended(a, frozenset(ext))


def is_strongly_admissible_ext(af: Af, ext: Iterable[str]) -> bool:
    ext = frozenset(ext)
    return all(strongly_defended(af, s, ext) for s in ext)


def _canonical_subsets(af: Af):
    for k in range(len(af) + 1):
        yield from itertools.combinations(af.arguments, k)


def enumerate_strongly_admissible_ext(af: Af, cap: int = DEFAULT_AF_CAP) -> list[frozenset[str]]:
    """All strongly admissible extensions, by size then declaration order."""
    if len(af) > cap:
        raise CapExceededError("AF subset enumeration", len(af), cap)
    return [frozenset(s) for s in _canonical_subsets(af) if is_strongly_admissible_ext(af, s)]


def grounded_extension(af: Af) -> frozenset[str]:
    """Least fixpoint of the defence function, iterated from the empty set."""
    ext: frozenset[str] = frozenset()
    while True:
        beaten = af.attacked_by(ext)
        nxt = frozenset(a for a in af.arguments if all(c in beaten for c in af.attackers[a]))
        if nxt == ext:
            return ext
        ext = nxt


def af_to_adf(af: Af) -> Adf:
    """φ_a is the conjunction of ¬b over a's attackers, or ``T`` if unattacked."""
    conditions = {a: fm.conjunction(fm.Not(fm.Atom(b)) for b in af.attackers[a]) for a in af.arguments}
    return Adf(af.arguments, conditions)


def labelling(af: Af, ext: Iterable[str]) -> Interpretation:
    """t on the extension, f on what it attacks, u elsewhere."""
    ext = set(ext)
    out = af.attacked_by(ext)
    return Interpretation.from_mapping(
        af.arguments, {**{a: F for a in out}, **{a: T for a in ext}}
    )


def format_extension(af: Af, ext: Iterable[str]) -> str:
    ext = set(ext)
    return "{" + ", ".join(a for a in af.arguments if a in ext) + "}"


@dataclass
class ProbeReport:
    """Descriptive comparison of AF strong admissibility with its ADF counterpart."""

    forward: list[dict] = field(default_factory=list)
    backward: list[dict] = field(default_factory=list)

    @property
    def forward_agreement(self) -> int:
        return sum(r["labelling_is_sadm"] for r in self.forward)

    @property
    def backward_agreement(self) -> int:
        return sum(r["true_set_is_sadm_ext"] for r in self.backward)

    @property
    def counterexamples(self) -> list[dict]:
        return [r for r in self.forward if not r["labelling_is_sadm"]] + [
            r for r in self.backward if not r["true_set_is_sadm_ext"]
        ]

    def summary(self) -> dict:
        return {
            "extensions": len(self.forward),
            "extensions_whose_labelling_is_sadm": self.forward_agreement,
            "sadm_interpretations": len(self.backward),
            "interpretations_whose_true_set_is_sadm_ext": self.backward_agreement,
            "interpretations_equal_to_labelling": sum(r["equals_labelling"] for r in self.backward),
            "counterexamples": len(self.counterexamples),
        }

    def to_json(self) -> dict:
        return {"summary": self.summary(), "forward": self.forward, "backward": self.backward}


def conjecture_probe(af: Af, cap: int = DEFAULT_ENUM_CAP) -> ProbeReport:
    """Compare both notions in both directions; reports, never asserts."""
    from .strong import enumerate_strongly_admissible, is_strongly_admissible

    if len(af) > cap:
        raise CapExceededError("conjecture probe", len(af), cap)
    adf = af_to_adf(af)
    report = ProbeReport()
    for ext in enumerate_strongly_admissible_ext(af, cap=cap):
        v = labelling(af, ext)
        report.forward.append({
            "extension": format_extension(af, ext),
            "labelling": v.to_set_notation(),
            "labelling_is_sadm": is_strongly_admissible(adf, v),
        })
    for v in enumerate_strongly_admissible(adf, cap=cap):
        true_set = [a for a in af.arguments if v[a] is T]
        report.backward.append({
            "interpretation": v.to_set_notation(),
            "true_set": format_extension(af, true_set),
            "true_set_is_sadm_ext": is_strongly_admissible_ext(af, true_set),
            "equals_labelling": v == labelling(af, true_set),
        })
    return report


def random_af(seed: int, max_args: int = 5, density: float = 0.3) -> Af:
    import random

    rng = random.Random(seed)
    names = tuple("abcdefgh"[:rng.randint(0, max_args)])
    attacks = frozenset((x, y) for x in names for y in names if rng.random() < density)
    return Af(names, attacks)


def probe_statistics(seed: int, count: int, max_args: int = 5) -> dict:
    """Sum of :meth:`ProbeReport.summary` over *count* seeded random AFs."""
    totals = {"frameworks": 0}
    for i in range(count):
        report = conjecture_probe(random_af(seed * 1_000_003 + i, max_args))
        totals["frameworks"] += 1
        for key, value in report.summary().items():
            totals[key] = totals.get(key, 0) + value
    return totals
