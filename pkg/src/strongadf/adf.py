"""Abstract dialectical frameworks and their classical three-valued semantics."""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Optional, Sequence

from . import formula as fm
from .errors import (
    CapExceededError,
    DomainMismatchError,
    DuplicateArgumentError,
    ParseError,
    PreconditionError,
    UnknownArgumentError,
)
from .interpretation import (
    F,
    T,
    U,
    Interpretation,
    TruthValue,
    all_interpretations,
    trivial,
)

#: Largest framework :func:`enumerate_interpretations` will sweep (3^n candidates).
DEFAULT_ENUM_CAP = 12


class Semantics(str, enum.Enum):
    CF = "cf"
    ADM = "adm"
    PRF = "prf"
    GRD = "grd"
    SADM = "sadm"


class LinkType(str, enum.Enum):
    SUPPORTING = "supporting"
    ATTACKING = "attacking"
    REDUNDANT = "redundant"
    DEPENDENT = "dependent"


_STATUS = {
    fm.FormulaClass.TAUTOLOGY: T,
    fm.FormulaClass.UNSATISFIABLE: F,
    fm.FormulaClass.CONTINGENT: U,
}


@dataclass(frozen=True, eq=False)
class Adf:
    """Arguments in declaration order plus one acceptance condition each.

    Parents are syntactic: the atoms occurring in a condition, listed in
    declaration order. An argument with no parents is initial.
    """

    arguments: tuple[str, ...]
    conditions: Mapping[str, fm.Formula]
    parents: Mapping[str, tuple[str, ...]] = field(init=False, repr=False)

    def __post_init__(self):
        if len(set(self.arguments)) != len(self.arguments):
            raise DuplicateArgumentError("duplicate argument in framework")
        if set(self.conditions) != set(self.arguments):
            raise ValueError("conditions must be given for exactly the declared arguments")
        order = {a: i for i, a in enumerate(self.arguments)}
        parents = {}
        for a in self.arguments:
            names = fm.atoms(self.conditions[a])
            missing = [p for p in names if p not in order]
            if missing:
                raise UnknownArgumentError(f"condition of {a!r} mentions undeclared {missing[0]!r}")
            parents[a] = tuple(sorted(names, key=order.__getitem__))
        object.__setattr__(self, "conditions", dict(self.conditions))
        object.__setattr__(self, "parents", parents)
        object.__setattr__(self, "_tables", {})
        object.__setattr__(self, "_status_cache", {})

    @classmethod
    def from_strings(cls, conditions: Mapping[str, str] | Sequence[tuple[str, str]]):
        """Build from ``{name: formula_text}`` (insertion order = argument order)."""
        items = list(conditions.items()) if isinstance(conditions, Mapping) else list(conditions)
        names = [n for n, _ in items]
        return cls(tuple(names), {n: fm.parse_formula(text, names) for n, text in items})

    def __len__(self):
        return len(self.arguments)

    def links(self) -> list[tuple[str, str]]:
        return [(b, a) for a in self.arguments for b in self.parents[a]]

    def initial_arguments(self) -> tuple[str, ...]:
        return tuple(a for a in self.arguments if not self.parents[a])

    def trivial(self) -> Interpretation:
        return trivial(self.arguments)

    def interpretation(self, mapping: Optional[Mapping[str, TruthValue | str]] = None, **kw):
        """Convenience constructor; values may be TruthValue or 't'/'f'/'u'."""
        merged = dict(mapping or {}, **kw)
        return Interpretation.from_mapping(
            self.arguments,
            {a: x if isinstance(x, TruthValue) else TruthValue.parse(x) for a, x in merged.items()},
        )

    def to_text(self) -> str:
        return "".join(f"{a}: {fm.to_text(self.conditions[a])}\n" for a in self.arguments)

    def check_domain(self, v: Interpretation):
        if v.universe != self.arguments:
            raise DomainMismatchError(
                f"interpretation over {v.universe} does not match framework arguments {self.arguments}"
            )

    # -- fast condition status ------------------------------------------------
    # Each condition is tabulated once over its parents; statuses under partial
    # assignments are then read off the table. The formula-tree route
    # (partial_valuation + classify) is kept for auditing and cross-checks.

    def _table(self, a: str) -> list[bool]:
        table = self._tables.get(a)
        if table is None:
            pars = self.parents[a]
            if len(pars) > fm.DEFAULT_ATOM_CAP:
                raise CapExceededError(f"parents of {a!r}", len(pars), fm.DEFAULT_ATOM_CAP)
            phi = self.conditions[a]
            table = []
            for row in range(1 << len(pars)):
                table.append(fm.evaluate(phi, {p: bool(row >> i & 1) for i, p in enumerate(pars)}))
            self._tables[a] = table
        return table

    def condition_status(self, a: str, v: Mapping[str, TruthValue]) -> TruthValue:
        """``t`` if the partial valuation of φ_a by *v* is a tautology, ``f`` if
        unsatisfiable, ``u`` otherwise. Parents missing from *v* count as ``u``."""
        pars = self.parents[a]
        mask = bits = 0
        for i, p in enumerate(pars):
            x = v.get(p, U)
            if x is T:
                mask |= 1 << i
                bits |= 1 << i
            elif x is F:
                mask |= 1 << i
        key = (a, mask, bits)
        cached = self._status_cache.get(key)
        if cached is not None:
            return cached
        table = self._table(a)
        seen_true = seen_false = False
        for row, value in enumerate(table):
            if row & mask != bits:
                continue
            if value:
                seen_true = True
            else:
                seen_false = True
            if seen_true and seen_false:
                break
        status = U if (seen_true and seen_false) else (T if seen_true else F)
        self._status_cache[key] = status
        return status


# --------------------------------------------------------------------------
# Loading

_STATEMENT_RE = re.compile(r"^\s*([A-Za-z_][A-Za-z0-9_]*)\s*:(.*)$")


def load_adf(document: str, source: Optional[str] = None) -> Adf:
    """Parse the line-oriented ``name: formula`` format (``#`` starts a comment)."""
    statements = []
    seen: dict[str, int] = {}
    for lineno, raw in enumerate(document.splitlines(), start=1):
        line = raw.split("#", 1)[0]
        if not line.strip():
            continue
        m = _STATEMENT_RE.match(line)
        if m is None:
            raise ParseError("expected 'NAME : formula'", line=lineno, source=source)
        name, body = m.group(1), m.group(2)
        if name in ("T", "F"):
            raise ParseError(f"{name!r} is reserved for a constant", line=lineno, source=source)
        if name in seen:
            raise DuplicateArgumentError(
                f"argument {name!r} already declared on line {seen[name]}", line=lineno, source=source
            )
        seen[name] = lineno
        statements.append((lineno, name, body, m.start(2)))

    declared = set(seen)
    conditions = {}
    for lineno, name, body, offset in statements:
        try:
            conditions[name] = fm.parse_formula(body, declared)
        except ParseError as exc:
            col = None if exc.column is None else exc.column + offset
            raise type(exc)(exc.message, line=lineno, column=col, source=source) from None
    return Adf(tuple(n for _, n, _, _ in statements), conditions)


# --------------------------------------------------------------------------
# Characteristic operator and classical semantics


def gamma(adf: Adf, v: Interpretation) -> Interpretation:
    adf.check_domain(v)
    return Interpretation(adf.arguments, tuple(adf.condition_status(a, v) for a in adf.arguments))


def grounded(adf: Adf) -> Interpretation:
    """Least fixpoint of Γ, iterated from the trivial interpretation."""
    v = adf.trivial()
    while True:
        nxt = gamma(adf, v)
        if nxt == v:
            return v
        v = nxt


def is_conflict_free(adf: Adf, v: Interpretation) -> bool:
    adf.check_domain(v)
    for a, x in zip(adf.arguments, v.values):
        if x is U:
            continue
        status = adf.condition_status(a, v)
        if x is T and status is F:
            return False
        if x is F and status is not F:
            return False
    return True


def is_admissible(adf: Adf, v: Interpretation) -> bool:
    adf.check_domain(v)
    return all(x is U or adf.condition_status(a, v) is x for a, x in zip(adf.arguments, v.values))


def is_preferred(adf: Adf, v: Interpretation) -> bool:
    """Admissible and no strictly larger admissible interpretation exists.

    Searches extensions of *v* argument by argument. A branch is cut as soon
    as Γ of the partial extension contradicts one of its decided values:
    Γ is monotone, so no completion of that branch can be admissible.
    """
    if not is_admissible(adf, v):
        return False
    open_args = [a for a in adf.arguments if v[a] is U]
    index = {a: i for i, a in enumerate(adf.arguments)}

    def contradicted(w_vals):
        w = Interpretation(adf.arguments, tuple(w_vals))
        for a, x in zip(adf.arguments, w_vals):
            if x is not U:
                s = adf.condition_status(a, w)
                if s is not U and s is not x:
                    return True
        return False

    def search(k, w_vals, grew):
        if contradicted(w_vals):
            return False
        if k == len(open_args):
            return grew and is_admissible(adf, Interpretation(adf.arguments, tuple(w_vals)))
        i = index[open_args[k]]
        for x in (T, F, U):
            w_vals[i] = x
            if search(k + 1, w_vals, grew or x is not U):
                w_vals[i] = U
                return True
        w_vals[i] = U
        return False

    return not search(0, list(v.values), False)


def check(adf: Adf, v: Interpretation, sem: Semantics | str) -> bool:
    sem = Semantics(sem)
    adf.check_domain(v)
    if sem is Semantics.CF:
        return is_conflict_free(adf, v)
    if sem is Semantics.ADM:
        return is_admissible(adf, v)
    if sem is Semantics.PRF:
        return is_preferred(adf, v)
    if sem is Semantics.GRD:
        return v == grounded(adf)
    from .strong import is_strongly_admissible

    return is_strongly_admissible(adf, v)


def enumerate_interpretations(adf: Adf, sem: Semantics | str, cap: int = DEFAULT_ENUM_CAP):
    """All σ-interpretations in canonical order (brute force over 3^n)."""
    sem = Semantics(sem)
    if len(adf) > cap:
        raise CapExceededError(f"{sem.value} enumeration", len(adf), cap)
    if sem is Semantics.GRD:
        return [grounded(adf)]
    if sem is Semantics.PRF:
        adm = [v for v in all_interpretations(adf.arguments) if is_admissible(adf, v)]
        return [v for v in adm if not any(v < w for w in adm)]
    return [v for v in all_interpretations(adf.arguments) if check(adf, v, sem)]


# --------------------------------------------------------------------------
# Links


def link_flags(adf: Adf, link: tuple[str, str]) -> tuple[bool, bool]:
    """(supporting, attacking) for the link ``(b, a)``.

    Quantifies over the two-valued assignments of a's parents; the condition
    reads nothing else.
    """
    b, a = link
    if a not in adf.parents or b not in adf.parents[a]:
        raise PreconditionError(f"({b}, {a}) is not a link of the framework")
    phi = adf.conditions[a]
    supporting = attacking = True
    for assignment in fm.completions(adf.parents[a]):
        before = fm.evaluate(phi, assignment)
        after = fm.evaluate(phi, {**assignment, b: True})
        if before and not after:
            supporting = False
        if not before and after:
            attacking = False
    return supporting, attacking


def classify_link(adf: Adf, link: tuple[str, str]) -> LinkType:
    supporting, attacking = link_flags(adf, link)
    if supporting and attacking:
        return LinkType.REDUNDANT
    if supporting:
        return LinkType.SUPPORTING
    if attacking:
        return LinkType.ATTACKING
    return LinkType.DEPENDENT


# --------------------------------------------------------------------------
# Credulous reasoning


def credulous(
    adf: Adf,
    arg: str,
    mode: str = "accept",
    sem: Semantics | str = Semantics.GRD,
    cap: int = DEFAULT_ENUM_CAP,
) -> tuple[bool, Optional[Interpretation]]:
    """Is *arg* acceptable (``mode="accept"``) or deniable (``"deny"``) in some
    σ-interpretation? Returns the verdict and the first witness in canonical
    order, or ``(False, None)``."""
    if arg not in adf.parents:
        raise UnknownArgumentError(f"unknown argument {arg!r}")
    if mode not in ("accept", "deny"):
        raise ValueError(f"mode must be 'accept' or 'deny', not {mode!r}")
    wanted = T if mode == "accept" else F
    for v in enumerate_interpretations(adf, sem, cap=cap):
        if adf.condition_status(arg, v) is wanted:
            return True, v
    return False, None


def fixpoints(adf: Adf, cap: int = DEFAULT_ENUM_CAP) -> list[Interpretation]:
    if len(adf) > cap:
        raise CapExceededError("fixpoint scan", len(adf), cap)
    return [v for v in all_interpretations(adf.arguments) if gamma(adf, v) == v]


def iter_links(adf: Adf) -> Iterable[tuple[tuple[str, str], LinkType]]:
    for link in adf.links():
        yield link, classify_link(adf, link)
