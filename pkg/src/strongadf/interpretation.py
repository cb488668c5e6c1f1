"""Three-valued truth values and interpretations under the information order.

``u`` sits below both ``t`` and ``f``; ``t`` and ``f`` are incomparable.
Interpretations are total over an ordered argument universe and compare
pointwise.
"""

from __future__ import annotations

import enum
import functools
import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping, Sequence

from .errors import (
    DomainMismatchError,
    JoinConflictError,
    ParseError,
    UnknownArgumentError,
)


class TruthValue(enum.Enum):
    T = "t"
    F = "f"
    U = "u"

    @property
    def decided(self) -> bool:
        return self is not TruthValue.U

    def __str__(self):
        return self.value

    @classmethod
    def parse(cls, text: str) -> "TruthValue":
        try:
            return cls(text.strip().lower())
        except ValueError:
            raise ParseError(f"truth value must be t, f or u, not {text!r}") from None


T, F, U = TruthValue.T, TruthValue.F, TruthValue.U

# Used by the canonical sort: t before f before u, per argument in declaration order.
_RANK = {T: 0, F: 1, U: 2}


class Ordering(enum.Enum):
    EQUAL = "equal"
    LESS = "less"
    GREATER = "greater"
    INCOMPARABLE = "incomparable"


@functools.lru_cache(maxsize=256)
def _universe_index(universe: tuple[str, ...]) -> dict[str, int]:
    # shared by every interpretation over the same universe; never mutated
    return {a: i for i, a in enumerate(universe)}


def value_leq(x: TruthValue, y: TruthValue) -> bool:
    return x is U or x is y


def value_meet(x: TruthValue, y: TruthValue) -> TruthValue:
    return x if x is y else U


@dataclass(frozen=True)
class Interpretation(Mapping[str, TruthValue]):
    """Total map from ``universe`` to truth values, stored positionally."""

    universe: tuple[str, ...]
    values: tuple[TruthValue, ...]

    def __post_init__(self):
        if len(self.universe) != len(self.values):
            raise ValueError("universe and values differ in length")

    @classmethod
    def from_mapping(cls, universe: Sequence[str], mapping: Mapping[str, TruthValue]):
        """Build from a partial mapping; unmentioned arguments are ``u``."""
        universe = tuple(universe)
        unknown = set(mapping) - set(universe)
        if unknown:
            raise UnknownArgumentError(f"unknown argument(s): {', '.join(sorted(unknown))}")
        return cls(universe, tuple(mapping.get(a, U) for a in universe))

    # Mapping protocol
    def __getitem__(self, arg: str) -> TruthValue:
        try:
            return self.values[self._index[arg]]
        except KeyError:
            raise UnknownArgumentError(f"unknown argument {arg!r}") from None

    def __iter__(self) -> Iterator[str]:
        return iter(self.universe)

    def __len__(self):
        return len(self.universe)

    def __contains__(self, arg):
        return arg in self._index

    @property
    def _index(self) -> dict[str, int]:
        return _universe_index(self.universe)

    def __eq__(self, other):
        if isinstance(other, Interpretation):
            return self.universe == other.universe and self.values == other.values
        return NotImplemented

    def __hash__(self):
        return hash((self.universe, self.values))

    # Derived views
    def decided(self) -> tuple[str, ...]:
        return tuple(a for a, x in zip(self.universe, self.values) if x is not U)

    def is_two_valued(self) -> bool:
        return U not in self.values

    def is_trivial(self) -> bool:
        return all(x is U for x in self.values)

    def restrict(self, keep: Iterable[str]) -> "Interpretation":
        """Agree with ``self`` on *keep*, ``u`` elsewhere."""
        values = [U] * len(self.values)
        index = self._index
        for a in keep:
            i = index[a]
            values[i] = self.values[i]
        return Interpretation(self.universe, tuple(values))

    def sort_key(self):
        """Fewer decided arguments first, then t < f < u position by position."""
        return (len(self.decided()), tuple(_RANK[x] for x in self.values))

    def __le__(self, other: "Interpretation") -> bool:
        _same_domain(self, other)
        return all(value_leq(x, y) for x, y in zip(self.values, other.values))

    def __lt__(self, other: "Interpretation") -> bool:
        return self <= other and self != other

    def __ge__(self, other):
        return other <= self

    def __gt__(self, other):
        return other < self

    # Text forms
    def to_literal(self) -> str:
        """``a=t,c=f`` (undecided arguments omitted)."""
        return ",".join(f"{a}={x}" for a, x in zip(self.universe, self.values) if x is not U)

    def to_set_notation(self) -> str:
        """``{a, ¬c}``: accepted arguments plain, denied ones negated."""
        parts = [a if x is T else f"¬{a}" for a, x in zip(self.universe, self.values) if x is not U]
        return "{" + ", ".join(parts) + "}"

    def to_dict(self) -> dict[str, str]:
        return {a: x.value for a, x in zip(self.universe, self.values)}

    def __repr__(self):
        inner = ", ".join(f"{a}↦{x}" for a, x in zip(self.universe, self.values))
        return f"Interpretation({{{inner}}})"


def _same_domain(v: Interpretation, w: Interpretation):
    if v.universe != w.universe:
        raise DomainMismatchError(
            f"interpretations over different universes: {v.universe} vs {w.universe}"
        )


def trivial(universe: Iterable[str]) -> Interpretation:
    universe = tuple(universe)
    return Interpretation(universe, (U,) * len(universe))


def compare(v: Interpretation, w: Interpretation) -> Ordering:
    _same_domain(v, w)
    le = all(value_leq(x, y) for x, y in zip(v.values, w.values))
    ge = all(value_leq(y, x) for x, y in zip(v.values, w.values))
    if le and ge:
        return Ordering.EQUAL
    if le:
        return Ordering.LESS
    if ge:
        return Ordering.GREATER
    return Ordering.INCOMPARABLE


def meet(v: Interpretation, w: Interpretation) -> Interpretation:
    _same_domain(v, w)
    return Interpretation(v.universe, tuple(value_meet(x, y) for x, y in zip(v.values, w.values)))


def join(v: Interpretation, w: Interpretation) -> Interpretation:
    """Pointwise union of decided values.

    Raises :class:`JoinConflictError` on the first argument that one operand
    accepts and the other denies; strongly admissible operands from the same
    framework never clash.
    """
    _same_domain(v, w)
    out = []
    for a, x, y in zip(v.universe, v.values, w.values):
        if x is U:
            out.append(y)
        elif y is U or y is x:
            out.append(x)
        else:
            raise JoinConflictError(a)
    return Interpretation(v.universe, tuple(out))


def update(v: Interpretation, arg: str, value: TruthValue) -> Interpretation:
    i = v._index.get(arg)
    if i is None:
        raise UnknownArgumentError(f"unknown argument {arg!r}")
    values = list(v.values)
    values[i] = value
    return Interpretation(v.universe, tuple(values))


def parse_interpretation(literal: str, universe: Sequence[str]) -> Interpretation:
    """Parse ``name=t|f|u`` pairs separated by commas; omitted names are ``u``."""
    mapping: dict[str, TruthValue] = {}
    for chunk in literal.split(","):
        chunk = chunk.strip()
        if not chunk:
            continue
        name, sep, value = chunk.partition("=")
        name = name.strip()
        if not sep:
            raise ParseError(f"expected name=t|f|u, got {chunk!r}")
        if name not in universe:
            raise UnknownArgumentError(f"unknown argument {name!r} in interpretation literal")
        if name in mapping:
            raise ParseError(f"argument {name!r} assigned twice")
        mapping[name] = TruthValue.parse(value)
    return Interpretation.from_mapping(universe, mapping)


def all_interpretations(universe: Sequence[str]) -> list[Interpretation]:
    """All 3^n interpretations in canonical order."""
    universe = tuple(universe)
    out = [Interpretation(universe, vals) for vals in itertools.product((T, F, U), repeat=len(universe))]
    out.sort(key=Interpretation.sort_key)
    return out


def below(v: Interpretation) -> list[Interpretation]:
    """Every w with w <= v (each decided argument kept or reset to u)."""
    decided = v.decided()
    out = []
    for mask in itertools.product((True, False), repeat=len(decided)):
        out.append(v.restrict(a for a, keep in zip(decided, mask) if keep))
    out.sort(key=Interpretation.sort_key)
    return out
