"""Nondeterministic dual-alphabet transition systems with letter censuses.

A machine reads one input letter (or the empty letter) per transition and
writes one output letter (or the empty letter).  This module provides the
machine model, execution, transition subdivision to a simple underlying
digraph, exact output-letter censuses, and the decomposition of a walk into
a short base walk plus anchored short loops with execution counts.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable, Mapping, NamedTuple, Sequence


class EmptyLetter:
    """Distinguished empty letter; a sentinel, not the absence of a letter."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "EMPTY"

    def __deepcopy__(self, memo):
        return self

    def __copy__(self):
        return self

    # Orderable against letters so transition tuples sort deterministically;
    # the empty letter sorts before everything else.
    def __lt__(self, other):
        return other is not self

    def __gt__(self, other):
        return False

    def __le__(self, other):
        return True

    def __ge__(self, other):
        return other is self


EMPTY = EmptyLetter()


class IllegalChoice(ValueError):
    """A chosen transition is not applicable at the current configuration."""


class InputNotConsumed(ValueError):
    """The computation ended before reading the whole input word."""


class NotAWalk(ValueError):
    """Transition sequence is not a walk of the machine from its start."""


class Transition(NamedTuple):
    source: str
    reads: object
    target: str
    writes: object

    def text(self) -> str:
        reads = "_" if self.reads is EMPTY else str(self.reads)
        writes = "_" if self.writes is EMPTY else str(self.writes)
        return f"{self.source} {reads} -> {self.target} {writes}"


@dataclass(frozen=True)
class MealyMachine:
    """States, a start state, two alphabets, and a set of transitions.

    Nondeterminism is allowed: several transitions may share the same
    (source, reads) pair.  Either alphabet may contain EMPTY; machines that
    avoid the empty letter simply never list it.
    """

    states: frozenset[str]
    start: str
    input_alphabet: frozenset
    output_alphabet: frozenset
    transitions: tuple[Transition, ...]

    def __post_init__(self):
        if self.start not in self.states:
            raise ValueError(f"start state {self.start!r} not among states")
        if len(set(self.transitions)) != len(self.transitions):
            raise ValueError("duplicate transitions")
        for t in self.transitions:
            if t.source not in self.states or t.target not in self.states:
                raise ValueError(f"transition endpoint outside states: {t}")
            if t.reads not in self.input_alphabet:
                raise ValueError(f"read letter {t.reads!r} not in input alphabet")
            if t.writes not in self.output_alphabet:
                raise ValueError(f"write letter {t.writes!r} not in output alphabet")

    def transitions_from(self, state: str) -> list[Transition]:
        return [t for t in self.transitions if t.source == state]

    def is_simple(self) -> bool:
        """At most one transition between every ordered pair of states."""
        arcs = {(t.source, t.target) for t in self.transitions}
        return len(arcs) == len(self.transitions)


@dataclass(frozen=True)
class CensusRequirement:
    """Exact required count per non-empty output letter.

    Letters absent from the mapping are required zero times; zero entries
    are normalized away so equal requirements compare equal.
    """

    counts: tuple[tuple[str, int], ...] = ()

    def __post_init__(self):
        seen = set()
        for letter, count in self.counts:
            if letter is EMPTY:
                raise ValueError("the empty letter carries no census entry")
            if count < 0:
                raise ValueError(f"negative census count for {letter!r}")
            if letter in seen:
                raise ValueError(f"duplicate census letter {letter!r}")
            seen.add(letter)
        normalized = tuple(sorted((l, c) for l, c in self.counts if c != 0))
        object.__setattr__(self, "counts", normalized)

    @classmethod
    def of(cls, counts: Mapping[str, int]) -> "CensusRequirement":
        return cls(tuple(counts.items()))

    def get(self, letter: str) -> int:
        for l, c in self.counts:
            if l == letter:
                return c
        return 0

    def as_dict(self) -> dict[str, int]:
        return dict(self.counts)

    def letters(self) -> tuple[str, ...]:
        return tuple(l for l, _ in self.counts)

    def total(self) -> int:
        return sum(c for _, c in self.counts)


def census_of(word: Iterable) -> CensusRequirement:
    """Exact letter counts of an output word, with EMPTY dropped."""
    return CensusRequirement.of(Counter(l for l in word if l is not EMPTY))


def meets(word: Iterable, census: CensusRequirement) -> bool:
    return census_of(word) == census


def subdivide(m: MealyMachine) -> MealyMachine:
    """Split every transition through a fresh state so the digraph is simple.

    A transition reading g and writing w becomes a first hop that reads g and
    writes w into the fresh state, then an empty-letter hop to the original
    target.  Fresh states are named t0, t1, ... in transition-declaration
    order (skipping any names the machine already uses), so the transitions
    of original transition i sit at indices 2*i and 2*i+1.  The multiset of
    non-empty output letters is preserved for every input word.
    """
    states = set(m.states)
    transitions = []
    counter = 0
    for t in m.transitions:
        while f"t{counter}" in states:
            counter += 1
        fresh = f"t{counter}"
        counter += 1
        states.add(fresh)
        transitions.append(Transition(t.source, t.reads, fresh, t.writes))
        transitions.append(Transition(fresh, EMPTY, t.target, EMPTY))
    return MealyMachine(
        states=frozenset(states),
        start=m.start,
        input_alphabet=frozenset(m.input_alphabet) | {EMPTY},
        output_alphabet=frozenset(m.output_alphabet) | {EMPTY},
        transitions=tuple(transitions),
    )


def run(m: MealyMachine, word: Sequence, choices: Sequence[int]) -> tuple:
    """Execute the transitions selected by ``choices`` on ``word``.

    Each choice is an index into m.transitions; the selected transition must
    leave the current state and either read the empty letter or the next
    unread input letter.  The whole input word must be consumed.  Returns
    the output word with empty letters dropped.
    """
    state = m.start
    pos = 0
    output = []
    for step, index in enumerate(choices):
        if not 0 <= index < len(m.transitions):
            raise IllegalChoice(f"step {step}: no transition with index {index}")
        t = m.transitions[index]
        if t.source != state:
            raise IllegalChoice(
                f"step {step}: transition {t.text()} does not leave state {state!r}")
        if t.reads is not EMPTY:
            if pos >= len(word) or word[pos] != t.reads:
                raise IllegalChoice(
                    f"step {step}: transition {t.text()} cannot read input position {pos}")
            pos += 1
        if t.writes is not EMPTY:
            output.append(t.writes)
        state = t.target
    if pos != len(word):
        raise InputNotConsumed(f"{len(word) - pos} input letters left unread")
    return tuple(output)


@dataclass(frozen=True)
class Loop:
    anchor: str
    cycle: tuple[Transition, ...]
    count: int


@dataclass(frozen=True)
class WalkDecomposition:
    """A base walk from the start plus anchored short loops with counts."""

    base_walk: tuple[Transition, ...]
    loops: tuple[Loop, ...] = field(default=())

    def base_states(self) -> list[str]:
        if not self.base_walk:
            return []
        states = [self.base_walk[0].source]
        states.extend(t.target for t in self.base_walk)
        return states

    def arc_census(self) -> Counter:
        census: Counter = Counter(self.base_walk)
        for loop in self.loops:
            for t in loop.cycle:
                census[t] += loop.count
        return census


def _walk_states(m: MealyMachine, walk: Sequence[Transition]) -> list[str]:
    state = m.start
    states = [state]
    known = set(m.transitions)
    for t in walk:
        if t not in known:
            raise NotAWalk(f"transition {t.text()} does not belong to the machine")
        if t.source != state:
            raise NotAWalk(f"transition {t.text()} does not continue from {state!r}")
        state = t.target
        states.append(state)
    return states


def decompose_walk(m: MealyMachine, walk: Sequence[Transition]) -> WalkDecomposition:
    """Rewrite a walk as a short base walk plus anchored short loop counts.

    Requires a simple underlying digraph.  The result traverses every
    transition exactly as often as the input walk, the base walk has length
    at most |states|**2, every loop cycle has length at most |states|, and
    every loop anchor lies on the base walk.

    The walk is scanned left to right; each time a state repeats, the cycle
    back to its previous occurrence is excised and bucketed by (anchor, arc
    census).  A repeated state always closes a cycle of at most |states|
    transitions because the retained prefix is repetition-free.  Excision can
    strand a bucket's anchor off the reduced walk, so afterwards stranded
    cycles are re-anchored by rotating them to a state they share with the
    base walk, splicing one execution of a connecting cycle into the base
    walk whenever no shared state exists yet.
    """
    if not m.is_simple():
        raise NotAWalk("underlying digraph has parallel transitions; subdivide first")
    states = _walk_states(m, walk)

    base: list[Transition] = []
    position: dict[str, int] = {states[0]: 0}
    buckets: dict[tuple, list] = {}

    def bucket_key(anchor: str, cycle: Sequence[Transition]) -> tuple:
        return (anchor, frozenset(Counter(cycle).items()))

    for t in walk:
        base.append(t)
        target = t.target
        if target in position:
            start_index = position[target]
            cycle = tuple(base[start_index:])
            for removed in cycle:
                del position[removed.target]
            position[target] = start_index
            del base[start_index:]
            key = bucket_key(target, cycle)
            if key in buckets:
                buckets[key][2] += 1
            else:
                buckets[key] = [target, cycle, 1]
        else:
            position[target] = len(base)

    def on_base(states_on_base: set[str], cycle: Sequence[Transition]) -> str | None:
        for t in cycle:
            if t.source in states_on_base:
                return t.source
        return None

    def rotate(cycle: tuple[Transition, ...], anchor: str) -> tuple[Transition, ...]:
        for i, t in enumerate(cycle):
            if t.source == anchor:
                return cycle[i:] + cycle[:i]
        raise AssertionError("rotation anchor not on cycle")

    base_vertices = {states[0]}
    base_vertices.update(t.target for t in base)
    # Re-anchor stranded buckets; splice connector cycles into the base walk.
    pending = list(buckets.values())
    while True:
        stranded = [b for b in pending if b[0] not in base_vertices]
        if not stranded:
            break
        rotatable = next(
            (b for b in stranded if on_base(base_vertices, b[1]) is not None), None)
        if rotatable is not None:
            anchor = on_base(base_vertices, rotatable[1])
            rotatable[0] = anchor
            rotatable[1] = rotate(rotatable[1], anchor)
            continue
        connector = next(
            (b for b in pending
             if b[0] in base_vertices
             and any(t.target not in base_vertices for t in b[1])), None)
        if connector is None:
            raise AssertionError("no connector cycle for stranded loop")
        insert_at = next(i for i, s in enumerate(
            [states[0]] + [t.target for t in base]) if s == connector[0])
        base[insert_at:insert_at] = list(connector[1])
        base_vertices.update(t.target for t in connector[1])
        connector[2] -= 1
        if connector[2] == 0:
            pending.remove(connector)

    merged: dict[tuple, list] = {}
    for anchor, cycle, count in pending:
        key = bucket_key(anchor, cycle)
        if key in merged:
            merged[key][2] += count
        else:
            merged[key] = [anchor, cycle, count]
    loops = tuple(Loop(anchor=a, cycle=cyc, count=n) for a, cyc, n in merged.values())
    return WalkDecomposition(base_walk=tuple(base), loops=loops)
