"""Solvers for multiset problems parameterized by the number of distinct values.

Each solver encodes its instance as a small integer program whose variable
count depends only on the number of distinct values (not on multiplicities),
hands it to the exact feasibility engine, and converts the witness back into
a human-checkable certificate.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping, Optional

from .ilp import EQ, Constraint, IntegerProgram, solve_feasibility


class CardinalityMismatch(ValueError):
    """The three input multisets do not have equal cardinality."""


class NotDivisibleBy3(ValueError):
    """Cardinality is not a multiple of three."""


@dataclass(frozen=True)
class Multiset:
    """Integer multiset stored as (value, multiplicity) entries.

    Entry values are pairwise distinct and multiplicities positive; the
    entry order is preserved and determines certificate ordering.
    """

    entries: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        seen = set()
        for value, mult in self.entries:
            if value in seen:
                raise ValueError(f"duplicate value {value} in multiset")
            seen.add(value)
            if mult <= 0:
                raise ValueError(f"multiplicity of {value} must be positive")

    @classmethod
    def from_values(cls, values: Iterable[int]) -> "Multiset":
        counts: dict[int, int] = {}
        for v in values:
            counts[v] = counts.get(v, 0) + 1
        return cls(tuple(counts.items()))

    def cardinality(self) -> int:
        return sum(m for _, m in self.entries)

    def variety(self) -> int:
        return len(self.entries)

    def total(self) -> int:
        return sum(v * m for v, m in self.entries)

    def values(self) -> tuple[int, ...]:
        return tuple(v for v, _ in self.entries)

    def multiplicity(self, value: int) -> int:
        for v, m in self.entries:
            if v == value:
                return m
        return 0

    def expand(self) -> list[int]:
        out: list[int] = []
        for v, m in self.entries:
            out.extend([v] * m)
        return out


def combined_variety(*multisets: Multiset) -> int:
    """Number of distinct values across all the given multisets."""
    values: set[int] = set()
    for ms in multisets:
        values.update(ms.values())
    return len(values)


@dataclass(frozen=True)
class SubsetCertificate:
    """How many copies of each distinct value a selected submultiset takes."""

    counts: Mapping[int, int]

    def selection_sum(self) -> int:
        return sum(v * c for v, c in self.counts.items())


@dataclass(frozen=True)
class TripleCover:
    """Triples (first, second, third) with execution counts."""

    triples: tuple[tuple[int, int, int, int], ...]

    def expanded(self) -> list[tuple[int, int, int]]:
        out = []
        for a, b, c, count in self.triples:
            out.extend([(a, b, c)] * count)
        return out


def subset_sum_program(a: Multiset, s: int) -> IntegerProgram:
    """One variable per distinct value, boxed by its multiplicity."""
    variables = tuple((f"x{i+1}", 0, m) for i, (_, m) in enumerate(a.entries))
    coeffs = {f"x{i+1}": v for i, (v, _) in enumerate(a.entries)}
    return IntegerProgram(variables=variables,
                          constraints=(Constraint(coeffs, EQ, s),))


def _selection_certificate(a: Multiset, assignment) -> SubsetCertificate:
    counts = {}
    for i, (v, _) in enumerate(a.entries):
        taken = assignment[f"x{i+1}"]
        if taken:
            counts[v] = taken
    return SubsetCertificate(counts=counts)


def solve_subset_sum(a: Multiset, s: int) -> Optional[SubsetCertificate]:
    """Select copies of distinct values so the selection sums exactly to s."""
    assignment = solve_feasibility(subset_sum_program(a, s))
    if assignment is None:
        return None
    return _selection_certificate(a, assignment)


def partition_program(a: Multiset) -> IntegerProgram:
    total = a.total()
    if total % 2 != 0:
        raise ValueError("partition program undefined for odd total")
    return subset_sum_program(a, total // 2)


def solve_partition(a: Multiset) -> Optional[SubsetCertificate]:
    """Split the multiset into two halves of equal sum."""
    if a.total() % 2 != 0:
        return None
    assignment = solve_feasibility(partition_program(a))
    if assignment is None:
        return None
    return _selection_certificate(a, assignment)


def num3dm_program(a: Multiset, b: Multiset, c: Multiset, s: int) -> IntegerProgram:
    """Counting variables for value triples that sum to the target.

    Variables exist only for (i, j, l) index triples whose values sum to s;
    omitted triples are exactly those forced to zero.  Row constraints make
    every element of each source multiset appear in some triple.
    """
    variables = []
    rows_a: dict[int, dict[str, int]] = {i: {} for i in range(a.variety())}
    rows_b: dict[int, dict[str, int]] = {j: {} for j in range(b.variety())}
    rows_c: dict[int, dict[str, int]] = {l: {} for l in range(c.variety())}
    for i, (va, ma) in enumerate(a.entries):
        for j, (vb, mb) in enumerate(b.entries):
            for l, (vc, mc) in enumerate(c.entries):
                if va + vb + vc != s:
                    continue
                name = f"x{i+1}_{j+1}_{l+1}"
                variables.append((name, 0, min(ma, mb, mc)))
                rows_a[i][name] = 1
                rows_b[j][name] = 1
                rows_c[l][name] = 1
    constraints = []
    for i, (_, m) in enumerate(a.entries):
        constraints.append(Constraint(rows_a[i], EQ, m))
    for j, (_, m) in enumerate(b.entries):
        constraints.append(Constraint(rows_b[j], EQ, m))
    for l, (_, m) in enumerate(c.entries):
        constraints.append(Constraint(rows_c[l], EQ, m))
    return IntegerProgram(variables=tuple(variables), constraints=tuple(constraints))


def _extract_triples(a: Multiset, b: Multiset, c: Multiset, assignment) -> TripleCover:
    triples = []
    for i, (va, _) in enumerate(a.entries):
        for j, (vb, _) in enumerate(b.entries):
            for l, (vc, _) in enumerate(c.entries):
                count = assignment.values.get(f"x{i+1}_{j+1}_{l+1}", 0)
                if count:
                    triples.append((va, vb, vc, count))
    return TripleCover(triples=tuple(triples))


def solve_num_3dm(a: Multiset, b: Multiset, c: Multiset, s: int) -> Optional[TripleCover]:
    """Perfect matching into triples (one element per source) summing to s."""
    if not a.cardinality() == b.cardinality() == c.cardinality():
        raise CardinalityMismatch("the three multisets must have equal cardinality")
    if a.cardinality() == 0:
        return TripleCover(triples=())
    lo = min(a.values()) + min(b.values()) + min(c.values())
    hi = max(a.values()) + max(b.values()) + max(c.values())
    if not lo <= s <= hi:
        return None
    assignment = solve_feasibility(num3dm_program(a, b, c, s))
    if assignment is None:
        return None
    return _extract_triples(a, b, c, assignment)


def nmts_program(a: Multiset, b: Multiset, s: Multiset) -> IntegerProgram:
    """Same construction with the condition first+second = third."""
    variables = []
    rows_a: dict[int, dict[str, int]] = {i: {} for i in range(a.variety())}
    rows_b: dict[int, dict[str, int]] = {j: {} for j in range(b.variety())}
    rows_s: dict[int, dict[str, int]] = {l: {} for l in range(s.variety())}
    for i, (va, ma) in enumerate(a.entries):
        for j, (vb, mb) in enumerate(b.entries):
            for l, (vs, ms) in enumerate(s.entries):
                if va + vb != vs:
                    continue
                name = f"x{i+1}_{j+1}_{l+1}"
                variables.append((name, 0, min(ma, mb, ms)))
                rows_a[i][name] = 1
                rows_b[j][name] = 1
                rows_s[l][name] = 1
    constraints = []
    for i, (_, m) in enumerate(a.entries):
        constraints.append(Constraint(rows_a[i], EQ, m))
    for j, (_, m) in enumerate(b.entries):
        constraints.append(Constraint(rows_b[j], EQ, m))
    for l, (_, m) in enumerate(s.entries):
        constraints.append(Constraint(rows_s[l], EQ, m))
    return IntegerProgram(variables=tuple(variables), constraints=tuple(constraints))


def solve_nmts(a: Multiset, b: Multiset, s: Multiset) -> Optional[TripleCover]:
    """Perfect matching into triples with first+second = third."""
    if not a.cardinality() == b.cardinality() == s.cardinality():
        raise CardinalityMismatch("the three multisets must have equal cardinality")
    if a.cardinality() == 0:
        return TripleCover(triples=())
    if min(a.values()) + min(b.values()) > max(s.values()):
        return None
    if max(a.values()) + max(b.values()) < min(s.values()):
        return None
    assignment = solve_feasibility(nmts_program(a, b, s))
    if assignment is None:
        return None
    return _extract_triples(a, b, s, assignment)


def three_partition_program(a: Multiset) -> IntegerProgram:
    """Ordered index-triple counting variables with multiplicity weights.

    The coefficient of a triple variable in the row of value i is the number
    of positions of that triple holding value i (1, 2, or 3), so each row
    states that value i is consumed exactly multiplicity(i) times.
    """
    n = a.cardinality() // 3
    total = a.total()
    s = total // n
    variables = []
    rows: dict[int, dict[str, int]] = {i: {} for i in range(a.variety())}
    k = a.variety()
    for i in range(k):
        for j in range(k):
            for l in range(k):
                vi, mi = a.entries[i]
                vj, mj = a.entries[j]
                vl, ml = a.entries[l]
                if vi + vj + vl != s:
                    continue
                name = f"x{i+1}_{j+1}_{l+1}"
                upper = n
                for idx, mult in ((i, mi), (j, mj), (l, ml)):
                    uses = (i, j, l).count(idx)
                    upper = min(upper, mult // uses)
                variables.append((name, 0, upper))
                for idx in (i, j, l):
                    row = rows[idx]
                    row[name] = row.get(name, 0) + 1
    constraints = []
    for i, (_, m) in enumerate(a.entries):
        constraints.append(Constraint(rows[i], EQ, m))
    return IntegerProgram(variables=tuple(variables), constraints=tuple(constraints))


def solve_3partition(a: Multiset) -> Optional[TripleCover]:
    """Partition the multiset into |A|/3 triples of equal sum.

    The program counts ordered index patterns; the extractor emits each
    used pattern as an unordered (sorted) triple.
    """
    if a.cardinality() % 3 != 0:
        raise NotDivisibleBy3("cardinality must be divisible by 3")
    n = a.cardinality() // 3
    if n == 0:
        return TripleCover(triples=())
    if a.total() % n != 0:
        return None
    assignment = solve_feasibility(three_partition_program(a))
    if assignment is None:
        return None
    merged: dict[tuple[int, int, int], int] = {}
    k = a.variety()
    for i in range(k):
        for j in range(k):
            for l in range(k):
                count = assignment.values.get(f"x{i+1}_{j+1}_{l+1}", 0)
                if count:
                    vi = a.entries[i][0]
                    vj = a.entries[j][0]
                    vl = a.entries[l][0]
                    key = tuple(sorted((vi, vj, vl)))
                    merged[key] = merged.get(key, 0) + count
    return TripleCover(triples=tuple((*t, c) for t, c in merged.items()))
