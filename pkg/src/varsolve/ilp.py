"""Exact feasibility for integer linear programs with finite variable boxes.

Every program handled here has an explicit finite box per variable, so a
depth-first search over variable assignments, combined with interval
propagation and per-constraint divisibility cuts, is complete.  All
arithmetic is exact unbounded-magnitude Python integers; there is no
floating-point relaxation anywhere.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Mapping, NamedTuple, Optional

LE = "<="
EQ = "="
GE = ">="

_RELATIONS = (LE, EQ, GE)


class MalformedProgram(ValueError):
    """Program violates a structural invariant (bad box, unknown variable)."""


class ProvenInfeasible(Exception):
    """Raised by bound propagation when infeasibility is detected."""


class Constraint(NamedTuple):
    coeffs: Mapping[str, int]
    relation: str
    rhs: int


@dataclass(frozen=True)
class IntegerProgram:
    """Box-bounded integer variables plus linear (in)equality constraints."""

    variables: tuple[tuple[str, int, int], ...]
    constraints: tuple[Constraint, ...]

    def validate(self) -> None:
        seen = set()
        for name, lower, upper in self.variables:
            if name in seen:
                raise MalformedProgram(f"duplicate variable {name!r}")
            seen.add(name)
            if lower > upper:
                raise MalformedProgram(
                    f"variable {name!r} has empty box [{lower}, {upper}]")
        for con in self.constraints:
            if con.relation not in _RELATIONS:
                raise MalformedProgram(f"unknown relation {con.relation!r}")
            for name in con.coeffs:
                if name not in seen:
                    raise MalformedProgram(
                        f"coefficient on undeclared variable {name!r}")

    def variable_names(self) -> tuple[str, ...]:
        return tuple(name for name, _, _ in self.variables)


@dataclass(frozen=True)
class Assignment:
    values: Mapping[str, int]

    def __getitem__(self, name: str) -> int:
        return self.values[name]


def satisfies(program: IntegerProgram, assignment: Mapping[str, int]) -> bool:
    """Exact re-evaluation of every constraint under integer arithmetic."""
    for con in program.constraints:
        lhs = sum(c * assignment[name] for name, c in con.coeffs.items())
        if con.relation == LE and not lhs <= con.rhs:
            return False
        if con.relation == EQ and lhs != con.rhs:
            return False
        if con.relation == GE and not lhs >= con.rhs:
            return False
    return True


def _ceil_div(a: int, b: int) -> int:
    return -((-a) // b)


def _propagate(program: IntegerProgram, bounds: dict[str, tuple[int, int]]) -> None:
    """Tighten ``bounds`` in place to a propagation fixpoint.

    Uses interval arithmetic on each constraint plus a gcd divisibility cut
    on equalities.  Never removes an integer point satisfying all
    constraints.  Raises ProvenInfeasible when a box empties or a cut fails.
    """
    changed = True
    while changed:
        changed = False
        for con in program.constraints:
            if not con.coeffs:
                lhs = 0
                ok = ((con.relation == LE and lhs <= con.rhs)
                      or (con.relation == EQ and lhs == con.rhs)
                      or (con.relation == GE and lhs >= con.rhs))
                if not ok:
                    raise ProvenInfeasible(f"constant constraint 0 {con.relation} {con.rhs}")
                continue

            # Treat as one or two one-sided forms: sum <= rhs and/or sum >= rhs.
            min_act = 0
            max_act = 0
            for name, c in con.coeffs.items():
                lo, hi = bounds[name]
                if c >= 0:
                    min_act += c * lo
                    max_act += c * hi
                else:
                    min_act += c * hi
                    max_act += c * lo

            upper_side = con.relation in (LE, EQ)
            lower_side = con.relation in (GE, EQ)
            if upper_side and min_act > con.rhs:
                raise ProvenInfeasible("minimum activity exceeds bound")
            if lower_side and max_act < con.rhs:
                raise ProvenInfeasible("maximum activity below bound")

            if con.relation == EQ:
                unfixed = [c for name, c in con.coeffs.items()
                           if bounds[name][0] != bounds[name][1]]
                fixed_part = sum(c * bounds[name][0]
                                 for name, c in con.coeffs.items()
                                 if bounds[name][0] == bounds[name][1])
                residual = con.rhs - fixed_part
                if not unfixed:
                    if residual != 0:
                        raise ProvenInfeasible("equality violated by fixed variables")
                    continue
                g = math.gcd(*(abs(c) for c in unfixed))
                if g and residual % g != 0:
                    raise ProvenInfeasible("divisibility cut on equality")

            for name, c in con.coeffs.items():
                if c == 0:
                    continue
                lo, hi = bounds[name]
                if upper_side:
                    # c*x <= rhs - min activity of the other terms
                    others = min_act - (c * lo if c > 0 else c * hi)
                    room = con.rhs - others
                    if c > 0:
                        new_hi = room // c
                        if new_hi < hi:
                            hi = new_hi
                    else:
                        new_lo = _ceil_div(room, c)
                        if new_lo > lo:
                            lo = new_lo
                if lower_side:
                    # c*x >= rhs - max activity of the other terms
                    others = max_act - (c * hi if c > 0 else c * lo)
                    need = con.rhs - others
                    if c > 0:
                        new_lo = _ceil_div(need, c)
                        if new_lo > lo:
                            lo = new_lo
                    else:
                        new_hi = need // c
                        if new_hi < hi:
                            hi = new_hi
                if lo > hi:
                    raise ProvenInfeasible(f"box of {name!r} emptied")
                if (lo, hi) != bounds[name]:
                    bounds[name] = (lo, hi)
                    changed = True


def propagate_bounds(program: IntegerProgram) -> IntegerProgram:
    """Return an equivalent program with boxes tightened to a fixpoint."""
    program.validate()
    bounds = {name: (lo, hi) for name, lo, hi in program.variables}
    _propagate(program, bounds)
    variables = tuple((name, *bounds[name]) for name, _, _ in program.variables)
    return IntegerProgram(variables=variables, constraints=program.constraints)


def solve_feasibility(program: IntegerProgram) -> Optional[Assignment]:
    """Decide feasibility over the boxes; return a witness or None.

    Complete over the box product: a None verdict means no integer point in
    the boxes satisfies all constraints.  The search is depth-first on the
    variable with the narrowest current box (ties by declaration order),
    assigning candidate values in increasing order, with propagation and
    divisibility cuts at every node, so the witness is deterministic.
    """
    program.validate()
    bounds = {name: (lo, hi) for name, lo, hi in program.variables}
    try:
        _propagate(program, bounds)
    except ProvenInfeasible:
        return None
    order = program.variable_names()

    def search(bounds: dict[str, tuple[int, int]]) -> Optional[dict[str, int]]:
        branch_var = None
        branch_width = None
        for name in order:
            lo, hi = bounds[name]
            if lo == hi:
                continue
            width = hi - lo
            if branch_width is None or width < branch_width:
                branch_var = name
                branch_width = width
        if branch_var is None:
            values = {name: bounds[name][0] for name in order}
            return values if satisfies(program, values) else None
        lo, hi = bounds[branch_var]
        for value in range(lo, hi + 1):
            child = dict(bounds)
            child[branch_var] = (value, value)
            try:
                _propagate(program, child)
            except ProvenInfeasible:
                continue
            found = search(child)
            if found is not None:
                return found
        return None

    values = search(bounds)
    if values is None:
        return None
    return Assignment(values=values)


def dump_program(program: IntegerProgram) -> str:
    """Debug text dump: one box line per variable, one constraint per line."""
    lines = []
    for name, lo, hi in program.variables:
        lines.append(f"{lo} <= {name} <= {hi}")
    for con in program.constraints:
        if con.coeffs:
            terms = " + ".join(f"{c}*{name}" for name, c in con.coeffs.items())
        else:
            terms = "0"
        lines.append(f"{terms} {con.relation} {con.rhs}")
    return "\n".join(lines)
