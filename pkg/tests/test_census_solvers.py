"""Census solvers: worked examples, oracle equivalence, certificate replay."""

import pytest

from varsolve.census_solvers import (BudgetExceeded, DpIndex, EmptyLetterPresent,
                                     solve_ewmm, solve_gwmm,
                                     solve_gwmm_binary_guard)
from varsolve.corpus import (check_ewmm, check_gwmm, check_gwmm_guard, make_rng,
                             random_gwmm_census, random_machine, random_word)
from varsolve.mealy import (EMPTY, CensusRequirement, MealyMachine, Transition,
                            census_of, run, subdivide)
from varsolve.oracle import brute_gwmm


def machine(states, start, inputs, outputs, transitions):
    return MealyMachine(states=frozenset(states), start=start,
                        input_alphabet=frozenset(inputs),
                        output_alphabet=frozenset(outputs),
                        transitions=tuple(Transition(*t) for t in transitions))


IDENTITY = machine({"q"}, "q", {"a", "b"}, {"a", "b"},
                   [("q", "a", "q", "a"), ("q", "b", "q", "b")])


def replay_ewmm(cert):
    return census_of(run(cert.machine, cert.input_word(), cert.choices()))


def test_ewmm_zero_census():
    for m in (IDENTITY,
              machine({"q"}, "q", {"a"}, {"b"}, [("q", "a", "q", "b")])):
        cert = solve_ewmm(m, CensusRequirement.of({}))
        assert cert is not None
        assert cert.base_walk == () and cert.loop_counts == ()


def test_ewmm_self_loop_counts_five():
    m = machine({"q"}, "q", {"a"}, {"b"}, [("q", "a", "q", "b")])
    c = CensusRequirement.of({"b": 5})
    cert = solve_ewmm(m, c)
    assert cert.base_walk == ()
    assert len(cert.loop_counts) == 1
    loop, count = cert.loop_counts[0]
    assert count == 5 and dict(loop.census_vector) == {"b": 1}
    assert replay_ewmm(cert) == c


def test_ewmm_unproducible_letter():
    m = machine({"q"}, "q", {"a"}, {"b"}, [("q", "a", "q", "b")])
    assert solve_ewmm(m, CensusRequirement.of({"d": 1})) is None


def test_ewmm_budget_reports_unknown():
    rng = make_rng(3)
    m = random_machine(rng, max_states=3, max_transitions=6)
    c = CensusRequirement.of(
        {letter: 2 for letter in sorted(m.output_alphabet - {EMPTY})[:2]})
    with pytest.raises(BudgetExceeded):
        solve_ewmm(m, c, budget=1)


def test_ewmm_oracle_equivalence():
    assert check_ewmm(42, 300) == 300


def test_gwmm_identity_examples():
    trace = solve_gwmm(IDENTITY, "aab", CensusRequirement.of({"a": 2, "b": 1}))
    assert trace is not None
    assert run(IDENTITY, "aab", trace) == ("a", "a", "b")
    assert solve_gwmm(IDENTITY, "aab", CensusRequirement.of({"a": 1, "b": 1})) is None


def test_gwmm_rejects_empty_in_word():
    with pytest.raises(ValueError):
        solve_gwmm(IDENTITY, ("a", EMPTY), CensusRequirement.of({}))


def test_gwmm_base_entry_is_unique_seed():
    # Only the start state is true at position 0, propagation 0, zero census;
    # an empty-move chain reaches the other state at propagation 1.
    m = machine({"q", "r"}, "q", {"a", EMPTY}, {"a", EMPTY},
                [("q", EMPTY, "r", EMPTY), ("r", "a", "r", "a")])
    c = CensusRequirement.of({"a": 1})
    trace = solve_gwmm(m, "a", c)
    assert trace == (0, 1)
    assert brute_gwmm(m, "a", c)


def test_gwmm_empty_move_chains_bounded():
    # A two-state empty-letter cycle must not spin forever.
    m = machine({"q", "r"}, "q", {EMPTY, "a"}, {EMPTY},
                [("q", EMPTY, "r", EMPTY), ("r", EMPTY, "q", EMPTY)])
    assert solve_gwmm(m, "", CensusRequirement.of({})) is not None
    assert solve_gwmm(m, "a", CensusRequirement.of({})) is None


def test_gwmm_trace_replays_to_census():
    rng = make_rng(17)
    replayed = 0
    while replayed < 60:
        m = random_machine(rng)
        x = random_word(rng, m)
        c = random_gwmm_census(rng, m, x)
        trace = solve_gwmm(m, x, c)
        if trace is None:
            continue
        assert census_of(run(m, x, trace)) == c
        replayed += 1


def test_gwmm_oracle_equivalence():
    assert check_gwmm(42, 300) == 300


def test_gwmm_dense_and_sparse_agree():
    rng = make_rng(23)
    for _ in range(120):
        m = random_machine(rng)
        x = random_word(rng, m)
        c = random_gwmm_census(rng, m, x)
        dense = solve_gwmm(m, x, c, dense_cap=1 << 22)
        sparse = solve_gwmm(m, x, c, dense_cap=0)
        assert (dense is None) == (sparse is None)
        if dense is not None:
            assert census_of(run(m, x, dense)) == census_of(run(m, x, sparse)) == c


def test_binary_guard_fires_without_table():
    m = machine({"q"}, "q", {"a"}, {"b"}, [("q", "a", "q", "b")])
    assert solve_gwmm_binary_guard(m, "aaa", CensusRequirement.of({"b": 10})) is None


def test_binary_guard_exact_total():
    c = CensusRequirement.of({"a": 2, "b": 1})
    assert solve_gwmm_binary_guard(IDENTITY, "aab", c) is not None
    assert solve_gwmm_binary_guard(
        IDENTITY, "abb", CensusRequirement.of({"a": 2, "b": 1})) is None


def test_binary_guard_requires_empty_free_inputs():
    m = machine({"q"}, "q", {"a", EMPTY}, {"b"},
                [("q", "a", "q", "b"), ("q", EMPTY, "q", "b")])
    with pytest.raises(EmptyLetterPresent):
        solve_gwmm_binary_guard(m, "a", CensusRequirement.of({"b": 1}))


def test_binary_guard_oracle_agreement():
    assert check_gwmm_guard(42, 30) == 30


def test_binary_guard_matches_oracle_on_empty_free_machines():
    from varsolve.corpus import check_gwmm_empty_free
    assert check_gwmm_empty_free(42, 200) == 200


def test_ewmm_loop_merge_by_census_vector_is_safe():
    # Two distinct loops with equal per-execution counts: feasibility only
    # depends on achievable census sums, so one representative suffices.
    m = machine({"q", "r"}, "q", {"a"}, {"x", EMPTY},
                [("q", "a", "q", "x"), ("q", "a", "r", "x"), ("r", "a", "q", EMPTY)])
    c = CensusRequirement.of({"x": 4})
    cert = solve_ewmm(m, c)
    assert cert is not None
    assert replay_ewmm(cert) == c


def _achievable_censuses(m, word, cap=3):
    """All capped output censuses of computations reading exactly ``word``."""
    letters = tuple(sorted(l for l in m.output_alphabet if l is not EMPTY))
    index_of = {l: j for j, l in enumerate(letters)}
    start = (m.start, 0, (0,) * len(letters))
    seen = {start}
    stack = [start]
    results = set()
    while stack:
        state, pos, census = stack.pop()
        if pos == len(word):
            results.add(census)
        for t in m.transitions:
            if t.source != state:
                continue
            if t.reads is EMPTY:
                pos2 = pos
            elif pos < len(word) and word[pos] == t.reads:
                pos2 = pos + 1
            else:
                continue
            if t.writes is EMPTY:
                census2 = census
            else:
                j = index_of[t.writes]
                if census[j] + 1 > cap:
                    continue
                census2 = census[:j] + (census[j] + 1,) + census[j + 1:]
            node = (t.target, pos2, census2)
            if node not in seen:
                seen.add(node)
                stack.append(node)
    return {tuple(zip(letters, census)) for census in results}


def test_subdivision_preserves_census_reachability():
    rng = make_rng(31)
    for _ in range(60):
        m = random_machine(rng, max_states=4, max_letters=2, max_transitions=6)
        sub = subdivide(m)
        word = random_word(rng, m, max_len=5)
        original = _achievable_censuses(m, word)
        padded = _achievable_censuses(sub, word)
        assert original == padded


def test_dpindex_shape():
    index = DpIndex("q", (1, 0), 2, 0)
    assert index.state == "q"
    assert index.partial_census == (1, 0)
    assert index.input_position == 2
    assert index.propagation == 0
