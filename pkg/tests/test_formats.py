"""Instance grammar: parsing, positioned errors, writer round-trips."""

import pytest

from varsolve.formats import (ParseError, parse_graph, parse_heat,
                              parse_instance, parse_machine_instance,
                              parse_multiset, parse_multiset_sections,
                              parse_splits, write_graph, write_heat,
                              write_instance, write_machine_instance,
                              write_multiset, write_multiset_sections,
                              write_splits)
from varsolve.mealy import EMPTY
from varsolve.reductions import HeatInstance, MulticoloredGraph, SplitsInstance
from varsolve.variety import Multiset


def test_multiset_grammar_example():
    multiset, target = parse_multiset("3 2\n5 1\ns=11\n", expect_target=True)
    assert multiset == Multiset(((3, 2), (5, 1)))
    assert target == 11


def test_multiset_duplicate_value_names_value():
    with pytest.raises(ParseError) as info:
        parse_multiset("3 2\n3 1\n", path="bad.txt")
    assert "duplicate value 3" in str(info.value)
    assert "bad.txt:2:1" in str(info.value)


def test_multiset_negative_multiplicity():
    with pytest.raises(ParseError) as info:
        parse_multiset("3 -2\n")
    assert ":1:3" in str(info.value)


def test_empty_file_is_empty_multiset():
    multiset, target = parse_multiset("")
    assert multiset == Multiset(())
    assert target is None


def test_multiset_roundtrip():
    a = Multiset(((3, 2), (-5, 1), (0, 4)))
    text = write_multiset(a, target=7)
    parsed, target = parse_multiset(text, expect_target=True)
    assert parsed == a and target == 7


def test_sections_roundtrip():
    a, b, c = Multiset(((1, 1), (2, 1))), Multiset(((1, 2),)), Multiset(((3, 2),))
    text = write_multiset_sections(("A", "B", "C"), (a, b, c), target=6)
    pa, pb, pc, target = parse_multiset_sections(
        text, ("A", "B", "C"), expect_target=True)
    assert (pa, pb, pc, target) == (a, b, c, 6)


def test_machine_roundtrip_with_word():
    text = ("states: q r\nstart: q\ninput: _ a\noutput: _ b\n"
            "q a -> r b\nr _ -> q _\nword: a a\ncensus:\nb 2\n")
    machine, word, census = parse_machine_instance(text, with_word=True)
    assert machine.start == "q"
    assert EMPTY in machine.input_alphabet
    assert word == ("a", "a")
    assert census.get("b") == 2
    rewritten = write_machine_instance(machine, census, word=word)
    machine2, word2, census2 = parse_machine_instance(rewritten, with_word=True)
    assert (machine2, word2, census2) == (machine, word, census)


def test_machine_missing_header():
    with pytest.raises(ParseError) as info:
        parse_machine_instance("start: q\ninput: a\noutput: b\ncensus:\n")
    assert "states" in str(info.value)


def test_machine_bad_transition_line():
    with pytest.raises(ParseError) as info:
        parse_machine_instance(
            "states: q\nstart: q\ninput: a\noutput: b\nq a r b\ncensus:\n")
    assert ":5:1" in str(info.value)


def test_graph_roundtrip():
    g = MulticoloredGraph(k=2, classes=(("a1", "a2"), ("b1",)),
                          edges=(("a1", "b1"), ("a2", "b1")))
    assert parse_graph(write_graph(g)) == g


def test_graph_errors():
    with pytest.raises(ParseError):
        parse_graph("2\nclass 1: a\nclass 5: b\n")
    with pytest.raises(ParseError) as info:
        parse_graph("2\nclass 1: a b\nclass 2: c\nedge a b\n")
    assert "inside one class" in str(info.value)


def test_heat_roundtrip():
    h = HeatInstance(threshold=2, job_census={1: 2, 4: 1}, deadline=5)
    assert parse_heat(write_heat(h)) == h


def test_splits_roundtrip():
    s = SplitsInstance(gaps=(4, 1, 2, 1, 1, 1, 4),
                       job_census={1: 1, 3: 3, 4: 1, 5: 2})
    assert parse_splits(write_splits(s)) == s


def test_splits_size_mismatch_reported_as_parse_error():
    with pytest.raises(ParseError) as info:
        parse_splits("gaps: 1 1\njob 1 1\n")
    assert "one job per step" in str(info.value)


def test_dispatch_roundtrips_every_kind():
    instances = {
        "subsetsum": (Multiset(((3, 2), (5, 1))), 11),
        "partition": Multiset(((2, 4),)),
        "threepartition": Multiset(((1, 2), (2, 2), (3, 2))),
        "num3dm": (Multiset(((1, 2),)), Multiset(((2, 2),)),
                   Multiset(((3, 2),)), 6),
        "nmts": (Multiset(((1, 2),)), Multiset(((2, 2),)), Multiset(((3, 2),))),
        "graph": MulticoloredGraph(k=2, classes=(("a",), ("b",)),
                                   edges=(("a", "b"),)),
        "heat": HeatInstance(threshold=1, job_census={2: 1}, deadline=3),
        "splits": SplitsInstance(gaps=(3,), job_census={3: 1}),
    }
    for kind, instance in instances.items():
        assert parse_instance(write_instance(instance, kind), kind) == instance
    with pytest.raises(ValueError):
        parse_instance("", "mystery")
