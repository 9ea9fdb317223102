"""Instance text formats: parsing with positioned errors, and writers.

All formats are line-oriented and whitespace-tolerant.  The empty letter is
spelled ``_`` in machine files; otherwise letters, states and vertices are
arbitrary non-whitespace tokens.  Parse errors carry file, line, and column.
"""

from __future__ import annotations

from dataclasses import dataclass

from .mealy import EMPTY, CensusRequirement, MealyMachine, Transition
from .reductions import HeatInstance, MulticoloredGraph, SplitsInstance
from .variety import Multiset


class ParseError(ValueError):
    def __init__(self, path: str, line: int, column: int, message: str):
        super().__init__(f"{path}:{line}:{column}: {message}")
        self.path = path
        self.line = line
        self.column = column


@dataclass
class _Reader:
    path: str
    lines: list[str]

    @classmethod
    def of(cls, text: str, path: str) -> "_Reader":
        return cls(path=path, lines=text.splitlines())

    def tokens(self):
        """Yield (line_number, [(token, column), ...]) for non-blank lines."""
        for number, line in enumerate(self.lines, start=1):
            parts = []
            column = 1
            for token in line.split():
                column = line.index(token, column - 1) + 1
                parts.append((token, column))
                column += len(token)
            if parts:
                yield number, parts

    def fail(self, line: int, column: int, message: str):
        raise ParseError(self.path, line, column, message)


def _int(reader: _Reader, token: str, line: int, column: int, what: str) -> int:
    try:
        return int(token)
    except ValueError:
        reader.fail(line, column, f"expected {what}, got {token!r}")


def parse_multiset(text: str, path: str = "<instance>",
                   expect_target: bool = False) -> tuple[Multiset, int | None]:
    """Lines of ``value multiplicity``; optional ``s=<int>`` target line."""
    reader = _Reader.of(text, path)
    entries: list[tuple[int, int]] = []
    seen: set[int] = set()
    target = None
    for line, parts in reader.tokens():
        token, column = parts[0]
        if token.startswith("s="):
            target = _int(reader, token[2:], line, column + 2, "target integer")
            continue
        if len(parts) != 2:
            reader.fail(line, column, "expected 'value multiplicity'")
        value = _int(reader, token, line, column, "integer value")
        mult_token, mult_column = parts[1]
        mult = _int(reader, mult_token, line, mult_column, "multiplicity")
        if value in seen:
            reader.fail(line, column, f"duplicate value {value}")
        if mult <= 0:
            reader.fail(line, mult_column, f"multiplicity of {value} must be positive")
        seen.add(value)
        entries.append((value, mult))
    if expect_target and target is None:
        reader.fail(len(reader.lines) or 1, 1, "missing 's=<int>' line")
    return Multiset(tuple(entries)), target


def parse_multiset_sections(text: str, names: tuple[str, ...],
                            path: str = "<instance>",
                            expect_target: bool = False):
    """Multisets under ``A:`` style section markers, optional ``s=`` line."""
    reader = _Reader.of(text, path)
    sections: dict[str, list[tuple[int, int]]] = {name: [] for name in names}
    seen: dict[str, set[int]] = {name: set() for name in names}
    current = None
    target = None
    for line, parts in reader.tokens():
        token, column = parts[0]
        if token.rstrip(":") in names and token.endswith(":"):
            current = token.rstrip(":")
            continue
        if token.startswith("s="):
            target = _int(reader, token[2:], line, column + 2, "target integer")
            continue
        if current is None:
            reader.fail(line, column,
                        f"expected a section marker, one of {', '.join(n + ':' for n in names)}")
        if len(parts) != 2:
            reader.fail(line, column, "expected 'value multiplicity'")
        value = _int(reader, token, line, column, "integer value")
        mult_token, mult_column = parts[1]
        mult = _int(reader, mult_token, line, mult_column, "multiplicity")
        if value in seen[current]:
            reader.fail(line, column, f"duplicate value {value} in section {current}")
        if mult <= 0:
            reader.fail(line, mult_column, f"multiplicity of {value} must be positive")
        seen[current].add(value)
        sections[current].append((value, mult))
    if expect_target and target is None:
        reader.fail(len(reader.lines) or 1, 1, "missing 's=<int>' line")
    multisets = tuple(Multiset(tuple(sections[name])) for name in names)
    return (*multisets, target) if expect_target else multisets


def _letter(token: str):
    return EMPTY if token == "_" else token


def _letter_text(letter) -> str:
    return "_" if letter is EMPTY else str(letter)


def parse_machine_instance(text: str, path: str = "<instance>",
                           with_word: bool = False):
    """Machine headers and transitions, a census section, optionally a word.

    Layout: ``states:``, ``start:``, ``input:``, ``output:`` header lines,
    one transition per line as ``from read -> to write``, then for the
    given-word problem a ``word:`` line, then ``census:`` followed by
    ``letter count`` lines.
    """
    reader = _Reader.of(text, path)
    headers: dict[str, list[str]] = {}
    transitions: list[Transition] = []
    census: dict[str, int] = {}
    census_seen = False
    word: list[str] | None = None
    mode = "machine"
    for line, parts in reader.tokens():
        token, column = parts[0]
        if token in ("states:", "start:", "input:", "output:"):
            headers[token[:-1]] = [t for t, _ in parts[1:]]
            continue
        if token == "word:":
            if not with_word:
                reader.fail(line, column, "this problem takes no input word")
            word = [t for t, _ in parts[1:]]
            continue
        if token == "census:":
            census_seen = True
            mode = "census"
            continue
        if mode == "census":
            if len(parts) != 2:
                reader.fail(line, column, "expected 'letter count'")
            count_token, count_column = parts[1]
            count = _int(reader, count_token, line, count_column, "census count")
            if count < 0:
                reader.fail(line, count_column, "census counts are non-negative")
            if token in census:
                reader.fail(line, column, f"duplicate census letter {token!r}")
            census[token] = count
            continue
        if len(parts) == 5 and parts[2][0] == "->":
            transitions.append(Transition(parts[0][0], _letter(parts[1][0]),
                                          parts[3][0], _letter(parts[4][0])))
            continue
        reader.fail(line, column, "expected 'from read -> to write'")
    for required in ("states", "start", "input", "output"):
        if required not in headers:
            reader.fail(len(reader.lines) or 1, 1, f"missing '{required}:' header")
    if not census_seen:
        reader.fail(len(reader.lines) or 1, 1, "missing 'census:' section")
    if len(headers["start"]) != 1:
        reader.fail(1, 1, "start: expects exactly one state")
    try:
        machine = MealyMachine(
            states=frozenset(headers["states"]),
            start=headers["start"][0],
            input_alphabet=frozenset(_letter(t) for t in headers["input"]),
            output_alphabet=frozenset(_letter(t) for t in headers["output"]),
            transitions=tuple(transitions),
        )
        requirement = CensusRequirement.of(census)
    except ValueError as error:
        reader.fail(len(reader.lines) or 1, 1, str(error))
    if with_word:
        if word is None:
            reader.fail(len(reader.lines) or 1, 1, "missing 'word:' line")
        return machine, tuple(word), requirement
    return machine, requirement


def parse_graph(text: str, path: str = "<instance>") -> MulticoloredGraph:
    """First line k, then ``class i: v1 v2 ...`` lines, then ``edge u v``."""
    reader = _Reader.of(text, path)
    k = None
    classes: dict[int, list[str]] = {}
    edges: list[tuple[str, str]] = []
    for line, parts in reader.tokens():
        token, column = parts[0]
        if k is None:
            k = _int(reader, token, line, column, "class count k")
            if k < 1:
                reader.fail(line, column, "k must be positive")
            classes = {i: [] for i in range(1, k + 1)}
            continue
        if token == "class":
            if len(parts) < 2 or not parts[1][0].endswith(":"):
                reader.fail(line, column, "expected 'class i: v1 v2 ...'")
            index = _int(reader, parts[1][0][:-1], line, parts[1][1], "class index")
            if index not in classes:
                reader.fail(line, parts[1][1], f"class index {index} outside 1..{k}")
            classes[index].extend(t for t, _ in parts[2:])
            continue
        if token == "edge":
            if len(parts) != 3:
                reader.fail(line, column, "expected 'edge u v'")
            edges.append((parts[1][0], parts[2][0]))
            continue
        reader.fail(line, column, f"unexpected token {token!r}")
    if k is None:
        reader.fail(1, 1, "empty graph instance")
    try:
        return MulticoloredGraph(
            k=k, classes=tuple(tuple(classes[i]) for i in range(1, k + 1)),
            edges=tuple(edges))
    except ValueError as error:
        reader.fail(len(reader.lines) or 1, 1, str(error))


def parse_heat(text: str, path: str = "<instance>") -> HeatInstance:
    """First line threshold, second line deadline, then ``job H count``."""
    reader = _Reader.of(text, path)
    threshold = None
    deadline = None
    census: dict[int, int] = {}
    for line, parts in reader.tokens():
        token, column = parts[0]
        if threshold is None:
            threshold = _int(reader, token, line, column, "temperature threshold")
            continue
        if deadline is None:
            deadline = _int(reader, token, line, column, "deadline")
            continue
        if token != "job" or len(parts) != 3:
            reader.fail(line, column, "expected 'job heat count'")
        heat = _int(reader, parts[1][0], line, parts[1][1], "heat level")
        count = _int(reader, parts[2][0], line, parts[2][1], "job count")
        if heat in census:
            reader.fail(line, parts[1][1], f"duplicate heat level {heat}")
        census[heat] = count
    if threshold is None or deadline is None:
        reader.fail(len(reader.lines) or 1, 1, "expected threshold and deadline lines")
    try:
        return HeatInstance(threshold=threshold, job_census=census, deadline=deadline)
    except ValueError as error:
        reader.fail(len(reader.lines) or 1, 1, str(error))


def parse_splits(text: str, path: str = "<instance>") -> SplitsInstance:
    """A ``gaps: g1 g2 ...`` line, then ``job length count`` lines."""
    reader = _Reader.of(text, path)
    gaps = None
    census: dict[int, int] = {}
    for line, parts in reader.tokens():
        token, column = parts[0]
        if token == "gaps:":
            gaps = tuple(_int(reader, t, line, c, "gap") for t, c in parts[1:])
            continue
        if token != "job" or len(parts) != 3:
            reader.fail(line, column, "expected 'job length count'")
        length = _int(reader, parts[1][0], line, parts[1][1], "job length")
        count = _int(reader, parts[2][0], line, parts[2][1], "job count")
        if length in census:
            reader.fail(line, parts[1][1], f"duplicate job length {length}")
        census[length] = count
    if gaps is None:
        reader.fail(1, 1, "missing 'gaps:' line")
    try:
        return SplitsInstance(gaps=gaps, job_census=census)
    except ValueError as error:
        reader.fail(len(reader.lines) or 1, 1, str(error))


def parse_instance(text: str, kind: str, path: str = "<instance>"):
    """Dispatch to the parser for an instance kind.

    Kinds: subsetsum, partition, threepartition, num3dm, nmts, ewmm, gwmm,
    graph, heat, splits.
    """
    if kind == "subsetsum":
        return parse_multiset(text, path, expect_target=True)
    if kind in ("partition", "threepartition"):
        multiset, _ = parse_multiset(text, path)
        return multiset
    if kind == "num3dm":
        return parse_multiset_sections(text, ("A", "B", "C"), path,
                                       expect_target=True)
    if kind == "nmts":
        return parse_multiset_sections(text, ("A", "B", "S"), path)
    if kind == "ewmm":
        return parse_machine_instance(text, path)
    if kind == "gwmm":
        return parse_machine_instance(text, path, with_word=True)
    if kind == "graph":
        return parse_graph(text, path)
    if kind == "heat":
        return parse_heat(text, path)
    if kind == "splits":
        return parse_splits(text, path)
    raise ValueError(f"unknown instance kind {kind!r}")


def write_instance(instance, kind: str) -> str:
    """Dispatch to the writer for an instance kind (inverse of the parser)."""
    if kind == "subsetsum":
        multiset, target = instance
        return write_multiset(multiset, target=target)
    if kind in ("partition", "threepartition"):
        return write_multiset(instance)
    if kind == "num3dm":
        a, b, c, target = instance
        return write_multiset_sections(("A", "B", "C"), (a, b, c), target=target)
    if kind == "nmts":
        return write_multiset_sections(("A", "B", "S"), instance)
    if kind == "ewmm":
        machine, census = instance
        return write_machine_instance(machine, census)
    if kind == "gwmm":
        machine, word, census = instance
        return write_machine_instance(machine, census, word=word)
    if kind == "graph":
        return write_graph(instance)
    if kind == "heat":
        return write_heat(instance)
    if kind == "splits":
        return write_splits(instance)
    raise ValueError(f"unknown instance kind {kind!r}")


def write_multiset(a: Multiset, target: int | None = None) -> str:
    lines = [f"{value} {mult}" for value, mult in a.entries]
    if target is not None:
        lines.append(f"s={target}")
    return "\n".join(lines) + "\n" if lines else ""


def write_multiset_sections(names: tuple[str, ...], multisets, target=None) -> str:
    lines = []
    for name, ms in zip(names, multisets):
        lines.append(f"{name}:")
        lines.extend(f"{value} {mult}" for value, mult in ms.entries)
    if target is not None:
        lines.append(f"s={target}")
    return "\n".join(lines) + "\n"


def write_machine_instance(m: MealyMachine, census: CensusRequirement,
                           word=None) -> str:
    lines = [
        "states: " + " ".join(sorted(m.states)),
        "start: " + m.start,
        "input: " + " ".join(_letter_text(l) for l in sorted(m.input_alphabet)),
        "output: " + " ".join(_letter_text(l) for l in sorted(m.output_alphabet)),
    ]
    lines.extend(t.text() for t in m.transitions)
    if word is not None:
        lines.append("word: " + " ".join(str(l) for l in word))
    lines.append("census:")
    lines.extend(f"{letter} {count}" for letter, count in census.counts)
    return "\n".join(lines) + "\n"


def write_graph(g: MulticoloredGraph) -> str:
    lines = [str(g.k)]
    for index, cls in enumerate(g.classes, start=1):
        lines.append(f"class {index}: " + " ".join(cls))
    lines.extend(f"edge {u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"


def write_heat(h: HeatInstance) -> str:
    lines = [str(h.threshold), str(h.deadline)]
    lines.extend(f"job {heat} {count}"
                 for heat, count in sorted(h.job_census.items()) if count)
    return "\n".join(lines) + "\n"


def write_splits(s: SplitsInstance) -> str:
    lines = ["gaps: " + " ".join(str(g) for g in s.gaps)]
    lines.extend(f"job {length} {count}"
                 for length, count in sorted(s.job_census.items()) if count)
    return "\n".join(lines) + "\n"
