"""
Reader and writer for the ``.idem`` text format (grammar in ``docs/format.md``).

A document is a sequence of named blocks::

    semiring C3 {
      elements: 0 m 1;
      add: 0 m 1, m m 1, 1 1 1;
      mul: 0 0 0, 0 m m, 0 m 1;
    }

Every statement is ``key: value;``. A value is a comma separated list of rows, a row is a
whitespace separated list of atoms or bracketed sets ``[a b]``. Table entries name elements;
bare integers are accepted as element indices when they are not names.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Any, Callable, Dict, List, Mapping, Optional, Sequence, Set, Tuple

from idemspec import logging
from idemspec.algebra.modules import FinModule, build_module
from idemspec.algebra.order import FinCIM, build_cim
from idemspec.algebra.semiring import FinSemiring, build_semiring
from idemspec.algebra.structure import find_unit, freeze_table
from idemspec.constants import BlockKind
from idemspec.errors import FormatError, ParseError
from idemspec.io.types import Atom, Block, Document
from idemspec.schemes.algebras import FinMonoid, FinRing, build_monoid, build_ring
from idemspec.topology.space import FinTop, build_space

ATOM_PATTERN = r"[^\s{}\[\],;:#]+"

_TOKEN = re.compile(
    rf"(?P<comment>#[^\n]*)|(?P<newline>\n)|(?P<space>[ \t\r]+)|(?P<punct>[{{}}\[\],;:])|(?P<atom>{ATOM_PATTERN})"
)
_ATOM = re.compile(ATOM_PATTERN)

ALLOWED_KEYS: Dict[BlockKind, Set[str]] = {
    BlockKind.CIM: {"elements", "add", "zero", "one"},
    BlockKind.SEMIRING: {"cim", "elements", "add", "zero", "one", "mul"},
    BlockKind.TOP: {"points", "closed"},
    BlockKind.MODULE: {"cim", "elements", "add", "zero", "action"},
    BlockKind.MONOID: {"elements", "mul", "one"},
    BlockKind.RING: {"elements", "add", "mul"},
}


@dataclass
class Token:
    kind: str
    text: str
    line: int
    column: int


def tokenize(text: str) -> List[Token]:
    tokens = []
    line, line_start = 1, 0
    for match in _TOKEN.finditer(text):
        kind = match.lastgroup
        if kind == "newline":
            line += 1
            line_start = match.end()
        elif kind in ("punct", "atom"):
            tokens.append(Token(kind, match.group(), line, match.start() - line_start + 1))
    return tokens


class _Reader:
    def __init__(self, tokens: List[Token]):
        self.tokens = tokens
        self.pos = 0

    def peek(self) -> Optional[Token]:
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def next(self, expected: str) -> Token:
        token = self.peek()
        if token is None:
            last = self.tokens[-1] if self.tokens else Token("eof", "", 1, 1)
            raise ParseError(f"unexpected end of input, expected {expected}", last.line, last.column)
        self.pos += 1
        return token

    def expect_punct(self, char: str) -> Token:
        token = self.next(f"'{char}'")
        if token.kind != "punct" or token.text != char:
            raise ParseError(f"expected '{char}', found '{token.text}'", token.line, token.column)
        return token

    def expect_atom(self, what: str) -> Token:
        token = self.next(what)
        if token.kind != "atom":
            raise ParseError(f"expected {what}, found '{token.text}'", token.line, token.column)
        return token

    def at_punct(self, char: str) -> bool:
        token = self.peek()
        return token is not None and token.kind == "punct" and token.text == char

    def block(self) -> Block:
        kind_token = self.expect_atom("block kind")
        try:
            kind = BlockKind(kind_token.text)
        except ValueError:
            raise ParseError(f"unknown block kind '{kind_token.text}'", kind_token.line, kind_token.column) from None
        name = self.expect_atom("block name").text
        over = None
        if kind == BlockKind.MODULE:
            keyword = self.expect_atom("'over'")
            if keyword.text != "over":
                raise ParseError("module blocks read 'module NAME over RING'", keyword.line, keyword.column)
            over = self.expect_atom("semiring name").text
        self.expect_punct("{")
        block = Block(kind, name, {}, over, kind_token.line, kind_token.column)
        while not self.at_punct("}"):
            key = self.expect_atom("key")
            if key.text not in ALLOWED_KEYS[kind]:
                raise ParseError(f"unknown key '{key.text}' in {kind.value} block", key.line, key.column)
            if key.text in block.fields:
                raise ParseError(f"duplicate key '{key.text}'", key.line, key.column)
            self.expect_punct(":")
            block.fields[key.text] = self.value()
            self.expect_punct(";")
        self.expect_punct("}")
        return block

    def value(self) -> List[List[Any]]:
        rows: List[List[Any]] = [[]]
        while True:
            token = self.peek()
            if token is None or (token.kind == "punct" and token.text in ";}"):
                return rows
            if token.kind == "atom":
                self.pos += 1
                rows[-1].append(Atom(token.text, token.line, token.column))
            elif token.text == ",":
                self.pos += 1
                rows.append([])
            elif token.text == "[":
                self.pos += 1
                members = []
                while not self.at_punct("]"):
                    member = self.expect_atom("set member")
                    members.append(Atom(member.text, member.line, member.column))
                self.expect_punct("]")
                rows[-1].append(tuple(members))
            else:
                raise ParseError(f"unexpected '{token.text}'", token.line, token.column)


def _error_at(atom: Atom, message: str) -> ParseError:
    return ParseError(message, atom.line, atom.column)


class _Fields:
    """Typed access to the statements of one block."""

    def __init__(self, block: Block, objects: Mapping[str, Any]):
        self.block = block
        self.objects = objects

    def has(self, key: str) -> bool:
        return key in self.block.fields

    def rows(self, key: str) -> List[List[Any]]:
        if key not in self.block.fields:
            block = self.block
            raise ParseError(f"{block.kind.value} '{block.name}' needs '{key}'", block.line, block.column)
        return self.block.fields[key]

    def atoms(self, key: str) -> List[Atom]:
        rows = self.rows(key)
        if len(rows) != 1 or any(not isinstance(a, Atom) for a in rows[0]):
            raise ParseError(f"'{key}' takes one row of names", self.block.line, self.block.column)
        return rows[0]

    def names(self, key: str) -> Tuple[str, ...]:
        atoms = self.atoms(key)
        seen: Set[str] = set()
        for a in atoms:
            if a.text in seen:
                raise _error_at(a, f"duplicate name '{a.text}'")
            seen.add(a.text)
        return tuple(a.text for a in atoms)

    def single(self, key: str) -> Atom:
        atoms = self.atoms(key)
        if len(atoms) != 1:
            raise ParseError(f"'{key}' takes a single element", self.block.line, self.block.column)
        return atoms[0]

    def element(self, key: str, names: Sequence[str]) -> int:
        return resolve(self.single(key), names)

    def table(self, key: str, names: Sequence[str]) -> List[List[int]]:
        out = []
        for row in self.rows(key):
            entries = []
            for item in row:
                if not isinstance(item, Atom):
                    raise ParseError(f"sets are not allowed in '{key}'", self.block.line, self.block.column)
                entries.append(resolve(item, names))
            out.append(entries)
        return out

    def reference(self, name: Atom, kind: type):
        if name.text not in self.objects:
            raise _error_at(name, f"unknown object '{name.text}'")
        obj = self.objects[name.text]
        if not isinstance(obj, kind):
            raise _error_at(name, f"'{name.text}' is not a {kind.__name__}")
        return obj


def resolve(atom: Atom, names: Sequence[str]) -> int:
    if atom.text in names:
        return list(names).index(atom.text)
    if atom.text.isdigit() and int(atom.text) < len(names):
        return int(atom.text)
    raise _error_at(atom, f"unknown element '{atom.text}'")


def _absorbing(join: Sequence[Sequence[int]]) -> Optional[int]:
    for x, row in enumerate(join):
        if all(v == x for v in row):
            return x
    return None


def _carrier(fields: _Fields, own_top: bool = False) -> FinCIM:
    if fields.has("cim"):
        return fields.reference(fields.single("cim"), FinCIM)
    names = fields.names("elements")
    join = freeze_table(fields.table("add", names), len(names), name="add")
    bottom = fields.element("zero", names) if fields.has("zero") else find_unit(join)
    top = fields.element("one", names) if own_top and fields.has("one") else _absorbing(join)
    if bottom is None or top is None:
        raise FormatError("addition needs a unit and an absorbing element")
    return build_cim(join, bottom, top, names)


def _build_cim(fields: _Fields) -> FinCIM:
    return _carrier(fields, own_top=True)


def _build_semiring(fields: _Fields) -> FinSemiring:
    carrier = _carrier(fields)
    mul = freeze_table(fields.table("mul", carrier.names), carrier.n, name="mul")
    one = fields.element("one", carrier.names) if fields.has("one") else find_unit(mul)
    if one is None:
        raise FormatError("multiplication has no unit")
    return build_semiring(carrier, mul, one)


def _build_space(fields: _Fields) -> FinTop:
    points = fields.names("points")
    closed = []
    for row in fields.rows("closed"):
        for item in row:
            if isinstance(item, Atom):
                raise _error_at(item, "closed sets are written [a b]")
            closed.append(frozenset(resolve(a, points) for a in item))
    return build_space(points, closed)


def _build_module(fields: _Fields) -> FinModule:
    block = fields.block
    ring = fields.reference(Atom(block.over or "", block.line, block.column), FinSemiring)
    carrier = _carrier(fields)
    return build_module(ring, carrier, fields.table("action", carrier.names))


def _build_monoid(fields: _Fields) -> FinMonoid:
    names = fields.names("elements")
    one = fields.element("one", names) if fields.has("one") else None
    return build_monoid(fields.table("mul", names), one, names)


def _build_ring(fields: _Fields) -> FinRing:
    names = fields.names("elements")
    return build_ring(fields.table("add", names), fields.table("mul", names), names)


BUILDERS: Dict[BlockKind, Callable[[_Fields], Any]] = {
    BlockKind.CIM: _build_cim,
    BlockKind.SEMIRING: _build_semiring,
    BlockKind.TOP: _build_space,
    BlockKind.MODULE: _build_module,
    BlockKind.MONOID: _build_monoid,
    BlockKind.RING: _build_ring,
}


def build_block(block: Block, objects: Mapping[str, Any]):
    """Build and validate the object of one block; builders raise on the first failing law."""
    try:
        return BUILDERS[block.kind](_Fields(block, objects))
    except ParseError:
        raise
    except FormatError as e:
        error = ParseError(f"{block.kind.value} '{block.name}': {e}", block.line, block.column)
        error.row = e.row
        raise error from e


def parse(text: str) -> Document:
    reader = _Reader(tokenize(text))
    document = Document()
    while reader.peek() is not None:
        block = reader.block()
        if block.name in document.objects:
            raise ParseError(f"duplicate name '{block.name}'", block.line, block.column)
        document.objects[block.name] = build_block(block, document.objects)
        document.blocks.append(block)
    logging.debug(f"parsed {len(document.blocks)} blocks")
    return document


def _safe_names(names: Sequence[str]) -> Tuple[str, ...]:
    if len(set(names)) == len(names) and all(_ATOM.fullmatch(n) for n in names):
        return tuple(names)
    return tuple(str(i) for i in range(len(names)))


def _table(rows, names: Sequence[str], indent: str = "    ") -> str:
    lines = [" ".join(names[v] for v in row) for row in rows]
    return "\n" + ",\n".join(indent + line for line in lines)


def _carrier_lines(carrier: FinCIM, names: Sequence[str]) -> List[str]:
    return [
        f"  elements: {' '.join(names)};",
        f"  zero: {names[carrier.bottom]};",
        f"  add:{_table(carrier.join, names)};",
    ]


def emit_object(name: str, obj: Any, ring_name: Optional[str] = None) -> str:
    """The canonical block for ``obj``; modules name their semiring with ``ring_name``."""
    if isinstance(obj, FinCIM):
        names = _safe_names(obj.names)
        lines = _carrier_lines(obj, names) + [f"  one: {names[obj.top]};"]
        header = f"cim {name}"
    elif isinstance(obj, FinSemiring):
        names = _safe_names(obj.names)
        lines = _carrier_lines(obj.add, names) + [f"  one: {names[obj.one]};", f"  mul:{_table(obj.mul, names)};"]
        header = f"semiring {name}"
    elif isinstance(obj, FinTop):
        points = _safe_names(obj.points)
        sets = ", ".join("[" + " ".join(points[x] for x in sorted(c)) + "]" for c in obj.closed_sets)
        lines = [f"  points: {' '.join(points)};", f"  closed: {sets};"]
        header = f"top {name}"
    elif isinstance(obj, FinModule):
        if ring_name is None:
            raise FormatError(f"module '{name}' needs the name of its semiring")
        names = _safe_names(obj.names)
        lines = _carrier_lines(obj.carrier, names) + [f"  action:{_table(obj.action, names)};"]
        header = f"module {name} over {ring_name}"
    elif isinstance(obj, FinMonoid):
        names = _safe_names(obj.names)
        lines = [f"  elements: {' '.join(names)};", f"  one: {names[obj.one]};", f"  mul:{_table(obj.mul, names)};"]
        header = f"monoid {name}"
    elif isinstance(obj, FinRing):
        names = _safe_names(obj.names)
        lines = [
            f"  elements: {' '.join(names)};",
            f"  add:{_table(obj.add, names)};",
            f"  mul:{_table(obj.mul, names)};",
        ]
        header = f"ring {name}"
    else:
        raise FormatError(f"cannot write a {type(obj).__name__}")
    return header + " {\n" + "\n".join(lines) + "\n}\n"


def emit_objects(objects: Mapping[str, Any]) -> str:
    """Canonical text for named objects; a module whose semiring is missing gets it emitted first."""
    chunks = []
    written: Dict[str, Any] = {}
    for name, obj in objects.items():
        ring_name = None
        if isinstance(obj, FinModule):
            ring_name = next((n for n, o in written.items() if isinstance(o, FinSemiring) and o == obj.ring), None)
            if ring_name is None:
                ring_name = f"{name}_ring"
                chunks.append(emit_object(ring_name, obj.ring))
                written[ring_name] = obj.ring
        chunks.append(emit_object(name, obj, ring_name))
        written[name] = obj
    return "\n".join(chunks)


def emit(document: Document) -> str:
    return emit_objects(document.objects)
