"""The ``.lie`` algebra-definition language and its JSON twin.

    algebra h1 {
      basis X, Y, I;
      [X, Y] = I;
      [X, I] = 0;
    }

Terms are ``NAME`` or ``RATIONAL * NAME`` joined by ``+``/``-``; rationals are
``INT`` or ``INT/POSINT`` with an optional leading sign. ``#`` starts a comment.
Pairs may be written in either order; the document stores them in basis order.
"""
from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Dict, List, Mapping, Tuple

from .algebra import LieAlgebra


class DSLError(ValueError):
    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        self.line, self.column = line, column
        where = f" at line {line}, column {column}" if line is not None else ""
        super().__init__(f"{message}{where}")


@dataclass(frozen=True)
class AlgebraDocument:
    """Canonical form: pairs in basis order, terms in basis order, no zero terms."""

    name: str
    basis: Tuple[str, ...]
    brackets: Dict[Tuple[str, str], Dict[str, Fraction]] = field(default_factory=dict)
    metadata: Dict[str, Any] = field(default_factory=dict)

    def to_algebra(self) -> LieAlgebra:
        idx = {n: i for i, n in enumerate(self.basis)}
        table = {(idx[x], idx[y]): {idx[k]: v for k, v in vec.items()} for (x, y), vec in self.brackets.items()}
        return LieAlgebra(self.name, self.basis, table, self.metadata)

    @classmethod
    def from_algebra(cls, L: LieAlgebra) -> "AlgebraDocument":
        brackets = {}
        for (a, b), vec in sorted(L.brackets.items()):
            brackets[(L.basis[a], L.basis[b])] = {L.basis[c]: v for c, v in sorted(vec.items())}
        return cls(L.name, L.basis, brackets, dict(L.metadata))


_TOKEN = re.compile(
    r"(?P<ws>[ \t\r]+)|(?P<nl>\n)|(?P<comment>#[^\n]*)"
    r"|(?P<name>[A-Za-z_][A-Za-z0-9_]*)|(?P<int>[0-9]+)"
    r"|(?P<sym>[{}\[\],;=+\-*/])|(?P<bad>.)"
)


def _tokenize(text: str):
    line, line_start = 1, 0
    for m in _TOKEN.finditer(text):
        kind = m.lastgroup
        col = m.start() - line_start + 1
        if kind == "nl":
            line, line_start = line + 1, m.end()
        elif kind in ("ws", "comment"):
            continue
        elif kind == "bad":
            raise DSLError(f"unexpected character {m.group()!r}", line, col)
        else:
            yield kind, m.group(), line, col
    yield "eof", "", line, len(text) - line_start + 1


class _Parser:
    def __init__(self, text: str):
        self.tokens = list(_tokenize(text))
        self.pos = 0

    def peek(self):
        return self.tokens[self.pos]

    def next(self):
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def expect(self, value: str):
        kind, text, line, col = self.next()
        if text != value or kind == "eof":
            raise DSLError(f"expected {value!r}, found {text or 'end of input'!r}", line, col)

    def name(self, what: str = "name"):
        kind, text, line, col = self.next()
        if kind != "name":
            raise DSLError(f"expected {what}, found {text or 'end of input'!r}", line, col)
        return text, line, col

    def rational(self) -> Fraction:
        sign = 1
        if self.peek()[1] == "-":
            self.next()
            sign = -1
        kind, text, line, col = self.next()
        if kind != "int":
            raise DSLError(f"malformed rational near {text!r}", line, col)
        num = int(text)
        if self.peek()[1] == "/":
            self.next()
            kind, text, line2, col2 = self.next()
            if kind != "int" or int(text) == 0:
                raise DSLError("malformed rational: denominator must be a positive integer", line2, col2)
            return sign * Fraction(num, int(text))
        return sign * Fraction(num)

    def parse(self) -> AlgebraDocument:
        kind, text, line, col = self.next()
        if text != "algebra":
            raise DSLError("document must start with 'algebra'", line, col)
        name, _, _ = self.name("algebra name")
        self.expect("{")
        kind, text, line, col = self.next()
        if text != "basis":
            raise DSLError("expected 'basis' declaration", line, col)
        basis: List[str] = []
        if self.peek()[1] == ";":
            raise DSLError("empty basis", *self.peek()[2:])
        while True:
            bname, bl, bc = self.name("basis name")
            if bname in basis:
                raise DSLError(f"duplicate basis name {bname}", bl, bc)
            basis.append(bname)
            if self.peek()[1] == ",":
                self.next()
                continue
            self.expect(";")
            break
        index = {b: i for i, b in enumerate(basis)}

        def known(nm, ln, cl):
            if nm not in index:
                raise DSLError(f"unknown basis name {nm}", ln, cl)
            return nm

        brackets: Dict[Tuple[str, str], Dict[str, Fraction]] = {}
        seen = set()
        while self.peek()[1] == "[":
            _, _, pl, pc = self.next()
            x = known(*self.name("basis name"))
            self.expect(",")
            y = known(*self.name("basis name"))
            self.expect("]")
            self.expect("=")
            if x == y:
                raise DSLError(f"[{x}, {x}] is zero by antisymmetry and cannot be defined", pl, pc)
            key = (x, y) if index[x] < index[y] else (y, x)
            if key in seen:
                raise DSLError(f"duplicate bracket definition for [{key[0]}, {key[1]}]", pl, pc)
            seen.add(key)
            vec = self.terms(known)
            if key != (x, y):
                vec = {k: -v for k, v in vec.items()}
            vec = {k: vec[k] for k in sorted(vec, key=index.__getitem__) if vec[k]}
            if vec:
                brackets[key] = vec
        self.expect("}")
        kind, text, line, col = self.next()
        if kind != "eof":
            raise DSLError(f"trailing input {text!r}", line, col)
        brackets = dict(sorted(brackets.items(), key=lambda kv: (index[kv[0][0]], index[kv[0][1]])))
        return AlgebraDocument(name, tuple(basis), brackets)

    def terms(self, known) -> Dict[str, Fraction]:
        vec: Dict[str, Fraction] = {}
        sign = 1
        while True:
            while self.peek()[1] == "-":
                self.next()
                sign = -sign
            kind, text, line, col = self.peek()
            if kind == "int":
                coeff = self.rational()
                if self.peek()[1] == "*":
                    self.next()
                    nm = known(*self.name("basis name"))
                elif coeff == 0 and self.peek()[1] == ";":
                    nm = None
                else:
                    raise DSLError("expected '*' after coefficient", *self.peek()[2:])
            elif kind == "name":
                coeff, (nm, _, _) = Fraction(1), self.next()[1:]
                known(nm, line, col)
            else:
                raise DSLError(f"expected a term, found {text or 'end of input'!r}", line, col)
            if nm is not None:
                vec[nm] = vec.get(nm, 0) + sign * coeff
            op = self.peek()[1]
            if op == ";":
                self.next()
                return vec
            if op not in "+-" or not op:
                raise DSLError(f"expected '+', '-' or ';', found {op or 'end of input'!r}", *self.peek()[2:])
            self.next()
            sign = 1 if op == "+" else -1


def parse_algebra(text: str) -> AlgebraDocument:
    return _Parser(text).parse()


def _format_terms(vec: Mapping[str, Fraction]) -> str:
    if not vec:
        return "0"
    out = []
    for i, (nm, c) in enumerate(vec.items()):
        neg = c < 0
        mag = -c if neg else c
        body = nm if mag == 1 else f"{mag}*{nm}"
        if i == 0:
            out.append(f"-{body}" if neg else body)
        else:
            out.append(f"- {body}" if neg else f"+ {body}")
    return " ".join(out)


def print_algebra(doc: AlgebraDocument | LieAlgebra) -> str:
    if isinstance(doc, LieAlgebra):
        doc = AlgebraDocument.from_algebra(doc)
    lines = [f"algebra {doc.name} {{", f"  basis {', '.join(doc.basis)};"]
    for (x, y), vec in doc.brackets.items():
        lines.append(f"  [{x}, {y}] = {_format_terms(vec)};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def to_json_obj(doc: AlgebraDocument | LieAlgebra) -> Dict[str, Any]:
    if isinstance(doc, LieAlgebra):
        doc = AlgebraDocument.from_algebra(doc)
    obj: Dict[str, Any] = {
        "name": doc.name,
        "basis": list(doc.basis),
        "brackets": [
            {"pair": [x, y], "terms": [[nm, str(c)] for nm, c in vec.items()]}
            for (x, y), vec in doc.brackets.items()
        ],
    }
    if doc.metadata:
        obj["metadata"] = doc.metadata
    return obj


def from_json_obj(obj: Mapping[str, Any]) -> AlgebraDocument:
    """Build a document from the JSON twin by rendering and reparsing, so both
    surfaces share one set of checks."""
    try:
        name, basis = obj["name"], list(obj["basis"])
        lines = [f"algebra {name} {{", f"basis {', '.join(basis)};"]
        for item in obj.get("brackets", []):
            x, y = item["pair"]
            terms = " + ".join(f"{Fraction(str(c))}*{nm}" for nm, c in item["terms"]) or "0"
            lines.append(f"[{x}, {y}] = {terms};")
        lines.append("}")
    except (KeyError, TypeError, ValueError, ZeroDivisionError) as exc:
        raise DSLError(f"malformed JSON algebra document: {exc}") from None
    doc = parse_algebra("\n".join(lines))
    return AlgebraDocument(doc.name, doc.basis, doc.brackets, dict(obj.get("metadata", {})))


def load_algebra_text(text: str) -> AlgebraDocument:
    """Parse either surface: JSON if the text starts with '{', DSL otherwise."""
    if text.lstrip().startswith("{"):
        try:
            obj = json.loads(text)
        except json.JSONDecodeError as exc:
            raise DSLError(f"invalid JSON: {exc.msg}", exc.lineno, exc.colno) from None
        return from_json_obj(obj)
    return parse_algebra(text)
