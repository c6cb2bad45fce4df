"""Line-oriented system-description documents.

A document is a list of ``[section]`` blocks. ``#`` starts a comment.

    [objects]   labels separated by spaces or commas
    [zero]      one label
    [unit]      one label
    [shift]     shift(a) = b           (missing entries are fixed points)
    [sum]       sum(a,b) = c  or  a <= b
    [tensor]    tensor(a,b) = c        (rows of zero and unit may be omitted)
    [triangles] a -> b -> c
    [summands]  summand(s,t)           (added to s <= t of the sum order)
    [options]   complete_triangles = true|false
"""

import re
from pathlib import Path
from typing import Dict, List, Optional, Tuple

import numpy as np

from ttframes.entities.exceptions import (
    NonTotalTableError,
    SystemFormatError,
    UndeclaredObjectError,
    UnknownSystemError,
)
from ttframes.entities.tensor_entities import ObjectId, TensorSystem
from ttframes.frameworks.logging_config import get_logger
from ttframes.usecases.interfaces.framework_interfaces import SystemLoaderInterface
from ttframes.usecases.services.order_services import OrderService
from ttframes.usecases.tensor_systems import complete_triangles, derive_summands


logger = get_logger(__name__)

SECTIONS = ("objects", "zero", "unit", "shift", "sum", "tensor", "triangles", "summands", "options")
OPTIONS = {"complete_triangles": False}

_LABEL = r"[A-Za-z0-9_'.]+"
_HEADER = re.compile(r"^\[\s*(?P<name>\w+)\s*\]$")
_SPLIT = re.compile(r"[\s,]+")
_BINARY = re.compile(rf"^(?P<op>\w+)\(\s*(?P<a>{_LABEL})\s*,\s*(?P<b>{_LABEL})\s*\)\s*=\s*(?P<c>{_LABEL})$")
_SHIFT = re.compile(rf"^shift\(\s*(?P<a>{_LABEL})\s*\)\s*=\s*(?P<b>{_LABEL})$")
_ORDER = re.compile(rf"^(?P<a>{_LABEL})\s*<=\s*(?P<b>{_LABEL})$")
_TRIANGLE = re.compile(rf"^(?P<a>{_LABEL})\s*->\s*(?P<b>{_LABEL})\s*->\s*(?P<c>{_LABEL})$")
_SUMMAND = re.compile(rf"^summand\(\s*(?P<a>{_LABEL})\s*,\s*(?P<b>{_LABEL})\s*\)$")
_OPTION = re.compile(r"^(?P<key>\w+)\s*=\s*(?P<value>\w+)$")
_LABEL_ONLY = re.compile(rf"^{_LABEL}$")


class _Token:
    __slots__ = ("text", "line", "column")

    def __init__(self, text: str, line: int, column: int):
        self.text = text
        self.line = line
        self.column = column


class _Document:
    """Raw statements of a document, before labels are resolved."""

    def __init__(self):
        self.objects: List[_Token] = []
        self.zero: Optional[_Token] = None
        self.unit: Optional[_Token] = None
        self.shift: List[Tuple[_Token, _Token]] = []
        self.sum: List[Tuple[_Token, _Token, _Token]] = []
        self.order: List[Tuple[_Token, _Token]] = []
        self.tensor: List[Tuple[_Token, _Token, _Token]] = []
        self.triangles: List[Tuple[_Token, _Token, _Token]] = []
        self.summands: List[Tuple[_Token, _Token]] = []
        self.options: Dict[str, bool] = dict(OPTIONS)


class TextSystemLoader(SystemLoaderInterface):
    """Parses system documents and serves the builtin catalogue."""

    def load(self, text: str) -> TensorSystem:
        document = self._parse(text)
        system = self._build(document)
        logger.debug(f"Loaded system with {system.size} object(s) and {len(system.triangles)} triangle(s)")
        return system

    def load_file(self, path: str) -> TensorSystem:
        logger.info(f"Loading system from {path}")
        text = Path(path).read_text(encoding="utf-8")
        if str(path).endswith(".json"):
            from ttframes.frameworks.json_codec import system_from_json

            return system_from_json(text)
        return self.load(text)

    def builtin(self, name: str) -> TensorSystem:
        from ttframes.frameworks.builtin_catalog import builtin

        return builtin(name)

    def builtin_names(self) -> List[str]:
        from ttframes.frameworks.builtin_catalog import builtin_names

        return builtin_names()

    def _parse(self, text: str) -> _Document:
        document = _Document()
        section: Optional[str] = None
        for number, raw in enumerate(text.splitlines(), start=1):
            content = raw.split("#", 1)[0].rstrip()
            stripped = content.lstrip()
            if not stripped:
                continue
            offset = len(content) - len(stripped) + 1

            header = _HEADER.match(stripped)
            if header:
                section = header.group("name")
                if section not in SECTIONS:
                    raise SystemFormatError(f"unknown section [{section}]", number, offset)
                continue
            if section is None:
                raise SystemFormatError("statement outside of any section", number, offset)
            self._parse_statement(document, section, stripped, number, offset)
        return document

    def _parse_statement(self, document: _Document, section: str, line: str, number: int, offset: int) -> None:
        def token(match: re.Match, group: str) -> _Token:
            return _Token(match.group(group), number, offset + match.start(group))

        if section == "objects":
            position = 0
            for text in _SPLIT.split(line):
                if not text:
                    continue
                position = line.index(text, position)
                if not _LABEL_ONLY.match(text):
                    raise SystemFormatError(f"invalid object label {text!r}", number, offset + position)
                document.objects.append(_Token(text, number, offset + position))
                position += len(text)
            return

        if section in ("zero", "unit"):
            if not _LABEL_ONLY.match(line):
                raise SystemFormatError(f"expected a single object label in [{section}]", number, offset)
            if getattr(document, section) is not None:
                raise SystemFormatError(f"[{section}] given twice", number, offset)
            setattr(document, section, _Token(line, number, offset))
            return

        if section == "shift":
            match = _SHIFT.match(line)
            if match:
                document.shift.append((token(match, "a"), token(match, "b")))
                return
            raise SystemFormatError("expected 'shift(a) = b'", number, offset)

        if section in ("sum", "tensor"):
            match = _BINARY.match(line)
            if match and match.group("op") == section:
                target = document.sum if section == "sum" else document.tensor
                target.append((token(match, "a"), token(match, "b"), token(match, "c")))
                return
            if section == "sum":
                match = _ORDER.match(line)
                if match:
                    document.order.append((token(match, "a"), token(match, "b")))
                    return
                raise SystemFormatError("expected 'sum(a,b) = c' or 'a <= b'", number, offset)
            raise SystemFormatError("expected 'tensor(a,b) = c'", number, offset)

        if section == "triangles":
            match = _TRIANGLE.match(line)
            if match:
                document.triangles.append((token(match, "a"), token(match, "b"), token(match, "c")))
                return
            raise SystemFormatError("expected 'a -> b -> c'", number, offset)

        if section == "summands":
            match = _SUMMAND.match(line)
            if match:
                document.summands.append((token(match, "a"), token(match, "b")))
                return
            raise SystemFormatError("expected 'summand(s,t)'", number, offset)

        match = _OPTION.match(line)
        if not match:
            raise SystemFormatError("expected 'option = value'", number, offset)
        key, value = match.group("key"), match.group("value").lower()
        if key not in OPTIONS:
            raise SystemFormatError(f"unknown option {key}", number, offset)
        if value not in ("true", "false"):
            raise SystemFormatError(f"option {key} takes true or false", number, offset + match.start("value"))
        document.options[key] = value == "true"

    def _build(self, document: _Document) -> TensorSystem:
        if not document.objects:
            raise SystemFormatError("no objects declared")
        if document.zero is None:
            raise SystemFormatError("missing [zero] section")
        if document.unit is None:
            raise SystemFormatError("missing [unit] section")

        labels: List[str] = []
        for tok in document.objects:
            if tok.text in labels:
                raise SystemFormatError(f"object {tok.text} declared twice", tok.line, tok.column)
            labels.append(tok.text)
        if document.zero.text not in labels:
            raise UndeclaredObjectError(
                f"undeclared object {document.zero.text}", document.zero.line, document.zero.column
            )
        labels.remove(document.zero.text)
        labels.insert(0, document.zero.text)
        index = {label: i for i, label in enumerate(labels)}
        n = len(labels)

        def resolve(tok: _Token) -> int:
            if tok.text not in index:
                raise UndeclaredObjectError(f"undeclared object {tok.text}", tok.line, tok.column)
            return index[tok.text]

        zero, unit = 0, resolve(document.unit)

        shift = list(range(n))
        seen: Dict[int, _Token] = {}
        for a, b in document.shift:
            source = resolve(a)
            if source in seen and shift[source] != resolve(b):
                raise SystemFormatError(f"conflicting entries for shift({a.text})", a.line, a.column)
            seen[source] = a
            shift[source] = resolve(b)

        sum_table = self._sum_table(document, resolve, labels)
        tensor_table = self._tensor_table(document, resolve, labels, zero, unit)

        triangles = [tuple(resolve(t) for t in triple) for triple in document.triangles]
        summands = set(derive_summands(n, sum_table))
        summands.update((resolve(s), resolve(t)) for s, t in document.summands)

        system = TensorSystem(
            objects=tuple(ObjectId(index=i, label=label) for i, label in enumerate(labels)),
            zero=zero,
            unit=unit,
            shift=tuple(shift),
            sum=sum_table,
            tensor=tensor_table,
            triangles=tuple(triangles),
            summands=tuple(summands),
        )
        if document.options["complete_triangles"]:
            system = complete_triangles(system)
        return system

    @staticmethod
    def _fill(entries, resolve, n: int, name: str, symmetric: bool) -> List[List[Optional[int]]]:
        table: List[List[Optional[int]]] = [[None] * n for _ in range(n)]
        for a, b, c in entries:
            i, j, k = resolve(a), resolve(b), resolve(c)
            cells = [(i, j), (j, i)] if symmetric else [(i, j)]
            for x, y in cells:
                if table[x][y] is not None and table[x][y] != k:
                    raise SystemFormatError(f"conflicting entries for {name}({a.text},{b.text})", a.line, a.column)
                table[x][y] = k
        return table

    def _sum_table(self, document: _Document, resolve, labels: List[str]) -> Tuple[Tuple[int, ...], ...]:
        n = len(labels)
        table = self._fill(document.sum, resolve, n, "sum", symmetric=True)

        relation = np.zeros((n, n), dtype=bool)
        relation[0, :] = True
        for a, b in document.order:
            relation[resolve(a), resolve(b)] = True
        leq = OrderService.transitive_closure(relation)

        for i in range(n):
            for j in range(n):
                if table[i][j] is not None:
                    continue
                bounds = np.flatnonzero(leq[i] & leq[j])
                least = [k for k in bounds if leq[k, bounds].all()]
                if len(least) != 1:
                    raise NonTotalTableError(
                        f"sum({labels[i]},{labels[j]}) is not given and the declared order has no join for it"
                    )
                table[i][j] = int(least[0])
        return tuple(tuple(row) for row in table)

    def _tensor_table(
        self, document: _Document, resolve, labels: List[str], zero: int, unit: int
    ) -> Tuple[Tuple[int, ...], ...]:
        n = len(labels)
        table = self._fill(document.tensor, resolve, n, "tensor", symmetric=False)
        for k in range(n):
            for i, j, value in ((zero, k, zero), (k, zero, zero), (unit, k, k), (k, unit, k)):
                if table[i][j] is None:
                    table[i][j] = value
        for i in range(n):
            for j in range(n):
                if table[i][j] is None:
                    raise NonTotalTableError(f"tensor({labels[i]},{labels[j]}) is not given")
        return tuple(tuple(row) for row in table)


def load_system(text: str) -> TensorSystem:
    return TextSystemLoader().load(text)
