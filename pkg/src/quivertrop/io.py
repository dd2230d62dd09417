"""Plain-text input format shared by every subcommand.

A file starts with the header ``quivertrop 1`` and continues with one
directive per line; ``#`` starts a comment::

    quivertrop 1
    vertices 2
    arrow a 1 2
    arrow b 1 2
    relation 1 a*b -1/2 c*d     # coefficient/path pairs, or a bare path
    field Q                     # or GF(5)
    dims 3 3
    matrix a                    # dims[target] rows of dims[source] entries
    0 0 -1
    0 0 0
    1 0 0
    weight 1 -1                 # repeatable
    dual-weight 0 -3 1 1        # repeatable
    exchange 3                  # explicit exchange matrix, n rows follow
    0 2 0
    -2 0 1
    0 -1 0

Entries are integers or ``p/q`` rationals.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from pathlib import Path as FilePath
from typing import Dict, List, Optional, Tuple

from .errors import ParseError
from .fields import QQ, Field, field_from_tag, format_rational, parse_rational
from .quiver import AlgebraBasis, Quiver, Relation, RelationSet, build_algebra
from .representation import Representation

FORMAT_VERSION = 1
HEADER = f"quivertrop {FORMAT_VERSION}"


@dataclass
class Document:
    quiver: Optional[Quiver] = None
    relations: List[Relation] = dc_field(default_factory=list)
    path_length_bound: int = 12
    field: Field = QQ
    dims: Optional[Tuple[int, ...]] = None
    matrices: Dict[str, List[List[Fraction]]] = dc_field(default_factory=dict)
    weights: List[Tuple[int, ...]] = dc_field(default_factory=list)
    dual_weights: List[Tuple[int, ...]] = dc_field(default_factory=list)
    exchange: Optional[Tuple[Tuple[int, ...], ...]] = None

    def algebra(self) -> AlgebraBasis:
        if self.quiver is None:
            raise ParseError("no quiver given", 0, 0)
        return build_algebra(self.quiver, RelationSet(tuple(self.relations), self.path_length_bound))

    def representation(self) -> Representation:
        if self.dims is None:
            raise ParseError("no dims given", 0, 0)
        return Representation(self.algebra(), self.dims, self.matrices, self.field)

    def exchange_matrix(self) -> Tuple[Tuple[int, ...], ...]:
        if self.exchange is not None:
            return self.exchange
        if self.quiver is None:
            raise ParseError("need a quiver or an exchange block", 0, 0)
        return tuple(tuple(r) for r in self.quiver.exchange_matrix())


class _Lines:
    def __init__(self, text: str):
        self.rows = []
        for number, raw in enumerate(text.splitlines(), start=1):
            body = raw.split("#", 1)[0]
            if body.strip():
                self.rows.append((number, body))
        self.pos = 0

    def next(self, what: str):
        if self.pos >= len(self.rows):
            last = self.rows[-1][0] if self.rows else 0
            raise ParseError(f"unexpected end of input, expected {what}", last + 1, 1)
        row = self.rows[self.pos]
        self.pos += 1
        return row

    def done(self) -> bool:
        return self.pos >= len(self.rows)


def _tokens(body: str) -> List[Tuple[str, int]]:
    out = []
    i = 0
    while i < len(body):
        if body[i].isspace():
            i += 1
            continue
        j = i
        while j < len(body) and not body[j].isspace():
            j += 1
        out.append((body[i:j], i + 1))
        i = j
    return out


def _integer(tok: str, line: int, col: int) -> int:
    try:
        return int(tok)
    except ValueError:
        raise ParseError(f"expected an integer, got {tok!r}", line, col) from None


def _rational(tok: str, line: int, col: int) -> Fraction:
    try:
        return parse_rational(tok)
    except (ValueError, ZeroDivisionError):
        raise ParseError(f"expected a rational, got {tok!r}", line, col) from None


def _int_row(toks, line: int, expected: Optional[int] = None) -> Tuple[int, ...]:
    if expected is not None and len(toks) != expected:
        col = toks[0][1] if toks else 1
        raise ParseError(f"expected {expected} entries, got {len(toks)}", line, col)
    return tuple(_integer(t, line, c) for t, c in toks)


def parse(text: str) -> Document:
    lines = _Lines(text)
    number, body = lines.next("header")
    if body.split() != HEADER.split():
        raise ParseError(f"expected header {HEADER!r}", number, 1)
    doc = Document()
    n: Optional[int] = None
    arrows: List[Tuple[str, int, int]] = []
    pending_relations: List[Tuple[int, int, List[Tuple[str, int]]]] = []

    def need_n(line, col):
        if n is None:
            raise ParseError("'vertices' must come first", line, col)
        return n

    while not lines.done():
        number, body = lines.next("directive")
        toks = _tokens(body)
        key, kcol = toks[0]
        args = toks[1:]
        if key == "vertices":
            if len(args) != 1:
                raise ParseError("vertices takes one integer", number, kcol)
            n = _integer(args[0][0], number, args[0][1])
            if n <= 0:
                raise ParseError("vertex count must be positive", number, args[0][1])
        elif key == "arrow":
            need_n(number, kcol)
            if len(args) != 3:
                raise ParseError("arrow takes a label, a source and a target", number, kcol)
            s = _integer(args[1][0], number, args[1][1])
            t = _integer(args[2][0], number, args[2][1])
            for v, c in ((s, args[1][1]), (t, args[2][1])):
                if not 1 <= v <= n:
                    raise ParseError(f"vertex {v} out of range 1..{n}", number, c)
            if any(a[0] == args[0][0] for a in arrows):
                raise ParseError(f"duplicate arrow label {args[0][0]!r}", number, args[0][1])
            arrows.append((args[0][0], s, t))
        elif key == "relation":
            if not args:
                raise ParseError("empty relation", number, kcol)
            pending_relations.append((number, kcol, args))
        elif key == "path-bound":
            doc.path_length_bound = _integer(args[0][0], number, args[0][1]) if args else 12
        elif key == "field":
            if len(args) != 1:
                raise ParseError("field takes one tag", number, kcol)
            try:
                doc.field = field_from_tag(args[0][0])
            except Exception:
                raise ParseError(f"unknown field {args[0][0]!r}", number, args[0][1]) from None
        elif key == "dims":
            doc.dims = _int_row(args, number, need_n(number, kcol))
            if any(d < 0 for d in doc.dims):
                raise ParseError("dimensions must be nonnegative", number, args[0][1])
        elif key == "matrix":
            if doc.dims is None or len(args) != 1:
                raise ParseError("matrix needs a label and a preceding dims line", number, kcol)
            label = args[0][0]
            arrow = next((a for a in arrows if a[0] == label), None)
            if arrow is None:
                raise ParseError(f"unknown arrow {label!r}", number, args[0][1])
            rows, cols = doc.dims[arrow[2] - 1], doc.dims[arrow[1] - 1]
            mat = []
            for _ in range(rows):
                rnum, rbody = lines.next(f"a row of matrix {label}")
                rtoks = _tokens(rbody)
                if len(rtoks) != cols:
                    raise ParseError(f"matrix {label}: expected {cols} entries, got {len(rtoks)}", rnum,
                                     rtoks[0][1] if rtoks else 1)
                mat.append([_rational(t, rnum, c) for t, c in rtoks])
            doc.matrices[label] = mat
        elif key == "weight":
            doc.weights.append(_int_row(args, number, need_n(number, kcol)))
        elif key == "dual-weight":
            doc.dual_weights.append(_int_row(args, number, need_n(number, kcol)))
        elif key == "exchange":
            size = _integer(args[0][0], number, args[0][1]) if args else need_n(number, kcol)
            rows = []
            for _ in range(size):
                rnum, rbody = lines.next("a row of the exchange matrix")
                rows.append(_int_row(_tokens(rbody), rnum, size))
            doc.exchange = tuple(rows)
        else:
            raise ParseError(f"unknown directive {key!r}", number, kcol)

    if n is not None:
        doc.quiver = Quiver(n, arrows)
        labels = {a[0] for a in arrows}
        for number, kcol, args in pending_relations:
            doc.relations.append(_relation(args, labels, number))
    elif pending_relations or doc.dims is not None:
        raise ParseError("missing 'vertices' directive", 1, 1)
    return doc


def _relation(args, labels, number: int) -> Relation:
    if len(args) == 1:
        pairs = [("1", 0, args[0][0], args[0][1])]
    else:
        if len(args) % 2:
            raise ParseError("relation needs coefficient/path pairs", number, args[-1][1])
        pairs = [(args[i][0], args[i][1], args[i + 1][0], args[i + 1][1]) for i in range(0, len(args), 2)]
    terms = []
    for ctok, ccol, ptok, pcol in pairs:
        coef = _rational(ctok, number, ccol or pcol)
        path = tuple(ptok.split("*"))
        for lab in path:
            if lab not in labels:
                raise ParseError(f"unknown arrow {lab!r} in relation", number, pcol)
        terms.append((coef, path))
    return Relation.of(*terms)


def load(path) -> Document:
    return parse(FilePath(path).read_text())


def dump(doc: Document) -> str:
    out = [HEADER]
    if doc.quiver is not None:
        out.append(f"vertices {doc.quiver.n}")
        out.extend(f"arrow {a.label} {a.source} {a.target}" for a in doc.quiver.arrows)
        for rel in doc.relations:
            out.append("relation " + " ".join(f"{format_rational(c)} {'*'.join(p)}" for c, p in rel.terms))
    if doc.path_length_bound != 12:
        out.append(f"path-bound {doc.path_length_bound}")
    out.append(f"field {doc.field.tag}")
    if doc.dims is not None:
        out.append("dims " + " ".join(map(str, doc.dims)))
        for label in sorted(doc.matrices):
            out.append(f"matrix {label}")
            out.extend(" ".join(format_rational(x) for x in row) for row in doc.matrices[label])
    out.extend("weight " + " ".join(map(str, w)) for w in doc.weights)
    out.extend("dual-weight " + " ".join(map(str, w)) for w in doc.dual_weights)
    if doc.exchange is not None:
        out.append(f"exchange {len(doc.exchange)}")
        out.extend(" ".join(map(str, r)) for r in doc.exchange)
    return "\n".join(out) + "\n"


def document_for(rep: Representation, relations: Optional[List[Relation]] = None) -> Document:
    """Wrap a representation so it can be written with ``dump``."""
    mats = {lab: [[rep.field.to_rational(x) for x in row] for row in m.tolist()]
            for lab, m in rep.matrices.items() if m.size}
    rels = list(relations if relations is not None else rep.algebra.relations.relations)
    return Document(quiver=rep.quiver, relations=rels, field=rep.field, dims=rep.dims, matrices=mats)


def format_vector(v) -> str:
    return "(" + ",".join(str(int(x)) for x in v) + ")"
