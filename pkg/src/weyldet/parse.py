"""Text I/O: the expression grammar, canonical printing and matrix documents.

Grammar (whitespace is ignored, multiplication is always an explicit ``*``)::

    expr   := ['+' | '-'] term (('+' | '-') term)*
    term   := factor ('*' factor)*
    factor := atom ['^' natural]
    atom   := natural ['/' natural] | 'x' k | 'd' k | '(' expr ')'

with ``1 <= k <= m``.  Products respect the written order and the result is
normalized, so ``d1*x1`` reads back as ``x1*d1 + 1``.
"""

import json
import re
from fractions import Fraction

from .errors import DimensionError, ExprSyntaxError, FormatError, IndexOutOfRange
from .matrix import WeylMatrix
from .weyl import WeylElement

_TOKEN = re.compile(r"(\d+)|([xd])(\d+)|([-+*^/()])")


def _tokenize(text):
    tokens = []
    pos = 0
    n = len(text)
    while pos < n:
        if text[pos].isspace():
            pos += 1
            continue
        mt = _TOKEN.match(text, pos)
        if mt is None:
            raise ExprSyntaxError(f"unexpected character {text[pos]!r}", pos, text)
        start = mt.start(0)
        if mt.group(1) is not None:
            tokens.append(("int", int(mt.group(1)), start))
        elif mt.group(2) is not None:
            tokens.append((mt.group(2), int(mt.group(3)), start))
        else:
            tokens.append((mt.group(4), None, start))
        pos = mt.end(0)
    tokens.append(("end", None, n))
    return tokens


class _Parser:
    def __init__(self, text, m):
        self.text = text
        self.m = m
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def fail(self, msg, tok=None):
        tok = tok or self.peek()
        raise ExprSyntaxError(msg, tok[2], self.text)

    def expect(self, kind):
        tok = self.take()
        if tok[0] != kind:
            self.fail(f"expected {kind!r}, found {self.describe(tok)}", tok)
        return tok

    @staticmethod
    def describe(tok):
        if tok[0] == "end":
            return "end of input"
        if tok[0] == "int":
            return f"number {tok[1]}"
        if tok[0] in "xd":
            return f"'{tok[0]}{tok[1]}'"
        return repr(tok[0])

    def parse(self):
        result = self.expr()
        if self.peek()[0] != "end":
            self.fail(f"unexpected {self.describe(self.peek())}")
        return result

    def expr(self):
        sign = 1
        if self.peek()[0] in ("+", "-"):
            sign = -1 if self.take()[0] == "-" else 1
        result = self.term()
        if sign < 0:
            result = -result
        while self.peek()[0] in ("+", "-"):
            op = self.take()[0]
            t = self.term()
            result = result + t if op == "+" else result - t
        return result

    def term(self):
        result = self.factor()
        while self.peek()[0] == "*":
            self.take()
            result = result * self.factor()
        return result

    def factor(self):
        base = self.atom()
        if self.peek()[0] == "^":
            self.take()
            tok = self.expect("int")
            return base ** tok[1]
        return base

    def atom(self):
        tok = self.take()
        kind, val, pos = tok
        m = self.m
        if kind == "int":
            if self.peek()[0] == "/":
                self.take()
                den = self.expect("int")
                if den[1] == 0:
                    raise ExprSyntaxError("zero denominator", den[2], self.text)
                return WeylElement.const(Fraction(val, den[1]), m)
            return WeylElement.const(val, m)
        if kind in ("x", "d"):
            if not 1 <= val <= m:
                raise IndexOutOfRange(
                    f"'{kind}{val}' is outside the Weyl index m = {m}", pos, self.text
                )
            return WeylElement.x(val, m) if kind == "x" else WeylElement.d(val, m)
        if kind == "(":
            inner = self.expr()
            self.expect(")")
            return inner
        self.fail(f"unexpected {self.describe(tok)}", tok)


def parse_weyl_expr(src, m):
    """Parse ``src`` into a normalized WeylElement of A_m(Q)."""
    if m < 1:
        raise ValueError("Weyl index must be positive")
    return _Parser(src, m).parse()


def _format_rational(c):
    if c.denominator == 1:
        return str(c.numerator)
    return f"{c.numerator}/{c.denominator}"


def _format_terms(items, m, names):
    if not items:
        return "0"
    out = []
    for k, (exp, c) in enumerate(items):
        factors = []
        for slot, power in enumerate(exp):
            if power:
                name = names[0 if slot < m else 1] + str(slot % m + 1)
                factors.append(name if power == 1 else f"{name}^{power}")
        mag = abs(c)
        if mag != 1 or not factors:
            factors.insert(0, _format_rational(mag))
        body = "*".join(factors)
        if k == 0:
            out.append(("-" if c < 0 else "") + body)
        else:
            out.append((" - " if c < 0 else " + ") + body)
    return "".join(out)


def format_weyl(a, display=False):
    """Canonical text: terms in descending graded-lex order, explicit ``*``.

    ``display=True`` writes derivatives as ``∂1`` for reading only; such text
    is not accepted back by the parser.
    """
    return _format_terms(a.items(), a.m, ("x", "∂" if display else "d"))


def format_symbol(p):
    return _format_terms(p.items(), p.m, ("x", "Y"))


def parse_matrix_document(data):
    """Build a WeylMatrix from the JSON matrix document (bytes or str).

    Fields: integer ``m >= 1``, integer ``n >= 0``, ``entries`` as n rows of n
    expression strings; ``label`` is optional and unknown fields are ignored.
    """
    if isinstance(data, (bytes, bytearray)):
        try:
            data = data.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise FormatError(f"document is not UTF-8: {exc}") from exc
    try:
        doc = json.loads(data)
    except json.JSONDecodeError as exc:
        raise FormatError(f"invalid JSON: {exc}") from exc
    if not isinstance(doc, dict):
        raise FormatError("document must be a JSON object")
    for key in ("m", "n", "entries"):
        if key not in doc:
            raise FormatError(f"missing field {key!r}")
    m, n, entries = doc["m"], doc["n"], doc["entries"]
    if type(m) is not int or m < 1:
        raise FormatError("field 'm' must be an integer >= 1")
    if type(n) is not int or n < 0:
        raise FormatError("field 'n' must be an integer >= 0")
    if "label" in doc and not isinstance(doc["label"], str):
        raise FormatError("field 'label' must be a string")
    if not isinstance(entries, list) or not all(isinstance(r, list) for r in entries):
        raise FormatError("field 'entries' must be an array of arrays")
    if len(entries) != n or any(len(r) != n for r in entries):
        raise DimensionError(f"'entries' is not {n}x{n}")
    rows = []
    for i, r in enumerate(entries, 1):
        row = []
        for j, text in enumerate(r, 1):
            if not isinstance(text, str):
                raise FormatError(f"entry ({i}, {j}) is not a string")
            try:
                row.append(parse_weyl_expr(text, m))
            except ExprSyntaxError as exc:
                err = type(exc)(f"entry ({i}, {j}): {exc}", None, text)
                err.position = exc.position
                err.entry = (i, j)
                raise err from exc
        rows.append(row)
    return WeylMatrix(m, rows)


def document_label(data):
    if isinstance(data, (bytes, bytearray)):
        data = data.decode("utf-8")
    label = json.loads(data).get("label")
    return label if isinstance(label, str) else None


def dump_matrix_document(A, label=None):
    doc = {"m": A.m, "n": A.n, "entries": [[format_weyl(e) for e in r] for r in A.entries]}
    if label is not None:
        doc["label"] = label
    return json.dumps(doc, ensure_ascii=False)
