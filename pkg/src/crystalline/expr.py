"""Recursive-descent parser for ``coeff*u[name] + ...`` style expressions.

The parser is value-agnostic: callers supply constructors for integers,
ring symbols and base elements ``u[name]``; the results are combined with
``+``, ``-``, ``*`` and ``**``, so the multiplication order of the input is
preserved (the graded ring is noncommutative).
"""

from __future__ import annotations

import re
from typing import Any, Callable

__all__ = ["ExpressionError", "parse_expression"]

_TOKEN = re.compile(r"\s*(?:(?P<int>\d+)|(?P<unit>u\[(?P<uname>[^\]]*)\])|(?P<sym>[A-Za-z_]\w*)|(?P<op>[-+*^()]))")


class ExpressionError(ValueError):
    pass


def _tokenize(text: str) -> list[tuple[str, str]]:
    pos = 0
    out = []
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise ExpressionError(f"unexpected character {text[pos:].strip()[:1]!r} at column {pos + 1}")
        kind = m.lastgroup if m.lastgroup != "uname" else "unit"
        if m.group("unit") is not None:
            out.append(("unit", m.group("uname").strip()))
        elif kind == "int":
            out.append(("int", m.group("int")))
        elif kind == "sym":
            out.append(("sym", m.group("sym")))
        else:
            out.append(("op", m.group("op")))
        pos = m.end()
    return out


def parse_expression(
    text: str,
    *,
    integer: Callable[[int], Any],
    symbol: Callable[[str], Any],
    unit: Callable[[str], Any] | None,
) -> Any:
    tokens = _tokenize(text)
    if not tokens:
        raise ExpressionError("empty expression")
    pos = 0

    def peek() -> tuple[str, str] | None:
        return tokens[pos] if pos < len(tokens) else None

    def take(expected: str | None = None) -> tuple[str, str]:
        nonlocal pos
        tok = peek()
        if tok is None:
            raise ExpressionError("unexpected end of expression")
        if expected is not None and tok != ("op", expected):
            raise ExpressionError(f"expected {expected!r}, found {tok[1]!r}")
        pos += 1
        return tok

    def expr() -> Any:
        sign = 1
        if peek() in (("op", "+"), ("op", "-")):
            sign = -1 if take()[1] == "-" else 1
        value = term()
        if sign < 0:
            value = -value
        while peek() in (("op", "+"), ("op", "-")):
            op = take()[1]
            rhs = term()
            value = value + rhs if op == "+" else value - rhs
        return value

    def term() -> Any:
        value = factor()
        while peek() == ("op", "*"):
            take()
            value = value * factor()
        return value

    def factor() -> Any:
        if peek() == ("op", "-"):
            take()
            return -factor()
        base = atom()
        if peek() == ("op", "^"):
            take()
            kind, exp = take()
            if kind != "int":
                raise ExpressionError(f"exponent must be a non-negative integer, found {exp!r}")
            result = base
            for _ in range(int(exp) - 1):
                result = result * base
            if int(exp) == 0:
                result = integer(1)
            return result
        return base

    def atom() -> Any:
        kind, val = take()
        if kind == "int":
            return integer(int(val))
        if kind == "sym":
            return symbol(val)
        if kind == "unit":
            if unit is None:
                raise ExpressionError(f"base element u[{val}] not allowed here")
            return unit(val)
        if val == "(":
            inner = expr()
            take(")")
            return inner
        raise ExpressionError(f"unexpected {val!r}")

    result = expr()
    if pos != len(tokens):
        raise ExpressionError(f"trailing input starting at {tokens[pos][1]!r}")
    return result
