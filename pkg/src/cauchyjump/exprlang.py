"""Tiny expression grammar for densities and probe functions.

Accepts arithmetic over one complex variable (spelled t, tau, z, or w,
all naming the same input), numeric literals, the constants i and pi,
the operators + - * / ^ with ^ binding tightest and associating right,
and the functions re, im, conj, sqrt.  Compilation returns a callable
vectorized over numpy arrays.

With analytic=True the parser rejects re, im, and conj, since a
function built from them cannot be holomorphic unless constant.
"""

from __future__ import annotations

import cmath
import math

import numpy as np

from .errors import InputError

_VARIABLES = ("t", "tau", "z", "w")
_CONSTANTS = {"i": 1j, "pi": math.pi, "e": math.e}
_NON_ANALYTIC = ("re", "im", "conj")

_FUNCTIONS = {
    "re": lambda x: np.real(x).astype(complex) if isinstance(x, np.ndarray) else complex(x.real),
    "im": lambda x: np.imag(x).astype(complex) if isinstance(x, np.ndarray) else complex(x.imag),
    "conj": np.conjugate,
    "sqrt": lambda x: np.sqrt(np.asarray(x, dtype=complex)) if isinstance(x, np.ndarray) else cmath.sqrt(x),
}


class _Token:
    __slots__ = ("kind", "text", "pos")

    def __init__(self, kind, text, pos):
        self.kind = kind
        self.text = text
        self.pos = pos


def _tokenize(src: str) -> list[_Token]:
    out = []
    i, n = 0, len(src)
    while i < n:
        ch = src[i]
        if ch.isspace():
            i += 1
            continue
        if ch.isdigit() or (ch == "." and i + 1 < n and src[i + 1].isdigit()):
            j = i
            while j < n and (src[j].isdigit() or src[j] == "."):
                j += 1
            if j < n and src[j] in "eE" and j + 1 < n and (
                    src[j + 1].isdigit() or (src[j + 1] in "+-" and j + 2 < n and src[j + 2].isdigit())):
                j += 2
                while j < n and src[j].isdigit():
                    j += 1
            out.append(_Token("number", src[i:j], i))
            i = j
            continue
        if ch.isalpha() or ch == "_":
            j = i
            while j < n and (src[j].isalnum() or src[j] == "_"):
                j += 1
            out.append(_Token("name", src[i:j], i))
            i = j
            continue
        if src.startswith("**", i):
            out.append(_Token("op", "^", i))
            i += 2
            continue
        if ch in "+-*/^()":
            out.append(_Token("op", ch, i))
            i += 1
            continue
        raise InputError(f"unexpected character {ch!r} at position {i}")
    out.append(_Token("end", "", n))
    return out


class _Parser:
    def __init__(self, src: str, analytic: bool):
        self.src = src
        self.analytic = analytic
        self.tokens = _tokenize(src)
        self.k = 0

    def peek(self) -> _Token:
        return self.tokens[self.k]

    def take(self) -> _Token:
        tok = self.tokens[self.k]
        self.k += 1
        return tok

    def expect(self, text: str) -> _Token:
        tok = self.take()
        if tok.kind != "op" or tok.text != text:
            raise InputError(
                f"expected {text!r} at position {tok.pos}, found {tok.text or 'end of input'!r}")
        return tok

    def parse(self):
        node = self.sum_()
        tok = self.peek()
        if tok.kind != "end":
            raise InputError(f"unexpected {tok.text!r} at position {tok.pos}")
        return node

    def sum_(self):
        node = self.product()
        while self.peek().kind == "op" and self.peek().text in "+-":
            op = self.take().text
            rhs = self.product()
            node = (lambda a, b: lambda v: a(v) + b(v))(node, rhs) if op == "+" \
                else (lambda a, b: lambda v: a(v) - b(v))(node, rhs)
        return node

    def product(self):
        node = self.signed()
        while self.peek().kind == "op" and self.peek().text in "*/":
            op = self.take().text
            rhs = self.signed()
            node = (lambda a, b: lambda v: a(v) * b(v))(node, rhs) if op == "*" \
                else (lambda a, b: lambda v: a(v) / b(v))(node, rhs)
        return node

    def signed(self):
        tok = self.peek()
        if tok.kind == "op" and tok.text in "+-":
            self.take()
            inner = self.signed()
            if tok.text == "-":
                return lambda v: -inner(v)
            return inner
        return self.power()

    def power(self):
        base = self.atom()
        tok = self.peek()
        if tok.kind == "op" and tok.text == "^":
            self.take()
            expo = self.signed()
            return lambda v: base(v) ** expo(v)
        return base

    def atom(self):
        tok = self.take()
        if tok.kind == "number":
            try:
                value = complex(float(tok.text))
            except ValueError as exc:
                raise InputError(f"bad number {tok.text!r} at position {tok.pos}") from exc
            return lambda v: value
        if tok.kind == "name":
            name = tok.text.lower()
            if name in _VARIABLES:
                return lambda v: v
            if name in _CONSTANTS:
                value = complex(_CONSTANTS[name])
                return lambda v: value
            if name in _FUNCTIONS:
                if self.analytic and name in _NON_ANALYTIC:
                    raise InputError(
                        f"{name}() at position {tok.pos} is not allowed here: "
                        "the function must be holomorphic")
                fn = _FUNCTIONS[name]
                self.expect("(")
                arg = self.sum_()
                self.expect(")")
                return lambda v: fn(arg(v))
            raise InputError(f"unknown name {tok.text!r} at position {tok.pos}")
        if tok.kind == "op" and tok.text == "(":
            node = self.sum_()
            self.expect(")")
            return node
        raise InputError(
            f"unexpected {tok.text or 'end of input'!r} at position {tok.pos}")


def compile_expression(src: str, analytic: bool = False):
    """Compile source text to a vectorized callable of one complex variable."""
    if not src or not src.strip():
        raise InputError("empty expression")
    body = _Parser(src, analytic).parse()

    def evaluate(value):
        arr = np.asarray(value, dtype=complex)
        with np.errstate(all="ignore"):
            out = body(arr)
        out = np.asarray(out, dtype=complex)
        if out.shape != arr.shape:
            out = np.broadcast_to(out, arr.shape).copy()
        return out

    return evaluate
