"""Parser and printer for ket expressions such as ``0.5|00> - (0+0.5i)|1,1>``.

Grammar::

    expr   := ws term (ws ("+"|"-") ws term)* ws
    term   := (coeff ws "*"? ws)? ket | coeff
    ket    := "|" idx ("," idx)* ">"
    coeff  := real | imag | "(" real (("+"|"-") uimag)? ")"

A comma-free ket like ``|010>`` is read one digit per factor, which
requires every factor dimension to be at most 10. A single-factor ket
always reads its digits as one integer. A leading bare ket may carry a
unary sign (``-|0> + |1>``). Repeated kets add up. Error
offsets count bytes of the UTF-8 encoded input.
"""
from __future__ import annotations

import math
import re

import numpy as np

from .errors import KetSemanticError, KetSyntaxError
from .tensor_core import StateTensor, _check_dims, flatten_index

_REAL = re.compile(r"[+-]?(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?")
_UREAL = re.compile(r"(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?")
_INT = re.compile(r"\d+")
_WS = re.compile(r"[ \t\r\n]*")


class _Parser:
    def __init__(self, text: str, dims: tuple[int, ...]):
        self.text = text
        self.dims = dims
        self.pos = 0

    def offset(self, pos=None) -> int:
        pos = self.pos if pos is None else pos
        return len(self.text[:pos].encode("utf-8", errors="surrogatepass"))

    def syntax(self, msg, pos=None):
        return KetSyntaxError(msg, self.offset(pos))

    def ws(self):
        self.pos = _WS.match(self.text, self.pos).end()

    def peek(self) -> str:
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def parse(self):
        terms = []
        self.ws()
        if self.pos == len(self.text):
            raise self.syntax("empty expression")
        sign = 1.0
        if self.peek() in ("+", "-"):
            after = _WS.match(self.text, self.pos + 1).end()
            if self.text.startswith("|", after):
                # unary sign on a leading bare ket; signed numbers go through real()
                sign = -1.0 if self.peek() == "-" else 1.0
                self.pos = after
        terms.append(self.term(sign))
        while True:
            self.ws()
            ch = self.peek()
            if ch == "":
                return terms
            if ch not in "+-":
                raise self.syntax(f"expected '+' or '-', found {ch!r}")
            self.pos += 1
            self.ws()
            terms.append(self.term(1.0 if ch == "+" else -1.0))

    def term(self, sign):
        start = self.pos
        coeff = 1.0 + 0j
        has_coeff = False
        if self.peek() != "|":
            coeff = self.coeff()
            has_coeff = True
            self.ws()
            if self.peek() == "*":
                self.pos += 1
                self.ws()
                if self.peek() != "|":
                    raise self.syntax("expected a ket after '*'")
        if self.peek() != "|":
            if has_coeff and self.peek() in ("", "+", "-"):
                raise KetSemanticError("coefficient without a ket", self.offset(start))
            raise self.syntax("expected a ket")
        index = self.ket()
        if not (math.isfinite(coeff.real) and math.isfinite(coeff.imag)):
            raise KetSemanticError("non-finite coefficient", self.offset(start))
        return sign * coeff, index

    def real(self, pattern=_REAL) -> float:
        m = pattern.match(self.text, self.pos)
        if not m:
            raise self.syntax("expected a number")
        self.pos = m.end()
        return float(m.group())

    def coeff(self) -> complex:
        if self.peek() == "(":
            self.pos += 1
            self.ws()
            re_part = self.real()
            im_part = 0.0
            self.ws()
            ch = self.peek()
            if ch in "+-" and ch:
                self.pos += 1
                self.ws()
                im_part = self.real(_UREAL)
                if self.peek() != "i":
                    raise self.syntax("expected 'i' after imaginary part")
                self.pos += 1
                if ch == "-":
                    im_part = -im_part
                self.ws()
            if self.peek() != ")":
                raise self.syntax("expected ')'")
            self.pos += 1
            return complex(re_part, im_part)
        value = self.real()
        if self.peek() == "i":
            self.pos += 1
            return complex(0.0, value)
        return complex(value, 0.0)

    def ket(self) -> tuple[int, ...]:
        self.pos += 1  # "|"
        parts = []
        while True:
            m = _INT.match(self.text, self.pos)
            if not m:
                raise self.syntax("expected a basis index")
            parts.append((m.start(), m.group()))
            self.pos = m.end()
            ch = self.peek()
            if ch == ",":
                self.pos += 1
                continue
            if ch == ">":
                self.pos += 1
                break
            raise self.syntax("expected ',' or '>' in ket")
        return self.resolve(parts)

    def resolve(self, parts):
        dims = self.dims
        m = len(dims)
        if len(parts) == 1 and m > 1:
            start, digits = parts[0]
            if max(dims) > 10:
                raise KetSemanticError(
                    "comma-free ket needs every dimension <= 10; separate indices with ','",
                    self.offset(start),
                )
            entries = [(start + t, int(ch)) for t, ch in enumerate(digits)]
        else:
            entries = [(start, int(s)) for start, s in parts]
        if len(entries) != m:
            raise KetSemanticError(
                f"ket has {len(entries)} indices, expected {m}", self.offset(parts[0][0])
            )
        for j, ((start, i), n) in enumerate(zip(entries, dims)):
            if i >= n:
                raise KetSemanticError(
                    f"index {i} out of range for factor {j + 1} (dimension {n})",
                    self.offset(start),
                    factor=j + 1,
                )
        return tuple(i for _, i in entries)


def parse_terms(text, dims):
    """Parse into ``[(coefficient, multi_index), ...]`` without summing."""
    dims = _check_dims(dims)
    if isinstance(text, (bytes, bytearray)):
        try:
            text = bytes(text).decode("utf-8")
        except UnicodeDecodeError as exc:
            raise KetSyntaxError("invalid UTF-8", exc.start) from None
    return _Parser(text, dims).parse()


def parse_ket(text, dims) -> StateTensor:
    dims = _check_dims(dims)
    amps = np.zeros(math.prod(dims), dtype=np.complex128)
    for coeff, index in parse_terms(text, dims):
        amps[flatten_index(dims, index)] += coeff
    return StateTensor(dims, amps)


def format_ket(state: StateTensor) -> str:
    """Exact textual form of ``state``; ``parse_ket`` inverts it."""
    terms = []
    for offset in np.flatnonzero(state.amplitudes):
        a = complex(state.amplitudes[offset])
        idx = ",".join(str(i) for i in np.unravel_index(offset, state.dims))
        sign = "-" if math.copysign(1.0, a.imag) < 0 else "+"
        terms.append(f"({a.real!r}{sign}{abs(a.imag)!r}i)|{idx}>")
    if not terms:
        terms.append("0|" + ",".join("0" for _ in state.dims) + ">")
    return " + ".join(terms)
