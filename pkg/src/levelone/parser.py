"""Parser and printer for the ASCII Laurent-polynomial grammar.

    poly   := ['-'] term (('+'|'-') term)*
    term   := coeff ['*'] [tpart] | tpart
    tpart  := 't' ['^' int]
    coeff  := int ['/' uint]

Whitespace is insignificant, a bare ``t`` means t^1 and an omitted
coefficient means 1.  ``print_laurent`` emits terms in decreasing exponent
order in the same grammar, so ``parse_laurent(print_laurent(p)) == p``.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import ParseError

_DIGITS = set("0123456789")


class _Tokens:
    """Single-pass tokenizer; integers are unsigned, signs are operators."""

    def __init__(self, text: str):
        self.text = text
        self.items: list[tuple[str, str, int]] = []  # (kind, text, position)
        i = 0
        n = len(text)
        while i < n:
            ch = text[i]
            if ch.isspace():
                i += 1
                continue
            if ch in _DIGITS:
                j = i
                while j < n and text[j] in _DIGITS:
                    j += 1
                self.items.append(("int", text[i:j], i))
                i = j
            elif ch == "t":
                self.items.append(("t", "t", i))
                i += 1
            elif ch in "+-*/^":
                self.items.append((ch, ch, i))
                i += 1
            else:
                raise ParseError("unexpected character", i, ch)
        self.items.append(("end", "", n))
        self.pos = 0

    def peek(self) -> tuple[str, str, int]:
        return self.items[self.pos]

    def take(self, kind: str) -> tuple[str, str, int]:
        tok = self.items[self.pos]
        if tok[0] != kind:
            raise ParseError(f"expected {kind}", tok[2], tok[1])
        self.pos += 1
        return tok


def parse_laurent(text: str) -> dict:
    """Parse ``text`` into a Laurent dict {exponent: Fraction}, zeros dropped."""
    toks = _Tokens(text)
    if toks.peek()[0] == "end":
        raise ParseError("empty input", 0)
    out: dict[int, Fraction] = {}
    sign = 1
    if toks.peek()[0] == "-":
        toks.take("-")
        sign = -1
    _accumulate(out, toks, sign)
    while toks.peek()[0] != "end":
        kind, tok_text, pos = toks.peek()
        if kind == "+":
            toks.take("+")
            _accumulate(out, toks, 1)
        elif kind == "-":
            toks.take("-")
            _accumulate(out, toks, -1)
        else:
            raise ParseError("expected '+', '-' or end of input", pos, tok_text)
    return out


def _accumulate(out: dict, toks: _Tokens, sign: int) -> None:
    coeff, exp = _term(toks)
    coeff *= sign
    s = out.get(exp, Fraction(0)) + coeff
    if s:
        out[exp] = s
    else:
        out.pop(exp, None)


def _term(toks: _Tokens) -> tuple[Fraction, int]:
    kind, text, pos = toks.peek()
    if kind == "t":
        return Fraction(1), _tpart(toks)
    if kind != "int":
        raise ParseError("expected a coefficient or 't'", pos, text)
    num = int(toks.take("int")[1])
    den = 1
    if toks.peek()[0] == "/":
        toks.take("/")
        dk, dt, dp = toks.peek()
        if dk != "int":
            raise ParseError("expected an unsigned denominator", dp, dt)
        den = int(toks.take("int")[1])
        if den == 0:
            raise ParseError("zero denominator", dp, dt)
    coeff = Fraction(num, den)
    if toks.peek()[0] == "*":
        toks.take("*")
        k, t, p = toks.peek()
        if k != "t":
            raise ParseError("expected 't' after '*'", p, t)
        return coeff, _tpart(toks)
    if toks.peek()[0] == "t":
        return coeff, _tpart(toks)
    return coeff, 0


def _tpart(toks: _Tokens) -> int:
    toks.take("t")
    if toks.peek()[0] != "^":
        return 1
    toks.take("^")
    sign = 1
    if toks.peek()[0] == "-":
        toks.take("-")
        sign = -1
    elif toks.peek()[0] == "+":
        toks.take("+")
    kind, text, pos = toks.peek()
    if kind != "int":
        raise ParseError("expected an integer exponent", pos, text)
    return sign * int(toks.take("int")[1])


def print_laurent(lp: dict) -> str:
    """Render a Laurent dict in decreasing exponent order."""
    if not lp:
        return "0"
    parts: list[str] = []
    for e in sorted(lp, reverse=True):
        c = lp[e]
        body = _term_body(abs(c), e)
        if not parts:
            parts.append(f"-{body}" if c < 0 else body)
        else:
            parts.append(f"- {body}" if c < 0 else f"+ {body}")
    return " ".join(parts)


def _term_body(c: Fraction, e: int) -> str:
    if e == 0:
        return str(c)
    tpart = "t" if e == 1 else f"t^{e}"
    if c == 1:
        return tpart
    return f"{c}*{tpart}"
