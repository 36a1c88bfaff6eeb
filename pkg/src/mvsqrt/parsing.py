"""Text grammar for multivector literals.

A literal is a sum of terms ``[+|-][coefficient][e<digits>]``, whitespace
insignificant, blade subscripts strictly increasing::

    -1 + 0.5 e123 - 2e23
    e1 - 2 e23

A missing coefficient means 1, a missing blade means a scalar term, and
duplicate blades are summed.  Coefficients are plain decimals (no exponent
notation: ``2e12`` is two times the blade e12, not 2*10^12).
"""
from __future__ import annotations

import re

from .algebra import AlgebraError, Multivector, Signature, _tables

_SIGN = re.compile(r"\s*([+-])")
_NUMBER = re.compile(r"\s*(\d+\.\d*|\.\d+|\d+)")
_BLADE = re.compile(r"\s*e(\d+)")
_WS = re.compile(r"\s*")


class MultivectorParseError(ValueError):
    """Malformed multivector text; carries the offending span."""

    def __init__(self, message: str, text: str, span: tuple[int, int]):
        self.text = text
        self.span = span
        fragment = text[span[0]:span[1]] or "<end of input>"
        super().__init__(f"{message} at position {span[0]}: {fragment!r}")


def parse_mv(text: str, sig: Signature) -> Multivector:
    """Parse a multivector literal against the blades of ``sig``."""
    if not text.strip():
        raise MultivectorParseError("empty multivector text", text, (0, len(text)))
    tab = _tables(sig)
    coeffs = [0.0] * sig.dim
    pos = 0
    first = True
    while pos < len(text):
        pos = _WS.match(text, pos).end()
        if pos >= len(text):
            break
        sign = 1.0
        m = _SIGN.match(text, pos)
        if m:
            sign = -1.0 if m.group(1) == "-" else 1.0
            pos = m.end()
        elif not first:
            raise MultivectorParseError("expected '+' or '-' between terms", text, (pos, pos + 1))
        value = None
        m = _NUMBER.match(text, pos)
        if m:
            value = float(m.group(1))
            pos = m.end()
        blade_pos = pos
        index = 0
        m = _BLADE.match(text, pos)
        if m:
            digits = m.group(1)
            indices = [int(ch) for ch in digits]
            if any(b <= a for a, b in zip(indices, indices[1:])):
                raise MultivectorParseError(
                    "blade subscripts must be strictly increasing", text, (blade_pos, m.end()))
            if any(not 1 <= i <= sig.n for i in indices):
                raise MultivectorParseError(
                    f"blade index out of range for {sig}", text, (blade_pos, m.end()))
            mask = 0
            for i in indices:
                mask |= 1 << (i - 1)
            index = tab.index[mask]
            pos = m.end()
        elif value is None:
            raise MultivectorParseError("expected a coefficient or a blade", text, (pos, pos + 1))
        coeffs[index] += sign * (1.0 if value is None else value)
        first = False
    return Multivector(sig, coeffs)


def _format_number(value: float) -> str:
    text = format(value, ".17g")
    # decimal only: the grammar reserves 'e' for blades
    if "e" in text or "E" in text:
        text = format(value, ".17f").rstrip("0").rstrip(".")
    return text


def format_mv(a: Multivector) -> str:
    """Canonical text form, parseable by :func:`parse_mv` with exact round-trip."""
    names = a.blade_names
    parts: list[str] = []
    for coeff, name in zip(a.coeffs, names):
        if coeff == 0.0:
            continue
        magnitude = _format_number(abs(coeff))
        if name == "1":
            body = magnitude
        elif magnitude == "1":
            body = name
        else:
            body = f"{magnitude} {name}"
        if not parts:
            parts.append(body if coeff > 0 else f"-{body}")
        else:
            parts.append(f"+ {body}" if coeff > 0 else f"- {body}")
    if not parts:
        return "0"
    return " ".join(parts)
