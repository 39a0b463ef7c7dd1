"""Exact scalars: Gaussian rationals Q(i) backed by sympy's QQ_I domain."""

from __future__ import annotations

import re
from fractions import Fraction

from sympy import QQ, QQ_I

ZERO = QQ_I(0, 0)
ONE = QQ_I(1, 0)
I = QQ_I(0, 1)

_TERM = re.compile(r"([+-]?)(\d+(?:/\d+)?)?(\*?i)?")


def _frac(x) -> Fraction:
    return Fraction(int(x.numerator), int(x.denominator))


def q(re_part=0, im_part=0):
    """Build an exact scalar from ints, Fractions, strings or QQ_I values."""
    if isinstance(re_part, str):
        value = parse(re_part)
        return value if not im_part else value + q(0, im_part)
    if type(re_part) is type(ONE) and not im_part:
        return re_part
    re_f = Fraction(re_part)
    im_f = Fraction(im_part)
    return QQ_I(QQ(re_f.numerator, re_f.denominator), QQ(im_f.numerator, im_f.denominator))


def parse(text: str):
    """Parse "p/q", "p/q i", "a + b i", "-i" into an exact scalar."""
    s = text.replace(" ", "")
    if not s:
        raise ValueError("empty scalar")
    pos = 0
    total = ZERO
    while pos < len(s):
        m = _TERM.match(s, pos)
        if m is None or m.end() == pos or (m.group(2) is None and m.group(3) is None):
            raise ValueError(f"cannot parse scalar {text!r}")
        sign = -1 if m.group(1) == "-" else 1
        mag = Fraction(m.group(2)) if m.group(2) else Fraction(1)
        total = total + (q(0, sign * mag) if m.group(3) else q(sign * mag))
        pos = m.end()
    return total


def _fmt_frac(f: Fraction) -> str:
    return str(f.numerator) if f.denominator == 1 else f"{f.numerator}/{f.denominator}"


def fmt(x) -> str:
    """Canonical text: "p/q", "p/q i" or "a + b i"."""
    x = q(x) if not isinstance(x, type(ONE)) else x
    re_f, im_f = _frac(x.x), _frac(x.y)
    if not im_f:
        return _fmt_frac(re_f)
    im_txt = ("" if abs(im_f) == 1 else _fmt_frac(abs(im_f)) + " ") + "i"
    if not re_f:
        return ("-" if im_f < 0 else "") + im_txt
    return f"{_fmt_frac(re_f)} {'-' if im_f < 0 else '+'} {im_txt}"


def real(x) -> Fraction:
    return _frac(x.x)


def imag(x) -> Fraction:
    return _frac(x.y)


def is_real(x) -> bool:
    return not x.y


def to_complex(x) -> complex:
    return complex(float(_frac(x.x)), float(_frac(x.y)))


def to_float(x) -> float:
    if x.y:
        raise ValueError(f"{fmt(x)} is not real")
    return float(_frac(x.x))
