"""Canonical printing of numbers and linear combinations ``a + b1 X1 + ...``."""

from __future__ import annotations

import numbers


def fmt_real(x) -> str:
    """Shortest readable form: integers without a point, floats to 12 significant digits."""
    if isinstance(x, complex):
        if x.imag == 0:
            return fmt_real(x.real)
        return "(" + fmt_real(x.real) + ("+" if x.imag >= 0 else "-") + fmt_real(abs(x.imag)) + "j)"
    if isinstance(x, numbers.Integral):
        return str(int(x))
    x = float(x)
    if x == int(x) and abs(x) < 1e15:
        return str(int(x))
    s = f"{x:.12g}"
    return "0" if s == "-0" else s


def _is_zero(c) -> bool:
    if isinstance(c, numbers.Number):
        return c == 0
    return bool(getattr(c, "is_zero", lambda: False)())


def _is_one(c) -> bool:
    return isinstance(c, numbers.Number) and c == 1


def fmt_combination(constant, terms) -> str:
    """Render ``constant + sum(coef * name)`` with folded signs and zero terms dropped.

    ``terms`` is an iterable of ``(coef, name)``.  Real coefficients of +-1 are
    written as a bare name; non-numeric coefficients are parenthesised.
    """
    parts: list[str] = []
    if not _is_zero(constant):
        parts.append(_fmt_coef(constant))
    for coef, name in terms:
        if _is_zero(coef):
            continue
        if isinstance(coef, numbers.Real):
            body = name if abs(coef) == 1 else fmt_real(abs(coef)) + name
            sign = "-" if coef < 0 else "+"
        else:
            body, sign = _fmt_coef(coef) + name, "+"
            if not isinstance(coef, complex):
                body = "(" + _fmt_coef(coef) + ")" + name
        if not parts:
            parts.append(body if sign == "+" else "-" + body)
        else:
            parts.append(sign + body)
    return "".join(parts) if parts else "0"


def _fmt_coef(c) -> str:
    if isinstance(c, numbers.Number):
        return fmt_real(c)
    return str(c)
