"""Exact arithmetic on formal Laurent polynomials with rational coefficients.

The order makes ``x`` a positive infinitesimal: ``a > b`` iff the
lowest-exponent coefficient of ``a - b`` is positive.  Negative exponents are
therefore infinite elements, e.g. ``2/3*x^-1 > 1000``.
"""
from __future__ import annotations

import math
import re
from fractions import Fraction
from numbers import Rational

__all__ = [
    "INF",
    "Laurent",
    "LiteralError",
    "X",
    "ONE",
    "ZERO",
    "cmp",
    "div_monomial",
    "parse_laurent",
]

# valuation of zero; compares above every integer and is never confused with one
INF = math.inf


class LiteralError(ValueError):
    """Malformed Laurent polynomial literal."""


def _coerce(value):
    if isinstance(value, Laurent):
        return value
    if isinstance(value, (int, Rational)):
        return Laurent.const(value)
    return NotImplemented


class Laurent:
    """Immutable sparse Laurent polynomial ``sum c_k x^k``.

    ``terms`` maps integer exponents to nonzero :class:`Fraction` coefficients;
    zero coefficients are dropped so equal values have equal term maps.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms=None):
        clean = {}
        if terms:
            items = terms.items() if hasattr(terms, "items") else terms
            for k, c in items:
                c = Fraction(c)
                if c:
                    k = int(k)
                    total = clean.get(k, 0) + c
                    if total:
                        clean[k] = total
                    else:
                        clean.pop(k, None)
        self._terms = clean
        self._hash = None

    @classmethod
    def _from_clean(cls, terms):
        obj = object.__new__(cls)
        obj._terms = terms
        obj._hash = None
        return obj

    @classmethod
    def const(cls, c):
        c = Fraction(c)
        return cls._from_clean({0: c} if c else {})

    @classmethod
    def monomial(cls, c, k):
        c = Fraction(c)
        return cls._from_clean({int(k): c} if c else {})

    # -- structure -------------------------------------------------------

    @property
    def terms(self):
        """Copy of the exponent -> coefficient map."""
        return dict(self._terms)

    def items(self):
        """``(exponent, coefficient)`` pairs in increasing exponent order."""
        return sorted(self._terms.items())

    @property
    def valuation(self):
        """Lowest exponent present, or ``INF`` for zero."""
        if not self._terms:
            return INF
        return min(self._terms)

    @property
    def lead(self):
        """Coefficient at the valuation (0 for the zero polynomial)."""
        if not self._terms:
            return Fraction(0)
        return self._terms[min(self._terms)]

    @property
    def degree(self):
        if not self._terms:
            return -INF
        return max(self._terms)

    @property
    def sign(self):
        if not self._terms:
            return 0
        return 1 if self.lead > 0 else -1

    def is_monomial(self):
        return len(self._terms) == 1

    def is_constant(self):
        return not self._terms or set(self._terms) == {0}

    def coefficient(self, k):
        return self._terms.get(k, Fraction(0))

    def truncate(self, k):
        """Keep only the terms with exponent ``<= k``."""
        if k == INF:
            return self
        return Laurent._from_clean({e: c for e, c in self._terms.items() if e <= k})

    # -- arithmetic ------------------------------------------------------

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        if not other._terms:
            return self
        out = dict(self._terms)
        for k, c in other._terms.items():
            s = out.get(k, 0) + c
            if s:
                out[k] = s
            else:
                del out[k]
        return Laurent._from_clean(out)

    __radd__ = __add__

    def __neg__(self):
        return Laurent._from_clean({k: -c for k, c in self._terms.items()})

    def __pos__(self):
        return self

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        out = {}
        for k1, c1 in self._terms.items():
            for k2, c2 in other._terms.items():
                k = k1 + k2
                s = out.get(k, 0) + c1 * c2
                if s:
                    out[k] = s
                else:
                    out.pop(k, None)
        return Laurent._from_clean(out)

    __rmul__ = __mul__

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            raise ValueError("only non-negative integer powers are supported")
        result = ONE
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def div_monomial(self, c, k):
        """Exact division by ``c * x^k``."""
        c = Fraction(c)
        if not c:
            raise ZeroDivisionError("division by a zero monomial")
        return Laurent._from_clean({e - k: v / c for e, v in self._terms.items()})

    def __truediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        if not other._terms:
            raise ZeroDivisionError("division by zero")
        if not other.is_monomial():
            raise ValueError(f"division is only defined by monomials, not {other}")
        (k, c), = other._terms.items()
        return self.div_monomial(c, k)

    def __rtruediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return other / self

    def __abs__(self):
        return -self if self.sign < 0 else self

    # -- order -----------------------------------------------------------

    def __eq__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            if self.is_constant():
                self._hash = hash(self.coefficient(0))
            else:
                self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __lt__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return (other - self).sign > 0

    def __le__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return (other - self).sign >= 0

    def __gt__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return (self - other).sign > 0

    def __ge__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return (self - other).sign >= 0

    def __bool__(self):
        return bool(self._terms)

    # -- text ------------------------------------------------------------

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for i, (k, c) in enumerate(self.items()):
            mag = abs(c)
            if k == 0:
                body = str(mag)
            else:
                xpart = "x" if k == 1 else f"x^{k}"
                body = xpart if mag == 1 else f"{mag}*{xpart}"
            if i == 0:
                parts.append(("-" if c < 0 else "") + body)
            else:
                parts.append((" - " if c < 0 else " + ") + body)
        return "".join(parts)

    def literal(self):
        """Canonical text without whitespace (for line-oriented formats)."""
        return str(self).replace(" ", "")

    def __repr__(self):
        return f"Laurent('{self}')"


ZERO = Laurent()
ONE = Laurent.const(1)
X = Laurent.monomial(1, 1)


def cmp(a, b):
    """-1, 0 or 1 as ``a`` is below, equal to or above ``b``."""
    return (_coerce(a) - _coerce(b)).sign


def div_monomial(a, c, k):
    return _coerce(a).div_monomial(c, k)


_COEFF = re.compile(r"(\d+(?:\.\d*)?|\.\d+)(?:/(\d+))?")
_XPOW = re.compile(r"x(?:\^(?:\((-?\d+)\)|(-?\d+)))?")


def parse_laurent(text):
    """Parse ``"2/3*x^-1 + 1 - x^2"``-style literals; whitespace is ignored."""
    if isinstance(text, Laurent):
        return text
    s = re.sub(r"\s+", "", str(text))
    if not s:
        raise LiteralError("empty Laurent literal")
    terms = {}
    pos = 0
    first = True
    while pos < len(s):
        sign = 1
        if s[pos] in "+-":
            sign = -1 if s[pos] == "-" else 1
            pos += 1
        elif not first:
            raise LiteralError(f"expected '+' or '-' at position {pos} in {text!r}")
        first = False
        coeff = None
        m = _COEFF.match(s, pos)
        if m:
            try:
                coeff = Fraction(m.group(0))
            except (ValueError, ZeroDivisionError) as exc:
                raise LiteralError(f"bad coefficient {m.group(0)!r} in {text!r}") from exc
            pos = m.end()
            if pos < len(s) and s[pos] == "*":
                pos += 1
                if not s.startswith("x", pos):
                    raise LiteralError(f"expected 'x' after '*' at position {pos} in {text!r}")
        exp = 0
        m = _XPOW.match(s, pos)
        if m:
            raw = m.group(1) if m.group(1) is not None else m.group(2)
            exp = int(raw) if raw is not None else 1
            pos = m.end()
        elif coeff is None:
            raise LiteralError(f"expected a term at position {pos} in {text!r}")
        c = sign * (coeff if coeff is not None else 1)
        total = terms.get(exp, 0) + c
        if total:
            terms[exp] = total
        else:
            terms.pop(exp, None)
    return Laurent._from_clean(terms)
