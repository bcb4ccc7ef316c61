"""Dense univariate polynomials in q with exact integer coefficients."""

from __future__ import annotations

import re
from itertools import zip_longest
from typing import Iterable, Sequence


class Poly:
    """Immutable polynomial; ``coeffs[i]`` is the coefficient of ``q**i``.

    Trailing zeros are stripped, so the zero polynomial has ``coeffs == ()``
    and equality is plain tuple equality.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        cs = [int(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    @classmethod
    def monomial(cls, exp: int, coeff: int = 1) -> "Poly":
        if exp < 0:
            raise ValueError("negative exponent")
        return cls([0] * exp + [coeff])

    @classmethod
    def const(cls, c: int) -> "Poly":
        return cls([c])

    @property
    def degree(self) -> int | None:
        """Degree, or ``None`` for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else None

    @property
    def leading(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, int):
            other = Poly.const(other)
        if not isinstance(other, Poly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(("Poly", self.coeffs))

    def __getitem__(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __iter__(self):
        return iter(self.coeffs)

    def __len__(self):
        return len(self.coeffs)

    @staticmethod
    def _coerce(other) -> "Poly":
        if isinstance(other, Poly):
            return other
        if isinstance(other, int):
            return Poly.const(other)
        raise TypeError(f"cannot combine Poly with {type(other).__name__}")

    def __add__(self, other):
        other = self._coerce(other)
        return Poly(a + b for a, b in zip_longest(self.coeffs, other.coeffs, fillvalue=0))

    __radd__ = __add__

    def __neg__(self):
        return Poly(-c for c in self.coeffs)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        other = self._coerce(other)
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Poly()
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative power")
        result, base = ONE, self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __call__(self, x: int) -> int:
        return eval_int(self, x)

    def shift(self, k: int) -> "Poly":
        """Multiply by ``q**k``."""
        if not self.coeffs:
            return self
        return Poly([0] * k + list(self.coeffs))

    def __repr__(self):
        return f"Poly({list(self.coeffs)!r})"

    def __str__(self):
        return format_poly(self)


ZERO = Poly()
ONE = Poly([1])
Q = Poly([0, 1])
QM1 = Poly([-1, 1])


def add(a: Poly, b: Poly) -> Poly:
    return a + b


def mul(a: Poly, b: Poly) -> Poly:
    return a * b


def eval_int(p: Poly, x: int) -> int:
    acc = 0
    for c in reversed(p.coeffs):
        acc = acc * x + c
    return acc


def q_int(n: int) -> Poly:
    """The q-integer [n]_q = 1 + q + ... + q^(n-1)."""
    return Poly([1] * n)


def q_factorial(n: int) -> Poly:
    out = ONE
    for i in range(1, n + 1):
        out = out * q_int(i)
    return out


def extract_qminus1(p: Poly) -> tuple[int, Poly]:
    """Split off the largest power of (q-1) dividing ``p``.

    Returns ``(m, g)`` with ``p == (q-1)**m * g`` and ``g(1) != 0``.
    """
    if p.is_zero():
        raise ValueError("zero polynomial has no factorization")
    m, cur = 0, p.coeffs
    while sum(cur) == 0:
        # synthetic division by (q - 1), highest degree first
        quot = [0] * (len(cur) - 1)
        carry = 0
        for i in range(len(cur) - 1, 0, -1):
            carry += cur[i]
            quot[i - 1] = carry
        cur = tuple(quot)
        m += 1
    return m, Poly(cur)


def reverse_scaled(p: Poly, d: int) -> Poly:
    """Return ``q**d * p(1/q)``."""
    if p.is_zero():
        return p
    if d < p.degree:
        raise ValueError("would produce negative exponents")
    padded = list(p.coeffs) + [0] * (d - p.degree)
    return Poly(reversed(padded))


def _format_term(c: int, e: int) -> str:
    if e == 0:
        return str(c)
    mono = "q" if e == 1 else f"q^{e}"
    return mono if c == 1 else f"{c}*{mono}"


def format_poly(p: Poly) -> str:
    """Expanded form, descending exponents, e.g. ``3*q^3 + q^2 - 1``."""
    terms = [(c, e) for e, c in enumerate(p.coeffs) if c]
    if not terms:
        return "0"
    out = []
    for c, e in reversed(terms):
        if not out:
            out.append(("-" if c < 0 else "") + _format_term(abs(c), e))
        else:
            out.append((" - " if c < 0 else " + ") + _format_term(abs(c), e))
    return "".join(out)


def format_factored(p: Poly) -> str:
    """``(q-1)^m * (G)`` using :func:`extract_qminus1`; ``G`` alone when m = 0."""
    if p.is_zero():
        return "0"
    m, g = extract_qminus1(p)
    if m == 0:
        return format_poly(g)
    head = "(q-1)" if m == 1 else f"(q-1)^{m}"
    return f"{head} * ({format_poly(g)})"


_TERM = re.compile(r"^(?:(\d+)\*)?q(?:\^(\d+))?$|^(\d+)$")


def _parse_expanded(text: str) -> Poly:
    s = text.strip()
    if not s:
        raise ValueError("empty polynomial")
    # normalise "a - b" to "a + -b", then split on "+"
    s = re.sub(r"\s+", "", s)
    s = re.sub(r"(?<=[^\^+])-", "+-", s)
    coeffs: dict[int, int] = {}
    for tok in s.split("+"):
        if not tok:
            raise ValueError(f"malformed polynomial: {text!r}")
        sign = 1
        while tok.startswith("-"):
            sign, tok = -sign, tok[1:]
        m = _TERM.match(tok)
        if not m:
            raise ValueError(f"malformed term {tok!r} in {text!r}")
        if m.group(3) is not None:
            c, e = int(m.group(3)), 0
        else:
            c = int(m.group(1)) if m.group(1) else 1
            e = int(m.group(2)) if m.group(2) else 1
        coeffs[e] = coeffs.get(e, 0) + sign * c
    if not coeffs:
        return ZERO
    return Poly(coeffs.get(i, 0) for i in range(max(coeffs) + 1))


_FACTORED = re.compile(r"^\s*\(q-1\)(?:\^(\d+))?\s*\*\s*\((.*)\)\s*$")


def parse_poly(text: str) -> Poly:
    """Parse either textual form produced by :func:`format_poly` or
    :func:`format_factored`."""
    m = _FACTORED.match(text)
    if m:
        power = int(m.group(1)) if m.group(1) else 1
        return QM1 ** power * _parse_expanded(m.group(2))
    return _parse_expanded(text)


def from_terms(terms: Sequence[tuple[int, int]]) -> Poly:
    """Build from ``(coeff, exponent)`` pairs; repeated exponents add."""
    out = ZERO
    for c, e in terms:
        out = out + Poly.monomial(e, c)
    return out
