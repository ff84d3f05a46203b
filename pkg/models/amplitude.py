"""Exact amplitudes over the ring Z[w] / sqrt(2)^k with w = e^{i pi/8}.

A value is stored as eight integer coefficients of 1, w, ..., w^7 (reduced
modulo w^8 + 1) over a power of sqrt(2). The stored form removes factors of 2
only; equality and hashing go through a fully reduced key that also strips
single sqrt(2) factors, so equal values always compare and hash equal.
"""

import cmath
import math
from dataclasses import dataclass
from functools import cached_property
from typing import Sequence, Tuple

import pyparsing as pp

from .errors import AmplitudeLiteralError

DEGREE = 8
OMEGA_ORDER = 16

Coeffs = Tuple[int, ...]


def _shift(coeffs: Sequence[int], power: int) -> Coeffs:
    """Multiply a coefficient vector by w^power"""
    result = [0] * DEGREE
    power %= OMEGA_ORDER
    for i, a in enumerate(coeffs):
        if not a:
            continue
        p = (i + power) % OMEGA_ORDER
        if p >= DEGREE:
            result[p - DEGREE] -= a
        else:
            result[p] += a
    return tuple(result)


def _add(x: Sequence[int], y: Sequence[int]) -> Coeffs:
    return tuple(a + b for a, b in zip(x, y))


def _times_sqrt2(coeffs: Sequence[int]) -> Coeffs:
    # sqrt(2) = w^2 - w^6
    return _add(_shift(coeffs, 2), tuple(-a for a in _shift(coeffs, 6)))


def _scale_sqrt2(coeffs: Sequence[int], times: int) -> Coeffs:
    coeffs = tuple(coeffs)
    if times >= 2:
        factor = 2 ** (times // 2)
        coeffs = tuple(a * factor for a in coeffs)
    if times % 2:
        coeffs = _times_sqrt2(coeffs)
    return coeffs


def _poly_mul(x: Sequence[int], y: Sequence[int]) -> Coeffs:
    result = [0] * DEGREE
    for i, a in enumerate(x):
        if not a:
            continue
        for j, b in enumerate(y):
            if not b:
                continue
            p = i + j
            if p >= DEGREE:
                result[p - DEGREE] -= a * b
            else:
                result[p] += a * b
    return tuple(result)


def _all_even(coeffs: Sequence[int]) -> bool:
    return all(a % 2 == 0 for a in coeffs)


@dataclass(frozen=True, eq=False)
class AlgebraicComplex:
    coeffs: Coeffs
    sqrt2_exp: int = 0

    def __post_init__(self):
        coeffs = tuple(int(a) for a in self.coeffs)
        if len(coeffs) != DEGREE:
            raise AmplitudeLiteralError(f"expected {DEGREE} coefficients, got {len(coeffs)}")
        k = int(self.sqrt2_exp)
        if k < 0:
            raise AmplitudeLiteralError("sqrt(2) exponent must be non-negative")
        if not any(coeffs):
            k = 0
        while k >= 2 and _all_even(coeffs):
            coeffs = tuple(a // 2 for a in coeffs)
            k -= 2
        object.__setattr__(self, "coeffs", coeffs)
        object.__setattr__(self, "sqrt2_exp", k)

    @classmethod
    def from_int(cls, value: int) -> "AlgebraicComplex":
        return cls((value, 0, 0, 0, 0, 0, 0, 0), 0)

    @classmethod
    def omega(cls, power: int = 1) -> "AlgebraicComplex":
        """w^power for any integer power"""
        return cls(_shift((1, 0, 0, 0, 0, 0, 0, 0), power), 0)

    @cached_property
    def _key(self) -> Tuple[Coeffs, int]:
        coeffs, k = self.coeffs, self.sqrt2_exp
        while k >= 1:
            doubled = _times_sqrt2(coeffs)
            if not _all_even(doubled):
                break
            coeffs = tuple(a // 2 for a in doubled)
            k -= 1
        return coeffs, k

    @property
    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, int):
            other = AlgebraicComplex.from_int(other)
        if not isinstance(other, AlgebraicComplex):
            return NotImplemented
        return self._key == other._key

    def __hash__(self):
        return hash(self._key)

    def __add__(self, other):
        if isinstance(other, int):
            other = AlgebraicComplex.from_int(other)
        if not isinstance(other, AlgebraicComplex):
            return NotImplemented
        k = max(self.sqrt2_exp, other.sqrt2_exp)
        left = _scale_sqrt2(self.coeffs, k - self.sqrt2_exp)
        right = _scale_sqrt2(other.coeffs, k - other.sqrt2_exp)
        return AlgebraicComplex(_add(left, right), k)

    __radd__ = __add__

    def __neg__(self):
        return AlgebraicComplex(tuple(-a for a in self.coeffs), self.sqrt2_exp)

    def __sub__(self, other):
        if isinstance(other, int):
            other = AlgebraicComplex.from_int(other)
        if not isinstance(other, AlgebraicComplex):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            other = AlgebraicComplex.from_int(other)
        if not isinstance(other, AlgebraicComplex):
            return NotImplemented
        return AlgebraicComplex(_poly_mul(self.coeffs, other.coeffs),
                                self.sqrt2_exp + other.sqrt2_exp)

    __rmul__ = __mul__

    def conjugate(self) -> "AlgebraicComplex":
        # w^j -> w^-j = -w^(8-j)
        result = [self.coeffs[0]] + [0] * (DEGREE - 1)
        for j in range(1, DEGREE):
            result[DEGREE - j] = -self.coeffs[j]
        return AlgebraicComplex(tuple(result), self.sqrt2_exp)

    def norm_squared(self) -> "AlgebraicComplex":
        return self * self.conjugate()

    def to_complex(self) -> complex:
        total = sum(a * cmath.exp(1j * math.pi * j / DEGREE)
                    for j, a in enumerate(self.coeffs) if a)
        return complex(total) / math.sqrt(2) ** self.sqrt2_exp

    def __repr__(self):
        return f"AlgebraicComplex({format_amplitude(self)})"

    def __str__(self):
        return format_amplitude(self)


ZERO = AlgebraicComplex.from_int(0)
ONE = AlgebraicComplex.from_int(1)
MINUS_ONE = AlgebraicComplex.from_int(-1)
I = AlgebraicComplex.omega(4)
INV_SQRT2 = AlgebraicComplex((1, 0, 0, 0, 0, 0, 0, 0), 1)
SQRT2 = AlgebraicComplex((0, 0, 1, 0, 0, 0, -1, 0), 0)


def add(x: AlgebraicComplex, y: AlgebraicComplex) -> AlgebraicComplex:
    return x + y


def mul(x: AlgebraicComplex, y: AlgebraicComplex) -> AlgebraicComplex:
    return x * y


def conjugate(x: AlgebraicComplex) -> AlgebraicComplex:
    return x.conjugate()


def to_float(x: AlgebraicComplex) -> complex:
    return x.to_complex()


def omega_n(n_roots: int, power: int = 1) -> AlgebraicComplex:
    """Primitive n-th root of unity raised to power; n must divide 16"""
    if n_roots <= 0 or OMEGA_ORDER % n_roots:
        raise AmplitudeLiteralError(f"w_{n_roots} is not representable (N must divide {OMEGA_ORDER})")
    return AlgebraicComplex.omega(power * (OMEGA_ORDER // n_roots))


# Literal grammar: C(a0,...,a7)/s2^k, w^n, [-]1/s2, [-]i, integers

_integer = pp.Regex(r"[+-]?\d+").set_parse_action(lambda toks: int(toks[0]))
_coeff_form = (
    pp.Suppress("C(")
    + pp.Group(_integer + pp.ZeroOrMore(pp.Suppress(",") + _integer))
    + pp.Suppress(")")
    + pp.Optional(pp.Suppress("/s2^") + _integer, default=0)
).set_parse_action(lambda toks: AlgebraicComplex(tuple(toks[0]), toks[1]))
_omega_form = pp.Regex(r"(?P<sign>-?)w\^(?P<power>[+-]?\d+)").set_parse_action(
    lambda toks: (-1 if toks["sign"] else 1) * AlgebraicComplex.omega(int(toks["power"])))
_inv_sqrt2_form = pp.Regex(r"(?P<sign>-?)1/s2").set_parse_action(
    lambda toks: -INV_SQRT2 if toks["sign"] else INV_SQRT2)
_imaginary_form = pp.Regex(r"(?P<sign>-?)i\b").set_parse_action(
    lambda toks: -I if toks["sign"] else I)
_integer_form = _integer.copy().set_parse_action(lambda toks: AlgebraicComplex.from_int(int(toks[0])))

AMPLITUDE_LITERAL = (_coeff_form | _omega_form | _inv_sqrt2_form | _imaginary_form | _integer_form)
AMPLITUDE_LITERAL.set_name("amplitude literal")


def parse_amplitude(text: str) -> AlgebraicComplex:
    """Parse a single amplitude literal"""
    try:
        return AMPLITUDE_LITERAL.parse_string(text.strip(), parse_all=True)[0]
    except pp.ParseException as e:
        raise AmplitudeLiteralError(f"invalid amplitude literal {text!r}: {e}") from e


def format_amplitude(x: AlgebraicComplex) -> str:
    """Shortest literal that parses back to an equal value"""
    coeffs, k = x._key
    nonzero = [(j, a) for j, a in enumerate(coeffs) if a]
    if not nonzero:
        return "0"
    if len(nonzero) == 1 and abs(nonzero[0][1]) == 1:
        j, a = nonzero[0]
        sign = "" if a > 0 else "-"
        if k == 0:
            if j == 0:
                return f"{sign}1"
            if j == 4:
                return f"{sign}i"
            return f"w^{j if a > 0 else j + DEGREE}"
        if k == 1 and j == 0:
            return f"{sign}1/s2"
    return "C(" + ",".join(str(a) for a in coeffs) + f")/s2^{k}"
