"""Exact coefficient fields: Q, cyclotomic fields Q(zeta_N), prime fields F_q.

Cyclotomic numbers are residues of Q[x] modulo the N-th cyclotomic
polynomial, stored as a tuple of Fractions of length phi(N).
"""

from __future__ import annotations

import re
from fractions import Fraction
from functools import lru_cache

from ..numtheory import is_prime

Rational = Fraction


# -- integer / rational polynomial helpers (low degree first) ---------------

def _trim(poly: list) -> list:
    while poly and poly[-1] == 0:
        poly.pop()
    return poly


def _poly_mul(a, b) -> list:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x == 0:
            continue
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def _poly_divmod(num, den) -> tuple[list, list]:
    """Polynomial long division; exact over Fractions, or ints for monic den."""
    num = list(num)
    den = _trim(list(den))
    if not den:
        raise ZeroDivisionError("polynomial division by zero")
    lead = den[-1]
    q = [0] * max(len(num) - len(den) + 1, 0)
    for shift in range(len(num) - len(den), -1, -1):
        c = num[shift + len(den) - 1]
        if c == 0:
            continue
        c = c / lead if lead != 1 else c
        q[shift] = c
        for i, d in enumerate(den):
            num[shift + i] -= c * d
    return _trim(q), _trim(num[: len(den) - 1])


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> tuple[int, ...]:
    """Integer coefficients of Phi_n, constant term first."""
    if n < 1:
        raise ValueError("n must be >= 1")
    num = [-1] + [0] * (n - 1) + [1]  # x^n - 1
    for d in range(1, n):
        if n % d == 0:
            num, rem = _poly_divmod(num, cyclotomic_polynomial(d))
            if rem:
                raise ArithmeticError(f"inexact division computing Phi_{n}")
    return tuple(int(c) for c in num)


def _reduce(poly, n: int) -> tuple[Fraction, ...]:
    phi = cyclotomic_polynomial(n)
    deg = len(phi) - 1
    _, rem = _poly_divmod([Fraction(c) for c in poly], phi)
    rem = list(rem) + [Fraction(0)] * (deg - len(rem))
    return tuple(Fraction(c) for c in rem)


class CycloNumber:
    """Element of Q(zeta_n)."""

    __slots__ = ("order", "coeffs")

    def __init__(self, order: int, coeffs=()):
        self.order = order
        self.coeffs = _reduce(coeffs, order)

    @classmethod
    def _raw(cls, order: int, coeffs: tuple[Fraction, ...]) -> CycloNumber:
        obj = cls.__new__(cls)
        obj.order = order
        obj.coeffs = coeffs
        return obj

    @classmethod
    def rational(cls, order: int, value) -> CycloNumber:
        return cls(order, [Fraction(value)])

    @classmethod
    def zeta(cls, order: int, power: int = 1) -> CycloNumber:
        return zeta_power(order, power)

    @property
    def degree(self) -> int:
        return len(self.coeffs)

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def is_rational(self) -> bool:
        return not any(self.coeffs[1:])

    def _coerce(self, other) -> CycloNumber:
        if isinstance(other, CycloNumber):
            if other.order != self.order:
                raise ValueError(f"Q(zeta_{self.order}) vs Q(zeta_{other.order})")
            return other
        if isinstance(other, (int, Fraction)):
            return CycloNumber.rational(self.order, other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return CycloNumber._raw(self.order, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        return CycloNumber._raw(self.order, tuple(-a for a in self.coeffs))

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return CycloNumber(self.order, _poly_mul(self.coeffs, other.coeffs))

    __rmul__ = __mul__

    def inverse(self) -> CycloNumber:
        return cyclo_invert(self)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * cyclo_invert(other)

    def __rtruediv__(self, other):
        return self._coerce(other) * cyclo_invert(self)

    def __pow__(self, e: int):
        if e < 0:
            return cyclo_invert(self) ** (-e)
        result = CycloNumber.rational(self.order, 1)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.is_rational() and self.coeffs[0] == other
        if not isinstance(other, CycloNumber):
            return NotImplemented
        return self.order == other.order and self.coeffs == other.coeffs

    def __hash__(self):
        if self.is_rational():
            return hash(self.coeffs[0])
        return hash((self.order, self.coeffs))

    def __repr__(self):
        return f"CycloNumber({self.order}, {format_cyclo(self)!r})"

    def __str__(self):
        return format_cyclo(self)


@lru_cache(maxsize=4096)
def zeta_power(order: int, power: int) -> CycloNumber:
    """zeta_order ** power, reduced."""
    power %= order
    poly = [0] * power + [1]
    return CycloNumber(order, poly)


def cyclo_invert(z: CycloNumber) -> CycloNumber:
    """Inverse via the extended Euclidean algorithm against Phi_n."""
    if z.is_zero():
        raise ZeroDivisionError("inverse of zero")
    phi = [Fraction(c) for c in cyclotomic_polynomial(z.order)]
    # invariant: s_i * z = r_i (mod phi)
    r0, r1 = phi, _trim(list(z.coeffs))
    s0, s1 = [], [Fraction(1)]
    while len(r1) > 1:
        q, r = _poly_divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, _poly_sub(s0, _poly_mul(q, s1))
    if not r1:
        raise ArithmeticError("element shares a factor with the cyclotomic polynomial")
    c = r1[0]
    return CycloNumber(z.order, [x / c for x in s1])


def _poly_sub(a, b) -> list:
    out = [0] * max(len(a), len(b))
    for i, x in enumerate(a):
        out[i] += x
    for i, x in enumerate(b):
        out[i] -= x
    return _trim(out)


def format_rational(x: Fraction) -> str:
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


def parse_rational(text: str) -> Fraction:
    return Fraction(text.strip())


def format_cyclo(z: CycloNumber) -> str:
    """Polynomial in zeta with rational coefficients, e.g. ``2/3 - 1/3*zeta^2``."""
    terms = []
    for i, c in enumerate(z.coeffs):
        if c == 0:
            continue
        mag = format_rational(abs(c)) if abs(c).denominator != 1 else str(abs(c).numerator)
        if i == 0:
            body = mag
        else:
            mono = "zeta" if i == 1 else f"zeta^{i}"
            body = mono if abs(c) == 1 else f"{mag}*{mono}"
        terms.append(("-" if c < 0 else "+", body))
    if not terms:
        return "0"
    sign, body = terms[0]
    out = ("-" if sign == "-" else "") + body
    for sign, body in terms[1:]:
        out += f" {sign} {body}"
    return out


_CYCLO_TERM = re.compile(r"^(?:(\d+(?:/\d+)?)\*?)?(zeta(?:\^(\d+))?)?$")


def parse_cyclo(text: str, order: int) -> CycloNumber:
    """Inverse of :func:`format_cyclo`."""
    text = text.strip()
    if text == "0":
        return CycloNumber(order)
    tokens = re.split(r"\s+([+-])\s+", text)
    first = tokens[0]
    signs = ["-" if first.startswith("-") else "+"] + tokens[1::2]
    bodies = [first.lstrip("-")] + tokens[2::2]
    poly: list[Fraction] = []
    for sign, body in zip(signs, bodies):
        m = _CYCLO_TERM.match(body)
        if not m or not (m.group(1) or m.group(2)):
            raise ValueError(f"cannot parse {body!r}")
        coef = Fraction(m.group(1)) if m.group(1) else Fraction(1)
        power = 0
        if m.group(2):
            power = int(m.group(3)) if m.group(3) else 1
        poly += [Fraction(0)] * (power + 1 - len(poly))
        poly[power] += -coef if sign == "-" else coef
    return CycloNumber(order, poly)


class PrimeFieldElement:
    __slots__ = ("value", "q")

    def __init__(self, value: int, q: int):
        self.q = q
        self.value = value % q

    def _coerce(self, other):
        if isinstance(other, PrimeFieldElement):
            if other.q != self.q:
                raise ValueError(f"F_{self.q} vs F_{other.q}")
            return other.value
        if isinstance(other, int):
            return other
        return NotImplemented

    def __add__(self, other):
        v = self._coerce(other)
        return NotImplemented if v is NotImplemented else PrimeFieldElement(self.value + v, self.q)

    __radd__ = __add__

    def __sub__(self, other):
        v = self._coerce(other)
        return NotImplemented if v is NotImplemented else PrimeFieldElement(self.value - v, self.q)

    def __rsub__(self, other):
        return PrimeFieldElement(other - self.value, self.q)

    def __neg__(self):
        return PrimeFieldElement(-self.value, self.q)

    def __mul__(self, other):
        v = self._coerce(other)
        return NotImplemented if v is NotImplemented else PrimeFieldElement(self.value * v, self.q)

    __rmul__ = __mul__

    def inverse(self) -> PrimeFieldElement:
        if self.value == 0:
            raise ZeroDivisionError(f"0 has no inverse in F_{self.q}")
        return PrimeFieldElement(pow(self.value, -1, self.q), self.q)

    def __truediv__(self, other):
        if isinstance(other, int):
            other = PrimeFieldElement(other, self.q)
        return self * other.inverse()

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        return PrimeFieldElement(pow(self.value, e, self.q), self.q)

    def is_zero(self) -> bool:
        return self.value == 0

    def __eq__(self, other):
        if isinstance(other, int):
            return self.value == other % self.q
        if not isinstance(other, PrimeFieldElement):
            return NotImplemented
        return self.q == other.q and self.value == other.value

    def __hash__(self):
        return hash((self.q, self.value))

    def __repr__(self):
        return f"{self.value} (mod {self.q})"

    def __str__(self):
        return str(self.value)


class Domain:
    """A coefficient field: knows its zero, one and how to print/parse scalars."""

    name = "abstract"
    characteristic = 0

    def from_int(self, v: int):
        raise NotImplementedError

    def zero(self):
        return self.from_int(0)

    def one(self):
        return self.from_int(1)

    def is_zero(self, c) -> bool:
        return c == 0

    def invert(self, c):
        raise NotImplementedError

    def format(self, c) -> str:
        return str(c)

    def parse(self, text: str):
        raise NotImplementedError

    def __eq__(self, other):
        return type(self) is type(other) and self.__dict__ == other.__dict__

    def __hash__(self):
        return hash((type(self).__name__, tuple(sorted(self.__dict__.items()))))


class RationalField(Domain):
    name = "rational"

    def from_int(self, v):
        return Fraction(v)

    def invert(self, c):
        if c == 0:
            raise ZeroDivisionError("1/0")
        return 1 / Fraction(c)

    def format(self, c):
        return format_rational(c)

    def parse(self, text):
        return parse_rational(text)

    def __repr__(self):
        return "Q"


class CyclotomicField(Domain):
    name = "cyclotomic"

    def __init__(self, order: int):
        if order < 1:
            raise ValueError("order must be >= 1")
        self.order = order

    def from_int(self, v):
        return CycloNumber.rational(self.order, v)

    def is_zero(self, c):
        return c.is_zero()

    def invert(self, c):
        return cyclo_invert(c)

    def zeta(self, power: int = 1) -> CycloNumber:
        return zeta_power(self.order, power)

    def format(self, c):
        return format_cyclo(c)

    def parse(self, text):
        return parse_cyclo(text, self.order)

    def __repr__(self):
        return f"Q(zeta_{self.order})"


class PrimeField(Domain):
    name = "prime"

    def __init__(self, q: int):
        if not is_prime(q):
            raise ValueError(f"{q} is not prime")
        self.q = q
        self.characteristic = q

    def from_int(self, v):
        return PrimeFieldElement(v, self.q)

    def is_zero(self, c):
        return c.value == 0

    def invert(self, c):
        return c.inverse()

    def parse(self, text):
        return PrimeFieldElement(int(text), self.q)

    def __repr__(self):
        return f"F_{self.q}"
