"""Arithmetic in the group ring Z2[C_n] = Z2[x]/(x^n - 1).

An element is a subset of exponents in [0, n); the coefficient of g^e is 1
exactly when e is in the support.  Internally the support is an int bitset
(bit e set <=> g^e present), so addition is XOR and multiplication by g^s is
a cyclic rotation of the bitset.
"""

from __future__ import annotations

import re
from typing import Iterable


class ModulusMismatch(ValueError):
    pass


def _mask(n: int) -> int:
    return (1 << n) - 1


def _rotate(bits: int, shift: int, n: int) -> int:
    """Cyclic left rotation of an n-bit bitset (multiplication by g^shift)."""
    shift %= n
    if shift == 0:
        return bits
    return ((bits << shift) | (bits >> (n - shift))) & _mask(n)


def _iter_bits(bits: int):
    while bits:
        low = bits & -bits
        yield low.bit_length() - 1
        bits ^= low


class Gf2Element:
    """Immutable element of Z2[C_n]."""

    __slots__ = ("_n", "_bits")

    def __init__(self, n: int, bits: int = 0):
        if n < 1:
            raise ValueError(f"modulus must be >= 1, got {n}")
        if bits < 0 or bits >> n:
            raise ValueError("bitset has bits outside [0, n)")
        self._n = n
        self._bits = bits

    @classmethod
    def from_bits(cls, n: int, bits: int) -> Gf2Element:
        return cls(n, bits)

    @property
    def modulus(self) -> int:
        return self._n

    @property
    def bits(self) -> int:
        return self._bits

    @property
    def support(self) -> frozenset[int]:
        return frozenset(_iter_bits(self._bits))

    def exponents(self) -> list[int]:
        """Support as an ascending list."""
        return list(_iter_bits(self._bits))

    def __len__(self) -> int:
        return self._bits.bit_count()

    def is_zero(self) -> bool:
        return self._bits == 0

    def is_one(self) -> bool:
        return self._bits == 1

    def __eq__(self, other):
        if not isinstance(other, Gf2Element):
            return NotImplemented
        return self._n == other._n and self._bits == other._bits

    def __hash__(self):
        return hash((self._n, self._bits))

    def sort_key(self) -> tuple:
        """Canonical order: support size, then exponent list."""
        return (len(self), self.exponents())

    def _check(self, other: Gf2Element) -> None:
        if self._n != other._n:
            raise ModulusMismatch(f"moduli differ: {self._n} vs {other._n}")

    def __add__(self, other: Gf2Element) -> Gf2Element:
        return add(self, other)

    __sub__ = __add__

    def __mul__(self, other: Gf2Element) -> Gf2Element:
        return mul(self, other)

    def __repr__(self):
        return f"Gf2Element({self.exponents()}@{self._n})"

    def __str__(self):
        return to_text(self)


def make(n: int, exponents: Iterable[int] = ()) -> Gf2Element:
    """Build an element from exponents; repeated exponents cancel in pairs."""
    if n < 1:
        raise ValueError(f"modulus must be >= 1, got {n}")
    bits = 0
    for e in exponents:
        bits ^= 1 << (e % n)
    return Gf2Element(n, bits)


def zero(n: int) -> Gf2Element:
    return Gf2Element(n, 0)


def one(n: int) -> Gf2Element:
    return Gf2Element(n, 1)


def add(a: Gf2Element, b: Gf2Element) -> Gf2Element:
    a._check(b)
    return Gf2Element(a.modulus, a.bits ^ b.bits)


def mul(a: Gf2Element, b: Gf2Element) -> Gf2Element:
    """Cyclic convolution over Z2."""
    a._check(b)
    n = a.modulus
    # iterate over the sparser operand
    if len(a) > len(b):
        a, b = b, a
    acc = 0
    bb = b.bits
    for e in _iter_bits(a.bits):
        acc ^= _rotate(bb, e, n)
    return Gf2Element(n, acc)


def square(a: Gf2Element) -> Gf2Element:
    """Frobenius map: g^e -> g^(2e mod n), colliding images cancel."""
    n = a.modulus
    bits = 0
    for e in _iter_bits(a.bits):
        bits ^= 1 << ((2 * e) % n)
    return Gf2Element(n, bits)


def is_idempotent(a: Gf2Element) -> bool:
    return square(a) == a


def complement_one(a: Gf2Element) -> Gf2Element:
    """1 + a."""
    return Gf2Element(a.modulus, a.bits ^ 1)


def to_text(a: Gf2Element) -> str:
    """Canonical text form, e.g. ``g^0 + g^2 + g^4``; ``0``/``1`` for trivial."""
    if a.is_zero():
        return "0"
    if a.is_one():
        return "1"
    return " + ".join(f"g^{e}" for e in a.exponents())


_TERM = re.compile(r"^(?:1|g|g\^(\d+))$")


def parse(text: str, n: int) -> Gf2Element:
    """Inverse of :func:`to_text`.  Also accepts bare ``g`` and ``1`` terms."""
    text = text.strip()
    if text == "0":
        return zero(n)
    exps = []
    for term in text.split("+"):
        term = term.strip()
        m = _TERM.match(term)
        if not m:
            raise ValueError(f"cannot parse term {term!r}")
        if term == "1":
            exps.append(0)
        elif term == "g":
            exps.append(1)
        else:
            exps.append(int(m.group(1)))
    return make(n, exps)
