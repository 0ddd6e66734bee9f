"""Group algebras K[G] of small abelian groups over exact fields.

G is cyclic(n) or a product Z_m x Z_n with (k, j) stored at index k*n + j.
Over Q(zeta_N), N the exponent of G, the algebra splits into |G| copies of
the field via the characters; the primitive idempotents are
e_chi = |G|^-1 sum_g chi(g)^-1 g and every idempotent is a sum of some of
them.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import product as iproduct
from typing import Iterable

from .fields import CyclotomicField, Domain, RationalField, PrimeField, zeta_power


@dataclass(frozen=True)
class AbGroup:
    kind: str  # "cyclic" or "product"
    m: int
    n: int = 1

    @classmethod
    def cyclic(cls, n: int) -> AbGroup:
        if n < 1:
            raise ValueError("group order must be >= 1")
        return cls("cyclic", n, 1)

    @classmethod
    def product(cls, m: int, n: int) -> AbGroup:
        if m < 1 or n < 1:
            raise ValueError("factor orders must be >= 1")
        return cls("product", m, n)

    @classmethod
    def parse(cls, text: str) -> AbGroup:
        """``cyclic:N`` or ``product:MxN``."""
        kind, _, arg = text.partition(":")
        if kind == "cyclic":
            return cls.cyclic(int(arg))
        if kind == "product":
            m, _, n = arg.lower().partition("x")
            return cls.product(int(m), int(n))
        raise ValueError(f"unknown group descriptor {text!r}")

    def __str__(self):
        return f"cyclic:{self.m}" if self.kind == "cyclic" else f"product:{self.m}x{self.n}"

    @property
    def order(self) -> int:
        return self.m * self.n

    @property
    def exponent(self) -> int:
        return math.lcm(self.m, self.n)

    def coords(self, i: int) -> tuple[int, int]:
        return divmod(i, self.n)

    def index(self, k: int, j: int) -> int:
        return (k % self.m) * self.n + (j % self.n)

    def op(self, i: int, j: int) -> int:
        a, b = self.coords(i)
        c, d = self.coords(j)
        return self.index(a + c, b + d)

    def inverse(self, i: int) -> int:
        a, b = self.coords(i)
        return self.index(-a, -b)

    def power_index(self, g: int, e: int) -> int:
        a, b = self.coords(g)
        return self.index(a * e, b * e)

    def element_order(self, i: int) -> int:
        a, b = self.coords(i)
        return math.lcm(self.m // math.gcd(a, self.m), self.n // math.gcd(b, self.n))

    def label(self, i: int) -> str:
        if self.kind == "cyclic":
            return "1" if i == 0 else ("g" if i == 1 else f"g^{i}")
        return f"g_{i}"

    def character_exponent(self, chi: int, g: int) -> int:
        """chi(g) = zeta_N ** character_exponent(chi, g)."""
        N = self.exponent
        a, b = self.coords(chi)
        k, j = self.coords(g)
        return ((N // self.m) * a * k + (N // self.n) * b * j) % N


class AlgElement:
    """Immutable element of K[G]; zero coefficients are dropped."""

    __slots__ = ("group", "domain", "_coeffs")

    def __init__(self, group: AbGroup, domain: Domain, coeffs: dict[int, object] | None = None):
        self.group = group
        self.domain = domain
        clean = {}
        for g, c in (coeffs or {}).items():
            if not 0 <= g < group.order:
                raise ValueError(f"group index {g} out of range")
            if not domain.is_zero(c):
                clean[g] = c
        self._coeffs = clean

    @classmethod
    def from_list(cls, group: AbGroup, domain: Domain, values: Iterable) -> AlgElement:
        return cls(group, domain, {i: domain.from_int(0) + v for i, v in enumerate(values)})

    @classmethod
    def one(cls, group: AbGroup, domain: Domain) -> AlgElement:
        return cls(group, domain, {0: domain.one()})

    @classmethod
    def zero(cls, group: AbGroup, domain: Domain) -> AlgElement:
        return cls(group, domain, {})

    @property
    def coeffs(self) -> dict[int, object]:
        return dict(self._coeffs)

    def coefficient(self, g: int):
        return self._coeffs.get(g, self.domain.zero())

    def coefficient_list(self) -> list:
        return [self.coefficient(g) for g in range(self.group.order)]

    def is_zero(self) -> bool:
        return not self._coeffs

    def is_one(self) -> bool:
        return list(self._coeffs) == [0] and self._coeffs[0] == self.domain.one()

    def _check(self, other: AlgElement):
        if self.group != other.group or self.domain != other.domain:
            raise ValueError("elements live in different algebras")

    def __add__(self, other: AlgElement) -> AlgElement:
        self._check(other)
        out = dict(self._coeffs)
        for g, c in other._coeffs.items():
            out[g] = out[g] + c if g in out else c
        return AlgElement(self.group, self.domain, out)

    def __neg__(self) -> AlgElement:
        return AlgElement(self.group, self.domain, {g: -c for g, c in self._coeffs.items()})

    def __sub__(self, other: AlgElement) -> AlgElement:
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, AlgElement):
            return self.scale(other)
        self._check(other)
        out: dict[int, object] = {}
        G = self.group
        for g, a in self._coeffs.items():
            for h, b in other._coeffs.items():
                gh = G.op(g, h)
                out[gh] = out[gh] + a * b if gh in out else a * b
        return AlgElement(G, self.domain, out)

    def __rmul__(self, scalar):
        return self.scale(scalar)

    def scale(self, scalar) -> AlgElement:
        return AlgElement(self.group, self.domain, {g: scalar * c for g, c in self._coeffs.items()})

    def __eq__(self, other):
        if not isinstance(other, AlgElement):
            return NotImplemented
        return (
            self.group == other.group
            and self.domain == other.domain
            and self._coeffs == other._coeffs
        )

    def __hash__(self):
        return hash((self.group, tuple(sorted(self._coeffs.items(), key=lambda kv: kv[0]))))

    def is_idempotent(self) -> bool:
        return self * self == self

    def __repr__(self):
        return f"AlgElement({self.group}, {self.domain!r}, {format_element(self)!r})"

    def __str__(self):
        return format_element(self)


def format_element(x: AlgElement) -> str:
    if x.is_zero():
        return "0"
    parts = []
    for g in sorted(x.coeffs):
        c = x.domain.format(x.coefficient(g))
        label = x.group.label(g)
        parts.append(f"({c})" if g == 0 else f"({c})*{label}")
    return " + ".join(parts)


def char0_domain(group: AbGroup) -> CyclotomicField:
    return CyclotomicField(group.exponent)


# -- characters -------------------------------------------------------------

def _char_value(group: AbGroup, chi: int, g: int):
    return zeta_power(group.exponent, group.character_exponent(chi, g))


def to_characters(x: AlgElement) -> list:
    """Fourier coordinates: x_hat(chi) = sum_g x_g chi(g)."""
    _require_char0(x)
    G = x.group
    zero = x.domain.zero()
    out = []
    for chi in range(G.order):
        acc = zero
        for g, c in x.coeffs.items():
            acc = acc + c * _char_value(G, chi, g)
        out.append(acc)
    return out


def from_characters(group: AbGroup, values, domain: CyclotomicField | None = None) -> AlgElement:
    """Inverse of :func:`to_characters`: sum_chi values[chi] * e_chi."""
    domain = domain or char0_domain(group)
    acc = AlgElement.zero(group, domain)
    for chi, v in enumerate(values):
        if domain.is_zero(domain.zero() + v):
            continue
        acc = acc + primitive_idempotents(group)[chi].scale(v)
    return acc


def _require_char0(x: AlgElement):
    if not isinstance(x.domain, CyclotomicField):
        raise ValueError("character methods need cyclotomic coefficients")


_PRIMITIVE_CACHE: dict[AbGroup, tuple[AlgElement, ...]] = {}


def primitive_idempotents(group: AbGroup) -> tuple[AlgElement, ...]:
    """e_chi for every character chi, indexed like the group elements."""
    if group in _PRIMITIVE_CACHE:
        return _PRIMITIVE_CACHE[group]
    domain = char0_domain(group)
    N = group.exponent
    inv_order = domain.from_int(1) / group.order
    out = []
    for chi in range(group.order):
        coeffs = {
            g: inv_order * zeta_power(N, -group.character_exponent(chi, g))
            for g in range(group.order)
        }
        out.append(AlgElement(group, domain, coeffs))
    _PRIMITIVE_CACHE[group] = tuple(out)
    return _PRIMITIVE_CACHE[group]


def idempotent_from_mask(group: AbGroup, mask: Iterable[int]) -> AlgElement:
    prims = primitive_idempotents(group)
    acc = AlgElement.zero(group, char0_domain(group))
    for chi in sorted(set(mask)):
        acc = acc + prims[chi]
    return acc


def all_idempotents(group: AbGroup) -> list[tuple[frozenset[int], AlgElement]]:
    """All 2^|G| idempotents keyed by mask, masks in increasing bit order."""
    out = []
    for bits in range(1 << group.order):
        mask = frozenset(i for i in range(group.order) if bits >> i & 1)
        out.append((mask, idempotent_from_mask(group, mask)))
    return out


def mask_of(alpha: AlgElement) -> frozenset[int]:
    """Character support of an idempotent; raises if alpha is not idempotent."""
    values = to_characters(alpha)
    mask = set()
    for chi, v in enumerate(values):
        if v == 1:
            mask.add(chi)
        elif not v == 0:
            raise ValueError(f"{alpha} is not idempotent")
    return frozenset(mask)


# -- witnesses ----------------------------------------------------------------

@dataclass(frozen=True)
class AlgWitness:
    beta: AlgElement
    law: str  # "ABSORB_WITNESS" or "ABSORB_IDEMPOTENT"


def witness_checks(alpha: AlgElement, beta: AlgElement) -> dict[str, bool]:
    """The four requirements of an S-idempotent witness, evaluated directly."""
    ab = alpha * beta
    return {
        "alpha_nontrivial_idempotent": (
            alpha.is_idempotent() and not alpha.is_zero() and not alpha.is_one()
        ),
        "beta_squared_is_alpha": beta * beta == alpha,
        "absorption": ab == beta or ab == alpha,
        "beta_not_in_0_1_alpha": not (beta.is_zero() or beta.is_one() or beta == alpha),
    }


def _law(alpha: AlgElement, beta: AlgElement) -> str:
    return "ABSORB_WITNESS" if alpha * beta == beta else "ABSORB_IDEMPOTENT"


def negation_witness(alpha: AlgElement) -> AlgWitness:
    """beta = -alpha certifies every nontrivial idempotent in characteristic 0."""
    if alpha.domain.characteristic != 0:
        raise ValueError("negation witness needs characteristic 0")
    if not alpha.is_idempotent():
        raise ValueError(f"{alpha} is not idempotent")
    if alpha.is_zero() or alpha.is_one():
        raise ValueError("trivial idempotent")
    beta = -alpha
    checks = witness_checks(alpha, beta)
    if not all(checks.values()) or alpha * beta != beta:
        failed = [k for k, ok in checks.items() if not ok]
        raise ArithmeticError(f"negation witness failed: {failed}")
    return AlgWitness(beta, "ABSORB_WITNESS")


def co_idempotents(alpha: AlgElement) -> list[AlgElement]:
    """Every beta != alpha with beta^2 = alpha and alpha*beta = beta.

    In character coordinates beta is +-1 on the mask of alpha and 0 off it;
    the all-plus choice is alpha itself and is left out.
    """
    if not alpha.is_idempotent():
        raise ValueError(f"{alpha} is not idempotent")
    G = alpha.group
    mask = sorted(mask_of(alpha))
    prims = primitive_idempotents(G)
    out = []
    for signs in iproduct((1, -1), repeat=len(mask)):
        if all(s == 1 for s in signs):
            continue
        beta = AlgElement.zero(G, alpha.domain)
        for chi, s in zip(mask, signs):
            beta = beta + (prims[chi] if s == 1 else -prims[chi])
        out.append(beta)
    return out


# -- subgroup-sum idempotents over integral domains ---------------------------

class HypothesisError(ValueError):
    pass


@dataclass(frozen=True)
class SubgroupPairReport:
    alpha: AlgElement
    beta: AlgElement
    case: int
    checks: dict

    @property
    def valid(self) -> bool:
        return all(self.checks.values())

    @property
    def failed(self) -> list[str]:
        return [k for k, ok in self.checks.items() if not ok]


def subgroup_idempotent_pair(domain: Domain, group: AbGroup, p: int, case: int) -> SubgroupPairReport:
    """alpha = p^-1 sum_{x in H} x for the order-p subgroup H, with the case's beta.

    case 1: beta = p * sum H   (needs p^4 = 1)
    case 2: beta = sum H       (needs p^2 = 1)
    case 3: beta = (1 + g^(n/2)) - alpha   (needs p = 2)
    """
    if group.kind != "cyclic":
        raise HypothesisError("only cyclic groups are supported")
    if not isinstance(domain, (RationalField, PrimeField)):
        raise HypothesisError("coefficients must be Q or a prime field")
    n = group.order
    if n % p:
        raise HypothesisError(f"{p} does not divide |G| = {n}")
    pv = domain.from_int(p)
    if domain.is_zero(pv):
        raise HypothesisError(f"{p} is not a unit in {domain!r}")
    one = domain.one()
    if case == 1:
        ok = pv ** 4 == one
    elif case == 2:
        ok = pv ** 2 == one
    elif case == 3:
        ok = p == 2
    else:
        raise HypothesisError(f"unknown case {case}")
    if not ok:
        raise HypothesisError(f"case {case} hypothesis fails for p = {p} in {domain!r}")

    step = n // p
    h_sum = AlgElement(group, domain, {i * step: one for i in range(p)})
    alpha = h_sum.scale(domain.invert(pv))
    if case == 1:
        beta = h_sum.scale(pv)
    elif case == 2:
        beta = h_sum
    else:
        beta = AlgElement(group, domain, {0: one, n // 2: one}) - alpha
    return SubgroupPairReport(alpha, beta, case, witness_checks(alpha, beta))
