"""Deciding S-idempotency in Z2[C_n].

An idempotent x != 0 is an S-idempotent when some a outside {0, 1, x}
satisfies a^2 = x together with xa = a or xa = x.  Squaring is Z2-linear in
characteristic 2, so the square roots of x form an affine subspace, found by
elimination on the doubling matrix.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterator

from .gf2_linalg import Gf2System, iter_affine_ascending
from .gf2_ring import Gf2Element, complement_one, is_idempotent, mul, square
from .idem_enum import enumerate_idempotents, nontrivial

DEFAULT_KERNEL_CAP = 20


class Law(str, enum.Enum):
    ABSORB_WITNESS = "ABSORB_WITNESS"  # x * a = a
    ABSORB_IDEMPOTENT = "ABSORB_IDEMPOTENT"  # x * a = x


class Method(str, enum.Enum):
    CONSTRUCTED = "CONSTRUCTED"
    SEARCHED = "SEARCHED"


class Status(str, enum.Enum):
    S = "S"
    NOT_S = "NOT_S"
    INCONCLUSIVE = "INCONCLUSIVE"


class Inconclusive(RuntimeError):
    """The root space is too large to search and no construction applies."""

    def __init__(self, x: Gf2Element, kernel_dim: int, cap: int):
        super().__init__(
            f"inconclusive for {x!r}: kernel dimension {kernel_dim} exceeds cap {cap}"
        )
        self.kernel_dim = kernel_dim
        self.cap = cap


class InvalidWitness(ValueError):
    pass


@dataclass(frozen=True)
class SWitness:
    beta: Gf2Element
    law: Law
    method: Method = Method.SEARCHED


@dataclass(frozen=True)
class RootSpace:
    """{a : a^2 = x} as particular + span(kernel); empty when particular is None."""

    modulus: int
    particular: Gf2Element | None
    kernel: tuple[Gf2Element, ...]

    @property
    def dim(self) -> int:
        return len(self.kernel)

    @property
    def is_empty(self) -> bool:
        return self.particular is None

    def __len__(self) -> int:
        return 0 if self.particular is None else 1 << len(self.kernel)

    def __iter__(self) -> Iterator[Gf2Element]:
        """Roots in ascending bitset order."""
        if self.particular is None:
            return
        basis = [k.bits for k in self.kernel]
        for bits in iter_affine_ascending(self.particular.bits, basis):
            yield Gf2Element(self.modulus, bits)


@lru_cache(maxsize=256)
def _doubling_system(n: int) -> Gf2System:
    # row r has a one in column i whenever 2i = r (mod n)
    rows = [0] * n
    for i in range(n):
        rows[(2 * i) % n] |= 1 << i
    return Gf2System(rows, n)


def square_roots(x: Gf2Element) -> RootSpace:
    n = x.modulus
    system = _doubling_system(n)
    sol = system.solve(x.bits)
    kernel = tuple(Gf2Element(n, v) for v in system.kernel_basis())
    if sol is None:
        return RootSpace(n, None, kernel)
    return RootSpace(n, Gf2Element(n, sol), kernel)


def check_witness(
    x: Gf2Element, a: Gf2Element, method: Method = Method.SEARCHED
) -> SWitness | None:
    """Witness record for (x, a) if a certifies x, else None."""
    if x.is_zero() or not is_idempotent(x):
        raise ValueError(f"{x!r} is not a nonzero idempotent")
    if a.is_zero() or a.is_one() or a == x:
        return None
    if square(a) != x:
        return None
    xa = mul(x, a)
    if xa == a:
        return SWitness(a, Law.ABSORB_WITNESS, method)
    if xa == x:
        return SWitness(a, Law.ABSORB_IDEMPOTENT, method)
    return None


def verify_witness(x: Gf2Element, w: SWitness) -> bool:
    """Re-check a witness, including that its recorded law is the one that holds."""
    if x.is_zero() or not is_idempotent(x):
        return False
    b = w.beta
    if b.modulus != x.modulus or b.is_zero() or b.is_one() or b == x:
        return False
    if square(b) != x:
        return False
    target = b if w.law is Law.ABSORB_WITNESS else x
    return mul(x, b) == target


def find_witness(x: Gf2Element, kernel_cap: int = DEFAULT_KERNEL_CAP) -> SWitness | None:
    """Construct or search for a witness.

    Returns None only when the whole root space was searched.  Raises
    :class:`Inconclusive` when the root space is too large and no explicit
    construction covers x.
    """
    if x.is_zero() or not is_idempotent(x):
        raise ValueError(f"{x!r} is not a nonzero idempotent")
    from .constructions import constructive_witness

    w = constructive_witness(x)
    if w is not None:
        return w
    roots = square_roots(x)
    if roots.is_empty:
        return None
    if roots.dim > kernel_cap:
        raise Inconclusive(x, roots.dim, kernel_cap)
    for a in roots:
        w = check_witness(x, a)
        if w is not None:
            return w
    return None


def transfer_complement(x: Gf2Element, w: SWitness) -> tuple[Gf2Element, SWitness]:
    """From a witness for x, build one for 1 + x using 1 + beta."""
    if not verify_witness(x, w):
        raise InvalidWitness(f"{w!r} does not witness {x!r}")
    cx = complement_one(x)
    cb = complement_one(w.beta)
    out = check_witness(cx, cb, method=w.method)
    if out is None:
        raise InvalidWitness(f"1 + beta does not witness 1 + x for x = {x!r}")
    return cx, out


@dataclass(frozen=True)
class Entry:
    idempotent: Gf2Element
    status: Status
    witness: SWitness | None = None
    note: str = ""

    @property
    def is_s(self) -> bool:
        return self.status is Status.S


@dataclass(frozen=True)
class SReport:
    modulus: int
    entries: tuple[Entry, ...]
    total: int
    nontrivial: int
    s_count: int = field(init=False)
    inconclusive: int = field(init=False)

    def __post_init__(self):
        object.__setattr__(self, "s_count", sum(e.is_s for e in self.entries))
        object.__setattr__(
            self,
            "inconclusive",
            sum(e.status is Status.INCONCLUSIVE for e in self.entries),
        )


def classify(n: int, kernel_cap: int = DEFAULT_KERNEL_CAP) -> SReport:
    """Label every nontrivial idempotent of Z2[C_n]."""
    idems = enumerate_idempotents(n)
    entries = []
    for x in nontrivial(idems):
        try:
            w = find_witness(x, kernel_cap)
        except Inconclusive as exc:
            entries.append(Entry(x, Status.INCONCLUSIVE, note=str(exc)))
            continue
        if w is None:
            entries.append(Entry(x, Status.NOT_S))
        else:
            entries.append(Entry(x, Status.S, w))
    return SReport(n, tuple(entries), total=len(idems), nontrivial=len(entries))
