"""GF(2) linear algebra on int bitsets.

A vector of length n is an int whose bit j is coordinate j.  A matrix is a
list of row bitsets.
"""

from __future__ import annotations

from typing import Iterator, Sequence


class Gf2System:
    """Row-reduced matrix that can be solved against many right-hand sides.

    The reduction is done once on ``[M | I]`` so the row operations are
    remembered and each solve only costs one pass over the rows.
    """

    def __init__(self, rows: Sequence[int], n_cols: int):
        self.n_rows = len(rows)
        self.n_cols = n_cols
        width = n_cols
        work = [row | (1 << (width + i)) for i, row in enumerate(rows)]
        col_mask = (1 << width) - 1
        pivots: list[int] = []
        r = 0
        for col in range(n_cols):
            piv = next((i for i in range(r, len(work)) if (work[i] >> col) & 1), None)
            if piv is None:
                continue
            work[r], work[piv] = work[piv], work[r]
            for i in range(len(work)):
                if i != r and (work[i] >> col) & 1:
                    work[i] ^= work[r]
            pivots.append(col)
            r += 1
            if r == len(work):
                break
        self.rank = r
        self.pivots = pivots
        self._reduced = [w & col_mask for w in work]
        self._transform = [w >> width for w in work]

    def solve(self, target: int) -> int | None:
        """One solution x of M x = target, or None when inconsistent."""
        x = 0
        for i, t in enumerate(self._transform):
            bit = (t & target).bit_count() & 1
            if i >= self.rank:
                if bit:
                    return None
            elif bit:
                x |= 1 << self.pivots[i]
        return x

    def kernel_basis(self) -> list[int]:
        pivot_set = set(self.pivots)
        basis = []
        for free in range(self.n_cols):
            if free in pivot_set:
                continue
            v = 1 << free
            for i, pc in enumerate(self.pivots):
                if (self._reduced[i] >> free) & 1:
                    v |= 1 << pc
            basis.append(v)
        return basis


def rank(rows: Sequence[int], n_cols: int) -> int:
    return Gf2System(rows, n_cols).rank


def echelon_by_high_bit(basis: Sequence[int]) -> list[int]:
    """Fully reduced basis where each vector's top bit appears in no other."""
    out: list[int] = []
    for v in basis:
        for b in out:
            if v & (1 << (b.bit_length() - 1)):
                v ^= b
        if v:
            top = 1 << (v.bit_length() - 1)
            out = [b ^ v if b & top else b for b in out]
            out.append(v)
    return sorted(out, key=int.bit_length)


def iter_affine_ascending(particular: int, basis: Sequence[int]) -> Iterator[int]:
    """Elements of particular + span(basis) in ascending integer order."""
    red = echelon_by_high_bit(basis)
    for b in red:
        if particular & (1 << (b.bit_length() - 1)):
            particular ^= b
    d = len(red)
    for c in range(1 << d):
        v = particular
        j = 0
        while c:
            if c & 1:
                v ^= red[j]
            c >>= 1
            j += 1
        yield v
