"""Dense GF(2) linear algebra on integer bitmask rows.

Rows are Python ints; bit c is column c.  Echelon form keeps one row per
pivot column, the pivot being the lowest set bit, so reducing a vector by
pivots in increasing column order terminates (XOR never reintroduces a
cleared pivot bit).
"""

from __future__ import annotations


def low_bit(x: int) -> int:
    """Index of the lowest set bit of a nonzero int."""
    return (x & -x).bit_length() - 1


class BitEchelon:
    """Incremental row echelon basis over GF(2)."""

    def __init__(self) -> None:
        self.pivots: dict[int, int] = {}

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def add(self, row: int) -> int:
        """Reduce row against the basis; install and return it if independent.

        Returns 0 when the row was already in the span.
        """
        while row:
            c = low_bit(row)
            held = self.pivots.get(c)
            if held is None:
                self.pivots[c] = row
                return row
            row ^= held
        return 0

    def reduce(self, row: int) -> int:
        """Canonical residue of row modulo the span (pivot bits eliminated)."""
        residue = 0
        while row:
            c = low_bit(row)
            held = self.pivots.get(c)
            if held is None:
                residue |= 1 << c
                row ^= 1 << c
            else:
                row ^= held
        return residue

    def contains(self, row: int) -> bool:
        return self.reduce(row) == 0


def rank_of(rows) -> int:
    """GF(2) rank of an iterable of bitmask rows."""
    ech = BitEchelon()
    for row in rows:
        ech.add(row)
    return ech.rank
