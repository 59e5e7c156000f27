"""Scalar arithmetic over the two-element field.

Scalars are plain ints 0/1: addition is XOR, multiplication is AND.  The
only nontrivial content here is the expansion of (u - a)^(-r) as a series
in u^(-1), whose coefficients are binomials reduced mod 2.  These rows
drive the recentering u -> u - a of truncated series elsewhere.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import OrderCapError


def binom_mod2(n: int, k: int) -> int:
    """Binomial coefficient C(n, k) mod 2, by Lucas: 1 iff k's bits lie in n's."""
    if n < 0 or k < 0:
        raise ValueError("binom_mod2 needs nonnegative arguments")
    return 1 if (k & n) == k else 0


@dataclass(frozen=True)
class ShiftRow:
    """Coefficients of (u - a)^(-r) = sum_k C(r+k-1, k) a^k u^(-r-k), mod 2.

    coeffs[k] is the coefficient of u^(-r-k), listed while r + k stays
    within the order cap.  The shift is reduced mod 2 on entry, so even
    shifts collapse to the identity row and every odd shift acts like 1.
    """

    r: int
    a: int
    coeffs: tuple[int, ...]


def shift_expansion(r: int, a: int, order: int) -> ShiftRow:
    """Expansion row for (u - a)^(-r) truncated at u^(-order)."""
    if r < 1:
        raise ValueError("series exponent r must be positive")
    if r > order:
        raise OrderCapError(f"shift_expansion: r={r} exceeds order cap {order}")
    a %= 2
    if a == 0:
        coeffs = (1,) + (0,) * (order - r)
    else:
        coeffs = tuple(binom_mod2(r + k - 1, k) for k in range(order - r + 1))
    return ShiftRow(r, a, coeffs)
