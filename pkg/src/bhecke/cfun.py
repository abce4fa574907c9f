"""Pole orders of restricted c-function factors by exact exponent counting.

Every factor is (1 - q1^a) for an exact rational exponent a, with q1 generic
(transcendental > 1), so a factor vanishes iff a = 0 and the pole order of a
quotient of such products is a matter of counting zero exponents. The
accompanying (1 + q^...theta) factors never vanish at real positive points
and are not materialized.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .partitions import Partition, m_tableau, strip
from .splitting import SplitResult

__all__ = [
    "FactorProduct",
    "order",
    "pole_order_A_part",
    "pole_order_block",
    "pole_order_pair",
    "pole_order_short_blockwise",
    "pole_order_short_direct",
]


@dataclass(frozen=True)
class FactorProduct:
    """Quotient of products of (1 - q1^a): exponent multisets for num and den."""

    numerator_exponents: tuple[Fraction, ...]
    denominator_exponents: tuple[Fraction, ...]


def order(fp: FactorProduct) -> int:
    """Pole order at the evaluation point: zero denominators minus zero numerators."""
    return (list(fp.denominator_exponents).count(0)
            - list(fp.numerator_exponents).count(0))


def _pair_factors(p1: int, p2: int, sign: str) -> FactorProduct:
    z1 = Fraction(p1 - 1, 2)
    z2 = Fraction(p2 - 1, 2)
    num, den = [], []
    for d1 in range(1, p1 + 1):
        for d2 in range(1, p2 + 1):
            if sign == "+":
                e = -z1 + (d1 - 1) - z2 + (d2 - 1)
            else:
                e = z1 - z2 - (d1 - d2)
            num.append(e - 1)
            den.append(e)
    return FactorProduct(tuple(num), tuple(den))


def pole_order_pair(p1: int, p2: int, sign: str) -> int:
    """Pole order of the two-factor-class product for strips of lengths p1, p2.

    Both sign choices give 1 when p1 = p2 and 0 otherwise; for p1 + p2 odd
    every exponent is a half-integer and nothing vanishes.
    """
    if p1 < 1 or p2 < 1:
        raise ValueError("strip lengths must be >= 1")
    if sign not in ("+", "-"):
        raise ValueError(f"sign must be '+' or '-', got {sign!r}")
    return order(_pair_factors(p1, p2, sign))


def _a_part_factors(p: int, m: Fraction) -> FactorProduct:
    z = Fraction(p - 1, 2)
    num, den = [], []
    for d in range(1, p + 1):
        num.append(-m - z + (d - 1))
        den.append(-z + (d - 1))
    for d1, d2 in combinations(range(1, p + 1), 2):
        num.append(Fraction(-p + d1 + d2 - 2))
        den.append(Fraction(-p + d1 + d2 - 1))
    return FactorProduct(tuple(num), tuple(den))


def pole_order_A_part(p: int, m: Fraction) -> int:
    """Pole order of the strip-only part: 0 iff m lies in {(p-1)/2, (p-3)/2, ...}."""
    if p < 1:
        raise ValueError("strip length must be >= 1")
    return order(_a_part_factors(p, Fraction(m)))


def _interaction_factors(p: int, mu: Partition, m: Fraction) -> FactorProduct:
    entries = m_tableau(mu, m).entry_multiset()
    num, den = [], []
    for e in strip(p).signed_entries:
        for ep in entries:
            den.append(-e + ep)
            den.append(-e - ep)
            num.append(-1 - e + ep)
            num.append(-1 - e - ep)
    return FactorProduct(tuple(num), tuple(den))


def pole_order_short_direct(p: int, mu: Partition, m: Fraction) -> int:
    """Pole order of the full short-root product, oblivious to block structure.

    Strip-only factors plus, for each (strip box, tableau box) pair, the two
    interaction quotients with exponents -e(box) +- entry(box'); a zero entry
    makes the two coincide and is thereby counted twice, as required.
    """
    mm = Fraction(m)
    a = _a_part_factors(p, mm)
    inter = _interaction_factors(p, mu, mm)
    full = FactorProduct(a.numerator_exponents + inter.numerator_exponents,
                         a.denominator_exponents + inter.denominator_exponents)
    return order(full)


def pole_order_block(p: int, block: tuple[Fraction, Fraction]) -> int:
    """Pole order contributed by one block with entries x, x+1, ..., y.

    -1 when z = x-1, +1 when z = y, else 0, where z = (p-1)/2; everything is
    0 when z - x is not an integer. One clipped corner: for z = 0 against a
    block starting at 0 the generic pole/zero pairing breaks down (the zero
    factors it expects would need strip entries +-1, which a length-1 strip
    lacks) and the surviving count is +1. Matches the direct factor count of
    pole_order_short_direct blockwise; the equivalence sweep enforces it.
    """
    x, y = Fraction(block[0]), Fraction(block[1])
    if not 0 <= x <= y:
        raise ValueError(f"block entries must satisfy 0 <= x <= y, got {block}")
    z = Fraction(p - 1, 2)
    if (z - x).denominator != 1:
        return 0
    if z == x - 1:
        return -1
    if z == y:
        return 1
    if z == 0 and x == 0:
        return 1
    return 0


def pole_order_short_blockwise(p: int, split_result: SplitResult, m: Fraction) -> int:
    """Blockwise short-root pole order: strip part plus one term per block."""
    total = pole_order_A_part(p, Fraction(m))
    for blk in split_result.blocks:
        total += pole_order_block(p, (blk.entry_low, blk.entry_high))
    return total
