"""The splitting map, residual-point test, and central characters.

The splitting map decomposes the m-tableau of a partition into horizontal
and vertical blocks of consecutive entries, peeling the largest remaining
entry first; it is defined exactly on the partitions whose associated
central character is a residual point, and the root-counting test
`is_residual_point` is the independent oracle for that equivalence.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Optional

from .partitions import (
    Bipartition,
    BoxCoord,
    Partition,
    boxes,
    content,
    enumerate_partitions,
    fmt_ratio,
    is_partition,
    m_tableau,
    strip,
)

__all__ = [
    "Block",
    "CentralCharacter",
    "Orientation",
    "SplitResult",
    "central_character",
    "datum_error",
    "is_residual_point",
    "residual_partitions",
    "split",
    "validate_datum",
]


class Orientation(enum.Enum):
    HORIZONTAL = "horizontal"
    VERTICAL = "vertical"


@dataclass(frozen=True)
class Block:
    """A run of boxes with consecutive entries x, x+1, ..., y.

    Boxes are stored in ascending-entry order: left to right for a
    horizontal block, top to bottom for a vertical one.
    """

    orientation: Orientation
    boxes: tuple[BoxCoord, ...]
    entry_low: Fraction
    entry_high: Fraction

    def __len__(self) -> int:
        return len(self.boxes)


@dataclass(frozen=True)
class SplitResult:
    """Blocks in selection order plus the resulting bipartition.

    The first component of the bipartition collects the horizontal block
    lengths, the second the vertical ones.
    """

    blocks: tuple[Block, ...]
    bipartition: Bipartition


def split(lam: Partition, m: Fraction) -> Optional[SplitResult]:
    """Split the m-tableau of lam into blocks; None when undefined.

    Each step encloses the unique maximal remaining entry into the maximal
    run of consecutive decreasing entries extending leftward (entries above
    the zero diagonal, content+m > 0) or upward (below it). Undefined in
    exactly two cases: the maximal remaining entry is not unique, or a box
    with entry 0 is stranded as a 1x1 block. On every partition whose
    central character is residual these cases do not arise, and on every
    other partition one of them does; `test_split_defined_iff_residual`
    sweeps that equivalence against the root-counting oracle.
    """
    mm = Fraction(m)
    if mm < 0:
        raise ValueError("m must be >= 0")
    tab = m_tableau(lam, mm)
    remaining = set(tab.entries)
    blocks: list[Block] = []

    while remaining:
        top = max(tab.entries[b] for b in remaining)
        argmax = [b for b in remaining if tab.entries[b] == top]
        if len(argmax) > 1:
            return None
        b = argmax[0]
        v = content(b) + mm
        if v == 0:
            return None
        if v > 0:
            step = (0, -1)
            orientation = Orientation.HORIZONTAL
        else:
            step = (-1, 0)
            orientation = Orientation.VERTICAL

        run = [b]
        want = top - 1
        r, c = b
        while True:
            nxt = (r + step[0], c + step[1])
            if nxt not in remaining or tab.entries[nxt] != want:
                break
            run.append(nxt)
            want -= 1
            r, c = nxt

        run.reverse()  # ascending entries: leftmost / topmost first
        remaining.difference_update(run)
        blocks.append(Block(
            orientation=orientation,
            boxes=tuple(run),
            entry_low=tab.entries[run[0]],
            entry_high=tab.entries[run[-1]],
        ))

    xi = tuple(sorted((len(blk) for blk in blocks
                       if blk.orientation is Orientation.HORIZONTAL), reverse=True))
    eta = tuple(sorted((len(blk) for blk in blocks
                        if blk.orientation is Orientation.VERTICAL), reverse=True))
    return SplitResult(blocks=tuple(blocks), bipartition=Bipartition(xi, eta))


def residual_counts(lam: Partition, m: Fraction) -> tuple[int, int]:
    """Pole and zero counts of the root-counting residual test.

    With gamma_i = content + m over the boxes and the full rank-l root
    system (all 2l^2 roots), counts the roots evaluating to their label
    (1 on two-coordinate roots, m on one-coordinate ones) and the roots
    evaluating to zero. At m = 0 a zero one-coordinate value meets both
    counts; the formula is used as written.
    """
    if not lam:
        raise ValueError("lam must be nonempty")
    mm = Fraction(m)
    gamma = [content(box) + mm for box in boxes(lam)]
    poles = zeros = 0
    for gi in gamma:
        for val in (gi, -gi):
            if val == mm:
                poles += 1
            if val == 0:
                zeros += 1
    for gi, gj in combinations(gamma, 2):
        for val in (gi + gj, gi - gj, -gi + gj, -gi - gj):
            if val == 1:
                poles += 1
            if val == 0:
                zeros += 1
    return poles, zeros


def is_residual_point(lam: Partition, m: Fraction) -> bool:
    """Whether the pole count exceeds the zero count by exactly |lam|."""
    poles, zeros = residual_counts(lam, m)
    return poles - zeros == sum(lam)


def residual_partitions(l: int, m: Fraction) -> list[Partition]:
    """All residual partitions of l at parameter m; the empty partition for l = 0."""
    if l == 0:
        return [()]
    return [lam for lam in enumerate_partitions(l) if is_residual_point(lam, m)]


CentralCharacter = tuple[Fraction, ...]


def central_character(kappa: Partition, mu: Partition, m: Fraction) -> CentralCharacter:
    """Exponent vector: strip entries of each kappa part, then content+m over mu.

    Rejects a nonempty mu that is not residual, since only residual points
    carry discrete series.
    """
    mm = Fraction(m)
    if mu and not is_residual_point(mu, mm):
        raise ValueError(f"mu={mu} is not residual at m={mm}")
    out: list[Fraction] = []
    for p in kappa:
        out.extend(strip(p).signed_entries)
    for box in boxes(mu):
        out.append(content(box) + mm)
    return tuple(out)


def datum_error(n: int, m: Fraction, kappa: Partition, mu: Partition) -> Optional[str]:
    """First violated precondition of an induction datum, or None if valid."""
    try:
        mm = Fraction(m)
    except (TypeError, ValueError):
        return f"m={m!r} is not a rational number"
    if mm < 0:
        return f"m={fmt_ratio(mm)} is negative"
    if not isinstance(n, int) or n < 1:
        return f"n={n!r} is not a positive integer"
    if not is_partition(kappa):
        return f"kappa={kappa!r} is not a partition (weakly decreasing positive parts)"
    if not is_partition(mu):
        return f"mu={mu!r} is not a partition (weakly decreasing positive parts)"
    if sum(kappa) + sum(mu) != n:
        return f"|kappa| + |mu| = {sum(kappa)} + {sum(mu)} != n = {n}"
    if mu and not is_residual_point(mu, mm):
        return f"mu={tuple(mu)} is not residual at m={fmt_ratio(mm)}"
    return None


def validate_datum(n: int, m: Fraction, kappa: Partition, mu: Partition) -> bool:
    """True iff (n, m, kappa, mu) describes a valid induction datum."""
    return datum_error(n, m, kappa, mu) is None
