"""m-symbols, similarity classes, the a_m statistic, and truncated induction.

A bipartition is encoded as a two-row symbol by shifting its increasing parts;
bipartitions whose symbols carry the same entry multiset are similar, and the
pairwise-min statistic a_m drives truncated induction: induce with the Pieri
rule, keep the a_m-maximal constituents, and close under similarity. Interval
counts of the resulting symbols encode component groups, which is where the
reducibility count 2^d resurfaces independently of the root-system picture.
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional

from .partitions import Bipartition, Partition, fmt_ratio
from .rgroup import InductionDatum, d_value
from .splitting import split

__all__ = [
    "CharacterSet",
    "MINUS_ZERO",
    "PLUS_ZERO",
    "Symbol",
    "SymbolVariant",
    "a_m",
    "cardinality_check",
    "component_group_order_m1",
    "interval_count_check",
    "intervals",
    "pieri_induct",
    "similar",
    "similarity_class",
    "springer_correspondents",
    "symbol",
    "truncated_induct",
    "variants_for_m",
]


@dataclass(frozen=True)
class SymbolVariant:
    """Symbol family selector: integer m, one of the two zero forms, or
    half-integer m. The zero forms build numerically identical rows and
    differ only as labels (the classical layout interleaves them
    differently), so consumers compute both and check they agree."""

    kind: str
    m: Fraction

    def __post_init__(self):
        object.__setattr__(self, "m", Fraction(self.m))
        if self.kind in ("plus0", "minus0"):
            if self.m != 0:
                raise ValueError("zero variants require m = 0")
        elif self.kind == "int":
            if self.m.denominator != 1 or self.m == 0:
                raise ValueError(f"integer variant requires a nonzero integer, got {self.m}")
        elif self.kind == "half":
            if self.m.denominator != 2:
                raise ValueError(f"half variant requires m in Z+1/2, got {self.m}")
        else:
            raise ValueError(f"unknown variant kind {self.kind!r}")

    @property
    def label(self) -> str:
        if self.kind == "plus0":
            return "+0"
        if self.kind == "minus0":
            return "-0"
        return fmt_ratio(self.m)


PLUS_ZERO = SymbolVariant("plus0", Fraction(0))
MINUS_ZERO = SymbolVariant("minus0", Fraction(0))


def variants_for_m(m: Fraction) -> tuple[SymbolVariant, ...]:
    """The symbol variants attached to a parameter value; both zero forms at m = 0."""
    mm = Fraction(m)
    if mm == 0:
        return (PLUS_ZERO, MINUS_ZERO)
    if mm.denominator == 1:
        return (SymbolVariant("int", mm),)
    if mm.denominator == 2:
        return (SymbolVariant("half", mm),)
    raise ValueError(f"symbols are defined for half-integer m only, got {mm}")


@dataclass(frozen=True)
class Symbol:
    """Two strictly increasing rows of nonnegative integers."""

    variant: SymbolVariant
    top: tuple[int, ...]
    bottom: tuple[int, ...]

    def entry_multiset(self) -> tuple[int, ...]:
        return tuple(sorted(self.top + self.bottom))


def _padded_lengths(variant: SymbolVariant, len_xi: int, len_eta: int) -> tuple[int, int]:
    if variant.kind == "half":
        half = abs(variant.m) + Fraction(1, 2)
        delta = int(half if variant.m > 0 else -half)
        t = max(len_xi, len_eta + delta)
        return t, t - delta
    mi = int(variant.m)
    b = max(len_eta, len_xi - mi)
    return b + mi, b


def symbol(b: Bipartition, variant: SymbolVariant) -> Symbol:
    """The m-symbol of a bipartition: parts listed increasing, padded with
    zeros to the variant's row-length offset (minimally, so a first part
    stays nonzero whenever possible), top entries shifted by 0,2,4,... and
    bottom entries by the same for whole m or by 1,3,5,... for half m."""
    xi = tuple(sorted(b.first))
    eta = tuple(sorted(b.second))
    t, bb = _padded_lengths(variant, len(xi), len(eta))
    xi = (0,) * (t - len(xi)) + xi
    eta = (0,) * (bb - len(eta)) + eta
    top = tuple(x + 2 * i for i, x in enumerate(xi))
    if variant.kind == "half":
        bottom = tuple(e + 2 * i + 1 for i, e in enumerate(eta))
    else:
        bottom = tuple(e + 2 * i for i, e in enumerate(eta))
    return Symbol(variant=variant, top=top, bottom=bottom)


def _pair_min_sum(values: Iterable[int]) -> int:
    vs = sorted(values)
    return sum(v * (len(vs) - 1 - i) for i, v in enumerate(vs))


def a_m(b: Bipartition, variant: SymbolVariant) -> int:
    """Sum of min(x, y) over unordered pairs of symbol entry positions,
    normalized by the all-zeros symbol of the same padded shape."""
    s = symbol(b, variant)
    base = [2 * i for i in range(len(s.top))]
    if variant.kind == "half":
        base += [2 * i + 1 for i in range(len(s.bottom))]
    else:
        base += [2 * i for i in range(len(s.bottom))]
    return _pair_min_sum(s.top + s.bottom) - _pair_min_sum(base)


def similar(b1: Bipartition, b2: Bipartition, variant: SymbolVariant) -> bool:
    """Whether the two symbols carry the same entries with multiplicities."""
    if b1.weight != b2.weight:
        raise ValueError("similarity compares bipartitions of equal weight")
    return symbol(b1, variant).entry_multiset() == symbol(b2, variant).entry_multiset()


def _decode_member(top: tuple[int, ...], bottom: tuple[int, ...],
                   variant: SymbolVariant) -> Optional[Bipartition]:
    xi = [v - 2 * i for i, v in enumerate(top)]
    if variant.kind == "half":
        eta = [v - (2 * i + 1) for i, v in enumerate(bottom)]
    else:
        eta = [v - 2 * i for i, v in enumerate(bottom)]
    for row in (xi, eta):
        if any(v < 0 for v in row) or any(a > b for a, b in zip(row, row[1:])):
            return None
    return Bipartition(tuple(sorted((v for v in xi if v), reverse=True)),
                       tuple(sorted((v for v in eta if v), reverse=True)))


@dataclass(frozen=True)
class CharacterSet:
    """A similarity-closed set of bipartitions with their common a_m value."""

    members: frozenset
    variant: SymbolVariant
    a_value: int

    def __post_init__(self):
        weights = {b.weight for b in self.members}
        if len(weights) > 1:
            raise ValueError("members must share one total weight")

    @property
    def weight(self) -> int:
        return next(iter(self.members)).weight

    def representative(self) -> Bipartition:
        return min(self.members, key=lambda b: (b.first, b.second))


def similarity_class(b: Bipartition, variant: SymbolVariant) -> CharacterSet:
    """All bipartitions whose symbol has the same entry multiset.

    Enumerated by splitting the multiset into candidate rows (the variant
    pins both padded row lengths) and keeping the splits that decode to a
    bipartition reproducing the multiset, so no scan of all bipartitions of
    that weight is needed.
    """
    target = symbol(b, variant).entry_multiset()
    t = len(symbol(b, variant).top)
    members = set()
    seen = set()
    for pos in itertools.combinations(range(len(target)), t):
        top = tuple(target[i] for i in pos)
        if top in seen:
            continue
        seen.add(top)
        rest = list(target)
        for i in reversed(pos):
            rest.pop(i)
        bottom = tuple(rest)
        if any(a >= c for a, c in zip(top, top[1:])):
            continue
        if any(a >= c for a, c in zip(bottom, bottom[1:])):
            continue
        cand = _decode_member(top, bottom, variant)
        if cand is None:
            continue
        if symbol(cand, variant).entry_multiset() == target:
            members.add(cand)
    return CharacterSet(frozenset(members), variant, a_m(b, variant))


def _horizontal_strip_additions(lam: Partition, k: int) -> list[Partition]:
    """Partitions containing lam with k more boxes, at most one per column."""
    rows = len(lam)
    out = []

    def rec(i: int, remaining: int, acc: tuple[int, ...]):
        if i == rows + 1:
            # one optional new final row, capped by the old last row
            cap = lam[rows - 1] if rows else remaining
            if remaining <= cap:
                final = acc + ((remaining,) if remaining else ())
                out.append(final)
            return
        lo = lam[i - 1]
        hi = lo + remaining if i == 1 else min(lam[i - 2], lo + remaining)
        for c in range(lo, hi + 1):
            rec(i + 1, remaining - (c - lo), acc + (c,))

    rec(1, k, ())
    return out


def pieri_induct(p: int, b: Bipartition) -> list[Bipartition]:
    """Constituents of inducing the trivial character of S_p: all ways to add
    horizontal strips of total size p across the two components."""
    if p < 1:
        raise ValueError("p must be >= 1")
    out = []
    for a in range(p + 1):
        for alpha in _horizontal_strip_additions(b.first, a):
            for beta in _horizontal_strip_additions(b.second, p - a):
                out.append(Bipartition(alpha, beta))
    return sorted(out, key=lambda c: (c.first, c.second))


def truncated_induct(parts: Iterable[int], seed: CharacterSet,
                     variant: SymbolVariant) -> CharacterSet:
    """Fold the strip lengths over the seed: induce each member with the
    Pieri rule, keep the a_m-maximal constituents, and close the final set
    under similarity. Parts are processed in decreasing order; transitivity
    makes the result independent of that choice."""
    if variant != seed.variant:
        raise ValueError("variant mismatch with seed")
    if not seed.members:
        raise ValueError("seed must be nonempty")
    current = set(seed.members)
    for p in sorted(parts, reverse=True):
        candidates = set()
        for b in current:
            candidates.update(pieri_induct(p, b))
        scored = [(a_m(c, variant), c) for c in candidates]
        best = max(s for s, _ in scored)
        current = {c for s, c in scored if s == best}
    closure = set()
    for b in current:
        if b not in closure:
            closure.update(similarity_class(b, variant).members)
    rep = next(iter(closure))
    return CharacterSet(frozenset(closure), variant, a_m(rep, variant))


def springer_correspondents(xi: InductionDatum) -> CharacterSet:
    """Truncated induction of the residual-point class of mu along kappa.

    At m = 0 the computation runs under both zero variants and the two
    results must coincide; the one labelled +0 is returned.
    """
    results = []
    for variant in variants_for_m(xi.m):
        sr = split(xi.mu, xi.m)
        seed = similarity_class(sr.bipartition, variant)
        if xi.kappa:
            results.append(truncated_induct(xi.kappa, seed, variant))
        else:
            results.append(seed)
    if len(results) == 2 and results[0].members != results[1].members:
        raise AssertionError(
            f"zero-variant disagreement for {xi}: "
            f"{results[0].members} vs {results[1].members}")
    return results[0]


def intervals(s: Symbol) -> list[tuple[int, int]]:
    """Maximal runs of consecutive integers among entries occurring exactly
    once. For the m = 1/2 variant a run containing 0 is discarded (entries
    are nonnegative, so such a run is one starting at 0)."""
    counts = Counter(s.top) + Counter(s.bottom)
    once = sorted(v for v, c in counts.items() if c == 1)
    runs: list[list[int]] = []
    for v in once:
        if runs and v == runs[-1][1] + 1:
            runs[-1][1] = v
        else:
            runs.append([v, v])
    if s.variant.kind == "half" and abs(s.variant.m) == Fraction(1, 2):
        runs = [r for r in runs if r[0] != 0]
    return [(lo, hi) for lo, hi in runs]


def interval_count_check(xi: InductionDatum) -> bool:
    """Interval count of the induced class equals that of the mu-part class
    plus the number of gluable strip-length classes."""
    if Fraction(xi.m).denominator > 2:
        raise ValueError("interval counting requires integer or half-integer m")
    full = springer_correspondents(xi)
    i_full = len(intervals(symbol(full.representative(), full.variant)))
    part = split(xi.mu, xi.m).bipartition
    i_part = len(intervals(symbol(part, full.variant)))
    return i_full == i_part + d_value(xi)


def component_group_order_m1(s: Symbol) -> int:
    """Order of the component group read off an m = 1 symbol: one copy of
    Z/2 per interval, restricted to even sums."""
    if not (s.variant.kind == "int" and s.variant.m == 1):
        raise ValueError("component-group order is computed at m = 1 only")
    count = len(intervals(s))
    return 1 << max(count - 1, 0)


def cardinality_check(xi: InductionDatum) -> bool:
    """|induced class| = 2^d * |mu-part class|."""
    full = springer_correspondents(xi)
    part = split(xi.mu, xi.m).bipartition
    part_size = len(similarity_class(part, full.variant).members)
    return len(full.members) == (1 << d_value(xi)) * part_size
