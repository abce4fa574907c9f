"""Self-test harness: every invariant sweep the library relies on.

Each suite checks one family of identities against an independent
computation path and reports a count, a timing, and a minimal reproducer
command line for any failure. The default bounds keep a full run at a few
seconds; the release gate re-runs the heavy suites at larger bounds.
"""

from __future__ import annotations

import itertools
import time
import warnings
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable, Optional

from .cfun import (
    pole_order_pair,
    pole_order_short_blockwise,
    pole_order_short_direct,
)
from .partitions import Bipartition, enumerate_partitions, fmt_ratio
from .rgroup import (
    GluingAmbiguityWarning,
    InductionDatum,
    brute_force_R,
    brute_force_W_xi_xi,
    can_glue,
    d_value,
    glue_strip_geometric,
    r_group,
    restricted_root_system,
)
from .splitting import is_residual_point, residual_partitions, split
from .symbols import (
    PLUS_ZERO,
    SymbolVariant,
    a_m,
    cardinality_check,
    component_group_order_m1,
    interval_count_check,
    intervals,
    similarity_class,
    springer_correspondents,
    symbol,
)

SUITE_NAMES = (
    "example",
    "principal",
    "splitting",
    "gluing",
    "rgroup",
    "pairs",
    "counting",
    "symbols",
)

__all__ = [
    "KNOWN_COUNTING_DEVIATIONS",
    "SUITE_NAMES",
    "Bounds",
    "SuiteResult",
    "run_selftest",
]

# Data (n, m, kappa, mu) where the classical counting identities fail: the
# character class is not 2^d times the seed class, and the interval count is
# not additive. Each row was confirmed by exhaustively enumerating the
# a-maximal choices at every induction step, and the d values are backed by
# the gluing and rgroup suites. The counting suite treats these as pinned
# deviations: they must keep deviating, and nothing else may join them.
# See README, "Counting identity counterexamples".
_H = Fraction(1, 2)
KNOWN_COUNTING_DEVIATIONS = frozenset({
    (5, _H, (2,), (1, 1, 1)),
    (6, _H, (2,), (1, 1, 1, 1)),
    (6, _H, (2, 1), (1, 1, 1)),
    (7, _H, (2,), (1, 1, 1, 1, 1)),
    (7, _H, (2, 1), (1, 1, 1, 1)),
    (7, _H, (4,), (1, 1, 1)),
    (7, _H, (2, 2), (1, 1, 1)),
    (7, _H, (2, 1, 1), (1, 1, 1)),
    (7, Fraction(1), (3,), (1, 1, 1, 1)),
    (7, 3 * _H, (2,), (2, 1, 1, 1)),
    (7, 3 * _H, (2,), (1, 1, 1, 1, 1)),
    (8, _H, (2,), (3, 3)),
    (8, _H, (2,), (1, 1, 1, 1, 1, 1)),
    (8, _H, (2, 1), (1, 1, 1, 1, 1)),
    (8, _H, (4,), (1, 1, 1, 1)),
    (8, _H, (2, 2), (1, 1, 1, 1)),
    (8, _H, (2, 1, 1), (1, 1, 1, 1)),
    (8, _H, (4, 1), (1, 1, 1)),
    (8, _H, (3, 2), (1, 1, 1)),
    (8, _H, (2, 2, 1), (1, 1, 1)),
    (8, _H, (2, 1, 1, 1), (1, 1, 1)),
    (8, Fraction(1), (3,), (1, 1, 1, 1, 1)),
    (8, Fraction(1), (3, 1), (1, 1, 1, 1)),
    (8, 3 * _H, (2,), (3, 1, 1, 1)),
    (8, 3 * _H, (2,), (1, 1, 1, 1, 1, 1)),
    (8, 3 * _H, (2, 1), (2, 1, 1, 1)),
    (8, 3 * _H, (2, 1), (1, 1, 1, 1, 1)),
})


@dataclass(frozen=True)
class Bounds:
    bound_n: int = 6
    bound_l: int = 10
    jobs: int = 1


@dataclass
class SuiteResult:
    name: str
    checked: int = 0
    failures: list = field(default_factory=list)
    notes: list = field(default_factory=list)
    seconds: float = 0.0

    def ok(self) -> bool:
        return not self.failures


def _half_integers(lo: int, hi: int) -> list[Fraction]:
    return [Fraction(k, 2) for k in range(2 * lo, 2 * hi + 1)]


def _check(res: SuiteResult, condition: bool, repro: str) -> None:
    res.checked += 1
    if not condition:
        res.failures.append(repro)


def _valid_data(n: int, ms: Iterable[Fraction]):
    """All induction data with the given rank, quietly labelled."""
    out = []
    for m in ms:
        for k in range(n + 1):
            kappas = enumerate_partitions(k) if k else [()]
            for mu in residual_partitions(n - k, m):
                for kappa in kappas:
                    out.append((n, m, kappa, mu))
    return out


def _datum(n, m, kappa, mu) -> InductionDatum:
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", GluingAmbiguityWarning)
        return InductionDatum(n, m, kappa, mu)


def _repro(n, m, kappa, mu, extra: str = "") -> str:
    ka = ",".join(str(p) for p in kappa)
    mus = ",".join(str(p) for p in mu)
    return f'bhecke rgroup -n {n} -m {fmt_ratio(m)} --kappa "{ka}" --mu "{mus}"{extra}'


def _suite_example(bounds: Bounds, res: SuiteResult) -> None:
    from .report import build_report

    xi = _datum(36, Fraction(3), (11, 7, 4, 3), (4, 3, 2, 1, 1))
    repro = _repro(36, 3, (11, 7, 4, 3), (4, 3, 2, 1, 1))
    started = time.perf_counter()
    rep = build_report(xi)
    elapsed = time.perf_counter() - started
    _check(res, sorted(rep["datum"]["kappa"], reverse=True) == [11, 7, 4, 3], repro)
    _check(res, rep["d"] == 2, repro)
    _check(res, rep["componentCount"] == 4, repro)
    gluable = sorted(lbl["J"][0] for lbl in rep["componentLabels"] if len(lbl["J"]) == 1)
    _check(res, gluable == [7, 11], repro)
    _check(res, all(rep["checks"].values()), repro)
    _check(res, elapsed < 1.0, repro + "  (slower than 1 s)")

    v3 = SymbolVariant("int", Fraction(3))
    seed_sym = symbol(Bipartition((4, 3, 2), (2,)), v3)
    _check(res, (seed_sym.top, seed_sym.bottom) == ((0, 4, 7, 10), (2,)), repro)
    _check(res, len(intervals(seed_sym)) == 5, repro)
    cls = springer_correspondents(xi)
    _check(res, len(cls.members) == 20 and cls.a_value == 153, repro)
    rep_sym = symbol(cls.representative(), v3)
    _check(res, rep_sym.entry_multiset()
           == (0, 2, 3, 4, 6, 6, 8, 10, 11, 13, 15, 16, 18), repro)
    _check(res, len(intervals(rep_sym)) == 7, repro)


def _suite_principal(bounds: Bounds, res: SuiteResult) -> None:
    for n in range(2, 7):
        kappa = (1,) * n
        xi = _datum(n, Fraction(0), kappa, ())
        rs = restricted_root_system(xi)
        repro = _repro(n, 0, kappa, ())
        _check(res, rs.factors == (("D", n),), repro)
        _check(res, d_value(xi) == 1, repro)
        _check(res, r_group(xi).component_count == 2, repro)
        for m in (Fraction(1), Fraction(3, 2), Fraction(2)):
            xi = _datum(n, m, kappa, ())
            repro = _repro(n, m, kappa, ())
            _check(res, d_value(xi) == 0, repro)
            _check(res, r_group(xi).component_count == 1, repro)


def _suite_splitting(bounds: Bounds, res: SuiteResult) -> None:
    top = max(12, bounds.bound_l)
    for l in range(1, top + 1):
        for lam in enumerate_partitions(l):
            for m in _half_integers(0, 6):
                defined = split(lam, m) is not None
                residual = is_residual_point(lam, m)
                lam_s = ",".join(str(p) for p in lam)
                _check(res, defined == residual,
                       f'bhecke split --lam "{lam_s}" -m {fmt_ratio(m)}')


def _gluing_cases(bound_l: int):
    for m in _half_integers(0, 6):
        for l in range(0, bound_l + 1):
            for mu in residual_partitions(l, m):
                yield (mu, m)


def _gluing_chunk(args) -> tuple[int, list[str]]:
    mu, m = args
    checked, failures = 0, []
    for p in range(1, 13):
        glue = can_glue(p, mu, m)
        direct = pole_order_short_direct(p, mu, m)
        blockwise = pole_order_short_blockwise(p, split(mu, m), m)
        geometric = bool(glue_strip_geometric(mu, p, m))
        mu_s = ",".join(str(q) for q in mu)
        repro = f'bhecke rgroup -n {p + sum(mu)} -m {fmt_ratio(m)} --kappa {p} --mu "{mu_s}"'
        for cond in (glue == (direct == 0), glue == geometric, blockwise == direct):
            checked += 1
            if not cond:
                failures.append(repro)
    return checked, failures


def _suite_gluing(bounds: Bounds, res: SuiteResult) -> None:
    cases = list(_gluing_cases(bounds.bound_l))
    for checked, failures in _map_jobs(_gluing_chunk, cases, bounds.jobs):
        res.checked += checked
        res.failures.extend(failures)


def _rgroup_chunk(args) -> tuple[int, list[str]]:
    n, m, kappa, mu = args
    checked, failures = 0, []
    xi = _datum(n, m, kappa, mu)
    rs = restricted_root_system(xi)
    rg = r_group(xi)
    survivors = brute_force_W_xi_xi(xi)
    members = brute_force_R(xi)
    repro = _repro(n, m, kappa, mu, " --oracle")
    images = {g.images for g in members}
    span = {tuple(range(1, n + 1))}
    for k in range(1, len(rg.generators) + 1):
        for combo in itertools.combinations(rg.generators, k):
            w = combo[0]
            for g in combo[1:]:
                w = w * g
            span.add(w.images)
    conds = (
        len(members) == 1 << rg.d,
        images == span,
        all((g * g).is_identity for g in members),
        len(survivors) == rs.weyl_order * (1 << rg.d),
    )
    for cond in conds:
        checked += 1
        if not cond:
            failures.append(repro)
    return checked, failures


def _suite_rgroup(bounds: Bounds, res: SuiteResult) -> None:
    cases = []
    for n in range(1, bounds.bound_n + 1):
        cases.extend(_valid_data(n, _half_integers(0, 4)))
    for checked, failures in _map_jobs(_rgroup_chunk, cases, bounds.jobs):
        res.checked += checked
        res.failures.extend(failures)


def _suite_pairs(bounds: Bounds, res: SuiteResult) -> None:
    for p1 in range(1, 13):
        for p2 in range(1, 13):
            for sign in ("-", "+"):
                _check(res, pole_order_pair(p1, p2, sign) == (1 if p1 == p2 else 0),
                       f"pole_order_pair({p1}, {p2}, {sign!r})")


def _counting_chunk(args) -> tuple[int, list[str], list[tuple]]:
    n, m, kappa, mu = args
    checked, failures, deviations = 0, [], []
    xi = _datum(n, m, kappa, mu)
    repro = _repro(n, m, kappa, mu)
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", GluingAmbiguityWarning)
        conds = [cardinality_check(xi), interval_count_check(xi)]
        if m == 1:
            full = springer_correspondents(xi)
            part = similarity_class(split(mu, m).bipartition, full.variant)
            i_full = len(intervals(symbol(full.representative(), full.variant)))
            i_part = len(intervals(symbol(part.representative(), full.variant)))
            if i_full >= 1 and i_part >= 1:
                quotient = component_group_order_m1(symbol(full.representative(), full.variant)) \
                    / component_group_order_m1(symbol(part.representative(), full.variant))
                conds.append(quotient == 1 << d_value(xi))
    checked += len(conds)
    key = (n, m, kappa, mu)
    if not all(conds):
        if key in KNOWN_COUNTING_DEVIATIONS:
            deviations.append(key)
        else:
            failures.append(repro)
    elif key in KNOWN_COUNTING_DEVIATIONS:
        failures.append(repro + "  (pinned deviation no longer deviates)")
    return checked, failures, deviations


def _suite_counting(bounds: Bounds, res: SuiteResult) -> None:
    cases = []
    for n in range(1, bounds.bound_n + 1):
        for case in _valid_data(n, _half_integers(0, 4)):
            if case[1].denominator <= 2:
                cases.append(case)
    deviated = 0
    for checked, failures, deviations in _map_jobs(_counting_chunk, cases, bounds.jobs):
        res.checked += checked
        res.failures.extend(failures)
        deviated += len(deviations)
    if deviated:
        res.notes.append(f"known deviations: {deviated} "
                         "(documented counting-identity counterexamples)")


def _suite_symbols(bounds: Bounds, res: SuiteResult) -> None:
    bp = Bipartition((2, 1), (3,))
    goldens = [
        (PLUS_ZERO, ((1, 4), (0, 5))),
        (SymbolVariant("minus0", Fraction(0)), ((1, 4), (0, 5))),
        (SymbolVariant("int", Fraction(-2)), ((1, 4), (0, 2, 4, 9))),
        (SymbolVariant("int", Fraction(2)), ((0, 3, 6), (3,))),
    ]
    for variant, rows in goldens:
        s = symbol(bp, variant)
        _check(res, (s.top, s.bottom) == rows,
               f'bhecke symbols --first 2,1 --second 3 -m {variant.label}')
    for n in range(1, 6):
        got = a_m(Bipartition((), (1,) * n), SymbolVariant("int", Fraction(1)))
        _check(res, got == n * n,
               f'bhecke symbols --first "" --second {",".join("1" * n)} -m 1')


_SUITES: dict[str, Callable[[Bounds, SuiteResult], None]] = {
    "example": _suite_example,
    "principal": _suite_principal,
    "splitting": _suite_splitting,
    "gluing": _suite_gluing,
    "rgroup": _suite_rgroup,
    "pairs": _suite_pairs,
    "counting": _suite_counting,
    "symbols": _suite_symbols,
}


def _map_jobs(fn, cases, jobs: int):
    if jobs <= 1 or len(cases) < 2:
        return [fn(c) for c in cases]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(fn, cases, chunksize=max(1, len(cases) // (8 * jobs))))


def run_selftest(suites: Optional[Iterable[str]] = None,
                 bounds: Bounds = Bounds(),
                 emit: Callable[[str], None] = print) -> int:
    """Run the selected suites (all by default); 0 iff everything passed."""
    names = list(suites) if suites else list(SUITE_NAMES)
    for name in names:
        if name not in _SUITES:
            raise ValueError(f"unknown suite {name!r}; choose from {', '.join(SUITE_NAMES)}")
    total_failures = 0
    for name in names:
        res = SuiteResult(name)
        started = time.perf_counter()
        _SUITES[name](bounds, res)
        res.seconds = time.perf_counter() - started
        status = "ok" if res.ok() else "FAIL"
        emit(f"suite {name:<10} {status:<4} {res.checked:6d} checks "
             f"{len(res.failures):3d} failures  {res.seconds:7.2f}s")
        for note in res.notes:
            emit(f"  note: {note}")
        for line in res.failures[:10]:
            emit(f"  reproduce: {line}")
        if len(res.failures) > 10:
            emit(f"  ... {len(res.failures) - 10} more")
        total_failures += len(res.failures)
    emit("selftest: " + ("all suites passed" if not total_failures
                         else f"{total_failures} failures"))
    return 0 if not total_failures else 1
