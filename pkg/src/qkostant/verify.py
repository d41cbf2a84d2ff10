"""Self-verification suite: each acceptance criterion as a function returning
a :class:`CriterionResult`.  Used by ``qkostant verify`` and the test suite."""

from __future__ import annotations

import itertools
import time
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterator

from .characters import bwb_euler, freudenthal, ZERO
from .hilbert import graded_euler_direct, graded_euler_lusztig, hilbert_series
from .lusztig import lusztig_poly
from .parabolic import (is_hermitian_symmetric, nilradical_roots, vanishing_case)
from .qcomb import partition_q
from .rootsys import RootSystem, Weight, build_root_system, root_system, to_root_basis
from .weyl import enumerate_weyl

DEFAULT_TYPES = ("A1", "A2", "A3", "B2", "B3", "C3", "G2", "D4")

EXPONENTS = {"A1": (1,), "A2": (1, 2), "A3": (1, 2, 3), "B2": (1, 3), "B3": (1, 3, 5),
             "G2": (1, 5)}

WEYL_ORDERS = {"A3": 24, "B3": 48, "G2": 12, "D4": 192, "F4": 1152}

ROOT_COUNTS = {"A": lambda n: n * (n + 1) // 2, "B": lambda n: n * n, "C": lambda n: n * n,
               "D": lambda n: n * (n - 1)}
EXCEPTIONAL_ROOT_COUNTS = {"G2": 6, "F4": 24, "E6": 36, "E7": 63, "E8": 120}


@dataclass
class CriterionResult:
    number: int
    name: str
    passed: bool
    detail: str = ""
    seconds: float = 0.0
    checked: int = 0

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return (f"[{status}] criterion {self.number}: {self.name} "
                f"({self.checked} checks, {self.seconds:.1f}s){': ' + self.detail if self.detail else ''}")


@dataclass
class VerifyConfig:
    types: tuple[str, ...] = DEFAULT_TYPES
    height: int = 6
    max_degree: int = 3
    mu_bound: int = 2
    _grid: dict = field(default_factory=dict, repr=False)


def dominant_weights_up_to_height(rs: RootSystem, bound) -> Iterator[Weight]:
    """Dominant weights whose simple-root height is at most ``bound``."""
    fund_heights = [sum(to_root_basis(rs, tuple(int(i == j) for j in range(rs.rank))))
                    for i in range(rs.rank)]

    def rec(i, prefix, used):
        if i == rs.rank:
            yield tuple(prefix)
            return
        k = 0
        while used + k * fund_heights[i] <= bound:
            yield from rec(i + 1, prefix + [k], used + k * fund_heights[i])
            k += 1

    yield from rec(0, [], Fraction(0))


def _below(rs: RootSystem, lam: Weight, mu: Weight) -> bool:
    x = to_root_basis(rs, tuple(a - b for a, b in zip(lam, mu)))
    return all(c.denominator == 1 and c >= 0 for c in x)


def _timed(number: int, name: str, fn: Callable[[], tuple[bool, str, int]]) -> CriterionResult:
    t0 = time.perf_counter()
    try:
        ok, detail, n = fn()
    except Exception as exc:  # reported as a failing criterion, not a crash
        ok, detail, n = False, f"{type(exc).__name__}: {exc}", 0
    return CriterionResult(number, name, ok, detail, time.perf_counter() - t0, n)


def kostant_q1(cfg: VerifyConfig) -> CriterionResult:
    def run():
        n = 0
        for t in cfg.types:
            rs = root_system(t)
            for lam in dominant_weights_up_to_height(rs, cfg.height):
                mults = freudenthal(rs, lam)
                hl = sum(to_root_basis(rs, lam))
                for mu in dominant_weights_up_to_height(rs, hl):
                    if not _below(rs, lam, mu):
                        continue
                    got = lusztig_poly(rs, (), lam, mu)(1)
                    want = mults.get(mu, 0)
                    n += 1
                    if got != want:
                        return False, f"{t} lambda={lam} mu={mu}: m(1)={got}, Freudenthal={want}", n
        return True, "", n

    return _timed(1, "Kostant consistency at q=1", run)


def levi_grid(rs: RootSystem) -> list[tuple[int, ...]]:
    """Borel, all |Pi| = 1, and the Hermitian-symmetric maximal parabolics of rank <= 3."""
    out: list[tuple[int, ...]] = [()]
    if rs.rank > 1:
        out += [(i,) for i in range(1, rs.rank + 1)]
    if rs.rank <= 3:
        for i in range(1, rs.rank + 1):
            levi = tuple(j for j in range(1, rs.rank + 1) if j != i)
            if levi not in out and is_hermitian_symmetric(rs, levi):
                out.append(levi)
    return out


def _grid(cfg: VerifyConfig):
    """(rs, levi, mu, lusztig path, direct path) over the two-path grid, cached."""
    if "rows" not in cfg._grid:
        rows = []
        for t in cfg.types:
            rs = root_system(t)
            for levi in levi_grid(rs):
                for mu in itertools.product(range(cfg.mu_bound + 1), repeat=rs.rank):
                    lus = graded_euler_lusztig(rs, levi, mu, cfg.max_degree)
                    direct = graded_euler_direct(rs, levi, mu, cfg.max_degree)
                    rows.append((rs, levi, mu, lus, direct))
        cfg._grid["rows"] = rows
    return cfg._grid["rows"]


def two_path_identity(cfg: VerifyConfig) -> CriterionResult:
    def run():
        rows = _grid(cfg)
        for rs, levi, mu, lus, direct in rows:
            if lus != direct:
                return False, f"{rs.name} levi={list(levi)} mu={list(mu)} paths differ", len(rows)
        return True, "", len(rows)

    return _timed(2, "two-path identity (Lusztig sum = BWB sum)", run)


def generalized_exponents(cfg: VerifyConfig) -> CriterionResult:
    def run():
        n = 0
        for t, exps in EXPONENTS.items():
            rs = root_system(t)
            theta = rs.root_to_weight(rs.highest_root)
            got = lusztig_poly(rs, (), theta, (0,) * rs.rank)
            want = Counter(exps)
            expected = [want.get(m, 0) for m in range(max(exps) + 1)]
            n += 1
            if list(got.coeffs) != expected:
                return False, f"{t}: m_theta^0 = {got}, expected exponents {exps}", n
        return True, "", n

    return _timed(3, "generalized exponents m_theta^0(q)", run)


def rank_one_hilbert(cfg: VerifyConfig) -> CriterionResult:
    def run():
        rep = hilbert_series(build_root_system("A", 1), (), (0,), 5)
        for m in range(6):
            if rep.series.coefficient(m) != {(2 * m,): 1}:
                return False, f"degree {m}: {rep.series.coefficient(m)}", m + 1
        if rep.dims != (1, 3, 5, 7, 9, 11) or not rep.covered:
            return False, f"dims {rep.dims}, covered {rep.covered}", 6
        return True, "", 7

    return _timed(4, "rank-1 Hilbert series", run)


def positivity(cfg: VerifyConfig) -> CriterionResult:
    def run():
        # the reported series is the Lusztig-path character already computed for criterion 2
        n = 0
        for rs, levi, mu, lus, _ in _grid(cfg):
            if not vanishing_case(rs, levi, mu).covered:
                continue
            n += 1
            bad = [(lam, str(p)) for lam, p in lus.terms.items() if any(c < 0 for c in p.coeffs)]
            if bad:
                return False, f"{rs.name} levi={list(levi)} mu={list(mu)}: {bad[0]}", n
        return True, "", n

    return _timed(5, "positivity under vanishing", run)


def bwb_anchors(cfg: VerifyConfig) -> CriterionResult:
    def run():
        rs = build_root_system("A", 1)
        cases = [((n,), (1, (n,))) for n in range(6)]
        cases.append(((-1,), None))
        cases += [((-n - 2,), (-1, (n,))) for n in range(4)]
        for tau, want in cases:
            got = bwb_euler(rs, tau)
            if want is None:
                if got != ZERO:
                    return False, f"tau={tau}: {got}", len(cases)
            elif (got.sign, got.highest_weight) != want:
                return False, f"tau={tau}: {got}, expected {want}", len(cases)
        return True, "", len(cases)

    return _timed(6, "Borel-Weil-Bott anchors on A1", run)


def _all_types_up_to_rank(r: int) -> list[RootSystem]:
    out = []
    for s, lo in (("A", 1), ("B", 2), ("C", 2), ("D", 4)):
        out += [build_root_system(s, n) for n in range(lo, r + 1)]
    out += [build_root_system("G", 2), build_root_system("F", 4)]
    return out


def structural(cfg: VerifyConfig) -> CriterionResult:
    def run():
        n = 0
        for t, order in WEYL_ORDERS.items():
            n += 1
            got = len(enumerate_weyl(root_system(t)))
            if got != order:
                return False, f"|W({t})| = {got}, expected {order}", n
        types = [build_root_system(s, k) for s in "ABC" for k in range(2, 9)]
        types += [build_root_system("A", 1)] + [build_root_system("D", k) for k in range(4, 9)]
        types += [build_root_system(*p) for p in (("E", 6), ("E", 7), ("E", 8), ("F", 4), ("G", 2))]
        for rs in types:
            n += 1
            want = (EXCEPTIONAL_ROOT_COUNTS.get(rs.name) or ROOT_COUNTS[rs.series](rs.rank))
            if len(rs.positive_roots) != want:
                return False, f"{rs.name}: {len(rs.positive_roots)} positive roots, expected {want}", n
        for rs in _all_types_up_to_rank(4):
            for i in range(1, rs.rank + 1):
                n += 1
                levi = tuple(j for j in range(1, rs.rank + 1) if j != i)
                cominuscule = rs.highest_root[i - 1] == 1
                if is_hermitian_symmetric(rs, levi) != cominuscule:
                    return False, f"{rs.name} maximal parabolic at {i}: abelian test disagrees", n
        return True, "", n

    return _timed(7, "structural tables", run)


def brute_partition_counts(xi, max_size: int) -> Counter:
    """Counter keyed by (root-basis sum, size) over all multisets up to ``max_size``."""
    out: Counter = Counter()
    rank = len(xi[0])
    for size in range(max_size + 1):
        for combo in itertools.combinations_with_replacement(range(len(xi)), size):
            s = tuple(sum(xi[j][k] for j in combo) for k in range(rank))
            out[(s, size)] += 1
    return out


def partition_oracle(cfg: VerifyConfig, types=("A2", "B2", "G2"), height: int = 6,
                     degree: int = 5) -> CriterionResult:
    def run():
        n = 0
        for t in types:
            rs = root_system(t)
            for levi in [()] + [(i,) for i in range(1, rs.rank + 1)]:
                xi = nilradical_roots(rs, levi)
                brute = brute_partition_counts(xi, degree)
                for x in itertools.product(range(height + 1), repeat=rs.rank):
                    if sum(x) > height:
                        continue
                    poly = partition_q(rs, xi, rs.root_to_weight(x), max_degree=degree)
                    for m in range(degree + 1):
                        n += 1
                        if poly.coeff(m) != brute.get((x, m), 0):
                            return (False, f"{t} levi={list(levi)} nu={x} q^{m}: "
                                    f"{poly.coeff(m)} vs {brute.get((x, m), 0)}", n)
        return True, "", n

    return _timed(8, "partition DP vs multiset enumeration", run)


CRITERIA = (kostant_q1, two_path_identity, generalized_exponents, rank_one_hilbert,
            positivity, bwb_anchors, structural, partition_oracle)


def run_all(cfg: VerifyConfig | None = None) -> list[CriterionResult]:
    cfg = cfg or VerifyConfig()
    return [crit(cfg) for crit in CRITERIA]
