"""Root data for the simple types A-G in Bourbaki numbering.

Weights are plain integer tuples in the fundamental-weight basis
(``w[i] = <w, alpha_i^vee>``); root vectors are integer tuples in the
simple-root basis.  The Cartan matrix follows ``C[i][j] = <alpha_j, alpha_i^vee>``,
so a root with simple-root coordinates ``x`` has weight coordinates ``C @ x``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property, lru_cache
from typing import Sequence

Weight = tuple[int, ...]
RootVector = tuple[int, ...]

INT64_MAX = 2**63 - 1

_WEYL_ORDERS_EXCEPTIONAL = {("E", 6): 51840, ("E", 7): 2903040, ("E", 8): 696729600,
                            ("F", 4): 1152, ("G", 2): 12}


class InvalidInput(ValueError):
    """Raised for malformed types, weights or parabolic data."""


class OverflowFailure(ArithmeticError):
    """An intermediate integer left the signed 64-bit range."""


def check_int64(value: int) -> int:
    if not -INT64_MAX - 1 <= value <= INT64_MAX:
        raise OverflowFailure(f"integer {value} exceeds the signed 64-bit range")
    return value


def _dynkin(series: str, rank: int) -> tuple[list[Fraction], list[tuple[int, int]]]:
    """Squared root lengths (long roots = 2) and diagram edges, 0-based."""
    n = rank
    chain = [(i, i + 1) for i in range(n - 1)]
    if series == "A":
        return [Fraction(2)] * n, chain
    if series == "B":
        return [Fraction(2)] * (n - 1) + [Fraction(1)], chain
    if series == "C":
        return [Fraction(1)] * (n - 1) + [Fraction(2)], chain
    if series == "D":
        return [Fraction(2)] * n, [(i, i + 1) for i in range(n - 2)] + [(n - 3, n - 1)]
    if series == "E":
        # 1-3-4-5-6-7-8 with 2 attached to 4
        edges = [(0, 2), (1, 3), (2, 3)] + [(i, i + 1) for i in range(3, n - 1)]
        return [Fraction(2)] * n, edges
    if series == "F":
        return [Fraction(2), Fraction(2), Fraction(1), Fraction(1)], chain
    if series == "G":
        return [Fraction(2, 3), Fraction(2)], chain
    raise InvalidInput(f"unknown series {series!r}")


def validate_type(series: str, rank: int) -> None:
    ok = {
        "A": rank >= 1,
        "B": rank >= 2,
        "C": rank >= 2,
        "D": rank >= 4,
        "E": rank in (6, 7, 8),
        "F": rank == 4,
        "G": rank == 2,
    }.get(series)
    if not ok:
        raise InvalidInput(f"{series}{rank} is not a simple type "
                           "(A_n n>=1, B_n/C_n n>=2, D_n n>=4, E6-E8, F4, G2)")


def parse_type(name: str) -> tuple[str, int]:
    """``'B3'`` -> ``('B', 3)``."""
    name = name.strip()
    if len(name) < 2 or not name[1:].isdigit():
        raise InvalidInput(f"cannot parse root system type {name!r}")
    series, rank = name[0].upper(), int(name[1:])
    validate_type(series, rank)
    return series, rank


def _inverse(matrix: Sequence[Sequence[int]]) -> tuple[tuple[Fraction, ...], ...]:
    n = len(matrix)
    aug = [[Fraction(v) for v in row] + [Fraction(int(i == j)) for j in range(n)]
           for i, row in enumerate(matrix)]
    for col in range(n):
        piv = next(r for r in range(col, n) if aug[r][col] != 0)
        aug[col], aug[piv] = aug[piv], aug[col]
        p = aug[col][col]
        aug[col] = [v / p for v in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [a - f * b for a, b in zip(aug[r], aug[col])]
    return tuple(tuple(row[n:]) for row in aug)


@dataclass(frozen=True)
class RootSystem:
    series: str
    rank: int
    cartan: tuple[tuple[int, ...], ...] = field(compare=False, repr=False)
    positive_roots: tuple[RootVector, ...] = field(compare=False, repr=False)
    highest_root: RootVector = field(compare=False, repr=False)
    simple_reflection_matrices: tuple[tuple[tuple[int, ...], ...], ...] = field(
        compare=False, repr=False)
    root_lengths: tuple[Fraction, ...] = field(compare=False, repr=False)

    @property
    def name(self) -> str:
        return f"{self.series}{self.rank}"

    def __str__(self) -> str:
        return self.name

    @cached_property
    def cartan_inverse(self) -> tuple[tuple[Fraction, ...], ...]:
        return _inverse(self.cartan)

    @cached_property
    def cartan_det(self) -> int:
        # det C = 1 / det C^{-1}; computed from the elimination for exactness
        n = self.rank
        m = [[Fraction(v) for v in row] for row in self.cartan]
        det = Fraction(1)
        for col in range(n):
            piv = next(r for r in range(col, n) if m[r][col] != 0)
            if piv != col:
                m[col], m[piv] = m[piv], m[col]
                det = -det
            det *= m[col][col]
            for r in range(col + 1, n):
                f = m[r][col] / m[col][col]
                m[r] = [a - f * b for a, b in zip(m[r], m[col])]
        assert det.denominator == 1
        return int(det)

    @cached_property
    def cartan_adjugate(self) -> tuple[tuple[int, ...], ...]:
        """``det(C) * C^{-1}``, an integer matrix."""
        d = self.cartan_det
        out = tuple(tuple(v * d for v in row) for row in self.cartan_inverse)
        assert all(v.denominator == 1 for row in out for v in row)
        return tuple(tuple(int(v) for v in row) for row in out)

    @cached_property
    def root_index(self) -> dict[RootVector, int]:
        return {r: i for i, r in enumerate(self.positive_roots)}

    @cached_property
    def root_set(self) -> frozenset[RootVector]:
        pos = set(self.positive_roots)
        return frozenset(pos | {tuple(-c for c in r) for r in pos})

    def simple_root(self, i: int) -> RootVector:
        """0-based index."""
        return tuple(int(j == i) for j in range(self.rank))

    def root_to_weight(self, x: Sequence[int]) -> Weight:
        return tuple(sum(self.cartan[i][j] * x[j] for j in range(self.rank))
                     for i in range(self.rank))

    def inner(self, x: Sequence, y: Sequence) -> Fraction:
        """Invariant form on root-basis vectors (long roots have square 2)."""
        total = Fraction(0)
        for i in range(self.rank):
            if x[i]:
                d = self.root_lengths[i] / 2
                for j in range(self.rank):
                    if y[j]:
                        total += x[i] * y[j] * d * self.cartan[i][j]
        return total

    @cached_property
    def weight_gram(self) -> tuple[int, tuple[tuple[int, ...], ...]]:
        """``(L, G)`` with ``L * (omega_i, omega_j) = G[i][j]`` for integers L, G."""
        from math import lcm

        inv = self.cartan_inverse
        exact = [[inv[j][i] * self.root_lengths[j] / 2 for j in range(self.rank)]
                 for i in range(self.rank)]
        scale = lcm(*(v.denominator for row in exact for v in row))
        return scale, tuple(tuple(int(v * scale) for v in row) for row in exact)

    def weight_inner(self, u: Sequence[int], v: Sequence[int]) -> Fraction:
        """Invariant form on weights in fundamental coordinates."""
        scale, g = self.weight_gram
        total = sum(u[i] * g[i][j] * v[j] for i in range(self.rank) for j in range(self.rank)
                    if u[i] and v[j])
        return Fraction(total, scale)

    @property
    def weyl_order(self) -> int:
        return weyl_group_order(self.series, self.rank)


def weyl_group_order(series: str, rank: int) -> int:
    from math import factorial

    if series == "A":
        return factorial(rank + 1)
    if series in "BC":
        return 2**rank * factorial(rank)
    if series == "D":
        return 2 ** (rank - 1) * factorial(rank)
    return _WEYL_ORDERS_EXCEPTIONAL[(series, rank)]


@lru_cache(maxsize=None)
def build_root_system(series: str, rank: int) -> RootSystem:
    series = series.upper()
    validate_type(series, rank)
    lengths, edges = _dynkin(series, rank)
    form = [[Fraction(0)] * rank for _ in range(rank)]
    for i in range(rank):
        form[i][i] = lengths[i]
    for i, j in edges:
        # single bond: -L/2 for equal lengths L; multiple bond: -1 (long^2 / 2)
        val = -lengths[i] / 2 if lengths[i] == lengths[j] else Fraction(-1)
        form[i][j] = form[j][i] = val
    cartan = tuple(tuple(int(2 * form[i][j] / form[i][i]) for j in range(rank))
                   for i in range(rank))

    simple = [tuple(int(j == i) for j in range(rank)) for i in range(rank)]
    found = set(simple)
    frontier = list(simple)
    while frontier:
        nxt = []
        for beta in frontier:
            for i in range(rank):
                pair = sum(cartan[i][j] * beta[j] for j in range(rank))
                image = tuple(b - pair * int(j == i) for j, b in enumerate(beta))
                if all(c >= 0 for c in image) and any(image) and image not in found:
                    found.add(image)
                    nxt.append(image)
        frontier = nxt
    roots = tuple(sorted(found, key=lambda r: (sum(r), r)))

    refl = []
    for i in range(rank):
        col = [cartan[k][i] for k in range(rank)]
        refl.append(tuple(tuple(int(r == c) - (col[r] if c == i else 0) for c in range(rank))
                          for r in range(rank)))
    return RootSystem(series=series, rank=rank, cartan=cartan, positive_roots=roots,
                      highest_root=roots[-1], simple_reflection_matrices=tuple(refl),
                      root_lengths=tuple(lengths))


def root_system(name: str) -> RootSystem:
    return build_root_system(*parse_type(name))


def check_weight(rs: RootSystem, w: Sequence[int]) -> Weight:
    w = tuple(int(c) for c in w)
    if len(w) != rs.rank:
        raise InvalidInput(f"weight {list(w)} has length {len(w)}, {rs.name} has rank {rs.rank}")
    return w


def to_root_basis(rs: RootSystem, w: Sequence[int]) -> tuple[Fraction, ...]:
    w = check_weight(rs, w)
    inv = rs.cartan_inverse
    return tuple(sum((inv[i][j] * w[j] for j in range(rs.rank)), Fraction(0))
                 for i in range(rs.rank))


def integral_root_coords(rs: RootSystem, w: Sequence[int]) -> RootVector | None:
    """Root-basis coordinates if they are all integers, else ``None``."""
    d = rs.cartan_det
    out = []
    for row in rs.cartan_adjugate:
        s = sum(a * b for a, b in zip(row, w))
        if s % d:
            return None
        out.append(s // d)
    return tuple(out)


def pairing(rs: RootSystem, w: Sequence[int], i: int) -> int:
    """``<w, alpha_i^vee>`` for a 1-based simple-root index ``i``."""
    if not 1 <= i <= rs.rank:
        raise InvalidInput(f"simple-root index {i} out of range 1..{rs.rank}")
    return check_weight(rs, w)[i - 1]


def rho(rs: RootSystem) -> Weight:
    return (1,) * rs.rank


def height(x: Sequence) -> Fraction | int:
    return sum(x)
