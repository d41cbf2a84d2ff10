"""Integer polynomials in q and the q-analog of Kostant's partition function
restricted to a set of positive roots."""

from __future__ import annotations

import json
import os
import threading
from collections import defaultdict
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Sequence

from .rootsys import (RootSystem, RootVector, Weight, check_int64, check_weight,
                      integral_root_coords)

CACHE_ENV = "QKOSTANT_CACHE_DIR"


def _trim(coeffs: Iterable[int]) -> tuple[int, ...]:
    c = list(coeffs)
    while c and c[-1] == 0:
        c.pop()
    return tuple(check_int64(int(v)) for v in c)


@dataclass(frozen=True)
class QPolynomial:
    """``coeffs[m]`` is the coefficient of ``q**m``; the zero polynomial is ``()``.

    ``truncated`` records that terms above some degree were dropped.
    """

    coeffs: tuple[int, ...] = ()
    truncated: bool = False

    def __post_init__(self):
        object.__setattr__(self, "coeffs", _trim(self.coeffs))

    @classmethod
    def monomial(cls, m: int, c: int = 1) -> "QPolynomial":
        return cls((0,) * m + (c,))

    @classmethod
    def one(cls) -> "QPolynomial":
        return cls((1,))

    @property
    def degree(self) -> int:
        """-1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def low_degree(self) -> int | None:
        return next((m for m, c in enumerate(self.coeffs) if c), None)

    def coeff(self, m: int) -> int:
        return self.coeffs[m] if 0 <= m < len(self.coeffs) else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, QPolynomial):
            return self.coeffs == other.coeffs
        if isinstance(other, int):
            return self.coeffs == _trim((other,))
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other: "QPolynomial") -> "QPolynomial":
        n = max(len(self.coeffs), len(other.coeffs))
        return QPolynomial([self.coeff(m) + other.coeff(m) for m in range(n)],
                           self.truncated or other.truncated)

    def __neg__(self) -> "QPolynomial":
        return QPolynomial([-c for c in self.coeffs], self.truncated)

    def __sub__(self, other: "QPolynomial") -> "QPolynomial":
        return self + (-other)

    def __mul__(self, other) -> "QPolynomial":
        if isinstance(other, int):
            return QPolynomial([c * other for c in self.coeffs], self.truncated)
        out = [0] * max(len(self.coeffs) + len(other.coeffs) - 1, 0)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return QPolynomial(out, self.truncated or other.truncated)

    __rmul__ = __mul__

    def __call__(self, q):
        total = 0
        for c in reversed(self.coeffs):
            total = total * q + c
        return total

    def truncate(self, max_degree: int) -> "QPolynomial":
        if self.degree <= max_degree:
            return self
        return QPolynomial(self.coeffs[:max_degree + 1], True)

    def to_json(self) -> dict:
        return {"coeffs": list(self.coeffs)}

    @classmethod
    def from_json(cls, obj: dict) -> "QPolynomial":
        return cls(tuple(obj["coeffs"]))

    def __str__(self) -> str:
        return self.format()

    def format(self, var: str = "q", latex: bool = False) -> str:
        parts = []
        for m, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if m == 0:
                mono = ""
            elif m == 1:
                mono = var
            else:
                mono = f"{var}^{{{m}}}" if latex else f"{var}^{m}"
            mag = abs(c)
            if mono:
                body = mono if mag == 1 else (f"{mag}{mono}" if latex else f"{mag} {mono}")
            else:
                body = str(mag)
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(parts) if parts else "0"


def _padd(a: tuple[int, ...], b: tuple[int, ...], shift: int) -> tuple[int, ...]:
    """``a + q**shift * b``."""
    n = max(len(a), len(b) + shift)
    out = list(a) + [0] * (n - len(a))
    for j, v in enumerate(b):
        out[j + shift] += v
    return tuple(out)


class PartitionTable:
    """Memoized DP for one ordered root list.

    ``value(i, nu)`` is the generating polynomial of multisets drawn from
    ``roots[i:]`` summing to ``nu`` (root-basis coordinates), graded by size.
    """

    def __init__(self, roots: Sequence[RootVector]):
        self.roots = tuple(tuple(r) for r in roots)
        self.memo: dict[tuple[int, RootVector], tuple[int, ...]] = {}
        self._lock = threading.Lock()
        # coordinates reachable by roots[i:]; outside this support the value is 0
        n = len(self.roots)
        self.support = [frozenset()] * (n + 1)
        acc: set[int] = set()
        for i in range(n - 1, -1, -1):
            acc |= {k for k, c in enumerate(self.roots[i]) if c}
            self.support[i] = frozenset(acc)

    def value(self, i: int, nu: RootVector) -> tuple[int, ...]:
        if not any(nu):
            return (1,)
        if i == len(self.roots):
            return ()
        if any(c and k not in self.support[i] for k, c in enumerate(nu)):
            return ()
        key = (i, nu)
        hit = self.memo.get(key)
        if hit is not None:
            return hit
        alpha = self.roots[i]
        total: tuple[int, ...] = ()
        k = 0
        cur = nu
        while all(c >= 0 for c in cur):
            sub = self.value(i + 1, cur)
            if sub:
                total = _padd(total, sub, k)
            k += 1
            cur = tuple(a - b for a, b in zip(cur, alpha))
        total = _trim(total)
        with self._lock:
            self.memo[key] = total
        return total

    def __call__(self, nu: RootVector) -> tuple[int, ...]:
        if any(c < 0 for c in nu):
            return ()
        return self.value(0, tuple(nu))


_tables: dict[tuple[str, int, tuple[RootVector, ...]], PartitionTable] = {}
_tables_lock = threading.Lock()


def partition_table(rs: RootSystem, xi_plus: Sequence[RootVector]) -> PartitionTable:
    order = rs.root_index
    roots = tuple(sorted((tuple(r) for r in xi_plus), key=lambda r: order[r]))
    key = (rs.series, rs.rank, roots)
    with _tables_lock:
        table = _tables.get(key)
        if table is None:
            table = _tables[key] = PartitionTable(roots)
            _load_persisted(rs, table)
    return table


def _validate_xi(rs: RootSystem, xi_plus: Sequence[RootVector]) -> None:
    if not xi_plus:
        raise ValueError("xi_plus must be nonempty")
    missing = [r for r in xi_plus if tuple(r) not in rs.root_index]
    if missing:
        raise ValueError(f"{missing} are not positive roots of {rs.name}")


def partition_q(rs: RootSystem, xi_plus: Sequence[RootVector], nu: Sequence[int],
                max_degree: int | None = None) -> QPolynomial:
    """Coefficient of q^m counts multisets of m roots from ``xi_plus`` summing to ``nu``.

    ``nu`` is a weight (fundamental coordinates).  Returns zero when ``nu`` is
    outside the integral nonnegative root cone.
    """
    _validate_xi(rs, xi_plus)
    nu = check_weight(rs, nu)
    x = integral_root_coords(rs, nu)
    if x is None or any(c < 0 for c in x):
        return QPolynomial()
    poly = QPolynomial(partition_table(rs, xi_plus)(x))
    return poly if max_degree is None else poly.truncate(max_degree)


def weights_of_degree(rs: RootSystem, xi_plus: Sequence[RootVector], m: int) -> dict[Weight, int]:
    """Every sum of exactly ``m`` roots of ``xi_plus`` with its number of multisets."""
    if m < 0:
        raise ValueError("m must be nonnegative")
    _validate_xi(rs, xi_plus)
    # layers[d] maps root-basis sums of d roots drawn from the roots seen so far
    layers: list[dict[RootVector, int]] = [dict() for _ in range(m + 1)]
    layers[0][(0,) * rs.rank] = 1
    for alpha in xi_plus:
        for d in range(m, 0, -1):
            new = defaultdict(int, layers[d])
            for k in range(1, d + 1):
                for v, c in layers[d - k].items():
                    key = tuple(a + k * b for a, b in zip(v, alpha))
                    new[key] += c
            layers[d] = dict(new)
    return {rs.root_to_weight(v): check_int64(c) for v, c in sorted(layers[m].items())}


# optional persistence of DP tables across runs


def _cache_file(rs: RootSystem, table: PartitionTable) -> Path | None:
    base = os.environ.get(CACHE_ENV)
    if not base:
        return None
    import hashlib

    digest = hashlib.sha256(repr((rs.name, table.roots)).encode()).hexdigest()[:16]
    return Path(base) / f"partition-{rs.name}-{digest}.json"


def _load_persisted(rs: RootSystem, table: PartitionTable) -> None:
    path = _cache_file(rs, table)
    if path is None or not path.exists():
        return
    try:
        data = json.loads(path.read_text())
    except (OSError, ValueError):
        return
    if [list(r) for r in table.roots] != data.get("roots"):
        return
    for i, nu, poly in data.get("memo", []):
        table.memo[(i, tuple(nu))] = tuple(poly)


def save_caches() -> int:
    """Write all DP tables to ``$QKOSTANT_CACHE_DIR``; returns the number written."""
    written = 0
    for (series, rank, _), table in list(_tables.items()):
        from .rootsys import build_root_system

        path = _cache_file(build_root_system(series, rank), table)
        if path is None:
            return 0
        path.parent.mkdir(parents=True, exist_ok=True)
        memo = [[i, list(nu), list(p)] for (i, nu), p in sorted(table.memo.items())]
        path.write_text(json.dumps({"roots": [list(r) for r in table.roots], "memo": memo}))
        written += 1
    return written
