"""Weyl group enumeration and the chamber search used by Borel-Weil-Bott."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

import numpy as np

from .rootsys import RootSystem, Weight, check_weight, rho

DEFAULT_WEYL_CAP = 200_000

Matrix = tuple[tuple[int, ...], ...]


class WeylCapExceeded(RuntimeError):
    def __init__(self, rs: RootSystem, order: int, cap: int):
        super().__init__(f"|W({rs.name})| = {order} exceeds the enumeration cap {cap}")
        self.order = order
        self.cap = cap


@dataclass(frozen=True)
class WeylElement:
    reduced_word: tuple[int, ...]  # 1-based simple-reflection indices, product left to right
    action: Matrix

    @property
    def length(self) -> int:
        return len(self.reduced_word)

    @property
    def sign(self) -> int:
        return -1 if len(self.reduced_word) % 2 else 1


@dataclass(frozen=True)
class ChamberResult:
    dominant_rep: Weight
    element: WeylElement
    regular: bool


def _matmul(a: Matrix, b: Matrix) -> Matrix:
    n = len(a)
    return tuple(tuple(sum(a[i][k] * b[k][j] for k in range(n)) for j in range(n))
                 for i in range(n))


def word_matrix(rs: RootSystem, word: Sequence[int]) -> Matrix:
    m = tuple(tuple(int(i == j) for j in range(rs.rank)) for i in range(rs.rank))
    for i in word:
        m = _matmul(m, rs.simple_reflection_matrices[i - 1])
    return m


def identity(rs: RootSystem) -> WeylElement:
    return WeylElement((), word_matrix(rs, ()))


def enumerate_weyl(rs: RootSystem, cap: int = DEFAULT_WEYL_CAP) -> list[WeylElement]:
    """All of W, identity first, in order of increasing length."""
    words, mats = _enumerate(rs, cap)
    return [WeylElement(w, tuple(tuple(int(v) for v in row) for row in m))
            for w, m in zip(words, mats)]


def weyl_matrices(rs: RootSystem, cap: int = DEFAULT_WEYL_CAP) -> tuple[np.ndarray, np.ndarray]:
    """Stacked action matrices ``(|W|, r, r)`` and the matching signs."""
    words, mats = _enumerate(rs, cap)
    signs = np.array([-1 if len(w) % 2 else 1 for w in words], dtype=np.int64)
    return mats, signs


@lru_cache(maxsize=32)
def _enumerate(rs: RootSystem, cap: int) -> tuple[list[tuple[int, ...]], np.ndarray]:
    order = rs.weyl_order
    if order > cap:
        raise WeylCapExceeded(rs, order, cap)
    r = rs.rank
    refl = [np.array(m, dtype=np.int64) for m in rs.simple_reflection_matrices]
    start = rho(rs)
    words: list[tuple[int, ...]] = [()]
    mats = [np.eye(r, dtype=np.int64)]
    images = [start]
    seen = {start}
    layer = [0]
    while layer:
        nxt = []
        for idx in layer:
            img = images[idx]
            for i in range(r):
                # s_i w is longer than w exactly when <w rho, alpha_i^vee> > 0
                if img[i] <= 0:
                    continue
                c = img[i]
                new = tuple(img[k] - c * rs.cartan[k][i] for k in range(r))
                if new in seen:
                    continue
                seen.add(new)
                words.append((i + 1,) + words[idx])
                mats.append(refl[i] @ mats[idx])
                images.append(new)
                nxt.append(len(words) - 1)
        layer = nxt
    assert len(words) == order, (len(words), order)
    stack = np.stack(mats)
    stack.setflags(write=False)
    return words, stack


def act(rs: RootSystem, w: WeylElement, lam: Sequence[int]) -> Weight:
    lam = check_weight(rs, lam)
    return tuple(sum(a * b for a, b in zip(row, lam)) for row in w.action)


def sign(w: WeylElement) -> int:
    return w.sign


def longest_element(rs: RootSystem) -> WeylElement:
    return to_dominant_chamber(rs, tuple(-c for c in rho(rs))).element


def to_dominant_chamber(rs: RootSystem, lam: Sequence[int]) -> ChamberResult:
    """Reflect at negative coordinates until dominant.

    The returned element ``w`` satisfies ``act(w, lam) == dominant_rep``; for
    weights on a wall it is one of several valid choices.
    """
    v = list(check_weight(rs, lam))
    steps: list[int] = []
    while True:
        i = next((k for k, c in enumerate(v) if c < 0), None)
        if i is None:
            break
        c = v[i]
        for k in range(rs.rank):
            v[k] -= c * rs.cartan[k][i]
        steps.append(i + 1)
    word = tuple(reversed(steps))
    return ChamberResult(tuple(v), WeylElement(word, word_matrix(rs, word)),
                         all(c > 0 for c in v))
