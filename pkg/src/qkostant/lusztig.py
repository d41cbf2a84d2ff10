"""Parabolic Lusztig q-analog of Kostant's weight multiplicity formula."""

from __future__ import annotations

from functools import lru_cache
from typing import Sequence

import numpy as np

from .parabolic import is_dominant, levi_subset, nilradical_roots
from .qcomb import QPolynomial, _padd, partition_table
from .rootsys import InvalidInput, OverflowFailure, RootSystem, check_weight, rho
from .weyl import DEFAULT_WEYL_CAP, weyl_matrices


@lru_cache(maxsize=64)
def _nilradical(rs: RootSystem, levi: tuple[int, ...]):
    return tuple(nilradical_roots(rs, levi))


def weyl_sum_arguments(rs: RootSystem, lam: Sequence[int], mu: Sequence[int],
                       cap: int = DEFAULT_WEYL_CAP) -> list[tuple[int, tuple[int, ...]]]:
    """``(sgn w, root coords of w(lam+rho) - mu - rho)`` for the terms that can
    be nonzero, i.e. whose argument lies in the integral nonnegative root cone."""
    mats, signs = weyl_matrices(rs, cap)
    r = rho(rs)
    shifted = np.array([a + b for a, b in zip(lam, r)], dtype=np.int64)
    offset = np.array([a + b for a, b in zip(mu, r)], dtype=np.int64)
    bound = max(int(np.abs(shifted).max(initial=0)), int(np.abs(offset).max(initial=0)))
    # Weyl-matrix and adjugate entries are small; 2**40 leaves ample int64 headroom
    if bound > 2**40:
        raise OverflowFailure("weights too large for the vectorized Weyl sum")
    args = mats @ shifted - offset
    adj = np.array(rs.cartan_adjugate, dtype=np.int64)
    scaled = args @ adj.T
    det = rs.cartan_det
    ok = np.all(scaled >= 0, axis=1) & np.all(scaled % det == 0, axis=1)
    coords = scaled[ok] // det
    return [(int(s), tuple(int(c) for c in row)) for s, row in zip(signs[ok], coords)]


def lusztig_poly(rs: RootSystem, levi: Sequence[int], lam: Sequence[int], mu: Sequence[int],
                 cap: int = DEFAULT_WEYL_CAP) -> QPolynomial:
    """``m_lam^mu(P; q) = sum_w sgn(w) P_{P,q}(w(lam+rho) - mu - rho)``.

    ``lam`` must be dominant; ``mu`` is arbitrary.
    """
    levi = levi_subset(rs, levi)
    lam = check_weight(rs, lam)
    mu = check_weight(rs, mu)
    if not is_dominant(lam):
        raise InvalidInput(f"lambda = {list(lam)} is not dominant")
    table = partition_table(rs, _nilradical(rs, levi))
    plus: tuple[int, ...] = ()
    minus: tuple[int, ...] = ()
    # terms sorted so the sum is independent of enumeration order
    for s, x in sorted(weyl_sum_arguments(rs, lam, mu, cap)):
        val = table(x)
        if not val:
            continue
        if s > 0:
            plus = _padd(plus, val, 0)
        else:
            minus = _padd(minus, val, 0)
    n = max(len(plus), len(minus))
    return QPolynomial([(plus[m] if m < len(plus) else 0) - (minus[m] if m < len(minus) else 0)
                        for m in range(n)])
