"""Character bookkeeping: Freudenthal multiplicities, Weyl dimensions, duals,
and Euler characteristics of line bundles on G/B."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from .parabolic import is_dominant
from .rootsys import (InvalidInput, RootSystem, Weight, check_int64, check_weight,
                      integral_root_coords, rho)
from .weyl import to_dominant_chamber

WeightCharacter = dict[Weight, int]


@dataclass(frozen=True)
class SignedWeight:
    """``sign * ch V_lam^*``; the zero character has ``sign == 0``."""

    sign: int
    highest_weight: Weight | None

    @property
    def is_zero(self) -> bool:
        return self.sign == 0


ZERO = SignedWeight(0, None)


def _require_dominant(rs: RootSystem, lam: Sequence[int]) -> Weight:
    lam = check_weight(rs, lam)
    if not is_dominant(lam):
        raise InvalidInput(f"lambda = {list(lam)} is not dominant")
    return lam


def weyl_dimension(rs: RootSystem, lam: Sequence[int]) -> int:
    lam = _require_dominant(rs, lam)
    r = rho(rs)
    shifted = tuple(a + b for a, b in zip(lam, r))
    num = Fraction(1)
    for alpha in rs.positive_roots:
        # <v, alpha^vee> is linear in the coroot coordinates of alpha
        coroot = [alpha[i] * rs.root_lengths[i] for i in range(rs.rank)]
        top = sum(c * v for c, v in zip(coroot, shifted))
        bottom = sum(c * v for c, v in zip(coroot, r))
        num *= Fraction(top) / Fraction(bottom)
    if num.denominator != 1:
        raise ArithmeticError(f"Weyl dimension of {lam} is not integral: {num}")
    return check_int64(int(num))


def dual_highest_weight(rs: RootSystem, lam: Sequence[int]) -> Weight:
    """``-w0(lam)``: the dominant representative of ``-lam``."""
    lam = _require_dominant(rs, lam)
    return to_dominant_chamber(rs, tuple(-c for c in lam)).dominant_rep


def _weights_of(rs: RootSystem, lam: Weight) -> list[Weight]:
    """All weights of V_lam, ordered by depth below lam (BFS along simple roots)."""
    simple = [tuple(rs.cartan[k][i] for k in range(rs.rank)) for i in range(rs.rank)]
    dom_ok: dict[Weight, bool] = {}

    def occurs(nu: Weight) -> bool:
        d = to_dominant_chamber(rs, nu).dominant_rep
        if d not in dom_ok:
            x = integral_root_coords(rs, tuple(a - b for a, b in zip(lam, d)))
            dom_ok[d] = x is not None and all(c >= 0 for c in x)
        return dom_ok[d]

    seen = {lam}
    order = [lam]
    queue = deque([lam])
    while queue:
        nu = queue.popleft()
        for a in simple:
            nxt = tuple(x - y for x, y in zip(nu, a))
            if nxt not in seen and occurs(nxt):
                seen.add(nxt)
                order.append(nxt)
                queue.append(nxt)
    return order


@lru_cache(maxsize=256)
def _freudenthal(rs: RootSystem, lam: Weight) -> tuple[tuple[Weight, int], ...]:
    r = rho(rs)
    n = rs.rank
    _, gram = rs.weight_gram

    def form(u, v):  # scaled invariant form; the scale cancels in the recursion
        return sum(u[i] * gram[i][j] * v[j] for i in range(n) if u[i] for j in range(n))

    weights = _weights_of(rs, lam)
    # process in order of increasing height of lam - nu so every nu + k alpha is done
    depth = {nu: sum(integral_root_coords(rs, tuple(a - b for a, b in zip(lam, nu))))
             for nu in weights}
    weights.sort(key=lambda nu: (depth[nu], nu))
    pos_weights = [rs.root_to_weight(a) for a in rs.positive_roots]
    lr = tuple(a + b for a, b in zip(lam, r))
    top = form(lr, lr)
    mult: dict[Weight, int] = {lam: 1}
    for nu in weights[1:]:
        nr = tuple(a + b for a, b in zip(nu, r))
        denom = top - form(nr, nr)
        total = 0
        for a in pos_weights:
            cur = tuple(x + y for x, y in zip(nu, a))
            while cur in mult:
                total += mult[cur] * form(cur, a)
                cur = tuple(x + y for x, y in zip(cur, a))
        m, rem = divmod(2 * total, denom)
        if rem:
            raise ArithmeticError(f"non-integral Freudenthal multiplicity at {nu}")
        if m:
            mult[nu] = check_int64(m)
    return tuple(sorted(mult.items()))


def freudenthal(rs: RootSystem, lam: Sequence[int]) -> WeightCharacter:
    """Weight multiplicities of V_lam by Freudenthal's recursion."""
    lam = _require_dominant(rs, lam)
    return dict(_freudenthal(rs, lam))


def character_to_json(ch: WeightCharacter) -> list[dict]:
    return [{"weight": list(w), "mult": m} for w, m in sorted(ch.items(), reverse=True)]


def bwb_euler(rs: RootSystem, tau: Sequence[int]) -> SignedWeight:
    """Euler characteristic of L_{-tau} on G/B as ``sign * ch V_lam^*``.

    Dominant ``tau`` gives ``(+1, tau)``; ``tau + rho`` on a wall gives ZERO.
    """
    tau = check_weight(rs, tau)
    chamber = to_dominant_chamber(rs, tuple(a + 1 for a in tau))
    if not chamber.regular:
        return ZERO
    lam = tuple(c - 1 for c in chamber.dominant_rep)
    return SignedWeight(chamber.element.sign, lam)
