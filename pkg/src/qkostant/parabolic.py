"""Standard parabolics P_Pi: nilradical roots, P-dominance and the list of
weights for which higher cohomology of E^* (x) Sym^m is known to vanish."""

from __future__ import annotations

import enum
from typing import Iterable, Sequence

from .rootsys import InvalidInput, RootSystem, RootVector, Weight, check_weight

Levi = tuple[int, ...]  # sorted 1-based simple-root indices


class VanishingCase(str, enum.Enum):
    LINE_BUNDLE_DOMINANT = "LineBundleDominant"
    MINIMAL_PARABOLIC = "MinimalParabolic"
    TWISTED_REGULAR = "TwistedRegular"
    TYPE_A_REGULAR = "TypeARegular"
    HERMITIAN_SYMMETRIC = "HermitianSymmetric"
    UNKNOWN = "Unknown"

    @property
    def covered(self) -> bool:
        return self is not VanishingCase.UNKNOWN


def levi_subset(rs: RootSystem, indices: Iterable[int]) -> Levi:
    """Validate and normalize Pi.  Pi = Delta is not a proper parabolic."""
    levi = tuple(sorted(set(int(i) for i in indices)))
    bad = [i for i in levi if not 1 <= i <= rs.rank]
    if bad:
        raise InvalidInput(f"Levi indices {bad} out of range 1..{rs.rank}")
    if len(levi) == rs.rank:
        raise InvalidInput("Pi = Delta gives P = G, which is not a proper parabolic")
    return levi


def parse_levi(text: str) -> list[int]:
    text = text.strip()
    if not text:
        return []
    try:
        return [int(t) for t in text.split(",")]
    except ValueError:
        raise InvalidInput(f"cannot parse Levi indices {text!r}") from None


def levi_roots(rs: RootSystem, levi: Sequence[int]) -> list[RootVector]:
    """Positive roots supported on Pi."""
    inside = {i - 1 for i in levi}
    return [r for r in rs.positive_roots
            if all(c == 0 for k, c in enumerate(r) if k not in inside)]


def nilradical_roots(rs: RootSystem, levi: Sequence[int]) -> list[RootVector]:
    levi = levi_subset(rs, levi)
    inside = {i - 1 for i in levi}
    return [r for r in rs.positive_roots
            if any(c != 0 for k, c in enumerate(r) if k not in inside)]


def is_p_dominant(rs: RootSystem, levi: Sequence[int], lam: Sequence[int]) -> bool:
    # >= 0 on Pi: the Levi-dominant weights label the simple P-modules
    lam = check_weight(rs, lam)
    return all(lam[i - 1] >= 0 for i in levi)


def is_dominant(lam: Sequence[int]) -> bool:
    return all(c >= 0 for c in lam)


def two_rho_p(rs: RootSystem, levi: Sequence[int]) -> Weight:
    roots = nilradical_roots(rs, levi)
    total = tuple(sum(r[k] for r in roots) for k in range(rs.rank))
    return rs.root_to_weight(total)


def is_hermitian_symmetric(rs: RootSystem, levi: Sequence[int]) -> bool:
    roots = nilradical_roots(rs, levi)
    for a, alpha in enumerate(roots):
        for beta in roots[a:]:
            if tuple(x + y for x, y in zip(alpha, beta)) in rs.root_set:
                return False
    return True


def vanishing_case(rs: RootSystem, levi: Sequence[int], mu: Sequence[int]) -> VanishingCase:
    """First matching entry of the known-vanishing list, or UNKNOWN.

    ``TWISTED_REGULAR`` means ``mu = mu' + 2 rho_P`` with ``mu'`` dominant and
    nonzero on every index of Pi.  The twist is by ``+2 rho_P`` because E^*
    (not E) carries the sections here; with ``-2 rho_P`` already the P^1 case
    ``mu = -2`` would be tagged while ``H^1(P^1, O(-2)) != 0``.
    ``TYPE_A_REGULAR`` reads "dominant regular" as all coordinates >= 1.
    """
    levi = levi_subset(rs, levi)
    mu = check_weight(rs, mu)
    if not is_p_dominant(rs, levi, mu):
        raise InvalidInput(f"mu = {list(mu)} is not P-dominant for Levi {list(levi)}")
    dominant = is_dominant(mu)
    if not levi and dominant:
        return VanishingCase.LINE_BUNDLE_DOMINANT
    if len(levi) == 1 and dominant:
        return VanishingCase.MINIMAL_PARABOLIC
    untwisted = tuple(a - b for a, b in zip(mu, two_rho_p(rs, levi)))
    if is_dominant(untwisted) and all(untwisted[i - 1] != 0 for i in levi):
        return VanishingCase.TWISTED_REGULAR
    if rs.series == "A" and all(c > 0 for c in mu):
        return VanishingCase.TYPE_A_REGULAR
    if dominant and is_hermitian_symmetric(rs, levi):
        return VanishingCase.HERMITIAN_SYMMETRIC
    return VanishingCase.UNKNOWN
