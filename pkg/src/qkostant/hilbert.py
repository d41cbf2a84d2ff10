"""Graded Euler character of E_mu^* on G/P, computed two independent ways,
and the Hilbert series of nearly holomorphic sections it yields."""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from typing import Sequence

from .characters import bwb_euler, dual_highest_weight, weyl_dimension
from .lusztig import _nilradical, lusztig_poly
from .parabolic import VanishingCase, is_p_dominant, levi_subset, vanishing_case
from .qcomb import QPolynomial, weights_of_degree
from .rootsys import InvalidInput, RootSystem, Weight, check_int64, check_weight
from .weyl import DEFAULT_WEYL_CAP


class IdentityViolation(AssertionError):
    """The two evaluations of the graded Euler character disagree."""


@dataclass(frozen=True)
class GradedCharacter:
    """``sum_lam terms[lam](q) * ch V_lam^*`` truncated above ``q**max_degree``."""

    rs: RootSystem
    terms: dict[Weight, QPolynomial]
    max_degree: int

    def __eq__(self, other):
        if not isinstance(other, GradedCharacter):
            return NotImplemented
        return (self.rs == other.rs and self.max_degree == other.max_degree
                and self.terms == other.terms)

    def coefficient(self, m: int) -> dict[Weight, int]:
        """The degree-``m`` part as a virtual sum of irreducibles."""
        return {lam: p.coeff(m) for lam, p in self.terms.items() if p.coeff(m)}

    def sorted_terms(self) -> list[tuple[Weight, QPolynomial]]:
        return sorted(self.terms.items(), key=lambda kv: (sum(kv[0]), kv[0]))


@dataclass(frozen=True)
class HilbertReport:
    rs: RootSystem
    levi: tuple[int, ...]
    mu: Weight
    series: GradedCharacter
    vanishing: VanishingCase
    dims: tuple[int, ...]

    @property
    def covered(self) -> bool:
        return self.vanishing.covered


def _prepare(rs, levi, mu, max_degree):
    levi = levi_subset(rs, levi)
    mu = check_weight(rs, mu)
    if not is_p_dominant(rs, levi, mu):
        raise InvalidInput(f"mu = {list(mu)} is not P-dominant for Levi {list(levi)}")
    if max_degree < 0:
        raise InvalidInput("max_degree must be nonnegative")
    return levi, mu


def _tau_support(rs: RootSystem, levi, mu: Weight, max_degree: int):
    xi = _nilradical(rs, levi)
    for m in range(max_degree + 1):
        for sigma, count in weights_of_degree(rs, xi, m).items():
            yield m, tuple(a + b for a, b in zip(mu, sigma)), count


def graded_euler_direct(rs: RootSystem, levi: Sequence[int], mu: Sequence[int],
                        max_degree: int) -> GradedCharacter:
    """Sum of P_{P,q}(tau - mu) * chi(G/B, L_{-tau}) over tau, with BWB for each term."""
    levi, mu = _prepare(rs, levi, mu, max_degree)
    acc: dict[Weight, list[int]] = defaultdict(lambda: [0] * (max_degree + 1))
    for m, tau, count in _tau_support(rs, levi, mu, max_degree):
        e = bwb_euler(rs, tau)
        if e.is_zero:
            continue
        acc[e.highest_weight][m] += e.sign * count
    terms = {lam: QPolynomial(c) for lam, c in acc.items()}
    return GradedCharacter(rs, {k: v for k, v in terms.items() if v}, max_degree)


def candidate_weights(rs: RootSystem, levi: Sequence[int], mu: Sequence[int],
                      max_degree: int) -> list[Weight]:
    """Dominant lam that can carry a nonzero coefficient up to ``max_degree``."""
    levi, mu = _prepare(rs, levi, mu, max_degree)
    out = set()
    for _, tau, _ in _tau_support(rs, levi, mu, max_degree):
        e = bwb_euler(rs, tau)
        if not e.is_zero:
            out.add(e.highest_weight)
    return sorted(out)


def graded_euler_lusztig(rs: RootSystem, levi: Sequence[int], mu: Sequence[int],
                         max_degree: int, cap: int = DEFAULT_WEYL_CAP) -> GradedCharacter:
    """``sum_lam m_lam^mu(P; q) ch V_lam^*`` truncated at ``max_degree``."""
    levi, mu = _prepare(rs, levi, mu, max_degree)
    terms = {}
    for lam in candidate_weights(rs, levi, mu, max_degree):
        p = lusztig_poly(rs, levi, lam, mu, cap).truncate(max_degree)
        if p:
            terms[lam] = QPolynomial(p.coeffs)
    return GradedCharacter(rs, terms, max_degree)


def dimension_series(gc: GradedCharacter) -> tuple[int, ...]:
    """``dims[m] = sum_lam [q^m] c_lam * dim V_lam^*``."""
    dims = [0] * (gc.max_degree + 1)
    for lam, poly in gc.terms.items():
        d = weyl_dimension(gc.rs, dual_highest_weight(gc.rs, lam))
        for m in range(gc.max_degree + 1):
            dims[m] += poly.coeff(m) * d
    return tuple(check_int64(v) for v in dims)


def hilbert_series(rs: RootSystem, levi: Sequence[int], mu: Sequence[int], max_degree: int,
                   check: str = "always", cap: int = DEFAULT_WEYL_CAP) -> HilbertReport:
    """Euler character of E_mu^* with its vanishing classification.

    When the vanishing case is known the series is the Hilbert series of the
    degree filtration on nearly holomorphic sections; otherwise it is only the
    Euler character.  ``check`` is ``"always"``, ``"sampled"`` (compare the two
    paths up to degree 1) or ``"never"``.
    """
    levi, mu = _prepare(rs, levi, mu, max_degree)
    series = graded_euler_lusztig(rs, levi, mu, max_degree, cap)
    if check != "never":
        if check == "always":
            depth, ref = max_degree, series
        elif check == "sampled":
            depth = min(max_degree, 1)
            ref = graded_euler_lusztig(rs, levi, mu, depth, cap)
        else:
            raise ValueError(f"unknown check mode {check!r}")
        direct = graded_euler_direct(rs, levi, mu, depth)
        if direct != ref:
            raise IdentityViolation(
                f"{rs.name} Levi {list(levi)} mu {list(mu)}: Lusztig and direct "
                f"Euler characters differ up to degree {depth}")
    return HilbertReport(rs, levi, mu, series, vanishing_case(rs, levi, mu), dimension_series(series))
