import itertools

import pytest

from qkostant.characters import weyl_dimension
from qkostant.hilbert import (GradedCharacter, IdentityViolation, candidate_weights,
                              dimension_series, graded_euler_direct, graded_euler_lusztig,
                              hilbert_series)
from qkostant.parabolic import VanishingCase
from qkostant.qcomb import QPolynomial
from qkostant.rootsys import InvalidInput, root_system


def terms(gc):
    return {lam: list(p.coeffs) for lam, p in gc.terms.items()}


def test_rank_one():
    a1 = root_system("A1")
    expected = {(0,): [1], (2,): [0, 1], (4,): [0, 0, 1]}
    assert terms(graded_euler_lusztig(a1, [], (0,), 2)) == expected
    assert terms(graded_euler_direct(a1, [], (0,), 2)) == expected
    assert terms(graded_euler_direct(a1, [], (1,), 1)) == {(1,): [1], (3,): [0, 1]}


def test_a2_examples():
    a2 = root_system("A2")
    assert terms(graded_euler_lusztig(a2, [], (0, 0), 1)) == {(0, 0): [1], (1, 1): [0, 1]}
    # tau runs over (0,1) + {alpha_2, alpha_1 + alpha_2} = (-1,3), (1,2);
    # (-1,3) + rho = (0,4) is singular, (1,2) is dominant
    direct = graded_euler_direct(a2, [1], (0, 1), 1)
    assert terms(direct) == {(0, 1): [1], (1, 2): [0, 1]}
    assert direct == graded_euler_lusztig(a2, [1], (0, 1), 1)


@pytest.mark.parametrize("name,levi,mu", [("A2", [], (0, 1)), ("B3", [1], (0, 1, 0)),
                                          ("G2", [2], (1, 0)), ("D4", [], (1, 0, 0, 0))])
def test_degree_zero_is_borel_weil(name, levi, mu):
    rs = root_system(name)
    gc = graded_euler_lusztig(rs, levi, mu, 0)
    assert terms(gc) == {mu: [1]}
    assert dimension_series(gc) == (weyl_dimension(rs, mu),)


# beyond the acceptance grid: Levi subsets of size >= 2 and non-dominant P-dominant mu
EXTRA = [("A3", [1, 3], (0, -1, 0)), ("A3", [1, 2], (1, 0, -2)), ("B3", [1, 2], (0, 1, -1)),
         ("B3", [2, 3], (-1, 0, 0)), ("C3", [1, 3], (1, -1, 1)), ("D4", [1, 3, 4], (1, -1, 0, 2)),
         ("D4", [2], (-1, 1, -2, 0)), ("G2", [1], (1, -2)), ("B2", [2], (-3, 1))]


@pytest.mark.parametrize("name,levi,mu", EXTRA)
def test_two_paths_agree_off_grid(name, levi, mu):
    rs = root_system(name)
    assert graded_euler_lusztig(rs, levi, mu, 3) == graded_euler_direct(rs, levi, mu, 3)


def test_truncations_are_prefixes():
    rs = root_system("B3")
    full = graded_euler_lusztig(rs, [2], (1, 0, 1), 3)
    for m in range(3):
        part = graded_euler_lusztig(rs, [2], (1, 0, 1), m)
        want = {lam: p.truncate(m).coeffs for lam, p in full.terms.items()}
        assert terms(part) == {lam: list(c) for lam, c in want.items() if c}


def test_candidates_cover_support():
    rs = root_system("C3")
    gc = graded_euler_direct(rs, [], (1, 0, 1), 2)
    assert set(gc.terms) <= set(candidate_weights(rs, [], (1, 0, 1), 2))


def test_hilbert_report_rank_one():
    rep = hilbert_series(root_system("A1"), [], (0,), 5)
    assert rep.dims == (1, 3, 5, 7, 9, 11)
    assert rep.covered and rep.vanishing is VanishingCase.LINE_BUNDLE_DOMINANT
    assert all(b - a == 2 for a, b in zip(rep.dims, rep.dims[1:]))


def test_hilbert_report_a2():
    rep = hilbert_series(root_system("A2"), [], (0, 0), 2)
    assert rep.series.coefficient(0) == {(0, 0): 1}
    assert rep.covered
    assert all(c >= 0 for p in rep.series.terms.values() for c in p.coeffs)
    # degree m part is the coordinate ring of the nilpotent cone: sl3 adjoint in degree 1
    assert rep.dims[:2] == (1, 8)


def test_hilbert_uncovered():
    rep = hilbert_series(root_system("B2"), [1], (0, -1), 3)
    assert not rep.covered and rep.vanishing is VanishingCase.UNKNOWN
    assert rep.series.terms
    assert rep.series.coefficient(0) == {}


def test_hilbert_modes_and_errors():
    rs = root_system("A2")
    a = hilbert_series(rs, [1], (1, 2), 2, check="sampled")
    b = hilbert_series(rs, [1], (1, 2), 2, check="never")
    assert a.series == b.series
    with pytest.raises(ValueError):
        hilbert_series(rs, [1], (1, 2), 2, check="sometimes")
    with pytest.raises(InvalidInput):
        hilbert_series(rs, [1], (-1, 2), 2)
    with pytest.raises(InvalidInput):
        hilbert_series(rs, [], (0, 0), -1)


def test_identity_violation_is_loud(monkeypatch):
    import qkostant.hilbert as h

    rs = root_system("A1")
    real = h.graded_euler_direct

    def broken(*args, **kw):
        gc = real(*args, **kw)
        return GradedCharacter(gc.rs, {**gc.terms, (0,): QPolynomial((2,))}, gc.max_degree)

    monkeypatch.setattr(h, "graded_euler_direct", broken)
    with pytest.raises(IdentityViolation):
        h.hilbert_series(rs, [], (0,), 2)


def test_dimension_series_empty_and_dims_invariant():
    rs = root_system("G2")
    assert dimension_series(GradedCharacter(rs, {}, 3)) == (0, 0, 0, 0)
    rep = hilbert_series(rs, [1], (1, 1), 2)
    for m in range(3):
        assert rep.dims[m] == sum(c * weyl_dimension(rs, lam)
                                  for lam, c in rep.series.coefficient(m).items())


@pytest.mark.parametrize("name", ["A2", "B2", "G2"])
def test_positivity_when_covered(name):
    rs = root_system(name)
    for levi in ([], [1], [2]):
        for mu in itertools.product(range(-1, 3), repeat=2):
            if any(mu[i - 1] < 0 for i in levi):
                continue
            rep = hilbert_series(rs, levi, mu, 2)
            if rep.covered:
                assert all(c >= 0 for p in rep.series.terms.values() for c in p.coeffs)


@pytest.mark.parametrize("name", ["A3", "B3", "C3"])
def test_positivity_when_covered_all_parabolics(name):
    rs = root_system(name)
    for k in range(rs.rank):
        for levi in itertools.combinations(range(1, rs.rank + 1), k):
            for mu in itertools.product(range(-2, 3), repeat=rs.rank):
                if any(mu[i - 1] < 0 for i in levi):
                    continue
                from qkostant.parabolic import vanishing_case
                if not vanishing_case(rs, levi, mu).covered:
                    continue
                gc = graded_euler_direct(rs, levi, mu, 2)
                assert all(c >= 0 for p in gc.terms.values() for c in p.coeffs), (levi, mu)
