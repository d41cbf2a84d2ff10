import pytest

from qkostant.parabolic import (VanishingCase, is_hermitian_symmetric, is_p_dominant,
                                levi_roots, levi_subset, nilradical_roots, parse_levi, two_rho_p,
                                vanishing_case)
from qkostant.rootsys import InvalidInput, build_root_system, rho, root_system


def test_nilradical_examples():
    a2, b2 = root_system("A2"), root_system("B2")
    assert nilradical_roots(a2, []) == list(a2.positive_roots)
    assert nilradical_roots(a2, [1]) == [(0, 1), (1, 1)]
    assert nilradical_roots(b2, [1]) == [(0, 1), (1, 1), (1, 2)]


def test_full_levi_rejected():
    with pytest.raises(InvalidInput):
        nilradical_roots(root_system("A2"), [1, 2])
    with pytest.raises(InvalidInput):
        levi_subset(root_system("A2"), [3])


def test_parse_levi():
    assert parse_levi("") == []
    assert parse_levi("1,3") == [1, 3]
    with pytest.raises(InvalidInput):
        parse_levi("1;3")


@pytest.mark.parametrize("name", ["A3", "B3", "C3", "D4", "G2", "F4"])
def test_root_partition(name):
    rs = root_system(name)
    for i in range(1, rs.rank + 1):
        for levi in ([i], [j for j in range(1, rs.rank + 1) if j != i]):
            assert len(nilradical_roots(rs, levi)) + len(levi_roots(rs, levi)) == len(
                rs.positive_roots)


def test_p_dominance():
    a2 = root_system("A2")
    assert is_p_dominant(a2, [1], (0, 0))
    assert is_p_dominant(a2, [1], (0, -5))
    assert not is_p_dominant(a2, [1], (-1, 3))
    # boundary: the trivial module is P-dominant
    assert is_p_dominant(root_system("B3"), [1, 2], (0, 0, -4))


def test_two_rho_p():
    assert two_rho_p(root_system("A1"), []) == (2,)
    assert two_rho_p(root_system("A2"), []) == (2, 2)
    assert two_rho_p(root_system("A2"), [1]) == (0, 3)


@pytest.mark.parametrize("name", ["A3", "B3", "C3", "D4", "G2"])
def test_two_rho_p_borel_is_two_rho(name):
    rs = root_system(name)
    assert two_rho_p(rs, []) == tuple(2 * c for c in rho(rs))


def test_hermitian_examples():
    assert is_hermitian_symmetric(root_system("A2"), [1])
    assert not is_hermitian_symmetric(root_system("B2"), [1])
    assert is_hermitian_symmetric(root_system("B2"), [2])


def _types_rank_le_4():
    out = [build_root_system("A", n) for n in range(1, 5)]
    out += [build_root_system(s, n) for s in "BC" for n in range(2, 5)]
    out += [build_root_system("D", 4), build_root_system("F", 4), build_root_system("G", 2)]
    return out


@pytest.mark.parametrize("rs", _types_rank_le_4(), ids=str)
def test_hermitian_matches_cominuscule(rs):
    for i in range(1, rs.rank + 1):
        levi = [j for j in range(1, rs.rank + 1) if j != i]
        assert is_hermitian_symmetric(rs, levi) == (rs.highest_root[i - 1] == 1)


def test_vanishing_examples():
    a2, b2 = root_system("A2"), root_system("B2")
    assert vanishing_case(a2, [], (1, 0)) is VanishingCase.LINE_BUNDLE_DOMINANT
    assert vanishing_case(a2, [1], (2, 1)) is VanishingCase.MINIMAL_PARABOLIC
    assert vanishing_case(b2, [1], (0, -1)) is VanishingCase.UNKNOWN
    with pytest.raises(InvalidInput):
        vanishing_case(b2, [1], (-1, 0))


def test_vanishing_other_bullets():
    a3, b3 = root_system("A3"), root_system("B3")
    # mu' = (1, 1, 0) is dominant and nonzero on Pi = {1, 2}; mu = mu' + 2 rho_P
    levi = [1, 2]
    t = two_rho_p(b3, levi)
    assert t == (0, 0, 6)
    mu = tuple(a + b for a, b in zip((1, 1, 0), t))
    assert vanishing_case(b3, levi, mu) is VanishingCase.TWISTED_REGULAR
    assert vanishing_case(b3, levi, (1, 1, 5)) is not VanishingCase.TWISTED_REGULAR
    # A3, Pi = {1, 2}: 2 rho_P = (0, 0, 4), so (1, 1, 1) is only type-A regular
    assert vanishing_case(a3, [1, 2], (1, 1, 1)) is VanishingCase.TYPE_A_REGULAR
    assert vanishing_case(a3, [1, 2], (1, 1, 4)) is VanishingCase.TWISTED_REGULAR
    # B3 with Pi = {2, 3} is a quadric: Hermitian symmetric; mu = 0 is not P-regular
    assert vanishing_case(b3, [2, 3], (0, 0, 0)) is VanishingCase.HERMITIAN_SYMMETRIC
    # C3 with Pi = {1, 3} is not Hermitian symmetric and mu = 0 is not P-regular
    assert vanishing_case(root_system("C3"), [1, 3], (0, 0, 0)) is VanishingCase.UNKNOWN


@pytest.mark.parametrize("name", ["A2", "B3", "G2", "D4"])
def test_borel_dominant_never_unknown(name):
    rs = root_system(name)
    for mu in [(0,) * rs.rank, rho(rs), (2,) + (0,) * (rs.rank - 1)]:
        assert vanishing_case(rs, [], mu).covered


def test_twist_sign_rank_one():
    # mu = -2 on P^1 is mu' - 2 rho with mu' = 0, but E^* = O(-2) has H^1 = C
    assert vanishing_case(root_system("A1"), [], (-2,)) is VanishingCase.UNKNOWN
    assert vanishing_case(root_system("A2"), [], (-1, -1)) is VanishingCase.UNKNOWN
