import pytest
import sympy

import pyshanks


def brute_period(k, m):
    a, b, c = 0, 0, 1
    n = 0
    while True:
        a, b, c = b, c, (k * c + (k + 3) * b + a) % m
        n += 1
        if (a, b, c) == (0, 0, 1 % m):
            return n


def test_shanks_poly_coefficients():
    assert pyshanks.shanks_poly(33) == [-1, -36, -33, 1]


@pytest.mark.parametrize("k,m", [(1, 2), (1, 7), (2, 11), (5, 9), (33, 17), (1, 49)])
def test_period_matches_direct_iteration(k, m):
    expected = brute_period(k, m)
    assert pyshanks.period(k, m, method="brute")["pi"] == expected
    assert pyshanks.period(k, m, method="fast")["pi"] == expected


@pytest.mark.parametrize("k,p", [(1, 3), (2, 3), (1, 5)])
def test_power_discriminant_matches_sympy(k, p):
    x = sympy.symbols("x")
    s = x**3 - k * x**2 - (k + 3) * x - 1
    assert pyshanks.discriminant(k, p) == sympy.discriminant(s.subs(x, x**p), x)


def test_base_discriminant():
    assert pyshanks.discriminant(33) == (33 * 33 + 3 * 33 + 9) ** 2


def test_factor_mod_matches_sympy():
    x = sympy.symbols("x")
    coeffs = [3, 0, 5, 1, 0, 2, 1]
    f = sum(c * x**i for i, c in enumerate(coeffs))
    _, expected = sympy.factor_list(f, modulus=7)
    got = pyshanks.factor_mod(coeffs, 7)
    assert sorted(len(c) - 1 for c, _ in got) == sorted(sympy.degree(g, x) for g, _ in expected)
    assert sum(mult for _, mult in got) == sum(mult for _, mult in expected)


def test_table1_row():
    r = pyshanks.is_k_shanks(33, 17)
    assert r["pi_p"] == r["pi_p2"] == 307
    assert r["is_shanks"] is True
    assert pyshanks.certify(33)["monogenic"] is True
    assert pyshanks.certify(33, 17)["monogenic"] is False
    assert all(row["pass"] for row in pyshanks.verify_table1())


def test_classify_triple_root():
    assert pyshanks.classify(1, 13) == {"classification": "triple", "roots": [9]}


def test_search_is_ordered():
    records = pyshanks.search(1, 4, 2, 20, jobs=2)
    keys = [(r["k"], r["p"]) for r in records]
    assert keys == sorted(keys)
    assert records == pyshanks.search(1, 4, 2, 20, jobs=1)


def test_errors():
    with pytest.raises(pyshanks.HypothesisViolation, match="mod 9"):
        pyshanks.certify(12)
    with pytest.raises(pyshanks.DomainError):
        pyshanks.is_k_shanks(33, 4)
    with pytest.raises(ValueError):
        pyshanks.shanks_poly(0)
