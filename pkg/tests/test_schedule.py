import math
from fractions import Fraction

import mpmath
import pytest

from pentagon.errors import DomainError
from pentagon.schedule import (
    ScheduleParams,
    choose_c,
    find_log2_n0,
    guarantee,
    j_of,
    k_of,
    mu_of,
    r_of,
)

mpmath.mp.dps = 50


# -- independent evaluator (mpmath, base-2 logs at 50 digits) ------------------

def ref_r(n):
    L = mpmath.log(n, 2)
    return mpmath.sqrt(L * mpmath.log(L, 2))


def ref_mu(sigma):
    return 1 / mpmath.sqrt(32 * mpmath.mpf(sigma))


def ref_c(n, sigma):
    x = 2 * ref_mu(sigma) * ref_r(n)
    if abs(x - mpmath.nint(x)) < mpmath.mpf(10) ** -40:
        x = mpmath.nint(x)
    e = max(1, int(mpmath.ceil(x)))
    return Fraction(1, 2**e)


def ref_k(c, sigma, eps):
    lc = mpmath.log(mpmath.mpf(c.denominator) / c.numerator, 2)
    le = mpmath.log(2 / (mpmath.mpf(eps.numerator) / eps.denominator), 2)
    return int(mpmath.floor((mpmath.mpf(sigma) * lc - 1) / le))


def ref_j(n, c, sigma):
    lc = mpmath.log(mpmath.mpf(c.denominator) / c.numerator, 2)
    return int(mpmath.floor(mpmath.log(n, 2) / (4 * mpmath.mpf(sigma) * lc)))


def ref_guarantee(n, kappa):
    r = ref_r(n)
    return mpmath.power(2, 2 * kappa * r), mpmath.power(2, kappa * r)


def close(a, b, rel=1e-12):
    return abs(mpmath.mpf(a) - b) <= rel * max(abs(b), mpmath.mpf(1e-300))


# -- stated values -------------------------------------------------------------

def test_r_values():
    assert r_of(2) == 0
    assert r_of(2**16) == 8
    # log2 log2 2^256 = 8, so r = sqrt(2048)
    assert close(r_of(2**256), mpmath.sqrt(2048))
    with pytest.raises(DomainError):
        r_of(1)


def test_mu_values():
    assert mu_of(2) == Fraction(1, 8)
    assert mu_of(8) == Fraction(1, 16)
    with pytest.raises(DomainError):
        mu_of(0.5)


def test_choose_c_values():
    assert choose_c(2, 0.3) == Fraction(1, 2)
    assert choose_c(2**16, 1 / 8) == Fraction(1, 4)
    assert choose_c(2**16, 1 / 2) == Fraction(1, 2**8)


def test_k_values():
    assert k_of(Fraction(1, 2**10), 2, Fraction(1, 4)) == 6
    assert k_of(Fraction(1, 2), 1, Fraction(1)) == 0
    assert k_of(Fraction(1, 2**5), 5, Fraction(1, 16)) == 4


def test_j_values():
    c = Fraction(1, 32)
    assert j_of(2**40, c, 2) == 1
    assert j_of(2**8, c, 2) == 0
    assert j_of(2**160, c, 1) == 8


def test_guarantee_values():
    assert guarantee(2, 0.3) == (1, 1)
    g, b = guarantee(2**16, 1 / 16)
    assert close(g, 2) and close(b, mpmath.sqrt(2))
    g, b = guarantee(2**64, 1 / 16)
    x = mpmath.sqrt(384) / 16
    assert close(g, mpmath.power(2, 2 * x)) and close(b, mpmath.power(2, x))


# -- grid against the independent evaluator ------------------------------------

def _grid():
    out = []
    ns = [2**8, 2**16, 10**5, 3**20, 2**40, 10**15, 2**64, 7**40, 2**100, 2**256]
    sigmas = [1.0, 2.0, 5.0, 7.5, 12.0]
    epss = [Fraction(1), Fraction(1, 4), Fraction(1, 3), Fraction(1, 16)]
    i = 0
    for n in ns:
        for s in sigmas:
            for e in epss:
                if i % 2 == 0:
                    out.append((n, s, e))
                i += 1
    return out


GRID = _grid()


def test_grid_has_100_points():
    assert len(GRID) == 100


@pytest.mark.parametrize("n,sigma,eps", GRID)
def test_formulas_match_reference(n, sigma, eps):
    assert close(r_of(n), ref_r(n))
    mu = mu_of(sigma)
    assert close(mu, ref_mu(sigma))
    c = choose_c(n, mu)
    assert c == ref_c(n, sigma)
    assert k_of(c, sigma, eps) == ref_k(c, sigma, eps)
    assert j_of(n, c, sigma) == ref_j(n, c, sigma)
    kappa = mu / 2
    g, b = guarantee(n, kappa)
    rg, rb = ref_guarantee(n, kappa)
    assert close(g, rg) and close(b, rb)


# -- constant system -----------------------------------------------------------

def test_params_defaults():
    p = ScheduleParams.build()
    assert p.mu == mu_of(5)
    assert p.kappa <= p.mu / 2
    # 2 kappa r(n0) <= 1, checked at high precision from log2(n0)
    L = mpmath.mpf(p.log2_n0)
    assert 2 * p.kappa * mpmath.sqrt(L * mpmath.log(L, 2)) <= 1 + 1e-12
    assert p.is_vacuous(10**5)


def test_n0_conditions_hold_at_n0():
    sigma, eps = 5.0, Fraction(1, 16)
    L0 = find_log2_n0(sigma, eps)
    mu = ref_mu(sigma)
    le = mpmath.log(2 * mpmath.mpf(eps.denominator) / eps.numerator, 2)
    for L in (L0, L0 + 1, 2 * L0, 10 * L0):
        r = mpmath.sqrt(L * mpmath.log(L, 2))
        assert mpmath.floor((sigma * 2 * mu * r - 1) / le) >= mpmath.sqrt(L)
        assert mu * r >= 2
        assert L >= 4 * sigma * mu * r


def test_params_validation():
    with pytest.raises(DomainError):
        ScheduleParams.build(sigma=3.0, epsilon=Fraction(1, 16))  # needs sigma > 4
    with pytest.raises(DomainError):
        ScheduleParams.build(kappa=1.0)
    with pytest.raises(DomainError):
        ScheduleParams.build(epsilon=Fraction(0))
    p = ScheduleParams.build(kappa=1e-9)
    assert p.kappa == 1e-9
