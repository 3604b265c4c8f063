"""Parameter schedule of the cograph recursion and its guarantee formulas.

All logarithms are base 2.  Thresholds that feed branch decisions (``c``)
are exact powers of two; the remaining quantities are reporting values.
The threshold ``n0`` is astronomically large for any useful parameters, so
it is carried as its base-2 logarithm.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import DomainError

__all__ = [
    "ScheduleParams",
    "r_of",
    "r_from_log2",
    "mu_of",
    "choose_c",
    "k_of",
    "j_of",
    "guarantee",
    "find_log2_n0",
]


def _log2_int(n: int):
    """log2 of a positive integer; exact ``int`` for powers of two."""
    if n & (n - 1) == 0:
        return n.bit_length() - 1
    return math.log2(n)


def _log2_frac(x: Fraction):
    """log2 of a positive fraction; exact ``int`` when it is a power of two."""
    x = Fraction(x)
    a, b = x.numerator, x.denominator
    if a & (a - 1) == 0 and b & (b - 1) == 0:
        return (a.bit_length() - 1) - (b.bit_length() - 1)
    return math.log2(a) - math.log2(b)


def r_from_log2(L: float) -> float:
    """sqrt(L * log2 L) for L = log2 n >= 1."""
    if L < 1:
        raise DomainError("r(n) needs n >= 2")
    return math.sqrt(L * math.log2(L))


def r_of(n: int) -> float:
    """sqrt(log n * log log n) for n >= 2 (so r(2) = 0)."""
    if n < 2:
        raise DomainError("r(n) needs n >= 2")
    L = _log2_int(n) if isinstance(n, int) else math.log2(n)
    return r_from_log2(L)


def mu_of(sigma: float) -> float:
    if sigma < 1:
        raise DomainError("sigma must be at least 1")
    return (32 * sigma) ** -0.5


def choose_c(n: int, mu: float) -> Fraction:
    """The threshold 2^(-2 mu r(n)), rounded down to a power of two and capped at 1/2."""
    if n < 2:
        raise DomainError("choose_c needs n >= 2")
    x = 2 * mu * r_of(n)
    # mu and r are floats; an exponent that is an integer in exact arithmetic
    # can land a few ulps above it, which ceil would push to the next power
    if abs(x - round(x)) <= 1e-9 * max(1.0, x):
        x = round(x)
    e = max(1, math.ceil(x))
    return Fraction(1, 2**e)


def k_of(c, sigma: float, epsilon) -> int:
    """floor((sigma log(1/c) - 1) / log(2/epsilon))."""
    c, epsilon = Fraction(c), Fraction(epsilon)
    if not 0 < c <= Fraction(1, 2):
        raise DomainError("c must lie in (0, 1/2]")
    if not 0 < epsilon <= 1:
        raise DomainError("epsilon must lie in (0, 1]")
    lc, le = _log2_frac(1 / c), _log2_frac(2 / epsilon)
    if isinstance(lc, int) and isinstance(le, int) and math.isfinite(sigma):
        return math.floor((Fraction(sigma) * lc - 1) / le)
    return math.floor((sigma * lc - 1) / le)


def j_of(n: int, c, sigma: float) -> int:
    """floor(log n / (4 sigma log(1/c)))."""
    if n < 2:
        raise DomainError("j needs n >= 2")
    c = Fraction(c)
    ln, lc = _log2_int(int(n)), _log2_frac(1 / c)
    if isinstance(ln, int) and isinstance(lc, int) and math.isfinite(sigma):
        return math.floor(Fraction(ln) / (4 * Fraction(sigma) * lc))
    return math.floor(ln / (4 * sigma * lc))


def guarantee(n: int, kappa: float) -> tuple[float, float]:
    """(cograph-size bound 2^(2 kappa r(n)), clique-or-stable bound 2^(kappa r(n)))."""
    r = r_of(n)
    return 2.0 ** (2 * kappa * r), 2.0 ** (kappa * r)


def _n0_conditions(L: int, sigma: float, mu: float, eps: Fraction) -> bool:
    # smooth sufficient form of floor((2 sigma mu r - 1)/log(2/eps)) >= sqrt(L):
    # once it holds it keeps holding as L grows
    r = r_from_log2(L)
    le = float(_log2_frac(2 / eps))
    return (
        (2 * sigma * mu * r - 1) / le >= math.sqrt(L) + 1
        and mu * r >= 2
        and L >= 4 * sigma * mu * r
    )


def find_log2_n0(sigma: float, epsilon, mu: float | None = None) -> int:
    """An integer L such that n0 = 2^L meets the three threshold conditions.

    The floor condition is replaced by the slightly stronger x >= sqrt(L) + 1,
    which is monotone in L once it holds; exponential search followed by
    bisection finds the least L for that form.
    """
    eps = Fraction(epsilon)
    mu = mu_of(sigma) if mu is None else mu
    if 2 * sigma * mu <= 0:
        raise DomainError("degenerate schedule")
    hi = 2
    while not _n0_conditions(hi, sigma, mu, eps):
        hi *= 2
        if hi > 2**400:
            raise DomainError("no n0 found; schedule degenerate")
    lo = hi // 2
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if _n0_conditions(mid, sigma, mu, eps):
            hi = mid
        else:
            lo = mid
    return hi


@dataclass(frozen=True)
class ScheduleParams:
    """The constant system sigma, epsilon, mu, kappa, n0 (n0 = 2**log2_n0)."""

    sigma: float
    epsilon: Fraction
    mu: float
    kappa: float
    log2_n0: int

    @classmethod
    def build(cls, sigma: float = 5.0, epsilon=Fraction(1, 16), kappa: float | None = None):
        """Derive mu, n0 and (unless given) the largest admissible kappa."""
        epsilon = Fraction(epsilon)
        if not 0 < epsilon <= 1:
            raise DomainError("epsilon must lie in (0, 1]")
        mu = mu_of(sigma)
        if not sigma > _log2_frac(1 / epsilon):
            raise DomainError("sigma must exceed log2(1/epsilon)")
        L0 = find_log2_n0(sigma, epsilon, mu)
        kappa_max = min(mu / 2, 1 / (2 * r_from_log2(L0)))
        if kappa is None:
            kappa = kappa_max
        elif kappa > kappa_max:
            raise DomainError(f"kappa {kappa} exceeds the admissible {kappa_max}")
        return cls(float(sigma), epsilon, mu, float(kappa), L0)

    def is_vacuous(self, n: int) -> bool:
        """True when n < n0, where the bound carries no asymptotic content."""
        return math.log2(n) < self.log2_n0

    def to_json(self) -> dict:
        return {
            "sigma": self.sigma,
            "epsilon": {"num": self.epsilon.numerator, "den": self.epsilon.denominator},
            "mu": self.mu,
            "kappa": self.kappa,
            "log2_n0": self.log2_n0,
        }
