"""Exact scalar number theory: Jacobi symbols, Dedekind sums, Bernoulli
polynomials, Moebius function, residue normalization and rationals mod 1.

Everything in this module is pure integer / Fraction arithmetic with no
floating point, so downstream identity checks can be zero tolerance.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

__all__ = [
    "RationalMod1",
    "RootContext",
    "jacobi",
    "normalize_s",
    "sawtooth",
    "dedekind_sum",
    "dedekind_sum_direct",
    "bernoulli_number",
    "bernoulli_poly",
    "moebius",
    "euler_phi",
]


def jacobi(a: int, n: int) -> int:
    """Jacobi symbol (a/n) for odd positive n, extended multiplicatively.

    Returns 0 when gcd(a, n) > 1.
    """
    if n <= 0 or n % 2 == 0:
        raise ValueError(f"Jacobi symbol requires odd positive n, got n={n}")
    a %= n
    result = 1
    while a != 0:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                result = -result
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            result = -result
        a %= n
    return result if n == 1 else 0


def normalize_s(s: int, r: int) -> int:
    """Smallest positive s' with s' = s (mod r), s' = 1 (mod 4), gcd(s', 4r) = 1.

    r must be odd and coprime to s.  The two congruences have a unique
    solution mod 4r; that canonical representative makes e^(pi*i*s'/2r) a
    primitive 4r-th root of unity with a fixed quarter-root convention.
    """
    if r <= 0 or r % 2 == 0:
        raise ValueError(f"modulus r must be odd and positive, got {r}")
    if math.gcd(s, r) != 1:
        raise ValueError(f"s={s} is not coprime to r={r}")
    if r == 1:
        return 1
    t = ((s - 1) * pow(4, -1, r)) % r
    out = (1 + 4 * t) % (4 * r)
    return out if out else 4 * r


def sawtooth(x: Fraction) -> Fraction:
    """((x)): x - floor(x) - 1/2 for non-integer x, and 0 for integers."""
    x = Fraction(x)
    if x.denominator == 1:
        return Fraction(0)
    return x - math.floor(x) - Fraction(1, 2)


def dedekind_sum_direct(q: int, p: int) -> Fraction:
    """Dedekind sum s(q, p) by direct O(p) summation of the sawtooth product."""
    if p <= 0:
        raise ValueError("p must be positive")
    if math.gcd(q, p) != 1:
        raise ValueError(f"gcd({q}, {p}) != 1")
    total = Fraction(0)
    for k in range(1, p):
        total += sawtooth(Fraction(k, p)) * sawtooth(Fraction(k * q, p))
    return total


def dedekind_sum(q: int, p: int) -> Fraction:
    """Dedekind sum s(q, p) = sum_k ((k/p))((kq/p)) via the reciprocity recursion.

    O(log p) like the Euclidean algorithm; exact for large p where the direct
    sum is infeasible.
    """
    if p <= 0:
        raise ValueError("p must be positive")
    if math.gcd(q, p) != 1:
        raise ValueError(f"gcd({q}, {p}) != 1")
    sign = 1
    q %= p
    total = Fraction(0)
    while p > 1:
        # s(q, p) = -1/4 + (p/q + q/p + 1/pq)/12 - s(p mod q, q)
        total += sign * (Fraction(-1, 4)
                         + (Fraction(p, q) + Fraction(q, p) + Fraction(1, p * q)) / 12)
        sign = -sign
        p, q = q, p % q
    return total


@lru_cache(maxsize=None)
def bernoulli_number(n: int) -> Fraction:
    """Bernoulli number B_n in the convention B_1 = -1/2."""
    if n < 0:
        raise ValueError("n must be >= 0")
    if n == 0:
        return Fraction(1)
    # sum_{j=0}^{m} C(m+1, j) B_j = 0 for m >= 1
    acc = Fraction(0)
    for j in range(n):
        acc += math.comb(n + 1, j) * bernoulli_number(j)
    return -acc / (n + 1)


def bernoulli_poly(n: int, x: Fraction) -> Fraction:
    """Bernoulli polynomial B_n(x) as an exact rational."""
    if n < 0:
        raise ValueError("n must be >= 0")
    x = Fraction(x)
    return sum((math.comb(n, j) * bernoulli_number(j) * x ** (n - j)
                for j in range(n + 1)), start=Fraction(0))


def _factorize(n: int) -> dict[int, int]:
    out: dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def moebius(n: int) -> int:
    """Moebius function mu(n)."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if n == 1:
        return 1
    fac = _factorize(n)
    if any(e > 1 for e in fac.values()):
        return 0
    return -1 if len(fac) % 2 else 1


def euler_phi(n: int) -> int:
    """Euler totient."""
    if n < 1:
        raise ValueError("n must be >= 1")
    out = n
    for p in _factorize(n):
        out = out // p * (p - 1)
    return out


@dataclass(frozen=True)
class RationalMod1:
    """A rational number reduced to its canonical representative in [0, 1)."""

    value: Fraction

    @staticmethod
    def of(x) -> "RationalMod1":
        x = Fraction(x)
        return RationalMod1(x - math.floor(x))

    def __post_init__(self):
        if not (0 <= self.value < 1):
            raise ValueError(f"{self.value} is not in [0, 1)")

    def __add__(self, other) -> "RationalMod1":
        o = other.value if isinstance(other, RationalMod1) else Fraction(other)
        return RationalMod1.of(self.value + o)

    def __neg__(self) -> "RationalMod1":
        return RationalMod1.of(-self.value)

    def __sub__(self, other) -> "RationalMod1":
        return self + (-RationalMod1.of(other if not isinstance(other, RationalMod1)
                                        else other.value))


@dataclass(frozen=True)
class RootContext:
    """A root-of-unity context (r, s).

    xi = e^(2 pi i s / r) is a primitive r-th root of unity and
    xi^(1/4) = e^(pi i s / 2r) the fixed primitive 4r-th quarter root.
    The companion root on the modular-transform side is
    xi~ = e^(-2 pi i r / s).

    Requires r odd, s = 1 (mod 4) and gcd(s, 4r) = 1, which pins the
    quarter-root convention used by every exact computation downstream.
    """

    r: int
    s: int = 1

    def __post_init__(self):
        if self.r < 1 or self.r % 2 == 0:
            raise ValueError(f"r must be odd and >= 1, got {self.r}")
        if self.s % 4 != 1:
            raise ValueError(f"s must be 1 mod 4, got {self.s}")
        if math.gcd(self.s, 4 * self.r) != 1:
            raise ValueError(f"gcd(s, 4r) must be 1, got s={self.s}, r={self.r}")

    @property
    def conductor(self) -> int:
        """Base conductor 4r housing xi^(1/4)."""
        return 4 * self.r

    @staticmethod
    def normalized(r: int, s: int) -> "RootContext":
        """Context with s replaced by its canonical residue (1 mod 4, coprime 4r)."""
        return RootContext(r, normalize_s(s, r))

    def tilde(self) -> "RootContext":
        """Context whose root equals xi~ = e^(-2 pi i r / s) of this one."""
        return RootContext(self.s, normalize_s(-self.r, self.s))
