"""Quadratic Gauss sums: brute-force evaluation, closed forms, square
completion with gcd degeneration, Deloup-Turaev reciprocity, the higher-rank
closed form, and the unknot normalization constants F(U^{+-1}).

Closed forms come back as symbolic tags (unit phase, Jacobi symbol, power of
sqrt r) so that downstream prefactor cancellations never touch floating
point; a numeric value is always attached for cross checks.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction

from .cyclotomic import CycloNumber, root_power
from .intmatrix import (
    cokernel_representatives,
    det_int,
    inverse_rational,
    signature,
)
from .number_theory import RootContext, jacobi

__all__ = [
    "gauss_brute",
    "GaussClosedForm",
    "gauss_closed",
    "gauss_linear",
    "FUnknot",
    "f_unknot",
    "QuadraticFormZ",
    "reciprocity",
    "HighRankGaussSum",
    "gauss_high_rank",
]


def gauss_brute(s: int, r: int) -> CycloNumber:
    """G(s, r) = sum over n mod r of e^(2 pi i s n^2 / r), exact in conductor r."""
    if r < 1:
        raise ValueError("r must be >= 1")
    acc: dict[int, int] = {}
    for n in range(r):
        k = (s * n * n) % r
        acc[k] = acc.get(k, 0) + 1
    return CycloNumber.from_int_dict(r, acc)


@dataclass(frozen=True)
class GaussClosedForm:
    """Symbolic value multiplier * jacobi * phase * sqrt(sqrt_radicand).

    phase is one of "1", "i", "1+i", "1-i", "0"; the degenerate gcd g > 1
    appears as the integer multiplier g.
    """

    multiplier: int
    jacobi: int
    phase: str
    sqrt_radicand: int

    _PHASES = {"1": 1 + 0j, "i": 1j, "1+i": 1 + 1j, "1-i": 1 - 1j, "0": 0j}

    @property
    def numeric(self) -> complex:
        return (self.multiplier * self.jacobi * self._PHASES[self.phase]
                * math.sqrt(self.sqrt_radicand))


def gauss_closed(s: int, r: int) -> GaussClosedForm:
    """Closed form of G(s, r) by the residue of r mod 4.

    For gcd(s, r) = g > 1 the reduction G(s, r) = g G(s/g, r/g) is applied
    first.  G(0, r) = r is returned as multiplier r.
    """
    if r < 1:
        raise ValueError("r must be >= 1")
    if s % r == 0:
        return GaussClosedForm(r, 1, "1", 1)
    g = math.gcd(s, r)
    s1, r1 = s // g, r // g
    s1 %= r1
    if r1 % 4 == 0:
        # s1 odd here since gcd(s1, r1) = 1
        ph = "1+i" if s1 % 4 == 1 else "1-i"
        return GaussClosedForm(g, jacobi(r1, s1), ph, r1)
    if r1 % 4 == 1:
        return GaussClosedForm(g, jacobi(s1, r1), "1", r1)
    if r1 % 4 == 2:
        return GaussClosedForm(g, 1, "0", 1)
    return GaussClosedForm(g, jacobi(s1, r1), "i", r1)


def gauss_linear(P: int, A, s: int, r: int) -> CycloNumber:
    """Sum over n mod r of xi^(P n^2 + 2 A n) with xi = e^(2 pi i s / r), r odd.

    A may be a half-integer (2A must be an integer).  Evaluated by square
    completion: xi1^(-A1^2 / 4 P1) G(s P1, r1) after pulling out
    g = gcd(P, r), with the delta_{g | 2A} vanishing rule.
    """
    if r < 1 or r % 2 == 0:
        raise ValueError("r must be odd and positive")
    A2 = Fraction(A) * 2
    if A2.denominator != 1:
        raise ValueError("2A must be an integer")
    A2 = int(A2)
    g = math.gcd(P, r)
    if A2 % g:
        return CycloNumber.zero(r)
    r1, P1, A1 = r // g, P // g, A2 // g
    if r1 == 1:
        return CycloNumber.from_rational(g).embed(r)
    inv4P1 = pow(4 * P1 % r1, -1, r1)
    shift = (-A1 * A1 * inv4P1) % r1
    xi1_shift = root_power(r1, (s * shift) % r1)
    return (g * xi1_shift * gauss_brute(s * P1, r1)).embed(math.lcm(r, r1))


@dataclass(frozen=True)
class FUnknot:
    """F(U^sign) both ways: the exact defining sum (conductor 4r) and the
    closed form -sign (r/s) ((1 +- i^s)/sqrt 2) sqrt(2r) q^(-+3/4) / (q^(1/2)-q^(-1/2))."""

    sign: int
    exact: CycloNumber
    jacobi: int
    closed_numeric: complex


def f_unknot(sign: int, ctx: RootContext) -> FUnknot:
    """Normalization constant F(U^{+-1}) for the surgery formula."""
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    r, s = ctx.r, ctx.s
    D = 4 * r
    acc: dict[int, int] = {}
    # F(U^sign) = sum_{n=1}^{r-1} q^(sign (n^2 - 1)/4) [n]^2, with
    # [n]^2 = sum_{i,j=0}^{n-1} q^(n-1-i-j) and q^m = zeta_4r^(4 s m).
    for n in range(1, r):
        base = (sign * s * (n * n - 1)) % D
        for i in range(n):
            for j in range(n):
                k = (base + 4 * s * (n - 1 - i - j)) % D
                acc[k] = acc.get(k, 0) + 1
    exact = CycloNumber.from_int_dict(D, acc)

    i_pow_s = 1j if s % 4 == 1 else -1j
    q_quarter = cmath.exp(2j * math.pi * s / D)
    q_half = q_quarter ** 2
    closed = (-sign * jacobi(r, s) * (1 + sign * i_pow_s) / math.sqrt(2)
              * math.sqrt(2 * r) * q_quarter ** (-3 * sign)
              / (q_half - 1 / q_half))
    return FUnknot(sign, exact, jacobi(r, s), closed)


@dataclass(frozen=True)
class QuadraticFormZ:
    """Integer symmetric bilinear form with a rational offset vector."""

    B: tuple[tuple[int, ...], ...]
    psi: tuple[Fraction, ...]

    @property
    def N(self) -> int:
        return len(self.B)

    def __post_init__(self):
        n = len(self.B)
        if any(len(row) != n for row in self.B):
            raise ValueError("B must be square")
        if any(self.B[i][j] != self.B[j][i] for i in range(n) for j in range(n)):
            raise ValueError("B must be symmetric")
        if len(self.psi) != n:
            raise ValueError("psi must have length N")


def _inner_B(B, x, y) -> Fraction:
    n = len(x)
    return sum(Fraction(x[i]) * B[i][j] * y[j] for i in range(n) for j in range(n))


def reciprocity(form: QuadraticFormZ, r: int) -> tuple[complex, complex]:
    """Both sides of the Gauss sum reciprocity formula

        sum_{x in Z^N/rZ^N} exp(pi i <x,Bx>/r + 2 pi i <x,psi>)
          = e^(pi i sigma/4) r^(N/2) / |det B|^(1/2)
            * sum_{y in Z^N/BZ^N} exp(-pi i r <y+psi, B^-1 (y+psi)>)

    after validating its divisibility hypotheses.  Returned numerically;
    the caller asserts closeness.
    """
    if r < 1:
        raise ValueError("r must be a positive integer")
    B = [list(row) for row in form.B]
    n = form.N
    d = det_int(B)
    if d == 0:
        raise ValueError("B must be nondegenerate")
    for i in range(n):
        if (r * B[i][i]) % 2:
            raise ValueError(f"hypothesis r<x,Bx>/2 in Z fails at diagonal entry {i}")
    for p in form.psi:
        if (Fraction(r) * p).denominator != 1:
            raise ValueError("hypothesis r<x,psi> in Z fails")

    def cis_turns(t: Fraction) -> complex:
        # exact reduction mod 1 keeps float phases small
        t -= math.floor(t)
        return cmath.exp(2j * math.pi * float(t))

    lhs = 0j
    idx = [0] * n
    while True:
        q = _inner_B(B, idx, idx)
        lhs += cis_turns(Fraction(q, 2 * r)
                         + sum(Fraction(idx[i]) * form.psi[i] for i in range(n)))
        for k in range(n):
            idx[k] += 1
            if idx[k] < r:
                break
            idx[k] = 0
        else:
            break

    binv = inverse_rational(B)
    rhs_sum = 0j
    for y in cokernel_representatives(B):
        w = [Fraction(y[i]) + form.psi[i] for i in range(n)]
        bw = [sum(binv[i][j] * w[j] for j in range(n)) for i in range(n)]
        q = sum(w[i] * bw[i] for i in range(n))
        rhs_sum += cis_turns(Fraction(-r) * q / 2)
    sigma = signature(B)
    rhs = cmath.exp(1j * math.pi * sigma / 4) * r ** (n / 2) / math.sqrt(abs(d)) * rhs_sum
    return lhs, rhs


@dataclass(frozen=True)
class HighRankGaussSum:
    """Rank-N quadratic Gauss sum sum_x e^(2 pi i <x,Bx>/r): closed vs brute."""

    jacobi: int
    i_exponent: int      # power of i in the closed form (N if r = 3 mod 4)
    half_power: int      # value carries r^(half_power / 2)
    closed_numeric: complex
    brute: CycloNumber


def gauss_high_rank(B: list[list[int]], r: int) -> HighRankGaussSum:
    """Closed form (det B / r) i^(N [r=3 mod 4]) r^(N/2) against the brute sum,
    for odd r coprime to det B."""
    if r < 1 or r % 2 == 0:
        raise ValueError("r must be odd and positive")
    n = len(B)
    if any(len(row) != n for row in B) or any(B[i][j] != B[j][i]
                                              for i in range(n) for j in range(n)):
        raise ValueError("B must be square symmetric")
    d = det_int(B)
    if d == 0:
        raise ValueError("det B must be nonzero")
    if math.gcd(d, r) != 1:
        raise ValueError("det B must be coprime to r")

    acc: dict[int, int] = {}
    idx = [0] * n
    while True:
        q = 0
        for i in range(n):
            if idx[i]:
                q += B[i][i] * idx[i] * idx[i]
                for j in range(i + 1, n):
                    q += 2 * B[i][j] * idx[i] * idx[j]
        k = q % r
        acc[k] = acc.get(k, 0) + 1
        for k2 in range(n):
            idx[k2] += 1
            if idx[k2] < r:
                break
            idx[k2] = 0
        else:
            break
    brute = CycloNumber.from_int_dict(r, acc)

    jac = jacobi(d, r)
    i_exp = n if r % 4 == 3 else 0
    closed = jac * (1j ** i_exp) * r ** (n / 2)
    return HighRankGaussSum(jac, i_exp, n, closed, brute)
