"""Periodic function bases, theta series, exact Eichler-integral limits at
rationals, modular S/T transformation data, L-values, and the S-transform
residual used for asymptotic verification.

Two bases of odd 2P-periodic integer functions appear:

- the triple basis attached to fiber orders (p1, p2, p3): supported at
  l = P (1 + sum eps_j a_j / p_j) mod 2P with value -eps1 eps2 eps3;
- the elementary basis psi_{2P}^{(a)}: +1 at l = a, -1 at l = -a mod 2P.

The associated theta series sum_l l f(l) q^(l^2/4P) are weight 3/2 vector
valued modular forms; their Eichler integrals sum_l f(l) q^(l^2/4P) have
exact limits at rationals a/c given by a finite weighted sum, computed here
as exact cyclotomic numbers of conductor 4Pc.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .cyclotomic import CycloNumber
from .number_theory import RootContext, bernoulli_poly
from .seifert import rotation_triples

__all__ = [
    "PeriodicFunction",
    "phi_basis",
    "psi_basis",
    "psi_combo",
    "eichler_limit",
    "eichler_limit_complex",
    "t_phase",
    "s_matrix_phi",
    "s_matrix_psi",
    "l_value",
    "AsymptoticSeries",
    "trivial_series",
    "s_transform_residual",
    "theta_truncated",
]


@dataclass(frozen=True)
class PeriodicFunction:
    """Odd, mean-zero, integer-valued periodic function given by its table.

    period is the full period (2P for the bases used here).
    """

    period: int
    values: tuple[int, ...]

    def __post_init__(self):
        if len(self.values) != self.period:
            raise ValueError("table length must equal the period")
        n = self.period
        for l in range(n):
            if self.values[l] != -self.values[(-l) % n]:
                raise ValueError(f"table is not odd at l={l}")
        if sum(self.values) != 0:
            raise ValueError("table must have mean zero")

    def __call__(self, l: int) -> int:
        return self.values[l % self.period]

    def __add__(self, other: "PeriodicFunction") -> "PeriodicFunction":
        if self.period != other.period:
            raise ValueError("period mismatch")
        return PeriodicFunction(self.period,
                                tuple(a + b for a, b in zip(self.values, other.values)))

    def __sub__(self, other: "PeriodicFunction") -> "PeriodicFunction":
        return self + (-1) * other

    def __rmul__(self, n: int) -> "PeriodicFunction":
        return PeriodicFunction(self.period, tuple(n * v for v in self.values))

    def support(self) -> list[int]:
        return [l for l, v in enumerate(self.values) if v]


def phi_basis(p: tuple[int, int, int], a: tuple[int, int, int]) -> PeriodicFunction:
    """2P-periodic table with value -eps1 eps2 eps3 at
    l = P(1 + sum_j eps_j a_j / p_j) mod 2P, over the eight sign choices."""
    if any(not (0 < aj < pj) for aj, pj in zip(a, p)):
        raise ValueError(f"rotation numbers {a} out of range for {p}")
    P = math.prod(p)
    table = [0] * (2 * P)
    for e1 in (1, -1):
        for e2 in (1, -1):
            for e3 in (1, -1):
                shift = P + sum(e * P // pj * aj
                                for e, aj, pj in zip((e1, e2, e3), a, p))
                table[shift % (2 * P)] -= e1 * e2 * e3
    return PeriodicFunction(2 * P, tuple(table))


def psi_basis(P: int, a: int) -> PeriodicFunction:
    """The elementary odd 2P-periodic table: +1 at l = a, -1 at l = -a mod 2P."""
    if not (1 <= a < P):
        raise ValueError(f"label a must satisfy 1 <= a < P, got a={a}, P={P}")
    table = [0] * (2 * P)
    table[a] = 1
    table[2 * P - a] = -1
    return PeriodicFunction(2 * P, tuple(table))


def psi_combo(P: int, terms: dict[int, int]) -> PeriodicFunction:
    """Integer linear combination sum_a n_a psi^(a) of elementary tables."""
    out = PeriodicFunction(2 * P, (0,) * (2 * P))
    for a, n in terms.items():
        out = out + n * psi_basis(P, a)
    return out


def eichler_limit(f: PeriodicFunction, P: int, alpha: Fraction) -> CycloNumber:
    """Exact limit of the Eichler integral sum_{l>=0} f(l) q^(l^2/4P) at the
    rational point alpha = a/c (lowest terms):

        (1/2) sum_{l=0}^{2Pc} f(l) e^(2 pi i alpha l^2 / 4P) (1 - l/(Pc)),

    as a cyclotomic number of conductor 4Pc."""
    alpha = Fraction(alpha)
    a, c = alpha.numerator, alpha.denominator
    D = 4 * P * c
    den = 2 * P * c
    acc: dict[int, int] = {}
    for l in range(1, 2 * P * c):
        v = f(l)
        if v:
            k = (a * l * l) % D
            acc[k] = acc.get(k, 0) + v * (P * c - l)
    return CycloNumber.from_int_dict(D, acc, den)


def eichler_limit_complex(f: PeriodicFunction, P: int, alpha: Fraction) -> complex:
    """Numeric twin of eichler_limit, vectorized for large denominators."""
    alpha = Fraction(alpha)
    a, c = alpha.numerator, alpha.denominator
    D = 4 * P * c
    n = 2 * P * c
    l = np.arange(1, n, dtype=np.int64)
    vals = np.array(f.values, dtype=np.int64)[l % (2 * P)]
    nz = vals != 0
    l = l[nz]
    vals = vals[nz]
    k = (a % D) * ((l * l) % D) % D
    weights = vals * (P * c - l) / (2.0 * P * c)
    return complex(np.sum(weights * np.exp(2j * np.pi * k / D)))


def t_phase(p: tuple[int, int, int], a: tuple[int, int, int]) -> Fraction:
    """Exponent x (an exact rational) with T-eigenvalue e^(pi i x) for the
    triple-basis component a: x = (P/2)(1 + sum a_j/p_j)^2 = -2 CS[a]."""
    P = math.prod(p)
    t = 1 + sum(Fraction(aj, pj) for aj, pj in zip(a, p))
    return Fraction(P, 2) * t * t


def s_matrix_phi(p: tuple[int, int, int]) -> np.ndarray:
    """S-transformation matrix of the triple basis, indexed by the canonical
    rotation-number enumeration (entries are computed against the same
    relabeled fiber order the rotation numbers use):

        S^a_b = -(8/sqrt(2P)) (-1)^E prod_j sin(pi P a_j b_j / p_j^2),
        E = P(1 + sum (a_j+b_j)/p_j) + P sum_{j != k} a_j b_k/(p_j p_k).
    """
    from .seifert import rotation_order

    p = rotation_order(tuple(p))
    labels = rotation_triples(p)
    P = math.prod(p)
    dim = len(labels)
    out = np.zeros((dim, dim))
    for i, a in enumerate(labels):
        for j, b in enumerate(labels):
            e = Fraction(P) * (1 + sum(Fraction(x + y, q) for x, y, q in zip(a, b, p)))
            for j1 in range(3):
                for j2 in range(3):
                    if j1 != j2:
                        e += Fraction(P * a[j1] * b[j2], p[j1] * p[j2])
            assert e.denominator == 1, "sign exponent must be an integer"
            sign = -1 if int(e) % 2 else 1
            prod = 1.0
            for x, y, q in zip(a, b, p):
                prod *= math.sin(math.pi * P * x * y / q / q)
            out[i, j] = -8 / math.sqrt(2 * P) * sign * prod
    return out


def s_matrix_psi(P: int) -> np.ndarray:
    """S-transformation matrix sqrt(2/P) sin(a b pi / P) of the elementary
    basis, (P-1) x (P-1); an involution by discrete sine orthogonality."""
    if P < 2:
        raise ValueError("P must be >= 2")
    a = np.arange(1, P)
    return np.sqrt(2 / P) * np.sin(np.outer(a, a) * np.pi / P)


def l_value(f: PeriodicFunction, P: int, k: int) -> Fraction:
    """L(-2k, f) = -(2P)^(2k)/(2k+1) sum_{l=1}^{2P} f(l) B_{2k+1}(l/2P),
    the analytically continued L-value, as an exact rational."""
    if k < 0:
        raise ValueError("k must be >= 0")
    twoP = 2 * P
    acc = Fraction(0)
    for l in range(1, twoP + 1):
        v = f(l)
        if v:
            acc += v * bernoulli_poly(2 * k + 1, Fraction(l, twoP))
    return -Fraction(twoP ** (2 * k), 2 * k + 1) * acc


@dataclass(frozen=True)
class AsymptoticSeries:
    """Truncated asymptotic series sum_k c_k / k! (pi i s / (2 P r))^k with
    exact rational coefficients c_k = L(-2k, f), plus the growth exponent
    delta recorded as I(s/r) in (s/r)^(delta/2) C[[s/r]]."""

    delta: int
    two_p: int
    coefficients: tuple[Fraction, ...]

    @property
    def order(self) -> int:
        return len(self.coefficients) - 1

    def evaluate(self, ctx: RootContext, K: int | None = None) -> complex:
        if K is None:
            K = self.order
        if K > self.order:
            raise ValueError(f"series stored to order {self.order}, asked {K}")
        x = 1j * math.pi * ctx.s / (self.two_p * ctx.r)
        total = 0j
        term = 1 + 0j
        for k in range(K + 1):
            if k:
                term *= x / k
            total += complex(self.coefficients[k]) * term
        return total


def trivial_series(f: PeriodicFunction, P: int, K: int, ctx: RootContext) -> complex:
    """Value of the truncated series sum_{k<=K} L(-2k, f)/k! (pi i s/(2Pr))^k."""
    series = AsymptoticSeries(0, 2 * P,
                              tuple(l_value(f, P, k) for k in range(K + 1)))
    return series.evaluate(ctx, K)


def s_transform_residual(p: tuple[int, int, int], a: tuple[int, int, int],
                         ctx: RootContext, K: int) -> complex:
    """Defect of the quantum modular S-transformation at order K:

        F_a(s/r) + sqrt(r/(i s)) sum_b S^a_b F_b(-r/s) - [series through K],

    where F are the Eichler limits of the triple basis.  Expected to decay
    like (s/r)^(K+1) as r grows."""
    labels = rotation_triples(tuple(p))
    idx = labels.index(tuple(a))
    P = math.prod(p)
    f = phi_basis(p, tuple(a))
    direct = eichler_limit_complex(f, P, Fraction(ctx.s, ctx.r))
    smat = s_matrix_phi(p)
    back = sum(smat[idx, j] * eichler_limit_complex(phi_basis(p, b), P,
                                                    Fraction(-ctx.r, ctx.s))
               for j, b in enumerate(labels))
    prefac = cmath.sqrt(ctx.r / (1j * ctx.s))
    return direct + prefac * back - trivial_series(f, P, K, ctx)


def theta_truncated(f: PeriodicFunction, P: int, tau: complex, cutoff: int,
                    scale=Fraction(1)) -> complex:
    """Partial theta sum scale * sum_{0 <= l <= cutoff} l f(l) e^(2 pi i tau l^2/4P).

    Converges like a Gaussian for Im tau > 0; pass scale = 1/2 for the
    triple-basis normalization."""
    if tau.imag <= 0:
        raise ValueError("tau must be in the upper half plane")
    if cutoff < 2 * P:
        raise ValueError("cutoff must cover at least one period")
    total = 0j
    for l in range(cutoff + 1):
        v = f(l)
        if v:
            total += l * v * cmath.exp(2j * math.pi * tau * l * l / (4 * P))
    return float(Fraction(scale)) * total
