"""Exact arithmetic in cyclotomic fields Q(zeta_D).

A CycloNumber is a rational linear combination of the roots of unity
e^(2 pi i k / D), stored sparsely by exponent k mod D.  In this "group
algebra" picture a product of roots is an index addition, which matches how
the big structured sums downstream are indexed.  The representation is not
free: reduction modulo the D-th cyclotomic polynomial happens only where it
matters, namely equality, integrality and inversion.

Zero and integrality tests at composite conductors do not run a dense
polynomial division.  They reduce coordinate-wise over the prime-power
factorization D = prod p^e, using Q(zeta_D) = tensor of the Q(zeta_{p^e})
and the relation 1 + x^t + x^(2t) + ... + x^((p-1)t) = 0 with t = p^(e-1)
in each factor.  The resulting coordinates live on an integral basis of
Z[zeta_D], so "all coordinates integral" is equivalent to power-basis
integrality while staying linear in the support size.
"""

from __future__ import annotations

import cmath
import math
from fractions import Fraction
from functools import lru_cache

from .number_theory import RootContext, euler_phi, moebius

__all__ = [
    "IntPolynomial",
    "CycloNumber",
    "cyclotomic_poly",
    "root_power",
    "to_power_basis",
    "is_integral",
    "invert",
    "eval_complex",
    "xi_power",
    "xi_tilde_power",
]


class IntPolynomial:
    """Dense integer polynomial, ascending coefficients, used for Phi_D."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        c = list(coeffs)
        while len(c) > 1 and c[-1] == 0:
            c.pop()
        self.coeffs = tuple(c)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __eq__(self, other) -> bool:
        return isinstance(other, IntPolynomial) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __mul__(self, other: "IntPolynomial") -> "IntPolynomial":
        a, b = self.coeffs, other.coeffs
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return IntPolynomial(out)

    def divexact(self, other: "IntPolynomial") -> "IntPolynomial":
        """Exact division (remainder must vanish); divisor need not be monic
        but must divide exactly over Z."""
        rem = list(self.coeffs)
        d = other.coeffs
        lead = d[-1]
        out = [0] * (len(rem) - len(d) + 1)
        for shift in range(len(rem) - len(d), -1, -1):
            q, rr = divmod(rem[shift + len(d) - 1], lead)
            if rr:
                raise ArithmeticError("division is not exact")
            if q:
                out[shift] = q
                for j, y in enumerate(d):
                    rem[shift + j] -= q * y
        if any(rem):
            raise ArithmeticError("division left a remainder")
        return IntPolynomial(out)

    def __repr__(self):
        return f"IntPolynomial({list(self.coeffs)})"


@lru_cache(maxsize=None)
def cyclotomic_poly(d: int) -> IntPolynomial:
    """The d-th cyclotomic polynomial via the Moebius product
    prod_{e | d} (x^(d/e) - 1)^mu(e), computed with exact division."""
    if d < 1:
        raise ValueError("d must be >= 1")
    num = IntPolynomial([1])
    den = IntPolynomial([1])
    for e in range(1, d + 1):
        if d % e:
            continue
        mu = moebius(e)
        if mu == 0:
            continue
        factor = IntPolynomial([-1] + [0] * (d // e - 1) + [1])  # x^(d/e) - 1
        if mu == 1:
            num = num * factor
        else:
            den = den * factor
    out = num.divexact(den)
    assert out.degree == euler_phi(d)
    return out


@lru_cache(maxsize=None)
def _tensor_layout(d: int):
    """Reduction tables for the prime-power tensor decomposition of Q(zeta_d).

    Returns (factors, strides) where factors[i] = (pe, table) and table[k]
    describes the local reduction of zeta_{pe}^k to the local power basis:
    a pair (sign, indices).
    """
    factors = []
    n = d
    p = 2
    while p * p <= n:
        if n % p == 0:
            pe = 1
            while n % p == 0:
                n //= p
                pe *= p
            t = pe // p
            table = []
            for k in range(pe):
                block, j = divmod(k, t)
                if block < p - 1:
                    table.append((1, (k,)))
                else:
                    table.append((-1, tuple(a * t + j for a in range(p - 1))))
            factors.append((pe, tuple(table)))
        p += 1 if p == 2 else 2
    if n > 1:
        pe, t = n, 1
        table = []
        for k in range(pe):
            if k < pe - 1:
                table.append((1, (k,)))
            else:
                table.append((-1, tuple(range(pe - 1))))
        factors.append((pe, tuple(table)))

    strides = []
    acc = 1
    for pe, _table in factors:
        strides.append(acc)
        acc *= euler_phi(pe)
    return tuple(factors), tuple(strides)


class CycloNumber:
    """An exact element of Q(zeta_D), with D the conductor."""

    __slots__ = ("D", "c")

    def __init__(self, D: int, coeffs: dict | None = None):
        if D < 1:
            raise ValueError("conductor must be >= 1")
        self.D = D
        c: dict[int, Fraction] = {}
        if coeffs:
            for k, v in coeffs.items():
                v = Fraction(v)
                if v:
                    k %= D
                    w = c.get(k)
                    if w is None:
                        c[k] = v
                    else:
                        w += v
                        if w:
                            c[k] = w
                        else:
                            del c[k]
        self.c = c

    # -- constructors -------------------------------------------------

    @staticmethod
    def zero(D: int = 1) -> "CycloNumber":
        return CycloNumber(D)

    @staticmethod
    def one() -> "CycloNumber":
        return CycloNumber(1, {0: 1})

    @staticmethod
    def from_rational(q) -> "CycloNumber":
        return CycloNumber(1, {0: Fraction(q)})

    @staticmethod
    def from_turns(t) -> "CycloNumber":
        """e^(2 pi i t) for rational t (a 'turn' is a full revolution)."""
        t = Fraction(t)
        return CycloNumber(t.denominator, {t.numerator % t.denominator: 1})

    @staticmethod
    def from_int_dict(D: int, coeffs: dict[int, int], den: int = 1) -> "CycloNumber":
        """Fast constructor from integer accumulator dicts, divided by den.

        Keys must already be distinct residues mod D (accumulators built
        with `% D` keys satisfy this by construction)."""
        out = CycloNumber(D)
        if den == 1:
            out.c = {k: Fraction(v) for k, v in coeffs.items() if v}
        else:
            out.c = {k: Fraction(v, den) for k, v in coeffs.items() if v}
        return out

    # -- conductor plumbing -------------------------------------------

    def embed(self, M: int) -> "CycloNumber":
        """Rewrite in conductor M (a multiple of D)."""
        if M == self.D:
            return self
        if M % self.D:
            raise ValueError(f"{M} is not a multiple of conductor {self.D}")
        f = M // self.D
        out = CycloNumber(M)
        out.c = {k * f: v for k, v in self.c.items()}
        return out

    def reduce_conductor(self) -> "CycloNumber":
        """Shrink the conductor by the gcd of all exponents (and D)."""
        g = self.D
        for k in self.c:
            g = math.gcd(g, k)
            if g == 1:
                return self
        if g == 1 or g == 0:
            return self
        out = CycloNumber(self.D // g)
        out.c = {k // g: v for k, v in self.c.items()}
        return out

    @staticmethod
    def _common(a: "CycloNumber", b: "CycloNumber"):
        m = math.lcm(a.D, b.D)
        return a.embed(m), b.embed(m)

    # -- ring operations ----------------------------------------------

    def __add__(self, other) -> "CycloNumber":
        if not isinstance(other, CycloNumber):
            other = CycloNumber.from_rational(other)
        a, b = CycloNumber._common(self, other)
        out = CycloNumber(a.D)
        c = dict(a.c)
        for k, v in b.c.items():
            w = c.get(k)
            if w is None:
                c[k] = v
            else:
                w += v
                if w:
                    c[k] = w
                else:
                    del c[k]
        out.c = c
        return out

    __radd__ = __add__

    def __neg__(self) -> "CycloNumber":
        out = CycloNumber(self.D)
        out.c = {k: -v for k, v in self.c.items()}
        return out

    def __sub__(self, other) -> "CycloNumber":
        return self + (-other if isinstance(other, CycloNumber)
                       else CycloNumber.from_rational(-Fraction(other)))

    def __rsub__(self, other) -> "CycloNumber":
        return (-self) + other

    def __mul__(self, other) -> "CycloNumber":
        if not isinstance(other, CycloNumber):
            q = Fraction(other)
            out = CycloNumber(self.D)
            if q:
                out.c = {k: v * q for k, v in self.c.items()}
            return out
        a, b = CycloNumber._common(self, other)
        if len(a.c) > len(b.c):
            a, b = b, a
        acc: dict[int, Fraction] = {}
        D = a.D
        for k1, v1 in a.c.items():
            for k2, v2 in b.c.items():
                k = k1 + k2
                if k >= D:
                    k -= D
                w = acc.get(k)
                if w is None:
                    acc[k] = v1 * v2
                else:
                    w += v1 * v2
                    if w:
                        acc[k] = w
                    else:
                        del acc[k]
        out = CycloNumber(D)
        out.c = acc
        return out

    __rmul__ = __mul__

    def __truediv__(self, other) -> "CycloNumber":
        if isinstance(other, CycloNumber):
            return self * other.invert()
        return self * (1 / Fraction(other))

    def conjugate(self) -> "CycloNumber":
        out = CycloNumber(self.D)
        out.c = {(-k) % self.D: v for k, v in self.c.items()}
        return out

    def __pow__(self, n: int) -> "CycloNumber":
        if len(self.c) == 1:
            ((k, v),) = self.c.items()
            out = CycloNumber(self.D)
            out.c = {(k * n) % self.D: v ** n}
            return out
        if n < 0:
            return self.invert() ** (-n)
        result = CycloNumber.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    # -- reduction, equality, integrality -----------------------------

    def _tensor_coords(self) -> dict[int, Fraction]:
        """Coordinates on the tensor integral basis of Z[zeta_D]."""
        factors, strides = _tensor_layout(self.D)
        coords: dict[int, Fraction] = {}
        D = self.D
        for k, v in self.c.items():
            # expand k across the prime power factors
            terms = [(1, 0)]
            for (pe, table), stride in zip(factors, strides):
                sign, idxs = table[k % pe]
                terms = [(sg * sign, base + idx * stride)
                         for sg, base in terms for idx in idxs]
            for sg, flat in terms:
                w = coords.get(flat)
                val = v if sg > 0 else -v
                if w is None:
                    coords[flat] = val
                else:
                    w += val
                    if w:
                        coords[flat] = w
                    else:
                        del coords[flat]
        return coords

    def is_zero(self) -> bool:
        if not self.c:
            return True
        return not self._tensor_coords()

    def is_rational(self) -> bool:
        coords = self._tensor_coords()
        return not coords or set(coords) == {0}

    def as_rational(self) -> Fraction:
        coords = self._tensor_coords()
        if not coords:
            return Fraction(0)
        if set(coords) == {0}:
            return coords[0]
        raise ValueError("value is not rational")

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = CycloNumber.from_rational(other)
        if not isinstance(other, CycloNumber):
            return NotImplemented
        return (self - other).is_zero()

    __hash__ = None  # mutable-ish container; equality is field equality

    def is_integral(self) -> bool:
        """True iff the value lies in Z[zeta_D] (all integral-basis coords in Z)."""
        return all(v.denominator == 1 for v in self._tensor_coords().values())

    def to_power_basis(self) -> list[Fraction]:
        """Coefficients of the canonical representative of degree < phi(D)
        modulo the D-th cyclotomic polynomial."""
        phi = euler_phi(self.D)
        dense = [Fraction(0)] * self.D
        for k, v in self.c.items():
            dense[k] += v
        mod = cyclotomic_poly(self.D).coeffs
        deg = len(mod) - 1
        for i in range(self.D - 1, deg - 1, -1):
            lead = dense[i]
            if lead:
                dense[i] = Fraction(0)
                for j in range(deg):
                    if mod[j]:
                        dense[i - deg + j] -= lead * mod[j]
        return dense[:phi]

    # -- inversion ------------------------------------------------------

    def invert(self) -> "CycloNumber":
        """Multiplicative inverse in Q(zeta_D)."""
        if not self.c:
            raise ZeroDivisionError("zero has no inverse")
        if len(self.c) == 1:
            ((k, v),) = self.c.items()
            out = CycloNumber(self.D)
            out.c = {(-k) % self.D: 1 / v}
            return out
        mod = [Fraction(x) for x in cyclotomic_poly(self.D).coeffs]
        a = self.to_power_basis()
        while a and not a[-1]:
            a.pop()
        if not a:
            raise ZeroDivisionError("zero has no inverse")
        # extended Euclid over Q[x]: find u with u*a = gcd (a nonzero constant mod Phi_D)
        r0, r1 = mod, a
        s0, s1 = [Fraction(0)], [Fraction(1)]

        def polymod(num, den):
            num = num[:]
            q = [Fraction(0)] * max(1, len(num) - len(den) + 1)
            inv_lead = 1 / den[-1]
            for shift in range(len(num) - len(den), -1, -1):
                coef = num[shift + len(den) - 1] * inv_lead
                if coef:
                    q[shift] = coef
                    for j, y in enumerate(den):
                        num[shift + j] -= coef * y
            while num and not num[-1]:
                num.pop()
            return q, num

        def polysub_mul(a_, q, b_):
            # a - q*b
            out = a_[:] + [Fraction(0)] * max(0, len(q) + len(b_) - 1 - len(a_))
            for i, x in enumerate(q):
                if x:
                    for j, y in enumerate(b_):
                        out[i + j] -= x * y
            while out and not out[-1]:
                out.pop()
            return out

        while len(r1) > 1:
            q, rem = polymod(r0, r1)
            r0, r1 = r1, rem
            s0, s1 = s1, polysub_mul(s0, q, s1)
        if not r1:
            raise ZeroDivisionError("element is a zero divisor (not in the field)")
        const = r1[0]
        out = CycloNumber(self.D)
        out.c = {i: v / const for i, v in enumerate(s1) if v}
        return out

    # -- numerics --------------------------------------------------------

    def eval_complex(self) -> complex:
        tau = 2 * math.pi / self.D
        total = 0j
        for k, v in self.c.items():
            total += float(v) * cmath.exp(1j * tau * k)
        return total

    def __repr__(self):
        if not self.c:
            return "CycloNumber(0)"
        items = sorted(self.c.items())
        body = " + ".join(f"({v})*z{self.D}^{k}" for k, v in items[:6])
        if len(items) > 6:
            body += f" + ... [{len(items)} terms]"
        return f"CycloNumber<{self.D}>({body})"


# -- module-level operation aliases (thin wrappers over methods) ---------

def root_power(D: int, k: int) -> CycloNumber:
    """The root of unity e^(2 pi i k / D)."""
    if D < 1:
        raise ValueError("conductor must be >= 1")
    return CycloNumber(D, {k % D: 1})


def to_power_basis(x: CycloNumber) -> list[Fraction]:
    return x.to_power_basis()


def is_integral(x: CycloNumber) -> bool:
    return x.is_integral()


def invert(x: CycloNumber) -> CycloNumber:
    return x.invert()


def eval_complex(x: CycloNumber) -> complex:
    return x.eval_complex()


# -- root-context helpers -------------------------------------------------

def xi_power(ctx: RootContext, x) -> CycloNumber:
    """xi^x = e^(2 pi i s x / r) for rational x, exact."""
    return CycloNumber.from_turns(Fraction(x) * ctx.s / ctx.r)


def xi_tilde_power(ctx: RootContext, x) -> CycloNumber:
    """xi~^x = e^(-2 pi i r x / s) for rational x, exact."""
    return CycloNumber.from_turns(-Fraction(x) * ctx.r / ctx.s)
