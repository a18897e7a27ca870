"""WRT invariants of Seifert fibered rational homology spheres at roots of
unity: the exact structured-sum closed form, the lens space closed form,
the brute-force colored-Jones surgery oracle, and the normalized invariant.

All exact values live in cyclotomic fields.  The closed form's
transcendental-looking prefactor is eliminated without floating point: the
quadratic Gauss sum

    G = sum_{n mod 2Pr} xi^(-n^2/4P)

satisfies G * conj(G) = 2 P r gcd(s, P) exactly, so dividing by 2G is a
conjugation, an integer-dict product and one rational division.  Quantum
integer denominators are cleared with the root-of-unity identity

    1/(chi - 1) = (1/h) sum_{t=0}^{h-1} t chi^t        (chi^h = 1, chi != 1),

with h the multiplicative order of chi, which is at most r here.
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass
from fractions import Fraction

from .cyclotomic import CycloNumber, root_power, xi_power, xi_tilde_power
from .intmatrix import eigenvalue_sign_counts
from .number_theory import RootContext, jacobi
from .seifert import SeifertData, invariants

__all__ = [
    "WrtValue",
    "seifert_gauss_sum",
    "seifert_hat_sum",
    "wrt_seifert_closed",
    "tau_seifert_closed",
    "w_seifert_closed",
    "sqrt_homology_order",
    "w_normalized",
    "quantum_integer",
    "colored_jones_seifert_link",
    "f_surgery_normalization",
    "wrt_brute_surgery",
    "wrt_lens",
    "wrt_lens_brute",
    "surgery_linking_matrix",
    "max_color_tuples",
]

MAX_COLORS_ENV = "QMWRT_MAX_COLORS"
DEFAULT_MAX_COLORS = 10 ** 6


def max_color_tuples() -> int:
    """Cap on the brute-force color space, configurable via QMWRT_MAX_COLORS."""
    raw = os.environ.get(MAX_COLORS_ENV)
    return int(raw) if raw else DEFAULT_MAX_COLORS


@dataclass
class WrtValue:
    """A WRT-type invariant value: numeric always, exact when computed.

    normalization is "tau" for the bare invariant (1 on S^3), "W" for
    sqrt(H) (H/s) (xi - 1) tau, or "prefactored-W" for xi^Delta (xi-1) tau
    with the recorded rational exponent Delta.
    """

    numeric: complex
    exact: CycloNumber | None = None
    normalization: str = "tau"
    prefactor_exponent: Fraction | None = None


def _one_over_root_minus_one(D: int, k: int, h: int) -> CycloNumber:
    """1/(zeta_D^k - 1) for a root of multiplicative order h > 1."""
    acc = {(k * t) % D: t for t in range(1, h)}
    return CycloNumber.from_int_dict(D, acc, h)


# -- the structured closed-form sum ----------------------------------------


def seifert_gauss_sum(P: int, ctx: RootContext) -> CycloNumber:
    """G = sum_{n mod 2Pr} xi^(-n^2/4P), exact of conductor 4Pr."""
    D = 4 * P * ctx.r
    acc: dict[int, int] = {}
    s = ctx.s
    for n in range(2 * P * ctx.r):
        k = (-s * n * n) % D
        acc[k] = acc.get(k, 0) + 1
    return CycloNumber.from_int_dict(D, acc)


def seifert_gauss_norm(P: int, ctx: RootContext) -> int:
    """G * conj(G) = 2 P r gcd(s, P), proved by completing the square."""
    return 2 * P * ctx.r * math.gcd(ctx.s, P)


def seifert_hat_sum(d: SeifertData, ctx: RootContext,
                    fast: bool = True) -> CycloNumber:
    """The structured sum of the Seifert closed form, exact of conductor 4Pr:

        sum_{n mod 2Pr, r does not divide n} xi^(-H n^2 / 4P)
            prod_j (xi^(n/2p_j) - xi^(-n/2p_j)) / (xi^(n/2) - xi^(-n/2))^(m-2)

    for data normalized to b = 0 with e > 0.  Three exceptional fibers take
    an integer-dict fast path; fast=False forces the generic term-by-term
    route (kept as an in-module cross check).
    """
    nd = d.normalized_b0()
    inv = invariants(nd)
    if inv.e <= 0:
        raise ValueError("hat sum requires e > 0 data; reverse orientation first")
    P, H, r, s = inv.P, inv.H, ctx.r, ctx.s
    m = nd.m
    D = 4 * P * r
    ps = [p for p, _ in nd.fibers]

    if m == 3 and fast:
        return _hat_sum_three_fibers(ps, P, H, D, r, s)

    # generic fiber count: cyclotomic arithmetic per term, with the
    # denominator 1/(zeta^a - zeta^-a) = zeta^a (1/h) sum_t t zeta^(2at)
    # cleared through the order h = r/gcd(n, r) of zeta^(2a)
    total = CycloNumber.zero(D)
    for n in range(2 * P * r):
        if n % r == 0:
            continue
        term = root_power(D, (-s * H * n * n) % D)
        for p in ps:
            c = 2 * P * s // p
            term = term * (root_power(D, c * n) - root_power(D, -c * n))
        if m != 2:
            a = (2 * P * s * n) % D
            if m > 2:
                h = r // math.gcd(n, r)
                inv_denom = root_power(D, a) \
                    * _one_over_root_minus_one(D, 2 * a % D, h)
                for _ in range(m - 2):
                    term = term * inv_denom
            else:
                denom = root_power(D, a) - root_power(D, -a)
                for _ in range(2 - m):
                    term = term * denom
        total = total + term
    return total


def _hat_sum_three_fibers(ps, P, H, D, r, s) -> CycloNumber:
    """Integer-dict fast path for three exceptional fibers."""
    cs = [2 * P * s // p for p in ps]
    eps_terms = []
    for e1 in (1, -1):
        for e2 in (1, -1):
            for e3 in (1, -1):
                eps_terms.append((e1 * e2 * e3,
                                  e1 * cs[0] + e2 * cs[1] + e3 * cs[2]))
    acc: dict[int, int] = {}
    a_unit = 2 * P * s
    for n in range(2 * P * r):
        if n % r == 0:
            continue
        base = (-s * H * n * n) % D
        a = (a_unit * n) % D
        h = r // math.gcd(n, r)
        scale = r // h
        # 1/(xi^(n/2) - xi^(-n/2)) = (1/h) sum_{t=1}^{h-1} t zeta^(a(1+2t))
        for t in range(1, h):
            coeff = t * scale
            shift = (base + a * (1 + 2 * t)) % D
            for sign, delta in eps_terms:
                k = (shift + delta * n) % D
                v = acc.get(k, 0) + sign * coeff * 1
                if v:
                    acc[k] = v
                elif k in acc:
                    del acc[k]
    return CycloNumber.from_int_dict(D, acc, r)


def _closed_prefactored_positive(d: SeifertData, ctx: RootContext,
                                 exact: bool) -> WrtValue:
    inv = invariants(d)
    nd = d.normalized_b0()
    hat = seifert_hat_sum(nd, ctx)
    g = seifert_gauss_sum(inv.P, ctx)
    norm = seifert_gauss_norm(inv.P, ctx)
    numeric = hat.eval_complex() / (2 * g.eval_complex())
    value = None
    if exact:
        value = hat * g.conjugate() * Fraction(1, 2 * norm)
    delta = inv.phi / 4 - Fraction(1, 2)
    return WrtValue(numeric, value, "prefactored-W", delta)


def _tau_from_prefactored(exact, numeric, d: SeifertData, ctx: RootContext):
    inv = invariants(d)
    delta = inv.phi / 4 - Fraction(1, 2)
    pre = xi_power(ctx, -delta)
    one_over = _one_over_root_minus_one(4 * ctx.r, 4 * ctx.s % (4 * ctx.r), ctx.r)
    tau_exact = exact * pre * one_over if exact is not None else None
    xi_c = xi_power(ctx, 1).eval_complex()
    tau_num = numeric * pre.eval_complex() / (xi_c - 1)
    return tau_exact, tau_num


def _prefactored_from_tau(tau_exact, tau_num, d: SeifertData,
                          ctx: RootContext) -> WrtValue:
    inv = invariants(d)
    delta = inv.phi / 4 - Fraction(1, 2)
    pre = xi_power(ctx, delta)
    xi_minus_1 = xi_power(ctx, 1) - 1
    exact = pre * xi_minus_1 * tau_exact if tau_exact is not None else None
    numeric = pre.eval_complex() * xi_minus_1.eval_complex() * tau_num
    return WrtValue(numeric, exact, "prefactored-W", delta)


def _tau_qhs_reciprocity(d: SeifertData, ctx: RootContext) -> CycloNumber:
    """tau for a rational homology sphere presented with integer framings
    (all q_j = +-1), by applying Gauss sum reciprocity to each fiber sum.

    With framings f_j = p_j q_j the fiber factor of the surgery state sum is

        S_j(n0) = xi^(-f_j/4) delta^-2 [A_j(n0+1) - A_j(n0-1)],
        A_j(w)  = sum_{n mod 2r} xi^((f_j n^2 + 2 w n)/4),

    and reciprocity turns A_j(w) into E_j K_j xi^(-w^2/4f_j) B_j(w) where

        K_j = sum_{l mod s} xi~^(f_j l^2),
        B_j(w) = sum_{a mod |f_j|} e^(-2 pi i s a (r a + w)/f_j),

    and the scalar E_j = e^(pi i sgn(f_j)/4) sqrt(2r) / sqrt(s |f_j|) is
    pinned exactly as the ratio A_j(w0) / (K_j B_j(w0)) at a probe value w0.
    Requires gcd(s, p_j) = 1.
    """
    r, s = ctx.r, ctx.s
    for p, q in d.fibers:
        if q not in (1, -1):
            raise ValueError("reciprocity form needs an integer-framed "
                             "presentation (all q_j = +-1)")
        if math.gcd(s, p) != 1:
            raise ValueError(f"s={s} must be coprime to the fiber order {p}")
    D = 4 * r
    delta = xi_power(ctx, Fraction(1, 2)) - xi_power(ctx, Fraction(-1, 2))
    inv_delta2 = (delta * delta).invert()

    def a_sum(f: int, w: int) -> CycloNumber:
        acc: dict[int, int] = {}
        for n in range(2 * r):
            k = (s * (f * n * n + 2 * w * n)) % D
            acc[k] = acc.get(k, 0) + 1
        return CycloNumber.from_int_dict(D, acc)

    def b_sum(f: int, w: int) -> CycloNumber:
        F = abs(f)
        sgn = 1 if f > 0 else -1
        acc: dict[int, int] = {}
        for a in range(F):
            k = (-sgn * s * a * (r * a + w)) % F
            acc[k] = acc.get(k, 0) + 1
        return CycloNumber.from_int_dict(F, acc)

    fiber_scalar = []   # E_j K_j, exact
    fiber_b = []        # B_j tables, indexed by w mod |f_j|
    for p, q in d.fibers:
        f = p * q
        F = abs(f)
        for w0 in range(F + 1):
            b0 = b_sum(f, w0)
            if not b0.is_zero():
                break
        else:
            raise ArithmeticError("no nonvanishing probe for the fiber sum")
        ek = a_sum(f, w0) * b0.invert() * xi_power(ctx, Fraction(w0 * w0, 4 * f))
        fiber_scalar.append(ek)
        fiber_b.append((f, {w % F: b_sum(f, w % F) for w in range(F)}))

    total = CycloNumber.zero(D)
    for n0 in range(1, r):
        part = xi_power(ctx, Fraction(d.b * (n0 * n0 - 1), 4))
        part = part * delta * _one_over_root_minus_one(D, 4 * s * n0 % D, r // math.gcd(n0, r)) \
            * xi_power(ctx, Fraction(n0, 2))
        # the line above is 1/[n0] = delta * xi^(n0/2) / (xi^(n0) - 1)
        for (f, btab), ek in zip(fiber_b, fiber_scalar):
            F = abs(f)
            plus = xi_power(ctx, Fraction(-(n0 + 1) ** 2, 4 * f)) * btab[(n0 + 1) % F]
            minus = xi_power(ctx, Fraction(-(n0 - 1) ** 2, 4 * f)) * btab[(n0 - 1) % F]
            part = part * xi_power(ctx, Fraction(-f, 4)) * inv_delta2 \
                * ek * (plus - minus)
        total = total + part
    b_plus, b_minus, zero = eigenvalue_sign_counts(surgery_linking_matrix(d))
    if zero:
        raise ValueError("surgery matrix is degenerate (not a QHS)")
    norm = CycloNumber.one()
    if b_plus:
        norm = norm * f_surgery_normalization(1, ctx) ** b_plus
    if b_minus:
        norm = norm * f_surgery_normalization(-1, ctx) ** b_minus
    return total * norm.invert()


def tau_seifert_closed(d: SeifertData, ctx: RootContext,
                       exact: bool = True) -> WrtValue:
    """tau from the closed form, normalized to tau(S^3) = 1.

    Integer homology spheres use the merged structured sum; other rational
    homology spheres use the per-fiber reciprocity form (which requires an
    integer-framed presentation).  Data with e < 0 is handled by orientation
    reversal plus conjugation (reversing orientation conjugates the
    invariant)."""
    inv = invariants(d)
    if inv.e == 0:
        raise ValueError("closed form needs a rational homology sphere (e != 0)")
    if inv.e < 0:
        rev = tau_seifert_closed(d.reversed_orientation(), ctx, exact)
        return WrtValue(rev.numeric.conjugate(),
                        rev.exact.conjugate() if rev.exact is not None else None,
                        "tau")
    if inv.H == 1:
        v = _closed_prefactored_positive(d, ctx, exact)
        te, tn = _tau_from_prefactored(v.exact, v.numeric, d, ctx)
        return WrtValue(tn, te, "tau")
    tau = _tau_qhs_reciprocity(d, ctx)
    return WrtValue(tau.eval_complex(), tau, "tau")


def wrt_seifert_closed(d: SeifertData, ctx: RootContext,
                       exact: bool = True) -> WrtValue:
    """The prefactored invariant xi^(phi/4 - 1/2) (xi - 1) tau, exactly.

    For integer homology spheres this is hat_sum / (2 G), with the division
    by 2G exact because G conj(G) = 2 P r gcd(s, P); other rational homology
    spheres and e < 0 orientations are assembled from tau_seifert_closed.
    """
    inv = invariants(d)
    if inv.e == 0:
        raise ValueError("closed form needs a rational homology sphere (e != 0)")
    if inv.e < 0 or inv.H != 1:
        t = tau_seifert_closed(d, ctx, exact)
        return _prefactored_from_tau(t.exact, t.numeric, d, ctx)
    return _closed_prefactored_positive(d, ctx, exact)


def sqrt_homology_order(H: int) -> CycloNumber:
    """sqrt(H) for odd H >= 1, exactly: the Gauss sum G(1, H) for
    H = 1 mod 4, and -i G(1, H) for H = 3 mod 4."""
    if H < 1 or H % 2 == 0:
        raise ValueError("homology order must be odd and positive")
    if H == 1:
        return CycloNumber.one()
    acc: dict[int, int] = {}
    for n in range(H):
        k = (n * n) % H
        acc[k] = acc.get(k, 0) + 1
    g = CycloNumber.from_int_dict(H, acc)
    if H % 4 == 1:
        return g
    return root_power(4, 3) * g  # -i * (i sqrt H)


def w_normalized(tau: WrtValue, H: int, ctx: RootContext) -> WrtValue:
    """W = sqrt(H) (H/s) (xi - 1) tau."""
    if math.gcd(ctx.s, H) != 1:
        raise ValueError(f"s={ctx.s} must be coprime to H={H}")
    jac = jacobi(H, ctx.s)
    xi_minus_1 = xi_power(ctx, 1) - 1
    sqrt_h = sqrt_homology_order(H)
    exact = None
    if tau.exact is not None:
        exact = jac * sqrt_h * xi_minus_1 * tau.exact
    numeric = (jac * sqrt_h.eval_complex() * xi_minus_1.eval_complex()
               * tau.numeric)
    return WrtValue(numeric, exact, "W")


def w_seifert_closed(d: SeifertData, ctx: RootContext,
                     exact: bool = True) -> WrtValue:
    """W = sqrt(H) (H/s) (xi - 1) tau via the closed form, exactly."""
    inv = invariants(d)
    v = wrt_seifert_closed(d, ctx, exact)
    # W = sqrt(H) (H/s) xi^(1/2 - phi/4) * prefactored value
    jac = jacobi(inv.H, ctx.s)
    pre = xi_power(ctx, Fraction(1, 2) - inv.phi / 4)
    sqrt_h = sqrt_homology_order(inv.H)
    e = jac * sqrt_h * pre * v.exact if v.exact is not None else None
    n = jac * sqrt_h.eval_complex() * pre.eval_complex() * v.numeric
    return WrtValue(n, e, "W")


# -- colored Jones / surgery oracle ----------------------------------------


def quantum_integer(n: int, ctx: RootContext) -> CycloNumber:
    """[n]_q = (q^(n/2) - q^(-n/2)) / (q^(1/2) - q^(-1/2)) at q = xi,
    as the exact Laurent sum q^((n-1)/2) + q^((n-3)/2) + ... + q^(-(n-1)/2)."""
    if n < 0:
        return -quantum_integer(-n, ctx)
    D = 4 * ctx.r
    acc: dict[int, int] = {}
    for i in range(n):
        k = (2 * ctx.s * (n - 1 - 2 * i)) % D
        acc[k] = acc.get(k, 0) + 1
    return CycloNumber.from_int_dict(D, acc)


def surgery_linking_matrix(d: SeifertData) -> list[list[int]]:
    """Linking matrix of the integer surgery presentation (requires all
    q_j = +-1): central b-framed unknot linked once with each p_j q_j-framed
    fiber unknot."""
    for p, q in d.fibers:
        if q not in (1, -1):
            raise ValueError("integer surgery needs q_j = +-1 (framing p_j/q_j)")
    m = d.m
    out = [[0] * (m + 1) for _ in range(m + 1)]
    out[0][0] = d.b
    for j, (p, q) in enumerate(d.fibers, start=1):
        out[0][j] = out[j][0] = 1
        out[j][j] = p * q
    return out


def colored_jones_seifert_link(d: SeifertData, colors: tuple[int, ...],
                               ctx: RootContext) -> CycloNumber:
    """Colored Jones value of the Seifert surgery link at q = xi:

        q^(b(n0^2-1)/4) / [n0]^2 * prod_j q^(f_j (n_j^2-1)/4) [n0 n_j],

    with framings f_j = p_j q_j (so q_j = +-1 is required) and colors
    (n0, n1, ..., nm)."""
    if d.m == 0:
        raise ValueError("the Seifert link shape needs at least one fiber; "
                         "a bare framed unknot is a lens space")
    if len(colors) != d.m + 1:
        raise ValueError("need one color per link component")
    for p, q in d.fibers:
        if q not in (1, -1):
            raise ValueError("integer surgery needs q_j = +-1")
    n0 = colors[0]
    if n0 % ctx.r == 0:
        raise ValueError("[n0] vanishes at this root; Jones value undefined")
    D = 4 * ctx.r
    s = ctx.s
    val = root_power(D, s * d.b * (n0 * n0 - 1))
    q0 = quantum_integer(n0, ctx)
    inv_q0 = q0.invert()
    val = val * inv_q0 * inv_q0
    for (p, q), nj in zip(d.fibers, colors[1:]):
        f = p * q
        val = val * root_power(D, s * f * (nj * nj - 1)) \
                  * quantum_integer(n0 * nj, ctx)
    return val


def f_surgery_normalization(sign: int, ctx: RootContext) -> CycloNumber:
    """F(U^sign) = sum_{n=1}^{r-1} q^(sign(n^2-1)/4) [n]^2, exact."""
    D = 4 * ctx.r
    s = ctx.s
    acc: dict[int, int] = {}
    for n in range(1, ctx.r):
        base = (sign * s * (n * n - 1)) % D
        for i in range(n):
            for j in range(n):
                k = (base + 4 * s * (n - 1 - i - j)) % D
                acc[k] = acc.get(k, 0) + 1
    return CycloNumber.from_int_dict(D, acc)


def wrt_brute_surgery(d: SeifertData, ctx: RootContext) -> WrtValue:
    """tau via the defining surgery state sum over colors {1..r-1}^(m+1).

    The inner sums factor over the fiber components for each central color,
    so the cost is O(m r^2) dictionary convolutions rather than r^(m+1)
    terms; the documented color-space cap still applies to the nominal
    (r-1)^(m+1) color space.
    """
    if d.m == 0:
        raise ValueError("the Seifert link shape needs at least one fiber; "
                         "use the framed-unknot route for lens spaces")
    r, s = ctx.r, ctx.s
    nominal = (r - 1) ** (d.m + 1)
    if nominal > max_color_tuples():
        raise ValueError(f"color space {nominal} exceeds cap {max_color_tuples()}; "
                         f"raise {MAX_COLORS_ENV} to override")
    D = 4 * r
    total = CycloNumber.zero(D)
    for n0 in range(1, r):
        q0 = quantum_integer(n0, ctx)
        inv_q0 = q0.invert()
        # J * prod [n_i] has one surviving 1/[n0]
        part = root_power(D, s * d.b * (n0 * n0 - 1)) * inv_q0
        for p, q in d.fibers:
            f = p * q
            inner = CycloNumber.zero(D)
            for nj in range(1, r):
                inner = inner + root_power(D, s * f * (nj * nj - 1)) \
                    * quantum_integer(n0 * nj, ctx) * quantum_integer(nj, ctx)
            part = part * inner
        total = total + part
    b_plus, b_minus, zero = eigenvalue_sign_counts(surgery_linking_matrix(d))
    if zero:
        raise ValueError("surgery matrix is degenerate (not a QHS)")
    norm = CycloNumber.one()
    if b_plus:
        norm = norm * f_surgery_normalization(1, ctx) ** b_plus
    if b_minus:
        norm = norm * f_surgery_normalization(-1, ctx) ** b_minus
    tau = total * norm.invert()
    return WrtValue(tau.eval_complex(), tau, "tau")


# -- lens spaces ------------------------------------------------------------


def lens_sectors(p: int, ctx: RootContext, tilde: bool = False) -> list[CycloNumber]:
    """Abelian sector values W^(a) of L(p,1), a = 0 .. (p-1)/2:

        W^(0) = -x^((5-p)/4) (x^(-1/p) - 1),
        W^(a) = -2 x^((5-p)/4) (x^(-1/p) cos(4 pi c a / p) - 1),

    at x = xi, c = s (direct side) or x = xi~, c = -r (companion side),
    with fractional powers taken canonically: xi^t = e^(2 pi i s t / r) and
    xi~^t = e^(-2 pi i r t / s)."""
    if p < 1 or p % 2 == 0:
        raise ValueError("lens parameter p must be odd and positive "
                         "(mod-2 homology sphere)")
    c = (-ctx.r) if tilde else ctx.s
    if math.gcd(c, p) != 1:
        raise ValueError(f"evaluation parameter {c} must be coprime to p={p}")
    pw = (lambda t: xi_tilde_power(ctx, t)) if tilde else (lambda t: xi_power(ctx, t))
    head = -1 * pw(Fraction(5 - p, 4))
    x_inv_p = pw(Fraction(-1, p))
    sectors: list[CycloNumber] = []
    for a in range((p - 1) // 2 + 1):
        cos2 = (root_power(p, 2 * c * a) + root_power(p, -2 * c * a)) / 2
        body = x_inv_p * cos2 - 1
        sectors.append(head * body if a == 0 else 2 * head * body)
    return sectors


def wrt_lens(p: int, ctx: RootContext) -> tuple[WrtValue, list[CycloNumber]]:
    """W_{L(p,1)} exactly, with its abelian decomposition.

        W = -xi^((5-p)/4) sum_{a mod p} e^(-2 pi i (r/s) s^2 a^2 / p)
            (xi^(-1/p) cos(4 pi s a / p) - 1)

    Returns (W, [W^(0), ..., W^((p-1)/2)]) where the sector values satisfy
    W = sum_a e^(2 pi i (r/s) cs_a) W^(a) with cs_a = -s^2 a^2 / p.
    """
    r, s = ctx.r, ctx.s
    sectors = lens_sectors(p, ctx)
    total = CycloNumber.zero(1)
    for a in range((p - 1) // 2 + 1):
        phase = CycloNumber.from_turns(Fraction(-r * s * a * a, p))
        total = total + phase * sectors[a]
    return (WrtValue(total.eval_complex(), total, "W"), sectors)


def wrt_lens_brute(p: int, ctx: RootContext) -> WrtValue:
    """tau of L(p,1) by p-framed unknot surgery: F(U^p) / F(U^sign(p))."""
    if p == 0:
        raise ValueError("p = 0 is not a rational homology sphere")
    r, s = ctx.r, ctx.s
    D = 4 * r
    acc: dict[int, int] = {}
    for n in range(1, r):
        base = (p * s * (n * n - 1)) % D
        for i in range(n):
            for j in range(n):
                k = (base + 4 * s * (n - 1 - i - j)) % D
                acc[k] = acc.get(k, 0) + 1
    f_up = CycloNumber.from_int_dict(D, acc)
    tau = f_up * f_surgery_normalization(1 if p > 0 else -1, ctx).invert()
    return WrtValue(tau.eval_complex(), tau, "tau")
