"""Axial monogenic functions from holomorphic seeds.

For odd m the transform of a holomorphic f = u + iv against a homogeneous
monogenic polynomial P_k of degree k is the axial function (A + w B) P_k,
where w is the unit vector x_/r and

    A = (2k+m-1)!! * (1/r d/dr)^(k+(m-1)/2) {u(x0, r)},
    B = (2k+m-1)!! * (d/dr ./r)^(k+(m-1)/2) {v(x0, r)},

u, v taken with x -> x0, y -> r.  A and B satisfy the Vekua-type system

    dA/dx0 - dB/dr = ((2k+m-1)/r) B,      dB/dx0 + dA/dr = 0,

which this module checks symbolically.  For polynomial seeds z^n the same
function is also reachable by applying the full Laplacian k+(m-1)/2 times
to (u + w v) P_k, and coincides up to a constant with the CK-extension of
x_^(n-(2k+m-1)) P_k; both alternate routes are implemented as oracles.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .axial import (
    COS,
    E,
    R,
    SIN,
    TRIG_COS,
    TRIG_SIN,
    X0,
    AxialExpr,
    d_lower,
    d_upper,
    q_inv,
    trig_shift,
)
from .cliffpoly import (
    CliffPoly,
    ck_extend_poly,
    is_homogeneous_monogenic,
    laplacian,
    poly_mul,
    radius_sq_poly,
    sample_p0,
    sample_p1,
    vector_power,
)

SEED_NAMES = ("iz", "inv_z", "z_pow", "gauss", "gauss_fund")


class EvenDimensionError(ValueError):
    """The transform hypothesis requires odd m."""


class InvalidPkError(ValueError):
    """The supplied polynomial is not homogeneous monogenic of the right degree."""


def double_factorial(j: int) -> int:
    """j!! with the empty-product conventions (-1)!! = 0!! = 1."""
    if j < -1:
        raise ValueError(f"double factorial undefined for {j}")
    out = 1
    while j > 1:
        out *= j
        j -= 2
    return out


@lru_cache(maxsize=None)
def _coeff_a_row(n: int) -> tuple:
    """Row (a_1^(n), ..., a_n^(n)) of the trig-derivative coefficient table."""
    if n == 1:
        return (1,)
    prev = _coeff_a_row(n - 1)

    def at(nu):
        return prev[nu - 1] if 1 <= nu <= n - 1 else 0

    return tuple(-(2 * (n - 1) - nu) * at(nu) + at(nu - 1) for nu in range(1, n + 1))


def coeff_a(n: int, nu: int) -> int:
    if not 1 <= nu <= n:
        raise ValueError(f"nu={nu} outside 1..{n}")
    return _coeff_a_row(n)[nu - 1]


# --- holomorphic seeds -------------------------------------------------------


@dataclass(frozen=True)
class HoloSeed:
    """Real and imaginary part of a holomorphic f(z), with x -> x0, y -> r.

    The Cauchy-Riemann equations are checked exactly at construction.
    """

    name: str
    u: AxialExpr
    v: AxialExpr
    n: int | None = None

    def __post_init__(self):
        if not (self.u.diff("x0") == self.v.diff("r") and self.u.diff("r") == -self.v.diff("x0")):
            raise ValueError(f"seed {self.name!r} fails the Cauchy-Riemann equations")

    def scaled(self, c) -> "HoloSeed":
        c = Fraction(c)
        return HoloSeed(f"({c})*{self.name}", self.u.scale(c), self.v.scale(c), self.n)

    def __add__(self, other: "HoloSeed") -> "HoloSeed":
        return HoloSeed(f"{self.name}+{other.name}", self.u + other.u, self.v + other.v)


def seed(name: str, n: int | None = None) -> HoloSeed:
    """Built-in seeds: iz, inv_z, z_pow (needs n >= 0), gauss, gauss_fund."""
    if name == "iz":
        # iz = -y + ix
        return HoloSeed(name, -R, X0)
    if name == "inv_z":
        # 1/z = x/(x^2+y^2) - i y/(x^2+y^2)
        return HoloSeed(name, X0 * q_inv(), -(R * q_inv()))
    if name == "z_pow":
        if n is None or n < 0:
            raise ValueError("z_pow seed needs an order n >= 0")
        u = AxialExpr.zero()
        v = AxialExpr.zero()
        for nu in range(n + 1):
            c = Fraction((-1) ** (nu // 2) * math.comb(n, nu))
            term = AxialExpr.term(c, a=n - nu, b=nu)
            if nu % 2 == 0:
                u = u + term
            else:
                v = v + term
        return HoloSeed(name, u, v, n)
    if name == "gauss":
        # exp(z^2/2) = E (cos(xy) + i sin(xy))
        return HoloSeed(name, E * COS, E * SIN)
    if name == "gauss_fund":
        # exp(z^2/2)/z = (E/Q)((x cos + y sin) + i (x sin - y cos))
        eq = E * q_inv()
        u = eq * (X0 * COS + R * SIN)
        v = eq * (X0 * SIN - R * COS)
        return HoloSeed(name, u, v)
    raise ValueError(f"unknown seed {name!r}; choose from {SEED_NAMES}")


# --- the transform -----------------------------------------------------------


@dataclass(frozen=True)
class AxialPair:
    """(A + w B) P_k in dimension m; pk may be None for a generic P_k."""

    m: int
    k: int
    A: AxialExpr
    B: AxialExpr
    pk: CliffPoly | None = None

    @property
    def kappa(self) -> int:
        return 2 * self.k + self.m - 1

    def scaled(self, c) -> "AxialPair":
        c = Fraction(c)
        return AxialPair(self.m, self.k, self.A.scale(c), self.B.scale(c), self.pk)

    def __sub__(self, other: "AxialPair") -> "AxialPair":
        if (self.m, self.k) != (other.m, other.k):
            raise ValueError("axial pairs of different type")
        return AxialPair(self.m, self.k, self.A - other.A, self.B - other.B, self.pk)


def _require_odd(m: int) -> None:
    if m < 1 or m % 2 == 0:
        raise EvenDimensionError(f"the transform requires odd m >= 1, got {m}")


def default_pk(k: int, m: int) -> CliffPoly | None:
    """Shipped samples: 1 for k = 0, x1 e1 - x2 e2 for k = 1, none beyond."""
    if k == 0:
        return sample_p0(m)
    if k == 1 and m >= 2:
        return sample_p1(m)
    return None


def fueter(s: HoloSeed, k: int, m: int, pk: CliffPoly | None = None) -> AxialPair:
    """Transform of a seed via the radial-operator closed formulas.

    A generic P_k (pk = None) is allowed because A and B depend only on
    (k, m); a concrete pk is validated and carried for evaluation.
    """
    _require_odd(m)
    if k < 0:
        raise ValueError("degree k must be nonnegative")
    if pk is None:
        pk = default_pk(k, m)
    if pk is not None:
        report = is_homogeneous_monogenic(pk, k)
        if not report:
            raise InvalidPkError(f"invalid P_k: {report.reason} {report.witness}".strip())
    order = k + (m - 1) // 2
    const = double_factorial(2 * k + m - 1)
    return AxialPair(m, k, d_lower(order, s.u).scale(const), d_upper(order, s.v).scale(const), pk)


def vekua_residual(pair: AxialPair) -> tuple[AxialExpr, AxialExpr]:
    """Both components vanish identically iff (A + w B) P_k is monogenic."""
    r1 = pair.A.diff("x0") - pair.B.diff("r") - pair.B.scale(pair.kappa).div_r()
    r2 = pair.B.diff("x0") + pair.A.diff("r")
    return r1, r2


def vekua_ok(pair: AxialPair) -> bool:
    r1, r2 = vekua_residual(pair)
    return r1.is_zero() and r2.is_zero()


# --- closed forms ------------------------------------------------------------

CLOSED_FORM_IDS = (
    "e1", "e2", "e3", "e4", "e5", "e6", "e7",
    "ex1_full", "ex2_full", "prop2_m3_A", "prop2_m3_B",
)


def _trig_sum(base: str, pairs) -> AxialExpr:
    """Sum of coeff * x0^nu * r^(nu-2n) * trig(x0 r + nu pi/2) terms."""
    out = AxialExpr.zero()
    for coeff, nu, b in pairs:
        sign, tag = trig_shift(base, nu)
        out = out + AxialExpr.term(Fraction(sign) * coeff, a=nu, b=b, t=tag)
    return out


def closed_form(ident: str, n: int | None = None, m: int | None = None, k: int | None = None):
    """Right-hand sides of the tabulated radial-derivative identities.

    e1..e7 return an AxialExpr in n; ex1_full/ex2_full return the (A, B)
    pair of the iz and 1/z transforms for given (m, k); prop2_m3_A/B are
    the two components of the m = 3 Gaussian extension.
    """
    if ident == "e1":
        # (1/r d/dr)^n r = (-1)^(n+1) (2n-3)!! r^(1-2n), asserted for n >= 1
        if n is None or n < 1:
            raise ValueError("e1 is asserted only for n >= 1")
        return AxialExpr.term(Fraction((-1) ** (n + 1) * double_factorial(2 * n - 3)), b=1 - 2 * n)
    if ident == "e2":
        if n is None or n < 0:
            raise ValueError("e2 needs n >= 0")
        return AxialExpr.term(Fraction((-1) ** n * 2 ** n * math.factorial(n)), a=1, p=n + 1)
    if ident == "e3":
        if n is None or n < 0:
            raise ValueError("e3 needs n >= 0")
        return AxialExpr.term(Fraction((-1) ** n * 2 ** n * math.factorial(n)), b=1, p=n + 1)
    if ident == "e4":
        if n is None or n < 0:
            raise ValueError("e4 needs n >= 0")
        return AxialExpr.term(Fraction((-1) ** n), g=1)
    if ident in ("e5", "e6"):
        # empty sum at n = 0; the identity itself is asserted from n >= 1
        if n is None or n < 0:
            raise ValueError(f"{ident} needs n >= 0")
        base = TRIG_COS if ident == "e5" else TRIG_SIN
        return _trig_sum(base, ((Fraction(coeff_a(n, nu)), nu, nu - 2 * n) for nu in range(1, n + 1)))
    if ident == "e7":
        if n is None or n < 0:
            raise ValueError("e7 needs n >= 0")
        return _trig_sum(TRIG_SIN, ((Fraction(coeff_a(n + 1, nu + 1)), nu, nu - 2 * n) for nu in range(n + 1)))
    if ident == "ex1_full":
        if m is None or k is None:
            raise ValueError("ex1_full needs m and k")
        _require_odd(m)
        if 2 * k + m - 4 < -1:
            raise ValueError("ex1_full constant (2k+m-4)!! undefined for this (m, k)")
        c = Fraction(
            (-1) ** (k + (m - 1) // 2)
            * double_factorial(2 * k + m - 1)
            * double_factorial(2 * k + m - 4)
        )
        a_part = AxialExpr.term(c, b=-(2 * k + m - 2))
        b_part = AxialExpr.term(c * (2 * k + m - 2), a=1, b=-(2 * k + m - 1))
        return a_part, b_part
    if ident == "ex2_full":
        if m is None or k is None:
            raise ValueError("ex2_full needs m and k")
        _require_odd(m)
        c = Fraction((-1) ** (k + (m - 1) // 2) * double_factorial(2 * k + m - 1) ** 2)
        p = (2 * k + m + 1) // 2
        return AxialExpr.term(c, a=1, p=p), AxialExpr.term(-c, b=1, p=p)
    if ident == "prop2_m3_A":
        return E * COS + AxialExpr.term(1, a=1, b=-1, g=1, t=TRIG_SIN)
    if ident == "prop2_m3_B":
        return (
            E * SIN
            + AxialExpr.term(1, b=-2, g=1, t=TRIG_SIN)
            - AxialExpr.term(1, a=1, b=-1, g=1, t=TRIG_COS)
        )
    raise ValueError(f"unknown closed form {ident!r}; choose from {CLOSED_FORM_IDS}")


def gauss_ck_pair(m: int) -> AxialPair:
    """Gaussian transform scaled so its x0 = 0 restriction is exp(-r^2/2)."""
    pair = fueter(seed("gauss"), 0, m, sample_p0(m))
    return pair.scaled(Fraction((-1) ** ((m - 1) // 2), double_factorial(m - 1)))


def gauss_fund_pair(m: int) -> AxialPair:
    """Transform of exp(z^2/2)/z against P_0 = 1 (unscaled)."""
    return fueter(seed("gauss_fund"), 0, m, sample_p0(m))


def pole_pair(m: int) -> AxialPair:
    """conj(x)/|x|^(m+1) in axial components: (x0 Q^-(m+1)/2, -r Q^-(m+1)/2)."""
    _require_odd(m)
    p = (m + 1) // 2
    return AxialPair(m, 0, AxialExpr.term(1, a=1, p=p), AxialExpr.term(-1, b=1, p=p), sample_p0(m))


def entire_remainder_pair(m: int) -> AxialPair:
    """Transform of exp(z^2/2)/z minus its pole, normalized; entire by design."""
    c = Fraction((-1) ** ((m - 1) // 2) * double_factorial(m - 1) ** 2)
    return gauss_fund_pair(m).scaled(Fraction(1, c)) - pole_pair(m)


# --- polynomial routes for z^n seeds ------------------------------------------


def fueter_via_laplacian(n: int, k: int, m: int, pk: CliffPoly) -> CliffPoly:
    """Independent route for z^n: apply the full Laplacian k+(m-1)/2 times
    to sum_nu C(n,nu) x0^(n-nu) x_^nu P_k."""
    _require_odd(m)
    if pk is None:
        raise ValueError("this route needs a concrete P_k")
    w = CliffPoly.zero(m)
    for nu in range(n + 1):
        w = w + vector_power(m, nu).shift_x0(n - nu).scale(math.comb(n, nu))
    w = poly_mul(w, pk)
    for _ in range(k + (m - 1) // 2):
        w = laplacian(w, include_x0=True)
    return w


def axial_to_poly(pair: AxialPair) -> CliffPoly:
    """Rewrite a polynomial-image pair as a polynomial in (x0, x1..xm).

    Requires A with even nonnegative r powers and B with odd positive r
    powers, no Q/exp/trig factors; substitutes r^2 -> x1^2+...+xm^2 and
    w r^(2s+1) -> x_ (x1^2+...+xm^2)^s, then multiplies by pk.
    """
    if pair.pk is None:
        raise ValueError("axial_to_poly needs a concrete P_k")
    m = pair.m
    r2 = radius_sq_poly(m)
    x_ = CliffPoly.vector_variable(m)

    def check(expr: AxialExpr, parity: int, label: str):
        for (a, b, p, g, t), _ in expr.terms.items():
            if p or g or t or b < 0 or b % 2 != parity:
                raise ValueError(f"{label} component outside the polynomial image")

    check(pair.A, 0, "A")
    check(pair.B, 1, "B")

    def r2_power(s: int) -> CliffPoly:
        out = CliffPoly.one(m)
        for _ in range(s):
            out = poly_mul(out, r2)
        return out

    out = CliffPoly.zero(m)
    for (a, b, _, _, _), q in pair.A.terms.items():
        out = out + r2_power(b // 2).shift_x0(a).scale(q)
    for (a, b, _, _, _), q in pair.B.terms.items():
        out = out + poly_mul(r2_power((b - 1) // 2), x_).shift_x0(a).scale(q)
    return poly_mul(out, pair.pk)


@dataclass(frozen=True)
class TriangleResult:
    """Cross-route comparison for a z^n seed."""

    n: int
    k: int
    m: int
    routes_equal: bool
    ck_equal: bool
    constant: Fraction | None

    @property
    def ok(self) -> bool:
        return self.routes_equal and self.ck_equal


def triangle_check(n: int, k: int, m: int, pk: CliffPoly | None = None) -> TriangleResult:
    """Compare the radial-operator, Laplacian, and CK-extension routes for z^n.

    Below the degree threshold n < 2k+m-1 both transform routes must vanish;
    above it they must agree exactly and equal constant * CK[x_^(n-(2k+m-1)) pk],
    the constant read off from the x0 = 0 restriction.
    """
    if pk is None:
        pk = default_pk(k, m)
    p_radial = axial_to_poly(fueter(seed("z_pow", n), k, m, pk))
    p_laplace = fueter_via_laplacian(n, k, m, pk)
    routes_equal = p_radial == p_laplace
    d = n - (2 * k + m - 1)
    if d < 0:
        return TriangleResult(n, k, m, routes_equal, p_radial.is_zero() and p_laplace.is_zero(), None)
    base = poly_mul(vector_power(m, d), pk)
    restriction = p_radial.restrict_x0()
    constant = None
    for exps, coeff in base.terms.items():
        other = restriction.terms.get(exps)
        if other is None:
            break
        mask, val = next(iter(coeff.coeffs.items()))
        constant = Fraction(other[mask]) / val
        break
    if constant is None:
        return TriangleResult(n, k, m, routes_equal, False, None)
    ck = ck_extend_poly(base).scale(constant)
    return TriangleResult(n, k, m, routes_equal, p_radial == ck, constant)
