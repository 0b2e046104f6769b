"""Floating-point evaluation, finite-difference oracles, and scans.

Everything here works in binary64 except the pole-cancellation probe,
which evaluates the exactly-subtracted remainder with mpmath because the
cancellation near r = 0 grows like r^-m and would drown in roundoff at
double precision.
"""

from __future__ import annotations

import csv
import json
import math
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict, dataclass
from fractions import Fraction
from functools import lru_cache

import mpmath

from .axial import EvalDomainError
from .clifford import Multivector
from .fueter import (
    AxialPair,
    EvenDimensionError,
    double_factorial,
    entire_remainder_pair,
    gauss_ck_pair,
    gauss_fund_pair,
)

THREADS_ENV = "FUETER_LAB_THREADS"


@dataclass(frozen=True)
class EvalPoint:
    """Point of R^{m+1} split as (x0, x_); r and the unit vector derive from x_."""

    x0: float
    xs: tuple

    @property
    def m(self) -> int:
        return len(self.xs)

    @property
    def r(self) -> float:
        return math.sqrt(math.fsum(x * x for x in self.xs))

    def omega(self) -> tuple:
        r = self.r
        if r == 0:
            raise EvalDomainError("unit vector undefined at x_ = 0")
        return tuple(x / r for x in self.xs)

    def scale_estimate(self) -> float:
        return math.sqrt(self.x0 * self.x0 + sum(x * x for x in self.xs))


@dataclass(frozen=True)
class FDConfig:
    """Central second-order differences with step h * max(1, |point|)."""

    h: float = 1e-5

    def step(self, pt: EvalPoint) -> float:
        return self.h * max(1.0, pt.scale_estimate())


@dataclass(frozen=True)
class DecayReport:
    """Sup of |F| exp(r^2/2) over a strip grid, with the attained point."""

    K: float
    r_min: float
    r_max: float
    nx0: int
    nr: int
    sup_value: float
    argmax_x0: float
    argmax_r: float

    def to_dict(self) -> dict:
        return asdict(self)

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


@dataclass(frozen=True)
class ProbeReport:
    """Values of the pole-subtracted remainder along a ray toward the origin."""

    m: int
    radii: tuple
    values: tuple
    bounded: bool
    subtract_pole: bool = True


def eval_axial(pair: AxialPair, pt: EvalPoint) -> Multivector:
    """(A + w B) P_k at a point with r > 0, in binary64."""
    if pair.pk is None:
        raise ValueError("evaluation needs a concrete P_k")
    if pt.m != pair.m:
        raise ValueError(f"point dimension {pt.m} vs pair dimension {pair.m}")
    r = pt.r
    if r == 0:
        raise EvalDomainError("axial evaluation needs r > 0; use the restriction formulas at x_ = 0")
    a_val = pair.A.evaluate(pt.x0, r)
    b_val = pair.B.evaluate(pt.x0, r)
    omega = Multivector.vector(pair.m, pt.omega(), exact=False)
    axial = Multivector.scalar(pair.m, a_val, exact=False) + omega.scale(b_val)
    return axial * pair.pk.eval(pt.x0, pt.xs)


def axial_evaluator(pair: AxialPair):
    """Adapter (x0, xs) -> Multivector for the finite-difference oracle."""

    def f(x0, xs):
        return eval_axial(pair, EvalPoint(x0, tuple(xs)))

    return f


# --- CK series of the Gaussian -------------------------------------------------


@lru_cache(maxsize=None)
def hermite_radial_coeffs(n: int, m: int) -> tuple:
    """Coefficients (c_0, ..., c_n) of H_n = sum_j c_j x_^j.

    Same recurrence as the polynomial route, expressed on the radial
    representation: multiplication by x_ shifts j up, and the Dirac
    operator maps x_^(2s) -> -2s x_^(2s-1), x_^(2s+1) -> -(m+2s) x_^(2s).
    """
    if n == 0:
        return (1,)
    prev = hermite_radial_coeffs(n - 1, m)

    def at(j):
        return prev[j] if 0 <= j <= n - 1 else 0

    out = []
    for j in range(n + 1):
        val = at(j - 1)
        if (j + 1) % 2 == 0:
            val += (j + 1) * at(j + 1)
        else:
            val += (m + j) * at(j + 1)
        out.append(val)
    return tuple(out)


def ck_gauss_series(pt: EvalPoint, m: int, trunc: int = 60) -> Multivector:
    """exp(-r^2/2) sum_{n<=trunc} x0^n/n! H_n(x_), evaluated in binary64.

    Valid at x_ = 0 as well, where only the scalar coefficients survive.
    """
    if pt.m != m:
        raise ValueError(f"point dimension {pt.m} vs m={m}")
    if trunc < 0:
        raise ValueError("truncation order must be nonnegative")
    r2 = math.fsum(x * x for x in pt.xs)
    scalar = 0.0
    vector = 0.0  # coefficient of x_ (the raw vector, not the unit one)
    x0_pow = 1.0
    for n in range(trunc + 1):
        coeffs = hermite_radial_coeffs(n, m)
        s = 0.0
        v = 0.0
        # x_^(2s) = (-r^2)^s, x_^(2s+1) = (-r^2)^s x_
        for j, c in enumerate(coeffs):
            if c == 0:
                continue
            radial = (-r2) ** (j // 2)
            if j % 2 == 0:
                s += c * radial
            else:
                v += c * radial
        factor = x0_pow / math.factorial(n)
        scalar += factor * s
        vector += factor * v
        x0_pow *= pt.x0
    damp = math.exp(-r2 / 2.0)
    coeffs = {0: damp * scalar}
    for j, x in enumerate(pt.xs):
        coeffs[1 << j] = damp * vector * x
    return Multivector(m, coeffs, exact=False)


def ck_gauss_series_tail(pt: EvalPoint, m: int, trunc: int) -> float:
    """Magnitude of the first omitted series term, for truncation checks."""
    coeffs = hermite_radial_coeffs(trunc + 1, m)
    r2 = math.fsum(x * x for x in pt.xs)
    s = sum(c * (-r2) ** (j // 2) for j, c in enumerate(coeffs) if j % 2 == 0)
    v = sum(c * (-r2) ** (j // 2) for j, c in enumerate(coeffs) if j % 2 == 1)
    mag = math.hypot(s, v * math.sqrt(r2))
    return abs(pt.x0) ** (trunc + 1) / math.factorial(trunc + 1) * mag * math.exp(-r2 / 2.0)


def ck_gauss_closed(pt: EvalPoint, m: int) -> Multivector:
    """Closed-form route: the scaled Gaussian transform evaluated axially."""
    return eval_axial(gauss_ck_pair(m), pt)


def ck_gauss_restriction(x0: float, m: int) -> float:
    """Value of the Gaussian extension on the x_ = 0 axis (odd m only)."""
    if m < 1 or m % 2 == 0:
        raise EvenDimensionError(f"restriction formula needs odd m, got {m}")
    total = 1.0
    prod = 1.0
    for n in range(1, (m - 1) // 2 + 1):
        prod *= m - (2 * n - 1)
        total += prod * x0 ** (2 * n) / math.factorial(2 * n)
    return math.exp(x0 * x0 / 2.0) * total


def restriction_taylor_coeff(n: int, m: int) -> Fraction:
    """Exact coefficient of x0^(2n) in the x_ = 0 restriction.

    Expands exp(x0^2/2) times the finite correction polynomial; must equal
    c_n(n)/(2n)! term by term.
    """
    total = Fraction(0)
    for j in range(0, n + 1):
        # contribution exp part x0^(2(n-j)) / (2^(n-j) (n-j)!) times polynomial part at 2j
        if j == 0:
            poly_coeff = Fraction(1)
        elif j <= (m - 1) // 2:
            prod = 1
            for nu in range(1, j + 1):
                prod *= m - (2 * nu - 1)
            poly_coeff = Fraction(prod, math.factorial(2 * j))
        else:
            continue
        i = n - j
        total += poly_coeff * Fraction(1, 2 ** i * math.factorial(i))
    return total


# --- finite-difference monogenicity oracle ------------------------------------


def fd_cr_residual(f, pt: EvalPoint, cfg: FDConfig | None = None, side: str = "left") -> float:
    """Norm of the central-difference Cauchy-Riemann residual at a point.

    f maps (x0, xs) to a float Multivector.  'left' applies e_j from the
    left of each partial, 'right' from the right; both residuals are
    O(h^2) for functions monogenic on that side.
    """
    if side not in ("left", "right"):
        raise ValueError(f"side must be 'left' or 'right', got {side!r}")
    cfg = cfg or FDConfig()
    h = cfg.step(pt)
    m = pt.m
    total = None
    for j in range(m + 1):
        if j == 0:
            plus = f(pt.x0 + h, pt.xs)
            minus = f(pt.x0 - h, pt.xs)
        else:
            xs_p = list(pt.xs)
            xs_m = list(pt.xs)
            xs_p[j - 1] += h
            xs_m[j - 1] -= h
            plus = f(pt.x0, tuple(xs_p))
            minus = f(pt.x0, tuple(xs_m))
        deriv = (plus - minus).scale(1.0 / (2.0 * h))
        if j > 0:
            ej = Multivector.basis(m, j, exact=False)
            deriv = ej * deriv if side == "left" else deriv * ej
        total = deriv if total is None else total + deriv
    return total.norm()


def fd_convergence_factor(f, pt: EvalPoint, side: str = "left", h: float = 2e-3) -> float:
    """Residual ratio between steps h and h/2; near 4 for O(h^2) schemes."""
    r1 = fd_cr_residual(f, pt, FDConfig(h), side)
    r2 = fd_cr_residual(f, pt, FDConfig(h / 2.0), side)
    if r2 == 0:
        return math.inf
    return r1 / r2


# --- decay scan ----------------------------------------------------------------


def lin_range(lo: float, hi: float, count: int) -> list:
    """Inclusive uniform grid with deterministic endpoints."""
    if count < 1:
        raise ValueError("count must be >= 1")
    if count == 1:
        return [lo]
    step = (hi - lo) / (count - 1)
    vals = [lo + i * step for i in range(count)]
    vals[-1] = hi
    return vals


def _scan_workers() -> int:
    try:
        cap = int(os.environ.get(THREADS_ENV, "1"))
    except ValueError:
        cap = 1
    return max(1, cap)


def decay_scan(
    pair: AxialPair,
    K: float,
    r_min: float,
    r_max: float,
    nx0: int = 101,
    nr: int = 101,
    workers: int | None = None,
) -> DecayReport:
    """Sup of |F(x)| exp(r^2/2) over {|x0| <= K} x {r_min <= r <= r_max}.

    The direction of x_ is irrelevant for the magnitude of an axial
    function, so the grid lives on the ray x_ = r e_1.
    """
    if not (0 < r_min < r_max) or K <= 0:
        raise ValueError("need 0 < r_min < r_max and K > 0")
    x0_vals = lin_range(-K, K, nx0)
    r_vals = lin_range(r_min, r_max, nr)
    zeros = (0.0,) * (pair.m - 1)

    def row_max(x0):
        best = (-math.inf, 0.0, 0.0)
        for r in r_vals:
            pt = EvalPoint(x0, (r,) + zeros)
            val = eval_axial(pair, pt).norm() * math.exp(r * r / 2.0)
            if val > best[0]:
                best = (val, x0, r)
        return best

    n_workers = min(workers if workers is not None else _scan_workers(), len(x0_vals))
    if n_workers > 1:
        with ThreadPoolExecutor(max_workers=n_workers) as pool:
            results = list(pool.map(row_max, x0_vals))
    else:
        results = [row_max(x0) for x0 in x0_vals]
    sup, ax0, ar = max(results)
    return DecayReport(K, r_min, r_max, nx0, nr, sup, ax0, ar)


# --- pole-cancellation probe ----------------------------------------------------


def entire_part_probe(m: int, radii, subtract_pole: bool = True, dps: int = 60) -> ProbeReport:
    """Evaluate the normalized transform of exp(z^2/2)/z minus its pole
    along x_ = r e_1, x0 = 0, at decreasing radii.

    The subtraction cancels an r^-m singularity exactly in the term
    algebra, but the surviving terms still cancel analytically near 0, so
    the evaluation runs at dps decimal digits.  Boundedness of the values
    is the numerical signature that the remainder is entire.
    """
    radii = tuple(float(r) for r in radii)
    if not radii or any(r <= 0 for r in radii):
        raise ValueError("radii must be positive")
    if list(radii) != sorted(radii, reverse=True):
        raise ValueError("radii must decrease toward 0")
    if subtract_pole:
        pair = entire_remainder_pair(m)
    else:
        c = Fraction((-1) ** ((m - 1) // 2) * double_factorial(m - 1) ** 2)
        pair = gauss_fund_pair(m).scaled(Fraction(1, c))
    a0 = pair.A.restrict_x0()
    b0 = pair.B.restrict_x0()
    values = []
    with mpmath.workdps(dps):
        for r in radii:
            av = a0.evaluate_mp(0, r)
            bv = b0.evaluate_mp(0, r)
            values.append(float(mpmath.sqrt(av * av + bv * bv)))
    cap = max(1.0, 10.0 * values[0])
    bounded = all(v <= cap for v in values)
    return ProbeReport(m, radii, tuple(values), bounded, subtract_pole)


# --- CSV / JSON interchange -----------------------------------------------------

SAMPLE_TARGETS = ("ck-gauss", "gauss-fund")


def sample_pair(target: str, m: int) -> AxialPair:
    if target == "ck-gauss":
        return gauss_ck_pair(m)
    if target == "gauss-fund":
        return gauss_fund_pair(m)
    raise ValueError(f"unknown sample target {target!r}; choose from {SAMPLE_TARGETS}")


def sample_header(m: int) -> list:
    return (
        ["x0"]
        + [f"x{j}" for j in range(1, m + 1)]
        + ["r", "scalar"]
        + [f"e{j}" for j in range(1, m + 1)]
        + ["|value|"]
    )


def sample_rows(target: str, m: int, x0_vals, r_vals) -> list:
    """Row-major grid of axial values along x_ = r e_1; grades 0 and 1 only."""
    pair = sample_pair(target, m)
    zeros = (0.0,) * (m - 1)
    rows = []
    for x0 in x0_vals:
        for r in r_vals:
            if r <= 0:
                raise EvalDomainError("sample region requires r > 0")
            pt = EvalPoint(float(x0), (float(r),) + zeros)
            val = eval_axial(pair, pt)
            row = [pt.x0, *pt.xs, pt.r]
            row.append(float(val[0]))
            for j in range(1, m + 1):
                row.append(float(val[1 << (j - 1)]))
            row.append(val.norm())
            rows.append(row)
    return rows


def write_sample_csv(path, target: str, m: int, x0_vals, r_vals) -> int:
    rows = sample_rows(target, m, x0_vals, r_vals)
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(sample_header(m))
        for row in rows:
            writer.writerow([repr(v) for v in row])
    return len(rows)


def read_sample_csv(path) -> tuple[int, list, list]:
    """Returns (m, header, rows of floats); m inferred from the x-columns."""
    with open(path, newline="") as fh:
        reader = csv.reader(fh)
        header = next(reader)
        rows = [[float(v) for v in row] for row in reader]
    m = 0
    for name in header[1:]:
        if name.startswith("x") and name[1:].isdigit():
            m += 1
        else:
            break
    if header[: m + 2] != ["x0"] + [f"x{j}" for j in range(1, m + 1)] + ["r"]:
        raise ValueError("unrecognized sample CSV header")
    return m, header, rows


def verify_sample_csv(path, target: str) -> tuple[bool, int]:
    """Recompute every row of a sample CSV; True iff all values match bit-exactly."""
    m, header, rows = read_sample_csv(path)
    pair = sample_pair(target, m)
    mismatches = 0
    for row in rows:
        pt = EvalPoint(row[0], tuple(row[1 : m + 1]))
        val = eval_axial(pair, pt)
        expect = [pt.r, float(val[0])]
        expect += [float(val[1 << (j - 1)]) for j in range(1, m + 1)]
        expect.append(val.norm())
        if row[m + 1 :] != expect:
            mismatches += 1
    return mismatches == 0, len(rows)
