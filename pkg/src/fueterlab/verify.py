"""Identity and property suites behind `fueterlab verify`.

Each suite returns a list of CheckResult records, one per identity
family, with the count of failing instances in the detail field and the
measured error for numeric checks.  All randomness flows from an explicit
seed, so runs are reproducible.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import product

from . import sampling
from .axial import COS, E, R, SIN, X0, AxialExpr, d_lower, d_upper, q_inv
from .clifford import Multivector, blade_product, blade_product_naive, indices_from_mask
from .cliffpoly import (
    CliffPoly,
    ck_extend_poly,
    coeff_c,
    cr_apply,
    cr_conj_apply,
    dirac,
    hermite_closed,
    hermite_rec,
    laplacian,
    poly_mul,
    radius_sq_poly,
    vector_power,
)
from .fueter import (
    closed_form,
    coeff_a,
    double_factorial,
    entire_remainder_pair,
    fueter,
    gauss_ck_pair,
    gauss_fund_pair,
    seed as make_seed,
    triangle_check,
    vekua_ok,
)
from .numeric import (
    EvalPoint,
    FDConfig,
    axial_evaluator,
    ck_gauss_restriction,
    ck_gauss_series,
    ck_gauss_series_tail,
    decay_scan,
    entire_part_probe,
    eval_axial,
    fd_convergence_factor,
    fd_cr_residual,
    hermite_radial_coeffs,
    restriction_taylor_coeff,
    verify_sample_csv,
)

SUITE_NAMES = ("core", "operators", "examples", "hermite", "gauss", "gauss_fund", "all")
DEFAULT_SEED = 20090429


@dataclass(frozen=True)
class CheckResult:
    id: str
    passed: bool
    max_error: float = 0.0
    detail: str = ""

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        err = f"{self.max_error:.3e}" if self.max_error else "0"
        tail = f" {self.detail}" if self.detail else ""
        return f"{self.id} {status} {err}{tail}"


def _exact(check_id: str, failures: list, total: int) -> CheckResult:
    detail = f"{total - len(failures)}/{total}"
    if failures:
        detail += " first_failure=" + str(failures[0])
    return CheckResult(check_id, not failures, 0.0, detail)


def _numeric(check_id: str, err: float, tol: float, extra: str = "") -> CheckResult:
    detail = f"tol={tol:.1e}"
    if extra:
        detail += " " + extra
    return CheckResult(check_id, err <= tol, err, detail)


# --- core -----------------------------------------------------------------


def suite_core(rng_seed: int = DEFAULT_SEED, cases: int = 200) -> list:
    rng = random.Random(rng_seed)
    out = []

    failures = []
    total = 0
    for m in range(1, 5):
        for ma in range(1 << m):
            for mb in range(1 << m):
                total += 1
                sign, mask = blade_product(ma, mb)
                nsign, idx = blade_product_naive(indices_from_mask(ma), indices_from_mask(mb))
                if (sign, indices_from_mask(mask)) != (nsign, idx):
                    failures.append((m, ma, mb))
    out.append(_exact("core.blade_sign_oracle", failures, total))

    failures = []
    for i in range(cases):
        m = rng.randint(1, 6)
        a = sampling.random_multivector(rng, m)
        b = sampling.random_multivector(rng, m)
        c = sampling.random_multivector(rng, m)
        if (a * b) * c != a * (b * c):
            failures.append(i)
    out.append(_exact("core.associativity", failures, cases))

    failures = []
    for i in range(cases):
        m = rng.randint(1, 6)
        u = sampling.random_vector(rng, m)
        v = sampling.random_vector(rng, m)
        dot = sum(u[1 << j] * v[1 << j] for j in range(m))
        if u * v + v * u != Multivector.scalar(m, -2 * dot):
            failures.append(i)
        if v * v != Multivector.scalar(m, -v.norm_sq()):
            failures.append(i)
    out.append(_exact("core.vector_products", failures, cases))

    failures = []
    for i in range(cases):
        m = rng.randint(1, 6)
        a = sampling.random_multivector(rng, m)
        b = sampling.random_multivector(rng, m)
        if (a * b).conjugate() != b.conjugate() * a.conjugate():
            failures.append(i)
    out.append(_exact("core.conjugation_antihom", failures, cases))

    failures = []
    for i in range(cases):
        m = rng.randint(1, 6)
        a = sampling.random_multivector(rng, m)
        direct = sum((v * v for v in a.coeffs.values()), Fraction(0))
        if a.norm_sq() != direct or (a * a.conjugate()).grade(0) != Multivector.scalar(m, direct):
            failures.append(i)
        total_mv = Multivector.zero(m)
        for k in range(m + 1):
            total_mv = total_mv + a.grade(k)
        if total_mv != a:
            failures.append(i)
    out.append(_exact("core.norm_and_grades", failures, cases))

    failures = []
    for i in range(cases):
        m = rng.randint(1, 5)
        p = sampling.random_poly(rng, m, max_degree=3, with_x0=False)
        if dirac(dirac(p)) != -laplacian(p, include_x0=False):
            failures.append(i)
    out.append(_exact("core.fact1", failures, cases))

    failures = []
    for i in range(cases):
        m = rng.randint(1, 5)
        p = sampling.random_poly(rng, m, max_degree=3, with_x0=True)
        lap = laplacian(p, include_x0=True)
        if cr_apply(cr_conj_apply(p)) != lap or cr_conj_apply(cr_apply(p)) != lap:
            failures.append(i)
    out.append(_exact("core.fact2", failures, cases))

    return out


# --- operators -------------------------------------------------------------


def suite_operators(rng_seed: int = DEFAULT_SEED, cases: int = 50) -> list:
    rng = random.Random(rng_seed)
    out = []

    failures = []
    for i in range(cases):
        f = sampling.random_axial(rng)
        if not (d_lower(0, f) == f and d_upper(0, f) == f):
            failures.append(i)
        if f.diff("x0").diff("r") != f.diff("r").diff("x0"):
            failures.append(i)
    out.append(_exact("op.order0_and_commute", failures, cases))

    failures = []
    for i in range(cases):
        n = rng.randint(0, 5)
        f = sampling.random_axial(rng)
        if d_upper(n, f.diff("r")) != d_lower(n, f).diff("r"):
            failures.append((i, n))
    out.append(_exact("op.i", failures, cases))

    failures = []
    for i in range(cases):
        n = rng.randint(0, 5)
        f = sampling.random_axial(rng)
        lhs = d_lower(n, f.diff("r")) - d_upper(n, f).diff("r")
        rhs = d_upper(n, f).scale(2 * n).div_r()
        if lhs != rhs:
            failures.append((i, n))
    out.append(_exact("op.ii", failures, cases))

    failures = []
    for i in range(cases):
        n = rng.randint(0, 5)
        f = sampling.random_rational_axial(rng)
        g = sampling.random_axial(rng)
        lhs = d_lower(n, f * g)
        rhs = AxialExpr.zero()
        for nu in range(n + 1):
            rhs = rhs + d_lower(n - nu, f).scale(math.comb(n, nu)) * d_lower(nu, g)
        if lhs != rhs:
            failures.append((i, n))
    out.append(_exact("op.iii", failures, cases))

    failures = []
    for i in range(cases):
        n = rng.randint(0, 5)
        f = sampling.random_rational_axial(rng)
        g = sampling.random_axial(rng)
        lhs = d_upper(n, f * g)
        rhs = AxialExpr.zero()
        for nu in range(n + 1):
            rhs = rhs + d_lower(n - nu, f).scale(math.comb(n, nu)) * d_upper(nu, g)
        if lhs != rhs:
            failures.append((i, n))
    out.append(_exact("op.iv", failures, cases))

    return out


# --- examples ----------------------------------------------------------------


def suite_examples(rng_seed: int = DEFAULT_SEED, ms=(3, 5, 7), z_max: int = 10) -> list:
    out = []

    failures = [n for n in range(1, 9) if d_lower(n, R) != closed_form("e1", n)]
    out.append(_exact("e1", failures, 8))

    failures = []
    for n in range(0, 9):
        expect = AxialExpr.term(
            Fraction((-1) ** n * double_factorial(2 * n - 1)), a=1, b=-2 * n
        )
        if d_upper(n, X0) != expect:
            failures.append(n)
    out.append(_exact("ex1.dupper_x0", failures, 9))

    failures = [n for n in range(0, 9) if d_lower(n, X0 * q_inv()) != closed_form("e2", n)]
    out.append(_exact("e2", failures, 9))

    failures = [n for n in range(0, 9) if d_upper(n, R * q_inv()) != closed_form("e3", n)]
    out.append(_exact("e3", failures, 9))

    failures = [n for n in range(0, 9) if d_lower(n, E) != closed_form("e4", n)]
    out.append(_exact("e4", failures, 9))

    failures = [n for n in range(1, 9) if d_lower(n, COS) != closed_form("e5", n)]
    out.append(_exact("e5", failures, 8))

    failures = [n for n in range(1, 9) if d_lower(n, SIN) != closed_form("e6", n)]
    out.append(_exact("e6", failures, 8))

    failures = [n for n in range(0, 9) if d_upper(n, SIN) != closed_form("e7", n)]
    out.append(_exact("e7", failures, 9))

    failures = []
    for n in range(1, 11):
        if coeff_a(n, n) != 1:
            failures.append(("diag", n))
        if coeff_a(n, 1) != (-1) ** (n + 1) * double_factorial(2 * n - 3):
            failures.append(("first", n))
    out.append(_exact("coeff_a.boundary", failures, 20))

    failures = []
    total = 0
    for m, k in product(ms, (0, 1, 2)):
        if 2 * k + m - 4 < -1:
            continue
        total += 1
        pair = fueter(make_seed("iz"), k, m)
        a_expect, b_expect = closed_form("ex1_full", m=m, k=k)
        if not (pair.A == a_expect and pair.B == b_expect):
            failures.append((m, k))
    out.append(_exact("example1.closed", failures, total))

    failures = []
    total = 0
    for m, k in product(ms, (0, 1, 2)):
        total += 1
        pair = fueter(make_seed("inv_z"), k, m)
        a_expect, b_expect = closed_form("ex2_full", m=m, k=k)
        if not (pair.A == a_expect and pair.B == b_expect):
            failures.append((m, k))
    out.append(_exact("example2.closed", failures, total))

    failures = []
    constants = []
    total = 0
    for m, k in product((3, 5), (0, 1)):
        for n in range(0, z_max + 1):
            total += 1
            res = triangle_check(n, k, m)
            if not res.ok:
                failures.append((n, k, m))
            elif res.constant is not None:
                constants.append(f"c(n={n},k={k},m={m})={res.constant}")
    check = _exact("example3.triangle", failures, total)
    out.append(
        CheckResult(check.id, check.passed, 0.0, check.detail + " " + "; ".join(constants[-4:]))
    )

    failures = []
    total = 0
    seeds = [make_seed("iz"), make_seed("inv_z"), make_seed("gauss"), make_seed("gauss_fund")]
    seeds += [make_seed("z_pow", n) for n in range(0, z_max + 1)]
    for s, m, k in product(seeds, ms, (0, 1, 2)):
        total += 1
        if not vekua_ok(fueter(s, k, m)):
            failures.append((s.name, s.n, m, k))
    out.append(_exact("vekua.grid", failures, total))

    failures = []
    s1 = make_seed("iz").scaled(Fraction(3, 2))
    s2 = make_seed("inv_z").scaled(Fraction(-2))
    combo = fueter(s1 + s2, 0, 3)
    split1 = fueter(make_seed("iz"), 0, 3)
    split2 = fueter(make_seed("inv_z"), 0, 3)
    lhs_a = split1.A.scale(Fraction(3, 2)) + split2.A.scale(-2)
    lhs_b = split1.B.scale(Fraction(3, 2)) + split2.B.scale(-2)
    if not (combo.A == lhs_a and combo.B == lhs_b):
        failures.append("linearity")
    out.append(_exact("transform.linearity", failures, 1))

    return out


# --- hermite ------------------------------------------------------------------


def suite_hermite(rng_seed: int = DEFAULT_SEED, n_max: int = 12, ms=(1, 2, 3, 4, 5, 7)) -> list:
    rng = random.Random(rng_seed)
    out = []

    failures = []
    total = 0
    for m in ms:
        h = CliffPoly.one(m)
        x_ = CliffPoly.vector_variable(m)
        for n in range(n_max + 1):
            total += 1
            if h != hermite_closed(n, m).poly:
                failures.append((n, m))
            grades = h.grades()
            if grades and grades != ({0} if n % 2 == 0 else {1}):
                failures.append(("grade", n, m))
            h = poly_mul(x_, h) - dirac(h)
    out.append(_exact("hermite.rec_eq_closed", failures, total))

    failures = []
    for m in ms:
        r2 = radius_sq_poly(m)
        x_ = CliffPoly.vector_variable(m)
        h2_expect = -r2 + CliffPoly.constant(m, m)
        h3_expect = -poly_mul(r2, x_) + x_.scale(m + 2)
        if hermite_rec(2, m).poly != h2_expect:
            failures.append((2, m))
        if hermite_rec(3, m).poly != h3_expect:
            failures.append((3, m))
    out.append(_exact("hermite.h2_h3", failures, 2 * len(ms)))

    failures = []
    checks = [
        (coeff_c(1, 1, 3), Fraction(3)),
        (coeff_c(2, 1, 3), Fraction(5)),
        (coeff_c(2, 2, 3), Fraction(15)),
        (coeff_c(7, 0, 5), Fraction(1)),
    ]
    failures = [i for i, (got, want) in enumerate(checks) if got != want]
    out.append(_exact("hermite.coeff_c", failures, len(checks)))

    failures = []
    total = 0
    for m in (1, 2, 3, 5):
        r2 = radius_sq_poly(m)
        r2_pow = CliffPoly.one(m)
        for s_exp in range(0, 7):
            total += 1
            if vector_power(m, 2 * s_exp) != r2_pow.scale((-1) ** s_exp):
                failures.append((m, s_exp))
            r2_pow = poly_mul(r2_pow, r2)
    out.append(_exact("hermite.vector_power_parity", failures, total))

    failures = []
    total = 0
    for m in (1, 3, 5):
        for n in range(0, 13):
            total += 1
            radial = hermite_radial_coeffs(n, m)
            rebuilt = CliffPoly.zero(m)
            for j, c in enumerate(radial):
                if c:
                    rebuilt = rebuilt + vector_power(m, j).scale(c)
            if rebuilt != hermite_rec(n, m).poly:
                failures.append((n, m))
    out.append(_exact("hermite.radial_coeffs_match", failures, total))

    failures = []
    cases = 100
    for i in range(cases):
        m = rng.randint(1, 5)
        f = sampling.random_poly(rng, m, max_degree=6, n_terms=3, with_x0=False)
        ck = ck_extend_poly(f)
        if cr_apply(ck):
            failures.append(i)
        if ck.restrict_x0() != f:
            failures.append((i, "restriction"))
    out.append(_exact("ck.monogenic_and_restrict", failures, cases))

    failures = []
    m = 3
    x1 = CliffPoly.variable(m, 1)
    e1 = Multivector.basis(m, 1)
    x_ = CliffPoly.vector_variable(m)
    x0 = CliffPoly.variable(m, 0)
    if ck_extend_poly(CliffPoly.one(m)) != CliffPoly.one(m):
        failures.append("const")
    if ck_extend_poly(x1) != x1 - x0.coeff_mul_left(e1):
        failures.append("x1")
    if ck_extend_poly(x_) != x_ + x0.scale(m):
        failures.append("vector")
    out.append(_exact("ck.examples", failures, 3))

    return out


# --- gauss ----------------------------------------------------------------------


def suite_gauss(rng_seed: int = DEFAULT_SEED, ms=(3, 5, 7)) -> list:
    rng = random.Random(rng_seed)
    out = []

    failures = []
    for m in ms:
        pair = gauss_ck_pair(m)
        if pair.A.restrict_x0() != E or not pair.B.restrict_x0().is_zero():
            failures.append(m)
    out.append(_exact("gauss.restriction_symbolic", failures, len(ms)))

    if 3 in ms:
        failures = []
        pair = gauss_ck_pair(3)
        if pair.A != closed_form("prop2_m3_A") or pair.B != closed_form("prop2_m3_B"):
            failures.append(3)
        out.append(_exact("gauss.m3_closed_form", failures, 1))

    failures = []
    total = 0
    for n in range(0, 6):
        total += 2
        lhs_cos = d_lower(n, E * COS)
        rhs_cos = AxialExpr.zero()
        lhs_sin = d_upper(n, E * SIN)
        rhs_sin = AxialExpr.zero()
        for nu in range(n + 1):
            c = Fraction((-1) ** (n - nu) * math.comb(n, nu))
            rhs_cos = rhs_cos + (E * d_lower(nu, COS)).scale(c)
            rhs_sin = rhs_sin + (E * d_upper(nu, SIN)).scale(c)
        if lhs_cos != rhs_cos:
            failures.append(("cos", n))
        if lhs_sin != rhs_sin:
            failures.append(("sin", n))
    out.append(_exact("gauss.product_rule", failures, total))

    failures = []
    total = 0
    for m, k in product(ms, (0, 1, 2)):
        total += 1
        pair = fueter(make_seed("gauss"), k, m)
        order = k + (m - 1) // 2
        const = Fraction(double_factorial(2 * k + m - 1))
        a_expect = AxialExpr.zero()
        b_expect = AxialExpr.zero()
        for nu in range(order + 1):
            c = const * (-1) ** (order - nu) * math.comb(order, nu)
            a_expect = a_expect + (E * d_lower(nu, COS)).scale(c)
            b_expect = b_expect + (E * d_upper(nu, SIN)).scale(c)
        if not (pair.A == a_expect and pair.B == b_expect):
            failures.append((m, k))
    out.append(_exact("gauss.full_display", failures, total))

    max_rel = 0.0
    tail_ok = True
    series_ms = tuple(m for m in ms if m in (3, 5)) or (3, 5)
    for m in series_ms:
        pair = gauss_ck_pair(m)
        for _ in range(50):
            x0 = rng.uniform(-1, 1)
            r = rng.uniform(0.3, 2.0)
            direction = [rng.gauss(0, 1) for _ in range(m)]
            norm = math.sqrt(sum(d * d for d in direction)) or 1.0
            xs = tuple(r * d / norm for d in direction)
            pt = EvalPoint(x0, xs)
            series = ck_gauss_series(pt, m, trunc=60)
            closed = eval_axial(pair, pt)
            rel = (series - closed).norm() / closed.norm()
            max_rel = max(max_rel, rel)
            if ck_gauss_series_tail(pt, m, 60) > 1e-14 * series.norm():
                tail_ok = False
    check = _numeric("gauss.series_vs_closed", max_rel, 1e-10, f"50 points per m, m in {set(series_ms)}")
    out.append(check)
    out.append(CheckResult("gauss.series_tail_bound", tail_ok, 0.0, "next term < 1e-14 * partial sum"))

    max_rel = 0.0
    for m in ms:
        for x0 in [i / 10.0 for i in range(-10, 11)]:
            pt = EvalPoint(x0, (0.0,) * m)
            series = ck_gauss_series(pt, m, trunc=40)[0]
            closed = ck_gauss_restriction(x0, m)
            max_rel = max(max_rel, abs(series - closed) / abs(closed))
    out.append(_numeric("gauss.restriction_numeric", max_rel, 1e-12, "x_=0 axis, N=40"))

    if 3 in ms:
        max_rel = 0.0
        for x0 in [i / 10.0 for i in range(-10, 11)]:
            got = ck_gauss_restriction(x0, 3)
            want = math.exp(x0 * x0 / 2.0) * (1.0 + x0 * x0)
            max_rel = max(max_rel, abs(got - want) / abs(want))
        out.append(_numeric("gauss.restriction_m3_formula", max_rel, 1e-12))

    failures = []
    total = 0
    for m in ms:
        for n in range(0, 41):
            total += 1
            if restriction_taylor_coeff(n, m) != coeff_c(n, n, m) / math.factorial(2 * n):
                failures.append((m, n))
    out.append(_exact("gauss.taylor_coeffs_exact", failures, total))

    return out


# --- gauss_fund -------------------------------------------------------------------


def suite_gauss_fund(rng_seed: int = DEFAULT_SEED, ms=(3, 5, 7), csv_from=None, csv_target="gauss-fund") -> list:
    rng = random.Random(rng_seed)
    out = []

    failures = []
    for m in ms:
        if not vekua_ok(entire_remainder_pair(m)):
            failures.append(m)
    out.append(_exact("gauss_fund.remainder_vekua", failures, len(ms)))

    radii = (1e-1, 1e-2, 1e-3, 1e-4)
    failures = []
    worst = 0.0
    for m in (3, 5):
        report = entire_part_probe(m, radii)
        worst = max(worst, max(report.values))
        if not report.bounded:
            failures.append(m)
    out.append(
        CheckResult("gauss_fund.pole_cancellation", not failures, worst, f"radii down to {radii[-1]:g}")
    )

    failures = []
    for m in (3, 5):
        control = entire_part_probe(m, radii, subtract_pole=False)
        if control.values[-1] < 1e6:
            failures.append(m)
    out.append(_exact("gauss_fund.pole_detected_control", failures, 2))

    factor_lo, factor_hi = math.inf, -math.inf
    residuals = {3: 0.0, 5: 0.0}
    for m in (3, 5):
        f = axial_evaluator(gauss_fund_pair(m))
        for i in range(20):
            x0 = rng.uniform(-1, 1)
            r = rng.uniform(0.5, 2.0)
            direction = [rng.gauss(0, 1) for _ in range(m)]
            norm = math.sqrt(sum(d * d for d in direction)) or 1.0
            pt = EvalPoint(x0, tuple(r * d / norm for d in direction))
            for side in ("left", "right"):
                residuals[m] = max(residuals[m], fd_cr_residual(f, pt, FDConfig(), side))
            if i < 5:
                fac = fd_convergence_factor(f, pt, "left")
                factor_lo = min(factor_lo, fac)
                factor_hi = max(factor_hi, fac)
    out.append(_numeric("gauss_fund.fd_two_sided", residuals[3], 1e-6, "m=3, 20 points, left and right"))
    # same step at m=5 meets a looser bound: the truncation constant carries
    # third derivatives of r^-6-scale terms near r = 0.5
    out.append(_numeric("gauss_fund.fd_two_sided_m5", residuals[5], 1e-3, "m=5, 20 points, left and right"))
    out.append(
        CheckResult(
            "gauss_fund.fd_convergence_order",
            3.5 <= factor_lo and factor_hi <= 4.5,
            0.0,
            f"halving factors in [{factor_lo:.2f}, {factor_hi:.2f}]",
        )
    )

    pair = gauss_fund_pair(3)
    report = decay_scan(pair, K=2.0, r_min=3.0, r_max=8.0, nx0=101, nr=101)
    fine = decay_scan(pair, K=2.0, r_min=3.0, r_max=8.0, nx0=201, nr=201)
    stable = math.isfinite(report.sup_value) and abs(fine.sup_value - report.sup_value) <= 0.05 * report.sup_value
    out.append(
        CheckResult(
            "gauss_fund.decay_sup_stable",
            stable,
            report.sup_value,
            f"sup at (x0={report.argmax_x0:g}, r={report.argmax_r:g}), refined {fine.sup_value:.6g}",
        )
    )

    control_pair = fueter(make_seed("inv_z"), 0, 3)
    near = decay_scan(control_pair, K=2.0, r_min=3.0, r_max=8.0, nx0=21, nr=51)
    far = decay_scan(control_pair, K=2.0, r_min=3.0, r_max=12.0, nx0=21, nr=51)
    out.append(
        CheckResult(
            "gauss_fund.decay_control_divergent",
            far.sup_value > 10.0 * near.sup_value,
            far.sup_value,
            "inverse-power pair fails the Gaussian bound",
        )
    )

    if csv_from is not None:
        ok, nrows = verify_sample_csv(csv_from, csv_target)
        out.append(CheckResult("gauss_fund.csv_roundtrip", ok, 0.0, f"{nrows} rows re-verified"))

    return out


# --- driver --------------------------------------------------------------------


def run_suite(name: str, rng_seed: int = DEFAULT_SEED, ms=None, csv_from=None) -> list:
    if name not in SUITE_NAMES:
        raise ValueError(f"unknown suite {name!r}; choose from {SUITE_NAMES}")
    odd_ms = tuple(ms) if ms else (3, 5, 7)
    if name == "core":
        return suite_core(rng_seed)
    if name == "operators":
        return suite_operators(rng_seed)
    if name == "examples":
        return suite_examples(rng_seed, ms=odd_ms)
    if name == "hermite":
        return suite_hermite(rng_seed, ms=tuple(ms) if ms else (1, 2, 3, 4, 5, 7))
    if name == "gauss":
        return suite_gauss(rng_seed, ms=odd_ms)
    if name == "gauss_fund":
        return suite_gauss_fund(rng_seed, ms=odd_ms, csv_from=csv_from)
    results = []
    results += suite_core(rng_seed)
    results += suite_operators(rng_seed)
    results += suite_examples(rng_seed)
    results += suite_hermite(rng_seed)
    results += suite_gauss(rng_seed)
    results += suite_gauss_fund(rng_seed, csv_from=csv_from)
    return results
