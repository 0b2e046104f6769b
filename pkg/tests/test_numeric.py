import json
import math
import random
from fractions import Fraction

import pytest

from fueterlab.axial import EvalDomainError
from fueterlab.clifford import Multivector
from fueterlab.cliffpoly import coeff_c, hermite_rec, vector_power
from fueterlab.fueter import (
    EvenDimensionError,
    fueter,
    gauss_ck_pair,
    gauss_fund_pair,
    seed,
)
from fueterlab.numeric import (
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
    lin_range,
    read_sample_csv,
    restriction_taylor_coeff,
    sample_rows,
    verify_sample_csv,
    write_sample_csv,
)


def test_eval_axial_inv_z_closed_point():
    # scaled 1/z transform equals conj(x)/|x|^4 at x = 1 + e1 for m = 3
    pair = fueter(seed("inv_z"), 0, 3).scaled(Fraction(-1, 4))
    val = eval_axial(pair, EvalPoint(1.0, (1.0, 0.0, 0.0)))
    assert val[0] == pytest.approx(0.25, rel=1e-14)
    assert val[1] == pytest.approx(-0.25, rel=1e-14)
    assert val[2] == 0.0 and val[4] == 0.0


def test_eval_axial_gauss_restriction_plane():
    pair = gauss_ck_pair(3)
    for r in (0.5, 1.0, 2.0):
        val = eval_axial(pair, EvalPoint(0.0, (0.0, r, 0.0)))
        assert val[0] == pytest.approx(math.exp(-r * r / 2), rel=1e-14)
        assert val.norm() == pytest.approx(math.exp(-r * r / 2), rel=1e-13)


def test_eval_axial_rejects_origin_axis():
    pair = gauss_ck_pair(3)
    with pytest.raises(EvalDomainError):
        eval_axial(pair, EvalPoint(1.0, (0.0, 0.0, 0.0)))


def test_eval_axial_needs_concrete_pk():
    pair = fueter(seed("gauss"), 2, 3)
    with pytest.raises(ValueError):
        eval_axial(pair, EvalPoint(0.5, (1.0, 0.0, 0.0)))


def test_hermite_radial_matches_polynomial_route():
    for m in (1, 3, 5):
        for n in range(0, 13):
            coeffs = hermite_radial_coeffs(n, m)
            poly = hermite_rec(n, m).poly
            rebuilt = None
            for j, c in enumerate(coeffs):
                if c:
                    part = vector_power(m, j).scale(c)
                    rebuilt = part if rebuilt is None else rebuilt + part
            assert rebuilt == poly


def test_series_restriction_axis():
    # only H_0 survives at x0 = 0
    pt = EvalPoint(0.0, (0.6, -0.8, 0.0))
    val = ck_gauss_series(pt, 3)
    assert val[0] == pytest.approx(math.exp(-0.5), rel=1e-14)
    # on the x_=0 axis at m=3 the extension is exp(x0^2/2)(1+x0^2)
    pt = EvalPoint(1.0, (0.0, 0.0, 0.0))
    val = ck_gauss_series(pt, 3, trunc=40)
    assert val[0] == pytest.approx(math.exp(0.5) * 2.0, rel=1e-12)
    assert all(val[1 << j] == 0.0 for j in range(3))


def test_series_matches_closed_form():
    rng = random.Random(71)
    for m in (3, 5):
        pair = gauss_ck_pair(m)
        for _ in range(50):
            x0 = rng.uniform(-1, 1)
            r = rng.uniform(0.3, 2.0)
            xs = [rng.gauss(0, 1) for _ in range(m)]
            norm = math.sqrt(sum(x * x for x in xs)) or 1.0
            pt = EvalPoint(x0, tuple(r * x / norm for x in xs))
            series = ck_gauss_series(pt, m, trunc=60)
            closed = eval_axial(pair, pt)
            assert (series - closed).norm() <= 1e-10 * closed.norm()
            assert ck_gauss_series_tail(pt, m, 60) < 1e-14 * series.norm()


def test_restriction_formula():
    assert ck_gauss_restriction(0.0, 3) == 1.0
    x0 = 1.0
    assert ck_gauss_restriction(x0, 3) == pytest.approx(math.exp(0.5) * 2.0, rel=1e-15)
    assert ck_gauss_restriction(1.0, 5) == pytest.approx(math.exp(0.5) * (1 + 2 + Fraction(1, 3)), rel=1e-15)
    with pytest.raises(EvenDimensionError):
        ck_gauss_restriction(1.0, 4)


def test_restriction_taylor_coefficients_exact():
    for m in (3, 5, 7):
        for n in range(0, 41):
            assert restriction_taylor_coeff(n, m) == coeff_c(n, n, m) / math.factorial(2 * n)


def test_fd_residual_monogenic_and_not():
    f = axial_evaluator(gauss_fund_pair(3))
    pt = EvalPoint(0.4, (0.9, 0.5, -0.3))
    for side in ("left", "right"):
        assert fd_cr_residual(f, pt, FDConfig(), side) <= 1e-6

    def broken(x0, xs):
        return Multivector.scalar(3, x0, exact=False)

    assert fd_cr_residual(broken, pt) == pytest.approx(1.0, rel=1e-6)


def test_fd_convergence_order():
    f = axial_evaluator(gauss_fund_pair(3))
    pt = EvalPoint(-0.3, (1.1, 0.2, 0.4))
    factor = fd_convergence_factor(f, pt)
    assert 3.5 <= factor <= 4.5


def test_fd_left_right_agree_for_degree_zero_outputs():
    """Degree-0 transforms are two-sided monogenic: both residuals vanish."""
    rng = random.Random(73)
    for name in ("iz", "inv_z", "gauss", "gauss_fund"):
        f = axial_evaluator(fueter(seed(name), 0, 3))
        for _ in range(3):
            pt = EvalPoint(rng.uniform(-1, 1), (rng.uniform(0.6, 1.4), rng.uniform(-0.5, 0.5), 0.1))
            left = fd_cr_residual(f, pt, FDConfig(), "left")
            right = fd_cr_residual(f, pt, FDConfig(), "right")
            assert left <= 1e-5 and right <= 1e-5
            assert abs(left - right) <= 1e-5


def test_fd_rejects_bad_side():
    f = axial_evaluator(gauss_fund_pair(3))
    with pytest.raises(ValueError):
        fd_cr_residual(f, EvalPoint(0.0, (1.0, 0.0, 0.0)), side="middle")


def test_decay_scan_gauss_fund():
    pair = gauss_fund_pair(3)
    report = decay_scan(pair, K=2.0, r_min=3.0, r_max=8.0, nx0=41, nr=41)
    assert math.isfinite(report.sup_value)
    refined = decay_scan(pair, K=2.0, r_min=3.0, r_max=8.0, nx0=81, nr=81)
    assert abs(refined.sup_value - report.sup_value) <= 0.05 * report.sup_value
    payload = json.loads(report.to_json())
    assert payload["K"] == 2.0 and payload["nx0"] == 41
    assert payload["sup_value"] == report.sup_value


def test_decay_scan_flags_inverse_power():
    pair = fueter(seed("inv_z"), 0, 3)
    near = decay_scan(pair, K=1.0, r_min=3.0, r_max=8.0, nx0=11, nr=21)
    far = decay_scan(pair, K=1.0, r_min=3.0, r_max=12.0, nx0=11, nr=21)
    assert far.sup_value > 10 * near.sup_value


def test_decay_scan_validation():
    pair = gauss_fund_pair(3)
    with pytest.raises(ValueError):
        decay_scan(pair, K=0.0, r_min=3.0, r_max=8.0)
    with pytest.raises(ValueError):
        decay_scan(pair, K=1.0, r_min=8.0, r_max=3.0)


def test_decay_scan_parallel_matches_serial(monkeypatch):
    pair = gauss_fund_pair(3)
    serial = decay_scan(pair, K=1.0, r_min=3.0, r_max=5.0, nx0=11, nr=11, workers=1)
    monkeypatch.setenv("FUETER_LAB_THREADS", "4")
    parallel = decay_scan(pair, K=1.0, r_min=3.0, r_max=5.0, nx0=11, nr=11)
    assert serial == parallel


def test_entire_part_probe_bounded():
    radii = (1e-1, 1e-2, 1e-3, 1e-4)
    for m in (3, 5):
        report = entire_part_probe(m, radii)
        assert report.bounded
        assert max(report.values) <= 1.0


def test_entire_part_probe_control_grows_like_pole():
    radii = (1e-1, 1e-2, 1e-3)
    for m in (3, 5):
        report = entire_part_probe(m, radii, subtract_pole=False)
        assert not report.bounded
        # |value| ~ r^-m
        ratio = report.values[-1] / report.values[-2]
        assert ratio == pytest.approx(10 ** m, rel=0.2)


def test_entire_part_probe_validation():
    with pytest.raises(ValueError):
        entire_part_probe(3, ())
    with pytest.raises(ValueError):
        entire_part_probe(3, (1e-3, 1e-2))
    with pytest.raises(ValueError):
        entire_part_probe(3, (-1.0,))


def test_lin_range():
    assert lin_range(0.0, 1.0, 1) == [0.0]
    vals = lin_range(-2.0, 2.0, 41)
    assert len(vals) == 41 and vals[0] == -2.0 and vals[-1] == 2.0


def test_sample_rows_and_csv_roundtrip(tmp_path):
    path = tmp_path / "g.csv"
    x0_vals = [0.0]
    r_vals = lin_range(0.1, 3.0, 100)
    n = write_sample_csv(path, "ck-gauss", 3, x0_vals, r_vals)
    assert n == 100
    m, header, rows = read_sample_csv(path)
    assert m == 3
    assert header == ["x0", "x1", "x2", "x3", "r", "scalar", "e1", "e2", "e3", "|value|"]
    direct = sample_rows("ck-gauss", 3, x0_vals, r_vals)
    assert rows == direct
    for row in rows:
        assert row[5] == math.exp(-row[4] * row[4] / 2.0)
    ok, count = verify_sample_csv(path, "ck-gauss")
    assert ok and count == 100


def test_verify_sample_csv_detects_tampering(tmp_path):
    path = tmp_path / "g.csv"
    write_sample_csv(path, "gauss-fund", 3, [0.5], lin_range(3.0, 4.0, 5))
    lines = path.read_text().splitlines()
    cells = lines[1].split(",")
    cells[5] = repr(float(cells[5]) + 1e-9)
    lines[1] = ",".join(cells)
    path.write_text("\n".join(lines) + "\n")
    ok, _ = verify_sample_csv(path, "gauss-fund")
    assert not ok


def test_sample_rows_rejects_nonpositive_r():
    with pytest.raises(EvalDomainError):
        sample_rows("ck-gauss", 3, [0.0], [0.0])
