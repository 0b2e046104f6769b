import math
import random
from fractions import Fraction

import pytest

from fueterlab.axial import (
    COS,
    E,
    ONE,
    R,
    SIN,
    X0,
    AlgebraClosureError,
    AxialExpr,
    EvalDomainError,
    d_lower,
    d_upper,
    equals,
    eval_expr,
    format_axial,
    parse_axial,
    q_inv,
    trig_shift,
)
from fueterlab.sampling import random_axial, random_rational_axial

term = AxialExpr.term


def test_diff_basics():
    r2 = term(1, b=2)
    assert r2.diff("r") == term(2, b=1)
    assert E.diff("r") == term(-1, b=1, g=1)
    assert E.diff("x0") == term(1, a=1, g=1)
    assert COS.diff("x0") == term(-1, b=1, t="sin")
    assert COS.diff("r") == term(-1, a=1, t="sin")
    assert q_inv().diff("r") == term(-2, b=1, p=2)
    assert q_inv().diff("x0") == term(-2, a=1, p=2)


def test_diff_matches_finite_differences():
    """Independent numerical oracle for the symbolic derivative."""
    rng = random.Random(43)
    h = 1e-6
    for _ in range(40):
        expr = random_axial(rng)
        x0 = rng.uniform(0.4, 1.4)
        r = rng.uniform(0.6, 1.6)
        for var in ("x0", "r"):
            sym = expr.diff(var).evaluate(x0, r)
            if var == "x0":
                fd = (expr.evaluate(x0 + h, r) - expr.evaluate(x0 - h, r)) / (2 * h)
            else:
                fd = (expr.evaluate(x0, r + h) - expr.evaluate(x0, r - h)) / (2 * h)
            scale = max(1.0, abs(expr.evaluate(x0, r)), abs(sym))
            assert abs(sym - fd) <= 2e-7 * scale


def test_mixed_partials_commute():
    rng = random.Random(47)
    for _ in range(50):
        f = random_axial(rng)
        assert f.diff("x0").diff("r") == f.diff("r").diff("x0")


def test_radial_operators_small_cases():
    assert d_lower(0, COS) == COS
    assert d_upper(0, E) == E
    assert d_lower(1, R) == term(1, b=-1)
    assert d_lower(2, R) == term(-1, b=-3)
    assert d_upper(1, X0) == term(-1, a=1, b=-2)
    # d/dr(sin/r) = x0 cos / r - sin / r^2
    assert d_upper(1, SIN) == term(1, a=1, b=-1, t="cos") - term(1, b=-2, t="sin")
    with pytest.raises(ValueError):
        d_lower(-1, R)


def test_operator_identity_properties():
    rng = random.Random(53)
    for _ in range(30):
        n = rng.randint(0, 5)
        f = random_axial(rng)
        assert d_upper(n, f.diff("r")) == d_lower(n, f).diff("r")
        lhs = d_lower(n, f.diff("r")) - d_upper(n, f).diff("r")
        assert lhs == d_upper(n, f).scale(2 * n).div_r()


def test_operator_leibniz_properties():
    rng = random.Random(59)
    for _ in range(25):
        n = rng.randint(0, 4)
        f = random_rational_axial(rng)
        g = random_axial(rng)
        lower = AxialExpr.zero()
        upper = AxialExpr.zero()
        for nu in range(n + 1):
            c = math.comb(n, nu)
            lower = lower + d_lower(n - nu, f).scale(c) * d_lower(nu, g)
            upper = upper + d_lower(n - nu, f).scale(c) * d_upper(nu, g)
        assert d_lower(n, f * g) == lower
        assert d_upper(n, f * g) == upper


def test_equality_through_q_relation():
    lhs = term(1, a=2, p=1) + term(1, b=2, p=1)
    assert lhs == ONE
    assert term(1, b=-1) == R.div_r(2)
    assert not (COS == SIN)
    assert not (E * COS == COS)
    assert equals(q_inv(2) * (term(1, a=2) + term(1, b=2)), q_inv(1))


def test_closure_violations():
    with pytest.raises(AlgebraClosureError):
        _ = COS * SIN
    with pytest.raises(AlgebraClosureError):
        _ = E * E
    with pytest.raises(AlgebraClosureError):
        term(1, a=-1)


def test_eval_examples():
    assert eval_expr(term(1, b=-1), 0.0, 2.0) == 0.5
    assert eval_expr(E, 0.0, 0.0) == 1.0
    # -2 x0 Q^-2 at (1, 1): -2/4
    assert eval_expr(term(-2, a=1, p=2), 1.0, 1.0) == -0.5
    val = eval_expr(E * COS, 0.5, 1.5)
    assert val == pytest.approx(math.exp((0.25 - 2.25) / 2) * math.cos(0.75), rel=1e-15)


def test_eval_domain_errors():
    with pytest.raises(EvalDomainError):
        eval_expr(term(1, b=-1), 1.0, 0.0)
    with pytest.raises(EvalDomainError):
        eval_expr(q_inv(), 0.0, 0.0)
    with pytest.raises(EvalDomainError):
        eval_expr(R, 1.0, -1.0)


def test_restriction_matches_eval_at_zero():
    rng = random.Random(61)
    for _ in range(30):
        expr = random_axial(rng, min_b=0)
        restricted = expr.restrict_x0()
        for r in (0.3, 0.9, 1.7):
            assert restricted.evaluate(0.0, r) == pytest.approx(expr.evaluate(0.0, r), rel=1e-13, abs=1e-13)


def test_trig_shift_table():
    assert trig_shift("cos", 0) == (1, "cos")
    assert trig_shift("cos", 1) == (-1, "sin")
    assert trig_shift("cos", 2) == (-1, "cos")
    assert trig_shift("cos", 3) == (1, "sin")
    assert trig_shift("sin", 1) == (1, "cos")
    assert trig_shift("sin", 6) == (-1, "sin")


def test_text_roundtrip():
    rng = random.Random(67)
    for _ in range(50):
        expr = random_axial(rng)
        parsed = parse_axial(format_axial(expr))
        assert parsed.terms == expr.terms
    expr = term(-4, a=1, p=2)
    assert format_axial(expr) == "-4*x0*Q^-2"
    assert parse_axial("-4*x0*Q^-2").terms == expr.terms
    combo = term(Fraction(1, 2), a=2, b=-3, p=1, g=1, t="sin")
    assert format_axial(combo) == "1/2*x0^2*r^-3*Q^-1*E*sin"
    assert parse_axial(format_axial(combo)).terms == combo.terms
    assert parse_axial("0").is_structurally_zero()


def test_structural_vs_semantic_zero():
    expr = term(1, a=2, p=1) + term(1, b=2, p=1) - ONE
    assert not expr.is_structurally_zero()
    assert expr.is_zero()
