import random
from fractions import Fraction

import pytest

from fueterlab.clifford import (
    DimensionMismatchError,
    MixedVariantError,
    Multivector,
    Paravector,
    blade_product,
    blade_product_naive,
    conjugate,
    format_multivector,
    gp,
    grade_project,
    indices_from_mask,
    norm_sq,
    parse_multivector,
)
from fueterlab.sampling import random_multivector, random_vector


def mv(m, text):
    return parse_multivector(text, m)


def test_generator_relations():
    m = 4
    for j in range(1, m + 1):
        ej = Multivector.basis(m, j)
        assert ej * ej == Multivector.scalar(m, -1)
    for j in range(1, m + 1):
        for k in range(1, m + 1):
            if j != k:
                ej, ek = Multivector.basis(m, j), Multivector.basis(m, k)
                assert ej * ek + ek * ej == Multivector.zero(m)


def test_blade_product_examples():
    m = 3
    e1 = Multivector.basis(m, 1)
    e2 = Multivector.basis(m, 2)
    e12 = Multivector.basis(m, 1, 2)
    assert e1 * e2 == e12
    assert e2 * e1 == -e12
    assert e12 * e2 == -e1


def test_blade_sign_matches_naive_oracle_exhaustive():
    for m in range(1, 5):
        for ma in range(1 << m):
            for mb in range(1 << m):
                sign, mask = blade_product(ma, mb)
                nsign, idx = blade_product_naive(indices_from_mask(ma), indices_from_mask(mb))
                assert (sign, indices_from_mask(mask)) == (nsign, idx)


def test_blade_sign_matches_naive_oracle_random_m6():
    rng = random.Random(7)
    for _ in range(500):
        ma = rng.randrange(64)
        mb = rng.randrange(64)
        sign, mask = blade_product(ma, mb)
        nsign, idx = blade_product_naive(indices_from_mask(ma), indices_from_mask(mb))
        assert (sign, indices_from_mask(mask)) == (nsign, idx)


def test_associativity_random():
    rng = random.Random(11)
    for _ in range(200):
        m = rng.randint(1, 6)
        a, b, c = (random_multivector(rng, m) for _ in range(3))
        assert gp(gp(a, b), c) == gp(a, gp(b, c))


def test_vector_square_is_minus_norm():
    rng = random.Random(13)
    for _ in range(200):
        m = rng.randint(1, 6)
        v = random_vector(rng, m)
        assert gp(v, v) == Multivector.scalar(m, -norm_sq(v))


def test_conjugate_signs_by_grade():
    m = 4
    assert conjugate(Multivector.scalar(m, 1)) == Multivector.scalar(m, 1)
    assert conjugate(Multivector.basis(m, 1)) == -Multivector.basis(m, 1)
    assert conjugate(Multivector.basis(m, 1, 2)) == -Multivector.basis(m, 1, 2)
    assert conjugate(Multivector.basis(m, 1, 2, 3)) == Multivector.basis(m, 1, 2, 3)
    assert conjugate(Multivector.basis(m, 1, 2, 3, 4)) == Multivector.basis(m, 1, 2, 3, 4)


def test_conjugate_antihomomorphism_and_involution():
    rng = random.Random(17)
    for _ in range(200):
        m = rng.randint(1, 6)
        a = random_multivector(rng, m)
        b = random_multivector(rng, m)
        assert conjugate(gp(a, b)) == gp(conjugate(b), conjugate(a))
        assert conjugate(conjugate(a)) == a


def test_grade_projection():
    m = 3
    a = mv(m, "3 + 2*e1")
    assert grade_project(a, 0) == Multivector.scalar(m, 3)
    assert grade_project(a, 1) == mv(m, "2*e1")
    assert grade_project(Multivector.basis(m, 1, 2), 1) == Multivector.zero(m)
    with pytest.raises(ValueError):
        grade_project(a, 4)


def test_grade_decomposition_random():
    rng = random.Random(19)
    for _ in range(200):
        m = rng.randint(1, 6)
        a = random_multivector(rng, m)
        total = Multivector.zero(m)
        for k in range(m + 1):
            total = total + grade_project(a, k)
        assert total == a


def test_norm_sq():
    m = 3
    assert norm_sq(mv(m, "1*e1 + 1*e2")) == 2
    assert norm_sq(Multivector.zero(m)) == 0
    v = Multivector.vector(m, [Fraction(1, 2), Fraction(-2), Fraction(3)])
    assert norm_sq(v) == Fraction(1, 4) + 4 + 9
    assert gp(v, v).scalar_part() == -norm_sq(v)


def test_norm_sq_equals_grade0_of_a_conj_a():
    rng = random.Random(23)
    for _ in range(200):
        m = rng.randint(1, 6)
        a = random_multivector(rng, m)
        expect = Multivector.scalar(m, norm_sq(a))
        assert grade_project(gp(a, conjugate(a)), 0) == expect


def test_dimension_mismatch():
    with pytest.raises(DimensionMismatchError):
        gp(Multivector.basis(2, 1), Multivector.basis(3, 1))


def test_dimension_bounds():
    with pytest.raises(ValueError):
        Multivector.zero(0)
    with pytest.raises(ValueError):
        Multivector.zero(17)
    assert Multivector.basis(16, 16) * Multivector.basis(16, 16) == Multivector.scalar(16, -1)
    with pytest.raises(ValueError):
        Multivector(2, {4: 1})  # mask needs three generators


def test_variant_mixing_is_explicit():
    a = Multivector.scalar(3, 2)
    b = Multivector.scalar(3, 2.0, exact=False)
    with pytest.raises(MixedVariantError):
        gp(a, b)
    with pytest.raises(MixedVariantError):
        a.scale(0.5)
    assert gp(a.to_float(), b) == Multivector.scalar(3, 4.0, exact=False)


def test_text_roundtrip_exact():
    m = 3
    a = mv(m, "3 - 2*e1 + 1*e12")
    assert format_multivector(a) == "3 - 2*e1 + 1*e12"
    rng = random.Random(29)
    for _ in range(50):
        mm = rng.randint(1, 6)
        x = random_multivector(rng, mm)
        assert parse_multivector(format_multivector(x), mm) == x
    assert parse_multivector("0", m) == Multivector.zero(m)
    assert format_multivector(mv(m, "1/2 + 5/3*e2")) == "1/2 + 5/3*e2"


def test_text_roundtrip_numeric():
    m = 3
    a = Multivector(m, {0: 0.125, 1: -2e-05, 3: 3.5}, exact=False)
    s = format_multivector(a)
    assert parse_multivector(s, m, exact=False) == a


def test_text_high_dimension_labels():
    a = Multivector.basis(12, 1, 10, 12)
    s = format_multivector(a)
    assert "e1_10_12" in s
    assert parse_multivector(s, 12) == a


def test_paravector_embedding():
    p = Paravector(Fraction(2), (Fraction(1), Fraction(0), Fraction(-2)))
    x = p.to_multivector()
    assert x == parse_multivector("2 + 1*e1 - 2*e3", 3)
    assert p.r_sq() == 5
    # x conj(x) = |x|^2 for paravectors
    assert gp(x, conjugate(x)) == Multivector.scalar(3, Fraction(9))
