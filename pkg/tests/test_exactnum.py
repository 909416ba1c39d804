"""Exact field arithmetic, constants, text form, approximation."""

import random
from fractions import Fraction

import pytest

from fusioncat.exactnum import (ParamScalar, ScalarParseError,
                                approx, field_add, field_inv, field_mul,
                                field_sqrt, is_zero, named_constant,
                                param_mul, param_substitute, parse_scalar,
                                render_scalar, tower_preset)


@pytest.fixture(scope="module")
def h3():
    return tower_preset("h3")


def test_presets():
    assert tower_preset("h3").degree == 8
    assert tower_preset("rationals").degree == 1
    assert tower_preset("ising").degree == 2
    assert tower_preset("fibonacci").degree == 4
    with pytest.raises(ValueError):
        tower_preset("golden")


def test_defining_relations(h3):
    r13 = h3.gen(0)
    assert field_mul(r13, r13) == 13
    d_rho = named_constant("dRho")
    a = named_constant("A")
    assert field_mul(d_rho, a) == 1
    assert field_inv(d_rho) == a
    with pytest.raises(ZeroDivisionError, match="division by zero"):
        field_inv(h3.zero())


def test_tower_mismatch(h3):
    other = tower_preset("ising")
    with pytest.raises(ValueError, match="tower mismatch"):
        field_add(h3.one(), other.one())


def test_zero_identities(h3):
    r13 = h3.gen(0)
    dp, dm = named_constant("Dplus"), named_constant("Dminus")
    b = named_constant("B")
    assert is_zero(dp * dm + b / 3)
    assert is_zero(named_constant("A") * named_constant("dRho") - 1)
    assert is_zero(named_constant("c1") - named_constant("dRho") * (r13 - 2) / 9)
    assert not is_zero(named_constant("sqrtA"))
    assert is_zero(h3.zero())


def test_named_constants(h3):
    r13 = h3.gen(0)
    assert named_constant("C") == (r13 + 1) / 6
    assert named_constant("bBigon") ** 2 == named_constant("dRho")
    t = named_constant("tTriangle")
    assert t == -named_constant("B") * named_constant("bBigon")
    assert approx(t) == pytest.approx(-0.97262, abs=1e-5)
    assert named_constant("c2") ** 2 == (r13 - 2) / 9
    with pytest.raises(ValueError):
        named_constant("zeta")
    with pytest.raises(ValueError):
        named_constant("A", tower_preset("ising"))


def test_approx_values(h3):
    assert approx(named_constant("dRho")) == pytest.approx(3.302775637731995, abs=1e-12)
    assert approx(named_constant("A")) == pytest.approx(0.302775637731995, abs=1e-12)
    assert approx(h3.zero()) == 0.0
    with pytest.raises(ValueError):
        approx(h3.one(), 32)


def _random_scalar(tower, rng, max_num=10**6):
    coords = [Fraction(rng.randint(-max_num, max_num),
                       rng.randint(1, max_num)) for _ in range(tower.degree)]
    return tower.from_coords(coords)


def test_field_axioms(h3):
    rng = random.Random(20240601)
    for _ in range(40):
        x, y, z = (_random_scalar(h3, rng) for _ in range(3))
        assert (x * y) * z == x * (y * z)
        assert x * (y + z) == x * y + x * z
        if not x.is_zero():
            assert x * x.inverse() == 1


def test_zero_test_soundness(h3):
    rng = random.Random(7)
    for _ in range(1000):
        x = _random_scalar(h3, rng, max_num=1000)
        if x.is_zero():
            continue
        assert abs(approx(x, 64)) > 0


def test_approx_is_multiplicative(h3):
    rng = random.Random(99)
    values = [named_constant(n) for n in ("A", "B", "C", "Dplus", "Dminus",
                                          "sqrtA", "bBigon", "tTriangle")]
    for _ in range(50):
        x, y = rng.choice(values), rng.choice(values)
        err = abs(approx(x * y, 64) - approx(x, 64) * approx(y, 64))
        assert err < 2 ** -40


def test_param_ops(h3):
    p1 = ParamScalar.param(h3, 1)
    p2 = ParamScalar.param(h3, 2)
    assert param_substitute(-p1, 1, 1) == -h3.one()
    c = named_constant("C")
    assert param_substitute(p1 * p2 * c, -1, 1) == -c
    assert param_mul(p1, p1) == ParamScalar.from_field(h3.one())
    with pytest.raises(ValueError):
        param_substitute(p1, 0, 1)


def test_substitution_is_a_homomorphism(h3):
    rng = random.Random(5)
    values = [named_constant(n) for n in ("A", "B", "C", "Dplus")]
    p1 = ParamScalar.param(h3, 1)
    p2 = ParamScalar.param(h3, 2)
    for _ in range(20):
        x = ParamScalar.from_field(rng.choice(values)) * rng.choice([p1, p2, p1 * p2])
        y = ParamScalar.from_field(rng.choice(values)) * rng.choice([p1, p2, p1 * p2])
        for s1 in (-1, 1):
            for s2 in (-1, 1):
                assert (x * y).substitute(s1, s2) == x.substitute(s1, s2) * y.substitute(s1, s2)
                assert (x + y).substitute(s1, s2) == x.substitute(s1, s2) + y.substitute(s1, s2)


def test_canonical_text(h3):
    a = named_constant("A")
    assert render_scalar(a) == "(-3/2+1/2*r13)"
    x = ParamScalar.from_field(a * named_constant("sqrtA") * named_constant("dRho"))
    p1 = ParamScalar.param(h3, 1)
    # A * sqrtA * dRho = sqrtA, so with an extra (-1/2 + r13/2) factor:
    y = ParamScalar.from_field((h3.gen(0) - 1) / 2 * named_constant("sqrtA")) * p1
    assert render_scalar(y) == "(-1/2+1/2*r13)*rA*p1"
    assert render_scalar(parse_scalar(render_scalar(y), h3)) == render_scalar(y)
    assert render_scalar(h3.zero()) == "0"
    assert render_scalar(-p1) == "-p1"
    assert render_scalar(named_constant("c1")) == "(7/18+1/18*r13)"


@pytest.mark.parametrize("text", ["(-3/2+1/2*r13)", "7/18+1/18*r13",
                                  "(7/18)+(1/18)*r13", "-p1", "p1*p2",
                                  "1/2*rA*rE", "(1+r13)*(1-r13)"])
def test_parse_accepts_expression_shapes(h3, text):
    parse_scalar(text, h3)


def test_parse_errors(h3):
    with pytest.raises(ScalarParseError, match="zero denominator"):
        parse_scalar("(1/0)", h3)
    with pytest.raises(ScalarParseError, match="unknown token"):
        parse_scalar("2*r7", h3)
    with pytest.raises(ScalarParseError, match="column"):
        parse_scalar("1+", h3)


def test_field_sqrt(h3):
    assert field_sqrt(named_constant("dRho")) == named_constant("bBigon")
    assert field_sqrt(h3.from_rational(4)) == 2
    assert field_sqrt(h3.from_rational(-1)) is None
    rationals = tower_preset("rationals")
    assert field_sqrt(rationals.from_rational(2)) is None
    fib = tower_preset("fibonacci")
    phi = (fib.gen(0) + 1) / 2
    root = field_sqrt(1 - phi.inverse() ** 2)
    assert root is not None and root ** 2 == 1 - phi.inverse() ** 2
    assert root.sign() > 0
