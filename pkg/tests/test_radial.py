import math
import random
from fractions import Fraction

from sp4whittaker.exact import GaussianRational as GR
from sp4whittaker.radial import RadialFunction


def rel(a, b):
    return abs(a - b) / max(abs(b), 1e-300)


def test_monomial_evaluation():
    f = RadialFunction.monomial(3, Fraction(2), Fraction(1))
    # 3 * y1^2 * y2 at (a1, a2) = (2, 1): y1 = 2, y2 = 2
    assert f.evaluate(2.0, 1.0) == 24.0
    assert f.is_exact() and f.is_monomial_like()


def test_exact_arithmetic_cancels_structurally():
    f = RadialFunction.monomial(Fraction(1, 3), 1, 2)
    g = f.scale(3) - RadialFunction.monomial(1, 1, 2)
    assert g.is_zero()


def test_euler_operators_on_monomials():
    f = RadialFunction.monomial(1, Fraction(3), Fraction(5))
    assert (f.euler_y1() - f.scale(3)).is_zero()
    assert (f.euler_y2() - f.scale(5)).is_zero()
    # d1 = e1 + e2 and d2 = e2 - e1 act by a-exponents:
    # y1^3 y2^5 = a1^8 a2^2
    assert (f.d1() - f.scale(8)).is_zero()
    assert (f.d2() - f.scale(2)).is_zero()


def test_differentiation_closure_against_finite_differences():
    rng = random.Random(7)
    t = 4.0 * math.pi
    fam = RadialFunction.zero()
    for _ in range(4):
        fam = fam + RadialFunction.monomial(
            rng.uniform(-2, 2), Fraction(rng.randint(0, 3)),
            Fraction(rng.randint(0, 3), 2), r=-0.5 * rng.randint(0, 2),
            w=(rng.choice([0.5, 1.0, 2.0]), 1.0, t) if rng.random() < 0.7 else None)
    for y1, y2 in ((0.7, 1.3), (1.5, 0.8)):
        h = 1e-5 * y1
        num = y1 * (fam.evaluate_y(y1 + h, y2) - fam.evaluate_y(y1 - h, y2)) / (2 * h)
        ana = fam.euler_y1().evaluate_y(y1, y2)
        assert rel(ana, num) < 1e-6
        h2 = 1e-5 * y2
        num = y2 * (fam.evaluate_y(y1, y2 + h2) - fam.evaluate_y(y1, y2 - h2)) / (2 * h2)
        ana = fam.euler_y2().evaluate_y(y1, y2)
        assert rel(ana, num) < 1e-6


def test_mixed_coefficients_promote_to_float():
    f = RadialFunction.monomial(Fraction(1, 2), 0, 0) + RadialFunction.monomial(0.5, 0, 0)
    assert not f.is_exact()
    assert f.evaluate(1.0, 1.0) == 1.0


def test_mul_y1_shifts_power():
    f = RadialFunction.monomial(GR(2), Fraction(1, 2), 0)
    g = f.mul_y1()
    ((p, q, r, w), c), = g.terms
    assert p == Fraction(3, 2) and c == GR(2)
