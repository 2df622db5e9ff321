import random
from fractions import Fraction

import pytest
from hypothesis import HealthCheck, settings

from parastd.orders import matrix_order
from parastd.polyring import AScalar, ParamPoly, ParamScalar
from parastd.problems import poly_from_string

settings.register_profile(
    "desk", max_examples=40, deadline=None,
    suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("desk")

# the running example's local order: x2 > x1 > x1*x2
INTRO_ORDER = matrix_order([[-1, -1], [-1, 0]])
INTRO_PARAMS = ("a",)
INTRO_VARS = ("x1", "x2")


def P(text, params=INTRO_PARAMS, vars=INTRO_VARS):
    return poly_from_string(text, params, vars)


@pytest.fixture
def intro_poly():
    return P("a*x2 - x1*x2 + x1")


def random_poly(rng: random.Random, n, m, max_terms=5, max_exp=3,
                integral=True):
    """Small random ParamPoly; coefficients are integers or a-linear."""
    terms = {}
    for _ in range(rng.randint(1, max_terms)):
        e = tuple(rng.randint(0, max_exp) for _ in range(n))
        c = rng.randint(-4, 4)
        if c == 0:
            c = 1
        num = {(0,) * m: Fraction(c)}
        if m and rng.random() < 0.4:
            ge = tuple(rng.randint(0, 1) for _ in range(m))
            num[ge] = num.get(ge, Fraction(0)) + Fraction(rng.randint(1, 3))
        coeff = ParamScalar(AScalar(num, m))
        if not integral and rng.random() < 0.3:
            coeff = coeff / ParamScalar.const(rng.randint(2, 5), m)
        if not coeff.is_zero():
            terms[e] = coeff
    if not terms:
        terms = {(0,) * n: ParamScalar.one(m)}
    return ParamPoly(terms, n, m)
