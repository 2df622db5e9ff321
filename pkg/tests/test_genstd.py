import random
from fractions import Fraction

import pytest

from parastd.errors import (
    AllCoefficientsInQ,
    QContainsOne,
    SampleOffVariety,
    SampleOnExcludedLocus,
    TruncationTooSmall,
)
from parastd.orders import grevlex, lex, matrix_order, neg_grevlex
from parastd.polyring import AScalar, ParamPoly, ParamScalar, divides_factor_power
from parastd.division import divide
from parastd.genstd import (
    GenericBasis,
    PrimeContext,
    Staircase,
    certify_membership,
    coeff_in_q,
    divide_mod_q,
    drop_q_terms,
    generic_basis,
    generic_basis_local,
    generic_basis_well_order,
    generic_reduced_basis,
    leading_mod_q,
    plain_staircase,
    s_criterion_mod_q,
    verify_specialization,
)

from conftest import INTRO_ORDER, INTRO_PARAMS, INTRO_VARS, P, random_poly

A = AScalar.var(0, 1)
CTX0 = PrimeContext.trivial(1)


def ctx_a():
    return PrimeContext.from_generators([A], 1)


@pytest.fixture
def intro():
    return P("a*x2 - x1*x2 + x1")


# ---------------------------------------------------------------------------
# leading data mod Q


def test_leading_mod_q_intro(intro):
    e, _ = leading_mod_q(intro, INTRO_ORDER, ctx_a())
    assert e == (1, 0)
    e0, c0 = leading_mod_q(intro, INTRO_ORDER, CTX0)
    assert e0 == (0, 1)
    assert c0 == ParamScalar(A)


def test_leading_mod_q_all_in_q():
    with pytest.raises(AllCoefficientsInQ):
        leading_mod_q(P("a*x1"), INTRO_ORDER, ctx_a())


def test_q_contains_one_rejected():
    with pytest.raises(QContainsOne):
        PrimeContext.from_generators([AScalar.one(1)], 1)


# ---------------------------------------------------------------------------
# division modulo Q


def test_divide_mod_q_trivial_q_matches_plain(intro):
    res = divide_mod_q(P("a*x1*x2"), [intro], INTRO_ORDER, CTX0,
                       trunc_degree=4)
    assert res.q_part.is_zero()


def test_divide_mod_q_intro_replay(intro):
    # hand replay: the a*x2 head escapes to the remainder, then the
    # surviving part -x1*x2 + x1 divides f minus that head exactly once
    res = divide_mod_q(intro, [intro], INTRO_ORDER, ctx_a(), trunc_degree=4)
    assert res.quotients[0] == P("1")
    assert res.remainder == P("a*x2")
    assert res.q_part == P("-a*x2")
    # identity f = q g + R + T
    assert res.quotients[0] * intro + res.remainder + res.q_part == intro
    # T has all coefficient numerators in Q
    ctx = ctx_a()
    for c in res.q_part.terms.values():
        assert ctx.contains(c.num)
    # remainder is 0 mod Q since f lies in the ideal
    assert drop_q_terms(res.remainder, ctx).is_zero()


def test_divide_mod_q_specialization_consistency():
    # dividing after specialization matches specializing the division
    rng = random.Random(19)
    order = grevlex(2)
    for _ in range(10):
        f = random_poly(rng, 2, 1, max_terms=4, max_exp=3)
        g1 = random_poly(rng, 2, 1, max_terms=3, max_exp=2)
        g2 = random_poly(rng, 2, 1, max_terms=2, max_exp=2)
        res = divide_mod_q(f, [g1, g2], order, CTX0)
        for point in [(Fraction(1),), (Fraction(3),)]:
            try:
                lead_ok = all(
                    g.specialize(point).leading(order)[0] == g.leading(order)[0]
                    for g in (g1, g2) if not g.specialize(point).is_zero())
            except Exception:
                continue
            if not lead_ok or g1.specialize(point).is_zero() \
                    or g2.specialize(point).is_zero():
                continue
            direct = divide(f.specialize(point),
                            [g1.specialize(point), g2.specialize(point)], order)
            assert direct.remainder == res.remainder.specialize(point)
            for q, qs in zip(res.quotients, direct.quotients):
                assert q.specialize(point) == qs


# ---------------------------------------------------------------------------
# generic bases, well order route


def test_well_order_principal_q0():
    F = [P("a*x1 + x2")]
    B = generic_basis_well_order(F, lex(2), CTX0)
    assert B.staircase.generators == ((1, 0),)
    assert B.h_poly() == A
    assert B.gens == F


def test_well_order_principal_q_a():
    F = [P("a*x1 + x2")]
    B = generic_basis_well_order(F, lex(2), ctx_a())
    assert B.staircase.generators == ((0, 1),)
    assert B.h_poly().is_constant()


def test_well_order_inputs_inside_q():
    F = [P("a*x1"), P("a*x2 - a")]
    B = generic_basis_well_order(F, lex(2), ctx_a())
    assert B.gens == []
    assert B.staircase.is_empty()


# ---------------------------------------------------------------------------
# generic bases, homogenization route


def test_local_intro_q0(intro):
    B = generic_basis_local([intro], INTRO_ORDER, CTX0)
    assert B.staircase.generators == ((0, 1),)
    assert B.h_poly() == A
    assert len(B.gens) == 1
    assert B.gens[0] == intro


def test_local_intro_q_a(intro):
    B = generic_basis_local([intro], INTRO_ORDER, ctx_a())
    assert B.staircase.generators == ((1, 0),)
    assert B.h_poly().is_constant()


def test_local_trivial_monomial():
    B = generic_basis_local([P("x1")], INTRO_ORDER, ctx_a())
    assert B.staircase.generators == ((1, 0),)
    assert B.h_poly().is_constant()
    assert B.gens[0] == P("x1")


def test_local_degenerate_top_degree():
    # every top-degree coefficient lies in Q; the pre-drop keeps h out of Q
    F = [P("a*x1^2 + x2")]
    B = generic_basis_local(F, INTRO_ORDER, ctx_a())
    assert B.staircase.generators == ((0, 1),)
    assert not B.ctx.contains(B.h_poly())


def test_membership_certificates_exact(intro):
    for ctx in (CTX0, ctx_a()):
        B = generic_basis_local([intro, P("x1^2 - a*x1")], INTRO_ORDER, ctx)
        assert all(d.is_zero() for d in certify_membership(B))
    B2 = generic_basis_well_order([P("a*x1 + x2"), P("x1*x2 + a")],
                                  grevlex(2), CTX0)
    assert all(d.is_zero() for d in certify_membership(B2))


def test_lc_numerators_divide_h(intro):
    B = generic_basis_local([intro, P("x1^2 - a*x1")], INTRO_ORDER, CTX0)
    for g in B.gens:
        _, c = leading_mod_q(g, B.order, B.ctx)
        num = c.num.primitive()
        if not num.is_constant():
            assert divides_factor_power(num, [f for f, _ in B.h_factors])


def test_s_criterion_mod_q_holds(intro):
    for ctx in (CTX0, ctx_a()):
        B = generic_basis_local([intro, P("x1^2 - a*x1")], INTRO_ORDER, ctx)
        assert s_criterion_mod_q(B, trunc_degree=6)
    B2 = generic_basis_well_order([P("a*x1 + x2"), P("x1*x2 + a")],
                                  grevlex(2), CTX0)
    assert s_criterion_mod_q(B2)


# ---------------------------------------------------------------------------
# generic reduced bases


def test_reduced_intro_series(intro):
    B = generic_basis_local([intro], INTRO_ORDER, CTX0)
    R3 = generic_reduced_basis(B, 3)
    assert R3.gens == [P("x2 + (1/a)*x1 + (1/a^2)*x1^2 + (1/a^3)*x1^3")]
    R1 = generic_reduced_basis(B, 1)
    assert R1.gens == [P("x2 + (1/a)*x1")]
    assert R3.staircase == B.staircase


def test_reduced_fixed_point_global():
    F = [P("a*x1 + x2")]
    B = generic_basis_well_order(F, lex(2), CTX0)
    R = generic_reduced_basis(B, 5)
    assert R.gens == [P("x1 + (1/a)*x2")]
    # reducing an already reduced basis changes nothing
    R2 = generic_reduced_basis(R, 5)
    assert R2.gens == R.gens


def test_reduced_trunc_too_small():
    F = [P("x1^2"), P("x2^3")]
    B = generic_basis_local(F, INTRO_ORDER, CTX0)
    with pytest.raises(TruncationTooSmall):
        generic_reduced_basis(B, 1)


def test_reduced_denominators_divide_h_power(intro):
    B = generic_basis_local([intro], INTRO_ORDER, CTX0)
    R = generic_reduced_basis(B, 4)
    for g in R.gens:
        for c in g.terms.values():
            if not c.den.is_constant():
                assert divides_factor_power(c.den, [f for f, _ in R.h_factors])


def test_reduced_tails_leave_staircase(intro):
    for ctx in (CTX0, ctx_a()):
        B = generic_basis_local([intro, P("x1^3")], INTRO_ORDER, ctx)
        R = generic_reduced_basis(B, 5)
        for g, e in zip(R.gens, R.staircase.generators):
            for e2 in g.terms:
                if e2 != e:
                    assert not R.staircase.contains(e2)


def test_reduced_uniqueness_mod_q(intro):
    # different generating sets of the intro ideal give reduced bases whose
    # difference has all coefficient numerators in Q
    mult = P("x1 + 1") * intro
    for ctx in (CTX0, ctx_a()):
        B1 = generic_basis_local([intro], INTRO_ORDER, ctx)
        B2 = generic_basis_local([mult, intro], INTRO_ORDER, ctx)
        R1 = generic_reduced_basis(B1, 4)
        R2 = generic_reduced_basis(B2, 4)
        assert R1.staircase == R2.staircase
        for g1, g2 in zip(R1.gens, R2.gens):
            diff = g1 - g2
            for c in diff.terms.values():
                assert ctx.contains(c.num)


# ---------------------------------------------------------------------------
# specialization theorem


def test_verify_specialization_intro(intro):
    B = generic_basis_local([intro], INTRO_ORDER, CTX0)
    rep = verify_specialization(
        B, [(Fraction(1),), (Fraction(2),), (Fraction(-3),)])
    assert rep.ok
    for c in rep.checks:
        assert c.got.generators == ((0, 1),)


def test_verify_rejects_excluded_point(intro):
    B = generic_basis_local([intro], INTRO_ORDER, CTX0)
    with pytest.raises(SampleOnExcludedLocus):
        verify_specialization(B, [(Fraction(0),)])


def test_verify_rejects_off_variety_point(intro):
    B = generic_basis_local([intro], INTRO_ORDER, ctx_a())
    with pytest.raises(SampleOffVariety):
        verify_specialization(B, [(Fraction(1),)])


def test_verify_well_order_example():
    B = generic_basis_well_order([P("a*x1 + x2")], lex(2), CTX0)
    rep = verify_specialization(B, [(Fraction(5),)])
    assert rep.ok
    assert rep.checks[0].got.generators == ((1, 0),)


def test_verify_on_v_q_point(intro):
    B = generic_basis_local([intro], INTRO_ORDER, ctx_a())
    rep = verify_specialization(B, [(Fraction(0),)])
    assert rep.ok
    assert rep.checks[0].got.generators == ((1, 0),)


def test_staircase_genericity_random_samples():
    rng = random.Random(23)
    cases = [
        ([P("a*x2 - x1*x2 + x1")], INTRO_ORDER),
        ([P("3*x1^2 + a*x2"), P("3*x2^2 + a*x1")], INTRO_ORDER),
        ([P("a*x1 + x2")], lex(2)),
        ([P("a*x1^2 + x2"), P("x1*x2 + a")], grevlex(2)),
        ([P("3*x1^2 + 2*a*x1"), P("2*x2")], neg_grevlex(2)),
    ]
    for F, order in cases:
        B = generic_basis(F, order, CTX0)
        h = B.h_poly()
        points = []
        while len(points) < 10:
            c = Fraction(rng.randint(-9, 9), rng.randint(1, 5))
            if h.evaluate((c,)) != 0 and (c,) not in points:
                points.append((c,))
        assert verify_specialization(B, points).ok


def test_plain_staircase_of_specialized_ideal():
    F = [P("x1^2 - x2", params=(), vars=INTRO_VARS)]
    st = plain_staircase(F, INTRO_ORDER)
    assert st.generators == ((0, 1),)  # locally x2 leads x1^2


def test_point_prime_context(intro):
    # Q = <a - 2>: a rational point of the parameter line
    two = AScalar.const(2, 1)
    ctx = PrimeContext.from_generators([A - two], 1)
    B = generic_basis_local([intro], INTRO_ORDER, ctx)
    assert B.staircase.generators == ((0, 1),)
    rep = verify_specialization(B, [(Fraction(2),)])
    assert rep.ok
    assert s_criterion_mod_q(B, trunc_degree=5)


def test_pipeline_fuzz_against_specialization_oracle():
    # random parametric ideals through both routes, checked from scratch
    rng = random.Random(2718)
    orders = [lex(2), grevlex(2), neg_grevlex(2), INTRO_ORDER,
              matrix_order([[1, -1], [1, 0]])]  # includes a mixed order
    runs = 0
    for trial in range(40):
        order = orders[trial % len(orders)]
        F = [random_poly(rng, 2, 1, max_terms=3, max_exp=2)
             for _ in range(rng.randint(1, 2))]
        for qgens in ([], [A]):
            ctx = PrimeContext.from_generators(qgens, 1)
            try:
                B = generic_basis(F, order, ctx)
            except AllCoefficientsInQ:
                continue
            h = B.h_poly()
            points, tries = [], 0
            while len(points) < 3 and tries < 50:
                tries += 1
                c = (Fraction(0),) if qgens else \
                    (Fraction(rng.randint(-8, 8), rng.randint(1, 3)),)
                if h.evaluate(c) != 0 and c not in points \
                        and all(q.evaluate(c) == 0 for q in qgens):
                    points.append(c)
            if points:
                assert verify_specialization(B, points).ok
                runs += 1
    assert runs > 30


def test_two_parameter_prime_line():
    # Q = <a + b>: on that line the input degenerates to a*(x1 - x2)
    params = ("a", "b")
    f = P("a*x1 + b*x2", params=params)
    a = AScalar.var(0, 2)
    b = AScalar.var(1, 2)
    ctx = PrimeContext.from_generators([a + b], 2)
    B = generic_basis([f], lex(2), ctx)
    assert B.staircase.generators == ((1, 0),)
    pts = [(Fraction(1), Fraction(-1)), (Fraction(-3), Fraction(3)),
           (Fraction(1, 2), Fraction(-1, 2))]
    assert verify_specialization(B, pts).ok
