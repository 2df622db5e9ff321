"""Division with unique quotients and remainder, truncated and series variants.

The engine is the classical iterative loop: repeatedly inspect the leading
exponent of the current iterate; if it lies in some divisor's region of the
exponent partition, reduce by that divisor (smallest index wins), otherwise
move the leading monomial to the remainder. Full division needs a well
order or homogeneous data to terminate; the truncated variant stops the
first time the leading exponent escapes every divisor cone; the series
variant discards generated terms above a degree cutoff, which is the
computable stand-in for power-series division under local orders.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import (
    NonTerminatingDivision,
    NonTerminatingOrder,
    ZeroPolynomialError,
)
from .orders import (
    Exponent,
    MonomialOrder,
    exp_degree,
    exp_divides,
    exp_lcm,
    exp_sub,
    is_global,
)
from .polyring import ParamPoly

TRUNCATION_STEP_GUARD = 20000


@dataclass(frozen=True)
class Partition:
    """Regions of N^n carved by divisor leading exponents, in order."""

    exponents: tuple[Exponent, ...]

    def region_of(self, e: Exponent) -> int | None:
        """Index of the first divisor whose cone contains e, None if escaped."""
        for j, d in enumerate(self.exponents):
            if exp_divides(d, e):
                return j
        return None


@dataclass
class DivisionResult:
    quotients: list[ParamPoly]
    remainder: ParamPoly
    cofactor_ok: bool = True
    steps: int = field(default=0, repr=False)

    def check_identity(self, f: ParamPoly, divisors) -> bool:
        acc = self.remainder
        for q, g in zip(self.quotients, divisors):
            acc = acc + q * g
        return acc == f


FULL = "full"
TRUNCATED = "truncated"
SERIES = "series"


def _division_loop(f, divisors, order, mode, max_degree=None, guard=None):
    n, m = f.n, f.m
    leads = []
    for g in divisors:
        if g.is_zero():
            raise ZeroPolynomialError("zero divisor")
        leads.append(g.leading(order))
    part = Partition(tuple(e for e, _ in leads))
    quotients = [ParamPoly.zero(n, m) for _ in divisors]
    remainder = ParamPoly.zero(n, m)
    iterate = f
    exact = True
    steps = 0
    while not iterate.is_zero():
        steps += 1
        if guard is not None and steps > guard:
            raise NonTerminatingDivision(
                f"no stopping state after {guard} reduction steps")
        e, c = iterate.leading(order)
        j = part.region_of(e)
        if j is None:
            if mode == TRUNCATED:
                return quotients, iterate, exact, steps
            remainder = remainder + ParamPoly.monomial(e, c, n, m)
            iterate = iterate - ParamPoly.monomial(e, c, n, m)
            continue
        de, dc = leads[j]
        shift = exp_sub(e, de)
        coeff = c / dc
        quotients[j] = quotients[j] + ParamPoly.monomial(shift, coeff, n, m)
        iterate = iterate - divisors[j].mul_monomial(shift, coeff)
        if mode == SERIES and not iterate.is_zero():
            kept = {ee: cc for ee, cc in iterate.terms.items()
                    if exp_degree(ee) <= max_degree}
            if len(kept) != len(iterate.terms):
                exact = False
                iterate = ParamPoly(kept, n, m, _prune=False)
    return quotients, remainder, exact, steps


def _all_homogeneous(f, divisors):
    return f.is_homogeneous() and all(g.is_homogeneous() for g in divisors)


def divide(f: ParamPoly, G, order: MonomialOrder) -> DivisionResult:
    """Full division of f by the list G: unique quotients and remainder.

    Requires a global order, or homogeneous data (any order); otherwise the
    loop need not terminate and NonTerminatingOrder is raised. The result
    satisfies the exact identity f = sum(q_j g_j) + R, the support conditions
    on quotients and remainder, and the max property on leading exponents.
    """
    if f.is_zero():
        return DivisionResult([ParamPoly.zero(f.n, f.m) for _ in G],
                              ParamPoly.zero(f.n, f.m))
    if not is_global(order) and not _all_homogeneous(f, G):
        raise NonTerminatingOrder(
            "full division needs a well order or homogeneous data; "
            "use divide_truncated or divide_series")
    q, r, exact, steps = _division_loop(f, list(G), order, FULL)
    return DivisionResult(q, r, exact, steps)


def divide_truncated(f: ParamPoly, G, order: MonomialOrder) -> DivisionResult:
    """Division stopped at the first iterate escaping every divisor cone.

    When the full remainder would be zero this coincides with full division;
    otherwise the remainder is the whole iterate at the stopping index and
    the quotients are polynomial. The support conditions of full division
    are not guaranteed, but the exact identity and the max property hold.
    """
    if f.is_zero():
        return DivisionResult([ParamPoly.zero(f.n, f.m) for _ in G],
                              ParamPoly.zero(f.n, f.m))
    guard = None
    if not is_global(order) and not _all_homogeneous(f, G):
        guard = TRUNCATION_STEP_GUARD
    q, r, exact, steps = _division_loop(f, list(G), order, TRUNCATED, guard=guard)
    return DivisionResult(q, r, exact, steps)


def divide_series(f: ParamPoly, G, order: MonomialOrder,
                  max_degree: int) -> DivisionResult:
    """Degree-bounded division: terms above max_degree are discarded.

    Computable stand-in for power-series division under local orders; the
    identity holds modulo terms of total degree above the cutoff, signalled
    by cofactor_ok=False whenever anything was discarded.
    """
    if f.is_zero():
        return DivisionResult([ParamPoly.zero(f.n, f.m) for _ in G],
                              ParamPoly.zero(f.n, f.m))
    start = {e: c for e, c in f.terms.items() if exp_degree(e) <= max_degree}
    exact0 = len(start) == len(f.terms)
    f0 = ParamPoly(start, f.n, f.m, _prune=False)
    if f0.is_zero():
        return DivisionResult([ParamPoly.zero(f.n, f.m) for _ in G],
                              ParamPoly.zero(f.n, f.m), exact0)
    q, r, exact, steps = _division_loop(f0, list(G), order, SERIES,
                                        max_degree=max_degree)
    return DivisionResult(q, r, exact and exact0, steps)


def s_function(f: ParamPoly, g: ParamPoly, order: MonomialOrder) -> ParamPoly:
    """Head-cancelling combination lc(g)*m*f - lc(f)*m'*g.

    m and m' lift the leading terms of f and g to their least common
    multiple, so the two head monomials cancel.
    """
    if f.is_zero() or g.is_zero():
        raise ZeroPolynomialError("S-function of zero polynomial")
    ef, cf = f.leading(order)
    eg, cg = g.leading(order)
    lcm = exp_lcm(ef, eg)
    left = f.mul_monomial(exp_sub(lcm, ef), cg)
    right = g.mul_monomial(exp_sub(lcm, eg), cf)
    return left - right
