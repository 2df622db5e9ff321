"""Constructible partition of parameter space with a basis per cell.

A branching tree on excluded polynomials: at each node, compute a generic
standard basis with Q generated by the node's vanishing conditions, emit
the generic cell (h added to the non-vanishing side), and recurse into the
vanishing locus of each square-free factor of h. Sibling branches exclude
the earlier factors, so the emitted cells are pairwise disjoint and cover
parameter space.

Prime decomposition is out of scope: the vanishing conditions need not be
prime, so leading data mod the cell ideal can be coarser than on its
components. Cells are therefore verified on admissible sample points when
such points can be generated, and a failing cell is split on a square-free
factor of an offending coefficient that vanishes at the bad sample.
"""

from __future__ import annotations

from dataclasses import dataclass
from random import Random

from .errors import DepthExceeded, MultipleCells, NoCell, ParastdError, QContainsOne
from .orders import MonomialOrder
from .polyring import AScalar, squarefree_factors
from .buchberger import parameter_groebner
from .genstd import (
    GenericBasis,
    PrimeContext,
    Staircase,
    generic_basis,
    plain_staircase,
)
from .sampling import variety_points


@dataclass(frozen=True)
class Cell:
    """Points where every `vanish` polynomial is zero and no `nonvanish` is."""

    vanish: tuple[AScalar, ...]
    nonvanish: tuple[AScalar, ...]

    def contains(self, point) -> bool:
        return (all(v.evaluate(point) == 0 for v in self.vanish)
                and all(nv.evaluate(point) != 0 for nv in self.nonvanish))


@dataclass
class CellEntry:
    cell: Cell
    basis: GenericBasis
    staircase: Staircase


@dataclass
class ComprehensiveResult:
    cells: list[CellEntry]
    covering: bool = True


def in_radical(p: AScalar, egens) -> bool:
    """Rabinowitsch check: p vanishes wherever all of egens do."""
    egens = [g for g in egens if not g.is_zero()]
    if p.is_zero():
        return True
    if p.is_constant():
        return False
    if not egens:
        return False
    m = p.m
    ext = [AScalar({e + (0,): c for e, c in g.terms.items()}, m + 1)
           for g in egens]
    # 1 - t*p with t the appended variable
    tp = AScalar({e + (1,): -c for e, c in p.terms.items()}, m + 1)
    one = AScalar.const(1, m + 1)
    basis = parameter_groebner(ext + [one + tp])
    return any(g.is_constant() for g in basis)


def _sort_factors(factors):
    return sorted(factors,
                  key=lambda f: (f.total_degree(), sorted(f.terms.items())))


def comprehensive_basis(F, order: MonomialOrder, max_depth: int = 12,
                        verify_samples: int = 3, seed: int = 0) -> ComprehensiveResult:
    """Partition parameter space into cells of constant staircase.

    Tree recursion on (vanish, nonvanish) condition sets; every root-to-leaf
    path strictly increases the vanishing ideal, so max_depth is a guard,
    not the usual stopping reason. Inconsistent cells are pruned.
    """
    F = [f for f in F if not f.is_zero()]
    if not F:
        raise ParastdError("comprehensive basis of the zero ideal")
    m = F[0].m
    entries: list[CellEntry] = []
    frontier: list[tuple] = []
    rng = Random(seed)

    def process(evanish: tuple, navoid: tuple, depth: int):
        if depth > max_depth:
            frontier.append((evanish, navoid))
            return
        try:
            ctx = PrimeContext.from_generators(evanish, m, assumed_prime=False)
        except QContainsOne:
            return  # empty locus
        if any(in_radical(nv, ctx.qbasis) for nv in navoid):
            return  # a non-vanishing condition is identically zero here
        basis = generic_basis(F, order, ctx)

        branch, dead = [], []
        for fac, _ in basis.h_factors:
            for sf in squarefree_factors(fac):
                if any(sf == g for g in branch + dead):
                    continue
                (dead if in_radical(sf, ctx.qbasis) else branch).append(sf)
        branch = _sort_factors(branch)

        if dead:
            # h vanishes on all of V(E): saturate E and retry; the node's
            # region is unchanged while the ideal strictly grows
            proper = [d for d in dead if not ctx.contains(d)]
            if not proper:
                raise ParastdError(
                    "input coefficients degenerate on an entire cell")
            process(evanish + tuple(_sort_factors(proper)), navoid, depth + 1)
            return

        cell = Cell(evanish, navoid + tuple(branch))
        bad = _failing_sample(cell, basis, F, order, rng, verify_samples)
        if bad is not None:
            split = _offending_factor(basis, bad, ctx)
            if split is None:
                raise ParastdError(
                    f"cell verification failed at {bad} with no offending "
                    "coefficient to split on")
            process(evanish + (split,), navoid, depth + 1)
            process(evanish, navoid + (split,), depth + 1)
            return
        entries.append(CellEntry(cell, basis, basis.staircase))
        excluded: list[AScalar] = []
        for fac in branch:
            process(evanish + (fac,), navoid + tuple(excluded), depth + 1)
            excluded.append(fac)

    process((), (), 0)
    if frontier:
        raise DepthExceeded(
            f"{len(frontier)} cells unresolved at depth {max_depth}", frontier)
    return ComprehensiveResult(entries, covering=True)


def _failing_sample(cell, basis, F, order, rng, count):
    """First admissible sample whose from-scratch staircase disagrees."""
    if count <= 0:
        return None
    points = variety_points(cell.vanish, basis.ctx.m, rng, count,
                            avoid=list(cell.nonvanish))
    for p in points:
        spec = [f.specialize(p) for f in F]
        spec = [f for f in spec if not f.is_zero()]
        got = plain_staircase(spec, order) if spec else Staircase(
            basis.staircase.n, ())
        if got != basis.staircase:
            return p
    return None


def _offending_factor(basis, point, ctx):
    cands = []
    for g in basis.gens:
        for c in g.terms.values():
            for sf in squarefree_factors(c.num):
                if sf.evaluate(point) == 0 and not ctx.contains(sf) \
                        and not in_radical(sf, ctx.qbasis) \
                        and all(sf != x for x in cands):
                    cands.append(sf)
    cands = _sort_factors(cands)
    return cands[0] if cands else None


def locate(result: ComprehensiveResult, point) -> int:
    """Index of the unique cell containing the point."""
    hits = [i for i, e in enumerate(result.cells) if e.cell.contains(point)]
    if not hits:
        raise NoCell(f"no cell contains {tuple(point)}")
    if len(hits) > 1:
        raise MultipleCells(f"{len(hits)} cells contain {tuple(point)}")
    return hits[0]
