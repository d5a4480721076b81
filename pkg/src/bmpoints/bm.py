"""Staircase construction for vanishing ideals of finite planar point sets.

Computes the reduced Groebner basis G, the monomial escalier N, and the
slot-aligned degree-reducing Newton interpolation basis Q.  Three entry
points share one elimination loop: bm_run starts from an empty staircase;
spbm_run (lex/inlex) preloads every point through a line cover and its
Newton basis, leaving only the Groebner elements to discover; gpbm_run
(any order) preloads a maximal cartesian subset and lets the loop finish.
"""

from __future__ import annotations

from bisect import insort
from dataclasses import dataclass

import numpy as np

from .cartesian import max_cartesian_subset, order_points_gpbm
from .engine import PrimeEngine, engine_for
from .fields import Field
from .newton import (EchelonMatrix, evaluation_matrix, newton_basis_cols,
                     newton_basis_rows)
from .orders import TermOrder, exp_divides
from .points import (EmptySetError, LineCover, PointSet, is_lower, line_cover,
                     lower_set_of)
from .poly import Polynomial


class NotLowerSetError(ValueError):
    """Raised when an exponent collection expected to be a lower set is not."""


class UnsupportedOrderError(ValueError):
    """Raised when an algorithm variant does not support the requested order."""


@dataclass
class BMResult:
    """Output bundle of one run.

    G is monic and ascending by leading monomial; N lists the escalier in
    slot (discovery) order; Q[k] has leading monomial N[k] and value 1 at
    the k-th pivot point; point_permutation[k] is the input index of that
    pivot point.
    """

    field: Field
    order: TermOrder
    algorithm: str
    points: PointSet
    run_points: list
    G: list
    N: list
    Q: list
    point_permutation: list
    seeded_count: int
    processed: int


def reduce_vector(matrix: EchelonMatrix, v):
    """Forward-reduce v against the rows of an echelon matrix.

    Returns (residual, coeffs) where coeffs lists the nonzero
    (row index, coefficient) pairs consumed left to right.
    """
    f = matrix.field
    v = [f.convert(c) for c in v]
    coeffs = []
    for r, (row, piv) in enumerate(zip(matrix.rows, matrix.pivots)):
        a = v[piv]
        if not f.is_zero(a):
            v = [f.sub(c, f.mul(a, rc)) for c, rc in zip(v, row)]
            coeffs.append((r, a))
    return v, coeffs


def border(exponents, order: TermOrder) -> list:
    """x- and y-shifts of a lower set minus the set, ascending under order."""
    exps = set(exponents)
    if not is_lower(exps):
        raise NotLowerSetError("border requires a lower set")
    out = {(i + 1, j) for i, j in exps} | {(i, j + 1) for i, j in exps}
    return order.sorted(out - exps)


class BMState:
    """Mutable loop state shared by the plain and seeded runners."""

    __slots__ = ("field", "order", "input_points", "run_points",
                 "input_indices", "engine", "cache", "N", "L",
                 "g_lts", "g_polys", "seeded", "processed")


def _new_state(ps: PointSet, order: TermOrder, run_points: list) -> BMState:
    st = BMState()
    st.field = ps.field
    st.order = order
    st.input_points = ps
    st.run_points = run_points
    imap = ps.index_map()
    st.input_indices = [imap[p] for p in run_points]
    st.engine = engine_for(ps.field, run_points)
    st.cache = {}
    st.N = []
    st.L = [(0, 0)]
    st.g_lts = []
    st.g_polys = []
    st.seeded = 0
    st.processed = 0
    return st


def _loop(st: BMState) -> None:
    """Process candidates ascending: zero residual yields a basis element,
    a fresh pivot extends the staircase and queues the shifted candidates."""
    eng = st.engine
    key = st.order.key
    while st.L:
        t = st.L.pop(0)
        st.processed += 1
        v = eng.new_vector(eng.monomial_vector(t, st.cache))
        eng.reduce_into(v)
        piv = eng.pivot_of(v)
        if piv is None:
            terms = dict(eng.tail_terms(v, st.N))
            terms[t] = st.field.one
            st.g_lts.append(t)
            st.g_polys.append(Polynomial(st.field, terms))
            st.L = [u for u in st.L if not exp_divides(t, u)]
        else:
            slot = len(st.N)
            eng.append_row(v, slot, piv)
            st.N.append(t)
            for cand in ((t[0] + 1, t[1]), (t[0], t[1] + 1)):
                if any(exp_divides(u, cand) for u in st.L):
                    continue
                if any(exp_divides(u, cand) for u in st.g_lts):
                    continue
                insort(st.L, cand, key=key)


def _finish(st: BMState, algorithm: str) -> BMResult:
    eng = st.engine
    Q = [Polynomial(st.field, dict(eng.coeff_terms(r, st.N)))
         for r in range(len(st.N))]
    key = st.order.key
    pairs = sorted(zip(st.g_lts, st.g_polys), key=lambda lg: key(lg[0]))
    return BMResult(field=st.field, order=st.order, algorithm=algorithm,
                    points=st.input_points, run_points=st.run_points,
                    G=[g for _, g in pairs], N=list(st.N), Q=Q,
                    point_permutation=[st.input_indices[p]
                                       for p in eng.pivot_indices()],
                    seeded_count=st.seeded, processed=st.processed)


def bm_run(ps: PointSet, order: TermOrder) -> BMResult:
    """Full elimination from an empty staircase."""
    if len(ps) == 0:
        raise EmptySetError("no points")
    st = _new_state(ps, order, list(ps.points))
    _loop(st)
    return _finish(st, "bm")


def spbm_run(ps: PointSet, order: TermOrder) -> BMResult:
    """Seeded run covering all points with lines before the loop starts.

    lex pairs with a row cover (monomials grouped by y-degree), inlex with
    a column cover; other orders are rejected.
    """
    if len(ps) == 0:
        raise EmptySetError("no points")
    if order.name == "lex":
        axis = "rows"
    elif order.name == "inlex":
        axis = "columns"
    else:
        raise UnsupportedOrderError(
            f"spbm supports lex and inlex, not {order.name}")
    cover = line_cover(ps, axis)
    lows = lower_set_of(cover)
    slots = lows.row_major() if axis == "rows" else lows.column_major()
    st = _new_state(ps, order, cover.flatten())
    _seed(st, cover, slots)
    st.L = border(slots, st.order)
    _loop(st)
    return _finish(st, "spbm")


def gpbm_run(ps: PointSet, order: TermOrder) -> BMResult:
    """Seeded run preloading a maximal cartesian subset, then finishing
    the remaining points with the plain loop.  Works under any order."""
    if len(ps) == 0:
        raise EmptySetError("no points")
    subset, _removed = max_cartesian_subset(ps)
    cover = line_cover(subset, "rows")
    st = _new_state(ps, order, order_points_gpbm(ps, subset, cover))
    _seed(st, cover, lower_set_of(cover).row_major())
    st.L = border(st.N, st.order)
    _loop(st)
    return _finish(st, "gpbm")


def _seed(st: BMState, cover: LineCover, slots: list) -> None:
    """Preload the engine with the Newton rows of a cover: slot k's row is
    zero at run points before k and one at run point k."""
    st.N = list(slots)
    st.seeded = len(slots)
    if isinstance(st.engine, PrimeEngine):
        _seed_fast_prime(st.engine, cover, slots)
    else:
        basis = (newton_basis_rows(cover) if cover.axis == "rows"
                 else newton_basis_cols(cover))
        _seed_via_basis(st.engine, basis, slots, st.run_points)


def _seed_via_basis(eng, basis, slots: list, run_points: list) -> None:
    """Desk-scale seeding: evaluate the Newton basis and read the
    coefficient half straight off the polynomials."""
    emat = evaluation_matrix(basis, run_points)
    col = {e: c for c, e in enumerate(slots)}
    aug = []
    for poly, evals in zip(basis.polys, emat.rows):
        row = eng.new_vector(evals)
        for e, c in poly.terms.items():
            row[eng.mu + col[e]] = c
        aug.append(row)
    eng.bulk_load(aug, list(range(len(aug))))


def _advance(vec_b, vec_c, coords, shift, c: int, p: int):
    """Multiply a tracked product by (var - c): point-wise on the evaluation
    half, exponent-shift minus c-scale on the coefficient half."""
    b = vec_b * ((coords - c) % p) % p
    moved = np.zeros_like(vec_c)
    src = np.nonzero(vec_c)[0]
    tgt = shift[src]
    assert not (tgt < 0).any()  # every live coefficient has a slot above it
    moved[tgt] = vec_c[src]
    return b, (moved + (p - c) * vec_c) % p


def _seed_fast_prime(eng: PrimeEngine, cover: LineCover, slots: list) -> None:
    """Vectorized prime-field seeding, equivalent to _seed_via_basis but
    without building any polynomial: evaluation rows grow by multiplying
    running linear factors, coefficient rows by shift-and-scale."""
    p = eng.p
    mu = eng.mu
    k = len(slots)
    col = {e: c for c, e in enumerate(slots)}
    inner = 0 if cover.axis == "rows" else 1
    shift_in = np.full(k, -1, dtype=np.int64)
    shift_out = np.full(k, -1, dtype=np.int64)
    for c, (i, j) in enumerate(slots):
        up_in = (i + 1, j) if inner == 0 else (i, j + 1)
        up_out = (i, j + 1) if inner == 0 else (i + 1, j)
        shift_in[c] = col.get(up_in, -1)
        shift_out[c] = col.get(up_out, -1)
    coords_in = eng.xs if inner == 0 else eng.ys
    coords_out = eng.ys if inner == 0 else eng.xs
    aug = np.zeros((k, eng.width), dtype=np.int64)
    head_b = np.ones(mu, dtype=np.int64) % p
    head_c = np.zeros(k, dtype=np.int64)
    head_c[col[(0, 0)]] = 1 % p
    row = 0
    for gidx, (_, grp) in enumerate(cover.groups):
        if gidx:
            prev_key = cover.groups[gidx - 1][0]
            head_b, head_c = _advance(head_b, head_c, coords_out, shift_out,
                                      int(prev_key), p)
        cur_b, cur_c = head_b, head_c
        for pidx, pt in enumerate(grp):
            if pidx:
                prev_pt = grp[pidx - 1]
                cur_b, cur_c = _advance(cur_b, cur_c, coords_in, shift_in,
                                        int(prev_pt[inner]), p)
            s = eng.field.inv(int(cur_b[row]))
            aug[row, :mu] = cur_b * s % p
            aug[row, mu:mu + k] = cur_c * s % p
            row += 1
    eng.bulk_load(aug, np.arange(k, dtype=np.int64))
