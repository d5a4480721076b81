"""Cartesian-set criteria and maximal cartesian subset extraction.

A point set is cartesian when it equals {(x_i, y_j) : (i, j) in A} for a
lower set A, distinct abscissae x_i and distinct ordinates y_j.  Cartesian
subsets are what lets a run be seeded with a ready-made triangular block.
"""

from __future__ import annotations

from .points import (EmptySetError, LineCover, PointSet, line_cover,
                     lower_set_of)


def _nested(chain) -> bool:
    """True iff the given coordinate sets form a superset chain."""
    prev = None
    for cur in chain:
        if prev is not None and not cur <= prev:
            return False
        prev = cur
    return True


def is_cartesian(ps: PointSet, method: str = "sx_eq_sy") -> bool:
    """Decide cartesianness via lower-set equality or nested line chains."""
    if len(ps) == 0:
        raise EmptySetError("empty point set")
    if method == "sx_eq_sy":
        sx = lower_set_of(line_cover(ps, "rows"))
        sy = lower_set_of(line_cover(ps, "columns"))
        return sx.exponents == sy.exponents
    if method == "nested_chains":
        rows = [frozenset(x for x, _ in g)
                for _, g in line_cover(ps, "rows").groups]
        cols = [frozenset(y for _, y in g)
                for _, g in line_cover(ps, "columns").groups]
        return _nested(rows) and _nested(cols)
    raise ValueError(f"unknown method {method!r}")


def max_cartesian_subset(ps: PointSet):
    """Greedy maximal cartesian subset.

    Loop: if the working set is cartesian, union it in and stop; otherwise
    take a maximal row subset A (greatest cardinality, ties by smallest
    ordinate), keep only leftover points whose abscissa occurs in A, and
    repeat on the remainder.

    Returns (subset, removed) with `removed` in the original input order.
    The subset is listed in its own row-cover order (groups by descending
    size then ascending ordinate, ascending abscissa within a group).
    """
    if len(ps) == 0:
        raise EmptySetError("empty point set")
    field = ps.field
    work = list(ps)
    chosen: set = set()
    while True:
        if is_cartesian(PointSet(field, work)):
            chosen.update(work)
            break
        rows: dict = {}
        for pt in work:
            rows.setdefault(pt[1], []).append(pt)
        key = min(rows, key=lambda k: (-len(rows[k]), k))
        a = rows[key]
        abscissae = {x for x, _ in a}
        chosen.update(a)
        work = [pt for pt in work if pt not in a and pt[0] in abscissae]
        if not work:
            break
    # the row-cover ordering is total, so any construction order works here
    subset = PointSet(field, line_cover(PointSet(field, list(chosen)),
                                        "rows").flatten())
    removed = [pt for pt in ps if pt not in chosen]
    return subset, removed


def order_points_gpbm(ps: PointSet, subset: PointSet,
                      cover: LineCover) -> PointSet:
    """Reorder: subset points by their row-cover indices first, then the rest
    of `ps` in original input order."""
    members = set(subset.points)
    if cover.axis != "rows":
        raise ValueError("subset cover must be a row cover")
    index = ps.index_map()
    if any(pt not in index for pt in members):
        raise ValueError("subset is not contained in the point set")
    head = cover.flatten()
    if set(head) != members:
        raise ValueError("cover does not match the subset")
    tail = [pt for pt in ps if pt not in members]
    return PointSet(ps.field, head + tail)
