"""Independent validation: structural checks on computed bases and a dense
brute-force oracle.

The oracle shares no elimination code with the main loop: it rebuilds rank
facts from scratch with full Gaussian elimination per candidate monomial and
solves one dense linear system per basis element.  It exists as desk-scale
ground truth, hence the size cap.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

from .orders import LEX, TermOrder, exp_divides
from .points import PointSet, is_lower
from .poly import Polynomial, poly_text


class CapExceededError(ValueError):
    """Raised when the oracle is asked for more points than its cap."""


@dataclass
class VerifyReport:
    """A list of named checks; passes only if every check passed."""

    checks: list = dc_field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(ok for _, ok, _ in self.checks)

    def add(self, name: str, ok: bool, detail: str = "") -> None:
        self.checks.append((name, ok, detail))

    def extend(self, other: "VerifyReport", prefix: str = "") -> None:
        for name, ok, detail in other.checks:
            self.checks.append((prefix + name, ok, detail))

    def text(self) -> str:
        lines = []
        for name, ok, detail in self.checks:
            suffix = f": {detail}" if detail else ""
            lines.append(f"{'PASS' if ok else 'FAIL'} {name}{suffix}")
        lines.append(f"{'PASS' if self.passed else 'FAIL'} overall")
        return "\n".join(lines)

    def to_json(self) -> dict:
        return {"passed": self.passed,
                "checks": [{"name": n, "passed": ok, "detail": d}
                           for n, ok, d in self.checks]}


def check_vanishing(G, ps: PointSet) -> VerifyReport:
    """Every polynomial must evaluate to zero at every point."""
    rep = VerifyReport()
    bad = None
    for g in G:
        for pt in ps:
            if not g.field.is_zero(g.evaluate(pt)):
                bad = (g, pt)
                break
        if bad:
            break
    detail = ""
    if bad:
        detail = f"{poly_text(bad[0], LEX)} is nonzero at {bad[1]}"
    rep.add("vanishing", bad is None, detail)
    return rep


def check_reduced_gb(G, N, order: TermOrder, n_points=None) -> VerifyReport:
    """Shape checks pinning the reduced basis and its escalier."""
    rep = VerifyReport()

    monic = all(g.leading_term(order)[1] == g.field.one for g in G)
    rep.add("monic", monic)

    lms = [g.leading_monomial(order) for g in G]
    clash = next(((a, b) for a in lms for b in lms
                  if a != b and exp_divides(a, b)), None)
    rep.add("leading monomials pairwise non-divisible", clash is None,
            f"{clash[0]} divides {clash[1]}" if clash else "")

    nset = set(N)
    stray = next(((g, e) for g in G
                  for e in g.terms
                  if e != g.leading_monomial(order) and e not in nset), None)
    rep.add("tails supported in N", stray is None,
            f"monomial {stray[1]} outside N" if stray else "")

    rep.add("N is a lower set", is_lower(N))

    if n_points is not None:
        rep.add("N size equals point count", len(nset) == n_points,
                f"{len(nset)} vs {n_points}")

    hit = next((n for n in nset
                if any(exp_divides(m, n) for m in lms)), None)
    rep.add("N avoids leading-monomial multiples", hit is None,
            f"{hit} divisible by a leading monomial" if hit else "")

    shifts = ({(i + 1, j) for i, j in nset} |
              {(i, j + 1) for i, j in nset}) - nset
    if not nset:
        shifts = {(0, 0)}
    uncovered = next((b for b in shifts
                      if not any(exp_divides(m, b) for m in lms)), None)
    rep.add("border covered by leading monomials", uncovered is None,
            f"border monomial {uncovered} not divisible" if uncovered else "")
    return rep


def check_newton(Q, ordered_points) -> VerifyReport:
    """Triangular unit evaluations: Q[k] at point m is delta(k, m), m <= k."""
    if len(Q) != len(ordered_points):
        raise ValueError(
            f"{len(Q)} polynomials against {len(ordered_points)} points")
    rep = VerifyReport()
    bad = None
    for k, q in enumerate(Q):
        f = q.field
        for m in range(k + 1):
            v = q.evaluate(ordered_points[m])
            want = f.one if m == k else f.zero
            if v != want:
                bad = f"Q[{k}] at point {m} gave {v}"
                break
        if bad:
            break
    rep.add("newton triangularity", bad is None, bad or "")
    return rep


def verify_parts(ps: PointSet, order: TermOrder, G, N, Q,
                 perm) -> VerifyReport:
    """Full battery on a run's output, whether fresh or deserialized."""
    rep = VerifyReport()
    rep.extend(check_vanishing(G, ps))
    rep.extend(check_reduced_gb(G, N, order, n_points=len(ps)))
    perm_ok = (len(set(perm)) == len(perm) == len(Q)
               and all(0 <= k < len(ps) for k in perm))
    rep.add("permutation indices valid", perm_ok)
    if perm_ok:
        rep.extend(check_newton(Q, [ps[k] for k in perm]))
    else:
        rep.add("newton triangularity", False, "skipped: bad permutation")
    q_lms = [q.leading_monomial(order) for q in Q]
    rep.add("Q leading monomials enumerate N",
            len(q_lms) == len(set(q_lms)) and set(q_lms) == set(N))
    return rep


def verify_result(result) -> VerifyReport:
    """verify_parts applied to a BMResult, as the CLI runs before success."""
    return verify_parts(result.points, result.order, result.G, result.N,
                        result.Q, result.point_permutation)


def _rank(f, rows) -> int:
    """Row rank by fresh full Gaussian elimination, pivoting on the first
    nonzero entry."""
    rows = [list(r) for r in rows]
    if not rows:
        return 0
    ncols = len(rows[0])
    rank = 0
    for c in range(ncols):
        piv = next((i for i in range(rank, len(rows))
                    if not f.is_zero(rows[i][c])), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        inv = f.inv(rows[rank][c])
        for i in range(rank + 1, len(rows)):
            if not f.is_zero(rows[i][c]):
                s = f.mul(rows[i][c], inv)
                rows[i] = [f.sub(a, f.mul(s, b))
                           for a, b in zip(rows[i], rows[rank])]
        rank += 1
        if rank == len(rows):
            break
    return rank


def _solve(f, rows, rhs):
    """Solve a square nonsingular system by full elimination and back
    substitution; rows are consumed as copies."""
    n = len(rows)
    aug = [list(r) + [b] for r, b in zip(rows, rhs)]
    for c in range(n):
        piv = next(i for i in range(c, n) if not f.is_zero(aug[i][c]))
        aug[c], aug[piv] = aug[piv], aug[c]
        inv = f.inv(aug[c][c])
        aug[c] = [f.mul(inv, a) for a in aug[c]]
        for i in range(n):
            if i != c and not f.is_zero(aug[i][c]):
                s = aug[i][c]
                aug[i] = [f.sub(a, f.mul(s, b))
                          for a, b in zip(aug[i], aug[c])]
    return [aug[i][n] for i in range(n)]


def _eval_column(f, e, points):
    out = []
    for x, y in points:
        v = f.one
        for _ in range(e[0]):
            v = f.mul(v, x)
        for _ in range(e[1]):
            v = f.mul(v, y)
        out.append(v)
    return out


def oracle_dense(ps: PointSet, order: TermOrder, cap: int = 64):
    """Ground-truth (G, N) by brute force.

    Enumerates monomials ascending under the order, keeps the greedy set
    whose evaluation columns stay independent (checked from scratch each
    time), then solves one dense system per staircase corner.
    """
    mu = len(ps)
    if mu > cap:
        raise CapExceededError(f"{mu} points exceeds oracle cap {cap}")
    f = ps.field
    points = list(ps)

    # total degree <= mu always suffices for the escalier of mu points
    universe = [(i, d - i) for d in range(mu + 1) for i in range(d + 1)]
    universe.sort(key=order.key)

    N, cols, g_lms = [], [], []
    for t in universe:
        if len(N) == mu:
            break
        if any(exp_divides(m, t) for m in g_lms):
            continue
        vec = _eval_column(f, t, points)
        if _rank(f, cols + [vec]) == len(cols) + 1:
            N.append(t)
            cols.append(vec)
        else:
            g_lms.append(t)
    assert len(N) == mu  # the degree bound above was not exhausted

    l_x = {}
    for i, j in N:
        l_x[j] = max(l_x.get(j, 0), i)
    nu = max(l_x)
    corners = [(l_x[0] + 1, 0)]
    corners += [(l_x[j] + 1, j) for j in range(1, nu + 1)
                if l_x[j] < l_x[j - 1]]
    corners.append((0, nu + 1))

    point_rows = [[cols[c][r] for c in range(mu)] for r in range(mu)]
    G = []
    for t in sorted(corners, key=order.key):
        rhs = _eval_column(f, t, points)
        coeffs = _solve(f, point_rows, rhs)
        terms = {e: f.neg(c) for e, c in zip(N, coeffs) if not f.is_zero(c)}
        terms[t] = f.one
        G.append(Polynomial(f, terms))
    return G, N
