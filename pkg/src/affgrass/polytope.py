"""Moment polytopes of orbit closures, in exact rational arithmetic.

The polytope of a coweight is the convex hull of its closure set, taken in
coweight coordinates.  Vertices are extracted in any rank through an exact
linear programming membership test; facet inequalities are produced up to
rank three, with degenerate hulls described by paired inequalities pinning
the affine span.  No floating point is used anywhere.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations, product
from math import gcd
from typing import NamedTuple, Optional

from .psi import iwahori_leq, psi_infinity
from .rootsys import (
    ConsistencyError,
    Coweight,
    RootSystem,
    UnsupportedRankError,
    WeylElement,
)


class Facet(NamedTuple):
    normal: tuple[int, ...]
    rhs: Fraction


class MomentPolytope(NamedTuple):
    base: Coweight
    points: frozenset[Coweight]
    vertices: tuple[Coweight, ...]
    hull: Optional[tuple[Facet, ...]]


def _dot(a, b):
    return sum(x * y for x, y in zip(a, b))


def _primitive(vec):
    """Scale an integer vector by a positive rational to make it primitive."""
    g = 0
    for v in vec:
        g = gcd(g, abs(v))
    if g == 0:
        return tuple(vec)
    return tuple(v // g for v in vec)


def _integerize(vec):
    """Clear denominators of a rational vector, keeping direction."""
    denom = 1
    for v in vec:
        denom = denom * Fraction(v).denominator // gcd(denom, Fraction(v).denominator)
    return _primitive(tuple(int(Fraction(v) * denom) for v in vec))


def _row_reduce(rows):
    """Row echelon form over the rationals; returns (rows, pivot columns)."""
    rows = [list(map(Fraction, r)) for r in rows]
    pivots = []
    r = 0
    n = len(rows[0]) if rows else 0
    for c in range(n):
        piv = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = 1 / rows[r][c]
        rows[r] = [v * inv for v in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [v - f * u for v, u in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return rows[:r], pivots


def _direction_basis(points):
    """Independent integer directions spanning the affine hull of the points."""
    base = points[0]
    dirs = [tuple(a - b for a, b in zip(p, base)) for p in points[1:]]
    dirs = [d for d in dirs if any(d)]
    if not dirs:
        return []
    reduced, _ = _row_reduce(dirs)
    return [_integerize(row) for row in reduced]


def _kernel_normals(basis, n):
    """Integer basis of the functionals vanishing on all given directions."""
    if not basis:
        return [tuple(1 if j == i else 0 for j in range(n)) for i in range(n)]
    reduced, pivots = _row_reduce(basis)
    free = [c for c in range(n) if c not in pivots]
    out = []
    for fc in free:
        vec = [Fraction(0)] * n
        vec[fc] = Fraction(1)
        for row, pc in zip(reduced, pivots):
            vec[pc] = -row[fc]
        out.append(_integerize(vec))
    return out


def in_convex_hull(point, points) -> bool:
    """Exact test whether a rational point lies in the hull of finitely many.

    Solved as a phase one linear program over the rationals with Bland's
    rule, so it terminates and never suffers rounding.
    """
    pts = list(points)
    if not pts:
        return False
    n = len(point)
    m = n + 1
    rows = [[Fraction(q[i]) for q in pts] for i in range(n)]
    rows.append([Fraction(1)] * len(pts))
    rhs = [Fraction(point[i]) for i in range(n)] + [Fraction(1)]
    for i in range(m):
        if rhs[i] < 0:
            rows[i] = [-v for v in rows[i]]
            rhs[i] = -rhs[i]
    width = len(pts) + m
    tab = []
    for i in range(m):
        art = [Fraction(1) if j == i else Fraction(0) for j in range(m)]
        tab.append(rows[i] + art + [rhs[i]])
    cost = [Fraction(0)] * (width + 1)
    for i in range(m):
        cost = [c - v for c, v in zip(cost, tab[i])]
    for i in range(m):
        # artificial variables carry objective coefficient one
        cost[len(pts) + i] += 1
    basis = [len(pts) + i for i in range(m)]
    while True:
        enter = next((j for j in range(width) if cost[j] < 0), None)
        if enter is None:
            break
        best = None
        for i in range(m):
            if tab[i][enter] > 0:
                ratio = tab[i][-1] / tab[i][enter]
                if best is None or ratio < best[0] or (ratio == best[0] and basis[i] < basis[best[1]]):
                    best = (ratio, i)
        if best is None:
            raise ConsistencyError("unbounded phase one program")
        _, leave = best
        piv = tab[leave][enter]
        tab[leave] = [v / piv for v in tab[leave]]
        for i in range(m):
            if i != leave and tab[i][enter] != 0:
                f = tab[i][enter]
                tab[i] = [v - f * u for v, u in zip(tab[i], tab[leave])]
        if cost[enter] != 0:
            f = cost[enter]
            cost = [v - f * u for v, u in zip(cost, tab[leave])]
        basis[leave] = enter
    return -cost[-1] == 0


def hull_vertices(points) -> tuple[Coweight, ...]:
    """Extreme points of a finite set, in any rank, sorted."""
    pts = sorted(set(tuple(p) for p in points))
    if len(pts) <= 2:
        return tuple(pts)
    dirs = _direction_basis(pts)
    if len(dirs) == 1:
        f = dirs[0]
        keyed = sorted(pts, key=lambda p: _dot(f, p))
        return tuple(sorted((keyed[0], keyed[-1])))
    if len(pts[0]) == 2 and len(dirs) == 2:
        return tuple(sorted(_chain_vertices(pts)))
    out = []
    for i, p in enumerate(pts):
        others = pts[:i] + pts[i + 1:]
        if not in_convex_hull(p, others):
            out.append(p)
    return tuple(out)


def _cross2(o, a, b):
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def _chain_vertices(pts):
    """Convex polygon vertices of sorted planar points (monotone chain)."""
    lower = []
    for p in pts:
        while len(lower) >= 2 and _cross2(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    upper = []
    for p in reversed(pts):
        while len(upper) >= 2 and _cross2(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    return lower[:-1] + upper[:-1]


def _polygon_cycle(pts):
    """Vertices of a planar polygon in counterclockwise boundary order."""
    return _chain_vertices(sorted(pts))


def _facet_from_edge(normal, anchor):
    return Facet(tuple(normal), Fraction(_dot(normal, anchor)))


def _equality_facets(normals, anchor):
    out = []
    for n in normals:
        rhs = _dot(n, anchor)
        out.append(Facet(tuple(n), Fraction(rhs)))
        out.append(Facet(tuple(-v for v in n), Fraction(-rhs)))
    return out


def _cross3(a, b):
    return (
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    )


def _planar_coords(pts, basis):
    """Exact coordinates of coplanar points on a two direction basis."""
    base = pts[0]
    coords = []
    for p in pts:
        diff = [Fraction(a - b) for a, b in zip(p, base)]
        rows = [[Fraction(basis[0][i]), Fraction(basis[1][i]), diff[i]] for i in range(len(diff))]
        reduced, pivots = _row_reduce(rows)
        sol = [Fraction(0), Fraction(0)]
        for row, pc in zip(reduced, pivots):
            if pc < 2:
                sol[pc] = row[2]
        coords.append((sol[0], sol[1], p))
    return coords


def hull_facets(points) -> tuple[Facet, ...]:
    """Facet inequalities normal . x <= rhs of the hull, rank three at most.

    Degenerate hulls are pinned to their affine span by paired opposite
    inequalities; the remaining facets cut along the boundary inside it.
    """
    pts = sorted(set(tuple(p) for p in points))
    if not pts:
        raise ValueError("empty point set has no hull")
    n = len(pts[0])
    if n > 3:
        raise UnsupportedRankError("facet output is limited to rank at most 3")
    dirs = _direction_basis(pts)
    normals = _kernel_normals(dirs, n)
    facets = list(_equality_facets(normals, pts[0]))
    dim = len(dirs)
    if dim == 0:
        pass
    elif dim == 1:
        f = dirs[0]
        vals = [_dot(f, p) for p in pts]
        facets.append(Facet(tuple(f), Fraction(max(vals))))
        facets.append(Facet(tuple(-v for v in f), Fraction(-min(vals))))
    elif dim == 2 and n == 2:
        cyc = _polygon_cycle(pts)
        for a, b in zip(cyc, cyc[1:] + cyc[:1]):
            edge = (b[0] - a[0], b[1] - a[1])
            outward = (edge[1], -edge[0])
            facets.append(_facet_from_edge(_primitive(outward), a))
    elif dim == 2 and n == 3:
        plane_normal = normals[0]
        coords = _planar_coords(pts, dirs)
        cyc = _polygon_cycle([(s, t) for s, t, _ in coords])
        back = {(s, t): p for s, t, p in coords}
        cycle_pts = [back[c] for c in cyc]
        for a, b in zip(cycle_pts, cycle_pts[1:] + cycle_pts[:1]):
            edge = tuple(x - y for x, y in zip(b, a))
            outward = _cross3(edge, plane_normal)
            inside = next(p for p in cycle_pts if p != a and p != b)
            if _dot(outward, inside) > _dot(outward, a):
                outward = tuple(-v for v in outward)
            facets.append(_facet_from_edge(_primitive(outward), a))
    else:
        verts = hull_vertices(pts)
        seen = set()
        for tri in combinations(verts, 3):
            a, b, c = tri
            normal = _cross3(
                tuple(x - y for x, y in zip(b, a)),
                tuple(x - y for x, y in zip(c, a)),
            )
            if not any(normal):
                continue
            normal = _primitive(normal)
            base_val = _dot(normal, a)
            has_pos = has_neg = False
            for p in pts:
                d = _dot(normal, p) - base_val
                if d > 0:
                    has_pos = True
                elif d < 0:
                    has_neg = True
                if has_pos and has_neg:
                    break
            if has_pos and has_neg:
                continue
            if has_pos:
                normal = tuple(-v for v in normal)
                base_val = -base_val
            key = (normal, base_val)
            if key not in seen:
                seen.add(key)
                facets.append(Facet(normal, Fraction(base_val)))
    uniq = sorted(set(facets))
    return tuple(uniq)


def moment_polytope(rs: RootSystem, lam: Coweight, want_facets: Optional[bool] = None) -> MomentPolytope:
    """Hull data of the closure set of a coweight.

    want_facets None computes facets exactly when the rank allows it; True
    forces the request and raises UnsupportedRankError above rank three;
    False skips facets in any rank.
    """
    lam = tuple(lam)
    points = psi_infinity(rs, lam).members
    vertices = hull_vertices(points)
    hull = None
    if want_facets is None:
        want_facets = rs.rank <= 3
    if want_facets:
        hull = hull_facets(points)
        for f in hull:
            for p in points:
                if _dot(f.normal, p) > f.rhs:
                    raise ConsistencyError(
                        f"point {p} violates facet {f} of the hull of {lam}"
                    )
    return MomentPolytope(lam, points, vertices, hull)


def contains_point(poly: MomentPolytope, point) -> bool:
    """Closed membership test against the facet description."""
    if poly.hull is None:
        raise UnsupportedRankError("membership test needs the facet description")
    return all(_dot(f.normal, point) <= f.rhs for f in poly.hull)


def chamber_maxima(rs: RootSystem, lam: Coweight, y: WeylElement) -> frozenset[Coweight]:
    """Members of the closure set lying in the chamber of y and maximal there.

    Domination inside the chamber is decided by the coroot positivity
    criterion; the surviving coweights are pairwise incomparable.
    """
    members = psi_infinity(rs, tuple(lam)).members
    in_chamber = [m for m in members if rs.is_dominant(y.act_inverse(m))]
    out = []
    for m in in_chamber:
        dominated = any(
            other != m and rs.positive_sum_in_chamber(
                tuple(a - b for a, b in zip(other, m)), y
            )
            for other in in_chamber
        )
        if not dominated:
            out.append(m)
    return frozenset(out)


def integral_gap_scan(
    rs: RootSystem, lam: Coweight, poly: MomentPolytope | None = None
) -> list[Coweight]:
    """Integral points of the polytope, congruent to the base, not in the set.

    Expected empty; any output is a finding for the caller to report, and
    nothing here treats it as an error.  A precomputed polytope for the same
    base may be passed to skip recomputing it.
    """
    lam = tuple(lam)
    if poly is None:
        if rs.rank > 3:
            raise UnsupportedRankError(
                "the gap scan is limited to rank at most 3"
            )
        poly = moment_polytope(rs, lam, want_facets=True)
    if poly.hull is None:
        raise UnsupportedRankError("the gap scan needs the exact hull")
    members = poly.points
    lo = [min(v[i] for v in poly.vertices) for i in range(rs.rank)]
    hi = [max(v[i] for v in poly.vertices) for i in range(rs.rank)]
    gaps = []
    for cand in product(*(range(a, b + 1) for a, b in zip(lo, hi))):
        if cand in members:
            continue
        diff = tuple(a - b for a, b in zip(cand, lam))
        if not rs.in_coroot_lattice(diff):
            continue
        if contains_point(poly, cand):
            gaps.append(cand)
    return sorted(gaps)


def polytope_json(rs: RootSystem, poly: MomentPolytope) -> dict:
    if poly.hull is None:
        raise UnsupportedRankError("facet output needs the exact hull")
    return {
        "vertices": [list(v) for v in poly.vertices],
        "facets": [
            {"normal": list(f.normal), "rhs": str(f.rhs)} for f in poly.hull
        ],
        "gaps": [list(g) for g in integral_gap_scan(rs, poly.base, poly)],
    }
