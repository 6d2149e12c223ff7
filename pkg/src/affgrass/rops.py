"""Operators moving a coweight toward the boundary of its orbit closure.

The operator of a positive root reflects the coweight when the pairing is
nonnegative, and reflects then shifts one coroot step otherwise.  Repeated
application generates the same set as the root strings.  Compositions along
a rank two subsystem satisfy exchange identities away from finitely many
affine walls; scans classify the failures.  Orbit dimensions are computed by
two independent formulas that must agree.
"""

from __future__ import annotations

from itertools import product
from typing import NamedTuple

from .afweyl import affine_weyl
from .rootsys import ConsistencyError, Coweight, NotApplicableError, RootSystem


def r_op(rs: RootSystem, lam: Coweight, vec: tuple[int, ...]) -> Coweight:
    """Apply the operator of one positive root to a coweight."""
    lam = tuple(lam)
    p = rs.pair(lam, vec)
    cw = rs.coroot_coweight(vec)
    shift = p if p >= 0 else p + 1
    return tuple(x - shift * t for x, t in zip(lam, cw))


def r_closure(rs: RootSystem, lam: Coweight) -> frozenset[Coweight]:
    """Closure of a coweight under the operators of all positive roots."""
    lam = tuple(lam)
    vecs = [r.vec for r in rs.positive_roots]
    seen = {lam}
    todo = [lam]
    while todo:
        mu = todo.pop()
        for vec in vecs:
            nu = r_op(rs, mu, vec)
            if nu not in seen:
                seen.add(nu)
                todo.append(nu)
    return frozenset(seen)


def dim_orbit(rs: RootSystem, lam: Coweight) -> int:
    """Dimension of the orbit of a coweight, computed two ways.

    The finite route pairs the dominant translate with all positive roots
    and subtracts the length of the chamber element; the affine route takes
    the length of the negated translation times that element.  Disagreement
    raises ConsistencyError.
    """
    lam = tuple(lam)
    lam_plus, w = rs.dominant_translate(lam)
    finite = rs.rho_pair(lam_plus) - rs.length(w)
    aw = affine_weyl(rs)
    affine = aw.length(aw.from_parts(tuple(-x for x in lam), w))
    if finite != affine:
        raise ConsistencyError(
            f"dimension of {lam}: finite route gives {finite}, affine route {affine}"
        )
    return finite


def regularity_constant(rs: RootSystem) -> int:
    """Largest squared length ratio in the system: 1, 2 or 3."""
    return max(rs.root_lengths)


def is_n_regular(rs: RootSystem, lam: Coweight, n: int) -> bool:
    """Whether every simple coordinate of the dominant translate is at least n."""
    lam_plus, _ = rs.dominant_translate(tuple(lam))
    return all(c >= n for c in lam_plus)


def is_alpha_regular(rs: RootSystem, lam: Coweight, vec: tuple[int, ...]) -> bool:
    """Regularity of a coweight relative to one positive root.

    Positive pairing is always regular, zero never is, and for negative
    pairing the coweight shifted one coroot step up must stay in the chamber
    of its own minimal Weyl element.
    """
    lam = tuple(lam)
    p = rs.pair(lam, vec)
    if p > 0:
        return True
    if p == 0:
        return False
    _, w = rs.dominant_translate(lam)
    cw = rs.coroot_coweight(vec)
    shifted = tuple(x + t for x, t in zip(lam, cw))
    return rs.is_dominant(w.act_inverse(shifted))


class BraidReport(NamedTuple):
    root_pair: tuple[tuple[int, ...], tuple[int, ...]]
    pairings: tuple[int, int]
    kind: str
    lam: Coweight
    lhs: Coweight
    rhs: Coweight
    equal: bool
    critical_lines_hit: tuple[tuple[tuple[int, ...], int], ...]


_PATTERN_LENGTH = {"orthogonal": 2, "A2": 3, "B2": 4, "G2": 6}


def _classify_pair(rs: RootSystem, alpha, beta):
    """Kind of the rank two subsystem spanned by two positive roots.

    Returns (kind, alpha, beta) with the short root first for the unequal
    length kinds.  Pairs with a positive pairing, or outside the four known
    patterns, raise ValueError.
    """
    alpha, beta = tuple(alpha), tuple(beta)
    p = rs.pair(rs.coroot_coweight(beta), alpha)
    q = rs.pair(rs.coroot_coweight(alpha), beta)
    table = {
        (0, 0): ("orthogonal", False),
        (-1, -1): ("A2", False),
        (-1, -2): ("B2", False),
        (-2, -1): ("B2", True),
        (-1, -3): ("G2", False),
        (-3, -1): ("G2", True),
    }
    if (p, q) not in table:
        raise ValueError(
            f"roots {alpha} and {beta} with pairings ({p}, {q}) do not span "
            "a usable rank two pattern"
        )
    kind, swap = table[(p, q)]
    if swap:
        alpha, beta = beta, alpha
        p, q = q, p
    return kind, alpha, beta, p, q


def _composite(rs: RootSystem, lam: Coweight, first, second, n: int) -> Coweight:
    """Alternating word of operators of length n, rightmost factor first."""
    word = [first if t % 2 == 0 else second for t in range(n)]
    value = tuple(lam)
    for vec in reversed(word):
        value = r_op(rs, value, vec)
    return value


def critical_lines(kind: str, alpha, beta) -> tuple[tuple[tuple[int, ...], int], ...]:
    """Affine walls on which the exchange identity of a pattern may fail.

    For the G2 pattern the listed walls are the ones observed to carry every
    failure in scans; scan output reports them but nothing asserts them.
    """

    def comb(ca, cb):
        return tuple(ca * x + cb * y for x, y in zip(alpha, beta))

    if kind == "orthogonal":
        return ()
    if kind == "A2":
        return ((comb(1, 1), -1),)
    if kind == "B2":
        return ((comb(1, 1), -1), (comb(2, 1), -1), (comb(2, 1), -2))
    if kind == "G2":
        return ((comb(2, 1), -1), (comb(3, 2), -1))
    raise ValueError(f"unknown pattern kind {kind!r}")


def braid_check(rs: RootSystem, lam: Coweight, alpha, beta) -> BraidReport:
    """Compare the two alternating composites of a rank two pattern at lam."""
    kind, alpha, beta, p, q = _classify_pair(rs, alpha, beta)
    lam = tuple(lam)
    n = _PATTERN_LENGTH[kind]
    lhs = _composite(rs, lam, alpha, beta, n)
    rhs = _composite(rs, lam, beta, alpha, n)
    lines = critical_lines(kind, alpha, beta)
    hit = tuple((vec, k) for vec, k in lines if rs.pair(lam, vec) == k)
    return BraidReport(
        root_pair=(alpha, beta),
        pairings=(p, q),
        kind=kind,
        lam=lam,
        lhs=lhs,
        rhs=rhs,
        equal=lhs == rhs,
        critical_lines_hit=hit,
    )


def braid_pairs(rs: RootSystem):
    """All unordered positive root pairs forming a usable rank two pattern."""
    vecs = [r.vec for r in rs.positive_roots]
    out = []
    for i in range(len(vecs)):
        for j in range(i + 1, len(vecs)):
            try:
                kind, alpha, beta, _, _ = _classify_pair(rs, vecs[i], vecs[j])
            except ValueError:
                continue
            out.append((kind, alpha, beta))
    return tuple(out)


class ScanRow(NamedTuple):
    lam: Coweight
    alpha: tuple[int, ...]
    beta: tuple[int, ...]
    kind: str
    bucket: str


def braid_scan(rs: RootSystem, radius: int) -> tuple[ScanRow, ...]:
    """Classify every coweight in a box against every usable pattern.

    Buckets are "equal", "unequal-on-critical-line" (the composites differ
    and the coweight lies on a listed wall), and "unequal-elsewhere".
    """
    pairs = braid_pairs(rs)
    rows = []
    for lam in product(range(-radius, radius + 1), repeat=rs.rank):
        for kind, alpha, beta in pairs:
            rep = braid_check(rs, lam, alpha, beta)
            if rep.equal:
                bucket = "equal"
            elif rep.critical_lines_hit:
                bucket = "unequal-on-critical-line"
            else:
                bucket = "unequal-elsewhere"
            rows.append(ScanRow(lam, alpha, beta, kind, bucket))
    return tuple(rows)


def covers(rs: RootSystem, lam: Coweight) -> tuple[tuple[Coweight, tuple[int, ...]], ...]:
    """All pairs (mu, root) where the operator drops the dimension by one."""
    lam = tuple(lam)
    d = dim_orbit(rs, lam)
    out = []
    for r in rs.positive_roots:
        mu = r_op(rs, lam, r.vec)
        if mu != lam and dim_orbit(rs, mu) == d - 1:
            out.append((mu, r.vec))
    return tuple(sorted(out))


def cover_characterization_check(rs: RootSystem, lam: Coweight, vec) -> bool:
    """Whether the length criterion for a cover agrees with dimension counting.

    For positive pairing the criterion asks the reflection to lengthen the
    chamber element by one.  For negative pairing with a regular coweight it
    compares the chamber length drop with a pairing against the half sum of
    positive roots.  Other inputs raise NotApplicableError.
    """
    lam = tuple(lam)
    p = rs.pair(lam, vec)
    mu = r_op(rs, lam, vec)
    actual = mu != lam and dim_orbit(rs, mu) == dim_orbit(rs, lam) - 1
    _, wl = rs.dominant_translate(lam)
    if p > 0:
        refl = rs.reflection_element(vec)
        predicted = rs.length(refl * wl) == rs.length(wl) + 1
    elif p < 0 and is_alpha_regular(rs, lam, vec):
        _, wm = rs.dominant_translate(mu)
        target = -rs.rho_pair(wl.act_inverse(rs.coroot_coweight(vec))) - 1
        predicted = rs.length(wl) - rs.length(wm) == target
    else:
        raise NotApplicableError(
            f"no cover criterion applies to {lam} and root {tuple(vec)}"
        )
    return predicted == actual
