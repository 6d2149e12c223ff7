"""Cross validation suite tying the independent routes against each other.

Every check here has two sides that were implemented separately: a fixpoint
scan against a coset oracle, a table against a composite of operators, a
finite length formula against an affine one.  A check passes only when the
sides agree point for point over a box, so a bug has to hit both routes the
same way to slip through.  The checks return structured results instead of
raising, which lets the command line front end map failures to exit codes
and the test suite print one line per check.
"""

from __future__ import annotations

import random
import time
from itertools import product
from typing import Callable, NamedTuple, Optional

from .afweyl import AffineRoot, affine_weyl
from .components import (
    component_indices,
    omega_coweight,
    parabolic_generators,
    translate_psi,
)
from .kmweights import (
    AffineWeight,
    affine_act,
    component_weight,
    eta,
    varpi,
)
from .polytope import chamber_maxima, integral_gap_scan, moment_polytope
from .psi import iwahori_leq, psi_by_oracle, psi_infinity, same_chamber_leq
from .rootsys import Coweight, NotApplicableError, RootSystem, root_system
from .rops import (
    braid_check,
    braid_scan,
    cover_characterization_check,
    covers,
    dim_orbit,
    r_closure,
    r_op,
)


class CheckResult(NamedTuple):
    name: str
    passed: bool
    elapsed: float
    detail: str


def _box(rank: int, radius: int):
    return product(range(-radius, radius + 1), repeat=rank)


def _result(name, t0, failures, ok_detail, limit=3):
    if not failures:
        return CheckResult(name, True, time.time() - t0, ok_detail)
    shown = "; ".join(str(f) for f in failures[:limit])
    more = "" if len(failures) <= limit else f" (+{len(failures) - limit} more)"
    return CheckResult(
        name, False, time.time() - t0,
        f"{len(failures)} counterexamples: {shown}{more}",
    )


# -- the three routes to the same set ---------------------------------------

def check_routes_agree(radius: int = 4) -> CheckResult:
    """Fixpoint scan, coset oracle and operator closure give the same set."""
    t0 = time.time()
    failures = []
    count = 0
    for name in ("A1", "A2", "B2"):
        rs = root_system(name)
        for lam in _box(rs.rank, radius):
            count += 1
            a = psi_infinity(rs, lam).members
            b = psi_by_oracle(rs, lam).members
            c = r_closure(rs, lam)
            if not (a == b == c):
                failures.append((name, lam, len(a), len(b), len(c)))
    return _result(
        "routes-agree", t0, failures,
        f"3 routes agree on {count} coweights (A1, A2, B2, radius {radius})",
    )


# -- worked boundary examples ------------------------------------------------

def _cover_targets(rs, lam):
    return frozenset(mu for mu, _ in covers(rs, lam))


def check_boundary_examples() -> CheckResult:
    """Four frozen boundary sets and dimensions in the rank two chain type."""
    t0 = time.time()
    rs = root_system("A2")
    failures = []
    expected = [
        ((1, 1), {(2, -1), (-1, 2)}),
        ((-1, -1), {(0, 0)}),
        ((-2, -2), {(-3, 0), (0, -3), (1, 1)}),
        ((-6, 3), {(-4, 5), (-3, -3)}),
    ]
    for lam, targets in expected:
        got = _cover_targets(rs, lam)
        if got != frozenset(targets):
            failures.append((lam, sorted(got)))
    dims = [((-6, 3), 10), ((-4, 5), 9), ((-3, -3), 9), ((4, -2), 7)]
    for lam, want in dims:
        got = dim_orbit(rs, lam)
        if got != want:
            failures.append((lam, "dim", got, want))
    if r_op(rs, (-6, 3), (1, 0)) != (4, -2):
        failures.append(("operator image", r_op(rs, (-6, 3), (1, 0))))
    return _result(
        "boundary-examples", t0, failures,
        "4 boundary sets and 4 dimensions reproduced exactly",
    )


# -- exchange tables for composites of operators ------------------------------

class ExchangeRow(NamedTuple):
    label: str
    cond_text: str
    cond: Callable[[int, int], bool]
    lhs: tuple[int, int]
    rhs: Optional[tuple[int, int]]


# Conditions read the two pairings a and b of the coweight with the pair of
# roots, with the shorthands s = a + b and t = 2a + b.  The value columns are
# coefficient pairs (ca, cb): the composite equals w(lam) - ca*ac - cb*bc
# where ac, bc are the coroots and w is the longest element of the rank two
# pattern.  A blank second column means both composites take the first value.
A2_EXCHANGE_ROWS = (
    ExchangeRow("1", "a <= -1 and b <= -1",
                lambda a, b: a <= -1 and b <= -1, (2, 2), None),
    ExchangeRow("2", "a == -1 and b == 0",
                lambda a, b: a == -1 and b == 0, (1, 1), None),
    ExchangeRow("3", "a == 0 and b == -1",
                lambda a, b: a == 0 and b == -1, (1, 1), None),
    ExchangeRow("4", "a >= 0 and s < -1",
                lambda a, b: a >= 0 and a + b < -1, (2, 1), None),
    ExchangeRow("5", "a >= 1 and s == -1",
                lambda a, b: a >= 1 and a + b == -1, (2, 1), (1, 0)),
    ExchangeRow("6", "s >= 0 and b <= -1",
                lambda a, b: a + b >= 0 and b <= -1, (1, 0), None),
    ExchangeRow("7", "a >= 0 and b >= 0",
                lambda a, b: a >= 0 and b >= 0, (0, 0), None),
    ExchangeRow("8", "b >= 0 and s < -1",
                lambda a, b: b >= 0 and a + b < -1, (1, 2), None),
    ExchangeRow("9", "s == -1 and b >= 1",
                lambda a, b: a + b == -1 and b >= 1, (0, 1), (1, 2)),
    ExchangeRow("10", "s >= 0 and a <= -1",
                lambda a, b: a + b >= 0 and a <= -1, (0, 1), None),
)

# The doubly laced pattern, with the first root short.  Row 6 excludes the
# single point (a, b) = (-2, 1) where row 7 prescribes the values instead.
# No row covers (a, b) = (2, -3).  Row 8's value is the one the operator
# definition forces on its whole region; both composites coincide there, as
# a pairing chase through the four steps shows.
B2_EXCHANGE_ROWS = (
    ExchangeRow("1", "a <= -1 and b < 0",
                lambda a, b: a <= -1 and b < 0, (3, 4), None),
    ExchangeRow("2", "a == 0 and b == -2",
                lambda a, b: a == 0 and b == -2, (2, 3), None),
    ExchangeRow("3", "b == 0 and a == -1",
                lambda a, b: b == 0 and a == -1, (2, 2), None),
    ExchangeRow("4", "b == -1 and a == 0",
                lambda a, b: b == -1 and a == 0, (1, 2), None),
    ExchangeRow("5", "s < -1 and b >= 0",
                lambda a, b: a + b < -1 and b >= 0, (3, 3), None),
    ExchangeRow("6", "s == -1 and b > 0 and (a, b) != (-2, 1)",
                lambda a, b: a + b == -1 and b > 0 and (a, b) != (-2, 1),
                (3, 3), (2, 1)),
    ExchangeRow("7", "b == 1 and a == -2",
                lambda a, b: b == 1 and a == -2, (3, 3), (2, 2)),
    ExchangeRow("8", "s >= 0 and t < -2",
                lambda a, b: a + b >= 0 and 2 * a + b < -2, (2, 1), None),
    ExchangeRow("9", "a <= -2 and t in {-2, -1}",
                lambda a, b: a <= -2 and 2 * a + b in (-2, -1), (2, 1), (1, 0)),
    ExchangeRow("10", "b == 1 and a == -1",
                lambda a, b: b == 1 and a == -1, (1, 1), (1, 1)),
    ExchangeRow("11", "t >= 0 and a <= -1",
                lambda a, b: 2 * a + b >= 0 and a <= -1, (1, 0), None),
    ExchangeRow("12", "a >= 0 and b >= 0",
                lambda a, b: a >= 0 and b >= 0, (0, 0), None),
    ExchangeRow("13", "a >= 0 and t < -2",
                lambda a, b: a >= 0 and 2 * a + b < -2, (2, 4), None),
    ExchangeRow("14", "a > 0 and t in {-2, -1}",
                lambda a, b: a > 0 and 2 * a + b in (-2, -1), (1, 3), (2, 4)),
    ExchangeRow("15", "t >= 0 and s < -1",
                lambda a, b: 2 * a + b >= 0 and a + b < -1, (1, 3), None),
    ExchangeRow("16", "s == -1 and t >= 2",
                lambda a, b: a + b == -1 and 2 * a + b >= 2, (0, 1), (1, 3)),
    ExchangeRow("17", "s == -1 and t == 0",
                lambda a, b: a + b == -1 and 2 * a + b == 0, (0, 1), (1, 2)),
    ExchangeRow("18", "s >= 0 and b < 0",
                lambda a, b: a + b >= 0 and b < 0, (0, 1), None),
)


class ExchangeTable(NamedTuple):
    type_name: str
    alpha: tuple[int, int]
    beta: tuple[int, int]
    rows: tuple[ExchangeRow, ...]
    uncovered: frozenset  # pairing pairs (a, b) no row prescribes


EXCHANGE_TABLES = (
    ExchangeTable("A2", (1, 0), (0, 1), A2_EXCHANGE_ROWS, frozenset()),
    ExchangeTable("B2", (0, 1), (1, 0), B2_EXCHANGE_ROWS,
                  frozenset({(2, -3)})),
)


def _pattern_longest(rs: RootSystem, table: ExchangeTable, lam: Coweight):
    if table.type_name == "A2":
        comb = tuple(x + y for x, y in zip(table.alpha, table.beta))
        return rs.reflect(lam, comb)
    return tuple(-x for x in lam)


def check_exchange_tables(radius: int = 8) -> CheckResult:
    """Both composites match the tabulated values on every matching row.

    Also scans both types for inequalities away from the listed walls, which
    must not exist, and confirms the tables cover the whole box except the
    one pairing pair known to carry no prescription.
    """
    t0 = time.time()
    failures = []
    rows_checked = 0
    for table in EXCHANGE_TABLES:
        rs = root_system(table.type_name)
        ac = rs.coroot_coweight(table.alpha)
        bc = rs.coroot_coweight(table.beta)
        for lam in _box(2, radius):
            a = rs.pair(lam, table.alpha)
            b = rs.pair(lam, table.beta)
            w_lam = _pattern_longest(rs, table, lam)
            matched = False
            rep = None
            for row in table.rows:
                if not row.cond(a, b):
                    continue
                matched = True
                rows_checked += 1
                if rep is None:
                    rep = braid_check(rs, lam, table.alpha, table.beta)

                def value(coeffs):
                    ca, cb = coeffs
                    return tuple(
                        w - ca * x - cb * y for w, x, y in zip(w_lam, ac, bc)
                    )

                want_lhs = value(row.lhs)
                want_rhs = value(row.rhs) if row.rhs is not None else want_lhs
                if (rep.lhs, rep.rhs) != (want_lhs, want_rhs):
                    failures.append(
                        (table.type_name, "row " + row.label, lam,
                         (rep.lhs, rep.rhs), (want_lhs, want_rhs))
                    )
            if not matched and (a, b) not in table.uncovered:
                failures.append((table.type_name, "uncovered", lam, (a, b)))
        for scan_row in braid_scan(rs, radius):
            if scan_row.bucket == "unequal-elsewhere":
                failures.append(
                    (table.type_name, "off-wall inequality", scan_row.lam,
                     scan_row.alpha, scan_row.beta)
                )
    return _result(
        "exchange-tables", t0, failures,
        f"28 table rows verified at {rows_checked} matches, "
        f"no off-wall inequality (radius {radius})",
    )


# -- the shared chamber shortcut ----------------------------------------------

def check_chamber_shortcut(radius: int = 4) -> CheckResult:
    """Where the shared chamber comparison is defined it matches the oracle."""
    t0 = time.time()
    failures = []
    defined = 0
    for name in ("A2", "B2"):
        rs = root_system(name)
        pts = list(_box(rs.rank, radius))
        for mu in pts:
            for lam in pts:
                quick = same_chamber_leq(rs, mu, lam)
                if quick is None:
                    continue
                defined += 1
                if quick != iwahori_leq(rs, mu, lam):
                    failures.append((name, mu, lam, quick))
    return _result(
        "chamber-shortcut", t0, failures,
        f"agrees with the coset oracle on {defined} defined pairs "
        f"(A2, B2, radius {radius})",
    )


# -- dimension formulas --------------------------------------------------------

DIMENSION_TYPES = ("A1", "A2", "A3", "B2", "B3", "C2", "C3", "D4", "F4", "G2")


def check_dimension_formulas(radius: int = 4) -> CheckResult:
    """Finite and affine length formulas agree for every box coweight.

    Covers one representative of each family: the classical families at the
    requested radius and the largest exceptional chain at radius one, where
    the 729 points already exercise all 36 positive roots.
    """
    t0 = time.time()
    failures = []
    count = 0
    jobs = [(name, radius) for name in DIMENSION_TYPES] + [("E6", 1)]
    for name, rad in jobs:
        rs = root_system(name)
        for lam in _box(rs.rank, rad):
            count += 1
            try:
                dim_orbit(rs, lam)  # raises ConsistencyError on disagreement
            except Exception as exc:  # pragma: no cover - failure path
                failures.append((name, lam, repr(exc)))
    return _result(
        "dimension-formulas", t0, failures,
        f"both formulas agree on {count} coweights across "
        f"{len(jobs)} types",
    )


# -- cover characterizations ----------------------------------------------------

COVER_TYPES = ("A1", "A2", "B2", "C2", "G2")


def check_cover_rules(radius: int = 4) -> CheckResult:
    """Length criteria match the dimension drop test; covers satisfy the gap law."""
    t0 = time.time()
    failures = []
    applicable = 0
    cover_count = 0
    for name in COVER_TYPES:
        rs = root_system(name)
        for lam in _box(rs.rank, radius):
            for r in rs.positive_roots:
                try:
                    ok = cover_characterization_check(rs, lam, r.vec)
                except NotApplicableError:
                    continue
                applicable += 1
                if not ok:
                    failures.append((name, lam, r.vec, "criterion mismatch"))
            lam_plus, w_lam = rs.dominant_translate(lam)
            for mu, vec in covers(rs, lam):
                cover_count += 1
                mu_plus, w_mu = rs.dominant_translate(mu)
                drop = rs.length(w_lam) - rs.length(w_mu)
                want = rs.rho_pair(lam_plus) - rs.rho_pair(mu_plus) - 1
                if drop != want:
                    failures.append((name, lam, mu, vec, "length gap law"))
    return _result(
        "cover-rules", t0, failures,
        f"{applicable} applicable pairs and {cover_count} covers verified "
        f"({', '.join(COVER_TYPES)}, radius {radius})",
    )


# -- translation between components ---------------------------------------------

TRANSPORT_CASES = (("A2", 1), ("A2", 2), ("B2", 1))


def check_component_transport(radius: int = 3) -> CheckResult:
    """Translation to another component is an order preserving bijection."""
    t0 = time.time()
    failures = []
    bases = 0
    for name, kappa in TRANSPORT_CASES:
        rs = root_system(name)
        for lam in _box(rs.rank, radius):
            if not rs.in_coroot_lattice(lam):
                continue
            bases += 1
            members = sorted(psi_infinity(rs, lam).members)
            image_base = translate_psi(rs, lam, kappa)
            image_members = psi_infinity(rs, image_base).members
            mapped = [translate_psi(rs, mu, kappa) for mu in members]
            if frozenset(mapped) != image_members or len(set(mapped)) != len(members):
                failures.append((name, kappa, lam, "not a bijection"))
                continue
            for mu, mu_t in zip(members, mapped):
                for nu, nu_t in zip(members, mapped):
                    if iwahori_leq(rs, mu, nu) != iwahori_leq(rs, mu_t, nu_t):
                        failures.append((name, kappa, lam, mu, nu, "order"))
    return _result(
        "component-transport", t0, failures,
        f"bijective and order preserving for {bases} lattice coweights "
        "(A2 both nonzero labels, B2 label 1)",
    )


# -- level one weight formulas ----------------------------------------------------

def _sample_elements(rs: RootSystem, count: int, seed: int):
    rng = random.Random(seed)
    aw = affine_weyl(rs)
    out = []
    for _ in range(count):
        word = [rng.randrange(rs.rank + 1) for _ in range(rng.randrange(8))]
        trans = tuple(rng.randrange(-3, 4) for _ in range(rs.rank))
        out.append(aw.multiply(aw.translation(trans), aw.from_word(word)))
    return out


def _sample_real_roots(rs: RootSystem, count: int, seed: int):
    rng = random.Random(seed)
    vecs = [r.vec for r in rs.positive_roots]
    out = []
    for _ in range(count):
        vec = list(rng.choice(vecs))
        if rng.randrange(2):
            vec = [-c for c in vec]
        out.append(AffineRoot(tuple(vec), rng.randrange(-2, 3)))
    return out


def check_dual_weights(samples: int = 1000) -> CheckResult:
    """Frozen level one values, stabilizers, and the root map equivariance."""
    t0 = time.time()
    failures = []
    a1 = root_system("A1")
    if varpi(a1, (-4,)) != AffineWeight(1, (4,), -4):
        failures.append(("A1 frozen value", varpi(a1, (-4,))))
    for name in ("A2", "B2", "C3", "D4"):
        rs = root_system(name)
        for kappa in component_indices(rs):
            if kappa == 0:
                continue
            omega = omega_coweight(rs, kappa)
            lam = tuple(-x for x in omega)
            if varpi(rs, lam) != component_weight(rs, kappa):
                failures.append((name, kappa, "base point value"))
    for name in ("A2", "B2"):
        rs = root_system(name)
        aw = affine_weyl(rs)
        for kappa in component_indices(rs):
            target = component_weight(rs, kappa)
            fixed = tuple(
                i for i in range(rs.rank + 1)
                if affine_act(rs, aw.simple_reflection(i), target) == target
            )
            if fixed != parabolic_generators(rs, kappa):
                failures.append((name, kappa, "stabilizer", fixed))
    checked = 0
    for name, seed in (("A2", 101), ("B2", 102)):
        rs = root_system(name)
        aw = affine_weyl(rs)
        elements = _sample_elements(rs, samples, seed)
        roots = _sample_real_roots(rs, samples, seed + 1)
        for x, r in zip(elements, roots):
            checked += 1
            d = eta(rs, r)
            embedded = AffineWeight(0, d.classical_coroot, d.k_delta)
            moved = affine_act(rs, x, embedded)
            image = eta(rs, aw.act_on_affine_root(x, r))
            if moved != AffineWeight(0, image.classical_coroot, image.k_delta):
                failures.append((name, "equivariance", r, x))
                break
    return _result(
        "dual-weights", t0, failures,
        f"frozen values, stabilizers, and {checked} equivariance samples hold",
    )


# -- moment polytopes ---------------------------------------------------------------

def check_orbit_polytopes(radius: int = 4) -> CheckResult:
    """Chamber maxima, orbit vertices, and empty integral gap scans."""
    t0 = time.time()
    failures = []
    a2 = root_system("A2")
    maxima = chamber_maxima(a2, (-3, -3), a2.identity())
    if maxima != frozenset({(2, 2)}):
        failures.append(("dominant chamber maxima", sorted(maxima)))
    if integral_gap_scan(a2, (-3, -3)):
        failures.append(("gap scan", (-3, -3)))
    dominant = 0
    for name in ("A2", "B2"):
        rs = root_system(name)
        for lam in product(range(0, radius + 1), repeat=rs.rank):
            dominant += 1
            poly = moment_polytope(rs, lam, want_facets=True)
            if frozenset(poly.vertices) != rs.weyl_orbit(lam):
                failures.append((name, lam, "vertices"))
            if integral_gap_scan(rs, lam, poly):
                failures.append((name, lam, "gaps"))
    return _result(
        "orbit-polytopes", t0, failures,
        f"maxima, vertex sets and gap scans verified for {dominant} "
        f"dominant coweights (A2, B2, radius {radius})",
    )


ALL_CHECKS: tuple[tuple[str, Callable[[int], CheckResult]], ...] = (
    ("routes-agree", lambda radius: check_routes_agree(radius)),
    ("boundary-examples", lambda radius: check_boundary_examples()),
    ("exchange-tables", lambda radius: check_exchange_tables(max(radius, 8))),
    ("chamber-shortcut", lambda radius: check_chamber_shortcut(radius)),
    ("dimension-formulas", lambda radius: check_dimension_formulas(radius)),
    ("cover-rules", lambda radius: check_cover_rules(radius)),
    ("component-transport", lambda radius: check_component_transport(min(radius, 3))),
    ("dual-weights", lambda radius: check_dual_weights()),
    ("orbit-polytopes", lambda radius: check_orbit_polytopes(radius)),
)


def run_all(radius: int = 4):
    """Run every check at the given box radius, in a stable order."""
    return tuple(fn(radius) for _, fn in ALL_CHECKS)
