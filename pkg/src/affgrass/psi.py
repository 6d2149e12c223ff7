"""The orbit poset attached to a coweight, by two independent routes.

The fast route grows the set from the base coweight by repeatedly applying
root strings; the generation map records the first round in which each
member appeared.  The slow route enumerates every candidate coweight in the
relevant region and keeps those below the base in the Bruhat order of coset
representatives, which is the order-theoretic definition.
"""

from __future__ import annotations

from collections import deque
from typing import NamedTuple, Optional

from .afweyl import AffineWeylElement, affine_weyl
from .components import component_of
from .rootsys import Coweight, RootSystem, WeylElement


class PsiSet(NamedTuple):
    base: Coweight
    members: frozenset[Coweight]
    generation: Optional[dict[Coweight, int]]


def step_set(rs: RootSystem, mu: Coweight, vec: tuple[int, ...]) -> set[Coweight]:
    """All coweights reachable from mu along the string of one positive root.

    For nonnegative pairing p the string runs from mu down to its reflection,
    p + 1 coweights in total.  For negative p it runs upward but stops one
    short of the reflection, |p| coweights.  Either way mu itself is included.
    """
    mu = tuple(mu)
    p = rs.pair(mu, vec)
    cw = rs.coroot_coweight(vec)
    if p >= 0:
        return {
            tuple(x - k * t for x, t in zip(mu, cw)) for k in range(p + 1)
        }
    return {
        tuple(x + k * t for x, t in zip(mu, cw)) for k in range(-p)
    }


def psi_infinity(rs: RootSystem, lam: Coweight) -> PsiSet:
    """Closure of the base coweight under all root strings, with generations."""
    lam = tuple(lam)
    generation = {lam: 0}
    queue = deque([lam])
    vecs = [r.vec for r in rs.positive_roots]
    while queue:
        mu = queue.popleft()
        g = generation[mu] + 1
        for vec in vecs:
            for nu in step_set(rs, mu, vec):
                if nu not in generation:
                    generation[nu] = g
                    queue.append(nu)
    return PsiSet(lam, frozenset(generation), generation)


def _min_rep(rs: RootSystem, lam: Coweight, kappa: int, omega: Coweight) -> AffineWeylElement:
    aw = affine_weyl(rs)
    t = aw.translation(tuple(-(a + b) for a, b in zip(lam, omega)))
    return aw.min_coset_rep(t, kappa)


def iwahori_leq(rs: RootSystem, mu: Coweight, lam: Coweight) -> bool:
    """Order comparison through minimal coset representatives.

    Coweights in different components are incomparable.  Within a component,
    compare the Bruhat order of the minimal representatives of the coset of
    the negated translations.
    """
    mu, lam = tuple(mu), tuple(lam)
    comp_lam = component_of(rs, lam)
    comp_mu = component_of(rs, mu)
    if comp_mu.kappa != comp_lam.kappa:
        return False
    kappa, omega = comp_lam
    aw = affine_weyl(rs)
    u = _min_rep(rs, mu, kappa, omega)
    v = _min_rep(rs, lam, kappa, omega)
    return aw.bruhat_leq(u, v)


def dominant_below(rs: RootSystem, lam_plus: Coweight) -> set[Coweight]:
    """Dominant coweights reachable from a dominant one by subtracting coroots.

    Every dominant coweight whose difference from lam_plus is a nonnegative
    integer combination of coroots is reached by a chain of single coroot
    steps through dominant coweights, so this breadth first walk is complete.
    """
    start = tuple(lam_plus)
    coroots = [rs.coroot_coweight(r.vec) for r in rs.positive_roots]
    seen = {start}
    todo = [start]
    while todo:
        x = todo.pop()
        for cw in coroots:
            y = tuple(a - b for a, b in zip(x, cw))
            if y not in seen and rs.is_dominant(y):
                seen.add(y)
                todo.append(y)
    return seen


def psi_by_oracle(rs: RootSystem, lam: Coweight) -> PsiSet:
    """The orbit poset ideal computed from the order alone, no root strings.

    Enumerates the full Weyl orbits of all dominant coweights below the
    dominant translate of lam and filters by the coset comparison.  The
    generation map is not defined on this route.
    """
    lam = tuple(lam)
    lam_plus, _ = rs.dominant_translate(lam)
    members = set()
    for nu in dominant_below(rs, lam_plus):
        for mu in rs.weyl_orbit(nu):
            if iwahori_leq(rs, mu, lam):
                members.add(mu)
    return PsiSet(lam, frozenset(members), None)


def shared_chamber(rs: RootSystem, mu: Coweight, lam: Coweight) -> Optional[WeylElement]:
    """A Weyl element whose chamber closure contains both coweights, if any.

    Greedy descent: while some simple coordinate is negative for one coweight
    and nonpositive for the other, reflect both.  The total inversion count
    drops each round, and on termination either both are dominant (the
    accumulated element answers) or some simple wall strictly separates the
    two, in which case no shared chamber exists.
    """
    x, y = tuple(mu), tuple(lam)
    w = rs.identity()
    while True:
        idx = None
        for i in range(rs.rank):
            if (x[i] < 0 and y[i] <= 0) or (x[i] <= 0 and y[i] < 0):
                idx = i
                break
        if idx is None:
            if rs.is_dominant(x) and rs.is_dominant(y):
                return w
            return None
        s = rs.simple_reflection(idx + 1)
        x, y = s.act(x), s.act(y)
        w = w * s


def same_chamber_leq(rs: RootSystem, mu: Coweight, lam: Coweight) -> Optional[bool]:
    """Closed form comparison for coweights sharing a chamber.

    Returns None when no chamber contains both.  Otherwise mu is below lam
    exactly when their difference is a nonnegative integer combination of
    the coroots positive for the shared chamber.
    """
    mu, lam = tuple(mu), tuple(lam)
    w = shared_chamber(rs, mu, lam)
    if w is None:
        return None
    diff = tuple(a - b for a, b in zip(lam, mu))
    return rs.positive_sum_in_chamber(diff, w)
