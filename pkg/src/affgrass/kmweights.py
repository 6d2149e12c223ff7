"""Weight arithmetic on the dual affine side, with exact coefficients.

An affine weight consists of a level (the coefficient of the basic weight),
a classical part stored in coweight coordinates, and a delta coefficient.
Translations act by the level sensitive formula, real affine roots
correspond to dual roots through a length scaled bijection, and level one
weights project back onto coweights.
"""

from __future__ import annotations

from fractions import Fraction
from typing import NamedTuple, Union

from .afweyl import AffineRoot, AffineWeylElement, affine_weyl
from .components import component_of, omega_coweight
from .psi import psi_infinity
from .rootsys import Coweight, NotApplicableError, RootSystem

Rational = Union[int, Fraction]


class AffineWeight(NamedTuple):
    level: Rational
    classical: tuple
    delta_coeff: Rational


class DualAffineRoot(NamedTuple):
    classical_coroot: Coweight
    k_delta: Rational


def _norm(x: Rational) -> Rational:
    if isinstance(x, Fraction) and x.denominator == 1:
        return int(x)
    return x


def basic_weight(rs: RootSystem) -> AffineWeight:
    """The level one weight with zero classical part and zero delta part."""
    return AffineWeight(1, rs.zero_coweight(), 0)


def delta_weight(rs: RootSystem) -> AffineWeight:
    """The imaginary generator: level zero, classical zero, delta one."""
    return AffineWeight(0, rs.zero_coweight(), 1)


def component_weight(rs: RootSystem, kappa: int) -> AffineWeight:
    """Basic weight shifted by the minuscule coweight of a component label."""
    return AffineWeight(1, omega_coweight(rs, kappa), 0)


def bilinear(rs: RootSystem, x, y) -> Fraction:
    """Invariant form on rational coweights; see RootSystem.bilinear."""
    return rs.bilinear(x, y)


def affine_act(rs: RootSystem, x: AffineWeylElement, h: AffineWeight) -> AffineWeight:
    """Action of a translated Weyl element on an affine weight.

    The finite part moves the classical component, the translation adds
    level times itself and corrects the delta coefficient by the bilinear
    pairing terms.  The level never changes.
    """
    moved = x.fin.act(h.classical)
    level = h.level
    classical = tuple(_norm(c + level * t) for c, t in zip(moved, x.trans))
    correction = rs.bilinear(moved, x.trans) + Fraction(rs.bilinear(x.trans, x.trans) * level, 2)
    return AffineWeight(level, classical, _norm(h.delta_coeff - correction))


def varpi(rs: RootSystem, lam: Coweight) -> AffineWeight:
    """The level one weight attached to a coweight.

    Defined as the translation by the negated shifted coweight applied to
    the component weight of the component of lam; its classical part is
    exactly the negation of lam.
    """
    lam = tuple(lam)
    comp = component_of(rs, lam)
    aw = affine_weyl(rs)
    x = aw.translation(tuple(-(a + b) for a, b in zip(lam, comp.omega)))
    return affine_act(rs, x, component_weight(rs, comp.kappa))


def project(rs: RootSystem, h: AffineWeight) -> Coweight:
    """Projection of a level one weight onto a coweight: negate the classical part."""
    if h.level != 1:
        raise ValueError(f"projection needs level 1, got level {h.level}")
    return tuple(_norm(-c) for c in h.classical)


def eta(rs: RootSystem, r: AffineRoot) -> DualAffineRoot:
    """The dual of a real affine root: coroot plus length scaled delta part."""
    if all(v == 0 for v in r.classical):
        raise ValueError("imaginary affine roots have no dual real root")
    cw = rs.coroot_coweight(tuple(r.classical))
    return DualAffineRoot(cw, r.k * rs.root_length_index(tuple(r.classical)))


def eta_inverse(rs: RootSystem, d: DualAffineRoot) -> AffineRoot:
    """The real affine root whose dual is the given dual root."""
    target = tuple(d.classical_coroot)
    for root in rs.positive_roots:
        for sign in (1, -1):
            vec = tuple(sign * b for b in root.vec)
            if rs.coroot_coweight(vec) == target:
                k = Fraction(d.k_delta, rs.root_length_index(vec))
                if k.denominator != 1:
                    raise ValueError(f"{d} has a delta part off the dual root lattice")
                return AffineRoot(vec, int(k))
    raise ValueError(f"{d} is not the dual of any real affine root")


def dual_act(rs: RootSystem, x: AffineWeylElement, d: DualAffineRoot) -> DualAffineRoot:
    """Action on dual real roots, transported through the correspondence.

    There is deliberately no second action formula here: the element acts on
    the underlying affine root and the result is dualized again.
    """
    aw = affine_weyl(rs)
    return eta(rs, aw.act_on_affine_root(x, eta_inverse(rs, d)))


def dual_simple_pairings(rs: RootSystem, h: AffineWeight) -> tuple:
    """Pairings of an affine weight with the dual simple coroots, index 0 first.

    The zeroth value is the level minus the pairing of the classical part
    with the highest root; the others are the classical coordinates.
    """
    theta = rs.highest_root.vec
    zeroth = h.level - sum(t * c for t, c in zip(theta, h.classical))
    return (_norm(zeroth),) + tuple(_norm(c) for c in h.classical)


def is_dual_dominant(rs: RootSystem, h: AffineWeight) -> bool:
    return all(v >= 0 for v in dual_simple_pairings(rs, h))


def shift_by_dual(h: AffineWeight, d: DualAffineRoot, k: int = 1) -> AffineWeight:
    """Add k copies of a dual root to an affine weight."""
    classical = tuple(_norm(c + k * t) for c, t in zip(h.classical, d.classical_coroot))
    return AffineWeight(h.level, classical, _norm(h.delta_coeff + k * d.k_delta))


def demazure_shift_check(rs: RootSystem, lam: Coweight, vec, k: int) -> bool:
    """Whether a dual root shift of the attached weight projects into the set.

    For positive pairing p and 0 < k <= p the shift uses the dual of the
    plain root; for pairing below -1 and 0 < k < -p it uses the dual of the
    negated root moved up one delta step.  The projected result must be a
    member of the closure of lam; the return value reports that membership.
    """
    lam = tuple(lam)
    if k < 1:
        raise NotApplicableError("the shift count must be a positive integer")
    p = rs.pair(lam, vec)
    if p > 0 and k <= p:
        d = eta(rs, AffineRoot(tuple(vec), 0))
        expected = tuple(a - k * b for a, b in zip(lam, rs.coroot_coweight(tuple(vec))))
    elif p < -1 and k < -p:
        d = eta(rs, AffineRoot(tuple(-v for v in vec), 1))
        expected = tuple(a + k * b for a, b in zip(lam, rs.coroot_coweight(tuple(vec))))
    else:
        raise NotApplicableError(
            f"no shift case applies to {lam}, root {tuple(vec)}, k = {k}"
        )
    shifted = shift_by_dual(varpi(rs, lam), d, k)
    target = project(rs, shifted)
    if target != expected:
        return False
    return target in psi_infinity(rs, lam).members


def format_affine_weight(h: AffineWeight) -> str:
    """Readable rendering: basic weight, classical vector, delta multiple."""
    terms = []
    if h.level == 1:
        terms.append("L0")
    elif h.level != 0:
        terms.append(f"{h.level}*L0")
    if any(c != 0 for c in h.classical):
        terms.append("[" + ", ".join(str(_norm(c)) for c in h.classical) + "]")
    out = " + ".join(terms)
    d = _norm(h.delta_coeff)
    if d != 0:
        if not out:
            out = f"{d}*delta"
        elif d > 0:
            out += f" + {d}*delta"
        else:
            out += f" - {-d}*delta"
    return out or "0"


def _json_num(x: Rational):
    x = _norm(x)
    return x if isinstance(x, int) else str(x)


def affine_weight_json(h: AffineWeight) -> dict:
    return {
        "level": _json_num(h.level),
        "classical": [_json_num(c) for c in h.classical],
        "delta": str(Fraction(h.delta_coeff)),
    }
