"""Component bookkeeping for the coweight lattice.

Coweights split into finitely many classes modulo the coroot lattice.  The
classes are labelled by 0 together with the vertices of the extended diagram
whose mark is 1; each nonzero label carries a minuscule fundamental coweight.
Translation by that coweight, twisted by a finite Weyl element, identifies
the class of the label with the coroot lattice itself.
"""

from __future__ import annotations

from typing import NamedTuple

from .afweyl import AffineWeylElement, affine_weyl
from .rootsys import ConsistencyError, Coweight, RootSystem, WeylElement


class ComponentIndex(NamedTuple):
    kappa: int
    omega: Coweight


def component_indices(rs: RootSystem) -> tuple[int, ...]:
    """All component labels: 0 plus the extended diagram vertices with mark 1."""
    return affine_weyl(rs).valid_components()


def _check_label(rs: RootSystem, kappa: int) -> None:
    if kappa not in component_indices(rs):
        raise ValueError(f"{kappa} is not a component label for {rs.cartan_type}")


def omega_coweight(rs: RootSystem, kappa: int) -> Coweight:
    """The minuscule coweight attached to a label; zero for the label 0."""
    _check_label(rs, kappa)
    if kappa == 0:
        return rs.zero_coweight()
    return rs.fundamental_coweight(kappa)


def component_of(rs: RootSystem, lam: Coweight) -> ComponentIndex:
    """The unique label whose attached coweight shifts lam into the coroot lattice."""
    lam = tuple(lam)
    found = []
    for kappa in component_indices(rs):
        omega = omega_coweight(rs, kappa)
        if rs.in_coroot_lattice(tuple(a + b for a, b in zip(lam, omega))):
            found.append(ComponentIndex(kappa, omega))
    if len(found) != 1:
        raise ConsistencyError(
            f"expected exactly one component containing {lam}, found {len(found)}"
        )
    return found[0]


def parabolic_generators(rs: RootSystem, kappa: int) -> tuple[int, ...]:
    """Affine generator indices of the stabilizer attached to a component label.

    The label itself is dropped from the affine index set.  For a nonzero
    label, conjugating the reflection in the highest root wall by the
    attached translation must give the affine simple reflection; that
    identity is verified here before the index set is returned.
    """
    _check_label(rs, kappa)
    if kappa != 0:
        aw = affine_weyl(rs)
        t = aw.translation(omega_coweight(rs, kappa))
        s_theta = aw.reflection(rs.highest_root.vec, 0)
        conj = aw.multiply(t, aw.multiply(s_theta, aw.inverse(t)))
        if conj != aw.simple_reflection(0):
            raise ConsistencyError(
                "conjugation by the translation of label "
                f"{kappa} does not carry the highest root wall to the affine wall"
            )
    return tuple(i for i in range(rs.rank + 1) if i != kappa)


def translating_weyl(rs: RootSystem, kappa: int) -> WeylElement:
    """Finite part of the component translation.

    Product of the longest element of the parabolic fixing the attached
    coweight with the longest element of the full group.  For the label 0
    this is the identity.
    """
    _check_label(rs, kappa)
    w0 = rs.longest_element()
    if kappa == 0:
        return rs.identity()
    par = rs.longest_element([i for i in range(1, rs.rank + 1) if i != kappa])
    return par * w0


def gamma(rs: RootSystem, kappa: int) -> AffineWeylElement:
    """Length zero element carrying the lattice component to the labelled one."""
    _check_label(rs, kappa)
    aw = affine_weyl(rs)
    t = aw.translation(omega_coweight(rs, kappa))
    fin = aw.from_parts(rs.zero_coweight(), translating_weyl(rs, kappa))
    return aw.multiply(t, fin)


def translate_psi(rs: RootSystem, lam: Coweight, kappa: int) -> Coweight:
    """Carry a coroot lattice coweight into the component of the given label.

    The image is w(lam) - omega where w is the finite part of the component
    translation and omega its attached coweight.  Raises ValueError when lam
    is not in the coroot lattice.
    """
    _check_label(rs, kappa)
    lam = tuple(lam)
    if not rs.in_coroot_lattice(lam):
        raise ValueError(f"{lam} is not in the coroot lattice")
    w = translating_weyl(rs, kappa)
    omega = omega_coweight(rs, kappa)
    return tuple(a - b for a, b in zip(w.act(lam), omega))
