"""The affine Weyl group: translations by coroots extended by the finite Weyl group.

Elements are pairs tau_lambda * w stored as (trans, fin).  The translation
part usually lies in the coroot lattice; elements whose translation part is
a general coweight are allowed too (they generate the extended group), with
length computed by the same formula and Bruhat comparisons restricted to a
single coroot-lattice coset.
"""

from __future__ import annotations

from functools import lru_cache
from typing import NamedTuple

from .rootsys import Coweight, RootSystem, WeylElement


class AffineRoot(NamedTuple):
    """A real affine root: a finite root plus k copies of the imaginary root."""

    classical: tuple[int, ...]
    k: int

    def is_positive(self) -> bool:
        return self.k > 0 or (self.k == 0 and sum(self.classical) > 0)

    def negate(self) -> "AffineRoot":
        return AffineRoot(tuple(-b for b in self.classical), -self.k)


class AffineWeylElement(NamedTuple):
    trans: Coweight
    fin: WeylElement


class AffineWeyl:
    """Operations on (extended) affine Weyl group elements for one root system.

    Lengths, Bruhat comparisons and minimal coset representatives are
    memoized per instance; results never depend on cache state.
    """

    def __init__(self, rs: RootSystem):
        self.rs = rs
        self._length_cache: dict[AffineWeylElement, int] = {}
        self._bruhat_cache: dict[tuple[AffineWeylElement, AffineWeylElement], bool] = {}
        self._minrep_cache: dict[tuple[AffineWeylElement, int], AffineWeylElement] = {}
        self._simple = [self._make_simple(i) for i in range(rs.rank + 1)]

    def _make_simple(self, i: int) -> AffineWeylElement:
        rs = self.rs
        if i == 0:
            theta = rs.highest_root.vec
            return AffineWeylElement(rs.coroot_coweight(theta), rs.reflection_element(theta))
        return AffineWeylElement(rs.zero_coweight(), rs.simple_reflection(i))

    # -- group structure ---------------------------------------------------

    def identity(self) -> AffineWeylElement:
        return AffineWeylElement(self.rs.zero_coweight(), self.rs.identity())

    def simple_reflection(self, i: int) -> AffineWeylElement:
        """Affine simple reflection; index 0 is the affine node."""
        if not 0 <= i <= self.rs.rank:
            raise ValueError(f"affine simple index {i} out of range")
        return self._simple[i]

    def translation(self, lam: Coweight) -> AffineWeylElement:
        return AffineWeylElement(tuple(lam), self.rs.identity())

    def from_parts(self, lam: Coweight, w: WeylElement) -> AffineWeylElement:
        return AffineWeylElement(tuple(lam), w)

    def is_extended(self, x: AffineWeylElement) -> bool:
        return not self.rs.in_coroot_lattice(x.trans)

    def multiply(self, a: AffineWeylElement, b: AffineWeylElement) -> AffineWeylElement:
        moved = a.fin.act(b.trans)
        trans = tuple(u + v for u, v in zip(a.trans, moved))
        return AffineWeylElement(trans, a.fin * b.fin)

    def inverse(self, x: AffineWeylElement) -> AffineWeylElement:
        back = x.fin.act_inverse(x.trans)
        return AffineWeylElement(tuple(-v for v in back), x.fin.inverse())

    def from_word(self, word) -> AffineWeylElement:
        x = self.identity()
        for i in word:
            x = self.multiply(x, self.simple_reflection(i))
        return x

    # -- length and descents -------------------------------------------------

    def length(self, x: AffineWeylElement) -> int:
        cached = self._length_cache.get(x)
        if cached is not None:
            return cached
        rs = self.rs
        total = 0
        for r in rs.positive_roots:
            p = rs.pair(x.trans, r.vec)
            pre_image = x.fin.act_root_inverse(r.vec)
            if sum(pre_image) > 0:
                total += abs(p)
            else:
                total += abs(p - 1)
        self._length_cache[x] = total
        return total

    def descent_set(self, x: AffineWeylElement) -> set[int]:
        """Affine simple indices i with length(s_i * x) = length(x) - 1."""
        lx = self.length(x)
        out = set()
        for i in range(self.rs.rank + 1):
            if self.length(self.multiply(self._simple[i], x)) == lx - 1:
                out.add(i)
        return out

    def reduced_word(self, x: AffineWeylElement) -> tuple[int, ...]:
        """Greedy reduced word (smallest descent first); affine indices."""
        word = []
        cur = x
        while self.length(cur) > 0:
            lcur = self.length(cur)
            for i in range(self.rs.rank + 1):
                nxt = self.multiply(self._simple[i], cur)
                if self.length(nxt) < lcur:
                    word.append(i)
                    cur = nxt
                    break
            else:
                raise ValueError("positive length element with no descent")
        if cur != self.identity():
            raise ValueError("element is not in the affine Weyl group proper")
        return tuple(word)

    # -- affine roots ---------------------------------------------------------

    def act_on_affine_root(self, x: AffineWeylElement, r: AffineRoot) -> AffineRoot:
        img = x.fin.act_root(r.classical)
        return AffineRoot(img, r.k - self.rs.pair(x.trans, img))

    def reflection(self, vec: tuple[int, ...], k: int) -> AffineWeylElement:
        """The reflection tau_{-k coroot} s_alpha attached to alpha + k delta."""
        if tuple(vec) not in {r.vec for r in self.rs.positive_roots}:
            raise ValueError(f"{vec} is not a positive root")
        cw = self.rs.coroot_coweight(vec)
        return AffineWeylElement(tuple(-k * t for t in cw), self.rs.reflection_element(vec))

    # -- Bruhat order ----------------------------------------------------------

    def bruhat_leq(self, u: AffineWeylElement, v: AffineWeylElement) -> bool:
        """Bruhat order via the lifting property, memoized.

        Defined only when u and v lie in a common coroot-lattice coset of the
        extended group; anything else raises.
        """
        diff = tuple(a - b for a, b in zip(u.trans, v.trans))
        if not self.rs.in_coroot_lattice(diff):
            raise ValueError("Bruhat comparison across different lattice cosets")
        return self._bruhat(u, v)

    def _bruhat(self, u: AffineWeylElement, v: AffineWeylElement) -> bool:
        if u == v:
            return True
        key = (u, v)
        cached = self._bruhat_cache.get(key)
        if cached is not None:
            return cached
        lu = self.length(u)
        lv = self.length(v)
        if lu >= lv:
            res = False
        else:
            i = next(
                i for i in range(self.rs.rank + 1)
                if self.length(self.multiply(self._simple[i], v)) < lv
            )
            sv = self.multiply(self._simple[i], v)
            su = self.multiply(self._simple[i], u)
            if self.length(su) < lu:
                res = self._bruhat(su, sv)
            else:
                res = self._bruhat(u, sv)
        self._bruhat_cache[key] = res
        return res

    # -- minimal coset representatives -----------------------------------------

    def valid_components(self) -> tuple[int, ...]:
        labels = self.rs.kac_labels
        return tuple(i for i in range(self.rs.rank + 1) if i == 0 or labels[i] == 1)

    def min_coset_rep(self, x: AffineWeylElement, kappa: int) -> AffineWeylElement:
        """Minimal length element of x * W_kappa, generators away from kappa."""
        if kappa not in self.valid_components():
            raise ValueError(f"{kappa} does not index a component")
        key = (x, kappa)
        cached = self._minrep_cache.get(key)
        if cached is not None:
            return cached
        gens = [i for i in range(self.rs.rank + 1) if i != kappa]
        cur = x
        improved = True
        while improved:
            improved = False
            lcur = self.length(cur)
            for i in gens:
                nxt = self.multiply(cur, self._simple[i])
                if self.length(nxt) < lcur:
                    cur = nxt
                    improved = True
                    break
        self._minrep_cache[key] = cur
        return cur

    # -- serialization -----------------------------------------------------------

    def to_json(self, x: AffineWeylElement) -> dict:
        return {"trans": list(x.trans), "word": list(self.rs.reduced_word(x.fin))}


@lru_cache(maxsize=None)
def affine_weyl(rs: RootSystem) -> AffineWeyl:
    """Shared AffineWeyl context per root system."""
    return AffineWeyl(rs)
