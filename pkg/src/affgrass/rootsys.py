"""Finite root system combinatorics in exact integer arithmetic.

Conventions used throughout the package:

* Simple roots are numbered 1..rank in Bourbaki order.
* The Cartan matrix entry ``cartan[i][j]`` is the pairing of the i-th simple
  coroot with the j-th simple root (0-indexed internally).
* A coweight is a tuple of integers whose i-th entry is the pairing of the
  coweight with the (i+1)-th simple root.  Fundamental coweights are the
  standard basis vectors in these coordinates.
* Roots are stored together with their coroots: ``vec`` gives the
  coefficients on the simple roots and ``covec`` the coefficients of the
  coroot on the simple coroots.
"""

from __future__ import annotations

from collections import deque
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, NamedTuple

Coweight = tuple[int, ...]


class ConsistencyError(RuntimeError):
    """Two routes that must agree computed different answers."""


class NotApplicableError(Exception):
    """The hypotheses of a conditional check do not hold for this input."""


class UnsupportedRankError(ValueError):
    """The requested operation is only implemented for small rank."""


class Root(NamedTuple):
    vec: tuple[int, ...]
    covec: tuple[int, ...]

    @property
    def height(self) -> int:
        return sum(self.vec)


def _matmul(a, b):
    n = len(a)
    return tuple(
        tuple(sum(a[k][t] * b[t][j] for t in range(n)) for j in range(n))
        for k in range(n)
    )


def _identity_mat(n):
    return tuple(tuple(1 if k == j else 0 for j in range(n)) for k in range(n))


class WeylElement:
    """Finite Weyl group element acting on coweight coordinates.

    Row vector convention: ``w.act(x)[j] = sum_k x[k] * mat[k][j]``.  Column
    j of the inverse matrix holds the root coordinates of w(alpha_j), which
    is what ``act_root`` uses.
    """

    __slots__ = ("mat", "inv_mat")

    def __init__(self, mat, inv_mat):
        self.mat = mat
        self.inv_mat = inv_mat

    def act(self, x: Coweight) -> Coweight:
        n = len(self.mat)
        return tuple(sum(x[k] * self.mat[k][j] for k in range(n)) for j in range(n))

    def act_inverse(self, x: Coweight) -> Coweight:
        n = len(self.inv_mat)
        return tuple(sum(x[k] * self.inv_mat[k][j] for k in range(n)) for j in range(n))

    def act_root(self, vec: tuple[int, ...]) -> tuple[int, ...]:
        n = len(self.inv_mat)
        return tuple(sum(vec[j] * self.inv_mat[k][j] for j in range(n)) for k in range(n))

    def act_root_inverse(self, vec: tuple[int, ...]) -> tuple[int, ...]:
        n = len(self.mat)
        return tuple(sum(vec[j] * self.mat[k][j] for j in range(n)) for k in range(n))

    def __mul__(self, other: "WeylElement") -> "WeylElement":
        # (self * other)(x) = self(other(x))
        return WeylElement(_matmul(other.mat, self.mat), _matmul(self.inv_mat, other.inv_mat))

    def inverse(self) -> "WeylElement":
        return WeylElement(self.inv_mat, self.mat)

    def is_identity(self) -> bool:
        return self.mat == _identity_mat(len(self.mat))

    def __eq__(self, other):
        return isinstance(other, WeylElement) and self.mat == other.mat

    def __hash__(self):
        return hash(self.mat)

    def __repr__(self):
        return f"WeylElement({self.mat!r})"


def _parse_cartan_type(name: str) -> tuple[str, int]:
    name = name.strip()
    if len(name) < 2 or name[0].upper() not in "ABCDEFG":
        raise ValueError(f"unrecognized Cartan type {name!r}")
    letter = name[0].upper()
    try:
        rank = int(name[1:])
    except ValueError:
        raise ValueError(f"unrecognized Cartan type {name!r}") from None
    bounds = {"A": (1, None), "B": (2, None), "C": (2, None), "D": (4, None),
              "E": (6, 8), "F": (4, 4), "G": (2, 2)}
    lo, hi = bounds[letter]
    if rank < lo or (hi is not None and rank > hi):
        raise ValueError(f"rank {rank} is not valid for series {letter}")
    return letter, rank


def _cartan_matrix(letter: str, n: int) -> tuple[tuple[int, ...], ...]:
    mat = [[2 if i == j else 0 for j in range(n)] for i in range(n)]

    def bond(i, j, cij=-1, cji=-1):
        mat[i][j] = cij
        mat[j][i] = cji

    if letter in "ABC":
        for i in range(n - 1):
            bond(i, i + 1)
        if letter == "B" and n >= 2:
            # the last simple root is short
            mat[n - 1][n - 2] = -2
        if letter == "C" and n >= 2:
            # the last simple root is long
            mat[n - 2][n - 1] = -2
    elif letter == "D":
        for i in range(n - 2):
            bond(i, i + 1)
        bond(n - 3, n - 1)
    elif letter == "E":
        chain = [0, 2, 3, 4, 5, 6, 7][: n - 1]
        for a, b in zip(chain, chain[1:]):
            bond(a, b)
        bond(1, 3)
    elif letter == "F":
        bond(0, 1)
        bond(1, 2, cij=-1, cji=-2)
        bond(2, 3)
    elif letter == "G":
        bond(0, 1, cij=-3, cji=-1)
    return tuple(tuple(row) for row in mat)


def _symmetrizer(cartan) -> tuple[int, ...]:
    """Minimal positive integers d with d[j]*C[i][j] == d[i]*C[j][i].

    With this relation d[i] is 1 exactly on the long simple roots, so the
    vector doubles as the length index r per simple root (1, 2 or 3).
    """
    n = len(cartan)
    d = [None] * n
    d[0] = Fraction(1)
    todo = deque([0])
    while todo:
        i = todo.popleft()
        for j in range(n):
            if i != j and cartan[i][j] != 0 and d[j] is None:
                d[j] = d[i] * cartan[j][i] / cartan[i][j]
                todo.append(j)
    if any(x is None for x in d):
        raise ValueError("Cartan matrix is not connected")
    scale = min(d)
    d = [x / scale for x in d]
    if any(x.denominator != 1 for x in d):
        raise ConsistencyError("symmetrizer is not integral after scaling")
    return tuple(int(x) for x in d)


class RootSystem:
    """All the data of one finite simple root system.

    Instances are obtained from :func:`root_system` and are immutable in
    practice; equality and hashing go by the Cartan type string.
    """

    def __init__(self, cartan_type: str):
        letter, rank = _parse_cartan_type(cartan_type)
        self.cartan_type = letter + str(rank)
        self.rank = rank
        self.cartan = _cartan_matrix(letter, rank)
        self.symmetrizer = _symmetrizer(self.cartan)
        # root_lengths holds d_i = r_{alpha_i} per simple root
        self.root_lengths = self.symmetrizer
        self._simple = [self._simple_reflection_matrix(i) for i in range(rank)]
        self.positive_roots = self._close_roots()
        self._root_by_vec = {r.vec: r for r in self.positive_roots}
        for r in self.positive_roots:
            self._length_index(r)
        self.highest_root = self._find_highest_root()
        self.kac_labels = (1,) + self.highest_root.vec
        self.two_rho_pairing = tuple(
            sum(r.vec[i] for r in self.positive_roots) for i in range(rank)
        )
        self._cartan_inverse = _invert_rational(self.cartan)
        self._coroot_coweight_cache: dict[tuple[int, ...], Coweight] = {}
        self._reflection_cache: dict[tuple[int, ...], WeylElement] = {}
        self._dominant_cache: dict[Coweight, tuple[Coweight, WeylElement]] = {}
        self._elements = None

    # -- construction helpers -------------------------------------------

    def _simple_reflection_matrix(self, i: int) -> WeylElement:
        n = self.rank
        mat = tuple(
            tuple((1 if k == j else 0) - (self.cartan[i][j] if k == i else 0)
                  for j in range(n))
            for k in range(n)
        )
        return WeylElement(mat, mat)

    def _close_roots(self) -> tuple[Root, ...]:
        n = self.rank
        seen: dict[tuple[int, ...], tuple[int, ...]] = {}
        basis = [Root(tuple(1 if j == i else 0 for j in range(n)),
                      tuple(1 if j == i else 0 for j in range(n)))
                 for i in range(n)]
        todo = deque(basis)
        for r in basis:
            seen[r.vec] = r.covec
        while todo:
            r = todo.popleft()
            for i in range(n):
                p = sum(r.vec[j] * self.cartan[i][j] for j in range(n))
                q = sum(r.covec[j] * self.cartan[j][i] for j in range(n))
                vec = tuple(b - (p if k == i else 0) for k, b in enumerate(r.vec))
                covec = tuple(c - (q if k == i else 0) for k, c in enumerate(r.covec))
                if vec not in seen:
                    seen[vec] = covec
                    todo.append(Root(vec, covec))
        positives = [Root(v, c) for v, c in seen.items() if sum(v) > 0]
        positives.sort(key=lambda r: (r.height, r.vec))
        return tuple(positives)

    def _length_index(self, root: Root) -> int:
        # r_beta = 2 / (beta | beta); equals 1 on long roots, 2 or 3 on short
        vals = set()
        for i in range(self.rank):
            if root.vec[i] != 0:
                v = Fraction(root.covec[i] * self.symmetrizer[i], root.vec[i])
                vals.add(v)
        if len(vals) != 1:
            raise ConsistencyError(f"ambiguous length index for root {root.vec}")
        v = vals.pop()
        if v.denominator != 1 or int(v) not in (1, 2, 3):
            raise ConsistencyError(f"unexpected length index {v} for root {root.vec}")
        return int(v)

    def _find_highest_root(self) -> Root:
        top = max(self.positive_roots, key=lambda r: r.height)
        others = [r for r in self.positive_roots if r.height == top.height]
        if len(others) != 1:
            raise ConsistencyError("highest root is not unique")
        for i in range(self.rank):
            bumped = tuple(v + (1 if k == i else 0) for k, v in enumerate(top.vec))
            if bumped in self._root_by_vec:
                raise ConsistencyError("highest root is not maximal")
        return top

    # -- basic pairings and reflections ----------------------------------

    def pair(self, lam: Coweight, vec: tuple[int, ...]) -> int:
        """Pairing of a coweight with a root given in simple root coordinates."""
        return sum(b * x for b, x in zip(vec, lam))

    def coroot_of(self, vec: tuple[int, ...]) -> tuple[int, ...]:
        """Coroot of a positive root, in simple coroot coordinates."""
        return self._root_by_vec[vec].covec

    def coroot_coweight(self, vec: tuple[int, ...]) -> Coweight:
        """The coroot of a root, as a coweight (pairings with simple roots).

        Accepts negative roots as well; the coroot is negated accordingly.
        """
        if vec in self._coroot_coweight_cache:
            return self._coroot_coweight_cache[vec]
        neg = tuple(-b for b in vec)
        if vec in self._root_by_vec:
            covec = self._root_by_vec[vec].covec
            sign = 1
        elif neg in self._root_by_vec:
            covec = self._root_by_vec[neg].covec
            sign = -1
        else:
            raise ValueError(f"{vec} is not a root")
        out = tuple(
            sign * sum(covec[m] * self.cartan[m][j] for m in range(self.rank))
            for j in range(self.rank)
        )
        self._coroot_coweight_cache[vec] = out
        return out

    def root_length_index(self, vec: tuple[int, ...]) -> int:
        neg = tuple(-b for b in vec)
        key = vec if vec in self._root_by_vec else neg
        return self._length_index(self._root_by_vec[key])

    def is_root(self, vec: tuple[int, ...]) -> bool:
        return vec in self._root_by_vec or tuple(-b for b in vec) in self._root_by_vec

    def reflect(self, lam: Coweight, vec: tuple[int, ...]) -> Coweight:
        """Reflect a coweight in the wall of the given root."""
        p = self.pair(lam, vec)
        cw = self.coroot_coweight(vec)
        return tuple(x - p * t for x, t in zip(lam, cw))

    def simple_reflection(self, i: int) -> WeylElement:
        """Simple reflection, 1-based index."""
        return self._simple[i - 1]

    def reflection_element(self, vec: tuple[int, ...]) -> WeylElement:
        """The reflection in the wall of an arbitrary root, as a group element."""
        if vec in self._reflection_cache:
            return self._reflection_cache[vec]
        cw = self.coroot_coweight(vec)
        n = self.rank
        mat = tuple(
            tuple((1 if k == j else 0) - vec[k] * cw[j] for j in range(n))
            for k in range(n)
        )
        w = WeylElement(mat, mat)
        self._reflection_cache[vec] = w
        return w

    def identity(self) -> WeylElement:
        m = _identity_mat(self.rank)
        return WeylElement(m, m)

    def element_from_word(self, word: Iterable[int]) -> WeylElement:
        w = self.identity()
        for i in word:
            w = w * self.simple_reflection(i)
        return w

    # -- dominance and length --------------------------------------------

    def is_dominant(self, lam: Coweight) -> bool:
        return all(x >= 0 for x in lam)

    def dominant_translate(self, lam: Coweight) -> tuple[Coweight, WeylElement]:
        """Dominant representative and the minimal w with w(dominant) = lam.

        Repeatedly reflects at the lowest negative coordinate; the element
        collected this way is the unique minimal length one moving the
        dominant representative to lam.
        """
        lam = tuple(lam)
        if lam in self._dominant_cache:
            return self._dominant_cache[lam]
        x = lam
        w = self.identity()
        while True:
            neg = next((i for i, v in enumerate(x) if v < 0), None)
            if neg is None:
                break
            s = self._simple[neg]
            x = s.act(x)
            w = w * s
        self._dominant_cache[lam] = (x, w)
        return x, w

    def length(self, w: WeylElement) -> int:
        return sum(1 for r in self.positive_roots if sum(w.act_root(r.vec)) < 0)

    def reduced_word(self, w: WeylElement) -> tuple[int, ...]:
        """Deterministic reduced word, lowest available index first."""
        out = []
        cur = w
        while not cur.is_identity():
            for i in range(self.rank):
                img = cur.act_root(tuple(1 if j == i else 0 for j in range(self.rank)))
                if sum(img) < 0:
                    cur = cur * self._simple[i]
                    out.append(i + 1)
                    break
            else:
                raise ConsistencyError("non-identity element with no descent")
        return tuple(reversed(out))

    def longest_element(self, indices: Iterable[int] | None = None) -> WeylElement:
        """Longest element of the parabolic generated by the given 1-based indices."""
        if indices is None:
            idx = list(range(self.rank))
        else:
            idx = sorted(i - 1 for i in indices)
        x = tuple(1 if i in idx else 0 for i in range(self.rank))
        w = self.identity()
        while True:
            pos = next((i for i in idx if x[i] > 0), None)
            if pos is None:
                break
            s = self._simple[pos]
            x = s.act(x)
            w = s * w
        return w

    def weyl_elements(self) -> tuple[WeylElement, ...]:
        """The full Weyl group, for brute force work in small rank."""
        if self.rank > 4:
            raise UnsupportedRankError(
                "full Weyl group enumeration is limited to rank at most 4"
            )
        if self._elements is None:
            seen = {self.identity()}
            todo = deque(seen)
            while todo:
                w = todo.popleft()
                for s in self._simple:
                    nxt = w * s
                    if nxt not in seen:
                        seen.add(nxt)
                        todo.append(nxt)
            self._elements = tuple(seen)
        return self._elements

    def weyl_orbit(self, lam: Coweight) -> frozenset[Coweight]:
        seen = {tuple(lam)}
        todo = deque(seen)
        while todo:
            x = todo.popleft()
            for s in self._simple:
                y = s.act(x)
                if y not in seen:
                    seen.add(y)
                    todo.append(y)
        return frozenset(seen)

    # -- rho and chamber tests -------------------------------------------

    def rho_pair(self, lam: Coweight) -> int:
        """Sum of the pairings of lam with all positive roots."""
        return sum(t * x for t, x in zip(self.two_rho_pairing, lam))

    def coroot_coords(self, lam: Coweight) -> tuple[Fraction, ...]:
        """Coordinates of a coweight on the simple coroots (rational)."""
        n = self.rank
        return tuple(
            sum(Fraction(lam[k]) * self._cartan_inverse[k][j] for k in range(n))
            for j in range(n)
        )

    def in_coroot_lattice(self, lam: Coweight) -> bool:
        return all(q.denominator == 1 for q in self.coroot_coords(lam))

    def positive_sum_in_chamber(self, nu: Coweight, w: WeylElement) -> bool:
        """Whether nu is a nonnegative integer sum of coroots of w-positive roots."""
        x = w.act_inverse(nu)
        return all(q.denominator == 1 and q >= 0 for q in self.coroot_coords(x))

    def bilinear(self, x: Coweight, y: Coweight) -> Fraction:
        """Invariant form on coweights; the highest root's coroot has norm 2."""
        q = self.coroot_coords(x)
        return sum(
            (qi * d * yi for qi, d, yi in zip(q, self.symmetrizer, y)),
            start=Fraction(0),
        )

    def fundamental_coweight(self, i: int) -> Coweight:
        return tuple(1 if j == i - 1 else 0 for j in range(self.rank))

    def zero_coweight(self) -> Coweight:
        return (0,) * self.rank

    def __eq__(self, other):
        return isinstance(other, RootSystem) and self.cartan_type == other.cartan_type

    def __hash__(self):
        return hash(self.cartan_type)

    def __repr__(self):
        return f"RootSystem({self.cartan_type!r})"


def _invert_rational(mat) -> tuple[tuple[Fraction, ...], ...]:
    n = len(mat)
    a = [[Fraction(mat[i][j]) for j in range(n)] + [Fraction(1 if j == i else 0) for j in range(n)]
         for i in range(n)]
    for col in range(n):
        piv = next(r for r in range(col, n) if a[r][col] != 0)
        a[col], a[piv] = a[piv], a[col]
        inv = 1 / a[col][col]
        a[col] = [v * inv for v in a[col]]
        for r in range(n):
            if r != col and a[r][col] != 0:
                f = a[r][col]
                a[r] = [v - f * u for v, u in zip(a[r], a[col])]
    return tuple(tuple(row[n:]) for row in a)


@lru_cache(maxsize=None)
def root_system(cartan_type: str) -> RootSystem:
    """Shared RootSystem instance for a Cartan type string like "B2"."""
    return RootSystem(cartan_type)


def parse_coweight(text: str, rank: int) -> Coweight:
    """Parse a comma separated integer coweight, validating the length."""
    parts = [p.strip() for p in str(text).split(",")]
    try:
        vals = tuple(int(p) for p in parts)
    except ValueError:
        raise ValueError(f"coweight entries must be integers, got {text!r}") from None
    if len(vals) != rank:
        raise ValueError(f"coweight {text!r} has {len(vals)} entries, expected {rank}")
    return vals
