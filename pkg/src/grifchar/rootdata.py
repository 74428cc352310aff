"""Irreducible root systems of types A-G with exact arithmetic.

Coordinate conventions, used everywhere in this package:

* Weights are plain tuples.  Coordinate ``i`` of a weight ``chi`` is the
  pairing ``<chi, alpha_i^vee>`` with the ``i``-th simple coroot, i.e.
  weights live in the fundamental-weight basis of the simply connected
  cover.  Fundamental weights are the standard basis vectors.
* The Cartan matrix follows ``cartan[i][j] = <alpha_i, alpha_j^vee>``
  with Bourbaki node numbering (0-based indices in code).
* Roots carry their coordinates in the simple-root basis, their
  fundamental-weight coordinates, their squared length under the
  invariant form (short roots normalized to squared length 2), and
  their coroot written in the simple-coroot basis.  With these choices
  every pairing is an integer dot product.
* Coweights are tuples of rationals; coordinate ``i`` of ``mu`` is
  ``<alpha_i, mu>``.  Only this adjoint part of a cocharacter is ever
  represented: central components are invisible to every quantity
  computed here.

Root systems are immutable after construction and safe to share between
threads; all operations are pure functions.  No floating point is used
in this module.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import DimensionMismatch, IllegalRank, InvalidPair

Weight = tuple  # integer fundamental-weight coordinates
Coweight = tuple  # rational pairings with the simple roots

_RANK_BOUNDS = {
    "A": (1, None),
    "B": (2, None),
    "C": (2, None),
    "D": (3, None),
    "E": (6, 8),
    "F": (4, 4),
    "G": (2, 2),
}

# Closed-form root counts, used as construction cross-checks.
_ROOT_COUNT = {
    "A": lambda n: n * (n + 1),
    "B": lambda n: 2 * n * n,
    "C": lambda n: 2 * n * n,
    "D": lambda n: 2 * n * (n - 1),
    "E": lambda n: {6: 72, 7: 126, 8: 240}[n],
    "F": lambda n: 48,
    "G": lambda n: 12,
}


@dataclass(frozen=True)
class RootSystemSpec:
    """A family letter plus a rank in that family's legal range."""

    family: str
    rank: int

    def __post_init__(self):
        if self.family not in _RANK_BOUNDS:
            raise IllegalRank(f"unknown family {self.family!r}")
        lo, hi = _RANK_BOUNDS[self.family]
        if self.rank < lo or (hi is not None and self.rank > hi):
            hi_txt = "inf" if hi is None else str(hi)
            raise IllegalRank(
                f"{self.family}_{self.rank}: rank must lie in [{lo}, {hi_txt}]"
            )

    def __str__(self):
        return f"{self.family}{self.rank}"


@dataclass(frozen=True)
class Root:
    """A single root: simple-root coordinates, fundamental-weight
    coordinates, squared length, and the coroot in the simple-coroot
    basis."""

    alpha: tuple
    fw: tuple
    length_sq: int
    coroot: tuple

    @property
    def positive(self) -> bool:
        return all(a >= 0 for a in self.alpha)

    @property
    def height(self) -> int:
        return sum(self.alpha)

    def __neg__(self) -> "Root":
        return Root(
            tuple(-a for a in self.alpha),
            tuple(-c for c in self.fw),
            self.length_sq,
            tuple(-u for u in self.coroot),
        )


def _cartan_matrix(family: str, n: int) -> list:
    """Bourbaki Cartan matrix of the family at rank n (0-based nodes)."""
    c = [[2 if i == j else 0 for j in range(n)] for i in range(n)]

    def edge(i, j, cij=-1, cji=-1):
        c[i][j] = cij
        c[j][i] = cji

    if family in ("A", "B", "C"):
        for i in range(n - 1):
            edge(i, i + 1)
        if family == "B" and n >= 2:
            edge(n - 2, n - 1, -2, -1)  # alpha_n is the short root
        if family == "C" and n >= 2:
            edge(n - 2, n - 1, -1, -2)  # alpha_n is the long root
    elif family == "D":
        for i in range(n - 2):
            edge(i, i + 1)
        edge(n - 3, n - 1)
    elif family == "E":
        edge(0, 2)
        for i in range(2, n - 1):
            edge(i, i + 1)
        edge(1, 3)
    elif family == "F":
        edge(0, 1)
        edge(1, 2, -2, -1)  # alpha_1, alpha_2 long; alpha_3, alpha_4 short
        edge(2, 3)
    elif family == "G":
        edge(0, 1, -1, -3)  # alpha_1 short, alpha_2 long
    return c


def _symmetrizer(cartan: Sequence[Sequence[int]]) -> tuple:
    """Half squared lengths d_i, normalized so min(d) = 1.

    Determined by symmetry of the Gram matrix: cartan[i][j] * d[j] must
    equal cartan[j][i] * d[i] on every edge.
    """
    n = len(cartan)
    d = [None] * n
    d[0] = Fraction(1)
    stack = [0]
    while stack:
        i = stack.pop()
        for j in range(n):
            if i != j and cartan[i][j] != 0 and d[j] is None:
                d[j] = d[i] * Fraction(cartan[j][i], cartan[i][j])
                stack.append(j)
    if any(x is None for x in d):
        raise IllegalRank("Dynkin diagram is not connected")
    scale = min(d)
    out = tuple(x / scale for x in d)
    assert all(x.denominator == 1 for x in out)
    return tuple(int(x) for x in out)


def _invert(matrix: Sequence[Sequence[int]]):
    """Exact inverse and determinant of a small integer matrix."""
    n = len(matrix)
    a = [[Fraction(matrix[i][j]) for j in range(n)] for i in range(n)]
    inv = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    det = Fraction(1)
    for col in range(n):
        piv = next(r for r in range(col, n) if a[r][col] != 0)
        if piv != col:
            a[col], a[piv] = a[piv], a[col]
            inv[col], inv[piv] = inv[piv], inv[col]
            det = -det
        det *= a[col][col]
        f = a[col][col]
        a[col] = [x / f for x in a[col]]
        inv[col] = [x / f for x in inv[col]]
        for r in range(n):
            if r != col and a[r][col] != 0:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
                inv[r] = [x - f * y for x, y in zip(inv[r], inv[col])]
    return [tuple(row) for row in inv], det


class RootSystem:
    """An irreducible root system, built once and then read-only.

    Attributes:
      spec: the defining (family, rank).
      rank: number of simple roots.
      cartan: tuple-of-tuples Cartan matrix.
      d: symmetrizer, d[i] = (alpha_i, alpha_i)/2 in {1, 2, 3}.
      roots: all roots, positive roots first, sorted by (height, alpha).
      simple_roots: the rank simple roots in node order.
    """

    def __init__(self, spec: RootSystemSpec):
        self.spec = spec
        n = spec.rank
        self.rank = n
        cartan = _cartan_matrix(spec.family, n)
        self.cartan = tuple(tuple(row) for row in cartan)
        self.d = _symmetrizer(cartan)

        inv, det = _invert(cartan)
        assert det.denominator == 1 and det > 0
        self.cartan_det = int(det)
        self.cartan_inv = tuple(inv)  # rows of C^{-1}, exact rationals
        # adj(C) = det * C^{-1}, an integer matrix
        self.cartan_adj = tuple(
            tuple(int(det * inv[i][j]) for j in range(n)) for i in range(n)
        )
        # Gram matrix of the fundamental weights: (eta_i, eta_j) = C^{-1}[i][j] d_j
        self.fw_gram = tuple(
            tuple(inv[i][j] * self.d[j] for j in range(n)) for i in range(n)
        )

        self.roots = self._generate_roots()
        self._by_alpha = {r.alpha: r for r in self.roots}
        self.positive_roots = tuple(r for r in self.roots if r.positive)
        self.simple_roots = tuple(
            self._by_alpha[tuple(int(i == j) for j in range(n))] for i in range(n)
        )
        expected = _ROOT_COUNT[spec.family](n)
        if len(self.roots) != expected:
            raise AssertionError(
                f"{spec}: generated {len(self.roots)} roots, expected {expected}"
            )
        # internal memo for dominant-representative walks (see repweights)
        self._dom_rep_cache: dict = {}

    # -- construction ------------------------------------------------

    def _make_root(self, alpha: tuple) -> Root:
        n = self.rank
        fw = tuple(
            sum(alpha[j] * self.cartan[j][i] for j in range(n)) for i in range(n)
        )
        length_sq = sum(alpha[j] * self.d[j] * fw[j] for j in range(n))
        half = length_sq // 2
        assert 2 * half == length_sq and half > 0
        coroot = []
        for j in range(n):
            num = alpha[j] * self.d[j]
            assert num % half == 0
            coroot.append(num // half)
        return Root(alpha, fw, length_sq, tuple(coroot))

    def _generate_roots(self) -> tuple:
        """Closure of the simple roots under the simple reflections."""
        n = self.rank
        seen = {}
        queue = []
        for i in range(n):
            a = tuple(int(i == j) for j in range(n))
            seen[a] = None
            queue.append(a)
        while queue:
            a = queue.pop()
            fw = tuple(
                sum(a[j] * self.cartan[j][i] for j in range(n)) for i in range(n)
            )
            for i in range(n):
                if fw[i] == 0:
                    continue
                b = list(a)
                b[i] -= fw[i]
                b = tuple(b)
                if b not in seen:
                    seen[b] = None
                    queue.append(b)
        roots = [self._make_root(a) for a in seen]
        roots.sort(key=lambda r: (not r.positive, abs(r.height), r.alpha))
        return tuple(roots)

    # -- lookups -----------------------------------------------------

    def root_from_alpha(self, alpha: Sequence[int]) -> Root:
        """The Root with the given simple-root coordinates (KeyError if
        the vector is not a root)."""
        return self._by_alpha[tuple(alpha)]

    def is_root(self, alpha: Sequence[int]) -> bool:
        return tuple(alpha) in self._by_alpha

    @property
    def lengths(self) -> tuple:
        """Distinct squared lengths, ascending (one entry iff simply laced)."""
        return tuple(sorted({r.length_sq for r in self.roots}))

    def __repr__(self):
        return f"RootSystem({self.spec})"


def build_root_system(spec: RootSystemSpec) -> RootSystem:
    """Construct the irreducible root system described by spec."""
    return RootSystem(spec)


def root_system(family: str, rank: int) -> RootSystem:
    """Shorthand for build_root_system(RootSystemSpec(family, rank))."""
    return RootSystem(RootSystemSpec(family, rank))


# -- pairings and reflections -----------------------------------------


def _check_dim(rs: RootSystem, chi) -> None:
    if len(chi) != rs.rank:
        raise DimensionMismatch(f"vector of length {len(chi)}, expected {rs.rank}")


def coroot_pairing(chi: Sequence, root: Root):
    """<chi, alpha^vee> for a weight chi in fundamental-weight coordinates.

    Integer whenever chi has integer coordinates.
    """
    if len(chi) != len(root.coroot):
        raise DimensionMismatch(
            f"weight of length {len(chi)} vs rank {len(root.coroot)}"
        )
    return sum(c * u for c, u in zip(chi, root.coroot))


def reflect(chi: Sequence, root: Root) -> tuple:
    """Reflection s_alpha(chi) = chi - <chi, alpha^vee> alpha."""
    k = coroot_pairing(chi, root)
    return tuple(c - k * f for c, f in zip(chi, root.fw))


def bilinear(rs: RootSystem, x: Sequence, y: Sequence) -> Fraction:
    """W-invariant symmetric form, short roots normalized to (a, a) = 2.

    Arguments are (possibly rational) fundamental-weight coordinates.
    """
    _check_dim(rs, x)
    _check_dim(rs, y)
    g = rs.fw_gram
    n = rs.rank
    total = Fraction(0)
    for i in range(n):
        if x[i] == 0:
            continue
        total += x[i] * sum(g[i][j] * y[j] for j in range(n) if y[j] != 0)
    return total


def weyl_orbit(rs: RootSystem, chi: Sequence) -> frozenset:
    """Orbit of a weight under the Weyl group (closure under the simple
    reflections, breadth-first)."""
    _check_dim(rs, chi)
    start = tuple(chi)
    seen = {start}
    frontier = [start]
    cartan = rs.cartan
    n = rs.rank
    while frontier:
        nxt = []
        for c in frontier:
            for i in range(n):
                if c[i] == 0:
                    continue
                row = cartan[i]
                img = tuple(c[j] - c[i] * row[j] for j in range(n))
                if img not in seen:
                    seen.add(img)
                    nxt.append(img)
        frontier = nxt
    return frozenset(seen)


def coxeter_number(rs: RootSystem) -> int:
    """|roots| / rank."""
    count = len(rs.roots)
    assert count % rs.rank == 0
    return count // rs.rank


def root_string(rs: RootSystem, alpha: Root, beta: Root) -> tuple:
    """The alpha-string through beta: (beta + Z alpha) intersected with
    the roots, ordered by increasing alpha-coefficient."""
    if alpha.alpha == beta.alpha or alpha.alpha == tuple(-a for a in beta.alpha):
        raise InvalidPair("root string requires alpha != +-beta")
    n = rs.rank
    h = coxeter_number(rs)
    members = []
    for k in range(-h, h + 1):
        cand = tuple(beta.alpha[j] + k * alpha.alpha[j] for j in range(n))
        if rs.is_root(cand):
            members.append((k, rs.root_from_alpha(cand)))
    ks = [k for k, _ in members]
    assert ks == list(range(min(ks), max(ks) + 1)), "root string must be unbroken"
    return tuple(r for _, r in members)
