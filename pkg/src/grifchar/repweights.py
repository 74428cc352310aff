"""Weight systems of representations with central kernel.

The adjoint weight system is read off the root system directly.
Irreducible highest-weight systems are computed by the multiplicity
recursion over dominant weights (exact integers throughout), then
expanded to the full Weyl-orbit multiset.  The product dimension
formula is implemented separately so the two routes can be checked
against each other.

Arbitrary representations are modeled as direct sums of irreducibles;
multiplicity maps add (see sum_weight_systems).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Sequence

import numpy as np

from .errors import DimensionMismatch, NotDominant
from .rootdata import RootSystem

# Chunk bound for the dominant-candidate scan; keeps peak memory small.
_SCAN_CHUNK = 1 << 20


@dataclass(frozen=True)
class WeightSystem:
    """A representation seen through its torus weights.

    weights maps fundamental-weight coordinate tuples to positive
    integer multiplicities; dimension is the total with multiplicity.
    Treat instances as immutable.
    """

    rs: RootSystem
    label: str
    weights: Mapping
    dimension: int

    def __repr__(self):
        return f"WeightSystem({self.rs.spec}, {self.label}, dim={self.dimension})"


def adjoint_weight_system(rs: RootSystem) -> WeightSystem:
    """Roots with multiplicity one plus the zero weight with
    multiplicity rank."""
    weights = {r.fw: 1 for r in rs.roots}
    weights[(0,) * rs.rank] = rs.rank
    return WeightSystem(rs, "ad", weights, len(rs.roots) + rs.rank)


def _require_dominant_weight(rs: RootSystem, lam: Sequence) -> tuple:
    if len(lam) != rs.rank:
        raise DimensionMismatch(f"weight of length {len(lam)} vs rank {rs.rank}")
    lam = tuple(int(x) for x in lam)
    if any(x < 0 for x in lam):
        raise NotDominant(f"highest weight {lam} has a negative coordinate")
    return lam


def _pair_weight_root(rs: RootSystem, chi: Sequence, alpha: Sequence) -> int:
    # (chi, alpha) = sum_j alpha_j d_j chi_j; integer for integer chi
    return sum(a * d * c for a, d, c in zip(alpha, rs.d, chi))


def weyl_dimension(rs: RootSystem, lam: Sequence) -> int:
    """Dimension of the irreducible with highest weight lam, by the
    product over positive roots of (lam+rho, alpha)/(rho, alpha)."""
    lam = _require_dominant_weight(rs, lam)
    rho = (1,) * rs.rank
    shifted = tuple(l + 1 for l in lam)
    num = 1
    den = 1
    for r in rs.positive_roots:
        num *= _pair_weight_root(rs, shifted, r.alpha)
        den *= _pair_weight_root(rs, rho, r.alpha)
    assert num % den == 0
    return num // den


def dominant_representative(rs: RootSystem, chi: Sequence) -> tuple:
    """The unique dominant weight in the Weyl orbit of chi."""
    key = tuple(chi)
    cache = rs._dom_rep_cache
    hit = cache.get(key)
    if hit is not None:
        return hit
    cur = key
    cartan = rs.cartan
    n = rs.rank
    while True:
        for i in range(n):
            ci = cur[i]
            if ci < 0:
                row = cartan[i]
                cur = tuple(cur[j] - ci * row[j] for j in range(n))
                break
        else:
            break
    cache[key] = cur
    return cur


def _alpha_coords(rs: RootSystem, chi: Sequence) -> tuple:
    """Simple-root coordinates of a weight (rationals in general)."""
    inv = rs.cartan_inv
    n = rs.rank
    return tuple(sum(inv[j][i] * chi[j] for j in range(n)) for i in range(n))


def _dominant_weights_below(rs: RootSystem, lam: tuple) -> list:
    """All dominant weights lam - sum k_i alpha_i with k_i >= 0, sorted
    by increasing depth sum(k).  These are exactly the dominant weights
    of the irreducible with highest weight lam."""
    n = rs.rank
    # lam - w0(lam) bounds the k-box coordinatewise
    neg_dom = dominant_representative(rs, tuple(-x for x in lam))
    span = tuple(a + b for a, b in zip(lam, neg_dom))
    kmax = _alpha_coords(rs, span)
    assert all(x.denominator == 1 and x >= 0 for x in kmax)
    kmax = [int(x) for x in kmax]

    cartan = np.array(rs.cartan, dtype=np.int64)
    lam_arr = np.array(lam, dtype=np.int64)
    sizes = [k + 1 for k in kmax]
    total = 1
    for s in sizes:
        total *= s
    found = []
    # scan the box in chunks of flattened k-indices
    for start in range(0, total, _SCAN_CHUNK):
        stop = min(start + _SCAN_CHUNK, total)
        flat = np.arange(start, stop, dtype=np.int64)
        ks = np.empty((stop - start, n), dtype=np.int64)
        rem = flat
        for i in range(n - 1, -1, -1):
            ks[:, i] = rem % sizes[i]
            rem = rem // sizes[i]
        fw = lam_arr[None, :] - ks @ cartan
        mask = (fw >= 0).all(axis=1)
        if mask.any():
            depths = ks[mask].sum(axis=1)
            for row, dep in zip(fw[mask].tolist(), depths.tolist()):
                found.append((dep, tuple(row)))
    found.sort()
    assert found[0] == (0, lam)
    return found


def _freudenthal_multiplicities(rs: RootSystem, lam: tuple, dominant: list) -> dict:
    """Multiplicities of the dominant weights, highest first.

    The recursion is evaluated in integers: inner products (chi, alpha)
    are integral as computed, and squared norms are scaled by det(C).
    """
    n = rs.rank
    det = rs.cartan_det
    # det * (x, y) for integer fw coordinates: x @ scaled @ y
    scaled = [
        [rs.cartan_adj[i][j] * rs.d[j] for j in range(n)] for i in range(n)
    ]

    def norm_scaled(c):
        return sum(
            c[i] * sum(scaled[i][j] * c[j] for j in range(n)) for i in range(n)
        )

    rho_shift = lambda c: tuple(x + 1 for x in c)
    lam_norm = norm_scaled(rho_shift(lam))
    candidates = {fw for _, fw in dominant}
    pos = [(r.alpha, r.fw, r.length_sq) for r in rs.positive_roots]

    mults = {lam: 1}
    for depth, chi in dominant[1:]:
        acc = 0
        for alpha, fw_a, len2 in pos:
            base = _pair_weight_root(rs, chi, alpha)
            k = 1
            while True:
                up = tuple(c + k * f for c, f in zip(chi, fw_a))
                rep = dominant_representative(rs, up)
                if rep not in candidates:
                    break  # strings through the weight set are unbroken
                m_up = mults.get(rep)
                assert m_up is not None, "dominant weights out of depth order"
                acc += m_up * (base + k * len2)
                k += 1
        denom = lam_norm - norm_scaled(rho_shift(chi))
        assert denom > 0
        num = 2 * acc * det
        assert num % denom == 0
        m = num // denom
        assert m > 0
        mults[chi] = m
    return mults


def _expand_orbits(rs: RootSystem, dom_mults: dict) -> dict:
    """Extend a multiplicity map on dominant weights to the full Weyl
    orbit union; multiplicities are constant on orbits."""
    n = rs.rank
    cartan = np.array(rs.cartan, dtype=np.int64)
    out = dict(dom_mults)
    frontier = list(dom_mults.items())
    while frontier:
        arr = np.array([c for c, _ in frontier], dtype=np.int64)
        ms = [m for _, m in frontier]
        nxt = []
        for i in range(n):
            imgs = arr - np.outer(arr[:, i], cartan[i])
            for row, m in zip(imgs.tolist(), ms):
                t = tuple(row)
                if t not in out:
                    out[t] = m
                    nxt.append((t, m))
        frontier = nxt
    return out


def irrep_weight_system(rs: RootSystem, lam: Sequence) -> WeightSystem:
    """Weight system of the irreducible representation with dominant
    highest weight lam (integer fundamental-weight coordinates)."""
    lam = _require_dominant_weight(rs, lam)
    label = "hw:" + ",".join(str(x) for x in lam)
    if all(x == 0 for x in lam):
        return WeightSystem(rs, label, {lam: 1}, 1)
    dominant = _dominant_weights_below(rs, lam)
    dom_mults = _freudenthal_multiplicities(rs, lam, dominant)
    weights = _expand_orbits(rs, dom_mults)
    return WeightSystem(rs, label, weights, sum(weights.values()))


def sum_weight_systems(systems: Sequence[WeightSystem]) -> WeightSystem:
    """Direct sum: multiplicity maps add."""
    if not systems:
        raise ValueError("need at least one summand")
    rs = systems[0].rs
    if any(ws.rs is not rs for ws in systems[1:]):
        raise DimensionMismatch("summands must share one root system")
    weights: dict = {}
    for ws in systems:
        for chi, m in ws.weights.items():
            weights[chi] = weights.get(chi, 0) + m
    label = "+".join(ws.label for ws in systems)
    return WeightSystem(rs, label, weights, sum(ws.dimension for ws in systems))


def has_central_kernel(ws: WeightSystem) -> bool:
    """True iff every simple coroot pairs nonzero with some weight
    (coordinate i of a weight is its pairing with alpha_i^vee)."""
    n = ws.rs.rank
    hit = [False] * n
    for chi in ws.weights:
        for i in range(n):
            if chi[i] != 0:
                hit[i] = True
        if all(hit):
            return True
    return all(hit)


def weight_matrix(ws: WeightSystem):
    """(coords, mults) as int64 arrays in deterministic order; the bulk
    view used by the sweep engine."""
    items = sorted(ws.weights.items())
    coords = np.array([c for c, _ in items], dtype=np.int64)
    mults = np.array([m for _, m in items], dtype=np.int64)
    if coords.size == 0:
        coords = coords.reshape(0, ws.rs.rank)
    return coords, mults
