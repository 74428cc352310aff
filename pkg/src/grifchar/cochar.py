"""Cocharacter-side predicates: dominance normalization, Levi type,
orbitally p-close, quasi-constant, minuscule.

The group acting on roots is the Weyl group together with an optional
set of diagram automorphisms (the split case is the empty set).  In an
irreducible system the Weyl orbit of a root is exactly the set of roots
of its length, so orbit maxima are computed per length class; diagram
automorphisms can only merge classes, which the generic code handles
via a union-find even though Cartan-preserving permutations of an
irreducible diagram in fact preserve length.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .errors import CentralMu, EquivalenceViolated, InvalidPrime
from .rootdata import RootSystem
from .repweights import WeightSystem
from .griffiths import (
    _check_mu,
    _require_central_kernel,
    _require_dominant_mu,
    grif_pairings_direct,
)


@dataclass(frozen=True)
class AutomorphismSet:
    """Dynkin-diagram symmetries given as node permutations; each must
    preserve the Cartan matrix (checked by automorphism_set)."""

    generators: tuple

    @property
    def trivial(self) -> bool:
        return not self.generators


EMPTY_AUTS = AutomorphismSet(())


def automorphism_set(rs: RootSystem, generators: Sequence[Sequence[int]]) -> AutomorphismSet:
    """Validate and freeze a set of diagram automorphisms."""
    n = rs.rank
    gens = []
    for perm in generators:
        perm = tuple(perm)
        if sorted(perm) != list(range(n)):
            raise ValueError(f"{perm} is not a permutation of 0..{n - 1}")
        for i in range(n):
            for j in range(n):
                if rs.cartan[perm[i]][perm[j]] != rs.cartan[i][j]:
                    raise ValueError(f"{perm} does not preserve the Cartan matrix")
        gens.append(perm)
    return AutomorphismSet(tuple(gens))


def dominant_normalize(rs: RootSystem, mu: Sequence) -> tuple:
    """The unique dominant Weyl conjugate of a coweight.

    A simple reflection acts on the adjoint coordinates by
    m'_j = m_j - m_i * cartan[j][i].
    """
    mu = _check_mu(rs, mu)
    cartan = rs.cartan
    n = rs.rank
    cur = mu
    while True:
        for i in range(n):
            if cur[i] < 0:
                mi = cur[i]
                cur = tuple(cur[j] - mi * cartan[j][i] for j in range(n))
                break
        else:
            return cur


def levi_type(rs: RootSystem, mu: Sequence) -> tuple:
    """0-based indices of the simple roots pairing to zero with a
    dominant mu (the type of the centralizer Levi)."""
    mu = _require_dominant_mu(rs, mu)
    return tuple(i for i, m in enumerate(mu) if m == 0)


def _orbit_classes(rs: RootSystem, auts: AutomorphismSet) -> list:
    """Partition of the roots into orbits of the Weyl group extended by
    the automorphisms, as lists of Root objects."""
    classes = {}
    for r in rs.roots:
        classes.setdefault(r.length_sq, []).append(r)
    if auts.trivial or len(classes) == 1:
        return list(classes.values())
    # union-find over length classes through the automorphism action
    keys = sorted(classes)
    parent = {k: k for k in keys}

    def find(k):
        while parent[k] != k:
            k = parent[k]
        return k

    for perm in auts.generators:
        for k in keys:
            rep = classes[k][0]
            image = tuple(
                sum(rep.alpha[i] for i in range(rs.rank) if perm[i] == j)
                for j in range(rs.rank)
            )
            k2 = rs.root_from_alpha(image).length_sq
            ra, rb = find(k), find(k2)
            if ra != rb:
                parent[rb] = ra
    merged = {}
    for k in keys:
        merged.setdefault(find(k), []).extend(classes[k])
    return list(merged.values())


def _root_pairings(mu: tuple, roots) -> list:
    return [sum(a * m for a, m in zip(r.alpha, mu)) for r in roots]


def max_orbit_ratio(
    rs: RootSystem, mu: Sequence, auts: AutomorphismSet = EMPTY_AUTS
) -> Optional[Fraction]:
    """max over orbits of (largest |<alpha, mu>|) / (smallest nonzero
    |<alpha, mu>|); None when mu is central (no nonzero pairing)."""
    mu = _check_mu(rs, mu)
    worst = None
    for roots in _orbit_classes(rs, auts):
        vals = [abs(p) for p in _root_pairings(mu, roots)]
        nonzero = [v for v in vals if v != 0]
        if not nonzero:
            continue
        ratio = Fraction(max(vals)) / min(nonzero)
        if worst is None or ratio > worst:
            worst = ratio
    return worst


def _require_prime(p: int) -> int:
    if not isinstance(p, int) or p < 2:
        raise InvalidPrime(f"p={p!r} is not a prime")
    k = 2
    while k * k <= p:
        if p % k == 0:
            raise InvalidPrime(f"p={p} is not a prime")
        k += 1
    return p


def orbitally_p_close(
    rs: RootSystem, mu: Sequence, p: int, auts: AutomorphismSet = EMPTY_AUTS
) -> bool:
    """True iff |<sigma alpha, mu> / <alpha, mu>| <= p - 1 for every
    orbit element sigma alpha and every root alpha with nonzero pairing.
    Vacuously true for central mu."""
    p = _require_prime(p)
    ratio = max_orbit_ratio(rs, mu, auts)
    return ratio is None or ratio <= p - 1


def quasi_constant(
    rs: RootSystem, mu: Sequence, auts: AutomorphismSet = EMPTY_AUTS
) -> bool:
    """Orbitally p-close for every prime, i.e. maximal ratio <= 1."""
    ratio = max_orbit_ratio(rs, mu, auts)
    return ratio is None or ratio <= 1


def is_minuscule(rs: RootSystem, mu: Sequence) -> bool:
    """Every root pairing <alpha, mu> lies in {-1, 0, 1}."""
    mu = _check_mu(rs, mu)
    return all(
        p in (-1, 0, 1) for p in _root_pairings(mu, rs.roots)
    )


def minimal_admissible_prime(
    rs: RootSystem, mu: Sequence, auts: AutomorphismSet = EMPTY_AUTS
) -> int:
    """Smallest prime p for which mu is orbitally p-close (2 when mu is
    central, the condition then being vacuous)."""
    ratio = max_orbit_ratio(rs, mu, auts)
    p = 2
    while True:
        try:
            _require_prime(p)
        except InvalidPrime:
            p += 1
            continue
        if ratio is None or ratio <= p - 1:
            return p
        p += 1


def grif_p_close_equiv(ws: WeightSystem, mu: Sequence, p: int) -> tuple:
    """(cocharacter-side, character-side) p-closeness verdicts.

    The character side applies the same orbit-ratio bound to the
    pairings of the determinant character with all coroots.  The two
    verdicts must agree; disagreement raises EquivalenceViolated.
    """
    rs = ws.rs
    _require_central_kernel(ws)
    mu = _require_dominant_mu(rs, mu)
    if all(m == 0 for m in mu):
        raise CentralMu("mu pairs to zero with every simple root")
    p = _require_prime(p)
    mu_side = orbitally_p_close(rs, mu, p)

    g = grif_pairings_direct(ws, mu)
    worst = None
    for roots in _orbit_classes(rs, EMPTY_AUTS):
        # coroot orbits correspond to root length classes one-to-one
        vals = [abs(sum(u * gi for u, gi in zip(r.coroot, g))) for r in roots]
        nonzero = [v for v in vals if v != 0]
        if not nonzero:
            continue
        ratio = Fraction(max(vals)) / min(nonzero)
        if worst is None or ratio > worst:
            worst = ratio
    grif_side = worst is None or worst <= p - 1
    if mu_side != grif_side:
        raise EquivalenceViolated(
            f"{ws.rs.spec} {ws.label} mu={mu} p={p}: "
            f"cocharacter side {mu_side}, character side {grif_side}"
        )
    return mu_side, grif_side
