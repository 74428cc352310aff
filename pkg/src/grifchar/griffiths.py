"""The graded module attached to a cocharacter, its determinant
character, weight-pairing sums, and the proportionality invariants.

Everything is exact.  Cocharacter pairings <chi, mu> may be proper
rationals (fundamental-weight lattice vs coroot lattice), so module
multiplicities are Fractions; all comparisons are exact equalities.

For a weight system V and dominant mu, the graded module assigns
weight chi the multiplicity m(chi) * (p_max - <chi, mu>) where p_max is
the largest mu-pairing over the weights.  Its determinant pairs with
simple coroots via the closed form -1/2 <alpha, mu> S(alpha^vee) where
S(gamma^vee) = sum m(chi) <chi, gamma^vee>^2; the direct summation is
kept alongside as an independent oracle for that closed form.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Sequence

from .errors import (
    CentralKernelViolated,
    CentralMu,
    DimensionMismatch,
    EmptySystem,
    InvariantViolated,
    NotDominant,
)
from .rootdata import Root, RootSystem
from .repweights import WeightSystem, has_central_kernel


def coweight(coords: Sequence) -> tuple:
    """Coerce to a tuple of Fractions (adjoint coordinates <alpha_i, mu>)."""
    return tuple(Fraction(x) for x in coords)


def _check_mu(rs: RootSystem, mu: Sequence) -> tuple:
    if len(mu) != rs.rank:
        raise DimensionMismatch(f"coweight of length {len(mu)} vs rank {rs.rank}")
    return coweight(mu)


def _require_dominant_mu(rs: RootSystem, mu: Sequence) -> tuple:
    mu = _check_mu(rs, mu)
    if any(m < 0 for m in mu):
        raise NotDominant(f"mu={mu} is not dominant")
    return mu


def _require_central_kernel(ws: WeightSystem) -> None:
    if not has_central_kernel(ws):
        raise CentralKernelViolated(
            f"{ws.label} on {ws.rs.spec}: some simple coroot pairs to zero "
            "with every weight"
        )


def mu_pairing_vector(rs: RootSystem, mu: Sequence) -> tuple:
    """y = C^{-1} mu, so that <chi, mu> = chi . y for any weight chi."""
    mu = _check_mu(rs, mu)
    inv = rs.cartan_inv
    n = rs.rank
    return tuple(sum(inv[i][j] * mu[j] for j in range(n)) for i in range(n))


def mu_pairing(rs: RootSystem, chi: Sequence, mu: Sequence) -> Fraction:
    """<chi, mu> for a weight chi in fundamental-weight coordinates."""
    y = mu_pairing_vector(rs, mu)
    return sum((c * v for c, v in zip(chi, y)), Fraction(0))


def mu_weight_extremes(ws: WeightSystem, mu: Sequence):
    """(largest, smallest) mu-pairing over the weights of ws."""
    if not ws.weights:
        raise EmptySystem("weight system has no weights")
    y = mu_pairing_vector(ws.rs, mu)
    vals = [sum(c * v for c, v in zip(chi, y)) for chi in ws.weights]
    return Fraction(max(vals)), Fraction(min(vals))


@dataclass(frozen=True)
class GriffithsModule:
    """Graded module of (ws, mu): weight -> nonnegative rational
    multiplicity m(chi) * (p_max - <chi, mu>)."""

    base: WeightSystem
    mu: tuple
    mults: Mapping

    @property
    def total(self) -> Fraction:
        return sum(self.mults.values(), Fraction(0))


def griffiths_module(ws: WeightSystem, mu: Sequence) -> GriffithsModule:
    _require_central_kernel(ws)
    mu = _require_dominant_mu(ws.rs, mu)
    y = mu_pairing_vector(ws.rs, mu)
    pairings = {
        chi: sum((c * v for c, v in zip(chi, y)), Fraction(0)) for chi in ws.weights
    }
    pmax = max(pairings.values())
    mults = {chi: ws.weights[chi] * (pmax - p) for chi, p in pairings.items()}
    return GriffithsModule(ws, mu, mults)


def grif_pairings_direct(ws: WeightSystem, mu: Sequence) -> tuple:
    """Pairings of the determinant character with the simple coroots,
    by direct summation over the graded module.  Serves as the
    brute-force oracle for grif_pairings_closed."""
    module = griffiths_module(ws, mu)
    n = ws.rs.rank
    out = [Fraction(0)] * n
    for chi, m in module.mults.items():
        if m == 0:
            continue
        for i in range(n):
            if chi[i]:
                out[i] += m * chi[i]
    return tuple(out)


def weight_pairing_sum(ws: WeightSystem, gamma: Root) -> int:
    """S(gamma^vee) = sum over weights of m(chi) <chi, gamma^vee>^2.

    Strictly positive whenever ws has central kernel.
    """
    u = gamma.coroot
    total = 0
    for chi, m in ws.weights.items():
        p = sum(c * v for c, v in zip(chi, u))
        if p:
            total += m * p * p
    return total


def grif_pairings_closed(ws: WeightSystem, mu: Sequence) -> tuple:
    """Closed form: entry i is -1/2 <alpha_i, mu> S(alpha_i^vee)."""
    _require_central_kernel(ws)
    mu = _require_dominant_mu(ws.rs, mu)
    return tuple(
        -Fraction(1, 2) * mu[i] * weight_pairing_sum(ws, a)
        for i, a in enumerate(ws.rs.simple_roots)
    )


def length_invariant(ws: WeightSystem) -> int:
    """(alpha, alpha) * S(alpha^vee), checked to be the same for every
    root; non-constancy is a bug, not an admissible state."""
    _require_central_kernel(ws)
    values = {r.length_sq * weight_pairing_sum(ws, r) for r in ws.rs.roots}
    if len(values) != 1:
        raise InvariantViolated(
            f"(alpha,alpha)*S varies over roots of {ws.rs.spec}: {sorted(values)}"
        )
    return values.pop()


def deligne_pairing(ws: WeightSystem, nu: Sequence, nu2: Sequence) -> Fraction:
    """(nu, nu2)_V = sum m(chi) <chi, nu> <chi, nu2>: symmetric, and
    positive definite when ws has central kernel."""
    y1 = mu_pairing_vector(ws.rs, nu)
    y2 = mu_pairing_vector(ws.rs, nu2)
    total = Fraction(0)
    for chi, m in ws.weights.items():
        p1 = sum(c * v for c, v in zip(chi, y1))
        if p1:
            p2 = sum(c * v for c, v in zip(chi, y2))
            if p2:
                total += m * p1 * p2
    return total


def deligne_gram(ws: WeightSystem) -> tuple:
    """Gram matrix of the pairing on the fundamental-coweight basis."""
    n = ws.rs.rank
    basis = [tuple(Fraction(int(i == j)) for j in range(n)) for i in range(n)]
    return tuple(
        tuple(deligne_pairing(ws, basis[i], basis[j]) for j in range(n))
        for i in range(n)
    )


@dataclass(frozen=True)
class GriffithsReport:
    """Everything the proportionality statement asserts about one
    (ws, mu) pair, plus the verdicts of the built-in cross-checks."""

    grif_pairings: tuple  # direct pairings with the simple coroots
    s_values: tuple  # S(alpha_i^vee) per simple root
    length_invariant: int  # (alpha, alpha) S(alpha^vee), constant over roots
    c: Fraction  # length_invariant / 4
    levi: tuple  # 0-based simple-root indices with <alpha_i, mu> = 0
    ray_ok: bool  # pairings_i == -c * mu_i / d_i for all i
    direct_eq_closed: bool
    anti_dominant: bool


def proportionality(ws: WeightSystem, mu: Sequence) -> GriffithsReport:
    """Full report for a dominant, non-central mu on a central-kernel
    weight system."""
    _require_central_kernel(ws)
    mu = _require_dominant_mu(ws.rs, mu)
    if all(m == 0 for m in mu):
        raise CentralMu("mu pairs to zero with every simple root")
    rs = ws.rs
    direct = grif_pairings_direct(ws, mu)
    s_values = tuple(weight_pairing_sum(ws, a) for a in rs.simple_roots)
    closed = tuple(-Fraction(1, 2) * m * s for m, s in zip(mu, s_values))
    inv = length_invariant(ws)
    c = Fraction(inv, 4)
    ray_ok = all(
        g == -c * m / d for g, m, d in zip(direct, mu, rs.d)
    )
    levi = tuple(i for i, m in enumerate(mu) if m == 0)
    anti = all(g <= 0 for g in direct) and all(
        (g < 0) == (i not in levi) for i, g in enumerate(direct)
    )
    return GriffithsReport(
        grif_pairings=direct,
        s_values=s_values,
        length_invariant=inv,
        c=c,
        levi=levi,
        ray_ok=ray_ok,
        direct_eq_closed=direct == closed,
        anti_dominant=anti,
    )
