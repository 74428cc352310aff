"""Graded module, determinant-character pairings, pairing sums, the
proportionality report, and the weight-space pairing identities."""

import itertools
from fractions import Fraction as Q

import pytest

from grifchar import (
    CentralKernelViolated,
    CentralMu,
    EmptySystem,
    NotDominant,
    WeightSystem,
    adjoint_weight_system,
    deligne_gram,
    deligne_pairing,
    grif_pairings_closed,
    grif_pairings_direct,
    griffiths_module,
    irrep_weight_system,
    length_invariant,
    mu_weight_extremes,
    proportionality,
    weight_pairing_sum,
)

ORACLE_TYPES = [("A", 1), ("A", 2), ("A", 3), ("B", 2), ("B", 3),
                ("C", 2), ("C", 3), ("D", 4), ("G", 2)]


def _systems(rs, max_coord=2):
    yield adjoint_weight_system(rs)
    for lam in itertools.product(range(max_coord + 1), repeat=rs.rank):
        if any(lam):
            yield irrep_weight_system(rs, lam)


def _mus(rank, max_coord=2):
    for mu in itertools.product(range(max_coord + 1), repeat=rank):
        if any(mu):
            yield mu


# -- extremes ----------------------------------------------------------


def test_extremes_a1_adjoint(rs_factory):
    ws = adjoint_weight_system(rs_factory("A", 1))
    assert mu_weight_extremes(ws, (1,)) == (1, -1)


def test_extremes_central_mu(rs_factory):
    ws = adjoint_weight_system(rs_factory("B", 2))
    assert mu_weight_extremes(ws, (0, 0)) == (0, 0)


def test_extremes_a2_highest_root(rs_factory):
    ws = adjoint_weight_system(rs_factory("A", 2))
    assert mu_weight_extremes(ws, (1, 1)) == (2, -2)


def test_extremes_empty_system(rs_factory):
    rs = rs_factory("A", 1)
    empty = WeightSystem(rs, "empty", {}, 0)
    with pytest.raises(EmptySystem):
        mu_weight_extremes(empty, (1,))


# -- graded module -----------------------------------------------------


def test_module_a1_adjoint(rs_factory):
    ws = adjoint_weight_system(rs_factory("A", 1))
    mod = griffiths_module(ws, (1,))
    assert mod.mults == {(2,): 0, (0,): 1, (-2,): 2}
    assert mod.total == 3


def test_module_central_mu_vanishes(rs_factory):
    ws = adjoint_weight_system(rs_factory("A", 2))
    mod = griffiths_module(ws, (0, 0))
    assert all(v == 0 for v in mod.mults.values())


def test_module_a1_standard(rs_factory):
    ws = irrep_weight_system(rs_factory("A", 1), (1,))
    mod = griffiths_module(ws, (1,))
    assert mod.mults == {(1,): 0, (-1,): 1}


def test_module_requires_central_kernel(rs_factory):
    trivial = irrep_weight_system(rs_factory("A", 2), (0, 0))
    with pytest.raises(CentralKernelViolated):
        griffiths_module(trivial, (1, 0))


def test_module_requires_dominant_mu(rs_factory):
    ws = adjoint_weight_system(rs_factory("A", 2))
    with pytest.raises(NotDominant):
        griffiths_module(ws, (1, -1))


# -- direct pairings and pairing sums ----------------------------------


def test_direct_pairings_anchors(rs_factory):
    a1 = rs_factory("A", 1)
    assert grif_pairings_direct(adjoint_weight_system(a1), (1,)) == (-4,)
    assert grif_pairings_direct(irrep_weight_system(a1, (1,)), (1,)) == (-1,)
    ws = adjoint_weight_system(rs_factory("A", 2))
    assert grif_pairings_direct(ws, (0, 0)) == (0, 0)
    assert grif_pairings_direct(ws, (1, 0)) == (-6, 0)


def test_pairing_sums(rs_factory):
    a1 = rs_factory("A", 1)
    assert weight_pairing_sum(adjoint_weight_system(a1), a1.roots[0]) == 8
    g2 = rs_factory("G", 2)
    ws = adjoint_weight_system(g2)
    long_root = next(r for r in g2.roots if r.length_sq == 6)
    short_root = next(r for r in g2.roots if r.length_sq == 2)
    assert weight_pairing_sum(ws, long_root) == 16  # short coroot
    assert weight_pairing_sum(ws, short_root) == 48  # long coroot
    std = irrep_weight_system(rs_factory("A", 2), (1, 0))
    assert weight_pairing_sum(std, rs_factory("A", 2).simple_roots[0]) == 2


def test_closed_form_anchors(rs_factory):
    a1 = rs_factory("A", 1)
    assert grif_pairings_closed(adjoint_weight_system(a1), (1,)) == (-4,)
    a2 = rs_factory("A", 2)
    assert grif_pairings_closed(adjoint_weight_system(a2), (1, 0)) == (-6, 0)
    b2 = rs_factory("B", 2)
    assert grif_pairings_closed(adjoint_weight_system(b2), (0, 1)) == (0, -12)


@pytest.mark.parametrize("family,rank", ORACLE_TYPES)
def test_direct_equals_closed_form(rs_factory, family, rank):
    """The brute-force module summation agrees with the closed form on
    every (rep, mu) pair of the small grid, exactly."""
    rs = rs_factory(family, rank)
    for ws in _systems(rs, max_coord=1):
        for mu in _mus(rank, max_coord=2):
            assert grif_pairings_direct(ws, mu) == grif_pairings_closed(ws, mu)


def test_rational_mu_allowed(rs_factory):
    ws = adjoint_weight_system(rs_factory("A", 1))
    mu = (Q(1, 2),)
    assert grif_pairings_direct(ws, mu) == grif_pairings_closed(ws, mu) == (-2,)


# -- length invariant --------------------------------------------------


def test_length_invariant_values(rs_factory):
    assert length_invariant(adjoint_weight_system(rs_factory("A", 2))) == 24
    assert length_invariant(adjoint_weight_system(rs_factory("G", 2))) == 96
    assert length_invariant(adjoint_weight_system(rs_factory("C", 3))) == 64


def test_length_ratio_law(rs_factory):
    """S(alpha^vee)/S(beta^vee) == (beta,beta)/(alpha,alpha); in the
    doubly-laced types the long-coroot value is twice the short-coroot
    one, in the triply-laced type three times."""
    for family, rank, lacing in [("B", 3, 2), ("C", 4, 2), ("F", 4, 2), ("G", 2, 3)]:
        rs = rs_factory(family, rank)
        ws = adjoint_weight_system(rs)
        short_len, long_len = rs.lengths
        s_long_coroot = weight_pairing_sum(
            ws, next(r for r in rs.roots if r.length_sq == short_len)
        )
        s_short_coroot = weight_pairing_sum(
            ws, next(r for r in rs.roots if r.length_sq == long_len)
        )
        assert s_long_coroot == lacing * s_short_coroot
        for a in rs.roots:
            for b in rs.roots:
                assert (
                    weight_pairing_sum(ws, a) * a.length_sq
                    == weight_pairing_sum(ws, b) * b.length_sq
                )


def test_adjoint_coxeter_law(rs_factory):
    """Simply laced: S(alpha^vee) == 4h for every root."""
    from grifchar import coxeter_number

    for family, rank in [("A", 3), ("D", 4), ("E", 6)]:
        rs = rs_factory(family, rank)
        ws = adjoint_weight_system(rs)
        h = coxeter_number(rs)
        assert all(weight_pairing_sum(ws, r) == 4 * h for r in rs.roots)


# -- proportionality report --------------------------------------------


def test_report_a1_adjoint(rs_factory):
    rep = proportionality(adjoint_weight_system(rs_factory("A", 1)), (1,))
    assert rep.grif_pairings == (-4,)
    assert rep.c == 4
    assert rep.ray_ok and rep.direct_eq_closed and rep.anti_dominant
    assert rep.levi == ()


def test_report_a1_standard(rs_factory):
    rep = proportionality(irrep_weight_system(rs_factory("A", 1), (1,)), (1,))
    assert rep.c == 1
    assert rep.grif_pairings == (-1,)
    assert rep.ray_ok


def test_report_a2_adjoint(rs_factory):
    rep = proportionality(adjoint_weight_system(rs_factory("A", 2)), (1, 1))
    assert rep.c == 6
    assert rep.grif_pairings == (-6, -6)
    assert rep.ray_ok


def test_report_levi_and_antidominance(rs_factory):
    rep = proportionality(adjoint_weight_system(rs_factory("A", 2)), (1, 0))
    assert rep.levi == (1,)
    assert rep.grif_pairings[0] < 0 and rep.grif_pairings[1] == 0
    assert rep.anti_dominant


def test_report_rejects_central_mu(rs_factory):
    ws = adjoint_weight_system(rs_factory("A", 2))
    with pytest.raises(CentralMu):
        proportionality(ws, (0, 0))


@pytest.mark.parametrize("family,rank", ORACLE_TYPES)
def test_c_independent_of_mu_and_rep_rays_proportional(rs_factory, family, rank):
    rs = rs_factory(family, rank)
    for ws in _systems(rs, max_coord=1):
        cs = {proportionality(ws, mu).c for mu in _mus(rank, 2)}
        assert len(cs) == 1, (family, rank, ws.label)
    # any two central-kernel systems give positively proportional vectors
    base = adjoint_weight_system(rs)
    for ws in _systems(rs, max_coord=1):
        for mu in _mus(rank, 1):
            g1 = grif_pairings_direct(base, mu)
            g2 = grif_pairings_direct(ws, mu)
            assert [x == 0 for x in g1] == [y == 0 for y in g2]
            for i in range(rank):
                for j in range(rank):
                    assert g1[i] * g2[j] == g1[j] * g2[i]
                if g1[i] != 0:
                    assert (g1[i] < 0) == (g2[i] < 0)


def test_scaling_covariance(rs_factory):
    ws = adjoint_weight_system(rs_factory("B", 2))
    for mu in _mus(2, 2):
        g = grif_pairings_direct(ws, mu)
        for k in (2, 3):
            scaled = tuple(k * m for m in mu)
            assert grif_pairings_direct(ws, scaled) == tuple(k * x for x in g)


# -- weight-space pairing ----------------------------------------------


def test_deligne_pairing_a1(rs_factory):
    ws = adjoint_weight_system(rs_factory("A", 1))
    assert deligne_pairing(ws, (1,), (1,)) == 2
    # <grif, mu> = -(mu, mu)_V for mu = (1): direct pairing is (-4),
    # alpha-coordinates (-2), so <grif, mu> = -2
    g = grif_pairings_direct(ws, (1,))
    assert Q(g[0], 2) == -deligne_pairing(ws, (1,), (1,))


def test_deligne_symmetry(rs_factory):
    ws = adjoint_weight_system(rs_factory("B", 2))
    for nu in _mus(2, 2):
        for nu2 in _mus(2, 2):
            assert deligne_pairing(ws, nu, nu2) == deligne_pairing(ws, nu2, nu)


@pytest.mark.parametrize("family,rank", ORACLE_TYPES)
def test_deligne_identity_on_basis_coweights(rs_factory, family, rank):
    """The determinant character corresponds to -mu under the pairing:
    its simple-root coordinates equal -(mu, e_i)_V for every basis
    coweight e_i."""
    rs = rs_factory(family, rank)
    inv = rs.cartan_inv
    for ws in _systems(rs, max_coord=1):
        for mu in _mus(rank, 1):
            g = grif_pairings_direct(ws, mu)
            # simple-root coordinates of the character
            x = [
                sum(inv[j][i] * g[j] for j in range(rank)) for i in range(rank)
            ]
            for i in range(rank):
                e_i = tuple(int(i == j) for j in range(rank))
                assert x[i] == -deligne_pairing(ws, mu, e_i)


def test_deligne_gram_positive_definite(rs_factory):
    for family, rank in [("A", 2), ("B", 2), ("G", 2), ("C", 3)]:
        rs = rs_factory(family, rank)
        gram = deligne_gram(adjoint_weight_system(rs))
        assert all(gram[i][j] == gram[j][i] for i in range(rank) for j in range(rank))
        for k in range(1, rank + 1):
            assert _minor(gram, k) > 0


def _minor(gram, k):
    m = [list(row[:k]) for row in gram[:k]]
    det = Q(1)
    for c in range(k):
        piv = next((r for r in range(c, k) if m[r][c] != 0), None)
        if piv is None:
            return Q(0)
        if piv != c:
            m[c], m[piv] = m[piv], m[c]
            det = -det
        det *= m[c][c]
        for r in range(c + 1, k):
            if m[r][c] != 0:
                f = m[r][c] / m[c][c]
                m[r] = [a - f * b for a, b in zip(m[r], m[c])]
    return det


def test_simply_laced_ray_has_no_form_dependence(rs_factory):
    """When every root pairing nonzero with mu has one length, the
    pairing vector is a positive multiple of -(<alpha_i, mu>)_i."""
    for family, rank in [("A", 3), ("D", 4), ("E", 6)]:
        rs = rs_factory(family, rank)
        ws = adjoint_weight_system(rs)
        for mu in _mus(rank, 1):
            g = grif_pairings_direct(ws, mu)
            ratios = {Q(-gi, mi) for gi, mi in zip(g, mu) if mi}
            assert len(ratios) == 1
            assert ratios.pop() > 0
            assert all(gi == 0 for gi, mi in zip(g, mu) if not mi)
