"""Reference table of Coxeter numbers and adjoint pairing sums per
family, with from-scratch recomputation at representative ranks.

For the adjoint representation, S(alpha^vee) depends only on the length
of alpha; the table rows record the simply-laced value or the pair
(S for short coroots, S for long coroots).  A coroot alpha^vee is short
exactly when the root alpha is long.  The gamma column is a stored
constant (its definition lives outside this package and is not
independently computed here); for simply-laced rows it must equal h^2,
which is asserted against the computed Coxeter number.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Optional

from .rootdata import RootSystemSpec, coxeter_number, root_system
from .repweights import adjoint_weight_system
from .griffiths import weight_pairing_sum


@dataclass(frozen=True)
class FamilyRow:
    """One table row: symbolic formulas in the Bourbaki subscript n,
    plus the ranks this package instantiates for verification."""

    label: str
    family: str
    ranks: tuple
    n_of_rank: Callable  # Bourbaki subscript as a function of the rank
    h: Callable
    gamma: Callable
    s_simply_laced: Optional[Callable]
    s_short_coroot: Optional[Callable]
    s_long_coroot: Optional[Callable]
    h_text: str
    gamma_text: str
    s_texts: tuple  # (simply laced, short coroot, long coroot) cells


def _row(label, family, ranks, n_of_rank, h, gamma, ssl, ssc, slc, texts):
    return FamilyRow(label, family, tuple(ranks), n_of_rank, h, gamma,
                     ssl, ssc, slc, texts[0], texts[1], texts[2:])


FAMILY_ROWS = (
    _row("A_{n-1}", "A", range(1, 8), lambda r: r + 1,
         lambda n: n, lambda n: n * n, lambda n: 4 * n, None, None,
         ("n", "n^2", "4n", "", "")),
    _row("B_n", "B", range(2, 5), lambda r: r,
         lambda n: 2 * n, lambda n: (n + 1) * (4 * n - 2),
         None, lambda n: 4 * (2 * n - 1), lambda n: 8 * (2 * n - 1),
         ("2n", "(n+1)(4n-2)", "", "4(2n-1)", "8(2n-1)")),
    _row("C_n", "C", range(2, 5), lambda r: r,
         lambda n: 2 * n, lambda n: (n + 1) * (4 * n - 2),
         None, lambda n: 4 * (n + 1), lambda n: 8 * (n + 1),
         ("2n", "(n+1)(4n-2)", "", "4(n+1)", "8(n+1)")),
    _row("D_n", "D", (4,), lambda r: r,
         lambda n: 2 * (n - 1), lambda n: 4 * (n - 1) ** 2,
         lambda n: 8 * (n - 1), None, None,
         ("2(n-1)", "4(n-1)^2", "8(n-1)", "", "")),
    _row("G_2", "G", (2,), lambda r: 2,
         lambda n: 6, lambda n: 48, None, lambda n: 16, lambda n: 48,
         ("6", "48", "", "16", "48")),
    _row("F_4", "F", (4,), lambda r: 4,
         lambda n: 12, lambda n: 162, None, lambda n: 36, lambda n: 72,
         ("12", "162", "", "36", "72")),
    _row("E_6", "E", (6,), lambda r: 6,
         lambda n: 12, lambda n: 144, lambda n: 48, None, None,
         ("12", "144", "48", "", "")),
    _row("E_7", "E", (7,), lambda r: 7,
         lambda n: 18, lambda n: 324, lambda n: 72, None, None,
         ("18", "324", "72", "", "")),
    _row("E_8", "E", (8,), lambda r: 8,
         lambda n: 30, lambda n: 900, lambda n: 120, None, None,
         ("30", "900", "120", "", "")),
)


def computed_adjoint_sums(family: str, rank: int) -> dict:
    """Coxeter number and adjoint pairing sums computed from scratch.

    Returns {"h", "simply_laced"} plus either {"s"} or
    {"s_short_coroot", "s_long_coroot"}; the sums are verified to be
    constant on each length class before being reported.
    """
    rs = root_system(family, rank)
    ws = adjoint_weight_system(rs)
    by_root_length: dict = {}
    for r in rs.roots:
        s = weight_pairing_sum(ws, r)
        prev = by_root_length.setdefault(r.length_sq, s)
        if prev != s:
            raise AssertionError(
                f"{rs.spec}: S not constant on length class {r.length_sq}"
            )
    out = {"h": coxeter_number(rs), "simply_laced": len(by_root_length) == 1}
    if out["simply_laced"]:
        out["s"] = next(iter(by_root_length.values()))
    else:
        short_root, long_root = min(by_root_length), max(by_root_length)
        # short coroots belong to long roots and vice versa
        out["s_short_coroot"] = by_root_length[long_root]
        out["s_long_coroot"] = by_root_length[short_root]
    return out


def verify_family(row: FamilyRow) -> dict:
    """Recompute the row at each instantiated rank and compare against
    the formulas; simply-laced rows additionally assert h^2 == gamma."""
    per_rank = []
    ok = True
    for rank in row.ranks:
        n = row.n_of_rank(rank)
        got = computed_adjoint_sums(row.family, rank)
        want = {"h": row.h(n)}
        if row.s_simply_laced is not None:
            want["s"] = row.s_simply_laced(n)
        else:
            want["s_short_coroot"] = row.s_short_coroot(n)
            want["s_long_coroot"] = row.s_long_coroot(n)
        mismatches = sorted(
            k for k in want if got.get(k) != want[k]
        )
        if row.s_simply_laced is not None and got["h"] ** 2 != row.gamma(n):
            mismatches.append("gamma_vs_h_squared")
        if mismatches:
            ok = False
        per_rank.append(
            {
                "rank": rank,
                "n": n,
                "computed": got,
                "expected": want,
                "mismatches": mismatches,
            }
        )
    return {"label": row.label, "ok": ok, "per_rank": per_rank}


def verify_all() -> list:
    return [verify_family(row) for row in FAMILY_ROWS]


def representative_specs() -> list:
    return [
        RootSystemSpec(row.family, rank)
        for row in FAMILY_ROWS
        for rank in row.ranks
    ]
