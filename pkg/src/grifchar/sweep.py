"""Grid verification engine.

Runs the full invariant suite over (root system) x (representation) x
(dominant cocharacter) grids: oracle equivalence of the direct and
closed pairing computations, constancy of (alpha,alpha)*S, the length
ratio law, ray proportionality and mu-independence of the constant,
independence of the representation, the determinant-character identity
for the weight-space pairing and positive definiteness of its Gram
matrix, scaling covariance, p-closeness transfer, Weyl invariance of
multiplicities, and the dimension cross-check.

All bulk arithmetic is exact int64: weights have integer coordinates,
and rational quantities are carried at fixed integer scalings by
det(C) or det(C)^2.  Before each product the engine checks a magnitude
bound computed with Python integers from the actual operand maxima; a
grid large enough to threaten 2^62 raises SweepOverflow rather than
risk silent wraparound.  Reference Fraction implementations of the
same quantities live in the griffiths module; the test suite
cross-validates the two paths on small grids.
"""

from __future__ import annotations

import itertools
import os
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .rootdata import RootSystem, RootSystemSpec, build_root_system
from .repweights import (
    WeightSystem,
    adjoint_weight_system,
    irrep_weight_system,
    weight_matrix,
    weyl_dimension,
)
from .errors import SweepOverflow

_INT64_LIMIT = 1 << 62
_PRIMES = (2, 3, 5, 7)
_MU_CHUNK = 128
_WEYL_SAMPLE_WEIGHTS = 512

INVARIANTS = (
    "anti_dominance",
    "c_mu_independence",
    "deligne_gram_pd",
    "deligne_identity",
    "dimension_formula",
    "grif_pclose_equivalence",
    "length_invariant_constancy",
    "mult_weyl_invariance",
    "oracle_equivalence",
    "ratio_law",
    "ray_proportionality",
    "rep_independence",
    "scaling_covariance",
    "weight_sum_zero",
)


@dataclass(frozen=True)
class SweepConfig:
    """What to sweep.  Bounds are inclusive coordinate maxima; the seed
    fixes the Weyl-element sampling so runs are reproducible."""

    families: tuple
    max_weight_coord: int = 1
    max_mu_coord: int = 2
    include_adjoint: bool = False
    adjoint_only: bool = False
    seed: int = 0
    weyl_samples: int = 20
    scaling_factors: tuple = (2, 3)

    def __post_init__(self):
        if self.max_weight_coord < 0 or self.max_mu_coord < 0:
            raise ValueError("grid bounds must be nonnegative")


@dataclass
class SweepReport:
    tallies: dict = field(default_factory=dict)  # name -> [passed, failed]
    reps_tested: int = 0
    mus_tested: int = 0
    failures: list = field(default_factory=list)

    def add(self, name: str, passed: int, failed: int, context=None):
        cell = self.tallies.setdefault(name, [0, 0])
        cell[0] += passed
        cell[1] += failed
        if failed and len(self.failures) < 8 and context is not None:
            self.failures.append({"invariant": name, **context})

    def merge(self, other: "SweepReport"):
        for name, (p, f) in other.tallies.items():
            cell = self.tallies.setdefault(name, [0, 0])
            cell[0] += p
            cell[1] += f
        self.reps_tested += other.reps_tested
        self.mus_tested += other.mus_tested
        if len(self.failures) < 8:
            self.failures.extend(other.failures[: 8 - len(self.failures)])

    @property
    def ok(self) -> bool:
        return all(f == 0 for _, f in self.tallies.values())

    def counts(self, name: str):
        return tuple(self.tallies.get(name, (0, 0)))

    def summary_lines(self):
        for name in sorted(set(INVARIANTS) | set(self.tallies)):
            p, f = self.tallies.get(name, (0, 0))
            yield f"{name}\tpass={p}\tfail={f}"


def _guard(*bounds):
    for b in bounds:
        if b >= _INT64_LIMIT:
            raise SweepOverflow(f"int64 bound exceeded: {b} >= 2^62")


def _maxabs(arr) -> int:
    if not arr.size:
        return 0
    return max(abs(int(arr.max())), abs(int(arr.min())))


def dominant_mu_grid(rank: int, max_coord: int):
    """Nonzero dominant integer coweights with coordinates <= max_coord,
    in lexicographic order."""
    rows = [
        row
        for row in itertools.product(range(max_coord + 1), repeat=rank)
        if any(row)
    ]
    return np.array(rows, dtype=np.int64).reshape(len(rows), rank)


def dominant_weight_grid(rank: int, max_coord: int):
    """Nonzero dominant integer weights with coordinates <= max_coord."""
    return [
        row
        for row in itertools.product(range(max_coord + 1), repeat=rank)
        if any(row)
    ]


def _leading_minors_positive(gram_rows) -> bool:
    """Exact positivity of all leading principal minors (Python ints)."""
    n = len(gram_rows)
    mat = [[Fraction(x) for x in row] for row in gram_rows]
    for k in range(1, n + 1):
        m = [row[:k] for row in mat[:k]]
        det = Fraction(1)
        for col in range(k):
            piv = next((r for r in range(col, k) if m[r][col] != 0), None)
            if piv is None:
                return False
            if piv != col:
                m[col], m[piv] = m[piv], m[col]
                det = -det
            det *= m[col][col]
            inv = 1 / m[col][col]
            for r in range(col + 1, k):
                if m[r][col] != 0:
                    f = m[r][col] * inv
                    m[r] = [a - f * b for a, b in zip(m[r], m[col])]
        if det <= 0:
            return False
    return True


class _RepContext:
    """Precomputed int64 views of one weight system."""

    def __init__(self, rs: RootSystem, ws: WeightSystem):
        self.rs = rs
        self.ws = ws
        self.fw, self.mult = weight_matrix(ws)
        self.dim = int(self.mult.sum())
        self.fw_max = _maxabs(self.fw)
        self.mult_max = int(self.mult.max()) if self.mult.size else 0
        n = rs.rank
        self.adj = np.array(rs.cartan_adj, dtype=np.int64)
        self.det = rs.cartan_det
        self.d = np.array(rs.d, dtype=np.int64)
        self.coroots = np.array([r.coroot for r in rs.roots], dtype=np.int64)
        self.alphas = np.array([r.alpha for r in rs.roots], dtype=np.int64)
        self.lengths = np.array([r.length_sq for r in rs.roots], dtype=np.int64)
        index = {r.alpha: i for i, r in enumerate(rs.roots)}
        self.simple_idx = np.array([index[r.alpha] for r in rs.simple_roots])

        # det-scaled simple-root coordinates of the weights
        _guard(n * self.fw_max * _maxabs(self.adj))
        self.x = self.fw @ self.adj
        self.x_max = _maxabs(self.x)

        pu = self.fw @ self.coroots.T  # <chi, gamma^vee>, small integers
        pu_max = _maxabs(pu)
        _guard(self.dim * pu_max * pu_max)
        self.s_all = ((pu * pu) * self.mult[:, None]).sum(axis=0)
        self.s_simple = self.s_all[self.simple_idx]

        li = self.lengths * self.s_all
        self.length_invariant = int(li[0]) if li.size else 0
        self.length_invariant_ok = bool((li == li[0]).all())

        _guard(self.dim * self.x_max * self.x_max)
        self.gram = self.x.T @ (self.mult[:, None] * self.x)


def _ratio_law_ok(ctx: _RepContext) -> bool:
    """S(alpha^vee) is constant on each length class and the class
    values differ exactly by the lacing ratio."""
    by_len = {}
    for length, s in zip(ctx.lengths.tolist(), ctx.s_all.tolist()):
        by_len.setdefault(length, set()).add(s)
    if any(len(v) != 1 for v in by_len.values()):
        return False
    if len(by_len) == 1:
        return True
    short_len, long_len = min(by_len), max(by_len)
    lacing = long_len // short_len
    s_short_root = next(iter(by_len[short_len]))
    s_long_root = next(iter(by_len[long_len]))
    return s_short_root == lacing * s_long_root


def _class_slices(ctx: _RepContext):
    groups = {}
    for i, length in enumerate(ctx.lengths.tolist()):
        groups.setdefault(length, []).append(i)
    return [np.array(ix) for _, ix in sorted(groups.items())]


def _pclose_flags(absvals, classes, primes):
    """Per mu row, per prime: does 'max <= (p-1) * min nonzero' hold in
    every orbit class?  absvals has shape (#mu, #roots)."""
    m = absvals.shape[0]
    flags = np.ones((m, len(primes)), dtype=bool)
    big = np.iinfo(np.int64).max
    for idx in classes:
        sub = absvals[:, idx]
        vmax = sub.max(axis=1)
        vmin = np.where(sub == 0, big, sub).min(axis=1)
        has_nz = vmax > 0
        for j, p in enumerate(primes):
            flags[:, j] &= ~has_nz | (vmax <= (p - 1) * vmin)
    return flags


def _tally_rows(report, name, ok_rows, mu, where):
    good = int(ok_rows.sum())
    bad = int(ok_rows.size) - good
    ctx = None
    if bad:
        first = int(np.nonzero(~ok_rows)[0][0])
        ctx = {**where, "mu": mu[first].tolist()}
    report.add(name, good, bad, context=ctx)


def _check_rep(ctx: _RepContext, mu_all, report: SweepReport, cfg: SweepConfig,
               baseline, rng: random.Random):
    rs, ws = ctx.rs, ctx.ws
    where = {"system": str(rs.spec), "rep": ws.label}
    n = rs.rank
    det = ctx.det

    report.add("length_invariant_constancy", int(ctx.length_invariant_ok),
               int(not ctx.length_invariant_ok), context=where)
    ratio_ok = _ratio_law_ok(ctx)
    report.add("ratio_law", int(ratio_ok), int(not ratio_ok), context=where)
    zsum_ok = bool(((ctx.mult[:, None] * ctx.fw).sum(axis=0) == 0).all())
    report.add("weight_sum_zero", int(zsum_ok), int(not zsum_ok), context=where)

    if ws.label == "ad":
        expected_dim = len(rs.roots) + n
    else:
        lam = tuple(int(v) for v in ws.label[3:].split(","))
        expected_dim = weyl_dimension(rs, lam)
    dim_ok = ctx.dim == expected_dim
    report.add("dimension_formula", int(dim_ok), int(not dim_ok), context=where)

    pd_ok = _leading_minors_positive(ctx.gram.tolist())
    report.add("deligne_gram_pd", int(pd_ok), int(not pd_ok), context=where)

    _weyl_invariance(ctx, report, cfg, rng, where)

    L = ctx.length_invariant
    classes = _class_slices(ctx)
    c_value = None
    c_ok = True

    for start in range(0, mu_all.shape[0], _MU_CHUNK):
        mu = mu_all[start : start + _MU_CHUNK]
        m = mu.shape[0]
        mu_max = int(mu.max())
        y = ctx.adj @ mu.T  # (n, m), small integers
        _guard(n * ctx.fw_max * _maxabs(y))
        p_pair = ctx.fw @ y  # det-scaled <chi, mu>, shape (weights, m)
        p_max = _maxabs(p_pair)
        _guard(ctx.mult_max * 2 * p_max, ctx.dim * 2 * p_max * ctx.fw_max)
        module = ctx.mult[:, None] * (p_pair.max(axis=0)[None, :] - p_pair)
        gd = module.T @ ctx.fw  # det-scaled direct pairings, (m, n)
        gd_max = _maxabs(gd)

        # direct summation vs closed form, exact
        _guard(2 * gd_max, det * mu_max * int(ctx.s_simple.max()))
        oracle_rows = (2 * gd == -det * mu * ctx.s_simple[None, :]).all(axis=1)
        _tally_rows(report, "oracle_equivalence", oracle_rows, mu, where)

        # ray proportionality: 4 d_i g_i == -L m_i det
        _guard(4 * int(ctx.d.max()) * gd_max, det * L * mu_max)
        ray_rows = (4 * ctx.d[None, :] * gd == -det * L * mu).all(axis=1)
        _tally_rows(report, "ray_proportionality", ray_rows, mu, where)

        # anti-dominant, strictly negative exactly off the Levi
        anti_rows = ((gd <= 0) & ((gd < 0) == (mu > 0))).all(axis=1)
        _tally_rows(report, "anti_dominance", anti_rows, mu, where)

        # empirical proportionality constant across i and across mu:
        # c = -4 d_i g_i / (det m_i) wherever m_i != 0, all equal
        num = -4 * ctx.d[None, :] * gd
        den = det * mu
        mask = mu != 0
        if c_value is None:
            t0, i0 = (int(v[0]) for v in np.nonzero(mask))
            c_value = Fraction(int(num[t0, i0]), int(den[t0, i0]))
        _guard(_maxabs(num) * c_value.denominator,
               _maxabs(den) * abs(c_value.numerator))
        same = num * c_value.denominator == den * c_value.numerator
        if not bool((same | ~mask).all()):
            c_ok = False

        # determinant character maps to -mu under the weight pairing:
        # simple-root coords of the character == -(mu, basis)_V, det^2 scale
        _guard(gd_max * n * _maxabs(ctx.adj), ctx.dim * p_max * ctx.x_max)
        lhs = gd @ ctx.adj
        rhs = (ctx.mult[:, None] * p_pair).T @ ctx.x
        id_rows = (lhs == -rhs).all(axis=1)
        _tally_rows(report, "deligne_identity", id_rows, mu, where)

        # p-closeness transfer between cocharacter and character side
        _guard(gd_max * n * _maxabs(ctx.coroots))
        rp = np.abs(ctx.alphas @ mu.T).T
        gp = np.abs(gd @ ctx.coroots.T)
        _guard(7 * max(_maxabs(rp), _maxabs(gp)))
        eq_rows = (_pclose_flags(rp, classes, _PRIMES)
                   == _pclose_flags(gp, classes, _PRIMES)).all(axis=1)
        _tally_rows(report, "grif_pclose_equivalence", eq_rows, mu, where)

        # rep independence: same positive ray as the family baseline
        if baseline is not None:
            base = baseline[start : start + m]
            _guard(gd_max * _maxabs(base))
            indep = _proportional_rows(gd, base)
            _tally_rows(report, "rep_independence", indep, mu, where)

        # scaling covariance on a small slice of the chunk
        sl = slice(0, min(m, 8))
        for k in cfg.scaling_factors:
            mu_k = k * mu[sl]
            yk = ctx.adj @ mu_k.T
            _guard(n * ctx.fw_max * _maxabs(yk))
            pk = ctx.fw @ yk
            _guard(ctx.mult_max * 2 * _maxabs(pk),
                   ctx.dim * 2 * _maxabs(pk) * ctx.fw_max)
            modk = ctx.mult[:, None] * (pk.max(axis=0)[None, :] - pk)
            gdk = modk.T @ ctx.fw
            scale_ok = bool((gdk == k * gd[sl]).all())
            report.add("scaling_covariance",
                       int(mu_k.shape[0]) if scale_ok else 0,
                       0 if scale_ok else int(mu_k.shape[0]),
                       context={**where, "factor": k})

        report.mus_tested += m

    report.add("c_mu_independence", int(c_ok), int(not c_ok), context=where)


def _proportional_rows(gd, base):
    """Rowwise: is gd[t] a positive rational multiple of base[t]?"""
    m, n = gd.shape
    out = ((gd == 0) == (base == 0)).all(axis=1)
    out &= (np.sign(gd) == np.sign(base)).all(axis=1)
    for i in range(n):
        for j in range(i + 1, n):
            out &= gd[:, i] * base[:, j] == gd[:, j] * base[:, i]
    return out


def _weyl_invariance(ctx, report, cfg, rng, where):
    """Check m(w chi) == m(chi) for sampled group elements, drawn as a
    random walk in the simple reflections (each block of letters
    composes with everything before it, so samples spread over the
    whole group)."""
    if cfg.weyl_samples <= 0:
        return
    rs = ctx.rs
    n = rs.rank
    cartan = np.array(rs.cartan, dtype=np.int64)
    w = ctx.fw.shape[0]
    if w > _WEYL_SAMPLE_WEIGHTS:
        idx = sorted(rng.sample(range(w), _WEYL_SAMPLE_WEIGHTS))
        sample = ctx.fw[idx]
        sample_m = ctx.mult[idx].tolist()
    else:
        sample = ctx.fw
        sample_m = ctx.mult.tolist()
    lookup = ctx.ws.weights
    arr = sample.copy()
    good = 0
    for _ in range(cfg.weyl_samples):
        for _ in range(4 * n):
            i = rng.randrange(n)
            arr -= np.outer(arr[:, i], cartan[i])
        good += all(
            lookup.get(tuple(row)) == m
            for row, m in zip(arr.tolist(), sample_m)
        )
    report.add("mult_weyl_invariance", good, cfg.weyl_samples - good,
               context=where)


def _baseline_pairings(ctx: _RepContext, mu_all):
    """Direct pairing matrix of the family's first representation, the
    reference ray for rep-independence."""
    out = np.empty((mu_all.shape[0], ctx.rs.rank), dtype=np.int64)
    for start in range(0, mu_all.shape[0], _MU_CHUNK):
        mu = mu_all[start : start + _MU_CHUNK]
        y = ctx.adj @ mu.T
        _guard(ctx.rs.rank * ctx.fw_max * _maxabs(y))
        p_pair = ctx.fw @ y
        _guard(ctx.dim * 2 * _maxabs(p_pair) * ctx.fw_max)
        module = ctx.mult[:, None] * (p_pair.max(axis=0)[None, :] - p_pair)
        out[start : start + mu.shape[0]] = module.T @ ctx.fw
    return out


def _family_report(spec: RootSystemSpec, cfg: SweepConfig) -> SweepReport:
    report = SweepReport()
    rs = build_root_system(spec)
    mu_all = dominant_mu_grid(rs.rank, cfg.max_mu_coord)
    if mu_all.shape[0] == 0:
        return report
    rng = random.Random(f"{cfg.seed}:{spec}")

    systems = []
    if cfg.include_adjoint or cfg.adjoint_only:
        systems.append(adjoint_weight_system(rs))
    if not cfg.adjoint_only:
        for lam in dominant_weight_grid(rs.rank, cfg.max_weight_coord):
            systems.append(irrep_weight_system(rs, lam))

    baseline = None
    for ws in systems:
        ctx = _RepContext(rs, ws)
        _check_rep(ctx, mu_all, report, cfg, baseline, rng)
        if baseline is None:
            baseline = _baseline_pairings(ctx, mu_all)
        report.reps_tested += 1
    return report


def run_checks(cfg: SweepConfig, workers: int | None = None) -> SweepReport:
    """Run the suite over every family in the config; deterministic for
    a fixed config regardless of worker count."""
    if workers is None:
        workers = max(1, int(os.environ.get("GRIF_THREADS", "1")))
    total = SweepReport()
    specs = list(cfg.families)
    if workers > 1 and len(specs) > 1:
        with ProcessPoolExecutor(max_workers=min(workers, len(specs))) as pool:
            parts = list(pool.map(_family_report, specs, itertools.repeat(cfg)))
    else:
        parts = [_family_report(spec, cfg) for spec in specs]
    for part in parts:
        total.merge(part)
    return total
