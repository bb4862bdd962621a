"""Graded dimensions of integrable highest-weight modules, with branching checks.

Depth n of a level-ell module collects the weight spaces n steps down the
imaginary direction.  Multiplicities come from the affine form of the
Freudenthal recursion: the shifted-norm difference (including the level
term 2 n (ell + h_vee)) multiplies the unknown, and the right side sums
over the real roots at every imaginary displacement plus the rank-fold
imaginary roots themselves.  The inner products are scaled by the common
denominator of the weight-space form, so everything stays in integers and
the final division is checked to be exact.

The even unimodular rank-8 lattice gives an independent route to the same
numbers for the E8 vacuum module: shell counts divided by the eighth power
of the Euler product.  The comparison lives in the test suite, not here.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .embeddings import trace_anomaly
from .lie import LieAlgebraId, Weight, build_root_datum


class GradedModule:
    """Weight multiplicity table of one integrable highest-weight module.

    Rows are filled a depth at a time; within a depth, candidates are
    processed by increasing height of highest + depth*theta - nu, so every
    same-depth lookup lands on an entry that already exists.
    """

    def __init__(self, algebra: LieAlgebraId, level: int, highest: Weight):
        if level < 1:
            raise ValueError("level must be a positive integer")
        if highest.algebra != algebra:
            raise ValueError(f"{highest} does not belong to {algebra}")
        d = build_root_datum(algebra)
        if not highest.is_dominant() or d.level_of(highest.labels) > level:
            raise ValueError(f"{highest} is not integrable at level {level}")
        self.algebra = algebra
        self.level = level
        self.highest = tuple(int(x) for x in highest.labels)
        self.datum = d

        scale = 1
        for row in d.form:
            for x in row:
                assert x > 0  # monotone norm pruning below relies on this
                scale = math.lcm(scale, x.denominator)
        self._scale = scale
        self._form_s = tuple(tuple(int(x * scale) for x in row) for row in d.form)
        self._theta = d.root_labels(d.highest_root)
        self._pos_root_labels = tuple(d.root_labels(b) for b in d.positive_roots)
        self._all_root_labels = self._pos_root_labels + tuple(
            tuple(-x for x in lab) for lab in self._pos_root_labels
        )
        self._kappa = level + d.dual_coxeter
        self._top_norm_s = self._norm_s(tuple(x + 1 for x in self.highest))
        self._mult = {(self.highest, 0): 1}
        self._candidate_rows: list = []
        self._done = -1

    # -- scaled integer form -------------------------------------------------

    def _ip_s(self, x, y):
        f = self._form_s
        n = len(x)
        return sum(x[i] * sum(f[i][j] * y[j] for j in range(n)) for i in range(n))

    def _norm_s(self, x):
        return self._ip_s(x, x)

    # -- candidate enumeration -------------------------------------------------

    def _ball(self, bound_s):
        """Dominant label vectors nu with scale*(nu+rho, nu+rho) <= bound_s."""
        n = self.datum.rank
        lab = [0] * n
        out = []

        def rec(i):
            if i == n:
                out.append(tuple(lab))
                return
            v = 0
            while True:
                lab[i] = v
                if self._norm_s(tuple(x + 1 for x in lab)) > bound_s:
                    break
                rec(i + 1)
                v += 1
            lab[i] = 0

        rec(0)
        return out

    def _candidates(self, k):
        """Dominant weights that can occur at depth k, by increasing height gap."""
        d = self.datum
        top = tuple(h + k * t for h, t in zip(self.highest, self._theta))
        bound = self._top_norm_s + 2 * k * self._kappa * self._scale
        rows = []
        for nu in self._ball(bound):
            coords = d.root_coords(tuple(a - b for a, b in zip(top, nu)))
            if all(c >= 0 and c.denominator == 1 for c in coords):
                rows.append((sum(int(c) for c in coords), nu))
        rows.sort()
        return tuple(nu for _, nu in rows)

    # -- multiplicities -------------------------------------------------

    def multiplicity(self, labels, depth: int) -> int:
        """Multiplicity of a weight at the given depth; 0 when absent.

        Weights beyond the level boundary are folded back by the affine
        reflection through theta, which lands at a strictly smaller depth.
        """
        if depth < 0:
            return 0
        d = self.datum
        lab = d.dominant(tuple(labels))
        while True:
            gap = self.level - d.level_of(lab)
            if gap >= 0:
                return self._mult.get((lab, depth), 0)
            lab = d.dominant(tuple(x + gap * t for x, t in zip(lab, self._theta)))
            depth += gap
            if depth < 0:
                return 0

    def _freudenthal(self, nu, k):
        d = self.datum
        scale = self._scale
        num = self._top_norm_s - self._norm_s(tuple(x + 1 for x in nu)) + 2 * k * self._kappa * scale
        assert num > 0, (nu, k)
        bound = self._top_norm_s + 2 * k * self._kappa * scale
        total = 0

        # real roots at displacement zero: positive roots, arbitrary step j
        for beta in self._pos_root_labels:
            q_prev = self._norm_s(tuple(x + 1 for x in nu))
            j = 1
            while True:
                w = tuple(x + j * b for x, b in zip(nu, beta))
                m = self.multiplicity(w, k)
                if m:
                    total += m * self._ip_s(w, beta)
                q = self._norm_s(tuple(x + 1 for x in w))
                if q > bound and q >= q_prev:
                    break  # the norm is convex in j, so no weight lies further out
                q_prev = q
                j += 1

        ell_s = self.level * scale
        for m_im in range(1, k + 1):
            # real roots m_im steps down: every finite root contributes
            for beta in self._all_root_labels:
                for j in range(1, k // m_im + 1):
                    w = tuple(x + j * b for x, b in zip(nu, beta))
                    m = self.multiplicity(w, k - j * m_im)
                    if m:
                        total += m * (self._ip_s(w, beta) + ell_s * m_im)
            # imaginary roots carry multiplicity = rank and only shift the depth
            for j in range(1, k // m_im + 1):
                m = self.multiplicity(nu, k - j * m_im)
                if m:
                    total += d.rank * m * ell_s * m_im

        val = 2 * total
        assert val % num == 0, (nu, k, val, num)
        mult = val // num
        assert mult >= 0, (nu, k, mult)
        return mult

    def _extend(self, depth):
        for k in range(self._done + 1, depth + 1):
            cands = self._candidates(k)
            self._candidate_rows.append(cands)
            for nu in cands:
                if k == 0 and nu == self.highest:
                    continue  # seeded; its norm difference is zero
                if self.datum.level_of(nu) > self.level:
                    continue  # reached through the reflection chain instead
                self._mult[(nu, k)] = self._freudenthal(nu, k)
            self._done = k

    def graded_dims(self, depth: int) -> tuple:
        """Dimensions of the depth-0 .. depth weight spaces."""
        self._extend(depth)
        out = []
        for k in range(depth + 1):
            total = 0
            for nu in self._candidate_rows[k]:
                m = self.multiplicity(nu, k)
                if m:
                    total += m * self.datum.orbit_size(nu)
            out.append(total)
        return tuple(out)


_MODULES: dict = {}


def graded_module(algebra: LieAlgebraId, level: int, highest: Weight) -> GradedModule:
    key = (algebra, level, tuple(highest.labels))
    mod = _MODULES.get(key)
    if mod is None:
        mod = GradedModule(algebra, level, highest)
        _MODULES[key] = mod
    return mod


def graded_dims(algebra: LieAlgebraId, level: int, highest: Weight, depth: int) -> tuple:
    return graded_module(algebra, level, highest).graded_dims(depth)


# ----------------------------------------------------------------------------
# independent oracle for the rank-8 level-one vacuum character


def lattice_shell_counts(n_max: int) -> list:
    """Vectors of squared norm 2m, m <= n_max, in the even unimodular rank-8 lattice.

    The lattice is the union of the even-coordinate-sum integer vectors and
    their shift by the all-halves vector.  Coordinates are doubled so the
    state space stays integral; both cosets need an even integer-part sum.
    """
    if n_max < 0:
        raise ValueError("n_max must be nonnegative")
    cap = 8 * n_max  # squared norm in quarter units
    counts = [0] * (n_max + 1)
    for h in (0, 1):
        dp = {(0, 0): 1}
        span = math.isqrt(cap) if cap else 0
        lo = -(span + h) // 2 - 1
        hi = span // 2 + 1
        for _ in range(8):
            new: dict = {}
            for (s, p), c in dp.items():
                for y in range(lo, hi + 1):
                    q = (2 * y + h) ** 2
                    if s + q > cap:
                        continue
                    key = (s + q, p ^ (y & 1))
                    new[key] = new.get(key, 0) + c
            dp = new
        for m in range(n_max + 1):
            counts[m] += dp.get((8 * m, 0), 0)
    return counts


def lattice_character_dims(depth: int) -> tuple:
    """Graded dimensions from the lattice theta series over the Euler product power."""
    shells = lattice_shell_counts(depth)
    prod = [0] * (depth + 1)
    prod[0] = 1
    for n in range(1, depth + 1):
        for _ in range(8):  # multiply by (1 - q^n) eight times
            for k in range(depth, n - 1, -1):
                prod[k] -= prod[k - n]
    inv = [0] * (depth + 1)
    inv[0] = 1
    for k in range(1, depth + 1):
        inv[k] = -sum(prod[j] * inv[k - j] for j in range(1, k + 1))
    return tuple(sum(shells[m] * inv[k - m] for m in range(k + 1)) for k in range(depth + 1))


# ----------------------------------------------------------------------------
# branching of one module into products of factor modules


@dataclass(frozen=True)
class BranchingSummand:
    weights: tuple  # one Weight per factor
    offset: int  # depth shift, a nonnegative integer


@dataclass(frozen=True)
class BranchingClaim:
    ambient: tuple  # (LieAlgebraId, level, Weight)
    factors: tuple  # ((LieAlgebraId, level), ...)
    summands: tuple


def _summand_offset(factors, weights, ambient) -> int:
    """Difference of conformal weights; must come out a nonnegative integer."""
    amb_alg, amb_level, amb_w = ambient
    off = sum(trace_anomaly(alg, lvl, w) for (alg, lvl), w in zip(factors, weights))
    off -= trace_anomaly(amb_alg, amb_level, amb_w)
    if off.denominator != 1 or off < 0:
        raise ValueError(f"summand offset {off} is not a nonnegative integer")
    return int(off)


def g2_f4_branching_claim() -> BranchingClaim:
    """Level-one vacuum of E8 against the G2 x F4 pair.

    Two summands: both factor vacua at offset zero, and the product of the
    7- and 26-dimensional modules one step down.  The offsets are computed
    from the trace anomalies, not hard-coded.
    """
    g2, f4, e8 = LieAlgebraId("G", 2), LieAlgebraId("F", 4), LieAlgebraId("E", 8)
    dg2, df4, de8 = build_root_datum(g2), build_root_datum(f4), build_root_datum(e8)
    ambient = (e8, 1, de8.zero_weight())
    factors = ((g2, 1), (f4, 1))
    pairs = (
        (dg2.zero_weight(), df4.zero_weight()),
        (dg2.fundamental_weight(1), df4.fundamental_weight(4)),
    )
    summands = tuple(
        BranchingSummand(p, _summand_offset(factors, p, ambient)) for p in pairs
    )
    return BranchingClaim(ambient, factors, summands)


@dataclass(frozen=True)
class BranchingRow:
    depth: int
    ambient_dim: int
    summand_dims: tuple

    @property
    def combined(self) -> int:
        return sum(self.summand_dims)

    @property
    def matches(self) -> bool:
        return self.combined == self.ambient_dim


@dataclass(frozen=True)
class BranchingReport:
    claim: BranchingClaim
    rows: tuple

    @property
    def passed(self) -> bool:
        return all(r.matches for r in self.rows)


def _convolve(a, b, depth):
    return tuple(sum(a[i] * b[k - i] for i in range(k + 1)) for k in range(depth + 1))


def verify_branching(claim: BranchingClaim, depth: int) -> BranchingReport:
    """Compare ambient graded dimensions with the sum over claimed summands."""
    if depth < 0:
        raise ValueError("depth must be nonnegative")
    amb_alg, amb_level, amb_w = claim.ambient
    ambient = graded_dims(amb_alg, amb_level, amb_w, depth)
    tables = []
    for s in claim.summands:
        conv = (1,) + (0,) * depth
        for (alg, lvl), w in zip(claim.factors, s.weights):
            conv = _convolve(conv, graded_dims(alg, lvl, w, depth), depth)
        tables.append(tuple(conv[k - s.offset] if k >= s.offset else 0 for k in range(depth + 1)))
    rows = tuple(
        BranchingRow(k, ambient[k], tuple(t[k] for t in tables)) for k in range(depth + 1)
    )
    return BranchingReport(claim, rows)
