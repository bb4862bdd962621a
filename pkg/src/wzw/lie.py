"""Exact root-system kernel for the simple Lie algebras A-G.

Conventions, fixed once and used everywhere downstream:

* Simple roots are numbered as in Bourbaki.  In particular G2 has the short
  simple root first (so the 7-dimensional representation is the first
  fundamental weight), F4 has the two long simple roots first (so the
  26-dimensional representation is the fourth fundamental weight), and the
  E8 marks read (2,3,4,6,5,4,3,2).
* Cartan matrix entries are a[i][j] = 2 (alpha_i, alpha_j) / (alpha_i, alpha_i),
  i.e. row i is scaled by the length of alpha_i.
* The invariant form is normalised so the highest root theta has (theta, theta) = 2.
  The symmetrizer d_i = (alpha_i, alpha_i)/2 then lies in {1, 1/2, 1/3}.
* Weights are tuples of Dynkin labels in the ordering above; roots are tuples of
  integer coordinates in the simple-root basis.

Everything here is exact rational arithmetic (ints and Fraction); no floats.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

Labels = tuple  # Dynkin labels, ints (or Fractions for internal shifted weights)
RootCoords = tuple  # integer coordinates in the simple-root basis

_SERIES = ("A", "B", "C", "D", "E", "F", "G")


@dataclass(frozen=True)
class LieAlgebraId:
    series: str
    rank: int

    def __post_init__(self):
        if self.series not in _SERIES:
            raise ValueError(f"unknown series {self.series!r}")
        n = self.rank
        ok = {
            "A": n >= 1,
            "B": n >= 2,
            "C": n >= 2,
            "D": n >= 3,
            "E": n in (6, 7, 8),
            "F": n == 4,
            "G": n == 2,
        }[self.series]
        if not ok:
            raise ValueError(f"invalid simple type {self.series}{n}")

    @staticmethod
    def from_string(name: str) -> "LieAlgebraId":
        name = name.strip()
        if len(name) < 2 or name[0].upper() not in _SERIES or not name[1:].isdigit():
            raise ValueError(f"cannot parse algebra name {name!r}")
        return LieAlgebraId(name[0].upper(), int(name[1:]))

    def __str__(self) -> str:
        return f"{self.series}{self.rank}"


@dataclass(frozen=True)
class Weight:
    algebra: LieAlgebraId
    labels: Labels

    def __post_init__(self):
        if len(self.labels) != self.algebra.rank:
            raise ValueError(
                f"{self.algebra} weight needs {self.algebra.rank} labels, got {len(self.labels)}"
            )

    def is_dominant(self) -> bool:
        return all(x >= 0 for x in self.labels)

    def __str__(self) -> str:
        return "[" + ",".join(str(x) for x in self.labels) + "]"


def _cartan_matrix(series: str, rank: int) -> list[list[int]]:
    n = rank
    a = [[2 * (i == j) for j in range(n)] for i in range(n)]

    def chain(i, j):  # single bond between nodes i, j (0-based)
        a[i][j] = a[j][i] = -1

    if series in ("A", "B", "C"):
        for i in range(n - 1):
            chain(i, i + 1)
        if series == "B" and n >= 2:
            a[n - 1][n - 2] = -2  # alpha_n short
        if series == "C" and n >= 2:
            a[n - 2][n - 1] = -2  # alpha_n long
    elif series == "D":
        for i in range(n - 2):
            chain(i, i + 1)
        chain(n - 3, n - 1)
    elif series == "E":
        # Bourbaki: chain 1-3-4-5-...-n with node 2 hanging off node 4.
        chain(0, 2)
        for i in range(2, n - 1):
            chain(i, i + 1)
        chain(1, 3)
    elif series == "F":
        chain(0, 1)
        chain(2, 3)
        a[1][2] = -1
        a[2][1] = -2
    elif series == "G":
        a[0][1] = -3
        a[1][0] = -1
    return a


def _symmetrizer(series: str, rank: int) -> list[Fraction]:
    one = Fraction(1)
    half = Fraction(1, 2)
    if series in ("A", "D", "E"):
        return [one] * rank
    if series == "B":
        return [one] * (rank - 1) + [half]
    if series == "C":
        return [half] * (rank - 1) + [one]
    if series == "F":
        return [one, one, half, half]
    if series == "G":
        return [Fraction(1, 3), one]
    raise ValueError(series)


def _invert(m: Sequence[Sequence[Fraction]]) -> list[list[Fraction]]:
    n = len(m)
    aug = [[Fraction(m[i][j]) for j in range(n)] + [Fraction(i == j) for j in range(n)] for i in range(n)]
    for col in range(n):
        piv = next(r for r in range(col, n) if aug[r][col] != 0)
        aug[col], aug[piv] = aug[piv], aug[col]
        inv = Fraction(1) / aug[col][col]
        aug[col] = [x * inv for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
    return [row[n:] for row in aug]


_WEYL_ORDER = {"E6": 51840, "E7": 2903040, "E8": 696729600, "F4": 1152, "G2": 12}


def _weyl_order(series: str, rank: int) -> int:
    n = rank
    if series == "A":
        return math.factorial(n + 1)
    if series in ("B", "C"):
        return 2**n * math.factorial(n)
    if series == "D":
        return 2 ** (n - 1) * math.factorial(n)
    return _WEYL_ORDER[f"{series}{n}"]


@dataclass(frozen=True)
class RootDatum:
    """Root data of a simple Lie algebra, all entries exact."""

    algebra: LieAlgebraId
    cartan: tuple  # rows a[i][j] = <alpha_j, alpha_i^vee>
    cartan_inv: tuple  # Fraction matrix
    symmetrizer: tuple  # d_i = (alpha_i, alpha_i)/2
    positive_roots: tuple  # simple-root coordinates, height-then-lex order
    highest_root: RootCoords
    comarks: tuple  # dual marks a_i^vee = d_i * marks_i, ints
    dual_coxeter: int
    form: tuple  # (omega_i, omega_j) as Fractions
    weyl_order: int
    _orbit_sizes: dict = field(default_factory=dict, compare=False, repr=False)

    # -- basic derived data ------------------------------------------------

    @property
    def rank(self) -> int:
        return self.algebra.rank

    @property
    def dimension(self) -> int:
        return 2 * len(self.positive_roots) + self.rank

    @property
    def marks(self) -> tuple:
        return self.highest_root

    @property
    def rho(self) -> Labels:
        return (1,) * self.rank

    def weight(self, labels: Iterable) -> Weight:
        return Weight(self.algebra, tuple(labels))

    def fundamental_weight(self, i: int) -> Weight:
        """1-based node index, matching the Bourbaki numbering."""
        if not 1 <= i <= self.rank:
            raise ValueError(f"node index {i} out of range for {self.algebra}")
        return self.weight(tuple(int(j == i - 1) for j in range(self.rank)))

    def zero_weight(self) -> Weight:
        return self.weight((0,) * self.rank)

    # -- coordinate changes ------------------------------------------------

    def root_labels(self, beta: RootCoords) -> Labels:
        """Dynkin labels of a vector given in simple-root coordinates."""
        return tuple(sum(self.cartan[i][j] * beta[j] for j in range(self.rank)) for i in range(self.rank))

    def root_coords(self, labels: Labels) -> tuple:
        return tuple(
            sum(self.cartan_inv[i][j] * labels[j] for j in range(self.rank)) for i in range(self.rank)
        )

    # -- invariant form ----------------------------------------------------

    def ip(self, x: Labels, y: Labels) -> Fraction:
        """(x, y) for two weights in Dynkin labels."""
        form = self.form
        n = self.rank
        return sum(x[i] * sum(form[i][j] * y[j] for j in range(n)) for i in range(n))

    def ip_weight_root(self, x: Labels, beta: RootCoords) -> Fraction:
        """(x, beta) with x in labels and beta in simple-root coordinates."""
        d = self.symmetrizer
        return sum(beta[i] * d[i] * x[i] for i in range(self.rank))

    def level_of(self, labels: Labels):
        """(lambda, theta); equals the affine level occupied by the weight."""
        return sum(a * x for a, x in zip(self.comarks, labels))

    # -- Weyl group action -------------------------------------------------

    def reflect(self, labels: Labels, i: int) -> Labels:
        c = labels[i]
        if c == 0:
            return labels
        col = self._cartan_cols[i]
        return tuple(x - c * col[j] for j, x in enumerate(labels))

    @property
    def _cartan_cols(self):
        # column i of the Cartan matrix = Dynkin labels of alpha_i
        cols = getattr(self, "_cols_cache", None)
        if cols is None:
            cols = tuple(tuple(self.cartan[j][i] for j in range(self.rank)) for i in range(self.rank))
            object.__setattr__(self, "_cols_cache", cols)
        return cols

    def dominant(self, labels: Labels) -> Labels:
        lab = labels
        while True:
            for i, x in enumerate(lab):
                if x < 0:
                    lab = self.reflect(lab, i)
                    break
            else:
                return lab

    def dominant_with_sign(self, labels: Labels):
        """Dominant representative and det(w); None if the weight sits on a wall."""
        lab = labels
        sign = 1
        while True:
            for i, x in enumerate(lab):
                if x < 0:
                    lab = self.reflect(lab, i)
                    sign = -sign
                    break
            else:
                if any(x == 0 for x in lab):
                    return None
                return lab, sign

    def weyl_orbit(self, labels: Labels) -> set:
        seen = {labels}
        frontier = [labels]
        while frontier:
            nxt = []
            for lab in frontier:
                for i in range(self.rank):
                    if lab[i] != 0:
                        img = self.reflect(lab, i)
                        if img not in seen:
                            seen.add(img)
                            nxt.append(img)
            frontier = nxt
        return seen

    def orbit_size(self, dominant_labels: Labels) -> int:
        size = self._orbit_sizes.get(dominant_labels)
        if size is None:
            size = len(self.weyl_orbit(dominant_labels))
            self._orbit_sizes[dominant_labels] = size
        return size


@lru_cache(maxsize=None)
def build_root_datum(algebra: LieAlgebraId) -> RootDatum:
    """Construct the full root datum; rejects invalid (series, rank) via LieAlgebraId."""
    series, n = algebra.series, algebra.rank
    cartan = _cartan_matrix(series, n)
    d = _symmetrizer(series, n)

    # d_i a_ij must be symmetric, otherwise the tables above are wrong
    for i in range(n):
        for j in range(n):
            assert d[i] * cartan[i][j] == d[j] * cartan[j][i], (series, n, i, j)

    roots = _positive_root_closure(cartan, n)
    top_height = max(sum(r) for r in roots)
    top = [r for r in roots if sum(r) == top_height]
    assert len(top) == 1, "highest root must be unique"
    theta = top[0]

    comarks = []
    for i in range(n):
        c = d[i] * theta[i]
        assert c.denominator == 1
        comarks.append(int(c))
    hvee = 1 + sum(comarks)

    cartan_inv = _invert(cartan)
    form = tuple(tuple(d[i] * cartan_inv[i][j] for j in range(n)) for i in range(n))

    datum = RootDatum(
        algebra=algebra,
        cartan=tuple(tuple(row) for row in cartan),
        cartan_inv=tuple(tuple(row) for row in cartan_inv),
        symmetrizer=tuple(d),
        positive_roots=roots,
        highest_root=theta,
        comarks=tuple(comarks),
        dual_coxeter=hvee,
        form=form,
        weyl_order=_weyl_order(series, n),
    )

    # normalisation check: (theta, theta) = 2
    assert datum.ip_weight_root(datum.root_labels(theta), theta) == 2
    return datum


def _positive_root_closure(cartan, n) -> tuple:
    """All positive roots, built upward from the simple roots by root strings."""
    simple = [tuple(int(i == j) for j in range(n)) for i in range(n)]
    known = set(simple)
    by_height = {1: list(simple)}
    h = 1
    while by_height.get(h):
        nxt = []
        for beta in by_height[h]:
            labels = [sum(cartan[i][j] * beta[j] for j in range(n)) for i in range(n)]
            for i in range(n):
                # p = how far the alpha_i string extends below beta
                p = 0
                down = list(beta)
                while True:
                    down[i] -= 1
                    if down[i] < 0 or tuple(down) not in known:
                        break
                    p += 1
                if p - labels[i] > 0:
                    up = list(beta)
                    up[i] += 1
                    cand = tuple(up)
                    if cand not in known:
                        known.add(cand)
                        nxt.append(cand)
        h += 1
        if nxt:
            by_height[h] = nxt
    ordered = sorted(known, key=lambda r: (sum(r), r))
    return tuple(ordered)


# ----------------------------------------------------------------------------
# module-level operations


def _check_same_algebra(d: RootDatum, *weights: Weight):
    for w in weights:
        if w.algebra != d.algebra:
            raise ValueError(f"weight {w} belongs to {w.algebra}, expected {d.algebra}")


def inner_product(d: RootDatum, x: Weight, y: Weight) -> Fraction:
    _check_same_algebra(d, x, y)
    return Fraction(d.ip(x.labels, y.labels))


def dual_coxeter(d: RootDatum) -> int:
    return d.dual_coxeter


def weyl_dimension(d: RootDatum, lam: Weight) -> int:
    _check_same_algebra(d, lam)
    if not lam.is_dominant():
        raise ValueError(f"{lam} is not dominant")
    num = Fraction(1)
    shifted = tuple(x + 1 for x in lam.labels)
    rho = d.rho
    for beta in d.positive_roots:
        num *= Fraction(d.ip_weight_root(shifted, beta), d.ip_weight_root(rho, beta))
    assert num.denominator == 1
    return int(num)


def _dominant_below(d: RootDatum, lam: Labels) -> list:
    """All dominant mu with lam - mu a nonnegative integer root combination.

    The inverse Cartan matrix has nonnegative entries, so the coefficients are
    confined to the box c <= A^{-1} lam.
    """
    n = d.rank
    bounds = []
    for row in d.cartan_inv:
        b = sum(row[j] * lam[j] for j in range(n))
        bounds.append(int(b))
    total = 1
    for b in bounds:
        total *= b + 1
    if total > 2_000_000:
        raise ValueError("weight system too large for exact enumeration")
    cols = d._cartan_cols
    out = []

    def rec(i, current):
        if i == n:
            if all(x >= 0 for x in current):
                out.append(tuple(current))
            return
        for c in range(bounds[i] + 1):
            rec(i + 1, [current[j] - c * cols[i][j] for j in range(n)])

    rec(0, list(lam))
    return out


def _dominant_multiplicities(d: RootDatum, lam: Labels) -> dict:
    """Freudenthal recursion, dominant weights only."""
    rho = d.rho
    lam_rho = tuple(x + 1 for x in lam)
    norm_top = d.ip(lam_rho, lam_rho)
    cands = _dominant_below(d, lam)
    height = {}
    for mu in cands:
        rc = d.root_coords(tuple(l - m for l, m in zip(lam, mu)))
        assert all(x.denominator == 1 and x >= 0 for x in rc)
        height[mu] = int(sum(rc))
    order = sorted(cands, key=lambda mu: (height[mu], mu))
    mult: dict = {}
    for mu in order:
        if height[mu] == 0:
            mult[mu] = 1
            continue
        rhs = Fraction(0)
        rc = d.root_coords(tuple(l - m for l, m in zip(lam, mu)))
        for beta in d.positive_roots:
            beta_labels = d.root_labels(beta)
            jmax = min(int(rc[i] / beta[i]) for i in range(d.rank) if beta[i])
            for j in range(1, jmax + 1):
                nu = tuple(m + j * b for m, b in zip(mu, beta_labels))
                m2 = mult.get(d.dominant(nu))
                if m2:
                    rhs += m2 * d.ip_weight_root(nu, beta)
        mu_rho = tuple(x + 1 for x in mu)
        denom = norm_top - d.ip(mu_rho, mu_rho)
        value = 2 * rhs / denom
        assert value.denominator == 1
        if value:
            mult[mu] = int(value)
    return mult


@dataclass(frozen=True)
class WeightSystem:
    highest: Weight
    multiplicities: dict  # Weight -> positive int, full Weyl-orbit closure

    @property
    def dimension(self) -> int:
        return sum(self.multiplicities.values())


@lru_cache(maxsize=None)
def _weight_system_cached(algebra: LieAlgebraId, lam: Labels):
    d = build_root_datum(algebra)
    dom = _dominant_multiplicities(d, lam)
    full = {}
    for mu, m in dom.items():
        for w in d.weyl_orbit(mu):
            full[w] = m
    return dom, full


def freudenthal_weights(d: RootDatum, lam: Weight) -> WeightSystem:
    _check_same_algebra(d, lam)
    if not lam.is_dominant():
        raise ValueError(f"{lam} is not dominant")
    _, full = _weight_system_cached(d.algebra, tuple(lam.labels))
    ws = WeightSystem(lam, {d.weight(k): v for k, v in full.items()})
    assert ws.dimension == weyl_dimension(d, lam)
    return ws


def tensor_decompose(d: RootDatum, lam: Weight, mu: Weight) -> dict:
    """Racah-Speiser: shift the weight system of one factor by rho and fold."""
    _check_same_algebra(d, lam, mu)
    for w in (lam, mu):
        if not w.is_dominant():
            raise ValueError(f"{w} is not dominant")
    if weyl_dimension(d, mu) > weyl_dimension(d, lam):
        lam, mu = mu, lam
    _, wts = _weight_system_cached(d.algebra, tuple(mu.labels))
    out: dict = {}
    base = tuple(x + 1 for x in lam.labels)  # lam + rho
    for nu, m in wts.items():
        shifted = tuple(b + v for b, v in zip(base, nu))
        folded = d.dominant_with_sign(shifted)
        if folded is None:
            continue
        dom, sign = folded
        target = tuple(x - 1 for x in dom)
        out[target] = out.get(target, 0) + sign * m
    result = {}
    for labels, m in sorted(out.items()):
        assert m >= 0, "Racah-Speiser produced a negative multiplicity"
        if m:
            result[d.weight(labels)] = m
    # dimension bookkeeping must close
    assert sum(m * weyl_dimension(d, w) for w, m in result.items()) == weyl_dimension(
        d, lam
    ) * weyl_dimension(d, mu)
    return result


def level_weights(d: RootDatum, level: int) -> list:
    """Dominant weights of level <= level, lexicographically ordered."""
    if level < 0:
        raise ValueError("level must be nonnegative")
    out = []
    comarks = d.comarks

    def rec(i, remaining, current):
        if i == d.rank:
            out.append(d.weight(tuple(current)))
            return
        c = 0
        while c * comarks[i] <= remaining:
            rec(i + 1, remaining - c * comarks[i], current + [c])
            c += 1

    rec(0, level, [])
    return sorted(out, key=lambda w: w.labels)
