"""The divisor-class relation on the moduli of stable curves, emitted exactly.

The relation equates 4 lambda + sum psi_i with the first Chern classes of
the two level-one bundle blocks plus boundary terms whose coefficients are
ratios of the closed-form dimension F.  Boundary strata carry a canonical
index: the irreducible stratum, or a genus split (h, A) identified with its
mirror (g-h, A-complement).  Everything is exact: F values live in the
quadratic field and the emitted coefficients are rationals.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .fusion import closed_form_dimension, closed_form_value


@dataclass(frozen=True, order=True)
class BoundaryIndex:
    """Canonical index of one boundary divisor.

    kind "irr" is the irreducible stratum (h and markings unused, set to -1
    and ()).  kind "red" stores the smaller-genus side; on ties the side
    containing marking 1 (or the empty set when there are no markings).
    """

    kind: str
    h: int = -1
    markings: tuple = ()

    def __str__(self) -> str:
        if self.kind == "irr":
            return "irr"
        body = ",".join(str(m) for m in self.markings)
        return f"({self.h},{{{body}}})"


IRR = BoundaryIndex("irr")


def _check_stable(g: int, n: int):
    if g < 0 or n < 0 or 2 * g - 2 + n <= 0:
        raise ValueError(f"(g, n) = ({g}, {n}) is not stable")


def reducible_index(g: int, n: int, h: int, markings) -> BoundaryIndex:
    """Canonical, stability-checked index for the stratum splitting off (h, A)."""
    _check_stable(g, n)
    a = tuple(sorted(set(markings)))
    if not 0 <= h <= g:
        raise ValueError(f"side genus {h} out of range for genus {g}")
    if any(m < 1 or m > n for m in a):
        raise ValueError(f"markings {a} not within 1..{n}")
    comp = tuple(m for m in range(1, n + 1) if m not in set(a))
    if h == 0 and len(a) < 2:
        raise ValueError(f"stratum ({h}, {a}) has an unstable genus-0 side")
    if g - h == 0 and len(comp) < 2:
        raise ValueError(f"stratum ({h}, {a}) has an unstable genus-0 complement side")
    other_h = g - h
    if h > other_h or (h == other_h and n >= 1 and 1 not in a):
        h, a = other_h, comp
    return BoundaryIndex("red", h, a)


def boundary_strata(g: int, n: int) -> list:
    """All boundary divisor indices of the (g, n) moduli space, canonical and sorted."""
    _check_stable(g, n)
    found = set()
    if g >= 1:
        found.add(IRR)
    for h in range(g + 1):
        for bits in range(1 << n):
            a = tuple(m for m in range(1, n + 1) if bits >> (m - 1) & 1)
            if h == 0 and len(a) < 2:
                continue
            if g - h == 0 and n - len(a) < 2:
                continue
            found.add(reducible_index(g, n, h, a))
    return sorted(found)


@dataclass(frozen=True)
class PicRelation:
    """4 lambda + sum psi_i = g2_block/F + f4_block + boundary combination."""

    g: int
    n: int
    hodge_coeff: Fraction
    psi_coeffs: tuple
    g2_block_coeff: Fraction
    f4_block_coeff: Fraction
    boundary: tuple  # ((BoundaryIndex, Fraction), ...) sorted by index

    def boundary_map(self) -> dict:
        return dict(self.boundary)


def _F(g: int, n: int) -> int:
    return closed_form_value(g, n)


def emit_relation(g: int, n: int) -> PicRelation:
    """Fill every coefficient of the relation from the closed form, exactly."""
    strata = boundary_strata(g, n)
    fgn = _F(g, n)
    if fgn == 0:
        raise ValueError(f"the closed-form dimension vanishes at (g, n) = ({g}, {n}); relation undefined")
    rows = []
    for s in strata:
        if s.kind == "irr":
            c = Fraction(_F(g - 1, n + 2), fgn)
        else:
            a = len(s.markings)
            c = Fraction(_F(s.h, a + 1) * _F(g - s.h, n - a + 1), fgn)
        rows.append((s, c))
    return PicRelation(
        g=g,
        n=n,
        hodge_coeff=Fraction(4),
        psi_coeffs=(Fraction(1),) * n,
        g2_block_coeff=Fraction(1, fgn),
        f4_block_coeff=Fraction(1),
        boundary=tuple(rows),
    )


@dataclass(frozen=True)
class ConsistencyReport:
    g: int
    n: int
    recursion_holds: bool
    recursion_values: tuple  # (F(g,n), F(g-1,n+2), F(g-1,n))
    boundary_numerators_positive: bool
    irr_coeff: Fraction
    irr_below_one: bool | None  # only meaningful for g >= 2, n = 0

    @property
    def passed(self) -> bool:
        ok = self.recursion_holds and self.boundary_numerators_positive
        if self.irr_below_one is not None:
            ok = ok and self.irr_below_one
        return ok


def relation_consistency(g: int, n: int) -> ConsistencyReport:
    """Exact checks: the F recursion in the quadratic field, positivity, irr bound."""
    if g < 1:
        raise ValueError("consistency checks need genus at least 1")
    lhs = closed_form_dimension(g, n)
    rhs = closed_form_dimension(g - 1, n + 2) + closed_form_dimension(g - 1, n)
    rel = emit_relation(g, n)
    positive = all(c > 0 for _, c in rel.boundary)
    irr_coeff = rel.boundary_map()[IRR]
    below = bool(irr_coeff < 1) if (g >= 2 and n == 0) else None
    return ConsistencyReport(
        g=g,
        n=n,
        recursion_holds=lhs == rhs,
        recursion_values=(_F(g, n), _F(g - 1, n + 2), _F(g - 1, n)),
        boundary_numerators_positive=positive,
        irr_coeff=irr_coeff,
        irr_below_one=below,
    )


def _rat(x: Fraction) -> str:
    return str(x)


def relation_json_obj(rel: PicRelation) -> dict:
    """The documented JSON shape; genuinely rational entries as "p/q" strings."""
    rhs = {
        "g2_block": _rat(rel.g2_block_coeff),
        "f4_block": int(rel.f4_block_coeff),
    }
    boundary = []
    for s, c in rel.boundary:
        if s.kind == "irr":
            rhs["irr"] = _rat(c)
        else:
            boundary.append({"h": s.h, "A": list(s.markings), "coeff": _rat(c)})
    rhs["boundary"] = boundary
    return {
        "lhs": {"lambda": int(rel.hodge_coeff), "psi": [int(p) for p in rel.psi_coeffs]},
        "rhs": rhs,
    }
