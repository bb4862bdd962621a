"""Graded character dimensions and the level-one branching identity.

Oracles: A1 level-one theta functions, the even unimodular rank-8 lattice
theta series (r(m) = 240 sigma_3(m)), and eta-quotient series inversion.
All integer arithmetic, so comparisons are exact.
"""

import pytest

from wzw.characters import (
    g2_f4_branching_claim,
    graded_dims,
    graded_module,
    lattice_character_dims,
    lattice_shell_counts,
    verify_branching,
)
from wzw.lie import LieAlgebraId, build_root_datum

A1 = LieAlgebraId("A", 1)
G2 = LieAlgebraId("G", 2)
F4 = LieAlgebraId("F", 4)
E8 = LieAlgebraId("E", 8)


def sigma3(m):
    return sum(d**3 for d in range(1, m + 1) if m % d == 0)


def test_a1_level_one_vacuum_dims():
    # theta_{Z}(q)-style hand count: dims 1,3,4,7,13,19,29 at depths 0..6
    d = build_root_datum(A1)
    assert graded_dims(A1, 1, d.zero_weight(), 6) == (1, 3, 4, 7, 13, 19, 29)


def test_a1_level_one_charged_module_dims():
    d = build_root_datum(A1)
    assert graded_dims(A1, 1, d.fundamental_weight(1), 5) == (2, 2, 6, 8, 14, 20)


def test_e8_vacuum_matches_lattice_oracle():
    d = build_root_datum(E8)
    depth = 3
    lie_route = graded_dims(E8, 1, d.zero_weight(), depth)
    lattice_route = lattice_character_dims(depth)
    assert lie_route == lattice_route == (1, 248, 4124, 34752)


def test_lattice_shells_are_240_sigma3():
    shells = lattice_shell_counts(6)
    assert shells[0] == 1
    for m in range(1, 7):
        assert shells[m] == 240 * sigma3(m)


def test_lattice_character_depth_four():
    assert lattice_character_dims(4)[4] == 213126


def test_g2_level_one_module_heads():
    # cross-checked by convolving into the E8 identity below
    d = build_root_datum(G2)
    assert graded_dims(G2, 1, d.zero_weight(), 2) == (1, 14, 42)
    assert graded_dims(G2, 1, d.fundamental_weight(1), 2) == (7, 34, 119)


def test_f4_level_one_module_heads():
    d = build_root_datum(F4)
    assert graded_dims(F4, 1, d.zero_weight(), 2) == (1, 52, 377)
    assert graded_dims(F4, 1, d.fundamental_weight(4), 2) == (26, 299, 1702)


def test_module_cache_returns_same_object():
    d = build_root_datum(G2)
    m1 = graded_module(G2, 1, d.zero_weight())
    m2 = graded_module(G2, 1, d.zero_weight())
    assert m1 is m2


def test_multiplicity_handles_non_dominant_lookups():
    d = build_root_datum(A1)
    mod = graded_module(A1, 1, d.zero_weight())
    # alpha at depth 1 lies in the orbit of the zero weight's depth-1 shell
    assert mod.multiplicity((2,), 1) == mod.multiplicity((-2,), 1) == 1
    assert mod.multiplicity((2,), 0) == 0


def test_module_validation():
    d = build_root_datum(G2)
    with pytest.raises(ValueError):
        graded_module(G2, 0, d.zero_weight())
    with pytest.raises(ValueError):
        graded_module(G2, 1, d.weight((0, 1)))  # level 2 weight at level 1
    with pytest.raises(ValueError):
        graded_module(G2, 1, d.weight((-1, 0)))


def test_branching_claim_offsets():
    claim = g2_f4_branching_claim()
    assert [s.offset for s in claim.summands] == [0, 1]
    vac, charged = claim.summands
    assert [w.labels for w in vac.weights] == [(0, 0), (0, 0, 0, 0)]
    assert [w.labels for w in charged.weights] == [(1, 0), (0, 0, 0, 1)]


def test_branching_identity_depths_0_to_3():
    report = verify_branching(g2_f4_branching_claim(), 3)
    assert report.passed
    assert [r.ambient_dim for r in report.rows] == [1, 248, 4124, 34752]
    assert report.rows[1].summand_dims == (66, 182)
    assert report.rows[2].summand_dims == (1147, 2977)
    assert report.rows[3].summand_dims == (9578, 25174)


def test_branching_depth_one_component_dimensions():
    # 248 = (14 + 52) + 7*26
    claim = g2_f4_branching_claim()
    g2_adj = graded_dims(G2, 1, build_root_datum(G2).zero_weight(), 1)[1]
    f4_adj = graded_dims(F4, 1, build_root_datum(F4).zero_weight(), 1)[1]
    seven = graded_dims(G2, 1, build_root_datum(G2).fundamental_weight(1), 0)[0]
    twenty_six = graded_dims(F4, 1, build_root_datum(F4).fundamental_weight(4), 0)[0]
    assert (g2_adj, f4_adj, seven * twenty_six) == (14, 52, 182)
    assert g2_adj + f4_adj + seven * twenty_six == 248
    assert verify_branching(claim, 1).rows[1].combined == 248
