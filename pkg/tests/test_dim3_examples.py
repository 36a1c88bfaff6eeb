"""The eight worked n = 3 fixtures, frozen from the closed radical forms."""
import math

import numpy as np
import pytest

from conftest import assert_root_set, closest, dist_inf
from mvsqrt import (
    Multivector,
    Signature,
    TTPair,
    parse_mv,
    residual,
    solve_sS,
    solve_tT,
    sqrt,
)
from mvsqrt.roots import ss_equal_fastpath

S2 = math.sqrt(2.0)
S5 = math.sqrt(5.0)
CL30, CL21, CL12, CL03 = Signature(3, 0), Signature(2, 1), Signature(1, 2), Signature(0, 3)


# --- Example 1: Cl(3,0), B = e1 - 2 e23 ------------------------------------

def _ex1_expected(sig):
    c1 = math.sqrt(S5 - 2)
    c2 = math.sqrt(S5 + 2)
    a1 = Multivector.from_terms(sig, {
        "1": -0.5 * c2 * (S5 - 2), "e1": -0.5 * c2,
        "e23": -0.5 * c2 * (S5 - 2), "e123": 0.5 * c2})
    a3 = Multivector.from_terms(sig, {
        "1": 0.5 * c1 * (S5 + 2), "e1": 0.5 * c1,
        "e23": -0.5 * c1 * (S5 + 2), "e123": 0.5 * c1})
    return [a1, -a1, a3, -a3]


def test_example1_roots():
    b = parse_mv("e1 - 2 e23", CL30)
    rs = sqrt(b)
    assert_root_set(rs.isolated, _ex1_expected(CL30), tol=1e-9)
    assert rs.families == []
    for root in rs.isolated:
        assert residual(root, b) <= 1e-10


def test_example1_tT_and_sS():
    b = parse_mv("e1 - 2 e23", CL30)
    pairs = solve_tT(b)
    assert sorted((round(p.t, 12), round(p.T, 12)) for p in pairs) == [(-0.25, 0.5), (0.25, -0.5)]
    c1 = math.sqrt(S5 - 2)
    c2 = math.sqrt(S5 + 2)
    got = solve_sS(TTPair(0.25, -0.5), CL30)
    want = {(round(c2 / 2, 12), round(c1 / 2, 12)), (round(-c2 / 2, 12), round(-c1 / 2, 12))}
    assert {(round(s, 12), round(S, 12)) for s, S in got} == want


# --- Example 2: Cl(3,0), B = -1 + e3 - e12 + e123/2 ------------------------

def test_example2_roots():
    b = parse_mv("-1 + e3 - e12 + 0.5 e123", CL30)
    rs = sqrt(b)
    a1 = Multivector.from_terms(CL30, {"1": -0.5, "e12": 1.0, "e123": -0.5})
    a3 = Multivector.from_terms(CL30, {"e3": 0.5, "e12": 0.5, "e123": -1.0})
    assert_root_set(rs.isolated, [a1, -a1, a3, -a3], tol=1e-9)
    # the generic pair has s = S = +/- 1/2, the other comes from (s=0, S=+/-1)
    from mvsqrt import to_symmetric
    forms = sorted((round(to_symmetric(r).s, 9), round(to_symmetric(r).S, 9))
                   for r in rs.isolated)
    assert forms == [(-0.5, -0.5), (0.0, -1.0), (0.0, 1.0), (0.5, 0.5)]


def test_example2_fastpath_agrees_with_generic():
    # the closed s = S short form must reproduce the generic pipeline's scalars
    b = parse_mv("-1 + e3 - e12 + 0.5 e123", CL30)
    fast = {(round(s, 12), round(S, 12)) for s, S in ss_equal_fastpath(b, +1)}
    assert fast == {(0.5, 0.5), (-0.5, -0.5)}


# --- Example 3: Cl(3,0), the center ----------------------------------------

def test_example3_center_roots_and_family(rng):
    b = parse_mv("-1 + e123", CL30)
    rs = sqrt(b)
    c1 = math.sqrt(-0.5 + 1 / S2)
    c2 = math.sqrt(0.5 + 1 / S2)
    iso = Multivector.from_terms(CL30, {"1": c1, "e123": c2})
    assert_root_set(rs.isolated, [iso, -iso], tol=1e-9)
    fams = [f for f in rs.families if f.case_tag == "sS-zero"]
    assert fams and all(f.dimension == 4 for f in fams)
    for _ in range(100):
        fam = fams[rng.integers(len(fams))]
        p = rng.uniform(-3, 3, 4)
        assert fam.is_valid(p)
        assert residual(fam.evaluate(p), b) <= 1e-9


def test_example3_off_center_is_empty():
    rs = sqrt(parse_mv("e1 + e12", CL30))
    assert rs.isolated == [] and rs.families == []


# --- Example 4: quaternion inside Cl(3,0) ----------------------------------

def test_example4_quaternion():
    b = parse_mv("1 + e12 - e13 + e23", CL30)
    rs = sqrt(b)
    odd = Multivector.from_terms(CL30, {"e1": 1 / S2, "e2": 1 / S2, "e3": 1 / S2, "e123": 1 / S2})
    even = Multivector.from_terms(CL30, {"1": 3, "e12": 1, "e13": -1, "e23": 1}).scale(1 / math.sqrt(6))
    assert_root_set(rs.isolated, [odd, -odd, even, -even], tol=1e-9)
    # the even-subalgebra pair stays inside the quaternion subalgebra
    assert closest(rs.isolated, even) <= 1e-9


# --- Example 5: Cl(1,2), same input as Example 1 ----------------------------

def test_example5_cl12():
    b = parse_mv("e1 - 2 e23", CL12)
    rs = sqrt(b)
    c1 = math.sqrt(S5 - 2)
    c2 = math.sqrt(S5 + 2)
    a1 = Multivector.from_terms(CL12, {"1": -c1 / 2, "e1": -c2 / 2, "e23": -c1 / 2, "e123": c2 / 2})
    a3 = Multivector.from_terms(CL12, {"1": -c2 / 2, "e1": -c1 / 2, "e23": c2 / 2, "e123": -c1 / 2})
    assert_root_set(rs.isolated, [a1, -a1, a3, -a3], tol=1e-9)
    for root in rs.isolated:
        assert residual(root, b) <= 1e-10


# --- Example 6: Cl(0,3), same input ------------------------------------------

def test_example6_cl03():
    b = parse_mv("e1 - 2 e23", CL03)
    rs = sqrt(b)
    d1 = math.sqrt(2 - math.sqrt(3))
    d2 = math.sqrt(2 + math.sqrt(3))
    d3 = S2 - math.sqrt(6)
    a1 = Multivector.from_terms(CL03, {"1": d1 / 2, "e1": d2 / 2, "e23": -d1 / 2, "e123": d2 / 2})
    a2 = Multivector.from_terms(CL03, {"1": -d2 / 2, "e1": d3 / 4, "e23": d2 / 2, "e123": -1 / (2 * d2)})
    assert_root_set(rs.isolated, [a1, a2, -a2, -a1], tol=1e-9)
    # printed roots pair up as A1 = -A4 and A2 = -A3
    assert closest(rs.isolated, -a1) <= 1e-9 and closest(rs.isolated, -a2) <= 1e-9


def test_example6_tT():
    pairs = solve_tT(parse_mv("e1 - 2 e23", CL03))
    found = {(round(p.T, 12), round(p.t, 12)) for p in pairs}
    assert (0.5, 0.25) in found and (-0.5, -0.25) in found


# --- Example 7: Cl(0,3) special cases ----------------------------------------

def test_example7_family_matches_printed_form():
    b = parse_mv("-e3 + e12 + 4 e123", CL03)
    rs = sqrt(b, probe_points=10_000)
    assert rs.isolated == []
    fams = [f for f in rs.families if f.case_tag == "sS-plus"]
    assert fams and all(f.dimension == 2 and f.free_params == ("V2", "V3") for f in fams)
    c1 = math.sqrt(S5 - 2)
    c2 = math.sqrt(S5 + 2)
    c3 = 6 - S5

    def printed_a1(v2, v3):
        rad = math.sqrt(-4 * v2 * v2 + 4 * (c1 - v3) * v3 + c3)
        return Multivector.from_terms(CL03, {
            "1": -c2 / 2, "e1": -0.5 * rad, "e2": -v2, "e3": c1 - v3,
            "e12": -v3, "e13": v2, "e23": -0.5 * rad, "e123": -c2 / 2})

    for v2, v3 in [(0.5, 0.0), (0.1, 0.2), (-0.4, 0.3)]:
        target = printed_a1(v2, v3)
        assert residual(target, b) <= 1e-9
        hit = min(dist_inf(f.evaluate((v2, v3)), target)
                  for f in fams if f.is_valid((v2, v3)))
        assert hit <= 1e-9
    # the note's spot check: V2 = 1/2, V3 = 0 gives a real root
    sample = printed_a1(0.5, 0.0)
    assert residual(sample, b) <= 1e-9


def test_example7_infeasible_family():
    b = parse_mv("-e3 + e12", CL03)
    rs = sqrt(b, probe_points=10_000)
    assert rs.isolated == []
    assert rs.families, "the s = S branch exists but is infeasible"
    assert all(f.probe_feasible == 0 for f in rs.families)
    assert all(f.probe_points >= 10_000 for f in rs.families)
    assert any("no feasible sample" in note for note in rs.diagnostics.notes)


# --- Example 8: Cl(2,1) -------------------------------------------------------

def _ex8_expected():
    c1 = math.sqrt(2 + S2)
    c2 = math.sqrt(2 - S2)
    reps = [
        {"e2": c1 / 2, "e23": -c1 / 2, "e123": -c2 / S2},
        {"e2": -1 / (S2 * c1), "e23": 1 / (S2 * c1), "e123": c1 / S2},
        {"1": c2 / S2, "e1": c1 / 2, "e13": c1 / 2},
        {"1": c1 / S2, "e1": 1 / (S2 * c1), "e13": 1 / (S2 * c1)},
        {"1": c2 / 2, "e1": -c2 / (2 * S2), "e2": -c1 / (2 * S2),
         "e13": -c2 / (2 * S2), "e23": c1 / (2 * S2), "e123": c1 / 2},
        {"1": c1 / 2, "e1": c1 / (2 * S2), "e2": -c2 / (2 * S2),
         "e13": c1 / (2 * S2), "e23": c2 / (2 * S2), "e123": -1 / (S2 * c1)},
        {"1": c1 / 2, "e1": c1 / (2 * S2), "e2": c2 / (2 * S2),
         "e13": c1 / (2 * S2), "e23": -c2 / (2 * S2), "e123": 1 / (S2 * c1)},
        {"1": -c2 / 2, "e1": c2 / (2 * S2), "e2": -c1 / (2 * S2),
         "e13": c2 / (2 * S2), "e23": c1 / (2 * S2), "e123": c1 / 2},
    ]
    out = []
    for terms in reps:
        a = Multivector.from_terms(CL21, terms)
        out += [a, -a]
    return out


def test_example8_no_roots():
    rs = sqrt(parse_mv("e1 - 2 e23", CL21))
    assert rs.isolated == [] and rs.families == []
    assert any("pruned" in note for note in rs.diagnostics.rejected)


def test_example8_sixteen_roots():
    b = parse_mv("2 + e1 + e13", CL21)
    rs = sqrt(b)
    expected = _ex8_expected()
    assert len(rs.isolated) == 16
    assert_root_set(rs.isolated, expected, tol=1e-9)


def test_example8_tT_pairs():
    pairs = solve_tT(parse_mv("2 + e1 + e13", CL21))
    got = {(round(p.T, 12), round(p.t, 12)) for p in pairs}
    want = {(round((2 - S2) / 4, 12), 0.0), (round((2 + S2) / 4, 12), 0.0),
            (0.5, round(-1 / (2 * S2), 12)), (0.5, round(1 / (2 * S2), 12))}
    assert got == want


def test_cl21_negative_determinant_short_circuits():
    rs = sqrt(parse_mv("1 + e1 + e123", CL21))
    assert rs.isolated == [] and rs.families == []
    assert any("determinant negative" in note for note in rs.diagnostics.notes)


# --- cross-algebra sanity -----------------------------------------------------

def test_same_input_four_algebras_disagree():
    text = "e1 - 2 e23"
    counts = {}
    for sig in (CL30, CL12, CL03, CL21):
        counts[str(sig)] = len(sqrt(parse_mv(text, sig)).isolated)
    assert counts == {"Cl(3,0)": 4, "Cl(1,2)": 4, "Cl(0,3)": 4, "Cl(2,1)": 0}


def test_degenerate_scalar_vector_case():
    # bS = bI = 0 with nonzero b0: the degenerate (t,T) line must still fire
    b = parse_mv("1 + e1", CL30)
    rs = sqrt(b)
    base = Multivector.from_terms(CL30, {"1": 1 / S2, "e1": 1 / S2})
    assert_root_set(rs.isolated, [base, -base], tol=1e-9)
