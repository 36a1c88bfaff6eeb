"""n = 1 solver against independent closed-form oracles.

Cl(0,1) is the complex numbers: roots come straight from cmath.sqrt.
Cl(1,0) is the split algebra R(+)R via b0 +/- b1: componentwise real roots,
enumerated exhaustively.  Both oracles are independent of the solver path.
"""
import cmath
import math

import numpy as np
import pytest

from conftest import assert_root_set, closest, random_mv
from mvsqrt import Multivector, Signature, numeric_root_search, OracleConfig, sqrt

CL10 = Signature(1, 0)
CL01 = Signature(0, 1)


def complex_oracle(b):
    """All square roots of b0 + b1*i, as Cl(0,1) elements."""
    z = complex(b.coeffs[0], b.coeffs[1])
    if z == 0:
        return [Multivector.zero(CL01)]
    w = cmath.sqrt(z)
    return [Multivector(CL01, (w.real, w.imag)), Multivector(CL01, (-w.real, -w.imag))]


def split_oracle(b):
    """All square roots in R(+)R coordinates (u, v) = (b0+b1, b0-b1)."""
    u = b.coeffs[0] + b.coeffs[1]
    v = b.coeffs[0] - b.coeffs[1]
    if u < 0 or v < 0:
        return []
    us = [math.sqrt(u)] if u == 0 else [math.sqrt(u), -math.sqrt(u)]
    vs = [math.sqrt(v)] if v == 0 else [math.sqrt(v), -math.sqrt(v)]
    return [Multivector(CL10, (0.5 * (a + c), 0.5 * (a - c))) for a in us for c in vs]


def test_cl01_minus_one():
    roots = sqrt(Multivector.scalar(CL01, -1.0)).isolated
    assert_root_set(roots, [Multivector.basis(CL01, "e1"), -Multivector.basis(CL01, "e1")])


def test_cl10_four_and_no_root_fixtures():
    # B = 4 has four roots (+/-2 and +/-2 e1); recorded from the split oracle
    b = Multivector.scalar(CL10, 4.0)
    expected = split_oracle(b)
    assert len(expected) == 4
    assert_root_set(sqrt(b).isolated, expected)
    # B = 2 e1 maps to (2, -2): one negative component, no real roots
    b = Multivector(CL10, (0.0, 2.0))
    assert sqrt(b).isolated == []
    assert split_oracle(b) == []
    # the numeric oracle agrees over its search box
    assert numeric_root_search(b, OracleConfig(seed=3, n_starts=64)) == []


def test_cl10_generic_four_roots():
    b = Multivector(CL10, (5.0, 3.0))
    roots = sqrt(b).isolated
    assert len(roots) == 4
    assert_root_set(roots, split_oracle(b))


@pytest.mark.parametrize("span", [0.5, 3.0])
def test_cl01_matches_complex_oracle(rng, span):
    for _ in range(500):
        b = random_mv(CL01, rng, span)
        roots = sqrt(b).isolated
        assert_root_set(roots, complex_oracle(b), tol=1e-8)


@pytest.mark.parametrize("span", [0.5, 3.0])
def test_cl10_matches_split_oracle(rng, span):
    for _ in range(500):
        b = random_mv(CL10, rng, span)
        roots = sqrt(b).isolated
        assert_root_set(roots, split_oracle(b), tol=1e-8)


def test_dim1_diagnostics_explain_empty(rng):
    rs = sqrt(Multivector.scalar(CL10, -4.0))
    assert rs.isolated == [] and rs.families == []
    assert rs.diagnostics.rejected  # names the negative radicand
