"""The Mat(2,C) image of Cl(3,0), the closed-form matrix square root, and the
complex-coefficient mismatch demonstration."""
import cmath
import math

import numpy as np
import pytest

from conftest import closest, random_mv
from mvsqrt import (
    AlgebraError,
    ComplexMultivector,
    Multivector,
    Signature,
    SullivanBranchError,
    demonstrate_mismatch,
    from_pauli,
    parse_mv,
    residual,
    sqrt,
    sullivan_sqrt,
    to_pauli,
)

CL30 = Signature(3, 0)


def test_basis_images():
    assert np.allclose(to_pauli(Multivector.scalar(CL30, 1.0)), np.eye(2))
    assert np.allclose(to_pauli(Multivector.basis(CL30, "e1")), [[0, 1], [1, 0]])
    assert np.allclose(to_pauli(Multivector.basis(CL30, "e2")), [[0, -1j], [1j, 0]])
    assert np.allclose(to_pauli(Multivector.basis(CL30, "e3")), [[1, 0], [0, -1]])
    b = parse_mv("e1 - 2 e23", CL30)
    assert np.allclose(to_pauli(b), [[0, 1 - 2j], [1 - 2j, 0]])
    with pytest.raises(AlgebraError):
        to_pauli(Multivector.scalar(Signature(2, 1), 1.0))


def test_homomorphism_random(rng):
    for _ in range(1000):
        a = random_mv(CL30, rng)
        b = random_mv(CL30, rng)
        left = to_pauli(a * b)
        right = to_pauli(a) @ to_pauli(b)
        scale = max(1.0, float(np.max(np.abs(left))))
        assert np.max(np.abs(left - right)) <= 1e-12 * scale


def test_from_pauli_roundtrip(rng):
    for _ in range(300):
        a = random_mv(CL30, rng)
        back = from_pauli(to_pauli(a))
        assert max(abs(x - y) for x, y in zip(a.coeffs, back.coeffs)) <= 1e-13
    assert from_pauli(np.zeros((2, 2))).norm_inf() == 0.0


def test_sullivan_identity_and_diagonal():
    assert np.allclose(sullivan_sqrt(np.eye(2), 1, 1), np.eye(2))
    b = np.diag([4.0 + 0j, 9.0])
    a = sullivan_sqrt(b, 1, 1)
    assert np.allclose(a @ a, b, atol=1e-10)
    # the (-1, .) branch mixes the eigenvalue signs
    a = sullivan_sqrt(b, -1, 1)
    assert np.allclose(a @ a, b, atol=1e-10)


def test_sullivan_random_matrices(rng):
    for _ in range(300):
        b = rng.normal(size=(2, 2)) + 1j * rng.normal(size=(2, 2))
        for eps1 in (1, -1):
            for eps2 in (1, -1):
                try:
                    a = sullivan_sqrt(b, eps1, eps2)
                except SullivanBranchError:
                    continue
                assert np.max(np.abs(a @ a - b)) <= 1e-10 * max(1.0, np.max(np.abs(b)))


def test_sullivan_fixture_entries():
    b = to_pauli(parse_mv("e1 - 2 e23", CL30))
    a1 = sullivan_sqrt(b, 1, 1)
    assert abs(a1[0, 0] - cmath.sqrt(1 + 0.5j)) <= 1e-12
    assert abs(a1[0, 1] - (1 - 2j) / cmath.sqrt(4 + 2j)) <= 1e-12
    assert abs(a1[0, 0] - a1[1, 1]) <= 1e-12 and abs(a1[0, 1] - a1[1, 0]) <= 1e-12


def test_sullivan_vanishing_denominator():
    with pytest.raises(SullivanBranchError):
        sullivan_sqrt(np.eye(2) * 4.0, -1, 1)


def test_mismatch_report_fixture():
    """The naive complex return trip fails to square back to B.

    The honest per-branch values (verified against direct complexified
    products): for eps1 = +1 the square is (2+4i)/5 + e1 - 2 e23 - (4-2i)/5 e123,
    and for eps1 = -1 it is -(2+4i)/5 + e1 - 2 e23 + (4-2i)/5 e123.  In both
    cases the vector and bivector parts reproduce B exactly while a complex
    scalar and pseudoscalar appear.
    """
    b = parse_mv("e1 - 2 e23", CL30)
    report = demonstrate_mismatch(b)
    assert len(report.branches) == 4 and all(br.valid for br in report.branches)
    for br in report.branches:
        sq = br.naive_square.coeffs
        assert abs(sq[1] - 1) <= 1e-12            # e1 reproduced
        assert abs(sq[6] + 2) <= 1e-12            # e23 reproduced
        expected_b0 = br.eps1 * (2 + 4j) / 5
        expected_b123 = -br.eps1 * (4 - 2j) / 5
        assert abs(sq[0] - expected_b0) <= 1e-12
        assert abs(sq[7] - expected_b123) <= 1e-12
        assert all(abs(sq[k]) <= 1e-12 for k in (2, 3, 4, 5))
        assert br.square_deviation > 0.5          # the mismatch is not subtle
        assert br.matrix_residual <= 1e-12        # ... while the matrix root is exact


def test_mismatch_imaginary_content():
    # no branch's naive return is a real multivector
    b = parse_mv("e1 - 2 e23", CL30)
    report = demonstrate_mismatch(b)
    for br in report.branches:
        assert br.naive_max_imag > 0.1


def test_real_preimages_are_true_roots():
    # the genuine inverse of the embedding maps every Sullivan branch onto a
    # true Cl(3,0) root of B: the matrix route loses nothing if inverted right
    b = parse_mv("e1 - 2 e23", CL30)
    report = demonstrate_mismatch(b)
    true_roots = sqrt(b).isolated
    for br in report.branches:
        assert br.real_preimage_residual <= 1e-10
        assert closest(true_roots, br.real_preimage) <= 1e-9


def test_true_roots_map_to_matrix_roots():
    b = parse_mv("e1 - 2 e23", CL30)
    mat_b = to_pauli(b)
    for root in sqrt(b).isolated:
        m = to_pauli(root)
        assert np.max(np.abs(m @ m - mat_b)) <= 1e-12


def test_scalar_input_branch_classification():
    # B = 4: the two valid Sullivan branches give +/- 2 I, i.e. real scalars;
    # the eps1 = -1 branches have a vanishing denominator
    b = Multivector.scalar(CL30, 4.0)
    report = demonstrate_mismatch(b)
    valid = [br for br in report.branches if br.valid]
    invalid = [br for br in report.branches if not br.valid]
    assert len(valid) == 2 and len(invalid) == 2
    assert all(br.eps1 == -1 for br in invalid)
    for br in valid:
        assert br.naive_max_imag <= 1e-14
        assert closest([br.real_preimage], Multivector.scalar(CL30, 2.0 * br.eps2)) <= 1e-12


def test_complex_multivector_product():
    one = ComplexMultivector((1, 0, 0, 0, 0, 0, 0, 0))
    e1 = ComplexMultivector((0, 1j, 0, 0, 0, 0, 0, 0))
    sq = e1 * e1
    assert sq.coeffs[0] == -1 and all(c == 0 for c in sq.coeffs[1:])
    assert (one * e1).coeffs == e1.coeffs
