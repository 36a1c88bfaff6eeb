import numpy as np
import pytest

from mvsqrt import Multivector, Signature

N3_SIGNATURES = [Signature(3, 0), Signature(2, 1), Signature(1, 2), Signature(0, 3)]
ALL_SIGS = [Signature(1, 0), Signature(0, 1), Signature(2, 0), Signature(1, 1),
            Signature(0, 2)] + N3_SIGNATURES


def random_mv(sig, rng, span=2.0):
    return Multivector(sig, rng.uniform(-span, span, sig.dim))


def dist_inf(a, b):
    return max(abs(x - y) for x, y in zip(a.coeffs, b.coeffs))


def closest(roots, target):
    return min((dist_inf(r, target) for r in roots), default=float("inf"))


def assert_root_set(roots, expected, tol=1e-9):
    """Roots and expected values match as sets at the given tolerance."""
    assert len(roots) == len(expected), (
        f"expected {len(expected)} roots, got {len(roots)}: {[r.coeffs for r in roots]}")
    for e in expected:
        assert closest(roots, e) <= tol, f"missing expected root {e.coeffs}"
    for r in roots:
        assert min(dist_inf(r, e) for e in expected) <= tol, f"surplus root {r.coeffs}"


@pytest.fixture
def rng():
    return np.random.default_rng(20240814)
