"""The 2x2 complex matrix image of Cl(3,0) and why matrix square roots fail there.

Cl(3,0) is isomorphic (as a real algebra) to Mat(2,C): basis vectors map to
the Pauli matrices and every blade to the corresponding product, so the map
is a homomorphism by construction.  A 2x2 matrix square root can always be
pulled back to a real multivector through the inverse of that isomorphism --
but the "obvious" route of reading matrix entries off as complex blade
coefficients produces a complex multivector whose square in the complexified
algebra is NOT the original element.  ``demonstrate_mismatch`` reproduces
that failure branch by branch.
"""
from __future__ import annotations

import cmath
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Sequence

import numpy as np

from .algebra import AlgebraError, Multivector, Signature, _tables
from .oracle import residual

CL30 = Signature(3, 0)

_SIGMA = (
    np.eye(2, dtype=complex),
    np.array([[0, 1], [1, 0]], dtype=complex),
    np.array([[0, -1j], [1j, 0]], dtype=complex),
    np.array([[1, 0], [0, -1]], dtype=complex),
)


class SullivanBranchError(ValueError):
    """The chosen sign branch has a vanishing denominator."""


@lru_cache(maxsize=None)
def _basis_matrices() -> tuple[np.ndarray, ...]:
    """Matrix image of each blade, in canonical blade order; products of sigmas."""
    mats = []
    for mask in _tables(CL30).order:
        m = np.eye(2, dtype=complex)
        for i in (1, 2, 3):
            if mask & (1 << (i - 1)):
                m = m @ _SIGMA[i]
        m.setflags(write=False)
        mats.append(m)
    return tuple(mats)


@dataclass(frozen=True)
class ComplexMultivector:
    """Cl(3,0) element with complex coefficients, blade-ordered like Multivector."""

    coeffs: tuple[complex, ...]

    def __post_init__(self) -> None:
        if len(self.coeffs) != 8:
            raise AlgebraError("ComplexMultivector needs 8 coefficients")

    @classmethod
    def from_real(cls, a: Multivector) -> "ComplexMultivector":
        if a.sig != CL30:
            raise AlgebraError(f"expected Cl(3,0), got {a.sig}")
        return cls(tuple(complex(c) for c in a.coeffs))

    def __mul__(self, other: "ComplexMultivector") -> "ComplexMultivector":
        table = _tables(CL30).gp
        out = [0j] * 8
        for i, ai in enumerate(self.coeffs):
            if ai == 0:
                continue
            row = table[i]
            for j, bj in enumerate(other.coeffs):
                if bj == 0:
                    continue
                s, k = row[j]
                out[k] += s * ai * bj
        return ComplexMultivector(tuple(out))

    def __add__(self, other: "ComplexMultivector") -> "ComplexMultivector":
        return ComplexMultivector(tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: "ComplexMultivector") -> "ComplexMultivector":
        return ComplexMultivector(tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def scale(self, factor: complex) -> "ComplexMultivector":
        return ComplexMultivector(tuple(factor * c for c in self.coeffs))

    def square(self) -> "ComplexMultivector":
        return self * self

    def max_abs_imag(self) -> float:
        return max(abs(c.imag) for c in self.coeffs)

    def norm_inf(self) -> float:
        return max(abs(c) for c in self.coeffs)

    def real_part(self) -> Multivector:
        return Multivector(CL30, tuple(c.real for c in self.coeffs))


def to_pauli(a: Multivector | ComplexMultivector) -> np.ndarray:
    """Matrix image of a Cl(3,0) multivector; multiplicative by construction."""
    if isinstance(a, Multivector):
        if a.sig != CL30:
            raise AlgebraError(f"to_pauli needs Cl(3,0), got {a.sig}")
        coeffs: Sequence[complex] = a.coeffs
    else:
        coeffs = a.coeffs
    mats = _basis_matrices()
    out = np.zeros((2, 2), dtype=complex)
    for c, m in zip(coeffs, mats):
        out += c * m
    return out


def from_pauli(m: np.ndarray) -> Multivector:
    """Exact inverse of the real-linear embedding: any complex 2x2 matrix is the
    image of exactly one real Cl(3,0) multivector.

    Closed form of the 8x8 real solve: the diagonal average carries scalar and
    pseudoscalar, the diagonal difference e3/e12, the symmetric off-diagonal
    e1/e23 and the antisymmetric off-diagonal e13/e2.
    """
    m = np.asarray(m, dtype=complex)
    if m.shape != (2, 2):
        raise AlgebraError(f"expected a 2x2 matrix, got shape {m.shape}")
    diag_avg = 0.5 * (m[0, 0] + m[1, 1])
    diag_diff = 0.5 * (m[0, 0] - m[1, 1])
    off_sym = 0.5 * (m[0, 1] + m[1, 0])
    off_asym = 0.5 * (m[0, 1] - m[1, 0])
    return Multivector(CL30, (
        diag_avg.real,      # 1
        off_sym.real,       # e1
        -off_asym.imag,     # e2
        diag_diff.real,     # e3
        diag_diff.imag,     # e12
        -off_asym.real,     # e13
        off_sym.imag,       # e23
        diag_avg.imag,      # e123
    ))


def sullivan_sqrt(b: np.ndarray, eps1: int, eps2: int) -> np.ndarray:
    """One sign branch of the closed-form 2x2 matrix square root

        A = eps2 * (B + eps1 sqrt(det B) I) / sqrt(tr B + 2 eps1 sqrt(det B))

    with principal complex square roots throughout.
    """
    b = np.asarray(b, dtype=complex)
    det = b[0, 0] * b[1, 1] - b[0, 1] * b[1, 0]
    sqrt_det = cmath.sqrt(det)
    den = b[0, 0] + b[1, 1] + 2 * eps1 * sqrt_det
    if abs(den) < 1e-14:
        raise SullivanBranchError(
            f"tr B + 2*({eps1:+d})*sqrt(det B) vanishes: branch invalid")
    return eps2 * (b + eps1 * sqrt_det * np.eye(2)) / cmath.sqrt(den)


# ---------------------------------------------------------------------------
# the mismatch demonstration


@dataclass
class BranchResult:
    """One (eps1, eps2) branch of the demonstration."""

    eps1: int
    eps2: int
    valid: bool
    matrix_root: np.ndarray | None = None
    matrix_residual: float = float("nan")
    naive_root: ComplexMultivector | None = None
    naive_square: ComplexMultivector | None = None
    naive_max_imag: float = float("nan")
    square_deviation: float = float("nan")
    real_preimage: Multivector | None = None
    real_preimage_residual: float = float("nan")
    note: str = ""


@dataclass
class MismatchReport:
    input: Multivector
    branches: list[BranchResult] = field(default_factory=list)

    def max_naive_imag(self) -> float:
        vals = [br.naive_max_imag for br in self.branches if br.valid]
        return max(vals) if vals else 0.0


def demonstrate_mismatch(b: Multivector) -> MismatchReport:
    """Run all four Sullivan branches on the matrix image of B.

    For each branch: the matrix root itself (which does square to the matrix
    image), the complex multivector obtained by evaluating Sullivan's formula
    with blade coefficients (the naive return trip), its square in the
    complexified algebra with the deviation from B, and the genuine real
    preimage of the matrix root with its residual.
    """
    if b.sig != CL30:
        raise AlgebraError(f"demonstrate_mismatch needs Cl(3,0), got {b.sig}")
    mat_b = to_pauli(b)
    det = mat_b[0, 0] * mat_b[1, 1] - mat_b[0, 1] * mat_b[1, 0]
    trace = mat_b[0, 0] + mat_b[1, 1]
    sqrt_det = cmath.sqrt(det)
    b_complex = ComplexMultivector.from_real(b)
    report = MismatchReport(input=b)
    for eps1 in (1, -1):
        for eps2 in (1, -1):
            branch = BranchResult(eps1=eps1, eps2=eps2, valid=True)
            den = trace + 2 * eps1 * sqrt_det
            if abs(den) < 1e-14:
                branch.valid = False
                branch.note = "denominator vanishes: branch invalid"
                report.branches.append(branch)
                continue
            mat_root = sullivan_sqrt(mat_b, eps1, eps2)
            branch.matrix_root = mat_root
            branch.matrix_residual = float(np.max(np.abs(mat_root @ mat_root - mat_b)))
            scalar_shift = ComplexMultivector(
                (eps1 * sqrt_det, 0, 0, 0, 0, 0, 0, 0))
            naive = (b_complex + scalar_shift).scale(eps2 / cmath.sqrt(den))
            branch.naive_root = naive
            branch.naive_max_imag = naive.max_abs_imag()
            naive_sq = naive.square()
            branch.naive_square = naive_sq
            branch.square_deviation = (naive_sq - b_complex).norm_inf()
            preimage = from_pauli(mat_root)
            branch.real_preimage = preimage
            branch.real_preimage_residual = residual(preimage, b)
            report.branches.append(branch)
    return report
