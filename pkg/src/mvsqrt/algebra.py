"""Blade-indexed multivector arithmetic for the real Clifford algebras Cl(p,q), p+q <= 3.

Basis blades are kept in inverse degree lexicographic order, e.g. for n = 3:

    1, e1, e2, e3, e12, e13, e23, e123

Subscripts inside a blade are strictly increasing (e13, never e31).  All
coefficients are double precision reals; all values are immutable and all
operations are pure functions, so everything here is safe to share across
threads.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Mapping, Sequence

MAX_DIMENSION = 3


class AlgebraError(ValueError):
    """Invalid algebraic request (bad signature, wrong dimension, ...)."""


class SignatureMismatch(AlgebraError):
    """Operands live in different algebras."""


@dataclass(frozen=True, order=True)
class Signature:
    """Cl(p,q): p basis vectors square to +1, the remaining q square to -1."""

    p: int
    q: int

    def __post_init__(self) -> None:
        if self.p < 0 or self.q < 0:
            raise AlgebraError(f"signature counts must be nonnegative, got ({self.p},{self.q})")
        if not 1 <= self.p + self.q <= MAX_DIMENSION:
            raise AlgebraError(f"p+q must lie in 1..{MAX_DIMENSION}, got {self.p + self.q}")

    @property
    def n(self) -> int:
        return self.p + self.q

    @property
    def dim(self) -> int:
        return 1 << self.n

    def vector_square(self, i: int) -> int:
        """Square of the basis vector e_i (1-based index)."""
        if not 1 <= i <= self.n:
            raise AlgebraError(f"no basis vector e{i} in {self}")
        return 1 if i <= self.p else -1

    @classmethod
    def parse(cls, text: str) -> "Signature":
        parts = text.split(",")
        if len(parts) != 2:
            raise AlgebraError(f"algebra must be given as 'p,q', got {text!r}")
        try:
            p, q = (int(part.strip()) for part in parts)
        except ValueError:
            raise AlgebraError(f"algebra must be given as 'p,q' with integers, got {text!r}") from None
        return cls(p, q)

    def __str__(self) -> str:
        return f"Cl({self.p},{self.q})"


# ---------------------------------------------------------------------------
# blades as bitmasks: bit i-1 set  <=>  e_i is a factor


def blade_indices(mask: int) -> tuple[int, ...]:
    """1-based vector indices of a blade mask, increasing."""
    out = []
    i = 1
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return tuple(out)


def blade_mask(indices: Iterable[int]) -> int:
    mask = 0
    for i in indices:
        mask |= 1 << (i - 1)
    return mask


def blade_name(mask: int) -> str:
    if mask == 0:
        return "1"
    return "e" + "".join(str(i) for i in blade_indices(mask))


def blade_order(n: int) -> tuple[int, ...]:
    """Blade masks in the canonical serialization order (grade, then subscripts)."""
    return tuple(sorted(range(1 << n), key=lambda m: (m.bit_count(), m)))


def blade_product(a: int, b: int, sig: Signature) -> tuple[int, int]:
    """Sign and canonical mask of the geometric product e_a e_b.

    The sign counts the transpositions needed to interleave the factors,
    then picks up the signature square of every repeated vector.
    """
    swaps = 0
    x = a >> 1
    while x:
        swaps += (x & b).bit_count()
        x >>= 1
    sign = -1 if swaps & 1 else 1
    common = a & b
    i = 1
    while common:
        if common & 1 and sig.vector_square(i) < 0:
            sign = -sign
        common >>= 1
        i += 1
    return sign, a ^ b


class _Tables:
    """Per-signature structure constants, built once and cached."""

    __slots__ = (
        "sig", "order", "index", "names", "grades", "gp", "conj_signs",
        "vec_squares", "i_square", "vector_i", "grade1", "grade2",
    )

    def __init__(self, sig: Signature) -> None:
        self.sig = sig
        n = sig.n
        self.order = blade_order(n)
        self.index = {m: i for i, m in enumerate(self.order)}
        self.names = tuple(blade_name(m) for m in self.order)
        self.grades = tuple(m.bit_count() for m in self.order)
        gp = []
        for ma in self.order:
            row = []
            for mb in self.order:
                s, mc = blade_product(ma, mb, sig)
                row.append((s, self.index[mc]))
            gp.append(tuple(row))
        self.gp = tuple(gp)
        self.conj_signs = tuple(-1 if (g * (g + 1) // 2) & 1 else 1 for g in self.grades)
        self.vec_squares = tuple(sig.vector_square(i) for i in range(1, n + 1))
        self.grade1 = tuple(i for i, g in enumerate(self.grades) if g == 1)
        self.grade2 = tuple(i for i, g in enumerate(self.grades) if g == 2)
        if n == 3:
            pss = (1 << n) - 1
            s, _ = blade_product(pss, pss, sig)
            self.i_square = s
            vec_i = []
            for i in (1, 2, 3):
                s, m = blade_product(1 << (i - 1), pss, sig)
                vec_i.append((s, self.index[m]))
            self.vector_i = tuple(vec_i)
        else:
            self.i_square = 0
            self.vector_i = ()


@lru_cache(maxsize=None)
def _tables(sig: Signature) -> _Tables:
    return _Tables(sig)


# ---------------------------------------------------------------------------


class Multivector:
    """Element of Cl(p,q), stored as 2^(p+q) coefficients in canonical blade order."""

    __slots__ = ("sig", "coeffs")

    def __init__(self, sig: Signature, coeffs: Sequence[float]) -> None:
        coeffs = tuple(float(c) for c in coeffs)
        if len(coeffs) != sig.dim:
            raise AlgebraError(f"{sig} needs {sig.dim} coefficients, got {len(coeffs)}")
        self.sig = sig
        self.coeffs = coeffs

    # -- constructors

    @classmethod
    def zero(cls, sig: Signature) -> "Multivector":
        return cls(sig, (0.0,) * sig.dim)

    @classmethod
    def scalar(cls, sig: Signature, value: float) -> "Multivector":
        coeffs = [0.0] * sig.dim
        coeffs[0] = float(value)
        return cls(sig, coeffs)

    @classmethod
    def basis(cls, sig: Signature, name: str) -> "Multivector":
        tab = _tables(sig)
        try:
            k = tab.names.index(name)
        except ValueError:
            raise AlgebraError(f"unknown blade {name!r} in {sig}") from None
        coeffs = [0.0] * sig.dim
        coeffs[k] = 1.0
        return cls(sig, coeffs)

    @classmethod
    def from_terms(cls, sig: Signature, terms: Mapping[str, float]) -> "Multivector":
        tab = _tables(sig)
        coeffs = [0.0] * sig.dim
        for name, value in terms.items():
            try:
                k = tab.names.index(name)
            except ValueError:
                raise AlgebraError(f"unknown blade {name!r} in {sig}") from None
            coeffs[k] += float(value)
        return cls(sig, coeffs)

    # -- bookkeeping

    @property
    def blade_names(self) -> tuple[str, ...]:
        return _tables(self.sig).names

    def coefficient(self, name: str) -> float:
        tab = _tables(self.sig)
        try:
            return self.coeffs[tab.names.index(name)]
        except ValueError:
            raise AlgebraError(f"unknown blade {name!r} in {self.sig}") from None

    def _check(self, other: "Multivector") -> None:
        if self.sig != other.sig:
            raise SignatureMismatch(f"incompatible operands: {self.sig} vs {other.sig}")

    # -- linear operations

    def __add__(self, other: "Multivector") -> "Multivector":
        self._check(other)
        return Multivector(self.sig, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: "Multivector") -> "Multivector":
        self._check(other)
        return Multivector(self.sig, tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> "Multivector":
        return Multivector(self.sig, tuple(-a for a in self.coeffs))

    def scale(self, factor: float) -> "Multivector":
        return Multivector(self.sig, tuple(factor * a for a in self.coeffs))

    def __mul__(self, other):
        if isinstance(other, Multivector):
            return geometric_product(self, other)
        return self.scale(float(other))

    def __rmul__(self, other):
        return self.scale(float(other))

    def __truediv__(self, other):
        return self.scale(1.0 / float(other))

    # -- algebra

    def square(self) -> "Multivector":
        return geometric_product(self, self)

    def grade(self, k: int) -> "Multivector":
        grades = _tables(self.sig).grades
        return Multivector(self.sig, tuple(c if g == k else 0.0 for c, g in zip(self.coeffs, grades)))

    def conjugate(self) -> "Multivector":
        signs = _tables(self.sig).conj_signs
        return Multivector(self.sig, tuple(s * c for s, c in zip(signs, self.coeffs)))

    # -- comparisons

    def norm_inf(self) -> float:
        return max(abs(c) for c in self.coeffs)

    def isclose(self, other: "Multivector", tol: float = 1e-9) -> bool:
        self._check(other)
        return all(abs(a - b) <= tol for a, b in zip(self.coeffs, other.coeffs))

    def __repr__(self) -> str:
        return f"Multivector({self.sig}, {list(self.coeffs)!r})"

    def __str__(self) -> str:
        from .parsing import format_mv

        return format_mv(self)


def geometric_product(a: Multivector, b: Multivector) -> Multivector:
    """Bilinear extension of the blade product."""
    a._check(b)
    table = _tables(a.sig).gp
    out = [0.0] * len(a.coeffs)
    for i, ai in enumerate(a.coeffs):
        if ai == 0.0:
            continue
        row = table[i]
        for j, bj in enumerate(b.coeffs):
            if bj == 0.0:
                continue
            s, k = row[j]
            out[k] += s * ai * bj
    return Multivector(a.sig, out)


def grade_select(a: Multivector, k: int) -> Multivector:
    return a.grade(k)


def clifford_conjugate(a: Multivector) -> Multivector:
    """Grade-k part multiplied by (-1)^(k(k+1)/2): grades 1 and 2 flip sign."""
    return a.conjugate()


# ---------------------------------------------------------------------------
# coordinate-free invariants


@dataclass(frozen=True)
class Invariants3D:
    """Scalar and pseudoscalar parts of B*conj(B) plus the determinant they induce."""

    bS: float
    bI: float
    D: float


def invariants3(b: Multivector) -> Invariants3D:
    """bS = <B conj(B)>_0, bI = <B conj(B) I>_0, D = bS^2 - I^2 * bI^2.

    Requires p+q = 3; B*conj(B) only has scalar and pseudoscalar parts there,
    which is what makes the two numbers well defined.
    """
    sig = b.sig
    if sig.n != 3:
        raise AlgebraError(f"invariants3 needs p+q = 3, got {sig}")
    tab = _tables(sig)
    prod = geometric_product(b, b.conjugate())
    b_s = prod.coeffs[0]
    b_i = prod.coeffs[-1] * tab.i_square
    det = b_s * b_s - tab.i_square * b_i * b_i
    return Invariants3D(b_s, b_i, det)


def determinant(b: Multivector) -> float:
    """Determinant of B; nonnegativity is necessary for a real square root.

    For n <= 2 this is <B conj(B)>_0; for n = 3 it is the quadratic
    combination of bS and bI fixed by the sign of I^2.
    """
    if b.sig.n == 3:
        return invariants3(b).D
    return geometric_product(b, b.conjugate()).coeffs[0]


# ---------------------------------------------------------------------------
# the symmetric split A = s + v + (S + V)I, for n = 3


@dataclass(frozen=True)
class SymmetricForm:
    s: float
    v: tuple[float, float, float]
    S: float
    V: tuple[float, float, float]


def to_symmetric(a: Multivector) -> SymmetricForm:
    """Split A = s + v + (S+V)I.  The bivector-to-V signs come from the
    geometric product itself (e_i I), never from a hand-written table."""
    sig = a.sig
    if sig.n != 3:
        raise AlgebraError(f"to_symmetric needs p+q = 3, got {sig}")
    tab = _tables(sig)
    c = a.coeffs
    v = (c[1], c[2], c[3])
    cap_v = tuple(sign * c[pos] for sign, pos in tab.vector_i)
    return SymmetricForm(c[0], v, c[-1], cap_v)


def from_symmetric(sig: Signature, form: SymmetricForm) -> Multivector:
    if sig.n != 3:
        raise AlgebraError(f"from_symmetric needs p+q = 3, got {sig}")
    tab = _tables(sig)
    coeffs = [0.0] * sig.dim
    coeffs[0] = form.s
    coeffs[1], coeffs[2], coeffs[3] = form.v
    coeffs[-1] = form.S
    for (sign, pos), value in zip(tab.vector_i, form.V):
        coeffs[pos] = sign * value
    return Multivector(sig, coeffs)


ALL_SIGNATURES = tuple(
    Signature(p, n - p) for n in range(1, MAX_DIMENSION + 1) for p in range(n, -1, -1)
)
