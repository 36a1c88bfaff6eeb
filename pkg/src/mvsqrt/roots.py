"""Square roots of multivectors: every isolated root plus the parametric continua.

The solver walks the complete case tree for each algebra.  For n = 3 the
pipeline is

    invariants (bS, bI, D)  ->  determinant precheck
    solve_tT                ->  real (t, T) pairs of the reduced system
    solve_sS                ->  scalar pairs (s, S) with s S = t
    recover_vectors         ->  the linear solve for (v, V), one candidate each

followed by the special cases (s = S, s = -S, s = S = 0) which contribute
parametric families of roots.  Sign branches are enumerated rather than
pruned analytically; a residual filter ||A*A - B||_inf <= tol is the ground
truth for keeping an isolated candidate.
"""
from __future__ import annotations

import cmath
import itertools
import math
from dataclasses import dataclass, field
from typing import Callable, NamedTuple, Sequence

import numpy as np

from .algebra import (
    AlgebraError,
    Invariants3D,
    Multivector,
    Signature,
    SymmetricForm,
    _tables,
    from_symmetric,
    invariants3,
    determinant,
    to_symmetric,
)

DEFAULT_TOL = 1e-9
SQRT2 = math.sqrt(2.0)

# case tags for parametric families
DIM2_S0 = "dim2-s0"
SS_PLUS = "sS-plus"
SS_MINUS = "sS-minus"
SS_ZERO = "sS-zero"


class TTPair(NamedTuple):
    t: float
    T: float


class SSPair(NamedTuple):
    s: float
    S: float


@dataclass
class ParametricFamily:
    """A closed-form manifold of roots: parameter values -> Multivector.

    ``evaluate`` is defined wherever ``is_valid`` holds (all radicands
    nonnegative there); ``branch_signs`` records the +/- choices baked into
    this instance.  ``probe_points``/``probe_feasible`` are filled in by the
    solver's coarse grid probe.
    """

    case_tag: str
    free_params: tuple[str, ...]
    branch_signs: tuple[int, ...]
    evaluate: Callable[[Sequence[float]], Multivector]
    is_valid: Callable[[Sequence[float]], bool]
    probe_points: int = 0
    probe_feasible: int = 0

    @property
    def dimension(self) -> int:
        return len(self.free_params)


@dataclass
class Diagnostics:
    """What the solver saw: invariants, case labels taken, pruned radicands."""

    bS: float | None = None
    bI: float | None = None
    D: float = 0.0
    cases: list[str] = field(default_factory=list)
    rejected: list[str] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)


@dataclass
class RootSet:
    """Result of a square-root query."""

    isolated: list[Multivector]
    families: list[ParametricFamily]
    diagnostics: Diagnostics

    def __iter__(self):
        return iter(self.isolated)


# ---------------------------------------------------------------------------
# helpers


def _residual_inf(a: Multivector, b: Multivector) -> float:
    return (a.square() - b).norm_inf()


def _dedup(roots: list[Multivector], tol: float) -> list[Multivector]:
    kept: list[Multivector] = []
    for r in roots:
        if all(max(abs(x - y) for x, y in zip(r.coeffs, k.coeffs)) > tol for k in kept):
            kept.append(r)
    return kept


def _polish(cand: Multivector, b: Multivector, iters: int = 4) -> Multivector:
    """A few Newton steps on A*A = B to undo the cancellation the nested
    radicals suffer near degenerate branch boundaries (the exact Jacobian is
    linear in A, so convergence is quadratic)."""
    sig = b.sig
    table = _tables(sig).gp
    dim = sig.dim
    x = list(cand.coeffs)
    target = b.coeffs
    for _ in range(iters):
        f = [0.0] * dim
        jac = [[0.0] * dim for _ in range(dim)]
        for i in range(dim):
            xi = x[i]
            row = table[i]
            for j in range(dim):
                s, k = row[j]
                f[k] += s * xi * x[j]
                jac[k][j] += s * xi
                jac[k][i] += s * x[j]
        for k in range(dim):
            f[k] -= target[k]
        if max(abs(v) for v in f) <= 1e-14:
            break
        try:
            delta = np.linalg.solve(np.asarray(jac), -np.asarray(f))
        except np.linalg.LinAlgError:
            break
        x = [xi + di for xi, di in zip(x, delta)]
    return Multivector(sig, x)


def _filter_candidates(candidates: list[Multivector], b: Multivector, tol: float,
                       diag: Diagnostics) -> list[Multivector]:
    polish_band = 1e-3 * max(1.0, b.norm_inf())
    verified = []
    for cand in candidates:
        res = _residual_inf(cand, b)
        if tol < res <= polish_band:
            cand = _polish(cand, b)
            res = _residual_inf(cand, b)
        if res <= tol:
            verified.append(cand)
        else:
            diag.rejected.append(f"candidate residual {res:.3g} > tol, dropped")
    return _dedup(verified, tol)


def _clamp(value: float, tol: float) -> float | None:
    """Clamp a radicand: tiny negatives become 0, real negatives are None."""
    if value >= 0.0:
        return value
    if value >= -tol:
        return 0.0
    return None


# ---------------------------------------------------------------------------
# n = 1


def sqrt_dim1(b: Multivector, tol: float = DEFAULT_TOL) -> RootSet:
    """All square roots of B = b0 + b1 e1 in Cl(1,0) or Cl(0,1)."""
    sig = b.sig
    if sig.n != 1:
        raise AlgebraError(f"sqrt_dim1 needs p+q = 1, got {sig}")
    b0, b1 = b.coeffs
    q1 = sig.vector_square(1)
    det = b0 * b0 - q1 * b1 * b1
    diag = Diagnostics(D=det)
    candidates: list[Multivector] = []
    dc = _clamp(det, tol)
    if dc is None:
        diag.rejected.append(f"determinant {det:.3g} < 0: no real roots")
    else:
        sqrt_d = math.sqrt(dc)
        for chi in (1.0, -1.0):
            rad = b0 + chi * sqrt_d
            if rad > tol:
                diag.cases.append(f"generic s-branch b0{'+' if chi > 0 else '-'}sqrt(D)")
                s = math.sqrt(rad / 2.0)
                v1 = b1 / (2.0 * s)
                candidates.append(Multivector(sig, (s, v1)))
                candidates.append(Multivector(sig, (-s, -v1)))
            elif rad > -tol and abs(b1) <= tol:
                # s = 0: a pure vector root v1 e1 with q1 v1^2 = b0
                v1sq = _clamp(q1 * b0, tol)
                if v1sq is not None and v1sq > tol:
                    diag.cases.append("s=0 vector branch")
                    v1 = math.sqrt(v1sq)
                    candidates.append(Multivector(sig, (0.0, v1)))
                    candidates.append(Multivector(sig, (0.0, -v1)))
            elif rad <= -tol:
                diag.rejected.append(f"radicand b0{'+' if chi > 0 else '-'}sqrt(D) = {rad:.3g} < 0")
    if abs(b0) <= tol and abs(b1) <= tol:
        candidates.append(Multivector.zero(sig))
    return RootSet(_filter_candidates(candidates, b, tol, diag), [], diag)


# ---------------------------------------------------------------------------
# n = 2


def sqrt_dim2(b: Multivector, tol: float = DEFAULT_TOL) -> RootSet:
    """Roots of B = b0 + b1 e1 + b2 e2 + b3 e12 in Cl(2,0), Cl(1,1) or Cl(0,2)."""
    sig = b.sig
    if sig.n != 2:
        raise AlgebraError(f"sqrt_dim2 needs p+q = 2, got {sig}")
    tab = _tables(sig)
    b0, b1, b2, b3 = b.coeffs
    q1, q2 = tab.vec_squares
    q12 = tab.gp[3][3][0]  # square of e12
    det = determinant(b)
    diag = Diagnostics(D=det)
    candidates: list[Multivector] = []
    dc = _clamp(det, tol)
    if dc is None:
        diag.rejected.append(f"determinant {det:.3g} < 0: no real roots")
    else:
        sqrt_d = math.sqrt(dc)
        for chi in (1.0, -1.0):
            rad = b0 + chi * sqrt_d
            if rad > tol:
                diag.cases.append(f"generic s-branch b0{'+' if chi > 0 else '-'}sqrt(D)")
                s = math.sqrt(rad / 2.0)
                half = 2.0 * s
                root = Multivector(sig, (s, b1 / half, b2 / half, b3 / half))
                candidates.append(root)
                candidates.append(-root)
            elif rad <= -tol:
                diag.rejected.append(f"radicand b0{'+' if chi > 0 else '-'}sqrt(D) = {rad:.3g} < 0")
    families: list[ParametricFamily] = []
    if abs(b1) <= tol and abs(b2) <= tol and abs(b3) <= tol:
        # s = 0: B is a scalar and  q1 v1^2 + q2 v2^2 + q12 S^2 = b0  leaves
        # (v1, v2) free with S = +/- sqrt(q12 (b0 - q1 v1^2 - q2 v2^2))
        diag.cases.append("s=0 scalar branch: 2-parameter family")
        for branch in (1, -1):
            families.append(_dim2_family(sig, b0, q1, q2, q12, branch, tol))
    return RootSet(_filter_candidates(candidates, b, tol, diag), families, diag)


def _dim2_family(sig: Signature, b0: float, q1: int, q2: int, q12: int,
                 branch: int, tol: float) -> ParametricFamily:
    def s_squared(params: Sequence[float]) -> float:
        v1, v2 = params
        return q12 * (b0 - q1 * v1 * v1 - q2 * v2 * v2)

    def is_valid(params: Sequence[float]) -> bool:
        return s_squared(params) >= -tol

    def evaluate(params: Sequence[float]) -> Multivector:
        rad = _clamp(s_squared(params), tol)
        if rad is None:
            raise ValueError("parameters outside the validity region")
        v1, v2 = params
        return Multivector(sig, (0.0, v1, v2, branch * math.sqrt(rad)))

    return ParametricFamily(DIM2_S0, ("v1", "v2"), (branch,), evaluate, is_valid)


# ---------------------------------------------------------------------------
# n = 3: the reduced (t, T) system


def solve_tT(b: Multivector, tol: float = DEFAULT_TOL,
             diagnostics: Diagnostics | None = None) -> list[TTPair]:
    """Real solutions (t, T) of the reduced quadratic system for p+q = 3."""
    sig = b.sig
    if sig.n != 3:
        raise AlgebraError(f"solve_tT needs p+q = 3, got {sig}")
    inv = invariants3(b)
    return _solve_tT(b.coeffs[0], b.coeffs[-1], inv, _tables(sig).i_square, tol,
                     diagnostics or Diagnostics())


def _solve_tT(b0: float, b123: float, inv: Invariants3D, iota: int, tol: float,
              diag: Diagnostics) -> list[TTPair]:
    b_s, b_i = inv.bS, inv.bI
    dc = _clamp(inv.D, tol)
    if dc is None:
        diag.rejected.append(f"determinant {inv.D:.3g} < 0: necessary condition violated")
        return []
    sqrt_d = math.sqrt(dc)
    pairs: list[TTPair] = []

    def add(t: float, cap_t: float) -> None:
        if all(abs(t - p.t) > tol or abs(cap_t - p.T) > tol for p in pairs):
            pairs.append(TTPair(t, cap_t))

    if iota == -1:
        # Cl(3,0) / Cl(1,2): single branch on -bS + sqrt(D), which is >= 0
        r = -b_s + sqrt_d
        if r > tol:
            w = math.sqrt(r)
            for e in (1.0, -1.0):
                add(0.25 * (b123 + e * w / SQRT2), 0.25 * (e * b_i / (SQRT2 * w) - b0))
        elif b_s > tol:
            sb = math.sqrt(b_s)
            add(0.25 * b123, 0.25 * (sb - b0))
            add(0.25 * b123, 0.25 * (-sb - b0))
        elif b_s > -tol:
            add(0.25 * b123, -0.25 * b0)
        else:  # unreachable: sqrt(D) >= |bS|
            diag.notes.append(f"-bS+sqrt(D) = {r:.3g} < 0, no (t,T) pairs")
    else:
        # Cl(0,3) / Cl(2,1): both inner signs bS +/- sqrt(D)
        for chi in (-1.0, 1.0):
            r = b_s + chi * sqrt_d
            label = f"bS{'+' if chi > 0 else '-'}sqrt(D)"
            if r > tol:
                w = math.sqrt(r)
                for e in (1.0, -1.0):
                    add(0.25 * (b123 + e * w / SQRT2), 0.25 * (b0 + e * b_i / (SQRT2 * w)))
            elif r > -tol:
                if b_s > tol:
                    sb = math.sqrt(b_s)
                    add(0.25 * b123, 0.25 * (b0 + sb))
                    add(0.25 * b123, 0.25 * (b0 - sb))
                elif b_s > -tol:
                    add(0.25 * b123, 0.25 * b0)
            else:
                diag.rejected.append(f"radicand {label} = {r:.3g} < 0: branch pruned")
    return pairs


# ---------------------------------------------------------------------------
# n = 3: back-substitution (t, T) -> (s, S)


def solve_sS(tt: TTPair, sig: Signature, tol: float = DEFAULT_TOL,
             diagnostics: Diagnostics | None = None) -> list[SSPair]:
    """Scalar pairs with s S = t and (S^2 - s^2)/2 = T (or (s^2 + S^2)/2 = T)."""
    if sig.n != 3:
        raise AlgebraError(f"solve_sS needs p+q = 3, got {sig}")
    diag = diagnostics or Diagnostics()
    t, cap_t = tt
    iota = _tables(sig).i_square
    pairs: list[SSPair] = []

    def add(s: float, cap_s: float) -> None:
        if all(abs(s - p.s) > tol or abs(cap_s - p.S) > tol for p in pairs):
            pairs.append(SSPair(s, cap_s))

    if iota == -1:
        # sS = t, (S^2 - s^2)/2 = T  <=>  (s + iS)^2 = -2T + 2it
        w = cmath.sqrt(complex(-2.0 * cap_t, 2.0 * t))
        if abs(w) > tol:
            add(w.real, w.imag)
            add(-w.real, -w.imag)
    else:
        # sS = t, (s^2 + S^2)/2 = T: requires T >= 0 and T^2 >= t^2
        if cap_t < -tol:
            diag.rejected.append(f"T = {cap_t:.3g} < 0: (s,S) branch pruned")
            return []
        cap_t = max(cap_t, 0.0)
        disc = _clamp(cap_t * cap_t - t * t, tol * max(1.0, cap_t * cap_t))
        if disc is None:
            diag.rejected.append(f"T^2 - t^2 = {cap_t * cap_t - t * t:.3g} < 0: (s,S) complex, pruned")
            return []
        sq = math.sqrt(disc)
        for chi in (1.0, -1.0):
            rad = cap_t + chi * sq
            if rad > tol:
                s = math.sqrt(rad)
                add(s, t / s)
                add(-s, -t / s)
            elif rad > -tol and 2.0 * cap_t > tol:
                cap_s = math.sqrt(2.0 * cap_t)
                add(0.0, cap_s)
                add(0.0, -cap_s)
    return pairs


# ---------------------------------------------------------------------------
# n = 3: linear recovery of the vector parts


def recover_vectors(b: Multivector, ss: SSPair, tol: float = DEFAULT_TOL) -> Multivector | None:
    """Solve the six linear equations for (v, V) given (s, S).

    Returns None when the generic formulas are inapplicable (denominator
    s^2 - I^2 S^2 below tolerance): those (s, S) belong to a special case.
    """
    sig = b.sig
    if sig.n != 3:
        raise AlgebraError(f"recover_vectors needs p+q = 3, got {sig}")
    tab = _tables(sig)
    iota = tab.i_square
    s, cap_s = ss
    denom = 2.0 * (s * s - iota * cap_s * cap_s)
    if abs(denom) <= tol * max(1.0, s * s + cap_s * cap_s):
        return None
    c = b.coeffs
    v = []
    cap_v = []
    for i, (eps, pos) in enumerate(tab.vector_i):
        # [b_i; b_m] = [[2s, 2 iota S], [2 eps S, 2 eps s]] [v_i; V_i]
        bi = c[1 + i]
        bm = c[pos]
        det = eps * denom * 2.0
        v.append((2.0 * eps * s * bi - 2.0 * iota * cap_s * bm) / det)
        cap_v.append((2.0 * s * bm - 2.0 * eps * cap_s * bi) / det)
    return from_symmetric(sig, SymmetricForm(s, tuple(v), cap_s, tuple(cap_v)))


# ---------------------------------------------------------------------------
# n = 3: special cases (parametric families)


def _metric(tab) -> tuple[int, int, int]:
    return tab.vec_squares


def _ss_zero_families(b: Multivector, tol: float) -> list[ParametricFamily]:
    """s = S = 0: four free parameters (v2, v3, V2, V3), (v1, V1) solved."""
    sig = b.sig
    tab = _tables(sig)
    q1, q2, q3 = _metric(tab)
    iota = tab.i_square
    b0 = b.coeffs[0]
    b123 = b.coeffs[-1]
    params = ("v2", "v3", "V2", "V3")
    families: list[ParametricFamily] = []

    if iota == -1:
        # v1^2 - V1^2 and 2 v1 V1 prescribed: a complex square root, total on R^4
        def make(branch: int) -> ParametricFamily:
            def components(p: Sequence[float]) -> tuple[float, float]:
                v2, v3, cap_v2, cap_v3 = p
                beta0 = q1 * (b0 - q2 * (v2 * v2 - cap_v2 * cap_v2) - q3 * (v3 * v3 - cap_v3 * cap_v3))
                beta1 = q1 * (b123 - 2.0 * (q2 * v2 * cap_v2 + q3 * v3 * cap_v3))
                w = cmath.sqrt(complex(beta0, beta1))
                return branch * w.real, branch * w.imag

            def evaluate(p: Sequence[float]) -> Multivector:
                v1, cap_v1 = components(p)
                v2, v3, cap_v2, cap_v3 = p
                return from_symmetric(sig, SymmetricForm(
                    0.0, (v1, v2, v3), 0.0, (cap_v1, cap_v2, cap_v3)))

            return ParametricFamily(SS_ZERO, params, (branch,), evaluate, lambda p: True)

        families.extend(make(br) for br in (1, -1))
    else:
        # v1^2 + V1^2 = g0 and 2 v1 V1 = g1: (v1 +/- V1)^2 = g0 +/- g1
        def make(e1: int, e2: int) -> ParametricFamily:
            def radicands(p: Sequence[float]) -> tuple[float, float]:
                v2, v3, cap_v2, cap_v3 = p
                g0 = q1 * (b0 - q2 * (v2 * v2 + cap_v2 * cap_v2) - q3 * (v3 * v3 + cap_v3 * cap_v3))
                g1 = q1 * (b123 - 2.0 * (q2 * v2 * cap_v2 + q3 * v3 * cap_v3))
                return g0 + g1, g0 - g1

            def is_valid(p: Sequence[float]) -> bool:
                r1, r2 = radicands(p)
                return r1 >= -tol and r2 >= -tol

            def evaluate(p: Sequence[float]) -> Multivector:
                r1, r2 = radicands(p)
                r1 = _clamp(r1, tol)
                r2 = _clamp(r2, tol)
                if r1 is None or r2 is None:
                    raise ValueError("parameters outside the validity region")
                plus = e1 * math.sqrt(r1)
                minus = e2 * math.sqrt(r2)
                v1 = 0.5 * (plus + minus)
                cap_v1 = 0.5 * (plus - minus)
                v2, v3, cap_v2, cap_v3 = p
                return from_symmetric(sig, SymmetricForm(
                    0.0, (v1, v2, v3), 0.0, (cap_v1, cap_v2, cap_v3)))

            return ParametricFamily(SS_ZERO, params, (e1, e2), evaluate, is_valid)

        families.extend(make(e1, e2) for e1 in (1, -1) for e2 in (1, -1))
    return families


def _ss_equal_families(b: Multivector, eps_case: int, tol: float,
                       diag: Diagnostics) -> list[ParametricFamily]:
    """s = S != 0 (eps_case = +1) or s = -S != 0 (eps_case = -1), I^2 = +1 only.

    Free parameters (V2, V3); V1 comes from a quadratic, v_i = b_i/(2s) - eps V_i.
    The scalar s satisfies 16 s^4 - 4 (b0 + eps b123) s^2 + Q(b) = 0; both inner
    signs of that quadratic are enumerated, spurious ones die at the radicand
    or feasibility stage.
    """
    sig = b.sig
    tab = _tables(sig)
    q = _metric(tab)
    c = b.coeffs
    b0, b123 = c[0], c[-1]
    bv = (c[1], c[2], c[3])
    q_b = sum(qi * bi * bi for qi, bi in zip(q, bv))
    lin = b0 + eps_case * b123
    disc = _clamp(lin * lin - 4.0 * q_b, tol)
    tag = SS_PLUS if eps_case > 0 else SS_MINUS
    if disc is None:
        diag.rejected.append(f"{tag}: discriminant {lin * lin - 4.0 * q_b:.3g} < 0, no branch")
        return []
    families: list[ParametricFamily] = []
    sqrt_disc = math.sqrt(disc)
    for inner in (1, -1):
        s_sq = (lin + inner * sqrt_disc) / 8.0
        if s_sq <= tol:
            diag.rejected.append(f"{tag}: s^2 = {s_sq:.3g} <= 0 for inner sign {inner:+d}")
            continue
        for outer in (1, -1):
            s0 = outer * math.sqrt(s_sq)
            for eta in (1, -1):
                families.append(_make_ss_equal_family(
                    sig, q, c, eps_case, s0, (inner, outer, eta), tol))
    return families


def _make_ss_equal_family(sig: Signature, q: tuple[int, int, int], c: Sequence[float],
                          eps_case: int, s0: float, signs: tuple[int, int, int],
                          tol: float) -> ParametricFamily:
    q1, q2, q3 = q
    b0, b123 = c[0], c[-1]
    b1, b2, b3 = c[1], c[2], c[3]
    q_b = q1 * b1 * b1 + q2 * b2 * b2 + q3 * b3 * b3
    eta = signs[2]
    # quadratic a V1^2 + bq V1 + cq(V2,V3) = 0 from the scalar/pseudoscalar pair
    a_coef = 4.0 * q1
    b_coef = -(2.0 * eps_case / s0) * q1 * b1
    const = q_b / (4.0 * s0 * s0) - (b0 - eps_case * b123)

    def v1_disc(p: Sequence[float]) -> float:
        cap_v2, cap_v3 = p
        c_coef = (4.0 * (q2 * cap_v2 * cap_v2 + q3 * cap_v3 * cap_v3)
                  - (2.0 * eps_case / s0) * (q2 * b2 * cap_v2 + q3 * b3 * cap_v3)
                  + const)
        return b_coef * b_coef - 4.0 * a_coef * c_coef

    def is_valid(p: Sequence[float]) -> bool:
        return v1_disc(p) >= -tol

    def evaluate(p: Sequence[float]) -> Multivector:
        disc = _clamp(v1_disc(p), tol)
        if disc is None:
            raise ValueError("parameters outside the validity region")
        cap_v1 = (-b_coef + eta * math.sqrt(disc)) / (2.0 * a_coef)
        cap_v2, cap_v3 = p
        cap_v = (cap_v1, cap_v2, cap_v3)
        v = tuple(bi / (2.0 * s0) - eps_case * cvi for bi, cvi in zip((b1, b2, b3), cap_v))
        return from_symmetric(sig, SymmetricForm(s0, v, eps_case * s0, cap_v))

    tag = SS_PLUS if eps_case > 0 else SS_MINUS
    return ParametricFamily(tag, ("V2", "V3"), signs, evaluate, is_valid)


def special_case_roots(b: Multivector, tol: float = DEFAULT_TOL,
                       diagnostics: Diagnostics | None = None
                       ) -> tuple[list[Multivector], list[ParametricFamily]]:
    """Special-case branches for p+q = 3.

    Isolated roots always come out of the generic enumeration, so the first
    element is empty; the families carry the continua.  Case conditions are
    derived from the structure constants: with s = eps S the bivector row
    forces b_{m(i)} = eps eps_i b_i, and s = S = 0 forces grades 1 and 2 of B
    to vanish.
    """
    sig = b.sig
    if sig.n != 3:
        raise AlgebraError(f"special_case_roots needs p+q = 3, got {sig}")
    diag = diagnostics or Diagnostics()
    tab = _tables(sig)
    c = b.coeffs
    families: list[ParametricFamily] = []
    if tab.i_square == 1:
        for eps_case in (1, -1):
            ok = all(
                abs(c[pos] - eps_case * eps * c[1 + i]) <= tol
                for i, (eps, pos) in enumerate(tab.vector_i)
            )
            if ok:
                tag = SS_PLUS if eps_case > 0 else SS_MINUS
                got = _ss_equal_families(b, eps_case, tol, diag)
                if got:
                    diag.cases.append(f"{tag}: {len(got)} family branches")
                families.extend(got)
    center = all(abs(c[k]) <= tol for k in tab.grade1 + tab.grade2)
    if center:
        got = _ss_zero_families(b, tol)
        diag.cases.append(f"{SS_ZERO}: {len(got)} family branches")
        families.extend(got)
    return [], families


# fast paths for s = +/-S in Cl(3,0)/Cl(1,2); must agree with the generic
# pipeline (they are simpler forms of it, not independent case branches)


def ss_equal_fastpath(b: Multivector, eps_case: int, tol: float = DEFAULT_TOL) -> list[SSPair]:
    """s = eps_case * S scalars for I^2 = -1 algebras, in closed form."""
    sig = b.sig
    tab = _tables(sig)
    if sig.n != 3 or tab.i_square != -1:
        raise AlgebraError("fast path applies to Cl(3,0)/Cl(1,2) only")
    inv = invariants3(b)
    b0, b123 = b.coeffs[0], b.coeffs[-1]
    out: list[SSPair] = []
    if abs(b0) > tol:
        rad = eps_case * (b123 + inv.bI / (2.0 * b0))
        rc = _clamp(rad, tol)
        if rc is not None:
            s = 0.5 * math.sqrt(rc)
            out += [SSPair(s, eps_case * s), SSPair(-s, -eps_case * s)]
    else:
        neg = _clamp(-inv.bS, tol)
        if neg is not None:
            for inner in (1.0, -1.0):
                rc = _clamp(eps_case * b123 + inner * math.sqrt(neg), tol)
                if rc is not None:
                    s = 0.5 * math.sqrt(rc)
                    out += [SSPair(s, eps_case * s), SSPair(-s, -eps_case * s)]
    return out


# ---------------------------------------------------------------------------
# feasibility probe


def probe_family(family: ParametricFamily, points: int = 625, span: float = 3.0) -> int:
    """Grid-probe the validity region; fills probe_points/probe_feasible."""
    dim = family.dimension
    per_axis = max(2, round(points ** (1.0 / dim)))
    axis = [(-span + 2.0 * span * k / (per_axis - 1)) for k in range(per_axis)]
    feasible = 0
    total = 0
    for p in itertools.product(axis, repeat=dim):
        total += 1
        if family.is_valid(p):
            feasible += 1
    family.probe_points = total
    family.probe_feasible = feasible
    return feasible


# ---------------------------------------------------------------------------
# dispatch


def _sqrt_dim3(b: Multivector, tol: float) -> RootSet:
    sig = b.sig
    inv = invariants3(b)
    diag = Diagnostics(bS=inv.bS, bI=inv.bI, D=inv.D)
    if inv.D < -tol:
        diag.notes.append("determinant negative -- necessary condition violated")
        return RootSet([], [], diag)
    candidates: list[Multivector] = []
    tt_pairs = _solve_tT(b.coeffs[0], b.coeffs[-1], inv, _tables(sig).i_square, tol, diag)
    if tt_pairs:
        diag.cases.append(f"generic: {len(tt_pairs)} (t,T) pairs")
    routed_special = False
    for tt in tt_pairs:
        for ss in solve_sS(tt, sig, tol, diag):
            cand = recover_vectors(b, ss, tol)
            if cand is None:
                routed_special = True
            else:
                candidates.append(cand)
    if routed_special:
        diag.notes.append("generic formulas inapplicable for some (s,S): routed to special case")
    _, families = special_case_roots(b, tol, diag)
    return RootSet(_filter_candidates(candidates, b, tol, diag), families, diag)


def sqrt(b: Multivector, tol: float = DEFAULT_TOL, probe_points: int = 625,
         probe_span: float = 3.0) -> RootSet:
    """Every square root of B: isolated roots in radicals plus parametric families.

    Dispatches on p+q; runs the determinant precheck, the generic pipeline and
    the special cases; residual-filters and deduplicates isolated candidates;
    grid-probes each family's validity region and flags infeasible ones.
    An empty RootSet is the no-root signal, with diagnostics explaining why.
    """
    n = b.sig.n
    if n == 1:
        rs = sqrt_dim1(b, tol)
    elif n == 2:
        rs = sqrt_dim2(b, tol)
    else:
        rs = _sqrt_dim3(b, tol)
    for family in rs.families:
        feasible = probe_family(family, probe_points, probe_span)
        if feasible == 0:
            rs.diagnostics.notes.append(
                f"family {family.case_tag}{family.branch_signs}: no feasible sample "
                f"in {family.probe_points}-point probe")
    return rs
