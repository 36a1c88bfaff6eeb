"""Brute-force numerical verifier for the square-root solver.

Solves the 2^n-dimensional quadratic system A*A = B by multistart damped
Newton iteration (minimum-norm steps, so manifolds of roots are handled too),
then clusters the converged points.  This is the independent ground truth
used to guard against missed isolated roots; it is probabilistic evidence,
not a certificate.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

from .algebra import Multivector, Signature, SignatureMismatch, _tables, to_symmetric
from .roots import DIM2_S0, SS_MINUS, SS_PLUS, SS_ZERO, ParametricFamily, RootSet


@dataclass(frozen=True)
class OracleConfig:
    """Multistart search knobs; identical config + seed gives identical output."""

    n_starts: int = 512
    seed: int = 0
    box: tuple[float, float] = (-5.0, 5.0)
    newton_tol: float = 1e-12
    max_iters: int = 200
    cluster_radius: float = 1e-6

    def __post_init__(self) -> None:
        if self.n_starts < 1:
            raise ValueError("n_starts must be >= 1")
        if self.cluster_radius <= self.newton_tol:
            raise ValueError("cluster_radius must exceed newton_tol")


@lru_cache(maxsize=None)
def _structure_tensor(sig: Signature) -> np.ndarray:
    """C[i,j,k] with (x y)_k = sum_ij C[i,j,k] x_i y_j."""
    tab = _tables(sig)
    dim = sig.dim
    tensor = np.zeros((dim, dim, dim))
    for i in range(dim):
        for j in range(dim):
            s, k = tab.gp[i][j]
            tensor[i, j, k] += s
    tensor.setflags(write=False)
    return tensor


def residual(a: Multivector, b: Multivector) -> float:
    """||A*A - B||_inf."""
    if a.sig != b.sig:
        raise SignatureMismatch(f"incompatible operands: {a.sig} vs {b.sig}")
    return (a.square() - b).norm_inf()


def numeric_root_search(b: Multivector, config: OracleConfig = OracleConfig()) -> list[Multivector]:
    """Converged, clustered numerical roots of A*A = B (may be empty)."""
    sig = b.sig
    tensor = _structure_tensor(sig)
    target = np.asarray(b.coeffs)
    rng = np.random.default_rng(config.seed)
    x = rng.uniform(config.box[0], config.box[1], size=(config.n_starts, sig.dim))
    dim = sig.dim
    flat_l = tensor.reshape(dim, dim * dim)  # sum over the left factor
    flat_r = np.ascontiguousarray(tensor.transpose(1, 0, 2)).reshape(dim, dim * dim)

    def squares(pts: np.ndarray) -> np.ndarray:
        left = (pts @ flat_l).reshape(len(pts), dim, dim)  # (m, j, k)
        return np.matmul(pts[:, None, :], left)[:, 0, :]

    f = squares(x) - target
    res = np.max(np.abs(f), axis=1)
    active = np.ones(len(x), dtype=bool)
    for _ in range(config.max_iters):
        live = active & (res > config.newton_tol)
        if not live.any():
            break
        idx = np.flatnonzero(live)
        xa = x[idx]
        fa = f[idx]
        # J[m,k,l] = d f_k / d x_l, linear in x since the map is quadratic
        jac = ((xa @ flat_l).reshape(len(idx), dim, dim)
               + (xa @ flat_r).reshape(len(idx), dim, dim)).transpose(0, 2, 1)
        # LU solve where J is regular; minimum-norm (pinv) step at exact
        # rank deficiency, which is what root manifolds produce
        step = None
        try:
            step = -np.linalg.solve(jac, fa[:, :, None])[:, :, 0]
        except np.linalg.LinAlgError:
            pass
        if step is None or not np.isfinite(step).all():
            step = -np.einsum("mlk,mk->ml", np.linalg.pinv(jac), fa)
        g0 = np.einsum("mk,mk->m", fa, fa)
        lam = np.ones(len(idx))
        for _ in range(14):
            trial = xa + lam[:, None] * step
            ft = squares(trial) - target
            gt = np.einsum("mk,mk->m", ft, ft)
            worse = gt >= g0
            if not worse.any():
                break
            lam[worse] *= 0.5
        trial = xa + lam[:, None] * step
        ft = squares(trial) - target
        gt = np.einsum("mk,mk->m", ft, ft)
        improved = gt < g0
        upd = idx[improved]
        x[upd] = trial[improved]
        f[upd] = ft[improved]
        res[upd] = np.max(np.abs(ft[improved]), axis=1)
        # freeze starts that stopped making meaningful progress (crawling
        # toward local minima of ||F||^2 on no-root inputs); genuinely
        # converging rows contract g by orders of magnitude per step and
        # drop out via `live` instead
        stalled = ~improved | (g0 - gt <= 1e-6 * np.maximum(g0, 1e-30))
        active[idx[stalled]] = False

    good = x[np.max(np.abs(squares(x) - target), axis=1) <= config.newton_tol]
    if len(good) == 0:
        return []
    order = np.lexsort(good.T[::-1])
    reps: list[np.ndarray] = []
    for row in good[order]:
        if all(np.max(np.abs(row - rep)) > config.cluster_radius for rep in reps):
            reps.append(row)
    return [Multivector(sig, rep) for rep in reps]


# ---------------------------------------------------------------------------
# comparing the symbolic and numeric root sets


@dataclass
class ComparisonReport:
    """Cross-check of solver output against the numeric search.

    ``unmatched_numeric`` must be empty for acceptance (a numeric root the
    solver missed); ``unmatched_isolated`` only indicates oracle
    under-sampling and is a warning.
    """

    unmatched_numeric: list[Multivector] = field(default_factory=list)
    unmatched_isolated: list[Multivector] = field(default_factory=list)
    matched_numeric: int = 0
    continuum_suspected: bool = False
    notes: list[str] = field(default_factory=list)


def _family_accepts(family: ParametricFamily, root: Multivector, tol: float) -> bool:
    """Constraint-based membership: the root's (s, S) must satisfy the case tag."""
    if family.case_tag == DIM2_S0:
        return abs(root.coeffs[0]) <= tol
    form = to_symmetric(root)
    if family.case_tag == SS_PLUS:
        return abs(form.s - form.S) <= tol and abs(form.s) > tol
    if family.case_tag == SS_MINUS:
        return abs(form.s + form.S) <= tol and abs(form.s) > tol
    if family.case_tag == SS_ZERO:
        return abs(form.s) <= tol and abs(form.S) <= tol
    return False


def compare_root_sets(symbolic: RootSet, numeric: list[Multivector],
                      tol: float = 1e-6) -> ComparisonReport:
    """Match numeric clusters against isolated roots and family constraints."""
    report = ComparisonReport()
    sig = numeric[0].sig if numeric else (
        symbolic.isolated[0].sig if symbolic.isolated else None)
    isolated_bound = 16 if sig is not None and (sig.p, sig.q) == (2, 1) else 4
    if len(numeric) > 4 * isolated_bound:
        report.continuum_suspected = True
        report.notes.append(
            f"{len(numeric)} numeric clusters: continuum suspected, "
            "matching switched to case-tag constraints")
    for root in numeric:
        matched = any(
            max(abs(x - y) for x, y in zip(root.coeffs, iso.coeffs)) <= tol
            for iso in symbolic.isolated)
        if not matched and root.sig.n >= 2:
            matched = any(_family_accepts(f, root, tol) for f in symbolic.families)
        if matched:
            report.matched_numeric += 1
        else:
            report.unmatched_numeric.append(root)
    for iso in symbolic.isolated:
        found = any(
            max(abs(x - y) for x, y in zip(root.coeffs, iso.coeffs)) <= tol
            for root in numeric)
        if not found:
            report.unmatched_isolated.append(iso)
    if report.unmatched_isolated:
        report.notes.append(
            f"{len(report.unmatched_isolated)} isolated roots unseen by the oracle "
            "(under-sampling warning)")
    return report
