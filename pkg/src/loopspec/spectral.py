"""Dense symmetric eigensolver and the spectral claim verifiers.

The solver is a cyclic Jacobi iteration: deterministic, self-contained, and
easy to account for numerically, which is all that desk-scale Laplacians
(order <= a few hundred) need. On top of it sit the closed-form bounds, the
positivity test for pseudo-connected Laplacians, the lifted-spectrum
inclusion check, and ``verify_all``, which runs every claim applicable to a
graph and returns a structured report.

Check identifiers used in reports (fixed wire format):

* ``eq2``        -- algebraic connectivity of a connected loopless graph is
                    at least 2(1 - cos(pi/N))
* ``eq3``        -- for a loopless graph, max eigenvalue <= 2 * max degree
* ``eq8``        -- with loops present, max eigenvalue <= 2 * max degree of
                    the loop-stripped graph + 1
* ``lemma1``     -- pseudo-connected graphs have positive definite Laplacians
* ``eq6``        -- the base spectrum embeds in the lifted spectrum and stays
                    inside [0, 2 d(stripped) + 1]
* ``eq7``        -- for pseudo-connected graphs the matched lifted eigenvalues
                    are strictly positive
* ``lift-eigvec`` -- mirroring a base eigenvector as [v; 0; -v] gives a lifted
                    eigenvector with the same eigenvalue
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .graphs import Graph, connected_components, is_pseudo_connected, max_degree, strip_self_loops
from .laplacian import laplacian_of
from .lifting import lift

__all__ = [
    "SOLVER_TOL",
    "MATCH_TOL",
    "POSITIVITY_TOL",
    "JACOBI_MAX_SWEEPS",
    "CHECK_IDS",
    "JacobiConvergenceError",
    "Spectrum",
    "SubsetMatch",
    "CheckResult",
    "VerificationReport",
    "eigen_sym",
    "algebraic_connectivity",
    "fiedler_lower_bound",
    "degree_upper_bound",
    "spectrum_subset",
    "verify_all",
]

SOLVER_TOL = 1e-12      # relative off-diagonal stopping threshold
MATCH_TOL = 1e-8        # absolute eigenvalue match tolerance, scaled by max(1, rho)
POSITIVITY_TOL = 1e-8   # positive-definiteness threshold, scaled by max(1, rho)
JACOBI_MAX_SWEEPS = 50

CHECK_IDS = ("eq2", "eq3", "eq8", "lemma1", "eq6", "eq7", "lift-eigvec")

_EPS = float(np.finfo(np.float64).eps)


class JacobiConvergenceError(RuntimeError):
    """The Jacobi sweep cap was reached before the off-diagonal norm converged."""


@dataclass(frozen=True)
class Spectrum:
    """Full eigendecomposition of a symmetric matrix.

    ``eigenvalues`` are ascending; column j of ``eigenvectors`` pairs with
    eigenvalue j. ``residual`` is the max over eigenpairs of ||M v - t v||.
    """

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray
    residual: float

    @property
    def order(self) -> int:
        return int(self.eigenvalues.size)

    @property
    def spectral_radius(self) -> float:
        return float(np.max(np.abs(self.eigenvalues))) if self.eigenvalues.size else 0.0


def _offdiag_norm(a: np.ndarray) -> float:
    off = a.copy()
    np.fill_diagonal(off, 0.0)
    return float(np.linalg.norm(off))


def eigen_sym(matrix: np.ndarray, tol: float = SOLVER_TOL) -> Spectrum:
    """Eigendecomposition of a symmetric matrix by cyclic Jacobi rotations.

    Sweeps rotate every off-diagonal pair (p, q) in a fixed row-major order,
    so the result is deterministic for a given input. Iteration stops once
    the off-diagonal Frobenius norm drops to ``tol`` times the Frobenius norm
    of the input (floored at machine-epsilon scale). Failure to converge
    within the sweep cap raises :class:`JacobiConvergenceError` rather than
    returning a partial answer.

    Raises ``ValueError`` for non-square or (exactly) non-symmetric input and
    for ``tol <= 0``.
    """
    if tol <= 0:
        raise ValueError(f"tol must be positive, got {tol}")
    raw = np.asarray(matrix)
    if raw.ndim != 2 or raw.shape[0] != raw.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {raw.shape}")
    if not np.array_equal(raw, raw.T):
        raise ValueError("matrix is not symmetric")
    m = raw.astype(np.float64)
    n = m.shape[0]
    a = m.copy()
    v = np.eye(n)
    fro = float(np.linalg.norm(a))
    if fro > 0.0 and n > 1:
        threshold = max(tol, _EPS) * fro
        # Pairs below `skip` contribute at most threshold^2/8 to the squared
        # off-norm in total, so skipping them cannot stall the stopping test.
        skip = threshold / (2.0 * n)
        sweeps = 0
        while _offdiag_norm(a) > threshold:
            if sweeps >= JACOBI_MAX_SWEEPS:
                raise JacobiConvergenceError(
                    f"no convergence after {JACOBI_MAX_SWEEPS} sweeps "
                    f"(off-diagonal norm {_offdiag_norm(a):.3e}, threshold {threshold:.3e})"
                )
            for p in range(n - 1):
                for q in range(p + 1, n):
                    apq = a[p, q]
                    if abs(apq) <= skip:
                        continue
                    theta = (a[q, q] - a[p, p]) / (2.0 * apq)
                    t = 1.0 / (abs(theta) + math.sqrt(theta * theta + 1.0))
                    if theta < 0.0:
                        t = -t
                    c = 1.0 / math.sqrt(t * t + 1.0)
                    s = t * c
                    rp = a[p, :].copy()
                    rq = a[q, :].copy()
                    a[p, :] = c * rp - s * rq
                    a[q, :] = s * rp + c * rq
                    cp = a[:, p].copy()
                    cq = a[:, q].copy()
                    a[:, p] = c * cp - s * cq
                    a[:, q] = s * cp + c * cq
                    a[p, q] = 0.0
                    a[q, p] = 0.0
                    vp = v[:, p].copy()
                    vq = v[:, q].copy()
                    v[:, p] = c * vp - s * vq
                    v[:, q] = s * vp + c * vq
            sweeps += 1
    order = np.argsort(np.diagonal(a), kind="stable")
    values = np.diagonal(a)[order].copy()
    vectors = v[:, order]
    res = m @ vectors - vectors * values
    residual = float(np.sqrt((res * res).sum(axis=0)).max())
    return Spectrum(values, vectors, residual)


def algebraic_connectivity(g: Graph, tol: float = SOLVER_TOL) -> float:
    """Second-smallest Laplacian eigenvalue of a loopless graph."""
    if g.n < 2:
        raise ValueError("algebraic connectivity needs at least 2 vertices")
    if g.loop_count:
        raise ValueError("algebraic connectivity is defined for loopless graphs")
    return float(eigen_sym(laplacian_of(g), tol).eigenvalues[1])


def fiedler_lower_bound(n: int) -> float:
    """Lower bound 2(1 - cos(pi/n)) on the algebraic connectivity of a
    connected loopless graph with n vertices; attained by path graphs."""
    if n < 2:
        raise ValueError(f"bound needs n >= 2, got {n}")
    return 2.0 * (1.0 - math.cos(math.pi / n))


def degree_upper_bound(g: Graph) -> float:
    """Upper bound on the largest Laplacian eigenvalue.

    Loopless graphs: 2 * max degree. With loops: 2 * max degree of the
    loop-stripped graph + 1.
    """
    if g.loop_count:
        return 2.0 * max_degree(strip_self_loops(g)) + 1.0
    return 2.0 * max_degree(g)


@dataclass(frozen=True)
class SubsetMatch:
    """Witness for a one-sided spectrum inclusion test.

    ``pairs`` maps indices of the candidate spectrum to the distinct indices
    of the containing spectrum they matched (injective). On failure
    ``unmatched_index`` is the first candidate eigenvalue left unmatched and
    ``unmatched_gap`` its distance to the nearest remaining target
    (``inf`` when the targets ran out).
    """

    ok: bool
    pairs: tuple[tuple[int, int], ...]
    worst_gap: float
    unmatched_index: int | None = None
    unmatched_gap: float = 0.0


def _eigenvalue_array(spectrum: Spectrum | Sequence[float]) -> np.ndarray:
    if isinstance(spectrum, Spectrum):
        return spectrum.eigenvalues
    return np.sort(np.asarray(spectrum, dtype=np.float64))


def spectrum_subset(
    a: Spectrum | Sequence[float],
    b: Spectrum | Sequence[float],
    match_tol: float,
) -> SubsetMatch:
    """Test whether every eigenvalue of ``a`` matches a distinct eigenvalue of
    ``b`` within ``match_tol``.

    Greedy two-pointer over the sorted lists: each value of ``a`` takes the
    smallest still-available value of ``b`` within tolerance, which is optimal
    for interval matching on sorted sequences. Repeated eigenvalues therefore
    need matching multiplicity in ``b``.
    """
    if match_tol <= 0:
        raise ValueError(f"match_tol must be positive, got {match_tol}")
    av = _eigenvalue_array(a)
    bv = _eigenvalue_array(b)
    pairs: list[tuple[int, int]] = []
    worst = 0.0
    j = 0
    for i, x in enumerate(av):
        while j < bv.size and bv[j] < x - match_tol:
            j += 1
        if j < bv.size and abs(bv[j] - x) <= match_tol:
            worst = max(worst, abs(float(bv[j]) - float(x)))
            pairs.append((i, j))
            j += 1
        else:
            gap = float(np.min(np.abs(bv[j:] - x))) if j < bv.size else math.inf
            return SubsetMatch(False, tuple(pairs), worst, i, gap)
    return SubsetMatch(True, tuple(pairs), worst)


@dataclass(frozen=True)
class CheckResult:
    """One verified claim: its id, outcome, and signed margin (positive =
    satisfied with slack)."""

    id: str
    passed: bool
    margin: float


@dataclass(frozen=True)
class VerificationReport:
    """All claims applicable to one graph, with the tolerances that were used."""

    n: int
    loop_count: int
    components: int
    pseudo_connected: bool
    checks: tuple[CheckResult, ...]
    tolerances: dict[str, float]

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def failed_checks(self) -> list[CheckResult]:
        return [c for c in self.checks if not c.passed]

    def to_json_dict(self) -> dict:
        return {
            "graph": {
                "n": self.n,
                "q": self.loop_count,
                "components": self.components,
                "pseudo_connected": self.pseudo_connected,
            },
            "checks": [
                {"id": c.id, "pass": c.passed, "margin": c.margin} for c in self.checks
            ],
            "tolerances": dict(self.tolerances),
        }


def verify_all(
    g: Graph,
    match_tol: float = MATCH_TOL,
    solver_tol: float = SOLVER_TOL,
) -> VerificationReport:
    """Run every spectral check applicable to ``g`` and report margins.

    Checks and applicability:

    * ``eq2``   connected loopless graphs with >= 2 vertices
    * ``eq3``   loopless graphs; ``eq8`` replaces it when loops are present
    * ``lemma1`` pseudo-connected graphs only
    * ``eq6``   every graph (a loopless lift just has an isolated middle vertex)
    * ``eq7``   pseudo-connected graphs only
    * ``lift-eigvec`` every graph

    Absolute tolerances are ``match_tol`` scaled by max(1, spectral radius)
    of the matrix each check concerns. Solver non-convergence propagates.
    """
    lap = laplacian_of(g)
    spec = eigen_sym(lap, solver_tol)
    lifted = lift(g)
    lap_lift = laplacian_of(lifted.lifted)
    spec_lift = eigen_sym(lap_lift, solver_tol)

    parts = connected_components(g)
    pseudo = is_pseudo_connected(g)
    loopless = g.loop_count == 0

    tol_base = match_tol * max(1.0, spec.spectral_radius)
    tol_lift = match_tol * max(1.0, spec_lift.spectral_radius)
    pos_base = POSITIVITY_TOL * max(1.0, spec.spectral_radius)
    pos_lift = POSITIVITY_TOL * max(1.0, spec_lift.spectral_radius)

    lam_min = float(spec.eigenvalues[0])
    lam_max = float(spec.eigenvalues[-1])

    checks: list[CheckResult] = []

    if parts.count == 1 and loopless and g.n >= 2:
        margin = float(spec.eigenvalues[1]) - fiedler_lower_bound(g.n)
        checks.append(CheckResult("eq2", margin >= -tol_base, margin))

    degree_margin = degree_upper_bound(g) - lam_max
    checks.append(CheckResult("eq3" if loopless else "eq8", degree_margin >= -tol_base, degree_margin))

    if pseudo:
        margin = lam_min - pos_base
        checks.append(CheckResult("lemma1", margin > 0.0, margin))

    match = spectrum_subset(spec, spec_lift, tol_lift)
    interval_bound = 2.0 * max_degree(strip_self_loops(g)) + 1.0
    match_margin = (tol_lift - match.worst_gap) if match.ok else (tol_lift - match.unmatched_gap)
    margin6 = min(match_margin, interval_bound + tol_lift - lam_max)
    checks.append(CheckResult("eq6", match.ok and margin6 >= 0.0, margin6))

    if pseudo:
        if match.ok:
            matched_min = min(float(spec_lift.eigenvalues[j]) for _, j in match.pairs)
            margin = matched_min - pos_lift
            checks.append(CheckResult("eq7", margin > 0.0, margin))
        else:
            # cannot certify positivity of an incomplete matching
            checks.append(CheckResult("eq7", False, -math.inf))

    # [v; 0; -v] built from each base eigenvector, normalized, against the
    # lifted Laplacian.
    mirrored = np.vstack(
        [spec.eigenvectors, np.zeros((1, g.n)), -spec.eigenvectors]
    ) / math.sqrt(2.0)
    res = lap_lift @ mirrored - mirrored * spec.eigenvalues
    worst_res = float(np.sqrt((res * res).sum(axis=0)).max())
    checks.append(CheckResult("lift-eigvec", worst_res <= tol_lift, tol_lift - worst_res))

    return VerificationReport(
        n=g.n,
        loop_count=g.loop_count,
        components=parts.count,
        pseudo_connected=pseudo,
        checks=tuple(checks),
        tolerances={
            "solver_tol": solver_tol,
            "match_tol": match_tol,
            "match_tol_scaled_base": tol_base,
            "match_tol_scaled_lifted": tol_lift,
            "positivity_threshold_base": pos_base,
            "positivity_threshold_lifted": pos_lift,
        },
    )
