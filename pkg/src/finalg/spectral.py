"""Invertibility, polynomial inverses, spectra and Neumann-series resolvents."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Literal

import numpy as np

from .algebra import AlgebraElement, regular_rep, regular_rep_right
from .config import DEFAULTS
from .errors import ConvergenceDomainError, ConvergenceError, NotInvertibleError, SingularMatrixError
from .linalg import char_poly, cluster_points, determinant, poly_roots, solve_linear
from .norms import DEFAULT_ALGEBRA_NORM, NormKind, algebra_norm


@dataclass(frozen=True)
class Spectrum:
    points: np.ndarray                      # eigenvalues of L_a, with multiplicity
    clusters: tuple[tuple[complex, int], ...]  # sorted by (re, im)

    @property
    def values(self) -> list[complex]:
        return [c for c, _ in self.clusters]

    @property
    def radius(self) -> float:
        return float(np.max(np.abs(self.points)))


def _threshold(L: np.ndarray, tol: float) -> float:
    return tol * (1 + float(np.max(np.abs(L)))) ** L.shape[0]


def spectrum(a: AlgebraElement, tol: float | None = None, root_tol: float | None = None) -> Spectrum:
    """Eigenvalues of the left regular representation, i.e. the lam for
    which ``lam*e - a`` has no inverse. Points closer than ``tol`` are
    merged into one cluster located at their mean."""
    tol = DEFAULTS.cluster_radius if tol is None else tol
    points = poly_roots(char_poly(regular_rep(a)), root_tol)
    clusters = []
    for g in cluster_points(points, tol):
        clusters.append((complex(np.mean(points[g])), int(g.size)))
    clusters.sort(key=lambda c: (c[0].real, c[0].imag))
    return Spectrum(points, tuple(clusters))


@dataclass(frozen=True)
class Invertibility:
    invertible: bool
    determinant: complex
    threshold: float
    inverse: AlgebraElement | None = None

    def __bool__(self):
        return self.invertible


def is_invertible(a: AlgebraElement, tol: float | None = None) -> Invertibility:
    """Scaled determinant test on L_a; an invertible result carries the
    Cayley-Hamilton inverse as certificate."""
    tol = DEFAULTS.invertibility if tol is None else tol
    L = regular_rep(a)
    det = determinant(L)
    limit = _threshold(L, tol)
    if abs(det) <= limit:
        return Invertibility(False, det, limit)
    return Invertibility(True, det, limit, invert_cayley_hamilton(a, tol))


def invert_cayley_hamilton(a: AlgebraElement, tol: float | None = None) -> AlgebraElement:
    """``a^-1 = -(a^(n-1) + c_(n-1) a^(n-2) + ... + c_1 e) / c_0`` where
    ``c_k`` are the characteristic-polynomial coefficients of L_a."""
    tol = DEFAULTS.invertibility if tol is None else tol
    L = regular_rep(a)
    c = char_poly(L).coeffs
    n = L.shape[0]
    limit = _threshold(L, tol)
    if abs(c[0]) <= limit:
        raise NotInvertibleError(f"constant term {abs(c[0]):.3g} is below threshold {limit:.3g}")
    alg = a.algebra
    acc = alg.one()
    for k in range(n - 1, 0, -1):
        acc = acc * a + c[k] * alg.one()
    return acc * (-1 / c[0])


def one_sided_inverse(
    a: AlgebraElement,
    side: Literal["left", "right"],
    tol: float | None = None,
) -> AlgebraElement | None:
    """Solve ``a*y = e`` (right) or ``y*a = e`` (left) as a linear system.

    Returns None when the system is singular. A solution is then checked
    to be a two-sided inverse; failure raises ConvergenceError, since in
    exact arithmetic a one-sided inverse in a finite-dimensional algebra
    is always two-sided.
    """
    tol = DEFAULTS.inverse_check if tol is None else tol
    if side == "right":
        M = regular_rep(a)
    elif side == "left":
        M = regular_rep_right(a)
    else:
        raise ValueError(f"side must be 'left' or 'right', got {side!r}")
    alg = a.algebra
    try:
        y = alg.element(solve_linear(M, alg.identity))
    except SingularMatrixError:
        return None
    scale = 1 + float(np.max(np.abs(y.coords)))
    e = alg.identity
    err = max(np.max(np.abs((a * y).coords - e)), np.max(np.abs((y * a).coords - e)))
    if err > tol * scale:
        raise ConvergenceError(
            f"{side} inverse is not two-sided: residual {err:.3g} exceeds {tol * scale:.3g}", detail=y)
    return y


@dataclass(frozen=True)
class ResolventResult:
    value: AlgebraElement
    terms_used: int
    error_bound: float
    norm: float
    norm_kind: NormKind


def neumann_tail_bound(norm: float, lam_abs: float, terms: int) -> float:
    """Geometric bound on the part of ``sum_j lam^(-j-1) a^j`` left out
    after ``terms`` terms."""
    return (norm / lam_abs) ** terms / (lam_abs - norm)


def neumann_terms(norm: float, lam_abs: float, target_error: float) -> int:
    """Fewest terms whose tail bound is at most ``target_error``."""
    if norm == 0.0:
        return 1
    ratio = norm / lam_abs
    est = math.log(target_error * (lam_abs - norm)) / math.log(ratio)
    terms = max(1, math.ceil(est))
    while terms > 1 and neumann_tail_bound(norm, lam_abs, terms - 1) <= target_error:
        terms -= 1
    while neumann_tail_bound(norm, lam_abs, terms) > target_error:
        terms += 1
    return terms


def resolvent_neumann(
    a: AlgebraElement,
    lam: complex,
    target_error: float | None = None,
    norm_kind: NormKind = DEFAULT_ALGEBRA_NORM,
    max_terms: int | None = None,
) -> ResolventResult:
    """``(lam*e - a)^-1`` as the truncated series ``lam^-1 sum_j (a/lam)^j``.

    Requires ``|lam| > ||a||`` in the chosen algebra norm. The number of
    terms is fixed in advance by the geometric tail bound, so
    ``error_bound`` is an a-priori guarantee.
    """
    target_error = DEFAULTS.resolvent_error if target_error is None else target_error
    max_terms = DEFAULTS.resolvent_max_terms if max_terms is None else max_terms
    lam = complex(lam)
    norm = algebra_norm(a, norm_kind)
    lam_abs = abs(lam)
    if not lam_abs > norm:
        raise ConvergenceDomainError(lam_abs, norm)
    terms = neumann_terms(norm, lam_abs, target_error)
    if terms > max_terms:
        raise ConvergenceError(f"Neumann series needs {terms} terms, cap is {max_terms}")
    alg = a.algebra
    step = a * (1 / lam)
    term = alg.one()
    total = alg.one()
    for _ in range(terms - 1):
        term = term * step
        total = total + term
    value = total * (1 / lam)
    return ResolventResult(value, terms, neumann_tail_bound(norm, lam_abs, terms), norm, norm_kind)
