"""Dense complex linear algebra: LU, determinants, characteristic
polynomials, polynomial roots and matrix polynomials.

Matrices are 2-D ``complex128`` numpy arrays. Polynomial coefficients are
stored in ascending order, so ``coeffs[j]`` multiplies ``lam**j``.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

import numpy as np

from .config import DEFAULTS
from .errors import ConvergenceError, DimensionError, DomainError, SingularMatrixError


def as_matrix(m) -> np.ndarray:
    a = np.asarray(m, dtype=np.complex128)
    if a.ndim != 2:
        raise DimensionError(f"expected a 2-D matrix, got shape {a.shape}")
    return a


def as_square(m) -> np.ndarray:
    a = as_matrix(m)
    if a.shape[0] != a.shape[1]:
        raise DimensionError(f"expected a square matrix, got shape {a.shape}")
    if a.shape[0] == 0:
        raise DimensionError("matrix must have positive size")
    return a


@dataclass(frozen=True, eq=False)
class Polynomial:
    """Complex polynomial with ascending coefficients."""

    coeffs: np.ndarray

    def __post_init__(self):
        c = np.array(np.atleast_1d(self.coeffs), dtype=np.complex128)
        if c.ndim != 1:
            raise DimensionError("coefficients must be a 1-D sequence")
        c.setflags(write=False)
        object.__setattr__(self, "coeffs", c)

    @property
    def degree(self) -> int:
        """Highest index with a nonzero coefficient; -1 for the zero polynomial."""
        nz = np.flatnonzero(self.coeffs)
        return int(nz[-1]) if nz.size else -1

    @property
    def leading(self) -> complex:
        d = self.degree
        return complex(self.coeffs[d]) if d >= 0 else 0j

    def __call__(self, z):
        z = np.asarray(z, dtype=np.complex128)
        acc = np.zeros_like(z)
        for c in self.coeffs[::-1]:
            acc = acc * z + c
        return acc if acc.ndim else complex(acc)

    def __repr__(self):
        terms = ", ".join(f"{c:.6g}" for c in self.coeffs)
        return f"Polynomial([{terms}])"


def lu_factor(m) -> tuple[np.ndarray, np.ndarray, int]:
    """Row-pivoted LU of a square matrix.

    Returns ``(lu, perm, sign)`` with ``m[perm] = L @ U``, unit lower L
    stored below the diagonal, and ``sign`` the permutation parity. Zero
    pivot columns are left in place rather than raising.
    """
    a = as_square(m).copy()
    n = a.shape[0]
    perm = np.arange(n)
    sign = 1
    for k in range(n):
        p = k + int(np.argmax(np.abs(a[k:, k])))
        if p != k:
            a[[k, p]] = a[[p, k]]
            perm[[k, p]] = perm[[p, k]]
            sign = -sign
        pivot = a[k, k]
        if pivot == 0:
            continue
        a[k + 1:, k] /= pivot
        a[k + 1:, k + 1:] -= np.outer(a[k + 1:, k], a[k, k + 1:])
    return a, perm, sign


def determinant(m) -> complex:
    lu, _, sign = lu_factor(m)
    return complex(sign * np.prod(np.diag(lu)))


def solve_linear(a, b, pivot_tol: float | None = None) -> np.ndarray:
    """Solve ``a @ x = b`` by partial-pivoted LU.

    Raises SingularMatrixError when a pivot falls below
    ``pivot_tol * max|a|``.
    """
    pivot_tol = DEFAULTS.singular_pivot if pivot_tol is None else pivot_tol
    a = as_square(a)
    b = np.asarray(b, dtype=np.complex128)
    n = a.shape[0]
    if b.shape != (n,):
        raise DimensionError(f"right-hand side has shape {b.shape}, expected ({n},)")
    scale = float(np.max(np.abs(a)))
    lu, perm, _ = lu_factor(a)
    pivots = np.abs(np.diag(lu))
    if scale == 0.0 or np.min(pivots) < pivot_tol * scale:
        k = int(np.argmin(pivots))
        raise SingularMatrixError(f"pivot {k} has modulus {pivots[k]:.3g} (matrix scale {scale:.3g})")
    y = b[perm].copy()
    for i in range(1, n):
        y[i] -= lu[i, :i] @ y[:i]
    for i in range(n - 1, -1, -1):
        y[i] = (y[i] - lu[i, i + 1:] @ y[i + 1:]) / lu[i, i]
    return y


def char_poly(m) -> Polynomial:
    """Monic ``det(lam*I - m)`` by the Faddeev-LeVerrier trace recursion."""
    a = as_square(m)
    n = a.shape[0]
    eye = np.eye(n, dtype=np.complex128)
    c = np.zeros(n + 1, dtype=np.complex128)
    c[n] = 1.0
    acc = np.zeros_like(a)
    for k in range(1, n + 1):
        acc = a @ acc + c[n - k + 1] * eye
        c[n - k] = -np.trace(a @ acc) / k
    return Polynomial(c)


def poly_eval_at_matrix(p: Polynomial, m) -> np.ndarray:
    a = as_square(m)
    eye = np.eye(a.shape[0], dtype=np.complex128)
    coeffs = p.coeffs[: max(p.degree, 0) + 1]
    out = coeffs[-1] * eye
    for c in coeffs[-2::-1]:
        out = out @ a + c * eye
    return out


def cluster_points(points, radius: float) -> list[np.ndarray]:
    """Single-linkage groups of points closer than ``radius``; index arrays
    are returned in order of first member."""
    z = np.asarray(points, dtype=np.complex128)
    n = z.size
    parent = list(range(n))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    close = np.abs(z[:, None] - z[None, :]) <= radius
    for i, j in zip(*np.nonzero(np.triu(close, 1))):
        ri, rj = find(i), find(j)
        if ri != rj:
            parent[max(ri, rj)] = min(ri, rj)
    groups: dict[int, list[int]] = {}
    for i in range(n):
        groups.setdefault(find(i), []).append(i)
    return [np.array(g) for g in groups.values()]


def _taylor_coeffs(coeffs: np.ndarray, c: complex) -> np.ndarray:
    """Coefficients of ``p(c + w)`` in ``w`` by repeated synthetic division."""
    work = np.array(coeffs, dtype=np.complex128)[::-1]  # descending
    n = work.size - 1
    out = np.empty(n + 1, dtype=np.complex128)
    for k in range(n + 1):
        for i in range(1, n + 1 - k):
            work[i] += c * work[i - 1]
        out[k] = work[n - k]
    return out


def _abs_taylor_bound(coeffs: np.ndarray, c: complex, m: int) -> np.ndarray:
    # coefficientwise magnitude of the Taylor terms, used as a backward-error scale
    return np.array([
        sum(abs(coeffs[j]) * comb(j, k) * abs(c) ** (j - k) for j in range(k, coeffs.size))
        for k in range(m)
    ])


def _refine_multiple(coeffs: np.ndarray, c: complex, m: int, gamma: float, iters: int = 50):
    """Newton on the (m-1)-th derivative, where an m-fold root is simple.

    Returns the refined centre, or None if ``coeffs`` is not within
    ``gamma`` relative coefficient error of a polynomial with an m-fold
    root there.
    """
    for _ in range(iters):
        q = _taylor_coeffs(coeffs, c)
        if q[m] == 0:
            break
        step = q[m - 1] / (m * q[m])
        c -= step
        if abs(step) <= 1e-16 * (1 + abs(c)):
            break
    q = _taylor_coeffs(coeffs, c)
    if np.all(np.abs(q[:m]) <= gamma * _abs_taylor_bound(coeffs, c, m)):
        return complex(c)
    return None


def _merge_multiple(z, coeffs, radius, min_radius, gamma):
    out = z.copy()
    for g in cluster_points(z, radius):
        if g.size < 2:
            continue
        center = complex(np.mean(z[g]))
        refined = _refine_multiple(coeffs, center, g.size, gamma)
        if refined is not None and abs(refined - center) <= radius:
            out[g] = refined
        elif radius > min_radius:
            out[g] = _merge_multiple(z[g], coeffs, radius / 4, min_radius, gamma)
    return out


def poly_roots(
    p: Polynomial,
    tol: float | None = None,
    *,
    max_iter: int | None = None,
    step_tol: float | None = None,
    multiplicity_tol: float | None = None,
) -> np.ndarray:
    """All ``degree`` roots of ``p`` by Durand-Kerner iteration.

    Starting points are ``(0.4 + 0.9j)**k``. Repeated roots come back as a
    cluster of near-equal values; clusters that are numerically a single
    multiple root (within ``multiplicity_tol`` relative coefficient error)
    are replaced by their centroid. Every returned root satisfies
    ``|p(r)| <= tol * (1 + max|coeff|)``.
    """
    tol = DEFAULTS.root_residual if tol is None else tol
    max_iter = DEFAULTS.root_max_iter if max_iter is None else max_iter
    step_tol = DEFAULTS.root_step if step_tol is None else step_tol
    gamma = DEFAULTS.multiplicity if multiplicity_tol is None else multiplicity_tol

    deg = p.degree
    if deg < 1:
        raise DomainError(f"poly_roots needs degree >= 1, got {deg}")
    lead = p.coeffs[deg]
    if abs(lead) <= tol:
        raise DomainError(f"leading coefficient {lead} is below tolerance {tol}")
    monic = p.coeffs[: deg + 1] / lead

    if deg == 1:
        z = np.array([-monic[0]])
    else:
        z = (0.4 + 0.9j) ** np.arange(deg, dtype=np.complex128)
        for _ in range(max_iter):
            pz = np.zeros_like(z)
            for c in monic[::-1]:
                pz = pz * z + c
            diff = z[:, None] - z[None, :]
            np.fill_diagonal(diff, 1.0)
            denom = np.prod(diff, axis=1)
            denom[denom == 0] = 1e-300
            step = pz / denom
            z = z - step
            if np.max(np.abs(step)) < step_tol * (1 + np.max(np.abs(z))):
                break
        scale = 1 + float(np.max(np.abs(z)))
        z = _merge_multiple(z, monic, 0.25 * scale, 1e-12 * scale, gamma)

    residuals = np.abs(p(z))
    limit = tol * (1 + float(np.max(np.abs(p.coeffs))))
    if np.any(residuals > limit) or not np.all(np.isfinite(z)):
        raise ConvergenceError(
            f"Durand-Kerner did not converge: max residual {np.max(residuals):.3g} > {limit:.3g}",
            detail=residuals,
        )
    return z
