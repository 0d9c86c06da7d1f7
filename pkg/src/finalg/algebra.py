"""Finite-dimensional unital algebras given by structure constants.

An algebra of dimension n is a tensor ``c`` of shape (n, n, n) with
``b_i * b_j = sum_k c[i, j, k] b_k`` plus the coordinates of its identity.
Multiplication is bilinear in coordinates, so distributivity holds by
construction and is never checked.
"""

from __future__ import annotations

from dataclasses import dataclass
from numbers import Number

import numpy as np

from .errors import DimensionError, DomainError, IncompatibleAlgebraError, ValidationError
from .reports import Check, Report
from .semigroup import CayleyTable, validate_table


@dataclass(frozen=True, eq=False)
class StructureAlgebra:
    tensor: np.ndarray
    identity: np.ndarray
    kind: str = "custom"
    label: str = ""
    table: CayleyTable | None = None

    def __post_init__(self):
        t = np.array(self.tensor, dtype=np.complex128)
        e = np.array(self.identity, dtype=np.complex128)
        if t.ndim != 3 or not t.shape[0] == t.shape[1] == t.shape[2]:
            raise DimensionError(f"structure tensor must have shape (n, n, n), got {t.shape}")
        if t.shape[0] == 0:
            raise DomainError("an algebra must have positive dimension")
        if e.shape != (t.shape[0],):
            raise DimensionError(f"identity has shape {e.shape}, expected ({t.shape[0]},)")
        t.setflags(write=False)
        e.setflags(write=False)
        object.__setattr__(self, "tensor", t)
        object.__setattr__(self, "identity", e)

    @property
    def dim(self) -> int:
        return self.tensor.shape[0]

    def element(self, coords) -> AlgebraElement:
        return AlgebraElement(self, coords)

    def one(self) -> AlgebraElement:
        return AlgebraElement(self, self.identity)

    def zero(self) -> AlgebraElement:
        return AlgebraElement(self, np.zeros(self.dim))

    def basis(self, i: int) -> AlgebraElement:
        v = np.zeros(self.dim, dtype=np.complex128)
        v[i] = 1.0
        return AlgebraElement(self, v)

    def random_element(self, rng: np.random.Generator) -> AlgebraElement:
        """Coordinates uniform in the complex square [-1, 1] x [-1, 1]."""
        n = self.dim
        return AlgebraElement(self, rng.uniform(-1, 1, n) + 1j * rng.uniform(-1, 1, n))

    def same_as(self, other: StructureAlgebra) -> bool:
        return self is other or (
            self.dim == other.dim
            and np.array_equal(self.tensor, other.tensor)
            and np.array_equal(self.identity, other.identity)
        )

    def is_commutative(self, tol: float = 1e-10) -> bool:
        return bool(np.max(np.abs(self.tensor - self.tensor.transpose(1, 0, 2))) <= tol)

    def __repr__(self):
        name = self.label or self.kind
        return f"StructureAlgebra({name}, dim={self.dim})"


@dataclass(frozen=True, eq=False)
class AlgebraElement:
    algebra: StructureAlgebra
    coords: np.ndarray

    def __post_init__(self):
        v = np.array(self.coords, dtype=np.complex128)
        if v.shape != (self.algebra.dim,):
            raise DimensionError(f"coordinates have shape {v.shape}, algebra has dimension {self.algebra.dim}")
        v.setflags(write=False)
        object.__setattr__(self, "coords", v)

    def __add__(self, other):
        return add(self, other)

    def __sub__(self, other):
        return add(self, scale(-1, other))

    def __neg__(self):
        return scale(-1, self)

    def __mul__(self, other):
        if isinstance(other, AlgebraElement):
            return multiply(self, other)
        if isinstance(other, Number):
            return scale(other, self)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, Number):
            return scale(other, self)
        return NotImplemented

    def __truediv__(self, other):
        if isinstance(other, Number):
            return scale(1 / other, self)
        return NotImplemented

    def __pow__(self, k: int):
        if k < 0:
            raise DomainError("negative powers need an inverse; use invert_cayley_hamilton")
        out = self.algebra.one()
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __repr__(self):
        return f"AlgebraElement({self.algebra!r}, {np.array2string(self.coords, precision=6)})"


def _check_same(a: AlgebraElement, b: AlgebraElement) -> None:
    if not a.algebra.same_as(b.algebra):
        raise IncompatibleAlgebraError(f"elements belong to different algebras: {a.algebra!r} vs {b.algebra!r}")


def multiply(a: AlgebraElement, b: AlgebraElement) -> AlgebraElement:
    _check_same(a, b)
    return AlgebraElement(a.algebra, np.einsum("i,j,ijk->k", a.coords, b.coords, a.algebra.tensor))


def add(a: AlgebraElement, b: AlgebraElement) -> AlgebraElement:
    _check_same(a, b)
    return AlgebraElement(a.algebra, a.coords + b.coords)


def scale(alpha, a: AlgebraElement) -> AlgebraElement:
    return AlgebraElement(a.algebra, complex(alpha) * a.coords)


def regular_rep(a: AlgebraElement) -> np.ndarray:
    """Matrix of ``x -> a*x``; column j holds the coordinates of ``a*b_j``."""
    return np.einsum("i,ijk->kj", a.coords, a.algebra.tensor)


def regular_rep_right(a: AlgebraElement) -> np.ndarray:
    """Matrix of ``x -> x*a``; column j holds the coordinates of ``b_j*a``."""
    return np.einsum("i,jik->kj", a.coords, a.algebra.tensor)


def validate_algebra(alg: StructureAlgebra, tol: float = 1e-10) -> Report:
    """Identity law on both sides and associativity of the basis products.

    Each check reports its worst residual and where it occurs: a basis
    index for the identity checks, an (i, j, k) triple for associativity.
    """
    n = alg.dim
    t = alg.tensor
    eye = np.eye(n)
    left_e = np.einsum("i,ijk->jk", alg.identity, t)    # row j: e*b_j
    right_e = np.einsum("i,jik->jk", alg.identity, t)   # row j: b_j*e
    checks = []
    for name, prod in (("identity_left", left_e), ("identity_right", right_e)):
        err = np.max(np.abs(prod - eye), axis=1)
        j = int(np.argmax(err))
        checks.append(Check(name, bool(err[j] <= tol), residual=float(err[j]), witness=j,
                            violations=int(np.sum(err > tol))))

    flat = t.reshape(n, n * n)
    pairs = t.reshape(n * n, n)
    worst, witness, count = 0.0, None, 0
    for i in range(n):
        lhs = t[i] @ flat                                 # (b_i b_j) b_k, indexed [j, k*n + l]
        rhs = (pairs @ t[i]).reshape(n, n * n)            # b_i (b_j b_k)
        err = np.max(np.abs(lhs - rhs).reshape(n, n, n), axis=2)
        count += int(np.sum(err > tol))
        j, k = np.unravel_index(int(np.argmax(err)), err.shape)
        if err[j, k] > worst:
            worst, witness = float(err[j, k]), (i, int(j), int(k))
    checks.append(Check("associativity", worst <= tol, residual=worst, witness=witness, violations=count))
    return Report(tuple(checks), notes=("distributivity holds by construction (bilinear product)",))


def make_function_algebra(n: int) -> StructureAlgebra:
    """Complex functions on n points under pointwise multiplication."""
    if n < 1:
        raise DomainError("function algebra needs at least one point")
    t = np.zeros((n, n, n))
    idx = np.arange(n)
    t[idx, idx, idx] = 1.0
    return StructureAlgebra(t, np.ones(n), kind="function", label=f"function {n}")


def make_matrix_algebra(d: int) -> StructureAlgebra:
    """All d x d matrices; basis E_ij in row-major order (index i*d + j)."""
    if d < 1:
        raise DomainError("matrix algebra needs d >= 1")
    n = d * d
    t = np.zeros((n, n, n))
    for i in range(d):
        for j in range(d):
            for l in range(d):
                # E_ij E_jl = E_il
                t[i * d + j, j * d + l, i * d + l] = 1.0
    return StructureAlgebra(t, np.eye(d).ravel(), kind="matrix", label=f"matrix {d}")


def make_semigroup_algebra(table: CayleyTable) -> StructureAlgebra:
    """Convolution algebra: basis delta_x with delta_x * delta_y = delta_{x*y}."""
    report = validate_table(table)
    if not report.ok:
        raise ValidationError(f"invalid Cayley table:\n{report}", report)
    n = table.n
    t = np.zeros((n, n, n))
    idx = np.arange(n)
    t[idx[:, None], idx[None, :], table.table] = 1.0
    e = np.zeros(n)
    e[table.theta] = 1.0
    return StructureAlgebra(t, e, kind="semigroup", label=f"semigroup {n}", table=table)


def matrix_to_element(alg: StructureAlgebra, m) -> AlgebraElement:
    if alg.kind != "matrix":
        raise DomainError("matrix_to_element needs a matrix algebra")
    return AlgebraElement(alg, np.asarray(m, dtype=np.complex128).ravel())


def element_to_matrix(a: AlgebraElement) -> np.ndarray:
    d = int(round(np.sqrt(a.algebra.dim)))
    return a.coords.reshape(d, d)
