"""Finite semigroups with identity given by Cayley tables, and convolution
of complex functions on them."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DimensionError, DomainError
from .reports import Check, Report


@dataclass(frozen=True, eq=False)
class CayleyTable:
    """Multiplication table on ``0..n-1``; ``table[x, y]`` is ``x*y``."""

    table: np.ndarray
    theta: int

    def __post_init__(self):
        t = np.array(self.table, dtype=np.int64)
        if t.ndim != 2 or t.shape[0] != t.shape[1] or t.shape[0] == 0:
            raise DimensionError(f"Cayley table must be a nonempty n x n array, got shape {t.shape}")
        t.setflags(write=False)
        object.__setattr__(self, "table", t)
        object.__setattr__(self, "theta", int(self.theta))

    @property
    def n(self) -> int:
        return self.table.shape[0]

    def __call__(self, x: int, y: int) -> int:
        return int(self.table[x, y])

    def __eq__(self, other):
        if not isinstance(other, CayleyTable):
            return NotImplemented
        return self.theta == other.theta and np.array_equal(self.table, other.table)

    __hash__ = None

    def is_commutative(self) -> bool:
        return bool(np.array_equal(self.table, self.table.T))


def validate_table(t: CayleyTable) -> Report:
    """Closure, associativity over all triples, two-sided identity at theta.

    Each failing check carries the first violation in lexicographic order.
    The ``identity_unique`` check scans every element for the identity
    property; its witness lists all candidates found.
    """
    n = t.n
    T = t.table
    bad = np.argwhere((T < 0) | (T >= n))
    closure = Check("closure", bad.size == 0, witness=tuple(map(int, bad[0])) if bad.size else None,
                    violations=len(bad))
    if not closure.passed or not 0 <= t.theta < n:
        # lookups below would index out of range
        ident = Check("identity", False, witness=t.theta if not 0 <= t.theta < n else None)
        return Report((closure, Check("associativity", False), ident, Check("identity_unique", False)),
                      notes=("table is not closed; remaining checks skipped",))

    idx = np.arange(n)
    left = T[T]                                      # (x*y)*z
    right = T[idx[:, None, None], T[None, :, :]]    # x*(y*z)
    mismatch = np.argwhere(left != right)
    assoc = Check("associativity", mismatch.size == 0,
                  witness=tuple(map(int, mismatch[0])) if mismatch.size else None,
                  violations=len(mismatch))

    def fails_identity(e):
        return np.flatnonzero((T[e, :] != idx) | (T[:, e] != idx))

    off = fails_identity(t.theta)
    ident = Check("identity", off.size == 0, witness=int(off[0]) if off.size else None,
                  violations=off.size)
    candidates = tuple(e for e in range(n) if fails_identity(e).size == 0)
    unique = Check("identity_unique", candidates == (t.theta,), witness=candidates)
    return Report((closure, assoc, ident, unique))


def _values(f, n: int) -> np.ndarray:
    v = np.asarray(f, dtype=np.complex128)
    if v.shape != (n,):
        raise DimensionError(f"function has shape {v.shape}, table has {n} elements")
    return v


def convolve(f, g, t: CayleyTable) -> np.ndarray:
    """``(f*g)(z) = sum of f(x) g(y) over pairs with x*y = z``."""
    f = _values(f, t.n)
    g = _values(g, t.n)
    out = np.zeros(t.n, dtype=np.complex128)
    for x in range(t.n):
        if f[x] == 0:
            continue
        for y in range(t.n):
            out[t.table[x, y]] += f[x] * g[y]
    return out


def delta(x: int, t: CayleyTable) -> np.ndarray:
    if not 0 <= x < t.n:
        raise DomainError(f"element {x} out of range for a table of size {t.n}")
    v = np.zeros(t.n, dtype=np.complex128)
    v[x] = 1.0
    return v


def cyclic_group_table(n: int) -> CayleyTable:
    idx = np.arange(n)
    return CayleyTable((idx[:, None] + idx[None, :]) % n, 0)


def chain_semilattice_table(n: int) -> CayleyTable:
    """``x*y = max(x, y)``: identity 0, every element idempotent."""
    idx = np.arange(n)
    return CayleyTable(np.maximum(idx[:, None], idx[None, :]), 0)


def relabel(t: CayleyTable, perm) -> CayleyTable:
    """Isomorphic copy where element ``x`` is renamed ``perm[x]``."""
    perm = np.asarray(perm)
    inv = np.argsort(perm)
    new = perm[t.table[inv[:, None], inv[None, :]]]
    return CayleyTable(new, int(perm[t.theta]))


def random_monoid_table(rng: np.random.Generator, max_n: int = 8, degree: int | None = None) -> CayleyTable:
    """A random finite monoid of size at most ``max_n``.

    Built as the transformation monoid generated by a few random self-maps
    of a small set (composition is associative, the identity map is the
    unit), then randomly relabelled so the identity is not always 0.
    """
    while True:
        m = degree or int(rng.integers(1, 5))
        gens = [tuple(int(v) for v in rng.integers(0, m, size=m)) for _ in range(int(rng.integers(1, 4)))]
        ident = tuple(range(m))
        elems = [ident]
        index = {ident: 0}
        frontier = [ident]
        while frontier and len(elems) <= max_n:
            nxt = []
            for s in frontier:
                for g in gens:
                    c = tuple(s[g[i]] for i in range(m))
                    if c not in index:
                        index[c] = len(elems)
                        elems.append(c)
                        nxt.append(c)
            frontier = nxt
        if len(elems) > max_n:
            continue
        n = len(elems)
        # x*y = x after y, i.e. (x*y)(i) = x(y(i))
        table = np.array([[index[tuple(x[y[i]] for i in range(m))] for y in elems] for x in elems])
        return relabel(CayleyTable(table, 0), rng.permutation(n))
