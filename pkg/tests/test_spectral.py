import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import random_tables, sample_algebras
from finalg.algebra import (
    make_function_algebra,
    make_matrix_algebra,
    make_semigroup_algebra,
    matrix_to_element,
    element_to_matrix,
    regular_rep,
)
from finalg.errors import ConvergenceDomainError, ConvergenceError, NotInvertibleError
from finalg.linalg import solve_linear
from finalg.norms import NormKind, algebra_norm
from finalg.semigroup import chain_semilattice_table, cyclic_group_table
from finalg.spectral import (
    invert_cayley_hamilton,
    is_invertible,
    neumann_tail_bound,
    neumann_terms,
    one_sided_inverse,
    resolvent_neumann,
    spectrum,
)
from oracles import multiset_distance, oracle_spectrum

ALGEBRAS = sample_algebras()
SMALL = [alg for alg in ALGEBRAS if alg.dim <= 4]


def test_spectrum_of_identity():
    for alg in ALGEBRAS:
        (value, count), = spectrum(alg.one()).clusters
        assert count == alg.dim
        assert abs(value - 1) <= 1e-12


def test_spectrum_of_function():
    spec = spectrum(make_function_algebra(3).element([1, 2j, -3]))
    assert [c for _, c in spec.clusters] == [1, 1, 1]
    assert multiset_distance(spec.values, [1, 2j, -3]) <= 1e-12
    # sorted by real part
    assert [round(v.real) for v in spec.values] == [-3, 0, 1]


def test_spectrum_of_z2_delta(z2):
    spec = spectrum(z2.basis(1))
    assert multiset_distance(spec.values, [-1, 1]) <= 1e-12
    assert sum(c for _, c in spec.clusters) == 2


def test_spectrum_clusters_repeated_values():
    spec = spectrum(make_function_algebra(5).element([2, 2, 2, -1, -1]))
    assert [(round(v.real), c) for v, c in spec.clusters] == [(-1, 2), (2, 3)]
    assert spec.radius == pytest.approx(2)


def test_spectrum_of_matrix_algebra_element_doubles_eigenvalues(rng):
    alg = make_matrix_algebra(2)
    a = alg.random_element(rng)
    ev = np.linalg.eigvals(element_to_matrix(a))
    assert multiset_distance(spectrum(a).points, np.repeat(ev, 2)) <= 1e-7


@pytest.mark.parametrize("alg", SMALL, ids=repr)
def test_spectrum_matches_brute_force(alg, rng):
    for _ in range(5):
        a = alg.random_element(rng)
        assert multiset_distance(spectrum(a).points, oracle_spectrum(a)) <= 1e-6


def test_spectrum_of_function_algebra_is_its_values(rng):
    for n in range(1, 8):
        f = make_function_algebra(n).random_element(rng)
        assert multiset_distance(spectrum(f).points, f.coords) <= 1e-7


def test_is_invertible_examples():
    alg = make_function_algebra(3)
    r = is_invertible(alg.one())
    assert r and np.array_equal(r.inverse.coords, alg.identity)
    assert not is_invertible(alg.element([1, 0, 2]))
    mat = make_matrix_algebra(2)
    r = is_invertible(matrix_to_element(mat, [[1, 1], [0, 1]]))
    assert r.invertible and abs(r.determinant - 1) <= 1e-12


def test_invert_examples():
    alg = make_function_algebra(2)
    np.testing.assert_allclose(invert_cayley_hamilton(alg.element([2, 5])).coords, [0.5, 0.2], atol=1e-15)
    for a in ALGEBRAS:
        np.testing.assert_allclose(invert_cayley_hamilton(a.one()).coords, a.identity, atol=1e-12)
    mat = make_matrix_algebra(2)
    t = matrix_to_element(mat, [[1, 1], [0, 1]])
    inv = invert_cayley_hamilton(t)
    np.testing.assert_allclose(element_to_matrix(inv), [[1, -1], [0, 1]], atol=1e-14)
    # char poly lam^2 - 2 lam + 1 gives T^-1 = 2I - T
    np.testing.assert_allclose(inv.coords, (2 * mat.one() - t).coords, atol=1e-14)


def test_invert_singular_raises():
    with pytest.raises(NotInvertibleError):
        invert_cayley_hamilton(make_function_algebra(2).element([1, 0]))
    with pytest.raises(NotInvertibleError):
        invert_cayley_hamilton(make_semigroup_algebra(chain_semilattice_table(2)).element([1, -1]))


def test_one_sided_examples(rng):
    for alg in ALGEBRAS:
        for side in ("left", "right"):
            np.testing.assert_allclose(one_sided_inverse(alg.one(), side).coords, alg.identity, atol=1e-12)
    f = make_function_algebra(2).element([1, 0])
    assert one_sided_inverse(f, "left") is None
    assert one_sided_inverse(f, "right") is None
    with pytest.raises(ValueError):
        one_sided_inverse(f, "middle")


def test_matrix_unit_has_no_one_sided_inverse():
    e12 = make_matrix_algebra(2).basis(1)
    assert one_sided_inverse(e12, "left") is None
    assert one_sided_inverse(e12, "right") is None
    assert not is_invertible(e12)


@settings(max_examples=80, deadline=None)
@given(st.integers(0, len(ALGEBRAS) - 1), st.integers(0, 2**32 - 1))
def test_inverses_agree(i, seed):
    alg = ALGEBRAS[i]
    a = alg.random_element(np.random.default_rng(seed))
    r = is_invertible(a)
    left, right = one_sided_inverse(a, "left"), one_sided_inverse(a, "right")
    if not r:
        return
    for y in (left, right):
        assert np.max(np.abs(y.coords - r.inverse.coords)) <= 1e-7
    e = alg.identity
    assert np.max(np.abs((a * r.inverse).coords - e)) <= 1e-7
    assert np.max(np.abs((r.inverse * a).coords - e)) <= 1e-7


def test_cayley_hamilton_matches_direct_solve(rng):
    for alg in SMALL:
        a = alg.random_element(rng)
        direct = solve_linear(regular_rep(a), alg.identity)
        np.testing.assert_allclose(invert_cayley_hamilton(a).coords, direct, atol=1e-9)


def test_spectral_points_are_not_invertible(rng):
    for alg in ALGEBRAS:
        a = alg.random_element(rng)
        spec = spectrum(a)
        for lam, _ in spec.clusters:
            assert not is_invertible(lam * alg.one() - a)
        radius = 1 + algebra_norm(a)
        for theta in np.linspace(0, 2 * np.pi, 8, endpoint=False):
            lam = radius * np.exp(1j * theta)
            if np.min(np.abs(spec.points - lam)) > 10 * 1e-6:
                assert is_invertible(lam * alg.one() - a)


def test_spectrum_within_norm_ball(rng):
    for alg in ALGEBRAS:
        for _ in range(5):
            a = alg.random_element(rng)
            assert spectrum(a).radius <= algebra_norm(a, NormKind.REG_OP_L1) + 1e-8


def test_resolvent_of_zero():
    alg = make_function_algebra(3)
    res = resolvent_neumann(alg.zero(), 2 - 1j, 1e-12)
    assert res.terms_used == 1
    assert res.error_bound == 0
    np.testing.assert_allclose(res.value.coords, alg.identity / (2 - 1j))


def test_resolvent_scalar_geometric_series():
    alg = make_function_algebra(1)
    res = resolvent_neumann(alg.element([0.5]), 1, 1e-10)
    assert abs(res.value.coords[0] - 2) <= 1e-10
    # 0.5**k / 0.5 <= 1e-10 first holds at k = 35
    assert res.terms_used == 35


def test_resolvent_function_algebra():
    alg = make_function_algebra(2)
    a = alg.element([0.5, -0.5])
    res = resolvent_neumann(a, 1, 1e-10)
    np.testing.assert_allclose(res.value.coords, [2, 2 / 3], atol=1e-10)
    np.testing.assert_allclose(res.value.coords, invert_cayley_hamilton(alg.one() - a).coords, atol=1e-10)


def test_resolvent_outside_disk_raises(z2):
    with pytest.raises(ConvergenceDomainError) as info:
        resolvent_neumann(z2.basis(1), 1, 1e-10)
    assert info.value.lam_abs == 1 and info.value.norm == 1


def test_resolvent_term_cap(z2):
    with pytest.raises(ConvergenceError):
        resolvent_neumann(0.999 * z2.basis(1), 1, 1e-10, max_terms=100)


def test_resolvent_with_other_norms(rng):
    alg = make_semigroup_algebra(cyclic_group_table(3))
    a = 0.3 * alg.random_element(rng)
    for kind in (NormKind.L1_CONVOLUTION, NormKind.REG_OP_L2, NormKind.REG_OP_LINF):
        res = resolvent_neumann(a, 1j, 1e-11, kind)
        assert res.norm_kind is kind
        resid = (1j * alg.one() - a) * res.value - alg.one()
        assert algebra_norm(resid, kind) <= 10 * 1e-11


def test_tail_bound_decreases_and_terms_are_minimal():
    for r in (0.1, 0.5, 0.8, 0.99):
        bounds = [neumann_tail_bound(r, 1, k) for k in range(1, 50)]
        assert all(b2 < b1 for b1, b2 in zip(bounds, bounds[1:]))
        k = neumann_terms(r, 1, 1e-10)
        assert neumann_tail_bound(r, 1, k) <= 1e-10 < neumann_tail_bound(r, 1, k - 1)
        assert abs(k - math.ceil(math.log(1e-10 * (1 - r)) / math.log(r))) <= 1


@settings(max_examples=60, deadline=None)
@given(st.integers(0, len(ALGEBRAS) - 1), st.integers(0, 2**32 - 1), st.floats(0.05, 0.9))
def test_resolvent_identity(i, seed, size):
    alg = ALGEBRAS[i]
    a = alg.random_element(np.random.default_rng(seed))
    a = a * (size / algebra_norm(a))
    target = 1e-10
    res = resolvent_neumann(a, 1, target)
    resid = (alg.one() - a) * res.value - alg.one()
    assert algebra_norm(resid) <= 10 * target
    exact = invert_cayley_hamilton(alg.one() - a)
    assert algebra_norm(res.value - exact) <= res.error_bound + 1e-12


def test_spectrum_on_random_monoids_vs_table_structure():
    # the algebra of the two-element semilattice is C x C: spectrum of
    # a*delta_0 + b*delta_1 is {a, a + b}
    alg = make_semigroup_algebra(chain_semilattice_table(2))
    spec = spectrum(alg.element([2, 3j]))
    assert multiset_distance(spec.values, [2, 2 + 3j]) <= 1e-12
    for t in random_tables(21, 5, max_n=6):
        a = make_semigroup_algebra(t).random_element(np.random.default_rng(t.n))
        assert sum(c for _, c in spectrum(a).clusters) == t.n
