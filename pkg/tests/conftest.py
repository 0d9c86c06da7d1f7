import numpy as np
import pytest

from finalg.algebra import make_function_algebra, make_matrix_algebra, make_semigroup_algebra
from finalg.semigroup import CayleyTable, chain_semilattice_table, cyclic_group_table, random_monoid_table


def random_cmatrix(rng, n):
    return rng.uniform(-1, 1, (n, n)) + 1j * rng.uniform(-1, 1, (n, n))


def random_tables(seed, count, max_n=8):
    rng = np.random.default_rng(seed)
    return [random_monoid_table(rng, max_n) for _ in range(count)]


def sample_algebras(max_dim=8, table_seed=7):
    """One representative set of algebras from every constructor family."""
    algs = [make_function_algebra(n) for n in range(1, max_dim + 1)]
    algs += [make_matrix_algebra(d) for d in range(1, 4) if d * d <= max_dim]
    tables = [cyclic_group_table(2), cyclic_group_table(3), chain_semilattice_table(3)]
    tables += random_tables(table_seed, 6, max_n=max_dim)
    algs += [make_semigroup_algebra(t) for t in tables if t.n <= max_dim]
    return algs


@pytest.fixture
def rng():
    return np.random.default_rng(12345)


@pytest.fixture
def z2():
    return make_semigroup_algebra(cyclic_group_table(2))


@pytest.fixture
def absorbing_table():
    # theta = 0, z = 1 with z*z = z
    return CayleyTable([[0, 1], [1, 1]], 0)


def pytest_terminal_summary(terminalreporter):
    from test_acceptance import RESULTS

    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for number in sorted(RESULTS):
            terminalreporter.write_line(RESULTS[number])
