"""Neumann series for (e - a)^-1: terms needed, a-priori bound and the
actual error against the Cayley-Hamilton inverse, as the norm of a grows.

    python3 scripts/neumann_convergence.py --target 1e-10
"""

import argparse

import numpy as np

from finalg import algebra_norm, cyclic_group_table, invert_cayley_hamilton, make_semigroup_algebra, resolvent_neumann


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--target", type=float, default=1e-10)
    ap.add_argument("--order", type=int, default=5, help="size of the cyclic group")
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()
    alg = make_semigroup_algebra(cyclic_group_table(args.order))
    base = alg.random_element(np.random.default_rng(args.seed))
    base = base / algebra_norm(base)
    print(f"{'norm':>6} {'terms':>6} {'bound':>10} {'actual':>10} {'ratio':>7}")
    for r in (0.1, 0.3, 0.5, 0.7, 0.8, 0.9, 0.95, 0.99):
        a = base * r
        res = resolvent_neumann(a, 1, args.target)
        actual = algebra_norm(res.value - invert_cayley_hamilton(alg.one() - a))
        print(f"{r:>6g} {res.terms_used:>6} {res.error_bound:>10.2e} {actual:>10.2e} {actual / res.error_bound:>7.3f}")


if __name__ == "__main__":
    main()
