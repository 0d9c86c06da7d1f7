"""Spectra of random elements in a few small algebras, with the spectral
radius set against the regular-representation norms.

    python3 scripts/spectrum_demo.py --per-algebra 3
"""

import argparse

import numpy as np

from finalg import (
    NormKind,
    algebra_norm,
    chain_semilattice_table,
    cyclic_group_table,
    make_function_algebra,
    make_matrix_algebra,
    make_semigroup_algebra,
    random_monoid_table,
    spectrum,
)


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--per-algebra", type=int, default=3)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()
    rng = np.random.default_rng(args.seed)
    algebras = {
        "function 4": make_function_algebra(4),
        "matrix 2": make_matrix_algebra(2),
        "Z/4": make_semigroup_algebra(cyclic_group_table(4)),
        "chain 4": make_semigroup_algebra(chain_semilattice_table(4)),
        "random monoid": make_semigroup_algebra(random_monoid_table(rng, 6)),
    }
    for name, alg in algebras.items():
        print(f"== {name} (dim {alg.dim})")
        for _ in range(args.per_algebra):
            a = alg.random_element(rng)
            spec = spectrum(a)
            points = ", ".join(f"{v.real:+.4f}{v.imag:+.4f}i x{c}" for v, c in spec.clusters)
            norms = [algebra_norm(a, k) for k in (NormKind.REG_OP_L1, NormKind.REG_OP_L2, NormKind.REG_OP_LINF)]
            print(f"  radius {spec.radius:.4f} <= norms l1 {norms[0]:.4f} l2 {norms[1]:.4f} linf {norms[2]:.4f}")
            print(f"    {points}")


if __name__ == "__main__":
    main()
