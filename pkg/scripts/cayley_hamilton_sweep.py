"""Cayley-Hamilton residual of the Faddeev-LeVerrier characteristic polynomial
as the matrix size and scale grow.

    python3 scripts/cayley_hamilton_sweep.py --samples 50 --max-n 12
"""

import argparse

import numpy as np

from finalg.linalg import char_poly, poly_eval_at_matrix


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--samples", type=int, default=50)
    ap.add_argument("--max-n", type=int, default=10)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()
    rng = np.random.default_rng(args.seed)
    print(f"{'n':>3} {'scale':>6} {'median':>10} {'worst':>10}   residual / (1 + max|T|)^n")
    for n in range(2, args.max_n + 1):
        for scale in (0.1, 1.0, 10.0):
            ratios = []
            for _ in range(args.samples):
                t = scale * (rng.uniform(-1, 1, (n, n)) + 1j * rng.uniform(-1, 1, (n, n)))
                res = np.max(np.abs(poly_eval_at_matrix(char_poly(t), t)))
                ratios.append(res / (1 + np.max(np.abs(t))) ** n)
            print(f"{n:>3} {scale:>6g} {np.median(ratios):>10.2e} {max(ratios):>10.2e}")


if __name__ == "__main__":
    main()
