"""Extreme eigenvalues converge to the semicircle edges 1 +- 2/sqrt(alpha).

Tracks the smallest and largest eigenvalue of blockwise-transposed Wishart
samples as the block dimension d grows, for a few aspect ratios.  At alpha=4
the lower edge sits exactly at zero, the hinge of the PPT threshold.

Usage: python3 demos/extreme_eigenvalues.py [trials]
"""

import sys

import numpy as np

from ptwishart import (
    BipartiteShape,
    SampleStream,
    SpectralSample,
    WishartParams,
    extremes,
    hermitian_eigenvalues,
    partial_transpose,
    sample_wishart,
)


def main():
    trials = int(sys.argv[1]) if len(sys.argv) > 1 else 3
    print(f"{'alpha':>6} {'d':>4} {'lambda_min':>11} {'edge_low':>9} {'lambda_max':>11} {'edge_high':>10}")
    for alpha in (1.0, 4.0, 9.0):
        edge_lo = 1.0 - 2.0 / np.sqrt(alpha)
        edge_hi = 1.0 + 2.0 / np.sqrt(alpha)
        for d in (10, 20, 30):
            shape = BipartiteShape(d, d)
            lows, highs = [], []
            for t in range(trials):
                w = sample_wishart(WishartParams(n=d * d, alpha=alpha), SampleStream(2, 100 * d + t))
                lo, hi = extremes(SpectralSample(hermitian_eigenvalues(partial_transpose(w, shape))))
                lows.append(lo)
                highs.append(hi)
            print(
                f"{alpha:>6.1f} {d:>4} {np.mean(lows):>11.4f} {edge_lo:>9.4f}"
                f" {np.mean(highs):>11.4f} {edge_hi:>10.4f}"
            )
        print()


if __name__ == "__main__":
    main()
