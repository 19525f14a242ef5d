"""The three limit laws side by side: densities, atoms, and exact moments.

Prints moment tables for the semicircle, Marchenko-Pastur, and
product-of-semicircles laws, and plots the densities (the product law has no
implemented density; only its moments are exact).

Usage: python3 demos/limit_laws.py [alpha]
"""

import sys

import numpy as np

from ptwishart import MarchenkoPastur, ProductSemicircle, Semicircle, quadrature_moment


def main():
    alpha = float(sys.argv[1]) if len(sys.argv) > 1 else 4.0
    laws = [
        ("SC(0,1)", Semicircle(0.0, 1.0)),
        (f"SC(1,1/{alpha:g})", Semicircle(1.0, 1.0 / alpha)),
        (f"MP({alpha:g})", MarchenkoPastur(alpha)),
        ("MP(1/2)", MarchenkoPastur(0.5)),
        ("product SC", ProductSemicircle()),
    ]
    print(f"{'law':>12} " + " ".join(f"{'m' + str(k):>8}" for k in range(1, 7)))
    for name, law in laws:
        print(f"{name:>12} " + " ".join(f"{law.moment(k):>8.3f}" for k in range(1, 7)))

    print("\nquadrature cross-check (abs error of the k=4 moment):")
    for name, law in laws:
        if not hasattr(law, "density"):
            continue
        err = abs(quadrature_moment(law, 4) - law.moment(4))
        atom = getattr(law, "atom", 0.0)
        print(f"  {name:>12}: {err:.2e}" + (f"  (atom at 0 of mass {atom:g})" if atom else ""))

    try:
        import matplotlib

        matplotlib.use("Agg")
        import matplotlib.pyplot as plt
    except ImportError:
        print("matplotlib not available; skipping the plot")
        return

    fig, ax = plt.subplots(figsize=(8, 4.5))
    for name, law in laws:
        if not hasattr(law, "density"):
            continue
        lo, hi = law.support
        grid = np.linspace(lo, hi, 500)
        ax.plot(grid, [law.density(float(x)) for x in grid], label=name)
    ax.set_xlabel("x")
    ax.set_ylabel("density")
    ax.set_xlim(-2.5, 6.0)
    ax.legend()
    fig.tight_layout()
    fig.savefig("limit_laws.png", dpi=120)
    print("plot saved to limit_laws.png")


if __name__ == "__main__":
    main()
