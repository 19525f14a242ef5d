"""Dense linear algebra on bipartite (block) matrices.

An operator on C^d1 (x) C^d2 is stored as an ordinary (d1*d2) x (d1*d2)
ndarray.  Basis vectors are flattened row-major on (first-factor index,
second-factor index), so the matrix is a d1 x d1 grid of contiguous
d2 x d2 blocks and the entry in block (i, j) at inner position (k, l)
sits at [i*d2 + k, j*d2 + l].  The dtype plays the role of the field tag:
float64 arrays take the real-symmetric LAPACK path, complex128 the
Hermitian one.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import NumericError, ParameterError, ShapeError

# Relative tolerance for the structural self-adjointness check.
HERMITICITY_RTOL = 1e-10


@dataclass(frozen=True)
class BipartiteShape:
    """Factor dimensions (d1, d2) of a bipartite space of total dimension d1*d2."""

    d1: int
    d2: int

    def __post_init__(self):
        if self.d1 < 1 or self.d2 < 1:
            raise ParameterError(f"factor dimensions must be >= 1, got ({self.d1}, {self.d2})")

    @classmethod
    def square(cls, d: int) -> "BipartiteShape":
        return cls(d, d)

    @property
    def n(self) -> int:
        """Total dimension d1*d2."""
        return self.d1 * self.d2

    def flat_index(self, i: int, k: int) -> int:
        """Flatten the product-basis label (i, k), 0-based, to [0, n)."""
        if not (0 <= i < self.d1 and 0 <= k < self.d2):
            raise ParameterError(f"index ({i}, {k}) outside [0,{self.d1}) x [0,{self.d2})")
        return i * self.d2 + k


def _as_square(a) -> np.ndarray:
    a = np.asarray(a)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ShapeError(f"expected a square matrix, got shape {a.shape}")
    return a


def _as_bipartite(a, shape: BipartiteShape) -> np.ndarray:
    a = _as_square(a)
    if a.shape[0] != shape.n:
        raise ShapeError(
            f"matrix of size {a.shape[0]} does not match bipartite shape "
            f"({shape.d1}, {shape.d2}) with total dimension {shape.n}"
        )
    return a


def as_blocks(a, shape: BipartiteShape) -> np.ndarray:
    """View a as a 4-index array B with B[i, k, j, l] = entry in block (i, j) at (k, l)."""
    return _as_bipartite(a, shape).reshape(shape.d1, shape.d2, shape.d1, shape.d2)


def block_entry(a, shape: BipartiteShape, i: int, j: int, k: int, l: int):
    """Entry of a in block row i, block column j, inner row k, inner column l (0-based)."""
    a = _as_bipartite(a, shape)
    return a[shape.flat_index(i, k), shape.flat_index(j, l)]


def is_hermitian(a, rtol: float = HERMITICITY_RTOL) -> bool:
    a = _as_square(a)
    scale = float(np.abs(a).max()) if a.size else 0.0
    if scale == 0.0:
        return True
    return float(np.abs(a - a.conj().T).max()) <= rtol * scale


def partial_transpose(a, shape: BipartiteShape) -> np.ndarray:
    """Transpose each d2 x d2 block of a in place of the block.

    In 4-index form the output satisfies out[i, j; k, l] = a[i, j; l, k].
    The operation is an involution and preserves trace, Frobenius norm,
    and self-adjointness.
    """
    blocks = as_blocks(a, shape)
    return blocks.swapaxes(1, 3).reshape(shape.n, shape.n).copy()


def partial_trace(a, shape: BipartiteShape, keep: str = "first") -> np.ndarray:
    """Trace out one tensor factor; `keep` selects the surviving factor.

    keep="first" returns the d1 x d1 matrix M[i, j] = sum_k a[i, j; k, k];
    keep="second" the d2 x d2 matrix M[k, l] = sum_i a[i, i; k, l].
    The full trace is preserved either way.
    """
    blocks = as_blocks(a, shape)
    if keep == "first":
        return np.einsum("ikjk->ij", blocks)
    if keep == "second":
        return np.einsum("ikil->kl", blocks)
    raise ParameterError(f"keep must be 'first' or 'second', got {keep!r}")


def remove_diagonal(a) -> np.ndarray:
    """Copy of a with the main diagonal zeroed."""
    out = _as_square(a).copy()
    np.fill_diagonal(out, 0)
    return out


def hermitian_eigenvalues(a) -> np.ndarray:
    """All eigenvalues of a self-adjoint matrix, ascending, with multiplicity.

    Real-symmetric input (float dtype) is dispatched by LAPACK to real
    arithmetic automatically.  Raises NumericError on non-finite entries or
    when the input is not self-adjoint to within HERMITICITY_RTOL.
    """
    a = _as_square(a)
    if not np.all(np.isfinite(a)):
        raise NumericError("matrix has non-finite entries")
    if not is_hermitian(a):
        raise NumericError("matrix is not self-adjoint within tolerance")
    return np.linalg.eigvalsh(a)
