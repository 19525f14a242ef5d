"""Exception types shared across the package."""


class ShapeError(ValueError):
    """Matrix dimensions are inconsistent with the requested bipartite shape."""


class ParameterError(ValueError):
    """A scalar or combinatorial parameter is outside its supported range."""


class NumericError(ValueError):
    """Input contains non-finite values or fails a numerical sanity check."""
