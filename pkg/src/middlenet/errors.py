"""Exception types shared across the package."""


class GraphError(ValueError):
    """Invalid graph construction, query, or input data."""


class ParseError(GraphError):
    """A text input (edge list or adjacency matrix) could not be parsed."""

    def __init__(self, line_no: int, message: str):
        super().__init__(f"line {line_no}: {message}")
        self.line_no = line_no


class SelfLoopError(GraphError):
    """An arc from a node to itself was supplied; loops are not allowed."""


class UnknownNodeError(GraphError):
    """A node label that is not part of the graph was referenced."""


class SizeGuardExceeded(RuntimeError):
    """An exhaustive search was refused because the graph is too large."""


class SpectralBoundError(ValueError):
    """An attenuation parameter sits at or beyond the spectral bound."""

    def __init__(self, beta: float, bound: float):
        super().__init__(
            f"beta={beta} is at or beyond the spectral bound {bound:.6g}"
        )
        self.beta = beta
        self.bound = bound
