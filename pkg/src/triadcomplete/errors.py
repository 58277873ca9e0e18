"""Exception types raised across the package."""

from __future__ import annotations


class MatrixError(ValueError):
    """Invalid or inconsistent reciprocal-matrix data."""


class NonSquareError(MatrixError):
    def __init__(self, shape) -> None:
        super().__init__(f"matrix data is not square: {shape}")
        self.shape = shape


class NonPositiveEntryError(MatrixError):
    def __init__(self, i: int, j: int, value: float) -> None:
        super().__init__(f"entry ({i}, {j}) must be positive and finite, got {value!r}")
        self.i, self.j, self.value = i, j, value


class DiagonalNotOneError(MatrixError):
    def __init__(self, i: int, value: float) -> None:
        super().__init__(f"diagonal entry ({i}, {i}) must equal 1, got {value!r}")
        self.i, self.value = i, value


class ReciprocityViolationError(MatrixError):
    def __init__(self, i: int, j: int, product: float) -> None:
        super().__init__(
            f"entries ({i}, {j}) and ({j}, {i}) are not mutual reciprocals;"
            f" their product is {product!r}"
        )
        self.i, self.j, self.product = i, j, product


class NotConsistentError(MatrixError):
    """The matrix is not consistent where consistency is required."""


class EntrySpecifiedError(MatrixError):
    def __init__(self, i: int, j: int) -> None:
        super().__init__(f"entry ({i}, {j}) is already specified")
        self.i, self.j = i, j


class GraphError(ValueError):
    """Structural problem with a specification graph."""


class NotConnectedError(GraphError):
    """The graph (or a required subgraph) is not connected."""


class NotChordalError(GraphError):
    def __init__(self, cycle) -> None:
        super().__init__(f"graph is not chordal; chordless cycle {list(cycle)}")
        self.cycle = tuple(cycle)


class CompletionError(ValueError):
    """A completion engine cannot proceed on the given input."""


class NotPCMError(CompletionError):
    """Some fully specified triad product differs from 1."""


class NotPCPlusError(CompletionError):
    def __init__(self, edge) -> None:
        super().__init__(
            f"a fully specified cycle has product != 1 (violating edge {tuple(edge)})"
        )
        self.edge = tuple(edge)


class ComponentNotChordalError(CompletionError):
    def __init__(self, component, cycle) -> None:
        super().__init__(
            f"component {list(component)} is not chordal; chordless cycle {list(cycle)}"
        )
        self.component = tuple(component)
        self.cycle = tuple(cycle)


class NoCommonNeighborError(CompletionError):
    def __init__(self, i: int, j: int) -> None:
        super().__init__(f"no common specified neighbor for entry ({i}, {j})")
        self.i, self.j = i, j


class NeighborDisagreementError(CompletionError):
    def __init__(self, i: int, j: int, products) -> None:
        super().__init__(
            f"common neighbors disagree on the consistent value for entry"
            f" ({i}, {j}): candidate products {list(products)}"
        )
        self.i, self.j = i, j
        self.products = tuple(products)


class NoConsistentCompletionError(CompletionError):
    """No consistent completion exists for the given data."""


class MatrixTooSmallError(ValueError):
    """Operation needs at least a 3x3 matrix."""


class TooLargeError(ValueError):
    """Brute-force enumeration refused for matrices this large."""


class MatrixFileError(ValueError):
    def __init__(self, message: str, line: int | None = None, col: int | None = None) -> None:
        if line is not None:
            loc = f"line {line}" + (f", col {col}" if col is not None else "")
            message = f"{loc}: {message}"
        super().__init__(message)
        self.line, self.col = line, col
