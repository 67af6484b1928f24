"""Exception hierarchy shared by gmpark modules and mapped to CLI exit codes."""


class GmparkError(Exception):
    """Base class for every error raised by gmpark."""


class MalformedInputError(GmparkError, ValueError):
    """Input documents, labels, rankings or vectors that cannot be interpreted."""


class GraphStructureError(GmparkError, ValueError):
    """A graph does not satisfy the structural precondition of an operation."""


class InvalidFunctionError(GmparkError):
    """A vertex function is not a (G,m)-multiparking function."""


class InvalidForestError(GmparkError):
    """An edge set is not a spanning color m-forest of the host graph."""


class PolynomialMismatchError(GmparkError):
    """Two independent computations of the same polynomial disagree."""
