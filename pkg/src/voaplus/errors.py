"""Exception taxonomy. Every error names the axiom or precondition that failed."""


class VoaplusError(Exception):
    """Base class; `module` is used by the CLI to qualify messages."""

    module = "voaplus"


class NotSymmetric(VoaplusError):
    module = "lattice"


class NotEven(VoaplusError):
    module = "lattice"


class NotPositiveDefinite(VoaplusError):
    module = "lattice"


class DependentBasis(VoaplusError):
    module = "lattice"


class HasRoots(VoaplusError):
    module = "algebra"


class AlgebraMismatch(VoaplusError):
    module = "algebra"


class DegreeTooHigh(VoaplusError):
    module = "polysolve"


class TooManyVariables(VoaplusError):
    module = "polysolve"


class InfiniteFamily(VoaplusError):
    module = "classify"


class WrongCase(VoaplusError):
    module = "classify"


class SpanFailure(VoaplusError):
    module = "autgroup"


class ParseError(VoaplusError):
    module = "cli"
