"""Exception hierarchy shared by all polytile modules."""


class PolytileError(Exception):
    """Base class for all errors raised by this package."""


class GeometryError(PolytileError):
    """Invalid polyomino input or geometric precondition failure."""


class NonRectilinear(GeometryError):
    """A boundary cycle has a non-axis-parallel or zero-length edge."""


class SelfIntersecting(GeometryError):
    """A single boundary cycle revisits a point or crosses itself."""


class HoleOutsideOuter(GeometryError):
    """Cycle coverage went negative: a hole escapes every enclosing cycle."""


class OverlappingHoles(GeometryError):
    """Cycle coverage exceeded one: cycle interiors overlap."""


class Disconnected(GeometryError):
    """A single connected component was required but several were found."""


class NotContained(GeometryError):
    """difference(P, Q) was called with Q not a subset of P."""


class Overflow(GeometryError):
    """Coordinates exceed the |c| <= 2**60 bound needed for exact arithmetic."""


class BudgetExceeded(PolytileError):
    """An area-sized computation would exceed its configured cell budget."""


class ParityViolation(PolytileError):
    """Internal pipeline error: removed area is odd, which cannot happen."""


class PipesOverlap(PolytileError):
    """Two maximal long pipes overlap (debug mode only; normally a greedy
    disjoint subset is used instead and a diagnostic is recorded)."""


class BadParams(PolytileError):
    """Instance generator called with invalid parameters."""


class MismatchFound(PolytileError):
    """Cross-verification found disagreeing solver results."""


class PipelineError(PolytileError):
    """Internal invariant of the packing pipeline failed."""
