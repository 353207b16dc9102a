"""Exception types shared across the package."""


class EqArborError(Exception):
    """Base class for all package-specific errors."""


class InvalidPart(EqArborError):
    """A part-size list is empty, too short, or contains a non-positive entry."""


class PreconditionViolated(EqArborError):
    """An operation was called outside its documented domain."""


class UnsupportedArity(EqArborError):
    """The operation only handles complete bipartite or tripartite graphs."""


class NoWitnessFound(EqArborError):
    """No constructive witness pattern applies to the requested instance."""


class MalformedColoring(EqArborError):
    """A coloring is structurally broken (wrong vector lengths, bad vertex lists)."""


class MissingVertexAssignment(EqArborError):
    """An explicit-graph check was requested on a coloring without vertex lists."""


class InstanceTooLarge(EqArborError):
    """The instance exceeds the configured exhaustive-search bound."""
