"""Exception hierarchy.

Every exception carries the CLI exit code it maps to, so the command line
layer can translate failures without a lookup table of its own.
"""


class NecksplitError(Exception):
    exit_code = 1


class MalformedInput(NecksplitError, ValueError):
    """Input document, necklace, cut or splitting is structurally invalid."""


class DisjointnessViolation(MalformedInput):
    pass


class OddnessViolation(MalformedInput):
    pass


class MalformedSplitting(MalformedInput):
    pass


class MalformedCut(MalformedInput):
    pass


class DomainViolation(NecksplitError, ValueError):
    """A precondition on the graph (connectivity, semi-Eulerian) does not hold."""


class BoundInapplicable(DomainViolation):
    pass


class InstanceTooLarge(NecksplitError):
    exit_code = 3


class InternalInconsistency(NecksplitError):
    """A result failed its own verification. Indicates a bug or a broken promise."""

    exit_code = 4
