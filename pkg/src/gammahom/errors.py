"""Exception hierarchy for the gammahom library."""


class GammahomError(Exception):
    """Base class for all library errors."""


class EmptyInducedSet(GammahomError):
    """Induced subgraph requested on an empty vertex set."""


class NotAPoset(GammahomError):
    """Argument must be reflexive, antisymmetric and transitive."""


class NotSymmetric(GammahomError):
    """Argument must be a symmetric digraph (undirected representation)."""


class VertexNotInSubset(GammahomError):
    """Base vertex does not belong to the given vertex subset."""


class NotAHomomorphism(GammahomError):
    """Map fails the arc-preservation condition it was required to satisfy."""


class NotStrictHom(GammahomError):
    """Map fails the strict-homomorphism condition it was required to satisfy."""


class ArityMismatch(GammahomError):
    """Vertex map does not fit the given source/target vertex sets."""


class BoundTooLarge(GammahomError):
    """Requested class bound exceeds the configured generation budget."""


class TooLarge(GammahomError):
    """Instance exceeds a hard size cap (canonical forms need n <= 8)."""


class ClassNotQuotientClosed(GammahomError):
    """Class kind/bound combination is not supported for quotient-based checks."""


class DominanceFails(GammahomError):
    """Scheme assembly requires the count inequality to hold on every shape."""


class PremiseFails(GammahomError):
    """A premise dominance check of a compatibility statement fails."""


class InvalidSpec(GammahomError):
    """Rearrangement description violates its validity conditions."""

    def __init__(self, violations):
        self.violations = tuple(violations)
        super().__init__("invalid rearrangement: " + "; ".join(self.violations))


class NotAWalk(GammahomError):
    """Vertex sequence is not a walk of the given digraph."""
