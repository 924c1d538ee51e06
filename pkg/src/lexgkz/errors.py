"""Exception types raised by the geometry kernel and the recovery algorithm."""


class LexGKZError(Exception):
    """Base class for all errors raised by this package."""


class DegenerateSet(LexGKZError):
    """A point subset does not span the ambient dimension."""


class NotSimplicial(LexGKZError):
    """A subdivision expected to be a triangulation has a non-simplex cell."""


class NoConvergence(LexGKZError):
    """No lifting heights reproduced the requested lexicographic subdivision."""


class BudgetExceeded(LexGKZError):
    """Full enumeration would run more scripts than the configured budget."""


class RecoveryError(LexGKZError):
    """The greedy recovery could not produce a triangulation for the vector."""


class NoCandidate(RecoveryError):
    """At some step no remaining point qualified to be pulled or pushed next."""


class VerificationFailed(RecoveryError):
    """The greedy finished but the result does not reproduce the input vector."""
