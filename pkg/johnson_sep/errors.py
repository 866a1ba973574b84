"""
Errors
======

Exception hierarchy shared by the kernels, experiments and CLI.
"""


class JohnsonSepError(Exception):
    """Base class for every toolkit error."""


class RankError(JohnsonSepError, ValueError):
    """Generator index out of range or mismatched ranks."""


class WordParseError(JohnsonSepError, ValueError):
    """Malformed word text or automorphism recipe."""


class AutomorphismError(JohnsonSepError):
    """Forward and backward images are not mutually inverse."""


class DegreeCapError(JohnsonSepError, ValueError):
    """Magnus degree cap outside the supported range."""


class NotInTorelliError(JohnsonSepError):
    """The automorphism acts nontrivially on the abelianization."""


class NotUnitriangularError(JohnsonSepError, ValueError):
    """Matrix is not upper unitriangular mod p."""


class NotUnimodularError(JohnsonSepError, ValueError):
    """Integer matrix is not invertible over the integers."""


class DimensionError(JohnsonSepError, ValueError):
    """Shape mismatch between matrices, vectors or bases."""


class SaturationLimitError(JohnsonSepError):
    """Orbit saturation did not close within the pass limit."""

    def __init__(self, message: str, passes: int, rank: int):
        super().__init__(message)
        self.passes = passes
        self.rank = rank


class QuotientSpecError(JohnsonSepError):
    """Permutation data does not describe a regular action."""


class NotInSubgroupError(JohnsonSepError):
    """Word does not lie in the cover subgroup K."""


class NotInvariantError(JohnsonSepError):
    """K is not invariant under the automorphism."""


class WordLengthError(JohnsonSepError):
    """Image word exceeds the configured length guard."""


class DeckEnumerationError(JohnsonSepError):
    """Deck group too large to enumerate."""


class PushDataError(JohnsonSepError):
    """Push datum has the wrong kind or malformed vectors."""


class PreconditionError(JohnsonSepError):
    """Experiment precondition failed."""
