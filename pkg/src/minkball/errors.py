"""Exception hierarchy shared by all modules."""


class MinkballError(Exception):
    """Base class for library errors."""


class DomainError(MinkballError, ValueError):
    """An argument lies outside the domain where a formula is defined."""


class NoSignChange(MinkballError, ValueError):
    """The root bracket does not straddle a sign change."""


class NoConvergence(MinkballError, RuntimeError):
    """An iteration hit its cap before reaching tolerance."""


class DegenerateLattice(MinkballError, ValueError):
    """The basis vectors are linearly dependent."""


class NotPositiveDefinite(MinkballError, ValueError):
    pass


class SingularForm(MinkballError, ValueError):
    pass


class NoFeasiblePoint(MinkballError, RuntimeError):
    """The oracle's inner boundary solve failed everywhere on its grid."""
