"""Exception hierarchy shared by every helixlab module."""


class HelixlabError(ValueError):
    """Base class; the CLI maps any of these to an input error."""


class DimensionMismatch(HelixlabError):
    pass


class ZeroVector(HelixlabError):
    pass


class NotInLattice(HelixlabError):
    """A linear solve succeeded over Q but the solution is not integral."""


class NoSolution(HelixlabError):
    pass


class NotSODBasis(HelixlabError):
    pass


class BadPosition(HelixlabError):
    pass


class ParseError(HelixlabError):
    pass


class CapExceeded(HelixlabError):
    pass


class AmbientMismatch(HelixlabError):
    pass


class ZeroRank(HelixlabError):
    pass
