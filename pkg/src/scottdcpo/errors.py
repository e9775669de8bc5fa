"""Exception types raised across the package."""


class ScottError(ValueError):
    """Base class for invalid inputs and refused operations."""


class UnknownLabel(ScottError):
    pass


class CycleDetected(ScottError):
    """The reflexive-transitive closure of a relation is not antisymmetric."""


class NotAPartialOrder(ScottError):
    pass


class NotDirected(ScottError):
    pass


class NotAFamily(ScottError):
    """A closed-set family is missing the empty set or the carrier, or is not
    closed under union and intersection."""


class NotT0(ScottError):
    pass


class NotClosed(ScottError):
    pass


class NotALattice(ScottError):
    pass


class NotReconstructible(ScottError):
    pass


class NotScottClosed(ScottError):
    pass


class SizeLimit(ScottError):
    """An exact computation would exceed its configured size cap."""


class UnknownSuite(ScottError):
    pass


class FormatError(ScottError):
    pass
