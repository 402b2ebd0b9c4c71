"""Exception types raised for non-physical input."""


class PhysicsError(ValueError):
    """Input outside the physical domain of a formula."""


class OffShellError(PhysicsError):
    pass


class KinematicsError(PhysicsError):
    """No elastic configuration exists for the requested inputs."""


class ForwardSingularityError(PhysicsError):
    """Zero momentum transfer (theta = 0) where the amplitude diverges."""
