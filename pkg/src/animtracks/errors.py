"""Exception hierarchy shared by all modules."""


class AnimationError(Exception):
    """Base class for every error raised by animtracks."""


class ValidationError(AnimationError):
    """Input data violates a documented precondition."""
