"""Exception types shared across the package."""


class OrbiError(Exception):
    """Base class for every error raised by orbimgs."""


class NoSymmetrizer(OrbiError):
    """Ratio constraints d_j*b_jk = -d_k*b_kj have no positive solution."""


class DuplicatePair(OrbiError):
    pass


class SelfLoop(OrbiError):
    pass


class UnknownVertex(OrbiError, KeyError):
    def __str__(self):  # KeyError quotes its argument; keep plain text
        return str(self.args[0]) if self.args else "unknown vertex"


class MixedSign(OrbiError):
    """A c-row has both positive and negative entries."""


class ZeroRow(OrbiError):
    pass


class NonIntegerWeight(OrbiError):
    pass


class OutOfRange(OrbiError):
    pass


class RankTooLarge(OrbiError):
    pass


class UnsupportedParams(OrbiError):
    """Raised when parameters fail validation; ``reason`` holds the code."""

    def __init__(self, reason, message=None):
        self.reason = reason
        super().__init__(message or reason.message)
