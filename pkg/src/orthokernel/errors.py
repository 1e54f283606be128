"""Exception hierarchy shared by all kernel modules."""


class KernelError(Exception):
    """Base class for every error raised by this package."""


class InputError(KernelError, ValueError):
    """Malformed input: dimension mismatch, bad wire format, unknown id."""


class PreconditionError(KernelError, ValueError):
    """A documented operation precondition does not hold for the arguments."""


class UnsatisfiableParams(KernelError, ValueError):
    """Requested typed-orthogonality parameters admit no instance in the space."""


class GenerationError(KernelError, RuntimeError):
    """Randomized construction exhausted its retry budget on degenerate draws."""


class InternalError(KernelError, RuntimeError):
    """An internal invariant failed; indicates a kernel bug, not a user error."""
