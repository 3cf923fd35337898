"""Exception types shared across the package.

The CLI maps InputError to exit code 1 and NumericalError to exit code 2.
"""


class SkewmixError(Exception):
    """Base class for all package errors."""


class InputError(SkewmixError, ValueError):
    """Invalid user input: bad files, bad parameters, misuse of an API."""


class NumericalError(SkewmixError, RuntimeError):
    """A numerical procedure failed (singular matrix, non-convergence, ...)."""


class CollapseSignal(SkewmixError):
    """Raised inside EM when a component collapses; the driver aborts the start.

    Attributes
    ----------
    start_index : index of the start being aborted (set by the driver).
    component : index of the collapsed component.
    size : effective sample size of the collapsed component.
    """

    def __init__(self, component, size, start_index=None):
        self.component = component
        self.size = size
        self.start_index = start_index
        super().__init__(
            f"component {component} collapsed (effective size {size:.3f})"
        )
