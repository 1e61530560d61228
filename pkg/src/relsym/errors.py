"""Exception types shared across the package.

Plain ``ValueError`` is used for malformed input; the classes here cover the
two remaining failure modes the CLI distinguishes by exit code.
"""


class ResourceLimitError(Exception):
    """An enumeration would exceed a configured size cap."""


class ConsistencyError(Exception):
    """Two exact computations that must agree did not.

    This always signals a bug, never bad input.
    """
