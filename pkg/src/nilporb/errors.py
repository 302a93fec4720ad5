"""Exception hierarchy shared by all modules.

Exit-code policy (used by the CLI):
    2 -- bad input (malformed specs, parity violations, exceeded rank cap)
    3 -- internal consistency failure (an identity the library promises broke)
    4 -- criterion-table gap (a case family missing from the data table)
"""


class NilporbError(Exception):
    exit_code = 3


class InputError(NilporbError):
    """Invalid user-supplied data: wrong sizes, parity violations, syntax."""

    exit_code = 2


class RankCapError(InputError):
    """Weyl-group enumeration would exceed the configured rank cap."""


class XiError(InputError):
    """A central parameter is not regular for the requested operation.

    Message starts with ``xi-not-regular``.
    """


class ConsistencyError(NilporbError):
    """An internal cross-check failed.

    Messages start with one of the documented markers, e.g.
    ``uniqueness-violated``, ``inconsistent-birational-rigidity``,
    ``action-undetermined``.
    """

    exit_code = 3


class TableGapError(NilporbError):
    """The versioned criterion table does not cover a requested case.

    Messages start with ``criterion-not-transcribed`` (birationality rule)
    or ``reduction-table-gap`` (degeneration families).
    """

    exit_code = 4
