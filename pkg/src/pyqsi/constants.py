"""Constants used throughout the pyqsi library.

This module defines generator naming, JSON keys, exit codes and the environment
variable read by the command line front end.
"""


class Constants:
    """Constants used throughout the pyqsi library."""

    # Prefix of the homogeneous basis generators c_0, ..., c_p
    HOMOGENEOUS_PREFIX = "c"
    # Arc generator ids read "E:<family>:<start>:<end>"
    ARC_PREFIX = "E"
    ID_SEPARATOR = ":"
    # Primes distinguishing the arc generators of the first three families
    FAMILY_MARKS: tuple[str, ...] = ("", "'", "''")

    COXETER_ORDER = "sink_first"

    EXIT_OK = 0
    EXIT_INPUT_ERROR = 1
    EXIT_VERIFICATION_FAILED = 2

    THREADS_ENV = "QSI_THREADS"

    # Bits of the default screening prime used by `--modulus auto`
    SCREENING_PRIME_BITS = 62
