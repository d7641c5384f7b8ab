"""Exception hierarchy.

Numeric-contract failures (solver divergence, validity loss, precision
exhaustion) all derive from :class:`NumericError` so the CLI can map them to
a single exit code; configuration/usage problems derive from
:class:`UsageError`.
"""


class RenormalabError(Exception):
    """Base class for all package errors."""


class NumericError(RenormalabError):
    """A numeric contract was violated (exit code 2 in the CLI)."""


class UsageError(RenormalabError):
    """Bad configuration or bad arguments (exit code 1 in the CLI)."""


# --- series -----------------------------------------------------------------

class DomainExceeded(NumericError):
    """Evaluation point lies outside the germ's trust disk."""


class TailBlowup(NumericError):
    """Truncation tail diagnostic exceeded tolerance; series no longer
    trustworthy on its reference disk."""


class DegenerateQuadraticTerm(NumericError):
    """|a_2| below tolerance: the iterate lost its quadratic character."""


# --- renorm -----------------------------------------------------------------

class NotRenormalizable(NumericError):
    """No valid restrictive interval for the requested period."""


class KneadingMismatch(NumericError):
    """Critical-orbit signature does not match the requested copy label."""


class OrbitEscape(NumericError):
    """The critical orbit left the trust disk before the requested depth."""


# --- solver -----------------------------------------------------------------

class NewtonDiverged(NumericError):
    """Newton iteration failed to converge."""


class DegenerateJacobian(NumericError):
    """Jacobian condition estimate beyond the trust threshold."""


class ShiftInconsistent(NumericError):
    """Solved cycle fails the letter-by-letter closure post-check."""


# --- spectrum ---------------------------------------------------------------

class QRNoConvergence(NumericError):
    """Shifted-QR iteration exceeded its sweep budget."""


# --- paramspace / families --------------------------------------------------

class NotAdmissible(UsageError):
    """Word/label not realized by any real parameter."""


class BracketNotFound(NumericError):
    """Root bracketing failed (comparator bug or precision exhaustion)."""


class PrecisionExhausted(NumericError):
    """Requested depth exceeds the double-double precision budget."""


class TangencySolveFailed(NumericError):
    """Saddle-node (window root) system did not converge."""


class KneadingTieAtDepthK(NumericError):
    """Kneading comparison undecided at configured depth; increase depth."""


class InsufficientRows(UsageError):
    """Not enough cascade rows for the requested extrapolation."""


# --- mandelplane ------------------------------------------------------------

class MismatchedShape(UsageError):
    """Grids disagree in resolution/center where equality is required."""


class AllEmptyGrid(NumericError):
    """Grid contains no member pixels; gap statistic undefined."""


# --- hdim -------------------------------------------------------------------

class DegenerateRatios(NumericError):
    """Interval tree unusable for a Moran estimate (child >= parent, or a
    node with fewer than two children)."""


# --- cli --------------------------------------------------------------------

class ConfigError(UsageError):
    """Config file failed to parse; message carries position context."""


class UnknownKey(UsageError):
    """Config file contains an unrecognized key."""
