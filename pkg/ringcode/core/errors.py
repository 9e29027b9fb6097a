"""Exceptions raised by ringcode.

Hypothesis failures of bounds and checks are report states, not
exceptions; everything here signals a violated precondition.
"""

from __future__ import annotations


class RingcodeError(Exception):
    """Base class for all ringcode errors."""


class RingSpecError(RingcodeError):
    """A ring descriptor could not be parsed."""


class ReducibleModulusError(RingcodeError):
    """A Galois field was requested with a reducible modulus."""


class OrderCapExceeded(RingcodeError):
    """The ring would be larger than the configured order cap."""


class RingAxiomError(RingcodeError):
    """Operation tables violate a ring axiom."""


class NotResidueRingError(RingcodeError):
    """The operation is only defined on an integer residue ring Z_m."""


class NotLocalRingError(RingcodeError):
    """The operation needs a local ring."""


class FieldRingError(RingcodeError):
    """The ring is a field (|J| = 1); use the Hamming-metric bounds instead."""


class InvalidWeightError(RingcodeError):
    """A weight table is negative somewhere or nonzero at 0."""


class InvalidCodeError(RingcodeError):
    """Words of a code have the wrong length or invalid element indices."""


class EnumerationCapExceeded(RingcodeError):
    """A full scan of R^n would exceed the enumeration cap."""


class ParameterError(RingcodeError):
    """A numeric parameter is outside the operation's domain."""


class DistributionError(RingcodeError):
    """A probability distribution is malformed or has the wrong support."""
