"""Exception and warning types shared across the package.

Plain ``ValueError`` is used for generic argument validation; the classes here
mark conditions callers may want to branch on (all of them still derive from
``ValueError`` so naive handling keeps working).
"""


class AboveThresholdError(ValueError):
    """Pump power at or above oscillation threshold; below-threshold model invalid."""


class UnitError(ValueError):
    """Trace carries the wrong power unit for the requested operation."""


class NoSqueezingError(ValueError):
    """Measured pair shows no squeezing (or no anti-squeezing); inversion undefined."""


class InconsistentPairError(ValueError):
    """Measured pair cannot originate from a pure squeezed state plus loss."""


class InfeasibleTargetError(ValueError):
    """Requested degradation target cannot be reached by adding loss."""


class MarkerDetectionError(RuntimeError):
    """Fewer than three resolvable peaks in a cavity scan."""


class CalibrationWarning(UserWarning):
    """Scan nonlinearity detected; marker interpolation used for calibration."""


class RankDeficiencyWarning(UserWarning):
    """Fit Jacobian is rank deficient; some standard errors are unreliable."""


class JitterRangeWarning(UserWarning):
    """Phase jitter beyond the small-angle regime of the Gaussian-average model."""
