"""Exception types raised by the solver and analysis modules."""


class StefanLabError(Exception):
    """Base class for all package-specific errors."""


class ConfigError(StefanLabError):
    """A run configuration violates a declared invariant.

    ``name`` identifies the violated invariant so batch drivers can report
    machine-readable failures before any compute starts.
    """

    def __init__(self, name, message):
        super().__init__(message)
        self.name = name


class GraphViolation(StefanLabError):
    """The radial graph condition r = 1 + f > 0 fails at some angle."""


class MapDegenerate(StefanLabError):
    """det DX <= 0 somewhere: the reference-to-physical map folds over."""

    def __init__(self, message, location=None):
        super().__init__(message)
        self.location = location


class ClearanceViolation(StefanLabError):
    """Interface or center leaves the admissible region of the blended map."""


class OutsidePureRegion(StefanLabError):
    """Closed-form coefficients requested where the map is not x = a + rho*xbar."""


class StepUnstable(StefanLabError):
    """Explicit perturbation load exceeds the configured CFL-like bound."""

    def __init__(self, message, magnitude):
        super().__init__(message)
        self.magnitude = magnitude


class SingularRegularization(StefanLabError):
    """Collocation matrix of the regularized velocity solve is singular."""


class ModulationSingular(StefanLabError):
    """Center-velocity system is ill-conditioned (near-degenerate geometry)."""


class RecenterDiverged(StefanLabError):
    """Fixed-point recentering of initial data failed to converge."""


class StopOnBlowup(StefanLabError):
    """Interface amplitude crossed the blow-up guard during a run."""

    def __init__(self, message, time, max_f):
        super().__init__(message)
        self.time = time
        self.max_f = max_f


class EigenFailed(StefanLabError):
    """Dense generalized eigensolve broke down."""


class FitDegenerate(StefanLabError):
    """Decay-rate fit requested on non-positive or too-short data."""


class MissingData(StefanLabError):
    """Cross-validation inputs are absent or inconsistent (e.g. R_Omega mismatch)."""
