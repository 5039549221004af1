"""Exception hierarchy. Every error raised on bad input derives from HardyError."""


class HardyError(ValueError):
    pass


class ZeroPolynomialError(HardyError):
    pass


class PoleError(ZeroDivisionError, HardyError):
    pass


class RootFindingError(HardyError):
    pass


class BoundaryZeroError(HardyError):
    """A zero sits inside the band ||z| - 1| < delta, so inner/outer assignment is ambiguous."""

    def __init__(self, root, delta):
        self.root = complex(root)
        self.delta = delta
        super().__init__(
            f"zero {self.root:.6g} lies within {delta:g} of the unit circle; "
            "inner/outer assignment is ambiguous"
        )


class QuadratureError(HardyError):
    pass


class SymmetryError(HardyError):
    pass


class SpectralConstraintError(HardyError):
    """The input has a nonzero Fourier coefficient at one of the holes."""

    def __init__(self, hole, residual, tol):
        self.hole = int(hole)
        self.residual = float(residual)
        self.tol = float(tol)
        super().__init__(
            f"coefficient at hole k={self.hole} is {self.residual:.3e} "
            f"(tolerance {self.tol:.3e}); input is not in the constrained space"
        )


class NoWitnessError(HardyError):
    pass
