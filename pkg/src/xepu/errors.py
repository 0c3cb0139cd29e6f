"""Exception types raised by the toolkit.

Every validation error carries the measured residual (or offending value)
in its message so failures are diagnosable from logs alone.
"""


class XepuError(Exception):
    """Base class for all toolkit errors."""


class NotHermitian(XepuError):
    def __init__(self, residual: float):
        self.residual = residual
        super().__init__(f"matrix is not Hermitian: ||m - m^dag||_F = {residual:.3e}")


class NotUnitTrace(XepuError):
    def __init__(self, residual: float):
        self.residual = residual
        super().__init__(f"matrix does not have unit trace: |tr - 1| = {residual:.3e}")


class NotPSD(XepuError):
    def __init__(self, min_eigenvalue: float):
        self.min_eigenvalue = min_eigenvalue
        super().__init__(
            f"matrix is not positive semidefinite: min eigenvalue = {min_eigenvalue:.3e}"
        )


class InvalidRank(XepuError):
    def __init__(self, rank):
        self.rank = rank
        super().__init__(f"rank must be an integer in 1..4, got {rank!r}")


class OutOfRange(XepuError):
    def __init__(self, name: str, value, lo, hi):
        self.name = name
        self.value = value
        super().__init__(f"{name} = {value!r} outside [{lo}, {hi}]")


class NotXState(XepuError):
    def __init__(self, largest_off_x: float, xtol: float):
        self.largest_off_x = largest_off_x
        super().__init__(
            f"matrix is not an X state: largest off-X magnitude {largest_off_x:.3e} "
            f"exceeds xtol {xtol:.3e}"
        )


class UnphysicalConcurrence(XepuError):
    def __init__(self, c: float, ceiling: float):
        self.c = c
        self.ceiling = ceiling
        super().__init__(
            f"concurrence {c!r} is unphysical for this spectrum: "
            f"valid range is [0, {ceiling:.17g}]"
        )


class QNegative(XepuError):
    def __init__(self, q: float):
        self.q = q
        super().__init__(
            f"closed-form angle is only defined on the Q >= 0 branch (Q = {q:.3e})"
        )


class ConvergenceFailure(XepuError):
    def __init__(self, detail: str):
        super().__init__(f"eigensolver failed to converge: {detail}")
