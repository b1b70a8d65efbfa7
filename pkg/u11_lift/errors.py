"""Error types shared by every module.

Each error knows the process exit code the CLI reports for it.
"""


class LiftError(Exception):
    """Base class for all toolkit errors."""

    code = "internal"
    exit_code = 1

    def to_dict(self) -> dict:
        return {"error": self.code, "message": str(self)}


class InvalidInputError(LiftError, ValueError):
    """A precondition of the requested operation is violated."""

    code = "invalid_input"
    exit_code = 2


class InsufficientPrecisionError(InvalidInputError):
    """A q-series coefficient was requested at or beyond the known precision."""

    code = "insufficient_precision"


class NotHeegnerError(InvalidInputError):
    """Lattice vector does not have negative norm."""

    code = "not_heegner"


class CuspError(InvalidInputError):
    """Lattice vector is proportional to the isotropic vector l."""

    code = "cusp"


class ConvergenceError(LiftError):
    """Evaluation point lies outside the enforced convergence region."""

    code = "convergence"
    exit_code = 3


class InconclusiveError(LiftError):
    """Winding number could not be resolved at the allowed sampling density."""

    code = "inconclusive"
    exit_code = 3


class WallError(LiftError):
    """Point lies on a wall of a Weyl chamber."""

    code = "wall"
    exit_code = 4

    def __init__(self, m: int, t: int, message: str = ""):
        self.m = m
        self.t = t
        super().__init__(message or f"point lies on the wall t={t} of index m={m}")

    def to_dict(self) -> dict:
        return {**super().to_dict(), "m": self.m, "t": self.t}


class DivisorHitError(LiftError):
    """A retained product factor vanishes at the evaluation point."""

    code = "divisor_hit"
    exit_code = 4

    def __init__(self, l: int, k: int, a: int):
        self.l = l
        self.k = k
        self.a = a
        super().__init__(f"factor (l={l}, k={k}) vanishes: k*tau - l*conj(zeta) = {a}")

    def to_dict(self) -> dict:
        return {**super().to_dict(), "l": self.l, "k": self.k, "a": self.a}
