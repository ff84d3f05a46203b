from fractions import Fraction
from typing import Dict, Union

from .amplitude import I, INV_SQRT2, MINUS_ONE, ONE, ZERO, AlgebraicComplex
from .circuit import GateMatrix
from .errors import UnsupportedAngleError

HALF = AlgebraicComplex((1, 0, 0, 0, 0, 0, 0, 0), 2)


def quarter_turns(angle_over_pi: Union[Fraction, int]) -> int:
    """Express theta = angle_over_pi * pi as n * pi/4; reject anything else"""
    quarters = Fraction(angle_over_pi) * 4
    if quarters.denominator != 1:
        raise UnsupportedAngleError(f"angle {angle_over_pi}*pi is not a multiple of pi/4")
    return int(quarters)


def rz(n: int) -> GateMatrix:
    """R_Z(n pi/4) = diag(w^-n, w^n)"""
    return GateMatrix(AlgebraicComplex.omega(-n), ZERO, ZERO, AlgebraicComplex.omega(n))


def rx(n: int) -> GateMatrix:
    """R_X(n pi/4) with cos(n pi/8) = (w^n + w^-n)/2"""
    cos = (AlgebraicComplex.omega(n) + AlgebraicComplex.omega(-n)) * HALF
    minus_i_sin = (AlgebraicComplex.omega(-n) - AlgebraicComplex.omega(n)) * HALF
    return GateMatrix(cos, minus_i_sin, minus_i_sin, cos)


def phase(n: int) -> GateMatrix:
    """Global phase Ph(n pi/4) = w^{2n} I"""
    factor = AlgebraicComplex.omega(2 * n)
    return GateMatrix(factor, ZERO, ZERO, factor)


def diagonal(r0: AlgebraicComplex, r1: AlgebraicComplex) -> GateMatrix:
    return GateMatrix(r0, ZERO, ZERO, r1)


X = GateMatrix(ZERO, ONE, ONE, ZERO)
Y = GateMatrix(ZERO, -I, I, ZERO)
Z = diagonal(ONE, MINUS_ONE)
H = GateMatrix(INV_SQRT2, INV_SQRT2, INV_SQRT2, -INV_SQRT2)
S = diagonal(ONE, I)
SDG = diagonal(ONE, -I)
T = diagonal(ONE, AlgebraicComplex.omega(2))
TDG = diagonal(ONE, AlgebraicComplex.omega(-2))
IDENTITY = diagonal(ONE, ONE)


def gate_constants() -> Dict[str, GateMatrix]:
    """Named fixed single-qubit gates"""
    return {
        "id": IDENTITY,
        "x": X,
        "y": Y,
        "z": Z,
        "h": H,
        "s": S,
        "sdg": SDG,
        "t": T,
        "tdg": TDG,
    }


def rotation(name: str, n: int) -> GateMatrix:
    """Parameterized gate by name: rx, rz or ph at angle n pi/4"""
    builders = {"rx": rx, "rz": rz, "ph": phase}
    if name not in builders:
        raise KeyError(name)
    return builders[name](n)


INVERSE_NAMES = {"s": "sdg", "sdg": "s", "t": "tdg", "tdg": "t"}
ROTATION_NAMES = ("rx", "rz", "ph")
