from dataclasses import dataclass, field, replace
from typing import List, Optional, Tuple, Union

from .amplitude import ONE, ZERO, AlgebraicComplex
from .enums import GateKind, ParamGateKind, Parity


@dataclass(frozen=True)
class GateMatrix:
    """Row-major 2x2 matrix (u1 u2; u3 u4)"""
    u1: AlgebraicComplex
    u2: AlgebraicComplex
    u3: AlgebraicComplex
    u4: AlgebraicComplex

    def __matmul__(self, other: "GateMatrix") -> "GateMatrix":
        return GateMatrix(
            self.u1 * other.u1 + self.u2 * other.u3,
            self.u1 * other.u2 + self.u2 * other.u4,
            self.u3 * other.u1 + self.u4 * other.u3,
            self.u3 * other.u2 + self.u4 * other.u4,
        )

    def dagger(self) -> "GateMatrix":
        return GateMatrix(self.u1.conjugate(), self.u3.conjugate(),
                          self.u2.conjugate(), self.u4.conjugate())

    @property
    def is_diagonal(self) -> bool:
        return self.u2.is_zero and self.u3.is_zero

    @property
    def is_identity(self) -> bool:
        return self == IDENTITY

    def is_unitary(self) -> bool:
        return (self @ self.dagger()).is_identity

    def apply(self, a: AlgebraicComplex, b: AlgebraicComplex) -> Tuple[AlgebraicComplex, AlgebraicComplex]:
        return self.u1 * a + self.u2 * b, self.u3 * a + self.u4 * b


IDENTITY = GateMatrix(ONE, ZERO, ZERO, ONE)


@dataclass(frozen=True)
class GateOp:
    """A fixed-index gate application.

    X and DIAGONAL use their fast paths; SINGLE runs the general product
    construction; CONTROLLED wraps one of the other three. ``name`` and
    ``angle`` (multiples of pi/4) keep the source gate for printing and
    inversion.
    """
    kind: GateKind
    target: int
    matrix: Optional[GateMatrix] = None
    controls: Tuple[int, ...] = ()
    inner: Optional["GateOp"] = None
    name: str = ""
    angle: Optional[int] = None

    @classmethod
    def x(cls, target: int) -> "GateOp":
        return cls(GateKind.X, target, name="x")

    @classmethod
    def diagonal(cls, target: int, r0: AlgebraicComplex, r1: AlgebraicComplex,
                 name: str = "diag", angle: Optional[int] = None) -> "GateOp":
        return cls(GateKind.DIAGONAL, target, GateMatrix(r0, ZERO, ZERO, r1), name=name, angle=angle)

    @classmethod
    def single(cls, target: int, matrix: GateMatrix, name: str = "u",
               angle: Optional[int] = None) -> "GateOp":
        return cls(GateKind.SINGLE, target, matrix, name=name, angle=angle)

    @classmethod
    def controlled(cls, controls: Tuple[int, ...], inner: "GateOp", name: str = "") -> "GateOp":
        if not name:
            name = {1: "c", 2: "cc"}.get(len(controls), "cn") + inner.name
        return cls(GateKind.CONTROLLED, inner.target, controls=tuple(controls), inner=inner, name=name)

    @property
    def r0(self) -> AlgebraicComplex:
        return self.matrix.u1

    @property
    def r1(self) -> AlgebraicComplex:
        return self.matrix.u4

    def matrix_form(self) -> GateMatrix:
        """The 2x2 core of a non-controlled gate"""
        if self.kind is GateKind.X:
            return GateMatrix(ZERO, ONE, ONE, ZERO)
        if self.kind is GateKind.CONTROLLED:
            return self.inner.matrix_form()
        return self.matrix

    @property
    def qubits(self) -> Tuple[int, ...]:
        return tuple(self.controls) + (self.target,)

    @property
    def is_cx(self) -> bool:
        return (self.kind is GateKind.CONTROLLED and len(self.controls) == 1
                and self.inner.kind is GateKind.X)

    def with_qubits(self, controls: Tuple[int, ...], target: int) -> "GateOp":
        inner = replace(self.inner, target=target) if self.inner is not None else None
        return replace(self, controls=tuple(controls), target=target, inner=inner)

    def label(self) -> str:
        angle = f"({self.angle}pi/4)" if self.angle is not None else ""
        inner_angle = ""
        if self.inner is not None and self.inner.angle is not None:
            inner_angle = f"({self.inner.angle}pi/4)"
        qubits = ",".join(str(q) for q in self.qubits)
        return f"{self.name}{angle}{inner_angle} {qubits}"


@dataclass(frozen=True)
class ParamGateOp:
    """A gate over circuits of unbounded width.

    ``index`` is the unfold depth for UNFOLD_TOP/UNFOLD_BOTTOM and the qubit
    position for SINGLE_FIRST (counted from the top) and SINGLE_LAST (counted
    from the bottom).
    """
    kind: ParamGateKind
    matrix: Optional[GateMatrix] = None
    index: int = 1
    parity: Optional[Parity] = None
    roots_of_unity: int = 1
    power: int = 1
    name: str = ""
    angle: Optional[int] = None

    def label(self) -> str:
        if self.kind in (ParamGateKind.SINGLE_FIRST, ParamGateKind.SINGLE_LAST):
            where = "FIRST" if self.kind is ParamGateKind.SINGLE_FIRST else "LAST"
            angle = f" {self.angle}" if self.angle is not None else ""
            return f"{self.name.upper()}_{where}@{self.index}{angle}"
        if self.kind is ParamGateKind.ALT_CNOT:
            return f"ALTCNOT {self.parity.value}"
        if self.kind is ParamGateKind.PHASE_ALL:
            return f"PHALL {self.roots_of_unity} {self.power}"
        if self.kind in (ParamGateKind.UNFOLD_TOP, ParamGateKind.UNFOLD_BOTTOM):
            return f"{self.kind.value} {self.index}"
        return self.kind.value


AnyGate = Union[GateOp, ParamGateOp]


@dataclass
class Circuit:
    """Gate sequence; qubit_count is None for parameterized circuits"""
    qubit_count: Optional[int]
    gates: List[AnyGate] = field(default_factory=list)

    @property
    def is_parameterized(self) -> bool:
        return self.qubit_count is None

    def __len__(self):
        return len(self.gates)
