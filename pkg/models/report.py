from dataclasses import dataclass, field
from typing import Dict, List, Optional

from dataclasses_json import dataclass_json
from pydantic import BaseModel, PositiveInt

from config import CHECK_WITNESS, INCLUSION_BUDGET, REDUCE_AFTER_GATE
from .enums import Verdict


class VerificationOptions(BaseModel):
    """Per-run knobs; defaults come from the environment via config"""
    reduce_after_gate: bool = REDUCE_AFTER_GATE
    inclusion_budget: PositiveInt = INCLUSION_BUDGET
    check_equality: bool = False
    check_witness: bool = CHECK_WITNESS


@dataclass_json
@dataclass
class GateSizeRecord:
    gate_index: int
    label: str
    states: int
    transitions: int


@dataclass_json
@dataclass
class VerificationReport:
    verdict: Verdict
    witness: Optional[str] = None
    witness_direction: Optional[str] = None
    gate_sizes: List[GateSizeRecord] = field(default_factory=list)
    timings: Dict[str, float] = field(default_factory=dict)
    message: Optional[str] = None
    reverse_holds: Optional[bool] = None

    @property
    def exit_code(self) -> int:
        return {Verdict.PASS: 0, Verdict.FAIL: 1, Verdict.ERROR: 2}[self.verdict]

    def to_key_values(self) -> str:
        """Flat key=value document, one entry per line"""
        lines = [f"verdict={self.verdict.value}"]
        if self.witness is not None:
            lines.append(f"witness={self.witness}")
            lines.append(f"witness_direction={self.witness_direction}")
        if self.reverse_holds is not None:
            lines.append(f"reverse_holds={str(self.reverse_holds).lower()}")
        for phase, seconds in self.timings.items():
            lines.append(f"time_{phase}={seconds:.6f}")
        if self.gate_sizes:
            final = self.gate_sizes[-1]
            lines.append(f"final_states={final.states}")
            lines.append(f"final_transitions={final.transitions}")
            lines.append(f"max_states={max(r.states for r in self.gate_sizes)}")
        if self.message:
            lines.append(f"message={self.message}")
        return "\n".join(lines)
