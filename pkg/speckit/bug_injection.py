from dataclasses import replace

import numpy as np
from loguru import logger

from models.circuit import Circuit, GateOp
from models.enums import BugScenario
from models.errors import BugInjectionError


def inject_bug(circuit: Circuit, scenario: BugScenario, seed: int) -> Circuit:
    """Deterministic bug injection: drop a random gate or flip a random CX"""
    rng = np.random.default_rng(seed)
    gates = list(circuit.gates)

    if scenario is BugScenario.MISS_GATE:
        if not gates:
            raise BugInjectionError("cannot remove a gate from an empty circuit")
        index = int(rng.integers(len(gates)))
        removed = gates.pop(index)
        logger.info(f"miss-gate: removed gate {index} ({removed.label()})")
        return replace(circuit, gates=gates)

    if scenario is BugScenario.FLIP_CX:
        candidates = [i for i, g in enumerate(gates) if isinstance(g, GateOp) and g.is_cx]
        if not candidates:
            raise BugInjectionError("flip-cx needs a circuit with at least one cx gate")
        index = candidates[int(rng.integers(len(candidates)))]
        g = gates[index]
        gates[index] = GateOp.controlled((g.target,), GateOp.x(g.controls[0]))
        logger.info(f"flip-cx: gate {index} is now {gates[index].label()}")
        return replace(circuit, gates=gates)

    raise BugInjectionError(f"unknown scenario {scenario}")
