from enum import Enum

class Verdict(Enum):
    PASS = "pass"
    FAIL = "fail"
    ERROR = "error"

class ProductTag(Enum):
    L = "L"
    R = "R"

class Parity(Enum):
    EVEN = "even"
    ODD = "odd"

class GateKind(Enum):
    X = "x"
    DIAGONAL = "diagonal"
    SINGLE = "single"
    CONTROLLED = "controlled"

class ParamGateKind(Enum):
    CXN = "CXN"
    CXN_INV = "CXNINV"
    X_ALL = "XALL"
    ALT_CNOT = "ALTCNOT"
    PHASE_ALL = "PHALL"
    SINGLE_FIRST = "FIRST"
    SINGLE_LAST = "LAST"
    UNFOLD_TOP = "UNFOLD_TOP"
    UNFOLD_BOTTOM = "UNFOLD_BOTTOM"
    FOLD = "FOLD"

class BugScenario(Enum):
    MISS_GATE = "miss-gate"
    FLIP_CX = "flip-cx"

class PredicateKind(Enum):
    BASIS_ALL = "basis-all"
    BASIS_SINGLE = "basis-single"
    BELL = "bell"
    GHZ_FIXED = "ghz"
    GHZ_ALL_FIXED = "ghz-all"
    ZEROS_PARAM = "zeros-param"
    GHZ_PARAM = "ghz-param"
    BV_PRE = "bv-pre"
    BV_POST = "bv-post"
    MCTOFFOLI_PRE = "mctoffoli-pre"
    MCTOFFOLI_POST = "mctoffoli-post"
    EQ_VECTORS = "eq-vectors"
    PARITY_PHASE = "parity-phase"
    EVEN_PARITY_PARAM = "even-parity-param"
