from enum import Enum


class MonotonicityClass(str, Enum):
    DECREASING = "Decreasing"
    INCREASING = "Increasing"
    CONSTANT = "Constant"
    NEITHER = "Neither"
    UNKNOWN = "Unknown"

    @property
    def short(self) -> str:
        return _SHORT_TAGS[self]


_SHORT_TAGS = {
    MonotonicityClass.DECREASING: "dec",
    MonotonicityClass.INCREASING: "inc",
    MonotonicityClass.CONSTANT: "const",
    MonotonicityClass.NEITHER: "neither",
    MonotonicityClass.UNKNOWN: "unknown",
}


class Theorem31Case(str, Enum):
    A_UPPER = "A_upper"
    A_LOWER = "A_lower"
    B_UPPER = "B_upper"
    B_LOWER = "B_lower"
    C_UPPER = "C_upper"
    C_LOWER = "C_lower"
    NOT_COVERED = "NotCovered"


class Corollary32Case(str, Enum):
    A = "a"
    B = "b"
    C_I = "c_i"
    C_II = "c_ii"
    D_I = "d_i"
    D_II = "d_ii"
    D_III = "d_iii"
    NOT_COVERED = "NotCovered"


class VerifyTarget(str, Enum):
    THM31 = "thm31"
    THM33 = "thm33"
    COR32 = "cor32"
    WU_DEBNATH = "wu-debnath"
    ALZER_QIU = "alzer-qiu"
    TRIF = "trif"
    KOUBA = "kouba"
    REGIONS = "regions"
    AQ = "aq"
    LHR = "lhr"
    KERNELS = "kernels"
