from dataclasses import dataclass
from enum import Enum
from fractions import Fraction


class NucleonKind(str, Enum):
    PROTON = "proton"
    NEUTRON = "neutron"


class ComponentStateKind(str, Enum):
    P_A = "pA"
    P_S = "pS"
    N_A = "nA"
    N_S = "nS"
    CHI_A = "chiA"
    CHI_S = "chiS"


@dataclass(frozen=True)
class QuarkNumbers:
    spin: Fraction
    B: Fraction        # número bariónico
    Q: Fraction        # carga
    I3: Fraction       # proyección de isospín
    St: int            # extrañeza


class QuarkFlavor(str, Enum):
    u = "u"
    d = "d"
    s = "s"

    @property
    def numbers(self) -> QuarkNumbers:
        return _TABLE[self]


_HALF = Fraction(1, 2)
_THIRD = Fraction(1, 3)

_TABLE: dict[QuarkFlavor, QuarkNumbers] = {
    QuarkFlavor.u: QuarkNumbers(spin=_HALF, B=_THIRD, Q=Fraction(2, 3), I3=_HALF, St=0),
    QuarkFlavor.d: QuarkNumbers(spin=_HALF, B=_THIRD, Q=-_THIRD, I3=-_HALF, St=0),
    QuarkFlavor.s: QuarkNumbers(spin=_HALF, B=_THIRD, Q=-_THIRD, I3=Fraction(0), St=-1),
}

# contenido de quarks de cada nucleón
QUARK_CONTENT: dict[NucleonKind, tuple[QuarkFlavor, QuarkFlavor, QuarkFlavor]] = {
    NucleonKind.PROTON: (QuarkFlavor.u, QuarkFlavor.u, QuarkFlavor.d),
    NucleonKind.NEUTRON: (QuarkFlavor.u, QuarkFlavor.d, QuarkFlavor.d),
}
