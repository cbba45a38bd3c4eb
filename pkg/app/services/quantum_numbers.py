from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from app.models.quarks import QuarkFlavor, QuarkNumbers


@dataclass(frozen=True)
class CompositeNumbers:
    B: Fraction
    Q: Fraction
    I3: Fraction
    St: int


def gell_mann_nishijima_residual(n: QuarkNumbers | CompositeNumbers) -> Fraction:
    # Q = I3 + (B + St)/2  ->  residuo exacto
    return n.Q - n.I3 - (n.B + n.St) / 2


def quark_numbers(f: QuarkFlavor) -> QuarkNumbers:
    n = QuarkFlavor(f).numbers
    if gell_mann_nishijima_residual(n) != 0:
        raise ValueError(f"Gell-Mann-Nishijima no se cumple para {f}")
    return n


def composite_numbers(content: Sequence[QuarkFlavor]) -> CompositeNumbers:
    parts = [quark_numbers(f) for f in content]
    return CompositeNumbers(
        B=sum((p.B for p in parts), Fraction(0)),
        Q=sum((p.Q for p in parts), Fraction(0)),
        I3=sum((p.I3 for p in parts), Fraction(0)),
        St=sum(p.St for p in parts),
    )
