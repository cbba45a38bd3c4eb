from typing import Literal

from pydantic import BaseModel, computed_field, model_validator


class CheckRecord(BaseModel):
    name: str
    status: Literal["pass", "fail"]
    measured: float
    tolerance: float
    detail: str | None = None


class VerificationReport(BaseModel):
    checks: list[CheckRecord] = []

    @property
    def passed(self) -> bool:
        return all(c.status == "pass" for c in self.checks)

    @property
    def failed(self) -> list[str]:
        return [c.name for c in self.checks if c.status == "fail"]


class ContractMapping(BaseModel):
    mapping: str          # p.ej. "|000>_123 -> |p_A>"
    fidelity: float
    phase_re: float
    phase_im: float


class ReducedDensityReport(BaseModel):
    residual_pA: float
    residual_pS: float
    purity: float
    trace: float
    max_imag: float


class ToffoliSupport(BaseModel):
    position: int         # índice de la op CCNOT en el circuito
    support_123: float
    support_456: float


class MomentReport(BaseModel):
    proton_moment: float      # en unidades de mu_d
    neutron_moment: float
    max_backend_deviation: float = 0.0   # oráculo vs circuitos (todos los niveles)

    @computed_field
    @property
    def ratio(self) -> float:
        return self.neutron_moment / self.proton_moment

    @model_validator(mode="after")
    def _nonzero(self):
        if self.proton_moment == 0:
            raise ValueError("Momento del protón nulo")
        return self
