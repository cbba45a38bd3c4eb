from pydantic import BaseModel


class AmplitudeRecord(BaseModel):
    basis: str   # cadena binaria de longitud n, qubit 1 a la izquierda
    re: float
    im: float
