"""
Result records for the intersection-number assembly.
Pydantic models whose rational fields travel as "p/q" strings.
"""

from fractions import Fraction
from typing import Annotated, Literal, Optional

from pydantic import BaseModel, ConfigDict, Field, PlainSerializer, PlainValidator, model_validator

from app.core.exact_arith import from_pq, to_pq


def _coerce_fraction(value) -> Fraction:
    if isinstance(value, bool):
        raise ValueError("booleans are not rationals")
    if isinstance(value, (Fraction, int)):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return from_pq(value)
        except (ValueError, ZeroDivisionError) as e:
            raise ValueError(f"not a p/q rational: {value!r}") from e
    raise ValueError(f"expected an exact rational, got {type(value).__name__}")


PQFraction = Annotated[
    Fraction,
    PlainValidator(_coerce_fraction),
    PlainSerializer(to_pq, return_type=str),
]

Method = Literal["closed-form", "engine"]


class TermValues(BaseModel):
    """The three boundary contributions; present only for N >= 2g - 1."""
    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    I: PQFraction
    II: PQFraction
    III: PQFraction

    @property
    def total(self) -> Fraction:
        return self.I + self.II + self.III


class TermBreakdown(BaseModel):
    """One a_N^{(g)} value with its decomposition."""
    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    genus: int = Field(..., ge=2, description="Genus g")
    N: int = Field(..., ge=0, description="Power of the boundary class")
    G: int = Field(..., description="dim A_g = g(g+1)/2")
    value: PQFraction = Field(..., description="a_N^{(g)}")
    terms: Optional[TermValues] = Field(default=None, description="(I), (II), (III) when N >= 2g-1")
    formal: bool = Field(default=False, description="N >= 3g-3: computed, not a theorem")
    method: Method = Field(..., description="closed-form or engine")

    @model_validator(mode="after")
    def check_consistency(self) -> "TermBreakdown":
        g, n = self.genus, self.N
        if self.G != g * (g + 1) // 2:
            raise ValueError(f"G must be g(g+1)/2 = {g * (g + 1) // 2}, got {self.G}")
        if self.formal != (n >= 3 * g - 3):
            raise ValueError("formal must be set exactly when N >= 3g-3")
        if n >= 2 * g - 1:
            if self.terms is None:
                raise ValueError("terms are required for N >= 2g-1")
            if self.terms.total != self.value:
                raise ValueError("value must equal I + II + III")
        elif self.terms is not None:
            raise ValueError("terms are only defined for N >= 2g-1")
        return self


class ReportedClosedForms(BaseModel):
    """Literal evaluations of the printed closed forms at N = 2g - 1."""
    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    g: int = Field(..., ge=2)
    formulaIII: PQFraction
    corollaryI: PQFraction
    propositionI: PQFraction
