"""
Argument and record validators for the perfcone CLI.
Pydantic models for flag validation and the embedded golden rows.
"""

from fractions import Fraction
from typing import Dict, Optional

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from app.terms.schema import PQFraction

ALLOWED_FORMATS = {"json", "csv", "md"}


def _check_format(v: str) -> str:
    v = v.strip().lower()
    if v not in ALLOWED_FORMATS:
        raise ValueError(f"format must be one of {sorted(ALLOWED_FORMATS)}, got '{v}'")
    return v


class ComputeRequest(BaseModel):
    """Flags of `compute`."""
    model_config = ConfigDict(populate_by_name=True)

    genus: int = Field(..., ge=2, description="Genus g >= 2")
    n: int = Field(..., description="Power N of the boundary class")
    format: str = Field(default="json", description="json, csv or md")
    meta: bool = Field(default=False, description="Prepend a metadata block")

    @field_validator("format")
    @classmethod
    def validate_format(cls, v: str) -> str:
        return _check_format(v)


class TableRequest(BaseModel):
    """Flags of `table`."""
    model_config = ConfigDict(populate_by_name=True)

    g_min: int = Field(..., ge=2, description="Smallest genus")
    g_max: int = Field(..., ge=2, description="Largest genus")
    format: str = Field(default="json", description="json, csv or md")
    meta: bool = Field(default=False, description="Prepend a metadata block")

    @field_validator("format")
    @classmethod
    def validate_format(cls, v: str) -> str:
        return _check_format(v)

    @model_validator(mode="after")
    def validate_range(self) -> "TableRequest":
        if self.g_min > self.g_max:
            raise ValueError(f"g_min must not exceed g_max ({self.g_min} > {self.g_max})")
        return self


class CrosscheckRequest(BaseModel):
    """Flags of `crosscheck`."""
    model_config = ConfigDict(populate_by_name=True)

    g_max: int = Field(default=10, ge=2, description="Largest genus swept")
    seed: Optional[int] = Field(default=None, description="Override PERFCONE_CROSSCHECK_SEED")


GOLDEN_FIELDS = ("term_I", "term_II", "term_III", "total")


class GoldenRecord(BaseModel):
    """
    One published row at N = 2g - 1.

    `errata` maps a field to the value the row is checked against instead
    of the printed one. Both the printed and the corrected row must add up.
    """
    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    g: int = Field(..., ge=2, le=7)
    term_I: PQFraction
    term_II: PQFraction
    term_III: PQFraction
    total: PQFraction
    errata: Dict[str, PQFraction] = Field(default_factory=dict)
    note: Optional[str] = None

    @model_validator(mode="after")
    def validate_total(self) -> "GoldenRecord":
        if self.term_I + self.term_II + self.term_III != self.total:
            raise ValueError(f"golden row g={self.g}: terms do not add up to total")
        unknown = set(self.errata) - set(GOLDEN_FIELDS)
        if unknown:
            raise ValueError(f"golden row g={self.g}: unknown errata fields {sorted(unknown)}")
        if self.errata:
            if not self.note:
                raise ValueError(f"golden row g={self.g}: errata need a note")
            terms = sum(self.expected(f) for f in GOLDEN_FIELDS[:3])
            if terms != self.expected("total"):
                raise ValueError(f"golden row g={self.g}: corrected terms do not add up to total")
        return self

    def published(self, field: str) -> Fraction:
        return getattr(self, field)

    def expected(self, field: str) -> Fraction:
        """Value a recomputation must reproduce: the erratum if one is recorded."""
        return self.errata.get(field, self.published(field))
