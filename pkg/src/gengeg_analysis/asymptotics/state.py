from enum import Enum
from typing import Optional, Union

import pandas as pd
from pydantic import BaseModel, ConfigDict, Field, model_validator

from gengeg_analysis.polynomials.params import GegenParams, JacobiParams

RECORD_COLUMNS = ["n", "sup_norm", "normalized_ratio", "argmax_t"]


class Verdict(str, Enum):
    PASS = "pass"
    FAIL = "fail"
    NOT_APPLICABLE = "not_applicable"


class AsymptoticRecord(BaseModel):
    model_config = ConfigDict(frozen=True)

    n: int = Field(ge=1)
    sup_norm: float = Field(gt=0, allow_inf_nan=False)
    normalized_ratio: float = Field(gt=0, allow_inf_nan=False)
    argmax_t: Optional[float] = Field(default=None, ge=-1, le=1)


class AsymptoticReport(BaseModel):
    """Outcome of one sweep; composite checks nest their parts in subreports."""
    model_config = ConfigDict(frozen=True)

    label: str
    params: Union[GegenParams, JacobiParams]
    records: tuple[AsymptoticRecord, ...] = ()
    fitted_exponent: Optional[float] = None
    target_exponent: float
    ratio_min: Optional[float] = None
    ratio_max: Optional[float] = None
    verdict: Verdict
    tolerance_used: float
    slope_tol: Optional[float] = None
    fit_min_n: Optional[int] = None
    checks: dict[str, bool] = Field(default_factory=dict)
    note: Optional[str] = None
    subreports: tuple["AsymptoticReport", ...] = ()

    @model_validator(mode="after")
    def _consistent(self):
        if not self.records:
            if self.verdict is not Verdict.NOT_APPLICABLE:
                raise ValueError("a report with a pass/fail verdict needs at least one record")
            return self
        if self.ratio_min is None or self.ratio_max is None:
            raise ValueError("ratio_min and ratio_max are required when records are present")
        if self.ratio_min > self.ratio_max:
            raise ValueError("ratio_min must not exceed ratio_max")
        return self

    @property
    def passed(self) -> bool:
        return self.verdict is not Verdict.FAIL

    def to_frame(self) -> pd.DataFrame:
        return pd.DataFrame([r.model_dump() for r in self.records], columns=RECORD_COLUMNS)


AsymptoticReport.model_rebuild()
