from pydantic import BaseModel, ConfigDict, Field, model_validator


class JacobiParams(BaseModel):
    """Parameters of the Jacobi weight (1-t)^alpha (1+t)^beta."""
    model_config = ConfigDict(frozen=True)

    alpha: float = Field(gt=-1, allow_inf_nan=False)
    beta: float = Field(gt=-1, allow_inf_nan=False)

    def swapped(self) -> "JacobiParams":
        return JacobiParams(alpha=self.beta, beta=self.alpha)


class GegenParams(BaseModel):
    """Parameters of the weight |t|^(2 mu) (1-t^2)^(lambda-1/2)."""
    model_config = ConfigDict(frozen=True, populate_by_name=True)

    lambda_: float = Field(alias="lambda", gt=-0.5, allow_inf_nan=False)
    mu: float = Field(ge=0, allow_inf_nan=False)

    @property
    def lam(self) -> float:
        return self.lambda_

    def even_jacobi(self) -> JacobiParams:
        """Inner Jacobi parameters of the even-index polynomials."""
        return JacobiParams(alpha=self.lambda_ - 0.5, beta=self.mu - 0.5)

    def odd_jacobi(self) -> JacobiParams:
        """Inner Jacobi parameters of the odd-index polynomials."""
        return JacobiParams(alpha=self.lambda_ - 0.5, beta=self.mu + 0.5)


class EvalSequence(BaseModel):
    model_config = ConfigDict(frozen=True)

    params: JacobiParams
    point: float = Field(ge=-1, le=1)
    values: tuple[float, ...] = Field(min_length=1)

    @model_validator(mode="after")
    def _degree_zero_is_one(self):
        if self.values[0] != 1.0:
            raise ValueError("entry 0 of an evaluation sequence must be exactly 1")
        return self

    @property
    def n_max(self) -> int:
        return len(self.values) - 1


class OrthonormalCoefficient(BaseModel):
    model_config = ConfigDict(frozen=True)

    n: int = Field(ge=0)
    value: float = Field(gt=0, allow_inf_nan=False)
