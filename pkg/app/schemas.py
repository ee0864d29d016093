"""
Pydantic schemas for request/response validation
"""

from typing import Any, Dict, List, Optional

from pydantic import BaseModel, Field, model_validator


class BoxRequest(BaseModel):
    """Box parameters"""
    d: int = Field(..., ge=1, le=12)
    n: int = Field(..., ge=2, le=16)

    @model_validator(mode="after")
    def check_box(self):
        if self.d >= self.n:
            raise ValueError("box requires d < n")
        return self


class BoxSchema(BaseModel):
    """Box echo"""
    d: int
    n: int

    class Config:
        from_attributes = True


class GWInvariantRequest(BoxRequest):
    """Request for a single Gromov-Witten invariant"""
    lambda_: List[int] = Field(..., alias="lambda")
    mu: List[int]
    nu: List[int]
    k: int = Field(..., ge=0)

    class Config:
        populate_by_name = True


class GWRowSchema(BaseModel):
    """One invariant with both engine values"""
    d: int
    n: int
    lambda_: List[int] = Field(..., alias="lambda")
    mu: List[int]
    nu: List[int]
    k: int
    value: int
    vi_value: int
    residual: float

    class Config:
        populate_by_name = True


class PieriRequest(BoxRequest):
    """X_k * s_lambda"""
    k: int = Field(..., ge=1)
    lambda_: List[int] = Field(..., alias="lambda")

    class Config:
        populate_by_name = True


class MultiplyRequest(BoxRequest):
    """s_lambda * s_mu"""
    lambda_: List[int] = Field(..., alias="lambda")
    mu: List[int]

    class Config:
        populate_by_name = True


class RingTermSchema(BaseModel):
    """q^k s_lambda with an exact coefficient"""
    k: int
    lambda_: List[int] = Field(..., alias="lambda")
    coeff: str = Field(..., description="Decimal string, arbitrary size")

    class Config:
        populate_by_name = True


class RingElementSchema(BaseModel):
    """Ring element in the Schubert basis"""
    d: int
    n: int
    terms: List[RingTermSchema]


class PointRequest(BoxRequest):
    """u_n(t zeta^I)"""
    t: float = 1.0
    index: Optional[List[str]] = Field(None, description="Exact entries such as '-1/2'; defaults to I_0")


class PointSchema(BaseModel):
    """Toeplitz point with diagnostics"""
    d: int
    n: int
    x: List[List[float]] = Field(..., description="Band entries as [re, im] pairs")
    t: Optional[float] = None
    I: Optional[List[str]] = None
    corner_minors: List[List[float]] = []
    stratum: List[int] = []
    q: List[float] = []


class FactorizeRequest(BoxRequest):
    """Factorization of u_{>0}(t)"""
    t: float = Field(1.0, gt=0)


class FactorGridSchema(BaseModel):
    """Factor parameters as [i, j, value] rows"""
    d: int
    n: int
    a: List[List[float]]


class FactorizeResponse(BaseModel):
    """Factor grid with reconstruction diagnostics"""
    grid: FactorGridSchema
    round_trip_error: float
    closed_form_deviation: float


class VerifyRequest(BoxRequest):
    """Harness check"""
    check: str
    tol: Optional[float] = Field(None, gt=0)
    t: float = 1.0


class CheckReportSchema(BaseModel):
    """Worst-case residual of a check"""
    check: str
    box: BoxSchema
    max_residual: float
    max_abs_deviation: float
    witness: Dict[str, Any]
    tolerance: Optional[float] = None
    passed: bool


class InequalityRequest(BaseModel):
    """Scan all boxes up to n_max"""
    n_max: int = Field(..., ge=2, le=10)


class InequalityReportSchema(BaseModel):
    """Schur value inequality scan for one box"""
    d: int
    n: int
    cells_checked: int
    max_excess: float
    violations: List[Dict[str, Any]]
    maximizers: Dict[str, List[List[str]]]
    passed: bool
