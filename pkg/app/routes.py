"""
API routes for the quantum Grassmannian toolkit
"""

from typing import List

from fastapi import APIRouter, HTTPException, status

from app.models import BoxShape
from app.schemas import (
    BoxRequest,
    CheckReportSchema,
    FactorizeRequest,
    FactorizeResponse,
    GWInvariantRequest,
    GWRowSchema,
    InequalityReportSchema,
    InequalityRequest,
    MultiplyRequest,
    PieriRequest,
    PointRequest,
    PointSchema,
    RingElementSchema,
    VerifyRequest,
)
from app.services import toolkit_service
from app.utils import (
    convert_grid_to_schema,
    convert_gw_row_to_schema,
    convert_index_to_model,
    convert_inequality_to_schema,
    convert_partition_to_model,
    convert_point_to_schema,
    convert_report_to_schema,
    convert_ring_element_to_schema,
)

router = APIRouter()


def _box(request: BoxRequest) -> BoxShape:
    return BoxShape(request.d, request.n)


def _bad_request(e: ValueError) -> HTTPException:
    return HTTPException(
        status_code=status.HTTP_400_BAD_REQUEST,
        detail={"error": type(e).__name__, "detail": str(e)},
    )


@router.get("/health", tags=["Health"])
async def health_check():
    """Health check endpoint"""
    return {"status": "healthy", "service": "Quantum Grassmannian Toolkit"}


@router.post(
    "/gw/table",
    response_model=List[GWRowSchema],
    tags=["Gromov-Witten"],
    summary="All nonzero invariants of a box"
)
def gw_table(request: BoxRequest):
    """
    Every nonzero invariant <lambda, mu, nu>_k of the box, computed by the
    quantum Pieri engine and by the Vafa-Intriligator sum.
    """
    try:
        rows = toolkit_service.gw_table(_box(request))
    except ValueError as e:
        raise _bad_request(e)
    return [convert_gw_row_to_schema(row) for row in rows]


@router.post(
    "/gw/invariant",
    response_model=GWRowSchema,
    tags=["Gromov-Witten"],
    summary="One invariant"
)
def gw_invariant(request: GWInvariantRequest):
    """Compute <lambda, mu, nu>_k with both engines"""
    try:
        row = toolkit_service.gw_invariant(
            _box(request),
            convert_partition_to_model(request.lambda_),
            convert_partition_to_model(request.mu),
            convert_partition_to_model(request.nu),
            request.k,
        )
    except ValueError as e:
        raise _bad_request(e)
    return convert_gw_row_to_schema(row)


@router.post(
    "/ring/pieri",
    response_model=RingElementSchema,
    tags=["Ring"],
    summary="Quantum Pieri rule"
)
def ring_pieri(request: PieriRequest):
    """Expand X_k * s_lambda in the Schubert basis"""
    try:
        element = toolkit_service.pieri(_box(request), convert_partition_to_model(request.lambda_), request.k)
    except ValueError as e:
        raise _bad_request(e)
    return convert_ring_element_to_schema(element)


@router.post(
    "/ring/multiply",
    response_model=RingElementSchema,
    tags=["Ring"],
    summary="Product of two Schubert classes"
)
def ring_multiply(request: MultiplyRequest):
    """Expand s_lambda * s_mu in the Schubert basis"""
    try:
        element = toolkit_service.multiply(
            _box(request),
            convert_partition_to_model(request.lambda_),
            convert_partition_to_model(request.mu),
        )
    except ValueError as e:
        raise _bad_request(e)
    return convert_ring_element_to_schema(element)


@router.post(
    "/points",
    response_model=PointSchema,
    tags=["Points"],
    summary="Point of V_{d,n}"
)
def points(request: PointRequest):
    """
    Build u_n(t zeta^I) and report its corner minors, stratum and q-value.

    The index defaults to I_0, the label of the totally positive point.
    """
    box = _box(request)
    try:
        index = None if request.index is None else convert_index_to_model(request.index, box)
        u, summary = toolkit_service.point(box, request.t, index)
    except ValueError as e:
        raise _bad_request(e)
    return convert_point_to_schema(u, summary)


@router.post(
    "/factorize",
    response_model=FactorizeResponse,
    tags=["Positivity"],
    summary="Factor the totally positive point"
)
def factorize(request: FactorizeRequest):
    """Simple root factorization of u_{>0}(t) with round-trip diagnostics"""
    try:
        grid, error, deviation = toolkit_service.factorize(_box(request), request.t)
    except ValueError as e:
        raise _bad_request(e)
    return FactorizeResponse(
        grid=convert_grid_to_schema(grid),
        round_trip_error=error,
        closed_form_deviation=deviation,
    )


@router.post(
    "/verify",
    response_model=CheckReportSchema,
    tags=["Verification"],
    summary="Run a harness check"
)
def verify(request: VerifyRequest):
    """Run an identity check and report its worst residual"""
    try:
        report = toolkit_service.run_check(request.check, _box(request), request.tol, request.t)
    except ValueError as e:
        raise _bad_request(e)
    return convert_report_to_schema(report)


@router.post(
    "/inequality",
    response_model=List[InequalityReportSchema],
    tags=["Verification"],
    summary="Schur value inequality scan"
)
def inequality(request: InequalityRequest):
    """Scan |S_lambda(zeta^I)| <= S_lambda(zeta^I_0) over every box up to n_max"""
    return [convert_inequality_to_schema(report) for report in toolkit_service.inequality(request.n_max)]
