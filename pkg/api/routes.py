"""
API Route Handlers
Read-only endpoints over the curvebounds library
"""

from datetime import datetime
from typing import Optional

from fastapi import HTTPException, APIRouter, Query

from api.models import (
    BoundReportModel,
    GenusResponse, ExtremalResponse, AdmissibleResponse, AdmissibleEntry,
    ScrollResponse, DelPezzoResponse, DelPezzoClassModel,
    Table1Response, Table1CellModel, CaseSummaryResponse,
    AcmCertificateModel,
)
from src import __version__
from src.core import audit, bounds, hvectors, surfaces
from src.utils.config import Config
from src.utils.logger import setup_logger
from src.utils.exceptions import ValidationError, CurveBoundsError

logger = setup_logger(__name__)

# Upper limit for /verify/cases so a request stays fast
MAX_CASE_RANGE = 400

# Create router
router = APIRouter()


def _bad_request(e: Exception) -> HTTPException:
    logger.info(f"Rejected request: {e}")
    return HTTPException(status_code=400, detail=str(e))


@router.get("/")
async def root():
    """API root endpoint"""
    return {
        "name": "curvebounds",
        "version": __version__,
        "status": "online",
    }


@router.get("/health")
async def health_check():
    """Health check endpoint"""
    return {
        "status": "healthy",
        "timestamp": datetime.now().isoformat()
    }


@router.get("/bounds/{d1}/{d2}", response_model=BoundReportModel)
async def get_bounds(d1: int, d2: int):
    """All bounds and their provenance for a degree pair"""
    try:
        report = audit.conjecture_status((d1, d2))
    except ValidationError as e:
        raise _bad_request(e)
    return BoundReportModel(**report.to_dict())


@router.get("/hvectors/genus", response_model=GenusResponse)
async def get_genus(h: str = Query(..., description="Comma-separated entries, e.g. 1,3,5,4,3"),
                    k: int = Query(0, description="Rao defect")):
    """Genus of an h-vector, less the Rao defect"""
    try:
        profile = hvectors.genus_with_defect(hvectors.parse_hvector(h), k)
    except ValidationError as e:
        raise _bad_request(e)
    return GenusResponse(**profile.to_dict())


@router.get("/hvectors/extremal/{d}", response_model=ExtremalResponse)
async def get_extremal(d: int):
    """Extremal h-vector and its genus"""
    try:
        h = hvectors.extremal_hvector(d)
    except ValidationError as e:
        raise _bad_request(e)
    return ExtremalResponse(d=d, hvector=h.to_list(), g_extremal=bounds.g_extremal(d))


@router.get("/hvectors/admissible/{d}", response_model=AdmissibleResponse)
async def get_admissible(
    d: int,
    limit: int = Query(Config.DEFAULT_ENUM_PAGE, ge=1, le=Config.ENUM_PAGE_MAX),
    offset: int = Query(0, ge=0, le=Config.ENUM_OFFSET_MAX),
):
    """Admissible h-vectors of degree d, one page in lexicographic order"""
    try:
        frame, has_more = hvectors.enumeration_page(d, limit, offset)
    except ValidationError as e:
        raise _bad_request(e)
    entries = [AdmissibleEntry(**row) for row in frame.to_dict(orient="records")]
    return AdmissibleResponse(
        d=d, count=len(entries), offset=offset, limit=limit, has_more=has_more, hvectors=entries
    )


@router.get("/surfaces/scroll/{d1}/{d2}", response_model=ScrollResponse)
async def get_scroll(d1: int, d2: int):
    """Largest intersection on the smooth cubic scroll"""
    try:
        result = surfaces.scroll_maximize((d1, d2))
    except ValidationError as e:
        raise _bad_request(e)
    return ScrollResponse(**result.to_dict())


@router.get("/surfaces/delpezzo", response_model=DelPezzoResponse)
async def get_delpezzo(k: int, l: int):
    """Rational curves of degrees 2k+1, 2l+1 on the quartic del Pezzo surface"""
    try:
        first, second = surfaces.dp_construction(k, l)
        genera = [surfaces.dp_genus(first), surfaces.dp_genus(second)]
    except CurveBoundsError as e:
        raise _bad_request(e)

    def model(c: surfaces.DelPezzoClass) -> DelPezzoClassModel:
        return DelPezzoClassModel(c0=c.c0, c=list(c.c), rendered=str(c))

    return DelPezzoResponse(
        L1=model(first),
        L2=model(second),
        degrees=[first.degree, second.degree],
        intersection=surfaces.dp_intersect(first, second),
        genera=genera,
    )


@router.get("/verify/table1", response_model=Table1Response)
async def verify_table1():
    """Table 1 recomputed against the printed values"""
    summary = audit.verify_table1()
    return Table1Response(
        matches=summary.matches,
        total=len(summary.cells),
        headline=summary.headline(),
        discrepancies=[Table1CellModel(**cell.to_dict()) for cell in summary.discrepancies],
    )


@router.get("/verify/cases", response_model=CaseSummaryResponse)
async def verify_cases(range_max: int = Query(60, alias="max")):
    """Case identity and threshold implication up to `max`"""
    if range_max > MAX_CASE_RANGE:
        raise HTTPException(status_code=400, detail=f"max must be <= {MAX_CASE_RANGE}")
    try:
        summary = audit.verify_cases(range_max)
    except ValidationError as e:
        raise _bad_request(e)
    return CaseSummaryResponse(
        range_max=summary.range_max,
        pairs_checked=summary.pairs_checked,
        implications_tested=summary.implications_tested,
        failures=summary.failures,
        converse_counterexamples=summary.converse_counterexamples,
    )


@router.get("/acm/{d1}/{d2}", response_model=AcmCertificateModel)
async def get_acm_certificate(d1: int, d2: int, h: Optional[str] = None):
    """Regularity certificate with the second curve ACM"""
    try:
        hvector = hvectors.parse_hvector(h) if h else None
        cert = audit.acm_certificate((d1, d2), hvector)
    except ValidationError as e:
        raise _bad_request(e)
    return AcmCertificateModel(**cert.to_dict())
