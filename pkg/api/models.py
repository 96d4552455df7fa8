"""
Pydantic Models for API Responses
Mirrors of the library's result records
"""

from pydantic import BaseModel
from typing import List, Optional, Literal


# Type aliases
ResultIdType = Literal[
    "trivial", "diaz_giuffrida", "genus_bound", "case_threshold", "equal_degree",
    "even_case_linkage", "odd_case_linkage", "acm_curve", "common_cubic", "low_degree",
]
AcmArgumentType = Literal["case_analysis", "genus", "regularity"]


class ProvenanceModel(BaseModel):
    """One cited bound"""
    result_id: ResultIdType
    hypothesis: str
    bound: int
    strict: bool
    conditional: bool


class BoundReportModel(BaseModel):
    """Bounds and provenance for a degree pair"""
    d1: int
    d2: int
    b_dg: int
    b: int
    b_g: int
    trivial: int
    g_extremal_of_sum: int
    best_proved: int
    attainable: bool
    provenance: List[ProvenanceModel]
    flags: List[str] = []


class GenusResponse(BaseModel):
    hvector: List[int]
    rao_defect: int
    genus: int


class ExtremalResponse(BaseModel):
    d: int
    hvector: List[int]
    g_extremal: int


class AdmissibleEntry(BaseModel):
    hvector: str
    genus: int
    regularity: int


class AdmissibleResponse(BaseModel):
    """One page of the admissible h-vectors of degree d"""
    d: int
    count: int
    offset: int
    limit: int
    has_more: bool
    hvectors: List[AdmissibleEntry]


class ScrollResponse(BaseModel):
    """Corner maximum on the cubic scroll"""
    maximum: int
    maximizers: List[List[int]]
    classes: List[List[str]]


class DelPezzoClassModel(BaseModel):
    c0: int
    c: List[int]
    # rendered as e.g. "5h-e1-2e2-2e3-2e4-3e5"
    rendered: str


class DelPezzoResponse(BaseModel):
    L1: DelPezzoClassModel
    L2: DelPezzoClassModel
    degrees: List[int]
    intersection: int
    genera: List[int]


class Table1CellModel(BaseModel):
    d1: int
    d2: int
    b_printed: int
    b_computed: int
    b_dg_printed: int
    b_dg_computed: int
    b_match: bool
    b_dg_match: bool


class Table1Response(BaseModel):
    matches: int
    total: int
    headline: str
    discrepancies: List[Table1CellModel]


class CaseSummaryResponse(BaseModel):
    range_max: int
    pairs_checked: int
    implications_tested: int
    failures: int
    converse_counterexamples: int


class AcmCertificateModel(BaseModel):
    """Regularity certificate, second curve ACM"""
    d1: int
    d2: int
    a_value: int
    reg_upper: int
    reg_explicit: int
    claim_holds: bool
    explicit_holds: bool
    argument: AcmArgumentType
    hvector: str
    special_case: Optional[str] = None
    conclusion: str
    tension: Optional[str] = None
    flagged: bool
