"""Report models for every CLI command.

Field names are part of the JSON output and stay stable; the text format is rendered from
the JSON dump of these models.
"""
from typing import Dict, List, Literal, Optional

from pydantic import BaseModel, Field


class ValidationReport(BaseModel):
    command: Literal["validate"] = "validate"
    source: str
    valid: bool
    name: Optional[str] = None
    carrier_size: Optional[int] = None
    signature: Optional[str] = None
    universal_algebra: Optional[bool] = None
    diagnostics: List[str] = Field(default_factory=list)


class OracleCheckReport(BaseModel):
    """One cross-check of the closure engine against an independent computation."""
    name: str
    status: Literal["agree", "diverge", "skipped"]
    expected: Optional[str] = None
    actual: Optional[str] = None
    detail: Optional[str] = None


class PartitionReport(BaseModel):
    command: Literal["fundamental"] = "fundamental"
    source: str
    name: str
    carrier_size: int
    identities: List[str] = Field(default_factory=list)
    relation: str
    blocks: List[List[str]]
    block_count: int
    factor_is_universal: bool
    oracle: List[OracleCheckReport] = Field(default_factory=list)

    @property
    def diverged(self) -> bool:
        return any(check.status == "diverge" for check in self.oracle)


class AxiomReportModel(BaseModel):
    command: Literal["axioms"] = "axioms"
    source: str
    name: str
    weak_associative_plus: bool
    associative_plus: bool
    reproducible_plus: bool
    weak_associative_times: bool
    associative_times: bool
    weak_distributive: bool
    distributive: bool
    hv_group_plus: bool
    hypergroup_plus: bool
    hv_ring: bool
    hyperring: bool
    plus_weak_commutative: bool
    times_weak_commutative: bool


class HyperringAlphaReport(BaseModel):
    command: Literal["hyperring-alpha"] = "hyperring-alpha"
    source: str
    name: str
    strategy: Literal["def1", "adjacent"]
    s_max: int
    converged: bool
    converged_at: Optional[int] = None
    relation: str
    target: str
    pair_count: int
    factor_is_commutative_ring: bool


class ColimitReport(BaseModel):
    command: Literal["colimit"] = "colimit"
    source: str
    objects: int
    top: int
    colimit_size: int
    top_isomorphic: bool
    identities: List[str] = Field(default_factory=list)
    fundamental_of_colimit_size: int
    colimit_of_fundamentals_size: int
    comparison: List[int]
    inverse: List[int]
    is_isomorphism: bool
    colimit_structure: str


class StructureReport(BaseModel):
    """A structure in file format, as produced by ``factor`` and ``gen``."""
    command: Literal["factor", "gen"]
    name: str
    carrier_size: int
    parameters: Dict[str, str] = Field(default_factory=dict)
    structure: str
