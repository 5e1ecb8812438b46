from pydantic import BaseModel, ConfigDict, Field
from typing import Any, Dict, List, Optional

# Schemas para autómatas
class StateSchema(BaseModel):
    id: str
    out: int

class EdgeSchema(BaseModel):
    model_config = ConfigDict(populate_by_name=True)

    from_: str = Field(alias="from")
    digit: int
    to: str

class AutomatonSchema(BaseModel):
    base: int = Field(ge=2)
    states: List[StateSchema]
    init: str
    edges: List[EdgeSchema]

# Schemas para núcleos
class KernelClassSchema(BaseModel):
    model_config = ConfigDict(populate_by_name=True)

    i: int = Field(ge=0)
    j: int = Field(ge=0)
    class_: int = Field(alias="class")
    rep: Optional[str] = None

class KernelReportSchema(BaseModel):
    base: int
    classes: int
    heuristic: bool
    elements: List[KernelClassSchema]

# Schemas para representaciones lineales (fracciones como "p/q")
class LinRepSchema(BaseModel):
    model_config = ConfigDict(populate_by_name=True)

    k: int = Field(ge=2)
    dim: int = Field(ge=1)
    lambda_: List[str] = Field(alias="lambda")
    mats: List[List[List[str]]]
    gamma: List[str]

class LinRepFailureSchema(BaseModel):
    k: int
    max_dim: int
    rank_profile: List[int]
    heuristic: bool = True
    reason: str

# Schemas para el verificador
class CheckResultSchema(BaseModel):
    id: str
    description: str
    reference: str
    status: str
    expected: str
    outcome: str
    bounds: Dict[str, Any]
    counterexample: Optional[Dict[str, Any]] = None
    millis: int

class SummarySchema(BaseModel):
    total: int
    passed: int
    failed: int
    flagged: int
    millis: int
    ok: bool

class ReportSchema(BaseModel):
    profile: str
    checks: List[CheckResultSchema]
    summary: SummarySchema
