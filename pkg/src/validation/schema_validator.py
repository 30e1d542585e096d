"""Schema validation of raw structure documents."""
import logging
from typing import Any, Dict, List, Optional, Tuple

from pydantic import BaseModel, Field, ValidationError

logger = logging.getLogger(__name__)

NAME_PATTERN = r"^[^\s{},#]+$"
SYMBOL_PATTERN = r"^[A-Za-z_][A-Za-z0-9_]*$"


class EntrySchema(BaseModel):
    """One 'args -> {outputs}' table line."""
    args: List[str]
    outputs: List[str]
    line: int = Field(..., ge=1)


class OperationSchema(BaseModel):
    """An 'op symbol/arity:' block."""
    symbol: str = Field(..., pattern=SYMBOL_PATTERN)
    arity: int = Field(..., ge=0)
    line: int = Field(..., ge=1)
    entries: List[EntrySchema] = Field(default_factory=list)


class StructureSchema(BaseModel):
    """Structure file as read from disk."""
    name: str = ""
    elements: List[str] = Field(..., min_length=1)
    elements_line: Optional[int] = None
    operations: List[OperationSchema] = Field(default_factory=list)


class ObjectSchema(BaseModel):
    index: int = Field(..., ge=0)
    path: str = Field(..., min_length=1)
    line: int = Field(..., ge=1)


class ArrowSchema(BaseModel):
    source: int = Field(..., ge=0)
    target: int = Field(..., ge=0)
    pairs: List[Tuple[str, str]] = Field(..., min_length=1)
    line: int = Field(..., ge=1)


class DiagramSchema(BaseModel):
    """Diagram file: object paths and arrow maps by element name."""
    objects: List[ObjectSchema] = Field(..., min_length=1)
    arrows: List[ArrowSchema] = Field(default_factory=list)


class SchemaValidator:
    """Validate document shapes with pydantic."""

    @staticmethod
    def _errors(e: ValidationError) -> str:
        return "; ".join([f"{'.'.join(str(part) for part in err['loc'])}: {err['msg']}" for err in e.errors()])

    @staticmethod
    def validate_structure(data: Dict[str, Any]) -> Tuple[bool, Optional[str]]:
        try:
            StructureSchema(**data)
            return True, None
        except ValidationError as e:
            return False, f"Schema validation failed: {SchemaValidator._errors(e)}"

    @staticmethod
    def validate_diagram(data: Dict[str, Any]) -> Tuple[bool, Optional[str]]:
        try:
            DiagramSchema(**data)
            return True, None
        except ValidationError as e:
            return False, f"Schema validation failed: {SchemaValidator._errors(e)}"
