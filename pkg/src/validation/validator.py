"""Main validation orchestrator."""
import logging
from typing import Any, Dict, Optional, Tuple

from src.core.multialgebra import DEFAULT_MAX_ARITY
from src.validation.content_validator import ContentValidator
from src.validation.format_validator import FormatValidator
from src.validation.schema_validator import SchemaValidator

logger = logging.getLogger(__name__)


class ValidationPipeline:
    """Multi-stage validation pipeline for structure documents."""

    def __init__(self, max_arity: int = DEFAULT_MAX_ARITY):
        self.max_arity = max_arity
        self.schema_validator = SchemaValidator()
        self.format_validator = FormatValidator()
        self.content_validator = ContentValidator()

    def validate_structure(self, document: Dict[str, Any]) -> Tuple[bool, Optional[str]]:
        """Validate a structure document through all stages."""
        # Stage 1: Schema validation
        valid, error = self.schema_validator.validate_structure(document)
        if not valid:
            return False, f"Stage 1 (Schema): {error}"

        # Stage 2: Format validation
        valid, error = self.format_validator.validate_names(document)
        if not valid:
            return False, f"Stage 2 (Format): {error}"

        valid, error = self.format_validator.validate_arities(document, self.max_arity)
        if not valid:
            return False, f"Stage 2 (Format): {error}"

        valid, error = self.format_validator.validate_references(document)
        if not valid:
            return False, f"Stage 2 (Format): {error}"

        # Stage 3: Content validation
        valid, error = self.content_validator.validate_nonempty_outputs(document)
        if not valid:
            return False, f"Stage 3 (Content): {error}"

        valid, error = self.content_validator.validate_totality(document)
        if not valid:
            return False, f"Stage 3 (Content): {error}"

        logger.debug(f"Structure {document.get('name') or '<unnamed>'} passed validation")
        return True, None

    def validate_diagram(self, document: Dict[str, Any]) -> Tuple[bool, Optional[str]]:
        """Shape check of a diagram document; arrow semantics are checked when the diagram is built."""
        valid, error = self.schema_validator.validate_diagram(document)
        if not valid:
            return False, f"Stage 1 (Schema): {error}"
        return True, None
