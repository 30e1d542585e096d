"""Format validation: names, arities and tuple shapes."""
import logging
import re
from typing import Any, Dict, Tuple, Optional

from src.validation.schema_validator import NAME_PATTERN

logger = logging.getLogger(__name__)

_NAME = re.compile(NAME_PATTERN)


class FormatValidator:
    """Validate that every line of a structure document is well-formed on its own."""

    @staticmethod
    def validate_names(data: Dict[str, Any]) -> Tuple[bool, Optional[str]]:
        """Element names are distinct tokens; operation symbols are distinct."""
        line = data.get("elements_line")
        where = f"line {line}: " if line else ""
        seen = set()
        for name in data["elements"]:
            if not _NAME.match(name) or "->" in name:
                return False, f"{where}invalid element name {name!r}"
            if name in seen:
                return False, f"{where}duplicate element name {name!r}"
            seen.add(name)
        symbols = set()
        for op in data["operations"]:
            if op["symbol"] in symbols:
                return False, f"line {op['line']}: duplicate operation {op['symbol']!r}"
            symbols.add(op["symbol"])
        return True, None

    @staticmethod
    def validate_arities(data: Dict[str, Any], max_arity: int) -> Tuple[bool, Optional[str]]:
        for op in data["operations"]:
            if op["arity"] > max_arity:
                return False, f"line {op['line']}: arity {op['arity']} of {op['symbol']!r} exceeds limit {max_arity}"
            for entry in op["entries"]:
                if len(entry["args"]) != op["arity"]:
                    return False, (
                        f"line {entry['line']}: {op['symbol']!r} has arity {op['arity']}, "
                        f"got {len(entry['args'])} arguments"
                    )
        return True, None

    @staticmethod
    def validate_references(data: Dict[str, Any]) -> Tuple[bool, Optional[str]]:
        """Every element named in a table is declared."""
        known = set(data["elements"])
        for op in data["operations"]:
            for entry in op["entries"]:
                for name in entry["args"] + entry["outputs"]:
                    if name not in known:
                        return False, f"line {entry['line']}: unknown element {name!r}"
        return True, None
