"""Content validation: totality and nonempty outputs."""
import itertools
import logging
from typing import Any, Dict, Tuple, Optional

logger = logging.getLogger(__name__)


class ContentValidator:
    """Validate that the tables describe total multioperations."""

    @staticmethod
    def validate_nonempty_outputs(data: Dict[str, Any]) -> Tuple[bool, Optional[str]]:
        for op in data["operations"]:
            for entry in op["entries"]:
                if not entry["outputs"]:
                    return False, f"line {entry['line']}: empty output set for {op['symbol']!r}"
        return True, None

    @staticmethod
    def validate_totality(data: Dict[str, Any]) -> Tuple[bool, Optional[str]]:
        """Every argument tuple is listed exactly once."""
        names = data["elements"]
        for op in data["operations"]:
            listed = {}
            for entry in op["entries"]:
                key = tuple(entry["args"])
                if key in listed:
                    return False, (
                        f"line {entry['line']}: tuple ({' '.join(key)}) of {op['symbol']!r} "
                        f"already listed on line {listed[key]}"
                    )
                listed[key] = entry["line"]
            for args in itertools.product(names, repeat=op["arity"]):
                if args not in listed:
                    return False, f"line {op['line']}: table of {op['symbol']!r} is missing tuple ({' '.join(args)})"
        return True, None
