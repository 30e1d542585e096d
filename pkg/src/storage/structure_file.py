"""Line-based structure files.

Example::

    # Krasner quotient of Z/5 by {1,4}
    name: K3
    elements: w0 w1 w2
    op plus/2:
      w0 w0 -> {w0}
      w1 w1 -> {w0,w2}
      ...
    op zero/0:
      -> {w0}
"""
import logging
import re
from pathlib import Path
from typing import Any, Dict, List, Optional, Union

from src.core.multialgebra import DEFAULT_MAX_ARITY, Multialgebra, Signature
from src.errors import StructureFileError
from src.validation.validator import ValidationPipeline

logger = logging.getLogger(__name__)

_OP_HEADER = re.compile(r"^op\s+(\S+)\s*/\s*(\d+)\s*:$")
_OUTPUT_SET = re.compile(r"^\{([^{}]*)\}$")


def read_structure_document(text: str, source: Optional[str] = None) -> Dict[str, Any]:
    """Tokenize a structure file into a raw document; semantic checks happen in the validation pipeline."""
    document: Dict[str, Any] = {"name": "", "elements": None, "operations": []}
    current: Optional[Dict[str, Any]] = None
    for line_number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("name:"):
            document["name"] = line[len("name:"):].strip()
            current = None
            continue
        if line.startswith("elements:"):
            if document["elements"] is not None:
                raise StructureFileError("elements declared twice", line_number, source)
            document["elements"] = line[len("elements:"):].split()
            document["elements_line"] = line_number
            current = None
            continue
        header = _OP_HEADER.match(line)
        if header:
            current = {"symbol": header.group(1), "arity": int(header.group(2)), "line": line_number, "entries": []}
            document["operations"].append(current)
            continue
        if "->" in line:
            if current is None:
                raise StructureFileError("table line outside of an 'op' block", line_number, source)
            left, right = line.split("->", 1)
            outputs = _OUTPUT_SET.match(right.strip())
            if outputs is None:
                raise StructureFileError(f"output must be written as {{a,b,...}}, got {right.strip()!r}", line_number, source)
            current["entries"].append({
                "args": left.split(),
                "outputs": [item.strip() for item in outputs.group(1).split(",") if item.strip()],
                "line": line_number,
            })
            continue
        raise StructureFileError(f"cannot read line {line!r}", line_number, source)

    if document["elements"] is None:
        raise StructureFileError("missing 'elements:' header", None, source)
    return document


def build_structure(document: Dict[str, Any]) -> Multialgebra:
    """Multialgebra from a validated document."""
    names = document["elements"]
    index = {name: position for position, name in enumerate(names)}
    signature = Signature.of(*((op["symbol"], op["arity"]) for op in document["operations"]))
    tables = {
        op["symbol"]: {
            tuple(index[name] for name in entry["args"]): [index[name] for name in entry["outputs"]]
            for entry in op["entries"]
        }
        for op in document["operations"]
    }
    return Multialgebra.from_tables(
        len(names), signature, tables, name=document.get("name", ""), element_names=names
    )


def parse_structure(
    text: str, source: Optional[str] = None, max_arity: int = DEFAULT_MAX_ARITY
) -> Multialgebra:
    document = read_structure_document(text, source)
    valid, error = ValidationPipeline(max_arity).validate_structure(document)
    if not valid:
        raise StructureFileError(error, None, source)
    return build_structure(document)


def load_structure(path: Union[str, Path], max_arity: int = DEFAULT_MAX_ARITY) -> Multialgebra:
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as e:
        raise StructureFileError(f"cannot read file: {e.strerror}", None, str(path)) from e
    algebra = parse_structure(text, str(path), max_arity)
    logger.debug(f"Loaded {algebra.name or path.name} with {algebra.carrier_size} elements from {path}")
    return algebra


def _format_set(algebra: Multialgebra, subset) -> str:
    return "{" + ",".join(algebra.element_name(x) for x in sorted(subset)) + "}"


def dump_structure(algebra: Multialgebra) -> str:
    """Serialize in the structure file format; tuples in table order."""
    lines: List[str] = []
    if algebra.name:
        lines.append(f"name: {algebra.name}")
    lines.append("elements: " + " ".join(algebra.element_names))
    for op in algebra.signature.operations:
        lines.append(f"op {op.symbol}/{op.arity}:")
        for args, output in algebra.entries(op.symbol):
            left = " ".join(algebra.element_name(a) for a in args)
            arrow = f"{left} -> " if left else "-> "
            lines.append(f"  {arrow}{_format_set(algebra, output)}")
    return "\n".join(lines) + "\n"


def save_structure(algebra: Multialgebra, path: Union[str, Path]):
    Path(path).write_text(dump_structure(algebra), encoding="utf-8")
