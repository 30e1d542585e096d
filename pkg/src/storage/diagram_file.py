"""Diagram files and identity files.

Diagram example (paths are relative to the diagram file)::

    object 0 = z4.ma
    object 1 = z2.ma
    arrow 0<=1: 0->0, 1->1, 2->0, 3->1
"""
import logging
import re
from pathlib import Path
from typing import Any, Dict, List, Optional, Union

from src.category.colimits import DirectedDiagram
from src.core.multialgebra import DEFAULT_MAX_ARITY, Multialgebra
from src.errors import StructureFileError, TermSyntaxError
from src.storage.structure_file import load_structure
from src.terms.parser import parse_identity_set
from src.terms.syntax import IdentitySet
from src.validation.validator import ValidationPipeline

logger = logging.getLogger(__name__)

_OBJECT = re.compile(r"^object\s+(\d+)\s*=\s*(.+)$")
_ARROW = re.compile(r"^arrow\s+(\d+)\s*<=\s*(\d+)\s*:\s*(.*)$")
_PAIR = re.compile(r"^(\S+)\s*->\s*(\S+)$")


def read_diagram_document(text: str, source: Optional[str] = None) -> Dict[str, Any]:
    document: Dict[str, Any] = {"objects": [], "arrows": []}
    for line_number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        match = _OBJECT.match(line)
        if match:
            document["objects"].append({"index": int(match.group(1)), "path": match.group(2).strip(), "line": line_number})
            continue
        match = _ARROW.match(line)
        if match:
            pairs = []
            for item in match.group(3).split(","):
                pair = _PAIR.match(item.strip())
                if pair is None:
                    raise StructureFileError(f"arrow entries must look like 'a->b', got {item.strip()!r}", line_number, source)
                pairs.append((pair.group(1), pair.group(2)))
            document["arrows"].append(
                {"source": int(match.group(1)), "target": int(match.group(2)), "pairs": pairs, "line": line_number}
            )
            continue
        raise StructureFileError(f"cannot read line {line!r}", line_number, source)
    return document


def _arrow_mapping(arrow: Dict[str, Any], source: Multialgebra, target: Multialgebra, origin: Optional[str]) -> List[int]:
    source_index = {name: x for x, name in enumerate(source.element_names)}
    target_index = {name: y for y, name in enumerate(target.element_names)}
    mapping: List[Optional[int]] = [None] * source.carrier_size
    for left, right in arrow["pairs"]:
        if left not in source_index or right not in target_index:
            raise StructureFileError(f"unknown element in pair {left}->{right}", arrow["line"], origin)
        if mapping[source_index[left]] is not None:
            raise StructureFileError(f"element {left} mapped twice", arrow["line"], origin)
        mapping[source_index[left]] = target_index[right]
    missing = [source.element_names[x] for x, image in enumerate(mapping) if image is None]
    if missing:
        raise StructureFileError(f"arrow map is not total, missing {' '.join(missing)}", arrow["line"], origin)
    return mapping


def load_diagram(path: Union[str, Path], max_arity: int = DEFAULT_MAX_ARITY) -> DirectedDiagram:
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as e:
        raise StructureFileError(f"cannot read file: {e.strerror}", None, str(path)) from e
    document = read_diagram_document(text, str(path))
    valid, error = ValidationPipeline(max_arity).validate_diagram(document)
    if not valid:
        raise StructureFileError(error, None, str(path))

    indices = sorted(entry["index"] for entry in document["objects"])
    if indices != list(range(len(indices))):
        raise StructureFileError(f"objects must be numbered 0..{len(indices) - 1}, got {indices}", None, str(path))
    objects = sorted(document["objects"], key=lambda entry: entry["index"])
    algebras = [load_structure(path.parent / entry["path"], max_arity) for entry in objects]

    arrows = {}
    for arrow in document["arrows"]:
        i, j = arrow["source"], arrow["target"]
        if i >= len(algebras) or j >= len(algebras):
            raise StructureFileError(f"arrow {i}<={j} refers to an unknown object", arrow["line"], str(path))
        if (i, j) in arrows:
            raise StructureFileError(f"arrow {i}<={j} declared twice", arrow["line"], str(path))
        arrows[(i, j)] = _arrow_mapping(arrow, algebras[i], algebras[j], str(path))
    diagram = DirectedDiagram.build(algebras, arrows)
    logger.debug(f"Loaded diagram with {diagram.size} objects from {path}")
    return diagram


def dump_diagram(diagram: DirectedDiagram, paths: List[str]) -> str:
    """Diagram file text for objects stored at ``paths`` (identity arrows omitted)."""
    lines = [f"object {i} = {p}" for i, p in enumerate(paths)]
    for (i, j) in diagram.order_pairs():
        if i == j:
            continue
        arrow = diagram.arrow(i, j)
        pairs = ", ".join(
            f"{arrow.source.element_name(x)}->{arrow.target.element_name(y)}" for x, y in enumerate(arrow.mapping)
        )
        lines.append(f"arrow {i}<={j}: {pairs}")
    return "\n".join(lines) + "\n"


def load_identities(path: Union[str, Path]) -> IdentitySet:
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as e:
        raise StructureFileError(f"cannot read file: {e.strerror}", None, str(path)) from e
    try:
        return parse_identity_set(text)
    except TermSyntaxError as e:
        raise StructureFileError(str(e), None, str(path)) from e
