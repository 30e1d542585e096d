"""Render reports as JSON or text and write them out."""
import json
import logging
from pathlib import Path
from typing import Any, List, Optional, Union

from pydantic import BaseModel

logger = logging.getLogger(__name__)


def _render_value(key: str, value: Any, indent: str, lines: List[str]):
    if isinstance(value, dict):
        lines.append(f"{indent}{key}:")
        for inner_key, inner in value.items():
            _render_value(inner_key, inner, indent + "  ", lines)
    elif isinstance(value, list) and value and isinstance(value[0], dict):
        lines.append(f"{indent}{key}:")
        for item in value:
            first = True
            for inner_key, inner in item.items():
                prefix = indent + ("  - " if first else "    ")
                _render_value(inner_key, inner, prefix, lines)
                first = False
    elif isinstance(value, str) and "\n" in value:
        lines.append(f"{indent}{key}: |")
        lines.extend(f"{indent}  {line}" for line in value.rstrip("\n").split("\n"))
    else:
        lines.append(f"{indent}{key}: {json.dumps(value) if not isinstance(value, str) else value}")


def render_text(data: dict) -> str:
    """Text form of a JSON report; structures are printed in file format so they can be re-read."""
    if data.get("command") in ("factor", "gen"):
        return data["structure"]
    lines: List[str] = []
    for key, value in data.items():
        _render_value(key, value, "", lines)
    return "\n".join(lines) + "\n"


def render_report(report: BaseModel, fmt: str) -> str:
    if fmt == "json":
        return report.model_dump_json(indent=2) + "\n"
    if fmt == "text":
        return render_text(json.loads(report.model_dump_json()))
    raise ValueError(f"unknown output format {fmt!r}")


class ReportExporter:
    """Write reports to stdout or to files."""

    def __init__(self, output_dir: Optional[Union[str, Path]] = None):
        self.output_dir = Path(output_dir) if output_dir else None
        if self.output_dir is not None:
            self.output_dir.mkdir(parents=True, exist_ok=True)

    def write(self, report: BaseModel, fmt: str, path: Optional[Union[str, Path]] = None) -> str:
        """Render the report; write it to ``path`` (relative to output_dir) when given, else return it."""
        text = render_report(report, fmt)
        if path is not None:
            target = Path(path)
            if self.output_dir is not None and not target.is_absolute():
                target = self.output_dir / target
            target.parent.mkdir(parents=True, exist_ok=True)
            target.write_text(text, encoding="utf-8")
            logger.info(f"Report written to {target}")
        return text
