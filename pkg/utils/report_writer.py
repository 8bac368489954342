"""Human-readable and line-oriented machine output for query results."""

from typing import Any, List, Tuple

import numpy as np

NUMBER_FORMAT = ".12g"


def format_value(value: Any) -> str:
    if isinstance(value, (bool, np.bool_)):
        return "true" if value else "false"
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    if isinstance(value, (float, np.floating)):
        return format(float(value), NUMBER_FORMAT)
    if isinstance(value, np.ndarray):
        value = value.tolist()
    if isinstance(value, (list, tuple)):
        return "[" + ", ".join(format_value(v) for v in value) + "]"
    return str(value)


class ReportWriter:
    """
    Collects (section, key, value) rows in insertion order.

    Machine form is one "section<TAB>key<TAB>value" line per row; human form groups rows
    under a header per section.
    """

    def __init__(self, machine: bool = False):
        self.machine = machine
        self.rows: List[Tuple[str, str, str]] = []
        self._section = "main"

    def section(self, name: str) -> "ReportWriter":
        self._section = name
        return self

    def add(self, key: str, value: Any) -> None:
        self.rows.append((self._section, key, format_value(value)))

    def extend(self, pairs) -> None:
        for key, value in pairs:
            self.add(key, value)

    def render(self) -> str:
        if self.machine:
            return "".join(f"{section}\t{key}\t{value}\n" for section, key, value in self.rows)
        lines = []
        current = None
        for section, key, value in self.rows:
            if section != current:
                if lines:
                    lines.append("")
                lines.append(f"== {section} ==")
                current = section
            lines.append(f"  {key}: {value}")
        return "\n".join(lines) + ("\n" if lines else "")
