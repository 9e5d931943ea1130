"""
A high-level builder for human-readable orbit space reports.
High-level abstractions include ReportSection, ReportRow, and ReportPanel to facilitate
the construction of multi-part text reports.
"""

from abc import ABC, abstractmethod
from pathlib import Path
from typing import List, Optional, Union


class ReportComponent(ABC):
    """Base interface for report components."""

    @abstractmethod
    def construct(self) -> List[str]:
        """Return the text lines representing this component."""


class ReportRow(ReportComponent):
    """A heading that opens a section."""

    def __init__(self, title: str):
        self._title = title

    def construct(self) -> List[str]:
        return ["", f"== {self._title} =="]


class ReportPanel(ReportComponent):
    """A titled block of ``label: value`` entries and free text lines."""

    def __init__(
        self,
        title: str,
        entries: Optional[List[tuple[str, Union[str, int]]]] = None,
        lines: Optional[List[str]] = None,
        indent: int = 2,
    ):
        self._title = title
        self._entries = entries or []
        self._lines = lines or []
        self._indent = indent

    def get_entries(self) -> List[tuple[str, Union[str, int]]]:
        """Return the entries associated with this panel."""
        return self._entries

    def has_content(self) -> bool:
        """True when the panel has entries or text lines."""
        return bool(self._entries or self._lines)

    def get_component_name(self) -> str:
        """Return the name of this panel."""
        return self._title

    def construct(self) -> List[str]:
        pad = " " * self._indent
        out = [f"{self._title}:"] if self._title else []
        out += [f"{pad}{label}: {value}" for label, value in self._entries]
        out += [f"{pad}{line}" for line in self._lines]
        return out


class ReportSection:
    """A logical section grouping multiple report components."""

    def __init__(self, name: str):
        self._name = name
        self._components: List[ReportComponent] = []

    def add_component(self, component: ReportComponent) -> "ReportSection":
        """Add a component to this section."""
        self._components.append(component)
        return self

    def get_components(self) -> List[ReportComponent]:
        """Return the list of components in this section."""
        return self._components

    def construct(self) -> List[str]:
        """Return the concatenated lines of all components."""
        return [line for c in self._components for line in c.construct()]


class ReportBuilder:
    """High-level builder to compose text reports from sections."""

    def __init__(
        self,
        title: str,
        tags: List[str],
        sections: List[ReportSection],
    ):
        self._title = title
        self._tags = tags
        self._sections = sections

    def add_section(self, section: ReportSection) -> "ReportBuilder":
        """Add a section to the report."""
        self._sections.append(section)
        return self

    def build(self) -> str:
        """Compile all sections into the report text."""
        self._validate()
        lines = [self._title, "=" * len(self._title)]
        if self._tags:
            lines.append("tags: " + "; ".join(self._tags))
        for section in self._sections:
            lines += section.construct()
        return "\n".join(lines) + "\n"

    def build_and_write(self, path: Path) -> str:
        """Compile the report and write it to ``path``."""
        text = self.build()
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(text, encoding="utf-8")
        return text

    def _validate(self) -> None:
        """Validate the report configuration before building"""
        if not self._sections:
            raise ValueError(f"Report '{self._title}' has no sections defined.")
        for section in self._sections:
            for component in section.get_components():
                if isinstance(component, ReportPanel) and not component.has_content():
                    raise ValueError(
                        f"Panel '{component.get_component_name()}' has no entries defined."
                    )
