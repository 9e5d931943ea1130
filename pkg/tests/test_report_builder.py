import pytest

from orbitlab.hessenberg import validate
from orbitlab.helpers.default_report import (
    BoundarySection,
    CohomologySection,
    default_report,
)
from orbitlab.orbitspace import orbit_space_report
from orbitlab.report_builder import ReportBuilder, ReportPanel, ReportRow, ReportSection


def test_builder_layout():
    section = ReportSection("Numbers")
    section.add_component(ReportRow("Numbers")).add_component(
        ReportPanel(title="small", entries=[("one", 1), ("two", "2")])
    )
    text = ReportBuilder(title="T", tags=["a", "b"], sections=[section]).build()
    assert text == "T\n=\ntags: a; b\n\n== Numbers ==\nsmall:\n  one: 1\n  two: 2\n"


def test_builder_requires_sections():
    with pytest.raises(ValueError):
        ReportBuilder(title="empty", tags=[], sections=[]).build()


def test_empty_panel_rejected():
    section = ReportSection("s").add_component(ReportPanel(title="nothing"))
    with pytest.raises(ValueError, match="nothing"):
        ReportBuilder(title="t", tags=[], sections=[section]).build()


def test_build_and_write(tmp_path):
    section = ReportSection("s").add_component(ReportPanel(title="", lines=["x"], indent=0))
    path = tmp_path / "sub" / "r.txt"
    text = ReportBuilder(title="t", tags=[], sections=[section]).build_and_write(path)
    assert path.read_text(encoding="utf-8") == text == "t\n=\nx\n"


def test_default_report_sections():
    report = orbit_space_report(validate([3, 3, 4, 4]))
    text = default_report(report).build()
    for heading in ["Profile", "Fixed points", "Special facets", "Boundary", "Cohomology"]:
        assert f"== {heading} ==" in text
    assert "boundary components: 4" in text
    assert "image: boundary, corner R^4 x R>=^1" in text
    assert "H~^0(Q) = 0" in text
    assert "tags: S^5 ∖ ⊔₄ D^5; ⊔₄ S^4" in text


def test_full_flag_report_text():
    text = default_report(orbit_space_report(validate([3, 3, 3]))).build()
    assert "count by colour: none" in text
    assert "H^4(Q) = Z" in text
    assert "boundary components: 0" in text


def test_custom_panel_on_default_section():
    report = orbit_space_report(validate([2, 4, 4, 5, 5]))
    section = BoundarySection(title="Boundary", report=report)
    section.add_component(ReportPanel(title="notes", lines=["bipartite"]))
    text = ReportBuilder(
        title="b", tags=[], sections=[section, CohomologySection("Cohomology", report)]
    ).build()
    assert "notes:\n  bipartite" in text
    assert "H^4(Q) = Z^11" in text
