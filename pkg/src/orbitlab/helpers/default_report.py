"""
This is the 'golden path' orbit space report configuration.
"""

from ..hessenberg import real_dimension, support
from ..orbitspace import OrbitReport
from ..report_builder import ReportBuilder, ReportPanel, ReportRow, ReportSection
from ..weights import tangent_weights


def _cohomology_label(i: int) -> str:
    return "H~^0(Q)" if i == 0 else f"H^{i}(Q)"


class ProfileSummarySection(ReportSection):
    """Profile, dimensions and the torus acting."""

    def __init__(self, title: str, report: OrbitReport):
        super().__init__(title)
        h = report.h
        self._components = [
            ReportRow(title),
            ReportPanel(
                title="",
                indent=0,
                entries=[
                    ("h", str(h)),
                    ("n", h.n),
                    ("spectrum", str(report.spectrum)),
                    ("real dimension", real_dimension(h)),
                    ("half dimension N", report.N),
                    ("torus rank", h.n - 1),
                    ("complexity", h.d),
                    ("double step i0", report.i0),
                ],
            ),
        ]


class FixedPointSection(ReportSection):
    """Tangent weights and the local corner at the fixed points."""

    def __init__(self, title: str, report: OrbitReport):
        super().__init__(title)
        fixed = report.fixed_points
        weights = [
            f"a{i}{j} = {list(w.coords)}"
            for (i, j), w in zip(support(report.h), tangent_weights(report.h))
        ]
        entries = [
            ("fixed points", fixed.fixed_points),
            ("uniform", "yes" if fixed.uniform else "no"),
            ("weights in general position", "yes" if fixed.interior else "no"),
            ("image", fixed.describe()),
        ]
        if fixed.signature is not None:
            entries.append(("primitive relation", str(list(fixed.signature.relation))))
            entries.append(("m", fixed.signature.m))
        self._components = [
            ReportRow(title),
            ReportPanel(title="", indent=0, entries=entries),
            ReportPanel(title="weights", lines=weights),
        ]


class SpecialFacetsSection(ReportSection):
    """Special facets of the permutohedron, by colour."""

    def __init__(self, title: str, report: OrbitReport):
        super().__init__(title)
        counts = report.special_counts()
        by_color = [
            f"colour {k}: " + " ".join(str(F) for F in report.special_facets if F.color == k)
            for k in counts
        ]
        self._components = [
            ReportRow(title),
            ReportPanel(
                title="",
                indent=0,
                entries=[
                    ("special facets", len(report.special_facets)),
                    (
                        "count by colour",
                        ", ".join(f"{k}: {c}" for k, c in counts.items()) or "none",
                    ),
                ],
            ),
        ]
        if by_color:
            self._components.append(ReportPanel(title="facets", lines=by_color))


class BoundarySection(ReportSection):
    """Boundary components and the global model of the orbit space."""

    def __init__(self, title: str, report: OrbitReport):
        super().__init__(title)
        self._components = [
            ReportRow(title),
            ReportPanel(
                title="",
                indent=0,
                entries=[
                    ("boundary components", report.boundary_count),
                    ("nerve f-vector", str(report.nerve.complex.f_vector())),
                    ("Q", report.model),
                    ("boundary", report.boundary),
                ],
            ),
        ]
        for component in report.components:
            groups = ", ".join(
                f"H_{g.degree} = {g.describe()}" for g in component.homology.groups
            )
            self._components.append(
                ReportPanel(
                    title=f"component {component.index}",
                    entries=[
                        ("facets", len(component.facets)),
                        ("nerve f-vector", str(component.nerve.complex.f_vector())),
                        ("homology", groups),
                    ],
                )
            )


class CohomologySection(ReportSection):
    """Reduced cohomology of the orbit space via Alexander duality."""

    def __init__(self, title: str, report: OrbitReport):
        super().__init__(title)
        lines = [f"{_cohomology_label(g.i)} = {g.describe()}" for g in report.cohomology]
        checks = [("euler characteristic", report.euler_characteristic)]
        if report.low_degrees_vanish():
            checks.append(("low degrees", "H~^i=0 for i=0,1,2"))
        self._components = [
            ReportRow(title),
            ReportPanel(title="", indent=0, lines=lines),
            ReportPanel(title="", indent=0, entries=checks),
        ]


def default_report(report: OrbitReport) -> ReportBuilder:
    """Assemble the standard text report for one profile."""
    return ReportBuilder(
        title=f"Orbit space of M_h / T^{report.h.n - 1}, h = {report.h}",
        tags=list(report.tags),
        sections=[
            ProfileSummarySection("Profile", report),
            FixedPointSection("Fixed points", report),
            SpecialFacetsSection("Special facets", report),
            BoundarySection("Boundary", report),
            CohomologySection("Cohomology", report),
        ],
    )
