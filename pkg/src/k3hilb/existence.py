"""Existence of curves on quartic surfaces and bulk scans over classes."""

from __future__ import annotations

from dataclasses import dataclass
from math import isqrt

from .classify import Assumptions, ClassificationReport, Status, classify_curve
from .cone import SurfaceModel
from .lattice import AmbientThreefold, DivisorClass, degree, genus


@dataclass(frozen=True)
class DegreeGenusPair:
    d: int
    g: int


def mori_exists(d: int, g: int) -> bool:
    """Whether a smooth quartic surface carries a smooth curve of degree
    ``d`` and genus ``g`` (Mori's criterion)."""
    if d <= 0 or g < 0:
        raise ValueError(f"need d > 0 and g >= 0, got ({d}, {g})")
    return 8 * (g - 1) == d * d or (8 * g < d * d and (d, g) != (5, 3))


def enumerate_classes(
    surface: SurfaceModel, d: int, g: int | None = None
) -> list[DivisorClass]:
    """All classes ``a h + b G`` with ``b != 0``, degree ``d`` and genus ``g``.

    With degree fixed, ``a = (d - e b)/4`` and the square is
    ``D^2 = (d^2 - (e^2 - 4s) b^2)/4``, so the genus determines ``|b|``.
    When ``g`` is omitted every genus ``>= 0`` is taken, i.e.
    ``D^2 >= -2``, which bounds ``b^2 <= (d^2 + 8)/(e^2 - 4s)``.
    """
    if d <= 0:
        raise ValueError(f"degree must be positive, got {d}")
    lattice = surface.lattice
    e = lattice.e
    disc = e * e - 4 * lattice.s
    bound = isqrt((d * d + 8) // disc)
    found = []
    for b in range(-bound, bound + 1):
        if b == 0 or (d - e * b) % 4:
            continue
        c = DivisorClass((d - e * b) // 4, b)
        assert degree(lattice, c) == d
        cg = genus(lattice, c)
        if cg >= 0 and (g is None or cg == g):
            found.append(c)
    return sorted(found, key=tuple)


def scan_nonreduced(
    ambient: AmbientThreefold,
    surface: SurfaceModel,
    d_max: int,
    assumptions: Assumptions = Assumptions(),
) -> list[ClassificationReport]:
    """Classify every candidate class of degree ``<= d_max`` and keep those
    spanning a generically non-reduced component."""
    if d_max < 1:
        raise ValueError(f"d_max must be >= 1, got {d_max}")
    reports = []
    for d in range(1, d_max + 1):
        for c in enumerate_classes(surface, d):
            report = classify_curve(ambient, surface, c, assumptions)
            if report.status is not Status.GENERICALLY_NON_REDUCED:
                continue
            if not mori_exists(report.d, report.g):
                raise AssertionError(f"no smooth ({report.d}, {report.g}) curve on a quartic")
            reports.append(report)
    return sorted(reports, key=lambda r: (r.d, tuple(r.curve_class)))
