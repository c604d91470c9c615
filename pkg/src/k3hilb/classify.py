"""Hilbert-scheme status of curves on a quartic K3 surface.

For a smooth curve ``C`` on ``S`` inside ``V = P^3`` or a quartic 3-fold
``V4`` put ``D = C + K_V|_S``.  The S-maximal family ``W`` of curves
through ``C`` has codimension ``h^1(S, D)`` in the tangent space
``H^0(C, N_{C/V})`` and dimension ``(-K_V|_S)^2/2 + g + 1`` whenever
``H^0(S, -D) = 0``.  The rules below decide its status:

``vanishing``
    ``h^1(S, D) = 0``: generically smooth component.
``minus-two-curve``
    ``D.E = -2`` for a (-2)-curve ``E != D``, ``D^2 >= 0`` and
    ``h^1(S, D - 3E) = 0``: then ``h^1(S, D) = 1`` and, when the pi-map of
    ``E`` is not surjective, ``W`` is a generically non-reduced component.
``elliptic-pencil``
    ``D = mF`` for an elliptic curve ``F`` and ``m >= 2``: ``h^1 = m - 1``,
    ``C`` is obstructed, and ``W`` is a generically non-reduced component
    for ``m = 2``.  For ``m > 2`` whether ``W`` is a component is open.

Hypotheses are checked, never assumed; a failed one yields
``out-of-theorem-scope`` with the numerics still filled in.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field

from .cohomology import cohomology, elliptic_multiple, general_member_smooth_connected
from .cone import (
    RayKind,
    SurfaceModel,
    extremal_rays,
    is_effective,
    is_nef,
    ray_products,
)
from .errors import UnsupportedAmbient
from .lattice import G, P3, AmbientThreefold, DivisorClass, degree, genus, intersect, square


class Status(str, enum.Enum):
    SMOOTH_POINT = "smooth-point"
    GENERICALLY_SMOOTH = "generically-smooth"
    GENERICALLY_NON_REDUCED = "generically-non-reduced"
    OBSTRUCTED_STATUS_OPEN = "obstructed-status-open"
    OUT_OF_SCOPE = "out-of-theorem-scope"


@dataclass(frozen=True)
class Assumptions:
    """Geometric hypotheses the lattice cannot see.

    ``normal_bundle_globally_generated``: the normal bundle of the
    (-2)-curve in ``V4`` is globally generated.
    ``pi_map_nonsurjective_elliptic``: some first-order deformation of ``S``
    in ``V4`` contains no first-order deformation of the elliptic curve.

    Both hold automatically in ``P^3``.
    """

    normal_bundle_globally_generated: bool = False
    pi_map_nonsurjective_elliptic: bool = False

    def to_dict(self) -> dict[str, bool]:
        return {
            "normal_bundle_globally_generated": self.normal_bundle_globally_generated,
            "pi_map_nonsurjective_elliptic": self.pi_map_nonsurjective_elliptic,
        }

    def resolved(self, ambient: AmbientThreefold) -> Assumptions:
        if ambient == P3:
            return Assumptions(True, True)
        return self

    def pi_map_nonsurjective(
        self, ambient: AmbientThreefold, kind: RayKind, curve: DivisorClass
    ) -> bool:
        """Whether the pi-map of ``curve`` is known not to be surjective."""
        if ambient == P3:
            return True
        if kind is RayKind.MINUS_TWO_CURVE:
            # the normal-bundle hypothesis is about the generator only
            return self.normal_bundle_globally_generated and curve == G
        return self.pi_map_nonsurjective_elliptic


@dataclass(frozen=True)
class CriterionClause:
    clause: str  # "vanishing", "minus-two-curve", "elliptic-pencil" or "none"
    h1: int
    ray_products: tuple[int, int] | None = None
    curve: DivisorClass | None = None
    h1_shifted: int | None = None  # h^1(D - 3E)
    multiplicity: int | None = None

    def to_dict(self) -> dict:
        return {
            "clause": self.clause,
            "h1": self.h1,
            "ray_products": list(self.ray_products) if self.ray_products else None,
            "curve": _class_json(self.curve),
            "h1_shifted": self.h1_shifted,
            "multiplicity": self.multiplicity,
        }


@dataclass
class ClassificationReport:
    ambient: str
    family: str
    e: int
    s: int
    curve_class: DivisorClass
    d: int
    g: int
    D_class: DivisorClass
    D_effective: bool
    D_nef: bool
    D_dot_rays: tuple[int, int] | None
    h1_SD: int
    status: Status
    reason: str | None = None
    rule: str | None = None
    dim_W: int | None = None
    h0_NCV: int | None = None
    preconditions: dict[str, bool] = field(default_factory=dict)
    assumptions: dict[str, bool] = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {
            "ambient": self.ambient,
            "family": self.family,
            "e": self.e,
            "s": self.s,
            "curve_class": _class_json(self.curve_class),
            "d": self.d,
            "g": self.g,
            "D_class": _class_json(self.D_class),
            "D_effective": self.D_effective,
            "D_nef": self.D_nef,
            "D_dot_rays": list(self.D_dot_rays) if self.D_dot_rays else None,
            "h1_SD": self.h1_SD,
            "status": self.status.value,
            "reason": self.reason,
            "rule": self.rule,
            "dim_W": self.dim_W,
            "h0_NCV": self.h0_NCV,
            "preconditions": dict(self.preconditions),
            "assumptions": dict(self.assumptions),
        }


def _class_json(d: DivisorClass | None) -> list[int] | None:
    return None if d is None else [d.x, d.y]


def curve_numerics(surface: SurfaceModel, c: DivisorClass) -> tuple[int, int]:
    return degree(surface.lattice, c), genus(surface.lattice, c)


def hilbert_flag_dimension(ambient: AmbientThreefold, g: int) -> int:
    """Dimension ``(-K_V|_S)^2/2 + g + 1`` of the flag scheme at ``(C, S)``."""
    if g < 0:
        raise ValueError(f"genus must be non-negative, got {g}")
    return ambient.anticanonical_square // 2 + g + 1


def criterion_clause(surface: SurfaceModel, d: DivisorClass) -> CriterionClause:
    """Which obstruction criterion applies to ``D = C + K_V|_S``.

    Clauses are tried in the order vanishing, (-2)-curve, elliptic pencil.
    ``d`` should be effective or zero.
    """
    lattice = surface.lattice
    h1 = cohomology(surface, d).h1
    products = ray_products(surface, d)
    if h1 == 0:
        return CriterionClause("vanishing", h1, products)
    if square(lattice, d) >= 0:
        for curve in extremal_rays(surface).curves(RayKind.MINUS_TWO_CURVE):
            if d == curve or intersect(lattice, d, curve) != -2:
                continue
            shifted = cohomology(surface, d - 3 * curve).h1
            if shifted == 0:
                return CriterionClause("minus-two-curve", h1, products, curve, shifted)
    pencil = elliptic_multiple(surface, d)
    if pencil is not None and pencil[1] >= 2:
        return CriterionClause("elliptic-pencil", h1, products, pencil[0], multiplicity=pencil[1])
    return CriterionClause("none", h1, products)


def classify_curve(
    ambient: AmbientThreefold,
    surface: SurfaceModel,
    c: DivisorClass,
    assumptions: Assumptions = Assumptions(),
) -> ClassificationReport:
    if ambient.name not in ("p3", "v4"):
        raise UnsupportedAmbient(f"unsupported ambient {ambient.name!r}")
    lattice = surface.lattice
    d, g = curve_numerics(surface, c)
    big_d = c + ambient.canonical_restriction
    d_effective = is_effective(surface, big_d)
    h1 = cohomology(surface, big_d).h1

    preconditions = {
        "smooth_connected": is_effective(surface, c)
        and general_member_smooth_connected(surface, c),
        "not_complete_intersection": c.y != 0,
        "degree_bound": d > ambient.degree_bound,
        "D_effective": d_effective,
    }
    report = ClassificationReport(
        ambient=ambient.name,
        family=surface.kind.value,
        e=lattice.e,
        s=lattice.s,
        curve_class=c,
        d=d,
        g=g,
        D_class=big_d,
        D_effective=d_effective,
        D_nef=is_nef(surface, big_d),
        D_dot_rays=ray_products(surface, big_d),
        h1_SD=h1,
        status=Status.OUT_OF_SCOPE,
        preconditions=preconditions,
        assumptions=assumptions.resolved(ambient).to_dict(),
    )

    if not all(preconditions.values()):
        failed = [name for name, ok in preconditions.items() if not ok]
        geometric = preconditions["smooth_connected"] and preconditions["not_complete_intersection"]
        if geometric and h1 == 0:
            # vanishing of h^1(D) alone makes the Hilbert scheme smooth at [C]
            report.status = Status.SMOOTH_POINT
            report.rule = "vanishing"
            report.reason = "failed: " + ", ".join(failed)
        else:
            report.reason = "failed: " + ", ".join(failed)
            return report
    else:
        _apply_rules(report, ambient, surface, big_d, assumptions)

    if d_effective and report.status is not Status.OUT_OF_SCOPE:
        report.dim_W = hilbert_flag_dimension(ambient, g)
        report.h0_NCV = report.dim_W + h1
    return report


def _apply_rules(
    report: ClassificationReport,
    ambient: AmbientThreefold,
    surface: SurfaceModel,
    big_d: DivisorClass,
    assumptions: Assumptions,
) -> None:
    clause = criterion_clause(surface, big_d)
    report.rule = None if clause.clause == "none" else clause.clause
    if clause.clause == "vanishing":
        report.status = Status.GENERICALLY_SMOOTH
    elif clause.clause == "minus-two-curve":
        if clause.h1 != 1:
            raise AssertionError(f"(-2)-curve criterion met but h1(D)={clause.h1} for D={big_d}")
        if assumptions.pi_map_nonsurjective(ambient, RayKind.MINUS_TWO_CURVE, clause.curve):
            report.status = Status.GENERICALLY_NON_REDUCED
        else:
            report.reason = "pi-map of the (-2)-curve not known to be non-surjective"
    elif clause.clause == "elliptic-pencil":
        m = clause.multiplicity
        if clause.h1 != m - 1:
            raise AssertionError(f"pencil {m}F has h1={clause.h1}, expected {m - 1}")
        if not assumptions.pi_map_nonsurjective(ambient, RayKind.ELLIPTIC_FIBER, clause.curve):
            report.reason = "pi-map of the elliptic curve not known to be non-surjective"
        elif m == 2:
            report.status = Status.GENERICALLY_NON_REDUCED
        else:
            report.status = Status.OBSTRUCTED_STATUS_OPEN
            report.reason = "obstructed; component status open for pencil multiplicity > 2"
    else:
        report.reason = "uncovered positivity pattern"
