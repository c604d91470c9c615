"""Mori cones of quartic surfaces of Picard number two.

The cone of curves of a K3 surface with a rank-2 Picard lattice has two
extremal rays, each spanned by a (-2)-curve, an elliptic curve, or (when
neither exists) an irrational isotropic direction.  Nefness is tested
against the rays; effectivity by peeling off (-2)-curves that meet the
class negatively, which must lie in its base locus.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import lru_cache

from .errors import UnsupportedFamily
from .lattice import (
    ZERO,
    DivisorClass,
    GeneratorKind,
    PicardLattice,
    degree,
    intersect,
    make_lattice,
    square,
)
from .pell import fundamental_solution


class RayKind(str, enum.Enum):
    MINUS_TWO_CURVE = "minus-two-curve"
    ELLIPTIC_FIBER = "elliptic-fiber"
    IRRATIONAL_NULL = "irrational-null-boundary"


@dataclass(frozen=True)
class ExtremalRay:
    kind: RayKind
    divisor: DivisorClass | None = None  # None for irrational boundaries


@dataclass(frozen=True)
class MoriCone:
    ray1: ExtremalRay
    ray2: ExtremalRay

    @property
    def rays(self) -> tuple[ExtremalRay, ExtremalRay]:
        return (self.ray1, self.ray2)

    def curves(self, kind: RayKind) -> list[DivisorClass]:
        return [r.divisor for r in self.rays if r.kind is kind]


@dataclass(frozen=True)
class SurfaceModel:
    """A quartic K3 surface, known only through its Picard lattice.

    ``plane_cubic`` marks the elliptic lattice with ``e = 3``: there the
    elliptic curve is a plane cubic whose residual line ``h - F`` is a
    (-2)-curve, so the cone is that of the line family in another basis.
    """

    lattice: PicardLattice
    plane_cubic: bool = False

    @property
    def kind(self) -> GeneratorKind:
        return self.lattice.kind


def surface_model(family: GeneratorKind | str, e: int, s: int | None = None) -> SurfaceModel:
    """Validated surface for a family name and generator degree.

    ``s`` is only needed for the family without special curves; the other
    families fix it.
    """
    kind = GeneratorKind(family)
    if kind is GeneratorKind.ELLIPTIC and e == 3:
        return SurfaceModel(PicardLattice(3, 0, kind), plane_cubic=True)
    if s is None:
        if kind is GeneratorKind.NONE:
            raise UnsupportedFamily("the 'none' family needs an explicit G^2")
        s = 0 if kind is GeneratorKind.ELLIPTIC else -2
    return SurfaceModel(make_lattice(e, s, kind))


@lru_cache(maxsize=512)
def extremal_rays(surface: SurfaceModel) -> MoriCone:
    lattice, kind = surface.lattice, surface.kind
    e = lattice.e
    minus_two = RayKind.MINUS_TWO_CURVE
    elliptic = RayKind.ELLIPTIC_FIBER
    if kind is GeneratorKind.RATIONAL:
        if e % 2 == 0:
            other = DivisorClass(e // 2, -1)
        else:
            # E' = x h - y E with x = 2Y, y = X - eY from X^2 - (e^2+8) Y^2 = 1
            sol = fundamental_solution(e * e + 8)
            other = DivisorClass(2 * sol.Y, -(sol.X - e * sol.Y))
        return MoriCone(ExtremalRay(minus_two, DivisorClass(0, 1)), ExtremalRay(minus_two, other))
    if kind is GeneratorKind.ELLIPTIC and surface.plane_cubic:
        return MoriCone(
            ExtremalRay(minus_two, DivisorClass(1, -1)), ExtremalRay(elliptic, DivisorClass(0, 1))
        )
    if kind is GeneratorKind.ELLIPTIC:
        other = DivisorClass(e, -2) if e % 2 else DivisorClass(e // 2, -1)
        return MoriCone(ExtremalRay(elliptic, DivisorClass(0, 1)), ExtremalRay(elliptic, other))
    if kind is GeneratorKind.LINE:
        return MoriCone(
            ExtremalRay(minus_two, DivisorClass(0, 1)), ExtremalRay(elliptic, DivisorClass(1, -1))
        )
    if kind is GeneratorKind.NONE:
        boundary = ExtremalRay(RayKind.IRRATIONAL_NULL)
        return MoriCone(boundary, boundary)
    raise UnsupportedFamily(f"no cone description for kind {kind!r}")


def ray_products(surface: SurfaceModel, d: DivisorClass) -> tuple[int, int] | None:
    """``(D.R1, D.R2)`` for the two integral rays, or None if irrational."""
    cone = extremal_rays(surface)
    if cone.ray1.divisor is None:
        return None
    return tuple(intersect(surface.lattice, d, r.divisor) for r in cone.rays)


def is_nef(surface: SurfaceModel, d: DivisorClass) -> bool:
    products = ray_products(surface, d)
    if products is None:
        # closure of the positive cone
        return square(surface.lattice, d) >= 0 and degree(surface.lattice, d) >= 0
    return min(products) >= 0


def negative_part_reduction(
    surface: SurfaceModel, d: DivisorClass
) -> tuple[DivisorClass, list[DivisorClass]]:
    """Subtract (-2)-curves meeting ``d`` negatively.

    A curve ``R`` with ``d.R = -k`` is removed ``ceil(k/2)`` times at once,
    or fewer if the degree turns negative first, at which point the
    reduction stops.  Returns the remainder and the subtracted curves.
    For effective ``d`` the remainder is the nef part whatever the order.
    """
    lattice = surface.lattice
    curves = extremal_rays(surface).curves(RayKind.MINUS_TWO_CURVE)
    subtracted = []
    while (deg := degree(lattice, d)) >= 0:
        for r in curves:
            k = -intersect(lattice, d, r)
            if k > 0:
                break
        else:
            break
        m = min((k + 1) // 2, deg // degree(lattice, r) + 1)
        d = d - m * r
        subtracted.extend([r] * m)
    return d, subtracted


@lru_cache(maxsize=4096)
def is_effective(surface: SurfaceModel, d: DivisorClass) -> bool:
    """Whether ``d`` is the class of a nonzero effective divisor.

    The zero class is reported as not effective.
    """
    if not d:
        return False
    lattice = surface.lattice
    if surface.kind is GeneratorKind.NONE:
        return square(lattice, d) > 0 and degree(lattice, d) > 0
    rest, _ = negative_part_reduction(surface, d)
    if rest == ZERO:
        return True
    # a nonzero nef class on a K3 surface has chi >= 2 and positive degree
    return degree(lattice, rest) > 0 and is_nef(surface, rest)
