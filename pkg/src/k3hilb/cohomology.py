"""Dimensions of ``H^i(S, O(D))`` for divisor classes on the supported surfaces.

Only ``h^0`` is computed directly; ``h^2`` comes from Serre duality
(``h^2(D) = h^0(-D)``) and ``h^1`` from Riemann-Roch, so the identity
``h0 - h1 + h2 = D^2/2 + 2`` holds by construction.

``h^0`` of an effective class is read off its nef part ``P`` after the
fixed (-2)-curves have been removed:

* ``P = 0``: the class is a rigid sum of (-2)-curves, ``h^0 = 1``;
* ``P^2 > 0``: nef and big, ``h^1(P) = 0`` and ``h^0 = P^2/2 + 2``;
* ``P^2 = 0``: ``P = kF`` for an elliptic curve ``F``, ``h^0 = k + 1``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .cone import (
    RayKind,
    SurfaceModel,
    extremal_rays,
    is_effective,
    is_nef,
    negative_part_reduction,
)
from .errors import PreconditionEffective, PreconditionNef
from .lattice import ZERO, DivisorClass, degree, euler_characteristic, intersect, square
from .quadform import null_rays


@dataclass(frozen=True)
class CohomologyTriple:
    h0: int
    h1: int
    h2: int


def elliptic_multiple(surface: SurfaceModel, d: DivisorClass) -> tuple[DivisorClass, int] | None:
    """``(F, k)`` if ``d = k F`` with ``k >= 1`` for an elliptic ray ``F``."""
    lattice = surface.lattice
    for fiber in extremal_rays(surface).curves(RayKind.ELLIPTIC_FIBER):
        if d.x * fiber.y == d.y * fiber.x:
            k, rem = divmod(degree(lattice, d), degree(lattice, fiber))
            if rem == 0 and k >= 1:
                return fiber, k
    return None


def _h0_effective(surface: SurfaceModel, d: DivisorClass) -> int:
    rest, _ = negative_part_reduction(surface, d)
    if rest == ZERO:
        return 1
    p2 = square(surface.lattice, rest)
    if p2 > 0:
        return p2 // 2 + 2
    pencil = elliptic_multiple(surface, rest)
    if pencil is None:
        raise AssertionError(f"nef part {rest} of {d} has square 0 but is not an elliptic multiple")
    return pencil[1] + 1


def h0(surface: SurfaceModel, d: DivisorClass) -> int:
    if not d:
        return 1
    if is_effective(surface, d):
        return _h0_effective(surface, d)
    return 0


@lru_cache(maxsize=4096)
def cohomology(surface: SurfaceModel, d: DivisorClass) -> CohomologyTriple:
    top = h0(surface, d)
    bottom = h0(surface, -d)
    middle = top + bottom - euler_characteristic(surface.lattice, d)
    return CohomologyTriple(top, middle, bottom)


def has_base_point(surface: SurfaceModel, d: DivisorClass) -> bool:
    """Whether the complete linear system of a nonzero nef class has base points.

    By Saint-Donat this happens iff ``d = E + kF`` with ``k >= 2``, ``F`` an
    elliptic curve, ``E`` a (-2)-curve and ``E.F = 1``.
    """
    if not d or not is_nef(surface, d):
        raise PreconditionNef(f"{d} is not a nonzero nef class")
    lattice = surface.lattice
    # in Picard rank two the irreducible (-2)-curves are exactly the (-2)-rays
    curves = extremal_rays(surface).curves(RayKind.MINUS_TWO_CURVE)
    for fiber in null_rays(lattice).rays:
        if not is_nef(surface, fiber):
            continue  # not the class of an elliptic curve
        # F^2 = 0 forces (D - kF).F = D.F = 1 and (D - kF)^2 = D^2 - 2k = -2
        if intersect(lattice, d, fiber) != 1:
            continue
        k = square(lattice, d) // 2 + 1
        if k >= 2 and d - k * fiber in curves:
            return True
    return False


def general_member_smooth_connected(surface: SurfaceModel, d: DivisorClass) -> bool:
    """Whether a general member of ``|d|`` is a smooth connected curve."""
    if not is_effective(surface, d):
        raise PreconditionEffective(f"{d} is not effective")
    if d in extremal_rays(surface).curves(RayKind.MINUS_TWO_CURVE):
        return True
    if not is_nef(surface, d):
        return False
    if square(surface.lattice, d) == 0:
        pencil = elliptic_multiple(surface, d)
        return pencil is not None and pencil[1] == 1
    return not has_base_point(surface, d)
