"""Rank-2 Picard lattices of quartic K3 surfaces.

A lattice is spanned by the hyperplane class ``h`` and one special
generator ``G``; its Gram matrix is ``[[4, e], [e, s]]``.  Divisor classes
are integer pairs ``(x, y)`` standing for ``x*h + y*G``.  Note the sign:
a class written ``x h - y E`` in the classical literature is stored here
as ``(x, -y)``.

All arithmetic is on Python ints, so nothing overflows.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .errors import KindMismatch, NonHyperbolic, OddSelfIntersection


class GeneratorKind(str, enum.Enum):
    """What the special generator ``G`` is geometrically."""

    RATIONAL = "rational"  # smooth rational curve of degree e >= 2
    ELLIPTIC = "elliptic"  # smooth elliptic curve of degree e >= 4
    LINE = "line"  # a line (e = 1)
    NONE = "none"  # no (-2)-curves and no elliptic curves on S


@dataclass(frozen=True, slots=True)
class DivisorClass:
    x: int
    y: int

    def __add__(self, other: DivisorClass) -> DivisorClass:
        return DivisorClass(self.x + other.x, self.y + other.y)

    def __sub__(self, other: DivisorClass) -> DivisorClass:
        return DivisorClass(self.x - other.x, self.y - other.y)

    def __neg__(self) -> DivisorClass:
        return DivisorClass(-self.x, -self.y)

    def __mul__(self, k: int) -> DivisorClass:
        return DivisorClass(k * self.x, k * self.y)

    __rmul__ = __mul__

    def __bool__(self) -> bool:
        return bool(self.x or self.y)

    def __iter__(self):
        yield self.x
        yield self.y

    def __str__(self) -> str:
        return f"{self.x},{self.y}"

    @classmethod
    def parse(cls, text: str) -> DivisorClass:
        """Parse ``"x,y"``."""
        parts = text.split(",")
        if len(parts) != 2:
            raise ValueError(f"expected 'x,y', got {text!r}")
        return cls(int(parts[0]), int(parts[1]))


ZERO = DivisorClass(0, 0)
H = DivisorClass(1, 0)
G = DivisorClass(0, 1)


@dataclass(frozen=True, slots=True)
class PicardLattice:
    """Even hyperbolic lattice ``<h, G>`` with ``h^2 = 4``.

    Direct construction only checks the structural invariants (evenness and
    signature).  Use :func:`make_lattice` to also validate ``kind``.
    """

    e: int
    s: int
    kind: GeneratorKind | None = None

    def __post_init__(self):
        if self.e < 1:
            raise KindMismatch(f"h.G must be positive, got e={self.e}")
        if self.s % 2:
            raise OddSelfIntersection(f"G^2 = {self.s} is odd")
        if self.determinant >= 0:
            raise NonHyperbolic(
                f"Gram matrix (4, {self.e}; {self.e}, {self.s}) has determinant "
                f"{self.determinant} >= 0"
            )

    @property
    def determinant(self) -> int:
        return 4 * self.s - self.e * self.e

    @property
    def gram(self) -> tuple[tuple[int, int], tuple[int, int]]:
        return ((4, self.e), (self.e, self.s))


def make_lattice(e: int, s: int, kind: GeneratorKind | str) -> PicardLattice:
    """Build a lattice and check that ``kind`` is consistent with ``(e, s)``."""
    kind = GeneratorKind(kind)
    lattice = PicardLattice(e, s, kind)
    if kind is GeneratorKind.RATIONAL:
        if s != -2 or e < 2:
            raise KindMismatch(f"rational generator needs s=-2 and e>=2, got e={e}, s={s}")
    elif kind is GeneratorKind.ELLIPTIC:
        if s != 0 or e < 4:
            raise KindMismatch(f"elliptic generator needs s=0 and e>=4, got e={e}, s={s}")
    elif kind is GeneratorKind.LINE:
        if s != -2 or e != 1:
            raise KindMismatch(f"line generator needs s=-2 and e=1, got e={e}, s={s}")
    else:
        from .quadform import verify_no_special_curves

        if not verify_no_special_curves(lattice):
            raise KindMismatch(f"lattice (4,{e},{s}) carries (-2)-classes or null classes")
    return lattice


def intersect(lattice: PicardLattice, d1: DivisorClass, d2: DivisorClass) -> int:
    return (
        4 * d1.x * d2.x
        + lattice.e * (d1.x * d2.y + d2.x * d1.y)
        + lattice.s * d1.y * d2.y
    )


def square(lattice: PicardLattice, d: DivisorClass) -> int:
    return intersect(lattice, d, d)


def degree(lattice: PicardLattice, d: DivisorClass) -> int:
    return intersect(lattice, d, H)


def genus(lattice: PicardLattice, d: DivisorClass) -> int:
    """Arithmetic genus ``D^2/2 + 1`` (adjunction with trivial canonical class)."""
    return square(lattice, d) // 2 + 1


def euler_characteristic(lattice: PicardLattice, d: DivisorClass) -> int:
    """Riemann-Roch on a K3 surface: ``chi(O(D)) = D^2/2 + 2``."""
    return square(lattice, d) // 2 + 2


@dataclass(frozen=True, slots=True)
class AmbientThreefold:
    name: str
    canonical_restriction: DivisorClass
    degree_bound: int

    @property
    def anticanonical_square(self) -> int:
        # (-K_V|_S)^2 = 4 k^2 for -K_V|_S = k h
        k = self.canonical_restriction.x
        return 4 * k * k


P3 = AmbientThreefold("p3", DivisorClass(-4, 0), 16)
V4 = AmbientThreefold("v4", DivisorClass(-1, 0), 4)
AMBIENTS = {"p3": P3, "v4": V4}
