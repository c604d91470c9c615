"""Representation of integers by the intersection form of a Picard lattice.

The self-intersection of ``x h + y G`` is the binary quadratic form
``Q(x, y) = 4x^2 + 2e xy + s y^2``.  Deciding whether ``Q = n`` has an
integral solution is done exactly:

* square discriminant: ``Q`` splits into two rational linear factors and
  every solution comes from a divisor pair of ``4an``;
* otherwise: classical reduction theory of indefinite forms.  A primitive
  representation of ``m`` exists iff some form ``(m, b, *)`` of the same
  discriminant is properly equivalent to ``Q``, and equivalence is decided
  by comparing cycles of reduced forms.

Bounded search is never used to certify non-representability.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from math import gcd, isqrt

from .lattice import DivisorClass, PicardLattice, degree

Form = tuple[int, int, int]
# 2x2 integer matrix [[p, q], [r, s]] stored row-major
Matrix = tuple[int, int, int, int]

IDENTITY: Matrix = (1, 0, 0, 1)
PREFILTER_MODULI = (8, 9, 5, 7, 11, 13, 16, 25)


@dataclass(frozen=True)
class RepresentationResult:
    representable: bool
    witness: DivisorClass | None = None


@dataclass(frozen=True)
class NullRays:
    rays: tuple[DivisorClass, ...] = field(default=())
    irrational: bool = False


def lattice_form(lattice: PicardLattice) -> Form:
    return (4, 2 * lattice.e, lattice.s)


def evaluate(form: Form, x: int, y: int) -> int:
    a, b, c = form
    return a * x * x + b * x * y + c * y * y


def _is_square(n: int) -> bool:
    return n >= 0 and isqrt(n) ** 2 == n


def _matmul(m1: Matrix, m2: Matrix) -> Matrix:
    p1, q1, r1, s1 = m1
    p2, q2, r2, s2 = m2
    return (p1 * p2 + q1 * r2, p1 * q2 + q1 * s2, r1 * p2 + s1 * r2, r1 * q2 + s1 * s2)


def _inverse(m: Matrix) -> Matrix:
    p, q, r, s = m  # det = 1
    return (s, -q, -r, p)


# ---------------------------------------------------------------------------
# reduction theory (non-square discriminant)


def _is_reduced(form: Form, root: int) -> bool:
    # |sqrt(D) - 2|a|| < b < sqrt(D); root = isqrt(D) and sqrt(D) is irrational
    a, b, _ = form
    return 0 < b <= root and 2 * abs(a) - b <= root and b + 2 * abs(a) > root


def _rho(form: Form, disc: int, root: int) -> tuple[Form, Matrix]:
    """One reduction step ``(a, b, c) -> (c, b', c')`` with its SL2 matrix."""
    _, b, c = form
    ac = abs(c)
    if ac > root:
        lo = 1 - ac  # -|c| < b' <= |c|
    else:
        lo = root + 1 - 2 * ac  # sqrt(D) - 2|c| < b' < sqrt(D)
    b_new = lo + (-b - lo) % (2 * ac)
    t = (b_new + b) // (2 * c)
    c_new = (b_new * b_new - disc) // (4 * c)
    return (c, b_new, c_new), (0, -1, 1, t)


def _reduce(form: Form, disc: int, root: int) -> tuple[Form, Matrix]:
    m = IDENTITY
    while not _is_reduced(form, root):
        form, step = _rho(form, disc, root)
        m = _matmul(m, step)
    return form, m


@lru_cache(maxsize=256)
def _cycle(form: Form) -> dict[Form, Matrix]:
    """Reduced forms properly equivalent to ``form``, each with a matrix
    ``T`` such that ``form o T`` equals it."""
    a, b, c = form
    disc = b * b - 4 * a * c
    root = isqrt(disc)
    start, m = _reduce(form, disc, root)
    cycle = {start: m}
    current = start
    while True:
        current, step = _rho(current, disc, root)
        if current == start:
            return cycle
        m = _matmul(m, step)
        cycle[current] = m


def equivalence(f: Form, g: Form) -> Matrix | None:
    """An SL2(Z) matrix ``T`` with ``f o T = g``, or None if inequivalent.

    Both forms must share a positive non-square discriminant.
    """
    disc = f[1] ** 2 - 4 * f[0] * f[2]
    if g[1] ** 2 - 4 * g[0] * g[2] != disc:
        return None
    root = isqrt(disc)
    g_red, mg = _reduce(g, disc, root)
    mf = _cycle(f).get(g_red)
    if mf is None:
        return None
    return _matmul(mf, _inverse(mg))


def _primitive_representation(form: Form, m: int) -> tuple[int, int] | None:
    a, b, c = form
    disc = b * b - 4 * a * c
    modulus = 4 * abs(m)
    for b0 in range(disc % 2, 2 * abs(m), 2):
        if (b0 * b0 - disc) % modulus:
            continue
        target = (m, b0, (b0 * b0 - disc) // (4 * m))
        t = equivalence(form, target)
        if t is not None:
            return t[0], t[2]
    return None


def _represent_nonsquare(form: Form, n: int) -> tuple[int, int] | None:
    # n = k^2 m with (x, y) = k * (primitive representation of m)
    k = 1
    while k * k <= abs(n):
        if n % (k * k) == 0:
            w = _primitive_representation(form, n // (k * k))
            if w is not None:
                return k * w[0], k * w[1]
        k += 1
    return None


# ---------------------------------------------------------------------------
# split forms (square discriminant)


def _divisors(n: int) -> list[int]:
    n = abs(n)
    small = [d for d in range(1, isqrt(n) + 1) if n % d == 0]
    return sorted(set(small + [n // d for d in small]))


def _represent_split(form: Form, n: int) -> tuple[int, int] | None:
    # 4a Q = (2a x + (b - t) y)(2a x + (b + t) y),  t^2 = disc, a != 0
    a, b, c = form
    t = isqrt(b * b - 4 * a * c)
    product = 4 * a * n
    for d in _divisors(product):
        for l1 in (d, -d):
            l2 = product // l1
            if (l2 - l1) % (2 * t):
                continue
            y = (l2 - l1) // (2 * t)
            num = l1 - (b - t) * y
            if num % (2 * a):
                continue
            x = num // (2 * a)
            if evaluate(form, x, y) == n:
                return x, y
    return None


# ---------------------------------------------------------------------------


@lru_cache(maxsize=1024)
def _residues(form: Form, modulus: int) -> frozenset[int]:
    return frozenset(
        evaluate(form, x, y) % modulus for x in range(modulus) for y in range(modulus)
    )


def _locally_obstructed(form: Form, n: int) -> bool:
    return any(n % m not in _residues(form, m) for m in PREFILTER_MODULI)


SMALL_BOX = 6


def _small_witness(form: Form, n: int) -> tuple[int, int] | None:
    hits = [
        (x, y)
        for x in range(-SMALL_BOX, SMALL_BOX + 1)
        for y in range(-SMALL_BOX, SMALL_BOX + 1)
        if (x or y) and evaluate(form, x, y) == n
    ]
    if not hits:
        return None
    return min(hits, key=lambda w: (abs(w[0]) + abs(w[1]), -_sign(form, w), w))


def _sign(form: Form, w: tuple[int, int]) -> int:
    # sign of the polar pairing with (1, 0); equals the sign of the degree
    # for lattice forms
    v = 2 * form[0] * w[0] + form[1] * w[1]
    return (v > 0) - (v < 0)


def represents_form(form: Form, n: int) -> tuple[int, int] | None:
    """A nonzero ``(x, y)`` with ``form(x, y) = n``, or None if none exists.

    ``form`` must be indefinite with ``a != 0``.  The witness is a shortest
    one when a short one exists, and is signed to pair positively with
    ``(1, 0)`` where possible.
    """
    w = _decide(form, n)
    if w is None:
        return None
    small = _small_witness(form, n)
    if small is not None:
        return small
    return w if _sign(form, w) >= 0 else (-w[0], -w[1])


def _decide(form: Form, n: int) -> tuple[int, int] | None:
    a, b, c = form
    disc = b * b - 4 * a * c
    if disc <= 0 or a == 0:
        raise ValueError(f"form {form} is not indefinite with a != 0")
    if n == 0:
        if not _is_square(disc):
            return None
        t = isqrt(disc)
        # Q(x, 1) = 0 at x = (-b + t) / 2a
        g = gcd(t - b, 2 * a)
        return (t - b) // g, 2 * a // g
    content = gcd(gcd(a, b), c)
    if n % content:
        return None
    form, n = (a // content, b // content, c // content), n // content
    if _locally_obstructed(form, n):
        return None
    if _is_square(disc):
        return _represent_split(form, n)
    return _represent_nonsquare(form, n)


def represents(lattice: PicardLattice, n: int) -> RepresentationResult:
    """Decide whether some nonzero class ``D`` has ``D^2 = n``."""
    w = represents_form(lattice_form(lattice), n)
    if w is None:
        return RepresentationResult(False)
    return RepresentationResult(True, DivisorClass(*w))


def null_rays(lattice: PicardLattice) -> NullRays:
    """Primitive classes of square zero, up to sign, with positive degree.

    They exist iff ``e^2 - 4s`` is a perfect square ``t^2``; the two
    directions are then ``(t - e, 4)`` and ``(e + t, -4)`` up to scaling.
    """
    e, s = lattice.e, lattice.s
    disc = e * e - 4 * s
    if not _is_square(disc):
        return NullRays((), irrational=True)
    t = isqrt(disc)
    rays = []
    for x, y in ((t - e, 4), (e + t, -4)):
        g = gcd(x, y)
        ray = DivisorClass(x // g, y // g)
        if degree(lattice, ray) < 0:
            ray = -ray
        rays.append(ray)
    return NullRays(tuple(sorted(rays, key=tuple)), irrational=False)


def verify_no_special_curves(lattice: PicardLattice) -> bool:
    """True iff the lattice has no classes of square -2 and no nonzero
    classes of square 0, so the surface carries neither (-2)-curves nor
    elliptic curves."""
    return not represents(lattice, -2).representable and not null_rays(lattice).rays
