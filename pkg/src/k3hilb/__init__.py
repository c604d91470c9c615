"""Exact divisor arithmetic on rank-2 Picard lattices of quartic K3 surfaces,
Mori cones, cohomology of line bundles, and the Hilbert-scheme status of
curves on such surfaces inside P^3 or a smooth quartic 3-fold."""

from .classify import Assumptions, ClassificationReport, Status, classify_curve
from .cohomology import CohomologyTriple, cohomology
from .cone import MoriCone, RayKind, SurfaceModel, extremal_rays, surface_model
from .lattice import P3, V4, DivisorClass, GeneratorKind, PicardLattice, make_lattice
from .pell import PellSolution, fundamental_solution

__all__ = [
    "Assumptions",
    "ClassificationReport",
    "CohomologyTriple",
    "DivisorClass",
    "GeneratorKind",
    "MoriCone",
    "P3",
    "PellSolution",
    "PicardLattice",
    "RayKind",
    "Status",
    "SurfaceModel",
    "V4",
    "classify_curve",
    "cohomology",
    "extremal_rays",
    "fundamental_solution",
    "make_lattice",
    "surface_model",
]
