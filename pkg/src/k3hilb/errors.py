"""Exception hierarchy.

Every error raised for a well-formed but mathematically invalid request
derives from :class:`K3HilbError`, so callers (the CLI in particular) can
separate domain errors from programming errors.
"""


class K3HilbError(ValueError):
    """Base class for domain errors."""

    code = "domain-error"


class OddSelfIntersection(K3HilbError):
    code = "odd-self-intersection"


class NonHyperbolic(K3HilbError):
    code = "non-hyperbolic"


class KindMismatch(K3HilbError):
    code = "kind-mismatch"


class PerfectSquare(K3HilbError):
    code = "perfect-square"


class PreconditionNef(K3HilbError):
    code = "precondition-nef"


class PreconditionEffective(K3HilbError):
    code = "precondition-effective"


class UnsupportedFamily(K3HilbError):
    code = "unsupported-family"


class UnsupportedAmbient(K3HilbError):
    code = "unsupported-ambient"
