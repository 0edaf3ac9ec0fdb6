"""Exception types shared across the library.

Every failure mode that callers are expected to catch gets its own class;
plumbing errors (bad Python types etc.) stay plain ValueError/TypeError.
"""


class LieformsError(Exception):
    """Base class for all library-specific errors."""


# ---------------------------------------------------------------- fields

class TowerMismatchError(LieformsError):
    """Operands belong to different field towers (or tower levels)."""


class NonRootError(LieformsError):
    """A claimed automorphism image is not a root of the minimal polynomial."""


class NotClosedError(LieformsError):
    """An automorphism list is not closed under composition."""


class DegenerateError(LieformsError):
    """Degenerate construction input (duplicate images, zero modulus, ...)."""


class NotGaloisError(LieformsError):
    """The automorphism count falls short of the relative degree."""


class DegreeTooLargeError(LieformsError):
    """Polynomial degree exceeds the supported factorization range."""


# ---------------------------------------------------------------- liealg

class JacobiError(LieformsError):
    """Structure constants violate the Jacobi identity.

    Carries the offending basis triple (1-based) in ``triple``.
    """

    def __init__(self, triple, residual=None):
        self.triple = tuple(triple)
        self.residual = residual
        super().__init__(
            "Jacobi identity fails on basis triple %r" % (self.triple,))


class OwnerMismatchError(LieformsError):
    """A vector or map is used with an algebra it does not belong to."""


class SingularMatrixError(LieformsError):
    """A matrix that must be invertible is singular."""


# ---------------------------------------------------------------- descent

class NotSubLevelError(LieformsError):
    """The requested field is not a level of the given tower."""


# ---------------------------------------------------------------- decompose

class UncertifiedDecompositionError(LieformsError):
    """A computation requiring certified summands met a heuristic one."""


class OracleUndecidedError(LieformsError):
    """The isomorphism oracle returned 'unknown' where a verdict is required."""


# ---------------------------------------------------------------- pfaffian

class NotTwoStepError(LieformsError):
    """The algebra is not nilpotent of class at most two."""


class NotSkewError(LieformsError):
    """Matrix is not skew-symmetric with zero diagonal."""


class OddSizeError(LieformsError):
    """Pfaffian of an odd-dimensional matrix was requested."""


class WrongShapeError(LieformsError):
    """A polynomial does not have the required shape (binary quartic, ...)."""


class TVanishesError(LieformsError):
    """The quartic invariant T vanishes, so c = S^3/T^2 is undefined."""


class ZeroScalarError(LieformsError):
    """A scaling factor that must be nonzero is zero."""


# ---------------------------------------------------------------- catalog

class ZeroParameterError(LieformsError):
    """A family parameter that must be nonzero is zero."""


class ZeroLambdaError(ZeroParameterError):
    pass


class ZeroAlphaError(ZeroParameterError):
    pass


class ConstraintViolatedError(LieformsError):
    """Family parameters violate a documented constraint."""


class IndexRangeError(LieformsError):
    """A count or index parameter is outside its allowed range."""


# ---------------------------------------------------------------- manifest

class ManifestError(LieformsError):
    """Malformed manifest text or element literal."""
