"""Exception types shared across the package.

Every failure mode that callers are expected to handle gets its own class, so
tests and the CLI can catch precisely.  All of them derive from DrinfeldError.
"""


class DrinfeldError(Exception):
    """Base class for all package-specific errors."""


# --- field tower construction ------------------------------------------------

class NotAPrimePower(DrinfeldError):
    def __init__(self, q):
        super().__init__(f"q={q!r} is not a prime power >= 2")
        self.q = q


class BoundExceeded(DrinfeldError):
    def __init__(self, q, bound):
        super().__init__(f"q={q} exceeds the configured bound {bound}")
        self.q = q
        self.bound = bound


class ZeroElement(DrinfeldError):
    """Discrete log (or a Teichmueller lift) of 0 was requested."""


# --- cyclotomic arithmetic ---------------------------------------------------

class OrderDoesNotDivideN(DrinfeldError):
    def __init__(self, order, n):
        super().__init__(f"a root of unity of order {order} does not lie in Q(zeta_{n})")
        self.order = order
        self.n = n


class SingularMatrix(DrinfeldError):
    """Exact elimination hit a structurally singular matrix."""


# --- group layer -------------------------------------------------------------

class InputNotInMu(DrinfeldError):
    def __init__(self, t):
        super().__init__(f"element {t!r} is not in the norm-one subgroup mu_(q+1)")
        self.t = t


# --- class functions ---------------------------------------------------------

class ClassMismatch(DrinfeldError):
    """Two class functions over different groups were combined."""


class NotClassFunctionOnSubgroup(DrinfeldError):
    """Induction input is not constant on subgroup conjugacy classes."""


# --- Deligne-Lusztig layer ---------------------------------------------------

class TrivialThetaRequested(DrinfeldError):
    def __init__(self, j):
        super().__init__(
            f"index j={j} is outside 1..q; the trivial torus character has its own entry point"
        )
        self.j = j


class PSingularInput(DrinfeldError):
    """A fixed-point count was requested at an element of order divisible by p."""


# --- Brauer layer ------------------------------------------------------------

class IndexOutOfRange(DrinfeldError):
    def __init__(self, i, q):
        super().__init__(f"symmetric-power index {i} is outside 0..q-1 for q={q}")
        self.i = i
        self.q = q


class SingularBrauerMatrix(DrinfeldError):
    """The q x q matrix of Brauer characters failed to invert."""


class NonIntegralSolution(DrinfeldError):
    def __init__(self, coefficients):
        super().__init__(f"decomposition produced non-integer coefficients: {coefficients}")
        self.coefficients = coefficients


# --- curve layer -------------------------------------------------------------

class GenusMismatch(DrinfeldError):
    def __init__(self, by_degree, by_count):
        super().__init__(
            f"genus routes disagree: degree formula {by_degree}, point count {by_count}"
        )
        self.by_degree = by_degree
        self.by_count = by_count


# --- verifier ----------------------------------------------------------------

class UnsupportedQ(DrinfeldError):
    def __init__(self, q, supported):
        super().__init__(f"q={q} is not in the supported set {sorted(supported)}")
        self.q = q
        self.supported = tuple(supported)


class UnknownCheckName(DrinfeldError):
    def __init__(self, name, known):
        super().__init__(f"unknown check {name!r}; known checks: {', '.join(known)}")
        self.name = name
        self.known = tuple(known)
