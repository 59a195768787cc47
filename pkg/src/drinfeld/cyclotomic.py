"""Exact arithmetic in the cyclotomic field Q(zeta_N).

One ambient field per q, with N = p(q^2-1), is large enough to hold every
value the verification needs: p-th roots for additive characters, (q+1)-th
roots for torus characters, and (q^2-1)-th roots for Teichmueller lifts.

A CycNum is a rational vector in the power basis 1, z, .., z^(phi(N)-1),
reduced modulo the N-th cyclotomic polynomial, stored as an integer
numerator tuple plus one positive common denominator, gcd-normalized so that
equality is plain tuple equality.

Products convolve the numerator vectors and fold exponents >= phi(N) back
into the basis through a precomputed table of the reduced monomials zeta^k
for every k in [0, N); the same table powers the Galois action (hence
conjugation) and root_of_unity lookups.  Convolution uses Kronecker
substitution -- pack the signed coefficients into one big integer, multiply,
unpack balanced digits -- which pushes the inner loop into C, with a direct
path when either operand is very sparse.

Division exists where the verification needs it: by rationals (always), and
by arbitrary nonzero elements via the conjugate product
1/c = (prod_{a != 1} sigma_a(c)) / Norm(c), used for elimination pivots.
"""

from __future__ import annotations

import cmath
import math
from fractions import Fraction
from functools import lru_cache, reduce

from .errors import OrderDoesNotDivideN, SingularMatrix, ZeroElement


# --- integer polynomial helpers ----------------------------------------------

def _poly_div_exact(num: list[int], den: tuple[int, ...]) -> list[int]:
    """Exact division of integer polynomials, den monic.  Coefficients ascending."""
    num = list(num)
    dd = len(den) - 1
    out = [0] * (len(num) - dd)
    for k in range(len(out) - 1, -1, -1):
        c = num[k + dd]
        if c:
            out[k] = c
            for i in range(dd + 1):
                num[k + i] -= c * den[i]
    assert not any(num), "polynomial division left a remainder"
    return out


def _divisors(n: int) -> list[int]:
    small, large = [], []
    for d in range(1, math.isqrt(n) + 1):
        if n % d == 0:
            small.append(d)
            if d != n // d:
                large.append(n // d)
    return small + large[::-1]


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> tuple[int, ...]:
    """Coefficients of Phi_n, ascending, computed by exact division of x^n - 1
    by the cyclotomic polynomials of the proper divisors of n."""
    if n == 1:
        return (-1, 1)
    poly = [-1] + [0] * (n - 1) + [1]
    for d in _divisors(n)[:-1]:
        poly = _poly_div_exact(poly, cyclotomic_polynomial(d))
    return tuple(poly)


# --- convolution --------------------------------------------------------------

def _convolve_direct(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    out[i + j] += x * y
    return out


def _convolve_kronecker(a, b):
    bits = (
        max(abs(x) for x in a).bit_length()
        + max(abs(y) for y in b).bit_length()
        + min(len(a), len(b)).bit_length()
        + 2
    )
    pa = 0
    for x in reversed(a):
        pa = (pa << bits) + x
    pb = 0
    for y in reversed(b):
        pb = (pb << bits) + y
    prod = pa * pb
    mask = (1 << bits) - 1
    half = 1 << (bits - 1)
    out = []
    for _ in range(len(a) + len(b) - 1):
        d = prod & mask
        prod >>= bits
        if d >= half:  # balanced digit: coefficient was negative
            d -= 1 << bits
            prod += 1
        out.append(d)
    assert prod == 0, "Kronecker unpack did not terminate cleanly"
    return out


def _convolve(a, b):
    na = sum(1 for x in a if x)
    nb = sum(1 for y in b if y)
    if na == 0 or nb == 0:
        return [0] * (len(a) + len(b) - 1)
    if min(na, nb) <= 4 or na * nb <= 256:
        return _convolve_direct(a, b)
    return _convolve_kronecker(a, b)


# --- the field ----------------------------------------------------------------

class CycField:
    """Q(zeta_n) with precomputed reduction data.  Use cyclotomic_field(n)."""

    def __init__(self, n: int):
        self.n = n
        poly = cyclotomic_polynomial(n)
        self.phi = len(poly) - 1
        self.poly = poly
        self._build_mono()
        self.zero = CycNum(self, 1, (0,) * self.phi)
        self.one = self.monomial(0)
        self.units = tuple(a for a in range(2, n) if math.gcd(a, n) == 1)

    def _build_mono(self) -> None:
        phi, n = self.phi, self.n
        red = self.poly[:-1]  # x^phi = -(red[0] + red[1] x + ...)
        mono = [None] * n
        acc = [0] * phi
        acc[0] = 1
        mono[0] = tuple(acc)
        for k in range(1, n):
            top = acc[-1]
            acc = [0] + acc[:-1]
            if top:
                for i in range(phi):
                    acc[i] -= top * red[i]
            mono[k] = tuple(acc)
        # one more step must wrap around to 1
        top = acc[-1]
        acc = [0] + acc[:-1]
        if top:
            for i in range(phi):
                acc[i] -= top * red[i]
        assert tuple(acc) == mono[0], "monomial table failed to close the cycle"
        self.mono = mono

    # --- constructors ---------------------------------------------------

    def make(self, den: int, num) -> CycNum:
        """Normalize (den, num) into canonical form."""
        if den < 0:
            den, num = -den, [-x for x in num]
        g = reduce(math.gcd, num, den)
        if g > 1:
            den //= g
            num = [x // g for x in num]
        return CycNum(self, den, tuple(num))

    def monomial(self, k: int) -> CycNum:
        return CycNum(self, 1, self.mono[k % self.n])

    def from_integer(self, v: int) -> CycNum:
        num = [0] * self.phi
        num[0] = v
        return CycNum(self, 1, tuple(num))

    def from_rational(self, r) -> CycNum:
        r = Fraction(r)
        num = [0] * self.phi
        num[0] = r.numerator
        return self.make(r.denominator, num)

    def coerce(self, v) -> "CycNum":
        if isinstance(v, CycNum):
            if v.field is not self:
                raise ValueError("CycNum from a different cyclotomic field")
            return v
        if isinstance(v, int):
            return self.from_integer(v)
        if isinstance(v, Fraction):
            return self.from_rational(v)
        raise TypeError(f"cannot coerce {v!r} into Q(zeta_{self.n})")

    def root_of_unity(self, order: int, power: int = 1) -> CycNum:
        if order <= 0 or self.n % order:
            raise OrderDoesNotDivideN(order, self.n)
        return self.monomial((self.n // order) * power % self.n)

    def __repr__(self) -> str:
        return f"CycField(n={self.n}, degree={self.phi})"


@lru_cache(maxsize=None)
def cyclotomic_field(n: int) -> CycField:
    return CycField(n)


def field_for_tower(tower) -> CycField:
    """The ambient field Q(zeta_N), N = p(q^2-1), for one tower."""
    return cyclotomic_field(tower.p * (tower.q2 - 1))


class CycNum:
    """One element of Q(zeta_n).  Immutable; construct through the field."""

    __slots__ = ("field", "den", "num")

    def __init__(self, field: CycField, den: int, num: tuple[int, ...]):
        self.field = field
        self.den = den
        self.num = num

    # --- predicates -------------------------------------------------------

    def is_zero(self) -> bool:
        return not any(self.num)

    def is_rational(self) -> bool:
        return not any(self.num[1:])

    def as_rational(self):
        """Fraction if the element is rational, else None."""
        if any(self.num[1:]):
            return None
        return Fraction(self.num[0], self.den)

    def as_integer(self):
        """int if the element is a rational integer, else None."""
        if self.den != 1 or any(self.num[1:]):
            return None
        return self.num[0]

    # --- ring operations --------------------------------------------------

    def __add__(self, other):
        f = self.field
        other = f.coerce(other)
        da, db = self.den, other.den
        if da == db:
            return f.make(da, [x + y for x, y in zip(self.num, other.num)])
        g = math.gcd(da, db)
        ma, mb = db // g, da // g
        return f.make(da * ma, [x * ma + y * mb for x, y in zip(self.num, other.num)])

    __radd__ = __add__

    def __neg__(self):
        return CycNum(self.field, self.den, tuple(-x for x in self.num))

    def __sub__(self, other):
        return self + (-self.field.coerce(other))

    def __rsub__(self, other):
        return self.field.coerce(other) + (-self)

    def __mul__(self, other):
        f = self.field
        if isinstance(other, int):
            return f.make(self.den, [x * other for x in self.num])
        if isinstance(other, Fraction):
            return f.make(self.den * other.denominator, [x * other.numerator for x in self.num])
        other = f.coerce(other)
        if other.is_rational():
            return f.make(self.den * other.den, [x * other.num[0] for x in self.num])
        if self.is_rational():
            return f.make(self.den * other.den, [y * self.num[0] for y in other.num])
        phi = f.phi
        conv = _convolve(self.num, other.num)
        head = conv[:phi]
        mono = f.mono
        for k in range(phi, len(conv)):
            c = conv[k]
            if c:
                for i, m in enumerate(mono[k]):
                    if m:
                        head[i] += c * m
        return f.make(self.den * other.den, head)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, int):
            return self.field.make(self.den * other, list(self.num))
        if isinstance(other, Fraction):
            return self * Fraction(other.denominator, other.numerator)
        other = self.field.coerce(other)
        r = other.as_rational()
        if r is not None:
            if r == 0:
                raise ZeroDivisionError("division by zero in Q(zeta_n)")
            return self * (1 / r)
        return self * other.inverse()

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        out = self.field.one
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base if e > 1 else base
            e >>= 1
        return out

    # --- Galois -----------------------------------------------------------

    def galois(self, a: int) -> "CycNum":
        """The automorphism zeta -> zeta^a, gcd(a, n) = 1."""
        f = self.field
        n = f.n
        assert math.gcd(a, n) == 1, "galois exponent must be a unit mod n"
        out = [0] * f.phi
        for r, c in enumerate(self.num):
            if c:
                for i, m in enumerate(f.mono[a * r % n]):
                    if m:
                        out[i] += c * m
        return f.make(self.den, out)

    def conj(self) -> "CycNum":
        """Complex conjugation, zeta -> zeta^(-1)."""
        return self.galois(self.field.n - 1)

    def inverse(self) -> "CycNum":
        """Exact inverse via the conjugate product over the Galois group."""
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero in Q(zeta_n)")
        f = self.field
        prod = f.one
        for a in f.units:
            prod = prod * self.galois(a)
        norm = (self * prod).as_rational()
        assert norm is not None and norm != 0, "conjugate product missed the norm"
        return prod * (1 / norm)

    # --- equality / output --------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            r = self.as_rational()
            return r is not None and r == other
        if not isinstance(other, CycNum):
            return NotImplemented
        return self.field.n == other.field.n and self.den == other.den and self.num == other.num

    def __hash__(self):
        r = self.as_rational()
        if r is not None:
            return hash(r)
        return hash((self.field.n, self.den, self.num))

    def approx(self) -> complex:
        n = self.field.n
        z = 0j
        for r, c in enumerate(self.num):
            if c:
                z += c * cmath.exp(2j * cmath.pi * r / n)
        return z / self.den

    def approx_str(self) -> str:
        z = self.approx()
        re = z.real + 0.0
        im = z.imag + 0.0
        return f"{re:.6f}{im:+.6f}i"

    def coefficient_triples(self) -> list[tuple[int, int, int]]:
        """Sparse exact form: (basis index, numerator, denominator) triples."""
        out = []
        for r, c in enumerate(self.num):
            if c:
                fr = Fraction(c, self.den)
                out.append((r, fr.numerator, fr.denominator))
        return out

    def payload(self) -> dict:
        """JSON-ready exact + approximate form."""
        return {
            "n": self.field.n,
            "coeffs": [list(t) for t in self.coefficient_triples()],
            "approx": self.approx_str(),
        }

    def __repr__(self):
        r = self.as_rational()
        if r is not None:
            return f"CycNum({r})"
        terms = ", ".join(f"z^{r}:{n}/{d}" if d != 1 else f"z^{r}:{n}"
                          for r, n, d in self.coefficient_triples())
        return f"CycNum(n={self.field.n}; {terms})"


# --- module-level operations ---------------------------------------------------

def root_of_unity(field: CycField, order: int, power: int = 1) -> CycNum:
    return field.root_of_unity(order, power)


def teichmueller_lift(field: CycField, tower, x: int) -> CycNum:
    """The multiplicative lift F_{q^2}^x -> mu_{q^2-1} in Q(zeta_N):
    x = g2^k maps to zeta_{q^2-1}^k."""
    if x == 0:
        raise ZeroElement("Teichmueller lift of 0")
    return field.root_of_unity(tower.n_units, tower.discrete_log(x))


def invert_matrix(rows: list[list[CycNum]]):
    """Exact Gauss-Jordan inverse of a square CycNum matrix.

    Returns (inverse, determinant).  Raises SingularMatrix.  Pivots are the
    first nonzero entry in each column (no numerical considerations arise in
    exact arithmetic, so determinism wins).
    """
    n = len(rows)
    assert all(len(r) == n for r in rows), "matrix must be square"
    f = rows[0][0].field
    aug = [list(rows[i]) + [f.one if j == i else f.zero for j in range(n)] for i in range(n)]
    det = f.one
    for col in range(n):
        piv = next((r for r in range(col, n) if not aug[r][col].is_zero()), None)
        if piv is None:
            raise SingularMatrix(f"no pivot in column {col}")
        if piv != col:
            aug[col], aug[piv] = aug[piv], aug[col]
            det = -det
        det = det * aug[col][col]
        pinv = aug[col][col].inverse()
        aug[col] = [x * pinv for x in aug[col]]
        for r in range(n):
            if r != col and not aug[r][col].is_zero():
                factor = aug[r][col]
                aug[r] = [x - factor * y for x, y in zip(aug[r], aug[col])]
    return [row[n:] for row in aug], det


def linear_solve(a: list[list[CycNum]], b: list[CycNum]) -> list[CycNum]:
    """Solve the square exact system a x = b; raises SingularMatrix."""
    inv, _ = invert_matrix(a)
    return [
        reduce(lambda s, t: s + t, (inv[i][j] * b[j] for j in range(len(b))))
        for i in range(len(b))
    ]
