"""The tower F_p < F_q < F_{q^2} with exact table-driven arithmetic.

A single model of F_{q^2} over F_p is used throughout: F_{q^2} is
F_p[x]/(h(x)) for the lexicographically smallest primitive polynomial h of
degree 2m (coefficients read as integers, low degree first), and F_q sits
inside it as the fixed field of the q-power Frobenius.  Elements are encoded
as plain ints: the base-p digit expansion of the coefficient vector, constant
term in the lowest digit.  In particular the prime-field constants 0..p-1 are
encoded as themselves.

Multiplication runs through dense log/antilog tables against the canonical
generator g2 = x, so discrete logs, norms, traces and the distinguished
subgroups come out for free:

    g2     generates F_{q^2}^x             (order q^2 - 1)
    g1     = g2^(q+1), generates F_q^x     (order q - 1)
    gamma  = g2^(q-1), generates mu_(q+1)  (the norm-one subgroup)
"""

from __future__ import annotations

import itertools
import math

from .errors import BoundExceeded, NotAPrimePower, ZeroElement

DEFAULT_BOUND = 16
_ADD_TABLE_LIMIT = 512  # field sizes past this add digitwise instead


def prime_power(q: int) -> tuple[int, int]:
    """Split q into (p, m) with p prime and q = p^m, or raise NotAPrimePower."""
    if not isinstance(q, int) or q < 2:
        raise NotAPrimePower(q)
    p = min(f for f in range(2, q + 1) if q % f == 0)
    m = 0
    rest = q
    while rest % p == 0:
        rest //= p
        m += 1
    if rest != 1:
        raise NotAPrimePower(q)
    return p, m


class FieldTower:
    """Arithmetic context for one q.  Build once via build_field_tower()."""

    def __init__(self, q: int, bound: int = DEFAULT_BOUND):
        p, m = prime_power(q)
        if q > bound:
            raise BoundExceeded(q, bound)
        self.q = q
        self.p = p
        self.m = m
        self.q2 = q * q
        self.n_units = self.q2 - 1  # order of F_{q^2}^x

        self.modulus = self._find_modulus()
        self._build_log_tables()
        self._build_linear_tables()

        self.g2 = self.antilog[1]
        self.g1 = self.antilog[(q + 1) % self.n_units]
        self.gamma = self.antilog[q - 1]

        self.fq_elements = tuple(sorted(
            [0] + [self.antilog[k * (q + 1)] for k in range(q - 1)]
        ))
        self.fq_set = frozenset(self.fq_elements)
        self.fq_index = {v: i for i, v in enumerate(self.fq_elements)}

        self._frob = [self._power_map(v, q) for v in range(self.q2)]
        self._pfrob = [self._power_map(v, p) for v in range(self.q2)]

        # Frobenius must be an involution fixing exactly the embedded F_q.
        assert all(self._frob[self._frob[v]] == v for v in range(self.q2))
        assert frozenset(v for v in range(self.q2) if self._frob[v] == v) == self.fq_set

    # --- construction ---------------------------------------------------

    def _find_modulus(self) -> tuple[int, ...]:
        """Smallest primitive polynomial of degree 2m over F_p, as the tuple
        (c_0, .., c_{2m-1}) of non-leading coefficients.

        A monic f is primitive iff the class of x has multiplicative order
        exactly p^(2m)-1 in F_p[x]/(f); that alone forces f irreducible, so a
        single order computation is the whole test.  The order condition is
        checked with square-and-multiply: x^(p^2m - 1) must be 1 while no
        proper divisor exponent (full / prime) is.
        """
        p, d = self.p, 2 * self.m
        full = p ** d - 1
        prime_divisors = []
        rest = full
        f = 2
        while f * f <= rest:
            if rest % f == 0:
                prime_divisors.append(f)
                while rest % f == 0:
                    rest //= f
            f += 1
        if rest > 1:
            prime_divisors.append(rest)

        def mulmod(a, b, coeffs):
            prod = [0] * (2 * d - 1)
            for i, ai in enumerate(a):
                if ai:
                    for j, bj in enumerate(b):
                        prod[i + j] += ai * bj
            for k in range(2 * d - 2, d - 1, -1):
                top = prod[k] % p
                if top:
                    base_i = k - d
                    for i in range(d):
                        prod[base_i + i] -= top * coeffs[i]
            return [v % p for v in prod[:d]]

        def x_power(e, coeffs):
            result = [0] * d
            result[0] = 1
            base = [0] * d
            base[1] = 1
            while e:
                if e & 1:
                    result = mulmod(result, base, coeffs)
                e >>= 1
                if e:
                    base = mulmod(base, base, coeffs)
            return result

        one = [0] * d
        one[0] = 1
        for coeffs in itertools.product(range(p), repeat=d):
            if coeffs[0] == 0:  # x would not be a unit
                continue
            # a root in the prime field means a linear factor, which rules
            # out full multiplicative order; cheap to reject up front
            if any(
                (sum(c * pow(r, i, p) for i, c in enumerate(coeffs)) + pow(r, d, p)) % p == 0
                for r in range(1, p)
            ):
                continue
            if x_power(full, coeffs) != one:
                continue
            if all(x_power(full // r, coeffs) != one for r in prime_divisors):
                return tuple(coeffs)
        raise AssertionError(f"no primitive polynomial of degree {d} over F_{p}")

    def _encode(self, digits) -> int:
        v = 0
        for c in reversed(digits):
            v = v * self.p + c
        return v

    def _decode(self, v: int) -> list[int]:
        p, d = self.p, 2 * self.m
        out = []
        for _ in range(d):
            out.append(v % p)
            v //= p
        return out

    def _build_log_tables(self) -> None:
        p, d = self.p, 2 * self.m
        coeffs = self.modulus
        antilog = [0] * self.n_units
        log = [None] * self.q2
        antilog[0] = 1
        log[1] = 0
        # antilog[k] = x^k; walk the full cycle once
        acc = [0] * d
        acc[0] = 1
        for k in range(1, self.n_units):
            top = acc[-1]
            acc = [0] + acc[:-1]
            if top:
                for i in range(d):
                    acc[i] = (acc[i] - top * coeffs[i]) % p
            v = self._encode(acc)
            antilog[k] = v
            log[v] = k
        assert all(log[v] is not None for v in range(1, self.q2)), "antilog walk missed units"
        self.antilog = antilog
        self.log = log

    def _build_linear_tables(self) -> None:
        p = self.p
        digits = [self._decode(v) for v in range(self.q2)]
        self._neg = [self._encode([(-c) % p for c in ds]) for ds in digits]
        if self.q2 <= _ADD_TABLE_LIMIT:
            add = []
            for da in digits:
                row = [0] * self.q2
                for b, db in enumerate(digits):
                    row[b] = self._encode([(x + y) % p for x, y in zip(da, db)])
                add.append(row)
            self._add = add
        else:
            # the quadratic table stops paying for itself; add digitwise
            self._add = None

    def _digit_add(self, a: int, b: int) -> int:
        p = self.p
        v, place = 0, 1
        while a or b:
            v += ((a + b) % p) * place
            a //= p
            b //= p
            place *= p
        return v

    def _power_map(self, v: int, e: int) -> int:
        if v == 0:
            return 0
        return self.antilog[(self.log[v] * e) % self.n_units]

    # --- arithmetic -------------------------------------------------------

    def add(self, a: int, b: int) -> int:
        if self._add is not None:
            return self._add[a][b]
        return self._digit_add(a, b)

    def neg(self, a: int) -> int:
        return self._neg[a]

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self._neg[b])

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        return self.antilog[(self.log[a] + self.log[b]) % self.n_units]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("field inverse of 0")
        return self.antilog[(-self.log[a]) % self.n_units]

    def pow(self, a: int, e: int) -> int:
        if a == 0:
            if e == 0:
                return 1
            if e < 0:
                raise ZeroDivisionError("negative power of 0")
            return 0
        return self.antilog[(self.log[a] * e) % self.n_units]

    def frobenius(self, a: int) -> int:
        """The q-power map, the nontrivial automorphism of F_{q^2}/F_q."""
        return self._frob[a]

    def discrete_log(self, a: int) -> int:
        """k with g2^k = a, for nonzero a."""
        if a == 0:
            raise ZeroElement("discrete log of 0")
        return self.log[a]

    def element_order(self, a: int) -> int:
        if a == 0:
            raise ZeroElement("multiplicative order of 0")
        return self.n_units // math.gcd(self.n_units, self.log[a])

    # --- structure --------------------------------------------------------

    def is_in_fq(self, a: int) -> bool:
        return a in self.fq_set

    def norm_to_fq(self, a: int) -> int:
        """N(a) = a^(q+1), the norm from F_{q^2} down to F_q."""
        return self.pow(a, self.q + 1)

    def mu_subgroup(self) -> tuple[int, ...]:
        """The norm-one subgroup mu_(q+1), listed as gamma^0, .., gamma^q."""
        return tuple(self.antilog[(self.q - 1) * k % self.n_units] for k in range(self.q + 1))

    def trace_to_prime(self, a: int) -> int:
        """Tr_{F_q/F_p}(a) for a in the embedded F_q, as an int in 0..p-1."""
        if a not in self.fq_set:
            raise ValueError(f"element {a} is not in the embedded F_q")
        t, y = 0, a
        for _ in range(self.m):
            t = self.add(t, y)
            y = self._pfrob[y]
        assert t < self.p, "trace landed outside the prime field"
        return t

    def minus_one(self) -> int:
        return self._neg[1]

    def __repr__(self) -> str:
        return f"FieldTower(q={self.q}, p={self.p}, modulus={self.modulus})"


def build_field_tower(q: int, bound: int = DEFAULT_BOUND) -> FieldTower:
    return FieldTower(q, bound=bound)
