"""Exact arithmetic on the extended rationals and the Farey graph.

Vertices are reduced fractions a/b with b >= 0, and infinity is stored as 1/0.
Everything here works on Python ints, so nothing overflows.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from math import gcd

from sympy import factorint


class FareyError(ValueError):
    """Base class for validation failures raised by this package."""


class InvalidVertex(FareyError):
    pass


class DomainError(FareyError):
    pass


@dataclass(frozen=True)
class ExtRational:
    """A vertex of the Farey graph in canonical form."""

    num: int
    den: int

    def __post_init__(self):
        if self.den < 0:
            raise InvalidVertex(f"denominator must be nonnegative: {self.num}/{self.den}")
        if self.den == 0:
            if self.num != 1:
                raise InvalidVertex("infinity must be stored as 1/0")
        elif gcd(self.num, self.den) != 1:
            raise InvalidVertex(f"{self.num}/{self.den} is not reduced")

    @property
    def is_inf(self) -> bool:
        return self.den == 0

    def __str__(self):
        if self.den == 0:
            return "inf"
        if self.den == 1:
            return str(self.num)
        return f"{self.num}/{self.den}"

    def __repr__(self):
        return f"ExtRational({self})"


INF = ExtRational(1, 0)
ZERO = ExtRational(0, 1)
ONE = ExtRational(1, 1)


def normalize(num: int, den: int) -> ExtRational:
    if num == 0 and den == 0:
        raise InvalidVertex("0/0 is not a vertex")
    if den == 0:
        return INF
    g = gcd(num, den)
    num, den = num // g, den // g
    if den < 0:
        num, den = -num, -den
    return ExtRational(num, den)


def vertex(x) -> ExtRational:
    """Coerce an int, a string or an ExtRational to a vertex."""
    if isinstance(x, ExtRational):
        return x
    if isinstance(x, int):
        return ExtRational(x, 1)
    if isinstance(x, str):
        return parse_vertex(x)
    raise InvalidVertex(f"cannot interpret {x!r} as a vertex")


def parse_vertex(text: str) -> ExtRational:
    """Parse "a/b", "n" or "inf"."""
    s = text.strip()
    if s.lower() in ("inf", "infinity", "∞", "1/0"):
        return INF
    try:
        if "/" in s:
            a, b = s.split("/")
            return normalize(int(a), int(b))
        return ExtRational(int(s), 1)
    except ValueError as exc:
        if isinstance(exc, FareyError):
            raise
        raise InvalidVertex(f"cannot parse vertex {text!r}") from None


@dataclass(frozen=True)
class LiftVec:
    """A signed coprime pair (a, b) standing for the vertex a/b."""

    a: int
    b: int

    def __post_init__(self):
        if gcd(self.a, self.b) != 1:
            raise InvalidVertex(f"lift ({self.a}, {self.b}) is not a coprime pair")

    @property
    def vertex(self) -> ExtRational:
        return normalize(self.a, self.b)

    def __neg__(self):
        return LiftVec(-self.a, -self.b)

    def det(self, other: LiftVec) -> int:
        return self.a * other.b - self.b * other.a


def canonical_lift(x: ExtRational) -> LiftVec:
    return LiftVec(x.num, x.den)


@dataclass(frozen=True)
class Mat2Z:
    """An element of SL2(Z), stored row-major as [[p, q], [r, s]]."""

    p: int
    q: int
    r: int
    s: int

    def __post_init__(self):
        if self.p * self.s - self.q * self.r != 1:
            raise DomainError(f"determinant of {self.rows()} is not 1")

    def rows(self):
        return [[self.p, self.q], [self.r, self.s]]

    def __matmul__(self, other: Mat2Z) -> Mat2Z:
        return Mat2Z(
            self.p * other.p + self.q * other.r,
            self.p * other.q + self.q * other.s,
            self.r * other.p + self.s * other.r,
            self.r * other.q + self.s * other.s,
        )

    def __neg__(self):
        return Mat2Z(-self.p, -self.q, -self.r, -self.s)

    def inverse(self) -> Mat2Z:
        return Mat2Z(self.s, -self.q, -self.r, self.p)

    @property
    def trace(self) -> int:
        return self.p + self.s

    def apply(self, v: LiftVec) -> LiftVec:
        return LiftVec(self.p * v.a + self.q * v.b, self.r * v.a + self.s * v.b)

    def canonical(self) -> Mat2Z:
        """Representative of {A, -A} whose first nonzero entry is positive."""
        for x in (self.p, self.q, self.r, self.s):
            if x:
                return self if x > 0 else -self
        raise AssertionError("zero matrix cannot have determinant 1")

    def is_pm_identity(self) -> bool:
        return self.q == 0 and self.r == 0 and self.p == self.s


IDENTITY = Mat2Z(1, 0, 0, 1)
J = Mat2Z(0, 1, -1, 0)


def delta(x: ExtRational, y: ExtRational) -> int:
    return abs(x.num * y.den - x.den * y.num)


def is_adjacent(x: ExtRational, y: ExtRational) -> bool:
    return delta(x, y) == 1


def mediant(x: ExtRational, y: ExtRational) -> ExtRational:
    if not is_adjacent(x, y):
        raise DomainError(f"{x} and {y} are not adjacent")
    # canonical forms already have nonnegative denominators
    return normalize(x.num + y.num, x.den + y.den)


def mobius(A: Mat2Z, x: ExtRational) -> ExtRational:
    return normalize(A.p * x.num + A.q * x.den, A.r * x.num + A.s * x.den)


def edge_normalizer(u: ExtRational, v: ExtRational) -> Mat2Z:
    """The map g (up to sign) with g(u) = 0 and g(v) = inf."""
    if not is_adjacent(u, v):
        raise DomainError(f"{u} and {v} are not adjacent")
    a, b, c, d = u.num, u.den, v.num, v.den
    if a * d - b * c == -1:
        c, d = -c, -d
    return Mat2Z(-b, a, -d, c).canonical()


def _cmp_finite(x: ExtRational, y: ExtRational) -> int:
    lhs, rhs = x.num * y.den, y.num * x.den
    return (lhs > rhs) - (lhs < rhs)


def clockwise3(x: ExtRational, y: ExtRational, z: ExtRational) -> bool:
    """True when x, y, z run clockwise round the circle, i.e. cyclically decreasing."""
    if x == y or y == z or x == z:
        raise DomainError(f"clockwise3 needs distinct points, got {x}, {y}, {z}")
    return _clockwise(x, y, z, _cmp_points)


def _clockwise(x, y, z, cmp) -> bool:
    if _is_inf(x):
        return cmp(y, z) > 0
    if _is_inf(y):
        return cmp(z, x) > 0
    if _is_inf(z):
        return cmp(x, y) > 0
    xy, yz, zx = cmp(x, y), cmp(y, z), cmp(z, x)
    # exactly one ascent in the cyclic sequence means decreasing order
    return (xy > 0 and yz > 0) or (yz > 0 and zx > 0) or (zx > 0 and xy > 0)


def _is_inf(x) -> bool:
    return isinstance(x, ExtRational) and x.den == 0


def farey_parents(v: ExtRational) -> tuple[ExtRational, ExtRational]:
    """The two neighbours of a non-integer rational with smaller denominators, left one first."""
    if v.den <= 1:
        raise DomainError(f"{v} has no Farey parents")
    p, q = v.num, v.den
    d1 = pow(p, -1, q)
    left = ExtRational((p * d1 - 1) // q, d1)
    d2 = q - d1
    right = ExtRational((p * d2 + 1) // q, d2)
    return left, right


def sign_of_lin(x: int, y: int, d: int) -> int:
    """Sign of x + y*sqrt(d) for d >= 0."""
    if y == 0 or d == 0:
        return (x > 0) - (x < 0)
    sy = 1 if y > 0 else -1
    if x == 0 or (x > 0) == (y > 0):
        return sy if x == 0 else (1 if x > 0 else -1)
    # opposite signs: compare magnitudes x^2 and y^2 d
    diff = x * x - y * y * d
    if diff == 0:
        return 0
    return (1 if x > 0 else -1) if diff > 0 else sy


def squarefree_split(n: int) -> tuple[int, int]:
    """Write n > 0 as f*f*d with d squarefree; returns (f, d)."""
    f = d = 1
    for prime, exp in factorint(n).items():
        f *= prime ** (exp // 2)
        if exp % 2:
            d *= prime
    return f, d


@dataclass(frozen=True)
class QuadraticIrrational:
    """The real number (p + q*sqrt(d)) / r with d > 1 squarefree, q != 0, r > 0."""

    p: int
    q: int
    d: int
    r: int

    def __post_init__(self):
        if self.r <= 0 or self.q == 0 or self.d <= 1:
            raise DomainError("quadratic irrational needs r > 0, q != 0, d > 1")
        if gcd(gcd(self.p, self.q), self.r) != 1:
            raise DomainError("quadratic irrational is not reduced")
        if squarefree_split(self.d)[0] != 1:
            raise DomainError(f"{self.d} is not squarefree")

    @classmethod
    def make(cls, p: int, q: int, d: int, r: int) -> QuadraticIrrational:
        """Normalize (p + q*sqrt(d))/r where d > 0 need not be squarefree."""
        f, d = squarefree_split(d)
        q *= f
        if d == 1:
            raise DomainError("value is rational")
        if r < 0:
            p, q, r = -p, -q, -r
        g = gcd(gcd(p, q), r)
        return cls(p // g, q // g, d, r // g)

    def __float__(self):
        return (self.p + self.q * self.d ** 0.5) / self.r

    def __str__(self):
        op = "+" if self.q > 0 else "-"
        return f"({self.p} {op} {abs(self.q)}*sqrt({self.d}))/{self.r}"


def _cmp_points(x, y) -> int:
    """Compare two finite reals given as ExtRational or QuadraticIrrational."""
    if isinstance(x, ExtRational) and isinstance(y, ExtRational):
        return _cmp_finite(x, y)
    if isinstance(x, ExtRational):
        return -_cmp_points(y, x)
    if isinstance(y, ExtRational):
        # (p + q sqrt d)/r - a/b, with r, b > 0
        return sign_of_lin(x.p * y.den - y.num * x.r, x.q * y.den, x.d)
    if x.d == y.d:
        return sign_of_lin(x.p * y.r - y.p * x.r, x.q * y.r - y.q * x.r, x.d)
    # x - y = (X + A sqrt(dx) - B sqrt(dy)) / (rx ry)
    X = x.p * y.r - y.p * x.r
    A, B = x.q * y.r, y.q * x.r
    t = _sign_two_roots(A, x.d, -B, y.d)
    if X == 0 or t == 0:
        return t if X == 0 else (1 if X > 0 else -1)
    if (X > 0) == (t > 0):
        return t
    # compare X^2 against (A sqrt(dx) - B sqrt(dy))^2 = K + 2 A (-B) sqrt(dx dy)
    K = A * A * x.d + B * B * y.d
    s = sign_of_lin(X * X - K, 2 * A * B, x.d * y.d)
    return (1 if X > 0 else -1) if s > 0 else t


def _sign_two_roots(a: int, da: int, b: int, db: int) -> int:
    """Sign of a*sqrt(da) + b*sqrt(db)."""
    sa, sb = (a > 0) - (a < 0), (b > 0) - (b < 0)
    if sa == 0 or sb == 0 or sa == sb:
        return sa or sb
    diff = a * a * da - b * b * db
    return sa if diff > 0 else (sb if diff < 0 else 0)


def clockwise_points(x, y, z) -> bool:
    """clockwise3 extended to quadratic irrational points."""
    return _clockwise(x, y, z, _cmp_points)


def cmp_points(x, y) -> int:
    return _cmp_points(x, y)


def clockwise_key(start: ExtRational):
    """Sort key placing distinct vertices in clockwise order after start."""

    def cmp(x, y):
        if x == y:
            return 0
        if x == start:
            return -1
        if y == start:
            return 1
        return -1 if clockwise3(start, x, y) else 1

    return functools.cmp_to_key(cmp)
