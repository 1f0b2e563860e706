"""Exact arithmetic in the golden field Q(phi) and the cyclotomic ring Z[zeta].

`GoldenNum` is a number a + b*phi with rational a, b, reduced by the identity
phi**2 = phi + 1.  `CycloPoint` is a planar point written as an integer
combination of fifth roots of unity, c0 + c1*zeta + c2*zeta**2 + c3*zeta**3
with zeta = exp(2*pi*i/5); the basis is closed under the tile operations
because zeta**4 = -(1 + zeta + zeta**2 + zeta**3).

All predicates (comparison, orientation, lengths) are decided exactly.
Floating point enters only through the embedding helpers at the bottom,
which map ring points to R**2 for rendering and statistics.
"""

from __future__ import annotations

from fractions import Fraction
from functools import total_ordering

Rational = int | Fraction

_HALF = Fraction(1, 2)


@total_ordering
class GoldenNum:
    """Element a + b*phi of Q(phi)."""

    __slots__ = ("_a", "_b")

    def __init__(self, a: Rational = 0, b: Rational = 0) -> None:
        self._a = Fraction(a)
        self._b = Fraction(b)

    @property
    def a(self) -> Fraction:
        return self._a

    @property
    def b(self) -> Fraction:
        return self._b

    @staticmethod
    def _coerce(x: object) -> "GoldenNum | None":
        if isinstance(x, GoldenNum):
            return x
        if isinstance(x, (int, Fraction)):
            return GoldenNum(x)
        return None

    def __add__(self, other: object) -> "GoldenNum":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GoldenNum(self._a + o._a, self._b + o._b)

    __radd__ = __add__

    def __sub__(self, other: object) -> "GoldenNum":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GoldenNum(self._a - o._a, self._b - o._b)

    def __rsub__(self, other: object) -> "GoldenNum":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __neg__(self) -> "GoldenNum":
        return GoldenNum(-self._a, -self._b)

    def __mul__(self, other: object) -> "GoldenNum":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        # (a1 + b1 phi)(a2 + b2 phi) with phi**2 = phi + 1
        return GoldenNum(
            self._a * o._a + self._b * o._b,
            self._a * o._b + self._b * o._a + self._b * o._b,
        )

    __rmul__ = __mul__

    def conjugate(self) -> "GoldenNum":
        """Galois conjugate, phi -> 1 - phi (the other root of x**2 = x + 1)."""
        return GoldenNum(self._a + self._b, -self._b)

    def norm(self) -> Fraction:
        """Field norm self * self.conjugate(), a rational number."""
        return self._a * self._a + self._a * self._b - self._b * self._b

    def inverse(self) -> "GoldenNum":
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("inverse of zero in Q(phi)")
        return GoldenNum((self._a + self._b) / n, -self._b / n)

    def __truediv__(self, other: object) -> "GoldenNum":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other: object) -> "GoldenNum":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, k: int) -> "GoldenNum":
        if not isinstance(k, int):
            return NotImplemented
        base = self if k >= 0 else self.inverse()
        result = GoldenNum(1)
        for _ in range(abs(k)):
            result = result * base
        return result

    def sign(self) -> int:
        """Exact sign of a + b*phi, computed without floating point.

        Writes the value as (u + v*sqrt(5))/2 with u = 2a + b, v = b and
        compares u**2 against 5*v**2 when the two terms disagree in sign.
        """
        u = 2 * self._a + self._b
        v = self._b
        if v == 0:
            return (u > 0) - (u < 0)
        if u == 0:
            return 1 if v > 0 else -1
        if u > 0 and v > 0:
            return 1
        if u < 0 and v < 0:
            return -1
        if u > 0:  # v < 0
            return 1 if u * u > 5 * v * v else -1
        return 1 if 5 * v * v > u * u else -1  # u < 0 < v

    def __abs__(self) -> "GoldenNum":
        return -self if self.sign() < 0 else self

    def __eq__(self, other: object) -> bool:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self._a == o._a and self._b == o._b

    def __lt__(self, other: object) -> bool:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return (self - o).sign() < 0

    def __hash__(self) -> int:
        return hash((self._a, self._b))

    def __float__(self) -> float:
        return float(self._a) + float(self._b) * PHI_FLOAT

    def __repr__(self) -> str:
        return f"GoldenNum({self._a!r}, {self._b!r})"

    def __str__(self) -> str:
        return f"{self._a} + {self._b}*phi"


def golden_compare(x: GoldenNum, y: GoldenNum) -> int:
    """Exact three-way comparison: -1, 0, or +1 as x <, ==, > y."""
    return (x - y).sign()


PHI = GoldenNum(0, 1)
INV_PHI = GoldenNum(-1, 1)  # 1/phi = phi - 1
GOLDEN_ZERO = GoldenNum(0)
GOLDEN_ONE = GoldenNum(1)

# cos(72 deg) = (phi - 1)/2 and cos(144 deg) = -phi/2; the sine analogue is
# sin(144 deg) = sin(72 deg)/phi.  These drive the exact dot/cross products.
_COS72 = GoldenNum(-_HALF, _HALF)
_COS144 = GoldenNum(0, -_HALF)


class CycloPoint:
    """Planar point with integer coordinates over {1, zeta, zeta**2, zeta**3}."""

    __slots__ = ("_c",)

    def __init__(self, c0: int = 0, c1: int = 0, c2: int = 0, c3: int = 0) -> None:
        for c in (c0, c1, c2, c3):
            if not isinstance(c, int):
                raise TypeError(f"CycloPoint coefficients must be ints, got {c!r}")
        self._c = (c0, c1, c2, c3)

    @property
    def coeffs(self) -> tuple[int, int, int, int]:
        return self._c

    @classmethod
    def zero(cls) -> "CycloPoint":
        return cls()

    @classmethod
    def one(cls) -> "CycloPoint":
        return cls(1)

    @classmethod
    def zeta(cls, k: int = 1) -> "CycloPoint":
        """The fifth root of unity zeta**k."""
        k %= 5
        if k < 4:
            coeffs = [0, 0, 0, 0]
            coeffs[k] = 1
            return cls(*coeffs)
        return cls(-1, -1, -1, -1)  # zeta**4

    @classmethod
    def tenth_root(cls, k: int = 1) -> "CycloPoint":
        """The tenth root of unity exp(i*k*36 deg) = (-zeta**3)**k."""
        w = cls(0, 0, 0, -1)
        result = cls.one()
        for _ in range(k % 10):
            result = result * w
        return result

    def __add__(self, other: "CycloPoint") -> "CycloPoint":
        if not isinstance(other, CycloPoint):
            return NotImplemented
        a, b = self._c, other._c
        return CycloPoint(a[0] + b[0], a[1] + b[1], a[2] + b[2], a[3] + b[3])

    def __sub__(self, other: "CycloPoint") -> "CycloPoint":
        if not isinstance(other, CycloPoint):
            return NotImplemented
        a, b = self._c, other._c
        return CycloPoint(a[0] - b[0], a[1] - b[1], a[2] - b[2], a[3] - b[3])

    def __neg__(self) -> "CycloPoint":
        return CycloPoint(*(-c for c in self._c))

    def __mul__(self, other: "CycloPoint | int") -> "CycloPoint":
        if isinstance(other, int):
            return CycloPoint(*(c * other for c in self._c))
        if not isinstance(other, CycloPoint):
            return NotImplemented
        raw = [0] * 7
        for i, a in enumerate(self._c):
            if a:
                for j, b in enumerate(other._c):
                    raw[i + j] += a * b
        # fold zeta**5 = 1, then substitute zeta**4 = -(1+zeta+zeta**2+zeta**3)
        k4 = raw[4]
        return CycloPoint(
            raw[0] + raw[5] - k4,
            raw[1] + raw[6] - k4,
            raw[2] - k4,
            raw[3] - k4,
        )

    def __rmul__(self, other: int) -> "CycloPoint":
        if isinstance(other, int):
            return self * other
        return NotImplemented

    def rotate(self, k: int = 1) -> "CycloPoint":
        """Rotate by k * 72 degrees (multiply by zeta**k)."""
        p = self
        for _ in range(k % 5):
            c = p._c
            p = CycloPoint(-c[3], c[0] - c[3], c[1] - c[3], c[2] - c[3])
        return p

    def times_phi(self) -> "CycloPoint":
        """Scale by phi = -zeta**2 - zeta**3, staying in the ring."""
        return self * _PHI_RING

    def times_inv_phi(self) -> "CycloPoint":
        """Scale by 1/phi = zeta + zeta**4, staying in the ring."""
        return self * _INV_PHI_RING

    def conj(self) -> "CycloPoint":
        """Complex conjugate (mirror across the real axis)."""
        c = self._c
        return CycloPoint(c[0] - c[1], -c[1], c[3] - c[1], c[2] - c[1])

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, CycloPoint):
            return NotImplemented
        return self._c == other._c

    def __hash__(self) -> int:
        return hash(self._c)

    def __bool__(self) -> bool:
        return self._c != (0, 0, 0, 0)

    def __repr__(self) -> str:
        return f"CycloPoint{self._c}"


_PHI_RING = CycloPoint(0, 0, -1, -1)
_INV_PHI_RING = CycloPoint(-1, 0, -1, -1)

# Coefficient matrices of multiplication by phi, 1/phi and the 36-degree
# rotation -zeta**3, acting on coefficient row vectors: row i is the image of
# basis element zeta**i.  The vectorized tiling code lifts these to numpy.
MUL_BY_PHI = ((0, 0, -1, -1), (1, 1, 1, 0), (0, 1, 1, 1), (-1, -1, 0, 0))
MUL_BY_INV_PHI = ((-1, 0, -1, -1), (1, 0, 1, 0), (0, 1, 0, 1), (-1, -1, 0, -1))
MUL_BY_OMEGA = ((0, 0, 0, -1), (1, 1, 1, 1), (-1, 0, 0, 0), (0, -1, 0, 0))


def dot(p: CycloPoint, q: CycloPoint) -> GoldenNum:
    """Exact Euclidean dot product of two ring points, an element of Q(phi).

    cos(72k deg) for k = 0..3 lies in {1, (phi-1)/2, -phi/2, -phi/2}, so the
    bilinear expansion over the basis stays inside the golden field.
    """
    s = [0] * 7  # s[t+3] accumulates u_j * v_k over k - j = t
    for j, a in enumerate(p.coeffs):
        if a:
            for k, b in enumerate(q.coeffs):
                s[k - j + 3] += a * b
    return (
        GoldenNum(s[3])
        + _COS72 * (s[2] + s[4])
        + _COS144 * (s[0] + s[1] + s[5] + s[6])
    )


def cross_s72(p: CycloPoint, q: CycloPoint) -> GoldenNum:
    """Exact cross product p x q divided by sin(72 deg).

    sin(72k deg)/sin(72 deg) lies in {0, +-1, +-1/phi}, so the quotient is an
    element of Q(phi) whose sign equals the sign of the cross product.
    """
    s = [0] * 7
    for j, a in enumerate(p.coeffs):
        if a:
            for k, b in enumerate(q.coeffs):
                s[k - j + 3] += a * b
    return (
        GoldenNum(s[4] - s[2])
        + INV_PHI * (s[5] - s[1])
        - INV_PHI * (s[6] - s[0])
    )


def squared_length(p: CycloPoint) -> GoldenNum:
    """Exact squared Euclidean length of a ring point."""
    return dot(p, p)


def orientation(a: CycloPoint, b: CycloPoint, c: CycloPoint) -> int:
    """Exact orientation of the triangle (a, b, c): +1 ccw, -1 cw, 0 degenerate."""
    return cross_s72(b - a, c - a).sign()


# Embedding constants, frozen from a 50-digit evaluation of cos/sin(72k deg).
PHI_FLOAT = float("1.6180339887498948482045868343656381177")
SIN72 = float("0.95105651629515357211643933337938214341")
SIN36 = float("0.5877852522924731291687059546390727686")
EMBED_COS = (
    1.0,
    float("0.30901699437494742410229341718281905886"),
    float("-0.80901699437494742410229341718281905886"),
    float("-0.80901699437494742410229341718281905886"),
)
EMBED_SIN = (
    0.0,
    SIN72,
    SIN36,
    float("-0.5877852522924731291687059546390727686"),
)


def embed(p: CycloPoint, scale_exp: int = 0) -> tuple[float, float]:
    """Map a ring point to R**2, applying the patch scale factor phi**(-scale_exp)."""
    c = p.coeffs
    x = sum(ci * cos for ci, cos in zip(c, EMBED_COS))
    y = sum(ci * sin for ci, sin in zip(c, EMBED_SIN))
    if scale_exp:
        f = PHI_FLOAT ** (-scale_exp)
        return (x * f, y * f)
    return (x, y)
