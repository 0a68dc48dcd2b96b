"""Exact scalars for spectra of symmetric integer matrices.

Eigenvalues are represented as (a + b*sqrt(delta))/2 with integer a, b and
square-free delta, which covers integers (b = 0, delta = 1) and real
quadratic integers. A float fallback variant carries spectra the exact
machinery cannot factor (irreducible cubic or higher factors).

The module also provides exact times q*pi/sqrt(delta) and phase factors
exp(-i*t*theta), with the arithmetic needed to decide when two phases agree
exactly, agree up to sign, or are roots of unity.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import NonPositiveDiscriminant


def squarefree_kernel(d: int) -> tuple[int, int]:
    """Split d > 0 into k^2 * delta with delta square-free; returns (delta, k)."""
    if d <= 0:
        raise NonPositiveDiscriminant(
            f"discriminant {d} is not positive; a symmetric matrix has a real spectrum"
        )
    delta, k = 1, 1
    n = d
    p = 2
    while p * p <= n:
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            k *= p ** (e // 2)
            if e % 2:
                delta *= p
        p += 1 if p == 2 else 2
    delta *= n  # leftover factor is prime (or 1)
    return delta, k


def _sign_of_quad(da: int, db: int, delta: int) -> int:
    """Exact sign of da + db*sqrt(delta) for square-free delta >= 1."""
    if db == 0:
        return (da > 0) - (da < 0)
    if da == 0:
        return (db > 0) - (db < 0)
    if da > 0 and db > 0:
        return 1
    if da < 0 and db < 0:
        return -1
    # opposite signs: compare |da| with |db|*sqrt(delta); ties are impossible
    # for delta square-free > 1, and delta == 1 reduces to integers.
    lhs, rhs = da * da, db * db * delta
    if lhs == rhs:
        return (da + db > 0) - (da + db < 0)  # delta == 1 only
    return (da > 0) - (da < 0) if lhs > rhs else (db > 0) - (db < 0)


@dataclass(frozen=True)
class ExactScalar:
    """One eigenvalue: exact (a + b*sqrt(delta))/2 or a float fallback.

    Integers use b = 0, delta = 1 (so a is even). Quadratic values keep
    b != 0 and square-free delta > 1. Float fallbacks store the value in
    `approx` and leave the exact fields zeroed.
    """

    a: int = 0
    b: int = 0
    delta: int = 1
    approx: float | None = None
    err: float = 0.0  # error bound, meaningful for float fallbacks only

    @classmethod
    def integer(cls, z: int) -> "ExactScalar":
        return cls(a=2 * int(z), b=0, delta=1)

    @classmethod
    def quadratic(cls, a: int, b: int, delta: int) -> "ExactScalar":
        if b == 0:
            raise ValueError("quadratic scalar requires b != 0; use integer()")
        if delta <= 1:
            raise ValueError("quadratic scalar requires square-free delta > 1")
        d, k = squarefree_kernel(delta)
        if d != delta or k != 1:
            raise ValueError(f"delta {delta} is not square-free")
        if delta % 4 == 1:
            if (a - b) % 2 != 0:
                raise ValueError(
                    f"(({a}) + ({b})*sqrt({delta}))/2 is not an algebraic integer"
                )
        elif a % 2 != 0 or b % 2 != 0:
            raise ValueError(
                f"(({a}) + ({b})*sqrt({delta}))/2 is not an algebraic integer"
            )
        return cls(a=int(a), b=int(b), delta=int(delta))

    @classmethod
    def from_float(cls, x: float, err: float = 0.0) -> "ExactScalar":
        return cls(approx=float(x), err=float(err))

    @property
    def is_exact(self) -> bool:
        return self.approx is None

    @property
    def is_integer(self) -> bool:
        return self.is_exact and self.b == 0

    @property
    def as_int(self) -> int:
        if not self.is_integer:
            raise ValueError(f"{self} is not an integer")
        return self.a // 2

    @property
    def value(self) -> float:
        if self.approx is not None:
            return self.approx
        return (self.a + self.b * math.sqrt(self.delta)) / 2.0

    def half_pair(self) -> tuple[Fraction, Fraction]:
        """Value as r + s*sqrt(delta) with rational r, s."""
        return Fraction(self.a, 2), Fraction(self.b, 2)

    def diff_in_field(self, other: "ExactScalar") -> tuple[int, int, int] | None:
        """self - other as (da, db, delta) meaning (da + db*sqrt(delta))/2.

        Returns None when either side is a float fallback or the two values
        live in different quadratic fields (no common sqrt).
        """
        if not (self.is_exact and other.is_exact):
            return None
        if self.b == 0 and other.b == 0:
            return self.a - other.a, 0, 1
        if self.b != 0 and other.b != 0 and self.delta != other.delta:
            return None
        delta = self.delta if self.b != 0 else other.delta
        return self.a - other.a, self.b - other.b, delta

    def __lt__(self, other: "ExactScalar") -> bool:
        d = self.diff_in_field(other)
        if d is None:
            # cross-field or float: double comparison; exact ties cannot
            # occur between distinct eigenvalues at the sizes we target.
            return self.value < other.value
        da, db, delta = d
        return _sign_of_quad(da, db, delta) < 0

    def __le__(self, other: "ExactScalar") -> bool:
        return self == other or self < other

    def __gt__(self, other: "ExactScalar") -> bool:
        return other < self

    def __ge__(self, other: "ExactScalar") -> bool:
        return self == other or other < self

    def __str__(self) -> str:
        if self.approx is not None:
            return repr(self.approx)
        if self.b == 0:
            return str(self.a // 2)
        return f"({self.a}{self.b:+d}*sqrt({self.delta}))/2"

    __repr__ = __str__


@dataclass(frozen=True)
class QF:
    """Element x + y*sqrt(d) of the real quadratic field Q(sqrt(d))."""

    x: Fraction
    y: Fraction
    d: int

    @classmethod
    def of(cls, value, d: int) -> "QF":
        if isinstance(value, QF):
            if value.y != 0 and value.d != d:
                raise ValueError(f"cannot coerce sqrt({value.d}) element into Q(sqrt({d}))")
            return cls(value.x, value.y, d)
        return cls(Fraction(value), Fraction(0), d)

    @classmethod
    def from_scalar(cls, s: ExactScalar, d: int) -> "QF":
        if not s.is_exact:
            raise ValueError("cannot lift a float fallback into a quadratic field")
        if s.b != 0 and s.delta != d:
            raise ValueError(f"{s} does not live in Q(sqrt({d}))")
        r, q = s.half_pair()
        return cls(r, q, d)

    def _lift(self, other) -> "QF":
        if isinstance(other, QF):
            if other.d != self.d and other.y != 0 and self.y != 0:
                raise ValueError("mixed quadratic fields")
            return QF(other.x, other.y, self.d)
        return QF(Fraction(other), Fraction(0), self.d)

    def __add__(self, other) -> "QF":
        o = self._lift(other)
        return QF(self.x + o.x, self.y + o.y, self.d)

    __radd__ = __add__

    def __neg__(self) -> "QF":
        return QF(-self.x, -self.y, self.d)

    def __sub__(self, other) -> "QF":
        return self + (-self._lift(other))

    def __rsub__(self, other) -> "QF":
        return self._lift(other) + (-self)

    def __mul__(self, other) -> "QF":
        o = self._lift(other)
        return QF(self.x * o.x + self.d * self.y * o.y, self.x * o.y + self.y * o.x, self.d)

    __rmul__ = __mul__

    def inverse(self) -> "QF":
        n = self.x * self.x - self.d * self.y * self.y
        if n == 0:
            raise ZeroDivisionError("zero element of quadratic field")
        return QF(self.x / n, -self.y / n, self.d)

    def __truediv__(self, other) -> "QF":
        return self * self._lift(other).inverse()

    def conj(self) -> "QF":
        return QF(self.x, -self.y, self.d)

    @property
    def is_zero(self) -> bool:
        return self.x == 0 and self.y == 0

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            return self.y == 0 and self.x == other
        if isinstance(other, QF):
            if self.y == 0 and other.y == 0:
                return self.x == other.x
            return self.d == other.d and self.x == other.x and self.y == other.y
        return NotImplemented

    def __float__(self) -> float:
        return float(self.x) + float(self.y) * math.sqrt(self.d)

    def __str__(self) -> str:
        if self.y == 0:
            return str(self.x)
        return f"{self.x}+{self.y}*sqrt({self.d})"


@dataclass(frozen=True)
class ExactTime:
    """The time q*pi/sqrt(delta) for rational q and square-free delta."""

    q: Fraction
    delta: int = 1

    def __post_init__(self):
        object.__setattr__(self, "q", Fraction(self.q))
        d, k = squarefree_kernel(self.delta)
        if d != self.delta or k != 1:
            raise ValueError(f"delta {self.delta} is not square-free")

    @property
    def value(self) -> float:
        return float(self.q) * math.pi / math.sqrt(self.delta)

    def scaled(self, factor) -> "ExactTime":
        return ExactTime(self.q * Fraction(factor), self.delta)

    def ratio(self, other: "ExactTime") -> Fraction | None:
        """self/other as an exact rational, or None if incommensurable."""
        if other.q == 0:
            return None
        if self.delta != other.delta:
            return None if self.q != 0 else Fraction(0)
        return self.q / other.q

    def __str__(self) -> str:
        num, den = self.q.numerator, self.q.denominator
        if num == 0:
            return "0"
        sign = "-" if num < 0 else ""
        num = abs(num)
        top = "pi" if num == 1 else f"{num}*pi"
        if self.delta == 1:
            bottom = "" if den == 1 else f"/{den}"
        elif den == 1:
            bottom = f"/sqrt({self.delta})"
        else:
            bottom = f"/({den}*sqrt({self.delta}))"
        return sign + top + bottom

    __repr__ = __str__


def _phase_exponent(theta: ExactScalar, time: ExactTime) -> Fraction | None:
    """x with exp(-i*time*theta) = exp(-i*pi*x), when t*theta/pi is rational."""
    if not theta.is_exact:
        return None
    r, s = theta.half_pair()  # theta = r + s*sqrt(delta_theta)
    # t*theta/pi = q*(r + s*sqrt(dt))/sqrt(dtau)
    if theta.b == 0:
        if time.delta == 1:
            return time.q * r
        return Fraction(0) if r == 0 else None
    if theta.delta != time.delta:
        return None
    # q*r/sqrt(d) + q*s : rational iff r == 0
    if r != 0:
        return None
    return time.q * s


@dataclass(frozen=True)
class PhaseFactor:
    """A unimodular phase, exact when it comes from (theta, time).

    The phase is (-1)^negate * exp(-i*time*theta). When time*theta/pi is
    rational the phase is a root of unity and `exponent` records x with
    phase = exp(-i*pi*x), reduced modulo 2 into [0, 2).
    """

    theta: ExactScalar | None = None
    time: ExactTime | None = None
    negate: bool = False
    _exponent: Fraction | None = None  # explicit exponent for synthetic phases

    @classmethod
    def from_theta_time(cls, theta: ExactScalar, time: ExactTime, negate: bool = False) -> "PhaseFactor":
        return cls(theta=theta, time=time, negate=negate)

    @classmethod
    def from_exponent(cls, x: Fraction) -> "PhaseFactor":
        return cls(_exponent=Fraction(x) % 2)

    @property
    def exponent(self) -> Fraction | None:
        if self._exponent is not None:
            return self._exponent
        x = _phase_exponent(self.theta, self.time)
        if x is None:
            return None
        if self.negate:
            x += 1
        return x % 2

    @property
    def complex_value(self) -> complex:
        x = self.exponent
        if x is not None:
            return cmath.exp(-1j * math.pi * float(x))
        v = cmath.exp(-1j * self.time.value * self.theta.value)
        return -v if self.negate else v

    def order(self) -> int | None:
        """p such that the phase is a primitive p-th root of unity, else None."""
        x = self.exponent
        if x is None:
            return None
        if x == 0:
            return 1
        u, v = x.numerator, x.denominator
        # phase = exp(-2i*pi*u/(2v)); order = 2v / gcd(u, 2v), u already coprime to v
        return 2 * v // math.gcd(u, 2 * v)

    def ratio_exponent(self, other: "PhaseFactor") -> Fraction | None:
        """x with self/other = exp(-i*pi*x) mod 2, or None if not exactly known."""
        xs, xo = self.exponent, other.exponent
        if xs is not None and xo is not None:
            return (xs - xo) % 2
        if (
            self.theta is not None
            and other.theta is not None
            and self.time is not None
            and self.time == other.time
        ):
            d = self.theta.diff_in_field(other.theta)
            if d is None:
                return None
            da, db, delta = d
            diff = ExactScalar(a=da, b=db, delta=delta)
            x = _phase_exponent(diff, self.time)
            if x is None:
                return None
            if self.negate != other.negate:
                x += 1
            return x % 2
        return None

    def __mul__(self, other: "PhaseFactor") -> "PhaseFactor":
        xs, xo = self.exponent, other.exponent
        if xs is not None and xo is not None:
            return PhaseFactor.from_exponent(xs + xo)
        raise ValueError("can only multiply root-of-unity phases exactly")

    def __pow__(self, k: int) -> "PhaseFactor":
        x = self.exponent
        if x is None:
            raise ValueError("can only power root-of-unity phases exactly")
        return PhaseFactor.from_exponent(x * k)

    def inverse(self) -> "PhaseFactor":
        x = self.exponent
        if x is not None:
            return PhaseFactor.from_exponent(-x)
        return PhaseFactor.from_theta_time(self.theta, self.time.scaled(-1), self.negate)

    def exact_str(self) -> str:
        x = self.exponent
        if x is None:
            neg = "-" if self.negate else ""
            return f"{neg}exp(-i*({self.time})*({self.theta}))"
        if x == 0:
            return "1"
        if x == 1:
            return "-1"
        if x == Fraction(1, 2):
            return "-i"
        if x == Fraction(3, 2):
            return "i"
        return f"exp(-i*pi*{x})"

    def __str__(self) -> str:
        return self.exact_str()

    __repr__ = __str__


def gcd_many(values) -> int:
    g = 0
    for v in values:
        g = math.gcd(g, abs(int(v)))
    return g
