"""Exact scalar arithmetic for three interchangeable skew-field backends.

The three backends are

* :class:`Rational` -- arbitrary-precision rationals (commutative),
* :class:`PrimeFieldElement` -- integers mod a prime p (commutative, finite),
* :class:`RationalQuaternion` -- quaternions with rational coefficients,
  the canonical desk-scale *non-commutative* skew field.

Every operation is exact; floating point is banned from the core, so all
comparisons are exact structural equality on canonical forms.  Values are
immutable and safe to share.  Scalars from different backends never mix:
any cross-backend operation raises :class:`BackendMismatchError`.  Plain
``int`` operands are accepted everywhere (the integers embed canonically
in any skew field).

Rational values are stored as ``gmpy2.mpq`` when available (exact and
roughly 15x faster) and fall back to :class:`fractions.Fraction`; both
keep gcd-reduced canonical form with a positive denominator.
"""

from __future__ import annotations

from abc import ABC, abstractmethod
from fractions import Fraction
from typing import Iterator, Union

from .errors import BackendMismatchError, ZeroInverseError

try:
    from gmpy2 import mpq as _RAT
except ImportError:  # pragma: no cover - exercised only without gmpy2
    _RAT = Fraction

RationalLike = Union[int, Fraction]


def _to_rat(value, denominator=None):
    """Build the internal rational type, rejecting floats (exactness ban)."""
    if isinstance(value, float) or isinstance(denominator, float):
        raise TypeError("floating point is not allowed in exact scalars")
    if denominator is None:
        return _RAT(value)
    return _RAT(value, denominator)


class SkewScalar(ABC):
    """An element of the active skew field.

    Concrete subclasses implement ``+``, unary ``-``, ``*``, ``inverse``,
    ``conjugate``, ``is_zero`` and structural equality.  Subtraction is
    derived.  Multiplication is NOT assumed commutative anywhere.
    """

    __slots__ = ()

    @abstractmethod
    def __add__(self, other): ...

    @abstractmethod
    def __neg__(self): ...

    @abstractmethod
    def __mul__(self, other): ...

    @abstractmethod
    def inverse(self):
        """Two-sided multiplicative inverse; raises ZeroInverseError on 0."""

    @abstractmethod
    def conjugate(self):
        """The standard involution: quaternion conjugation, identity on
        commutative backends.  Satisfies conj(a*b) = conj(b)*conj(a)."""

    @abstractmethod
    def is_zero(self) -> bool: ...

    def __sub__(self, other):
        coerced = self._coerce(other)
        if coerced is None:
            return NotImplemented
        return self + (-coerced)

    def __rsub__(self, other):
        coerced = self._coerce(other)
        if coerced is None:
            return NotImplemented
        return coerced + (-self)

    def __radd__(self, other):
        return self.__add__(other)

    def __rmul__(self, other):
        coerced = self._coerce(other)
        if coerced is None:
            return NotImplemented
        return coerced * self

    def __bool__(self) -> bool:
        return not self.is_zero()

    @abstractmethod
    def _coerce(self, other):
        """Return ``other`` as a same-backend scalar, ``None`` if alien.

        Raises BackendMismatchError when ``other`` is a scalar of a
        different backend (mixing is a hard error, never a silent cast).
        """


def _reject_cross_backend(own, other) -> None:
    if isinstance(other, SkewScalar):
        raise BackendMismatchError(
            f"cannot combine {own.__class__.__name__} with "
            f"{other.__class__.__name__} value {other!r}"
        )


class Rational(SkewScalar):
    """An exact rational number in canonical reduced form.

    Invariants: denominator > 0, gcd(|numerator|, denominator) = 1, the
    canonical zero is 0/1.  Canonicalization happens at construction, so
    ``Rational(2, 4) == Rational(1, 2)`` structurally.
    """

    __slots__ = ("_v",)

    def __init__(self, numerator: RationalLike = 0, denominator=None):
        if isinstance(numerator, Rational):
            numerator = numerator._v
        object.__setattr__(self, "_v", _to_rat(numerator, denominator))

    @classmethod
    def _wrap(cls, raw) -> "Rational":
        out = object.__new__(cls)
        object.__setattr__(out, "_v", raw)
        return out

    @property
    def numerator(self) -> int:
        return int(self._v.numerator)

    @property
    def denominator(self) -> int:
        return int(self._v.denominator)

    def as_fraction(self) -> Fraction:
        return Fraction(self.numerator, self.denominator)

    def _coerce(self, other):
        if isinstance(other, Rational):
            return other
        if isinstance(other, int):
            return Rational._wrap(_to_rat(other))
        _reject_cross_backend(self, other)
        return None

    def __add__(self, other):
        coerced = self._coerce(other)
        if coerced is None:
            return NotImplemented
        return Rational._wrap(self._v + coerced._v)

    def __neg__(self):
        return Rational._wrap(-self._v)

    def __mul__(self, other):
        coerced = self._coerce(other)
        if coerced is None:
            return NotImplemented
        return Rational._wrap(self._v * coerced._v)

    def inverse(self) -> "Rational":
        if not self._v:
            raise ZeroInverseError("0 has no multiplicative inverse")
        return Rational._wrap(1 / self._v)

    def conjugate(self) -> "Rational":
        return self

    def is_zero(self) -> bool:
        return not self._v

    def __eq__(self, other) -> bool:
        if isinstance(other, Rational):
            return self._v == other._v
        if isinstance(other, int):
            return self._v == other
        _reject_cross_backend(self, other)
        return NotImplemented

    def __hash__(self):
        return hash(self._v)

    def __str__(self) -> str:
        return str(self._v)

    def __repr__(self) -> str:
        return f"Rational({self._v})"


class PrimeFieldElement(SkewScalar):
    """A residue in GF(p), 0 <= residue < p, with p prime.

    The modulus is part of the value's backend identity: elements of
    GF(5) and GF(7) never mix.
    """

    __slots__ = ("residue", "modulus")

    def __init__(self, residue: int, modulus: int):
        if not isinstance(residue, int) or isinstance(residue, bool):
            raise TypeError("residue must be an int")
        if not isinstance(modulus, int) or modulus < 2:
            raise ValueError(f"modulus must be an integer >= 2, got {modulus!r}")
        object.__setattr__(self, "modulus", modulus)
        object.__setattr__(self, "residue", residue % modulus)

    def _coerce(self, other):
        if isinstance(other, PrimeFieldElement):
            if other.modulus != self.modulus:
                raise BackendMismatchError(
                    f"GF({self.modulus}) and GF({other.modulus}) elements cannot mix"
                )
            return other
        if isinstance(other, int):
            return PrimeFieldElement(other, self.modulus)
        _reject_cross_backend(self, other)
        return None

    def __add__(self, other):
        coerced = self._coerce(other)
        if coerced is None:
            return NotImplemented
        return PrimeFieldElement(self.residue + coerced.residue, self.modulus)

    def __neg__(self):
        return PrimeFieldElement(-self.residue, self.modulus)

    def __mul__(self, other):
        coerced = self._coerce(other)
        if coerced is None:
            return NotImplemented
        return PrimeFieldElement(self.residue * coerced.residue, self.modulus)

    def inverse(self) -> "PrimeFieldElement":
        if self.residue == 0:
            raise ZeroInverseError(f"0 mod {self.modulus} has no inverse")
        return PrimeFieldElement(pow(self.residue, -1, self.modulus), self.modulus)

    def conjugate(self) -> "PrimeFieldElement":
        return self

    def is_zero(self) -> bool:
        return self.residue == 0

    def __eq__(self, other) -> bool:
        if isinstance(other, PrimeFieldElement):
            if other.modulus != self.modulus:
                raise BackendMismatchError(
                    f"GF({self.modulus}) and GF({other.modulus}) elements cannot mix"
                )
            return self.residue == other.residue
        if isinstance(other, int):
            return self.residue == other % self.modulus
        _reject_cross_backend(self, other)
        return NotImplemented

    def __hash__(self):
        return hash((self.residue, self.modulus))

    def __str__(self) -> str:
        return f"{self.residue} mod {self.modulus}"

    def __repr__(self) -> str:
        return f"PrimeFieldElement({self.residue}, {self.modulus})"


class RationalQuaternion(SkewScalar):
    """A quaternion w + x*i + y*j + z*k with exact rational coefficients.

    Equality is componentwise on canonical rationals.  The norm
    w^2 + x^2 + y^2 + z^2 vanishes only at zero, which guarantees every
    nonzero element is invertible: q^-1 = conjugate(q) / norm(q), exactly.
    Multiplication follows the Hamilton table (i*j = k, j*i = -k, ...)
    and is the package's working witness of non-commutativity.
    """

    __slots__ = ("w", "x", "y", "z")

    def __init__(self, w: RationalLike = 0, x: RationalLike = 0,
                 y: RationalLike = 0, z: RationalLike = 0):
        for name, component in (("w", w), ("x", x), ("y", y), ("z", z)):
            if isinstance(component, Rational):
                component = component._v
            object.__setattr__(self, name, _to_rat(component))

    @classmethod
    def _wrap(cls, w, x, y, z) -> "RationalQuaternion":
        out = object.__new__(cls)
        object.__setattr__(out, "w", w)
        object.__setattr__(out, "x", x)
        object.__setattr__(out, "y", y)
        object.__setattr__(out, "z", z)
        return out

    def components(self):
        """The (w, x, y, z) coefficients as exact rationals."""
        return (self.w, self.x, self.y, self.z)

    def _coerce(self, other):
        if isinstance(other, RationalQuaternion):
            return other
        if isinstance(other, int):
            zero = _to_rat(0)
            return RationalQuaternion._wrap(_to_rat(other), zero, zero, zero)
        _reject_cross_backend(self, other)
        return None

    def __add__(self, other):
        coerced = self._coerce(other)
        if coerced is None:
            return NotImplemented
        return RationalQuaternion._wrap(
            self.w + coerced.w, self.x + coerced.x,
            self.y + coerced.y, self.z + coerced.z,
        )

    def __neg__(self):
        return RationalQuaternion._wrap(-self.w, -self.x, -self.y, -self.z)

    def __mul__(self, other):
        coerced = self._coerce(other)
        if coerced is None:
            return NotImplemented
        a, b, c, d = self.w, self.x, self.y, self.z
        e, f, g, h = coerced.w, coerced.x, coerced.y, coerced.z
        return RationalQuaternion._wrap(
            a * e - b * f - c * g - d * h,
            a * f + b * e + c * h - d * g,
            a * g - b * h + c * e + d * f,
            a * h + b * g - c * f + d * e,
        )

    def norm(self):
        """The reduced norm w^2 + x^2 + y^2 + z^2 (an exact rational)."""
        return self.w * self.w + self.x * self.x + self.y * self.y + self.z * self.z

    def conjugate(self) -> "RationalQuaternion":
        return RationalQuaternion._wrap(self.w, -self.x, -self.y, -self.z)

    def inverse(self) -> "RationalQuaternion":
        n = self.norm()
        if not n:
            raise ZeroInverseError("zero quaternion has no inverse")
        return RationalQuaternion._wrap(
            self.w / n, -self.x / n, -self.y / n, -self.z / n
        )

    def is_zero(self) -> bool:
        return not (self.w or self.x or self.y or self.z)

    def __eq__(self, other) -> bool:
        if isinstance(other, RationalQuaternion):
            return (self.w == other.w and self.x == other.x
                    and self.y == other.y and self.z == other.z)
        if isinstance(other, int):
            return self.w == other and not (self.x or self.y or self.z)
        _reject_cross_backend(self, other)
        return NotImplemented

    def __hash__(self):
        return hash((self.w, self.x, self.y, self.z))

    def __str__(self) -> str:
        return f"({self.w},{self.x},{self.y},{self.z})"

    def __repr__(self) -> str:
        return f"RationalQuaternion{self.components()}"


def ensure_same_backend(first: SkewScalar, *rest: SkewScalar) -> None:
    """Raise BackendMismatchError unless all scalars share one backend."""
    for other in rest:
        first._coerce(other)


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin, exact for every n below 3.3e24."""
    if n < 2:
        return False
    for small in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % small == 0:
            return n == small
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for witness in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        x = pow(witness, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


class ScalarField(ABC):
    """A skew-field backend: a factory plus backend-level metadata.

    The backend is chosen once per plane (a construction-time parameter),
    never per value; everything downstream inherits it.
    """

    #: True when multiplication commutes in this backend.
    commutative: bool = True
    #: True when the backend has finitely many elements.
    finite: bool = False
    name: str = ""

    @abstractmethod
    def zero(self) -> SkewScalar: ...

    @abstractmethod
    def one(self) -> SkewScalar: ...

    @abstractmethod
    def from_int(self, n: int) -> SkewScalar: ...

    @abstractmethod
    def random_element(self, rng) -> SkewScalar:
        """A small random element, drawn from the explicit ``rng``."""

    def random_nonzero(self, rng) -> SkewScalar:
        value = self.random_element(rng)
        while value.is_zero():
            value = self.random_element(rng)
        return value

    def elements(self) -> Iterator[SkewScalar]:
        raise TypeError(f"{self.name} backend is not finite")

    def __eq__(self, other) -> bool:
        return type(self) is type(other) and self.name == other.name

    def __hash__(self):
        return hash(self.name)

    def __repr__(self) -> str:
        return f"<field {self.name}>"


class RationalField(ScalarField):
    """The rational numbers, the commutative reference backend."""

    name = "rational"

    def zero(self) -> Rational:
        return Rational(0)

    def one(self) -> Rational:
        return Rational(1)

    def from_int(self, n: int) -> Rational:
        return Rational(n)

    def random_element(self, rng) -> Rational:
        return Rational(rng.randint(-8, 8), rng.randint(1, 6))


class PrimeField(ScalarField):
    """GF(p) for a prime p; primality is checked at construction."""

    finite = True

    def __init__(self, p: int):
        if not isinstance(p, int) or isinstance(p, bool) or not is_prime(p):
            raise ValueError(f"GF modulus must be prime, got {p!r}")
        self.p = p
        self.name = f"gfp({p})"

    def zero(self) -> PrimeFieldElement:
        return PrimeFieldElement(0, self.p)

    def one(self) -> PrimeFieldElement:
        return PrimeFieldElement(1, self.p)

    def from_int(self, n: int) -> PrimeFieldElement:
        return PrimeFieldElement(n, self.p)

    def random_element(self, rng) -> PrimeFieldElement:
        return PrimeFieldElement(rng.randrange(self.p), self.p)

    def elements(self) -> Iterator[PrimeFieldElement]:
        for residue in range(self.p):
            yield PrimeFieldElement(residue, self.p)


class QuaternionField(ScalarField):
    """The rational quaternions, the non-commutative backend."""

    commutative = False
    name = "quaternion"

    def zero(self) -> RationalQuaternion:
        return RationalQuaternion(0)

    def one(self) -> RationalQuaternion:
        return RationalQuaternion(1)

    def from_int(self, n: int) -> RationalQuaternion:
        return RationalQuaternion(n)

    def i(self) -> RationalQuaternion:
        return RationalQuaternion(0, 1, 0, 0)

    def j(self) -> RationalQuaternion:
        return RationalQuaternion(0, 0, 1, 0)

    def k(self) -> RationalQuaternion:
        return RationalQuaternion(0, 0, 0, 1)

    def random_element(self, rng) -> RationalQuaternion:
        return RationalQuaternion(*(
            Fraction(rng.randint(-4, 4), rng.randint(1, 3)) for _ in range(4)
        ))
