from __future__ import annotations

import math
import re
from abc import ABC
from abc import abstractmethod
from collections.abc import Sequence
from fractions import Fraction
from typing import Any
from typing import Union

from django_convexmeans.exceptions import NotRepresentableError
from django_convexmeans.exceptions import ScalarError

_LITERAL_RE = re.compile(
    r"^\s*(?P<p>[+-]?\d+(?:/\d+)?)"
    r"\s*(?:(?P<sign>[+-])\s*(?P<q>\d+(?:/\d+)?)\s*\*\s*r5)?\s*$"
)


def _rational_sqrt(value: Fraction) -> Fraction | None:
    """Return the rational square root of value, or None if irrational."""
    if value < 0:
        return None
    num_root = math.isqrt(value.numerator)
    den_root = math.isqrt(value.denominator)
    if (
        num_root * num_root == value.numerator
        and den_root * den_root == value.denominator
    ):
        return Fraction(num_root, den_root)
    return None


def _format_fraction(value: Fraction) -> str:
    return f"{value.numerator}/{value.denominator}"


class Q5:
    """
    Exact element p + q*sqrt(5) of the quadratic field Q(sqrt 5).

    Instances are immutable. Arithmetic mixes freely with ``int`` and
    ``Fraction`` operands; mixing with ``float`` is refused so that the
    exact backend can never silently degrade.
    """

    __slots__ = ("_p", "_q")

    def __init__(self, p: int | Fraction = 0, q: int | Fraction = 0) -> None:
        self._p = Fraction(p)
        self._q = Fraction(q)

    @property
    def p(self) -> Fraction:
        """Rational part."""
        return self._p

    @property
    def q(self) -> Fraction:
        """Coefficient of sqrt(5)."""
        return self._q

    @classmethod
    def parse(cls, text: str) -> Q5:
        """
        Parse a literal of the form ``p1/q1+p2/q2*r5``.

        The irrational term is optional and integers may omit the
        denominator, so ``"3"``, ``"-1/2"`` and ``"1/2-3/4*r5"`` are valid.

        Raises:
            ScalarError: If the text is not a valid literal
        """
        match = _LITERAL_RE.match(text)
        if match is None:
            raise ScalarError(f"Invalid Q(sqrt 5) literal: {text!r}")
        p = Fraction(match.group("p"))
        q = Fraction(match.group("q") or 0)
        if match.group("sign") == "-":
            q = -q
        return cls(p, q)

    @staticmethod
    def _coerce(other: Any) -> Q5 | None:
        if isinstance(other, Q5):
            return other
        if isinstance(other, (int, Fraction)):
            return Q5(other)
        return None

    def __add__(self, other: Any) -> Q5:
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return Q5(self._p + rhs._p, self._q + rhs._q)

    __radd__ = __add__

    def __sub__(self, other: Any) -> Q5:
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return Q5(self._p - rhs._p, self._q - rhs._q)

    def __rsub__(self, other: Any) -> Q5:
        lhs = self._coerce(other)
        if lhs is None:
            return NotImplemented
        return lhs - self

    def __mul__(self, other: Any) -> Q5:
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return Q5(
            self._p * rhs._p + 5 * self._q * rhs._q,
            self._p * rhs._q + self._q * rhs._p,
        )

    __rmul__ = __mul__

    def __truediv__(self, other: Any) -> Q5:
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return self * rhs.inverse()

    def __rtruediv__(self, other: Any) -> Q5:
        lhs = self._coerce(other)
        if lhs is None:
            return NotImplemented
        return lhs * self.inverse()

    def __neg__(self) -> Q5:
        return Q5(-self._p, -self._q)

    def __pos__(self) -> Q5:
        return self

    def __abs__(self) -> Q5:
        return -self if self.sign() < 0 else self

    def __pow__(self, exponent: int) -> Q5:
        if not isinstance(exponent, int):
            return NotImplemented
        if exponent < 0:
            return self.inverse() ** (-exponent)
        result = Q5(1)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def conjugate(self) -> Q5:
        """The Galois conjugate p - q*sqrt(5)."""
        return Q5(self._p, -self._q)

    def norm(self) -> Fraction:
        """The field norm p^2 - 5 q^2."""
        return self._p * self._p - 5 * self._q * self._q

    def inverse(self) -> Q5:
        """
        Multiplicative inverse via the conjugate.

        Raises:
            ZeroDivisionError: For the zero element
        """
        norm = self.norm()
        if norm == 0:
            raise ZeroDivisionError("Q(sqrt 5) division by zero")
        return Q5(self._p / norm, -self._q / norm)

    def sign(self) -> int:
        """Exact sign of the real number p + q*sqrt(5)."""
        p_sign = (self._p > 0) - (self._p < 0)
        q_sign = (self._q > 0) - (self._q < 0)
        if q_sign == 0:
            return p_sign
        if p_sign == 0 or p_sign == q_sign:
            return q_sign
        # opposite signs: compare p^2 with 5 q^2
        norm = self.norm()
        if norm > 0:
            return p_sign
        return q_sign

    def sqrt(self) -> Q5:
        """
        Exact nonnegative square root inside Q(sqrt 5).

        Raises:
            NotRepresentableError: If the root is negative-radicand or
                irrational over Q(sqrt 5)
        """
        sign = self.sign()
        if sign < 0:
            raise NotRepresentableError(f"Square root of negative {self}")
        if sign == 0:
            return Q5()
        if self._q == 0:
            rational = _rational_sqrt(self._p)
            if rational is not None:
                return Q5(rational)
            scaled = _rational_sqrt(self._p / 5)
            if scaled is not None:
                return Q5(0, scaled)
            raise NotRepresentableError(f"sqrt({self}) is not in Q(sqrt 5)")
        disc_root = _rational_sqrt(self.norm())
        if disc_root is None:
            raise NotRepresentableError(f"sqrt({self}) is not in Q(sqrt 5)")
        roots = ((self._p + disc_root) / 2, (self._p - disc_root) / 2)
        for u_squared in roots:
            u = _rational_sqrt(u_squared)
            if not u:
                continue
            root = Q5(u, self._q / (2 * u))
            if root * root == self:
                return -root if root.sign() < 0 else root
        raise NotRepresentableError(f"sqrt({self}) is not in Q(sqrt 5)")

    def __eq__(self, other: object) -> bool:
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return self._p == rhs._p and self._q == rhs._q

    def __hash__(self) -> int:
        if self._q == 0:
            return hash(self._p)
        return hash((self._p, self._q))

    def __lt__(self, other: Any) -> bool:
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return (self - rhs).sign() < 0

    def __le__(self, other: Any) -> bool:
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return (self - rhs).sign() <= 0

    def __gt__(self, other: Any) -> bool:
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return (self - rhs).sign() > 0

    def __ge__(self, other: Any) -> bool:
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return (self - rhs).sign() >= 0

    def __bool__(self) -> bool:
        return bool(self._p) or bool(self._q)

    def __float__(self) -> float:
        return float(self._p) + float(self._q) * math.sqrt(5)

    def __str__(self) -> str:
        sign = "-" if self._q < 0 else "+"
        return (
            f"{_format_fraction(self._p)}{sign}"
            f"{_format_fraction(abs(self._q))}*r5"
        )

    def short(self) -> str:
        """The plain rational, e.g. ``1`` or ``2/3``, when the r5 part is 0."""
        if self._q:
            return str(self)
        return str(self._p)

    def __repr__(self) -> str:
        return f"Q5({str(self)!r})"


Scalar = Union[Q5, float]

# (1 + sqrt 5) / 2
PHI = Q5(Fraction(1, 2), Fraction(1, 2))


class Field(ABC):
    """
    Ordered-field backend shared by every geometric predicate.

    A backend fixes how scalars are built, compared and serialized. All
    sign decisions in the library go through :meth:`sign`, so the float
    backend applies its tolerance uniformly while the exact backend decides
    every comparison without error.
    """

    name: str

    @property
    def zero(self) -> Scalar:
        return self.coerce(0)

    @property
    def one(self) -> Scalar:
        return self.coerce(1)

    @property
    def exact(self) -> bool:
        return False

    @abstractmethod
    def coerce(self, value: Any) -> Scalar:
        """Convert an int, Fraction, Q5, float or literal into a scalar."""

    @abstractmethod
    def sign(self, value: Scalar) -> int:
        """Return -1, 0 or 1."""

    @abstractmethod
    def sqrt(self, value: Scalar) -> Scalar:
        """Square root of a nonnegative scalar."""

    @abstractmethod
    def to_json(self, value: Scalar) -> Any:
        """Serialize a scalar for the polygon JSON schema."""

    @property
    def phi(self) -> Scalar:
        """The golden ratio in this backend."""
        return self.coerce(PHI)

    def is_zero(self, value: Scalar) -> bool:
        return self.sign(value) == 0

    def compare(self, lhs: Scalar, rhs: Scalar) -> int:
        return self.sign(lhs - rhs)

    def equal(self, lhs: Scalar, rhs: Scalar) -> bool:
        return self.sign(lhs - rhs) == 0

    def to_float(self, value: Scalar) -> float:
        return float(value)

    def unit(self, vector: Sequence[Scalar]) -> tuple[Scalar, ...]:
        """
        Scale a direction for normalized comparisons.

        The exact backend never normalizes; predicates there are scale
        robust by construction.
        """
        return tuple(vector)

    def __repr__(self) -> str:
        return f"<{type(self).__name__} {self.name}>"


class ExactField(Field):
    """The exact Q(sqrt 5) backend."""

    name = "q5"

    @property
    def exact(self) -> bool:
        return True

    def coerce(self, value: Any) -> Q5:
        if isinstance(value, Q5):
            return value
        if isinstance(value, (int, Fraction)):
            return Q5(value)
        if isinstance(value, float):
            if value.is_integer():
                return Q5(int(value))
            raise ScalarError(
                f"Float {value!r} cannot enter the exact backend; "
                "pass a Fraction or literal instead"
            )
        if isinstance(value, str):
            try:
                return Q5.parse(value)
            except ScalarError:
                try:
                    return Q5(Fraction(value))
                except (ValueError, ZeroDivisionError) as e:
                    raise ScalarError(
                        f"Invalid Q(sqrt 5) literal: {value!r}"
                    ) from e
        raise ScalarError(f"Cannot convert {value!r} to Q(sqrt 5)")

    def sign(self, value: Scalar) -> int:
        return self.coerce(value).sign()

    def sqrt(self, value: Scalar) -> Q5:
        return self.coerce(value).sqrt()

    def to_json(self, value: Scalar) -> str:
        return str(self.coerce(value))


class FloatField(Field):
    """Machine floats compared with an absolute tolerance."""

    name = "f64"

    def __init__(self, tolerance: float | None = None) -> None:
        if tolerance is None:
            from django_convexmeans.conf import get_float_tolerance

            tolerance = get_float_tolerance()
        self.tolerance = float(tolerance)

    def coerce(self, value: Any) -> float:
        if isinstance(value, str):
            try:
                return float(value)
            except ValueError:
                return float(Q5.parse(value))
        try:
            return float(value)
        except (TypeError, ValueError) as e:
            raise ScalarError(f"Cannot convert {value!r} to float") from e

    def sign(self, value: Scalar) -> int:
        number = float(value)
        if abs(number) <= self.tolerance:
            return 0
        return 1 if number > 0 else -1

    def sqrt(self, value: Scalar) -> float:
        number = float(value)
        if number < 0:
            if number >= -self.tolerance:
                return 0.0
            raise NotRepresentableError(f"Square root of negative {number}")
        return math.sqrt(number)

    def to_json(self, value: Scalar) -> float:
        return float(value)

    def unit(self, vector: Sequence[Scalar]) -> tuple[Scalar, ...]:
        length = math.hypot(*(float(c) for c in vector))
        if length == 0.0:
            return tuple(float(c) for c in vector)
        return tuple(float(c) / length for c in vector)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FloatField):
            return NotImplemented
        return self.tolerance == other.tolerance

    def __hash__(self) -> int:
        return hash((self.name, self.tolerance))


EXACT = ExactField()

BACKENDS = ("q5", "f64")


def get_field(
    name: str | None = None,
    tolerance: float | None = None,
) -> Field:
    """
    Look up a scalar backend by its schema name.

    Args:
        name: ``"q5"`` or ``"f64"``; None selects the configured default
        tolerance: Override of the float tolerance

    Raises:
        ScalarError: For unknown backend names
    """
    if name is None:
        from django_convexmeans.conf import get_default_backend

        name = get_default_backend()
    if name == "q5":
        return EXACT
    if name == "f64":
        return FloatField(tolerance)
    raise ScalarError(f"Unknown scalar backend: {name!r}")
