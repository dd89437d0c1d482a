"""
Exact arithmetic in cyclotomic fields.

A CycScalar is an element of Q(zeta_N) stored as its coefficient vector in the
power basis 1, z, ..., z^(d-1) with z = zeta_N and d = phi(N), reduced modulo
the N-th cyclotomic polynomial. Coefficients are arbitrary-precision
fractions, so every computation in the workbench is exact.

Values of different conductors can be mixed freely; they are unified by
embedding both into Q(zeta_lcm). Constructed algebras pick one conductor up
front (24 by default) so hot loops never embed.
"""

import logging
from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import List, Sequence, Tuple, Union

import sympy

from ..exceptions import ScalarError

logger = logging.getLogger(__name__)

DEFAULT_CONDUCTOR = 24

Rational = Union[int, Fraction]
ScalarLike = Union[int, Fraction, "CycScalar", str]

_ZERO = Fraction(0)
_ONE = Fraction(1)
_X = sympy.Symbol("x")


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> Tuple[int, ...]:
    """
    The n-th cyclotomic polynomial.

    Args:
        n: Positive integer

    Returns:
        Integer coefficients, constant term first

    Raises:
        ScalarError: If n < 1

    Examples:
        >>> cyclotomic_polynomial(4)
        (1, 0, 1)
        >>> cyclotomic_polynomial(1)
        (-1, 1)
    """
    if n < 1:
        raise ScalarError(f"Cyclotomic polynomial needs n >= 1, got {n}")
    poly = sympy.Poly(sympy.cyclotomic_poly(n, _X), _X)
    return tuple(int(c) for c in reversed(poly.all_coeffs()))


def _mobius(n: int) -> int:
    factors = sympy.factorint(n)
    if any(e > 1 for e in factors.values()):
        return 0
    return -1 if len(factors) % 2 else 1


class _Field:
    """Precomputed reduction data for Q(zeta_N)."""

    __slots__ = ("conductor", "degree", "reductions", "trace_weights")

    def __init__(self, n: int) -> None:
        poly = cyclotomic_polynomial(n)
        d = len(poly) - 1
        self.conductor = n
        self.degree = d

        # x^p mod Phi_n for every p we can meet: products (< 2d-1) and powers of zeta (< n)
        top = max(n, 2 * d - 1)
        reductions: List[Tuple[Tuple[int, int], ...]] = []
        current = [0] * d
        current[0] = 1
        for _ in range(top):
            reductions.append(tuple((i, c) for i, c in enumerate(current) if c))
            lead = current[-1]
            current = [0] + current[:-1]
            if lead:
                for i in range(d):
                    current[i] -= lead * poly[i]
        self.reductions = reductions

        self.trace_weights = tuple(
            Fraction(_mobius(n // gcd(n, k)), int(sympy.totient(n // gcd(n, k))))
            for k in range(d)
        )


@lru_cache(maxsize=None)
def _field(n: int) -> _Field:
    logger.debug(f"Building reduction tables for Q(zeta_{n})")
    return _Field(n)


def _lcm(a: int, b: int) -> int:
    return a // gcd(a, b) * b


class CycScalar:
    """
    Immutable element of Q(zeta_N).

    Attributes:
        conductor: N
        coeffs: phi(N) fractions, coefficient of z^k at index k
    """

    __slots__ = ("conductor", "coeffs", "_support")

    def __init__(self, conductor: int, coeffs: Sequence[Rational]) -> None:
        field = _field(conductor)
        if len(coeffs) != field.degree:
            raise ScalarError(
                f"Q(zeta_{conductor}) needs {field.degree} coefficients, got {len(coeffs)}"
            )
        self.conductor = conductor
        self.coeffs = tuple(Fraction(c) for c in coeffs)
        self._support = tuple(i for i, c in enumerate(self.coeffs) if c)

    @classmethod
    def _raw(cls, conductor: int, coeffs: Sequence[Fraction]) -> "CycScalar":
        obj = object.__new__(cls)
        obj.conductor = conductor
        obj.coeffs = tuple(coeffs)
        obj._support = tuple(i for i, c in enumerate(obj.coeffs) if c)
        return obj

    # ── Constructors ─────────────────────────────────────────────────

    @classmethod
    def from_rational(cls, value: Rational, conductor: int = 1) -> "CycScalar":
        """
        Embed a rational number.

        Args:
            value: int or Fraction
            conductor: Target field conductor

        Returns:
            The scalar value * 1
        """
        d = _field(conductor).degree
        coeffs = [_ZERO] * d
        coeffs[0] = Fraction(value)
        return cls._raw(conductor, coeffs)

    @classmethod
    def zero(cls, conductor: int = DEFAULT_CONDUCTOR) -> "CycScalar":
        return cls.from_rational(0, conductor)

    @classmethod
    def one(cls, conductor: int = DEFAULT_CONDUCTOR) -> "CycScalar":
        return cls.from_rational(1, conductor)

    # ── Predicates ───────────────────────────────────────────────────

    @property
    def is_zero(self) -> bool:
        return not self._support

    @property
    def is_rational(self) -> bool:
        return self._support in ((), (0,))

    def rational(self) -> Fraction:
        """
        The rational value of a scalar lying in Q.

        Raises:
            ScalarError: If the scalar is irrational
        """
        if not self.is_rational:
            raise ScalarError(f"{self} is not rational")
        return self.coeffs[0]

    def __bool__(self) -> bool:
        return bool(self._support)

    # ── Field operations ─────────────────────────────────────────────

    def embed(self, conductor: int) -> "CycScalar":
        """
        Embed into Q(zeta_M) for a multiple M of the conductor.

        Args:
            conductor: M, a multiple of self.conductor

        Returns:
            Equal scalar with conductor M

        Raises:
            ScalarError: If M is not a multiple of the conductor
        """
        if conductor == self.conductor:
            return self
        if conductor % self.conductor:
            raise ScalarError(f"Cannot embed Q(zeta_{self.conductor}) into Q(zeta_{conductor})")
        target = _field(conductor)
        step = conductor // self.conductor
        acc = [_ZERO] * target.degree
        for k in self._support:
            c = self.coeffs[k]
            for idx, v in target.reductions[k * step]:
                acc[idx] += c * v
        return CycScalar._raw(conductor, acc)

    def _unify(self, other: "CycScalar") -> Tuple["CycScalar", "CycScalar"]:
        if self.conductor == other.conductor:
            return self, other
        m = _lcm(self.conductor, other.conductor)
        return self.embed(m), other.embed(m)

    def _coerce(self, other: object) -> "CycScalar":
        if isinstance(other, CycScalar):
            return other
        if isinstance(other, (int, Fraction)):
            return CycScalar.from_rational(other, self.conductor)
        return NotImplemented  # type: ignore[return-value]

    def __add__(self, other: object) -> "CycScalar":
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        a, b = self._unify(o)
        return CycScalar._raw(a.conductor, [x + y for x, y in zip(a.coeffs, b.coeffs)])

    __radd__ = __add__

    def __neg__(self) -> "CycScalar":
        return CycScalar._raw(self.conductor, [-x for x in self.coeffs])

    def __sub__(self, other: object) -> "CycScalar":
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        a, b = self._unify(o)
        return CycScalar._raw(a.conductor, [x - y for x, y in zip(a.coeffs, b.coeffs)])

    def __rsub__(self, other: object) -> "CycScalar":
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return o - self

    def __mul__(self, other: object) -> "CycScalar":
        if isinstance(other, (int, Fraction)):
            if not other:
                return CycScalar.zero(self.conductor)
            return CycScalar._raw(self.conductor, [x * other for x in self.coeffs])
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        a, b = self._unify(o)
        if a._support == (0,):
            c = a.coeffs[0]
            return CycScalar._raw(b.conductor, [x * c for x in b.coeffs])
        if b._support == (0,):
            c = b.coeffs[0]
            return CycScalar._raw(a.conductor, [x * c for x in a.coeffs])

        field = _field(a.conductor)
        d = field.degree
        reductions = field.reductions
        acc = [_ZERO] * d
        ac, bc = a.coeffs, b.coeffs
        for i in a._support:
            ai = ac[i]
            for j in b._support:
                p = i + j
                prod = ai * bc[j]
                if p < d:
                    acc[p] += prod
                else:
                    for k, c in reductions[p]:
                        acc[k] += prod * c
        return CycScalar._raw(a.conductor, acc)

    __rmul__ = __mul__

    def inverse(self) -> "CycScalar":
        """
        Multiplicative inverse.

        Returns:
            1/self

        Raises:
            ScalarError: If self is zero
        """
        if self.is_zero:
            raise ScalarError("Cannot invert zero")
        if self._support == (0,):
            return CycScalar.from_rational(1 / self.coeffs[0], self.conductor)
        modulus = sympy.Poly(list(reversed(cyclotomic_polynomial(self.conductor))), _X, domain="QQ")
        value = sympy.Poly(
            [sympy.Rational(c.numerator, c.denominator) for c in reversed(self.coeffs)],
            _X,
            domain="QQ",
        )
        inv = value.invert(modulus)
        coeffs = [_ZERO] * _field(self.conductor).degree
        for k, c in enumerate(reversed(inv.all_coeffs())):
            r = sympy.Rational(c)
            coeffs[k] = Fraction(int(r.p), int(r.q))
        return CycScalar._raw(self.conductor, coeffs)

    def __truediv__(self, other: object) -> "CycScalar":
        if isinstance(other, (int, Fraction)):
            if not other:
                raise ScalarError("Cannot invert zero")
            return CycScalar._raw(self.conductor, [x / other for x in self.coeffs])
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other: object) -> "CycScalar":
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, exponent: int) -> "CycScalar":
        if exponent < 0:
            return self.inverse() ** (-exponent)
        result = CycScalar.one(self.conductor)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    # ── Equality and hashing ─────────────────────────────────────────

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            if not other:
                return not self._support
            return self._support == (0,) and self.coeffs[0] == other
        if isinstance(other, CycScalar):
            if self.conductor == other.conductor:
                return self.coeffs == other.coeffs
            a, b = self._unify(other)
            return a.coeffs == b.coeffs
        return NotImplemented

    def __ne__(self, other: object) -> bool:
        result = self.__eq__(other)
        if result is NotImplemented:
            return result
        return not result

    def __hash__(self) -> int:
        if self.is_rational:
            return hash(self.coeffs[0])
        # normalized trace is invariant under embedding
        weights = _field(self.conductor).trace_weights
        return hash(("cyc", sum((self.coeffs[k] * weights[k] for k in self._support), _ZERO)))

    # ── Roots ────────────────────────────────────────────────────────

    def nth_root(self, n: int) -> "CycScalar":
        """
        An n-th root inside the same field, for values q * zeta^m with q rational.

        Args:
            n: Root degree

        Returns:
            r with r**n == self

        Raises:
            ScalarError: If no root of that shape exists in Q(zeta_N)
        """
        if self.is_zero:
            return self
        big_n = self.conductor
        for m in range(big_n):
            candidate = self * root_of_unity(big_n, -m)
            if not candidate.is_rational:
                continue
            q = candidate.rational()
            if q < 0 and n % 2 == 0:
                if big_n % 2:
                    continue
                q = -q
                m = (m + big_n // 2) % big_n
            num, num_exact = sympy.integer_nthroot(abs(q.numerator), n)
            den, den_exact = sympy.integer_nthroot(q.denominator, n)
            if not (num_exact and den_exact):
                break
            magnitude = Fraction(int(num), int(den))
            if q < 0:
                magnitude = -magnitude
            for j in range(big_n):
                if (j * n - m) % big_n == 0:
                    return CycScalar.from_rational(magnitude, big_n) * root_of_unity(big_n, j)
            break
        raise ScalarError(f"No {n}-th root of {self} in Q(zeta_{big_n})")

    def cube_root(self) -> "CycScalar":
        return self.nth_root(3)

    # ── Text form ────────────────────────────────────────────────────

    def to_string(self) -> str:
        """
        Text form ``c_0 + c_1*z + c_2*z^2 @N``.

        Returns:
            String round-tripped by ``CycScalar.from_string``

        Examples:
            >>> CycScalar.from_rational(Fraction(1, 2), 4).to_string()
            '1/2 @4'
        """
        terms = []
        for k in self._support:
            c = self.coeffs[k]
            if k == 0:
                terms.append(f"{c}")
            elif k == 1:
                terms.append(f"{c}*z")
            else:
                terms.append(f"{c}*z^{k}")
        body = " + ".join(terms) if terms else "0"
        return f"{body} @{self.conductor}"

    @classmethod
    def from_string(cls, text: str) -> "CycScalar":
        """
        Parse the output of ``to_string``.

        Args:
            text: Scalar string

        Returns:
            Parsed scalar

        Raises:
            ScalarError: If the string is malformed
        """
        try:
            body, conductor_text = text.rsplit(" @", 1)
            conductor = int(conductor_text)
            coeffs = [_ZERO] * _field(conductor).degree
            if body.strip() != "0":
                for term in body.split(" + "):
                    if "*z" in term:
                        coef_text, power_text = term.split("*z", 1)
                        power = int(power_text[1:]) if power_text else 1
                    else:
                        coef_text, power = term, 0
                    coeffs[power] += Fraction(coef_text)
            return cls._raw(conductor, coeffs)
        except (ValueError, IndexError) as e:
            raise ScalarError(f"Malformed scalar string {text!r}: {str(e)}") from e

    def __str__(self) -> str:
        return self.to_string()

    def __repr__(self) -> str:
        return f"CycScalar({self.to_string()!r})"


# ── Module-level helpers ─────────────────────────────────────────────


def root_of_unity(n: int, k: int) -> CycScalar:
    """
    The scalar zeta_n^k.

    Args:
        n: Conductor
        k: Exponent (any integer, reduced mod n)

    Returns:
        zeta_n^k as an element of Q(zeta_n)

    Examples:
        >>> root_of_unity(4, 1) ** 2 == -1
        True
    """
    field = _field(n)
    coeffs = [_ZERO] * field.degree
    for idx, v in field.reductions[k % n]:
        coeffs[idx] = Fraction(v)
    return CycScalar._raw(n, coeffs)


def imaginary_unit(conductor: int = DEFAULT_CONDUCTOR) -> CycScalar:
    """The element i with i^2 = -1, in Q(zeta_N) for 4 | N."""
    if conductor % 4:
        raise ScalarError(f"Q(zeta_{conductor}) does not contain i")
    return root_of_unity(conductor, conductor // 4)


def omega(conductor: int = DEFAULT_CONDUCTOR) -> CycScalar:
    """Primitive cube root of unity zeta_N^(N/3), for 3 | N."""
    if conductor % 3:
        raise ScalarError(f"Q(zeta_{conductor}) does not contain a primitive cube root of unity")
    return root_of_unity(conductor, conductor // 3)


def sqrt2(conductor: int = DEFAULT_CONDUCTOR) -> CycScalar:
    """sqrt(2) = zeta_8 + zeta_8^7, for 8 | N."""
    if conductor % 8:
        raise ScalarError(f"Q(zeta_{conductor}) does not contain sqrt(2)")
    step = conductor // 8
    return root_of_unity(conductor, step) + root_of_unity(conductor, 7 * step)


def as_scalar(value: ScalarLike, conductor: int = DEFAULT_CONDUCTOR) -> CycScalar:
    """
    Coerce a number or scalar string into Q(zeta_N).

    Args:
        value: int, Fraction, CycScalar or scalar string
        conductor: Target conductor

    Returns:
        CycScalar with the requested conductor

    Raises:
        ScalarError: If the value lives in a field not contained in Q(zeta_N)
    """
    if isinstance(value, CycScalar):
        return value.embed(conductor)
    if isinstance(value, str):
        return CycScalar.from_string(value).embed(conductor)
    if isinstance(value, (int, Fraction)):
        return CycScalar.from_rational(value, conductor)
    raise ScalarError(f"Cannot interpret {value!r} as a scalar")
