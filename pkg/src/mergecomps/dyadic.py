"""Exact arithmetic on dyadic rationals (denominator a power of two).

Every quantity this library manipulates -- comparison-count formulas,
triangle-wave sums, Takagi-function values at binary-rational points --
is a dyadic rational, so a number type holding ``numerator / 2**exponent``
with unbounded integers suffices to evaluate everything with zero rounding
error.  Values are immutable and kept in canonical form (exponent 0, or an
odd numerator), which makes equality structural and hashing cheap.

Division is deliberately absent: it could leave the dyadic domain.  The
only scaling operation is :meth:`Dyadic.mul_pow2`, which is always exact.
"""

from __future__ import annotations

from fractions import Fraction


class Dyadic:
    """An exact rational ``numerator / 2**exponent``.

    >>> Dyadic(6, 1)        # canonicalizes: 6/2 == 3
    Dyadic(3, 0)
    >>> Dyadic(5, 3) + Dyadic(1, 1)
    Dyadic(9, 3)
    >>> str(Dyadic(3, 3))
    '0.375'
    """

    __slots__ = ("num", "exp")

    num: int
    exp: int

    def __init__(self, num: int = 0, exp: int = 0):
        if exp < 0:
            raise ValueError("exponent must be >= 0")
        if num == 0:
            exp = 0
        elif exp and not (num & 1):
            shift = min(exp, ((num & -num).bit_length() - 1))
            num >>= shift
            exp -= shift
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "exp", exp)

    def __setattr__(self, name, value):
        raise AttributeError("Dyadic is immutable")

    # -- conversions ------------------------------------------------------

    @classmethod
    def from_fraction(cls, value: Fraction) -> "Dyadic":
        """Exact conversion; rejects fractions whose denominator is not a power of two."""
        den = value.denominator
        if den & (den - 1):
            raise ValueError(f"{value} is not a dyadic rational")
        return cls(value.numerator, den.bit_length() - 1)

    def as_fraction(self) -> Fraction:
        return Fraction(self.num, 1 << self.exp)

    def as_integer(self) -> int:
        """The exact integer value; raises if a fractional part remains."""
        if self.exp:
            raise ArithmeticError(f"{self!r} is not an integer")
        return self.num

    def is_integer(self) -> bool:
        return self.exp == 0

    def __float__(self) -> float:
        return self.num / (1 << self.exp)

    def __bool__(self) -> bool:
        return self.num != 0

    @classmethod
    def parse(cls, text: str) -> "Dyadic":
        """Parse an exact literal: 'p/2^e', 'p/q' with q a power of two, or a
        terminating decimal such as '0.375'.

        Decimals that are not dyadic (e.g. '0.2' == 1/5) are rejected rather
        than rounded.
        """
        text = text.strip()
        try:
            if "/" in text:
                p_text, q_text = text.split("/", 1)
                p = int(p_text)
                if q_text.startswith("2^"):
                    e = int(q_text[2:])
                    if e < 0:
                        raise ValueError
                    return cls(p, e)
                q = int(q_text)
                if q < 1 or q & (q - 1):
                    raise ValueError
                return cls(p, q.bit_length() - 1)
            if "." in text:
                whole, frac_part = text.split(".", 1)
                if not frac_part.isdigit():
                    raise ValueError
                if whole in ("", "-", "+"):
                    whole += "0"
                scaled = int(whole + frac_part)  # value * 10**d, sign included
                d = len(frac_part)
                power5 = 5**d
                if scaled % power5:
                    raise ValueError(f"{text!r} is not a dyadic rational")
                return cls(scaled // power5, d)
            return cls(int(text))
        except ValueError as err:
            detail = str(err) or f"cannot parse {text!r} as a dyadic rational"
            raise ValueError(detail) from None

    # -- rendering --------------------------------------------------------

    def __repr__(self) -> str:
        return f"Dyadic({self.num}, {self.exp})"

    def __str__(self) -> str:
        return self.decimal()

    def decimal(self) -> str:
        """Exact terminating decimal expansion, e.g. 3/2**3 -> '0.375'."""
        if self.exp == 0:
            return str(self.num)
        digits = abs(self.num) * 5**self.exp  # 1/2**e == 5**e/10**e
        text = str(digits).rjust(self.exp + 1, "0")
        sign = "-" if self.num < 0 else ""
        return f"{sign}{text[:-self.exp]}.{text[-self.exp:]}"

    def compact(self) -> str:
        """Machine-oriented exact form 'num/2^exp'."""
        return f"{self.num}/2^{self.exp}"

    # -- ordering and hashing ---------------------------------------------

    def _cmp_key(self, other):
        if isinstance(other, int):
            return self.num, other << self.exp
        if isinstance(other, Dyadic):
            e = max(self.exp, other.exp)
            return self.num << (e - self.exp), other.num << (e - other.exp)
        return NotImplemented

    def __eq__(self, other):
        if isinstance(other, Dyadic):
            return self.num == other.num and self.exp == other.exp
        if isinstance(other, int):
            return self.exp == 0 and self.num == other
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.num) if self.exp == 0 else hash((self.num, self.exp))

    def __lt__(self, other):
        key = self._cmp_key(other)
        return NotImplemented if key is NotImplemented else key[0] < key[1]

    def __le__(self, other):
        key = self._cmp_key(other)
        return NotImplemented if key is NotImplemented else key[0] <= key[1]

    def __gt__(self, other):
        key = self._cmp_key(other)
        return NotImplemented if key is NotImplemented else key[0] > key[1]

    def __ge__(self, other):
        key = self._cmp_key(other)
        return NotImplemented if key is NotImplemented else key[0] >= key[1]

    # -- exact arithmetic ---------------------------------------------------

    def __add__(self, other):
        if isinstance(other, int):
            return Dyadic(self.num + (other << self.exp), self.exp)
        if not isinstance(other, Dyadic):
            return NotImplemented
        if self.exp >= other.exp:
            return Dyadic(self.num + (other.num << (self.exp - other.exp)), self.exp)
        return Dyadic((self.num << (other.exp - self.exp)) + other.num, other.exp)

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, int):
            return Dyadic(self.num - (other << self.exp), self.exp)
        if not isinstance(other, Dyadic):
            return NotImplemented
        if self.exp >= other.exp:
            return Dyadic(self.num - (other.num << (self.exp - other.exp)), self.exp)
        return Dyadic((self.num << (other.exp - self.exp)) - other.num, other.exp)

    def __rsub__(self, other):
        if isinstance(other, int):
            return Dyadic((other << self.exp) - self.num, self.exp)
        return NotImplemented

    def __neg__(self):
        return Dyadic(-self.num, self.exp)

    def __abs__(self):
        return Dyadic(abs(self.num), self.exp)

    def __mul__(self, other):
        if isinstance(other, int):
            return Dyadic(self.num * other, self.exp)
        if not isinstance(other, Dyadic):
            return NotImplemented
        return Dyadic(self.num * other.num, self.exp + other.exp)

    __rmul__ = __mul__

    def mul_pow2(self, k: int) -> "Dyadic":
        """Exact scaling by 2**k (k may be negative)."""
        e = self.exp - k
        if e >= 0:
            return Dyadic(self.num, e)
        return Dyadic(self.num << -e, 0)

    # -- floor family (shift-based, never through float) -------------------

    def floor(self) -> int:
        return self.num >> self.exp

    def ceil(self) -> int:
        return -((-self.num) >> self.exp)

    def frac(self) -> "Dyadic":
        """Fractional part ``x - floor(x)``, always in [0, 1)."""
        return Dyadic(self.num & ((1 << self.exp) - 1), self.exp)


ZERO = Dyadic(0)


def zigzag(x: Dyadic | int) -> Dyadic:
    """Distance from x to the nearest integer: min(x - floor(x), ceil(x) - x).

    The result lies in [0, 1/2]; it vanishes exactly at integers, has
    period 1, and is symmetric under negation.

    >>> zigzag(Dyadic(5, 1))    # 5/2 is half way between integers
    Dyadic(1, 1)
    >>> zigzag(Dyadic(5, 3))    # 5/8 -> 3/8
    Dyadic(3, 3)
    """
    if isinstance(x, int):
        return ZERO
    e = x.exp
    if e == 0:
        return ZERO
    r = x.num & ((1 << e) - 1)  # x mod 1, scaled by 2**e; odd since x is canonical
    return Dyadic(min(r, (1 << e) - r), e)


def zigzag_fraction(x: Fraction) -> Fraction:
    """Distance to the nearest integer for a general rational.

    Used only by the approximation path; dyadic call sites use :func:`zigzag`.
    """
    f = x - (x.numerator // x.denominator)
    return min(f, 1 - f)


def floor_lg(n: int) -> int:
    """Largest k with 2**k <= n, via bit length (no floating point).

    >>> floor_lg(1), floor_lg(5), floor_lg(1024)
    (0, 2, 10)
    """
    if n < 1:
        raise ValueError("floor_lg requires n >= 1")
    return n.bit_length() - 1


def ceil_lg(n: int) -> int:
    """Smallest k with 2**k >= n.

    >>> ceil_lg(1), ceil_lg(5), ceil_lg(8)
    (0, 3, 3)
    """
    if n < 1:
        raise ValueError("ceil_lg requires n >= 1")
    return (n - 1).bit_length()
