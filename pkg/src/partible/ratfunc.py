"""Rational functions in one parameter z with exact rational coefficients.

Elements of Q(z) share their arithmetic interface with Fraction, and the
reflected dunders coerce int and Fraction operands upward.  Polynomial
code written against "field element" values therefore runs unchanged
over Q and over Q(z).
"""

from __future__ import annotations

from fractions import Fraction


def _trim(coeffs) -> tuple:
    out = list(coeffs)
    while out and not out[-1]:
        out.pop()
    return tuple(out)


def _as_fractions(coeffs) -> tuple:
    return _trim(c if isinstance(c, Fraction) else Fraction(c) for c in coeffs)


def _add(a, b):
    n = max(len(a), len(b))
    return _trim(
        (a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)
    )


def _neg(a):
    return tuple(-c for c in a)


def _mul(a, b):
    if not a or not b:
        return ()
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        for j, cb in enumerate(b):
            out[i + j] += ca * cb
    return _trim(out)


def _scale(a, c):
    return _trim(x * c for x in a)


def _divmod(a, b):
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    rem = list(a)
    db = len(b) - 1
    inv = Fraction(1) / b[-1]
    quo = [Fraction(0)] * max(len(rem) - db, 0)
    for i in range(len(rem) - 1, db - 1, -1):
        c = rem[i] * inv
        if c:
            quo[i - db] = c
            for j, bc in enumerate(b):
                rem[i - db + j] -= c * bc
    return _trim(quo), _trim(rem[:db])


def _gcd(a, b):
    while b:
        a, b = b, _divmod(a, b)[1]
    if a:
        a = _scale(a, Fraction(1) / a[-1])
    return a


def format_coeffs(coeffs, var: str = "z") -> str:
    """Human/parser-friendly text for a coefficient tuple, highest degree first."""
    if not coeffs:
        return "0"
    pieces = []
    for deg in range(len(coeffs) - 1, -1, -1):
        c = coeffs[deg]
        if not c:
            continue
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        body = str(mag)
        if deg == 0:
            term = body
        else:
            vp = var if deg == 1 else f"{var}^{deg}"
            term = vp if mag == 1 else f"{body}*{vp}"
        if not pieces:
            pieces.append(term if sign == "+" else f"-{term}")
        else:
            pieces.append(f" {sign} {term}")
    return "".join(pieces)


class RationalFunction:
    """An element of Q(z), kept in lowest terms with monic denominator."""

    __slots__ = ("num", "den")

    def __init__(self, num=(), den=(Fraction(1),)):
        num = _as_fractions(num)
        den = _as_fractions(den)
        if not den:
            raise ZeroDivisionError("zero denominator in rational function")
        if not num:
            den = (Fraction(1),)
        else:
            g = _gcd(num, den)
            if len(g) > 1:
                num = _divmod(num, g)[0]
                den = _divmod(den, g)[0]
            lead = den[-1]
            if lead != 1:
                inv = Fraction(1) / lead
                num = _scale(num, inv)
                den = _scale(den, inv)
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def __setattr__(self, name, value):
        raise AttributeError("RationalFunction is immutable")

    def __reduce__(self):
        return (RationalFunction, (self.num, self.den))

    @classmethod
    def constant(cls, value) -> "RationalFunction":
        return cls((Fraction(value),))

    @staticmethod
    def _coerce(value):
        if isinstance(value, RationalFunction):
            return value
        if isinstance(value, (int, Fraction)):
            return RationalFunction((Fraction(value),))
        return None

    # -- ring/field operations -------------------------------------------

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return RationalFunction(
            _add(_mul(self.num, other.den), _mul(other.num, self.den)),
            _mul(self.den, other.den),
        )

    __radd__ = __add__

    def __neg__(self):
        return RationalFunction(_neg(self.num), self.den)

    def __pos__(self):
        return self

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return RationalFunction(_mul(self.num, other.num), _mul(self.den, other.den))

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if not other.num:
            raise ZeroDivisionError("division by zero rational function")
        return RationalFunction(_mul(self.num, other.den), _mul(self.den, other.num))

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other / self

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return (RationalFunction.constant(1) / self) ** (-n)
        out = RationalFunction.constant(1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    # -- structure ---------------------------------------------------------

    def __bool__(self):
        return bool(self.num)

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        if self.is_constant():
            return hash(self.as_fraction())
        return hash((self.num, self.den))

    def is_constant(self) -> bool:
        return len(self.num) <= 1 and self.den == (Fraction(1),)

    def as_fraction(self) -> Fraction:
        if not self.is_constant():
            raise ValueError(f"{self} is not a constant")
        return self.num[0] if self.num else Fraction(0)

    def evaluate(self, z0) -> Fraction:
        """Exact value at z = z0; raises ZeroDivisionError at a pole."""
        z0 = Fraction(z0)

        def horner(coeffs):
            acc = Fraction(0)
            for c in reversed(coeffs):
                acc = acc * z0 + c
            return acc

        return horner(self.num) / horner(self.den)

    @property
    def numerator(self) -> tuple:
        return self.num

    @property
    def denominator(self) -> tuple:
        return self.den

    def __str__(self):
        if self.den == (Fraction(1),):
            return format_coeffs(self.num)
        return f"({format_coeffs(self.num)})/({format_coeffs(self.den)})"

    def __repr__(self):
        return f"RationalFunction[{self}]"


#: The generator of Q(z).
Z = RationalFunction((Fraction(0), Fraction(1)))
